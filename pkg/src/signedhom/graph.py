"""Signed graph model: switching, signed neighbourhoods, degeneracy.

Vertices are the integers ``0..n-1``. Each vertex keeps two adjacency
bitmasks (one per sign) stored as Python ints, so a common signed
neighbourhood is a chain of ``&`` operations.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

POS = 1
NEG = -1
SIGNS = (POS, NEG)

SwitchSet = frozenset


class GraphError(ValueError):
    """Raised for malformed graphs or out-of-range vertex references."""


def sign_symbol(sign: int) -> str:
    return "+" if sign == POS else "-"


def _check_sign(sign: int) -> int:
    if sign not in (POS, NEG):
        raise GraphError(f"sign must be +1 or -1, got {sign!r}")
    return sign


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class SignedGraph:
    """An immutable simple graph whose edges carry a sign (+1 or -1)."""

    __slots__ = ("_n", "_pos", "_neg", "_m", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        pos = [0] * n
        neg = [0] * n
        m = 0
        for u, v, s in edges:
            _check_sign(s)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if (pos[u] | neg[u]) >> v & 1:
                raise GraphError(f"duplicate edge ({min(u, v)}, {max(u, v)})")
            side = pos if s == POS else neg
            side[u] |= 1 << v
            side[v] |= 1 << u
            m += 1
        self._n = n
        self._pos = tuple(pos)
        self._neg = tuple(neg)
        self._m = m
        self._hash = None

    @classmethod
    def _from_masks(cls, pos: Sequence[int], neg: Sequence[int]) -> "SignedGraph":
        g = cls.__new__(cls)
        g._n = len(pos)
        g._pos = tuple(pos)
        g._neg = tuple(neg)
        g._m = sum(p.bit_count() + q.bit_count() for p, q in zip(pos, neg)) // 2
        g._hash = None
        return g

    @classmethod
    def complete(cls, n: int, sign: int = POS) -> "SignedGraph":
        return cls(n, ((u, v, sign) for u in range(n) for v in range(u + 1, n)))

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    def vertices(self) -> range:
        return range(self._n)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise GraphError(f"vertex {v} out of range for n={self._n}")

    def sign(self, u: int, v: int) -> int:
        """Return +1, -1, or 0 when ``uv`` is not an edge."""
        self._check_vertex(u)
        self._check_vertex(v)
        if self._pos[u] >> v & 1:
            return POS
        if self._neg[u] >> v & 1:
            return NEG
        return 0

    def has_edge(self, u: int, v: int) -> bool:
        return self.sign(u, v) != 0

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(u, v, sign)`` with ``u < v``, sorted by ``(u, v)``."""
        for u in range(self._n):
            above = ~((1 << (u + 1)) - 1)
            pos, neg = self._pos[u], self._neg[u]
            for v in iter_bits((pos | neg) & above):
                yield u, v, POS if pos >> v & 1 else NEG

    def nbr_mask(self, v: int, sign: int = 0) -> int:
        """Neighbour bitmask of ``v``; ``sign=0`` means either sign."""
        if sign == POS:
            return self._pos[v]
        if sign == NEG:
            return self._neg[v]
        return self._pos[v] | self._neg[v]

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return list(iter_bits(self._pos[v] | self._neg[v]))

    def degree(self, v: int) -> int:
        return (self._pos[v] | self._neg[v]).bit_count()

    def degrees(self) -> list[int]:
        return [(p | q).bit_count() for p, q in zip(self._pos, self._neg)]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def is_complete(self) -> bool:
        return self._m == self._n * (self._n - 1) // 2

    def same_underlying(self, other: "SignedGraph") -> bool:
        return self._n == other._n and all(
            (a | b) == (c | d)
            for a, b, c, d in zip(self._pos, self._neg, other._pos, other._neg)
        )

    def switch(self, switches: Iterable[int]) -> "SignedGraph":
        """Re-sign every vertex in ``switches``.

        An edge changes sign iff exactly one endpoint is switched.
        """
        mask = 0
        for v in switches:
            self._check_vertex(v)
            mask |= 1 << v
        pos, neg = [], []
        for v in range(self._n):
            p, q = self._pos[v], self._neg[v]
            # flip edges whose far endpoint is on the other side of the cut
            flip = mask if not mask >> v & 1 else ~mask
            pos.append((p & ~flip) | (q & flip))
            neg.append((q & ~flip) | (p & flip))
        return SignedGraph._from_masks(pos, neg)

    def induced(self, keep: Sequence[int]) -> "SignedGraph":
        """Induced subgraph on ``keep``, relabelled to ``0..len(keep)-1``."""
        index = {v: i for i, v in enumerate(keep)}
        return SignedGraph(
            len(keep),
            (
                (index[u], index[v], s)
                for u, v, s in self.edges()
                if u in index and v in index
            ),
        )

    def without_edge(self, u: int, v: int) -> "SignedGraph":
        if not self.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge")
        a, b = min(u, v), max(u, v)
        return SignedGraph(self._n, (e for e in self.edges() if e[:2] != (a, b)))

    def relabel(self, perm: Sequence[int]) -> "SignedGraph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        return SignedGraph(self._n, ((perm[u], perm[v], s) for u, v, s in self.edges()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignedGraph):
            return NotImplemented
        return self._pos == other._pos and self._neg == other._neg

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._pos, self._neg))
        return self._hash

    def __repr__(self) -> str:
        return f"SignedGraph(n={self._n}, m={self._m})"

    def __getstate__(self):
        return (self._pos, self._neg)

    def __setstate__(self, state):
        pos, neg = state
        self._n = len(pos)
        self._pos, self._neg = pos, neg
        self._m = sum(p.bit_count() + q.bit_count() for p, q in zip(pos, neg)) // 2
        self._hash = None


def switch(g: SignedGraph, switches: Iterable[int]) -> SignedGraph:
    return g.switch(switches)


def signed_neighbors(g: SignedGraph, v: int, sign: int) -> frozenset[int]:
    """``N^+(v)`` or ``N^-(v)``."""
    g._check_vertex(v)
    return frozenset(iter_bits(g.nbr_mask(v, _check_sign(sign))))


def common_mask(g: SignedGraph, tup: Sequence[int], signs: Sequence[int]) -> int:
    """Bitmask form of :func:`common_signed_neighborhood`."""
    if len(tup) != len(signs):
        raise GraphError(f"tuple length {len(tup)} != sign vector length {len(signs)}")
    if len(set(tup)) != len(tup):
        raise GraphError(f"repeated vertex in tuple {tuple(tup)}")
    mask = (1 << g.n) - 1
    for v, s in zip(tup, signs):
        g._check_vertex(v)
        mask &= g.nbr_mask(v, _check_sign(s))
    return mask


def common_signed_neighborhood(
    g: SignedGraph, tup: Sequence[int], signs: Sequence[int]
) -> frozenset[int]:
    """Vertices that are an ``signs[i]``-neighbour of ``tup[i]`` for every i.

    The empty tuple yields every vertex. Members of ``tup`` never appear in
    the result because the graph has no loops.
    """
    return frozenset(iter_bits(common_mask(g, tup, signs)))


def components(g: SignedGraph) -> list[list[int]]:
    """Connected components, each in BFS order from its smallest vertex."""
    seen = 0
    out = []
    for root in range(g.n):
        if seen >> root & 1:
            continue
        seen |= 1 << root
        comp = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in iter_bits(g.nbr_mask(u) & ~seen):
                seen |= 1 << w
                comp.append(w)
                queue.append(w)
        out.append(comp)
    return out


def is_connected(g: SignedGraph) -> bool:
    return len(components(g)) <= 1


def switching_equivalent(g1: SignedGraph, g2: SignedGraph) -> Optional[frozenset[int]]:
    """Find ``S`` with ``g1.switch(S) == g2``, or None if none exists.

    Each component is rooted unswitched; tree edges of a BFS forest fix the
    remaining switch bits and every other edge is then checked.
    """
    if not g1.same_underlying(g2):
        raise GraphError("graphs have different underlying graphs")
    bit = [0] * g1.n
    seen = [False] * g1.n
    for root in range(g1.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in iter_bits(g1.nbr_mask(u)):
                differ = g1.sign(u, w) != g2.sign(u, w)
                if not seen[w]:
                    seen[w] = True
                    bit[w] = bit[u] ^ differ
                    queue.append(w)
                elif bit[w] != bit[u] ^ differ:
                    return None
    return frozenset(v for v in range(g1.n) if bit[v])


def _peel(g: SignedGraph) -> tuple[list[int], list[int]]:
    """Repeatedly remove a minimum-degree vertex, smallest id on ties.

    Returns the removal order and each vertex's degree at removal time.
    """
    deg = g.degrees()
    alive = (1 << g.n) - 1
    order, at_removal = [], []
    for _ in range(g.n):
        best = min(iter_bits(alive), key=lambda v: (deg[v], v))
        order.append(best)
        at_removal.append(deg[best])
        alive &= ~(1 << best)
        for w in iter_bits(g.nbr_mask(best) & alive):
            deg[w] -= 1
    return order, at_removal


def degeneracy_ordering(g: SignedGraph, d: int) -> Optional[list[int]]:
    """An ordering in which every vertex has at most ``d`` earlier neighbours.

    Returns None when ``g`` is not ``d``-degenerate.
    """
    if d < 0:
        raise ValueError(f"d must be non-negative, got {d}")
    order, at_removal = _peel(g)
    if max(at_removal, default=0) > d:
        return None
    return order[::-1]


def degeneracy(g: SignedGraph) -> int:
    return max(_peel(g)[1], default=0)


class GraphStats(NamedTuple):
    max_degree: int
    is_regular: bool
    is_connected: bool
    degeneracy: int


def graph_stats(g: SignedGraph) -> GraphStats:
    deg = g.degrees()
    return GraphStats(
        max_degree=max(deg, default=0),
        is_regular=len(set(deg)) <= 1,
        is_connected=is_connected(g),
        degeneracy=degeneracy(g),
    )
