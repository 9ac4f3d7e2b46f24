"""Signed and 2-edge-coloured homomorphisms, and exact chromatic numbers.

A signed homomorphism is a vertex map together with a set of re-signed
source vertices; after switching, every source edge must land on a target
edge of the same sign. Equivalently an edge ``uv`` of sign ``s`` with
switch bits ``b_u, b_v`` needs a target edge of sign ``s * (-1)**(b_u+b_v)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence, Union

from .graph import NEG, POS, SignedGraph, iter_bits

DEFAULT_ORACLE_BUDGET = 10**7

VertexMap = Union[Sequence[int], Mapping[int, int]]


class HomError(ValueError):
    """Raised for partial or out-of-range vertex maps."""


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class SignedHom:
    mapping: tuple[int, ...]
    switches: frozenset[int] = field(default_factory=frozenset)

    def image(self, v: int) -> int:
        return self.mapping[v]


@dataclass(frozen=True)
class ChromaticWitness:
    value: int
    target: SignedGraph
    hom: SignedHom


def _bit_sign(bit: int) -> int:
    return NEG if bit else POS


def _as_tuple(g: SignedGraph, h: SignedGraph, mapping: VertexMap) -> tuple[int, ...]:
    if isinstance(mapping, Mapping):
        missing = [v for v in g.vertices() if v not in mapping]
        if missing:
            raise HomError(f"map is undefined on vertices {missing}")
        images = tuple(mapping[v] for v in g.vertices())
    else:
        images = tuple(mapping)
        if len(images) != g.n:
            raise HomError(f"map has {len(images)} entries for {g.n} vertices")
    for v, x in enumerate(images):
        if not 0 <= x < h.n:
            raise HomError(f"image {x} of vertex {v} out of range for target n={h.n}")
    return images


def check_2ec_hom(g: SignedGraph, h: SignedGraph, mapping: VertexMap) -> bool:
    """True iff every edge of ``g`` maps onto an edge of ``h`` of equal sign."""
    images = _as_tuple(g, h, mapping)
    return all(h.sign(images[u], images[v]) == s for u, v, s in g.edges())


def check_signed_hom(g: SignedGraph, h: SignedGraph, hom: SignedHom) -> bool:
    for v in hom.switches:
        if not 0 <= v < g.n:
            raise HomError(f"switched vertex {v} out of range for n={g.n}")
    return check_2ec_hom(g.switch(hom.switches), h, hom.mapping)


def search_order(g: SignedGraph) -> list[int]:
    """Connectivity-aware, highest-degree-first vertex order.

    Each next vertex maximises (placed neighbours, degree), smallest id on
    ties, so every component is visited contiguously.
    """
    deg = g.degrees()
    placed_nbrs = [0] * g.n
    remaining = set(g.vertices())
    order = []
    while remaining:
        v = min(remaining, key=lambda x: (-placed_nbrs[x], -deg[x], x))
        remaining.discard(v)
        order.append(v)
        for w in iter_bits(g.nbr_mask(v)):
            placed_nbrs[w] += 1
    return order


def _search_hom(g: SignedGraph, h: SignedGraph, allow_switch: bool) -> Optional[SignedHom]:
    n = g.n
    if n == 0:
        return SignedHom(())
    order = search_order(g)
    full = (1 << h.n) - 1
    # dom[v][b]: admissible images of v when its switch bit is b
    dom = [[full, full if allow_switch else 0] for _ in range(n)]
    # component roots may stay unswitched: flipping a whole component is free
    seen = 0
    for v in order:
        if not g.nbr_mask(v) & seen:
            dom[v][1] = 0
        seen |= 1 << v
    image = [-1] * n
    bits = [0] * n
    assigned = 0
    nbr_pos = [g.nbr_mask(v, POS) for v in range(n)]
    h_nbr = {POS: [h.nbr_mask(x, POS) for x in range(h.n)],
             NEG: [h.nbr_mask(x, NEG) for x in range(h.n)]}

    def place(depth: int) -> bool:
        nonlocal assigned
        if depth == n:
            return True
        v = order[depth]
        d0, d1 = dom[v]
        for x in iter_bits(d0 | d1):
            for b in (0, 1):
                if not (d0 if b == 0 else d1) >> x & 1:
                    continue
                sb = _bit_sign(b)
                trail = []
                ok = True
                for w in iter_bits(g.nbr_mask(v) & ~assigned):
                    s = (POS if nbr_pos[v] >> w & 1 else NEG) * sb
                    old = (dom[w][0], dom[w][1])
                    trail.append((w, old))
                    dom[w][0] &= h_nbr[s][x]
                    dom[w][1] &= h_nbr[-s][x]
                    if not (dom[w][0] | dom[w][1]):
                        ok = False
                        break
                if ok:
                    image[v], bits[v] = x, b
                    assigned |= 1 << v
                    if place(depth + 1):
                        return True
                    assigned &= ~(1 << v)
                for w, old in reversed(trail):
                    dom[w][0], dom[w][1] = old
        return False

    if not place(0):
        return None
    hom = SignedHom(tuple(image), frozenset(v for v in range(n) if bits[v]))
    if not check_signed_hom(g, h, hom):
        raise AssertionError("search produced an invalid homomorphism")
    return hom


def find_signed_hom(g: SignedGraph, h: SignedGraph) -> Optional[SignedHom]:
    """Backtracking search for a signed homomorphism ``g -> h``.

    Deterministic: vertices follow :func:`search_order`, candidates are
    tried by ascending image id, unswitched before switched.
    """
    return _search_hom(g, h, allow_switch=True)


def find_2ec_hom(g: SignedGraph, h: SignedGraph) -> Optional[tuple[int, ...]]:
    hom = _search_hom(g, h, allow_switch=False)
    return None if hom is None else hom.mapping


def exhaustive_hom_oracle(
    g: SignedGraph, h: SignedGraph, budget: int = DEFAULT_ORACLE_BUDGET
) -> Optional[SignedHom]:
    """Try every vertex map under every switch set."""
    work = h.n ** g.n * 2 ** g.n
    if work > budget:
        raise BudgetExceeded(f"{work} candidate pairs exceed budget {budget}")
    edges = list(g.edges())
    for sw in range(2 ** g.n):
        switched = [
            (u, v, -s if (sw >> u ^ sw >> v) & 1 else s) for u, v, s in edges
        ]
        for images in itertools.product(range(h.n), repeat=g.n):
            if all(h.sign(images[u], images[v]) == s for u, v, s in switched):
                return SignedHom(images, frozenset(v for v in range(g.n) if sw >> v & 1))
    return None


def _quotient_search(g: SignedGraph, k: int, allow_switch: bool) -> Optional[ChromaticWitness]:
    """Partition ``g`` into ``k`` independent parts with switch bits such that
    all switched edges between any two parts share one sign."""
    n = g.n
    order = search_order(g)
    part = [-1] * n
    bits = [0] * n
    table = [[0] * k for _ in range(k)]
    edge_sign = {(u, v): s for u, v, s in g.edges()}
    edge_sign.update({(v, u): s for (u, v), s in list(edge_sign.items())})
    back = [[w for w in order[:i] if (u, w) in edge_sign] for i, u in enumerate(order)]

    def place(depth: int, used: int) -> bool:
        if depth == n:
            return True
        v = order[depth]
        choices = (0, 1) if allow_switch and depth > 0 else (0,)
        for p in range(min(used + 1, k)):
            for b in choices:
                sb = _bit_sign(b)
                set_here = []
                ok = True
                for w in back[depth]:
                    q = part[w]
                    if q == p:
                        ok = False
                        break
                    s = edge_sign[v, w] * sb * _bit_sign(bits[w])
                    cur = table[p][q]
                    if cur == 0:
                        table[p][q] = table[q][p] = s
                        set_here.append(q)
                    elif cur != s:
                        ok = False
                        break
                if ok:
                    part[v], bits[v] = p, b
                    if place(depth + 1, max(used, p + 1)):
                        return True
                for q in set_here:
                    table[p][q] = table[q][p] = 0
        return False

    if not place(0, 0):
        return None
    target = SignedGraph(
        k, ((p, q, table[p][q]) for p in range(k) for q in range(p + 1, k) if table[p][q])
    )
    hom = SignedHom(tuple(part), frozenset(v for v in range(n) if bits[v]))
    return ChromaticWitness(k, target, hom)


def _chromatic(g: SignedGraph, max_order: Optional[int], allow_switch: bool):
    if max_order is None:
        max_order = max(g.n, 1)
    if max_order < 1:
        raise ValueError(f"max_order must be at least 1, got {max_order}")
    if g.n == 0:
        return ChromaticWitness(0, SignedGraph(0), SignedHom(()))
    for k in range(1, max_order + 1):
        found = _quotient_search(g, k, allow_switch)
        if found is not None:
            if not check_signed_hom(g, found.target, found.hom):
                raise AssertionError("quotient witness failed verification")
            return found
    return None


def signed_chromatic_number(
    g: SignedGraph, max_order: Optional[int] = None
) -> Optional[ChromaticWitness]:
    """Smallest order of a signed target that ``g`` maps to.

    Returns None when the value exceeds ``max_order`` (default ``g.n``,
    which always suffices).
    """
    return _chromatic(g, max_order, allow_switch=True)


def two_ec_chromatic_number(
    g: SignedGraph, max_order: Optional[int] = None
) -> Optional[ChromaticWitness]:
    """As :func:`signed_chromatic_number` but without re-signing."""
    return _chromatic(g, max_order, allow_switch=False)


def quotient_feasible(g: SignedGraph, k: int, allow_switch: bool = True) -> bool:
    """Whether an order-``k`` quotient exists; used to confirm minimality."""
    if k < 0:
        return False
    if g.n == 0:
        return True
    return k > 0 and _quotient_search(g, k, allow_switch) is not None

