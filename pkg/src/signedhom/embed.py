"""Greedy embedding of bounded-degree signed graphs into P(t-1) targets.

Vertices are placed along a degeneracy ordering. A vertex with placed
neighbours ``w_1..w_p`` may go to any target vertex lying in the common
signed neighbourhood of their images, for one of its two switch bits. The
two candidate sets are disjoint, so together they hold at least
``1 + (t-p)(t-2)`` vertices. Images already used around each not-yet-placed
neighbour are excluded so that every future vertex sees pairwise distinct
images among its placed neighbours; there are at most ``(t-2)(t-p)`` of
those, hence a free candidate always exists.
"""

from __future__ import annotations

import functools
import logging
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence

from .graph import POS, SignedGraph, degeneracy_ordering, graph_stats, iter_bits
from .hom import SignedHom, check_signed_hom
from .target import TargetCertificate, construct_target, threshold2

log = logging.getLogger(__name__)

DEFAULT_MAX_BACKTRACKS = 10_000


class EmbeddingError(RuntimeError):
    """Raised when no embedding was found; ``state`` holds the stuck prefix."""

    def __init__(self, message: str, state: Optional["EmbedState"] = None):
        super().__init__(message)
        self.state = state


@dataclass
class EmbedState:
    order: list[int]
    placed: int = 0
    image: dict[int, int] = field(default_factory=dict)
    bit: dict[int, int] = field(default_factory=dict)

    def future_constraints(self, g: SignedGraph) -> dict[int, set[int]]:
        """Images used by the placed neighbours of every unplaced vertex."""
        out = {}
        for y in g.vertices():
            if y not in self.image:
                out[y] = {self.image[w] for w in g.neighbors(y) if w in self.image}
        return out


@dataclass
class EmbedReport:
    hom: SignedHom
    backtracks: int = 0
    guard_violations: list[str] = field(default_factory=list)


@dataclass(frozen=True)
class AugmentedTarget:
    base: SignedGraph
    graph: SignedGraph
    extra: tuple[int, int]


def _check_state(g: SignedGraph, c: SignedGraph, state: EmbedState) -> None:
    for v, x in state.image.items():
        for w in g.neighbors(v):
            if w in state.image:
                want = g.sign(v, w) * (-1) ** (state.bit[v] + state.bit[w])
                if c.sign(x, state.image[w]) != want:
                    raise AssertionError(f"edge {v}-{w} not preserved after step {state.placed}")
    for y, used in state.future_constraints(g).items():
        placed = [w for w in g.neighbors(y) if w in state.image]
        if len(used) != len(placed):
            raise AssertionError(f"placed neighbours of {y} share an image")


def _embed(
    g: SignedGraph,
    c: SignedGraph,
    t: int,
    order: Sequence[int],
    virtual: frozenset[int] = frozenset(),
    max_backtracks: int = DEFAULT_MAX_BACKTRACKS,
    debug: bool = False,
) -> tuple[dict[int, int], dict[int, int], EmbedReport]:
    """Place ``order`` into ``c``; ``virtual`` vertices stay unplaced forever
    but still get pairwise distinct images on their neighbourhoods."""
    state = EmbedState(list(order))
    report = EmbedReport(SignedHom(()))
    image, bit = state.image, state.bit
    all_c = (1 << c.n) - 1
    stack: list[list[tuple[int, int]]] = []

    def candidates(x: int) -> list[tuple[int, int]]:
        placed_nbrs = [w for w in g.neighbors(x) if w in image]
        p = len(placed_nbrs)
        if p > t - 1:
            raise EmbeddingError(f"vertex {x} has {p} placed neighbours, more than t-1={t - 1}", state)
        d0 = d1 = all_c
        for w in placed_nbrs:
            s = g.sign(x, w) * (-1) ** bit[w]
            d0 &= c.nbr_mask(image[w], s)
            d1 &= c.nbr_mask(image[w], -s)
        need = threshold2(t, p)
        if p:
            if d0 & d1:
                raise AssertionError("switch-bit candidate sets intersect")
            size = (d0 | d1).bit_count()
            low = min(d0.bit_count(), d1.bit_count())
            if size < need or 2 * low < need:
                msg = (f"vertex {x}: |D|={size} with {p} placed neighbours, "
                       f"target lacks P({t - 1})")
                report.guard_violations.append(msg)
                log.warning(msg)
        elif 2 * d0.bit_count() < need:
            report.guard_violations.append(f"target order {c.n} below the j=0 threshold")
        blocked = 0
        for y in g.neighbors(x):
            if y not in image:
                for w in g.neighbors(y):
                    if w in image:
                        blocked |= 1 << image[w]
        free = (d0 | d1) & ~blocked
        return [(h, 0 if d0 >> h & 1 else 1) for h in iter_bits(free)]

    i = 0
    while i < len(order):
        x = order[i]
        if len(stack) == i:
            stack.append(candidates(x)[::-1])
        if stack[i]:
            h, b = stack[i].pop()
            image[x], bit[x] = h, b
            state.placed = i + 1
            if debug:
                _check_state(g, c, state)
            i += 1
            continue
        # D \ B empty: undo the previous placement and try its next option
        stack.pop()
        report.backtracks += 1
        log.warning("embedding backtrack at vertex %d (position %d)", x, i)
        if i == 0 or report.backtracks > max_backtracks:
            raise EmbeddingError(f"no admissible image for vertex {x} at position {i}", state)
        i -= 1
        prev = order[i]
        del image[prev], bit[prev]
        state.placed = i
    for y in virtual:
        imgs = [image[w] for w in g.neighbors(y) if w in image]
        if len(set(imgs)) != len(imgs):
            raise AssertionError(f"neighbours of virtual vertex {y} share an image")
    return image, bit, report


def embed_detailed(
    g: SignedGraph, c: SignedGraph, t: int, *,
    max_backtracks: int = DEFAULT_MAX_BACKTRACKS, debug: bool = False,
) -> EmbedReport:
    """:func:`greedy_embed` plus backtrack and counting-guard diagnostics."""
    if t < 2:
        raise ValueError(f"t must be at least 2, got {t}")
    if g.max_degree() > t:
        raise ValueError(f"maximum degree {g.max_degree()} exceeds t={t}")
    order = degeneracy_ordering(g, t - 1)
    if order is None:
        raise ValueError(f"graph is not {t - 1}-degenerate")
    image, bit, report = _embed(g, c, t, order, max_backtracks=max_backtracks, debug=debug)
    hom = SignedHom(tuple(image[v] for v in g.vertices()),
                    frozenset(v for v in g.vertices() if bit[v]))
    if not check_signed_hom(g, c, hom):
        raise AssertionError("greedy embedding failed re-verification")
    report.hom = hom
    return report


def greedy_embed(g: SignedGraph, c: SignedGraph, t: int, **kwargs) -> SignedHom:
    """Map ``g`` (max degree <= t, (t-1)-degenerate) into ``c``, which the
    caller guarantees has property ``P(t-1)``. Deterministic."""
    return embed_detailed(g, c, t, **kwargs).hom


def _removable_edge(g: SignedGraph) -> tuple[int, int]:
    for u, v, _ in g.edges():
        if graph_stats(g.without_edge(u, v)).is_connected:
            return u, v
    raise ValueError("every edge is a bridge")


def embed_with_regular_fix(
    g: SignedGraph, c: SignedGraph, t: int, *, debug: bool = False,
) -> tuple[SignedHom, AugmentedTarget]:
    """Embed a connected ``t``-regular graph into ``c`` plus two fresh vertices.

    One non-bridge edge ``uv`` is dropped; the rest of the graph minus ``u``
    and ``v`` is embedded greedily while the neighbourhoods of ``u`` and
    ``v`` are kept injective. ``u`` and ``v`` then go to new vertices whose
    edges are signed to fit.
    """
    stats = graph_stats(g)
    if not stats.is_connected:
        raise ValueError("graph is not connected")
    if not stats.is_regular or stats.max_degree != t:
        raise ValueError(f"graph is not {t}-regular")
    u, v = _removable_edge(g)
    h = g.without_edge(u, v)
    rest = [x for x in g.vertices() if x not in (u, v)]
    sub_order = degeneracy_ordering(g.induced(rest), t - 1)
    if sub_order is None:
        raise ValueError(f"graph minus an edge is not {t - 1}-degenerate")
    order = [rest[i] for i in sub_order]
    image, bit, report = _embed(h, c, t, order, virtual=frozenset((u, v)), debug=debug)
    if report.backtracks:
        log.warning("regular fix needed %d backtracks", report.backtracks)

    xu, xv = c.n, c.n + 1
    image[u], image[v] = xu, xv
    bit[u] = bit[v] = 0
    signs = {}
    for a, b, s in c.edges():
        signs[a, b] = s
    signs[xu, xv] = g.sign(u, v)
    for end, fresh in ((u, xu), (v, xv)):
        for w in h.neighbors(end):
            signs[image[w], fresh] = h.sign(end, w) * (-1) ** bit[w]
    n2 = c.n + 2
    augmented = SignedGraph(
        n2,
        ((a, b, signs.get((a, b), POS)) for a in range(n2) for b in range(a + 1, n2)
         if b >= c.n or (a, b) in signs),
    )
    hom = SignedHom(tuple(image[x] for x in g.vertices()),
                    frozenset(x for x in g.vertices() if bit[x]))
    if not check_signed_hom(g, augmented, hom):
        raise AssertionError("regular-fix embedding failed re-verification")
    return hom, AugmentedTarget(c, augmented, (xu, xv))


@functools.lru_cache(maxsize=8)
def cached_target(t: int, order: Optional[int], seed: int, max_attempts: int, workers: int = 1):
    return construct_target(t, order, seed, max_attempts, workers=workers)


class PipelineResult(NamedTuple):
    hom: SignedHom
    target: SignedGraph
    certificate: TargetCertificate
    augmented: Optional[AugmentedTarget]


def end_to_end(
    g: SignedGraph, *, seed: int = 0, max_attempts: int = 1000, workers: int = 1,
) -> PipelineResult:
    """Build a certified target for ``t = max degree`` and map ``g`` into it."""
    stats = graph_stats(g)
    if stats.max_degree < 3:
        raise ValueError(f"maximum degree {stats.max_degree} is below 3")
    if not stats.is_connected:
        raise ValueError("graph is not connected")
    t = stats.max_degree
    c, cert = cached_target(t, None, seed, max_attempts, workers)
    if stats.is_regular:
        hom, aug = embed_with_regular_fix(g, c, t)
        return PipelineResult(hom, aug.graph, cert, aug)
    return PipelineResult(greedy_embed(g, c, t), c, cert, None)
