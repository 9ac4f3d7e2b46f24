"""Seeded random connected signed graphs of bounded maximum degree."""

from __future__ import annotations

import random

from .graph import NEG, POS, SignedGraph, graph_stats

MAX_RETRIES = 10_000


class GenerationError(RuntimeError):
    pass


def _pairing(n: int, delta: int, rng: random.Random):
    """One draw of the configuration model; None if it has loops or repeats."""
    stubs = [v for v in range(n) for _ in range(delta)]
    rng.shuffle(stubs)
    edges = set()
    for a, b in zip(stubs[::2], stubs[1::2]):
        if a == b:
            return None
        e = (min(a, b), max(a, b))
        if e in edges:
            return None
        edges.add(e)
    return sorted(edges)


def _tree_plus(n: int, delta: int, rng: random.Random):
    order = list(range(n))
    rng.shuffle(order)
    deg = [0] * n
    edges = set()
    for i in range(1, n):
        v = order[i]
        open_ = [u for u in order[:i] if deg[u] < delta]
        if not open_:
            return None
        u = rng.choice(open_)
        edges.add((min(u, v), max(u, v)))
        deg[u] += 1
        deg[v] += 1
    for _ in range(rng.randrange(n * delta // 2 + 1)):
        u, v = rng.sample(range(n), 2)
        e = (min(u, v), max(u, v))
        if e not in edges and deg[u] < delta and deg[v] < delta:
            edges.add(e)
            deg[u] += 1
            deg[v] += 1
    return sorted(edges)


def random_bounded_degree_graph(
    n: int, delta: int, regular: bool = False, neg_prob: float = 0.5, seed: int = 0
) -> SignedGraph:
    """Connected graph with maximum degree at most ``delta``.

    ``regular=True`` draws ``delta``-regular graphs from the pairing model;
    otherwise a random degree-capped spanning tree is densified and the
    result is guaranteed not to be ``delta``-regular. Each edge is negative
    with probability ``neg_prob``.
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if not 1 <= delta < n:
        raise ValueError(f"delta must satisfy 1 <= delta < n, got {delta}")
    if not 0 <= neg_prob <= 1:
        raise ValueError(f"neg_prob must lie in [0, 1], got {neg_prob}")
    if regular and n * delta % 2:
        raise ValueError("n * delta must be even for a regular graph")
    if not regular and delta == 1:
        raise ValueError("every connected graph with maximum degree 1 is 1-regular")

    rng = random.Random(seed)
    for _ in range(MAX_RETRIES):
        edges = _pairing(n, delta, rng) if regular else _tree_plus(n, delta, rng)
        if edges is None:
            continue
        g = SignedGraph(n, ((u, v, POS) for u, v in edges))
        stats = graph_stats(g)
        if not stats.is_connected:
            continue
        if not regular and stats.is_regular and stats.max_degree == delta:
            # drop the first edge that keeps the graph connected
            for u, v, _ in g.edges():
                if graph_stats(g.without_edge(u, v)).is_connected:
                    edges.remove((u, v))
                    break
            else:
                continue
        return SignedGraph(n, ((u, v, NEG if rng.random() < neg_prob else POS) for u, v in edges))
    raise GenerationError(f"no connected graph after {MAX_RETRIES} draws")
