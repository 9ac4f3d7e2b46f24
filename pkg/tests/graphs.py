"""Named small signed graphs used across the suite."""

from signedhom.graph import NEG, POS, SignedGraph


def path(n, sign=POS):
    return SignedGraph(n, [(i, i + 1, sign) for i in range(n - 1)])


def cycle(n, signs):
    return SignedGraph(n, [(i, (i + 1) % n, signs[i]) for i in range(n)])


def petersen(signs=None):
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges = outer + spokes + inner
    signs = signs or [POS] * len(edges)
    return SignedGraph(10, [(min(u, v), max(u, v), s) for (u, v), s in zip(edges, signs)])


def prism(sign=NEG):
    edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
    return SignedGraph(6, [(u, v, sign) for u, v in edges])
