"""Random signed complete targets with the common-neighbourhood property.

A complete signed graph ``C`` has property ``P(t-1)`` when, for every
``j <= t-1``, every ``j`` distinct vertices and every sign pattern on them,
the set of vertices adjacent to each chosen vertex with the prescribed sign
has size at least ``(1 + (t-j)(t-2)) / 2``. Comparisons are done on the
doubled integer inequality ``2|N| >= 1 + (t-j)(t-2)``.

Such graphs are found Las Vegas style: draw a uniformly random signing of
``K_c``, verify exhaustively, retry with a fresh derived seed.
"""

from __future__ import annotations

import hashlib
import logging
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

import mpmath

from .formats import FormatError, graph_digest
from .graph import NEG, POS, SignedGraph, common_mask

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**9
DEFAULT_MAX_ATTEMPTS = 1000
_PRECISION_DIGITS = 40


class PropertyBudgetExceeded(RuntimeError):
    pass


class ConstructionFailed(RuntimeError):
    pass


@dataclass(frozen=True)
class PropertyReport:
    t: int
    passed: bool
    witness: Optional[tuple[tuple[int, ...], tuple[int, ...]]]
    # 2|N| - (1 + (t-j)(t-2)) minimised over what was enumerated; with
    # early exit on failure this is the margin at the witness only
    min_margin: int


def threshold2(t: int, j: int) -> int:
    """Doubled lower bound on the common neighbourhood size."""
    return 1 + (t - j) * (t - 2)


def enumeration_size(n: int, t: int) -> int:
    return sum(math.comb(n, j) * 2**j for j in range(t))


def derive_seed(master: int, index: int) -> int:
    """Independent 64-bit seed for attempt/trial ``index`` of ``master``."""
    data = f"{master}:{index}".encode()
    return int.from_bytes(hashlib.blake2b(data, digest_size=8).digest(), "little")


def random_signed_complete(n: int, seed: int) -> SignedGraph:
    """``K_n`` with every edge negative independently with probability 1/2."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    m = n * (n - 1) // 2
    bits = random.Random(seed).getrandbits(m) if m else 0
    edges = []
    i = 0
    for u in range(n):
        for v in range(u + 1, n):
            edges.append((u, v, NEG if bits >> i & 1 else POS))
            i += 1
    return SignedGraph(n, edges)


def lemma1_order(t: int) -> int:
    """``t (t-1) 2^t``, an order at which a random signing is likely to work."""
    if t < 2:
        raise ValueError(f"t must be at least 2, got {t}")
    return t * (t - 1) * 2**t


def _scan(c: SignedGraph, t: int, first: Optional[int], full: bool):
    """Enumerate (subset, signs) in lexicographic order.

    ``first`` restricts to subsets whose smallest vertex is ``first``
    (``first=None`` covers only the ``j = 0`` row). Returns
    ``(witness, min_margin)``; witness is the first violation found.
    """
    n = c.n
    masks = {POS: [c.nbr_mask(v, POS) for v in range(n)],
             NEG: [c.nbr_mask(v, NEG) for v in range(n)]}
    need = [threshold2(t, j) for j in range(t)]
    best = None
    witness = None
    if first is None:
        best = 2 * n - need[0]
        if best < 0:
            witness = ((), ())
        return witness, best

    tup: list[int] = []
    sig: list[int] = []

    def walk(start: int, mask: int) -> bool:
        nonlocal best, witness
        j = len(tup) + 1
        for v in (range(start, n) if tup else (first,)):
            for s in (POS, NEG):
                inter = mask & masks[s][v]
                margin = 2 * inter.bit_count() - need[j]
                if best is None or margin < best:
                    best = margin
                tup.append(v)
                sig.append(s)
                if margin < 0 and witness is None:
                    witness = (tuple(tup), tuple(sig))
                    if not full:
                        return True
                if j < t - 1 and walk(v + 1, inter):
                    return True
                tup.pop()
                sig.pop()
        return False

    if t > 1:
        walk(first + 1, (1 << n) - 1)
    return witness, best


def _scan_job(args):
    return _scan(*args)


def _witness_key(w):
    # depth-first preorder: a prefix sorts before its extensions
    tup, sig = w
    return tuple((v, 0 if s == POS else 1) for v, s in zip(tup, sig))


def has_property_P(
    c: SignedGraph,
    t: int,
    *,
    full: bool = False,
    workers: int = 1,
    budget: int = DEFAULT_BUDGET,
) -> PropertyReport:
    """Exhaustively check property ``P(t-1)`` on a complete signed graph.

    Only increasing subsets are enumerated: the common neighbourhood depends
    on the set of (vertex, sign) pairs, not on their order. The reported
    witness is the lexicographically smallest violating sequence of
    (vertex, sign) pairs (``+`` before ``-``), independent of ``workers``.
    """
    if t < 2:
        raise ValueError(f"t must be at least 2, got {t}")
    if not c.is_complete():
        raise ValueError("property P is only defined here for complete signed graphs")
    size = enumeration_size(c.n, t)
    if size > budget:
        raise PropertyBudgetExceeded(
            f"{size} neighbourhood intersections exceed budget {budget}"
        )

    jobs = [(c, t, None, full)] + [(c, t, v, full) for v in range(c.n)]
    if workers > 1 and c.n > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_scan_job, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        results = []
        for job in jobs:
            results.append(_scan(*job))
            # the first violation in job order is already the smallest
            if results[-1][0] is not None and not full:
                break

    witnesses = [w for w, _ in results if w is not None]
    margins = [m for _, m in results if m is not None]
    if not witnesses:
        return PropertyReport(t, True, None, min(margins))
    witness = min(witnesses, key=_witness_key)
    if full:
        margin = min(margins)
    else:
        tup, sig = witness
        margin = 2 * common_mask(c, tup, sig).bit_count() - threshold2(t, len(tup))
    return PropertyReport(t, False, witness, margin)


@dataclass(frozen=True)
class TargetCertificate:
    t: int
    order: int
    seed: int
    attempt: int
    attempts: int
    digest: str

    def to_text(self) -> str:
        return (
            "sgcert 1\n"
            f"t {self.t}\n"
            f"order {self.order}\n"
            f"seed {self.seed}\n"
            f"attempt {self.attempt}\n"
            f"attempts {self.attempts}\n"
            f"digest {self.digest}\n"
        )

    @classmethod
    def from_text(cls, text: str) -> "TargetCertificate":
        fields = {}
        lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
        if not lines or lines[0] != ["sgcert", "1"]:
            raise FormatError("certificate must start with 'sgcert 1'")
        for parts in lines[1:]:
            if len(parts) != 2:
                raise FormatError(f"malformed certificate line {' '.join(parts)!r}")
            fields[parts[0]] = parts[1]
        want = ("t", "order", "seed", "attempt", "attempts", "digest")
        missing = [k for k in want if k not in fields]
        if missing:
            raise FormatError(f"certificate lacks fields {missing}")
        try:
            ints = {k: int(fields[k]) for k in want[:-1]}
        except ValueError as exc:
            raise FormatError(f"non-integer certificate field: {exc}") from None
        return cls(digest=fields["digest"], **ints)

    def regenerate(self) -> SignedGraph:
        return random_signed_complete(self.order, derive_seed(self.seed, self.attempt))


def verify_certificate(
    cert: TargetCertificate, graph: Optional[SignedGraph] = None, workers: int = 1
) -> bool:
    """Recompute the graph from (order, seed, attempt) and re-check it."""
    regenerated = cert.regenerate()
    if graph_digest(regenerated) != cert.digest:
        return False
    if graph is not None and graph != regenerated:
        return False
    return has_property_P(regenerated, cert.t, workers=workers).passed


def construct_target(
    t: int,
    order: Optional[int] = None,
    seed: int = 0,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
    *,
    workers: int = 1,
) -> tuple[SignedGraph, TargetCertificate]:
    """Draw random signed complete graphs until one has ``P(t-1)``."""
    if t < 2:
        raise ValueError(f"t must be at least 2, got {t}")
    if order is None:
        order = lemma1_order(t)
    for attempt in range(max_attempts):
        c = random_signed_complete(order, derive_seed(seed, attempt))
        report = has_property_P(c, t, workers=workers)
        if report.passed:
            cert = TargetCertificate(t, order, seed, attempt, attempt + 1, graph_digest(c))
            log.info("target t=%d order=%d found after %d attempts", t, order, attempt + 1)
            return c, cert
        log.debug("attempt %d failed at %s", attempt, report.witness)
    raise ConstructionFailed(
        f"no order-{order} signed complete graph with P({t - 1}) in {max_attempts} attempts"
    )


def _trial(args) -> bool:
    t, n, seed = args
    return has_property_P(random_signed_complete(n, seed), t).passed


def monte_carlo_property_rate(
    t: int, n: int, trials: int, seed: int, *, workers: int = 1,
    budget: int = DEFAULT_BUDGET,
) -> float:
    """Fraction of random signed ``K_n`` having ``P(t-1)``."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if enumeration_size(n, t) > budget:
        raise PropertyBudgetExceeded(f"order {n} at t={t} exceeds the verification budget")
    jobs = [(t, n, derive_seed(seed, i)) for i in range(trials)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            hits = sum(pool.map(_trial, jobs))
    else:
        hits = sum(map(_trial, jobs))
    return hits / trials


def _log_f(j: int, t: int, c: int) -> mpmath.mpf:
    exponent = mpmath.mpf((t - j) * (t - 2) + 1) / 2 + j
    return mpmath.log(2) - c * mpmath.mpf(2) ** -j + exponent * mpmath.log(c)


def bound_summand_f(j: int, t: int, c: int) -> mpmath.mpf:
    """``2 exp(-c 2^-j) c^(((t-j)(t-2)+1)/2 + j)``, evaluated via its logarithm."""
    if not 0 <= j <= t - 1:
        raise ValueError(f"j must lie in 0..{t - 1}, got {j}")
    with mpmath.workdps(_PRECISION_DIGITS):
        return +mpmath.exp(_log_f(j, t, c))


def summand_ratio(j: int, t: int, c: int) -> mpmath.mpf:
    """Closed form of ``f(j+1) / f(j)``: ``exp(c 2^-(j+1)) / c^((t-4)/2)``."""
    with mpmath.workdps(_PRECISION_DIGITS):
        return mpmath.exp(c * mpmath.mpf(2) ** -(j + 1) - mpmath.mpf(t - 4) / 2 * mpmath.log(c))


@dataclass(frozen=True)
class BadEventBound:
    sum: mpmath.mpf
    closed_form: mpmath.mpf
    below_one: bool


def bad_event_bound(t: int, c: Optional[int] = None) -> BadEventBound:
    """Union bound ``sum_j f(j)`` and its geometric-series majorant.

    The majorant is ``2(1.001)(t^3 (t-1)^3 2^(3t) / e^(4t-2))^((t-1)/2)``.
    ``below_one`` refers to the sum.
    """
    if t < 2:
        raise ValueError(f"t must be at least 2, got {t}")
    if c is None:
        c = lemma1_order(t)
    with mpmath.workdps(_PRECISION_DIGITS):
        logs = [_log_f(j, t, c) for j in range(t)]
        top = max(logs)
        total = mpmath.exp(top) * mpmath.fsum(mpmath.exp(x - top) for x in logs)
        base = (
            3 * mpmath.log(t) + 3 * mpmath.log(t - 1) + 3 * t * mpmath.log(2) - (4 * t - 2)
        )
        closed = 2 * mpmath.mpf("1.001") * mpmath.exp(base * mpmath.mpf(t - 1) / 2)
        return BadEventBound(+total, +closed, bool(total < 1))


def theorem_bounds(delta: int) -> tuple[float, int]:
    """Lower and upper bounds on the signed chromatic number for max degree ``delta``."""
    if delta < 3:
        raise ValueError(f"delta must be at least 3, got {delta}")
    return 2.0 ** (delta / 2 - 1), (delta - 1) ** 2 * 2 ** (delta - 1) + 2
