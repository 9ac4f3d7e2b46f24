"""Acceptance criteria. Each test prints one PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v``.
"""

import random
import subprocess
import sys
import time
from decimal import Decimal

import pytest

from signedhom.embed import embed_detailed, embed_with_regular_fix
from signedhom.formats import emit_signed_graph
from signedhom.generate import random_bounded_degree_graph
from signedhom.graph import NEG, POS, SignedGraph, switch, switching_equivalent
from signedhom.hom import (
    exhaustive_hom_oracle,
    find_signed_hom,
    signed_chromatic_number,
    two_ec_chromatic_number,
)
from signedhom.target import (
    ConstructionFailed,
    bad_event_bound,
    bound_summand_f,
    construct_target,
    has_property_P,
    lemma1_order,
    monte_carlo_property_rate,
    summand_ratio,
    theorem_bounds,
)

import oracles
from graphs import petersen, prism


@pytest.fixture
def verdict(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
        assert ok, detail

    return emit


def test_01_bound_formulas(verdict):
    expected = {3: (Decimal(2).sqrt(), 18), 4: (Decimal(2), 74), 5: (Decimal(8).sqrt(), 258)}
    ok = True
    for delta, (lower, upper) in expected.items():
        lo, up = theorem_bounds(delta)
        ok &= up == upper and isinstance(up, int)
        ok &= oracles.sig_digits_agree(lo, lower, 10)
    verdict(1, ok, "degree bounds for delta 3, 4, 5 = (1.4142, 18), (2, 74), (2.8284, 258)")


def test_02_target_construction(verdict):
    start = time.perf_counter()
    successes = 0
    for seed in range(10):
        try:
            c, cert = construct_target(3, 48, seed=seed, max_attempts=10)
        except ConstructionFailed:
            continue
        successes += has_property_P(c, 3).passed and cert.attempts <= 10
    elapsed = time.perf_counter() - start
    verdict(2, successes >= 9 and elapsed < 120,
            f"t=3 order 48: {successes}/10 seeds certified within 10 attempts in {elapsed:.1f}s")


def test_03_monte_carlo(verdict):
    start = time.perf_counter()
    big = monte_carlo_property_rate(3, 48, 100, seed=2024)
    small = monte_carlo_property_rate(3, 6, 100, seed=2024)
    elapsed = time.perf_counter() - start
    verdict(3, big >= 0.9 and small < big and elapsed < 300,
            f"rate(n=48)={big:.2f} >= 0.9, rate(n=6)={small:.2f} smaller, {elapsed:.1f}s")


def test_04_greedy_end_to_end(verdict):
    start = time.perf_counter()
    c, _ = construct_target(3, 48, seed=1, max_attempts=10)
    valid = backtracks = guards = 0
    for seed in range(50):
        n = random.Random(seed).randint(4, 60)
        g = random_bounded_degree_graph(n, 3, regular=False, neg_prob=0.5, seed=seed)
        report = embed_detailed(g, c, 3)
        backtracks += report.backtracks
        guards += len(report.guard_violations)
        valid += oracles.is_signed_hom_by_edges(g, c, report.hom.mapping, report.hom.switches)
    elapsed = time.perf_counter() - start
    verdict(4, valid == 50 and backtracks == 0 and guards == 0 and elapsed < 120,
            f"{valid}/50 embeddings verified, {backtracks} backtracks, "
            f"{guards} guard violations, {elapsed:.1f}s")


def test_05_regular_fix(verdict):
    c, _ = construct_target(3, 48, seed=1, max_attempts=10)
    rng = random.Random(5)
    cases = {
        "K4+": SignedGraph.complete(4, POS),
        "Petersen": petersen([rng.choice((POS, NEG)) for _ in range(15)]),
        "prism-": prism(NEG),
    }
    results = []
    for name, g in cases.items():
        hom, aug = embed_with_regular_fix(g, c, 3)
        ok = aug.graph.n == 50 and oracles.is_signed_hom_by_edges(
            g, aug.graph, hom.mapping, hom.switches)
        results.append(ok)
    verdict(5, all(results),
            f"regular fix into order-50 targets: {dict(zip(cases, results))}")


def test_06_oracle_equivalence(verdict):
    start = time.perf_counter()
    rng = random.Random(606)
    agree = 0
    for _ in range(200):
        g = oracles.random_signed_graph(rng, rng.randint(1, 5), rng.random())
        h = oracles.random_signed_graph(rng, rng.randint(1, 4), rng.random())
        agree += (find_signed_hom(g, h) is None) == (exhaustive_hom_oracle(g, h) is None)
    elapsed = time.perf_counter() - start
    verdict(6, agree == 200 and elapsed < 60,
            f"find_signed_hom vs exhaustive oracle: {agree}/200 agree in {elapsed:.1f}s")


def test_07_small_chromatic_numbers(verdict):
    start = time.perf_counter()
    edge = SignedGraph(2, [(0, 1, POS)])
    tri = SignedGraph(3, [(0, 1, POS), (0, 2, POS), (1, 2, NEG)])
    fixed = (signed_chromatic_number(edge).value == 2
             and signed_chromatic_number(tri).value == 3)
    rng = random.Random(707)
    match_s = match_2 = relation = 0
    for _ in range(100):
        g = oracles.random_signed_graph(rng, rng.randint(1, 7), rng.random())
        xs = signed_chromatic_number(g).value
        x2 = two_ec_chromatic_number(g).value
        match_s += xs == oracles.chromatic_by_partitions(g, True)
        match_2 += x2 == oracles.chromatic_by_partitions(g, False)
        relation += x2 <= 2 * xs
    elapsed = time.perf_counter() - start
    ok = fixed and match_s == match_2 == relation == 100 and elapsed < 300
    verdict(7, ok, f"fixed cases {'ok' if fixed else 'wrong'}; chi_s {match_s}/100, "
                   f"chi_2 {match_2}/100 match brute force; chi_2 <= 2 chi_s on "
                   f"{relation}/100; {elapsed:.1f}s")


def test_08_switching_algebra(verdict):
    rng = random.Random(808)
    laws = dict(involution=0, complement=0, composition=0, cycle_sign=0)
    for _ in range(1000):
        n = rng.randint(3, 9)
        cyc = rng.sample(range(n), rng.randint(3, n))
        cycle_pairs = list(zip(cyc, cyc[1:] + cyc[:1]))
        e = oracles.edge_dict(oracles.random_signed_graph(rng, n, rng.random()))
        for u, v in cycle_pairs:
            e.setdefault((min(u, v), max(u, v)), rng.choice((POS, NEG)))
        g = SignedGraph(n, [(u, v, s) for (u, v), s in e.items() if u < v])
        s1 = {v for v in range(n) if rng.random() < 0.5}
        s2 = {v for v in range(n) if rng.random() < 0.5}
        laws["involution"] += switch(switch(g, s1), s1) == g
        laws["complement"] += switch(g, s1) == switch(g, set(range(n)) - s1)
        laws["composition"] += switch(switch(g, s1), s2) == switch(g, s1 ^ s2)
        h = switch(g, s1)
        pg = ph = 1
        for u, v in cycle_pairs:
            pg *= g.sign(u, v)
            ph *= h.sign(u, v)
        laws["cycle_sign"] += pg == ph
    agree = 0
    for i in range(200):
        n = rng.randint(1, 10)
        g = oracles.random_signed_graph(rng, n, rng.random())
        if i % 2:
            h = switch(g, {v for v in range(n) if rng.random() < 0.5})
        else:
            h = SignedGraph(n, [(u, v, rng.choice((POS, NEG))) for u, v, _ in g.edges()])
        found = switching_equivalent(g, h)
        truth = oracles.equivalent_by_enumeration(g, h)
        agree += (found is not None) == truth and (found is None or switch(g, found) == h)
    ok = all(v == 1000 for v in laws.values()) and agree == 200
    verdict(8, ok, f"laws {laws} of 1000; switching_equivalent vs 2^n enumeration {agree}/200")


def test_09_bound_evaluator(verdict):
    rng = random.Random(909)
    f_ok = ratio_ok = 0
    for _ in range(50):
        t = rng.randint(2, 12)
        j = rng.randint(0, t - 1)
        c = rng.randint(8, 4 * lemma1_order(t))
        f_ok += oracles.sig_digits_agree(bound_summand_f(j, t, c), oracles.f_decimal(j, t, c), 10)
        if j < t - 1:
            ratio = oracles.f_decimal(j + 1, t, c) / oracles.f_decimal(j, t, c)
            ratio_ok += oracles.sig_digits_agree(summand_ratio(j, t, c), ratio, 10)
        else:
            ratio_ok += 1
    verdicts = {}
    consistent = True
    for t in range(3, 13):
        c = lemma1_order(t)
        b = bad_event_bound(t, c)
        total = sum(oracles.f_decimal(j, t, c) for j in range(t))
        consistent &= b.below_one == (total < 1) and oracles.sig_digits_agree(b.sum, total, 10)
        verdicts[t] = "<1" if b.below_one else ">=1"
    ok = f_ok == 50 and ratio_ok == 50 and consistent
    verdict(9, ok, f"f(j) {f_ok}/50, ratio identity {ratio_ok}/50 to 10 digits; "
                   f"sum f(j) below one by t: {verdicts}")


def _cli(*args, cwd):
    proc = subprocess.run([sys.executable, "-m", "signedhom", *args], cwd=cwd,
                          capture_output=True, check=False)
    return proc.returncode, proc.stdout


def test_10_determinism(verdict, tmp_path):
    g = random_bounded_degree_graph(30, 3, False, 0.5, seed=3)
    (tmp_path / "g.sg").write_text(emit_signed_graph(g))
    (tmp_path / "r.sg").write_text(emit_signed_graph(
        random_bounded_degree_graph(12, 3, True, 0.5, seed=3)))
    (tmp_path / "weak.sg").write_text(emit_signed_graph(SignedGraph.complete(20, POS)))

    def files(*names):
        return tuple((tmp_path / n).read_bytes() for n in names)

    runs = {
        "gen-target": (["gen-target", "--t", "3", "--seed", "11", "-o", "c.sg", "--cert", "c.cert"],
                       ("c.sg", "c.cert")),
        "mc-rate": (["mc-rate", "--t", "3", "--order", "16", "--trials", "30", "--seed", "5"], ()),
        "random-graph": (["random-graph", "--n", "40", "--delta", "3", "--seed", "9"], ()),
        "pipeline": (["pipeline", "g.sg", "--seed", "11", "--target-out", "t.sg"], ("t.sg",)),
        "pipeline-regular": (["pipeline", "r.sg", "--seed", "11", "-o", "h.txt"], ("h.txt",)),
        "verify-property": (["verify-property", "--t", "3", "weak.sg"], ()),
        "prob-bound": (["prob-bound", "--t", "5"], ()),
    }
    parallel = {"gen-target", "mc-rate", "pipeline", "pipeline-regular", "verify-property"}
    identical = {}
    for name, (argv, outputs) in runs.items():
        first = _cli(*argv, cwd=tmp_path) + files(*outputs)
        second = _cli(*argv, cwd=tmp_path) + files(*outputs)
        same = first == second
        if name in parallel:
            same &= _cli(*argv, "--workers", "4", cwd=tmp_path) + files(*outputs) == first
        identical[name] = same
    verdict(10, all(identical.values()),
            f"byte-identical reruns (and 1 vs 4 workers where supported): {identical}")
