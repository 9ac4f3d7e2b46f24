"""Command-line interface.

Exit codes: 0 success/true/exists, 1 false/not found/property fails,
2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

import mpmath

from . import embed, formats, generate, hom, target
from .graph import GraphError, graph_stats, switching_equivalent

OK, NO, USAGE = 0, 1, 2


def _out(args, text: str, path=None) -> None:
    if path:
        formats.write_text(path, text)
    else:
        sys.stdout.write(text)


def _fmt(x) -> str:
    return mpmath.nstr(x, 12, min_fixed=-4, max_fixed=6)


def cmd_gen_target(args) -> int:
    c, cert = target.construct_target(
        args.t, args.order, args.seed, args.max_attempts, workers=args.workers
    )
    formats.write_text(args.output, formats.emit_signed_graph(c))
    if args.cert:
        formats.write_text(args.cert, cert.to_text())
    sys.stdout.write(cert.to_text())
    return OK


def cmd_verify_property(args) -> int:
    c = formats.read_graph(args.file)
    report = target.has_property_P(c, args.t, full=args.full, workers=args.workers)
    print(f"t {report.t}")
    print(f"passed {'yes' if report.passed else 'no'}")
    if report.witness is not None:
        tup, sig = report.witness
        print("witness " + " ".join(f"{v}{'+' if s > 0 else '-'}" for v, s in zip(tup, sig)))
    print(f"min_margin {report.min_margin}")
    return OK if report.passed else NO


def cmd_verify_cert(args) -> int:
    with open(args.cert, encoding="utf-8") as fh:
        cert = target.TargetCertificate.from_text(fh.read())
    g = formats.read_graph(args.target) if args.target else None
    ok = target.verify_certificate(cert, g, workers=args.workers)
    print(f"certificate {'valid' if ok else 'invalid'}")
    return OK if ok else NO


def cmd_hom(args) -> int:
    g, h = formats.read_graph(args.source), formats.read_graph(args.target)
    found = hom.find_signed_hom(g, h)
    if found is None:
        print("no signed homomorphism")
        return NO
    _out(args, formats.emit_hom(found, hom.check_signed_hom(g, h, found)), args.output)
    return OK


def cmd_verify_hom(args) -> int:
    g, h = formats.read_graph(args.source), formats.read_graph(args.target)
    with open(args.hom, encoding="utf-8") as fh:
        mapping = formats.parse_hom(fh.read())
    try:
        ok = hom.check_signed_hom(g, h, mapping)
    except hom.HomError as exc:
        print(f"invalid: {exc}")
        return NO
    print(f"homomorphism {'valid' if ok else 'invalid'}")
    return OK if ok else NO


def cmd_switch_equiv(args) -> int:
    a, b = formats.read_graph(args.first), formats.read_graph(args.second)
    found = switching_equivalent(a, b)
    if found is None:
        print("not switching equivalent")
        return NO
    print("switch " + " ".join(str(v) for v in sorted(found)))
    return OK


def _chromatic(args, fn) -> int:
    g = formats.read_graph(args.file)
    w = fn(g, args.max_order)
    if w is None:
        print(f"exceeds {args.max_order if args.max_order is not None else g.n}")
        return NO
    print(f"value {w.value}")
    print("# target")
    sys.stdout.write(formats.emit_signed_graph(w.target))
    print("# homomorphism")
    sys.stdout.write(formats.emit_hom(w.hom, hom.check_signed_hom(g, w.target, w.hom)))
    return OK


def cmd_chi_s(args) -> int:
    return _chromatic(args, hom.signed_chromatic_number)


def cmd_chi_2(args) -> int:
    return _chromatic(args, hom.two_ec_chromatic_number)


def cmd_embed(args) -> int:
    g, c = formats.read_graph(args.file), formats.read_graph(args.target)
    stats = graph_stats(g)
    if stats.is_regular and stats.max_degree == args.t:
        if not args.augmented_out:
            print("regular input needs an augmented target: pass --augmented-out", file=sys.stderr)
            return USAGE
        mapping, aug = embed.embed_with_regular_fix(g, c, args.t)
        tgt = aug.graph
        formats.write_text(args.augmented_out, formats.emit_signed_graph(tgt))
    else:
        mapping, tgt = embed.greedy_embed(g, c, args.t), c
    _out(args, formats.emit_hom(mapping, hom.check_signed_hom(g, tgt, mapping)), args.output)
    return OK


def cmd_pipeline(args) -> int:
    g = formats.read_graph(args.file)
    res = embed.end_to_end(g, seed=args.seed, max_attempts=args.max_attempts, workers=args.workers)
    if args.target_out:
        formats.write_text(args.target_out, formats.emit_signed_graph(res.target))
    if args.cert_out:
        formats.write_text(args.cert_out, res.certificate.to_text())
    print(f"# seed {args.seed}")
    print(f"# max_degree {graph_stats(g).max_degree}")
    print(f"# target_order {res.target.n}")
    print(f"# regular_fix {'yes' if res.augmented else 'no'}")
    sys.stdout.write("".join("# " + ln + "\n" for ln in res.certificate.to_text().splitlines()))
    _out(args, formats.emit_hom(res.hom, hom.check_signed_hom(g, res.target, res.hom)), args.output)
    return OK


def cmd_bounds(args) -> int:
    lower, upper = target.theorem_bounds(args.delta)
    print(f"lower {lower:.12g}")
    print(f"upper {upper}")
    return OK


def cmd_prob_bound(args) -> int:
    order = args.order if args.order is not None else target.lemma1_order(args.t)
    for j in range(args.t):
        print(f"f({j}) {_fmt(target.bound_summand_f(j, args.t, order))}")
    b = target.bad_event_bound(args.t, order)
    print(f"sum {_fmt(b.sum)}")
    print(f"closed_form {_fmt(b.closed_form)}")
    print(f"below_one {'yes' if b.below_one else 'no'}")
    return OK if b.below_one else NO


def cmd_mc_rate(args) -> int:
    rate = target.monte_carlo_property_rate(
        args.t, args.order, args.trials, args.seed, workers=args.workers
    )
    print(f"rate {rate:.6f}")
    return OK


def cmd_random_graph(args) -> int:
    g = generate.random_bounded_degree_graph(
        args.n, args.delta, args.regular, float(Fraction(args.neg_prob)), args.seed
    )
    text = f"# seed {args.seed}\n" + formats.emit_signed_graph(g)
    _out(args, text, args.output)
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="signedhom", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def workers(sp):
        sp.add_argument("--workers", type=int, default=1, help="verification processes")

    sp = sub.add_parser("gen-target", help="construct a certified P(t-1) target")
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--order", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-attempts", type=int, default=target.DEFAULT_MAX_ATTEMPTS)
    sp.add_argument("-o", "--output", required=True)
    sp.add_argument("--cert")
    workers(sp)
    sp.set_defaults(func=cmd_gen_target)

    sp = sub.add_parser("verify-property", help="check property P(t-1)")
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--full", action="store_true", help="compute the exact minimum margin")
    sp.add_argument("file")
    workers(sp)
    sp.set_defaults(func=cmd_verify_property)

    sp = sub.add_parser("verify-cert", help="re-derive and re-check a target certificate")
    sp.add_argument("cert")
    sp.add_argument("--target")
    workers(sp)
    sp.set_defaults(func=cmd_verify_cert)

    sp = sub.add_parser("hom", help="search for a signed homomorphism")
    sp.add_argument("source")
    sp.add_argument("target")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_hom)

    sp = sub.add_parser("verify-hom", help="check a homomorphism file")
    sp.add_argument("source")
    sp.add_argument("target")
    sp.add_argument("hom")
    sp.set_defaults(func=cmd_verify_hom)

    sp = sub.add_parser("switch-equiv", help="test switching equivalence")
    sp.add_argument("first")
    sp.add_argument("second")
    sp.set_defaults(func=cmd_switch_equiv)

    for name, fn, what in (("chi-s", cmd_chi_s, "signed"), ("chi-2", cmd_chi_2, "2-edge-colored")):
        sp = sub.add_parser(name, help=f"exact {what} chromatic number")
        sp.add_argument("file")
        sp.add_argument("--max-order", type=int)
        sp.set_defaults(func=fn)

    sp = sub.add_parser("embed", help="greedy embedding into a certified target")
    sp.add_argument("file")
    sp.add_argument("--target", required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("-o", "--output")
    sp.add_argument("--augmented-out", help="where to write the target for regular inputs")
    sp.set_defaults(func=cmd_embed)

    sp = sub.add_parser("pipeline", help="construct a target and embed")
    sp.add_argument("file")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-attempts", type=int, default=target.DEFAULT_MAX_ATTEMPTS)
    sp.add_argument("-o", "--output")
    sp.add_argument("--target-out")
    sp.add_argument("--cert-out")
    workers(sp)
    sp.set_defaults(func=cmd_pipeline)

    sp = sub.add_parser("bounds", help="lower and upper bounds for max degree D")
    sp.add_argument("--delta", type=int, required=True)
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("prob-bound", help="evaluate the union bound")
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--order", type=int)
    sp.set_defaults(func=cmd_prob_bound)

    sp = sub.add_parser("mc-rate", help="empirical rate of property P(t-1)")
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--trials", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    workers(sp)
    sp.set_defaults(func=cmd_mc_rate)

    sp = sub.add_parser("random-graph", help="random connected bounded-degree signed graph")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--delta", type=int, required=True)
    sp.add_argument("--regular", action="store_true")
    sp.add_argument("--neg-prob", default="1/2")
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_random_graph)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, formats.FormatError, GraphError, ValueError,
            hom.BudgetExceeded, target.PropertyBudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except (target.ConstructionFailed, embed.EmbeddingError) as exc:
        print(f"failed: {exc}", file=sys.stderr)
        return NO


if __name__ == "__main__":
    sys.exit(main())
