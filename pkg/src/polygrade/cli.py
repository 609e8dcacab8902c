"""Command-line front end.

Exit status: 0 when every check passed, 1 when checks ran and found
violations, 2 on malformed input or validation errors.  Reports go to
stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import arity, blockshift, bundled, graded_core, homs, nary_groups, zpoly
from .formats import (
    FormatError,
    algebra_from_dict,
    dumps,
    group_from_dict,
    group_to_dict,
    hom_from_dict,
    load_json,
    polynomial_from_dict,
    ring_fields,
    ring_from_dict,
)
from .rational import format_rational, parse_rational

EXIT_OK, EXIT_VIOLATIONS, EXIT_INPUT = 0, 1, 2


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(dumps(payload))
    else:
        print(text)


def _group_from_args(args) -> nary_groups.FiniteNaryGroup:
    if args.group:
        return group_from_dict(load_json(args.group), str(args.group))
    if args.N is None or args.arity is None:
        raise FormatError("arguments", "give --group FILE or both --N and --arity")
    return nary_groups.affine_group(args.N, args.arity, args.shift)


def cmd_group_cayley(args) -> int:
    g = _group_from_args(args)
    table = nary_groups.cayley_table(g)
    payload = {"N": g.N, "arity": g.arity, "table": [int(x) for x in table.ravel()]}
    _emit(args, payload, nary_groups.cayley_grid(g))
    return EXIT_OK


def cmd_group_check(args) -> int:
    g = _group_from_args(args)
    assoc = nary_groups.is_totally_associative(g)
    comm = nary_groups.is_commutative(g)
    cert = nary_groups.derivedness_certificate(g)
    payload = {
        "group": group_to_dict(g),
        "totally_associative": assoc.ok,
        "associativity_witness": assoc.detail or None,
        "commutative": comm.ok,
        "identities": sorted(nary_groups.find_identities(g)),
        "zeros": sorted(nary_groups.find_zeros(g)),
        "querelements": [nary_groups.querelement(g, a) for a in g.carrier],
        "derivedness": {"has_identity": cert.has_identity, "gcd": cert.gcd_value,
                        "necessarily_nonderived": cert.necessarily_nonderived},
        "affine_shift": nary_groups.as_affine(g),
    }
    if args.compose:
        c = nary_groups.compose_power(g, args.compose)
        payload["composed"] = {"power": args.compose, "arity": c.arity, "affine_shift": nary_groups.as_affine(c),
                               "table": [int(x) for x in c.table().ravel()]}
    lines = [f"{k}: {v}" for k, v in payload.items() if k not in ("group", "composed")]
    if "composed" in payload:
        cp = payload["composed"]
        lines.append(f"composed power {cp['power']}: arity {cp['arity']}, affine shift {cp['affine_shift']}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if assoc.ok and comm.ok else EXIT_VIOLATIONS


def cmd_quantize(args) -> int:
    rows = arity.solve_higher_power_pairs(args.max, min_arity=args.min_arity)
    payload = {"max": args.max, "rows": [r._asdict() for r in rows]}
    text = ["ell_gp ell_alg n_gp n_alg  w"]
    text += [f"{r.ell_gp:>6} {r.ell_alg:>7} {r.n_gp:>4} {r.n_alg:>5} {r.w:>2}" for r in rows]
    _emit(args, payload, "\n".join(text))
    return EXIT_OK


def _report_text(report: graded_core.GradingReport) -> str:
    lines = [f"{report.kind}: {'PASS' if report.ok else 'FAIL'}"]
    for v in report.violations:
        lines.append(f"  violation: args {v.args} -> basis {v.out_index} has degree {v.actual_degree}, "
                     f"expected {v.expected_degree}")
    for d in report.deficiencies:
        lines.append(f"  deficiency: degrees {d.degrees} -> A({d.target}) rank {d.rank} < dim {d.dim} ({d.reason})")
    lines += [f"  note: {n}" for n in report.notes]
    return "\n".join(lines)


def _grading(args, report) -> int:
    _emit(args, report.to_dict(), _report_text(report))
    return EXIT_OK if report.ok else EXIT_VIOLATIONS


def cmd_grade_check(args) -> int:
    alg = algebra_from_dict(load_json(args.algebra), str(args.algebra))
    return _grading(args, graded_core.check_graded(alg))


def cmd_grade_strong(args) -> int:
    alg = algebra_from_dict(load_json(args.algebra), str(args.algebra))
    report = graded_core.check_strongly_graded(alg)
    report.notes.append(f"support size {len(graded_core.support(alg))} of {alg.group.N}")
    return _grading(args, report)


def cmd_grade_higher(args) -> int:
    alg = algebra_from_dict(load_json(args.algebra), str(args.algebra))
    if args.grading_group:
        op = group_from_dict(load_json(args.grading_group), str(args.grading_group))
    elif args.compose:
        op = nary_groups.compose_power(alg.group, args.compose)
    else:
        raise FormatError("arguments", "give --grading-group FILE or --compose POWER")
    report = graded_core.check_higher_power_graded(alg, args.ell_n, op, strong=args.strong, nesting=args.nesting)
    return _grading(args, report)


def cmd_blockshift_verify(args) -> int:
    xs = [parse_rational(x) for x in args.x]
    counts, failures = blockshift.oracle_suite(args.n, xs, args.cases, args.seed)
    payload = {"arities": args.n, "x_values": [format_rational(x) for x in xs], "counts": counts,
               "failures": failures, "ok": not failures}
    text = [f"block-shift oracle suite: {'PASS' if not failures else 'FAIL'}"]
    text += [f"  {k}: {v} checked" for k, v in counts.items()]
    text += [f"  failure: {f}" for f in failures]
    _emit(args, payload, "\n".join(text))
    return EXIT_OK if not failures else EXIT_VIOLATIONS


def cmd_zring_check(args) -> int:
    if args.ring:
        a, b, m, n = ring_fields(load_json(args.ring), str(args.ring))
    else:
        a, b, m, n = args.a, args.b, args.m_add, args.n_mul
    if None in (a, b, m, n):
        raise FormatError("arguments", "give --ring FILE or all of --a --b --m-add --n-mul")
    I, J = zpoly.shape_invariants(a, b, m, n)
    valid = I.denominator == 1 and I >= 0 and J.denominator == 1 and J >= 0
    minimal = zpoly.minimal_arities(a, b)
    payload = {"ring": {"a": a, "b": b, "m_add": m, "n_mul": n}, "I": format_rational(I), "J": format_rational(J),
               "valid": valid, "minimal_arities": {"m_add": minimal.m_add, "n_mul": minimal.n_mul, "cap": minimal.cap}}
    if valid:
        zpoly.make_ring(a, b, m, n)
    text = (f"Z^[{m},{n}]({a},{b}): I = {format_rational(I)}, J = {format_rational(J)} -> "
            f"{'valid' if valid else 'invalid'}\nminimal arities: m = {minimal.m_add}, n = {minimal.n_mul}")
    _emit(args, payload, text)
    return EXIT_OK if valid else EXIT_VIOLATIONS


def cmd_poly_grade(args) -> int:
    poly = polynomial_from_dict(load_json(args.poly), str(args.poly)) if args.poly else bundled.p6()
    if args.ring:
        ring = ring_from_dict(load_json(args.ring), str(args.ring))
    else:
        ring = zpoly.grading_ring_for_polynomials(poly.arity, args.n_mul)
    report = zpoly.check_polynomial_grading(poly, ring)
    payload = {"ring": ring.to_dict(), **report.to_dict()}
    text = [f"grading by {ring}: {'PASS' if report.ok else 'FAIL'}"]
    for c in report.checks:
        text.append(f"  {c.exponents}: product A({c.lhs_exponent}) power {c.power}, ring sum {c.rhs_sum}"
                    f"{'' if c.ok else '  MISMATCH'}")
    text += [f"  note: {n}" for n in report.notes]
    _emit(args, payload, "\n".join(text))
    return EXIT_OK if report.ok else EXIT_VIOLATIONS


def cmd_hom_check(args) -> int:
    src = algebra_from_dict(load_json(args.source), str(args.source))
    tgt = algebra_from_dict(load_json(args.target), str(args.target)) if args.target else src
    hom = hom_from_dict(load_json(args.hom), str(args.hom))
    report = homs.check_graded_homomorphism(hom, src, tgt)
    text = [f"graded homomorphism: {'PASS' if report.ok else 'FAIL'}"]
    for c in report.checks:
        text.append(f"  {c.name}: {'pass' if c.ok else 'FAIL'} ({c.samples} samples)")
        text += [f"    witness: {w}" for w in c.to_dict()["witnesses"]]
    _emit(args, report.to_dict(), "\n".join(text))
    return EXIT_OK if report.ok else EXIT_VIOLATIONS


def cmd_worked_example_suite(args) -> int:
    items = bundled.worked_example_suite()
    ok = all(i.ok for i in items)
    payload = {"ok": ok, "items": [i.to_dict() for i in items]}
    text = [f"{'ok ' if i.ok else 'BAD'} [expect {i.expect}] {i.name}" + (f"  ({i.detail})" if i.detail else "")
            for i in items]
    text.append(f"{sum(i.ok for i in items)}/{len(items)} items as expected")
    _emit(args, payload, "\n".join(text))
    return EXIT_OK if ok else EXIT_VIOLATIONS


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--budget", type=int, help="evaluation cap for exhaustive checks")

    parser = argparse.ArgumentParser(prog="polygrade", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def group_opts(p):
        p.add_argument("--group", help="group description JSON")
        p.add_argument("--N", type=int)
        p.add_argument("--arity", type=int)
        p.add_argument("--shift", type=int, default=0)

    p = sub.add_parser("group-cayley", parents=[common], help="print a Cayley table")
    group_opts(p)
    p.set_defaults(func=cmd_group_cayley)

    p = sub.add_parser("group-check", parents=[common], help="structural queries on an n-ary group")
    group_opts(p)
    p.add_argument("--compose", type=int, help="also report the composed law of this power")
    p.set_defaults(func=cmd_group_check)

    p = sub.add_parser("quantize", parents=[common], help="solve the higher-power arity equation")
    p.add_argument("--max", type=int, default=5)
    p.add_argument("--min-arity", type=int, default=3)
    p.set_defaults(func=cmd_quantize)

    for name, func, helptext in (("grade-check", cmd_grade_check, "check the grading inclusions"),
                                 ("grade-strong", cmd_grade_strong, "check strong grading")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--algebra", required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("grade-higher", parents=[common], help="check a higher-power grading")
    p.add_argument("--algebra", required=True)
    p.add_argument("--ell-n", type=int, default=1)
    p.add_argument("--grading-group", help="explicit grading law JSON")
    p.add_argument("--compose", type=int, help="use this power of the algebra's own grading group")
    p.add_argument("--strong", action="store_true")
    p.add_argument("--nesting", choices=("left",))
    p.set_defaults(func=cmd_grade_higher)

    p = sub.add_parser("blockshift-verify", parents=[common], help="block-shift matrix oracle suite")
    p.add_argument("--n", type=int, nargs="+", default=[2, 3, 4, 5])
    p.add_argument("--x", nargs="+", default=["1", "2", "3/2"])
    p.add_argument("--cases", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_blockshift_verify)

    p = sub.add_parser("zring-check", parents=[common], help="validate a polyadic integer ring")
    p.add_argument("--ring")
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--m-add", type=int)
    p.add_argument("--n-mul", type=int)
    p.set_defaults(func=cmd_zring_check)

    p = sub.add_parser("poly-grade", parents=[common], help="grade a block-shift polynomial by a ring")
    p.add_argument("--poly", help="polynomial JSON (defaults to the bundled 4-ary example)")
    p.add_argument("--ring")
    p.add_argument("--n-mul", type=int, default=7)
    p.set_defaults(func=cmd_poly_grade)

    p = sub.add_parser("hom-check", parents=[common], help="check a graded homomorphism")
    p.add_argument("--hom", required=True)
    p.add_argument("--source", required=True)
    p.add_argument("--target")
    p.set_defaults(func=cmd_hom_check)

    p = sub.add_parser("paper-suite", parents=[common], help="run every bundled worked example")
    p.set_defaults(func=cmd_worked_example_suite)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.budget is not None and args.budget < 1:
        print("error: --budget must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    saved = os.environ.get("POLYGRADE_BUDGET")
    if args.budget is not None:
        os.environ["POLYGRADE_BUDGET"] = str(args.budget)
    try:
        return args.func(args)
    except (FormatError, ValueError, TypeError, nary_groups.BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    finally:
        # main() may be called repeatedly in one process
        if saved is None:
            os.environ.pop("POLYGRADE_BUDGET", None)
        else:
            os.environ["POLYGRADE_BUDGET"] = saved


if __name__ == "__main__":
    sys.exit(main())
