"""Command-line front end: ``homcon <command> [options]``.

Exit status: 0 success, 2 usage or parse error, 3 resource limit,
4 a checked claim (or the necklace recursion) failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from math import comb

from . import box, families, rect
from .chain import euler_characteristic, homology_ranks
from .errors import ClaimViolation, GroupSpecError, LimitExceeded, Limits
from .morse import certify
from .orbit_complex import ComplexKind, all_kinds, build, render_label
from .permgroup import (
    format_group,
    has_odd_orbit,
    orbit_polynomial,
    parse_group,
    self_complementary_orbit_count,
    subset_orbits,
)
from .qpoly import QPolynomial, is_symmetric_unimodal, macmahon, q_binomial

SCHEMA = "homcon/1"


def _coeffs(p: QPolynomial) -> list[int]:
    return list(p.coeffs)


def _claim(ok: bool, what: str, failures: list[str]) -> bool:
    if not ok:
        failures.append(what)
    return ok


def _fmt_part(lam) -> str:
    return "(" + ",".join(map(str, lam)) + ")"


def _fmt_tab(T) -> str:
    return "[" + ",".join("[" + ",".join(map(str, row)) + "]" for row in T) + "]"


# -- commands ---------------------------------------------------------------
# Each returns (report dict, csv header, csv rows, failed claims).


def cmd_orbits(args, limits):
    g = parse_group(args.group)
    x = orbit_polynomial(g, limits)
    sc = self_complementary_orbit_count(g, limits)
    orbits = subset_orbits(g, limits)
    report = {
        "command": "orbits",
        "group": format_group(g),
        "n": g.n,
        "orbit_polynomial": str(x),
        "coefficients": _coeffs(x),
        "X(1)": x(1),
        "X(-1)": x(-1),
        "self_complementary_orbits": sc,
        "symmetric_unimodal": is_symmetric_unimodal(x),
        "orbits": [{"size": o.member_size, "representative": render_label(o.canonical), "orbit_size": o.orbit_size} for o in orbits],
    }
    failures: list[str] = []
    if args.check:
        _claim(x(-1) == sc, "X(G,-1) equals the self-complementary orbit count", failures)
        _claim(x(1) == len(orbits), "X(G,1) equals the number of orbits", failures)
        _claim(report["symmetric_unimodal"], "X(G,q) is symmetric and unimodal", failures)
    rows = [[o["size"], o["representative"], o["orbit_size"]] for o in report["orbits"]]
    return report, ["size", "representative", "orbit_size"], rows, failures


def cmd_homology(args, limits):
    g = parse_group(args.group)
    kind = ComplexKind(args.kind)
    c = build(g, kind, limits)
    ranks = homology_ranks(c, args.threads)
    if kind.reindexed:
        ranks = ranks[::-1]
    x = orbit_polynomial(g, limits)
    euler = euler_characteristic(c) * ((-1) ** g.n if kind.reindexed else 1)
    report = {
        "command": "homology",
        "group": format_group(g),
        "kind": kind.value,
        "n": g.n,
        "dims": c.dims()[::-1] if kind.reindexed else c.dims(),
        "homology": ranks,
        "euler_characteristic": euler,
        "X(-1)": x(-1),
    }
    failures: list[str] = []
    if args.check:
        four = all_kinds(g, limits, args.threads)
        report["all_kinds"] = four.homology
        report["duality"] = four.duality_holds()
        _claim(four.duality_holds(), "duality between the four complexes", failures)
        _claim(all(four.squares_to_zero.values()), "d^2 = 0 for all four kinds", failures)
        _claim(all(e == x(-1) for e in four.euler.values()), "Euler characteristic equals X(G,-1)", failures)
        if has_odd_orbit(g):
            _claim(not any(ranks), "acyclic when some point orbit is odd", failures)
        else:
            h = four.homology["inv-d"]
            _claim(h[0] == 1 and (len(h) < 2 or h[1] == 0), "H_0 = 1 and H_1 = 0 with all point orbits even", failures)
    rows = [[i, d, h] for i, (d, h) in enumerate(zip(report["dims"], ranks))]
    return report, ["rank", "dim", "homology"], rows, failures


def cmd_rect(args, limits):
    k, l = args.k, args.l
    sc = rect.build_rect_complex(k, l, limits)
    m = rect.rect_matching(k, l)
    rep = certify(sc, m)
    crit = [lam for level in rep.critical for lam in level]
    report = {
        "command": "rect",
        "k": k,
        "l": l,
        "dims": sc.complex.dims(),
        "acyclic": rep.acyclic,
        "unit_coefficients": rep.unit_coefficients,
        "parity_condition": rep.parity_condition,
        "concluded_homology": rep.concluded_homology,
        "critical": [list(lam) for lam in crit],
        "phi": [list(rect.phi(lam, k, l)) for lam in crit],
    }
    failures: list[str] = []
    _claim(rep.concluded_homology is not None, "Morse matching certified", failures)
    if args.check:
        oracle = homology_ranks(sc.complex, args.threads)
        report["homology"] = oracle
        _claim(rep.concluded_homology == oracle, "Morse homology equals GF(2) homology", failures)
        target = rect.self_complementary_partitions(k, l)
        _claim(len(crit) == q_binomial(k, l)(-1) == len(target), "critical count equals X(k,l,-1)", failures)
        images = {tuple(p) for p in report["phi"]}
        _claim(images == set(target) and len(images) == len(crit), "phi is a bijection", failures)
        if k * l <= limits.max_points:
            cmp = rect.compare_with_wreath(k, l, limits)
            report["wreath_match"] = cmp.matches
            _claim(cmp.matches["inv-d"], "boundary equals the wreath orbit complex", failures)
    rows = [[_fmt_part(lam), sum(lam), _fmt_part(p)] for lam, p in zip(crit, report["phi"])]
    return report, ["critical", "rank", "phi"], rows, failures


def cmd_box(args, limits):
    r, c, t = args.r, args.c, args.t
    sc = box.build_box_complex(r, c, t, limits)
    m = box.box_matching(r, c, t, limits)
    rep = certify(sc, m)
    crit = [T for level in rep.critical for T in level]
    report = {
        "command": "box",
        "r": r,
        "c": c,
        "t": t,
        "dims": sc.complex.dims(),
        "matched_pairs": rep.matched_pairs,
        "acyclic": rep.acyclic,
        "unit_coefficients": rep.unit_coefficients,
        "parity_condition": rep.parity_condition,
        "concluded_homology": rep.concluded_homology,
        "critical": [[list(row) for row in T] for T in crit],
    }
    failures: list[str] = []
    _claim(rep.concluded_homology is not None, "Morse matching certified", failures)
    if args.check:
        x = macmahon(r, c, t)
        oracle = homology_ranks(sc.complex, args.threads)
        report["homology"] = oracle
        _claim(sc.complex.squares_to_zero(), "d^2 = 0", failures)
        _claim(rep.concluded_homology == oracle, "Morse homology equals GF(2) homology", failures)
        _claim(not any(oracle[1::2]), "homology concentrated in even ranks", failures)
        _claim(len(crit) == x(-1), "critical count equals X(r,c,t,-1)", failures)
        dominos = {box.to_domino(T, t) for T in crit}
        _claim(dominos == set(box.enumerate_domino_tableaux(r, c, t)), "domino bijection", failures)
        intervals = box.boolean_decomposition(r, c, t, limits)
        members = sorted(T for iv in intervals for T in iv.members())
        _claim(members == box.enumerate_ssyt(r, c, t, limits), "Boolean intervals partition the tableaux", failures)
        _claim(box.schur_sum(intervals) == QPolynomial.monomial(c * comb(r, 2)) * x, "Schur specialization", failures)
        report["intervals"] = [
            {"bottom": [list(row) for row in iv.bottom], "top": [list(row) for row in iv.top], "size": iv.size}
            for iv in intervals
        ]
    rows = [[_fmt_tab(T), box.rank(T)] for T in crit]
    return report, ["critical", "rank"], rows, failures


def cmd_necklace(args, limits):
    rep = families.necklace_report(args.n, args.check_conjecture, limits, args.threads)
    report = {
        "command": "necklace",
        "n": args.n,
        "homology": rep.homology,
        "orbit_polynomial": str(rep.orbit_polynomial),
        "X(-1)": rep.orbit_polynomial(-1),
        "euler_characteristic": rep.euler,
    }
    failures: list[str] = []
    if rep.conjecture_checked:
        report["conjecture_checked"] = True
        report["conjecture_holds"] = rep.conjecture_holds
        report["predicted"] = None if rep.predicted is None else _coeffs(rep.predicted)
        if rep.detail:
            report["detail"] = rep.detail
        _claim(bool(rep.conjecture_holds), "doubling recursion for necklace homology", failures)
    if args.check:
        _claim(rep.euler == rep.orbit_polynomial(-1), "Euler characteristic equals X(C_n,-1)", failures)
        if args.n % 2:
            _claim(not any(rep.homology), "acyclic for odd n", failures)
    rows = [[i, h] for i, h in enumerate(rep.homology)]
    return report, ["rank", "homology"], rows, failures


def cmd_isbell(args, limits):
    ib = families.isbell_group(args.b, limits)
    chk = families.concentration_failure_check(ib.group, limits, args.threads)
    order = ib.group.order(limits)
    report = {
        "command": "isbell",
        "b": ib.b,
        "d": ib.d,
        "n": ib.n,
        "group": format_group(ib.group),
        "characteristic_polynomial": families.poly_str(ib.char_poly),
        "order": order,
        "transitive": chk.transitive,
        "two_power_derangement": chk.two_power_derangement,
        "homology": chk.homology,
        "odd_homology": chk.odd_homology,
        "trace": ib.trace,
    }
    failures: list[str] = []
    _claim(order == ib.expected_order, "group order b * 2^d", failures)
    _claim(chk.transitive, "transitive", failures)
    _claim(chk.two_power_derangement is False, "no derangement of 2-power order", failures)
    _claim(chk.odd_homology, "homology not concentrated in even ranks", failures)
    rows = [[i, h] for i, h in enumerate(chk.homology)]
    return report, ["rank", "homology"], rows, failures


COMMANDS = {
    "orbits": cmd_orbits,
    "homology": cmd_homology,
    "rect": cmd_rect,
    "box": cmd_box,
    "necklace": cmd_necklace,
    "isbell": cmd_isbell,
}


# -- output -----------------------------------------------------------------


def render_text(report: dict, header, rows) -> str:
    lines = []
    for key, value in report.items():
        if key in ("orbits", "critical", "phi", "intervals", "trace", "all_kinds"):
            continue
        if isinstance(value, list):
            value = "{" + ", ".join(map(str, value)) + "}"
        lines.append(f"{key:<26} {value}")
    if "all_kinds" in report:
        for kind, ranks in report["all_kinds"].items():
            lines.append(f"  {kind:<24} {{" + ", ".join(map(str, ranks)) + "}")
    if "trace" in report:
        lines.extend("  " + t for t in report["trace"])
    if rows:
        widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
        lines.append("")
        lines.append("  ".join(str(h).ljust(w) for h, w in zip(header, widths)).rstrip())
        for row in rows:
            lines.append("  ".join(str(x).ljust(w) for x, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def render_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def render(report: dict, header, rows, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"schema": SCHEMA, **report}, indent=2) + "\n"
    if fmt == "csv":
        return render_csv(header, rows)
    return render_text(report, header, rows)


# -- argument parsing -------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--check", action="store_true", help="cross-validate against independent oracles")
    common.add_argument("--limit", type=int, default=None, help="raise the subset-sweep cap (default 24 points)")
    common.add_argument("--threads", type=int, default=1)

    parser = argparse.ArgumentParser(prog="homcon", description="Mod-2 homology of orbit, rectangle and box complexes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orbits", parents=[common], help="orbits of a group on subsets")
    p.add_argument("--group", required=True)
    p = sub.add_parser("homology", parents=[common], help="homology of an orbit complex")
    p.add_argument("--group", required=True)
    p.add_argument("--kind", choices=[k.value for k in ComplexKind], default="inv-d")
    p = sub.add_parser("rect", parents=[common], help="partitions in a k x l rectangle")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p = sub.add_parser("box", parents=[common], help="plane partitions in an r x c x t box")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p = sub.add_parser("necklace", parents=[common], help="necklace homology")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--check-conjecture", action="store_true", help="check the doubling recursion (even n)")
    p = sub.add_parser("isbell", parents=[common], help="transitive group without 2-power derangements")
    p.add_argument("--b", type=int, required=True)
    return parser


def _validate(args) -> None:
    for name in ("k", "l", "r", "c", "n", "b"):
        v = getattr(args, name, None)
        if v is not None and v < 1:
            raise ValueError(f"--{name} must be positive")
    if getattr(args, "t", None) is not None and args.t < 0:
        raise ValueError("--t must be non-negative")
    if args.threads < 1:
        raise ValueError("--threads must be positive")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _validate(args)
        limits = Limits.from_env(args.limit)
        report, header, rows, failures = COMMANDS[args.command](args, limits)
    except GroupSpecError as e:
        print(f"homcon: {e}", file=sys.stderr)
        return 2
    except LimitExceeded as e:
        print(f"homcon: {e}", file=sys.stderr)
        return 3
    except ClaimViolation as e:
        print(f"homcon: claim violated: {e}", file=sys.stderr)
        return 4
    except ValueError as e:
        print(f"homcon: {e}", file=sys.stderr)
        return 2
    if failures:
        report["failed_claims"] = failures
    sys.stdout.write(render(report, header, rows, args.format))
    if failures:
        for f in failures:
            print(f"homcon: claim violated: {f}", file=sys.stderr)
        return 4
    return 0


if __name__ == "__main__":
    sys.exit(main())
