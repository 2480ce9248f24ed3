"""Command-line front end.

    ellipstolarsky eval --r 0.5 --target E,K,A5,s_family(2)
    ellipstolarsky table --grid 100 --ids A5,A8 --out errors.csv
    ellipstolarsky verify --level fast
    ellipstolarsky scan-p --lo -1 --hi 2.25 --steps 14 --grid 500 --out scan.csv
    ellipstolarsky conjecture --grid 2000 --out h.csv

Exit codes: 0 success, 1 verification failure, 2 domain or flag error,
3 I/O error.  Numbers are printed with repr (shortest round-trip form).
"""

from __future__ import annotations

import argparse
import csv
import io
import re
import sys

import mpmath
import numpy as np

from .approximations import ApproxId, approx_value, fit_leading_order, max_abs_error, s_family, signed_error
from .errors import DomainError
from .special_fn import TWO_OVER_PI, Modulus, ellip_e, ellip_k, ellip_ke_mp
from .stolarsky import stolarsky_mp

EXIT_OK, EXIT_VERIFY, EXIT_DOMAIN, EXIT_IO = 0, 1, 2, 3

_S_FAMILY = re.compile(r"^s_family\((?P<p>[^()]+)\)$", re.IGNORECASE)


class UsageError(Exception):
    pass


def _num(x) -> str:
    return repr(float(x))


def _split(text: str) -> list[str]:
    # commas inside s_family(...) never occur, so a plain split is enough
    items = [t.strip() for t in text.split(",") if t.strip()]
    if not items:
        raise UsageError("empty list")
    return items


def _parse_ids(text: str) -> list[ApproxId]:
    try:
        return [ApproxId.parse(t) for t in _split(text)]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _open_grid(n: int) -> np.ndarray:
    return np.arange(1, n + 1) / (n + 1)


def _write_csv(path: str, rows) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        fh.write(buf.getvalue())


# -- eval -------------------------------------------------------------------------

def cmd_eval(args) -> int:
    m = Modulus.from_r(args.r)
    for target in _split(args.target):
        match = _S_FAMILY.match(target)
        if match:
            p = float(match.group("p"))
            if p > 2.25:
                raise DomainError(f"s_family needs p <= 9/4, got {p!r}")
            value = s_family(p, m)
            print(f"s_family({_num(p)}) {_num(value)} {_num(value - TWO_OVER_PI * ellip_e(m))}")
        elif target.upper() == "E":
            print(f"E {_num(ellip_e(m))}")
        elif target.upper() == "K":
            print(f"K {_num(ellip_k(m))}")
        else:
            try:
                aid = ApproxId.parse(target)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            print(f"{aid.name} {_num(approx_value(aid, m))} {_num(signed_error(aid, m))}")
    return EXIT_OK


# -- table ------------------------------------------------------------------------

def table_rows(grid_n: int, ids: list[ApproxId]):
    header = ["r", "rprime", "two_over_pi_E"]
    for aid in ids:
        header += [f"{aid.name}_value", f"{aid.name}_error"]
    rows = [header]
    for r in _open_grid(grid_n):
        m = Modulus.from_r(float(r))
        e = TWO_OVER_PI * ellip_e(m)
        row = [_num(m.r), _num(m.r_comp), _num(e)]
        for aid in ids:
            value = approx_value(aid, m)
            row += [_num(value), _num(value - e)]
        rows.append(row)
    summary = {"max_abs_error": [], "argmax_r": [], "fit_n0": [], "fit_eps": []}
    for aid in ids:
        worst, where = max_abs_error(aid)
        n0, eps = fit_leading_order(aid)
        summary["max_abs_error"].append(_num(worst))
        summary["argmax_r"].append(_num(where))
        summary["fit_n0"].append(str(n0))
        summary["fit_eps"].append(_num(eps))
    for label, values in summary.items():
        row = [label, "", ""]
        for v in values:
            row += [v, ""]
        rows.append(row)
    return rows


def cmd_table(args) -> int:
    if args.grid < 2:
        raise UsageError("--grid must be at least 2")
    _write_csv(args.out, table_rows(args.grid, _parse_ids(args.ids)))
    return EXIT_OK


# -- verify -----------------------------------------------------------------------

def cmd_verify(args) -> int:
    from .analysis.suite import run_checks

    results = run_checks(args.level)
    failed = []
    for res in results:
        if res.passed:
            tag = "PASS"
        elif res.required:
            tag = "FAIL"
            failed.append(res.name)
        else:
            tag = "INFO"
        print(f"{tag} {res.name}: {res.detail}")
    if failed:
        print("failing checks: " + ", ".join(failed))
        return EXIT_VERIFY
    return EXIT_OK


# -- scan-p -----------------------------------------------------------------------

def expected_direction(p: float) -> str:
    if p <= 1.75 + 1e-12:
        return "increasing"
    if 2.0 - 1e-12 <= p <= 2.25:
        return "decreasing"
    return "unclassified"


def _difference_sign(p: float, r: float) -> int:
    """Sign of (2/pi) E(r) - S_{9/2-p,p}(1, r').

    The float difference is trusted when it is clearly above round-off;
    otherwise (small r, where it shrinks like r^8) mpmath decides.
    """
    from .analysis.ratios import diff_E_minus_S

    d = diff_E_minus_S(4.5 - p, p, r)
    if abs(d) > 1e-12:
        return 1 if d > 0 else -1
    with mpmath.workdps(50):
        mr = mpmath.mpf(r)
        _, e = ellip_ke_mp(mr, 50)
        s = stolarsky_mp(mpmath.mpf(4.5) - p, p, 1, mpmath.sqrt((1 - mr) * (1 + mr)), 50)
        return int(mpmath.sign(2 * e / mpmath.pi - s))


def scan_p_rows(lo: float, hi: float, steps: int, grid_n: int):
    from .analysis.ratios import ratio_R
    from .analysis.scan import report_from_values

    rows = [["p", "direction", "expected", "difference_sign", "n_positive", "n_negative", "max_violation"]]
    rs = _open_grid(grid_n)
    for p in np.linspace(lo, hi, steps):
        p = float(p)
        rep = report_from_values(rs, [ratio_R(p, float(r)) for r in rs])
        signs = [_difference_sign(p, float(r)) for r in rs]
        pos, neg = signs.count(1), signs.count(-1)
        pattern = "positive" if pos == len(signs) else "negative" if neg == len(signs) else "mixed"
        rows.append([_num(p), rep.direction, expected_direction(p), pattern, str(pos), str(neg),
                     _num(rep.max_violation)])
    return rows


def cmd_scan_p(args) -> int:
    if args.hi > 2.25:
        raise DomainError(f"--hi must be <= 9/4, got {args.hi!r}")
    if args.lo > args.hi:
        raise UsageError("--lo must not exceed --hi")
    if args.steps < 1:
        raise UsageError("--steps must be at least 1")
    if args.grid < 16:
        raise UsageError("--grid must be at least 16")
    rows = scan_p_rows(args.lo, args.hi, args.steps, args.grid)
    _write_csv(args.out, rows)
    for row in rows[1:]:
        print(" ".join(row[:4]))
    return EXIT_OK


# -- conjecture -------------------------------------------------------------------

def cmd_conjecture(args) -> int:
    from .analysis.conjecture import conjecture_scan

    if args.grid < 100:
        raise UsageError("--grid must be at least 100")
    res = conjecture_scan(args.grid)
    rows = [["r", "H"]] + [[_num(r), _num(h)] for r, h in zip(res.grid, res.h_values)]
    _write_csv(args.out, rows)
    print(f"p0 {_num(res.p0)}")
    print(f"single_peaked {res.single_peaked} (rise {res.rise.direction}, fall {res.fall.direction})")
    print(f"r0_estimate {_num(res.r0_estimate)}")
    print(f"inequality_holds {res.inequality_holds} (min margin/r^12 {_num(res.worst_margin)})")
    return EXIT_OK


# -- entry point ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ellipstolarsky",
                                     description="Stolarsky-mean bounds for the complete elliptic integral E.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate E, K, approximations or s_family(p) at one modulus")
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--target", required=True, help="comma list of E, K, A1..A8, s_family(p)")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("table", help="tabulate approximation errors as CSV")
    p.add_argument("--grid", type=int, required=True)
    p.add_argument("--ids", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--level", choices=("fast", "full"), default="fast")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan-p", help="monotonicity of R_p across a range of p")
    p.add_argument("--lo", type=float, required=True)
    p.add_argument("--hi", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--grid", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_scan_p)

    p = sub.add_parser("conjecture", help="explore the single-peak conjecture at p0")
    p.add_argument("--grid", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_conjecture)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
