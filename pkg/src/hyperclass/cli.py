"""Command-line surface: evaluate, verify, dump catalogs, emit plot data.

Exit codes: 0 success (all checks passed for `verify`), 1 verification
failures, 2 usage errors, 3 domain/degeneracy/convergence errors.

Number format: complex CLI literals are "re" or "re,im"; output uses 15
significant digits as "re", "re+imi" or "re-imi", all of which re-parse.
The environment variable HYPERCLASS_TOL scales every default numeric
tolerance (default 1.0).
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import families as fam
from . import numerics as N
from . import verify as V

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# Number parsing / formatting
# ---------------------------------------------------------------------------

_IMAG_RE = re.compile(
    r"^(?P<re>[+-]?[0-9.eE+-]*?)(?P<im>[+-][0-9.eE]+(?:[eE][+-]?[0-9]+)?)i$")


def parse_complex(s: str) -> complex:
    """Accepts "a", "a,b" (= a+bi) and the printed "a+bi" / "a-bi" forms."""
    s = s.strip()
    try:
        if "," in s:
            re_s, im_s = s.split(",", 1)
            return complex(float(re_s), float(im_s))
        if s.endswith("i"):
            m = _IMAG_RE.match(s)
            if m and m.group("re"):
                return complex(float(m.group("re")), float(m.group("im")))
            body = s[:-1]
            if body in ("", "+"):
                return 1j
            if body == "-":
                return -1j
            return complex(0.0, float(body))
        return complex(float(s), 0.0)
    except ValueError as exc:
        raise UsageError(f"cannot parse number {s!r}") from exc


def fmt_complex(z: complex) -> str:
    z = complex(z)
    if z.imag == 0:
        return f"{z.real:.15g}"
    sign = "+" if z.imag >= 0 else "-"
    return f"{z.real:.15g}{sign}{abs(z.imag):.15g}i"


# ---------------------------------------------------------------------------
# Parameter handling
# ---------------------------------------------------------------------------

FAMILY_CHOICES = ("2f1", "gegenbauer", "1f1", "hermite", "0f1")

# (classical flag names, Lie flag names) per family
FAMILY_FLAGS = {
    "2f1": (("a", "b", "c"), ("alpha", "beta", "mu")),
    "gegenbauer": (("a", "b"), ("alpha", "lam")),
    "1f1": (("a", "c"), ("theta", "alpha")),
    "hermite": (("a",), ("lam",)),
    "0f1": (("c",), ("alpha",)),
}

ALL_PARAM_FLAGS = ("a", "b", "c", "alpha", "beta", "mu", "theta", "lam")


def _add_param_flags(p: argparse.ArgumentParser) -> None:
    for name in ("a", "b", "c", "alpha", "beta", "mu", "theta"):
        p.add_argument(f"--{name}", type=str, default=None)
    p.add_argument("--lam", "--lambda", dest="lam", type=str, default=None)


def lie_params_from_args(family: str, args) -> tuple:
    """Resolve the Lie parameters from either flag set (complex values)."""
    classical, lie = FAMILY_FLAGS[family]
    given = {n for n in ALL_PARAM_FLAGS if getattr(args, n, None) is not None}
    c_given = given & set(classical)
    l_given = given & set(lie)
    # flags shared by both conventions (e.g. --alpha for 1f1) count once
    if c_given and l_given - c_given and l_given != c_given:
        if not (set(classical) <= given or set(lie) <= given):
            raise UsageError(
                f"mix of classical {sorted(c_given)} and Lie "
                f"{sorted(l_given)} parameters for family {family}")
    if set(lie) <= given:
        return tuple(parse_complex(getattr(args, n)) for n in lie)
    if set(classical) <= given:
        values = {n: parse_complex(getattr(args, n)) for n in classical}
        p = fam.classical_to_lie(fam.ClassicalParams(family, values))
        return tuple(p.values)
    raise UsageError(
        f"family {family} needs parameters {classical} (classical) "
        f"or {lie} (Lie)")


def _tol_scale() -> float:
    raw = os.environ.get("HYPERCLASS_TOL", "1.0")
    try:
        return float(raw)
    except ValueError:
        raise UsageError(f"HYPERCLASS_TOL must be a number, got {raw!r}")


# ---------------------------------------------------------------------------
# eval
# ---------------------------------------------------------------------------

def _route_label_2f1(w: complex) -> str:
    if abs(w) <= N.SERIES_RADIUS:
        return "series"
    if w != 1 and abs(w / (w - 1)) <= N.SERIES_RADIUS:
        return "pfaff"
    if abs(w) <= N.INNER_RADIUS or (w != 1
                                    and abs(w / (w - 1)) <= N.INNER_RADIUS):
        return "series/pfaff"
    return "connection"


def eval_with_method(family: str, lie: tuple, w: complex, method: str,
                     tol: float):
    """Return (value, method_used, error_estimate)."""
    if family == "2f1":
        al, be, mu = lie
        if method == "series":
            a, b, c = (1 + al + be + mu) / 2, (1 + al + be - mu) / 2, 1 + al
            v = N.hyp2f1_series(a, b, c, w)
            return v, "series", 1e-15 * abs(v)
        if method == "auto":
            v = N.eval_2F1(al, be, mu, w)
            return v, _route_label_2f1(w), 1e-13 * abs(v)
    elif family == "gegenbauer":
        al, la = lie
        if method in ("auto", "series"):
            v = N.eval_geg_S(al, la, w)
            label = _route_label_2f1((1 - w) / 2) if method == "auto" \
                else "series"
            return v, label, 1e-13 * abs(v)
    elif family == "1f1":
        th, al = lie
        if method in ("auto", "series"):
            v = N.eval_1F1(th, al, w)
            return v, "series", 1e-14 * abs(v)
    elif family == "hermite":
        (la,) = lie
        if method == "asymptotic":
            got, est = N.eval_2F0_asymptotic(la / 2 + 0.75, la / 2 + 0.25,
                                             -1 / (w * w), tol)
            v = w ** (-la - 0.5) * got
            return v, "asymptotic", est * abs(w ** (-la - 0.5))
        if method == "quadrature":
            from . import quadrature
            v = quadrature.hermite_S_solution(la, w, tol)
            return v, "quadrature", tol * abs(v)
        if method == "auto":
            v = N.eval_hermite_S(la, w, tol)
            if abs(w) >= N.ASYMPTOTIC_CROSSOVER:
                _, est = N.eval_2F0_asymptotic(la / 2 + 0.75, la / 2 + 0.25,
                                               -1 / (w * w), tol)
                if est <= tol:
                    return v, "asymptotic", est * abs(v)
            return v, "quadrature", tol * abs(v)
    elif family == "0f1":
        (al,) = lie
        if method in ("auto", "series"):
            v = N.eval_0F1(al, w)
            return v, "series", 1e-15 * abs(v)
    raise UsageError(f"method {method!r} is not available for {family}")


_NORMALIZED = {
    ("2f1", "bold"): lambda lie, w: N.bold_F_2f1(*lie, w),
    ("2f1", "I"): lambda lie, w: N.FI_2f1(*lie, w),
    ("gegenbauer", "bold"): lambda lie, w: N.bold_S_geg(*lie, w),
    ("gegenbauer", "I"): lambda lie, w: N.SI_geg(*lie, w),
    ("1f1", "bold"): lambda lie, w: N.bold_F_1f1(*lie, w),
    ("1f1", "I"): lambda lie, w: N.FI_1f1(*lie, w),
    ("hermite", "I"): lambda lie, w: N.SI_hermite(*lie, w),
    ("0f1", "bold"): lambda lie, w: N.bold_F_0f1(*lie, w),
}


def cmd_eval(args) -> int:
    family = args.family
    lie = lie_params_from_args(family, args)
    if args.w is None:
        raise UsageError("eval needs --w")
    w = parse_complex(args.w)
    tol = 1e-11 * _tol_scale()
    if args.norm != "plain":
        key = (family, args.norm)
        if key not in _NORMALIZED:
            raise UsageError(
                f"normalization {args.norm!r} is not defined for {family}")
        v = _NORMALIZED[key](lie, w)
        print(fmt_complex(v))
        print(f"method: normalized({args.norm})")
        print(f"error: {1e-13 * abs(v):.2e}")
        return EXIT_OK
    v, method, est = eval_with_method(family, lie, w, args.method, tol)
    print(fmt_complex(v))
    print(f"method: {method}")
    print(f"error: {est:.2e}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _report_text(report) -> str:
    lines = []
    for c in report.checks:
        d = c.to_dict()
        err = "" if d["error"] is None else f"  err={d['error']:.2e}"
        lines.append(f"{d['status']:>8}  {d['kind']:8}  {d['id']}{err}")
    lines.append(f"suite={report.suite} family={report.family} "
                 f"seed={report.seed} passed={report.passed} "
                 f"failed={report.failed} skipped={report.skipped}")
    return "\n".join(lines)


def cmd_verify(args) -> int:
    scale = _tol_scale()
    custom_params = None
    try:
        custom_params = lie_params_from_args(
            args.suite if args.suite in FAMILY_CHOICES else "2f1", args)
    except UsageError:
        custom_params = None
    if args.suite == "kummer" and custom_params is not None:
        # custom parameter/point run of the 36 pairwise checks
        al, be, mu = custom_params
        points = (parse_complex(args.w),) if args.w else V.KUMMER_POINTS
        tol = (args.tol if args.tol is not None
               else V.DEFAULT_TOLS["kummer"] * scale)
        checks = []
        for key in N._KUMMER_ORDER:
            for r1 in range(4):
                for r2 in range(r1 + 1, 4):
                    checks.append(V._numeric_check(
                        f"kummer:{key}:{r1}{r2}",
                        f"expressions {r1} and {r2} of the solution {key}",
                        lambda key=key, r1=r1, r2=r2:
                        V.kummer_pair_residual(al, be, mu, key, r1, r2,
                                               points),
                        tol))
        report = V.SuiteReport("kummer", args.family or "2f1", args.seed,
                               checks)
    else:
        report = V.run_suite(args.suite, family=args.family, seed=args.seed,
                             tol=args.tol, tol_scale=scale)
    if args.format == "json":
        print(json.dumps(report.to_dict()))
    else:
        print(_report_text(report))
    return EXIT_OK if report.failed == 0 else EXIT_VERIFY_FAILED


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------

def _catalog_sections(family: str) -> dict:
    cat = fam.catalog(family)
    sections = {
        "transmutations": cat.transmutations,
        "factorizations": cat.factorizations,
        "symmetries": cat.symmetries,
        "recurrences": cat.recurrences,
        "integral_representations": cat.integral_reps,
    }
    return {
        name: [{"id": r.id, "paper_ref": r.location} for r in rows]
        for name, rows in sections.items()
    }


def cmd_catalog(args) -> int:
    sections = _catalog_sections(args.family)
    if args.format == "json":
        out = {
            "family": args.family,
            "sections": sections,
            "counts": {k: len(v) for k, v in sections.items()},
        }
        print(json.dumps(out))
    else:
        for name, rows in sections.items():
            print(f"[{name}] ({len(rows)})")
            for r in rows:
                print(f"  {r['id']:16s} {r['paper_ref']}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# plotdata
# ---------------------------------------------------------------------------

def cmd_plotdata(args) -> int:
    family = args.family
    lie = lie_params_from_args(family, args)
    z0 = parse_complex(args.from_)
    z1 = parse_complex(args.to)
    n = args.n
    if n < 1:
        raise UsageError("--n must be at least 1")
    tol = 1e-11 * _tol_scale()
    for k in range(n):
        t = 0 if n == 1 else k / (n - 1)
        w = z0 + (z1 - z0) * t
        v, _method, _est = eval_with_method(family, lie, w, "auto", tol)
        v = complex(v)
        print(f"{w.real:.15g},{w.imag:.15g},{v.real:.15g},{v.imag:.15g}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hyperclass",
        description="Five hypergeometric-class equations and their "
                    "identity web: evaluation, verification, catalogs.")
    sub = p.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", help="evaluate a family's function")
    pe.add_argument("family", choices=FAMILY_CHOICES)
    _add_param_flags(pe)
    pe.add_argument("--w", type=str, default=None)
    pe.add_argument("--method", default="auto",
                    choices=("auto", "series", "quadrature", "asymptotic"))
    pe.add_argument("--norm", default="plain", choices=("plain", "bold", "I"))
    pe.set_defaults(fn=cmd_eval)

    pv = sub.add_parser("verify", help="run a verification suite")
    pv.add_argument("suite", choices=V.SUITES + ("all",))
    pv.add_argument("--family", default=None,
                    choices=FAMILY_CHOICES + ("all",))
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--tol", type=float, default=None)
    pv.add_argument("--format", default="json", choices=("json", "text"))
    _add_param_flags(pv)
    pv.add_argument("--w", type=str, default=None)
    pv.set_defaults(fn=cmd_verify)

    pc = sub.add_parser("catalog", help="dump a family's identity catalog")
    pc.add_argument("family", choices=FAMILY_CHOICES)
    pc.add_argument("--format", default="text", choices=("json", "text"))
    pc.set_defaults(fn=cmd_catalog)

    pp = sub.add_parser("plotdata",
                        help="CSV samples of a function on a segment")
    pp.add_argument("family", choices=FAMILY_CHOICES)
    _add_param_flags(pp)
    pp.add_argument("--from", dest="from_", type=str, required=True)
    pp.add_argument("--to", type=str, required=True)
    pp.add_argument("--n", type=int, default=50)
    pp.set_defaults(fn=cmd_plotdata)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except N.NumericsError as exc:
        print(f"numeric error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
