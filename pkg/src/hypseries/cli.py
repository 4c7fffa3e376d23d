"""Batch command-line interface.

    hypseries <poly|coeffs|bernoulli|eval|verify|zeros> [flags]

Exit codes: 0 success / all checks passed, 1 at least one FAIL report,
2 usage or domain errors.  Identical argv produces byte-identical output:
exact objects print as p/q and pi^k, numeric ones as deterministic
decimal strings with prec/4 significant digits.
"""

from __future__ import annotations

import argparse
import json
import sys

import mpmath as mp

from . import bernoulli as bern
from . import polynomials as poly
from . import relations as rel
from . import series_eval as sev
from . import zeros as zer
from .errors import HypSeriesError

_FOOTER = "see README for the full grammar"


def _parse_phi(text: str):
    parts = text.split(",")
    if len(parts) == 1:
        return parts[0].strip()
    if len(parts) == 2:
        return (parts[0].strip(), parts[1].strip())
    raise argparse.ArgumentTypeError("phi must be 're' or 're,im'")


def _emit(args, text: str):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _rational_poly_text(p: bern.RationalPolynomial, var: str = "t") -> str:
    if not p.coeffs:
        return "0"
    pieces = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        body = str(abs(c))
        if k:
            body += f" * {var}^{k}"
        if not pieces:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append(("- " if c < 0 else "+ ") + body)
    return " ".join(pieces)


def _nstr(x, digits):
    return mp.nstr(x, digits)


# --- poly ------------------------------------------------------------------

def _cmd_poly(args) -> int:
    fam = args.family
    if fam in ("calB", "calA", "ramanujan"):
        P = {"calB": poly.calB, "calA": poly.calA, "ramanujan": poly.ramanujan}[fam](args.m)
        out = P.to_json() if args.format == "json" else P.to_text()
    elif fam == "gen-ramanujan":
        P = poly.gen_ramanujan(args.m, args.s, args.r)
        out = P.to_json() if args.format == "json" else P.to_text()
    elif fam == "calS":
        polys = poly.calS(args.m)
        if args.i is not None:
            polys = [polys[args.i]]
            idx = [args.i]
        else:
            idx = list(range(len(polys)))
        if args.format == "json":
            out = json.dumps({str(i): p.to_json_dict() for i, p in zip(idx, polys)})
        else:
            out = "\n".join(f"S_{i} = {p.to_text()}" for i, p in zip(idx, polys))
    elif fam == "frak-b":
        if args.i is None:
            raise SystemExit("frak-b requires --i")
        numbers = poly.frak_b(args.i)
        if args.format == "json":
            payload = [
                [{"num": c.numerator, "den": c.denominator, "pi_pow": b}
                 for b, c in sorted(n.terms.items())]
                for n in numbers
            ]
            out = json.dumps(payload)
        else:
            lines = []
            for k, n in enumerate(numbers):
                bits = [f"{c} * pi^{b}" for b, c in sorted(n.terms.items())] or ["0"]
                lines.append(f"B_{k}^({args.i}) = " + " + ".join(bits))
            out = "\n".join(lines)
    elif fam == "a-sinh":
        P = poly.a_sinh_trunc(args.m, args.k_trunc)
        out = P.to_json() if args.format == "json" else P.to_text()
    else:
        raise SystemExit(f"unknown family {fam}")
    _emit(args, out)
    return 0


# --- coeffs ----------------------------------------------------------------

def _cmd_coeffs(args) -> int:
    from .coefficients import c_table, d_table

    t = (c_table if args.kind == "c" else d_table)(args.m, args.route)
    if args.format == "json":
        payload = {
            "m": t.m,
            "kind": t.kind,
            "route": t.route,
            "values": [None if v is None else str(v) for v in t.values],
        }
        out = json.dumps(payload)
    else:
        lines = []
        for i, v in enumerate(t.values):
            idx = 2 * i + 1 if t.kind == "c" else 2 * i
            lines.append(f"{t.kind}_{idx} = " + ("(not provided by route)" if v is None else str(v)))
        out = "\n".join(lines)
    _emit(args, out)
    return 0


# --- bernoulli -------------------------------------------------------------

def _cmd_bernoulli(args) -> int:
    what = args.what
    if what == "number":
        out = str(bern.bernoulli_number(args.m))
    elif what == "poly":
        out = _rational_poly_text(bern.bernoulli_poly(args.m))
    elif what == "reduced-even":
        out = str(bern.reduced_even(args.i, args.m))
    elif what == "reduced-odd":
        out = str(bern.reduced_odd(args.i, args.m))
    elif what == "via-bell":
        out = str(bern.gen_bernoulli_via_bell(args.i, args.m))
    elif what == "gamma-ratio":
        out = _rational_poly_text(bern.gamma_ratio_poly(args.s, args.r), var="z")
    else:
        raise SystemExit(f"unknown target {what}")
    if args.format == "json":
        out = json.dumps({"value": out})
    _emit(args, out)
    return 0


# --- eval ------------------------------------------------------------------

def _series_payload(sv: sev.SeriesValue, digits: int) -> dict:
    return {
        "value": [_nstr(mp.re(sv.value), digits), _nstr(mp.im(sv.value), digits)],
        "tail_bound": _nstr(sv.tail_bound, 8),
        "terms_used": sv.terms_used,
    }


def _cmd_eval(args) -> int:
    digits = max(args.prec // 4, 8)
    target = args.target
    phi = args.phi
    if target == "S":
        sv = sev.eval_S(args.m, phi, args.prec)
    elif target == "S-cosh":
        sv = sev.eval_S_cosh(args.m, args.gamma, phi, args.prec)
    elif target == "S-sinh":
        sv = sev.eval_S_sinh(args.m, args.gamma, phi, args.prec)
    elif target == "S-exp":
        sv = sev.eval_S_exponential(args.m, phi, args.prec)
    elif target == "lambert":
        sv = sev.eval_lambert(phi, args.s, args.prec)
    elif target == "qpolygamma":
        sv = sev.qpolygamma_one(phi, args.s, args.prec)
    elif target == "zeta":
        val = sev.zeta_int(args.s, args.prec)
        out = json.dumps({"value": _nstr(val, digits)}) if args.format == "json" \
            else _nstr(val, digits)
        _emit(args, out)
        return 0
    elif target == "polygamma":
        val = sev.polygamma_one(args.s, args.prec)
        out = json.dumps({"value": _nstr(val, digits)}) if args.format == "json" \
            else _nstr(val, digits)
        _emit(args, out)
        return 0
    elif target in ("calB", "calA", "ramanujan"):
        P = {"calB": poly.calB, "calA": poly.calA, "ramanujan": poly.ramanujan}[target](args.m)
        val = sev.eval_pi_poly(P, phi, args.prec)
        out = json.dumps(
            {"value": [_nstr(mp.re(val), digits), _nstr(mp.im(val), digits)]}
        ) if args.format == "json" else _nstr(val, digits)
        _emit(args, out)
        return 0
    else:
        raise SystemExit(f"unknown target {target}")
    if args.format == "json":
        out = json.dumps(_series_payload(sv, digits))
    else:
        out = (
            f"value = {_nstr(sv.value, digits)}\n"
            f"tail_bound = {_nstr(sv.tail_bound, 8)}\n"
            f"terms_used = {sv.terms_used}"
        )
    _emit(args, out)
    return 0


# --- verify ----------------------------------------------------------------

_FUNCREL_GRID = ("1", "0.5", "2pi", "2,1", "-3")


def _grid_phi(token: str):
    if token == "2pi":
        return lambda prec: 2 * sev.to_mp(mp.pi, prec)
    return lambda prec, t=token: sev.to_mp(_parse_phi(t), prec)


def _report_lines(reports, fmt):
    if fmt == "json":
        return json.dumps([r.to_json_dict() for r in reports])
    lines = []
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        if r.warn and r.passed:
            status = "WARN"
        phi_txt = "-" if r.phi is None else mp.nstr(r.phi, 8)
        lines.append(
            f"[{status}] {r.relation_id} m={r.m} phi={phi_txt} "
            f"residual={mp.nstr(r.residual, 6)}"
        )
    return "\n".join(lines)


def _verify_reports(args) -> list:
    what = args.what
    prec = args.prec
    wprec = prec + sev.GUARD_BITS
    reports = []
    if what in ("funcrel-S", "all"):
        m_top = args.m if (args.m is not None and what != "all") else min(args.m_max, 4)
        phis = [args.phi] if args.phi is not None and what != "all" else _FUNCREL_GRID
        for m in range(0, m_top + 1):
            for tok in phis:
                z = _grid_phi(tok)(wprec) if isinstance(tok, str) else tok
                reports.append(rel.check_funcrel_S(m, z, prec))
    if what in ("lambert-pos", "all"):
        m_top = args.m if (args.m is not None and what != "all") else min(args.m_max, 4)
        for m in range(0, m_top + 1):
            for tok in ("1", "2pi", "9"):
                reports.append(rel.check_lambert_pos(m, _grid_phi(tok)(wprec), prec))
    if what in ("lambert-neg", "all"):
        m_top = args.m if (args.m is not None and what != "all") else min(args.m_max, 4)
        for m in range(1, max(m_top, 1) + 1):
            for tok in ("1", "2pi", "3,2"):
                reports.append(rel.check_lambert_neg(m, _grid_phi(tok)(wprec), prec))
    if what in ("linearity", "all"):
        cases = [(2, "1"), (2, "-1"), (0, "0.3,4")]
        if args.m is not None and what != "all":
            cases = [(args.m, args.phi or "1")]
        for m, tok in cases:
            z = _grid_phi(tok)(wprec) if isinstance(tok, str) else tok
            reports.append(rel.check_linearity(m, z, prec))
    if what in ("reduction", "all"):
        for m, gamma, kind, tok in (
            (2, 1, "cosh", "2"),
            (3, 2, "sinh-even", "1.5"),
            (3, 1, "sinh-odd", "1.5"),
        ):
            reports.append(rel.check_reduction(m, gamma, kind, _grid_phi(tok)(wprec), prec))
    if what in ("asymptotic-S", "all"):
        m_top = args.m if (args.m is not None and what != "all") else 3
        for m in range(0, m_top + 1):
            reports.extend(rel.check_asymptotic_S(m, max(prec, 256)))
    if what in ("asymptotic-sinh", "all"):
        pairs = ((1, 1), (1, 2))
        if args.m is not None and what != "all":
            pairs = ((args.m, args.k_trunc),)
        for m, K in pairs:
            reports.extend(rel.check_asymptotic_sinh(m, K, prec))
    return reports


def _cmd_verify(args) -> int:
    what = args.what
    if args.m_max is None:
        args.m_max = 6
    exit_code = 0
    chunks = []
    if what in ("identities", "all"):
        results = rel.identity_suite(args.m_max, harmonic_m_max=args.m_max)
        if args.format == "json":
            chunks.append(json.dumps(
                [{"identity": r.name, "cases": r.cases, "pass": r.passed} for r in results]
            ))
        else:
            chunks.append("\n".join(
                f"[{'PASS' if r.passed else 'FAIL'}] {r.name} ({r.cases} cases)"
                for r in results
            ))
        if not all(r.passed for r in results):
            exit_code = 1
    if what != "identities":
        reports = _verify_reports(args)
        chunks.append(_report_lines(reports, args.format))
        if not all(r.passed for r in reports):
            exit_code = 1
    _emit(args, "\n".join(chunks))
    return exit_code


# --- zeros -----------------------------------------------------------------

def _cmd_zeros(args) -> int:
    import io

    if args.m is not None and args.m_max is None:
        m_max = args.m
        m_lo = args.m
    else:
        m_lo = 0
        m_max = args.m_max if args.m_max is not None else 0
    rows = []
    for m in range(m_lo, m_max + 1):
        zs = zer.find_zeros(m, args.prec)
        digits = max(args.prec // 4, 8)
        for z, r in zip(zs.zeros, zs.residuals):
            rows.append((m, mp.nstr(mp.re(z), digits), mp.nstr(mp.im(z), digits), mp.nstr(r, 8)))
    if args.format == "csv":
        buf = io.StringIO()
        zer.write_zeros_csv(rows, buf)
        _emit(args, buf.getvalue())
    elif args.format == "json":
        _emit(args, json.dumps(
            [{"m": r[0], "re": r[1], "im": r[2], "residual": r[3]} for r in rows]
        ))
    else:
        _emit(args, "\n".join(f"m={r[0]} zero=({r[1]}, {r[2]}) residual={r[3]}" for r in rows))
    return 0


# --- parser ----------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hypseries", epilog=_FOOTER)
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(p, *, prec_default=128):
        p.add_argument("--m", type=int, default=None)
        p.add_argument("--m-max", dest="m_max", type=int, default=None)
        p.add_argument("--i", type=int, default=None)
        p.add_argument("--s", type=int, default=0)
        p.add_argument("--r", type=int, default=1)
        p.add_argument("--gamma", type=int, default=0)
        p.add_argument("--phi", type=_parse_phi, default=None)
        p.add_argument("--prec", type=int, default=prec_default)
        p.add_argument("--route", default="binomial-expansion")
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--out", default=None)
        p.add_argument("--k-trunc", dest="k_trunc", type=int, default=1)

    p_poly = sub.add_parser("poly", help="construct a polynomial family exactly")
    p_poly.add_argument("family", choices=(
        "calB", "calA", "ramanujan", "gen-ramanujan", "calS", "frak-b", "a-sinh"))
    add_common(p_poly)
    p_poly.set_defaults(fn=_cmd_poly)

    p_coeffs = sub.add_parser("coeffs", help="linearity coefficient tables")
    p_coeffs.add_argument("kind", choices=("c", "d"))
    add_common(p_coeffs)
    p_coeffs.set_defaults(fn=_cmd_coeffs)

    p_bern = sub.add_parser("bernoulli", help="Bernoulli numbers, polynomials, reduced values")
    p_bern.add_argument("what", choices=(
        "number", "poly", "reduced-even", "reduced-odd", "via-bell", "gamma-ratio"))
    add_common(p_bern)
    p_bern.set_defaults(fn=_cmd_bernoulli)

    p_eval = sub.add_parser("eval", help="arbitrary-precision numeric evaluation")
    p_eval.add_argument("target", choices=(
        "S", "S-cosh", "S-sinh", "S-exp", "lambert", "zeta", "polygamma",
        "qpolygamma", "calB", "calA", "ramanujan"))
    add_common(p_eval)
    p_eval.set_defaults(fn=_cmd_eval)

    p_ver = sub.add_parser("verify", help="functional equations and exact identities")
    p_ver.add_argument("what", choices=(
        "funcrel-S", "lambert-pos", "lambert-neg", "linearity", "reduction",
        "asymptotic-S", "asymptotic-sinh", "identities", "all"))
    add_common(p_ver)
    p_ver.set_defaults(fn=_cmd_verify)

    p_zeros = sub.add_parser("zeros", help="zeros of the calB polynomials")
    add_common(p_zeros, prec_default=256)
    p_zeros.set_defaults(fn=_cmd_zeros)

    return ap


def main(argv=None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    if args.command in ("poly", "coeffs", "bernoulli") and args.m is None:
        args.m = 0
    if args.command == "bernoulli" and args.i is None:
        args.i = 0
    if args.command == "eval" and args.m is None:
        args.m = 0
    if args.command == "eval" and args.phi is None:
        args.phi = "1"
    if args.command == "eval" and args.s == 0 and args.target in ("lambert", "zeta", "polygamma", "qpolygamma"):
        args.s = {"lambert": 1, "zeta": 2, "polygamma": 1, "qpolygamma": 1}[args.target]
    try:
        return args.fn(args)
    except HypSeriesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
