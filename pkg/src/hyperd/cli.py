"""Command-line front end.

Subcommands:

  eval     evaluate a function at points (--z, repeatable) or a --grid
  table    same as eval but grid-only, CSV by default
  verify   run identity suites; exit 0 iff every check passes
  catalog  list the relation-key namespace

Numbers are serialized with 17 significant digits so output round-trips
doubles exactly and is bit-stable across runs: identical requests give
byte-identical output, and the CSV and JSON encodings of one run carry
identical numeric fields.  Exit codes: 0 success, 1 verification
failure, 2 domain/parameter errors (a structured error record goes to
stderr).  The environment variable HYPERD_MAX_TERMS overrides the
default series term cap; an explicit --max-terms flag wins over both.
"""

import argparse
import math
import os
import sys

from .errors import DomainError, HyperdError
from .ffun import F0, F1, F2, f2_norm_I, f_norm, f_second
from .dfun import DSpec, d_eval, d_eval_I, log_solution
from .gammakit import near_int
from .series import MAX_TERMS, REL_TOL
from .ufun import URoute, bessel, u0, u1, u2
from . import oracle, relations

__all__ = ["main"]


# ---------------------------------------------------------------------------
# serialization

def _fmt(x):
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    return format(float(x), ".17g")


def _json_escape(s):
    out = ["\""]
    for ch in s:
        if ch == "\"":
            out.append("\\\"")
        elif ch == "\\":
            out.append("\\\\")
        elif ord(ch) < 0x20:
            out.append("\\u%04x" % ord(ch))
        else:
            out.append(ch)
    out.append("\"")
    return "".join(out)


def _to_json(obj):
    if obj is None:
        return "null"
    if isinstance(obj, str):
        return _json_escape(obj)
    if isinstance(obj, (bool, int, float)):
        return _fmt(obj)
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(_to_json(v) for v in obj) + "]"
    if isinstance(obj, dict):
        items = ("%s:%s" % (_json_escape(str(k)), _to_json(v))
                 for k, v in obj.items())
        return "{" + ",".join(items) + "}"
    raise TypeError("cannot serialize %r" % (type(obj),))


def _cell(v):
    return v if isinstance(v, str) else _fmt(v)


def _flat(d):
    return " ".join("%s=%s" % (k, _cell(v)) for k, v in d.items())


def _emit(doc, records, fmt, stream):
    """doc: header mapping; records: list of flat dicts (same keys)."""
    if fmt == "json":
        body = dict(doc)
        body["records"] = records
        stream.write(_to_json(body) + "\n")
        return
    for k, v in doc.items():
        if isinstance(v, dict):
            stream.write("# %s %s\n" % (k, _flat(v)))
        elif isinstance(v, (list, tuple)):
            parts = (_flat(x) if isinstance(x, dict) else _cell(x) for x in v)
            stream.write("# %s=%s\n" % (k, "|".join(parts)))
        else:
            stream.write("# %s=%s\n" % (k, _cell(v)))
    if not records:
        return
    keys = list(records[0])
    stream.write(",".join(keys) + "\n")
    for rec in records:
        row = []
        for k in keys:
            v = rec[k]
            if isinstance(v, (list, tuple)):
                row.append("|".join(str(x) for x in v))
            elif isinstance(v, str):
                row.append(v)
            else:
                row.append(_fmt(v))
        stream.write(",".join(row) + "\n")


def _error(exc):
    sys.stderr.write(_to_json({"error": {"type": type(exc).__name__,
                                         "message": str(exc)}}) + "\n")
    return 2


# ---------------------------------------------------------------------------
# request parsing

def _parse_complex(text):
    t = text.strip().replace("i", "j").replace("I", "j")
    try:
        return complex(t)
    except ValueError:
        raise DomainError("cannot parse complex literal %r "
                          "(use forms like 0.5, -0.4, 1+0.5i)" % (text,))


def _linspace(a, b, n):
    if n < 1:
        raise DomainError("grid axis needs at least one point")
    if n == 1:
        return [a]
    step = (b - a) / (n - 1)
    return [a + step * k for k in range(n)]


def _parse_grid(spec):
    """re0:re1:n,im0:im1:m -> row-major points (imaginary axis outer)."""
    try:
        re_part, im_part = spec.split(",")
        r0, r1, rn = re_part.split(":")
        i0, i1, im = im_part.split(":")
        res = _linspace(float(r0), float(r1), int(rn))
        ims = _linspace(float(i0), float(i1), int(im))
    except (ValueError, DomainError) as exc:
        raise DomainError("bad grid spec %r (want re0:re1:n,im0:im1:m): %s"
                          % (spec, exc))
    return [complex(re, imv) for imv in ims for re in res]


def _resolve_params(args):
    """Returns (lie params dict, classical echo dict).

    Exactly one convention may be given; the other is derived once.
    """
    lie_given = [k for k in ("alpha", "m", "theta", "beta", "mu")
                 if getattr(args, k) is not None]
    cls_given = [k for k in ("a", "b", "c") if getattr(args, k) is not None]
    if lie_given and cls_given:
        raise DomainError("give either Lie-algebraic (--m/--alpha/--theta/"
                          "--beta/--mu) or classical (--a/--b/--c) "
                          "parameters, not both")
    eq = args.eq
    if cls_given:
        if eq == "0f1":
            if args.c is None:
                raise DomainError("0f1 classical form needs --c")
            lie = {"alpha": args.c - 1.0}
        elif eq == "1f1":
            if args.a is None or args.c is None:
                raise DomainError("1f1 classical form needs --a and --c")
            lie = {"alpha": args.c - 1.0, "theta": 2.0 * args.a - args.c}
        else:
            if None in (args.a, args.b, args.c):
                raise DomainError("2f1 classical form needs --a, --b, --c")
            lie = {"alpha": args.c - 1.0, "beta": args.a + args.b - args.c,
                   "mu": args.b - args.a}
    else:
        alpha = args.alpha if args.alpha is not None else \
            (float(args.m) if args.m is not None else None)
        if alpha is None:
            raise DomainError("missing --m or --alpha")
        lie = {"alpha": alpha}
        if eq == "1f1":
            if args.theta is None:
                raise DomainError("1f1 needs --theta")
            lie["theta"] = args.theta
        elif eq == "2f1":
            if args.beta is None or args.mu is None:
                raise DomainError("2f1 needs --beta and --mu")
            lie["beta"] = args.beta
            lie["mu"] = args.mu
    al = lie["alpha"]
    if eq == "0f1":
        classical = {"c": 1.0 + al}
    elif eq == "1f1":
        classical = {"a": 0.5 * (1.0 + al + lie["theta"]), "c": 1.0 + al}
    else:
        classical = {"a": 0.5 * (1.0 + al + lie["beta"] - lie["mu"]),
                     "b": 0.5 * (1.0 + al + lie["beta"] + lie["mu"]),
                     "c": 1.0 + al}
    return lie, classical


def _equation_params(eq, lie):
    if eq == "0f1":
        return F0(alpha=lie["alpha"])
    if eq == "1f1":
        return F1(theta=lie["theta"], alpha=lie["alpha"])
    return F2(alpha=lie["alpha"], beta=lie["beta"], mu=lie["mu"])


def _d_spec(eq, lie):
    m = near_int(lie["alpha"])
    if m is None:
        raise DomainError("this function needs integer m, got alpha=%r"
                          % (lie["alpha"],))
    if eq == "0f1":
        return DSpec(kind=eq, m=m)
    if eq == "1f1":
        return DSpec(kind=eq, m=m, theta=lie["theta"])
    return DSpec(kind=eq, m=m, beta=lie["beta"], mu=lie["mu"])


def _evaluator(args, lie):
    eq = args.eq
    func = args.func
    route = args.route
    rel_tol = args.rel_tol
    max_terms = args.max_terms

    if func in ("FI", "DI") and eq != "2f1":
        raise DomainError("--func %s is defined for --eq 2f1 only" % (func,))

    if func == "F":
        p = _equation_params(eq, lie)
        return lambda z: f_norm(p, z, rel_tol, max_terms)
    if func == "second":
        p = _equation_params(eq, lie)
        return lambda z: f_second(p, z, rel_tol, max_terms)
    if func == "FI":
        p = _equation_params(eq, lie)
        return lambda z: f2_norm_I(p, z, rel_tol, max_terms)
    if func == "D":
        spec = _d_spec(eq, lie)
        return lambda z: d_eval(spec, z, rel_tol, max_terms)
    if func == "DI":
        spec = _d_spec(eq, lie)
        return lambda z: d_eval_I(spec, z, rel_tol, max_terms)
    if func == "logsol":
        spec = _d_spec(eq, lie)
        return lambda z: log_solution(spec, z, rel_tol, max_terms)
    if func == "U":
        if eq == "0f1":
            return lambda z: u0(lie["alpha"], z, route, rel_tol, max_terms)
        if eq == "1f1":
            return lambda z: u1(lie["theta"], lie["alpha"], z, route,
                                rel_tol, max_terms)
        return lambda z: u2(lie["alpha"], lie["beta"], lie["mu"], z, route,
                            rel_tol, max_terms)
    raise DomainError("unknown function %r" % (func,))


# ---------------------------------------------------------------------------
# eval / table

def _points(args):
    pts = []
    if args.z:
        pts.extend(_parse_complex(s) for s in args.z)
    if args.grid:
        pts.extend(_parse_grid(args.grid))
    if not pts:
        raise DomainError("no evaluation points: give --z or --grid")
    return pts


def cmd_eval(args, stream):
    lie, classical = _resolve_params(args)
    evaluate = _evaluator(args, lie)
    records = []
    for z in _points(args):
        res = evaluate(z)
        records.append({
            "z_re": z.real, "z_im": z.imag,
            "value_re": res.value.real, "value_im": res.value.imag,
            "err_estimate": res.err_estimate,
            "terms_used": res.terms_used,
            "flags": sorted(res.flags),
        })
    doc = {"command": args.command, "eq": args.eq, "func": args.func,
           "params": lie, "classical": classical,
           "rel_tol": args.rel_tol, "max_terms": args.max_terms}
    if args.route:
        doc["route"] = args.route
    _emit(doc, records, args.format, stream)
    return 0


# ---------------------------------------------------------------------------
# verify

def _theorem_checks(rel_tol, max_terms):
    """LogPlusD values of the degenerate theorems against the
    alpha -> m extrapolation of the generic connection formulas."""
    checks = []
    z0, z1 = complex(0.7, 0.0), complex(-0.4, 0.6)
    zneg = complex(-0.5, 0.0)
    for m in range(0, 4):
        for j, z in enumerate((z0, z1)):
            direct = u0(m, z, URoute.LOG_PLUS_D, rel_tol, max_terms).value
            lim = oracle.limit_alpha(m, {}, z, "0f1", rel_tol, max_terms).value
            checks.append(("theorem.th1.m%d.z%d" % (m, j), direct, lim))
        for j, z in enumerate((z0, z1)):
            direct = u1(0.7, m, z, URoute.LOG_PLUS_D, rel_tol,
                        max_terms).value
            lim = oracle.limit_alpha(m, {"theta": 0.7}, z, "1f1", rel_tol,
                                     max_terms).value
            checks.append(("theorem.th2.m%d.z%d" % (m, j), direct, lim))
        for j, z in enumerate((zneg, z1)):
            direct = u2(m, 0.3, 0.2, z, URoute.LOG_PLUS_D, rel_tol,
                        max_terms).value
            lim = oracle.limit_alpha(m, {"beta": 0.3, "mu": 0.2}, z, "2f1",
                                     rel_tol, max_terms).value
            checks.append(("theorem.udef.m%d.z%d" % (m, j), direct, lim))
    out = []
    for key, a, b in checks:
        out.append((key, abs(a - b) / max(1.0, abs(a), abs(b)), 1e-6))
    return out


def _bessel_series(kind, m, z, terms=40):
    # direct product-form expansions, independent of the library series
    s = 0.0 + 0j
    sign = -1.0 if kind == "J" else 1.0
    for k in range(terms):
        s += (sign ** k) * (z / 2.0) ** (2 * k + m) / \
            (math.factorial(k) * math.factorial(k + m))
    return s


def _bessel_checks(rel_tol, max_terms):
    out = []
    zs = (0.6, 1.3)
    zc = complex(0.8, 0.5)
    for m in range(0, 4):
        for j, z in enumerate(zs):
            # modified Bessel function of the second kind two ways
            k_log = bessel("K", m, z, rel_tol, max_terms).value
            k_u = 0.5 * math.sqrt(math.pi) * (z / 2.0) ** m * \
                u0(m, z * z / 4.0, URoute.LOG_PLUS_D, rel_tol,
                   max_terms).value
            out.append(("bessel.K.route.m%d.z%d" % (m, j),
                        abs(k_log - k_u) / max(1.0, abs(k_log), abs(k_u)),
                        1e-8))
            for kind in ("I", "J"):
                v = bessel(kind, m, z, rel_tol, max_terms).value
                w = _bessel_series(kind, m, z)
                out.append(("bessel.%s.series.m%d.z%d" % (kind, m, j),
                            abs(v - w) / max(1.0, abs(v), abs(w)), 1e-9))
        h1 = bessel("H1", m, zc, rel_tol, max_terms).value
        h2 = bessel("H2", m, zc, rel_tol, max_terms).value
        jj = bessel("J", m, zc, rel_tol, max_terms).value
        out.append(("bessel.H.sum.m%d" % (m,),
                    abs(h1 + h2 - 2.0 * jj) /
                    max(1.0, abs(h1), abs(h2), abs(jj)), 1e-9))
    return out


def _suite_ids(suite, catalog):
    if suite in ("all", "catalog"):
        return sorted(catalog)
    if suite in ("0f1", "1f1", "2f1"):
        return sorted(k for k, r in catalog.items() if r.kind == suite)
    if suite == "kummer":
        return sorted(k for k, r in catalog.items() if r.family == "Kummer")
    if suite == "quadratic":
        return sorted(k for k, r in catalog.items()
                      if r.family == "Quadratic")
    if suite in ("bessel", "theorems"):
        return []
    raise DomainError("unknown suite %r" % (suite,))


def cmd_verify(args, stream, catalog=None):
    catalog = catalog if catalog is not None else relations.build_catalog()
    records = []
    failures = []
    max_residual = 0.0

    if args.id:
        if args.suite:
            raise DomainError("give --suite or --id, not both")
        ids = [args.id]
        extra = []
    else:
        suite = args.suite or "all"
        ids = _suite_ids(suite, catalog)
        extra = []
        if suite in ("all", "bessel"):
            extra += _bessel_checks(args.rel_tol, args.max_terms)
        if suite in ("all", "theorems"):
            extra += _theorem_checks(args.rel_tol, args.max_terms)

    for key in ids:
        rec = relations._resolve(key, catalog)
        pts = relations.sweep_record(rec, n=args.points, catalog=catalog)
        worst = max(p.scaled for p in pts)
        ok = worst <= args.tol
        records.append({"id": key, "family": rec.family,
                        "points": len(pts), "max_scaled_residual": worst,
                        "status": "ok" if ok else "FAIL"})
        max_residual = max(max_residual, worst)
        if not ok:
            failures.append({"id": key, "max_scaled_residual": worst})

    for key, worst, tol in sorted(extra):
        ok = worst <= tol
        records.append({"id": key, "family": "Consistency", "points": 1,
                        "max_scaled_residual": worst,
                        "status": "ok" if ok else "FAIL"})
        max_residual = max(max_residual, worst)
        if not ok:
            failures.append({"id": key, "max_scaled_residual": worst})

    doc = {"command": "verify",
           "suite": args.id or args.suite or "all",
           "points": args.points, "tolerance": args.tol,
           "relations_checked": len(records),
           "max_residual": max_residual,
           "failures": failures}
    _emit(doc, records, args.format, stream)
    return 1 if failures else 0


def cmd_catalog(args, stream):
    catalog = relations.build_catalog()
    records = []
    for key in sorted(catalog):
        rec = catalog[key]
        records.append({"id": rec.id, "kind": rec.kind,
                        "family": rec.family, "signature": rec.signature,
                        "constant": rec.constant,
                        "statement": rec.statement})
    _emit({"command": "catalog", "count": len(records)}, records,
          args.format, stream)
    return 0


# ---------------------------------------------------------------------------
# argument plumbing

def _add_param_args(sp):
    sp.add_argument("--eq", required=True, choices=("0f1", "1f1", "2f1"))
    sp.add_argument("--func", default="F",
                    choices=("F", "second", "D", "logsol", "U", "FI", "DI"))
    sp.add_argument("--m", type=int, default=None,
                    help="integer parameter (Lie convention)")
    sp.add_argument("--alpha", type=float, default=None)
    sp.add_argument("--theta", type=float, default=None)
    sp.add_argument("--beta", type=float, default=None)
    sp.add_argument("--mu", type=float, default=None)
    sp.add_argument("--a", type=float, default=None,
                    help="classical parameter a")
    sp.add_argument("--b", type=float, default=None,
                    help="classical parameter b")
    sp.add_argument("--c", type=float, default=None,
                    help="classical parameter c")
    sp.add_argument("--route", default=None,
                    choices=tuple(r.value for r in URoute),
                    help="force a U evaluation route")


def _add_common(sp, default_max_terms):
    sp.add_argument("--rel-tol", type=float, default=REL_TOL)
    sp.add_argument("--max-terms", type=int, default=default_max_terms)


def _parser(default_max_terms):
    ap = argparse.ArgumentParser(
        prog="hyperd",
        description="normalized hypergeometric solutions, their "
                    "logarithmic companions, and identity verification")
    sub = ap.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", help="evaluate a function at points")
    _add_param_args(pe)
    pe.add_argument("--z", action="append", default=[],
                    help="complex point a+bi (repeatable)")
    pe.add_argument("--grid", default=None,
                    help="re0:re1:n,im0:im1:m (row-major, imaginary outer)")
    pe.add_argument("--format", default="json", choices=("json", "csv"))
    _add_common(pe, default_max_terms)

    pt = sub.add_parser("table", help="evaluate over a grid, CSV by default")
    _add_param_args(pt)
    pt.add_argument("--grid", required=True,
                    help="re0:re1:n,im0:im1:m (row-major, imaginary outer)")
    pt.add_argument("--format", default="csv", choices=("json", "csv"))
    _add_common(pt, default_max_terms)

    pv = sub.add_parser("verify", help="run identity suites")
    pv.add_argument("--suite", default=None,
                    choices=("all", "catalog", "0f1", "1f1", "2f1",
                             "kummer", "quadratic", "bessel", "theorems"))
    pv.add_argument("--id", default=None,
                    help="single relation key (see `hyperd catalog`)")
    pv.add_argument("--points", type=int, default=relations.SWEEP_POINTS)
    pv.add_argument("--tol", type=float, default=relations.TOL_SWEEP)
    pv.add_argument("--format", default="json", choices=("json", "csv"))
    _add_common(pv, default_max_terms)

    pc = sub.add_parser("catalog", help="list relation records")
    pc.add_argument("--format", default="json", choices=("json", "csv"))
    return ap


def main(argv=None):
    env_terms = os.environ.get("HYPERD_MAX_TERMS")
    try:
        default_max_terms = int(env_terms) if env_terms else MAX_TERMS
    except ValueError:
        sys.stderr.write(_to_json(
            {"error": {"type": "DomainError",
                       "message": "HYPERD_MAX_TERMS must be an integer, got "
                                  + repr(env_terms)}}) + "\n")
        return 2
    ap = _parser(default_max_terms)
    args = ap.parse_args(argv)
    try:
        if args.command == "eval":
            return cmd_eval(args, sys.stdout)
        if args.command == "table":
            args.z = []
            return cmd_eval(args, sys.stdout)
        if args.command == "verify":
            return cmd_verify(args, sys.stdout)
        if args.command == "catalog":
            return cmd_catalog(args, sys.stdout)
        raise DomainError("unknown command %r" % (args.command,))
    except HyperdError as exc:
        return _error(exc)
    except (ValueError, ZeroDivisionError, OverflowError) as exc:
        return _error(exc)


if __name__ == "__main__":
    sys.exit(main())
