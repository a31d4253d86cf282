"""``arlab`` command line: one subcommand per experiment, JSON or CSV reports.

Exit codes: 0 success, 1 bad input (including parse errors), 2 a hypothesis
or precheck failed, 3 a computed value broke a proven bound.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import __version__
from . import gcdlab, reduce, torsion
from .bounds import THEOREMS, bounds
from .expr import ExprSyntaxError, parse, ast_arity, print_canonical, to_mpoly, to_upoly
from .mpoly import MPoly
from .mulind import MOD_CONSTANTS, PLAIN, is_mult_independent
from .upoly import UPoly

SCHEMA = 1


# parsing helpers


def _u(text: str) -> UPoly:
    return to_upoly(text)


def _us(texts) -> list[UPoly]:
    return [to_upoly(t) for t in texts or []]


def _ms(texts, arity: int | None = None) -> list[MPoly]:
    nodes = [parse(t) for t in texts]
    if arity is None:
        arity = max([max(ast_arity(n), 1) for n in nodes], default=1)
    return [to_mpoly(n, arity) for n in nodes]


def _pc(p) -> str:
    return print_canonical(p)


def _opt_str(x) -> str | None:
    return None if x is None else str(x)


def _frac(x: Fraction) -> str:
    return str(x)


# subcommand handlers: each returns (inputs, records, summary)


def _family(args) -> gcdlab.Family:
    if args.f is not None or args.g is not None:
        if args.f is None or args.g is None:
            raise ValueError("--f and --g go together")
        fam = gcdlab.Family((_u(args.f),), (_u(args.g),))
    else:
        if not args.fs or not args.gs:
            raise ValueError("give --f/--g or --fs/--gs")
        fam = gcdlab.Family(tuple(_us(args.fs)), tuple(_us(args.gs)),
                            tuple(_us(args.phis)), tuple(_us(args.psis)))
    if getattr(args, "h1", None) or getattr(args, "h2", None):
        fam = gcdlab.Family(fam.fs, fam.gs, fam.phis, fam.psis,
                            _u(args.h1) if args.h1 else None, _u(args.h2) if args.h2 else None)
    return fam


def cmd_gcd_sweep(args):
    fam = _family(args)
    window = args.torsion_window if args.torsion_window is not None else args.max
    rep = gcdlab.stable_divisor_sweep(fam, args.max, B_torsion=window, workers=args.workers,
                                      bound_override=args.inject_bound)
    d = rep.to_dict()
    inputs = {"family": d["family"], "max": args.max, "torsion_window": window}
    summary = {"stable_divisor": d["stable_divisor"], "last_change": d["last_change"],
               "stabilized": d["stabilized"], "stabilization_note": d["stabilization_note"],
               "records": len(rep.records), "torsion_check": d["torsion_check"],
               "bound": _opt_str(rep.records[0].bound if rep.records else fam.degree_bound()),
               "violations": d["violations"]}
    return inputs, d["records"], summary


def cmd_density(args):
    fam = _family(args)
    rep = gcdlab.coprimality_density(fam, args.max, workers=args.workers, seed=args.seed)
    d = rep.to_dict()
    inputs = {"family": fam.describe(), "max": args.max}
    records = [m for m in d["monoids"]]
    viol = [f"closure failure in monoid of {m['zero']}" for m in records if m["closure_violations"]]
    viol += rep.sweep.violations
    summary = {"density": d["density"], "coprime": d["coprime"], "total": d["total"],
               "grid_note": d["grid_note"], "stable_divisor": _pc(rep.sweep.stable_divisor),
               "violations": viol}
    return inputs, records, summary


def cmd_genar1(args):
    h1, h2, f, g = _u(args.h1), _u(args.h2), _u(args.f), _u(args.g)
    gcd, bound = gcdlab.genAR1_gcd(h1, h2, f, g, args.n, args.m, precheck=args.precheck)
    if args.inject_bound is not None:
        bound = args.inject_bound
    ok = gcd.degree <= bound
    inputs = {"h1": _pc(h1), "h2": _pc(h2), "f": _pc(f), "g": _pc(g), "n": args.n, "m": args.m,
              "precheck": args.precheck}
    rec = {"gcd": _pc(gcd), "degree": gcd.degree, "bound": str(bound), "within_bound": ok}
    viol = [] if ok or not args.precheck else [f"degree {gcd.degree} exceeds {bound}"]
    return inputs, [rec], {"bound": str(bound), "violations": viol}


def cmd_sunit_gcd(args):
    fs, phis, gs, psis = _us(args.fs), _us(args.phis), _us(args.gs), _us(args.psis)
    d = gcdlab.sunit_gcd(fs, phis, gs, psis, args.exps)
    inputs = {"fs": [_pc(p) for p in fs], "phis": [_pc(p) for p in phis], "gs": [_pc(p) for p in gs],
              "psis": [_pc(p) for p in psis], "exps": list(args.exps)}
    return inputs, [{"gcd": _pc(d), "degree": d.degree}], {"violations": []}


def cmd_independence(args):
    polys = _parse_mixed(args.polys, args.arity)
    mode = args.mode
    v = is_mult_independent(polys, mode)
    inputs = {"polys": [_pc(p) for p in polys], "mode": mode}
    if v:
        rec = {"verdict": "independent", "basis": [_pc(b) for b in v.basis.basis]}
    else:
        rec = {"verdict": "dependent", "certificate": list(v.relation), "constant": _frac(v.constant),
               "certificate_checks": v.check(polys)}
    viol = [] if v or rec["certificate_checks"] else ["certificate does not re-multiply"]
    return inputs, [rec], {"violations": viol}


def _parse_mixed(texts, arity=None):
    nodes = [parse(t) for t in texts]
    if arity is None and all(ast_arity(n) == 0 for n in nodes):
        from .expr import variables

        if all(variables(n) <= {"T"} for n in nodes):
            return [to_upoly(n) for n in nodes]
    return _ms(texts, arity)


def cmd_torsion_count(args):
    H = _ms([args.curve], 2)[0]
    B = args.max_order if args.max_order is not None else torsion.default_scan_bound(H)
    cfg = torsion.TorsionScanConfig(max_order=B, prime_count=args.primes, certify=args.certify)
    res = torsion.count_torsion_points(H, cfg)
    inputs = {"curve": _pc(H), "max_order": B, "primes": args.primes, "certify": args.certify}
    if isinstance(res, torsion.ExceptionalFactorFlag):
        raise gcdlab.HypothesisError(
            f"exceptional factor {res.form} with i={res.i}, j={res.j}, root of unity order {res.rho_order}: "
            f"{_pc(res.factor)} divides the curve")
    records = [{"order_x": p.order_x, "index_x": p.index_x, "order_y": p.order_y, "index_y": p.index_y}
               for p in res.points]
    bound = res.beukers_smyth_bound()
    viol = [] if res.count <= bound else [f"{res.count} points exceed {bound}"]
    summary = {"count": res.count, "bound": str(bound), "primes_used": res.primes_used,
               "skipped_pairs": [list(x) for x in res.skipped_pairs], "certified": res.certified,
               "violations": viol}
    return inputs, records, summary


def cmd_torsion_zeros(args):
    f, g = _u(args.f), _u(args.g)
    z = torsion.common_torsion_zeros(f, g, args.window)
    inputs = {"f": _pc(f), "g": _pc(g), "window": args.window}
    return inputs, [{"zeros": _pc(z), "count": z.degree}], {"violations": []}


def cmd_abc_check(args):
    fs, gs = _us(args.fs), _us(args.gs)
    res = gcdlab.abc_mult_check(fs, gs, args.ns, args.ms)
    inputs = {"fs": [_pc(p) for p in fs], "gs": [_pc(p) for p in gs], "ns": list(args.ns), "ms": list(args.ms)}
    rec = {"mult": res.mult, "bound": res.bound, "ok": res.ok}
    viol = [] if res.ok else [f"multiplicity {res.mult} exceeds {res.bound}"]
    return inputs, [rec], {"bound": str(res.bound), "violations": viol}


def cmd_mason(args):
    A, B, C = _u(args.A), _u(args.B), _u(args.C)
    ok = gcdlab.mason_stothers_check(A, B, C)
    inputs = {"A": _pc(A), "B": _pc(B), "C": _pc(C)}
    top = max(p.degree for p in (A, B, C) if not p.is_zero)
    rad = gcdlab.radical(A * B * C).degree
    rec = {"max_degree": top, "radical_degree": rad, "ok": ok}
    return inputs, [rec], {"violations": [] if ok else ["max degree exceeds deg rad(ABC) - 1"]}


def cmd_kronecker(args):
    F = _ms([args.poly], args.arity)[0]
    fn = reduce.kronecker_forward if args.direction == "forward" else reduce.kronecker_backward
    out = fn(F, args.d)
    inputs = {"poly": _pc(F), "arity": F.arity, "d": args.d, "direction": args.direction}
    return inputs, [{"result": _pc(out), "total_degree": out.total_degree()}], {"violations": []}


def cmd_specialize(args):
    Fs = _ms(args.polys, args.arity)
    if args.kronecker is not None:
        Fs = [reduce.kronecker_forward(F, args.kronecker) for F in Fs]
    sp = reduce.find_independent_specialization(Fs, args.budget, args.mode)
    inputs = {"polys": [_pc(F) for F in Fs], "budget": args.budget, "mode": args.mode,
              "kronecker": args.kronecker}
    rec = {"alphas": [_frac(a) for a in sp.alphas], "specialized": [_pc(p) for p in sp.specialized],
           "candidates_tried": sp.tried}
    return inputs, [rec], {"violations": []}


def cmd_multivar_check(args):
    F, G = _ms([args.F, args.G], args.arity)
    h1, h2 = _u(args.h1), _u(args.h2)
    res = reduce.multivAR_check(h1, h2, F, G, args.n, args.m, args.budget, bound_override=args.inject_bound)
    inputs = {"h1": _pc(h1), "h2": _pc(h2), "F": _pc(F), "G": _pc(G), "n": args.n, "m": args.m,
              "budget": args.budget}
    viol = [] if res.ok else [f"chain {res.to_dict()['chain']} fails"]
    return inputs, [res.to_dict()], {"bound": str(res.bound), "violations": viol}


def cmd_annihilate(args):
    Fs = _ms(args.polys, args.arity)
    ell = Fs[0].arity
    D = max(F.total_degree() or 0 for F in Fs)
    cap = args.deg_cap if args.deg_cap is not None else max(1, D ** ell)
    eqs, unknowns = reduce.annihilator_system_size(ell, cap, D)
    print(f"annihilator: about {eqs} x {unknowns} system", file=sys.stderr)
    res = reduce.annihilator(Fs, cap)
    composed = res.poly.compose(Fs)
    inputs = {"polys": [_pc(F) for F in Fs], "deg_cap": cap}
    rec = dict(res.to_dict(), composes_to_zero=composed.is_zero)
    viol = []
    if not composed.is_zero:
        viol.append("R(F) is not zero")
    if res.poly.total_degree() > max(1, D ** ell):
        viol.append(f"degree {res.poly.total_degree()} exceeds {D ** ell}")
    return inputs, [rec], {"bound": str(D ** ell), "violations": viol}


def cmd_coset_check(args):
    Fs = _parse_mixed(args.polys, args.arity)
    rep = reduce.common_torsion_variety_check(Fs, args.n_cap, args.b_cap)
    d = rep.to_dict()
    inputs = {"polys": [_pc(F) for F in Fs], "n_cap": args.n_cap, "b_cap": args.b_cap}
    summary = {k: d[k] for k in ("covering_relations", "cover", "uncovered_pieces", "degenerate_components",
                                 "within_bound", "point_counts")}
    summary["bound"] = d["N_bound"]
    summary["violations"] = []
    return inputs, d["pieces"], summary


def cmd_bounds(args):
    params = {}
    for name in ("df", "dg", "dh1", "dh2", "D", "ell", "deg", "s"):
        v = getattr(args, name)
        if v is not None:
            params[name] = v
    if args.degrees:
        params["degrees"] = list(args.degrees)
    rep = bounds(args.theorem, **params)
    d = rep.to_dict()
    return {"theorem": args.theorem, **{k: v for k, v in params.items()}}, [d], \
        {"bound": d["value"], "violations": []}


# argument parsing


def _common(p):
    p.add_argument("--output", "-o", help="report path (default: stdout)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=None, help="worker processes (env ARLAB_WORKERS)")
    p.add_argument("--arity", type=int, default=None, help="arity of multivariate inputs")
    p.add_argument("--inject-bound", type=int, default=None, help=argparse.SUPPRESS)


def _family_args(p):
    p.add_argument("--f")
    p.add_argument("--g")
    p.add_argument("--fs", nargs="+")
    p.add_argument("--phis", nargs="*", default=[])
    p.add_argument("--gs", nargs="+")
    p.add_argument("--psis", nargs="*", default=[])
    p.add_argument("--h1")
    p.add_argument("--h2")
    p.add_argument("--max", type=int, required=True, help="grid bound")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="arlab", description="gcd and torsion experiments over Q[T]")
    ap.add_argument("--version", action="version", version=f"arlab {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gcd-sweep", help="sweep gcds over an exponent grid")
    _family_args(p)
    p.add_argument("--torsion-window", type=int, default=None)
    p.set_defaults(func=cmd_gcd_sweep)

    p = sub.add_parser("density", help="coprimality density and exceptional monoids")
    _family_args(p)
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("genar1", help="gcd(h1(f^n), h2(g^m)) with its bound")
    for k in ("h1", "h2", "f", "g"):
        p.add_argument(f"--{k}", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--precheck", action="store_true")
    p.set_defaults(func=cmd_genar1)

    p = sub.add_parser("sunit-gcd", help="gcd of two S-unit differences")
    p.add_argument("--fs", nargs="+", required=True)
    p.add_argument("--phis", nargs="*", default=[])
    p.add_argument("--gs", nargs="+", required=True)
    p.add_argument("--psis", nargs="*", default=[])
    p.add_argument("--exps", nargs="+", type=int, required=True)
    p.set_defaults(func=cmd_sunit_gcd)

    p = sub.add_parser("independence", help="multiplicative independence with certificate")
    p.add_argument("--polys", nargs="+", required=True)
    p.add_argument("--mode", choices=(PLAIN, MOD_CONSTANTS), default=MOD_CONSTANTS)
    p.set_defaults(func=cmd_independence)

    p = sub.add_parser("torsion-count", help="root-of-unity points on a plane curve")
    p.add_argument("--curve", required=True)
    p.add_argument("--max-order", type=int, default=None)
    p.add_argument("--primes", type=int, default=3)
    p.add_argument("--certify", action="store_true")
    p.set_defaults(func=cmd_torsion_count)

    p = sub.add_parser("torsion-zeros", help="t with f(t), g(t) roots of unity of bounded order")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--window", type=int, required=True)
    p.set_defaults(func=cmd_torsion_zeros)

    p = sub.add_parser("abc-check", help="largest root multiplicity of an S-unit difference")
    p.add_argument("--fs", nargs="+", required=True)
    p.add_argument("--gs", nargs="+", required=True)
    p.add_argument("--ns", nargs="+", type=int, required=True)
    p.add_argument("--ms", nargs="+", type=int, required=True)
    p.set_defaults(func=cmd_abc_check)

    p = sub.add_parser("mason", help="polynomial abc inequality for A + B = C")
    p.add_argument("--A", required=True)
    p.add_argument("--B", required=True)
    p.add_argument("--C", required=True)
    p.set_defaults(func=cmd_mason)

    p = sub.add_parser("kronecker", help="Kronecker shift or its inverse")
    p.add_argument("--poly", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--direction", choices=("forward", "backward"), default="forward")
    p.set_defaults(func=cmd_kronecker)

    p = sub.add_parser("specialize", help="search for an independence-preserving specialization")
    p.add_argument("--polys", nargs="+", required=True)
    p.add_argument("--budget", type=int, default=1000)
    p.add_argument("--mode", choices=(PLAIN, MOD_CONSTANTS), default=MOD_CONSTANTS)
    p.add_argument("--kronecker", type=int, default=None, help="apply the shift with this d first")
    p.set_defaults(func=cmd_specialize)

    p = sub.add_parser("multivar-check", help="direct versus specialized gcd in several variables")
    for k in ("h1", "h2", "F", "G"):
        p.add_argument(f"--{k}", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--budget", type=int, default=1000)
    p.set_defaults(func=cmd_multivar_check)

    p = sub.add_parser("annihilate", help="algebraic relation between l+1 polynomials in l variables")
    p.add_argument("--polys", nargs="+", required=True)
    p.add_argument("--deg-cap", type=int, default=None)
    p.set_defaults(func=cmd_annihilate)

    p = sub.add_parser("coset-check", help="cover common torsion zeros by monomial relations")
    p.add_argument("--polys", nargs="+", required=True)
    p.add_argument("--n-cap", type=int, required=True)
    p.add_argument("--b-cap", type=int, default=4)
    p.set_defaults(func=cmd_coset_check)

    p = sub.add_parser("bounds", help="evaluate a closed-form bound exactly")
    p.add_argument("--theorem", required=True, choices=THEOREMS)
    for k in ("df", "dg", "dh1", "dh2", "D", "ell", "deg", "s"):
        p.add_argument(f"--{k}", type=int)
    p.add_argument("--degrees", nargs="+", type=int)
    p.set_defaults(func=cmd_bounds)

    for p in sub.choices.values():
        _common(p)
    return ap


# report assembly


def _csv(report: dict) -> str:
    records = report["records"]
    keys: list[str] = []
    for r in records:
        for k in r:
            if k not in keys:
                keys.append(k)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(keys)
    for r in records:
        row = []
        for k in keys:
            v = r.get(k)
            row.append(json.dumps(v, sort_keys=True) if isinstance(v, (list, dict)) else ("" if v is None else v))
        w.writerow(row)
    return buf.getvalue()


def _emit(report: dict, args) -> None:
    text = _csv(report) if args.format == "csv" else json.dumps(report, indent=2) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.workers is None and os.environ.get("ARLAB_WORKERS"):
        args.workers = int(os.environ["ARLAB_WORKERS"])
    if args.workers is not None and args.workers < 1:
        ap.error("--workers must be positive")
    base = {"schema": SCHEMA, "command": args.command}
    try:
        inputs, records, summary = args.func(args)
    except ExprSyntaxError as e:
        print(f"arlab: parse error: {e}", file=sys.stderr)
        return 1
    except (gcdlab.HypothesisError, gcdlab.PreconditionError, reduce.SpecializationBudgetError) as e:
        report = dict(base, inputs={}, records=[], error=str(e),
                      summary={"violations": []}, version=__version__)
        cert = getattr(e, "certificate", None)
        if cert is not None and hasattr(cert, "relation"):
            report["certificate"] = list(cert.relation)
        _emit(report, args)
        print(f"arlab: hypothesis failure: {e}", file=sys.stderr)
        return 2
    except gcdlab.BoundViolation as e:
        print(f"arlab: bound violation: {e}", file=sys.stderr)
        return 3
    except (ValueError, ArithmeticError) as e:
        print(f"arlab: {e}", file=sys.stderr)
        return 1
    inputs = dict(inputs, seed=args.seed)
    report = dict(base, inputs=inputs, records=records, summary=summary, version=__version__)
    _emit(report, args)
    if summary.get("violations"):
        print("arlab: bound violation detected", file=sys.stderr)
        return 3
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
