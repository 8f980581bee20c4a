"""Command-line front end.

Exit codes: 0 success, 2 negative answer (non-member, infeasible, predicate
false; a certificate is printed), 3 invalid input, 4 solver failure. Results
go to stdout as JSON with floats at 12 significant digits; a one-line summary
goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Optional, Sequence

import numpy as np

from . import circle, cones, decomp, extremal
from .group import GroupSpec, Window
from .lp import IterationLimitError, NumericalError
from .spectral import GFunc, convolve, converse, dft

EXIT_OK = 0
EXIT_NEGATIVE = 2
EXIT_INPUT = 3
EXIT_SOLVER = 4


class InputError(ValueError):
    pass


# -- output -----------------------------------------------------------------


def _clean(obj):
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _clean(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if not math.isfinite(x):
            return None
        x = float(f"{x:.12g}")
        return 0.0 if x == 0 else x
    if isinstance(obj, complex):
        return [_clean(obj.real), _clean(obj.imag)]
    return obj


def dumps(obj) -> str:
    return json.dumps(_clean(obj), indent=2)


def _emit(obj, summary: str, code: int = EXIT_OK) -> int:
    print(dumps(obj))
    print(summary, file=sys.stderr)
    return code


# -- input ------------------------------------------------------------------


def _load_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from exc


def _load_gfunc(path: str) -> GFunc:
    data = _load_json(path)
    if not isinstance(data, dict) or "group" not in data or "values" not in data:
        raise InputError(f"{path}: expected an object with 'group' and 'values'")
    return GFunc.from_json(data)


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if text.startswith("["):
        vals = json.loads(text)
    else:
        vals = [t for t in text.split(",") if t.strip()]
    try:
        return [int(v) for v in vals]
    except (TypeError, ValueError) as exc:
        raise InputError(f"expected a list of integers, got {text!r}") from exc


def _group(text: str) -> GroupSpec:
    return GroupSpec(tuple(_int_list(text)))


def _window(G: GroupSpec, text: str) -> Window:
    idx = _int_list(text)
    for i in idx:
        if not 0 <= i < G.total_order:
            raise InputError(f"index {i} out of range for a group of order {G.total_order}")
    return Window(G, frozenset(idx))


# -- commands ---------------------------------------------------------------


def _first_violation(f: GFunc, kind: str, tol: float) -> dict:
    if kind in ("nonneg", "doubly-positive") and np.abs(f.imag).max(initial=0.0) > tol:
        k = int(np.argmax(np.abs(f.imag)))
        return {"where": "values", "index": k, "value": complex(f.values[k])}
    if kind == "doubly-positive" and f.real.min() < -tol:
        k = int(np.argmin(f.real))
        return {"where": "values", "index": k, "value": complex(f.values[k])}
    F = dft(f).values
    if kind != "postype-real":
        k = int(np.argmax(np.abs(F.imag)))
        if abs(F.imag[k]) > tol:
            return {"where": "spectrum", "index": k, "value": complex(F[k])}
    k = int(np.argmin(F.real))
    return {"where": "spectrum", "index": k, "value": complex(F[k])}


def cmd_check(args) -> int:
    f = _load_gfunc(args.file)
    tests = {
        "pd": cones.is_pd_fourier,
        "postype": cones.is_postype,
        "postype-real": cones.is_postype_real_sense,
        "doubly-positive": cones.is_doubly_positive,
    }
    ok = tests[args.predicate](f, args.tol)
    out = {"predicate": args.predicate, "holds": ok}
    if not ok:
        out["violation"] = _first_violation(f, args.predicate, args.tol)
    return _emit(out, f"{args.predicate}: {'yes' if ok else 'no'}", EXIT_OK if ok else EXIT_NEGATIVE)


def _decomp_out(res: decomp.DecompResult, tol: float) -> tuple[dict, int]:
    out = res.to_json()
    out["verified"] = res.verify(max(tol, 1e-9))
    return out, EXIT_OK if res.is_member else EXIT_NEGATIVE


def cmd_decompose(args) -> int:
    rho = _load_gfunc(args.file)
    res = decomp.decompose(rho, args.tol)
    out, code = _decomp_out(res, args.tol)
    summary = f"member (residual {res.residual:.3g})" if res.is_member else "non-member, witness emitted"
    return _emit(out, summary, code)


def cmd_inequality(args) -> int:
    mu, nu = _load_gfunc(args.mu), _load_gfunc(args.nu)
    res = decomp.check_inequality(mu, nu, args.c, args.tol)
    out, code = _decomp_out(res, args.tol)
    out["C"] = args.c
    return _emit(out, f"C = {args.c:.12g}: {'holds' if res.is_member else 'fails'}", code)


def cmd_interval(args) -> int:
    mu, nu = _load_gfunc(args.mu), _load_gfunc(args.nu)
    res = decomp.admissible_interval(mu, nu, args.tol)
    summary = "empty" if res.empty else f"[{res.lo:.12g}, {res.hi:.12g}]"
    return _emit(res.to_json(), f"admissible C: {summary}", EXIT_NEGATIVE if res.empty else EXIT_OK)


def cmd_extremal(args) -> int:
    G = _group(args.group)
    U = _window(G, args.u)
    what = args.quantity
    if what == "q":
        if args.k is None:
            raise InputError("extremal q needs --k")
        res = extremal.q_value(U, args.k)
    elif what == "t":
        if args.g is None:
            raise InputError("extremal t needs --g (an element index)")
        if not 0 <= args.g < G.total_order:
            raise InputError(f"--g {args.g} out of range")
        res = extremal.t_value(U, G.element(args.g))
    else:
        if args.v is None:
            raise InputError(f"extremal {what} needs --v")
        V = _window(G, args.v)
        if what == "s":
            res = extremal.s_value(U, V)
        elif what == "sigma":
            sg = extremal.sigma_value(U, V)
            out = {"C": sg.C, "sigma": sg.sigma, "g": sg.g.to_json()}
            return _emit(out, f"sigma = {sg.sigma:.12g}")
        else:
            rep = extremal.duality_check(U, V)
            return _emit(rep.to_json(), f"S = {rep.s:.12g}, sigma = {rep.sigma:.12g}, gap = {rep.gap:.3g}",
                         EXIT_OK if rep.ok else EXIT_SOLVER)
    return _emit(res.to_json(), f"{what.upper()} = {res.value:.12g} (gap {res.gap:.3g})")


def cmd_logan(args) -> int:
    v = extremal.logan_bound(args.t)
    print(f"{v:.12g}")
    print(f"Logan bound C({args.t:g}) = {v:.12g}", file=sys.stderr)
    return EXIT_OK


def cmd_logan_compare(args) -> int:
    G, U, V = extremal.discretize_line(args.t, args.half_width, args.n)
    res = extremal.s_value(U, V)
    sg = extremal.sigma_value(U, V)
    bound = extremal.logan_bound(args.t)
    out = {
        "T": args.t,
        "n": args.n,
        "half_width": args.half_width,
        "logan_bound": bound,
        "S": res.value,
        "sigma": sg.sigma,
        "gap": abs(sg.sigma - res.value),
        "ratio_to_bound": res.value / bound,
    }
    return _emit(out, f"S = {res.value:.12g} vs Logan {bound:.12g}")


def _load_circle(path: str) -> circle.CircleMeasure:
    data = _load_json(path)
    if not isinstance(data, dict):
        raise InputError(f"{path}: expected an object with 'atoms' and 'density'")
    return circle.CircleMeasure.from_json(data)


def cmd_atomic(args) -> int:
    m = _load_circle(args.file)
    N = args.n
    if args.action == "mass":
        if args.x0 is None:
            raise InputError("atomic mass needs --x0")
        est = circle.atomic_mass(m, args.x0, N)
        bound = circle.atomic_mass_bound(m, args.x0, N)
        out = {"x0": args.x0, "N": N, "estimate": est, "bound": bound, "stored": m.point_mass(args.x0)}
        return _emit(out, f"mass at {args.x0:.12g} ~ {est.real:.12g}{est.imag:+.12g}i (+- {bound:.3g})")
    if args.action == "energy":
        e = circle.energy(m, N)
        out = {"N": N, "estimate": e, "bound": circle.energy_bound(m, N), "atomic_energy": circle.atomic_energy(m)}
        return _emit(out, f"energy ~ {e:.12g}")
    if args.action == "scan":
        found = circle.scan_atoms(m, N)
        return _emit({"N": N, "atoms": [[x, a] for x, a in found]}, f"{len(found)} atoms above threshold")
    res = circle.atomic_part_postype_check(m, N, args.tol, args.extract)
    code = EXIT_OK if res.ok else EXIT_NEGATIVE
    return _emit(res.to_json(), f"atomic part positive type: {'yes' if res.ok else 'no'}", code)


def cmd_boas_kac(args) -> int:
    f = _load_gfunc(args.file)
    g = cones.boas_kac_root(f, args.tol)
    resid = float(np.abs(convolve(g, converse(g)).values - f.values).max())
    return _emit({"root": g.to_json(), "residual": resid}, f"root found, residual {resid:.3g}")


def cmd_selftest(args) -> int:
    rng = np.random.default_rng(args.seed)
    report = {"seed": args.seed, "checks": {}}
    G = GroupSpec((int(rng.integers(2, 7)), int(rng.integers(1, 5))))
    n = G.total_order
    f = GFunc(G, rng.normal(size=n) + 1j * rng.normal(size=n))
    report["checks"]["bochner"] = cones.is_pd_fourier(f) == cones.is_pd_gram(f)
    sq = cones.convolution_square(f)
    report["checks"]["convolution_square_pd"] = cones.is_pd_fourier(sq, 1e-8)
    omega = GFunc(G, rng.random(n))
    tau = cones.convolution_square(GFunc(G, rng.normal(size=n)))
    odd = GFunc(G, rng.normal(size=n))
    odd = (odd - GFunc(G, odd.values[G.neg_index])) * 0.5
    res = decomp.decompose(omega + tau + odd, args.tol)
    report["checks"]["decompose_member"] = res.is_member and res.verify(1e-8)
    m = rng.random(n) < 0.4
    m = m | m[G.neg_index]
    m[0] = True
    U = Window(G, frozenset(np.flatnonzero(m).tolist()))
    V = Window(G, frozenset([int(rng.integers(n))]))
    rep = extremal.duality_check(U, V)
    report["checks"]["duality"] = rep.ok
    report["duality_gap"] = rep.gap
    ok = all(report["checks"].values())
    return _emit(report, f"selftest {'passed' if ok else 'FAILED'}", EXIT_OK if ok else EXIT_SOLVER)


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=argparse.SUPPRESS, help="numerical tolerance")

    p = argparse.ArgumentParser(prog="dpcone", description="Doubly positive cones on finite abelian groups.")
    p.add_argument("--tol", type=float, default=1e-9, help="numerical tolerance (default 1e-9)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", parents=[common], help="cone membership predicates")
    s.add_argument("predicate", choices=["pd", "postype", "postype-real", "doubly-positive"])
    s.add_argument("file")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("decompose", parents=[common], help="split rho = omega + tau + odd or find a witness")
    s.add_argument("file")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("inequality", parents=[common], help="test sum f nu <= C sum f mu")
    s.add_argument("mu")
    s.add_argument("nu")
    s.add_argument("--c", type=float, required=True)
    s.set_defaults(func=cmd_inequality)

    s = sub.add_parser("interval", parents=[common], help="admissible constants C")
    s.add_argument("mu")
    s.add_argument("nu")
    s.set_defaults(func=cmd_interval)

    s = sub.add_parser("extremal", parents=[common], help="extremal constants S, Q, T, sigma")
    s.add_argument("quantity", choices=["s", "q", "t", "sigma", "duality"])
    s.add_argument("--group", required=True, help="cyclic orders, e.g. 2,3")
    s.add_argument("--u", required=True, help="indices of U, e.g. 0,1")
    s.add_argument("--v", help="indices of V")
    s.add_argument("--k", type=int, help="sumset order for q")
    s.add_argument("--g", type=int, help="translation (element index) for t")
    s.set_defaults(func=cmd_extremal)

    s = sub.add_parser("logan", parents=[common], help="Logan's closed-form bound")
    s.add_argument("--t", type=float, required=True)
    s.set_defaults(func=cmd_logan)

    s = sub.add_parser("logan-compare", parents=[common], help="discretized line problem vs Logan's bound")
    s.add_argument("--t", type=float, required=True)
    s.add_argument("--n", type=int, default=512)
    s.add_argument("--half-width", type=float, default=16.0)
    s.set_defaults(func=cmd_logan_compare)

    s = sub.add_parser("atomic", parents=[common], help="atom extraction on the circle")
    s.add_argument("action", choices=["mass", "energy", "check", "scan"])
    s.add_argument("file")
    s.add_argument("--n", type=int, required=True, help="truncation N (sample range for check)")
    s.add_argument("--x0", type=float)
    s.add_argument("--extract", type=int, help="for check: re-extract masses with this N")
    s.set_defaults(func=cmd_atomic)

    s = sub.add_parser("boas-kac", parents=[common], help="square root under convolution")
    s.add_argument("file")
    s.set_defaults(func=cmd_boas_kac)

    s = sub.add_parser("selftest", parents=[common], help="randomized consistency checks")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_selftest)
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args)
    except (decomp.SolverFailure, IterationLimitError, NumericalError) as exc:
        print(f"solver failure: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except (ValueError, KeyError, TypeError, IndexError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
