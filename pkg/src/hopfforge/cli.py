"""Command-line front end.

Exit status is 0 when a command finds no violations, 1 when it reports
violations or a negative answer, and 2 on errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import growth, liealg, solver
from .errors import HopfForgeError, InvalidParameter
from .freealg import NcPoly
from .hopf import Grading, grading_check, hopf_axiom_report
from .parsing import parse_element, parse_word, tensor_json
from .presets import load_algebra
from .scalars import format_scalar

OK, FAILED, ERROR = 0, 1, 2
MAX_LINES = 20


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, ensure_ascii=False))
    else:
        print(text)


def _algebra(args):
    if not args.algebra:
        raise InvalidParameter("--algebra is required for this command")
    return load_algebra(args.algebra)


def _element_list(H, text: str | None) -> list[NcPoly]:
    return [parse_element(part, H) for part in text.split(",") if part.strip()]


def _default_gens(H) -> list[NcPoly]:
    out = [NcPoly.scalar(1)]
    for i, g in enumerate(H.generators):
        out.append(NcPoly.word((i + 1,)))
        if g.invertible:
            out.append(H.normal_form(NcPoly.word((-(i + 1),))))
    return out


def _violations_out(args, name: str, violations: list, extra: dict | None = None) -> int:
    payload = {"algebra": name, "ok": not violations, "violations": [str(v) for v in violations]}
    payload.update(extra or {})
    lines = [str(v) for v in violations[:MAX_LINES]]
    if len(violations) > MAX_LINES:
        lines.append(f"... {len(violations) - MAX_LINES} more")
    text = "pass" if not violations else "\n".join(lines)
    _emit(args, payload, text)
    return OK if not violations else FAILED


# -- element calculus --------------------------------------------------------

def cmd_nf(args) -> int:
    H = _algebra(args)
    p = parse_element(args.expr, H)
    _emit(args, {"nf": H.format(p)}, H.format(p))
    return OK


def cmd_coprod(args) -> int:
    H = _algebra(args)
    T = H.coproduct(parse_element(args.expr, H))
    _emit(args, {"coproduct": tensor_json(T, H)}, H.format_tensor(T))
    return OK


def cmd_antipode(args) -> int:
    H = _algebra(args)
    s = H.antipode(parse_element(args.expr, H))
    _emit(args, {"antipode": H.format(s)}, H.format(s))
    return OK


def cmd_counit(args) -> int:
    H = _algebra(args)
    c = H.counit(parse_element(args.expr, H))
    _emit(args, {"counit": format_scalar(c)}, format_scalar(c))
    return OK


# -- verification ------------------------------------------------------------

def cmd_check_hopf(args) -> int:
    H = _algebra(args)
    violations = hopf_axiom_report(H, args.degree, args.trials, args.seed)
    cp = H.critical_pair_check()
    violations += [f"[confluence] {f}" for f in cp.failures]
    return _violations_out(args, H.name, violations, {"critical_pairs": cp.checked})


def _parse_weights(H, specs: list[str] | None) -> dict:
    if not specs:
        # default: the y-grading, skew-primitive letters weigh 1
        return {g.name: (0 if p is None else 1,) for g, p in zip(H.generators, H.pairs)}
    weights = {}
    for spec in specs:
        name, _, vals = spec.partition("=")
        if name not in H.index:
            raise InvalidParameter(f"unknown generator {name!r} in --weight")
        weights[name] = tuple(int(v) for v in vals.split(","))
    dims = {len(w) for w in weights.values()}
    if len(dims) != 1:
        raise InvalidParameter("all weights need the same number of components")
    (d,) = dims
    for g in H.generators:
        weights.setdefault(g.name, (0,) * d)
    return weights


def cmd_check_grading(args) -> int:
    H = _algebra(args)
    weights = _parse_weights(H, args.weight)
    kinds = tuple(args.kinds.split(",")) if args.kinds else ()
    if kinds and (set(kinds) - {"coalgebra", "comodule"} or len(kinds) != len(next(iter(weights.values())))):
        raise InvalidParameter("--kinds needs one of coalgebra/comodule per weight component")
    G = Grading(weights, kinds)
    violations = grading_check(H, G, args.trials, args.seed, args.degree)
    return _violations_out(args, H.name, violations)


# -- solver ------------------------------------------------------------------

def cmd_skew_prim(args) -> int:
    H = _algebra(args)
    u = parse_word(args.pair_u, H)
    v = parse_word(args.pair_v, H)
    S = solver.skew_primitive_space(H, u, v, solver.Window(args.ydeg, args.ebound))
    text = f"dimension {S.dimension}\n" + "\n".join(H.format(b) for b in S.basis)
    _emit(args, S.to_json(H), text.rstrip())
    return OK


def cmd_group_like(args) -> int:
    H = _algebra(args)
    words = solver.group_like_space(H, solver.Window(args.ydeg, args.ebound))
    names = [H.format_word(w) for w in words]
    _emit(args, {"count": len(names), "group_like": names}, "\n".join(names))
    return OK


def cmd_classify(args) -> int:
    H = _algebra(args)
    c = solver.classify_skew_primitive(H, parse_element(args.expr, H))
    payload = {"y_degree": c.y_degree, "lambda": format_scalar(c.lam), "a": c.a}
    if c.y_degree == 0:
        payload["m"] = c.m
        text = f"y_degree 0: lambda = {format_scalar(c.lam)}, a = {c.a}, m = {c.m}"
    else:
        payload["homogeneous_part"] = H.format(c.homogeneous_part)
        text = f"y_degree 1: f0 = {H.format(c.homogeneous_part)}, lambda = {format_scalar(c.lam)}, a = {c.a}"
    _emit(args, payload, text)
    return OK


def cmd_orbit(args) -> int:
    beta = tuple(int(v) for v in args.beta.split(","))
    rep = solver.orbit_check(beta, args.t, args.smax)
    payload = {
        "beta": list(beta), "t": rep.t, "b": rep.b, "ok": rep.ok, "distinct": rep.distinct,
        "images": [list(im) for im in rep.images],
        "mismatches": [[s, list(got), list(exp)] for s, got, exp in rep.mismatches],
    }
    lines = [f"s={s}: {im}" for s, im in enumerate(rep.images, start=1)]
    lines.append("closed form matches, images distinct" if rep.ok else "MISMATCH")
    _emit(args, payload, "\n".join(lines))
    return OK if rep.ok else FAILED


def cmd_find_sub(args) -> int:
    H = _algebra(args)
    g = parse_word(args.g, H)
    y = parse_element(args.y, H)
    d = solver.find_subalgebra_data(H, g, y, args.cap)
    payload = {
        "f": H.format(d.f), "xi": format_scalar(d.xi), "beta": format_scalar(d.beta), "b": d.b,
        "relation": [format_scalar(c) for c in d.relation.coefficients],
        "lambda": format_scalar(d.relation.lam),
    }
    _emit(args, payload, d.describe(H))
    return OK


# -- growth ------------------------------------------------------------------

def _dims_out(args, D: growth.DimSequence) -> int:
    if args.csv:
        sys.stdout.write(D.csv())
        return OK
    try:
        est = growth.gk_estimate(D)
    except HopfForgeError:
        est = None
    payload = est.to_json() if est else {"dims": D.dims}
    payload["generators"] = D.generators
    if D.truncated:
        payload["truncated"] = True
    if est is None:
        text = f"dims {D.dims}"
    elif est.superpolynomial:
        text = f"superpolynomial\ndims {D.dims}"
    else:
        text = f"degree {est.degree} (log2 ratio {est.ratio_exponent:.4f})\ndims {D.dims}"
    _emit(args, payload, text)
    return OK


def cmd_gk(args) -> int:
    H = _algebra(args)
    V = _element_list(H, args.gens) if args.gens else _default_gens(H)
    if args.gens:
        V = [NcPoly.scalar(1)] + V
    return _dims_out(args, growth.span_dimension_sequence(H, V, args.N))


def cmd_ball(args) -> int:
    H = _algebra(args)
    names = [n.strip() for n in args.gens.split(",")] if args.gens else None
    return _dims_out(args, growth.ball_growth(H, args.N, names))


def cmd_lie_sub(args) -> int:
    L = liealg.load_lie(args.lie)
    u, v = liealg.two_dim_subalgebra(L)
    w = L.bracket(u, v)
    payload = {
        "u": [format_scalar(c) for c in u], "v": [format_scalar(c) for c in v],
        "bracket": [format_scalar(c) for c in w],
        "lower_central_series": liealg.lower_central_series(L),
    }
    text = f"u = {L.format_vector(u)}\nv = {L.format_vector(v)}\n[u, v] = {L.format_vector(w)}"
    _emit(args, payload, text)
    return OK


def cmd_verify_sub(args) -> int:
    H = _algebra(args)
    rep = growth.verify_hopf_subalgebra(H, _element_list(H, args.gens), args.cap)
    return _violations_out(args, H.name, rep.violations, {"dims": rep.dims, "cap": rep.cap})


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", help="preset selector (F:t=1, A:b=1,xi=2, C:m=2, E:n=1, Zn:n=2, heis, zxz2, env:sl2) or JSON file")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0)

    ap = argparse.ArgumentParser(prog="hopfforge", description="Exact computation in pointed Hopf algebras.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, expr=False):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if expr:
            p.add_argument("expr")
        p.set_defaults(func=func)
        return p

    add("nf", cmd_nf, "normal form of an element", expr=True)
    add("coprod", cmd_coprod, "coproduct of an element", expr=True)
    add("antipode", cmd_antipode, "antipode of an element", expr=True)
    add("counit", cmd_counit, "counit of an element", expr=True)
    p = add("check-hopf", cmd_check_hopf, "verify Hopf axioms and confluence")
    p.add_argument("--degree", type=int, default=3)
    p.add_argument("--trials", type=int, default=20)
    p = add("check-grading", cmd_check_grading, "verify a coalgebra grading")
    p.add_argument("--weight", action="append", help="NAME=w1[,w2...]; repeatable")
    p.add_argument("--kinds", help="comma list of coalgebra/comodule, one per component")
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--degree", type=int, default=4)
    p = add("skew-prim", cmd_skew_prim, "skew-primitive space in a window")
    p.add_argument("--pair-u", default="1")
    p.add_argument("--pair-v", default="1")
    p.add_argument("--ydeg", type=int, default=1)
    p.add_argument("--ebound", type=int, default=2)
    p = add("group-like", cmd_group_like, "group-like words in a window")
    p.add_argument("--ebound", type=int, default=2)
    p.add_argument("--ydeg", type=int, default=1)
    add("classify", cmd_classify, "classify a skew-primitive of F(t)", expr=True)
    p = add("orbit", cmd_orbit, "iterate tau^-1 sigma against its closed form")
    p.add_argument("--beta", required=True, help="comma-separated integers")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--smax", type=int, default=5)
    p = add("find-sub", cmd_find_sub, "constructive subalgebra data (f, xi, beta)")
    p.add_argument("--g", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--cap", type=int, default=solver.DEFAULT_RELATION_CAP)
    p = add("gk", cmd_gk, "dim span(V^n) and GK-degree estimate")
    p.add_argument("--gens", help="comma-separated elements (1 is always added)")
    p.add_argument("--N", type=int, default=16)
    p.add_argument("--csv", action="store_true")
    p = add("ball", cmd_ball, "word-metric ball sizes of a group preset")
    p.add_argument("--gens", help="comma-separated generator names (default: all)")
    p.add_argument("--N", type=int, default=12)
    p.add_argument("--csv", action="store_true")
    p = add("lie-sub", cmd_lie_sub, "two-dimensional Lie subalgebra")
    p.add_argument("--lie", required=True, help="sl2, heis, aff1 or a JSON file")
    p = add("verify-sub", cmd_verify_sub, "closure evidence for a Hopf subalgebra")
    p.add_argument("--gens", required=True)
    p.add_argument("--cap", type=int, default=4)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except HopfForgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR
