"""Constructors for the named Hopf algebras.

Selector strings (CLI): ``F:t=1``, ``A:b=1,xi=2``, ``C:m=2``, ``E:n=1``,
``Zn:n=2``, ``heis``, ``zxz2``, ``env:sl2``, ``env:heis``, ``env:<file>``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import AxiomFailure, InvalidParameter
from .freealg import Generator, NcPoly, Word, WordOrder, from_runs
from .hopf import HopfAlgebra, hopf_axiom_report
from .scalars import as_scalar, field_of


def _order(n: int, precedence: Sequence[int] | None = None, weights: Sequence[int] | None = None) -> WordOrder:
    return WordOrder(tuple(precedence if precedence is not None else range(n)), tuple(weights or [1] * n))


def _commuting_rules(gens: Sequence[int]) -> list:
    """x_j^s x_i^r -> x_i^r x_j^s for j > i (positions in ``gens``), all signs."""
    rules = []
    for i_pos, i in enumerate(gens):
        for j in gens[i_pos + 1:]:
            for s in (1, -1):
                for r in (1, -1):
                    rules.append(((s * (j + 1), r * (i + 1)), NcPoly.word((r * (i + 1), s * (j + 1)))))
    return rules


def validated(H: HopfAlgebra, degree: int = 3, trials: int = 20) -> HopfAlgebra:
    violations = hopf_axiom_report(H, degree, trials)
    if violations:
        raise AxiomFailure(violations)
    return H


def free_pointed(t: int) -> HopfAlgebra:
    """F(t): k<x^{+-1}, y>, Delta y = y (x) 1 + x^t (x) y."""
    gens = [Generator("x", True), Generator("y")]
    pair = from_runs([(0, t)])
    return HopfAlgebra(gens, [None, pair], [], _order(2), name=f"F(t={t})")


def monomial(H: HopfAlgebra, alpha: Sequence[int]) -> Word:
    """M_alpha = x^{i1} y x^{i2} y ... y x^{i_{n+1}} in F(t)."""
    pairs = []
    for k, e in enumerate(alpha):
        if k:
            pairs.append((1, 1))
        pairs.append((0, e))
    return from_runs(pairs)


def quantum_plane(b: int, xi) -> HopfAlgebra:
    """A(b, xi): g y = xi y g, y is (1, g^b)-primitive."""
    xi = as_scalar(xi)
    if xi == 0:
        raise InvalidParameter("xi must be nonzero")
    # y precedes g so that normal forms read y^a g^c
    gens = [Generator("g", True), Generator("y")]
    g, y = 1, 2
    rules = [
        ((g, y), NcPoly.word((y, g), xi)),
        ((-g, y), NcPoly.word((y, -g), 1 / xi)),
    ]
    return HopfAlgebra(gens, [None, from_runs([(0, b)])], rules, _order(2, [1, 0]),
                       field=field_of(xi), name=f"A(b={b}, xi={xi})")


def jordan_type(m: int) -> HopfAlgebra:
    """C(m) with m = b + 1: g y = y g + g^m - g, y is (1, g^b)-primitive."""
    gens = [Generator("g", True), Generator("y")]
    g, y = 1, 2
    gm = from_runs([(0, m)])
    gm2 = from_runs([(0, m - 2)])
    rules = [
        ((g, y), NcPoly({(y, g): Fraction(1), gm: Fraction(1), (g,): Fraction(-1)})),
        # conjugating the relation by g^{-1}: g^{-1} y = y g^{-1} - g^{m-2} + g^{-1}
        ((-g, y), NcPoly({(y, -g): Fraction(1)}) + NcPoly({gm2: Fraction(-1)}) + NcPoly({(-g,): Fraction(1)})),
    ]
    # g has weight 0 so that g^m on the right is smaller than g*y
    return HopfAlgebra(gens, [None, from_runs([(0, m - 1)])], rules, _order(2, [1, 0], [0, 1]),
                       name=f"C(m={m})")


def e_family(n: int) -> HopfAlgebra:
    """E(n): commuting x_0..x_n, y x_i = -x_i y, y^2 = x_0^2 - 1, y (1, x_0)-primitive."""
    if n < 0:
        raise InvalidParameter("E(n) needs n >= 0")
    gens = [Generator(f"x{i}", True) for i in range(n + 1)] + [Generator("y")]
    y = n + 2
    rules = _commuting_rules(list(range(n + 1)))
    for i in range(n + 1):
        for s in (1, -1):
            rules.append(((y, s * (i + 1)), NcPoly.word((s * (i + 1), y), -1)))
    rules.append(((y, y), NcPoly({(1, 1): Fraction(1), (): Fraction(-1)})))
    pairs = [None] * (n + 1) + [(1,)]
    return HopfAlgebra(gens, pairs, rules, _order(n + 2), name=f"E(n={n})")


def group_z(n: int) -> HopfAlgebra:
    """Group algebra of Z^n."""
    if n < 1:
        raise InvalidParameter("Z^n needs n >= 1")
    names = ["x", "y", "z"][:n] if n <= 3 else [f"x{i + 1}" for i in range(n)]
    gens = [Generator(nm, True) for nm in names]
    return HopfAlgebra(gens, [None] * n, _commuting_rules(list(range(n))), _order(n), name=f"kZ^{n}")


def heisenberg_group() -> HopfAlgebra:
    """Group algebra of the discrete Heisenberg group: y x = x y z^-1, z central.

    Normal forms are collected words x^a y^b z^c.
    """
    gens = [Generator("x", True), Generator("y", True), Generator("z", True)]
    x, y, z = 1, 2, 3
    rules = [
        ((y, x), NcPoly.word((x, y, -z))),
        ((y, -x), NcPoly.word((-x, y, z))),
        ((-y, x), NcPoly.word((x, -y, z))),
        ((-y, -x), NcPoly.word((-x, -y, -z))),
    ]
    for s in (1, -1):
        for other in (x, y):
            for r in (1, -1):
                rules.append(((s * z, r * other), NcPoly.word((r * other, s * z))))
    # z gets weight 0 so the commutator letter does not raise the degree
    return HopfAlgebra(gens, [None] * 3, rules, _order(3, weights=[1, 1, 0]), name="Heisenberg")


def z_cross_z2() -> HopfAlgebra:
    """Group algebra of Z x Z/2: x of infinite order, u^2 = 1, u central."""
    gens = [Generator("x", True), Generator("u", True)]
    x, u = 1, 2
    rules = [
        ((-u,), NcPoly.word((u,))),
        ((u, u), NcPoly.scalar(1)),
        ((u, x), NcPoly.word((x, u))),
        ((u, -x), NcPoly.word((-x, u))),
    ]
    return HopfAlgebra(gens, [None, None], rules, _order(2), name="ZxZ/2")


def enveloping(L) -> HopfAlgebra:
    """U(L) with PBW rules e_j e_i -> e_i e_j + [e_j, e_i] for j > i."""
    from .liealg import jacobi_check

    bad = jacobi_check(L)
    if bad:
        raise InvalidParameter(f"Lie algebra fails the Jacobi identity: {bad[0]}")
    d = L.dim
    gens = [Generator(nm) for nm in L.names]
    rules = []
    fld = None
    for i in range(d):
        for j in range(i + 1, d):
            br = L.bracket_basis(j, i)
            rhs = NcPoly.word((i + 1, j + 1))
            for k, c in enumerate(br):
                if c != 0:
                    rhs = rhs + NcPoly.word((k + 1,), c)
                    fld = fld or field_of(c)
            rules.append(((j + 1, i + 1), rhs))
    return HopfAlgebra(gens, [()] * d, rules, _order(d), field=fld, name=f"U({L.label or 'L'})")


def parse_selector(text: str) -> tuple[str, dict]:
    kind, _, rest = text.partition(":")
    params: dict = {}
    if kind.lower() == "env":
        return "env", {"L": rest}
    if rest:
        for part in rest.split(","):
            k, _, v = part.partition("=")
            params[k.strip()] = v.strip()
    return kind, params


def build(selector: str, validate: bool = False) -> HopfAlgebra:
    """Build a preset from a selector string such as ``"C:m=2"``."""
    from .scalars import parse_scalar

    kind, params = parse_selector(selector)
    try:
        if kind == "F":
            H = free_pointed(int(params["t"]))
        elif kind == "A":
            H = quantum_plane(int(params["b"]), parse_scalar(params["xi"]))
        elif kind == "C":
            H = jordan_type(int(params["m"]))
        elif kind == "E":
            H = e_family(int(params["n"]))
        elif kind in ("Zn", "Z"):
            H = group_z(int(params.get("n", 1)))
        elif kind == "heis":
            H = heisenberg_group()
        elif kind == "zxz2":
            H = z_cross_z2()
        elif kind == "env":
            from .liealg import load_lie

            H = enveloping(load_lie(params["L"]))
        else:
            raise InvalidParameter(f"unknown preset {selector!r}")
    except (KeyError, ValueError) as exc:
        raise InvalidParameter(f"bad preset selector {selector!r}: {exc}") from None
    return validated(H) if validate else H


def from_presentation(doc: dict, name: str = "") -> HopfAlgebra:
    """Build a Hopf algebra from a presentation document.

    ``{"field": "Q" | {"quad": d}, "generators": [{"name", "kind", "pair"}],
    "rules": [{"lhs", "rhs"}]}``; optional ``"order"`` (generator names, smallest
    first) and ``"weights"`` ({name: int}) adjust the word order.
    """
    from .parsing import parse_element, parse_word
    from .scalars import squarefree_decompose

    fld = doc.get("field", "Q")
    if fld == "Q" or fld is None:
        fld = None
    elif isinstance(fld, dict) and "quad" in fld:
        fld = squarefree_decompose(int(fld["quad"]))[1]
        fld = None if fld == 1 else fld
    else:
        raise InvalidParameter(f"bad field {fld!r}")
    specs = doc.get("generators") or []
    if not specs:
        raise InvalidParameter("presentation needs at least one generator")
    gens = []
    for g in specs:
        kind = g.get("kind", "grouplike")
        if kind not in ("grouplike", "skewprimitive"):
            raise InvalidParameter(f"generator {g.get('name')!r}: unknown kind {kind!r}")
        gens.append(Generator(g["name"], kind == "grouplike"))
    n = len(gens)
    names = [g.name for g in gens]
    if "order" in doc:
        if sorted(doc["order"]) != sorted(names):
            raise InvalidParameter("order must list every generator once")
        prec = [doc["order"].index(nm) for nm in names]
    else:
        prec = list(range(n))
    weights = [int(doc.get("weights", {}).get(nm, 1)) for nm in names]
    order = _order(n, prec, weights)
    # a free algebra on the same generators parses words and expressions
    free = HopfAlgebra(gens, [None if g.invertible else () for g in gens], [], order, field=fld)
    pairs = []
    for g, spec in zip(gens, specs):
        pairs.append(None if g.invertible else parse_word(spec.get("pair", "1"), free))
    rules = []
    for r in doc.get("rules", []):
        lhs = parse_word(r["lhs"], free)
        rules.append((lhs, parse_element(str(r["rhs"]), free)))
    return HopfAlgebra(gens, pairs, rules, order, field=fld, name=name or doc.get("name", "presentation"))


def load_algebra(ref: str, validate: bool = False) -> HopfAlgebra:
    """A preset selector or a path to a presentation JSON file."""
    import json
    from pathlib import Path

    path = Path(ref)
    if ref.endswith(".json") or path.is_file():
        try:
            doc = json.loads(path.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise InvalidParameter(f"cannot read presentation {ref!r}: {exc}") from None
        H = from_presentation(doc, name=path.stem)
        return validated(H) if validate else H
    return build(ref, validate)
