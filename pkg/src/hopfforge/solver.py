"""Linear-algebra engines on skew-primitive elements.

Solutions are always statements about a finite window of normal-form words:
at most ``max_y`` skew-primitive letters and every run of a group-like
generator with exponent in [-E, E].
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import (
    ClassificationFailure,
    DegenerateF,
    InvalidParameter,
    NoRelation,
    NotSkewPrimitive,
    WindowTooLarge,
)
from .freealg import ONE, NcPoly, Word, from_runs, runs, word_inverse, word_mul
from .hopf import HopfAlgebra
from .linalg import Echelon, add_into, kernel, scaled
from .scalars import deflate, find_roots, format_scalar, is_rational

DEFAULT_WINDOW_CAP = 20_000
DEFAULT_RELATION_CAP = 8


@dataclass(frozen=True)
class Window:
    max_y: int
    E: int


@dataclass
class SkewPrimSpace:
    pair: tuple
    window: Window
    basis: list

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def contains(self, H: HopfAlgebra, f) -> bool:
        ech = Echelon(key=H.key)
        for b in self.basis:
            ech.insert(b.terms)
        return ech.contains(H.normal_form(f).terms)

    def to_json(self, H: HopfAlgebra) -> dict:
        return {
            "pair": [H.format_word(self.pair[0]), H.format_word(self.pair[1])],
            "window": {"max_y": self.window.max_y, "E": self.window.E},
            "dimension": self.dimension,
            "basis": [H.format(b) for b in self.basis],
        }


def y_degree(H: HopfAlgebra, w: Word) -> int:
    return sum(1 for a in w if H.pairs[abs(a) - 1] is not None)


def poly_y_degree(H: HopfAlgebra, p: NcPoly) -> int:
    return max((y_degree(H, w) for w in p.terms), default=0)


def x_degree(w: Word) -> int:
    """Signed count of group-like letters (the x-grading on F(t))."""
    return sum(1 if a > 0 else -1 for a in w if abs(a) == 1)


def enumerate_window(H: HopfAlgebra, W: Window, cap: int = DEFAULT_WINDOW_CAP) -> list[Word]:
    """All irreducible words inside the window, in word order."""
    gens = range(len(H.generators))
    out: list[Word] = []
    maxl = H.max_lhs

    def extend(w: Word, last: int, ydeg: int):
        out.append(w)
        if len(out) > cap:
            raise WindowTooLarge(f"window has more than {cap} candidate words")
        for g in gens:
            if g == last:
                continue
            if H.pairs[g] is None:
                exps = [e for e in range(-W.E, W.E + 1) if e != 0 and (e > 0 or H.generators[g].invertible)]
            else:
                exps = list(range(1, W.max_y - ydeg + 1))
            for e in exps:
                letter = g + 1 if e > 0 else -(g + 1)
                nw = w + (letter,) * abs(e)
                if H._find(nw, len(w) - maxl + 1) is not None:
                    continue
                extend(nw, g, ydeg + (abs(e) if H.pairs[g] is not None else 0))

    extend(ONE, -1, 0)
    return sorted(out, key=H.key)


def _tensor_key(H: HopfAlgebra):
    return lambda k: (H.key(k[0]), H.key(k[1]))


def skew_primitive_space(H: HopfAlgebra, u: Word, v: Word, W: Window, cap: int = DEFAULT_WINDOW_CAP) -> SkewPrimSpace:
    """Every (u, v)-primitive element supported on the window, as an echelon basis."""
    u = H.nf_monomial(u)
    v = H.nf_monomial(v)
    words = enumerate_window(H, W, cap)
    columns = []
    for w in words:
        col = dict(H.delta_word(w))
        add_into(col, {(w, u): Fraction(1)}, -1)
        add_into(col, {(v, w): Fraction(1)}, -1)
        columns.append(col)
    rels = kernel(columns, key=_tensor_key(H))
    ech = Echelon(key=H.key)
    for rel in rels:
        ech.insert({words[i]: c for i, c in rel.items()})
    basis = [NcPoly(r) for r in ech.reduced_rows()]
    for b in basis:
        expected = H.coproduct(b) - _tp(b, u) - _tp_left(v, b)
        if expected:
            raise ClassificationFailure("solver returned a non-solution")  # pragma: no cover
    return SkewPrimSpace((u, v), W, basis)


def _tp(p: NcPoly, w: Word):
    from .hopf import tensor

    return tensor(p, NcPoly.word(w))


def _tp_left(w: Word, p: NcPoly):
    from .hopf import tensor

    return tensor(NcPoly.word(w), p)


def group_like_space(H: HopfAlgebra, W: Window) -> list[Word]:
    """Group-like words in the window.

    A combination sum a_i w_i of distinct words is group-like only if it is a
    single group-like word with coefficient 1, so scanning words suffices.
    """
    return [w for w in enumerate_window(H, W) if H._is_gl_word(w)]


# ---------------------------------------------------------------------------
# classification in F(t)
# ---------------------------------------------------------------------------

@dataclass
class Classification:
    y_degree: int
    lam: object
    a: int
    m: int | None = None
    homogeneous_part: NcPoly | None = None
    pair: tuple = ()

    def reconstruct(self, H: HopfAlgebra, t: int) -> NcPoly:
        x = lambda e: NcPoly.word(from_runs([(0, e)]))
        if self.y_degree == 0:
            return (x(self.a + self.m) - x(self.a)).scale(self.lam)
        return self.homogeneous_part + (x(self.a + t) - x(self.a)).scale(self.lam)


def f_parameter(H: HopfAlgebra) -> int:
    """t for a free pointed algebra F(t) (generators x, y with pair x^t)."""
    pair = H.pairs[1]
    if len(H.generators) != 2 or H.pairs[0] is not None or pair is None or H.rules:
        raise InvalidParameter("classification is implemented for F(t) only")
    return sum(1 if a > 0 else -1 for a in pair)


def classify_skew_primitive(H: HopfAlgebra, f) -> Classification:
    t = f_parameter(H)
    if t == 0:
        raise InvalidParameter("classification needs t != 0")
    f = H.normal_form(f)
    pair = H.is_skew_primitive(f) if f else None
    if pair is None:
        raise NotSkewPrimitive(f"{H.format(f)} is not skew-primitive")
    yd = poly_y_degree(H, f)
    if yd == 0:
        exps = sorted(x_degree(w) for w in f.terms)
        if len(exps) != 2:
            raise ClassificationFailure(f"{H.format(f)}: degree-0 part has {len(exps)} terms")
        lo, hi = exps
        top = f.coeff(from_runs([(0, hi)]))
        bottom = f.coeff(from_runs([(0, lo)]))
        if top + bottom != 0:
            raise ClassificationFailure(f"{H.format(f)} is not of the form lam x^a (x^m - 1)")
        return Classification(0, top, lo, hi - lo, pair=pair)
    if yd == 1:
        f0 = NcPoly({w: c for w, c in f.terms.items() if y_degree(H, w) == 1})
        g = f - f0
        xs = {x_degree(w) for w in f0.terms}
        if len(xs) != 1:
            raise ClassificationFailure(f"{H.format(f)}: degree-1 part is not x-homogeneous")
        (a,) = xs
        if not g:
            return Classification(1, Fraction(0), a, homogeneous_part=f0, pair=pair)
        lam = g.coeff(from_runs([(0, a + t)]))
        expected = (NcPoly.word(from_runs([(0, a + t)])) - NcPoly.word(from_runs([(0, a)]))).scale(lam)
        if lam == 0 or g != expected:
            raise ClassificationFailure(f"{H.format(f)}: degree-0 part is not lam x^a (x^t - 1)")
        return Classification(1, lam, a, homogeneous_part=f0, pair=pair)
    raise ClassificationFailure(f"{H.format(f)} has y-degree {yd} >= 2")


# ---------------------------------------------------------------------------
# sigma / tau orbit combinatorics
# ---------------------------------------------------------------------------

def sigma_map(alpha: Sequence[int], t: int) -> tuple:
    """(i_1..i_{n+1}) -> (-i_{n+1}-t, -i_n-t, ..., -i_2-t, -i_1)."""
    rev = list(reversed(alpha))
    return tuple([-e - t for e in rev[:-1]] + [-rev[-1]])


def tau_map(alpha: Sequence[int], b: int) -> tuple:
    return (alpha[0] - b,) + tuple(alpha[1:])


def tau_inverse(alpha: Sequence[int], b: int) -> tuple:
    return (alpha[0] + b,) + tuple(alpha[1:])


def T_value(alpha: Sequence[int]) -> int:
    """Sum of the first n entries of alpha in Z^{n+1}."""
    return sum(alpha[:-1])


@dataclass
class OrbitReport:
    beta: tuple
    t: int
    b: int
    images: list = field(default_factory=list)
    mismatches: list = field(default_factory=list)
    distinct: bool = True

    @property
    def ok(self) -> bool:
        return not self.mismatches and self.distinct


def orbit_closed_form(beta: Sequence[int], t: int, s: int) -> tuple:
    n = len(beta) - 1
    shift = s * (n - 1) * t
    return (beta[0] + shift,) + tuple(beta[1:-1]) + (beta[-1] - shift,)


def orbit_check(beta: Sequence[int], t: int, s_max: int) -> OrbitReport:
    """Iterate tau^-1 sigma and compare every even power with the closed form."""
    beta = tuple(beta)
    n = len(beta) - 1
    if t == 0 or n < 2:
        raise InvalidParameter("orbit_check needs t != 0 and n >= 2")
    if s_max < 1:
        raise InvalidParameter("s_max must be >= 1")
    b = n * t
    rep = OrbitReport(beta, t, b)
    cur = beta
    for s in range(1, s_max + 1):
        for _ in range(2):
            cur = tau_inverse(sigma_map(cur, t), b)
        expected = orbit_closed_form(beta, t, s)
        rep.images.append(cur)
        if cur != expected:
            rep.mismatches.append((s, cur, expected))
    rep.distinct = len(set(rep.images + [beta])) == s_max + 1
    return rep


# ---------------------------------------------------------------------------
# conjugate relations and the constructive subalgebra data
# ---------------------------------------------------------------------------

@dataclass
class ConjugateRelation:
    coefficients: list       # a_0 .. a_n
    lam: object
    b: int
    pair: Word

    @property
    def n(self) -> int:
        return len(self.coefficients) - 1


def _g_power(H: HopfAlgebra, g: Word, e: int) -> Word:
    w = ONE
    step = g if e >= 0 else word_inverse(g)
    for _ in range(abs(e)):
        w = word_mul(w, step)
    return H.nf_monomial(w)


def pair_exponent(H: HopfAlgebra, g: Word, v: Word) -> int:
    bound = len(v) + 2
    for b in sorted(range(-bound, bound + 1), key=abs):
        if _g_power(H, g, b) == v:
            return b
    raise InvalidParameter(f"{H.format_word(v)} is not a power of {H.format_word(g)}")


def conjugate(H: HopfAlgebra, g: Word, y: NcPoly, i: int) -> NcPoly:
    gi = NcPoly.word(_g_power(H, g, i))
    gmi = NcPoly.word(_g_power(H, g, -i))
    return H.mul(gi, y, gmi)


def _normalize_relation(coeffs: list, lam):
    vals = coeffs + [lam]
    if all(is_rational(c) for c in vals):
        den = 1
        for c in vals:
            den = den * Fraction(c).denominator // math.gcd(den, Fraction(c).denominator)
        ints = [int(Fraction(c) * den) for c in vals]
        g = 0
        for k in ints:
            g = math.gcd(g, k)
        if ints[0] < 0:
            g = -g
        vals = [Fraction(k, g) for k in ints]
    else:
        a0 = vals[0]
        vals = [c / a0 for c in vals]
    return vals[:-1], vals[-1]


def _skew_pair(H: HopfAlgebra, g: Word, y: NcPoly):
    g = H.nf_monomial(g)
    if not H._is_gl_word(g) or g == ONE:
        raise InvalidParameter("g must be a group-like word different from 1")
    y = H.normal_form(y)
    pair = H.is_skew_primitive(y)
    if pair is None or pair[0] != ONE:
        raise InvalidParameter("y must be (1, g^b)-primitive")
    return g, y, pair[1], pair_exponent(H, g, pair[1])


def find_conjugate_relation(H: HopfAlgebra, g: Word, y, cap: int = DEFAULT_RELATION_CAP) -> ConjugateRelation | None:
    """First relation a_0 y + a_1 g y g^-1 + ... + a_n g^n y g^-n + lam (g^b - 1) = 0 with a_0 != 0."""
    g, y, v, b = _skew_pair(H, g, y)
    e = NcPoly.word(v) - NcPoly.scalar(1)
    ech = Echelon(key=H.key, track=True)
    offset = 0
    if e:
        ech.insert(e.terms)
        offset = 1
    for i in range(cap + 1):
        grew, rel = ech.insert(conjugate(H, g, y, i).terms)
        if grew:
            continue
        coeffs = [rel.get(k + offset, Fraction(0)) for k in range(i + 1)]
        lam = rel.get(0, Fraction(0)) if offset else Fraction(0)
        if coeffs[0] == 0:
            continue
        coeffs, lam = _normalize_relation(coeffs, lam)
        return ConjugateRelation(coeffs, lam, b, v)
    return None


@dataclass
class SubalgebraData:
    f: NcPoly
    xi: object
    beta: object
    b: int
    relation: ConjugateRelation

    def describe(self, H: HopfAlgebra) -> str:
        return f"f = {H.format(self.f)}, xi = {format_scalar(self.xi)}, beta = {format_scalar(self.beta)}"


def subalgebra_identity(H: HopfAlgebra, g: Word, f: NcPoly, xi, beta, b: int) -> NcPoly:
    """g f - xi f g - beta g (g^b - 1), normalized (zero when the identity holds)."""
    gp = NcPoly.word(g)
    e = NcPoly.word(_g_power(H, g, b)) - NcPoly.scalar(1)
    return H.mul(gp, f) - H.mul(f, gp).scale(xi) - H.mul(gp, e).scale(beta)


def find_subalgebra_data(H: HopfAlgebra, g: Word, y, cap: int = DEFAULT_RELATION_CAP) -> SubalgebraData:
    rel = find_conjugate_relation(H, g, y, cap)
    if rel is None:
        raise NoRelation(f"conjugates of y are independent up to {cap}")
    g, y, v, b = _skew_pair(H, g, y)
    e = NcPoly.word(v) - NcPoly.scalar(1)
    conj = [conjugate(H, g, y, i) for i in range(rel.n)]
    gp = NcPoly.word(g)
    ge = H.mul(gp, e)
    for xi in find_roots(rel.coefficients):
        q = deflate(rel.coefficients, xi)
        lead = q[-1]
        q = [c / lead for c in q]
        f = NcPoly()
        for c, ci in zip(q, conj):
            f = f + ci.scale(c)
        if not f or _is_multiple(H, f, e):
            continue
        lhs = H.mul(gp, f) - H.mul(f, gp).scale(xi)
        if not ge:
            if lhs:
                continue
            beta = Fraction(0)
        else:
            top = max(ge.terms, key=H.key)
            beta = lhs.coeff(top) / ge.terms[top]
            if lhs != ge.scale(beta):
                continue
        if H.is_skew_primitive(f) != (ONE, v):
            continue
        return SubalgebraData(f, xi, beta, b, rel)
    raise DegenerateF("every root gives f in k(g^b - 1)")


def _is_multiple(H: HopfAlgebra, f: NcPoly, e: NcPoly) -> bool:
    if not e:
        return not f
    ech = Echelon(key=H.key)
    ech.insert(e.terms)
    return ech.contains(f.terms)
