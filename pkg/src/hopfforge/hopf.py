"""Coalgebra and Hopf structure on presented algebras.

Every generator is either group-like (Delta g = g (x) g, invertible) or
skew-primitive with a normalized pair: Delta y = y (x) 1 + w (x) y where w is a
word in group-like generators.  Delta and epsilon extend multiplicatively, S
anti-multiplicatively.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import InvalidParameter
from .freealg import ONE, Algebra, Generator, NcPoly, Word, WordOrder, _as_poly, word_inverse, word_mul
from .linalg import add_into
from .scalars import format_scalar

COEFFS = (-2, -1, 1, 2)


class TensorPoly:
    """Element of H (x) H or H (x) H (x) H: {(w1, w2[, w3]): coefficient}."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms=None):
        self.rank = rank
        self.terms = {k: c for k, c in (terms or {}).items() if c != 0}

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, TensorPoly):
            return self.rank == other.rank and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.rank, frozenset(self.terms.items())))

    def __add__(self, other: "TensorPoly"):
        return TensorPoly(self.rank, add_into(dict(self.terms), other.terms))

    def __sub__(self, other: "TensorPoly"):
        return TensorPoly(self.rank, add_into(dict(self.terms), other.terms, -1))

    def __neg__(self):
        return TensorPoly(self.rank, {k: -c for k, c in self.terms.items()})

    def scale(self, c):
        return TensorPoly(self.rank, {k: c * v for k, v in self.terms.items()} if c != 0 else {})

    def __repr__(self):
        return f"TensorPoly(rank={self.rank}, {self.terms!r})"


def tensor(*polys) -> TensorPoly:
    terms: dict = {(): Fraction(1)}
    for p in polys:
        p = _as_poly(p)
        nxt: dict = {}
        for k, a in terms.items():
            for w, b in p.terms.items():
                nxt[k + (w,)] = a * b
        terms = nxt
    return TensorPoly(len(polys), terms)


@dataclass
class Violation:
    check: str
    detail: str

    def __str__(self):
        return f"[{self.check}] {self.detail}"


@dataclass(frozen=True)
class Grading:
    """Integer-vector weights on generators.

    Each weight component is either ``"coalgebra"`` (Delta adds weights:
    H(n) -> sum H(i) (x) H(n-i), epsilon vanishes off weight 0) or
    ``"comodule"`` (the right tensor factor carries the full weight).
    """

    weights: dict
    kinds: tuple = ()

    def component_kinds(self) -> tuple:
        dim = len(next(iter(self.weights.values())))
        return self.kinds or ("coalgebra",) * dim

    def weight(self, H: "HopfAlgebra", w: Word) -> tuple:
        dim = len(self.component_kinds())
        acc = [0] * dim
        for a in w:
            vec = self.weights.get(H.generators[abs(a) - 1].name, (0,) * dim)
            sign = 1 if a > 0 else -1
            for i in range(dim):
                acc[i] += sign * vec[i]
        return tuple(acc)


class HopfAlgebra(Algebra):
    """Presented pointed Hopf algebra.

    ``pairs[i]`` is None for a group-like generator and the pair word w for a
    skew-primitive one (Delta y = y (x) 1 + w (x) y).
    """

    def __init__(
        self,
        generators: Sequence[Generator],
        pairs: Sequence,
        rules: Sequence[tuple] = (),
        order: WordOrder | None = None,
        field: int | None = None,
        name: str = "",
        **kw,
    ):
        super().__init__(generators, rules, order, **kw)
        self.pairs = [tuple(p) if p is not None else None for p in pairs]
        self.field = field
        self.name = name
        if len(self.pairs) != len(self.generators):
            raise InvalidParameter("one coalgebra tag per generator required")
        for g, p in zip(self.generators, self.pairs):
            if p is None:
                if not g.invertible:
                    raise InvalidParameter(f"group-like generator {g.name} must be invertible")
            else:
                for a in p:
                    if self.pairs[abs(a) - 1] is not None:
                        raise InvalidParameter(f"pair of {g.name} uses a non-group-like letter")
        self._delta_cache: dict = {(): {((), ()): Fraction(1)}}
        self._anti_cache: dict = {}

    # -- generator data ---------------------------------------------------
    def is_group_like_letter(self, a: int) -> bool:
        return self.pairs[abs(a) - 1] is None

    def alphabet(self) -> list[int]:
        letters = []
        for i, g in enumerate(self.generators):
            letters.append(i + 1)
            if g.invertible:
                letters.append(-(i + 1))
        return letters

    def _delta_letter(self, a: int) -> dict:
        pair = self.pairs[abs(a) - 1]
        if pair is None:
            return {((a,), (a,)): Fraction(1)}
        out: dict = {}
        add_into(out, {((a,), ()): Fraction(1)})
        add_into(out, {(self.nf_monomial(pair), (a,)): Fraction(1)})
        return out

    def nf_monomial(self, w: Word) -> Word:
        """Normal form of a word expected to normalize to a single word."""
        res = self.nf_word(w)
        if len(res) != 1:
            raise InvalidParameter(f"{self.format_word(w)} does not normalize to a monomial")
        ((v, c),) = res.items()
        if c != 1:
            raise InvalidParameter(f"{self.format_word(w)} normalizes to a scaled monomial")
        return v

    # -- structure maps -----------------------------------------------------
    def delta_word(self, w: Word) -> dict:
        """Delta of a word as the product of the letters' coproducts."""
        cache = self._delta_cache
        hit = cache.get(w)
        if hit is not None:
            return hit
        k = len(w)
        while w[:k] not in cache:
            k -= 1
        cur = cache[w[:k]]
        for j in range(k, len(w)):
            step = self._delta_letter(w[j])
            nxt: dict = {}
            for (u1, u2), c in cur.items():
                for (a1, a2), d in step.items():
                    left = self.mul_words(u1, a1)
                    right = self.mul_words(u2, a2)
                    cd = c * d
                    for v1, e1 in left.items():
                        for v2, e2 in right.items():
                            key = (v1, v2)
                            val = nxt.get(key, 0) + cd * e1 * e2
                            if val == 0:
                                nxt.pop(key, None)
                            else:
                                nxt[key] = val
            cur = nxt
            cache[w[: j + 1]] = cur
        return cur

    def coproduct(self, p) -> TensorPoly:
        out: dict = {}
        for w, c in _as_poly(p).terms.items():
            add_into(out, self.delta_word(w), c)
        return TensorPoly(2, out)

    def counit_word(self, w: Word):
        return Fraction(1) if all(self.is_group_like_letter(a) for a in w) else Fraction(0)

    def counit(self, p):
        total = Fraction(0)
        for w, c in _as_poly(p).terms.items():
            if all(self.is_group_like_letter(a) for a in w):
                total = total + c
        return total

    def _antipode_letter(self, a: int) -> dict:
        pair = self.pairs[abs(a) - 1]
        if pair is None:
            return self.nf_word((-a,))
        return {w: -c for w, c in self.nf_word(word_mul(word_inverse(pair), (a,))).items()}

    def antipode_word(self, w: Word) -> dict:
        hit = self._anti_cache.get(w)
        if hit is not None:
            return hit
        acc: dict = {ONE: Fraction(1)}
        for a in reversed(w):
            s = self._antipode_letter(a)
            nxt: dict = {}
            for u, c in acc.items():
                for v, d in s.items():
                    add_into(nxt, self.mul_words(u, v), c * d)
            acc = nxt
        self._anti_cache[w] = acc
        return acc

    def antipode(self, p) -> NcPoly:
        out: dict = {}
        for w, c in _as_poly(p).terms.items():
            add_into(out, self.antipode_word(w), c)
        return NcPoly(out)

    # -- tensor helpers -----------------------------------------------------
    def tensor_normal(self, T: TensorPoly) -> TensorPoly:
        out: dict = {}
        for key, c in T.terms.items():
            parts: dict = {(): c}
            for w in key:
                nf = self.nf_word(w)
                parts = {k + (v,): a * b for k, a in parts.items() for v, b in nf.items()}
            add_into(out, parts)
        return TensorPoly(T.rank, out)

    def delta_at(self, T: TensorPoly, slot: int) -> TensorPoly:
        """Apply Delta to tensor factor ``slot``."""
        out: dict = {}
        for key, c in T.terms.items():
            for (a, b), d in self.delta_word(key[slot]).items():
                add_into(out, {key[:slot] + (a, b) + key[slot + 1:]: c * d})
        return TensorPoly(T.rank + 1, out)

    def counit_at(self, T: TensorPoly, slot: int):
        out: dict = {}
        for key, c in T.terms.items():
            e = self.counit_word(key[slot])
            if e:
                add_into(out, {key[:slot] + key[slot + 1:]: c * e})
        if T.rank == 2:
            return NcPoly({k[0]: v for k, v in out.items()})
        return TensorPoly(T.rank - 1, out)

    def multiply_tensor(self, T: TensorPoly, antipode_slot: int | None = None) -> NcPoly:
        """m(S (x) id) or m(id (x) S) on a rank-2 tensor, or plain m."""
        out: dict = {}
        for (a, b), c in T.terms.items():
            left = self.antipode_word(a) if antipode_slot == 0 else {a: Fraction(1)}
            right = self.antipode_word(b) if antipode_slot == 1 else {b: Fraction(1)}
            for u, x in left.items():
                for v, y in right.items():
                    add_into(out, self.mul_words(u, v), c * x * y)
        return NcPoly(out)

    # -- classification helpers --------------------------------------------
    def is_group_like(self, p) -> bool:
        p = self.normal_form(p)
        if len(p) != 1:
            return False
        ((w, c),) = p.terms.items()
        return c == 1 and self.delta_word(w) == {(w, w): 1}

    def is_skew_primitive(self, p):
        """Pair (u, v) of group-like words with Delta p = p (x) u + v (x) p, or None.

        Elements of the coradical can admit two pairs (x - 1 is both (1, x)-
        and (x, 1)-primitive); the pair with the smaller u is returned.
        """
        p = self.normal_form(p)
        if not p:
            return None
        D = self.coproduct(p).terms
        lead = max(p.terms, key=self.key)
        # the term lead (x) u of p (x) u can only cancel against v (x) p when
        # u and v both lie in the support of p
        support = set(p.terms)
        us = sorted({b for (a, b) in D if a == lead} | support, key=self.key)
        vs = sorted({a for (a, b) in D if b == lead} | support, key=self.key)
        for u in us:
            if not self._is_gl_word(u):
                continue
            for v in vs:
                if not self._is_gl_word(v):
                    continue
                if (tensor(p, NcPoly.word(u)) + tensor(NcPoly.word(v), p)).terms == D:
                    return (u, v)
        return None

    def _is_gl_word(self, w: Word) -> bool:
        return all(self.is_group_like_letter(a) for a in w) and self.delta_word(w) == {(w, w): 1}

    # -- sampling -------------------------------------------------------------
    def random_word(self, rng: random.Random, degree: int) -> Word:
        letters = self.alphabet()
        n = rng.randint(0, degree)
        w: Word = ONE
        for _ in range(n):
            w = word_mul(w, (rng.choice(letters),))
        return w

    def random_element(self, rng: random.Random, degree: int, max_terms: int = 3) -> NcPoly:
        terms: dict = {}
        for _ in range(rng.randint(1, max_terms)):
            add_into(terms, {self.random_word(rng, degree): Fraction(rng.choice(COEFFS))})
        return self.normal_form(NcPoly(terms))

    def random_monomial(self, rng: random.Random, degree: int) -> Word:
        nf = self.nf_word(self.random_word(rng, degree))
        if not nf:
            return ONE
        return max(nf, key=self.key)

    def format_tensor(self, T: TensorPoly) -> str:
        from .parsing import format_tensor

        return format_tensor(T, self)


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

def _check_element(H: HopfAlgebra, p: NcPoly, label: str) -> list[Violation]:
    out = []
    D = H.coproduct(p)
    if H.delta_at(D, 0) != H.delta_at(D, 1):
        out.append(Violation("coassociativity", label))
    if H.counit_at(D, 0) != p or H.counit_at(D, 1) != p:
        out.append(Violation("counit", label))
    unit = NcPoly.scalar(H.counit(p))
    if H.multiply_tensor(D, 0) != unit or H.multiply_tensor(D, 1) != unit:
        out.append(Violation("antipode", label))
    return out


def hopf_axiom_report(H: HopfAlgebra, sample_degree: int = 3, trials: int = 20, seed: int = 0) -> list[Violation]:
    """Exact check of the Hopf axioms; an empty list means everything passed."""
    if sample_degree < 1:
        raise InvalidParameter("sample_degree must be >= 1")
    violations: list[Violation] = []
    for a in H.alphabet():
        violations += _check_element(H, H.normal_form(NcPoly.word((a,))), f"generator {H.format_word((a,))}")
    rng = random.Random(seed)
    for i in range(trials):
        p = H.random_element(rng, sample_degree)
        violations += _check_element(H, p, f"sample {i}: {H.format(p)}")
    violations += relation_report(H)
    return violations


def relation_report(H: HopfAlgebra) -> list[Violation]:
    """Delta, epsilon and S must respect every rewrite rule."""
    out = []
    for r in H.rules:
        label = f"{H.format_word(r.lhs)} -> {H.format(r.rhs)}"
        d_rhs: dict = {}
        s_rhs: dict = {}
        for w, c in r.rhs.terms.items():
            add_into(d_rhs, H.delta_word(w), c)
            add_into(s_rhs, H.antipode_word(w), c)
        if dict(H.delta_word(r.lhs)) != d_rhs:
            out.append(Violation("relation-delta", label))
        if H.counit_word(r.lhs) != H.counit(r.rhs):
            out.append(Violation("relation-counit", label))
        if dict(H.antipode_word(r.lhs)) != s_rhs:
            out.append(Violation("relation-antipode", label))
    return out


def grading_check(H: HopfAlgebra, G: Grading, trials: int = 50, seed: int = 0, degree: int = 4) -> list[Violation]:
    kinds = G.component_kinds()
    out = []
    for r in H.rules:
        wl = G.weight(H, r.lhs)
        for w in r.rhs.terms:
            if G.weight(H, w) != wl:
                out.append(Violation("precondition", f"rule {H.format_word(r.lhs)} -> {H.format(r.rhs)} is not homogeneous"))
                break
    if out:
        return out
    rng = random.Random(seed)
    for _ in range(trials):
        h = H.random_monomial(rng, degree)
        wh = G.weight(H, h)
        for (a, b) in H.delta_word(h):
            wa, wb = G.weight(H, a), G.weight(H, b)
            for i, kind in enumerate(kinds):
                ok = (wa[i] + wb[i] == wh[i]) if kind == "coalgebra" else (wb[i] == wh[i])
                if not ok:
                    out.append(Violation("grading", f"{H.format_word(h)}: term {H.format_word(a)} (x) {H.format_word(b)} in component {i}"))
        if any(wh[i] != 0 for i, k in enumerate(kinds) if k == "coalgebra") and H.counit_word(h) != 0:
            out.append(Violation("counit", f"epsilon nonzero on {H.format_word(h)} of weight {wh}"))
    return out


def cobar_d1(H: HopfAlgebra, c) -> TensorPoly:
    c = H.normal_form(c)
    one = NcPoly.scalar(1)
    return tensor(one, c) - H.coproduct(c) + tensor(c, one)


def cobar_d2(H: HopfAlgebra, u: TensorPoly) -> TensorPoly:
    out = TensorPoly(3)
    one = NcPoly.scalar(1)
    for (c, d), k in u.terms.items():
        cp, dp = NcPoly.word(c), NcPoly.word(d)
        term = tensor(one, cp, dp)
        term = term - H.delta_at(tensor(cp, dp), 0)
        term = term + H.delta_at(tensor(cp, dp), 1)
        term = term - tensor(cp, dp, one)
        out = out + term.scale(k)
    return out


def antipode_monomial_identity(alpha: Sequence[int], t: int) -> bool:
    """S(M_alpha) == (-1)^n M_sigma(alpha) in F(t), computed by extension."""
    from .presets import free_pointed, monomial
    from .solver import sigma_map

    H = free_pointed(t)
    n = len(alpha) - 1
    lhs = H.antipode(NcPoly.word(monomial(H, alpha)))
    rhs = NcPoly.word(monomial(H, sigma_map(alpha, t)), (-1) ** n)
    return lhs == rhs
