"""Noncommutative words, polynomials and rewriting to normal form.

Words are stored *expanded*: a tuple of nonzero ints, one entry per letter,
where generator number ``i`` (0-based) is written ``i + 1`` and its inverse
``-(i + 1)``.  So ``x^2*y*x^-1`` over generators (x, y) is ``(1, 1, 2, -1)``.
Inverse cancellation happens inside :func:`word_mul`; everything else is done
by rewrite rules.

Polynomials are :class:`NcPoly` objects wrapping ``{word: coefficient}``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidParameter, NegativePower, StepLimitExceeded
from .linalg import add_into
from .scalars import as_scalar, format_scalar

Word = tuple
ONE: Word = ()

DEFAULT_STEP_LIMIT = 10**6


@dataclass(frozen=True)
class Generator:
    name: str
    invertible: bool = False


def word_mul(u: Word, v: Word) -> Word:
    """Concatenate with cancellation of adjacent inverse letters."""
    i = 0
    n = min(len(u), len(v))
    while i < n and u[-1 - i] == -v[i]:
        i += 1
    if i == 0:
        return u + v
    return u[: len(u) - i] + v[i:]


def word_inverse(w: Word) -> Word:
    return tuple(-a for a in reversed(w))


def runs(w: Word) -> list[tuple[int, int]]:
    """Run-length form: [(generator index, signed exponent), ...]."""
    out: list[list[int]] = []
    for a in w:
        g, s = abs(a) - 1, (1 if a > 0 else -1)
        if out and out[-1][0] == g and (out[-1][1] > 0) == (s > 0):
            out[-1][1] += s
        else:
            out.append([g, s])
    return [(g, e) for g, e in out]


def from_runs(pairs: Iterable[tuple[int, int]]) -> Word:
    w: Word = ONE
    for g, e in pairs:
        if e == 0:
            continue
        letter = g + 1 if e > 0 else -(g + 1)
        w = word_mul(w, (letter,) * abs(e))
    return w


class NcPoly:
    """Finite linear combination of words with nonzero exact coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            self.terms = {}
        elif isinstance(terms, NcPoly):
            self.terms = dict(terms.terms)
        else:
            self.terms = {w: c for w, c in dict(terms).items() if c != 0}

    @classmethod
    def word(cls, w: Word, c=1) -> "NcPoly":
        return cls({tuple(w): as_scalar(c)})

    @classmethod
    def scalar(cls, c) -> "NcPoly":
        return cls.word(ONE, c)

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        return self.terms.items()

    def __eq__(self, other):
        if isinstance(other, NcPoly):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        return NcPoly(add_into(dict(self.terms), _as_poly(other).terms))

    __radd__ = __add__

    def __sub__(self, other):
        return NcPoly(add_into(dict(self.terms), _as_poly(other).terms, -1))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __neg__(self):
        return NcPoly({w: -c for w, c in self.terms.items()})

    def scale(self, c) -> "NcPoly":
        if c == 0:
            return NcPoly()
        return NcPoly({w: c * v for w, v in self.terms.items()})

    def coeff(self, w: Word):
        return self.terms.get(tuple(w), 0)

    def __repr__(self):
        inner = ", ".join(f"{w}: {format_scalar(c)}" for w, c in self.terms.items())
        return f"NcPoly({{{inner}}})"


def _as_poly(x) -> NcPoly:
    if isinstance(x, NcPoly):
        return x
    return NcPoly.scalar(x)


@dataclass(frozen=True)
class RewriteRule:
    lhs: Word
    rhs: NcPoly


@dataclass(frozen=True)
class WordOrder:
    """Weighted degree, then lexicographic by letter rank.

    ``precedence`` lists generator indices from smallest to largest; a
    generator ranks just below its own inverse.  ``weights`` gives each
    generator's contribution to the degree (default 1).
    """

    precedence: tuple
    weights: tuple
    _ranks: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        table = {}
        for pos, g in enumerate(self.precedence):
            table[g + 1] = 2 * pos
            table[-(g + 1)] = 2 * pos + 1
        object.__setattr__(self, "_ranks", table)

    def key(self, w: Word):
        table = self._ranks
        weights = self.weights
        return (sum(weights[abs(a) - 1] for a in w), tuple(table[a] for a in w))


@dataclass
class CriticalPairReport:
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


class Algebra:
    """A finitely presented algebra: generators, oriented rules, word order."""

    def __init__(
        self,
        generators: Sequence[Generator],
        rules: Sequence[tuple] = (),
        order: WordOrder | None = None,
        step_limit: int = DEFAULT_STEP_LIMIT,
        check_orientation: bool = True,
    ):
        self.generators = list(generators)
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise InvalidParameter(f"duplicate generator names in {names}")
        self.index = {g.name: i for i, g in enumerate(self.generators)}
        if order is None:
            order = WordOrder(tuple(range(len(names))), tuple([1] * len(names)))
        self.order = order
        self.step_limit = step_limit
        self.rules: list[RewriteRule] = []
        for lhs, rhs in rules:
            self._add_rule(tuple(lhs), _as_poly(rhs), check_orientation)
        self._by_first: dict[int, list[RewriteRule]] = {}
        for r in self.rules:
            self._by_first.setdefault(r.lhs[0], []).append(r)
        self.max_lhs = max((len(r.lhs) for r in self.rules), default=1)
        self._nf_cache: dict[Word, dict] = {}
        self._key_cache: dict[Word, tuple] = {}

    # -- construction helpers -------------------------------------------
    def _add_rule(self, lhs: Word, rhs: NcPoly, check: bool):
        if not lhs:
            raise InvalidParameter("rule with empty left-hand side")
        self._check_letters(lhs)
        for w in rhs.terms:
            self._check_letters(w)
        if check:
            k = self.order.key(lhs)
            bad = [w for w in rhs.terms if not self.order.key(w) < k]
            if bad:
                raise InvalidParameter(
                    f"rule {self.format_word(lhs)} -> ... is not oriented: "
                    f"{self.format_word(bad[0])} is not smaller"
                )
        self.rules.append(RewriteRule(lhs, rhs))

    def _check_letters(self, w: Word):
        for a in w:
            g = abs(a) - 1
            if g >= len(self.generators) or a == 0:
                raise InvalidParameter(f"letter {a} outside the alphabet")
            if a < 0 and not self.generators[g].invertible:
                raise NegativePower(f"negative power of non-invertible generator {self.generators[g].name}")

    def gen(self, name: str) -> Word:
        return (self.index[name] + 1,)

    def word(self, *pairs) -> Word:
        """``A.word(("x", 2), ("y", 1))`` -> x^2*y as an expanded word."""
        return from_runs((self.index[n], e) for n, e in pairs)

    def poly(self, terms: dict) -> NcPoly:
        return self.normal_form(NcPoly(terms))

    # -- ordering ---------------------------------------------------------
    def key(self, w: Word):
        k = self._key_cache.get(w)
        if k is None:
            k = self._key_cache[w] = self.order.key(w)
        return k

    def sorted_words(self, words: Iterable[Word], reverse=False) -> list[Word]:
        return sorted(words, key=self.key, reverse=reverse)

    # -- rewriting --------------------------------------------------------
    def _find(self, w: Word, start: int):
        by_first = self._by_first
        n = len(w)
        for i in range(max(start, 0), n):
            cands = by_first.get(w[i])
            if not cands:
                continue
            for r in cands:
                m = len(r.lhs)
                if i + m <= n and w[i : i + m] == r.lhs:
                    return i, r
        return None

    def rewrite_step(self, w: Word):
        """One leftmost rewrite of w, or None if w is irreducible."""
        hit = self._find(w, 0)
        if hit is None:
            return None
        i, r = hit
        pre, post = w[:i], w[i + len(r.lhs):]
        return [(word_mul(word_mul(pre, rw), post), c) for rw, c in r.rhs.terms.items()]

    def is_irreducible(self, w: Word) -> bool:
        return self._find(w, 0) is None

    def _reduce(self, w: Word, start: int = 0) -> dict:
        cached = self._nf_cache.get(w)
        if cached is not None:
            return cached
        out: dict = {}
        stack = [(w, Fraction(1), start)]
        steps = 0
        maxl = self.max_lhs
        while stack:
            cur, c, st = stack.pop()
            hit = self._find(cur, st)
            if hit is None:
                v = out.get(cur, 0) + c
                if v == 0:
                    out.pop(cur, None)
                else:
                    out[cur] = v
                continue
            steps += 1
            if steps > self.step_limit:
                raise StepLimitExceeded(f"more than {self.step_limit} rewrite steps")
            i, r = hit
            pre, post = cur[:i], cur[i + len(r.lhs):]
            for rw, rc in r.rhs.terms.items():
                new = word_mul(word_mul(pre, rw), post)
                common = min(i, _common_prefix(new, cur))
                stack.append((new, c * rc, common - maxl + 1))
        self._nf_cache[w] = out
        return out

    def nf_word(self, w: Word) -> dict:
        """Normal form of a single word as a plain dict (shared; do not mutate)."""
        return self._reduce(w)

    def normal_form(self, p) -> NcPoly:
        p = _as_poly(p)
        out: dict = {}
        for w, c in p.terms.items():
            add_into(out, self._reduce(w), c)
        return NcPoly(out)

    def mul_words(self, u: Word, v: Word) -> dict:
        """Normal form of u*v; u is assumed irreducible (used as a start hint)."""
        prod = word_mul(u, v)
        cached = self._nf_cache.get(prod)
        if cached is not None:
            return cached
        keep = len(u) - (len(u) + len(v) - len(prod)) // 2
        res = self._reduce_from(prod, keep - self.max_lhs + 1)
        return res

    def _reduce_from(self, w: Word, start: int) -> dict:
        cached = self._nf_cache.get(w)
        if cached is not None:
            return cached
        if self._find(w, start) is None:
            res = {w: Fraction(1)}
            self._nf_cache[w] = res
            return res
        return self._reduce(w, start)

    def mul(self, *polys) -> NcPoly:
        """Normalized product of polynomials."""
        if not polys:
            return NcPoly.scalar(1)
        acc = dict(self.normal_form(polys[0]).terms)
        for q in polys[1:]:
            q = _as_poly(q)
            nxt: dict = {}
            for u, a in acc.items():
                for v, b in q.terms.items():
                    add_into(nxt, self.mul_words(u, v), a * b)
            acc = nxt
        return NcPoly(acc)

    def power(self, p, n: int) -> NcPoly:
        out = NcPoly.scalar(1)
        for _ in range(n):
            out = self.mul(out, p)
        return out

    # -- confluence evidence ---------------------------------------------
    def critical_pair_check(self, max_len: int | None = None) -> CriticalPairReport:
        """Resolve every overlap of rule left sides (total length <= max_len).

        Overlaps with the built-in cancellation x*x^-1 = 1 are included.
        """
        if max_len is None:
            max_len = 2 * self.max_lhs
        report = CriticalPairReport()

        def reduce_poly(terms: dict) -> dict:
            out: dict = {}
            for w, c in terms.items():
                add_into(out, self._reduce(w), c)
            return out

        def one_step(word: Word, at: int, rule: RewriteRule) -> dict:
            pre, post = word[:at], word[at + len(rule.lhs):]
            out: dict = {}
            for rw, c in rule.rhs.terms.items():
                add_into(out, {word_mul(word_mul(pre, rw), post): c})
            return out

        for r1, r2 in itertools.product(self.rules, repeat=2):
            a, b = r1.lhs, r2.lhs
            for k in range(1, min(len(a), len(b)) + 1):
                # suffix of a of length k == prefix of b; skip identical rule full overlap
                if r1 is r2 and k == len(a):
                    continue
                if a[len(a) - k:] != b[:k]:
                    continue
                word = a + b[k:]
                if len(word) > max_len:
                    continue
                left = reduce_poly(one_step(word, 0, r1))
                right = reduce_poly(one_step(word, len(a) - k, r2))
                report.checked += 1
                if left != right:
                    report.failures.append((word, left, right))
            # inclusion: b occurs inside a without touching its right end
            if r1 is not r2 and len(b) < len(a):
                for at in range(0, len(a) - len(b)):
                    if a[at: at + len(b)] == b:
                        left = reduce_poly(one_step(a, 0, r1))
                        right = reduce_poly(one_step(a, at, r2))
                        report.checked += 1
                        if left != right:
                            report.failures.append((a, left, right))
        for r in self.rules:
            ends = [(r.lhs[0], True), (r.lhs[-1], False)]
            for letter, at_front in ends:
                if not self.generators[abs(letter) - 1].invertible:
                    continue
                inv = (-letter,)
                rhs = reduce_poly(dict(r.rhs.terms))
                if at_front:
                    word = inv + r.lhs
                    direct = self._reduce(word_mul(inv, r.lhs))
                    other = reduce_poly({word_mul(inv, w): c for w, c in rhs.items()})
                else:
                    word = r.lhs + inv
                    direct = self._reduce(word_mul(r.lhs, inv))
                    other = reduce_poly({word_mul(w, inv): c for w, c in rhs.items()})
                report.checked += 1
                if dict(direct) != other:
                    report.failures.append((word, dict(direct), other))
        return report

    # -- display ----------------------------------------------------------
    def format_word(self, w: Word) -> str:
        if not w:
            return "1"
        parts = []
        for g, e in runs(w):
            name = self.generators[g].name
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts)

    def format(self, p) -> str:
        from .parsing import format_poly

        return format_poly(_as_poly(p), self)


def _common_prefix(u: Word, v: Word) -> int:
    n = min(len(u), len(v))
    i = 0
    while i < n and u[i] == v[i]:
        i += 1
    return i
