"""Exact growth of span(V^n), GK-degree estimates, group ball growth and
Hopf-subalgebra closure evidence."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import DimensionCap, InsufficientData, InvalidParameter
from .freealg import ONE, NcPoly, word_mul
from .hopf import HopfAlgebra, Violation
from .linalg import Echelon

DEFAULT_DIM_CAP = 200_000
SUPERPOLY_RATIO = Fraction(3, 2)


@dataclass
class DimSequence:
    dims: list
    generators: list = field(default_factory=list)
    truncated: bool = False

    def __len__(self):
        return len(self.dims)

    def csv(self) -> str:
        lines = ["n,dim"] + [f"{n},{d}" for n, d in enumerate(self.dims, start=1)]
        return "\n".join(lines) + "\n"


@dataclass
class GKEstimate:
    degree: int | None
    superpolynomial: bool
    ratio_exponent: float
    m: int
    dims: list

    def to_json(self) -> dict:
        out: dict = {"superpolynomial": True} if self.superpolynomial else {"degree": self.degree}
        out["log2_ratio"] = round(self.ratio_exponent, 6)
        out["m"] = self.m
        out["dims"] = list(self.dims)
        return out


def _normalized_set(H: HopfAlgebra, V: Sequence) -> list[NcPoly]:
    out = []
    for v in V:
        p = H.normal_form(v)
        if p and p not in out:
            out.append(p)
    return out


def _monomial_rules(H: HopfAlgebra) -> bool:
    return all(len(r.rhs.terms) <= 1 for r in H.rules)


class SpanTracker:
    """Incremental echelon basis of span(V^n)."""

    def __init__(self, H: HopfAlgebra, V: Sequence, cap: int = DEFAULT_DIM_CAP):
        self.H = H
        self.V = _normalized_set(H, V)
        if not self._contains_one():
            raise InvalidParameter("V must contain 1 in its span")
        self.cap = cap
        self.monomial = _monomial_rules(H) and all(len(v.terms) == 1 for v in self.V)
        self.ech = Echelon(key=H.key)
        self.words: set = set()
        self.frontier = self._add(self.V)
        self.n = 1

    def _contains_one(self) -> bool:
        ech = Echelon(key=self.H.key)
        for v in self.V:
            ech.insert(v.terms)
        return ech.contains({ONE: Fraction(1)})

    @property
    def dim(self) -> int:
        return len(self.words) if self.monomial else len(self.ech)

    def _add(self, polys) -> list:
        new = []
        for p in polys:
            if self.monomial:
                (w,) = p.terms
                if w not in self.words:
                    self.words.add(w)
                    new.append(NcPoly.word(w))
            else:
                grew, _ = self.ech.insert(p.terms)
                if grew:
                    lead = self.ech.order[-1]
                    new.append(NcPoly(self.ech.rows[lead]))
            if self.dim > self.cap:
                raise DimensionCap(f"span exceeds {self.cap} basis elements")
        return new

    def step(self) -> int:
        H = self.H
        products = (H.mul(p, v) for p in self.frontier for v in self.V)
        if self.monomial:
            products = (q for q in products if q)
        self.frontier = self._add(products)
        self.n += 1
        return self.dim

    def basis(self) -> list[NcPoly]:
        if self.monomial:
            return [NcPoly.word(w) for w in sorted(self.words, key=self.H.key)]
        return [NcPoly(r) for r in self.ech.reduced_rows()]

    def contains(self, p: NcPoly) -> bool:
        if self.monomial:
            return all(w in self.words for w in p.terms)
        return self.ech.contains(p.terms)


def span_dimension_sequence(H: HopfAlgebra, V: Sequence, N: int, cap: int = DEFAULT_DIM_CAP) -> DimSequence:
    """dim span(V^n) for n = 1..N.  On hitting the cap the partial sequence is
    returned with ``truncated=True``."""
    if N < 1:
        raise InvalidParameter("N must be >= 1")
    labels = [H.format(v) for v in _normalized_set(H, V)]
    try:
        tr = SpanTracker(H, V, cap)
    except DimensionCap:
        return DimSequence([], labels, truncated=True)
    dims = [tr.dim]
    try:
        while len(dims) < N:
            dims.append(tr.step())
    except DimensionCap:
        return DimSequence(dims, labels, truncated=True)
    return DimSequence(dims, labels)


def gk_estimate(D) -> GKEstimate:
    dims = list(D.dims if isinstance(D, DimSequence) else D)
    N = len(dims)
    if N < 8:
        raise InsufficientData(f"need at least 8 terms, got {N}")
    m = N // 2
    r = math.log2(dims[2 * m - 1] / dims[m - 1])
    quarter = max(1, N // 4)
    superpoly = all(Fraction(dims[n], dims[n - 1]) >= SUPERPOLY_RATIO for n in range(N - quarter, N))
    return GKEstimate(None if superpoly else round(r), superpoly, r, m, dims)


def generator_letters(H: HopfAlgebra, names: Sequence[str] | None = None) -> list[int]:
    if any(p is not None for p in H.pairs) or not all(g.invertible for g in H.generators):
        raise InvalidParameter("ball growth needs a group algebra preset")
    if names is None:
        idx = range(len(H.generators))
    else:
        unknown = [n for n in names if n not in H.index]
        if unknown:
            raise InvalidParameter(f"unknown generators {unknown}")
        idx = [H.index[n] for n in names]
    return [s * (i + 1) for i in idx for s in (1, -1)]


def ball_growth(H: HopfAlgebra, N: int, generators: Sequence[str] | None = None,
                cap: int = DEFAULT_DIM_CAP) -> DimSequence:
    """|B(n)| for n = 1..N in the word metric of a symmetric generating set
    (all generators by default)."""
    letters = generator_letters(H, generators)
    labels = [H.format_word((a,)) for a in letters]
    seen = {ONE}
    layer = [ONE]
    dims = []
    for _ in range(N):
        nxt = []
        for w in layer:
            for a in letters:
                v = H.nf_monomial(word_mul(w, (a,)))
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        if len(seen) > cap:
            return DimSequence(dims, labels, truncated=True)
        dims.append(len(seen))
        layer = nxt
    return DimSequence(dims, labels)


@dataclass
class SubalgebraReport:
    cap: int
    dims: list
    violations: list
    generators_closed: bool

    @property
    def ok(self) -> bool:
        return not self.violations


def _in_tensor_span(tr: SpanTracker, terms: dict) -> tuple[bool, str]:
    """T lies in S (x) S iff every row slice and every column slice lies in S."""
    rows: dict = {}
    cols: dict = {}
    for (a, b), c in terms.items():
        rows.setdefault(a, {})[b] = c
        cols.setdefault(b, {})[a] = c
    for side, slices in (("right", rows), ("left", cols)):
        for fixed, vec in slices.items():
            if not tr.contains(NcPoly(vec)):
                return False, f"{side} factor next to {tr.H.format_word(fixed)} leaves the span"
    return True, ""


def verify_hopf_subalgebra(H: HopfAlgebra, gens: Sequence, degree_cap: int, cap: int = DEFAULT_DIM_CAP) -> SubalgebraReport:
    """Closure evidence for the subalgebra generated by gens and their antipodes."""
    gens = _normalized_set(H, gens)
    if not gens:
        raise InvalidParameter("need at least one nonzero generator")
    if degree_cap < 1:
        raise InvalidParameter("degree_cap must be >= 1")
    V = [NcPoly.scalar(1)] + list(gens)
    # close the generating set under S as far as it keeps producing new elements
    frontier = list(gens)
    for _ in range(4):
        probe = Echelon(key=H.key)
        for v in V:
            probe.insert(v.terms)
        new = []
        for g in frontier:
            s = H.antipode(g)
            if s and not probe.contains(s.terms):
                probe.insert(s.terms)
                new.append(s)
        if not new:
            break
        V.extend(new)
        frontier = new
    tr = SpanTracker(H, V, cap)
    dims = [tr.dim]
    for _ in range(degree_cap - 1):
        dims.append(tr.step())

    violations = []
    gen_closed = True
    for b in tr.basis():
        ok, why = _in_tensor_span(tr, H.coproduct(b).terms)
        if not ok:
            violations.append(Violation("coproduct", f"Delta({H.format(b)}): {why}"))
        s = H.antipode(b)
        if not tr.contains(s):
            violations.append(Violation("antipode", f"S({H.format(b)}) = {H.format(s)} leaves the span"))
    for g in gens:
        ok, _ = _in_tensor_span(tr, H.coproduct(g).terms)
        gen_closed = gen_closed and ok and tr.contains(H.antipode(g))
    return SubalgebraReport(degree_cap, dims, violations, gen_closed)
