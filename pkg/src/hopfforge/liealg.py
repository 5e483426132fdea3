"""Finite-dimensional Lie algebras given by structure constants."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .errors import InvalidParameter, NoWitness, ResidualDegreeTooHigh
from .linalg import Echelon, kernel
from .scalars import as_scalar, find_roots, height, is_rational, parse_scalar


@dataclass
class LieAlgebra:
    names: list
    brackets: dict = field(default_factory=dict)   # (i, j), i < j -> coefficient list
    label: str = ""

    @property
    def dim(self) -> int:
        return len(self.names)

    def bracket_basis(self, i: int, j: int) -> list:
        if i == j:
            return [Fraction(0)] * self.dim
        if i < j:
            return list(self.brackets.get((i, j), [Fraction(0)] * self.dim))
        return [-c for c in self.brackets.get((j, i), [Fraction(0)] * self.dim)]

    def bracket(self, u: Sequence, v: Sequence) -> list:
        out = [Fraction(0)] * self.dim
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j, b in enumerate(v):
                if b == 0 or i == j:
                    continue
                ab = a * b
                for k, c in enumerate(self.bracket_basis(i, j)):
                    if c != 0:
                        out[k] = out[k] + ab * c
        return out

    def basis_vector(self, i: int) -> list:
        return [Fraction(int(k == i)) for k in range(self.dim)]

    def format_vector(self, v: Sequence) -> str:
        from .scalars import format_scalar

        parts = []
        for name, c in zip(self.names, v):
            if c == 0:
                continue
            parts.append(name if c == 1 else f"({format_scalar(c)})*{name}")
        return " + ".join(parts) or "0"


def make_lie(names: Sequence[str], brackets: dict, label: str = "") -> LieAlgebra:
    """brackets maps (i, j) with i != j to a coefficient list; antisymmetry is imposed."""
    d = len(names)
    table = {}
    for (i, j), vec in brackets.items():
        vec = [as_scalar(c) for c in vec]
        if len(vec) != d:
            raise InvalidParameter(f"bracket [{i},{j}] has {len(vec)} coefficients, expected {d}")
        if i == j:
            raise InvalidParameter("bracket of a basis vector with itself")
        if i > j:
            i, j, vec = j, i, [-c for c in vec]
        table[(i, j)] = vec
    return LieAlgebra(list(names), table, label)


def sl2() -> LieAlgebra:
    # basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h
    return make_lie(["h", "e", "f"], {(0, 1): [0, 2, 0], (0, 2): [0, 0, -2], (1, 2): [1, 0, 0]}, "sl2")


def heisenberg_lie() -> LieAlgebra:
    return make_lie(["x", "y", "z"], {(0, 1): [0, 0, 1]}, "heis")


def abelian(d: int) -> LieAlgebra:
    return make_lie([f"a{i}" for i in range(d)], {}, f"ab{d}")


def solvable2() -> LieAlgebra:
    return make_lie(["x", "y"], {(0, 1): [0, 1]}, "aff1")


BUILTIN = {"sl2": sl2, "heis": heisenberg_lie, "aff1": solvable2}


def lie_from_json(doc: dict, label: str = "") -> LieAlgebra:
    names = doc.get("names") or [f"e{i + 1}" for i in range(doc["dim"])]
    if "dim" in doc and doc["dim"] != len(names):
        raise InvalidParameter("dim does not match the number of names")
    brackets = {}
    for i, j, vec in doc.get("brackets", []):
        brackets[(int(i), int(j))] = [parse_scalar(str(c)) for c in vec]
    return make_lie(names, brackets, label or doc.get("label", ""))


def load_lie(ref: str) -> LieAlgebra:
    """A builtin name (sl2, heis, aff1) or a path to a Lie algebra JSON file."""
    if ref in BUILTIN:
        return BUILTIN[ref]()
    path = Path(ref)
    return lie_from_json(json.loads(path.read_text()), label=path.stem)


def jacobi_check(L: LieAlgebra) -> list[str]:
    bad = []
    for i, j, k in itertools.combinations(range(L.dim), 3):
        x, y, z = L.basis_vector(i), L.basis_vector(j), L.basis_vector(k)
        terms = [L.bracket(x, L.bracket(y, z)), L.bracket(y, L.bracket(z, x)), L.bracket(z, L.bracket(x, y))]
        total = [a + b + c for a, b, c in zip(*terms)]
        if any(c != 0 for c in total):
            bad.append(f"Jacobi fails on ({L.names[i]}, {L.names[j]}, {L.names[k]}): {L.format_vector(total)}")
    return bad


def _vec(v: Sequence) -> dict:
    return {i: c for i, c in enumerate(v) if c != 0}


def span_basis(vectors) -> list[list]:
    if not vectors:
        return []
    d = len(vectors[0])
    ech = Echelon()
    for v in vectors:
        ech.insert(_vec(v))
    return [[ech.rows[lead].get(i, Fraction(0)) for i in range(d)] for lead in ech.order]


def lower_central_series(L: LieAlgebra) -> list[int]:
    """dims of L, [L,L], [L,[L,L]], ... until the dimension stops changing."""
    current = [L.basis_vector(i) for i in range(L.dim)]
    dims = [L.dim]
    while True:
        products = [L.bracket(L.basis_vector(i), v) for i in range(L.dim) for v in current]
        ech = Echelon()
        for v in products:
            ech.insert(_vec(v))
        nxt = [[ech.rows[lead].get(i, Fraction(0)) for i in range(L.dim)] for lead in ech.order]
        dims.append(len(nxt))
        if len(nxt) == 0 or len(nxt) == len(current):
            return dims
        current = nxt


def is_nilpotent(L: LieAlgebra) -> bool:
    return lower_central_series(L)[-1] == 0


def ad_matrix(L: LieAlgebra, x: Sequence) -> list[list]:
    """Matrix of ad x in the basis; column j is [x, e_j]."""
    cols = [L.bracket(x, L.basis_vector(j)) for j in range(L.dim)]
    return [[cols[j][i] for j in range(L.dim)] for i in range(L.dim)]


def _matmul(a, b):
    n = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(n)), Fraction(0)) for j in range(n)] for i in range(n)]


def charpoly(m: list[list]) -> list:
    """Characteristic polynomial det(s I - m), ascending coefficients (Faddeev-LeVerrier)."""
    n = len(m)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    ident = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        prev = coeffs[n - k + 1]
        mk = [[a + prev * b for a, b in zip(r1, r2)] for r1, r2 in zip(mk, ident)]
        amk = _matmul(m, mk)
        trace = sum((amk[i][i] for i in range(n)), Fraction(0))
        coeffs[n - k] = -trace / k
        mk = amk
    return coeffs


def is_ad_nilpotent(L: LieAlgebra, x: Sequence) -> bool:
    m = ad_matrix(L, x)
    p = m
    for _ in range(L.dim):
        if all(c == 0 for row in p for c in row):
            return True
        p = _matmul(p, m)
    return all(c == 0 for row in p for c in row)


def _eigenvector(L: LieAlgebra, x: Sequence, lam) -> list:
    m = ad_matrix(L, x)
    cols = []
    for j in range(L.dim):
        col = {i: m[i][j] - (lam if i == j else 0) for i in range(L.dim)}
        cols.append({i: c for i, c in col.items() if c != 0})
    rels = kernel(cols)
    if not rels:
        raise NoWitness(f"no eigenvector for eigenvalue {lam}")
    rel = rels[0]
    return [rel.get(j, Fraction(0)) for j in range(L.dim)]


def _witness_candidates(d: int):
    for i in range(d):
        yield [Fraction(int(k == i)) for k in range(d)]
    for i, j in itertools.combinations(range(d), 2):
        for s in (1, -1):
            yield [Fraction(1 if k == i else (s if k == j else 0)) for k in range(d)]


def _eig_key(lam):
    if is_rational(lam):
        return (0, height(lam), lam < 0)
    return (1, 0, False)


def two_dim_subalgebra(L: LieAlgebra) -> tuple[list, list]:
    """A pair (u, v) spanning a 2-dimensional subalgebra.

    Nilpotent L: u central, v any independent basis vector.  Otherwise u is
    a witness with ad u not nilpotent and v an eigenvector of ad u for a
    nonzero eigenvalue, so [u, v] = lam v.
    """
    if L.dim < 2:
        raise InvalidParameter("need dim >= 2")
    bad = jacobi_check(L)
    if bad:
        raise InvalidParameter(bad[0])
    if is_nilpotent(L):
        # centre = kernel of v -> ([v, e_1], ..., [v, e_d])
        cols = []
        for i in range(L.dim):
            ei = L.basis_vector(i)
            col = {}
            for j in range(L.dim):
                for k, c in enumerate(L.bracket(ei, L.basis_vector(j))):
                    if c != 0:
                        col[(j, k)] = c
            cols.append(col)
        centre = kernel(cols)
        u = [centre[0].get(i, Fraction(0)) for i in range(L.dim)]
        for i in range(L.dim):
            v = L.basis_vector(i)
            if len(span_basis([u, v])) == 2:
                pair = (u, v)
                break
    else:
        pair = None
        unreachable = None
        for x in _witness_candidates(L.dim):
            if is_ad_nilpotent(L, x):
                continue
            p = charpoly(ad_matrix(L, x))
            while p[0] == 0:
                p = p[1:]
            try:
                eigs = find_roots(p)
            except ResidualDegreeTooHigh as exc:
                unreachable = unreachable or exc
                continue
            lam = sorted(eigs, key=_eig_key)[0]
            pair = (x, _eigenvector(L, x, lam))
            break
        if pair is None:
            if unreachable is not None:
                raise unreachable
            raise NoWitness("no non-ad-nilpotent element among basis vectors and pairwise sums")
    u, v = pair
    if not is_closed_pair(L, u, v):
        raise NoWitness("internal error: returned pair is not bracket-closed")
    return u, v


def is_closed_pair(L: LieAlgebra, u: Sequence, v: Sequence) -> bool:
    if len(span_basis([u, v])) != 2:
        return False
    w = L.bracket(u, v)
    return len(span_basis([u, v, w])) == 2
