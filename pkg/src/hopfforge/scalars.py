"""Exact scalars: rationals (``fractions.Fraction``) and elements of Q(sqrt d).

Univariate polynomials are plain coefficient lists in ascending degree.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence, Union

from .errors import FieldMismatch, NotARoot, ResidualDegreeTooHigh

Rational = Fraction


def is_squarefree(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        p += 1
    return True


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Return (k, d) with n == k*k*d and d squarefree (sign kept in d)."""
    sign = -1 if n < 0 else 1
    n = abs(n)
    k = 1
    p = 2
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
            k *= p
        p += 1
    return k, sign * n


class QuadExt:
    """a + b*sqrt(d) with b != 0; use :func:`quad` to build one."""

    __slots__ = ("d", "a", "b")

    def __init__(self, d: int, a, b):
        self.d = d
        self.a = Fraction(a)
        self.b = Fraction(b)

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise FieldMismatch(f"cannot combine sqrt({self.d}) and sqrt({other.d})")
            return other.a, other.b
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return quad(self.d, self.a + o[0], self.b + o[1])

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(self.d, -self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return quad(self.d, self.a - o[0], self.b - o[1])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return quad(self.d, o[0] - self.a, o[1] - self.b)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = o
        return quad(self.d, self.a * a + self.d * self.b * b, self.a * b + self.b * a)

    __rmul__ = __mul__

    def inverse(self):
        norm = self.a * self.a - self.d * self.b * self.b
        return quad(self.d, self.a / norm, -self.b / norm)

    def __truediv__(self, other):
        if isinstance(other, QuadExt):
            return self * other.inverse()
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return quad(self.d, self.a / o[0], self.b / o[0])

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.inverse() * o[0]

    def __pow__(self, n: int):
        result = Fraction(1)
        base = self if n >= 0 else self.inverse()
        for _ in range(abs(n)):
            result = result * base
        return result

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return (self.d, self.a, self.b) == (other.d, other.a, other.b)
        if isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __hash__(self):
        return hash((self.d, self.a, self.b))

    def __repr__(self):
        return f"QuadExt(d={self.d}, a={self.a}, b={self.b})"

    def __str__(self):
        return format_scalar(self)


Scalar = Union[Fraction, QuadExt]


def quad(d: int, a, b) -> Scalar:
    """Build a + b*sqrt(d), collapsing to a Fraction when b == 0."""
    b = Fraction(b)
    if b == 0:
        return Fraction(a)
    if d == 1 or not is_squarefree(d):
        raise ValueError(f"sqrt({d}) does not define a quadratic extension")
    return QuadExt(d, a, b)


def sqrt_of(d: int) -> Scalar:
    k, e = squarefree_decompose(d)
    if e == 1:
        return Fraction(k)
    if e == 0:
        return Fraction(0)
    return quad(e, 0, k)


def as_scalar(value) -> Scalar:
    if isinstance(value, QuadExt):
        return value
    return Fraction(value)


def is_rational(c) -> bool:
    return not isinstance(c, QuadExt)


def field_of(c) -> int | None:
    """The d of Q(sqrt d) that c lives in, or None for rationals."""
    return c.d if isinstance(c, QuadExt) else None


def height(c: Fraction) -> int:
    return max(abs(c.numerator), c.denominator)


def format_rational(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_scalar(c) -> str:
    if not isinstance(c, QuadExt):
        return format_rational(Fraction(c))
    root = f"sqrt({c.d})"
    if c.b == 1:
        irr = root
    elif c.b == -1:
        irr = "-" + root
    else:
        irr = f"{format_rational(c.b)}*{root}"
    if c.a == 0:
        return irr
    sep = "" if irr.startswith("-") else "+"
    return f"{format_rational(c.a)}{sep}{irr}"


# ---------------------------------------------------------------------------
# univariate polynomials: ascending coefficient lists
# ---------------------------------------------------------------------------

def strip(p: Sequence) -> list:
    q = list(p)
    while q and q[-1] == 0:
        q.pop()
    return q


def poly_eval(p: Sequence, r) -> Scalar:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * r + c
    return acc


def poly_mul(p: Sequence, q: Sequence) -> list:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return strip(out)


def poly_divmod(p: Sequence, q: Sequence) -> tuple[list, list]:
    p = strip(p)
    q = strip(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    quo = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    lead = q[-1]
    while len(rem) >= len(q) and rem:
        shift = len(rem) - len(q)
        c = rem[-1] / lead
        quo[shift] = c
        for i, qc in enumerate(q):
            rem[shift + i] = rem[shift + i] - c * qc
        rem = strip(rem)
    return strip(quo), rem


def poly_gcd(p: Sequence, q: Sequence) -> list:
    a, b = strip(p), strip(q)
    while b:
        a, b = b, poly_divmod(a, b)[1]
    if not a:
        return []
    lead = a[-1]
    return [c / lead for c in a]


def derivative(p: Sequence) -> list:
    return strip([i * c for i, c in enumerate(p)][1:])


def squarefree_part(p: Sequence) -> list:
    p = strip(p)
    g = poly_gcd(p, derivative(p))
    if len(g) <= 1:
        return p
    return poly_divmod(p, g)[0]


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def _root_key(r: Fraction):
    return (height(r), r < 0, abs(r))


def rational_roots(p: Sequence) -> list[Fraction]:
    """Distinct rational roots, ordered by (height, positive first)."""
    p = strip([Fraction(c) for c in p])
    if len(p) <= 1:
        return []
    roots = []
    if p[0] == 0:
        roots.append(Fraction(0))
        while p and p[0] == 0:
            p = p[1:]
    if len(p) > 1:
        lcm = 1
        for c in p:
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
        ints = [int(c * lcm) for c in p]
        for num in _divisors(ints[0]):
            for den in _divisors(ints[-1]):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if cand not in roots and poly_eval(p, cand) == 0:
                        roots.append(cand)
    return sorted(roots, key=_root_key)


def deflate(p: Sequence, r) -> list:
    """Exact quotient q with p == (s - r) * q; raises NotARoot otherwise."""
    p = strip(p)
    if not p:
        raise NotARoot("zero polynomial")
    n = len(p) - 1
    q = [Fraction(0)] * n
    carry = Fraction(0)
    for k in range(n, 0, -1):
        carry = p[k] + carry * r if k < n else p[k]
        q[k - 1] = carry
    remainder = p[0] + carry * r if n > 0 else p[0]
    if remainder != 0:
        raise NotARoot(f"{format_scalar(r)} is not a root (remainder {format_scalar(remainder)})")
    return q


def quadratic_roots(p: Sequence) -> list:
    c, b, a = [Fraction(x) for x in p]
    disc = b * b - 4 * a * c
    # disc = num/den = num*den / den^2
    k, d = squarefree_decompose(disc.numerator * disc.denominator)
    scale = Fraction(k, disc.denominator) / (2 * a)
    centre = -b / (2 * a)
    if d == 1:
        return sorted({centre + scale, centre - scale}, key=_root_key)
    return [quad(d, centre, scale), quad(d, centre, -scale)]


def find_roots(p: Sequence) -> list:
    """Every root of p lying in Q or a single quadratic extension of Q.

    Rational roots come first, then the conjugate pair of a quadratic
    residual.  A residual of degree >= 3 raises ResidualDegreeTooHigh when no
    root was found at all; otherwise the rational roots found are returned.
    """
    p = strip(p)
    if len(p) < 2:
        raise ValueError("find_roots needs a polynomial of degree >= 1")
    if not all(is_rational(c) for c in p):
        if len(p) == 2:
            return [-p[0] / p[1]]
        raise ResidualDegreeTooHigh(p, "root extraction over Q(sqrt d) only supports linear polynomials")
    sf = squarefree_part(p)
    roots = rational_roots(sf)
    residual = sf
    for r in roots:
        residual = deflate(residual, r)
    if len(residual) == 3:
        roots.extend(quadratic_roots(residual))
    elif len(residual) > 3 and not roots:
        raise ResidualDegreeTooHigh(residual)
    return roots


def parse_scalar(text: str) -> Scalar:
    """Parse ``3``, ``-7/2`` or ``1/2+3/2*sqrt(2)``."""
    from .parsing import parse_scalar_text

    return parse_scalar_text(text)
