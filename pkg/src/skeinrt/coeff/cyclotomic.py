"""Exact arithmetic in the cyclotomic field Q(zeta_N).

Elements are stored in the power basis 1, z, ..., z^(phi-1) of a fixed
primitive N-th root z, reduced modulo the N-th cyclotomic polynomial, as
an integer numerator vector over a positive common denominator.  The
representation is canonical, so ``==`` and ``hash`` are structural.
"""

from __future__ import annotations

import cmath
import itertools
import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

__all__ = [
    "Cyclotomic",
    "CyclotomicField",
    "cyclotomic_poly",
    "field",
    "sqrt_exact",
]


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients (low degree first) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("order must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _poly_divexact(num, list(cyclotomic_poly(d)))
    return tuple(num)


def _poly_divexact(a: list[int], b: list[int]) -> list[int]:
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1]
        if c % lead:
            raise ArithmeticError("inexact polynomial division")
        c //= lead
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    if any(a[: len(b) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return q


class CyclotomicField:
    """Parent object for Q(zeta_N); use :func:`field` to get the shared instance."""

    def __init__(self, order: int):
        self.order = order
        poly = cyclotomic_poly(order)
        self.phi = len(poly) - 1
        self.poly = poly
        phi = self.phi
        # Power-basis vectors of z^k for 0 <= k < max(order, 2*phi - 1).
        top = max(order, 2 * phi - 1)
        rows = []
        cur = [1] + [0] * (phi - 1) if phi else []
        for _ in range(top):
            rows.append(tuple(cur))
            nxt = [0] + cur[:-1]
            hi = cur[-1]
            if hi:
                for i in range(phi):
                    nxt[i] -= hi * poly[i]
            cur = nxt
        self._pow = rows
        self._high = rows[phi: 2 * phi - 1]
        self.units = [k for k in range(order) if math.gcd(k, order) == 1]

    # constants ----------------------------------------------------------
    def zero(self) -> "Cyclotomic":
        return Cyclotomic._raw(self, (0,) * self.phi, 1)

    def one(self) -> "Cyclotomic":
        return self(1)

    def __call__(self, value) -> "Cyclotomic":
        if isinstance(value, Cyclotomic):
            if value.field is not self:
                raise ValueError("element from another cyclotomic field")
            return value
        if isinstance(value, Fraction):
            return Cyclotomic._make(self, [value.numerator] + [0] * (self.phi - 1),
                                    value.denominator)
        return Cyclotomic._raw(self, (int(value),) + (0,) * (self.phi - 1), 1)

    def zeta(self, exp: int = 1) -> "Cyclotomic":
        return Cyclotomic._raw(self, self._pow[exp % self.order], 1)

    def from_coeffs(self, coeffs) -> "Cyclotomic":
        """Element from rational power-basis coefficients (length phi)."""
        fr = [Fraction(c) for c in coeffs]
        if len(fr) != self.phi:
            raise ValueError(f"expected {self.phi} coefficients")
        den = 1
        for c in fr:
            den = den * c.denominator // math.gcd(den, c.denominator)
        return Cyclotomic._make(self, [int(c * den) for c in fr], den)

    def root_of_unity(self, exp: int = 1) -> complex:
        return cmath.exp(2j * math.pi * exp / self.order)

    def __repr__(self):
        return f"CyclotomicField({self.order})"

    def __reduce__(self):
        return (field, (self.order,))


@lru_cache(maxsize=None)
def field(order: int) -> CyclotomicField:
    return CyclotomicField(order)


class Cyclotomic:
    """Immutable element of Q(zeta_N)."""

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, order: int, coeffs=None):
        f = field(order)
        src = f.from_coeffs(coeffs) if coeffs is not None else f.zero()
        self.field = f
        self.num = src.num
        self.den = src.den
        self._hash = None

    @classmethod
    def _raw(cls, f: CyclotomicField, num: tuple, den: int) -> "Cyclotomic":
        obj = object.__new__(cls)
        obj.field = f
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def _make(cls, f: CyclotomicField, num, den: int) -> "Cyclotomic":
        if den != 1:
            g = den
            for c in num:
                if c:
                    g = math.gcd(g, c)
                    if g == 1:
                        break
            if den < 0:
                g = -g
            if g != 1:
                num = [c // g for c in num]
                den //= g
        return cls._raw(f, tuple(num), den)

    def __reduce__(self):
        return (_rebuild, (self.field.order, self.num, self.den))

    @property
    def order(self) -> int:
        return self.field.order

    def parent(self) -> CyclotomicField:
        return self.field

    def coeffs(self) -> list[Fraction]:
        return [Fraction(c, self.den) for c in self.num]

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def __bool__(self):
        return any(self.num)

    # arithmetic -----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.field is not self.field:
                raise ValueError(f"field mismatch: {self.order} vs {other.order}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return Cyclotomic._make(self.field, [a + b for a, b in zip(self.num, o.num)], self.den)
        d1, d2 = self.den, o.den
        return Cyclotomic._make(self.field,
                                [a * d2 + b * d1 for a, b in zip(self.num, o.num)], d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.field, tuple(-a for a in self.num), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return self.field.zero()
            return Cyclotomic._make(self.field, [a * other for a in self.num], self.den)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        f = self.field
        phi = f.phi
        a, b = self.num, o.num
        conv = [0] * (2 * phi - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        out = conv[:phi]
        for k, row in enumerate(f._high):
            c = conv[phi + k]
            if c:
                for i, r in enumerate(row):
                    if r:
                        out[i] += c * r
        return Cyclotomic._make(f, out, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if not any(self.num):
            raise ZeroDivisionError("inverse of zero")
        f = self.field
        phi = f.phi
        # Columns of the multiplication-by-self matrix are self * z^j.
        cols = []
        basis = self
        z = f.zeta(1)
        for _ in range(phi):
            cols.append(basis.coeffs())
            basis = basis * z
        m = [[cols[j][i] for j in range(phi)] + [Fraction(int(i == 0))] for i in range(phi)]
        for c in range(phi):
            piv = next(r for r in range(c, phi) if m[r][c] != 0)
            m[c], m[piv] = m[piv], m[c]
            pv = m[c][c]
            m[c] = [v / pv for v in m[c]]
            for r in range(phi):
                if r != c and m[r][c] != 0:
                    fac = m[r][c]
                    m[r] = [v - fac * w for v, w in zip(m[r], m[c])]
        return f.from_coeffs([m[i][phi] for i in range(phi)])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o.is_rational():
            q = Fraction(o.num[0], o.den)
            if q == 0:
                raise ZeroDivisionError("division by zero")
            return Cyclotomic._make(self.field, [a * q.denominator for a in self.num],
                                    self.den * q.numerator)
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def galois(self, k: int) -> "Cyclotomic":
        """Image under the automorphism z -> z^k (k a unit mod N)."""
        f = self.field
        if math.gcd(k, f.order) != 1:
            raise ValueError("Galois exponent must be coprime to the order")
        out = [0] * f.phi
        for i, c in enumerate(self.num):
            if c:
                row = f._pow[(i * k) % f.order]
                for j, r in enumerate(row):
                    if r:
                        out[j] += c * r
        return Cyclotomic._make(f, out, self.den)

    def conjugate(self) -> "Cyclotomic":
        return self.galois(-1 % self.field.order)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.field is other.field and self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.order, self.num, self.den))
        return self._hash

    # numerics -------------------------------------------------------------
    def to_complex(self, exp: int = 1) -> complex:
        """Value under the embedding z -> exp(2 pi i exp / N)."""
        z = self.field.root_of_unity(exp)
        return sum(c * z ** i for i, c in enumerate(self.num)) / self.den

    def __complex__(self):
        return self.to_complex()

    # text / json ----------------------------------------------------------
    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs()):
            if c:
                terms.append(f"{c}" if i == 0 else f"({c})*z^{i}")
        return f"Cyclotomic[{self.order}](" + (" + ".join(terms) or "0") + ")"

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs()]}

    @classmethod
    def from_json(cls, data: dict) -> "Cyclotomic":
        return field(int(data["order"])).from_coeffs([Fraction(c) for c in data["coeffs"]])


def _rebuild(order, num, den):
    return Cyclotomic._raw(field(order), tuple(num), den)


# ---------------------------------------------------------------------------
# exact square roots

def _isqrt_rational(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    a, b = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def sqrt_exact(x: Cyclotomic) -> Cyclotomic | None:
    """Return y in the same field with y*y == x, or ``None`` if none exists.

    Works on the integral multiple ``x * den**2``: its square roots are
    algebraic integers, hence have integer power-basis coordinates.  Each
    embedding fixes the root up to sign; conjugate embeddings pair up, so
    only 2**(phi/2 - 1) sign patterns need trying.  Candidates are
    rounded and verified exactly.  When two roots exist the one with
    positive real part (then positive imaginary part) at the default
    embedding is returned.
    """
    f = x.field
    if not any(x.num):
        return f.zero()
    den = x.den
    scaled = Cyclotomic._raw(f, tuple(c * den for c in x.num), 1)  # = x * den**2
    if f.phi == 1:
        r = _isqrt_rational(Fraction(scaled.num[0]))
        return None if r is None else f(r / den)
    units = f.units
    reps = [k for k in units if k < f.order - k]
    vals = {k: cmath.sqrt(scaled.to_complex(k)) for k in units}
    vander = np.array([[cmath.exp(2j * math.pi * k * i / f.order) for i in range(f.phi)]
                       for k in units])
    idx = {k: n for n, k in enumerate(units)}
    for signs in itertools.product((1, -1), repeat=len(reps) - 1):
        rhs = np.zeros(len(units), dtype=complex)
        for k, sg in zip(reps, (1,) + signs):
            w = sg * vals[k]
            rhs[idx[k]] = w
            rhs[idx[f.order - k]] = w.conjugate()
        sol = np.linalg.solve(vander, rhs)
        if np.max(np.abs(sol.imag)) > 1e-6:
            continue
        coeffs = [int(round(v)) for v in sol.real]
        if np.max(np.abs(sol.real - np.array(coeffs))) > 1e-6:
            continue
        y = Cyclotomic._raw(f, tuple(coeffs), 1)
        if y * y == scaled:
            root = Cyclotomic._make(f, list(coeffs), den)
            v = root.to_complex()
            if v.real < -1e-12 or (abs(v.real) <= 1e-12 and v.imag < 0):
                root = -root
            return root
    return None
