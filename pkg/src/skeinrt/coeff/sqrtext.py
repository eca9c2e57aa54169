"""Quadratic extension K(D), D*D = r, over a cyclotomic field K."""

from __future__ import annotations

import cmath
from fractions import Fraction

from .cyclotomic import Cyclotomic, sqrt_exact

__all__ = ["SqrtExt", "sqrt_element"]


class SqrtExt:
    """Immutable element a + b*D with D*D = radicand.

    The numeric value of D is the principal complex square root of the
    radicand at the default embedding.
    """

    __slots__ = ("a", "b", "radicand")

    def __init__(self, a: Cyclotomic, b: Cyclotomic | None, radicand: Cyclotomic):
        f = radicand.field
        self.a = f(a) if not isinstance(a, Cyclotomic) else a
        self.b = f.zero() if b is None else (f(b) if not isinstance(b, Cyclotomic) else b)
        self.radicand = radicand

    def parent(self):
        return _SqrtParent(self.radicand)

    def _coerce(self, other):
        if isinstance(other, SqrtExt):
            if other.radicand != self.radicand:
                raise ValueError("different radicands")
            return other
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return SqrtExt(self.radicand.field(other), None, self.radicand)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return SqrtExt(self.a + o.a, self.b + o.b, self.radicand)

    __radd__ = __add__

    def __neg__(self):
        return SqrtExt(-self.a, -self.b, self.radicand)

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
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b, c, d = self.a, self.b, o.a, o.b
        return SqrtExt(a * c + b * d * self.radicand, a * d + b * c, self.radicand)

    __rmul__ = __mul__

    def conjugate_d(self) -> "SqrtExt":
        """The image under D -> -D."""
        return SqrtExt(self.a, -self.b, self.radicand)

    def norm(self) -> Cyclotomic:
        return self.a * self.a - self.b * self.b * self.radicand

    def inverse(self) -> "SqrtExt":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero")
        ninv = n.inverse()
        return SqrtExt(self.a * ninv, -self.b * ninv, self.radicand)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = SqrtExt(self.radicand.field.one(), None, self.radicand)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except ValueError:
            return False
        if o is NotImplemented:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b, self.radicand))

    def is_zero(self) -> bool:
        return not self.a and not self.b

    def in_base(self) -> bool:
        return not self.b

    def to_complex(self) -> complex:
        d = cmath.sqrt(self.radicand.to_complex())
        return self.a.to_complex() + self.b.to_complex() * d

    def __complex__(self):
        return self.to_complex()

    def __repr__(self):
        return f"SqrtExt(a={self.a!r}, b={self.b!r}, radicand={self.radicand!r})"

    def to_json(self) -> dict:
        v = self.to_complex()
        return {
            "a": self.a.to_json(),
            "b": self.b.to_json(),
            "radicand": self.radicand.to_json(),
            "numeric": [v.real, v.imag],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SqrtExt":
        return cls(Cyclotomic.from_json(data["a"]), Cyclotomic.from_json(data["b"]),
                   Cyclotomic.from_json(data["radicand"]))


class _SqrtParent:
    def __init__(self, radicand):
        self.radicand = radicand

    def zero(self):
        return SqrtExt(self.radicand.field.zero(), None, self.radicand)

    def one(self):
        return SqrtExt(self.radicand.field.one(), None, self.radicand)


def sqrt_element(r: Cyclotomic) -> SqrtExt:
    """Square root of ``r`` as an element of the extension by sqrt(r).

    An exact root in the cyclotomic field is used when one exists (then the
    ``b`` part is always zero), with its sign chosen to agree with the
    principal numeric root.
    """
    y = sqrt_exact(r)
    if y is None:
        return SqrtExt(r.field.zero(), r.field.one(), r)
    target = cmath.sqrt(r.to_complex())
    if abs(y.to_complex() - target) > abs(y.to_complex() + target):
        y = -y
    return SqrtExt(y, None, r)
