"""Sparse Laurent polynomials in one variable with integer coefficients.

The variable is a tag: ``"A"`` for Kauffman brackets, ``"s"`` for the
quantum-group parameter and ``"t"`` for Jones polynomials.  For ``"t"``
the stored exponents count quarter powers, so ``t^(1/2)`` is stored as
exponent 2.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Iterable, Mapping

__all__ = ["Laurent", "LaurentRing", "parse_laurent", "QUARTER_VAR"]

QUARTER_VAR = "t"
_VARS = ("A", "s", "t", "q")


class LaurentRing:
    """Parent object handing out constants for a given variable tag."""

    def __init__(self, var: str = "A"):
        if var not in _VARS:
            raise ValueError(f"unknown Laurent variable {var!r}")
        self.var = var

    def zero(self) -> "Laurent":
        return Laurent({}, self.var)

    def one(self) -> "Laurent":
        return Laurent({0: 1}, self.var)

    def gen(self) -> "Laurent":
        return Laurent({1: 1}, self.var)

    def __call__(self, value) -> "Laurent":
        if isinstance(value, Laurent):
            return value
        return Laurent({0: int(value)}, self.var)

    def __eq__(self, other):
        return isinstance(other, LaurentRing) and other.var == self.var

    def __hash__(self):
        return hash(("LaurentRing", self.var))

    def __repr__(self):
        return f"LaurentRing({self.var!r})"


class Laurent:
    """Immutable element of Z[x, x^-1]."""

    __slots__ = ("_c", "var", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None, var: str = "A"):
        if var not in _VARS:
            raise ValueError(f"unknown Laurent variable {var!r}")
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                if v:
                    c[int(e)] = int(v)
        self._c = c
        self.var = var
        self._hash = None

    # construction helpers -------------------------------------------------
    @classmethod
    def monomial(cls, exp: int, coeff: int = 1, var: str = "A") -> "Laurent":
        return cls({exp: coeff}, var)

    @classmethod
    def _raw(cls, c: dict, var: str) -> "Laurent":
        obj = object.__new__(cls)
        obj._c = c
        obj.var = var
        obj._hash = None
        return obj

    def parent(self) -> LaurentRing:
        return LaurentRing(self.var)

    # inspection -----------------------------------------------------------
    def items(self):
        return sorted(self._c.items(), reverse=True)

    def coeff(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def exponents(self) -> list[int]:
        return sorted(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def max_degree(self) -> int:
        return max(self._c)

    def min_degree(self) -> int:
        return min(self._c)

    def __len__(self):
        return len(self._c)

    def __bool__(self):
        return bool(self._c)

    # arithmetic -----------------------------------------------------------
    def _coerce(self, other) -> "Laurent":
        if isinstance(other, Laurent):
            if other.var != self.var:
                raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
            return other
        if isinstance(other, int):
            return Laurent._raw({0: other} if other else {}, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for e, v in other._c.items():
            w = c.get(e, 0) + v
            if w:
                c[e] = w
            else:
                c.pop(e, None)
        return Laurent._raw(c, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Laurent._raw({e: -v for e, v in self._c.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        c: dict[int, int] = {}
        get = c.get
        for e2, v2 in b.items():
            for e1, v1 in a.items():
                e = e1 + e2
                c[e] = get(e, 0) + v1 * v2
        return Laurent._raw({e: v for e, v in c.items() if v}, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial() or abs(next(iter(self._c.values()))) != 1:
                raise ZeroDivisionError("only unit monomials have Laurent inverses")
            (e, v), = self._c.items()
            return Laurent._raw({e * n: v if n % 2 else 1}, self.var)
        result = Laurent._raw({0: 1}, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def exact_div(self, other: "Laurent") -> "Laurent":
        """Divide exactly; raise ``ValueError`` if ``other`` does not divide."""
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        if not self._c:
            return self
        lo_n, lo_d = min(self._c), min(other._c)
        rem = {e - lo_n: v for e, v in self._c.items()}
        den = {e - lo_d: v for e, v in other._c.items()}
        dtop = max(den)
        lead = den[dtop]
        quot: dict[int, int] = {}
        while rem and max(rem) >= dtop:
            top = max(rem)
            q, r = divmod(rem[top], lead)
            if r:
                raise ValueError("not exactly divisible")
            shift = top - dtop
            quot[shift] = q
            for e, w in den.items():
                k = e + shift
                nv = rem.get(k, 0) - q * w
                if nv:
                    rem[k] = nv
                else:
                    rem.pop(k, None)
        if rem:
            raise ValueError("not exactly divisible")
        return Laurent._raw({e + lo_n - lo_d: v for e, v in quot.items()}, self.var)

    def __eq__(self, other):
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        if not isinstance(other, Laurent):
            return NotImplemented
        return self.var == other.var and self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.var, frozenset(self._c.items())))
        return self._hash

    # substitutions --------------------------------------------------------
    def scale_exponents(self, factor: int, var: str | None = None) -> "Laurent":
        """Substitute x -> y^factor (e.g. A -> t^(-1/4) is factor -1 into t)."""
        return Laurent._raw({e * factor: v for e, v in self._c.items()},
                            var or self.var)

    def shift(self, k: int) -> "Laurent":
        return Laurent._raw({e + k: v for e, v in self._c.items()}, self.var)

    def evaluate(self, x):
        """Evaluate at a ring element ``x`` (ring homomorphism on the variable)."""
        if not self._c:
            return x.parent().zero() if hasattr(x, "parent") else 0 * x
        lo, hi = min(self._c), max(self._c)
        one = x.parent().one() if hasattr(x, "parent") else x ** 0
        inv = None
        if lo < 0:
            inv = x ** -1
        total = one * 0
        # Horner on the non-negative part, then on the negative part.
        if hi >= 0:
            acc = one * 0
            for e in range(hi, -1, -1):
                acc = acc * x
                v = self._c.get(e)
                if v:
                    acc = acc + one * v
            total = total + acc
        if lo < 0:
            acc = one * 0
            for e in range(lo, 0):
                v = self._c.get(e)
                if v:
                    acc = acc + one * v
                acc = acc * inv
            total = total + acc
        return total

    def to_complex(self, x: complex) -> complex:
        if self.var == QUARTER_VAR:
            raise ValueError("use to_complex on the t^(1/4) value explicitly")
        return sum(v * x ** e for e, v in self._c.items())

    # text / json ----------------------------------------------------------
    def __str__(self):
        return canonical_string(self)

    def __repr__(self):
        return f"Laurent({canonical_string(self)!r}, var={self.var!r})"

    def to_json(self) -> dict:
        return {"var": self.var,
                "coeffs": {str(e): v for e, v in self.items()}}

    @classmethod
    def from_json(cls, data: dict | str) -> "Laurent":
        if isinstance(data, str):
            data = json.loads(data)
        return cls({int(k): int(v) for k, v in data["coeffs"].items()},
                   data.get("var", "A"))


# ---------------------------------------------------------------------------
# canonical text

def _fmt_exp(var: str, e: int) -> str:
    if var == QUARTER_VAR:
        f = Fraction(e, 4)
        if f.denominator == 1:
            e = f.numerator
        else:
            return f"{var}^({f.numerator}/{f.denominator})"
    if e == 1:
        return var
    return f"{var}^{e}"


def _terms(var: str, items: Iterable[tuple[int, int]]) -> str:
    out = []
    for e, v in items:
        mag = abs(v)
        if e == 0:
            body = str(mag)
        else:
            body = _fmt_exp(var, e)
            if mag != 1:
                body = f"{mag}*{body}"
        if not out:
            out.append(body if v > 0 else f"-{body}")
        else:
            out.append(("+ " if v > 0 else "- ") + body)
    return " ".join(out)


def canonical_string(p: Laurent) -> str:
    """Terms in strictly decreasing exponent order, e.g. ``A^7 + A^3 + A^-1 - A^-9``.

    Jones values (variable ``t``) whose quarter-exponents share a non-zero
    residue mod 4 are printed with that power factored out, as in
    ``t^(1/2)*(t^4 - t^2 - t - 1)``.
    """
    if not p._c:
        return "0"
    items = p.items()
    if p.var != QUARTER_VAR:
        return _terms(p.var, items)
    residues = {e % 4 for e, _ in items}
    if residues == {0}:
        return _terms(p.var, items)
    if len(residues) > 1:
        return _terms(p.var, items)
    r = residues.pop()
    offset = r
    inner_has_const = any(e == offset for e, _ in items)
    if not inner_has_const and any(e == r - 4 for e, _ in items):
        offset = r - 4
    inner = [((e - offset), v) for e, v in items]
    prefix = _fmt_exp(p.var, offset)
    return f"{prefix}*({_terms(p.var, inner)})"


# ---------------------------------------------------------------------------
# parsing

_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coef>\d+)\s*\*?\s*)?
        (?:(?P<var>[Astq])(?:\^(?:\((?P<num>-?\d+)/(?P<den>\d+)\)|(?P<exp>-?\d+)))?)?
        \s*""",
    re.VERBOSE,
)


def _parse_sum(text: str, default_var: str | None) -> tuple[dict[int, int], str | None]:
    coeffs: dict[int, int] = {}
    var = default_var
    pos = 0
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial text")
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos or (m.group("coef") is None and m.group("var") is None):
            raise ValueError(f"cannot parse polynomial at position {pos}: {text[pos:]!r}")
        if not first and m.group("sign") is None:
            raise ValueError(f"missing operator at position {pos}")
        first = False
        sign = -1 if m.group("sign") == "-" else 1
        c = int(m.group("coef")) if m.group("coef") else 1
        v = m.group("var")
        if v is None:
            e = 0
        else:
            if var is None:
                var = v
            elif v != var:
                raise ValueError(f"mixed variables {var} and {v}")
            if m.group("num") is not None:
                f = Fraction(int(m.group("num")), int(m.group("den")))
                if v != QUARTER_VAR or (f * 4).denominator != 1:
                    raise ValueError(f"fractional exponent not allowed: {m.group(0)!r}")
                e = int(f * 4)
            else:
                e = int(m.group("exp")) if m.group("exp") else 1
                if v == QUARTER_VAR:
                    e *= 4
        coeffs[e] = coeffs.get(e, 0) + sign * c
        pos = m.end()
    return coeffs, var


def parse_laurent(text: str, var: str | None = None) -> Laurent:
    """Inverse of :func:`canonical_string` (also accepts ``2*A^3`` and ``2A^3``)."""
    text = text.strip()
    if text == "0":
        return Laurent({}, var or "A")
    m = re.fullmatch(r"\s*t\^\((-?\d+)/(\d+)\)\s*\*\s*\((.*)\)\s*", text)
    if m:
        f = Fraction(int(m.group(1)), int(m.group(2)))
        if (f * 4).denominator != 1:
            raise ValueError("prefix must be a quarter power of t")
        inner, _ = _parse_sum(m.group(3), QUARTER_VAR)
        off = int(f * 4)
        return Laurent({e + off: v for e, v in inner.items()}, QUARTER_VAR)
    coeffs, v = _parse_sum(text, var)
    return Laurent(coeffs, v or var or "A")
