"""Represented U_s(sl2): weights, x, y, the R-matrix and G = s^(2h).

A strand object is ``(n, up)``: the n-dimensional irreducible V_n when the
strand points up, its dual when it points down.  Basis indices are 0-based,
so v_{i+1} in the usual 1-based notation is index i and has weight n-1-2i.
The dual basis vector v_i* has weight -(n-1-2i).  Duals act through the
transpose of the antipode: S(h) = -h, S(x) = -s^2 x, S(y) = -s^-2 y.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from math import gcd

from ..coeff import Laurent, field, quantum_binomial, quantum_integer
from ..functor.matrix import SparseMatrix

__all__ = ["QGroupContext", "RepAction", "Obj"]

Obj = tuple[int, bool]


@dataclass(frozen=True)
class RepAction:
    n: int
    h: SparseMatrix
    x: SparseMatrix
    y: SparseMatrix


class QGroupContext:
    """Ground ring and cached represented structure.

    ``QGroupContext.generic()`` works over Z[s, s^-1]; ``QGroupContext.at_root(N, e)``
    works in Q(zeta_N) with s = zeta_N^e.
    """

    def __init__(self, s, order: int | None = None, exponent: int | None = None):
        self.s = s
        self.order = order
        self.exponent = exponent
        self.one = s.parent().one()
        self.zero = self.one * 0
        self._lock = threading.Lock()
        self._cache: dict = {}
        self._spow: dict[int, object] = {0: self.one, 1: s}
        self._sinv = s ** -1

    @classmethod
    def generic(cls) -> "QGroupContext":
        return cls(Laurent({1: 1}, "s"))

    @classmethod
    def at_root(cls, order: int, exponent: int = 1) -> "QGroupContext":
        if gcd(exponent, order) != 1:
            raise ValueError(f"zeta_{order}^{exponent} is not a primitive root")
        return cls(field(order).zeta(exponent), order, exponent)

    @property
    def is_generic(self) -> bool:
        return self.order is None

    def __repr__(self):
        if self.is_generic:
            return "QGroupContext(generic)"
        return f"QGroupContext(s=zeta_{self.order}^{self.exponent})"

    # memoisation: computed outside the lock, published under it
    def cached(self, key, build):
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        value = build()
        with self._lock:
            return self._cache.setdefault(key, value)

    # scalars ----------------------------------------------------------------
    def spow(self, k: int):
        v = self._spow.get(k)
        if v is None:
            v = self.s ** k if k >= 0 else self._sinv ** (-k)
            self._spow[k] = v
        return v

    def div(self, a, b):
        """Exact quotient a / b in the ground ring."""
        if self.is_generic:
            return a.exact_div(b)
        return a * b.inverse()

    def qint(self, n: int):
        return self.cached(("qint", n), lambda: quantum_integer(n, self.s))

    def qbinom(self, n: int, k: int):
        return self.cached(("qbinom", n, k), lambda: quantum_binomial(n, k, self.s))

    # representations ---------------------------------------------------------
    def rep(self, n: int) -> RepAction:
        if n < 1:
            raise ValueError("representation label must be >= 1")

        def build():
            h = SparseMatrix(n, n, {(i, i): self.one * (n - 1 - 2 * i) for i in range(n)})
            x = SparseMatrix(n, n, {(i - 1, i): self.qint(i) for i in range(1, n)})
            y = SparseMatrix(n, n, {(i + 1, i): self.qint(n - 1 - i) for i in range(n - 1)})
            return RepAction(n, h, x, y)

        return self.cached(("rep", n), build)

    @staticmethod
    def weight(obj: Obj, i: int) -> int:
        n, up = obj
        w = n - 1 - 2 * i
        return w if up else -w

    def g_diag(self, obj: Obj, i: int, power: int = 1):
        """Diagonal entry of G^power = s^(2 power h) on ``obj``."""
        return self.spow(2 * power * self.weight(obj, i))

    def _xdiv(self, obj: Obj, i: int, k: int):
        """x^(k) = x^k/[k]! applied to basis vector i: (new index, coeff) or None."""
        n, up = obj
        if up:
            if i - k < 0:
                return None
            return i - k, self.qbinom(i, k)
        if i + k >= n:
            return None
        c = self.qbinom(i + k, k)
        return i + k, c * self.spow(2 * k) * (-1) ** k

    def _ypow(self, obj: Obj, j: int, k: int):
        """y^k applied to basis vector j."""
        n, up = obj
        if up:
            if j + k >= n:
                return None
            c = self.one
            for t in range(k):
                c = c * self.qint(n - 1 - j - t)
            return j + k, c
        if j - k < 0:
            return None
        c = self.one
        for t in range(k):
            c = c * self.qint(n - 1 - (j - k) - t)
        return j - k, c * self.spow(-2 * k) * (-1) ** k

    def _rcoeff(self, k: int):
        """s^(k(k+1)) (1 - s^-4)^k."""
        def build():
            base = self.one - self.spow(-4)
            return self.spow(k * (k + 1)) * base ** k
        return self.cached(("rcoeff", k), build)

    def r_action(self, a: Obj, b: Obj) -> dict:
        """R on (a) (x) (b) as {(i, j): [((i', j'), coeff), ...]}.

        R = s^(h (x) h) sum_k s^(k(k+1)) (1 - s^-4)^k (s^h x)^(k) (x) (y s^-h)^k,
        the divided power taken as (s^h x)^k / [k]!.  The s^(+-h) twists are
        what make sigma o R commute with the coproduct
        x (x) s^h + s^-h (x) x; on V_2 (x) V_2 they cancel.
        """
        def build():
            na, nb = a[0], b[0]
            out = {}
            for i in range(na):
                for j in range(nb):
                    terms = []
                    for k in range(min(na, nb)):
                        xa = self._xdiv(a, i, k)
                        yb = self._ypow(b, j, k)
                        if xa is None or yb is None:
                            continue
                        (i2, ca), (j2, cb) = xa, yb
                        c = self._rcoeff(k) * ca * cb
                        if not c:
                            continue
                        # (s^h x)^k (x) (y s^-h)^k picks up s^(k(w_i - w_j) + 2k^2)
                        shift = k * (self.weight(a, i) - self.weight(b, j)) + 2 * k * k
                        c = c * self.spow(self.weight(a, i2) * self.weight(b, j2) + shift)
                        terms.append(((i2, j2), c))
                    out[(i, j)] = terms
            return out
        return self.cached(("R", a, b), build)

    def r_matrix(self, n: int, m: int, up_n: bool = True, up_m: bool = True) -> SparseMatrix:
        """R as a matrix on V_n (x) V_m (left factor most significant)."""
        a, b = (n, up_n), (m, up_m)
        entries = {}
        for (i, j), terms in self.r_action(a, b).items():
            for (i2, j2), c in terms:
                entries[(i2 * m + j2, i * m + j)] = c
        return SparseMatrix(n * m, n * m, entries)

    def braiding(self, a: Obj, b: Obj) -> dict:
        """sigma o R : (a) (x) (b) -> (b) (x) (a), as a digit-level local map."""
        def build():
            return {(i, j): [((j2, i2), c) for (i2, j2), c in terms]
                    for (i, j), terms in self.r_action(a, b).items() if terms}
        return self.cached(("braid", a, b), build)

    def braiding_inverse(self, a: Obj, b: Obj) -> dict:
        """Inverse of sigma o R_(b,a), as a local map (a) (x) (b) -> (b) (x) (a)."""
        def build():
            # R = D N with D = s^(h (x) h) diagonal and N unipotent: R^-1 = N^-1 D^-1
            nb, na = b[0], a[0]
            size = nb * na
            off = {}
            for (i, j), ts in self.r_action(b, a).items():
                for (i2, j2), c in ts:
                    if (i2, j2) != (i, j):
                        undo_d = self.spow(-self.weight(b, i2) * self.weight(a, j2))
                        off[(i2 * na + j2, i * na + j)] = -(c * undo_d)
            neg_m = SparseMatrix(size, size, off)
            ninv = SparseMatrix.identity(size, self.one)
            power = ninv
            while True:
                power = power @ neg_m
                if not power.entries:
                    break
                ninv = ninv + power
            out: dict = {}
            for (r, c), v in sorted(ninv.entries.items(), key=lambda kv: (kv[0][1], kv[0][0])):
                i, j = divmod(c, na)
                i2, j2 = divmod(r, na)
                dinv = self.spow(-self.weight(b, i) * self.weight(a, j))
                out.setdefault((j, i), []).append(((i2, j2), v * dinv))
            return out
        return self.cached(("braid_inv", a, b), build)
