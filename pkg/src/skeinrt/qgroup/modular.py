"""Modular data of U_s(sl2) at a root of unity.

At s a primitive 4l-th root (or 2l-th, l odd) the labels are V_1 .. V_{l-1}.
Tensor products are truncated to those labels; everything dropped has
quantum trace zero.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd

from ..coeff import Cyclotomic, SqrtExt, sqrt_element
from ..diagram.pd import parse_pd
from .context import QGroupContext
from .invariants import colored_invariant, qdim, twist

__all__ = ["fusion", "fusion_coefficient", "ModularData", "modular_data", "ModularDataError",
           "root_context", "unknot_u",
           "HOPF", "exact_det"]

HOPF = parse_pd("X(1,4,2,3) X(3,2,4,1)", name="Hopf link")
_UNKNOT = parse_pd("O", name="unknot")


class ModularDataError(ValueError):
    """The requested root does not give a modular category, or a check failed."""


def fusion_coefficient(n: int, m: int, k: int, l: int | None = None) -> int:
    """N_{n,m}^k, truncated at level ``l`` (or plain Clebsch-Gordan for None)."""
    if (k - n - m + 1) % 2 or k < abs(n - m) + 1 or k > n + m - 1:
        return 0
    if l is not None and k > 2 * l - 1 - n - m:
        return 0
    return 1


def fusion(n: int, m: int, l: int | None = None) -> list[tuple[int, int]]:
    """Decomposition of V_n (x) V_m as [(k, multiplicity), ...]."""
    if n < 1 or m < 1 or (l is not None and (n >= l or m >= l)):
        bound = "" if l is None else f" and below l={l}"
        raise ModularDataError(f"fusion labels must be positive{bound}: got {n}, {m}")
    top = n + m - 1 if l is None else min(n + m - 1, 2 * l - 1 - n - m)
    return [(k, 1) for k in range(abs(n - m) + 1, top + 1, 2)]


def exact_det(rows: list[list]):
    """Determinant over a field by Gaussian elimination."""
    a = [list(r) for r in rows]
    size = len(a)
    if not size:
        return 1
    one = a[0][0] ** 0
    det = one
    for c in range(size):
        piv = next((r for r in range(c, size) if a[r][c]), None)
        if piv is None:
            return one * 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det = det * a[c][c]
        inv = a[c][c].inverse()
        for r in range(c + 1, size):
            if a[r][c]:
                f = a[r][c] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det


@dataclass(frozen=True)
class ModularData:
    """Labels, fusion, Hopf matrix, twists and the Omega normalisations.

    ``omega`` lists the coefficients of omega = sum qdim(V_n) V_n, ``K`` is
    qdim(omega)^(1/2), ``p_plus``/``p_minus`` are the plain sums
    sum [n]^2 theta_n^(+-1), and u_pm = p_pm / K, C = 1/u_plus.
    """

    l: int
    order: int
    exponent: int
    labels: tuple[int, ...]
    qdims: tuple[Cyclotomic, ...]
    fusion: tuple[tuple[tuple[int, ...], ...], ...]
    hopf: tuple[tuple[Cyclotomic, ...], ...]
    twists: tuple[Cyclotomic, ...]
    omega: tuple[Cyclotomic, ...]
    qdim_omega: Cyclotomic
    K: SqrtExt
    p_plus: Cyclotomic
    p_minus: Cyclotomic
    u_plus: SqrtExt
    u_minus: SqrtExt
    C: SqrtExt
    ctx: QGroupContext = field(compare=False, repr=False)

    @property
    def rank(self) -> int:
        return len(self.labels)

    def N(self, i: int, j: int, k: int) -> int:
        return self.fusion[i - 1][j - 1][k - 1]

    def fusion_matrix(self, i: int) -> list[list[int]]:
        """(N_i)_{j,k} = N_{i,j}^k."""
        return [list(row) for row in self.fusion[i - 1]]

    def qdim_of(self, n: int) -> Cyclotomic:
        return self.qdims[n - 1]

    def twist_of(self, n: int) -> Cyclotomic:
        return self.twists[n - 1]

    def omega_hopf(self, i: int) -> Cyclotomic:
        """F of the Hopf link labeled omega and V_i."""
        total = self.ctx.zero
        for j in self.labels:
            total = total + self.omega[j - 1] * self.hopf[i - 1][j - 1]
        return total

    def hopf_det(self) -> Cyclotomic:
        return exact_det([list(r) for r in self.hopf])

    def to_json(self) -> dict:
        def cj(x):
            return x.to_json()
        return {
            "l": self.l,
            "root": {"order": self.order, "exponent": self.exponent},
            "labels": list(self.labels),
            "qdims": [cj(x) for x in self.qdims],
            "fusion": [[list(r) for r in m] for m in self.fusion],
            "hopf": [[cj(x) for x in r] for r in self.hopf],
            "twists": [cj(x) for x in self.twists],
            "omega": [cj(x) for x in self.omega],
            "qdim_omega": cj(self.qdim_omega),
            "K": self.K.to_json(),
            "p_plus": cj(self.p_plus),
            "p_minus": cj(self.p_minus),
            "u_plus": self.u_plus.to_json(),
            "u_minus": self.u_minus.to_json(),
            "C": self.C.to_json(),
        }

    def dumps(self, **kw) -> str:
        return json.dumps(self.to_json(), **kw)

    @classmethod
    def from_json(cls, data: dict | str) -> "ModularData":
        """Rebuild from :meth:`to_json` output (the context is recreated)."""
        if isinstance(data, str):
            data = json.loads(data)
        cy = Cyclotomic.from_json
        root = data["root"]
        return cls(
            l=int(data["l"]), order=int(root["order"]), exponent=int(root["exponent"]),
            labels=tuple(data["labels"]),
            qdims=tuple(cy(x) for x in data["qdims"]),
            fusion=tuple(tuple(tuple(r) for r in m) for m in data["fusion"]),
            hopf=tuple(tuple(cy(x) for x in r) for r in data["hopf"]),
            twists=tuple(cy(x) for x in data["twists"]),
            omega=tuple(cy(x) for x in data["omega"]),
            qdim_omega=cy(data["qdim_omega"]),
            K=SqrtExt.from_json(data["K"]),
            p_plus=cy(data["p_plus"]), p_minus=cy(data["p_minus"]),
            u_plus=SqrtExt.from_json(data["u_plus"]), u_minus=SqrtExt.from_json(data["u_minus"]),
            C=SqrtExt.from_json(data["C"]),
            ctx=QGroupContext.at_root(int(root["order"]), int(root["exponent"])),
        )


def root_context(l: int, exponent: int = 1, order: int | None = None) -> QGroupContext:
    if l < 2:
        raise ModularDataError(f"l must be at least 2, got {l}")
    order = 4 * l if order is None else order
    if order != 4 * l and not (order == 2 * l and l % 2):
        raise ModularDataError(f"root order must be 4l (or 2l for odd l); got {order} for l={l}")
    if gcd(exponent, order) != 1:
        raise ModularDataError(f"zeta_{order}^{exponent} is not a primitive {order}-th root")
    return QGroupContext.at_root(order, exponent % order)


_CACHE: dict = {}


def modular_data(l: int, root_exponent: int = 1, root_order: int | None = None,
                 check_hopf: bool = True) -> ModularData:
    """Build and validate the modular data at level ``l``."""
    ctx = root_context(l, root_exponent, root_order)
    key = (l, ctx.order, ctx.exponent, check_hopf)
    if key in _CACHE:
        return _CACHE[key]
    if ctx.qint(l):
        raise ModularDataError(f"[{l}] is not zero at this root")
    labels = tuple(range(1, l))
    qd = tuple(qdim(n, ctx) for n in labels)
    for n, q in zip(labels, qd):
        if not q:
            raise ModularDataError(f"qdim(V_{n}) vanishes")
    fus = tuple(tuple(tuple(fusion_coefficient(i, j, k, l) for k in labels) for j in labels)
                for i in labels)
    hopf = tuple(tuple(ctx.qint(i * j) for j in labels) for i in labels)
    if check_hopf:
        for i in labels:
            for j in labels[i - 1:]:
                v = colored_invariant(HOPF, [i, j], ctx, [0, 0])
                if v != hopf[i - 1][j - 1]:
                    raise ModularDataError(f"Hopf link value for ({i},{j}) differs from [{i * j}]")
    if not exact_det([list(r) for r in hopf]):
        raise ModularDataError(f"Hopf matrix is singular at l={l}")
    th = tuple(twist(n, ctx) for n in labels)
    d2 = sum((q * q for q in qd), ctx.zero)
    p_plus = sum((q * q * t for q, t in zip(qd, th)), ctx.zero)
    p_minus = sum((q * q * t.inverse() for q, t in zip(qd, th)), ctx.zero)
    K = sqrt_element(d2)
    kinv = K.inverse()
    u_plus = kinv * p_plus
    u_minus = kinv * p_minus
    if u_plus * u_minus != 1:
        raise ModularDataError("u_plus * u_minus != 1")
    md = ModularData(l=l, order=ctx.order, exponent=ctx.exponent, labels=labels, qdims=qd,
                     fusion=fus, hopf=hopf, twists=th, omega=qd, qdim_omega=d2, K=K,
                     p_plus=p_plus, p_minus=p_minus, u_plus=u_plus, u_minus=u_minus,
                     C=u_plus.inverse(), ctx=ctx)
    _CACHE[key] = md
    return md


def unknot_u(md: ModularData, sign: int) -> SqrtExt:
    """u_pm computed from colored +-1-framed unknots rather than twist sums."""
    total = md.ctx.zero
    for n in md.labels:
        total = total + md.omega[n - 1] * colored_invariant(_UNKNOT, [n], md.ctx, [sign])
    return md.K.inverse() * total
