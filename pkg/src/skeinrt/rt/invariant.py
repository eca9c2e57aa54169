"""Closed 3-manifold invariants from surgery presentations.

Every component is labeled by Omega = K^-1 omega with K^2 = qdim(omega).  For
a presentation with c components and linking-matrix signature sigma,

    biframed  = K^(-1-c) * sum over labelings n of prod [n_i] F(L; n),
    corrected = C^sigma * biframed,

where F(L; n) is the colored invariant at the given framings.  Split parts of
the diagram are summed separately and multiplied.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from ..coeff import SqrtExt
from ..diagram.pd import LinkDiagram
from ..diagram.surgery import SurgeryPresentation
from ..qgroup.invariants import colored_invariant, twist_power
from ..qgroup.modular import ModularData, modular_data

__all__ = ["RTResult", "CostExceeded", "rt_invariant", "s3_value", "estimate_cost",
           "DEFAULT_MAX_COST", "coloring_sum"]

DEFAULT_MAX_COST = 10 ** 7
MAX_COMPONENTS_LARGE_L = 8
_PARALLEL_MIN = 64


class CostExceeded(RuntimeError):
    """The coloring sum is larger than the caller allows."""

    def __init__(self, message: str, estimate: int):
        super().__init__(message)
        self.estimate = estimate


@dataclass(frozen=True)
class RTResult:
    biframed: SqrtExt
    corrected: SqrtExt
    signature: int
    components: int
    l: int
    order: int
    exponent: int

    @property
    def value(self) -> SqrtExt:
        return self.corrected

    def numeric(self) -> complex:
        return self.corrected.to_complex()

    def to_json(self) -> dict:
        return {
            "l": self.l,
            "root": {"order": self.order, "exponent": self.exponent},
            "components": self.components,
            "signature": self.signature,
            "biframed": self.biframed.to_json(),
            "corrected": self.corrected.to_json(),
        }


def _parts(d: LinkDiagram):
    """Split parts as (sub-diagram, component indices of d)."""
    out = []
    for xs, comps in d.split_parts():
        if xs:
            out.append((d.sub_diagram(sorted(xs)), sorted(comps)))
        else:
            out.append((None, sorted(comps)))
    return out


def estimate_cost(p: SurgeryPresentation, l: int) -> int:
    """Functor evaluations times crossings, summed over split parts."""
    total = 0
    for sub, comps in _parts(p.diagram):
        if sub is None:
            total += l - 1
        else:
            total += (l - 1) ** len(comps) * (sub.crossing_count + 1)
    return total


def _part_sum(sub: LinkDiagram, framings, labelings, md: ModularData):
    ctx = md.ctx
    sw = sub.self_writhe()
    total = ctx.zero
    for ns in labelings:
        v = colored_invariant(sub, ns, ctx)
        if not v:
            continue
        for n, f, w in zip(ns, framings, sw):
            v = v * md.qdims[n - 1]
            if f != w and n > 1:
                v = v * twist_power(n, f - w, ctx)
        total = total + v
    return total


def _worker(args):
    data, framings, labelings, l, order, exponent = args
    md = modular_data(l, exponent, order, check_hopf=False)
    return _part_sum(LinkDiagram.from_json(data), framings, labelings, md)


def coloring_sum(p: SurgeryPresentation, md: ModularData, threads: int = 1):
    """sum over labelings of prod [n_i] F(L; n), exactly."""
    ctx = md.ctx
    result = ctx.one
    for sub, comps in _parts(p.diagram):
        fr = [p.framings[c] for c in comps]
        if sub is None:
            (f,) = fr
            s = ctx.zero
            for n in md.labels:
                q = md.qdims[n - 1]
                s = s + q * q * twist_power(n, f, ctx)
            result = result * s
            continue
        labelings = list(itertools.product(md.labels, repeat=len(comps)))
        if threads > 1 and len(labelings) >= _PARALLEL_MIN:
            size = -(-len(labelings) // (threads * 4))
            chunks = [labelings[i:i + size] for i in range(0, len(labelings), size)]
            payload = sub.to_json()
            with ProcessPoolExecutor(max_workers=threads) as pool:
                jobs = [(payload, fr, ch, md.l, md.order, md.exponent) for ch in chunks]
                s = ctx.zero
                for part in pool.map(_worker, jobs):
                    s = s + part
        else:
            s = _part_sum(sub, fr, labelings, md)
        result = result * s
        if not result:
            break
    return result


def rt_invariant(p: SurgeryPresentation, md: ModularData, threads: int | None = None,
                 max_cost: int | None = DEFAULT_MAX_COST) -> RTResult:
    """Biframed and framing-corrected invariants of the surgered manifold."""
    c = p.component_count
    est = estimate_cost(p, md.l)
    if c > MAX_COMPONENTS_LARGE_L and md.l > 6:
        raise CostExceeded(
            f"{c} components at l={md.l} is refused (limit {MAX_COMPONENTS_LARGE_L} for l>6); "
            f"estimated cost {est}", est)
    if max_cost is not None and est > max_cost:
        raise CostExceeded(f"estimated cost {est} exceeds the limit {max_cost}", est)
    if threads is None:
        threads = int(os.environ.get("SKEINRT_THREADS", "1") or 1)
    sigma = p.signature()
    total = coloring_sum(p, md, max(1, threads))
    biframed = md.K ** (-1 - c) * total
    corrected = md.C ** sigma * biframed
    return RTResult(biframed, corrected, sigma, c, md.l, md.order, md.exponent)


def s3_value(md: ModularData) -> SqrtExt:
    """Z(S^3) = K^-1."""
    return md.K.inverse()
