"""Kirby-move invariance checks on a curated corpus of surgery presentations.

Each corpus file holds two surgery presentations of the same manifold separated
by a line ``---``; the leading comment names the move and how the right-hand
side was obtained.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources

from ..diagram.surgery import SurgeryPresentation, parse_surgery
from ..qgroup.modular import ModularData
from .invariant import rt_invariant

__all__ = ["KirbyPair", "KirbyReport", "load_corpus", "kirby_invariance_suite",
           "s3_presentations"]


@dataclass(frozen=True)
class KirbyPair:
    name: str
    move: str
    before: SurgeryPresentation
    after: SurgeryPresentation
    notes: str = ""


@dataclass
class KirbyReport:
    checks: list[tuple[str, str, bool]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for _, _, ok in self.checks)

    def failures(self) -> list[tuple[str, str]]:
        return [(kind, name) for kind, name, ok in self.checks if not ok]

    def count(self, kind: str) -> int:
        return sum(1 for k, _, _ in self.checks if k == kind)

    def to_json(self) -> dict:
        return {"passed": self.passed,
                "checks": [{"kind": k, "name": n, "passed": ok} for k, n, ok in self.checks]}

    def __str__(self):
        return "\n".join(f"{kind} {name}: {'pass' if ok else 'FAIL'}" for kind, name, ok in self.checks)


def parse_pair(text: str, name: str = "") -> KirbyPair:
    blocks = text.split("\n---")
    if len(blocks) != 2:
        raise ValueError(f"corpus entry {name!r} needs exactly two presentations")
    notes = "\n".join(ln[1:].strip() for ln in blocks[0].splitlines() if ln.startswith("#"))
    move = ""
    for ln in notes.splitlines():
        if ln.lower().startswith("move:"):
            move = ln.split(":", 1)[1].strip()
    before = parse_surgery(blocks[0], f"{name}/before")
    after = parse_surgery(blocks[1].lstrip("-\n"), f"{name}/after")
    return KirbyPair(name, move, before, after, notes)


def load_corpus() -> list[KirbyPair]:
    root = resources.files(__package__).joinpath("data", "kirby")
    pairs = []
    for entry in sorted(root.iterdir(), key=lambda p: p.name):
        if entry.name.endswith(".txt"):
            pairs.append(parse_pair(entry.read_text(), entry.name[:-4]))
    return pairs


def s3_presentations() -> list[SurgeryPresentation]:
    """Three presentations of S^3: empty, a +1 unknot, a split +1/-1 pair."""
    return [parse_surgery("framings: []", "empty"),
            parse_surgery("O\nframings: [1]", "+1 unknot"),
            parse_surgery("O O\nframings: [1, -1]", "+1/-1 pair")]


def kirby_invariance_suite(md: ModularData, corpus: list[KirbyPair] | None = None,
                           threads: int | None = None) -> KirbyReport:
    """Exact invariance under stabilization, the corpus moves and S^3 presentations."""
    corpus = load_corpus() if corpus is None else corpus
    report = KirbyReport()
    cache: dict = {}

    def z(p: SurgeryPresentation):
        key = p.to_text()
        if key not in cache:
            cache[key] = rt_invariant(p, md, threads=threads, max_cost=None)
        return cache[key]

    s3 = [z(p).corrected for p in s3_presentations()]
    k_inv = md.K.inverse()
    report.checks.append(("s3", "three presentations", all(v == k_inv for v in s3)))
    seen = set()
    for pair in corpus:
        zb, za = z(pair.before), z(pair.after)
        report.checks.append(("move", pair.name, zb.corrected == za.corrected))
        if zb.signature == za.signature:
            report.checks.append(("biframed", pair.name, zb.biframed == za.biframed))
        for p in (pair.before, pair.after):
            key = p.to_text()
            if key in seen:
                continue
            seen.add(key)
            base = z(p).corrected
            for sign in (1, -1):
                stab = z(p.stabilize(sign))
                ok = stab.corrected == base and stab.signature == z(p).signature + sign
                report.checks.append(("stabilize", f"{p.name}{'+' if sign > 0 else '-'}", ok))
    return report
