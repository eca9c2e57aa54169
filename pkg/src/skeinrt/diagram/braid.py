"""Braid words and their text form ``braid <n> : s1 s2' ...``."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import DiagramParseError

__all__ = ["BraidWord", "parse_braid"]


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        for i, sign in self.letters:
            if not 1 <= i < self.strands:
                raise ValueError(f"generator s{i} out of range for {self.strands} strands")
            if sign not in (1, -1):
                raise ValueError("letter signs must be +1 or -1")

    def __str__(self):
        body = " ".join(f"s{i}" + ("'" if sg < 0 else "") for i, sg in self.letters)
        return f"braid {self.strands} :" + (f" {body}" if body else "")

    def __len__(self):
        return len(self.letters)

    def permutation(self) -> list[int]:
        """perm[p] = final position of the strand starting at position p."""
        pos = list(range(self.strands))  # pos[k] = strand currently at position k
        for i, _ in self.letters:
            pos[i - 1], pos[i] = pos[i], pos[i - 1]
        perm = [0] * self.strands
        for k, strand in enumerate(pos):
            perm[strand] = k
        return perm

    def cycle_count(self) -> int:
        perm = self.permutation()
        seen = [False] * self.strands
        count = 0
        for p in range(self.strands):
            if not seen[p]:
                count += 1
                while not seen[p]:
                    seen[p] = True
                    p = perm[p]
        return count

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple((i, -s) for i, s in reversed(self.letters)))

    def mirror(self) -> "BraidWord":
        return BraidWord(self.strands, tuple((i, -s) for i, s in self.letters))

    def to_json(self) -> dict:
        return {"strands": self.strands, "letters": [list(x) for x in self.letters]}

    @classmethod
    def from_json(cls, data: dict) -> "BraidWord":
        return cls(int(data["strands"]), tuple((int(i), int(s)) for i, s in data["letters"]))


_HEAD = re.compile(r"\s*braid\s+(\d+)\s*:")
_LETTER = re.compile(r"s(\d+)('?)")


def parse_braid(text: str) -> BraidWord:
    m = _HEAD.match(text)
    if not m:
        raise DiagramParseError("expected 'braid <n> :'", 0)
    n = int(m.group(1))
    if n < 1:
        raise DiagramParseError("strand count must be positive", m.start(1))
    letters = []
    pos = m.end()
    for tok in re.finditer(r"\S+", text[pos:]):
        start = pos + tok.start()
        lm = _LETTER.fullmatch(tok.group(0))
        if not lm:
            raise DiagramParseError(f"malformed token {tok.group(0)!r}", start)
        i = int(lm.group(1))
        if not 1 <= i < n:
            raise DiagramParseError(f"generator s{i} out of range for {n} strands", start)
        letters.append((i, -1 if lm.group(2) else 1))
    return BraidWord(n, tuple(letters))
