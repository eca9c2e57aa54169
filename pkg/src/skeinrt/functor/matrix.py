"""Sparse matrices over an exact ring (Laurent polynomials or cyclotomics)."""

from __future__ import annotations

import json
from typing import Callable, Iterable, Mapping

from ..coeff import Cyclotomic, Laurent, canonical_string, parse_laurent

__all__ = ["SparseMatrix", "mixed_index", "mixed_digits"]


def mixed_index(digits: Iterable[int], dims: Iterable[int]) -> int:
    """Leftmost digit most significant."""
    idx = 0
    for d, n in zip(digits, dims):
        idx = idx * n + d
    return idx


def mixed_digits(index: int, dims: list[int] | tuple[int, ...]) -> tuple[int, ...]:
    out = []
    for n in reversed(dims):
        index, r = divmod(index, n)
        out.append(r)
    return tuple(reversed(out))


class SparseMatrix:
    """rows x cols matrix; ``entries`` maps (r, c) to a nonzero scalar."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Mapping[tuple[int, int], object] | None = None):
        self.rows = int(rows)
        self.cols = int(cols)
        clean = {}
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise IndexError(f"entry ({r},{c}) outside {self.rows}x{self.cols}")
            if v:
                clean[(r, c)] = v
        self.entries = clean

    @classmethod
    def identity(cls, n: int, one) -> "SparseMatrix":
        return cls(n, n, {(i, i): one for i in range(n)})

    @classmethod
    def from_rows(cls, rows: list[list]) -> "SparseMatrix":
        ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols,
                   {(r, c): v for r, row in enumerate(rows) for c, v in enumerate(row)})

    # access ---------------------------------------------------------------
    def __getitem__(self, rc):
        return self.entries.get(rc, 0)

    def get(self, r: int, c: int, default=0):
        return self.entries.get((r, c), default)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def scalar(self):
        if self.shape != (1, 1):
            raise ValueError(f"not a scalar: {self.rows}x{self.cols}")
        return self.entries.get((0, 0), 0)

    def to_dense(self, zero=0) -> list[list]:
        out = [[zero] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def columns(self) -> dict[int, dict[int, object]]:
        cols: dict[int, dict[int, object]] = {}
        for (r, c), v in self.entries.items():
            cols.setdefault(c, {})[r] = v
        return cols

    # algebra --------------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self.entries.items())))

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out[k] + v if k in out else v
        return SparseMatrix(self.rows, self.cols, out)

    def __neg__(self):
        return SparseMatrix(self.rows, self.cols, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s) -> "SparseMatrix":
        return SparseMatrix(self.rows, self.cols, {k: v * s for k, v in self.entries.items()})

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot compose {self.rows}x{self.cols} with {other.rows}x{other.cols}")
        by_row: dict[int, list[tuple[int, object]]] = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        out: dict[tuple[int, int], object] = {}
        for (r, k), a in self.entries.items():
            for c, b in by_row.get(k, ()):
                key = (r, c)
                p = a * b
                out[key] = out[key] + p if key in out else p
        return SparseMatrix(self.rows, other.cols, out)

    def kron(self, other: "SparseMatrix") -> "SparseMatrix":
        out = {}
        for (r1, c1), a in self.entries.items():
            for (r2, c2), b in other.entries.items():
                out[(r1 * other.rows + r2, c1 * other.cols + c2)] = a * b
        return SparseMatrix(self.rows * other.rows, self.cols * other.cols, out)

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()})

    def map(self, f: Callable) -> "SparseMatrix":
        return SparseMatrix(self.rows, self.cols, {k: f(v) for k, v in self.entries.items()})

    def trace(self):
        if not self.is_square():
            raise ValueError("trace of a non-square matrix")
        total = 0
        for (r, c), v in self.entries.items():
            if r == c:
                total = v + total if total != 0 else v
        return total

    # text / json ----------------------------------------------------------
    def __repr__(self):
        return f"SparseMatrix({self.rows}x{self.cols}, {len(self.entries)} nonzero)"

    def to_json(self) -> dict:
        entries = []
        for (r, c), v in sorted(self.entries.items()):
            if isinstance(v, Laurent):
                entries.append([r, c, canonical_string(v)])
            elif isinstance(v, Cyclotomic):
                entries.append([r, c, v.to_json()])
            else:
                entries.append([r, c, str(v)])
        data = {"rows": self.rows, "cols": self.cols, "entries": entries}
        var = next((v.var for v in self.entries.values() if isinstance(v, Laurent)), None)
        if var:
            data["var"] = var
        return data

    @classmethod
    def from_json(cls, data: dict | str) -> "SparseMatrix":
        if isinstance(data, str):
            data = json.loads(data)
        var = data.get("var", "A")
        out = {}
        for r, c, v in data["entries"]:
            if isinstance(v, dict):
                out[(r, c)] = Cyclotomic.from_json(v)
            else:
                out[(r, c)] = parse_laurent(v, var)
        return cls(data["rows"], data["cols"], out)
