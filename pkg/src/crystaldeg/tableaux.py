"""Partitions, Young tableaux, reading words and exhaustive enumeration.

Tableaux use French orientation: ``rows[0]`` is the bottom (longest) row,
rows weakly increase left to right and columns strictly increase from the
bottom up.  The reading word lists the rows from the top row down to the
bottom row, each row left to right.  With this convention the crystal
operators in :mod:`crystaldeg.crystal` reproduce the edges of the crystal
graph on shape (2,2) with entries at most 4 exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterator, Sequence

from .errors import ShapeError, TableauError

Word = tuple[int, ...]
WeightVector = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ShapeError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ShapeError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    def size(self) -> int:
        return sum(self.parts)

    def length(self) -> int:
        return len(self.parts)

    def conjugate(self) -> Partition:
        return conjugate(self)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return ",".join(map(str, self.parts))


def parse_shape(text: str) -> Partition:
    """Parse a comma-separated part list such as ``"3,2,1"``.

    An empty string gives the empty partition.
    """
    text = text.strip()
    if not text:
        return Partition(())
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ShapeError(f"not a comma-separated list of integers: {text!r}") from None
    return Partition(parts)


def _partitions(m: int, largest: int) -> Iterator[tuple[int, ...]]:
    if m == 0:
        yield ()
        return
    for first in range(min(m, largest), 0, -1):
        for rest in _partitions(m - first, first):
            yield (first,) + rest


def partitions_of(m: int) -> list[Partition]:
    """All partitions of ``m`` in reverse-lexicographic order."""
    if m < 0:
        raise ShapeError(f"cannot partition a negative number: {m}")
    return [Partition(p) for p in _partitions(m, m)]


def conjugate(p: Partition) -> Partition:
    if not p.parts:
        return Partition(())
    return Partition(tuple(sum(1 for part in p.parts if part > c) for c in range(p.parts[0])))


def hook_length_count(p: Partition) -> int:
    """Number of standard tableaux of shape ``p`` by the hook length formula."""
    conj = conjugate(p).parts
    denom = 1
    for r, part in enumerate(p.parts):
        for c in range(part):
            denom *= (part - c - 1) + (conj[c] - r - 1) + 1
    return factorial(p.size()) // denom


@dataclass(frozen=True, order=True)
class Tableau:
    """A filling of a Young diagram, bottom row first."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        lengths = [len(r) for r in rows]
        if any(n == 0 for n in lengths) or any(a < b for a, b in zip(lengths, lengths[1:])):
            raise TableauError(f"row lengths {lengths} do not form a partition")
        for r, row in enumerate(rows):
            for c, x in enumerate(row):
                if x < 1:
                    raise TableauError(f"entry {x} at {(r, c)} is not positive", (r, c))

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def max_entry(self) -> int:
        return max((x for row in self.rows for x in row), default=0)

    def semistandard_violation(self):
        """First cell breaking row or column monotonicity, or ``None``."""
        rows = self.rows
        for r, row in enumerate(rows):
            for c, x in enumerate(row):
                if c and row[c - 1] > x:
                    return (r, c)
                if r and rows[r - 1][c] >= x:
                    return (r, c)
        return None

    def is_semistandard(self) -> bool:
        return self.semistandard_violation() is None

    def is_standard(self) -> bool:
        entries = sorted(x for row in self.rows for x in row)
        return entries == list(range(1, len(entries) + 1)) and self.is_semistandard()

    def transpose(self) -> Tableau:
        if not self.rows:
            return self
        return Tableau(tuple(
            tuple(row[c] for row in self.rows if len(row) > c)
            for c in range(len(self.rows[0]))
        ))

    def __str__(self):
        return "/".join(",".join(map(str, row)) for row in reversed(self.rows))


EMPTY_TABLEAU = Tableau(())


def _column_heights(shape: Partition) -> list[int]:
    return list(conjugate(shape).parts)


def enumerate_ssyt(shape: Partition, n: int) -> list[Tableau]:
    """Every semi-standard tableau of ``shape`` with entries in ``1..n``.

    Output is sorted lexicographically on the concatenated rows, bottom row
    first.
    """
    if shape.length() > n:
        raise ShapeError(f"shape too tall for alphabet: {shape.length()} rows > n={n}")
    return [Tableau(rows) for rows in _ssyt_rows(shape, n)]


def _ssyt_rows(shape: Partition, n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    parts = shape.parts
    heights = _column_heights(shape)
    cells = [(r, c) for r, part in enumerate(parts) for c in range(part)]
    grid = [[0] * part for part in parts]

    def fill(k):
        if k == len(cells):
            yield tuple(tuple(row) for row in grid)
            return
        r, c = cells[k]
        lo = r + 1
        if c:
            lo = max(lo, grid[r][c - 1])
        if r:
            lo = max(lo, grid[r - 1][c] + 1)
        # leave room for the cells stacked above in this column
        hi = n - (heights[c] - 1 - r)
        for x in range(lo, hi + 1):
            grid[r][c] = x
            yield from fill(k + 1)

    yield from fill(0)


def enumerate_syt(shape: Partition) -> list[Tableau]:
    """Every standard tableau of ``shape``, in the same order as enumerate_ssyt."""
    return list(_syt(shape))


@lru_cache(maxsize=None)
def _syt(shape: Partition) -> tuple[Tableau, ...]:
    m = shape.size()
    if m == 0:
        return (EMPTY_TABLEAU,)
    parts = shape.parts
    found = []
    # the largest entry sits in a removable corner
    for r, part in enumerate(parts):
        if r + 1 < len(parts) and parts[r + 1] == part:
            continue
        smaller = list(parts)
        smaller[r] -= 1
        sub = Partition(tuple(p for p in smaller if p))
        for t in _syt(sub):
            rows = [list(row) for row in t.rows]
            if r == len(rows):
                rows.append([m])
            else:
                rows[r].append(m)
            found.append(tuple(tuple(row) for row in rows))
    return tuple(Tableau(rows) for rows in sorted(found, key=_flat))


def _flat(rows):
    return tuple(x for row in rows for x in row)


def reading_word(t: Tableau) -> Word:
    return tuple(x for row in reversed(t.rows) for x in row)


def reading_positions(shape: Partition) -> list[tuple[int, int]]:
    """Cells ``(row, column)`` in reading-word order."""
    return [(r, c) for r in range(shape.length() - 1, -1, -1) for c in range(shape.parts[r])]


def content(t: Tableau, n: int) -> WeightVector:
    counts = [0] * n
    for row in t.rows:
        for x in row:
            if x > n:
                raise TableauError(f"entry {x} exceeds alphabet bound n={n}")
            counts[x - 1] += 1
    return tuple(counts)


def tableau_from_word(shape: Partition, w: Sequence[int]) -> Tableau:
    """Inverse of :func:`reading_word`; the result must be semi-standard."""
    if len(w) != shape.size():
        raise TableauError(f"word of length {len(w)} does not fit shape of size {shape.size()}")
    rows = [None] * shape.length()
    pos = 0
    for r in range(shape.length() - 1, -1, -1):
        rows[r] = tuple(w[pos:pos + shape.parts[r]])
        pos += shape.parts[r]
    t = Tableau(tuple(rows))
    bad = t.semistandard_violation()
    if bad is not None:
        raise TableauError(f"filling is not semi-standard at cell {bad}", bad)
    return t
