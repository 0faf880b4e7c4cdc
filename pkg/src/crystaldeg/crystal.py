"""Type A crystal operators on semi-standard tableaux.

The operators for color ``i`` act on the letters ``i`` and ``i+1`` of the
reading word.  ``e_op`` turns one ``i+1`` into ``i``, located as the
rightmost position where the suffix statistic

    #(i+1) - #i  in  w_r w_{r+1} ... w_end

reaches its maximum; nothing happens when that maximum is not positive.
``f_op`` is its inverse, read off the mirror-image prefix statistic.

Written literally with the suffix count "#i - #(i-1)", color 1 would act on
the letters 0 and 1.  Shifting the letters by one is the only reading under
which the color-1 edges of the crystal on shape (2,2), n=4, change 1s into
2s, which is what that graph shows.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InvariantViolation, ShapeError, TableauError
from .graphs import ColoredDigraph
from .tableaux import (
    Partition,
    Tableau,
    WeightVector,
    Word,
    content,
    enumerate_ssyt,
    reading_word,
    tableau_from_word,
)


def suffix_stat(w: Sequence[int], color: int, r: int) -> int:
    """``#(color+1) - #color`` among ``w[r-1:]`` (``r`` is 1-indexed)."""
    if not 1 <= r <= len(w) + 1:
        raise ValueError(f"position r={r} outside 1..{len(w) + 1}")
    if color < 1:
        raise ValueError(f"color must be positive, got {color}")
    tail = w[r - 1:]
    return sum(1 for x in tail if x == color + 1) - sum(1 for x in tail if x == color)


def raise_position(w: Sequence[int], color: int) -> Optional[int]:
    """0-based position changed by e_op on the word, or None."""
    best, pos, s = 0, None, 0
    for p in range(len(w) - 1, -1, -1):
        x = w[p]
        if x == color + 1:
            s += 1
        elif x == color:
            s -= 1
        else:
            continue
        if s > best:
            best, pos = s, p
    return pos


def lower_position(w: Sequence[int], color: int) -> Optional[int]:
    """0-based position changed by f_op on the word, or None."""
    best, pos, s = 0, None, 0
    for p, x in enumerate(w):
        if x == color:
            s += 1
        elif x == color + 1:
            s -= 1
        else:
            continue
        if s > best:
            best, pos = s, p
    return pos


def e_word(w: Word, color: int) -> Optional[Word]:
    p = raise_position(w, color)
    if p is None:
        return None
    if w[p] != color + 1:
        raise InvariantViolation(f"e_{color}: position {p} of {w} carries {w[p]}, expected {color + 1}")
    return w[:p] + (color,) + w[p + 1:]


def f_word(w: Word, color: int) -> Optional[Word]:
    p = lower_position(w, color)
    if p is None:
        return None
    if w[p] != color:
        raise InvariantViolation(f"f_{color}: position {p} of {w} carries {w[p]}, expected {color}")
    return w[:p] + (color + 1,) + w[p + 1:]


def _check_args(t: Tableau, color: int, n: int):
    if not 1 <= color <= n - 1:
        raise ValueError(f"color {color} outside 1..{n - 1}")
    if t.max_entry() > n:
        raise TableauError(f"entry {t.max_entry()} exceeds alphabet bound n={n}")
    if not t.is_semistandard():
        raise TableauError("tableau is not semi-standard", t.semistandard_violation())


def _rebuild(shape: Partition, w: Word, op: str) -> Tableau:
    try:
        return tableau_from_word(shape, w)
    except TableauError as exc:
        raise InvariantViolation(f"{op} produced a non-semi-standard filling: {exc}") from exc


def e_op(t: Tableau, color: int, n: int) -> Optional[Tableau]:
    _check_args(t, color, n)
    w = e_word(reading_word(t), color)
    return None if w is None else _rebuild(t.shape, w, f"e_{color}")


def f_op(t: Tableau, color: int, n: int) -> Optional[Tableau]:
    _check_args(t, color, n)
    w = f_word(reading_word(t), color)
    return None if w is None else _rebuild(t.shape, w, f"f_{color}")


class CrystalGraph(ColoredDigraph):
    """The crystal graph on SSYT(shape) with entries at most ``degree``.

    ``vertices`` is the lexicographic list from :func:`enumerate_ssyt`; an
    ``i``-edge runs from ``T`` to ``f_op(T, i)``.
    """

    def __init__(self, shape: Partition, degree: int, vertices, edges):
        super().__init__(len(vertices), degree, edges, labels=vertices)
        self.shape = shape
        self.vertices: tuple[Tableau, ...] = self.labels
        self.index = {t: k for k, t in enumerate(self.vertices)}

    @property
    def dimension(self) -> int:
        """Number of cells in each vertex tableau."""
        return self.shape.size()

    def vertex(self, t: Tableau) -> int:
        return self.index[t]


def build_crystal(shape: Partition, n: int) -> CrystalGraph:
    if n < 1:
        raise ShapeError(f"alphabet bound must be positive, got {n}")
    vertices = enumerate_ssyt(shape, n)
    by_word = {reading_word(t): k for k, t in enumerate(vertices)}
    edges = []
    for k, t in enumerate(vertices):
        w = reading_word(t)
        for color in range(1, n):
            image = f_word(w, color)
            if image is None:
                continue
            target = by_word.get(image)
            if target is None:
                raise InvariantViolation(f"f_{color}({t}) left the set of semi-standard tableaux")
            edges.append((k, target, color))
    return CrystalGraph(shape, n, vertices, edges)


@dataclass(frozen=True)
class StringStats:
    epsilon: int
    delta: int


def string_stats(g: ColoredDigraph, x: int, color: int) -> StringStats:
    """Position of ``x`` on its ``color``-string.

    Walks are capped at the vertex count so a monochromatic cycle cannot
    loop forever; the numbers are only meaningful once P1 and P2 hold.
    """
    forward = 0
    y = g.f(x, color)
    while y is not None and forward < g.size:
        forward += 1
        y = g.f(y, color)
    backward = 0
    y = g.e(x, color)
    while y is not None and backward < g.size:
        backward += 1
        y = g.e(y, color)
    return StringStats(forward, -backward)


def string_table(g: ColoredDigraph) -> tuple[dict[int, list[int]], dict[int, list[int]]]:
    """``(eps, delta)`` with ``eps[i][x] = epsilon(x, i)`` for every vertex and color.

    Each string is walked once, so this is linear in the graph size.
    Assumes P1 and P2.
    """
    eps = {i: [0] * g.size for i in g.colors}
    dlt = {i: [0] * g.size for i in g.colors}
    for i in g.colors:
        for start in range(g.size):
            if g.e(start, i) is not None:
                continue
            path = [start]
            y = g.f(start, i)
            while y is not None and len(path) <= g.size:
                path.append(y)
                y = g.f(y, i)
            last = len(path) - 1
            for pos, v in enumerate(path):
                eps[i][v] = last - pos
                dlt[i][v] = -pos
    return eps, dlt


def character(g: CrystalGraph) -> dict[WeightVector, int]:
    """Multiplicity of every content vector among the vertices, sorted by weight."""
    counts = Counter(content(t, g.degree) for t in g.vertices)
    return dict(sorted(counts.items(), reverse=True))


def highest_weights(g: ColoredDigraph) -> list[int]:
    return [x for x in range(g.size) if all(g.e(x, i) is None for i in g.colors)]
