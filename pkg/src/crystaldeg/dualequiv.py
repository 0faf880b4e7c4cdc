"""Elementary dual equivalences and the standard dual equivalence graphs.

For a permutation word and ``i >= 2``, look at the positions of the values
``i-1, i, i+1``.  If the value sitting in the middle position is ``i`` the
word is left alone; otherwise the values in the outer two positions are
exchanged.  The graph on SYT(shape) joins ``T`` and ``U`` by an ``i``-edge
when their reading words differ by that move.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Optional, Sequence

from .errors import InvariantViolation, TableauError
from .graphs import Signature, SignedColoredGraph, signature_string
from .tableaux import Partition, Tableau, Word, enumerate_syt, reading_word, tableau_from_word

__all__ = [
    "SignedColoredGraph", "signature_of", "ede", "d_op", "build_deg",
    "negate_signatures", "conjugate_graph", "signature_string",
]


def _word_signature(w: Sequence[int]) -> Signature:
    where = {x: p for p, x in enumerate(w)}
    return tuple(1 if where[i] < where[i + 1] else -1 for i in range(1, len(w)))


def signature_of(t: Tableau) -> Signature:
    """+1 at ``i`` when ``i`` is read before ``i+1``, else -1."""
    if not t.is_standard():
        raise TableauError("signature is only defined for standard tableaux")
    return _word_signature(reading_word(t))


def ede(w: Sequence[int], i: int) -> Word:
    w = tuple(w)
    try:
        spots = sorted(w.index(v) for v in (i - 1, i, i + 1))
    except ValueError:
        raise ValueError(f"word {w} does not contain all of {i - 1}, {i}, {i + 1}") from None
    first, middle, last = spots
    if w[middle] == i:
        return w
    out = list(w)
    out[first], out[last] = w[last], w[first]
    return tuple(out)


def d_op(t: Tableau, i: int) -> Optional[Tableau]:
    """The ``i``-neighbour of a standard tableau, or ``None``."""
    m = t.size()
    if not 2 <= i <= m - 1:
        raise ValueError(f"color {i} outside 2..{m - 1}")
    if not t.is_standard():
        raise TableauError("d_op needs a standard tableau")
    w = reading_word(t)
    moved = ede(w, i)
    if moved == w:
        return None
    try:
        return tableau_from_word(t.shape, moved)
    except TableauError as exc:
        raise InvariantViolation(f"dual equivalence move left SYT({t.shape}): {exc}") from exc


def build_deg(shape: Partition) -> SignedColoredGraph:
    """The standard dual equivalence graph on SYT(shape)."""
    return _build_deg(shape)


@lru_cache(maxsize=None)
def _build_deg(shape: Partition) -> SignedColoredGraph:
    m = shape.size()
    vertices = enumerate_syt(shape)
    by_word = {reading_word(t): k for k, t in enumerate(vertices)}
    edges = []
    for k, t in enumerate(vertices):
        w = reading_word(t)
        for i in range(2, m):
            moved = ede(w, i)
            if moved == w:
                continue
            other = by_word.get(moved)
            if other is None:
                raise InvariantViolation(f"dual equivalence move left SYT({shape}) at {t}")
            if k < other:
                edges.append((k, other, i))
    signatures = [_word_signature(reading_word(t)) for t in vertices]
    return SignedColoredGraph(max(m, 1), signatures, edges, labels=vertices)


def negate_signatures(g: SignedColoredGraph) -> SignedColoredGraph:
    return SignedColoredGraph(g.degree, [tuple(-x for x in s) for s in g.signatures], g.edges(), g.labels)


def conjugate_graph(g: SignedColoredGraph) -> SignedColoredGraph:
    """Transpose every tableau label and negate every signature."""
    if g.labels is None:
        raise ValueError("conjugate_graph needs tableau labels")
    return SignedColoredGraph(g.degree, [tuple(-x for x in s) for s in g.signatures], g.edges(),
                              [t.transpose() for t in g.labels])
