"""Local axioms ax1-ax5 for dual equivalence graphs.

Signatures are 1-indexed in the axioms: ``sigma(v)_h`` is
``g.signatures[v][h - 1]``.  Entries outside ``1..degree-1`` do not exist
and any condition mentioning them is vacuous.

Axiom 4 compares the non-trivial components of each three-consecutive-color
restriction against three fixed edge-colored shapes.  The shapes carry no
signatures, so only edge-colored structure is compared.  At degree 4 the
two-color rule replaces axiom 4 entirely.
"""

from __future__ import annotations

from typing import Optional

from .graphs import SignedColoredGraph
from .isomorphism import Structure, find_isomorphism, make_structure, structure_of
from .reports import AxiomReport, Witness


def _sig(g: SignedColoredGraph, v: int, h: int) -> Optional[int]:
    if 1 <= h <= g.degree - 1:
        return g.signatures[v][h - 1]
    return None


def check_ax1(g: SignedColoredGraph) -> AxiomReport:
    witnesses = []
    for v in range(g.size):
        for i in g.colors:
            wants_edge = _sig(g, v, i - 1) == -_sig(g, v, i)
            partners = g.adj[i][v]
            if wants_edge and not partners:
                witnesses.append(Witness(v, i, None, 0, "one i-neighbour (sigma_{i-1} = -sigma_i)"))
            elif not wants_edge and partners:
                witnesses.append(Witness(v, i, None, len(partners), "no i-neighbour (sigma_{i-1} = sigma_i)"))
            elif len(partners) > 1:
                witnesses.append(Witness(v, i, None, len(partners), "unique i-neighbour"))
    return AxiomReport("ax1", tuple(witnesses))


def check_ax2(g: SignedColoredGraph) -> AxiomReport:
    witnesses = []
    m = g.degree
    for v, w, i in g.edges():
        for h in range(1, m):
            a, b = _sig(g, v, h), _sig(g, w, h)
            if h in (i - 1, i) and a != -b:
                witnesses.append(Witness(v, i, h, [a, b, w], f"sigma_{h} flips across the edge"))
            elif (h < i - 2 or h > i + 1) and a != b:
                witnesses.append(Witness(v, i, h, [a, b, w], f"sigma_{h} preserved across the edge"))
    return AxiomReport("ax2", tuple(witnesses))


def check_ax3(g: SignedColoredGraph) -> AxiomReport:
    witnesses = []
    for v, w, i in g.edges():
        for x, y in ((v, w), (w, v)):
            lo_x, lo_y = _sig(g, x, i - 2), _sig(g, y, i - 2)
            if lo_x is not None and lo_x == -lo_y and lo_x != -_sig(g, x, i - 1):
                witnesses.append(Witness(x, i, i - 2, [lo_x, _sig(g, x, i - 1), y],
                                         "sigma_{i-2} changes => sigma_{i-2} = -sigma_{i-1}"))
            hi_x, hi_y = _sig(g, x, i + 1), _sig(g, y, i + 1)
            if hi_x is not None and hi_x == -hi_y and hi_x != -_sig(g, x, i):
                witnesses.append(Witness(x, i, i + 1, [hi_x, _sig(g, x, i), y],
                                         "sigma_{i+1} changes => sigma_{i+1} = -sigma_i"))
    return AxiomReport("ax3", tuple(witnesses))


def _templates(c: int) -> dict[str, Structure]:
    """The allowed three-color components, colors ``c, c+1, c+2`` (c = i-2)."""
    return {
        "path4": make_structure(4, [(0, 1, c), (1, 2, c + 1), (2, 3, c + 2)], colors=(c, c + 1, c + 2)),
        "chain5": make_structure(5, [(0, 1, c + 1), (0, 1, c + 2), (1, 2, c), (2, 3, c + 2),
                                     (3, 4, c), (3, 4, c + 1)], colors=(c, c + 1, c + 2)),
        # u=0 v=1 w=2 x=3 y=4 z=5
        "hex6": make_structure(6, [(0, 1, c + 1), (1, 2, c + 2), (1, 3, c), (2, 4, c),
                                   (3, 4, c + 2), (4, 5, c + 1)], colors=(c, c + 1, c + 2)),
    }


def _degree4_templates(i: int) -> dict[str, Structure]:
    return {
        "path3": make_structure(3, [(0, 1, i - 1), (1, 2, i)], colors=(i - 1, i)),
        "double2": make_structure(2, [(0, 1, i - 1), (0, 1, i)], colors=(i - 1, i)),
    }


def _match_components(g, colors, templates, axiom_i, witnesses):
    for comp in g.restricted(colors):
        if len(comp) < 2:
            continue
        local = structure_of(g, comp, colors, signed=False)
        matched = [name for name, t in templates.items() if find_isomorphism(local, t) is not None]
        if len(matched) != 1:
            witnesses.append(Witness(comp[0], axiom_i, None, comp,
                                     "component is one of " + ", ".join(templates)))


def _short_paths(g: SignedColoredGraph, i: int, witnesses):
    """Every pair in a 2..i component joined by a path with <= 1 color-i edge."""
    below = g.restricted(range(2, i))
    piece = [0] * g.size
    for k, comp in enumerate(below):
        for v in comp:
            piece[v] = k
    links = {(piece[u], piece[v]) for u in range(g.size) for v in g.adj[i][u]}
    for comp in g.restricted(range(2, i + 1)):
        pieces = sorted({piece[v] for v in comp})
        for a in pieces:
            for b in pieces:
                if a < b and (a, b) not in links:
                    witnesses.append(Witness(below[a][0], i, None, below[b][0],
                                             "path with at most one i-edge"))


def check_ax4(g: SignedColoredGraph) -> AxiomReport:
    m = g.degree
    witnesses: list[Witness] = []
    if m == 4:
        _match_components(g, (2, 3), _degree4_templates(3), 3, witnesses)
    elif m >= 5:
        for i in range(4, m):
            _match_components(g, (i - 2, i - 1, i), _templates(i - 2), i, witnesses)
        for i in range(3, m):
            _short_paths(g, i, witnesses)
    return AxiomReport("ax4", tuple(witnesses))


def check_ax5(g: SignedColoredGraph) -> AxiomReport:
    witnesses = []
    colors = list(g.colors)
    for v in range(g.size):
        for i in colors:
            for j in colors:
                if j - i < 3:
                    continue
                di, dj = g.partner(v, i), g.partner(v, j)
                if di is None or dj is None:
                    continue
                a = g.partner(dj, i)
                b = g.partner(di, j)
                if a is None or a != b:
                    witnesses.append(Witness(v, i, j, [a, b], "D_iD_j v = D_jD_i v (defined)"))
    return AxiomReport("ax5", tuple(witnesses))


def check_deg(g: SignedColoredGraph) -> list[AxiomReport]:
    return [check_ax1(g), check_ax2(g), check_ax3(g), check_ax4(g), check_ax5(g)]
