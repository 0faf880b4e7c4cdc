"""Stembridge's local axioms P1-P6 for simply-laced (type A) crystals.

Every check takes a :class:`~crystaldeg.graphs.ColoredDigraph` and returns
an :class:`~crystaldeg.reports.AxiomReport`.  P3-P6 are phrased through
string positions, which only make sense once P1 and P2 hold; calling them
on a graph that fails either raises :class:`PrerequisiteError`.

P5 and P6 are applied, as in Stembridge's formulation, at vertices where
both operators of the pair are defined: the E-implications need ``E_i x``
and ``E_j x``, the F-implications ``F_i x`` and ``F_j x``.
"""

from __future__ import annotations

from typing import Optional

from .crystal import string_table
from .errors import PrerequisiteError
from .graphs import ColoredDigraph
from .reports import AxiomReport, Witness

__all__ = [
    "ColoredDigraph",
    "check_p1", "check_p2", "check_p3", "check_p4", "check_p5", "check_p6",
    "check_regular",
]


def _cyclic_components(g: ColoredDigraph, color: int) -> list[list[int]]:
    """Strongly connected pieces of one color class that contain a cycle."""
    succ = g.succ[color]
    index = [-1] * g.size
    low = [0] * g.size
    on_stack = [False] * g.size
    stack: list[int] = []
    counter = 0
    found = []
    for root in range(g.size):
        if index[root] >= 0:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, k = work[-1]
            if k < len(succ[v]):
                work[-1] = (v, k + 1)
                w = succ[v][k]
                if index[w] < 0:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                if len(comp) > 1 or v in succ[v]:
                    found.append(sorted(comp))
    return found


def check_p1(g: ColoredDigraph) -> AxiomReport:
    """No monochromatic directed cycle (finite paths on a finite graph)."""
    witnesses = []
    for i in g.colors:
        for comp in _cyclic_components(g, i):
            witnesses.append(Witness(comp[0], i, None, comp, "no monochromatic cycle"))
    return AxiomReport("P1", tuple(witnesses))


def check_p2(g: ColoredDigraph) -> AxiomReport:
    witnesses = []
    for i in g.colors:
        for x in range(g.size):
            n_in, n_out = len(g.pred[i][x]), len(g.succ[i][x])
            if n_in > 1 or n_out > 1:
                witnesses.append(Witness(x, i, None, [n_in, n_out], "in-degree <= 1 and out-degree <= 1"))
    return AxiomReport("P2", tuple(witnesses))


def _require_p12(g: ColoredDigraph):
    failed = [r.axiom for r in (check_p1(g), check_p2(g)) if not r.passed]
    if failed:
        raise PrerequisiteError(failed)


def _p3_required(i: int, j: int) -> int:
    if i == j:
        return 2
    if abs(i - j) == 1:
        return -1
    return 0


def _p3(g, table):
    eps, dlt = table
    witnesses = []
    for x in range(g.size):
        for i in g.colors:
            y = g.e(x, i)
            if y is None:
                continue
            for j in g.colors:
                total = (dlt[j][y] - dlt[j][x]) + (eps[j][y] - eps[j][x])
                want = _p3_required(i, j)
                if total != want:
                    witnesses.append(Witness(x, i, j, total, f"Delta_i delta(x,j) + Delta_i eps(x,j) = {want}"))
    return AxiomReport("P3", tuple(witnesses))


def _p4(g, table):
    eps, dlt = table
    witnesses = []
    for x in range(g.size):
        for i in g.colors:
            y = g.e(x, i)
            if y is None:
                continue
            for j in g.colors:
                if j == i:
                    continue
                dd = dlt[j][y] - dlt[j][x]
                de = eps[j][y] - eps[j][x]
                if dd > 0 or de > 0:
                    witnesses.append(Witness(x, i, j, [dd, de], "Delta_i delta(x,j) <= 0 and Delta_i eps(x,j) <= 0"))
    return AxiomReport("P4", tuple(witnesses))


def _walk(step, x: Optional[int], colors) -> Optional[int]:
    """Apply operators right to left: ``colors=(a, b)`` means ``O_a O_b x``."""
    for c in reversed(colors):
        if x is None:
            return None
        x = step(x, c)
    return x


def _p5(g, table):
    eps, dlt = table
    witnesses = []
    for x in range(g.size):
        for i in g.colors:
            for j in g.colors:
                if i == j:
                    continue
                ei, ej = g.e(x, i), g.e(x, j)
                if ei is not None and ej is not None and dlt[j][ei] - dlt[j][x] == 0:
                    a, b = _walk(g.e, x, (i, j)), _walk(g.e, x, (j, i))
                    if a is None or a != b:
                        witnesses.append(Witness(x, i, j, [a, b], "E_iE_j x = E_jE_i x (defined)"))
                    else:
                        below = g.f(a, j)
                        nabla = None if below is None else eps[i][a] - eps[i][below]
                        if nabla != 0:
                            witnesses.append(Witness(x, i, j, nabla, "nabla_j eps(y,i) = 0 at y = E_iE_j x"))
                fi, fj = g.f(x, i), g.f(x, j)
                if fi is not None and fj is not None and eps[j][x] - eps[j][fi] == 0:
                    a, b = _walk(g.f, x, (i, j)), _walk(g.f, x, (j, i))
                    if a is None or a != b:
                        witnesses.append(Witness(x, i, j, [a, b], "F_iF_j x = F_jF_i x (defined)"))
                    else:
                        above = g.e(a, j)
                        delta = None if above is None else dlt[i][above] - dlt[i][a]
                        if delta != 0:
                            witnesses.append(Witness(x, i, j, delta, "Delta_j delta(y,i) = 0 at y = F_iF_j x"))
    return AxiomReport("P5", tuple(witnesses))


def _p6(g, table):
    eps, dlt = table
    witnesses = []
    colors = list(g.colors)
    for x in range(g.size):
        for i in colors:
            for j in colors:
                if j <= i:
                    continue
                ei, ej = g.e(x, i), g.e(x, j)
                if (ei is not None and ej is not None
                        and dlt[j][ei] - dlt[j][x] == -1 and dlt[i][ej] - dlt[i][x] == -1):
                    a, b = _walk(g.e, x, (i, j, j, i)), _walk(g.e, x, (j, i, i, j))
                    if a is None or a != b:
                        witnesses.append(Witness(x, i, j, [a, b], "E_iE_j^2E_i x = E_jE_i^2E_j x (defined)"))
                    else:
                        fi, fj = g.f(a, i), g.f(a, j)
                        got = [None if fi is None else eps[j][a] - eps[j][fi],
                               None if fj is None else eps[i][a] - eps[i][fj]]
                        if got != [-1, -1]:
                            witnesses.append(Witness(x, i, j, got, "nabla_i eps(y,j) = nabla_j eps(y,i) = -1"))
                fi, fj = g.f(x, i), g.f(x, j)
                if (fi is not None and fj is not None
                        and eps[j][x] - eps[j][fi] == -1 and eps[i][x] - eps[i][fj] == -1):
                    a, b = _walk(g.f, x, (i, j, j, i)), _walk(g.f, x, (j, i, i, j))
                    if a is None or a != b:
                        witnesses.append(Witness(x, i, j, [a, b], "F_iF_j^2F_i x = F_jF_i^2F_j x (defined)"))
                    else:
                        ui, uj = g.e(a, i), g.e(a, j)
                        got = [None if ui is None else dlt[j][ui] - dlt[j][a],
                               None if uj is None else dlt[i][uj] - dlt[i][a]]
                        if got != [-1, -1]:
                            witnesses.append(Witness(x, i, j, got, "Delta_i delta(y,j) = Delta_j delta(y,i) = -1"))
    return AxiomReport("P6", tuple(witnesses))


def check_p3(g: ColoredDigraph) -> AxiomReport:
    _require_p12(g)
    return _p3(g, string_table(g))


def check_p4(g: ColoredDigraph) -> AxiomReport:
    _require_p12(g)
    return _p4(g, string_table(g))


def check_p5(g: ColoredDigraph) -> AxiomReport:
    _require_p12(g)
    return _p5(g, string_table(g))


def check_p6(g: ColoredDigraph) -> AxiomReport:
    _require_p12(g)
    return _p6(g, string_table(g))


def check_regular(g: ColoredDigraph) -> list[AxiomReport]:
    """P1 through P6 in order; P3-P6 are skipped when P1 or P2 fails."""
    reports = [check_p1(g), check_p2(g)]
    if not all(r.passed for r in reports):
        return reports
    table = string_table(g)
    return reports + [_p3(g, table), _p4(g, table), _p5(g, table), _p6(g, table)]
