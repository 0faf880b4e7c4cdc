"""Dual equivalence graphs on the zero-weight space of a crystal.

A vertex ``x`` of a crystal is zero-weight when it sits at the center of
every ``i``-string, ``eps(x, i) == -delta(x, i)``.  The strict zero-weight
set also asks for strings of length at most 3 (``eps`` in ``{0, 1}``).  On
that set the signature is ``+1`` at ``i`` when ``eps(x, i) == 1`` and the
``i``-edge is the four-step walk

    F_{i-1} F_i E_{i-1} E_i x     when eps(x,i) = 1, eps(x,i-1) = 0
    F_i F_{i-1} E_i E_{i-1} x     when eps(x,i) = 0, eps(x,i-1) = 1

with operators applied right to left.  In parity mode the signature becomes
``(-1) ** (eps(x, i) + k)`` where ``k`` is the number of cells per vertex
divided by the degree.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Literal, Optional

from .crystal import CrystalGraph, build_crystal, string_table
from .deg_axioms import check_deg
from .dualequiv import build_deg
from .errors import GeneralZeroWeightError, InvariantViolation, ShapeError
from .graphs import ColoredDigraph, Signature, SignedColoredGraph
from .isomorphism import find_isomorphism, isomorphisms, structure_of
from .reports import AxiomReport
from .stembridge import check_regular
from .tableaux import Partition, partitions_of


class GeneralZeroWeightWarning(UserWarning):
    """Zero-weight vertices with an ``i``-string longer than 3 were found."""


@dataclass(frozen=True)
class ZeroWeightOptions:
    signature_mode: Literal["standard", "parity"] = "standard"
    strictness: Literal["require_01", "allow_general"] = "require_01"

    def __post_init__(self):
        if self.signature_mode not in ("standard", "parity"):
            raise ValueError(f"unknown signature mode {self.signature_mode!r}")
        if self.strictness not in ("require_01", "allow_general"):
            raise ValueError(f"unknown strictness {self.strictness!r}")


STANDARD = ZeroWeightOptions()
PARITY = ZeroWeightOptions(signature_mode="parity")


def _table(g: ColoredDigraph):
    cached = getattr(g, "_string_table", None)
    if cached is None:
        cached = string_table(g)
        g._string_table = cached
    return cached


def _is_centered(g, x, eps, dlt) -> bool:
    return all(eps[i][x] == -dlt[i][x] for i in g.colors)


def zero_weight(g: ColoredDigraph, opts: ZeroWeightOptions = STANDARD) -> list[int]:
    """Vertex ids of the zero-weight space, in vertex order."""
    eps, dlt = _table(g)
    centered = [x for x in range(g.size) if _is_centered(g, x, eps, dlt)]
    if opts.strictness == "require_01":
        return [x for x in centered if all(eps[i][x] <= 1 for i in g.colors)]
    long_strings = [x for x in centered if any(eps[i][x] >= 2 for i in g.colors)]
    if long_strings:
        warnings.warn(
            f"{len(long_strings)} zero-weight vertices lie on strings of length > 3; "
            "no induced edges are defined there",
            GeneralZeroWeightWarning, stacklevel=2)
    return centered


def ratio_k(g: ColoredDigraph) -> int:
    """Cells per vertex divided by the degree (must be an integer)."""
    dimension = getattr(g, "dimension", None)
    if dimension is None:
        raise ValueError("parity signatures need a crystal with known dimension")
    if dimension % g.degree:
        raise ValueError(f"dimension {dimension} is not a multiple of the degree {g.degree}")
    return dimension // g.degree


def _strict_member(g, x, eps, dlt) -> bool:
    return all(eps[i][x] == -dlt[i][x] and eps[i][x] <= 1 for i in g.colors)


def induced_sigma(g: ColoredDigraph, x: int, opts: ZeroWeightOptions = STANDARD) -> Signature:
    eps, dlt = _table(g)
    if not _strict_member(g, x, eps, dlt):
        raise ValueError(f"vertex {x} is not in the strict zero-weight space")
    if opts.signature_mode == "parity":
        k = ratio_k(g)
        return tuple((-1) ** (eps[i][x] + k) for i in g.colors)
    return tuple(1 if eps[i][x] == 1 else -1 for i in g.colors)


def induced_d(g: ColoredDigraph, x: int, i: int, opts: ZeroWeightOptions = STANDARD) -> Optional[int]:
    """The induced ``i``-neighbour of a strict zero-weight vertex, or ``None``."""
    eps, dlt = _table(g)
    if not _strict_member(g, x, eps, dlt):
        raise ValueError(f"vertex {x} is not in the strict zero-weight space")
    if not 2 <= i <= g.degree - 1:
        raise ValueError(f"color {i} outside 2..{g.degree - 1}")
    if eps[i][x] == 1 and eps[i - 1][x] == 0:
        steps = [("E", i), ("E", i - 1), ("F", i), ("F", i - 1)]
    elif eps[i][x] == 0 and eps[i - 1][x] == 1:
        steps = [("E", i - 1), ("E", i), ("F", i - 1), ("F", i)]
    else:
        return None
    y = x
    for kind, c in steps:
        nxt = g.e(y, c) if kind == "E" else g.f(y, c)
        if nxt is None:
            raise InvariantViolation(
                f"induced D_{i} at vertex {x}: {kind}_{c} undefined at vertex {y}; "
                "the graph cannot be regular")
        y = nxt
    if not _strict_member(g, y, eps, dlt):
        raise InvariantViolation(f"induced D_{i}({x}) = {y} left the zero-weight space")
    return y


def build_g_of_x(g: ColoredDigraph, opts: ZeroWeightOptions = STANDARD, verify: bool = False) -> SignedColoredGraph:
    """The signed colored graph induced on the strict zero-weight space.

    With ``verify=True`` the crystal is first run through ``check_regular``
    and a ``ValueError`` is raised if any axiom fails.
    """
    if verify:
        failed = [r.axiom for r in check_regular(g) if not r.passed]
        if failed:
            raise ValueError(f"graph is not regular: {', '.join(failed)} failed")
    eps, dlt = _table(g)
    general = [x for x in range(g.size)
               if _is_centered(g, x, eps, dlt) and any(eps[i][x] >= 2 for i in g.colors)]
    if general:
        raise GeneralZeroWeightError(
            f"{len(general)} zero-weight vertices lie on strings of length > 3 "
            f"(first: vertex {general[0]}); induced edges are only defined when every eps is 0 or 1")
    strict = zero_weight(g, ZeroWeightOptions(opts.signature_mode, "require_01"))
    local = {x: k for k, x in enumerate(strict)}
    edges = []
    for x in strict:
        for i in range(2, g.degree):
            y = induced_d(g, x, i, opts)
            if y is None:
                continue
            if y not in local:
                raise InvariantViolation(f"induced D_{i}({x}) = {y} is not a zero-weight vertex")
            if induced_d(g, y, i, opts) != x:
                raise InvariantViolation(f"induced D_{i} is not an involution at vertex {x}")
            if local[x] < local[y]:
                edges.append((local[x], local[y], i))
    signatures = [induced_sigma(g, x, opts) for x in strict]
    labels = [g.labels[x] for x in strict] if g.labels is not None else None
    return SignedColoredGraph(g.degree, signatures, edges, labels)


@dataclass(frozen=True)
class IsoResult:
    found: bool
    mapping: Optional[tuple[int, ...]] = None

    def __bool__(self):
        return self.found


def iso(g1: SignedColoredGraph, g2: SignedColoredGraph) -> IsoResult:
    """Signature- and color-preserving isomorphism ``g1 -> g2``, if one exists."""
    if g1.degree != g2.degree:
        return IsoResult(False)
    mapping = find_isomorphism(structure_of(g1), structure_of(g2))
    return IsoResult(mapping is not None, mapping)


def automorphisms(g: SignedColoredGraph) -> list[tuple[int, ...]]:
    s = structure_of(g)
    return list(isomorphisms(s, s))


def identify(g: SignedColoredGraph) -> Optional[Partition]:
    """The unique ``lambda`` with ``g`` isomorphic to G_lambda, else ``None``."""
    m = g.degree
    if g.size == 0:
        return None
    hits = [lam for lam in partitions_of(m)
            if build_deg(lam).size == g.size and iso(g, build_deg(lam)).found]
    return hits[0] if len(hits) == 1 else None


@dataclass
class CorrespondenceReport:
    """Outcome of comparing an induced graph with the expected standard graph."""

    shape: Partition
    n: int
    expected: Optional[Partition] = None
    identified: Optional[Partition] = None
    problems: list[str] = field(default_factory=list)
    deg_reports: list[AxiomReport] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems

    def __bool__(self):
        return self.ok


def verify_main(shape: Partition, n: int) -> CorrespondenceReport:
    """Check G(X_shape^n) equals G_shape vertex for vertex (shape a partition of n)."""
    if shape.size() != n:
        raise ShapeError(f"shape {shape} is not a partition of n={n}")
    report = CorrespondenceReport(shape, n, expected=shape)
    induced = build_g_of_x(build_crystal(shape, n))
    target = build_deg(shape)
    if induced.labels != target.labels:
        report.problems.append(f"vertex sets differ: {len(induced.labels)} vs {len(target.labels)} tableaux")
        return report
    for v, (a, b) in enumerate(zip(induced.signatures, target.signatures)):
        if a != b:
            report.problems.append(f"signature mismatch at {target.labels[v]}: {a} vs {b}")
    if induced.edges() != target.edges():
        extra = sorted(set(induced.edges()) - set(target.edges()))
        missing = sorted(set(target.edges()) - set(induced.edges()))
        report.problems.append(f"edge sets differ: extra {extra}, missing {missing}")
    if report.ok:
        report.identified = shape
    return report


def verify_addcol(mu: Partition, c: int, n: int, opts: ZeroWeightOptions = STANDARD) -> CorrespondenceReport:
    """Add ``c`` full columns of height ``n`` to ``mu`` and identify the induced graph.

    Standard signatures should give ``mu``.  Parity signatures give ``mu``
    when ``k = 1 + c`` is odd and the conjugate of ``mu`` when it is even.
    """
    if mu.length() > n:
        raise ShapeError(f"shape {mu} has more than n={n} rows")
    if mu.size() != n:
        raise ShapeError(f"shape {mu} is not a partition of n={n}")
    if c < 0:
        raise ShapeError("number of added columns must be non-negative")
    padded = list(mu.parts) + [0] * (n - mu.length())
    lam = Partition(tuple(p + c for p in padded if p + c > 0))
    expected = mu
    if opts.signature_mode == "parity" and (1 + c) % 2 == 0:
        expected = mu.conjugate()
    report = CorrespondenceReport(lam, n, expected=expected)
    induced = build_g_of_x(build_crystal(lam, n), opts)
    report.deg_reports = check_deg(induced)
    for r in report.deg_reports:
        if not r.passed:
            report.problems.append(f"{r.axiom} failed on the induced graph")
    report.identified = identify(induced)
    if report.identified != expected:
        report.problems.append(f"identified {report.identified}, expected {expected}")
    return report
