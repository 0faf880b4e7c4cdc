"""Axiom reports and counterexample witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass(frozen=True, order=True)
class Witness:
    """One failure: where it happened, what was seen and what was required.

    ``i`` and ``j`` are the colors involved (``None`` where an axiom uses
    fewer).  ``observed`` holds plain ints, strings or lists of these, so a
    witness serializes to JSON without conversion.
    """

    vertex: int
    i: Optional[int] = None
    j: Optional[int] = None
    observed: Any = field(default=None, compare=False)
    required: str = field(default="", compare=False)

    def to_dict(self) -> dict:
        return {"vertex": self.vertex, "i": self.i, "j": self.j,
                "observed": self.observed, "required": self.required}


def _sort_key(w: Witness):
    return (w.vertex, -1 if w.i is None else w.i, -1 if w.j is None else w.j)


@dataclass(frozen=True)
class AxiomReport:
    axiom: str
    witnesses: tuple[Witness, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "witnesses", tuple(sorted(self.witnesses, key=_sort_key)))

    @property
    def passed(self) -> bool:
        return not self.witnesses

    def __bool__(self):
        return self.passed

    def at(self, vertex: int, i: Optional[int] = None, j: Optional[int] = None) -> list[Witness]:
        """Witnesses at a vertex, optionally filtered by colors."""
        return [w for w in self.witnesses if w.vertex == vertex
                and (i is None or w.i == i) and (j is None or w.j == j)]

    def to_dict(self) -> dict:
        return {"axiom": self.axiom, "passed": self.passed,
                "witnesses": [w.to_dict() for w in self.witnesses]}

    def summary(self, limit: int = 20, describe=str) -> str:
        """Human-readable verdict listing at most ``limit`` witnesses."""
        if self.passed:
            return f"{self.axiom}: pass"
        lines = [f"{self.axiom}: FAIL ({len(self.witnesses)} witnesses)"]
        for w in self.witnesses[:limit]:
            colors = ", ".join(f"{k}={v}" for k, v in (("i", w.i), ("j", w.j)) if v is not None)
            where = describe(w.vertex)
            lines.append(f"  at {where}" + (f" [{colors}]" if colors else "")
                         + f": observed {w.observed}, required {w.required}")
        if len(self.witnesses) > limit:
            lines.append(f"  ... {len(self.witnesses) - limit} more")
        return "\n".join(lines)


def all_passed(reports) -> bool:
    return all(r.passed for r in reports)
