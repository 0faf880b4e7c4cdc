"""Exhaustive verification sweep over all partitions of n <= max_n.

Each row covers one partition ``lam`` of ``n``: regularity of X_lam^n,
the dual equivalence axioms on G_lam and on G(X_lam^n), and the labeled
equality G(X_lam^n) = G_lam.  Rows are independent, so they may be
computed in worker processes; the table is always printed in partition
order and never contains timings, so output bytes do not depend on the
worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .crystal import build_crystal
from .deg_axioms import check_deg
from .dualequiv import build_deg
from .reports import all_passed
from .zeroweight import build_g_of_x, verify_main
from .stembridge import check_regular
from .tableaux import Partition, partitions_of

THREADS_ENV = "CRYSTAL_DEG_THREADS"


@dataclass(frozen=True)
class SweepRow:
    n: int
    shape: Partition
    crystal_size: int
    regular: bool
    deg_size: int
    deg_ok: bool
    induced_deg_ok: bool
    main_ok: bool

    @property
    def ok(self) -> bool:
        return self.regular and self.deg_ok and self.induced_deg_ok and self.main_ok


def sweep_row(job: tuple[int, tuple[int, ...]]) -> SweepRow:
    n, parts = job
    shape = Partition(parts)
    crystal = build_crystal(shape, n)
    deg = build_deg(shape)
    return SweepRow(
        n=n,
        shape=shape,
        crystal_size=crystal.size,
        regular=all_passed(check_regular(crystal)),
        deg_size=deg.size,
        deg_ok=all_passed(check_deg(deg)),
        induced_deg_ok=all_passed(check_deg(build_g_of_x(crystal))),
        main_ok=verify_main(shape, n).ok,
    )


def worker_count(parallel: Optional[int]) -> int:
    """Explicit ``parallel`` wins, then the environment hint, then 1."""
    if parallel is not None:
        return max(1, parallel)
    hint = os.environ.get(THREADS_ENV, "")
    return max(1, int(hint)) if hint.isdigit() else 1


def run_sweep(max_n: int, parallel: Optional[int] = None) -> list[SweepRow]:
    jobs = [(n, lam.parts) for n in range(1, max_n + 1) for lam in partitions_of(n)]
    workers = worker_count(parallel)
    if workers == 1:
        return [sweep_row(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(sweep_row, jobs, chunksize=4))


def _mark(flag: bool) -> str:
    return "pass" if flag else "FAIL"


def format_sweep(rows: list[SweepRow]) -> str:
    rows = sorted(rows, key=lambda r: (r.n, [-p for p in r.shape.parts]))
    header = f"{'n':>2}  {'shape':<14} {'|X|':>6}  {'regular':<7}  {'|G|':>4}  {'deg':<4}  {'G(X) deg':<8}  {'G(X)=G':<6}"
    lines = [header, "-" * len(header)]
    for r in rows:
        lines.append(f"{r.n:>2}  {str(r.shape):<14} {r.crystal_size:>6}  {_mark(r.regular):<7}  "
                     f"{r.deg_size:>4}  {_mark(r.deg_ok):<4}  {_mark(r.induced_deg_ok):<8}  {_mark(r.main_ok):<6}")
    failed = sum(1 for r in rows if not r.ok)
    verdict = "all checks passed" if not failed else f"{failed} shapes FAILED"
    lines.append(f"{len(rows)} shapes, {verdict}")
    return "\n".join(lines) + "\n"
