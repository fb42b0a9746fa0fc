"""Timing and operation-count harness for the O(n) factorization."""

import random
import statistics
import time
from dataclasses import asdict, dataclass

from .core import FAMILIES, from_bands
from .errors import PivotBreakdown
from .factorization import factor
from .generate import random_bands
from .scalars import DEFAULT_TOLERANCE
from .solve import invert, solve

EXACT_CAP = 512
INVERT_CAP = 128


@dataclass
class BenchRecord:
    n: int
    mode: str
    trial: int
    factor_s: float
    solve_s: float | None
    invert_s: float | None
    op_count: int | None
    substituted: int
    breakdown: bool = False

    def as_dict(self):
        return asdict(self)


def bench_matrix(n, seed):
    """Diagonally dominant instance so float runs measure time, not breakdowns."""
    bands = random_bands(n, random.Random(f"bench:{n}:{seed}"), dominant=True)
    return from_bands(n, *(bands[f] for f in FAMILIES))


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def bench(sizes, mode="float", trials=1, exact_cap=EXACT_CAP,
          invert_cap=INVERT_CAP, tol=DEFAULT_TOLERANCE, seed=0):
    """Time factor / solve / invert per size and trial.

    Inversion is quadratic, so it is only timed up to ``invert_cap``.
    Exact mode refuses sizes above ``exact_cap``.  A float-mode
    ``PivotBreakdown`` is recorded on the trial, not raised.
    """
    if mode == "exact":
        too_big = [n for n in sizes if n > exact_cap]
        if too_big:
            raise ValueError(
                f"exact mode is capped at n <= {exact_cap} (got {too_big}); "
                "raise the cap explicitly to override"
            )
    records = []
    for n in sizes:
        for trial in range(trials):
            H = bench_matrix(n, seed + trial)
            try:
                F, t_factor = _timed(lambda: factor(H, mode=mode, tol=tol))
            except PivotBreakdown:
                records.append(BenchRecord(n, mode, trial, float("nan"), None, None,
                                           None, 0, breakdown=True))
                continue
            rhs = list(range(1, n + 1))
            _, t_solve = _timed(lambda: solve(F, H, rhs, check=False))
            t_inv = None
            if n <= invert_cap:
                _, t_inv = _timed(lambda: invert(H, F=F))
            records.append(BenchRecord(n, mode, trial, t_factor, t_solve, t_inv,
                                       F.op_count, len(F.substituted)))
    return records


def medians(records):
    """One summary row per size (the median of each timing over its trials)."""
    out = []
    for n in sorted({r.n for r in records}):
        rows = [r for r in records if r.n == n and not r.breakdown]
        if not rows:
            continue

        def med(attr):
            vals = [getattr(r, attr) for r in rows if getattr(r, attr) is not None]
            return statistics.median(vals) if vals else None

        out.append({
            "n": n,
            "mode": rows[0].mode,
            "trials": len(rows),
            "breakdowns": sum(r.breakdown for r in records if r.n == n),
            "factor_s": med("factor_s"),
            "solve_s": med("solve_s"),
            "invert_s": med("invert_s"),
            "op_count": med("op_count"),
        })
    return out
