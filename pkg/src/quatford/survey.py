"""Survey over (p, a) pairs: per-pair domain construction, generator
statistics against the predicted bounds, and fixed-schema CSV output.

Rows are computed independently (optionally on a process pool) and always
written in sorted order, so the files do not depend on scheduling.
"""

from __future__ import annotations

import csv
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .arith import valid_pairs
from .bounds import entry_bounds, johansson_epsilon, norm_bound
from .domain import ford_domain
from .geometry import chalk_norm
from .quat import johansson_volume

CSV_HEADER = [
    "p",
    "a",
    "dH",
    "dO",
    "index",
    "vol_over_pi",
    "n_generators",
    "max_abs_x0",
    "max_chalk_norm",
    "johansson_x0_bound",
    "certified",
    "elapsed_ms",
]

COMPARE_HEADER = [
    "p",
    "a",
    "max_chalk_norm",
    "norm_bound_exact_radius",
    "norm_bound_literal",
    "log10_max_chalk_norm",
    "log10_norm_bound_exact_radius",
    "log10_norm_bound_literal",
]


@dataclass(frozen=True)
class SurveyRow:
    p: int
    a: int
    d_h: int
    d_o: int
    unit_index: int
    vol_over_pi: str
    n_generators: int
    max_abs_x0: int
    max_chalk_norm: int
    johansson_x0_bound: int
    certified: bool
    elapsed_ms: int
    johansson_eps: float = 0.0

    def csv_record(self) -> list[str]:
        return [
            str(self.p),
            str(self.a),
            str(self.d_h),
            str(self.d_o),
            str(self.unit_index),
            self.vol_over_pi,
            str(self.n_generators),
            str(self.max_abs_x0),
            str(self.max_chalk_norm),
            str(self.johansson_x0_bound),
            "true" if self.certified else "false",
            str(self.elapsed_ms),
        ]


def compute_row(
    p: int,
    a: int,
    k: float = 3.0,
    tolerance: float = 1e-9,
    hard_level_cap: int = 10_000_000,
) -> SurveyRow:
    start = time.perf_counter()
    report = johansson_volume(p, a)
    eps = johansson_epsilon(report.vol_over_pi, k)
    coord = entry_bounds(p, a, eps)
    # a per-pair geometry failure still yields a row; the survey continues
    try:
        dom = ford_domain(p, a, tolerance=tolerance, hard_level_cap=hard_level_cap)
        gens = dom.generators
        certified = dom.certified
    except Exception:
        gens = []
        certified = False
    elapsed = int(round(1000.0 * (time.perf_counter() - start)))
    return SurveyRow(
        p=p,
        a=a,
        d_h=report.d_h,
        d_o=report.d_o,
        unit_index=report.unit_index,
        vol_over_pi=str(report.vol_over_pi),
        n_generators=len(gens),
        max_abs_x0=max((abs(g.x[0]) for g in gens), default=0),
        max_chalk_norm=max((chalk_norm(g) for g in gens), default=0),
        johansson_x0_bound=coord.x0,
        certified=certified,
        elapsed_ms=elapsed,
        johansson_eps=eps,
    )


def _row_task(args: tuple[int, int, float, float, int]) -> SurveyRow:
    return compute_row(*args)


def run_survey(
    p_max: int,
    torsion_free_only: bool = False,
    k: float = 3.0,
    tolerance: float = 1e-9,
    hard_level_cap: int = 10_000_000,
    jobs: int = 1,
) -> list[SurveyRow]:
    """One row per valid pair with p <= p_max, sorted by (p, a)."""
    if p_max < 5:
        raise ValueError("p_max must be at least 5")
    pairs = [
        (p, a)
        for p, a in valid_pairs(p_max)
        if p >= 5 and not (torsion_free_only and p % 4 != 1)
    ]
    tasks = [(p, a, k, tolerance, hard_level_cap) for p, a in pairs]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_row_task, tasks))
    else:
        rows = [_row_task(t) for t in tasks]
    rows.sort(key=lambda r: (r.p, r.a))
    return rows


def write_survey_csv(rows: list[SurveyRow], out: str | Path) -> tuple[Path, Path]:
    """Write the (p, a)-ordered file and a companion ordered by dH."""
    out = Path(out)
    with out.open("w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for row in rows:
            writer.writerow(row.csv_record())
    by_dh = out.with_name(out.stem + "_by_dh" + out.suffix)
    with by_dh.open("w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for row in sorted(rows, key=lambda r: (r.d_h, r.p, r.a)):
            writer.writerow(row.csv_record())
    return out, by_dh


@dataclass(frozen=True)
class CompareRow:
    p: int
    a: int
    max_chalk_norm: int
    bound_exact: float
    bound_literal: float

    def csv_record(self) -> list[str]:
        return [
            str(self.p),
            str(self.a),
            str(self.max_chalk_norm),
            repr(self.bound_exact),
            repr(self.bound_literal),
            repr(math.log10(self.max_chalk_norm)),
            repr(math.log10(self.bound_exact)),
            repr(math.log10(self.bound_literal)),
        ]


def compare_rows(rows: list[SurveyRow]) -> list[CompareRow]:
    """Empirical max generator norm vs the radius-cutoff norm bounds, for
    certified rows (both the exact-radius and the literal variant)."""
    out = []
    for row in rows:
        if not row.certified or row.max_chalk_norm <= 0:
            continue
        out.append(
            CompareRow(
                p=row.p,
                a=row.a,
                max_chalk_norm=row.max_chalk_norm,
                bound_exact=norm_bound(row.johansson_eps, literal_radius=False),
                bound_literal=norm_bound(row.johansson_eps, literal_radius=True),
            )
        )
    return out


def write_compare_csv(rows: list[CompareRow], out: str | Path) -> Path:
    out = Path(out)
    with out.open("w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(COMPARE_HEADER)
        for row in rows:
            writer.writerow(row.csv_record())
    return out
