"""Empirical growth functions over finitely enumerated closed classes.

Four worst-case growth functions are measured over the closure of a
generator set, all with a bounded measure:

* ``FW``     worst deterministic tree cost among members whose column set
             costs at most n,
* ``FTheta`` the same with the minimal test cost as the filter,
* ``F``      the same with the strongly nondeterministic tree cost as the
             filter (this one can be partial over infinite classes, so
             non-exhausted points are flagged possibly-undefined),
* ``G``      worst strongly nondeterministic tree cost among members
             whose column set costs at most n.

A point is exact only when every closure member passing its filter was
enumerated.  Full enumeration makes every point exact.  When enumeration
was truncated, FW and G points at n are still exact once all members
with at most n columns were seen, because a bounded measure forces a
member with column-set cost at most n to have at most n columns.  Points
that are not exhausted are certified lower bounds.

``StepFunction`` is the staircase equal to the largest member of a set
of integers not exceeding n (zero below the smallest member); the
planted generator scenarios reproduce it exactly.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Sequence

from .closure import ClosureEnumeration, ClosureLimits, enumerate_closure
from .measures import ComplexityMeasure, depth, table_costs
from .solvers import (
    det_tree_cost,
    min_test_cost,
    snd_tree_cost,
    table_separation_cost,
)
from .tables import DecisionTable, DtError

GROWTH_FUNCTIONS = ("FW", "FTheta", "F", "G")


class UnboundedMeasure(DtError):
    """Growth functions are defined for bounded measures only."""


@dataclass(frozen=True)
class StepFunction:
    """H for a strictly increasing set of nonnegative integers.

    value(n) is 0 below the first point and otherwise the largest point
    not exceeding n.
    """

    points: tuple[int, ...]

    def __post_init__(self):
        p = self.points
        if not p:
            raise DtError("a step function needs at least one point")
        if any(x < 0 for x in p) or any(a >= b for a, b in zip(p, p[1:])):
            raise DtError("step points must be strictly increasing and nonnegative")

    def value(self, n: int) -> int:
        best = 0
        for x in self.points:
            if x <= n:
                best = x
            else:
                break
        return best


@dataclass(frozen=True)
class GrowthPoint:
    n: int
    value: int
    exhausted: bool
    possibly_undefined: bool = False


@dataclass
class GrowthReport:
    fn: str
    points: list[GrowthPoint]
    generator_label: str
    measure_label: str
    members_seen: int
    closure_exhausted: bool

    def as_text(self) -> str:
        lines = [
            f"growth {self.fn}  generators={self.generator_label}  "
            f"measure={self.measure_label}  members={self.members_seen}  "
            f"closure_exhausted={'yes' if self.closure_exhausted else 'no'}"
        ]
        lines.append(f"{'n':>4}  {'value':>6}  exact")
        for p in self.points:
            flag = "yes" if p.exhausted else "no"
            if p.possibly_undefined:
                flag += " (possibly-undefined)"
            lines.append(f"{p.n:>4}  {p.value:>6}  {flag}")
        return "\n".join(lines) + "\n"

    def as_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["n", "value", "exhausted"])
        for p in self.points:
            w.writerow([p.n, p.value, "yes" if p.exhausted else "no"])
        return buf.getvalue()

    def values(self) -> list[int]:
        return [p.value for p in self.points]


def _member_stats(measure: ComplexityMeasure, table: DecisionTable, fn: str) -> tuple[int, int]:
    """(filter value, objective value) of one closure member for one growth fn."""
    if fn == "FW":
        return table_costs(measure, table)[0], det_tree_cost(measure, table)[0]
    if fn == "FTheta":
        return min_test_cost(measure, table)[0], det_tree_cost(measure, table)[0]
    if fn == "F":
        return snd_tree_cost(measure, table)[0], det_tree_cost(measure, table)[0]
    if fn == "G":
        return table_costs(measure, table)[0], snd_tree_cost(measure, table)[0]
    raise DtError(f"unknown growth function {fn!r}; pick one of {GROWTH_FUNCTIONS}")


def growth(
    fn: str,
    generators: Sequence[DecisionTable],
    measure: ComplexityMeasure,
    max_n: int,
    limits: ClosureLimits = ClosureLimits(),
    generator_label: str = "",
    enumeration: ClosureEnumeration | None = None,
) -> GrowthReport:
    """Measure one growth function on the closure of the generators.

    A precomputed ``enumeration`` of the same generators may be passed in
    so several growth functions can share one closure walk.
    """
    if fn not in GROWTH_FUNCTIONS:
        raise DtError(f"unknown growth function {fn!r}; pick one of {GROWTH_FUNCTIONS}")
    if not measure.is_bounded:
        raise UnboundedMeasure(
            "growth functions need a bounded measure (cost must dominate word length)"
        )
    enum = enumeration if enumeration is not None else enumerate_closure(generators, limits)
    pairs = [_member_stats(measure, m.table, fn) for m in enum.members]
    points: list[GrowthPoint] = []
    for n in range(max_n + 1):
        value = max((obj for filt, obj in pairs if filt <= n), default=0)
        exhausted = enum.exhausted or (
            fn in ("FW", "G") and n <= enum.complete_column_count
        )
        points.append(
            GrowthPoint(
                n=n,
                value=value,
                exhausted=exhausted,
                possibly_undefined=(fn == "F" and not exhausted),
            )
        )
    return GrowthReport(
        fn=fn,
        points=points,
        generator_label=generator_label,
        measure_label=measure.describe(),
        members_seen=len(enum.members),
        closure_exhausted=enum.exhausted,
    )


@dataclass(frozen=True)
class ClassStats:
    """Extremes over the members whose single attributes all cost <= n.

    ``max_separation`` and ``max_rows`` are exact maxima only when
    ``exhausted`` is set; otherwise they are certified lower bounds.
    Separation is measured in the depth measure here.
    """

    members: int
    max_separation: int
    max_rows: int
    exhausted: bool


def class_stats(
    generators: Sequence[DecisionTable],
    measure: ComplexityMeasure,
    n: int,
    limits: ClosureLimits = ClosureLimits(),
    enumeration: ClosureEnumeration | None = None,
) -> ClassStats:
    """Count and bound the closure members with cheap single attributes."""
    if not measure.is_bounded:
        raise UnboundedMeasure(
            "class statistics need a bounded measure (cost must dominate word length)"
        )
    enum = enumeration if enumeration is not None else enumerate_closure(generators, limits)
    h = depth()
    members = 0
    max_sep = 0
    max_rows = 0
    for m in enum.members:
        _, single_worst = table_costs(measure, m.table)
        if single_worst > n:
            continue
        members += 1
        max_sep = max(max_sep, table_separation_cost(h, m.table))
        max_rows = max(max_rows, m.table.n_rows)
    return ClassStats(
        members=members,
        max_separation=max_sep,
        max_rows=max_rows,
        exhausted=enum.exhausted,
    )
