"""Exact computation of every table parameter, with witnesses.

For a table T and complexity measure psi this module computes:

* ``min_test_cost``        cheapest test (columns separating every pair of
                           rows with different decisions),
* ``row_separation_cost``  cheapest column set telling one row from all
                           others; ``table_separation_cost`` is its max
                           over rows and ``closure_separation_cost`` the
                           max of that over all column-removal projections,
* ``fixing_cost``          adversarial cost of driving the table into the
                           constant class by fixing attributes to the
                           values of a tuple, maximized over all tuples,
* ``det_tree_cost``        cheapest deterministic decision tree (exact
                           memoized search, plus an independent
                           brute-force oracle),
* ``snd_tree_cost``        cheapest strongly nondeterministic decision
                           tree (per 1-row minimal true rules glued under
                           one root),
* ``parameter_report``     everything at once, with every known
                           inequality between the parameters re-checked
                           in exact integer arithmetic.

Subset searches enumerate candidate attribute sets in nondecreasing
(cost, tie) order by lazy powerset expansion; the measure's nondecreasing
axiom makes the first satisfying subset optimal.  Ties break to the
lexicographically smallest attribute-index set (optionally smallest
cardinality first), so witnesses are deterministic.

The deterministic-tree search memoizes on (surviving row set, accumulator
state).  Keying on the accumulator matters: under combinator measures the
best subtree genuinely depends on the tested prefix, so a row-set-only
memo would be wrong; the brute-force oracle pins this down in the tests.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable

from .closure import remove_columns
from .measures import ComplexityMeasure, NotDecomposable, depth, table_costs
from .tables import (
    Attribute,
    DecisionTable,
    DtError,
    TooLarge,
    ValueOutOfRange,
    is_constant,
    is_test,
)
from .trees import (
    DecisionTree,
    Leaf,
    Node,
    validate_deterministic,
    validate_strongly_nondeterministic,
)

MAX_SUBSET_COLUMNS = 20
MAX_TUPLE_SPACE = 1 << 24


class RowNotInTable(DtError):
    pass


class BadTupleLength(DtError):
    pass


def _value_masks(table: DecisionTable) -> list[list[int]]:
    """Per column position, per value, the bitmask of rows with that value."""
    masks = [[0] * table.k for _ in range(table.n_cols)]
    for i, row in enumerate(table.rows):
        for p, v in enumerate(row):
            masks[p][v] |= 1 << i
    return masks


def _ones_mask(table: DecisionTable) -> int:
    m = 0
    for i, d in enumerate(table.decisions):
        if d:
            m |= 1 << i
    return m


def min_cost_subset(
    measure: ComplexityMeasure,
    table: DecisionTable,
    predicate: Callable[[tuple[int, ...]], bool],
    card_first: bool = False,
) -> tuple[int, tuple[Attribute, ...]]:
    """Cheapest column subset satisfying a monotone predicate.

    ``predicate`` receives an ascending tuple of column positions.
    Monotonicity (supersets of a satisfying set also satisfy) plus the
    nondecreasing axiom guarantee the first subset popped in
    (cost, [cardinality,] index-tuple) order is optimal.
    """
    if table.n_cols > MAX_SUBSET_COLUMNS:
        raise TooLarge(
            f"subset search over {table.n_cols} columns exceeds the "
            f"{MAX_SUBSET_COLUMNS}-column guard rail"
        )
    order = sorted(range(table.n_cols), key=lambda p: table.columns[p].index)

    def entry(ranks: tuple[int, ...]):
        attrs = tuple(table.columns[order[r]] for r in ranks)
        cost = measure.set_cost(attrs)
        idx = tuple(a.index for a in attrs)
        key = (cost, len(ranks), idx) if card_first else (cost, idx)
        return (key, ranks)

    heap = [entry(())]
    while heap:
        (key, ranks) = heapq.heappop(heap)
        positions = tuple(sorted(order[r] for r in ranks))
        if predicate(positions):
            return key[0], tuple(sorted(table.columns[p] for p in positions))
        last = ranks[-1] if ranks else -1
        for nr in range(last + 1, len(order)):
            heapq.heappush(heap, entry(ranks + (nr,)))
    raise AssertionError("no subset satisfied the predicate; full column set should")


def min_test_cost(
    measure: ComplexityMeasure, table: DecisionTable
) -> tuple[int, tuple[Attribute, ...]]:
    """Cheapest test of the table; (0, empty) for constant tables."""
    if is_constant(table):
        return 0, ()
    zero_rows = [r for r, d in table.entries() if d == 0]
    one_rows = [r for r, d in table.entries() if d == 1]

    def separates(positions: tuple[int, ...]) -> bool:
        for a in zero_rows:
            for b in one_rows:
                if all(a[p] == b[p] for p in positions):
                    return False
        return True

    return min_cost_subset(measure, table, separates)


def row_separation_cost(
    measure: ComplexityMeasure,
    table: DecisionTable,
    row,
    card_first: bool = False,
) -> tuple[int, tuple[Attribute, ...]]:
    """Cheapest column set on which ``row`` differs from every other row."""
    row = tuple(row)
    if row not in table.rows:
        raise RowNotInTable(f"{row} is not a row of the table")
    others = [r for r in table.rows if r != row]

    def separates(positions: tuple[int, ...]) -> bool:
        return all(any(o[p] != row[p] for p in positions) for o in others)

    return min_cost_subset(measure, table, separates, card_first=card_first)


def table_separation_cost(measure: ComplexityMeasure, table: DecisionTable) -> int:
    """Worst row separation cost over the table's rows (0 when empty)."""
    if table.is_empty:
        return 0
    return max(row_separation_cost(measure, table, r)[0] for r in table.rows)


def closure_separation_cost(measure: ComplexityMeasure, table: DecisionTable) -> int:
    """Worst separation cost over every column-removal projection.

    Relabelings never change which rows a projection has, and separation
    ignores decisions, so ranging over the 2^columns projections covers
    the whole closure.
    """
    if table.is_empty:
        return 0
    if table.n_cols > MAX_SUBSET_COLUMNS:
        raise TooLarge(f"projection sweep over {table.n_cols} columns is too large")
    best = 0
    for r in range(table.n_cols + 1):
        for removed in combinations(table.columns, r):
            proj = remove_columns(removed, table)
            best = max(best, table_separation_cost(measure, proj))
    return best


def fixing_cost_for_tuple(
    measure: ComplexityMeasure, table: DecisionTable, values
) -> tuple[int, tuple[tuple[Attribute, int], ...]]:
    """Cheapest set of fixings from ``values`` landing in the constant class.

    ``values`` assigns one value per column; fixing a subset of columns to
    those values must leave a constant or empty table.
    """
    values = tuple(values)
    if len(values) != table.n_cols:
        raise BadTupleLength(
            f"tuple has {len(values)} entries for a {table.n_cols}-column table"
        )
    for v in values:
        if not isinstance(v, int) or not 0 <= v < table.k:
            raise ValueOutOfRange(f"tuple entry {v!r} is outside E_{table.k}")
    if is_constant(table):
        return 0, ()
    masks = _value_masks(table)
    ones = _ones_mask(table)
    full = (1 << table.n_rows) - 1

    def lands_constant(positions: tuple[int, ...]) -> bool:
        m = full
        for p in positions:
            m &= masks[p][values[p]]
        x = m & ones
        return x == 0 or x == m

    cost, attrs = min_cost_subset(measure, table, lands_constant)
    fixings = tuple((a, values[table.column_position(a)]) for a in attrs)
    return cost, fixings


def fixing_cost(
    measure: ComplexityMeasure, table: DecisionTable
) -> tuple[int, tuple[int, ...] | None]:
    """Worst fixing cost over all value tuples, with the first worst tuple."""
    if is_constant(table):
        return 0, None
    if table.k**table.n_cols > MAX_TUPLE_SPACE:
        raise TooLarge(
            f"{table.k}^{table.n_cols} value tuples exceed the exact-sweep guard rail"
        )
    best = -1
    worst_tuple = None
    for values in product(range(table.k), repeat=table.n_cols):
        c, _ = fixing_cost_for_tuple(measure, table, values)
        if c > best:
            best, worst_tuple = c, values
    return best, worst_tuple


# ---------------------------------------------------------------------------
# deterministic trees


def det_tree_cost(
    measure: ComplexityMeasure, table: DecisionTable
) -> tuple[int, DecisionTree | None]:
    """Cheapest deterministic decision tree for the table, with a witness.

    Exact search over reachable subtables (bitmask row sets), memoized on
    (row set, accumulator state).  Candidate attributes at a node are
    those taking at least two values among the surviving rows; testing
    any other attribute can never lower the cost of a path because
    extension never decreases the accumulator value.  The empty table has
    cost 0 and no tree by fiat.
    """
    if table.is_empty:
        return 0, None
    if not measure.decomposable:
        raise NotDecomposable("exact tree search needs the accumulator contract")
    k = table.k
    cols = table.columns
    masks = _value_masks(table)
    ones = _ones_mask(table)
    full = (1 << table.n_rows) - 1
    order = sorted(range(len(cols)), key=lambda p: cols[p].index)
    memo: dict[tuple[int, object], tuple[int, int]] = {}

    def constant(mask: int) -> bool:
        x = mask & ones
        return x == 0 or x == mask

    def solve(mask: int, state) -> int:
        if constant(mask):
            return measure.value(state)
        key = (mask, state)
        hit = memo.get(key)
        if hit is not None:
            return hit[0]
        best = None
        best_p = -1
        for p in order:
            live = [masks[p][v] & mask for v in range(k)]
            live = [m for m in live if m]
            if len(live) < 2:
                continue
            st = measure.extend(state, cols[p].index)
            worst = 0
            for m in live:
                c = solve(m, st)
                if c > worst:
                    worst = c
            if best is None or worst < best:
                best, best_p = worst, p
        assert best is not None, "non-constant subtable with no splitting attribute"
        memo[key] = (best, best_p)
        return best

    def rebuild(mask: int, state):
        if constant(mask):
            first = (mask & -mask).bit_length() - 1
            return Leaf(table.decisions[first])
        _, p = memo[(mask, state)]
        st = measure.extend(state, cols[p].index)
        edges = tuple(
            (v, rebuild(masks[p][v] & mask, st))
            for v in range(k)
            if masks[p][v] & mask
        )
        return Node(cols[p], edges)

    s0 = measure.initial_state()
    total = solve(full, s0)
    tree = DecisionTree(k, (rebuild(full, s0),))
    return total, tree


def det_tree_cost_bruteforce(measure: ComplexityMeasure, table: DecisionTable) -> int:
    """Oracle: minimize over all deterministic trees with distinct
    attributes per path, evaluating whole path words directly.

    Independent of the memoized search: no accumulator states, no
    memoization, no pruning of useless tests.  Guard rails keep the
    enumeration exhaustive and finite.
    """
    if table.is_empty:
        return 0
    if table.n_cols > 4 or table.k > 3:
        raise TooLarge("brute-force tree search allows at most 4 columns and k <= 3")
    cols = table.columns
    masks = _value_masks(table)
    ones = _ones_mask(table)
    full = (1 << table.n_rows) - 1

    def constant(mask: int) -> bool:
        x = mask & ones
        return x == 0 or x == mask

    def best(mask: int, avail: tuple[int, ...], word: tuple[Attribute, ...]) -> int:
        if constant(mask):
            return measure.cost(word)
        res = None
        for p in avail:
            rest = tuple(q for q in avail if q != p)
            live = [masks[p][v] & mask for v in range(table.k)]
            live = [m for m in live if m]
            worst = max(best(m, rest, word + (cols[p],)) for m in live)
            if res is None or worst < res:
                res = worst
        assert res is not None, "ran out of attributes on a non-constant subtable"
        return res

    return best(full, tuple(range(len(cols))), ())


# ---------------------------------------------------------------------------
# strongly nondeterministic trees


def minimal_rule(
    measure: ComplexityMeasure, table: DecisionTable, row
) -> tuple[int, tuple[tuple[Attribute, int], ...]]:
    """Cheapest true rule for a 1-row: a column set on which every
    agreeing row is labeled 1, as (cost, fixings)."""
    row = tuple(row)
    if row not in table.rows:
        raise RowNotInTable(f"{row} is not a row of the table")
    if table.decisions[table.rows.index(row)] != 1:
        raise RowNotInTable(f"{row} is not labeled 1; rules cover 1-rows")
    masks = _value_masks(table)
    ones = _ones_mask(table)
    full = (1 << table.n_rows) - 1

    def all_ones(positions: tuple[int, ...]) -> bool:
        m = full
        for p in positions:
            m &= masks[p][row[p]]
        return m & ~ones == 0

    cost, attrs = min_cost_subset(measure, table, all_ones)
    return cost, tuple((a, row[table.column_position(a)]) for a in attrs)


def snd_tree_cost(
    measure: ComplexityMeasure, table: DecisionTable
) -> tuple[int, DecisionTree | None]:
    """Cheapest strongly nondeterministic tree; (0, None) for constant tables.

    One minimal true rule per 1-row, glued as one path each under a shared
    root, is such a tree of cost max-of-mins; conversely any valid tree
    hands every 1-row a covering path whose attribute set is a rule of no
    larger cost, so the value is exact.
    """
    if is_constant(table):
        return 0, None
    rules: list[tuple[tuple[Attribute, int], ...]] = []
    value = 0
    for row, d in table.entries():
        if d != 1:
            continue
        cost, fixings = minimal_rule(measure, table, row)
        assert fixings, "a non-constant table cannot have an empty rule"
        value = max(value, cost)
        rules.append(fixings)
    distinct = sorted(set(rules), key=lambda fx: tuple((a.index, v) for a, v in fx))
    children = []
    for fixings in distinct:
        node: Leaf | Node = Leaf(1)
        for attr, v in reversed(fixings):
            node = Node(attr, ((v, node),))
        children.append(node)
    return value, DecisionTree(table.k, tuple(children))


# ---------------------------------------------------------------------------
# the full report


@dataclass(frozen=True)
class ParameterReport:
    """Every parameter of one table under one measure, with witnesses.

    ``checks`` lists the inequality checks that ran; ``failed_checks``
    must stay empty (a failure is an implementation bug, and the report
    is flagged inconsistent).
    """

    k: int
    measure: str
    rows: int
    columns: int
    attr_set_cost: int
    max_attr_cost: int
    min_test_cost: int
    separation_cost: int
    closure_separation_cost: int
    fixing_cost: int
    det_cost: int
    snd_cost: int
    test_witness: tuple[Attribute, ...]
    row_separators: tuple[tuple[tuple[int, ...], int, tuple[Attribute, ...]], ...]
    worst_tuple: tuple[int, ...] | None
    det_tree: DecisionTree | None
    snd_tree: DecisionTree | None
    checks: tuple[str, ...]
    failed_checks: tuple[str, ...]

    @property
    def consistent(self) -> bool:
        return not self.failed_checks

    def values(self) -> dict[str, int]:
        return {
            "rows": self.rows,
            "columns": self.columns,
            "attr_set_cost": self.attr_set_cost,
            "max_attr_cost": self.max_attr_cost,
            "min_test_cost": self.min_test_cost,
            "separation_cost": self.separation_cost,
            "closure_separation_cost": self.closure_separation_cost,
            "fixing_cost": self.fixing_cost,
            "det_cost": self.det_cost,
            "snd_cost": self.snd_cost,
        }


def inequality_findings(measure: ComplexityMeasure, table: DecisionTable, vals: dict) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """Re-check every proved inequality between parameters, exactly.

    Returns (checks run, failed checks).  Power comparisons use integer
    exponentiation so boundary cases stay exact.  Depth-specific checks
    recompute the depth-measure parameters when the report's measure is
    something else.
    """
    checks: list[str] = []
    failed: list[str] = []

    def check(name: str, holds: bool):
        checks.append(name)
        if not holds:
            failed.append(name)

    n = vals["rows"]
    w = vals["columns"]
    if n == 0:
        check("empty-table-all-zero", all(v == 0 for v in vals.values()))
        return tuple(checks), tuple(failed)

    if measure.kind == "depth":
        theta_h, det_h, sep_h = vals["min_test_cost"], vals["det_cost"], vals["separation_cost"]
    else:
        h = depth()
        theta_h = min_test_cost(h, table)[0]
        det_h = det_tree_cost(h, table)[0]
        sep_h = table_separation_cost(h, table)

    check("det>=fixing", vals["det_cost"] >= vals["fixing_cost"])
    if vals["fixing_cost"] == 0:
        check("fixing0=>det0", vals["det_cost"] == 0)
    else:
        assert n > 1, "a fixable non-constant table must have at least two rows"
        check("2^det<=rows^fixing", 2 ** vals["det_cost"] <= n ** vals["fixing_cost"])
    check("det<=test", vals["det_cost"] <= vals["min_test_cost"])
    if not is_constant(table):
        check("k^depth>test", table.k**det_h > theta_h)
    check("fixing<=2*closure-sep", vals["fixing_cost"] <= 2 * vals["closure_separation_cost"])
    check("snd<=det", vals["snd_cost"] <= vals["det_cost"])
    check("snd<=separation", vals["snd_cost"] <= vals["separation_cost"])
    check("rows<=(k*cols)^sep", n <= (table.k * w) ** sep_h)
    check("test<=rows-1", theta_h <= n - 1)
    return tuple(checks), tuple(failed)


def parameter_report(measure: ComplexityMeasure, table: DecisionTable) -> ParameterReport:
    """Compute all parameters with witnesses and self-check the result.

    Witnesses are validated on the spot: the minimal test must be a test,
    each row separator must separate, the tree witnesses must validate
    against the table, and the worst tuple must reproduce the fixing
    cost.  Failures land in ``failed_checks``.
    """
    attr_set_cost, max_attr_cost = table_costs(measure, table)
    theta, test_witness = min_test_cost(measure, table)
    seps = tuple(
        (r, *row_separation_cost(measure, table, r)) for r in table.rows
    )
    separation = max((c for _, c, _ in seps), default=0)
    closure_sep = closure_separation_cost(measure, table)
    fix, worst = fixing_cost(measure, table)
    if measure.decomposable:
        det, det_tree = det_tree_cost(measure, table)
    else:
        det, det_tree = det_tree_cost_bruteforce(measure, table), None
    snd, snd_tree = snd_tree_cost(measure, table)

    vals = {
        "rows": table.n_rows,
        "columns": table.n_cols,
        "attr_set_cost": attr_set_cost,
        "max_attr_cost": max_attr_cost,
        "min_test_cost": theta,
        "separation_cost": separation,
        "closure_separation_cost": closure_sep,
        "fixing_cost": fix,
        "det_cost": det,
        "snd_cost": snd,
    }
    checks, failed = inequality_findings(measure, table, vals)
    checks, failed = list(checks), list(failed)

    def check(name: str, holds: bool):
        checks.append(name)
        if not holds:
            failed.append(name)

    check("test-witness-is-test", is_test(table, test_witness))
    for row, _cost, attrs in seps:
        positions = [table.column_position(a) for a in attrs]
        idx = table.rows.index(row)
        ok = all(
            any(other[p] != row[p] for p in positions)
            for j, other in enumerate(table.rows)
            if j != idx
        )
        check("row-separator-separates", ok)
        if not ok:
            break
    if worst is not None:
        check("worst-tuple-reproduces", fixing_cost_for_tuple(measure, table, worst)[0] == fix)
    if det_tree is not None:
        check("det-witness-validates", bool(validate_deterministic(det_tree, table)))
    if snd_tree is not None:
        check("snd-witness-validates", bool(validate_strongly_nondeterministic(snd_tree, table)))

    return ParameterReport(
        k=table.k,
        measure=measure.describe(),
        rows=table.n_rows,
        columns=table.n_cols,
        attr_set_cost=attr_set_cost,
        max_attr_cost=max_attr_cost,
        min_test_cost=theta,
        separation_cost=separation,
        closure_separation_cost=closure_sep,
        fixing_cost=fix,
        det_cost=det,
        snd_cost=snd,
        test_witness=test_witness,
        row_separators=seps,
        worst_tuple=worst,
        det_tree=det_tree,
        snd_tree=snd_tree,
        checks=tuple(checks),
        failed_checks=tuple(failed),
    )
