"""Independent brute-force oracles for the tests.

Everything here recomputes solver answers from first principles with the
dumbest correct method available: full subset enumeration over plain
row lists, recursive min-max over whole path words, and
closure-by-definition with relabelings ranging over all value tuples.
Nothing imports solver internals beyond table/measure primitives, so a
solver bug cannot hide in its own oracle.
"""

from itertools import combinations, product

from dtlab.tables import canonical_key, is_constant, validate


def subsets_by_cost(measure, table, card_first=False):
    """All column subsets as (cost, key, attrs) in deterministic order."""
    cols = sorted(table.columns, key=lambda a: a.index)
    out = []
    for r in range(len(cols) + 1):
        for attrs in combinations(cols, r):
            cost = measure.set_cost(attrs)
            idx = tuple(a.index for a in attrs)
            key = (cost, len(attrs), idx) if card_first else (cost, idx)
            out.append((key, attrs))
    out.sort()
    return out


def brute_min_subset(measure, table, ok, card_first=False):
    for key, attrs in subsets_by_cost(measure, table, card_first):
        if ok(attrs):
            return key[0], attrs
    raise AssertionError("no subset satisfied the oracle predicate")


def brute_test_cost(measure, table):
    if is_constant(table):
        return 0, ()

    def ok(attrs):
        pos = [table.column_position(a) for a in attrs]
        for a, da in table.entries():
            for b, db in table.entries():
                if da == 0 and db == 1 and all(a[p] == b[p] for p in pos):
                    return False
        return True

    return brute_min_subset(measure, table, ok)


def brute_row_separation(measure, table, row, card_first=False):
    row = tuple(row)

    def ok(attrs):
        pos = [table.column_position(a) for a in attrs]
        return all(
            any(other[p] != row[p] for p in pos)
            for other in table.rows
            if other != row
        )

    return brute_min_subset(measure, table, ok, card_first)


def brute_table_separation(measure, table):
    if table.is_empty:
        return 0
    return max(brute_row_separation(measure, table, r)[0] for r in table.rows)


def project(table, keep_attrs):
    """Independent column projection with minimum-decision merging."""
    keep = [table.column_position(a) for a in keep_attrs]
    merged = {}
    for row, d in table.entries():
        proj = tuple(row[p] for p in keep)
        merged[proj] = min(merged.get(proj, 1), d)
    if not keep:
        return validate(table.k, (), ())
    return validate(
        table.k, [table.columns[p] for p in keep], sorted(merged.items())
    )


def brute_closure_separation(measure, table):
    best = 0
    cols = list(table.columns)
    for r in range(len(cols) + 1):
        for keep in combinations(cols, r):
            best = max(best, brute_table_separation(measure, project(table, keep)))
    return best


def brute_fixing_for_tuple(measure, table, values):
    if is_constant(table):
        return 0, ()
    values = tuple(values)

    def ok(attrs):
        pos = [table.column_position(a) for a in attrs]
        survivors = [
            d
            for row, d in table.entries()
            if all(row[p] == values[p] for p in pos)
        ]
        return len(set(survivors)) <= 1

    return brute_min_subset(measure, table, ok)


def brute_fixing(measure, table):
    if is_constant(table):
        return 0
    return max(
        brute_fixing_for_tuple(measure, table, values)[0]
        for values in product(range(table.k), repeat=table.n_cols)
    )


def brute_det_cost(measure, table):
    """Min over deterministic trees, evaluating whole path words."""
    if table.is_empty:
        return 0

    def solve(rows, avail, word):
        decisions = {d for _, d in rows}
        if len(decisions) <= 1:
            return measure.cost(word)
        best = None
        for a in avail:
            p = table.column_position(a)
            groups = {}
            for row, d in rows:
                groups.setdefault(row[p], []).append((row, d))
            worst = max(
                solve(g, [b for b in avail if b != a], word + (a,))
                for g in groups.values()
            )
            if best is None or worst < best:
                best = worst
        assert best is not None
        return best

    return solve(list(table.entries()), list(table.columns), ())


def brute_rule_cost(measure, table, row):
    row = tuple(row)

    def ok(attrs):
        pos = [table.column_position(a) for a in attrs]
        return all(
            d == 1
            for other, d in table.entries()
            if all(other[p] == row[p] for p in pos)
        )

    return brute_min_subset(measure, table, ok)


def brute_snd_cost(measure, table):
    if is_constant(table):
        return 0
    return max(
        brute_rule_cost(measure, table, row)[0]
        for row, d in table.entries()
        if d == 1
    )


def brute_closure_keys(table):
    """Closure by definition: relabelings over all value tuples.

    Feasible only for tiny tables (the relabeling space is
    2^(k^columns) per retained column set).
    """
    keys = set()
    cols = list(table.columns)
    for r in range(len(cols) + 1):
        for keep in combinations(cols, r):
            proj = project(table, keep)
            m = len(keep)
            domain = sorted(product(range(table.k), repeat=m))
            for bits in product((0, 1), repeat=len(domain)):
                nu = dict(zip(domain, bits))
                relabeled = validate(
                    table.k,
                    proj.columns,
                    [(row, nu[row]) for row in proj.rows],
                )
                keys.add(canonical_key(relabeled))
    return keys
