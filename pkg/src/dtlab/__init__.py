"""Exact computation for decision tables with 0/1 decisions.

Tables, complexity measures, closure operations, decision-tree solvers
with witnesses, extremal constructions, growth-function exploration over
enumerated closures, and machine-verification suites.  Everything is
exact integer arithmetic; nothing here approximates.
"""

from .tables import (
    Attribute,
    DecisionTable,
    DtError,
    canonical_key,
    empty_table,
    is_constant,
    is_test,
    load_table,
    parse_table,
    restrict,
    save_table,
    validate,
)
from .measures import (
    ComplexityMeasure,
    additive,
    check_axioms,
    depth,
    load_measure,
    max_of,
    max_weight,
    opaque,
    parse_measure,
    sum_of,
    table_costs,
)
from .closure import (
    ClosureLimits,
    enumerate_closure,
    is_critical,
    relabel,
    remove_columns,
)
from .trees import (
    DecisionTree,
    Leaf,
    Node,
    complete_paths,
    format_tree,
    parse_tree,
    tree_cost,
    validate_deterministic,
    validate_strongly_nondeterministic,
)
from .solvers import (
    ParameterReport,
    det_tree_cost,
    det_tree_cost_bruteforce,
    fixing_cost,
    fixing_cost_for_tuple,
    min_test_cost,
    parameter_report,
    row_separation_cost,
    snd_tree_cost,
    closure_separation_cost,
    table_separation_cost,
)
from .explorer import StepFunction, class_stats, growth

__all__ = [name for name in dir() if not name.startswith("_")]
