"""k-decision trees: paths, costs, and validation against a table.

A k-decision tree is a rooted tree with at least two nodes.  The root and
the edges leaving it carry no labels; every other non-terminal node
carries an attribute and its outgoing edges carry values from E_k;
terminal nodes carry a decision 0 or 1.  A complete path runs from the
root to a terminal; its word is the attribute sequence of the internal
nodes it passes, and the subtable of a path is the table restricted by
the path's (attribute, value) fixings.

A tree is *deterministic* for a table when a single edge leaves the root,
sibling edge values are pairwise distinct, its attributes are columns of
the table, every row lands on some complete path, and every path's
subtable is empty or constant with the terminal's decision.  A tree is
*strongly nondeterministic* for a non-constant table when all terminals
carry decision 1, its attributes are columns of the table, every 1-row
lands on some path, and every path's subtable is empty or all-1.  Such a
tree is exactly a system of true decision rules covering the 1-rows; the
root may have many edges and duplicate sibling values.

Text format (.tree)::

    (root (f4 (0 (leaf 1)) (1 (f3 (1 (leaf 0)) (0 (leaf 1))))))

``(root child...)`` for the root, ``(f<i> (<value> child)...)`` for
internal nodes, ``(leaf <0|1>)`` for terminals.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

from .tables import (
    Attribute,
    DecisionTable,
    DtError,
    is_constant,
    is_test,
    restrict,
)
from .measures import ComplexityMeasure


class NotApplicable(DtError):
    """The tree notion is undefined for this table (empty or constant)."""


class TreeFormatError(DtError):
    pass


@dataclass(frozen=True)
class Leaf:
    decision: int


@dataclass(frozen=True)
class Node:
    attribute: Attribute
    edges: tuple[tuple[int, "TreeNode"], ...]


TreeNode = Union[Leaf, Node]


@dataclass(frozen=True)
class DecisionTree:
    """A k-decision tree; ``children`` hang off the unlabeled root edges."""

    k: int
    children: tuple[TreeNode, ...]

    def node_count(self) -> int:
        def count(node: TreeNode) -> int:
            if isinstance(node, Leaf):
                return 1
            return 1 + sum(count(c) for _, c in node.edges)

        return 1 + sum(count(c) for c in self.children)


@dataclass(frozen=True)
class CompletePath:
    """A root-to-terminal path: its attribute word, fixings, and decision."""

    word: tuple[Attribute, ...]
    fixings: tuple[tuple[Attribute, int], ...]
    decision: int


def attributes_of(tree: DecisionTree) -> frozenset[Attribute]:
    found: set[Attribute] = set()

    def walk(node: TreeNode):
        if isinstance(node, Node):
            found.add(node.attribute)
            for _, child in node.edges:
                walk(child)

    for child in tree.children:
        walk(child)
    return frozenset(found)


def complete_paths(tree: DecisionTree) -> tuple[CompletePath, ...]:
    """All complete paths, one per terminal, in left-to-right tree order."""
    paths: list[CompletePath] = []

    def walk(node: TreeNode, word, fixings):
        if isinstance(node, Leaf):
            paths.append(CompletePath(tuple(word), tuple(fixings), node.decision))
            return
        for value, child in node.edges:
            walk(child, word + [node.attribute], fixings + [(node.attribute, value)])

    for child in tree.children:
        walk(child, [], [])
    return tuple(paths)


def path_subtable(table: DecisionTable, path: CompletePath) -> DecisionTable:
    return restrict(table, path.fixings)


def tree_cost(measure: ComplexityMeasure, tree: DecisionTree) -> int:
    """Worst complete-path word cost; a bare root-to-terminal path costs 0."""
    return max(measure.cost(p.word) for p in complete_paths(tree))


def structural_problems(tree: DecisionTree) -> list[str]:
    """Violations of the bare k-decision-tree shape, if any."""
    problems: list[str] = []
    if not tree.children:
        problems.append("the root has no outgoing edges; a tree needs at least two nodes")
    if tree.k < 2:
        problems.append(f"alphabet size k must be >= 2, got {tree.k}")

    def walk(node: TreeNode):
        if isinstance(node, Leaf):
            if node.decision not in (0, 1):
                problems.append(f"terminal decision {node.decision!r} is not 0 or 1")
            return
        if not node.edges:
            problems.append(f"attribute node {node.attribute.name} has no outgoing edges")
        for value, child in node.edges:
            if not 0 <= value < tree.k:
                problems.append(
                    f"edge value {value} at {node.attribute.name} is outside E_{tree.k}"
                )
            walk(child)

    for child in tree.children:
        walk(child)
    return problems


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    diagnostics: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok


def _check_attributes(tree: DecisionTree, table: DecisionTable) -> list[str]:
    extra = attributes_of(tree) - table.attributes()
    if extra:
        names = ",".join(sorted(a.name for a in extra))
        return [f"tree tests attributes outside the table's columns: {names}"]
    return []


def _row_on_path(row: tuple[int, ...], table: DecisionTable, path: CompletePath) -> bool:
    return all(row[table.column_position(a)] == v for a, v in path.fixings)


def validate_deterministic(tree: DecisionTree, table: DecisionTable) -> ValidationResult:
    """Check the five deterministic-tree conditions, naming each violation."""
    if table.is_empty:
        raise NotApplicable("deterministic trees are defined for nonempty tables only")
    problems = structural_problems(tree)
    if len(tree.children) != 1:
        problems.append(f"{len(tree.children)} edges leave the root; exactly one is allowed")

    def walk(node: TreeNode):
        if isinstance(node, Leaf):
            return
        values = [v for v, _ in node.edges]
        if len(set(values)) != len(values):
            problems.append(f"duplicate edge values {values} at node {node.attribute.name}")
        for _, child in node.edges:
            walk(child)

    for child in tree.children:
        walk(child)
    problems += _check_attributes(tree, table)
    if problems:
        return ValidationResult(False, tuple(problems))

    paths = complete_paths(tree)
    for row in table.rows:
        if not any(_row_on_path(row, table, p) for p in paths):
            problems.append(f"row {row} reaches no complete path")
    for i, path in enumerate(paths):
        sub = path_subtable(table, path)
        if sub.is_empty:
            continue
        if any(d != path.decision for d in sub.decisions):
            problems.append(
                f"path {i} ends in decision {path.decision} but its subtable "
                f"has rows labeled otherwise"
            )
    ok = not problems
    if ok:
        # any tree valid for the table queries a test of the table
        assert is_test(table, attributes_of(tree)), "validated tree whose attributes are not a test"
    return ValidationResult(ok, tuple(problems))


def validate_strongly_nondeterministic(
    tree: DecisionTree, table: DecisionTable
) -> ValidationResult:
    """Check the strongly nondeterministic tree conditions against a table."""
    if is_constant(table):
        raise NotApplicable(
            "strongly nondeterministic trees are defined for non-constant tables only"
        )
    problems = structural_problems(tree)
    problems += _check_attributes(tree, table)
    paths = complete_paths(tree)
    for p in paths:
        if p.decision != 1:
            problems.append("a terminal node carries decision 0; all must carry 1")
            break
    if problems:
        return ValidationResult(False, tuple(problems))

    for row, d in table.entries():
        if d == 1 and not any(_row_on_path(row, table, p) for p in paths):
            problems.append(f"1-row {row} reaches no complete path")
    for i, path in enumerate(paths):
        sub = path_subtable(table, path)
        if not sub.is_empty and any(d != 1 for d in sub.decisions):
            problems.append(f"path {i} has a subtable with a 0-row")
    ok = not problems
    if ok:
        assert is_test(table, attributes_of(tree)), "validated tree whose attributes are not a test"
    return ValidationResult(ok, tuple(problems))


# ---------------------------------------------------------------------------
# .tree text format


def format_tree(tree: DecisionTree) -> str:
    def fmt(node: TreeNode) -> str:
        if isinstance(node, Leaf):
            return f"(leaf {node.decision})"
        edges = " ".join(f"({v} {fmt(c)})" for v, c in node.edges)
        return f"({node.attribute.name} {edges})"

    return "(root " + " ".join(fmt(c) for c in tree.children) + ")"


def _tokenize(text: str) -> Iterator[str]:
    for tok in text.replace("(", " ( ").replace(")", " ) ").split():
        yield tok


def parse_tree(text: str, k: int = 2) -> DecisionTree:
    tokens = list(_tokenize(text))
    pos = 0

    def expect(tok: str):
        nonlocal pos
        if pos >= len(tokens) or tokens[pos] != tok:
            got = tokens[pos] if pos < len(tokens) else "end of input"
            raise TreeFormatError(f"expected {tok!r}, got {got!r}")
        pos += 1

    def parse_node() -> TreeNode:
        nonlocal pos
        expect("(")
        if pos >= len(tokens):
            raise TreeFormatError("unterminated node")
        head = tokens[pos]
        pos += 1
        if head == "leaf":
            decision = int(tokens[pos])
            pos += 1
            expect(")")
            return Leaf(decision)
        attr = Attribute.parse(head)
        edges = []
        while pos < len(tokens) and tokens[pos] == "(":
            pos += 1
            value = int(tokens[pos])
            pos += 1
            child = parse_node()
            expect(")")
            edges.append((value, child))
        expect(")")
        return Node(attr, tuple(edges))

    expect("(")
    expect("root")
    children = []
    while pos < len(tokens) and tokens[pos] == "(":
        children.append(parse_node())
    expect(")")
    if pos != len(tokens):
        raise TreeFormatError(f"trailing input after tree: {tokens[pos:]}")
    return DecisionTree(k, tuple(children))


def load_tree(path, k: int = 2) -> DecisionTree:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_tree(fh.read(), k)


def save_tree(tree: DecisionTree, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_tree(tree) + "\n")
