import os

import hypothesis
import pytest
from hypothesis import strategies as st

from dtlab.measures import additive, depth, max_of, max_weight, sum_of
from dtlab.tables import validate

hypothesis.settings.register_profile(
    "default", max_examples=60, deadline=None
)
hypothesis.settings.register_profile(
    "thorough", max_examples=400, deadline=None
)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


EXAMPLE6_ROWS = [
    ((1, 1, 1), 0),
    ((0, 1, 1), 0),
    ((1, 1, 0), 1),
    ((0, 0, 1), 1),
    ((1, 0, 0), 1),
    ((0, 0, 0), 1),
]

OR_IMAGE_ROWS = [
    ((1, 1), 1),
    ((0, 1), 1),
    ((1, 0), 1),
    ((0, 0), 0),
]


@pytest.fixture
def example6():
    """Six-row worked example over columns f2, f4, f3."""
    return validate(2, [2, 4, 3], EXAMPLE6_ROWS)


@pytest.fixture
def or_image():
    """Its four-row image under dropping f4 and relabeling with OR."""
    return validate(2, [2, 3], OR_IMAGE_ROWS)


@pytest.fixture
def weighted():
    """The running additive weighting w(f2)=1, w(f4)=3, w(f3)=2."""
    return additive({2: 1, 4: 3, 3: 2})


@st.composite
def tables_st(draw, max_k=3, max_cols=3, max_rows=6, min_rows=1):
    k = draw(st.integers(2, max_k))
    cols = draw(st.integers(1, max_cols))
    space = [
        tuple((i // k**p) % k for p in range(cols)) for i in range(k**cols)
    ]
    rows = draw(
        st.lists(
            st.sampled_from(space),
            unique=True,
            min_size=min_rows,
            max_size=min(max_rows, len(space)),
        )
    )
    decisions = draw(
        st.lists(st.integers(0, 1), min_size=len(rows), max_size=len(rows))
    )
    return validate(k, range(cols), zip(rows, decisions))


def measures_st(max_attr=6):
    weights = st.dictionaries(
        st.integers(0, max_attr - 1), st.integers(1, 5), max_size=max_attr
    )
    prim = st.one_of(
        st.just(depth()),
        st.builds(additive, weights, st.integers(1, 3)),
        st.builds(max_weight, weights, st.integers(1, 3)),
    )
    combo = st.one_of(
        st.builds(lambda a, b: sum_of(a, b), prim, prim),
        st.builds(lambda a, b: max_of(a, b), prim, prim),
    )
    return st.one_of(prim, combo)
