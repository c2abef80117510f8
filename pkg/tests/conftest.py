"""Shared fixtures and strategies for the test suite."""

from __future__ import annotations

import math
import time

import pytest
from hypothesis import strategies as st

from cktrig.errors import ExistenceError
from cktrig.orthogonal import OrthoTriangle, solve_ortho

# Geometry labels: exact zero is a first-class case (flat limits), while
# nonzero labels stay bounded away from the float-underflow zone where
# label-scaled differences drop below rounding noise.
bounded_labels = st.one_of(
    st.just(0.0),
    st.floats(min_value=0.01, max_value=4.0),
    st.floats(min_value=-4.0, max_value=-0.01),
)


def sample_ortho(g, rng) -> OrthoTriangle:
    """One random valid orthogonal triangle, drawn at the curvature scale.

    Seeds the completion with a (b, C) pair — always a determinate case —
    and rejects draws outside the geometry's existence region (e.g. the
    sine-equation bound of doubly negative labels).
    """
    for _ in range(200):
        b = rng.uniform(0.05, 2.0)
        big_c = rng.uniform(0.05, 1.4)
        if g.k1 > 0.0:
            b = min(b, 0.85 * math.pi / (2.0 * math.sqrt(g.k1)))
        elif g.k1 < -1.0:
            b /= math.sqrt(-g.k1)
        if g.k2 > 0.0:
            big_c = min(big_c, 0.85 * math.pi / (2.0 * math.sqrt(g.k2)))
        elif g.k2 < -1.0:
            big_c /= math.sqrt(-g.k2)
        try:
            return solve_ortho(g, b=b, C=big_c)
        except ExistenceError:
            continue
    raise AssertionError(f"no valid orthogonal draw found for {g}")


def pytest_configure(config):
    config._suite_start_time = time.monotonic()


def pytest_collection_modifyitems(session, config, items):
    # The acceptance gate runs last so its runtime budget covers the whole
    # session (stable sort: everything else keeps its order).
    items.sort(key=lambda item: str(item.fspath).endswith("test_acceptance.py"))


@pytest.fixture(scope="session")
def suite_start_time(request) -> float:
    """Wall-clock start of the whole test session (for runtime budgets)."""
    return request.config._suite_start_time
