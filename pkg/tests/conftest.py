import os

import pytest
from hypothesis import HealthCheck, settings

from semiquiver.canonical import canonical_algebra
from semiquiver.quiver import BoundQuiver, PathElement, Quiver

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

ACCEPTANCE_RESULTS: dict = {}


def kronecker_quiver():
    return Quiver(["1", "2"], [("a", "1", "2"), ("b", "1", "2")])


def a3_with_relation():
    q = Quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")])
    return BoundQuiver(q, [PathElement.from_path(q.path("a", "b"))])


@pytest.fixture
def kronecker():
    return BoundQuiver(kronecker_quiver())


@pytest.fixture
def a3rel():
    return a3_with_relation()


@pytest.fixture(scope="session")
def can222():
    return canonical_algebra((2, 2, 2), (2,))


@pytest.fixture(scope="session")
def can2222():
    return canonical_algebra((2, 2, 2, 2), (2, 3))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.write_sep("=", "acceptance criteria")
        for k in sorted(ACCEPTANCE_RESULTS):
            ok, detail = ACCEPTANCE_RESULTS[k]
            terminalreporter.write_line(f"CRITERION {k}: {'PASS' if ok else 'FAIL'}  {detail}")
