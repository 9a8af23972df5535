import json
import os
from pathlib import Path

import numpy as np
import pytest
from hypothesis import HealthCheck, settings, strategies as st

from su2particle import AlgebraElement, ComplexRational, GroupPolynomial, exp_su2
from su2particle.rational import parse_fraction

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

DATA = Path(__file__).parent / "data" / "oracle_values.json"


@pytest.fixture(scope="session")
def frozen():
    return json.loads(DATA.read_text())


def poly_from_terms(terms) -> GroupPolynomial:
    return GroupPolynomial({tuple(t["m"]): ComplexRational(parse_fraction(t["re"]), parse_fraction(t["im"]))
                            for t in terms})


def random_group_point(rng):
    return exp_su2(AlgebraElement(tuple(rng.normal(size=3) * 2.0)))


# -- hypothesis strategies ---------------------------------------------------------

small = st.integers(min_value=-3, max_value=3)
coefficients = st.builds(ComplexRational, small, small)
monomials = st.tuples(*(st.integers(min_value=0, max_value=2) for _ in range(4)))
polynomials = st.dictionaries(monomials, coefficients, max_size=4).map(GroupPolynomial)
algebra = st.tuples(*(st.floats(min_value=-4, max_value=4, allow_nan=False) for _ in range(3))).map(
    AlgebraElement)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


# -- acceptance reporting -----------------------------------------------------------

_CRITERIA: dict = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    mark = _CRITERIA.get(report.nodeid)
    if mark is not None:
        mark["outcome"] = "PASS" if report.passed else "FAIL"


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            _CRITERIA[item.nodeid] = {"id": m.args[0], "text": m.args[1], "outcome": "NOT RUN"}


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for mark in sorted(_CRITERIA.values(), key=lambda m: str(m["id"])):
        terminalreporter.write_line(f"{mark['outcome']:7s} criterion {mark['id']}: {mark['text']}")
