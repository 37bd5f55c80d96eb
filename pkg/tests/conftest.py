import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from mtcheck.cyclotomic import CycNumber, euler_phi
from mtcheck.modular_data import CATALOG_NAMES, catalog

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "scripts"))

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

ORDERS = [1, 2, 3, 4, 5, 8, 12, 15, 24]

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def cyc_numbers(draw, orders=ORDERS):
    m = draw(st.sampled_from(orders))
    coeffs = draw(st.lists(small_fractions, min_size=euler_phi(m), max_size=euler_phi(m)))
    return CycNumber(m, coeffs)


@st.composite
def same_order_triples(draw):
    m = draw(st.sampled_from(ORDERS))
    return tuple(draw(cyc_numbers(orders=[m])) for _ in range(3))


@pytest.fixture(params=CATALOG_NAMES)
def md(request):
    return catalog(request.param)


ACCEPTANCE_RESULTS: dict = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        for key, value in report.user_properties:
            if key == "criterion":
                ACCEPTANCE_RESULTS[value] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(ACCEPTANCE_RESULTS, key=lambda c: int(c.split(":")[0][2:])):
        status = "PASS" if ACCEPTANCE_RESULTS[crit] == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] {crit}")
