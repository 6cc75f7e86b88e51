import numpy as np
import pytest
from hypothesis import settings

from mnesor import DiscreteFuzzySet

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


@pytest.fixture
def rng():
    return np.random.default_rng(20261018)


def random_discrete(rng, universe=("a", "b", "c", "d", "e")):
    values = rng.random(len(universe))
    values[rng.random(len(universe)) < 0.15] = 0.0
    values[rng.random(len(universe)) < 0.15] = 1.0
    return DiscreteFuzzySet(universe, values)


ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, f"rep_{rep.when}", rep)
