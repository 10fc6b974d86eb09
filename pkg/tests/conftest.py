import pytest

from latticespec.polytope import LatticePolytope
from latticespec.weights import WeightSystem, construct_simplex, enumerate_reflexive

# filled by test_acceptance.py, printed at the end of the run
ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_RESULTS):
        ok, desc = ACCEPTANCE_RESULTS[k]
        terminalreporter.write_line(f"criterion {k:>2}: {'PASS' if ok else 'FAIL'}  {desc}")


@pytest.fixture
def triangle():
    return LatticePolytope.from_vertices([(1, 0), (0, 1), (-1, -1)])


@pytest.fixture
def square():
    return LatticePolytope.from_vertices([(1, 1), (1, -1), (-1, 1), (-1, -1)])


@pytest.fixture
def simplex_113():
    return LatticePolytope.from_vertices([(1, 0), (-1, 3), (0, -1)])


@pytest.fixture
def simplex_1223():
    return LatticePolytope.from_vertices([(1, 0, 0), (0, 1, 0), (0, 0, 1), (-2, -2, -3)])


@pytest.fixture(scope="session")
def reflexive_systems():
    return {n: enumerate_reflexive(n) for n in (2, 3, 4)}


@pytest.fixture(scope="session")
def constructed(reflexive_systems):
    """Reduced reflexive weight system -> constructed simplex, dims 2-4."""
    return {w: construct_simplex(w) for n in (2, 3, 4) for w in reflexive_systems[n]}


@pytest.fixture
def W():
    return lambda *q: WeightSystem(q)
