import pytest

from hierdepth.curve import CurveSpec, affine_points
from hierdepth.code import EvaluationSet
from hierdepth.gf import FieldSpec


@pytest.fixture(scope="session")
def f5():
    return FieldSpec(5)


@pytest.fixture(scope="session")
def example_curve(f5):
    return CurveSpec.elliptic(f5, 1, 1)


@pytest.fixture(scope="session")
def example_gamma(example_curve):
    return EvaluationSet(example_curve, tuple(affine_points(example_curve)))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
