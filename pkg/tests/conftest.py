from fractions import Fraction as F

import pytest

from toricbordism.geometry.polytope import canonicalize
from toricbordism.library import load


def simplex(n, scale=1):
    pts = [tuple([0] * n)] + [tuple(scale * int(i == j) for j in range(n)) for i in range(n)]
    return canonicalize(pts)


def box(*widths):
    import itertools
    return canonicalize(list(itertools.product(*[(0, w) for w in widths])))


@pytest.fixture(scope="session")
def fixtures():
    names = ("segment", "square", "simplex3", "simplex3_112", "truncated_simplex3",
             "pyramid", "cube", "p2_identity", "segment_identity", "flop")
    return {n: load(n) for n in names}


@pytest.fixture
def D2():
    return simplex(2)


@pytest.fixture
def D3():
    return simplex(3)


@pytest.fixture
def square():
    return box(1, 1)


@pytest.fixture
def seg02():
    return canonicalize([(0,), (2,)])


@pytest.fixture
def truncated_D3(D3):
    from toricbordism.geometry.polytope import slab
    return slab(D3, (0, 1, 1), F(1, 4), F(3, 4))


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not any("test_acceptance" in str(r.nodeid) for k in ("passed", "failed")
                              for r in terminalreporter.stats.get(k, [])):
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
