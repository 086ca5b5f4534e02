from fractions import Fraction as F

import pytest

from superkac.classify import LocalFactor
from superkac.coeffalg import Point, ZFunctional
from superkac.rootdata import AlgebraId, Weight

P0 = Point((0,))
P1 = Point((1,))


def th(vals: dict, n: int, r: int = 1) -> ZFunctional:
    return ZFunctional.make(r, n, {(k,) if isinstance(k, int) else k: F(v) for k, v in vals.items()})


def ev(h, z, p=P0) -> LocalFactor:
    return LocalFactor.evaluation(p, Weight((h,), F(z)))


def kac(vals: dict, n: int, vlabel=(0,), p=P0) -> LocalFactor:
    return LocalFactor.kac(p, th(vals, n, p.r), vlabel)


@pytest.fixture(scope="session")
def sl12():
    return AlgebraId.sl(1, 2)


@pytest.fixture(scope="session")
def g12(sl12):
    from superkac.realize import build_superalgebra
    return build_superalgebra(sl12)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for n in sorted(lines):
            terminalreporter.write_line(lines[n])
