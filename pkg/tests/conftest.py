import pytest

from macroatlas.core import Params
from macroatlas.graph import canonical_graph


@pytest.fixture
def params():
    return Params()


@pytest.fixture(scope="session")
def graph():
    return canonical_graph()


def bisect(f, lo, hi, iters=200, tol=1e-12):
    """Plain midpoint bisection, kept here as the independent 1D oracle."""
    flo = f(lo)
    assert flo * f(hi) <= 0, "oracle bracket must straddle the root"
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if abs(fm) < tol or hi - lo < 1e-15:
            return mid
        if flo * fm <= 0:
            hi = mid
        else:
            lo, flo = mid, fm
    return 0.5 * (lo + hi)
