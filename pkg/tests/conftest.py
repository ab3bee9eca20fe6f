import pytest

from cutcomplex import cut_complex, shelling_order, squared_cycle, verify_shelling


@pytest.fixture(scope="session")
def verified_orders():
    """(complex, order, report) for the 3-cut complexes of squared cycles, n = 9..13."""
    out = {}
    for n in range(9, 14):
        cx = cut_complex(squared_cycle(n), 3)
        order = shelling_order(n)
        out[n] = (cx, order, verify_shelling(cx, order))
    return out
