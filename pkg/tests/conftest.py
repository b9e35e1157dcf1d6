import numpy as np
import pytest

from zetabounds import zeros as zr


@pytest.fixture(scope="session")
def zl_med():
    """Zeros through t = 2000 (about 1270 of them); a few seconds."""
    return zr.find_zeros(2000.0, 1e-9)


@pytest.fixture(scope="session")
def zl_small():
    """Zeros through t = 300."""
    return zr.find_zeros(300.0, 1e-9)


@pytest.fixture(scope="session")
def zl_deep():
    """Zeros through t = 3500, deep enough for the tail estimates."""
    return zr.find_zeros(3500.0, 1e-9)


@pytest.fixture(scope="session")
def zl_full():
    """Zeros through t = 21900, enough for every acceptance criterion;
    roughly four to five minutes of Hardy-function scanning."""
    import time
    t0 = time.time()
    zl = zr.find_zeros(21900.0, 1e-9)
    elapsed = time.time() - t0
    print(f"\n[zeros to 21900: {len(zl)} found in {elapsed:.0f}s]")
    zl_full_timing["seconds"] = elapsed
    return zl


zl_full_timing = {"seconds": None}
