import numpy as np
import pytest

import taxsalience as ts

# desk-scale calibration targets used across the suite
CALIBRATION = dict(
    mean_income=114500.0,
    mld=0.616,
    lower_trunc=1000.0,
    upper_trunc=2_000_000.0,
    anchor_tau=0.25,
    anchor_s=1.0,
    n_agents=2000,
)

S_GRID = np.linspace(0.05, 1.0, 50)


def calibrated_economy(rho, eps, n_agents=None):
    targets = dict(CALIBRATION)
    if n_agents is not None:
        targets["n_agents"] = n_agents
    return ts.calibrate_lognormal(ts.CalibrationSpec(**targets), eps, rho)


@pytest.fixture(scope="session")
def economies():
    """Calibrated economies, memoized by (rho, eps)."""
    cache = {}

    def get(rho, eps):
        key = (rho, eps)
        if key not in cache:
            cache[key] = calibrated_economy(rho, eps)
        return cache[key]

    return get


@pytest.fixture(scope="session")
def frontiers(economies):
    """Frontier sweeps over the default 50-point salience grid, memoized."""
    cache = {}

    def get(rho, eps):
        key = (rho, eps)
        if key not in cache:
            cache[key] = ts.frontier_sweep(economies(rho, eps), S_GRID)
        return cache[key]

    return get


@pytest.fixture
def small_economy():
    return ts.economy_from_wages(np.linspace(1.0, 3.0, 20), 0.25, 1.0)
