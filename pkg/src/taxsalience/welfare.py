"""Welfare, its equality-efficiency split, and closed-form derivatives.

Social welfare is the mean of an isoelastic transform of net
consumption. It factors into efficiency (mean net consumption) and
equality (the equally-distributed equivalent divided by the mean).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .behavior import Policy, allocation
from .economy import Economy
from .errors import NonPositiveConsumption, NonPositiveParameter


def outer_utility(c, rho):
    """Isoelastic transform: log for rho == 1, else c^(1-rho)/(1-rho)."""
    if rho <= 0.0:
        raise NonPositiveParameter("curvature must be positive")
    arr = np.asarray(c, dtype=float)
    if np.any(arr <= 0.0):
        raise NonPositiveConsumption("outer utility needs positive consumption")
    if rho == 1.0:
        out = np.log(arr)
    else:
        out = arr ** (1.0 - rho) / (1.0 - rho)
    return out if isinstance(c, np.ndarray) else float(out)


def outer_utility_inverse(u, rho):
    """Consumption level whose transform equals u."""
    if rho <= 0.0:
        raise NonPositiveParameter("curvature must be positive")
    if rho == 1.0:
        return float(np.exp(u))
    x = (1.0 - rho) * u
    if x <= 0.0:
        raise NonPositiveConsumption("value outside the transform's range")
    return float(x ** (1.0 / (1.0 - rho)))


@dataclass(frozen=True)
class WelfareDecomposition:
    """W = utility of xi; xi = E * mu."""

    W: float    # mean transformed net consumption
    xi: float   # equally-distributed equivalent consumption
    mu: float   # mean net consumption (efficiency)
    E: float    # xi / mu (equality), in (0, 1]


def decompose(economy: Economy, policy: Policy) -> WelfareDecomposition:
    """Welfare and its equality-efficiency factorization at a policy."""
    alloc = allocation(economy, policy)
    c_hat = alloc.c_hat
    mu = float(c_hat.mean())
    rho = economy.rho
    if rho == 1.0:
        W = float(np.log(c_hat).mean())
        xi = float(np.exp(W))
    else:
        W = float((c_hat ** (1.0 - rho)).mean()) / (1.0 - rho)
        xi = ((1.0 - rho) * W) ** (1.0 / (1.0 - rho))
    return WelfareDecomposition(W=W, xi=xi, mu=mu, E=xi / mu)


@dataclass(frozen=True)
class MeanConsumptionPartials:
    """Closed-form partials of mean net consumption in (tau, s)."""

    dmu_ds: float
    dmu_dtau: float
    dmu_dsdtau: float
    dmu_dtaudtau: float


def mean_consumption_partials(economy: Economy, policy: Policy) -> MeanConsumptionPartials:
    eps = economy.epsilon
    s, tau = policy.s, policy.tau
    st = policy.perceived
    r = 1.0 - st
    zbar = economy.mean_wage_power * r ** eps
    dmu_ds = -s * tau ** 2 * eps * zbar / r
    dmu_dtau = -(s ** 2) * tau * eps * zbar / r
    # cross partial: a direct-deadweight term plus the response of
    # dmu_dtau's own base to salience
    dmu_dsdtau = -(eps * s * tau * zbar / r + eps * s * tau * (1.0 - st * eps) * zbar / r ** 2)
    dmu_dtaudtau = -eps * s ** 2 * (1.0 - st * eps) * zbar / r ** 2
    return MeanConsumptionPartials(
        dmu_ds=dmu_ds,
        dmu_dtau=dmu_dtau,
        dmu_dsdtau=dmu_dsdtau,
        dmu_dtaudtau=dmu_dtaudtau,
    )


def welfare_salience_derivative(economy: Economy, policy: Policy) -> float:
    """Closed-form dW/ds at fixed tau:
    eps tau^2 / (1 - s tau) * ((1 - s) mean(g z) - gbar zbar).
    """
    alloc = allocation(economy, policy)
    eps = economy.epsilon
    st = policy.perceived
    gz = float((alloc.g * alloc.z).mean())
    return eps * policy.tau ** 2 / (1.0 - st) * ((1.0 - policy.s) * gz - alloc.gbar * alloc.zbar)


def equality_partials(economy: Economy, policy: Policy, h=1e-6):
    """(dE/ds, dE/dtau) by central finite differences with relative step h."""
    def eq(tau, s):
        return decompose(economy, Policy(tau=tau, s=s)).E

    hs = h * max(abs(policy.s), 1e-2)
    ht = h * max(abs(policy.tau), 1e-2)
    s_hi = min(policy.s + hs, 1.0)
    s_lo = s_hi - 2.0 * hs
    dE_ds = (eq(policy.tau, s_hi) - eq(policy.tau, s_lo)) / (2.0 * hs)
    t_lo = max(policy.tau - ht, 0.0)
    t_hi = t_lo + 2.0 * ht
    dE_dtau = (eq(t_hi, policy.s) - eq(t_lo, policy.s)) / (2.0 * ht)
    return dE_ds, dE_dtau


@dataclass(frozen=True, eq=False)
class LorenzCurve:
    """Cumulative shares at population quantiles, starting from (0, 0)."""

    quantiles: np.ndarray
    shares: np.ndarray


def lorenz(values) -> LorenzCurve:
    """Lorenz curve of a positive, equal-mass sample (sorted internally)."""
    v = np.sort(np.asarray(values, dtype=float))
    if v.size == 0:
        raise NonPositiveParameter("need at least one value")
    if np.any(v <= 0.0):
        raise NonPositiveConsumption("Lorenz curve needs positive values")
    n = v.size
    q = np.concatenate(([0.0], (np.arange(n) + 1.0) / n))
    shares = np.concatenate(([0.0], np.cumsum(v) / v.sum()))
    return LorenzCurve(quantiles=q, shares=shares)
