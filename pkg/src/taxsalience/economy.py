"""Populations of agents and lognormal calibration.

An Economy is an immutable collection of N equal-mass agents described
by strictly increasing positive wages, plus the two structural
parameters: the labor supply elasticity and the curvature of the
planner's outer utility.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.stats import norm

from .errors import (
    InfeasibleCalibration,
    NonMonotoneWages,
    NonPositiveParameter,
    NonPositiveWage,
)


@dataclass(frozen=True)
class Economy:
    """Immutable agent population with structural parameters.

    wages: strictly increasing positive wage per agent (equal mass each).
    epsilon: labor supply elasticity, > 0.
    rho: curvature of the planner's outer utility, > 0 (1 means log).
    """

    wages: tuple
    epsilon: float
    rho: float

    def __post_init__(self):
        if self.epsilon <= 0.0:
            raise NonPositiveParameter(f"elasticity must be positive, got {self.epsilon}")
        if self.rho <= 0.0:
            raise NonPositiveParameter(f"curvature must be positive, got {self.rho}")
        if len(self.wages) == 0:
            raise NonPositiveWage("wage list is empty")
        w = np.asarray(self.wages, dtype=float)
        if not np.all(np.isfinite(w)) or np.any(w <= 0.0):
            raise NonPositiveWage("all wages must be finite and positive")
        if np.any(np.diff(w) <= 0.0):
            raise NonMonotoneWages("wages must be strictly increasing")
        object.__setattr__(self, "wages", tuple(float(x) for x in w))

    @property
    def n_agents(self) -> int:
        return len(self.wages)

    @property
    def is_degenerate(self) -> bool:
        """Single-agent populations break redistribution assumptions."""
        return len(self.wages) < 2

    @cached_property
    def wage_powers(self) -> np.ndarray:
        """w_i^(1+epsilon), ascending; read-only array cached per instance."""
        a = np.asarray(self.wages) ** (1.0 + self.epsilon)
        a.setflags(write=False)
        return a

    @cached_property
    def mean_wage_power(self) -> float:
        return float(self.wage_powers.mean())


def economy_from_wages(wages, epsilon, rho) -> Economy:
    """Build an Economy from an iterable of wages with full validation."""
    return Economy(tuple(float(w) for w in wages), float(epsilon), float(rho))


@dataclass(frozen=True)
class CalibrationSpec:
    """Targets for a truncated-lognormal income calibration.

    mean_income and mld describe the underlying (untruncated) lognormal;
    incomes are anchored at the observed policy (anchor_tau, anchor_s)
    and truncated to [lower_trunc, upper_trunc].
    """

    mean_income: float
    mld: float
    lower_trunc: float
    upper_trunc: float
    anchor_tau: float
    anchor_s: float
    n_agents: int

    def __post_init__(self):
        if self.mean_income <= 0.0 or self.mld <= 0.0:
            raise NonPositiveParameter("mean income and MLD must be positive")
        if not (0.0 < self.lower_trunc < self.upper_trunc):
            raise InfeasibleCalibration("need 0 < lower_trunc < upper_trunc")
        if not (self.lower_trunc < self.mean_income < self.upper_trunc):
            raise InfeasibleCalibration("mean income must lie inside the truncation window")
        if self.anchor_tau < 0.0 or not (0.0 < self.anchor_s <= 1.0):
            raise NonPositiveParameter("anchor policy out of range")
        if self.anchor_s * self.anchor_tau >= 1.0:
            raise InfeasibleCalibration("anchor perceived rate must be below one")
        if self.n_agents < 1:
            raise NonPositiveParameter("need at least one agent")


def lognormal_parameters(mean_income, mld):
    """(mu, sigma) of the lognormal with the given mean and mean log deviation.

    For a lognormal, MLD = ln(mean) - mean(ln) = sigma^2 / 2, so
    sigma = sqrt(2 * MLD) and mu = ln(mean) - MLD.
    """
    if mean_income <= 0.0 or mld <= 0.0:
        raise NonPositiveParameter("mean income and MLD must be positive")
    sigma = math.sqrt(2.0 * mld)
    mu = math.log(mean_income) - mld
    return mu, sigma


def calibrate_lognormal(spec: CalibrationSpec, epsilon, rho) -> Economy:
    """Economy whose anchored incomes follow a clamped lognormal quantile grid.

    Incomes are drawn at midpoint quantiles (k - 1/2)/N of the lognormal,
    clamped to the truncation window, and nudged upward by a relative
    1e-12 per tied node so the implied wages stay strictly increasing.
    Wages are then inverted from the behavioral income rule at the
    anchor policy.
    """
    mu, sigma = lognormal_parameters(spec.mean_income, spec.mld)
    n = spec.n_agents
    q = (np.arange(n) + 0.5) / n
    z = np.exp(mu + sigma * norm.ppf(q))
    z = np.clip(z, spec.lower_trunc, spec.upper_trunc)
    for k in range(1, n):
        if z[k] <= z[k - 1]:
            z[k] = z[k - 1] * (1.0 + 1e-12)
    retained = 1.0 - spec.anchor_s * spec.anchor_tau
    wages = (z / retained ** epsilon) ** (1.0 / (1.0 + epsilon))
    return Economy(tuple(wages), float(epsilon), float(rho))
