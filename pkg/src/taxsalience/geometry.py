"""Geometry of the equality-efficiency trade-off.

Tools for moving along iso-equality and iso-efficiency curves in the
(tau, s) plane, pricing equality in units of mean consumption, and
splitting the salience effect on frontier equality into substitution
and income parts via a compensated thought experiment.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .behavior import Policy
from .economy import Economy
from .errors import (
    DecompositionMismatch,
    DomainViolation,
    EqualityOutOfRange,
    PathLeavesAdmissibleRegion,
)
from .optimizer import admissible_tau_upper, s_optimal_tax
from .solvers import bisect_root, golden_section_max
from .welfare import decompose


def _equality(economy, tau, s):
    return decompose(economy, Policy(tau=tau, s=s)).E


def equality_range(economy: Economy, s):
    """(low, high) of attainable equality at salience s over admissible taxes."""
    hi_tau = admissible_tau_upper(economy, s)
    return _equality(economy, 0.0, s), _equality(economy, hi_tau, s)


@dataclass(frozen=True)
class FrontierPoint:
    """Cheapest policy reaching a target equality at given salience."""

    E: float
    s: float
    tau_check: float       # tax reaching the target
    mu_check: float        # mean net consumption there
    p_E: float             # marginal cost of equality, (-dmu/dtau)/(dE/dtau)


def tau_for_equality(economy: Economy, E_target, s, tol=1e-10) -> FrontierPoint:
    """Invert equality in tau at fixed salience by bisection.

    Equality rises strictly with the tax on the admissible range, so the
    target is reachable iff it lies between the zero-tax and bound
    values (EqualityOutOfRange otherwise).
    """
    if not (0.0 < s <= 1.0):
        raise DomainViolation(f"salience must lie in (0, 1], got {s}")
    lo_E, hi_E = equality_range(economy, s)
    if not (lo_E <= E_target <= hi_E):
        raise EqualityOutOfRange(
            f"target {E_target:g} outside attainable [{lo_E:g}, {hi_E:g}] at s={s:g}"
        )
    hi_tau = admissible_tau_upper(economy, s)
    tau_check = bisect_root(
        lambda t: _equality(economy, t, s) - E_target, 0.0, hi_tau, tol=tol
    )
    return FrontierPoint(
        E=E_target,
        s=s,
        tau_check=tau_check,
        mu_check=decompose(economy, Policy(tau=tau_check, s=s)).mu,
        p_E=_price_of_equality(economy, tau_check, s),
    )


def _dmu_dtau(economy, tau, s):
    eps = economy.epsilon
    zbar = economy.mean_wage_power * (1.0 - s * tau) ** eps
    return -(s ** 2) * tau * eps * zbar / (1.0 - s * tau)


def _dE_dtau(economy, tau, s, h=1e-6):
    ht = h * max(tau, 1e-2)
    lo = max(tau - ht, 0.0)
    hi = lo + 2.0 * ht
    return (_equality(economy, hi, s) - _equality(economy, lo, s)) / (2.0 * ht)


def _price_of_equality(economy, tau, s):
    return -_dmu_dtau(economy, tau, s) / _dE_dtau(economy, tau, s)


def price_of_equality(economy: Economy, E_target, s, tol=1e-10) -> float:
    """Marginal efficiency cost of equality at the policy reaching E_target."""
    return tau_for_equality(economy, E_target, s, tol=tol).p_E


def price_of_equality_derivative(economy: Economy, E_target, s, h=1e-3) -> float:
    """d p_E / ds along the iso-equality curve, by central difference."""
    hi = min(s + h, 1.0)
    lo = hi - 2.0 * h
    p_hi = tau_for_equality(economy, E_target, hi).p_E
    p_lo = tau_for_equality(economy, E_target, lo).p_E
    return (p_hi - p_lo) / (2.0 * h)


def iso_equality_component_slopes(economy: Economy, E_target, s, h=1e-3):
    """Slopes in s of the cost (-dmu/dtau) and benefit (dE/dtau) of taxation
    along the iso-equality curve. The cost rises with salience while the
    benefit falls, which is what pushes the price of equality up.
    """
    out = []
    for side in (min(s + h, 1.0), min(s + h, 1.0) - 2.0 * h):
        t = tau_for_equality(economy, E_target, side).tau_check
        out.append((-_dmu_dtau(economy, t, side), _dE_dtau(economy, t, side)))
    (cost_hi, ben_hi), (cost_lo, ben_lo) = out
    return (cost_hi - cost_lo) / (2.0 * h), (ben_hi - ben_lo) / (2.0 * h)


@dataclass(frozen=True)
class IsoEqualityPoint:
    s: float
    tau_numeric: float
    tau_analytic: float


def iso_equality_path(economy: Economy, E_target, s0, s1, n_steps=10):
    """Trace the iso-equality curve from s0 to s1.

    tau_numeric re-inverts equality at each step; tau_analytic follows
    the closed-form solution of the iso-equality slope equation
    dtau/ds = eps tau^2, namely tau0 / (1 - eps tau0 (s - s0)).
    Raises PathLeavesAdmissibleRegion if any step exits the admissible
    tax range.
    """
    if s0 == s1:
        s_values = np.array([s0])
    else:
        s_values = np.linspace(s0, s1, n_steps + 1)
    eps = economy.epsilon
    tau0 = tau_for_equality(economy, E_target, s0).tau_check
    points = []
    for s in s_values:
        s = float(s)
        denom = 1.0 - eps * tau0 * (s - s0)
        if denom <= 0.0:
            raise PathLeavesAdmissibleRegion(f"analytic path blows up before s={s:g}")
        tau_analytic = tau0 / denom
        if tau_analytic >= admissible_tau_upper(economy, s) + 1e-9:
            raise PathLeavesAdmissibleRegion(
                f"path exits the admissible tax range at s={s:g}"
            )
        try:
            tau_numeric = tau_for_equality(economy, E_target, s, tol=1e-12).tau_check
        except EqualityOutOfRange as exc:
            raise PathLeavesAdmissibleRegion(str(exc)) from exc
        points.append(IsoEqualityPoint(s=s, tau_numeric=tau_numeric, tau_analytic=tau_analytic))
    return points


def iso_efficiency_path(economy: Economy, mu_target, s_values):
    """Taxes holding mean net consumption fixed across salience levels.

    Mean net consumption depends on the policy only through the
    perceived rate, so the curve is tau = C / s with the perceived rate
    C pinned down by the target. Returns a list of (s, tau) pairs.
    """
    eps = economy.epsilon
    base = economy.mean_wage_power

    def mu_of_perceived(st):
        return base * (1.0 - st) ** eps * (1.0 + eps * st) / (1.0 + eps)

    mu_max = mu_of_perceived(0.0)
    if not (0.0 < mu_target <= mu_max):
        raise DomainViolation(
            f"efficiency target {mu_target:g} outside attainable (0, {mu_max:g}]"
        )
    if mu_target == mu_max:
        perceived = 0.0
    else:
        perceived = bisect_root(
            lambda st: mu_of_perceived(st) - mu_target, 0.0, 1.0 - 1e-12, tol=1e-14
        )
    path = []
    for s in s_values:
        s = float(s)
        if not (0.0 < s <= 1.0):
            raise DomainViolation(f"salience must lie in (0, 1], got {s}")
        tau = perceived / s
        if tau > admissible_tau_upper(economy, s):
            raise DomainViolation(
                f"required tax {tau:g} exceeds the admissible range at s={s:g}"
            )
        path.append((s, tau))
    return path


@dataclass(frozen=True)
class RelaxedOptimum:
    """Maximum of E * (mu + delta) over the frontier at one salience level."""

    E_rel: float
    mu_at_E: float
    objective: float


def relaxed_optimum(economy: Economy, s, delta=0.0, tol=1e-10) -> RelaxedOptimum:
    """Best equality under a compensation delta added to mean consumption.

    Optimizes over the tax (equivalently over attainable equality, since
    equality is strictly increasing in the tax) by golden-section search.
    """
    hi_tau = admissible_tau_upper(economy, s)

    def objective(tau):
        dec = decompose(economy, Policy(tau=tau, s=s))
        return dec.E * (dec.mu + delta)

    tau_best = golden_section_max(objective, 1e-9, hi_tau, tol=tol)
    dec = decompose(economy, Policy(tau=tau_best, s=s))
    return RelaxedOptimum(E_rel=dec.E, mu_at_E=dec.mu, objective=dec.E * (dec.mu + delta))


@dataclass(frozen=True)
class EffectDecomposition:
    """Split of d(frontier equality)/ds into substitution and income parts."""

    total: float
    substitution: float
    income: float
    delta_used: float


def effect_decomposition(economy: Economy, s0, h=1e-3) -> EffectDecomposition:
    """Decompose the salience effect on frontier equality at s0.

    The substitution part re-optimizes at a nearby salience while
    compensating mean consumption back to its original iso-equality
    level; the income part is the equality response to compensation
    alone times the change in the cost of the original equality level.
    The two parts must re-sum to the total within a 0.1 percent relative
    tolerance (DecompositionMismatch otherwise).
    """
    row0 = s_optimal_tax(economy, s0)
    E0 = row0.E

    def frontier_E(s):
        return s_optimal_tax(economy, s).E

    total = (frontier_E(s0 + h) - frontier_E(s0 - h)) / (2.0 * h)

    def mu_check(s):
        return tau_for_equality(economy, E0, s).mu_check

    mu0 = mu_check(s0)
    dmu_check_ds = (mu_check(s0 + h) - mu_check(s0 - h)) / (2.0 * h)

    def compensated_E(s1):
        delta = mu0 - mu_check(s1)
        return relaxed_optimum(economy, s1, delta=delta).E_rel

    substitution = (compensated_E(s0 + h) - compensated_E(s0 - h)) / (2.0 * h)

    d_delta = max(1e-4 * abs(mu0), 1e-9)
    e_rel_lo = relaxed_optimum(economy, s0, delta=-d_delta).E_rel
    e_rel_hi = relaxed_optimum(economy, s0, delta=d_delta).E_rel
    dE_ddelta = (e_rel_hi - e_rel_lo) / (2.0 * d_delta)
    # chain rule: d E^c/ds1 = total + (dE_rel/ddelta)(ddelta/ds1) with
    # ddelta/ds1 = -dmu_check_ds, so the income part enters with dmu_check_ds
    income = dE_ddelta * dmu_check_ds

    delta_used = mu0 - mu_check(s0 + h)
    gap = abs(total - (substitution + income))
    if gap > max(1e-3 * abs(total), 1e-6):
        raise DecompositionMismatch(
            f"parts sum to {substitution + income:g} but total is {total:g}"
        )
    return EffectDecomposition(
        total=total, substitution=substitution, income=income, delta_used=delta_used
    )
