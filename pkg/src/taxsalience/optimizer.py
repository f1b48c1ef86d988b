"""Welfare-maximizing tax at fixed salience and frontier sweeps.

The first-order condition in tau has three terms: mechanical
redistribution, the internality from misperception, and the fiscal
externality from the behavioral response. The optimum is found by
bisection over a bracket bounded above by the tighter of the revenue
peak and the consumption-order bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .behavior import Policy, allocation, laffer_rate, order_preserving_bound
from .economy import Economy
from .errors import (
    BracketFailure,
    DomainViolation,
    EconomyMismatch,
    ToleranceNotMet,
)
from .welfare import decompose

_TAU_FLOOR = 1e-12
_BOUND_SHRINK = 1e-9


@dataclass(frozen=True)
class FocTerms:
    """The three components of dW/dtau at a policy, in welfare units."""

    redistribution: float
    internality: float
    fiscal_externality: float
    total: float


def foc_terms(economy: Economy, policy: Policy) -> FocTerms:
    alloc = allocation(economy, policy)
    eps = economy.epsilon
    s, tau = policy.s, policy.tau
    wedge = s * tau * eps / (1.0 - policy.perceived)
    gz = float((alloc.g * alloc.z).mean())
    redistribution = float((alloc.g * (alloc.zbar - alloc.z)).mean())
    internality = (1.0 - s) * wedge * gz
    fiscal = -wedge * alloc.gbar * alloc.zbar
    return FocTerms(
        redistribution=redistribution,
        internality=internality,
        fiscal_externality=fiscal,
        total=redistribution + internality + fiscal,
    )


def foc_residual(economy: Economy, tau, s) -> float:
    """dW/dtau scaled by gbar * zbar so it is dimensionless."""
    policy = Policy(tau=tau, s=s)
    alloc = allocation(economy, policy)
    terms = foc_terms(economy, policy)
    return terms.total / (alloc.gbar * alloc.zbar)


@dataclass(frozen=True, eq=False)
class FrontierRow:
    """Solved optimum at one salience level, with diagnostics."""

    s: float
    tau_star: float
    tau_perceived: float
    W: float
    xi: float
    mu: float
    E: float
    h_bar: float
    revenue: float
    foc_residual: float            # scaled by gbar * zbar
    soc_value: float               # second difference of W in tau, < 0 at a max
    order_preserving_margin: float  # bound minus tau_star
    revenue_efficient_margin: float  # revenue peak minus tau_star
    economy: Economy = field(repr=False, default=None)


def admissible_tau_upper(economy: Economy, s) -> float:
    """Upper end of the search bracket, shrunk slightly inside both bounds."""
    eps = economy.epsilon
    return min(laffer_rate(s, eps), order_preserving_bound(s, eps)) - _BOUND_SHRINK


def s_optimal_tax(economy: Economy, s, tol=1e-10, max_iter=200) -> FrontierRow:
    """Welfare-maximizing tax at salience s by bisection on the FOC.

    The FOC must be positive at the tau floor and negative at the upper
    bracket end (BracketFailure otherwise; a degenerate single-agent
    population always fails). After converging to tol in tau, the
    optimality condition is re-checked in its ratio form and
    ToleranceNotMet is raised if the residual exceeds 10 * tol.
    """
    if not (0.0 < s <= 1.0):
        raise DomainViolation(f"salience must lie in (0, 1], got {s}")
    eps = economy.epsilon
    hi = admissible_tau_upper(economy, s)
    lo = _TAU_FLOOR

    def f(tau):
        terms = foc_terms(economy, Policy(tau=tau, s=s))
        return terms.total

    def ratio_residual(tau):
        h_bar = allocation(economy, Policy(tau=tau, s=s)).h_bar
        wedge = s * tau * eps / (1.0 - s * tau)
        return abs(wedge - (1.0 - h_bar) / (1.0 - (1.0 - s) * h_bar))

    f_lo, f_hi = f(lo), f(hi)
    if f_lo <= 0.0 or f_hi >= 0.0:
        raise BracketFailure(
            f"FOC does not change sign on [{lo:g}, {hi:g}] at s={s:g}; "
            "the population may be too close to degenerate"
        )
    for _ in range(max_iter):
        if hi - lo < tol and ratio_residual(0.5 * (lo + hi)) <= 10.0 * tol:
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            raise ToleranceNotMet(
                f"bracket hit machine precision at {mid:g} with the optimality "
                f"ratio residual still above {10.0 * tol:g}"
            )
        if f(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    else:
        raise ToleranceNotMet(f"bracket still {hi - lo:g} wide after {max_iter} iterations")
    tau_star = 0.5 * (lo + hi)

    policy = Policy(tau=tau_star, s=s)
    alloc = allocation(economy, policy)
    dec = decompose(economy, policy)
    h_bar = alloc.h_bar
    scaled_foc = foc_terms(economy, policy).total / (alloc.gbar * alloc.zbar)

    # curvature check by a centered second difference of W in tau
    hh = 1e-4 * tau_star
    w_mid = dec.W
    w_lo = decompose(economy, Policy(tau=tau_star - hh, s=s)).W
    w_hi = decompose(economy, Policy(tau=tau_star + hh, s=s)).W
    soc = (w_hi - 2.0 * w_mid + w_lo) / (hh * hh)

    return FrontierRow(
        s=s,
        tau_star=tau_star,
        tau_perceived=s * tau_star,
        W=dec.W,
        xi=dec.xi,
        mu=dec.mu,
        E=dec.E,
        h_bar=h_bar,
        revenue=alloc.revenue,
        foc_residual=scaled_foc,
        soc_value=soc,
        order_preserving_margin=order_preserving_bound(s, eps) - tau_star,
        revenue_efficient_margin=laffer_rate(s, eps) - tau_star,
        economy=economy,
    )


def frontier_sweep(economy: Economy, s_grid, tol=1e-10):
    """FrontierRows over a strictly increasing grid of salience levels."""
    grid = np.asarray(list(s_grid), dtype=float)
    if grid.size == 0:
        raise DomainViolation("salience grid is empty")
    if np.any(np.diff(grid) <= 0.0):
        raise DomainViolation("salience grid must be strictly increasing")
    return [s_optimal_tax(economy, float(s), tol=tol) for s in grid]


def morally_dominates(row_a: FrontierRow, row_b: FrontierRow) -> bool:
    """True when row_a is more transparent and no worse in welfare.

    Both rows must come from the same economy; otherwise welfare levels
    are not comparable and EconomyMismatch is raised.
    """
    if row_a.economy is None or row_b.economy is None or row_a.economy != row_b.economy:
        raise EconomyMismatch("rows come from different economies")
    return row_a.s >= row_b.s and row_a.W >= row_b.W


@dataclass(frozen=True)
class TauSlopeAtFullSalience:
    """One-sided slope of the optimal tax in s at s = 1.

    The sign is only guaranteed negative for curvature up to 2; above
    that the slope is still computed but sign_guaranteed is False.
    """

    value: float
    sign_guaranteed: bool


def tau_prime_at_one(economy: Economy, h=1e-3) -> TauSlopeAtFullSalience:
    tau_1 = s_optimal_tax(economy, 1.0).tau_star
    tau_0 = s_optimal_tax(economy, 1.0 - h).tau_star
    return TauSlopeAtFullSalience(
        value=(tau_1 - tau_0) / h,
        sign_guaranteed=economy.rho <= 2.0,
    )
