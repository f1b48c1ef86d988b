"""Agent behavior under a misperceived linear tax.

Agents choose earnings against the perceived retention rate
(1 - s * tau) but their budget clears at the actual rate, with revenue
rebated lump sum. All quantities here are closed form.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .economy import Economy
from .errors import DomainViolation, NonPositiveConsumption, NonPositiveParameter


@dataclass(frozen=True)
class Policy:
    """Linear tax rate tau with salience s in (0, 1].

    The perceived rate s * tau must stay below one so the perceived
    retention rate stays positive.
    """

    tau: float
    s: float

    def __post_init__(self):
        if not (0.0 < self.s <= 1.0):
            raise DomainViolation(f"salience must lie in (0, 1], got {self.s}")
        if self.tau < 0.0:
            raise DomainViolation(f"tax rate must be nonnegative, got {self.tau}")
        if self.s * self.tau >= 1.0:
            raise DomainViolation(
                f"perceived rate {self.s * self.tau:g} must be below one"
            )

    @property
    def perceived(self) -> float:
        return self.s * self.tau


def income(wage, policy: Policy, epsilon) -> float:
    """Chosen earnings w^(1+eps) * (1 - s*tau)^eps; vectorizes over wages."""
    if epsilon <= 0.0:
        raise NonPositiveParameter("elasticity must be positive")
    return np.asarray(wage) ** (1.0 + epsilon) * (1.0 - policy.perceived) ** epsilon


@dataclass(frozen=True, eq=False)
class AllocationProfile:
    """Per-agent outcomes and their means at a single policy."""

    z: np.ndarray          # earnings
    zbar: float            # mean earnings (also per-capita rebate base)
    c: np.ndarray          # budget-cleared consumption (1-tau) z + tau zbar
    c_hat: np.ndarray      # consumption net of realized effort cost
    g: np.ndarray          # planner weights c_hat^(-rho)
    gbar: float
    h_bar: float           # mean(g z) / (gbar zbar), in (0, 1) off degeneracy
    revenue: float         # tau * zbar


def allocation(economy: Economy, policy: Policy) -> AllocationProfile:
    """Full behavioral allocation at a policy.

    Raises NonPositiveConsumption if any agent's net consumption is not
    positive (possible once the tax exceeds the order-preserving bound).
    """
    eps = economy.epsilon
    st = policy.perceived
    z = economy.wage_powers * (1.0 - st) ** eps
    zbar = float(z.mean())
    tau = policy.tau
    c = (1.0 - tau) * z + tau * zbar
    # c_hat = c - v(z) with v(z) = eps/(1+eps) * z * (1 - s tau) at the chosen z
    coef = (1.0 - tau * (1.0 + eps * (1.0 - policy.s))) / (1.0 + eps)
    c_hat = coef * z + tau * zbar
    if np.any(c_hat <= 0.0):
        raise NonPositiveConsumption(
            "net consumption is not positive for some agent at this policy"
        )
    g = c_hat ** (-economy.rho)
    gbar = float(g.mean())
    h_bar = float((g * z).mean() / (gbar * zbar))
    return AllocationProfile(
        z=z, zbar=zbar, c=c, c_hat=c_hat, g=g, gbar=gbar,
        h_bar=h_bar, revenue=tau * zbar,
    )


@dataclass(frozen=True, eq=False)
class BehavioralDerivatives:
    """Closed-form earnings responses at a policy."""

    dz_ds: np.ndarray
    dzbar_ds: float
    dz_dtau: np.ndarray
    dzbar_dtau: float
    alpha: float  # actual retention per unit of perceived retention


def behavioral_derivatives(economy: Economy, policy: Policy) -> BehavioralDerivatives:
    eps = economy.epsilon
    st = policy.perceived
    z = economy.wage_powers * (1.0 - st) ** eps
    dz_ds = -eps * policy.tau * z / (1.0 - st)
    dz_dtau = -eps * policy.s * z / (1.0 - st)
    alpha = policy.s * (1.0 - policy.tau) / (1.0 - st)
    return BehavioralDerivatives(
        dz_ds=dz_ds,
        dzbar_ds=float(dz_ds.mean()),
        dz_dtau=dz_dtau,
        dzbar_dtau=float(dz_dtau.mean()),
        alpha=alpha,
    )


def laffer_rate(s, epsilon) -> float:
    """Revenue-maximizing tax rate 1 / (s (1 + eps))."""
    if not (0.0 < s <= 1.0):
        raise DomainViolation(f"salience must lie in (0, 1], got {s}")
    if epsilon <= 0.0:
        raise NonPositiveParameter("elasticity must be positive")
    return 1.0 / (s * (1.0 + epsilon))


def order_preserving_bound(s, epsilon) -> float:
    """Largest rate keeping net consumption increasing in the wage.

    Below 1 / (1 + eps (1 - s)), strictly, higher-wage agents keep
    higher net consumption; above it the ranking flips.
    """
    if not (0.0 < s <= 1.0):
        raise DomainViolation(f"salience must lie in (0, 1], got {s}")
    if epsilon <= 0.0:
        raise NonPositiveParameter("elasticity must be positive")
    return 1.0 / (1.0 + epsilon * (1.0 - s))


def is_order_preserving(policy: Policy, epsilon) -> bool:
    return policy.tau < order_preserving_bound(policy.s, epsilon)


def is_revenue_efficient(policy: Policy, epsilon) -> bool:
    return policy.tau <= laffer_rate(policy.s, epsilon)


def pareto_threshold(economy: Economy) -> float:
    """Salience level above which more salience lowers every agent's c_hat.

    Equals 1 - zbar / z_top, which is independent of the policy because
    earnings scale uniformly with the perceived retention rate.
    """
    ratio = economy.mean_wage_power / economy.wage_powers[-1]
    return max(0.0, 1.0 - ratio)


def dchat_ds(economy: Economy, policy: Policy) -> np.ndarray:
    """Per-agent response of net consumption to salience, closed form:
    eps tau^2 / (1 - s tau) * (z_i (1 - s) - zbar).
    """
    eps = economy.epsilon
    st = policy.perceived
    z = economy.wage_powers * (1.0 - st) ** eps
    zbar = z.mean()
    return eps * policy.tau ** 2 / (1.0 - st) * (z * (1.0 - policy.s) - zbar)
