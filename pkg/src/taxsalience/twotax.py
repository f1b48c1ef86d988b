"""Translation between one partly salient tax and a two-tax system.

A single tax at rate tau with salience s is behaviorally and budget
equivalent to a fully salient labor tax tau_L plus a consumption-side
tax tau_C of which only a fraction s_C is perceived. The map is exact
whenever the implied labor tax is well defined, which requires the
salience target to satisfy s >= s_C / (1 - tau + s_C tau).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainViolation, InfeasibleSalienceTarget


@dataclass(frozen=True)
class TwoTaxPolicy:
    """Fully salient labor tax plus partially perceived consumption tax."""

    tau_L: float
    tau_C: float
    s_C: float

    def __post_init__(self):
        if self.tau_L < 0.0 or self.tau_L >= 1.0:
            raise DomainViolation(f"labor tax must lie in [0, 1), got {self.tau_L}")
        if self.tau_C < 0.0:
            raise DomainViolation(f"consumption tax must be nonnegative, got {self.tau_C}")
        if not (0.0 < self.s_C < 1.0):
            raise DomainViolation(f"consumption salience must lie in (0, 1), got {self.s_C}")


def to_two_tax(tau, s, s_C) -> TwoTaxPolicy:
    """Two-tax system replicating a single tax tau with salience s.

    Raises InfeasibleSalienceTarget when s is below the floor reachable
    with consumption-side salience s_C, i.e. s < s_C / (1 - tau + s_C tau).
    """
    if not (0.0 < s <= 1.0):
        raise DomainViolation(f"salience must lie in (0, 1], got {s}")
    if tau < 0.0 or s * tau >= 1.0 or tau >= 1.0:
        raise DomainViolation(f"tax rate {tau} outside the mappable range")
    if not (0.0 < s_C < 1.0):
        raise DomainViolation(f"consumption salience must lie in (0, 1), got {s_C}")
    floor = s_C / (1.0 - tau + s_C * tau)
    if s < floor:
        raise InfeasibleSalienceTarget(
            f"salience {s:g} below the floor {floor:g} reachable with s_C={s_C:g}"
        )
    denom = (1.0 - tau) - s_C * (1.0 - s * tau)
    tau_C = (tau - s * tau) / denom if denom != 0.0 else 0.0
    tau_L = tau * (1.0 - (1.0 - tau) * (1.0 - s) / denom) if denom != 0.0 else tau
    if tau == 0.0:
        tau_L, tau_C = 0.0, 0.0
    return TwoTaxPolicy(tau_L=tau_L, tau_C=tau_C, s_C=s_C)


def from_two_tax(policy: TwoTaxPolicy):
    """(tau, s) of the single tax equivalent to the two-tax system.

    Matches total retention, (1 - tau) = (1 - tau_L) / (1 + tau_C), and
    perceived retention, (1 - s tau) = (1 - tau_L) / (1 + s_C tau_C).
    A zero combined tax carries no salience information; s = 1 then.
    """
    tau = (policy.tau_L + policy.tau_C) / (1.0 + policy.tau_C)
    if tau == 0.0:
        return 0.0, 1.0
    perceived = 1.0 - (1.0 - policy.tau_L) / (1.0 + policy.s_C * policy.tau_C)
    return tau, perceived / tau
