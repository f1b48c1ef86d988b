"""Optimal linear taxation when taxes are only partially salient.

Agents best-respond to a perceived tax rate s * tau instead of the
actual rate tau; revenue is rebated lump sum. The package solves for
the welfare-maximizing tax at each salience level, traces the
equality-efficiency frontier, prices equality in consumption units,
and translates salient-tax policies into equivalent two-tax systems.
"""

from .behavior import (
    AllocationProfile,
    BehavioralDerivatives,
    Policy,
    allocation,
    behavioral_derivatives,
    dchat_ds,
    income,
    is_order_preserving,
    is_revenue_efficient,
    laffer_rate,
    order_preserving_bound,
    pareto_threshold,
)
from .economy import (
    CalibrationSpec,
    Economy,
    calibrate_lognormal,
    economy_from_wages,
    lognormal_parameters,
)
from .geometry import (
    EffectDecomposition,
    FrontierPoint,
    IsoEqualityPoint,
    RelaxedOptimum,
    effect_decomposition,
    equality_range,
    iso_efficiency_path,
    iso_equality_component_slopes,
    iso_equality_path,
    price_of_equality,
    price_of_equality_derivative,
    relaxed_optimum,
    tau_for_equality,
)
from .optimizer import (
    FocTerms,
    FrontierRow,
    TauSlopeAtFullSalience,
    admissible_tau_upper,
    foc_residual,
    foc_terms,
    frontier_sweep,
    morally_dominates,
    s_optimal_tax,
    tau_prime_at_one,
)
from .twotax import TwoTaxPolicy, from_two_tax, to_two_tax
from .welfare import (
    LorenzCurve,
    MeanConsumptionPartials,
    WelfareDecomposition,
    decompose,
    equality_partials,
    lorenz,
    mean_consumption_partials,
    outer_utility,
    outer_utility_inverse,
    welfare_salience_derivative,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "1.0.0"
