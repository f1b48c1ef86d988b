"""Exception hierarchy shared across the package.

Errors split into two families: input/domain problems (bad parameters,
policies outside the model's domain) and solver problems (brackets that
do not contain a root, tolerances that cannot be met). The CLI maps the
first family to exit code 2 and the second to exit code 3.
"""


class TaxSalienceError(Exception):
    """Base class for all package errors."""


class InputError(TaxSalienceError):
    """Invalid inputs: bad parameters, malformed configs, domain violations."""


class SolverError(TaxSalienceError):
    """Numerical solver failures."""


class NonPositiveWage(InputError):
    pass


class NonMonotoneWages(InputError):
    pass


class NonPositiveParameter(InputError):
    pass


class InfeasibleCalibration(InputError):
    pass


class DomainViolation(InputError):
    pass


class NonPositiveConsumption(InputError):
    pass


class InfeasibleSalienceTarget(InputError):
    pass


class ConfigError(InputError):
    pass


class EconomyMismatch(InputError):
    pass


class BracketFailure(SolverError):
    pass


class ToleranceNotMet(SolverError):
    pass


class EqualityOutOfRange(SolverError):
    pass


class PathLeavesAdmissibleRegion(SolverError):
    pass


class DecompositionMismatch(SolverError):
    pass
