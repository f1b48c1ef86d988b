"""Small deterministic 1-d solvers used throughout the package.

Bisection is used for every root find so that results are reproducible
bit for bit across runs. Golden-section search handles the smooth
unimodal maximizations in the geometry module.
"""

import math

from .errors import BracketFailure, ToleranceNotMet

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0  # 1/phi
_INVPHI2 = (3.0 - math.sqrt(5.0)) / 2.0  # 1/phi^2


def bisect_root(f, lo, hi, tol=1e-10, max_iter=200):
    """Root of f on [lo, hi] by bisection.

    Requires a sign change over the bracket; raises BracketFailure if
    the endpoints do not straddle zero and ToleranceNotMet if the
    bracket cannot be narrowed below tol within max_iter iterations.
    """
    f_lo = f(lo)
    f_hi = f(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if (f_lo > 0.0) == (f_hi > 0.0):
        raise BracketFailure(
            f"no sign change on [{lo:g}, {hi:g}]: f(lo)={f_lo:g}, f(hi)={f_hi:g}"
        )
    for _ in range(max_iter):
        if hi - lo < tol:
            return 0.5 * (lo + hi)
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid > 0.0) == (f_lo > 0.0):
            lo = mid
            f_lo = f_mid
        else:
            hi = mid
    raise ToleranceNotMet(
        f"bisection bracket still {hi - lo:g} wide after {max_iter} iterations"
    )


def golden_section_max(f, lo, hi, tol=1e-10, max_iter=300):
    """Maximizer of a unimodal f on [lo, hi] by golden-section search."""
    a, b = lo, hi
    h = b - a
    c = a + _INVPHI2 * h
    d = a + _INVPHI * h
    fc = f(c)
    fd = f(d)
    for _ in range(max_iter):
        if b - a < tol:
            break
        if fc > fd:
            b, d, fd = d, c, fc
            h = b - a
            c = a + _INVPHI2 * h
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            h = b - a
            d = a + _INVPHI * h
            fd = f(d)
    return 0.5 * (a + b)
