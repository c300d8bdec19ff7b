"""Gauss hypergeometric machinery for the series factors F(-alpha, k; k+1; x).

Everything here is scalar double-precision work.  The series evaluator is
hand-written (Kahan-compensated, with the Euler transformation as an
optional route); the independent cross-check route is adaptive quadrature
of the Euler integral representation, delegated to QUADPACK.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from scipy.integrate import quad

from .errors import DomainError, InvalidC, NonConvergent
from .params import AlphaParam

_MAX_TERMS = 10**6
_STOP_STREAK = 3  # consecutive relatively-small terms required to stop


def pochhammer(a, k: int):
    """Rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1.

    Exact when ``a`` is int or Fraction, float otherwise.
    """
    if k < 0:
        raise DomainError("pochhammer needs k >= 0")
    if isinstance(a, (int, Fraction)):
        out = Fraction(1)
        for j in range(k):
            out *= a + j
        return out if isinstance(a, Fraction) else (out if out.denominator != 1 else int(out))
    out = 1.0
    for j in range(k):
        out *= a + j
    return out


def _is_nonpositive_integer(v: float) -> bool:
    return v <= 0 and float(v).is_integer()


def hyp2f1(a: float, b: float, c: float, x: float, tol: float = 1e-14,
           transform: str = "auto", max_terms: int = _MAX_TERMS) -> float:
    """Gauss series F(a, b; c; x) for real parameters and |x| < 1.

    Stops once three consecutive terms fall below tol times the running
    partial sum.  With transform="auto" the evaluation routes through the
    Euler transformation F = (1-x)^(c-a-b) F(c-a, c-b; c; x) when x > 0.5
    and c-a-b > 0, which keeps slowly-converging tails short; terminating
    series (a or b a nonpositive integer) are always summed directly.
    """
    if _is_nonpositive_integer(c):
        raise InvalidC(f"c = {c} is a nonpositive integer")
    if not -1.0 < x < 1.0:
        raise DomainError(f"series parameter x = {x} outside (-1, 1)")
    terminating = _is_nonpositive_integer(a) or _is_nonpositive_integer(b)
    if transform == "auto" and not terminating and x > 0.5 and (c - a - b) > 0:
        inner = hyp2f1(c - a, c - b, c, x, tol=tol, transform="never", max_terms=max_terms)
        return (1.0 - x) ** (c - a - b) * inner

    term = 1.0
    total = 1.0
    comp = 0.0  # Kahan carry
    streak = 0
    for n in range(max_terms):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * x
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
        if abs(term) <= tol * abs(total) or term == 0.0:
            streak += 1
            if streak >= _STOP_STREAK:
                return total
        else:
            streak = 0
    raise NonConvergent(f"F({a},{b};{c};{x}) did not settle within {max_terms} terms")


@lru_cache(maxsize=8192)
def _f_factor_cached(alpha: float, k: int, x: float, tol: float) -> float:
    return hyp2f1(-alpha, float(k), float(k + 1), x, tol=tol)


def f_factor(alpha, k: int, x: float, tol: float = 1e-14) -> float:
    """The radial factor F(-alpha, k; k+1; x) for k >= 1, x in [0, 1)."""
    a = AlphaParam.coerce(alpha)
    if k < 1:
        raise DomainError("f_factor needs a positive integer k")
    if not 0.0 <= x < 1.0:
        raise DomainError(f"x = {x} outside [0, 1)")
    return _f_factor_cached(a.value, int(k), float(x), float(tol))


def f_factor_integral(alpha, k: int, x: float) -> float:
    """Quadrature route: k * integral_0^1 t^(k-1) (1-xt)^alpha dt.

    Independent of the series; used as the cross-check oracle.  For
    alpha < 0 the substitution u = 1-t moves the steep factor to u = 0
    where the adaptive scheme resolves it cleanly.
    """
    a = float(AlphaParam.coerce(alpha).value)
    if k < 1:
        raise DomainError("f_factor_integral needs a positive integer k")
    if not 0.0 <= x < 1.0:
        raise DomainError(f"x = {x} outside [0, 1)")
    if a < 0:
        def integrand(u: float) -> float:
            return (1.0 - u) ** (k - 1) * (1.0 - x + x * u) ** a
    else:
        def integrand(t: float) -> float:
            return t ** (k - 1) * (1.0 - x * t) ** a
    val, _err = quad(integrand, 0.0, 1.0, epsabs=1e-12, epsrel=1e-12, limit=200)
    return k * val


def f_factor_sequence(alpha, kmax: int, x: float, tol: float = 1e-14) -> list[float]:
    """F(-alpha, k; k+1; x) for k = 0..kmax in one sweep.

    Backward recurrence F_k = (1-x)^(alpha+1) + x (k+alpha+1)/(k+1) F_{k+1},
    seeded by a single direct series evaluation at k = kmax (backward is the
    stable direction; forward amplifies errors by 1/x per step).
    """
    a = float(AlphaParam.coerce(alpha).value)
    if kmax < 0:
        raise DomainError("kmax must be >= 0")
    out = [1.0] * (kmax + 1)
    if x == 0.0 or kmax == 0:
        return out
    if not 0.0 <= x < 1.0:
        raise DomainError(f"x = {x} outside [0, 1)")
    const = (1.0 - x) ** (a + 1.0)
    fk = hyp2f1(-a, float(kmax), float(kmax + 1), x, tol=tol)
    out[kmax] = fk
    for k in range(kmax - 1, 0, -1):
        fk = const + x * (k + a + 1.0) / (k + 1.0) * fk
        out[k] = fk
    return out


def gauss_limit(alpha, k: int) -> float:
    """Boundary limit of the radial factor as x -> 1-, for alpha > -1.

    Equals Gamma(k+1) Gamma(alpha+1) / Gamma(k+alpha+1), which reduces to
    the exact rational k! / (alpha+1)_k; the gamma route is kept for
    inexact alpha.
    """
    a = AlphaParam.coerce(alpha)
    if k < 1:
        raise DomainError("gauss_limit needs a positive integer k")
    if not a.half_plane_valid:
        raise DomainError("gauss_limit requires alpha > -1 (the factor diverges otherwise)")
    if a.exact is not None:
        return float(Fraction(math.factorial(k)) / pochhammer(a.exact + 1, k))
    return math.exp(math.lgamma(k + 1.0) + math.lgamma(a.value + 1.0)
                    - math.lgamma(k + a.value + 1.0))


def bound_log(k: int, x: float) -> float:
    """Logarithmic majorant (k/x) log(1/(1-x)) of the factor at alpha = -1."""
    if k < 1:
        raise DomainError("bound_log needs a positive integer k")
    if not 0.0 < x < 1.0:
        raise DomainError(f"x = {x} outside (0, 1)")
    return (k / x) * math.log(1.0 / (1.0 - x))


def bound_below_minus1(alpha, k: int, x: float) -> float:
    """Majorant max(1, -k/(alpha+1)) (1-x)^(alpha+1) of the factor for alpha < -1."""
    a = float(AlphaParam.coerce(alpha).value)
    if a >= -1.0:
        raise DomainError("bound_below_minus1 requires alpha < -1")
    if k < 1:
        raise DomainError("bound_below_minus1 needs a positive integer k")
    if not 0.0 <= x < 1.0:
        raise DomainError(f"x = {x} outside [0, 1)")
    return max(1.0, -k / (a + 1.0)) * (1.0 - x) ** (a + 1.0)
