"""Transport-free request handlers.

Both the HTTP app and the command line parse their own wire formats into
plain Python values, call these functions, and serialise the returned
JSON-ready dicts.  Keeping the layer pure makes the two frontends
byte-compatible and separately testable.
"""

from __future__ import annotations

import cmath
import math

from .. import zeros
from ..angles import Angle, FunctionOfAngles, construct_finite, construct_infinite
from ..angles import is_admissible, is_minimal, leq, lower_bound
from ..bivar import p_value
from ..errors import DomainError
from ..hypergeom import f_factor, f_factor_integral, f_factor_sequence, gauss_limit
from ..kernels import (ToroidalDistribution, poisson_integral, poisson_kernel,
                       poisson_kernel_series, spectrum, spectrum_of_integral)
from ..obstruction import (ObstructionFunction, from_v0_coefficients, growth_bound,
                           ray_limit, recover_coefficients, uniqueness_test_geodesics,
                           uniqueness_test_rays, uniqueness_test_sequence, v0_form)
from ..params import AlphaParam
from ..verify import run_suite

_GEODESIC_ETA = 1  # weighted geodesic ratios divide by y itself


def _cjson(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


def _member(alpha, coeffs, basis: str) -> ObstructionFunction:
    if basis == "p":
        return ObstructionFunction(AlphaParam.coerce(alpha), tuple(coeffs))
    if basis == "v0":
        a = AlphaParam.coerce(alpha)
        if a.value != 0.0:
            raise DomainError("the Im(z^k) basis exists only at alpha = 0")
        return from_v0_coefficients({i + 1: c for i, c in enumerate(coeffs)})
    raise DomainError(f"unknown basis {basis!r}; use 'p' or 'v0'")


def eval_kernel(alpha, z: complex, route: str = "closed", tol: float = 1e-12) -> dict:
    if route == "closed":
        value = poisson_kernel(alpha, z)
    elif route == "series":
        value = poisson_kernel_series(alpha, z, tol=tol)
    else:
        raise DomainError(f"unknown route {route!r}; use 'closed' or 'series'")
    return {"alpha": AlphaParam.coerce(alpha).as_text(), "route": route, "value": _cjson(value)}


def eval_member(alpha, coeffs, z: complex, basis: str = "p") -> dict:
    u = _member(alpha, coeffs, basis)
    return {"alpha": u.alpha.as_text(), "degree": u.degree, "value": _cjson(u.eval(z))}


def eval_f_factor(alpha, k: int, x: float, method: str = "series", tol: float = 1e-14) -> dict:
    if method == "series":
        value = f_factor(alpha, k, x, tol=tol)
    elif method == "quadrature":
        value = f_factor_integral(alpha, k, x)
    elif method == "recurrence":
        value = f_factor_sequence(alpha, k, x, tol=tol)[k]
    else:
        raise DomainError(f"unknown method {method!r}")
    return {"alpha": AlphaParam.coerce(alpha).as_text(), "k": k, "x": x,
            "method": method, "value": value}


def eval_gauss_limit(alpha, k: int) -> dict:
    a = AlphaParam.coerce(alpha)
    value = gauss_limit(a, k)
    out = {"alpha": a.as_text(), "k": k, "value": float(value)}
    if a.exact is not None:
        from fractions import Fraction
        from ..hypergeom import pochhammer
        exact = Fraction(math.factorial(k)) / pochhammer(a.exact + 1, k)
        out["exact"] = f"{exact.numerator}/{exact.denominator}"
    return out


def eval_integral(alpha, distribution: dict, z: complex, tol: float = 1e-12) -> dict:
    dist = ToroidalDistribution.from_json_obj(distribution)
    value = poisson_integral(alpha, dist, z, tol=tol)
    return {"alpha": AlphaParam.coerce(alpha).as_text(), "value": _cjson(value)}


def spectrum_info(alpha, distribution: dict | None = None) -> dict:
    a = AlphaParam.coerce(alpha)
    if distribution is None:
        spec = spectrum(a)
    else:
        spec = spectrum_of_integral(a, ToroidalDistribution.from_json_obj(distribution))
    return {"alpha": a.as_text(), "spectrum": spec.to_json_obj()}


def certify(alpha, k: int) -> dict:
    cert = zeros.certify_p_circle_free(alpha, k)
    out = cert.to_json_obj()
    out["alpha"] = AlphaParam.coerce(alpha).as_text()
    out["k"] = k
    return out


def profile_roots(alpha=None, k: int | None = None, coeffs=None,
                  residual_tol: float = 1e-10) -> dict:
    if coeffs is not None:
        rts = zeros.roots(coeffs, residual_tol)
        out: dict = {"source": "coeffs"}
    else:
        if alpha is None or k is None:
            raise DomainError("give either coeffs or (alpha, k)")
        rts = zeros.kernel_profile_roots(alpha, k, residual_tol)
        out = {"source": "kernel-profile", "alpha": AlphaParam.coerce(alpha).as_text(), "k": k}
    out["roots"] = [_cjson(w) for w in rts]
    out["moduli"] = [abs(w) for w in rts]
    return out


def min_modulus(alpha, k: int, grid: int = 4096) -> dict:
    return {"alpha": AlphaParam.coerce(alpha).as_text(), "k": k,
            "min_modulus": zeros.min_modulus_on_circle(alpha, k, grid)}


def growth(alpha, coeffs, basis: str = "p") -> dict:
    u = _member(alpha, coeffs, basis)
    gb = growth_bound(u)
    return {"alpha": u.alpha.as_text(), "degree": u.degree,
            "order": gb.order, "constant": gb.constant}


def ray_limit_info(alpha, coeffs, theta: float, basis: str = "p") -> dict:
    u = _member(alpha, coeffs, basis)
    return {"alpha": u.alpha.as_text(), "theta": theta,
            "value": _cjson(ray_limit(u, theta))}


def trace(alpha, coeffs, basis: str = "p", theta: float | None = None,
          eta: int | None = None, x: float | None = None,
          t0: float = 1e3, count: int = 6) -> dict:
    """Decay table along a ray (theta, exponent eta) or a vertical geodesic (x).

    Rows carry t, |u| and the normalised ratio whose vanishing the uniqueness
    tests decide; the ray exponent defaults to degree + alpha + 1.
    """
    u = _member(alpha, coeffs, basis)
    if (theta is None) == (x is None):
        raise DomainError("give exactly one of theta (ray) or x (geodesic)")
    if count < 2:
        raise DomainError("need at least two points")
    rows = []
    if theta is not None:
        if not 0.0 < theta < math.pi:
            raise DomainError("ray angle must lie in (0, pi)")
        exponent = float(eta) if eta is not None else u.degree + u.alpha.value + 1.0
        for j in range(count):
            t = t0 * 2.0 ** j
            val = u.eval(t * cmath.exp(1j * theta))
            rows.append({"t": t, "abs_value": abs(val), "ratio": abs(val) / t ** exponent})
        kind = "ray"
    else:
        exponent = _GEODESIC_ETA
        for j in range(count):
            t = t0 * 2.0 ** j
            val = u.eval(complex(x, t))
            rows.append({"t": t, "abs_value": abs(val), "ratio": abs(val) / t})
        kind = "geodesic"
    return {"alpha": u.alpha.as_text(), "kind": kind, "exponent": float(exponent), "rows": rows}


def recover(alpha, coeffs, n_max: int, basis: str = "p", tol: float = 1e-6) -> dict:
    """Round-trip demonstration: rebuild the member's coefficients from its own
    black-box ray samples and report the recovery error."""
    u = _member(alpha, coeffs, basis)
    res = recover_coefficients(u.alpha, u.eval, n_max, tol=tol)
    padded = u.coeffs + (0j,) * (len(res.coeffs) - len(u.coeffs))
    worst = max((abs(x - y) for x, y in zip(res.coeffs, padded)), default=0.0)
    return {
        "alpha": u.alpha.as_text(),
        "recovered": [_cjson(c) for c in res.coeffs],
        "residual": res.residual,
        "angles_used": list(res.angles_used),
        "worst_error": worst,
    }


def foa_check(family, mode: str = "exact", limit: int | None = None) -> dict:
    foa = FunctionOfAngles.from_json_obj(family)
    report = is_admissible(foa, mode=mode, limit=limit)
    return report.to_json_obj()


def foa_construct(angles: list[str], tail: str | None = None) -> dict:
    parsed = [Angle.parse(a) for a in angles]
    if tail is not None:
        fam = construct_finite(parsed, Angle.parse(tail))
    else:
        fam = construct_infinite(parsed)
    return fam.to_json_obj()


def foa_lower_bound(family) -> dict:
    foa = FunctionOfAngles.from_json_obj(family)
    return lower_bound(foa).to_json_obj()


def foa_leq(family_a, family_b) -> dict:
    a = FunctionOfAngles.from_json_obj(family_a)
    b = FunctionOfAngles.from_json_obj(family_b)
    return {"leq": leq(a, b)}


def foa_minimal(family) -> dict:
    foa = FunctionOfAngles.from_json_obj(family)
    return {"minimal": is_minimal(foa)}


def uniq_sequence(alpha, samples, tol: float = 1e-6) -> dict:
    pairs = [(complex(z), complex(v)) for z, v in samples]
    verdict = uniqueness_test_sequence(pairs, alpha, tol)
    return {"alpha": AlphaParam.coerce(alpha).as_text(), "test": "sequence",
            "vanishes": verdict}


def uniq_geodesics(coeffs, x1: float, x2: float, basis: str = "v0",
                   tol: float = 1e-6) -> dict:
    u = _member(0, coeffs, basis)
    verdict = uniqueness_test_geodesics(u.eval, x1, x2, tol)
    return {"test": "geodesics", "x1": x1, "x2": x2, "vanishes": verdict}


def uniq_rays(coeffs, family, basis: str = "v0", tol: float = 1e-6,
              n_max: int = 8) -> dict:
    u = _member(0, coeffs, basis)
    foa = FunctionOfAngles.from_json_obj(family)
    verdict = uniqueness_test_rays(u.eval, foa, tol, n_max)
    return {"test": "rays", "n_max": n_max, "vanishes": verdict}


def run_verify(suite: str = "all", seed: int = 0, tol: float | None = None) -> dict:
    return run_suite(suite, seed=seed, tol=tol).to_json_obj()


def member_info(alpha, coeffs, basis: str = "p") -> dict:
    u = _member(alpha, coeffs, basis)
    out = {"alpha": u.alpha.as_text(), "degree": u.degree,
           "coeffs": [_cjson(c) for c in u.coeffs]}
    if u.alpha.value == 0.0:
        out["v0"] = {str(k): _cjson(c) for k, c in sorted(v0_form(u).items())}
    return out


def kernel_polynomial_value(alpha, k: int, z: complex) -> dict:
    return {"alpha": AlphaParam.coerce(alpha).as_text(), "k": k,
            "value": _cjson(p_value(float(AlphaParam.coerce(alpha).value), k, z))}
