"""Toolkit for weighted harmonic functions on the disc and the upper half-plane.

Core layers:

- ``hypergeom``: the radial hypergeometric factors, their limits and bounds
- ``rationals`` / ``bivar``: exact Gaussian-rational algebra of the kernel
  polynomials, the weighted operator and its one-dimensional kernels
- ``kernels``: weighted Poisson kernel, extensions of circle distributions,
  rotational derivatives, spectra, and the pinned half-plane pullback
- ``obstruction``: the finite-degree obstruction class on the half-plane,
  growth envelopes, ray asymptotics, coefficient recovery, uniqueness tests
- ``zeros``: annulus certificates and root finding for the kernel profiles
- ``angles``: admissible families of ray angles and their minimal elements
- ``verify``: seeded, reproducible invariant suites
- ``service`` / ``cli``: HTTP and command-line frontends over one handler layer
"""

from .errors import (AlphaharmError, AngleDegenerate, DecompositionFailure, DomainError,
                     EmptyFamily, HypothesisViolation, IllConditioned, InvalidC,
                     NoConvergence, NonConvergent, NonPositiveCoefficient, NotAdmissible,
                     StepLimit, UncomparableRepresentation)
from .params import AlphaParam
from .rng import SplitMix64
from .hypergeom import (bound_below_minus1, bound_log, f_factor, f_factor_integral,
                        f_factor_sequence, gauss_limit, hyp2f1, pochhammer)
from .rationals import GaussianRational
from .bivar import (BivarPoly, angular_derivative, d_alpha, decompose_h_over_p, h_poly,
                    homogeneous_parts, nullspace_homogeneous, p_poly, p_value, s_poly,
                    s_value)
from .kernels import (SpectrumSet, ToroidalDistribution, ia_power_kernel, mobius,
                      mobius_deriv, poisson_integral, poisson_kernel,
                      poisson_kernel_series, pullback_constant, spectrum,
                      spectrum_of_integral, weighted_pullback)
from .obstruction import (GrowthBound, ObstructionFunction, RecoveryResult,
                          from_v0_coefficients, geodesic_vanishes, growth_bound,
                          ray_limit, recover_coefficients, sequence_ratio_vanishes,
                          uniqueness_test_geodesics, uniqueness_test_rays,
                          uniqueness_test_sequence, v0_form)
from .zeros import (AnnulusCertificate, certify_p_circle_free, ek_annulus,
                    kernel_profile_roots, min_modulus_on_circle, roots)
from .angles import (AdmissibilityReport, Angle, FunctionOfAngles, construct_finite,
                     construct_infinite, d_of, is_admissible, is_minimal, leq,
                     lower_bound)
from .verify import RunReport, run_suite

__version__ = "0.1.0"
