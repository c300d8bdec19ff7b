"""Command-line frontend.

Thin client over the service handler layer: each subcommand parses text
flags into plain values, calls one handler, and prints the canonical JSON
(or CSV, for tabular results).  Identical flags and seed give identical
output bytes.

Exit codes: 0 success, 1 verification failures, 2 usage errors,
3 domain/computation errors, 4 unwritable output.
"""

from __future__ import annotations

import argparse
import json
import sys

from .angles import Angle
from .errors import AlphaharmError, DomainError
from .jsonio import canonical_json, parse_complex, parse_complex_list, rows_to_csv
from .service import handlers

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_UNWRITABLE = 4


def _load_json_arg(text: str):
    """Inline JSON, or @path to read it from a file."""
    if text.startswith("@"):
        try:
            with open(text[1:], "r", encoding="utf-8") as fh:
                return json.load(fh)
        except OSError as exc:
            raise DomainError(f"cannot read {text[1:]!r}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise DomainError(f"invalid JSON in {text[1:]!r}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"invalid JSON argument: {exc}") from exc


def _parse_theta(text: str) -> float:
    """Ray angle: 'm/n' for (m/n) pi, or a float in radians."""
    if "/" in text or text.startswith("irr:"):
        return Angle.parse(text).value
    try:
        theta = float(text)
    except ValueError as exc:
        raise DomainError(f"unparseable angle {text!r}") from exc
    return theta


def _parse_samples(text: str) -> list[tuple[complex, complex]]:
    """'zre,zim:vre,vim;...' pairs for the sequence test."""
    out = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        try:
            z_s, v_s = part.split(":")
        except ValueError as exc:
            raise DomainError(f"sample {part!r} is not 'z:value'") from exc
        out.append((parse_complex(z_s), parse_complex(v_s)))
    return out


def _rows_of(result: dict) -> list[dict] | None:
    if "rows" in result:
        return result["rows"]
    if "roots" in result:
        return [{"re": w["re"], "im": w["im"], "modulus": m}
                for w, m in zip(result["roots"], result["moduli"])]
    return None


def _emit(result: dict, args) -> int:
    if args.format == "csv":
        rows = _rows_of(result)
        if rows is None:
            print("csv output is only available for tabular results (trace, roots)",
                  file=sys.stderr)
            return EXIT_USAGE
        text = rows_to_csv(rows, list(rows[0].keys()) if rows else None)
    else:
        text = canonical_json(result)
    if args.out is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"cannot write {args.out!r}: {exc}", file=sys.stderr)
        return EXIT_UNWRITABLE
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alphaharm",
        description="weighted harmonic function toolkit")
    parser.add_argument("--format", choices=("json", "csv"), default="json",
                        help="output format (csv only for tabular results)")
    parser.add_argument("--out", default=None, help="write output to this file")
    parser.add_argument("--tol", type=float, default=None, help="override default tolerance")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomised commands")
    sub = parser.add_subparsers(dest="command", required=True)

    # eval group
    p_eval = sub.add_parser("eval", help="evaluate kernels, members and radial factors")
    ev = p_eval.add_subparsers(dest="target", required=True)

    p = ev.add_parser("kernel", help="weighted Poisson kernel at a disc point")
    p.add_argument("--alpha", required=True)
    p.add_argument("--z", required=True, help="complex as 're,im'")
    p.add_argument("--route", choices=("closed", "series"), default="closed")

    p = ev.add_parser("member", help="obstruction-class member at a half-plane point")
    p.add_argument("--alpha", required=True)
    p.add_argument("--coeffs", required=True, help="'re,im;re,im;...'")
    p.add_argument("--z", required=True)
    p.add_argument("--basis", choices=("p", "v0"), default="p")

    p = ev.add_parser("f-factor", help="radial factor F(-alpha, k; k+1; x)")
    p.add_argument("--alpha", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--method", choices=("series", "quadrature", "recurrence"),
                   default="series")

    p = ev.add_parser("gauss-limit", help="x -> 1 limit of the radial factor")
    p.add_argument("--alpha", required=True)
    p.add_argument("--k", type=int, required=True)

    p = ev.add_parser("integral", help="weighted Poisson extension of a circle distribution")
    p.add_argument("--alpha", required=True)
    p.add_argument("--distribution", required=True, help="JSON or @file")
    p.add_argument("--z", required=True)

    p = ev.add_parser("p", help="kernel polynomial value p_k(z)")
    p.add_argument("--alpha", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--z", required=True)

    # spectrum
    p = sub.add_parser("spectrum", help="nonvanishing Fourier frequencies")
    p.add_argument("--alpha", required=True)
    p.add_argument("--distribution", default=None, help="JSON or @file (optional)")

    # zeros
    p = sub.add_parser("certify", help="annulus certificate for the kernel profile")
    p.add_argument("--alpha", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--min-modulus", action="store_true",
                   help="include the scanned minimum of |p_k| on the circle")

    p = sub.add_parser("roots", help="roots of the kernel profile or a given polynomial")
    p.add_argument("--alpha", default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--coeffs", default=None, help="'re,im;re,im;...' (overrides alpha/k)")
    p.add_argument("--residual-tol", type=float, default=1e-10)

    # member analysis
    p = sub.add_parser("trace", help="decay table along a ray or vertical geodesic")
    p.add_argument("--alpha", required=True)
    p.add_argument("--coeffs", required=True)
    p.add_argument("--basis", choices=("p", "v0"), default="p")
    p.add_argument("--theta", default=None, help="'m/n' of pi, or radians")
    p.add_argument("--eta", type=int, default=None)
    p.add_argument("--x", type=float, default=None)
    p.add_argument("--t0", type=float, default=1e3)
    p.add_argument("--count", type=int, default=6)

    p = sub.add_parser("recover", help="round-trip coefficient recovery from ray samples")
    p.add_argument("--alpha", required=True)
    p.add_argument("--coeffs", required=True)
    p.add_argument("--basis", choices=("p", "v0"), default="p")
    p.add_argument("--n-max", type=int, required=True)

    p = sub.add_parser("growth", help="growth envelope of a member")
    p.add_argument("--alpha", required=True)
    p.add_argument("--coeffs", required=True)
    p.add_argument("--basis", choices=("p", "v0"), default="p")

    # uniqueness tests
    p_uniq = sub.add_parser("uniq", help="uniqueness tests")
    uq = p_uniq.add_subparsers(dest="test", required=True)

    p = uq.add_parser("sequence", help="weighted decay along a sample sequence")
    p.add_argument("--alpha", required=True)
    p.add_argument("--samples", required=True, help="'zre,zim:vre,vim;...'")

    p = uq.add_parser("geodesics", help="two-vertical-geodesic test at alpha = 0")
    p.add_argument("--coeffs", required=True)
    p.add_argument("--basis", choices=("p", "v0"), default="v0")
    p.add_argument("--x1", type=float, required=True)
    p.add_argument("--x2", type=float, required=True)

    p = uq.add_parser("rays", help="admissible-family ray test at alpha = 0")
    p.add_argument("--coeffs", required=True)
    p.add_argument("--basis", choices=("p", "v0"), default="v0")
    p.add_argument("--family", required=True, help="JSON or @file")
    p.add_argument("--n-max", type=int, default=8)

    # angle families
    p_foa = sub.add_parser("foa", help="families of angles")
    fo = p_foa.add_subparsers(dest="action", required=True)

    p = fo.add_parser("check", help="admissibility report")
    p.add_argument("--family", required=True, help="JSON or @file")
    p.add_argument("--mode", choices=("exact", "brute"), default="exact")
    p.add_argument("--limit", type=int, default=None)

    p = fo.add_parser("construct", help="lcm-rule family from angle list")
    p.add_argument("--angles", required=True, help="comma-separated angle texts")
    p.add_argument("--tail", default=None, help="irrational closing angle")

    p = fo.add_parser("lower-bound", help="greedy minimal family below a given one")
    p.add_argument("--family", required=True)

    p = fo.add_parser("minimal", help="minimality check")
    p.add_argument("--family", required=True)

    p = fo.add_parser("leq", help="partial-order comparison of two families")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    # verification suites
    p = sub.add_parser("verify", help="run seeded invariant suites")
    p.add_argument("--suite", default="all")

    # service
    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _dispatch(args) -> dict:
    tol = args.tol

    if args.command == "eval":
        if args.target == "kernel":
            return handlers.eval_kernel(args.alpha, parse_complex(args.z), args.route,
                                        tol if tol is not None else 1e-12)
        if args.target == "member":
            return handlers.eval_member(args.alpha, parse_complex_list(args.coeffs),
                                        parse_complex(args.z), args.basis)
        if args.target == "f-factor":
            return handlers.eval_f_factor(args.alpha, args.k, args.x, args.method,
                                          tol if tol is not None else 1e-14)
        if args.target == "gauss-limit":
            return handlers.eval_gauss_limit(args.alpha, args.k)
        if args.target == "integral":
            return handlers.eval_integral(args.alpha, _load_json_arg(args.distribution),
                                          parse_complex(args.z),
                                          tol if tol is not None else 1e-12)
        if args.target == "p":
            return handlers.kernel_polynomial_value(args.alpha, args.k, parse_complex(args.z))

    if args.command == "spectrum":
        dist = _load_json_arg(args.distribution) if args.distribution else None
        return handlers.spectrum_info(args.alpha, dist)

    if args.command == "certify":
        out = handlers.certify(args.alpha, args.k)
        if args.min_modulus:
            out["min_modulus"] = handlers.min_modulus(args.alpha, args.k)["min_modulus"]
        return out

    if args.command == "roots":
        coeffs = parse_complex_list(args.coeffs) if args.coeffs else None
        return handlers.profile_roots(args.alpha, args.k, coeffs, args.residual_tol)

    if args.command == "trace":
        theta = _parse_theta(args.theta) if args.theta is not None else None
        return handlers.trace(args.alpha, parse_complex_list(args.coeffs), args.basis,
                              theta, args.eta, args.x, args.t0, args.count)

    if args.command == "recover":
        return handlers.recover(args.alpha, parse_complex_list(args.coeffs), args.n_max,
                                args.basis, tol if tol is not None else 1e-6)

    if args.command == "growth":
        return handlers.growth(args.alpha, parse_complex_list(args.coeffs), args.basis)

    if args.command == "uniq":
        t = tol if tol is not None else 1e-6
        if args.test == "sequence":
            return handlers.uniq_sequence(args.alpha, _parse_samples(args.samples), t)
        if args.test == "geodesics":
            return handlers.uniq_geodesics(parse_complex_list(args.coeffs),
                                           args.x1, args.x2, args.basis, t)
        if args.test == "rays":
            return handlers.uniq_rays(parse_complex_list(args.coeffs),
                                      _load_json_arg(args.family), args.basis, t,
                                      args.n_max)

    if args.command == "foa":
        if args.action == "check":
            return handlers.foa_check(_load_json_arg(args.family), args.mode, args.limit)
        if args.action == "construct":
            angles = [a.strip() for a in args.angles.split(",") if a.strip()]
            return handlers.foa_construct(angles, args.tail)
        if args.action == "lower-bound":
            return handlers.foa_lower_bound(_load_json_arg(args.family))
        if args.action == "minimal":
            return handlers.foa_minimal(_load_json_arg(args.family))
        if args.action == "leq":
            return handlers.foa_leq(_load_json_arg(args.a), _load_json_arg(args.b))

    if args.command == "verify":
        return handlers.run_verify(args.suite, args.seed, tol)

    raise DomainError(f"unhandled command {args.command!r}")


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    if args.command == "serve":
        import uvicorn

        from .service import create_app
        uvicorn.run(create_app(), host=args.host, port=args.port)
        return EXIT_OK

    try:
        result = _dispatch(args)
    except AlphaharmError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN

    code = _emit(result, args)
    if code != EXIT_OK:
        return code
    if args.command == "verify" and result.get("failures", 0) > 0:
        return EXIT_VERIFY_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
