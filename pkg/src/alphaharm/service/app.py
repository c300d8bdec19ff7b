"""FastAPI application: a thin HTTP shell over the handler layer.

Every domain or computation failure from the core maps to 422 with the
exception class name, so clients can distinguish bad input from service
faults without parsing prose.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import AlphaharmError
from . import handlers
from . import schemas as s


def create_app() -> FastAPI:
    app = FastAPI(title="alphaharm", version=__version__)

    @app.exception_handler(AlphaharmError)
    async def _domain_error(request: Request, exc: AlphaharmError):
        return JSONResponse(status_code=422,
                            content={"error": type(exc).__name__, "message": str(exc)})

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/kernel/eval")
    def kernel_eval(req: s.KernelEvalRequest) -> dict:
        return handlers.eval_kernel(req.alpha, req.z.to_complex(), req.route, req.tol)

    @app.post("/kernel/integral")
    def kernel_integral(req: s.IntegralRequest) -> dict:
        return handlers.eval_integral(req.alpha, req.distribution, req.z.to_complex(), req.tol)

    @app.post("/kernel/spectrum")
    def kernel_spectrum(req: s.SpectrumRequest) -> dict:
        return handlers.spectrum_info(req.alpha, req.distribution)

    @app.post("/hypergeom/f-factor")
    def f_factor(req: s.FFactorRequest) -> dict:
        return handlers.eval_f_factor(req.alpha, req.k, req.x, req.method, req.tol)

    @app.post("/hypergeom/gauss-limit")
    def gauss_limit(req: s.GaussLimitRequest) -> dict:
        return handlers.eval_gauss_limit(req.alpha, req.k)

    @app.post("/member/eval")
    def member_eval(req: s.MemberEvalRequest) -> dict:
        return handlers.eval_member(req.alpha, [c.to_complex() for c in req.coeffs],
                                    req.z.to_complex(), req.basis)

    @app.post("/member/info")
    def member_info(req: s.GrowthRequest) -> dict:
        return handlers.member_info(req.alpha, [c.to_complex() for c in req.coeffs], req.basis)

    @app.post("/member/growth")
    def member_growth(req: s.GrowthRequest) -> dict:
        return handlers.growth(req.alpha, [c.to_complex() for c in req.coeffs], req.basis)

    @app.post("/member/ray-limit")
    def member_ray_limit(req: s.RayLimitRequest) -> dict:
        return handlers.ray_limit_info(req.alpha, [c.to_complex() for c in req.coeffs],
                                       req.theta, req.basis)

    @app.post("/member/trace")
    def member_trace(req: s.TraceRequest) -> dict:
        return handlers.trace(req.alpha, [c.to_complex() for c in req.coeffs], req.basis,
                              req.theta, req.eta, req.x, req.t0, req.count)

    @app.post("/member/recover")
    def member_recover(req: s.RecoverRequest) -> dict:
        return handlers.recover(req.alpha, [c.to_complex() for c in req.coeffs],
                                req.n_max, req.basis, req.tol)

    @app.post("/zeros/certify")
    def zeros_certify(req: s.CertifyRequest) -> dict:
        return handlers.certify(req.alpha, req.k)

    @app.post("/zeros/roots")
    def zeros_roots(req: s.RootsRequest) -> dict:
        coeffs = [c.to_complex() for c in req.coeffs] if req.coeffs is not None else None
        return handlers.profile_roots(req.alpha, req.k, coeffs, req.residual_tol)

    @app.post("/zeros/min-modulus")
    def zeros_min_modulus(req: s.MinModulusRequest) -> dict:
        return handlers.min_modulus(req.alpha, req.k, req.grid)

    @app.post("/foa/check")
    def foa_check(req: s.FoaCheckRequest) -> dict:
        return handlers.foa_check(req.family, req.mode, req.limit)

    @app.post("/foa/construct")
    def foa_construct(req: s.FoaConstructRequest) -> dict:
        return handlers.foa_construct(req.angles, req.tail)

    @app.post("/foa/lower-bound")
    def foa_lower_bound(req: s.FoaFamilyRequest) -> dict:
        return handlers.foa_lower_bound(req.family)

    @app.post("/foa/minimal")
    def foa_minimal(req: s.FoaFamilyRequest) -> dict:
        return handlers.foa_minimal(req.family)

    @app.post("/foa/leq")
    def foa_leq(req: s.FoaLeqRequest) -> dict:
        return handlers.foa_leq(req.a, req.b)

    @app.post("/uniqueness/sequence")
    def uniq_sequence(req: s.UniqSequenceRequest) -> dict:
        samples = [(p.z.to_complex(), p.value.to_complex()) for p in req.samples]
        return handlers.uniq_sequence(req.alpha, samples, req.tol)

    @app.post("/uniqueness/geodesics")
    def uniq_geodesics(req: s.UniqGeodesicsRequest) -> dict:
        return handlers.uniq_geodesics([c.to_complex() for c in req.coeffs],
                                       req.x1, req.x2, req.basis, req.tol)

    @app.post("/uniqueness/rays")
    def uniq_rays(req: s.UniqRaysRequest) -> dict:
        return handlers.uniq_rays([c.to_complex() for c in req.coeffs], req.family,
                                  req.basis, req.tol, req.n_max)

    @app.post("/verify")
    def verify(req: s.VerifyRequest) -> dict:
        return handlers.run_verify(req.suite, req.seed, req.tol)

    return app
