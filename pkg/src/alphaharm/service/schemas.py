"""Pydantic request/response models for the HTTP surface.

Complex numbers travel as {"re": float, "im": float}; alpha travels as a
string ("1/2", "-0.9", "3") so exact rationals survive the wire; angle
families use the same JSON shape the core serialisers emit.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field


class ComplexPair(BaseModel):
    re: float
    im: float = 0.0

    def to_complex(self) -> complex:
        return complex(self.re, self.im)


class KernelEvalRequest(BaseModel):
    alpha: str
    z: ComplexPair
    route: Literal["closed", "series"] = "closed"
    tol: float = Field(default=1e-12, gt=0)


class MemberEvalRequest(BaseModel):
    alpha: str
    coeffs: list[ComplexPair]
    z: ComplexPair
    basis: Literal["p", "v0"] = "p"


class FFactorRequest(BaseModel):
    alpha: str
    k: int = Field(ge=1)
    x: float
    method: Literal["series", "quadrature", "recurrence"] = "series"
    tol: float = Field(default=1e-14, gt=0)


class GaussLimitRequest(BaseModel):
    alpha: str
    k: int = Field(ge=1)


class IntegralRequest(BaseModel):
    alpha: str
    distribution: dict
    z: ComplexPair
    tol: float = Field(default=1e-12, gt=0)


class SpectrumRequest(BaseModel):
    alpha: str
    distribution: dict | None = None


class CertifyRequest(BaseModel):
    alpha: str
    k: int = Field(ge=1)


class RootsRequest(BaseModel):
    alpha: str | None = None
    k: int | None = Field(default=None, ge=1)
    coeffs: list[ComplexPair] | None = None
    residual_tol: float = Field(default=1e-10, gt=0)


class MinModulusRequest(BaseModel):
    alpha: str
    k: int = Field(ge=0)
    grid: int = Field(default=4096, ge=16)


class GrowthRequest(BaseModel):
    alpha: str
    coeffs: list[ComplexPair]
    basis: Literal["p", "v0"] = "p"


class RayLimitRequest(BaseModel):
    alpha: str
    coeffs: list[ComplexPair]
    theta: float
    basis: Literal["p", "v0"] = "p"


class TraceRequest(BaseModel):
    alpha: str
    coeffs: list[ComplexPair]
    basis: Literal["p", "v0"] = "p"
    theta: float | None = None
    eta: int | None = None
    x: float | None = None
    t0: float = Field(default=1e3, gt=0)
    count: int = Field(default=6, ge=2, le=64)


class RecoverRequest(BaseModel):
    alpha: str
    coeffs: list[ComplexPair]
    n_max: int = Field(ge=0, le=16)
    basis: Literal["p", "v0"] = "p"
    tol: float = Field(default=1e-6, gt=0)


class FoaCheckRequest(BaseModel):
    family: dict | list
    mode: Literal["exact", "brute"] = "exact"
    limit: int | None = Field(default=None, ge=1)


class FoaConstructRequest(BaseModel):
    angles: list[str]
    tail: str | None = None


class FoaFamilyRequest(BaseModel):
    family: dict | list


class FoaLeqRequest(BaseModel):
    a: dict | list
    b: dict | list


class SequenceSample(BaseModel):
    z: ComplexPair
    value: ComplexPair


class UniqSequenceRequest(BaseModel):
    alpha: str
    samples: list[SequenceSample]
    tol: float = Field(default=1e-6, gt=0)


class UniqGeodesicsRequest(BaseModel):
    coeffs: list[ComplexPair]
    x1: float
    x2: float
    basis: Literal["p", "v0"] = "v0"
    tol: float = Field(default=1e-6, gt=0)


class UniqRaysRequest(BaseModel):
    coeffs: list[ComplexPair]
    family: dict | list
    basis: Literal["p", "v0"] = "v0"
    tol: float = Field(default=1e-6, gt=0)
    n_max: int = Field(default=8, ge=1, le=32)


class VerifyRequest(BaseModel):
    suite: str = "all"
    seed: int = 0
    tol: float | None = Field(default=None, gt=0)
