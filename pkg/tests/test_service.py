import math

import pytest
from fastapi.testclient import TestClient

from alphaharm.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def _ok(resp):
    assert resp.status_code == 200, resp.text
    return resp.json()


def test_health(client):
    body = _ok(client.get("/health"))
    assert body["status"] == "ok" and "version" in body


def test_kernel_eval_routes_agree(client):
    req = {"alpha": "1/2", "z": {"re": 0.3, "im": 0.4}}
    closed = _ok(client.post("/kernel/eval", json=req))
    series = _ok(client.post("/kernel/eval", json={**req, "route": "series"}))
    assert closed["value"]["re"] == pytest.approx(series["value"]["re"], rel=1e-9)
    assert closed["value"]["im"] == pytest.approx(series["value"]["im"], abs=1e-9)
    assert closed["alpha"] == "1/2"


def test_kernel_eval_classical_value(client):
    body = _ok(client.post("/kernel/eval", json={"alpha": "0", "z": {"re": 0.5}}))
    assert body["value"]["re"] == pytest.approx(3.0)


def test_kernel_integral_and_spectrum(client):
    dist = {"kind": "trig", "coeffs": [{"k": 3, "re": 1.0, "im": 0.0}]}
    body = _ok(client.post("/kernel/integral",
                           json={"alpha": "0.7", "distribution": dist,
                                 "z": {"re": 0.4, "im": 0.3}}))
    z = 0.4 + 0.3j
    assert complex(body["value"]["re"], body["value"]["im"]) == pytest.approx(z ** 3)
    spec = _ok(client.post("/kernel/spectrum", json={"alpha": "-3"}))
    assert spec["spectrum"] == {"kind": "half_line", "start": -2, "excluded": []}


def test_gauss_limit_exact_text(client):
    body = _ok(client.post("/hypergeom/gauss-limit", json={"alpha": "1/2", "k": 2}))
    assert body["exact"] == "8/15"
    assert body["value"] == pytest.approx(8 / 15)


def test_f_factor_methods_match(client):
    req = {"alpha": "-1/2", "k": 3, "x": 0.4}
    vals = [
        _ok(client.post("/hypergeom/f-factor", json={**req, "method": m}))["value"]
        for m in ("series", "quadrature", "recurrence")
    ]
    assert vals[0] == pytest.approx(vals[1], rel=1e-9)
    assert vals[0] == pytest.approx(vals[2], rel=1e-9)


def test_member_eval_and_info_v0(client):
    req = {"alpha": "0", "coeffs": [{"re": -2.0}, {"re": 1.0}], "basis": "v0",
           "z": {"re": 0.4, "im": 2.0}}
    body = _ok(client.post("/member/eval", json=req))
    z = 0.4 + 2.0j
    expected = ((z - 1) ** 2).imag
    assert complex(body["value"]["re"], body["value"]["im"]) == pytest.approx(expected)
    info = _ok(client.post("/member/info",
                           json={"alpha": "0", "coeffs": [{"re": -2.0}, {"re": 1.0}],
                                 "basis": "v0"}))
    assert info["degree"] == 1
    assert set(info["v0"]) == {"1", "2"}


def test_member_growth_and_ray_limit(client):
    req = {"alpha": "1/2", "coeffs": [{"re": 1.0}, {"re": 0.0}, {"re": 2.0}]}
    body = _ok(client.post("/member/growth", json=req))
    assert body["order"] == pytest.approx(2 + 0.5 + 1)
    assert body["constant"] > 0
    ray = _ok(client.post("/member/ray-limit", json={**req, "theta": math.pi / 3}))
    assert ray["theta"] == pytest.approx(math.pi / 3)


def test_member_trace_rows(client):
    req = {"alpha": "0", "coeffs": [{"re": 1.0}], "basis": "v0",
           "x": 0.0, "count": 4, "t0": 10.0}
    body = _ok(client.post("/member/trace", json=req))
    assert body["kind"] == "geodesic" and len(body["rows"]) == 4
    assert body["rows"][0]["t"] == 10.0
    # Im(z) along a vertical is y, so the ratio is exactly 1
    assert body["rows"][2]["ratio"] == pytest.approx(1.0)
    ray = _ok(client.post("/member/trace",
                          json={"alpha": "0", "coeffs": [{"re": 0.0}, {"re": 1.0}],
                                "basis": "v0", "theta": 1.0, "count": 3}))
    assert ray["kind"] == "ray" and ray["exponent"] == pytest.approx(2.0)


def test_member_trace_requires_one_path(client):
    resp = client.post("/member/trace",
                       json={"alpha": "0", "coeffs": [{"re": 1.0}],
                             "theta": 1.0, "x": 0.0})
    assert resp.status_code == 422
    assert resp.json()["error"] == "DomainError"


def test_member_recover_round_trip(client):
    req = {"alpha": "1", "coeffs": [{"re": 2.0}, {"re": 0.0, "im": 1.0}], "n_max": 3}
    body = _ok(client.post("/member/recover", json=req))
    assert body["worst_error"] < 1e-6
    assert len(body["recovered"]) == 4
    assert len(body["angles_used"]) == 4


def test_zeros_endpoints(client):
    cert = _ok(client.post("/zeros/certify", json={"alpha": "1/2", "k": 4}))
    assert cert["verdict"] == "circle_free_inside"
    assert cert["r_exact"] == "2/3"
    rts = _ok(client.post("/zeros/roots", json={"alpha": "0", "k": 2}))
    assert len(rts["roots"]) == 2
    assert all(m == pytest.approx(1.0, abs=1e-9) for m in rts["moduli"])
    custom = _ok(client.post("/zeros/roots",
                             json={"coeffs": [{"re": -1.0}, {"re": 0.0}, {"re": 1.0}]}))
    assert custom["source"] == "coeffs" and len(custom["roots"]) == 2
    mm = _ok(client.post("/zeros/min-modulus", json={"alpha": "1/2", "k": 5}))
    assert mm["min_modulus"] > 1e-3


def test_foa_endpoints(client):
    fam = _ok(client.post("/foa/construct",
                          json={"angles": ["1/2", "1/3", "1/5"],
                                "tail": "irr:phi:1.61803"}))
    assert [e["eta"] for e in fam["entries"]] == [1, 2, 6, 30]
    check = _ok(client.post("/foa/check", json={"family": fam}))
    assert check["admissible"] is True and check["method"] == "exact"
    minimal = _ok(client.post("/foa/minimal", json={"family": fam}))
    assert minimal["minimal"] is True
    lb = _ok(client.post("/foa/lower-bound", json={"family": fam}))
    assert _ok(client.post("/foa/leq", json={"a": lb, "b": fam}))["leq"] is True
    bad = _ok(client.post("/foa/check",
                          json={"family": [{"angle": "1/2", "eta": 1}]}))
    assert bad["admissible"] is False and bad["witness"] == 2


def test_foa_brute_mode(client):
    body = _ok(client.post("/foa/check",
                           json={"family": [{"angle": "1/2", "eta": 1},
                                            {"angle": "1/3", "eta": 1}],
                                 "mode": "brute", "limit": 50}))
    assert body == {"admissible": False, "method": "brute", "witness": 6, "limit": 50}


def test_uniqueness_endpoints(client):
    samples = [{"z": {"re": 0.0, "im": float(t)}, "value": {"re": 0.0, "im": 0.0}}
               for t in (1e3, 2e3, 4e3)]
    seq = _ok(client.post("/uniqueness/sequence",
                          json={"alpha": "1/2", "samples": samples}))
    assert seq["vanishes"] is True
    at_zero = client.post("/uniqueness/sequence", json={"alpha": "0", "samples": samples})
    assert at_zero.status_code == 422 and at_zero.json()["error"] == "DomainError"

    # Im((z-1)^2): one geodesic lies, two geodesics answer correctly
    geo = _ok(client.post("/uniqueness/geodesics",
                          json={"coeffs": [{"re": -2.0}, {"re": 1.0}],
                                "x1": 1.0, "x2": 0.0}))
    assert geo["vanishes"] is False

    fam = {"kind": "finite", "entries": [{"angle": "1/2", "eta": 1},
                                         {"angle": "irr:probe:1.1", "eta": 2}]}
    rays = _ok(client.post("/uniqueness/rays",
                           json={"coeffs": [{"re": 0.0}, {"re": 1.0}], "family": fam}))
    assert rays["vanishes"] is False
    zero = _ok(client.post("/uniqueness/rays",
                           json={"coeffs": [{"re": 0.0}], "family": fam}))
    assert zero["vanishes"] is True


def test_rays_rejects_inadmissible_family(client):
    resp = client.post("/uniqueness/rays",
                       json={"coeffs": [{"re": 0.0}],
                             "family": [{"angle": "1/2", "eta": 1}]})
    assert resp.status_code == 422
    assert resp.json()["error"] == "NotAdmissible"


def test_verify_endpoint(client):
    body = _ok(client.post("/verify", json={"suite": "zeros", "seed": 3}))
    assert body["failures"] == 0 and body["cases"] > 0
    assert body["suite"] == "zeros" and body["seed"] == 3


def test_validation_errors_are_422(client):
    resp = client.post("/kernel/eval", json={"alpha": "1/2"})
    assert resp.status_code == 422  # pydantic: missing z
    resp = client.post("/kernel/eval",
                       json={"alpha": "1/2", "z": {"re": 1.0, "im": 0.0}})
    assert resp.status_code == 422  # boundary point is outside the kernel's domain
    assert resp.json()["error"] == "DomainError"
