import pytest

import contactlab

CONIC = "x0^2+x1^2-x2^2"


def test_report_conic():
    r = contactlab.report(CONIC)
    assert r["n"] == 2
    assert r["nstar"] == 2
    assert r["d_formula"] == 4
    assert r["d_independent"] == 4
    assert r["genus"] == 0
    assert r["good"] is True
    assert r["contact_residual_zero"] is True
    assert r["exit_code"] == 0


def test_dual_roundtrip():
    d = contactlab.dual("x1^2*x2-x0^3-x0^2*x2")
    assert d["n"] == 3
    assert d["delta"] == 1
    assert d["nstar"] == 4
    assert d["singularities"][0]["kind"] == "node"

    assert contactlab.dual_poly(CONIC) == "y0^2 + y1^2 - y2^2"
    assert contactlab.dual_poly("x0") == "[1, 0, 0]"


def test_verify_and_direct_ops():
    v = contactlab.verify("x1^2*x2-x0^3")
    assert v["contact_residual_zero"] is True
    assert contactlab.contact_residual_zero(CONIC) is True
    assert contactlab.image_degree(CONIC) == 4
    assert contactlab.canonical_poly("x1 + x0^2") == "x0^2 + x1"


def test_lift():
    out = contactlab.lift(CONIC, "[0, 1, 1]")
    assert out["tangent"] == "[0, 1, -1]"


def test_lines_and_pfaffian():
    e = contactlab.lines_experiment("1 0 0 0 0 1", count=200, seed=5)
    assert e["lines_tested"] == 200
    assert e["agreements"] == 200
    assert e["pfaffian"] == "1"
    assert contactlab.pfaffian("1 0 0 0 0 1") == "1"
    p = contactlab.plucker(["1", "0", "0", "1"], ["0", "1", "1", "0"])
    assert p == ["1", "1", "0", "0", "-1", "-1"]
    assert contactlab.is_contact_line("1 0 0 0 0 1",
                                      ["1", "0", "0", "0"],
                                      ["0", "0", "1", "0"])


def test_euler():
    e = contactlab.euler_check()
    assert e["all_pass"] is True
    assert contactlab.euler_identity(4, 1, 64) is True
    assert contactlab.euler_identity(4, 1, 72) is False


def test_determinism():
    a = contactlab.report(CONIC, seed=9)
    b = contactlab.report(CONIC, seed=9)
    assert a == b


def test_errors():
    with pytest.raises(ValueError):
        contactlab.report("x0^2 +")
    with pytest.raises(ValueError):
        contactlab.canonical_poly("q + 1")
    with pytest.raises(RuntimeError):
        contactlab.lift(CONIC, "[1, 1, 1]")  # off the curve
