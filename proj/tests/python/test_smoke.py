import math

import pytest

import quintsect as q


def test_numerics_core():
    assert q.log_gamma(1.0) == pytest.approx(0.0, abs=1e-14)
    assert q.gamma(0.5).real == pytest.approx(math.sqrt(math.pi), rel=1e-13)
    assert q.pochhammer(-3.0, 2.0).real == pytest.approx(6.0, abs=1e-12)
    assert q.fifth_root(5) == q.fifth_root(0) == 1.0 + 0.0j
    assert q.identity_one_sum(10) == 5.0
    assert q.identity_two_sum(3) == 0.0
    assert q.gauss_multiplication_residual(0.7 + 0.0j, 5, 3) < 1e-12


def test_series_engine_accepts_python_callables():
    lhs = q.theorem21_lhs(lambda r: 1.0 / (r + 1.0), 1.0, 1.0, 0.3)
    rhs = q.theorem21_rhs(lambda r: 1.0 / (r + 1.0), 1.0, 1.0, 0.3)
    assert lhs.status == rhs.status == "converged"
    assert lhs.value == pytest.approx(rhs.value, rel=1e-11)


def test_pfq_evaluation_and_classification():
    spec = q.PFQSpec([1.0, 0.5], [1.5])
    diag = q.classify_pfq(spec, -0.25)
    assert diag.classification == "unit-disk"
    assert diag.omega == pytest.approx(0.0 + 0.0j)

    ev = q.eval_pfq(spec, -0.25)
    assert ev.status == "converged"
    assert ev.value.real == pytest.approx(math.atan(0.5) / 0.5, rel=1e-13)


def test_fox_wright_and_normalization():
    spec = q.FoxWrightSpec([(1.0, 1.0)], [(2.0, 1.0)])
    ev = q.eval_fox_wright(spec, 1.0)
    assert ev.value.real == pytest.approx(math.e - 1.0, rel=1e-12)
    star = q.eval_fox_wright_normalized(spec, 0.0)
    assert star.value == 1.0 + 0.0j


def test_identity_checks():
    spec = q.PFQSpec([1.0, 0.5], [1.5])
    result = q.check_identity("pfq-weighted", spec, -1.0, 0.6)
    assert result.verdict == "pass"
    assert 0.6 * result.rhs.real == pytest.approx(math.atan(0.6**5), abs=1e-12)

    out_of_domain = q.check_identity("pfq-weighted", spec, -1.0, 1.2)
    assert out_of_domain.verdict == "not-evaluable"


def test_catalog_surface():
    ids = q.catalog_case_ids()
    assert len(ids) == 20
    assert "eq4.6-arctan" in ids

    res = q.verify_case("eq4.6-arctan", 0.5)
    assert res.verdict == "pass"

    rows = q.verify_all(1e-9)
    by_id = {row["case_id"]: row for row in rows}
    assert by_id["eq4.8-E"]["status"] == "discrepant"
    assert all(row["status"] in ("verified", "discrepant") for row in rows)

    text = q.dump_catalog()
    assert text.startswith("# quintsect catalog v1")
    assert "case_id=eq4.13-K" in text


def test_oracle_vs_representation():
    for fn in q.special_functions():
        x = 0.3 + 0.1j
        want = q.eval_oracle(fn, x)
        got = q.eval_by_representation(fn, x)
        assert got == pytest.approx(want, rel=1e-10, abs=1e-12), fn


def test_errors_are_typed():
    with pytest.raises(ValueError):
        q.PFQSpec([1.0], [-2.0])
    with pytest.raises(ArithmeticError):
        q.log_gamma(-4.0)
    with pytest.raises(ValueError):
        q.eval_by_representation("K", 1.5)
