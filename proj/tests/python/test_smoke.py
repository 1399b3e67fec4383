import math

import pytest

import hyperlog


def test_eligible_q():
    assert hyperlog.eligible_q_values("1/6", "5/6", 60) == [
        "1/2", "1/3", "2/3", "1/4", "3/4", "1/5", "2/5", "3/5", "4/5"]
    assert hyperlog.condition_holds("1/6", "5/6", "1/2")
    assert not hyperlog.condition_holds("1/6", "5/6", "1/7")


def test_hyp3f2_methods_agree():
    r = hyperlog.hyp3f2("1/6", "5/6", "1/2", digits=30)
    assert r["euler_integral"][:25] == r["levin_series"][:25]
    assert r["levin_series"].startswith("1.0891154139428481967")


def test_eval_expr():
    z = hyperlog.eval_expr("3*sqrt(3)/(2*pi)*1", digits=20)
    assert float(z["re"]) == pytest.approx(3 * math.sqrt(3) / (2 * math.pi))
    with pytest.raises(hyperlog.ParseError):
        hyperlog.eval_expr("2 +* 3")
    with pytest.raises(hyperlog.DomainError):
        hyperlog.eval_expr("1/(2-2)")


def test_verify_catalog():
    reports = hyperlog.verify(digits=30)
    assert [r["id"] for r in reports] == [e["id"] for e in hyperlog.catalog()]
    assert all(r["pass"] for r in reports)
    with pytest.raises(hyperlog.PreconditionError):
        hyperlog.verify(["nope"])


def test_discover_main_pair():
    d = hyperlog.discover("1/6", "5/6", "1/2", ["log(2 + sqrt(3))"], digits=40)
    assert d["status"] == "found"
    assert d["rhs"][0][1] == "log(2 + sqrt(3))"
    assert d["lhs_value"]["re"][:30] == d["rhs_value"]["re"][:30]


def test_find_relation_and_periods():
    r = hyperlog.find_relation(["1", "2"], 100, digits=30)
    assert r["status"] == "found" and sorted(map(abs, r["relation"])) == [1, 2]
    v1 = hyperlog.real_period("1/2", "v1", digits=30)
    v0 = hyperlog.real_period("1/2", "v0", digits=30)
    assert v1[:20] != v0[:20]
    with pytest.raises(hyperlog.PreconditionError):
        hyperlog.real_period("3/2", "v1")
