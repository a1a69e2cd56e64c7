import random

import pytest

from carlitz.criteria import check_algindep_hypotheses, check_inf_criterion, check_valpha_criterion
from carlitz.ffcore import FieldSpec, FPoly, RatFunc
from carlitz.places import Place
from carlitz.relsolve import RelationProblem, relation_generators
from carlitz.tensor import motive_to_point
from carlitz.tpoly import TPoly

S3 = FieldSpec(3)
X = RatFunc.from_poly(S3.theta())
IRR = [[0, 1], [1, 1], [2, 1], [1, 0, 1], [2, 1, 1], [2, 2, 1]]


def inv(coeffs, spec=S3):
    return RatFunc(FPoly.one(spec.big), FPoly(spec.big, coeffs))


def test_inverse_irreducibles_pass():
    for spec in (S3, FieldSpec(5)):
        fs = [TPoly(spec, (inv(c, spec),)) for c in ([0, 1], [1, 1], [2, 1])]
        for n in (1, 2, 3):
            rep = check_inf_criterion(fs, n, solver=True)
            assert rep.overall and all(rep.conditions.values())
            assert rep.extra["points_independent"] is True


def test_constant_one_fails_condition_2():
    rep = check_inf_criterion([TPoly(S3, (1,))], 2)
    assert rep.conditions["independent"]
    assert not rep.conditions["ord_infinity"]
    w = rep.witnesses["ord_infinity"][0]
    assert (w.index, w.place, w.valuation) == (0, "inf", 0)
    assert not rep.overall


def test_dependence_detected():
    f = TPoly(S3, (inv([0, 1]), inv([1, 1])))
    g = TPoly(S3, (0, inv([0, 1]), inv([1, 1])))  # t * f
    rep = check_inf_criterion([f, g], 3)
    assert not rep.conditions["independent"] and rep.extra["rank"] == 1


def test_finite_place_condition():
    f = TPoly(S3, (RatFunc(FPoly.one(S3.big), FPoly(S3.big, [0, 0, 0, 1])),))  # 1/x^3
    rep = check_inf_criterion([f], 2)
    assert not rep.conditions["ord_finite"]
    assert rep.witnesses["ord_finite"][0].valuation == -3


def test_norm_condition():
    f = TPoly(S3, (inv([0, 1]), X**4))
    rep = check_inf_criterion([f], 2)
    assert not rep.conditions["norm"]


def test_criterion_agrees_with_solver():
    # whenever the criterion passes on motives of points, the solver finds no relation
    rng = random.Random(2)
    passing = 0
    for _ in range(20):
        n = rng.choice((1, 2))
        chosen = rng.sample(IRR, rng.randint(1, 3))
        fs = []
        for c in chosen:
            coeffs = [inv(c).scale(rng.randrange(1, 3))]
            if n == 2 and rng.random() < 0.5:
                coeffs.append(inv(rng.choice(IRR)))
            fs.append(TPoly(S3, coeffs))
        rep = check_inf_criterion(fs, n)
        if len({f for f in fs}) != len(fs):
            continue
        pts = [motive_to_point(f, n) for f in fs]
        mod = relation_generators(RelationProblem(S3, pts))
        if rep.overall:
            passing += 1
            assert mod.generators == []
        if not rep.conditions["independent"]:
            # a relation among the motives in L[t] is also one among the points
            assert mod.generators
    assert passing > 5


def test_valpha_examples():
    v = Place(S3.theta())
    alphas = [inv([1, 1]), inv([1, 0, 1])]
    assert check_valpha_criterion(alphas, v, 2, S3).overall
    rep = check_valpha_criterion([X], v, 2, S3)
    assert not rep.conditions["ord_infinity"]
    rep = check_valpha_criterion([alphas[0], alphas[0].scale(2)], v, 2, S3)
    assert not rep.conditions["independent"] and rep.extra["rank"] == 1
    rep = check_valpha_criterion([inv([0, 1])], v, 1, S3)
    assert not rep.conditions["v_bounded"]


def test_report_serializes():
    rep = check_inf_criterion([TPoly(S3, (1,))], 1)
    d = rep.as_dict()
    assert d["overall"] is False and d["witnesses"]["ord_infinity"][0]["place"] == "inf"
    assert d["conditions"]["independent"] is True and d["rank"] == 1


def test_algindep_examples():
    ok, reasons = check_algindep_hypotheses([1, 4], 3, 3)
    assert not ok and any("n_2=4" in r for r in reasons)
    ok, reasons = check_algindep_hypotheses([1, 2], 4, 2)
    assert not ok and any("power of p" in r for r in reasons)
    assert check_algindep_hypotheses([1, 5], 3, 3) == (True, [])
    with pytest.raises(ValueError):
        check_algindep_hypotheses([2, 2], 3, 3)
    with pytest.raises(ValueError):
        check_algindep_hypotheses([0], 3, 3)


def test_points_independent_needs_small_degree():
    rep = check_inf_criterion([TPoly(S3, (inv([0, 1]), 0, inv([1, 1])))], 2, solver=True)
    assert rep.extra["points_independent"] is None


def test_condition_one_dependent_family_has_point_relations():
    f = inv([1, 0, 1])
    fs = [TPoly(S3, (f,)), TPoly(S3, (0, f)), TPoly(S3, (f.scale(2), f))]
    rep = check_inf_criterion(fs, 2, solver=True)
    assert not rep.conditions["independent"] and rep.extra["rank"] == 1
    assert rep.extra["points_independent"] is False
