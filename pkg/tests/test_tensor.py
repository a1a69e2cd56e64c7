import random

import pytest

from carlitz.ffcore import FieldSpec, FPoly, RatFunc
from carlitz.tensor import (
    DomainError,
    TensorPoint,
    act,
    act_matrix,
    as_fq_poly,
    carlitz_L,
    decompose,
    exp_coeffs,
    in_log_domain,
    log_coeffs,
    motive_to_point,
    point_to_motive,
    t_action,
)
from carlitz.tpoly import TPoly, from_theta_basis

from conftest import rand_fq_poly, rand_point

S3 = FieldSpec(3)
X = RatFunc.from_poly(S3.theta())


def fq(spec, *c):
    return FPoly(spec.small, c)


def test_motive_dictionary_examples():
    alpha = X**2 + 1
    assert point_to_motive(TensorPoint.last(S3, 3, alpha)) == TPoly(S3, (alpha,))
    P = TensorPoint(S3, (X.scale(2), X**2))
    assert point_to_motive(P) == from_theta_basis(S3, [X**2, X.scale(2)])
    assert motive_to_point(point_to_motive(P), 2) == P


def test_act_examples():
    one = TensorPoint(S3, (0, 1))
    assert act(fq(S3, 2, 0, 1), one) == TensorPoint(S3, (X.scale(2), X**2))
    assert act(fq(S3, 0, 1), one) == TensorPoint(S3, (1, X))
    assert t_action(one) == TensorPoint(S3, (1, X))


def test_decompose_examples():
    alpha = X + 2
    assert decompose(TensorPoint.last(S3, 3, alpha)) == [alpha, RatFunc.zero(S3.big), RatFunc.zero(S3.big)]
    assert decompose(TensorPoint(S3, (X.scale(2), X**2))) == [(X**2).scale(2), X.scale(2)]


@pytest.mark.parametrize("spec", [S3, FieldSpec(2, 1, 2), FieldSpec(2, 2, 1), FieldSpec(5)])
def test_act_matches_matrix_and_module_laws(spec):
    rng = random.Random(spec.q * 7 + spec.m)
    for _ in range(40):
        n = rng.randint(1, 3)
        P = rand_point(rng, spec, n, 2, 1)
        a, b = rand_fq_poly(rng, spec, 3), rand_fq_poly(rng, spec, 3)
        assert act(a, P) == act_matrix(a, P)
        assert act(a * b, P) == act(a, act(b, P))
        assert act(a + b, P) == act(a, P) + act(b, P)


def test_generators_lemma_other_fields():
    rng = random.Random(5)
    for spec in (FieldSpec(2, 1, 3), FieldSpec(3, 1, 2)):
        for _ in range(20):
            n = rng.randint(1, 4)
            P = rand_point(rng, spec, n)
            acc = TensorPoint.zero(spec, n)
            for i, f in enumerate(decompose(P)):
                acc = acc + act(FPoly.monomial(spec.small, i, 1), TensorPoint.last(spec, n, f))
            assert acc == P


def test_as_fq_poly():
    spec = FieldSpec(2, 1, 2)
    assert as_fq_poly(spec, 1) == FPoly.one(spec.small)
    assert as_fq_poly(spec, TPoly(spec, (1, 0, 1))) == fq(spec, 1, 0, 1)
    with pytest.raises(DomainError):
        as_fq_poly(spec, TPoly(spec, (RatFunc.const(spec.big, spec.gen),)))
    with pytest.raises(DomainError):
        as_fq_poly(spec, TPoly(spec, (spec.theta(),)))
    with pytest.raises(DomainError):
        as_fq_poly(spec, FPoly(spec.big, (1,)))


def _frob_mat(M, q):
    return [[v.frobenius(q) for v in row] for row in M]


def _mat_mul(A, B):
    n = len(A)
    Z = RatFunc.zero(A[0][0].F)
    out = [[Z] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            acc = Z
            for k in range(n):
                acc = acc + A[i][k] * B[k][j]
            out[i][j] = acc
    return out


def _d(n, x):
    Z = RatFunc.zero(x.F)
    one = RatFunc.one(x.F)
    return [[x if i == j else (one if j == i + 1 else Z) for j in range(n)] for i in range(n)]


def _E(n, F):
    Z = RatFunc.zero(F)
    return [[RatFunc.one(F) if (i, j) == (n - 1, 0) else Z for j in range(n)] for i in range(n)]


def _sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_sylvester_residuals_vanish(n):
    q = S3.q
    F = S3.big
    Q = exp_coeffs(S3, n, 3)
    P = log_coeffs(S3, n, 3)
    E = _E(n, F)
    for i in range(1, 4):
        d = _d(n, X)
        di = _d(n, X.frobenius(q**i))
        r_exp = _sub(_sub(_mat_mul(Q[i], di), _mat_mul(d, Q[i])), _mat_mul(E, _frob_mat(Q[i - 1], q)))
        assert all(v.is_zero() for row in r_exp for v in row)
        r_log = _sub(_sub(_mat_mul(d, P[i]), _mat_mul(P[i], di)), _mat_mul(P[i - 1], E))
        assert all(v.is_zero() for row in r_log for v in row)


def test_log_coeffs_n1_closed_form():
    for spec in (S3, FieldSpec(2), FieldSpec(2, 1, 2)):
        P = log_coeffs(spec, 1, 4)
        for i in range(5):
            assert P[i][0][0] == carlitz_L(spec, i).inverse()
    with pytest.raises(ValueError):
        log_coeffs(S3, 1, -1)


def test_in_log_domain_examples():
    assert in_log_domain(TensorPoint(S3, (0, 1)))
    assert in_log_domain(TensorPoint(S3, (X.scale(2), X**2)))
    assert not in_log_domain(TensorPoint(S3, (X**100, 0)))


def test_point_validation_and_printing():
    with pytest.raises(ValueError):
        TensorPoint(S3, ())
    P = TensorPoint(S3, (X, 2))
    assert P.to_strs() == ["x", "2"]
    assert P.p(0) == RatFunc.const(S3.big, 2)
    assert (P - P).is_zero()
    assert P.scale(2) == P + P
