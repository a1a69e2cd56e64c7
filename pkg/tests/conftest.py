import random

import pytest
from hypothesis import settings

from carlitz.ffcore import FieldSpec, FPoly, RatFunc
from carlitz.tensor import TensorPoint

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# one line per acceptance criterion, filled in by tests/test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")


@pytest.fixture(scope="session")
def F3():
    return FieldSpec(3)


def rand_poly(rng, spec, max_deg, monic=False, nonzero=False):
    F = spec.big
    while True:
        d = rng.randint(0, max_deg)
        c = [rng.randrange(F.order) for _ in range(d + 1)]
        if monic:
            c[-1] = 1
        f = FPoly(F, c)
        if not nonzero or f.c:
            return f


def rand_ratfunc(rng, spec, num_deg=2, den_deg=2, zero_ok=True):
    while True:
        num = rand_poly(rng, spec, num_deg)
        den = rand_poly(rng, spec, den_deg, monic=True)
        f = RatFunc(num, den)
        if zero_ok or not f.is_zero():
            return f


def rand_point(rng, spec, n, num_deg=2, den_deg=2):
    while True:
        P = TensorPoint(spec, tuple(rand_ratfunc(rng, spec, num_deg, den_deg) for _ in range(n)))
        if not P.is_zero():
            return P


def rand_fq_poly(rng, spec, max_deg):
    small = spec.small
    d = rng.randint(0, max_deg)
    return FPoly(small, [rng.randrange(small.order) for _ in range(d + 1)])


@pytest.fixture
def rng():
    return random.Random(20240601)
