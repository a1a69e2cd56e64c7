"""Checkable sufficient conditions for linear independence of polylogarithm values."""

from __future__ import annotations

from dataclasses import dataclass, field

from .ffcore import INF, FieldSpec, RatFunc
from .places import INFINITY, Place, finite_places, ord_at, ord_tpoly
from .relsolve import (
    RelationProblem,
    coefficient_matrix,
    fq_rank_of_ratfuncs,
    fqt_rank,
    motive_relations,
    relation_generators,
)
from .tensor import motive_to_point
from .tpoly import TPoly, gauss_ord


@dataclass
class Witness:
    index: int  # 0-based position of the failing input
    place: str
    valuation: int | float
    required: str

    def as_dict(self):
        v = self.valuation
        return {
            "index": self.index,
            "place": self.place,
            "valuation": None if v == INF else v,
            "required": self.required,
        }


@dataclass
class CriterionReport:
    conditions: dict = field(default_factory=dict)  # name -> bool
    witnesses: dict = field(default_factory=dict)  # name -> list[Witness]
    extra: dict = field(default_factory=dict)

    @property
    def overall(self) -> bool:
        return all(self.conditions[k] for k in ("independent", "ord_infinity", "ord_finite"))

    def as_dict(self):
        return {
            "overall": self.overall,
            "conditions": dict(self.conditions),
            "witnesses": {k: [w.as_dict() for w in ws] for k, ws in self.witnesses.items()},
            **self.extra,
        }


def _valuation_conditions(rep: CriterionReport, ords_inf, finite, q):
    """Fill in the valuation conditions from precomputed data.

    ``ords_inf[i]`` is the valuation at infinity of input ``i``;
    ``finite`` lists ``(i, place, valuation)`` for denominator places.
    """
    bad_inf = [Witness(i, "inf", o, "> 0") for i, o in enumerate(ords_inf) if not o > 0]
    bad_fin = [Witness(i, w.label(), o, f">= {1 - q}") for i, w, o in finite if o < 1 - q]
    rep.conditions["ord_infinity"] = not bad_inf
    rep.conditions["ord_finite"] = not bad_fin
    rep.witnesses["ord_infinity"] = bad_inf
    rep.witnesses["ord_finite"] = bad_fin


def _denominator_places(values):
    places = {}
    for c in values:
        if c.den.deg >= 1:
            for w in finite_places(RatFunc.from_poly(c.den)):
                places[w] = True
    return sorted(places, key=Place.sort_key)


def check_inf_criterion(fs: list[TPoly], n: int, solver: bool = False) -> CriterionReport:
    """Check the hypotheses of the infinity-adic independence theorem for ``f_1, ..., f_l``.

    Condition (1), F_q[t]-linear independence in L[t], is decided twice: by
    the rank over F_q(t) of the coefficient matrix and by a bounded kernel
    computation.  The two must agree.  With ``solver=True`` the points
    attached to the ``f_i`` are also run through the relation solver and the
    outcome is reported under ``points_independent``.
    """
    if not fs:
        raise ValueError("need at least one polynomial")
    spec = fs[0].spec
    q = spec.q
    ell = len(fs)
    rep = CriterionReport()
    rank = fqt_rank(spec.small, coefficient_matrix(spec, fs))
    kernel_says = not motive_relations(spec, fs)
    rank_says = rank == ell
    if rank_says != kernel_says:
        raise RuntimeError("rank and kernel computations disagree")
    rep.conditions["independent"] = rank_says
    rep.extra["rank"] = rank

    ords_inf = [ord_tpoly(INFINITY, f) for f in fs]
    finite = []
    for w in _denominator_places([c for f in fs for c in f.coeffs]):
        for i, f in enumerate(fs):
            finite.append((i, w, ord_tpoly(w, f)))
    _valuation_conditions(rep, ords_inf, finite, q)

    bad_norm = []
    for i, f in enumerate(fs):
        o = gauss_ord(f)
        if o != INF and (q - 1) * (-o) >= n * q:
            bad_norm.append(Witness(i, "inf", o, f"(q-1)*(-ord) < {n * q}"))
    rep.conditions["norm"] = not bad_norm
    rep.witnesses["norm"] = bad_norm

    if solver:
        if any(f.deg >= n for f in fs):
            rep.extra["points_independent"] = None
        else:
            pts = [motive_to_point(f, n) for f in fs]
            try:
                mod = relation_generators(RelationProblem(spec, pts))
                rep.extra["points_independent"] = not mod.generators
            except ValueError:
                rep.extra["points_independent"] = False
    return rep


def check_valpha_criterion(alphas: list[RatFunc], v: Place, n: int, spec: FieldSpec) -> CriterionReport:
    """Hypotheses of the v-adic theorem for constants ``alpha_1, ..., alpha_l``."""
    q = spec.q
    rep = CriterionReport()
    rank = fq_rank_of_ratfuncs(spec, alphas)
    rep.conditions["independent"] = rank == len(alphas)
    rep.extra["rank"] = rank
    ords_inf = [ord_at(INFINITY, a) for a in alphas]
    finite = []
    for w in _denominator_places(alphas):
        for i, a in enumerate(alphas):
            finite.append((i, w, ord_at(w, a)))
    _valuation_conditions(rep, ords_inf, finite, q)
    bad_v = [Witness(i, v.label(), o, ">= 0") for i, a in enumerate(alphas) if (o := ord_at(v, a)) < 0]
    rep.conditions["v_bounded"] = not bad_v
    rep.witnesses["v_bounded"] = bad_v
    return rep


def check_algindep_hypotheses(ns: list[int], q: int, p: int):
    """Integer hypotheses of the algebraic-independence corollary.

    Returns ``(ok, reasons)`` where ``reasons`` lists every violated condition.
    """
    if any(k < 1 for k in ns):
        raise ValueError("weights must be positive")
    if len(set(ns)) != len(ns):
        raise ValueError("weights must be distinct")
    reasons = []
    for j, k in enumerate(ns):
        if k % (q - 1) == 0:
            reasons.append(f"n_{j + 1}={k} is divisible by q-1={q - 1}")
    for i in range(len(ns)):
        for j in range(i + 1, len(ns)):
            a, b = sorted((ns[i], ns[j]))
            if b % a == 0 and _is_power(b // a, p):
                reasons.append(f"n_{i + 1}/n_{j + 1} is a power of p={p}")
    return not reasons, reasons


def _is_power(r: int, p: int) -> bool:
    while r % p == 0:
        r //= p
    return r == 1
