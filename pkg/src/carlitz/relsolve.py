"""F_q[t]-relations among points of C^{(x)n}.

Pipeline: divisor ``D`` from the valuations of the points, a basis of L(D),
a linear system over F_q[t] expressing the difference equation

    g^(1) - (t - x)^n g = a_1 f_1 + ... + a_l f_l,

its kernel up to the degree bound ``n (dim L(D) + l)``, and a reduced
F_q[t]-basis of the projection onto the ``a``-coordinates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import linalg
from .ffcore import NEG_INF, FieldSpec, FPoly, RatFunc, binom_mod, poly_lcm
from .places import INFINITY, Divisor, Place, RRBasis, finite_places, ord_at, rr_basis
from .tensor import DomainError, TensorPoint, act, point_to_motive
from .tpoly import TPoly, twist


class InternalError(RuntimeError):
    """A computed object violated an invariant that the theory guarantees."""


@dataclass
class RelationProblem:
    spec: FieldSpec
    points: list

    def __post_init__(self):
        if not self.points:
            raise DomainError("at least one point is required")
        ns = {P.n for P in self.points}
        if len(ns) != 1:
            raise DomainError("all points must have the same dimension")
        for P in self.points:
            if P.is_zero():
                raise DomainError("points must be nonzero")
        if len({P.coords for P in self.points}) != len(self.points):
            raise DomainError("points must be distinct")
        self.motives = [point_to_motive(P) for P in self.points]

    @property
    def n(self) -> int:
        return self.points[0].n

    @property
    def ell(self) -> int:
        return len(self.points)


def point_ord(w: Place, P: TensorPoint):
    return min(ord_at(w, c) for c in P.coords)


# ---------------------------------------------------------------------------
# divisor
# ---------------------------------------------------------------------------


def c_values(problem: RelationProblem) -> list[tuple[Place, int]]:
    """``C_w`` at infinity and at every finite place dividing a coordinate."""
    n, q = problem.n, problem.spec.q
    out = []
    m_inf = min(point_ord(INFINITY, P) for P in problem.points)
    out.append((INFINITY, min(m_inf - (n - 1), -(n // (q - 1)))))
    places = {}
    for P in problem.points:
        for c in P.coords:
            if not c.is_zero():
                for w in finite_places(c):
                    places[w] = True
    for w in sorted(places, key=Place.sort_key):
        m = min(point_ord(w, P) for P in problem.points)
        out.append((w, min(m, 0)))
    return out


def relation_divisor(problem: RelationProblem) -> Divisor:
    return Divisor({w: -c for w, c in c_values(problem) if c})


# ---------------------------------------------------------------------------
# difference equation
# ---------------------------------------------------------------------------


def solve_difference(F: TPoly, n: int) -> TPoly | None:
    """The unique ``g`` in L[t] with ``g^(1) - (t - x)^n g = F``, if any."""
    spec = F.spec
    if F.is_zero():
        return TPoly.zero(spec)
    if F.deg < n:
        return None
    M = F.deg - n
    q, p = spec.q, spec.p
    mx = -RatFunc.from_poly(spec.theta())
    cb = [(binom_mod(n, j, p), mx ** (n - j)) for j in range(n + 1)]
    Z = RatFunc.zero(spec.big)
    g = [Z] * (M + 1)
    for k in range(M, -1, -1):
        val = -F[n + k]
        if n + k <= M:
            val = val + g[n + k].frobenius(q)
        for j in range(n):
            idx = n + k - j
            if idx <= M and cb[j][0]:
                val = val - (g[idx] * cb[j][1]).scale(cb[j][0])
        g[k] = val
    sol = TPoly(spec, g)
    if twist(sol, 1) - TPoly.t_minus_theta(spec, n) * sol != F:
        return None
    return sol


# ---------------------------------------------------------------------------
# linear system over F_q[t]
# ---------------------------------------------------------------------------


@dataclass
class AssembledSystem:
    B: list  # rows of FPoly over F_q
    rr: RRBasis
    denominator: FPoly
    row_labels: list  # (power of x in the numerator, index of the F_q-basis element of F_{q^m})
    column_labels: list

    @property
    def ncols(self) -> int:
        return len(self.column_labels)

    @property
    def deg(self) -> int:
        d = max((e.deg for row in self.B for e in row), default=NEG_INF)
        return 0 if d == NEG_INF else d


def _poly_vec(spec: FieldSpec, f: FPoly, length: int):
    v = []
    for e in range(length):
        v.extend(spec.subfield_coords(f[e]))
    return v


def assemble_system(problem: RelationProblem, rr: RRBasis | None = None) -> AssembledSystem:
    spec, n, q = problem.spec, problem.n, problem.spec.q
    small = spec.small
    m = spec.m
    if rr is None:
        rr = rr_basis(spec, relation_divisor(problem))
    d = rr.fq_dim
    x = spec.theta()
    delta_den = rr.g**q  # common denominator of every spanning vector of W
    polys_q = []  # b_k^q * den
    polys_x = []  # [x^j b_k * den for j = 0..n]
    for b in rr.fq_basis:
        bq = b.frobenius(q) * delta_den
        polys_q.append(bq.num)
        row = []
        for j in range(n + 1):
            e = RatFunc.from_poly(x**j) * b * delta_den
            row.append(e.num)
        polys_x.append(row)
    fs = []
    for f in problem.motives:
        coeffs = []
        for c in f.coeffs:
            if rr.coords(c) is None:
                raise InternalError("motive coefficient outside L(D)")
            e = c * delta_den
            if not e.is_poly():
                raise InternalError("motive coefficient not cleared by the common denominator")
            coeffs.append(e.num)
        fs.append(coeffs)
    length = 1 + max(
        [p.deg for p in polys_q]
        + [p.deg for row in polys_x for p in row]
        + [p.deg for cs in fs for p in cs]
        + [0]
    )
    length = int(length)
    ncoord = length * m
    span = [_poly_vec(spec, p, length) for p in polys_q]
    span += [_poly_vec(spec, p, length) for row in polys_x for p in row]
    red, pivots = linalg.rref(small, span, ncoord)

    def coords(p: FPoly):
        v = _poly_vec(spec, p, length)
        c = [v[pc] for pc in pivots]
        # verify that v is in W, i.e. the pivot coordinates reproduce it
        acc = [0] * ncoord
        for coef, row in zip(c, red):
            if coef:
                for i, val in enumerate(row):
                    if val:
                        acc[i] = small.add(acc[i], small.mul(coef, val))
        if acc != v:
            raise InternalError("vector outside the span W")
        return c

    nrows = len(pivots)
    B = [[FPoly.zero(small) for _ in range(d + problem.ell)] for _ in range(nrows)]
    for k in range(d):
        cq = coords(polys_q[k])
        cx = [coords(polys_x[k][j]) for j in range(n + 1)]
        for r in range(nrows):
            tc = [0] * (n + 1)
            tc[0] = cq[r]
            for j in range(n + 1):
                # -(t - x)^n b_k contributes -C(n,j) (-1)^(n-j) t^j x^(n-j) b_k
                b = binom_mod(n, j, spec.p)
                if not b:
                    continue
                s = small.from_int(b if (n - j) % 2 else -b)
                tc[j] = small.add(tc[j], small.mul(s, cx[n - j][r]))
            B[r][k] = FPoly(small, tc)
    for i, coeffs in enumerate(fs):
        cols = [coords(c) for c in coeffs]
        for r in range(nrows):
            B[r][d + i] = FPoly(small, [small.neg(col[r]) for col in cols])
    row_labels = [divmod(pc, m) for pc in pivots]
    col_labels = [f"g{k + 1}" for k in range(d)] + [f"a{i + 1}" for i in range(problem.ell)]
    return AssembledSystem(B, rr, delta_den, row_labels, col_labels)


# ---------------------------------------------------------------------------
# kernels over F_q[t]
# ---------------------------------------------------------------------------


def kernel_bounded(F, B, delta: int, ncols: int | None = None):
    """F_q-basis of ``{x : B x = 0, deg x <= delta}``, by comparing t-coefficients."""
    if delta < 0:
        raise ValueError("delta must be non-negative")
    if ncols is None:
        ncols = len(B[0]) if B else 0
    degB = max((e.deg for row in B for e in row), default=NEG_INF)
    degB = 0 if degB == NEG_INF else int(degB)
    width = delta + 1
    unknowns = ncols * width
    rows = []
    for brow in B:
        for s in range(delta + degB + 1):
            eq = [0] * unknowns
            nz = False
            for c, entry in enumerate(brow):
                ec = entry.c
                if not ec:
                    continue
                for k in range(max(0, s - len(ec) + 1), min(delta, s) + 1):
                    v = ec[s - k]
                    if v:
                        eq[c * width + k] = v
                        nz = True
            if nz:
                rows.append(eq)
    basis = linalg.nullspace(F, rows, unknowns)
    out = []
    for v in basis:
        out.append([FPoly(F, v[c * width : (c + 1) * width]) for c in range(ncols)])
    return out


def _vec_deg(v):
    return max((e.deg for e in v), default=NEG_INF)


def _lead_pos(v):
    d = _vec_deg(v)
    return max(i for i, e in enumerate(v) if e.deg == d)


def module_reduce(vectors, F=None):
    """Weak Popov form (Mulders-Storjohann) of the module spanned by ``vectors``."""
    vs = [list(v) for v in vectors if any(e.c for e in v)]
    if not vs:
        return []
    F = F or vs[0][0].F
    while True:
        seen = {}
        clash = None
        for idx, v in enumerate(vs):
            lp = _lead_pos(v)
            if lp in seen:
                clash = (seen[lp], idx)
                break
            seen[lp] = idx
        if clash is None:
            break
        i, j = clash
        u, w = vs[i], vs[j]
        if _vec_deg(u) < _vec_deg(w):
            i, j, u, w = j, i, w, u
        lp = _lead_pos(u)
        shift = int(_vec_deg(u) - _vec_deg(w))
        coef = F.div(u[lp].lc, w[lp].lc)
        mult = FPoly.monomial(F, shift, coef)
        new = [a - mult * b for a, b in zip(u, w)]
        if any(e.c for e in new):
            vs[i] = new
        else:
            vs.pop(i)
    vs.sort(key=lambda v: (_lead_pos(v), _vec_deg(v)))
    # normalize the pivot entry to be monic
    out = []
    for v in vs:
        lc = v[_lead_pos(v)].lc
        inv = F.inv(lc)
        out.append([e.scale(inv) for e in v])
    return out


def span_slice(gens, bound: int, ell: int, F):
    """F_q-basis (in echelon form) of the degree-``<= bound`` part of the module spanned by ``gens``.

    Valid for a weak Popov basis thanks to the predictable-degree property.
    """
    vecs = []
    width = bound + 1
    for m in gens:
        dm = _vec_deg(m)
        for k in range(int(bound - dm) + 1):
            shifted = [FPoly.monomial(F, k, 1) * e for e in m]
            vecs.append(_flat(shifted, width))
    red, _ = linalg.rref(F, vecs, ell * width)
    return red


def _flat(vec, width):
    out = []
    for e in vec:
        c = list(e.c) + [0] * (width - len(e.c))
        out.extend(c[:width])
    return out


@dataclass
class RelationModule:
    generators: list
    divisor: Divisor
    c_values: list
    d: int
    delta: int
    rr: RRBasis
    system: AssembledSystem = field(repr=False)

    @property
    def bound(self) -> int:
        return self.delta


def relation_sum(problem: RelationProblem, coeffs) -> TensorPoint:
    acc = TensorPoint.zero(problem.spec, problem.n)
    for a, P in zip(coeffs, problem.points):
        acc = acc + act(a, P)
    return acc


def relation_generators(problem: RelationProblem, verify: bool = True) -> RelationModule:
    spec = problem.spec
    F = spec.small
    n, ell = problem.n, problem.ell
    cv = c_values(problem)
    D = Divisor({w: -c for w, c in cv if c})
    rr = rr_basis(spec, D)
    system = assemble_system(problem, rr)
    d = rr.fq_dim
    delta = n * (d + ell)
    kernel = kernel_bounded(F, system.B, delta, system.ncols)
    width = delta + 1
    proj = [_flat(v[d:], width) for v in kernel]
    red, _ = linalg.rref(F, proj, ell * width)
    vecs = [[FPoly(F, row[i * width : (i + 1) * width]) for i in range(ell)] for row in red]
    gens = module_reduce(vecs, F)
    for m in gens:
        if _vec_deg(m) > delta:
            raise InternalError("generator exceeds the degree bound")
        if verify and not relation_sum(problem, m).is_zero():
            raise InternalError("generator is not a relation")
    return RelationModule(gens, D, cv, d, delta, rr, system)


# ---------------------------------------------------------------------------
# brute-force oracle
# ---------------------------------------------------------------------------

ENUM_LIMIT = 10**7


def _point_vectors(spec, images):
    """F_q-coordinates of a list of points over a common denominator."""
    den = FPoly.one(spec.big)
    for P in images:
        for c in P.coords:
            den = poly_lcm(den, c.den)
    polys = []
    for P in images:
        polys.append([(c * RatFunc.from_poly(den)).num for c in P.coords])
    length = int(max([p.deg for ps in polys for p in ps] + [0])) + 1
    return [sum((_poly_vec(spec, p, length) for p in ps), []) for ps in polys]


def brute_force_relations(problem: RelationProblem, deg_bound: int):
    """Every coefficient tuple of degree ``<= deg_bound`` that is a relation.

    Tuples are returned as tuples of small-field coefficient tuples (low to
    high, padded to ``deg_bound + 1``).
    """
    spec = problem.spec
    F = spec.small
    q, ell = spec.q, problem.ell
    width = deg_bound + 1
    count = q ** (ell * width)
    if count > ENUM_LIMIT:
        raise DomainError(f"enumeration of {count} tuples exceeds the limit {ENUM_LIMIT}")
    images = []
    for P in problem.points:
        for k in range(width):
            images.append(act(FPoly.monomial(F, k, 1), P))
    vecs = _point_vectors(spec, images)
    L = len(vecs[0])
    # F_q-coordinates are F_q-linear, so s * image has coordinates s * vec
    scaled = {s: [[F.mul(s, a) for a in v] for v in vecs] for s in F.elements()}
    out = []
    Fb = spec.small
    for combo in itertools.product(range(q), repeat=ell * width):
        acc = [0] * L
        for idx, s in enumerate(combo):
            if s:
                v = scaled[s][idx]
                acc = [Fb.add(a, b) for a, b in zip(acc, v)]
        if not any(acc):
            out.append(tuple(tuple(combo[i * width : (i + 1) * width]) for i in range(ell)))
    return out


def slice_elements(basis_rows, F, ell, width):
    """All elements of the F_q-span of ``basis_rows`` in the tuple format of :func:`brute_force_relations`."""
    out = set()
    k = len(basis_rows)
    L = ell * width
    for combo in itertools.product(range(F.order), repeat=k):
        acc = [0] * L
        for c, row in zip(combo, basis_rows):
            if c:
                acc = [F.add(a, F.mul(c, b)) for a, b in zip(acc, row)]
        out.add(tuple(tuple(acc[i * width : (i + 1) * width]) for i in range(ell)))
    return out


def fq_rank_of_ratfuncs(spec: FieldSpec, values) -> int:
    """Dimension of the F_q-span of a list of rational functions."""
    den = FPoly.one(spec.big)
    for c in values:
        den = poly_lcm(den, c.den)
    polys = [(c * RatFunc.from_poly(den)).num for c in values]
    length = int(max([p.deg for p in polys] + [0])) + 1
    vecs = [_poly_vec(spec, p, length) for p in polys]
    return linalg.rank(spec.small, vecs, length * spec.m)


def coefficient_matrix(spec: FieldSpec, motives):
    """Matrix over F_q[t] (rows = motives) of F_q-coordinates of t-coefficients.

    ``f_i = sum_lambda M[i][lambda](t) * lambda`` for a fixed F_q-basis
    ``lambda`` of monomials ``x^e gen^r`` over a common denominator.
    """
    small = spec.small
    den = FPoly.one(spec.big)
    for f in motives:
        for c in f.coeffs:
            den = poly_lcm(den, c.den)
    polys = [[(c * RatFunc.from_poly(den)).num for c in f.coeffs] for f in motives]
    length = int(max([p.deg for ps in polys for p in ps] + [0])) + 1
    ncoord = length * spec.m
    M = []
    for ps in polys:
        cols = [_poly_vec(spec, p, length) for p in ps]
        M.append([FPoly(small, [col[j] for col in cols]) for j in range(ncoord)])
    return M


def fqt_rank(F, M) -> int:
    """Rank over F_q(t) of a matrix with F_q[t] entries, by fraction-free elimination."""
    rows = [list(r) for r in M if any(e.c for e in r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c].c), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        for i in range(rank + 1, len(rows)):
            if rows[i][c].c:
                f = rows[i][c]
                rows[i] = [pr[c] * a - f * b for a, b in zip(rows[i], pr)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def motive_relations(spec: FieldSpec, motives, delta: int | None = None):
    """F_q-basis of ``{a : sum a_i f_i = 0 in L[t], deg a <= delta}``."""
    M = coefficient_matrix(spec, motives)
    ell = len(motives)
    degM = max((e.deg for r in M for e in r), default=NEG_INF)
    degM = 0 if degM == NEG_INF else int(degM)
    if delta is None:
        delta = ell * degM
    # columns of the kernel problem are the motives
    Bt = [[M[i][j] for i in range(ell)] for j in range(len(M[0]) if M else 0)]
    if not Bt:
        Bt = [[FPoly.zero(spec.small)] * ell]
    return kernel_bounded(spec.small, Bt, delta, ell)


__all__ = [
    "AssembledSystem",
    "InternalError",
    "RelationModule",
    "RelationProblem",
    "assemble_system",
    "brute_force_relations",
    "c_values",
    "kernel_bounded",
    "module_reduce",
    "relation_divisor",
    "relation_generators",
    "solve_difference",
    "span_slice",
]
