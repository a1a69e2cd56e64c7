"""The tensor power C^{(x)n} of the Carlitz module.

A point is stored as ``(p_{n-1}, ..., p_0)``: the first coordinate is the
coefficient of ``(t - x)^{n-1}`` in the associated motive class and the last
one is its constant term.  ``[t]`` acts by

    (x_1, ..., x_n) -> (x x_1 + x_2, ..., x x_{n-1} + x_n, x_1^q + x x_n).
"""

from __future__ import annotations

from dataclasses import dataclass

from .ffcore import INF, FieldSpec, FPoly, RatFunc
from .places import INFINITY, ord_at
from .tpoly import TPoly, from_theta_basis, sigma_reduce, to_theta_basis


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


@dataclass(frozen=True)
class TensorPoint:
    spec: FieldSpec
    coords: tuple

    def __post_init__(self):
        if len(self.coords) < 1:
            raise ValueError("a point needs at least one coordinate")
        F = self.spec.big
        fixed = []
        for c in self.coords:
            if isinstance(c, int):
                c = RatFunc.const(F, F.from_int(c))
            elif isinstance(c, FPoly):
                c = RatFunc.from_poly(c)
            fixed.append(c)
        object.__setattr__(self, "coords", tuple(fixed))

    @property
    def n(self) -> int:
        return len(self.coords)

    @classmethod
    def zero(cls, spec, n):
        return cls(spec, (0,) * n)

    @classmethod
    def last(cls, spec, n, alpha):
        """The point ``(0, ..., 0, alpha)``."""
        return cls(spec, (0,) * (n - 1) + (alpha,))

    def p(self, j: int) -> RatFunc:
        """The coordinate ``p_j`` (coefficient of ``(t - x)^j``)."""
        return self.coords[self.n - 1 - j]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def __add__(self, other: TensorPoint) -> TensorPoint:
        return TensorPoint(self.spec, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: TensorPoint) -> TensorPoint:
        return TensorPoint(self.spec, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def scale(self, c: int) -> TensorPoint:
        """Multiply by an element of F_{q^m} (given by its code)."""
        return TensorPoint(self.spec, tuple(x.scale(c) for x in self.coords))

    def to_strs(self, fmt=None):
        return [c.to_str(fmt=fmt) for c in self.coords]

    def __repr__(self):
        return f"TensorPoint({', '.join(self.to_strs())})"


# ---------------------------------------------------------------------------
# motive dictionary
# ---------------------------------------------------------------------------


def point_to_motive(P: TensorPoint) -> TPoly:
    return from_theta_basis(P.spec, [P.p(j) for j in range(P.n)])


def motive_to_point(f: TPoly, n: int) -> TensorPoint:
    qs = to_theta_basis(f)
    if len(qs) > n:
        raise ValueError("motive class representative has (t-x)-degree >= n")
    Z = RatFunc.zero(f.spec.big)
    qs = qs + [Z] * (n - len(qs))
    return TensorPoint(f.spec, tuple(reversed(qs)))


def decompose(P: TensorPoint) -> list[RatFunc]:
    """``f_0, ..., f_{n-1}`` with ``P = sum_i [t^i](0, ..., 0, f_i)``."""
    f = point_to_motive(P)
    Z = RatFunc.zero(P.spec.big)
    return [f.coeffs[i] if i < len(f.coeffs) else Z for i in range(P.n)]


# ---------------------------------------------------------------------------
# the F_q[t]-action
# ---------------------------------------------------------------------------


def as_fq_poly(spec: FieldSpec, a) -> FPoly:
    """Normalize ``a`` to a polynomial over the small field F_q.

    Accepts an :class:`FPoly` over ``spec.small``, a sequence of small-field
    codes, an ``int``, or a :class:`TPoly` whose coefficients are constants in
    F_q.
    """
    small = spec.small
    if isinstance(a, FPoly):
        if a.F != small:
            raise DomainError("polynomial is not over the scalar field F_q")
        return a
    if isinstance(a, int):
        return FPoly(small, (small.from_int(a),))
    if isinstance(a, TPoly):
        out = []
        for c in a.coeffs:
            if not c.is_poly() or c.num.deg > 0:
                raise DomainError("coefficients of the scalar polynomial must lie in F_q")
            v = c.num[0]
            if not spec.in_subfield(v):
                raise DomainError("coefficients of the scalar polynomial must lie in F_q")
            out.append(spec.restrict(v))
        return FPoly(small, out)
    return FPoly(small, list(a))


def act(a, P: TensorPoint) -> TensorPoint:
    """``[a]P`` computed through the motive: multiply and reduce modulo ``sigma - 1``."""
    spec = P.spec
    a = as_fq_poly(spec, a)
    f = TPoly.from_fq(spec, a) * point_to_motive(P)
    return motive_to_point(sigma_reduce(f, P.n), P.n)


def t_action(P: TensorPoint) -> TensorPoint:
    """``[t]P`` straight from the matrix ``x I + N + E tau``."""
    x = RatFunc.from_poly(P.spec.theta())
    q = P.spec.q
    c = P.coords
    n = P.n
    out = [x * c[i] + c[i + 1] for i in range(n - 1)]
    out.append(c[0].frobenius(q) + x * c[n - 1])
    return TensorPoint(P.spec, tuple(out))


def act_matrix(a, P: TensorPoint) -> TensorPoint:
    """``[a]P`` by Horner's rule on the matrix form of ``[t]``."""
    spec = P.spec
    a = as_fq_poly(spec, a)
    acc = TensorPoint.zero(spec, P.n)
    for c in reversed(a.c):
        acc = t_action(acc)
        if c:
            acc = acc + P.scale(spec.embed(c))
    return acc


# ---------------------------------------------------------------------------
# exp / log coefficients
# ---------------------------------------------------------------------------


def _ad_n(X, n, add, neg):
    """``N X - X N`` for the superdiagonal nilpotent ``N``; ``None`` is a structural zero."""
    out = [[None] * n for _ in range(n)]
    for r in range(n):
        for c in range(n):
            a = X[r + 1][c] if r + 1 < n else None
            b = X[r][c - 1] if c >= 1 else None
            if b is not None:
                b = neg(b)
            if a is None:
                out[r][c] = b
            elif b is None:
                out[r][c] = a
            else:
                out[r][c] = add(a, b)
    return out


def sylvester_step(kind: str, prev, n: int, cinv, frob):
    """One step of the exp/log coefficient recursion.

    ``prev`` is the previous coefficient matrix and ``cinv`` is
    ``1/(x - x^(q^i))`` in the scalar ring.  With ``d = x I + N`` and ``E``
    the bottom-left unit matrix the new coefficient solves
    ``d P_i - P_i d^(i) = P_{i-1} E`` (log) or
    ``Q_i d^(i) - d Q_i = E Q_{i-1}^(1)`` (exp); the solution is a finite
    series in ``ad_N`` because ``ad_N`` is nilpotent.
    """
    R = [[None] * n for _ in range(n)]
    if kind == "log":
        for r in range(n):
            R[r][0] = prev[r][n - 1]
        scale0 = cinv
    elif kind == "exp":
        for c in range(n):
            v = prev[0][c]
            R[n - 1][c] = None if v is None else frob(v)
        scale0 = -cinv
    else:
        raise ValueError("kind must be 'exp' or 'log'")
    add = lambda a, b: a + b  # noqa: E731
    neg = lambda a: -a  # noqa: E731
    acc = [[None] * n for _ in range(n)]
    term = R
    scale = scale0
    for k in range(2 * n - 1):
        negate = kind == "log" and k % 2 == 1
        for r in range(n):
            for c in range(n):
                v = term[r][c]
                if v is None:
                    continue
                v = v * scale
                if negate:
                    v = -v
                acc[r][c] = v if acc[r][c] is None else acc[r][c] + v
        term = _ad_n(term, n, add, neg)
        if all(v is None for row in term for v in row):
            break
        scale = scale * scale0
    return acc


def sylvester_coeffs(kind: str, n: int, i_max: int, theta, frob, inv, one):
    """Exp or log coefficient matrices ``M_0 .. M_{i_max}`` over a generic scalar ring.

    ``theta`` is the image of ``x``, ``frob`` the q-power map and ``inv`` a
    multiplicative inverse.  Identically zero entries are ``None``.
    """
    mats = [[[one if r == c else None for c in range(n)] for r in range(n)]]
    thq = theta
    for _ in range(1, i_max + 1):
        thq = frob(thq)
        mats.append(sylvester_step(kind, mats[-1], n, inv(theta - thq), frob))
    return mats


def _ratfunc_ring(spec):
    F = spec.big
    q = spec.q
    return dict(
        theta=RatFunc.from_poly(spec.theta()),
        frob=lambda v: v.frobenius(q),
        inv=lambda v: v.inverse(),
        one=RatFunc.one(F),
    )


def _fill_zeros(mats, spec):
    Z = RatFunc.zero(spec.big)
    return [[[Z if v is None else v for v in row] for row in M] for M in mats]


def log_coeffs(spec: FieldSpec, n: int, i_max: int):
    """Exact log coefficient matrices ``P_0 .. P_{i_max}`` over F_{q^m}(x)."""
    if i_max < 0:
        raise ValueError("i_max must be non-negative")
    return _fill_zeros(sylvester_coeffs("log", n, i_max, **_ratfunc_ring(spec)), spec)


def exp_coeffs(spec: FieldSpec, n: int, i_max: int):
    """Exact exp coefficient matrices ``Q_0 .. Q_{i_max}`` over F_{q^m}(x)."""
    if i_max < 0:
        raise ValueError("i_max must be non-negative")
    return _fill_zeros(sylvester_coeffs("exp", n, i_max, **_ratfunc_ring(spec)), spec)


def carlitz_L(spec: FieldSpec, i: int) -> RatFunc:
    """``L_i = (x - x^q)(x - x^{q^2}) ... (x - x^{q^i})``."""
    x = spec.theta()
    acc = FPoly.one(spec.big)
    xq = x
    for _ in range(i):
        xq = xq.frobenius(spec.q)
        acc = acc * (x - xq)
    return RatFunc.from_poly(acc)


# ---------------------------------------------------------------------------
# domain of the logarithm
# ---------------------------------------------------------------------------


def in_log_domain(P: TensorPoint) -> bool:
    """Whether ``|p_j|_inf < q^(nq/(q-1) - j)`` holds for every coordinate."""
    q, n = P.spec.q, P.n
    for j in range(n):
        o = ord_at(INFINITY, P.p(j))
        if o == INF:
            continue
        if (q - 1) * (j - o) >= n * q:
            return False
    return True
