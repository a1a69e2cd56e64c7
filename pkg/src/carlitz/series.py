"""Laurent series in a completion of F_{q^m}(x), and polylogarithm evaluation.

Two completions are supported: at infinity, in the uniformizer ``u = 1/x``,
and at a degree-one place ``x - c`` with ``c`` in F_q, in ``u = x - c``.

A :class:`LaurentSeries` is ``sum digits[k] u^(start + k)`` known modulo
``u^prec`` (``prec`` may be ``inf`` for exactly known values).  Arithmetic
tracks precision pessimistically, so a value never claims digits it does not
know.  The valuation of a series is the ``ord`` of the element it represents:
``x`` at infinity has valuation ``-1``.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels, linalg
from .ffcore import INF, FieldSpec, FPoly, RatFunc, binom_mod, format_const
from .places import INFINITY, Place, ord_at
from .tensor import (
    DomainError,
    TensorPoint,
    act,
    as_fq_poly,
    in_log_domain,
    sylvester_step,
)
from .tpoly import TPoly

DEFAULT_PRECISION = 128
_GUARD = 8
_MAX_RETRIES = 6


class PrecisionError(ArithmeticError):
    """The requested precision could not be reached."""


# ---------------------------------------------------------------------------
# completions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Completion:
    spec: FieldSpec
    center: int | None = None  # code in F_{q^m} of c, or None for infinity

    @classmethod
    def infinity(cls, spec):
        return cls(spec, None)

    @classmethod
    def at(cls, spec: FieldSpec, place: Place):
        """Completion at a place ``x - c`` with ``c`` in F_q."""
        if place.is_infinite:
            return cls(spec, None)
        if place.degree != 1:
            raise DomainError("only degree-one places are supported")
        c = spec.big.neg(place.poly[0])
        if not spec.in_subfield(c):
            raise DomainError("the place must be x - c with c in F_q")
        return cls(spec, c)

    @property
    def is_infinite(self) -> bool:
        return self.center is None

    @property
    def place(self) -> Place:
        if self.center is None:
            return INFINITY
        F = self.spec.big
        return Place(FPoly(F, (F.neg(self.center), 1)))

    def label(self) -> str:
        return self.place.label()


# ---------------------------------------------------------------------------
# series
# ---------------------------------------------------------------------------


def _conv(F, a, b):
    if F.k == 1:
        return _kernels.conv_modp(a, b, F.p)
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    add, mul = F.add, F.mul
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = add(out[i + j], mul(x, y))
    return out


def _padd(F, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    if F.k == 1:
        p = F.p
        for i, y in enumerate(b):
            out[i] = (out[i] + y) % p
    else:
        for i, y in enumerate(b):
            if y:
                out[i] = F.add(out[i], y)
    return out


class LaurentSeries:
    __slots__ = ("comp", "start", "digits", "prec")

    def __init__(self, comp: Completion, start: int, digits, prec=INF):
        digits = list(digits)
        # drop digits at or beyond the precision
        if prec != INF:
            keep = max(0, prec - start)
            digits = digits[:keep]
        # normalize leading zeros
        k = 0
        while k < len(digits) and digits[k] == 0:
            k += 1
        if k:
            digits = digits[k:]
            start += k
        if prec == INF:
            while digits and digits[-1] == 0:
                digits.pop()
        if not digits:
            start = prec if prec != INF else 0
        self.comp = comp
        self.start = start
        self.digits = tuple(digits)
        self.prec = prec

    # -- construction ----------------------------------------------------------
    @classmethod
    def zero(cls, comp, prec=INF):
        return cls(comp, 0, (), prec)

    @classmethod
    def const(cls, comp, a: int):
        return cls(comp, 0, (a,))

    @classmethod
    def theta(cls, comp):
        if comp.is_infinite:
            return cls(comp, -1, (1,))
        return cls(comp, 0, (comp.center, 1))

    # -- properties ----------------------------------------------------------
    @property
    def F(self):
        return self.comp.spec.big

    def is_exact_zero(self) -> bool:
        return not self.digits and self.prec == INF

    def is_zero(self) -> bool:
        """No nonzero digit is known (the value is zero to the stated precision)."""
        return not self.digits

    @property
    def valuation(self):
        """Valuation; for a series with no known nonzero digit this is the precision (a lower bound)."""
        return self.start if self.digits else self.prec

    @property
    def relprec(self):
        return self.prec - self.valuation

    def digit(self, e: int) -> int:
        k = e - self.start
        if 0 <= k < len(self.digits):
            return self.digits[k]
        if self.prec != INF and e >= self.prec:
            raise PrecisionError(f"digit u^{e} is beyond the precision {self.prec}")
        return 0

    def truncate(self, N) -> LaurentSeries:
        if N >= self.prec:
            return self
        return LaurentSeries(self.comp, self.start, self.digits, N)

    def window(self, N=None):
        """``(valuation, digits, precision)`` with digits from the valuation up to the precision."""
        s = self if N is None else self.truncate(N)
        if s.prec == INF:
            return s.valuation, list(s.digits), None
        ds = list(s.digits) + [0] * max(0, s.prec - s.start - len(s.digits))
        return s.valuation, ds, s.prec

    def __repr__(self):
        v, ds, p = self.window()
        head = " ".join(format_const(self.F, d) for d in ds[:8])
        more = " ..." if len(ds) > 8 else ""
        return f"LaurentSeries(val={v}, [{head}{more}], prec={p})"

    # -- arithmetic ------------------------------------------------------------
    def _check(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        if other.comp != self.comp:
            raise ValueError("series from different completions")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prec = min(self.prec, other.prec)
        if not self.digits:
            return LaurentSeries(self.comp, other.start, other.digits, prec)
        if not other.digits:
            return LaurentSeries(self.comp, self.start, self.digits, prec)
        s = min(self.start, other.start)
        a = [0] * (self.start - s) + list(self.digits)
        b = [0] * (other.start - s) + list(other.digits)
        return LaurentSeries(self.comp, s, _padd(self.F, a, b), prec)

    __radd__ = __add__

    def __neg__(self):
        F = self.F
        return LaurentSeries(self.comp, self.start, [F.neg(d) for d in self.digits], self.prec)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        va, vb = self.valuation, other.valuation
        prec = min(va + other.prec, vb + self.prec)
        if not self.digits or not other.digits:
            return LaurentSeries.zero(self.comp, prec)
        start = self.start + other.start
        a, b = self.digits, other.digits
        if prec != INF:
            keep = prec - start
            a, b = a[:keep], b[:keep]
        return LaurentSeries(self.comp, start, _conv(self.F, list(a), list(b)), prec)

    __rmul__ = __mul__

    def scale(self, c: int) -> LaurentSeries:
        F = self.F
        return LaurentSeries(self.comp, self.start, [F.mul(c, d) for d in self.digits], self.prec)

    def shift(self, k: int) -> LaurentSeries:
        """Multiply by ``u^k``."""
        return LaurentSeries(self.comp, self.start + k, self.digits, self.prec + k)

    def inverse(self, rel: int | None = None) -> LaurentSeries:
        """Multiplicative inverse with relative precision at most ``rel``.

        An exact monomial has an exact inverse; otherwise ``rel`` (or the
        operand's own relative precision) bounds the result.
        """
        if not self.digits:
            raise ZeroDivisionError("inverse of a series with no known nonzero digit")
        F = self.F
        v = self.start
        a = self.digits
        if len(a) == 1 and self.prec == INF:
            return LaurentSeries(self.comp, -v, (F.inv(a[0]),))
        L = self.relprec
        if rel is not None:
            L = min(L, rel)
        if L == INF:
            raise PrecisionError("an explicit relative precision is needed to invert this series")
        L = int(L)
        inv0 = F.inv(a[0])
        out = [0] * L
        out[0] = inv0
        if F.k == 1:
            p = F.p
            neg_inv0 = (-inv0) % p
            for k in range(1, L):
                s = 0
                for j in range(1, min(k, len(a) - 1) + 1):
                    if a[j]:
                        s += a[j] * out[k - j]
                out[k] = s * neg_inv0 % p
        else:
            add, mul = F.add, F.mul
            neg_inv0 = F.neg(inv0)
            for k in range(1, L):
                s = 0
                for j in range(1, min(k, len(a) - 1) + 1):
                    if a[j] and out[k - j]:
                        s = add(s, mul(a[j], out[k - j]))
                out[k] = mul(s, neg_inv0)
        return LaurentSeries(self.comp, -v, out, -v + L)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        r = LaurentSeries.const(self.comp, 1)
        b = self
        while e:
            if e & 1:
                r = r * b
            e >>= 1
            if e:
                b = b * b
        return r

    def frob(self, k: int = 1) -> LaurentSeries:
        """``self ** (q**k)``: digits raised to that power, exponents multiplied."""
        if k == 0:
            return self
        Q = self.comp.spec.q ** k
        F = self.F
        out = [0] * ((len(self.digits) - 1) * Q + 1) if self.digits else []
        for i, d in enumerate(self.digits):
            if d:
                out[i * Q] = F.pow(d, Q)
        prec = self.prec * Q if self.prec != INF else INF
        return LaurentSeries(self.comp, self.start * Q, out, prec)

    def _coerce(self, other):
        if isinstance(other, LaurentSeries):
            return self._check(other)
        if isinstance(other, int):
            return LaurentSeries.const(self.comp, self.F.from_int(other))
        if isinstance(other, (RatFunc, FPoly)):
            return embed_exact(other, self.comp, rel=self.relprec if self.prec != INF else None)
        return NotImplemented

    def agrees(self, other: LaurentSeries, N: int) -> bool:
        """Whether the two series are known to agree modulo ``u^N``."""
        d = self - other
        return d.prec >= N and d.valuation >= N or (not d.digits and d.prec >= N)

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (self.comp, self.start, self.digits, self.prec) == (
            other.comp,
            other.start,
            other.digits,
            other.prec,
        )

    def __hash__(self):
        return hash((self.start, self.digits, self.prec))


# ---------------------------------------------------------------------------
# embedding rational functions
# ---------------------------------------------------------------------------


def _poly_series(f: FPoly, comp: Completion) -> LaurentSeries:
    if not f.c:
        return LaurentSeries.zero(comp)
    if comp.is_infinite:
        return LaurentSeries(comp, -f.deg, tuple(reversed(f.c)))
    return LaurentSeries(comp, 0, f.taylor_shift(comp.center).c)


def ord_in(comp: Completion, x: RatFunc):
    return ord_at(comp.place, x)


def embed_exact(x, comp: Completion, rel: int | None = None) -> LaurentSeries:
    """Series of ``x``, exact when possible, otherwise with relative precision ``rel``."""
    if isinstance(x, FPoly):
        return _poly_series(x, comp)
    num = _poly_series(x.num, comp)
    if x.den.is_one():
        return num
    den = _poly_series(x.den, comp)
    if len(den.digits) == 1:
        return num * den.inverse()
    if rel is None:
        raise PrecisionError("a relative precision is needed to expand this rational function")
    return num * den.inverse(rel)


def embed(x, comp: Completion, N: int) -> LaurentSeries:
    """``x`` as a series known modulo ``u^N`` (exactly ``N`` unless ``x`` is zero)."""
    if isinstance(x, FPoly):
        x = RatFunc.from_poly(x)
    if x.is_zero():
        return LaurentSeries.zero(comp, N)
    v = ord_in(comp, x)
    rel = max(1, N - v)
    return embed_exact(x, comp, rel).truncate(N)


# ---------------------------------------------------------------------------
# Carlitz factorials and polylogarithms
# ---------------------------------------------------------------------------


class _Ring:
    """The scalars of a completion, with inverses at a fixed relative precision."""

    def __init__(self, comp: Completion, rel: int):
        self.comp = comp
        self.rel = rel
        self.theta = LaurentSeries.theta(comp)
        self._cinv = {}

    def c_inv(self, i: int) -> LaurentSeries:
        """``1 / (x - x^(q^i))``."""
        if i not in self._cinv:
            c = self.theta - self.theta.frob(i)
            self._cinv[i] = c.inverse(self.rel)
        return self._cinv[i]

    def inv_L(self, i: int) -> LaurentSeries:
        acc = LaurentSeries.const(self.comp, 1)
        for j in range(1, i + 1):
            acc = acc * self.c_inv(j)
        return acc


def _ord_L(comp: Completion, q: int, i: int) -> int:
    """Valuation of ``L_i``: ``-(q + ... + q^i)`` at infinity and ``i`` at a degree-one place."""
    if comp.is_infinite:
        return -sum(q**j for j in range(1, i + 1))
    return i


def cpl_domain_ok(n: int, alpha: RatFunc, comp: Completion) -> bool:
    if alpha.is_zero():
        return True
    q = comp.spec.q
    o = ord_in(comp, alpha)
    if comp.is_infinite:
        return (q - 1) * (-o) < n * q
    return o >= 1


def _li_plan(n, ords, comp, N):
    """Number of terms and the smallest term valuation for a sum of ``theta^s alpha_s^(q^i) / L_i^n``.

    ``ords`` lists ``(s, ord alpha_s)``.  The lower bound on the term
    valuation is monotone from the returned index on, so the tail is
    rigorously below ``u^N``.
    """
    q = comp.spec.q
    shift = -1 if comp.is_infinite else 0  # valuation of x

    def bound(i):
        return min(q**i * o + s * shift for s, o in ords) - n * _ord_L(comp, q, i)

    i = 0
    lowest = bound(0)
    while True:
        b = bound(i)
        lowest = min(lowest, b)
        nxt = bound(i + 1)
        if b >= N and nxt >= b:
            # increments q^i((q-1) o + ...) only grow from here on
            return i, lowest
        i += 1
        if i > 4096:
            raise DomainError("series does not converge")


def _deform_sum(n, coeffs, comp, N):
    """``sum_i sum_s x^s f_s^(q^i) / L_i^n`` for ``coeffs = [(s, f_s)]`` to absolute precision ``N``."""
    coeffs = [(s, f) for s, f in coeffs if not f.is_zero()]
    if not coeffs:
        return LaurentSeries.zero(comp, N)
    ords = [(s, ord_in(comp, f)) for s, f in coeffs]
    imax, lowest = _li_plan(n, ords, comp, N)
    for attempt in range(_MAX_RETRIES):
        rel = max(1, N - lowest) + _GUARD * (attempt + 1) + n * imax * 2
        ring = _Ring(comp, rel)
        base = [(s, embed_exact(f, comp, rel), ring.theta**s) for s, f in coeffs]
        acc = LaurentSeries.zero(comp)
        for i in range(imax):
            il = ring.inv_L(i) ** n
            term = LaurentSeries.zero(comp)
            for s, fs, ts in base:
                term = term + ts * fs.frob(i)
            acc = acc + term * il
        acc = acc.truncate(N) if acc.prec > N else acc
        acc = LaurentSeries(comp, acc.start, acc.digits, min(acc.prec, N))
        if acc.prec >= N:
            return acc
    raise PrecisionError("could not reach the requested precision")


def cpl(n: int, alpha: RatFunc, comp: Completion, N: int = DEFAULT_PRECISION) -> LaurentSeries:
    """``Li_n(alpha) = sum alpha^(q^i) / L_i^n`` in ``comp`` modulo ``u^N`` (direct series)."""
    if not cpl_domain_ok(n, alpha, comp):
        raise DomainError(f"Li_{n} does not converge at {alpha} in the completion at {comp.label()}")
    return _deform_sum(n, [(0, alpha)], comp, N)


def cpl_inf(spec: FieldSpec, n: int, alpha: RatFunc, N: int = DEFAULT_PRECISION) -> LaurentSeries:
    """``Li_n(alpha)`` in the completion at infinity."""
    return cpl(n, alpha, Completion.infinity(spec), N)


def cpl_deform_at_theta(n: int, f: TPoly, N: int = DEFAULT_PRECISION) -> LaurentSeries:
    """``sum_i f^(i)(x) / L_i^n`` at infinity, with the norm hypothesis checked."""
    comp = Completion.infinity(f.spec)
    q = f.spec.q
    for c in f.coeffs:
        if not c.is_zero() and (q - 1) * (-ord_in(comp, c)) >= n * q:
            raise DomainError("Gauss norm too large for convergence")
    return _deform_sum(n, list(enumerate(f.coeffs)), comp, N)


# ---------------------------------------------------------------------------
# exp and log of the tensor power
# ---------------------------------------------------------------------------


def _coeff_ring(ring: _Ring):
    one = LaurentSeries.const(ring.comp, 1)
    rel = ring.rel
    return dict(theta=ring.theta, frob=lambda v: v.frob(1), inv=lambda v: v.inverse(rel), one=one)


def _matvec(M, vec, comp):
    out = []
    for row in M:
        acc = LaurentSeries.zero(comp)
        for m, v in zip(row, vec):
            if m is not None:
                acc = acc + m * v
        out.append(acc)
    return out


def _mat_val(M):
    return min((v.valuation for row in M for v in row if v is not None), default=INF)


def _vec_val(vec):
    return min((v.valuation for v in vec), default=INF)


def _finish(vec, N):
    return [LaurentSeries(v.comp, v.start, v.digits, min(v.prec, N)) for v in vec]


def _log_series(z, n, comp, N, rel):
    """``sum_i P_i z^(i)``; returns the vector (precision not yet checked)."""
    ring = _Ring(comp, rel)
    q = comp.spec.q
    kw = _coeff_ring(ring)
    acc = list(z)
    zmin = _vec_val(z)
    prev_term_high = False
    i = 0
    P = [[kw["one"] if r == c else None for c in range(n)] for r in range(n)]
    while True:
        i += 1
        P = sylvester_step("log", P, n, ring.c_inv(i), kw["frob"])
        zi = [v.frob(i) for v in z]
        term = _matvec(P, zi, comp)
        acc = [a + b for a, b in zip(acc, term)]
        tval = _vec_val(term)
        pval = _mat_val(P)
        if comp.is_infinite:
            # rigorous when each later term is at least as large as this bound
            nxt = pval + q ** (i + 1) + q ** (i + 1) * zmin
            rigorous = nxt >= N and q + (q - 1) * zmin > 0
            if rigorous or (tval >= N and prev_term_high):
                break
            prev_term_high = tval >= N
        else:
            # each step lowers the coefficient valuation by at most 2n - 1
            j = i + 1
            ok = True
            while True:
                b = pval - (2 * n - 1) * (j - i) + q**j * zmin
                if b < N:
                    ok = False
                    break
                if q**j * (q - 1) * zmin >= 2 * n - 1:
                    break
                j += 1
            if ok:
                break
        if i > 512:
            raise DomainError("logarithm series does not converge")
    return acc


def _point_series(P: TensorPoint, comp, rel):
    return [embed_exact(c, comp, rel) if not c.is_zero() else LaurentSeries.zero(comp) for c in P.coords]


def log_point(P: TensorPoint, N: int = DEFAULT_PRECISION, comp: Completion | None = None):
    """``log`` of the point ``P`` as a vector of series, modulo ``u^N``.

    At infinity ``P`` must satisfy :func:`in_log_domain`; at a finite place
    every coordinate must have valuation at least 1.
    """
    comp = comp or Completion.infinity(P.spec)
    n = P.n
    if P.is_zero():
        return [LaurentSeries.zero(comp, N) for _ in range(n)]
    if comp.is_infinite:
        if not in_log_domain(P):
            raise DomainError("point outside the convergence domain of log")
    else:
        for c in P.coords:
            if not c.is_zero() and ord_in(comp, c) < 1:
                raise DomainError("point is not v-adically small enough for log")
    zmin = min(ord_in(comp, c) for c in P.coords if not c.is_zero())
    rel = max(8, N - zmin) + _GUARD
    for _ in range(_MAX_RETRIES):
        z = _point_series(P, comp, rel)
        vec = _log_series(z, n, comp, N, rel)
        if all(v.prec >= N for v in vec):
            return _finish(vec, N)
        rel *= 2
    raise PrecisionError("could not reach the requested precision for log")


def exp_lie(vec, N: int = DEFAULT_PRECISION):
    """``exp`` of a vector in the Lie algebra (infinity-adic only), modulo ``u^N``.

    The tail is cut once a lower bound for the next term reaches ``u^N``;
    the bound ``ord Q_(i+1) >= q ord Q_i + q^(i+1)`` makes this rigorous.
    """
    comp = vec[0].comp
    if not comp.is_infinite:
        raise DomainError("exp is only evaluated in the completion at infinity")
    n = len(vec)
    q = comp.spec.q
    if all(v.is_zero() for v in vec):
        return _finish(list(vec), N)
    zmin = _vec_val([v for v in vec if v.digits])
    rel = max(8, N - zmin) + _GUARD
    for _ in range(_MAX_RETRIES):
        ring = _Ring(comp, rel)
        kw = _coeff_ring(ring)
        Q = [[kw["one"] if r == c else None for c in range(n)] for r in range(n)]
        acc = list(vec)
        i = 0
        while True:
            i += 1
            Q = sylvester_step("exp", Q, n, ring.c_inv(i), kw["frob"])
            vi = [v.frob(i) for v in vec]
            term = _matvec(Q, vi, comp)
            acc = [a + b for a, b in zip(acc, term)]
            qv = _mat_val(Q)
            nxt = q * qv + q ** (i + 1) + q ** (i + 1) * zmin
            if nxt >= N and nxt >= 0:
                break
            if i > 512:
                raise DomainError("exp series did not settle")
        if all(v.prec >= N for v in acc):
            return _finish(acc, N)
        rel *= 2
    raise PrecisionError("could not reach the requested precision for exp")


def apply_dlie(spec: FieldSpec, a, vec):
    """``a(x I + N)`` applied to a Lie vector (the differential of ``[a]``)."""
    a = as_fq_poly(spec, a)
    comp = vec[0].comp
    theta = LaurentSeries.theta(comp)
    n = len(vec)

    def d(v):
        return [theta * v[r] + (v[r + 1] if r + 1 < n else LaurentSeries.zero(comp)) for r in range(n)]

    acc = [LaurentSeries.zero(comp) for _ in range(n)]
    for c in reversed(a.c):
        acc = d(acc)
        if c:
            e = spec.embed(c)
            acc = [x + v.scale(e) for x, v in zip(acc, vec)]
    return acc


def log_last_coord_formula(P: TensorPoint, N: int = DEFAULT_PRECISION) -> LaurentSeries:
    """Last coordinate of ``log P`` as a combination of ``Li_n(x^m p_j)``."""
    if not in_log_domain(P):
        raise DomainError("point outside the convergence domain of log")
    spec = P.spec
    comp = Completion.infinity(spec)
    n = P.n
    x = RatFunc.from_poly(spec.theta())
    small_p = spec.p
    acc = LaurentSeries.zero(comp)
    for j in range(1, n + 1):
        pj = P.p(n - j)
        if pj.is_zero():
            continue
        for m in range(n - j + 1):
            b = binom_mod(n - j, m, small_p)
            if not b:
                continue
            e = n - m - j
            li = cpl(n, pj * x**m, comp, N + e)
            coef = b if m % 2 == 0 else -b
            acc = acc + (LaurentSeries.theta(comp) ** e * li).scale(spec.big.from_int(coef))
    return LaurentSeries(comp, acc.start, acc.digits, min(acc.prec, N))


# ---------------------------------------------------------------------------
# v-adic polylogarithms
# ---------------------------------------------------------------------------


def _reduce_point(P: TensorPoint, comp: Completion):
    F = P.spec.big
    c = comp.center
    out = []
    for v in P.coords:
        if v.is_zero():
            out.append(0)
            continue
        den = v.den(c)
        if den == 0:
            raise DomainError("coordinate has a pole at the place")
        out.append(F.div(v.num(c), den))
    return out


def admissible_multiplier(P: TensorPoint, comp: Completion) -> FPoly:
    """The minimal polynomial over F_q of the reduction of ``P`` under the reduced ``[t]``.

    ``[a]P`` then has every coordinate in the maximal ideal of the place.
    """
    spec = P.spec
    F = spec.big
    small = spec.small
    c = comp.center
    q = spec.q
    n = P.n
    x = _reduce_point(P, comp)

    def T(v):
        out = [F.add(F.mul(c, v[i]), v[i + 1]) for i in range(n - 1)]
        out.append(F.add(F.pow(v[0], q), F.mul(c, v[n - 1])))
        return out

    def coords(v):
        return [s for e in v for s in spec.subfield_coords(e)]

    krylov = [coords(x)]
    cur = x
    dim = n * spec.m
    for k in range(1, dim + 2):
        cur = T(cur)
        krylov.append(coords(cur))
        # columns are the Krylov vectors; look for a relation with last coefficient 1
        rows = [[vec[r] for vec in krylov] for r in range(dim)]
        ns = linalg.nullspace(small, rows, len(krylov))
        for vec in ns:
            if vec[-1]:
                inv = small.inv(vec[-1])
                return FPoly(small, [small.mul(inv, a) for a in vec])
        if not any(krylov[0]):
            break
    if not any(krylov[0]):
        return FPoly.one(small)
    raise DomainError("no annihilating polynomial found")


def _admissible(P: TensorPoint, comp: Completion) -> bool:
    return all(c.is_zero() or ord_in(comp, c) >= 1 for c in P.coords)


def cpl_v_twisted(n: int, alpha: RatFunc, comp: Completion, N: int, a) -> LaurentSeries:
    """``a(x)^(-1)`` times the last coordinate of ``log([a](0, ..., 0, alpha))`` at ``comp``."""
    spec = comp.spec
    a = as_fq_poly(spec, a)
    P = TensorPoint.last(spec, n, alpha)
    aP = act(a, P)
    if not _admissible(aP, comp):
        raise DomainError("the multiplier does not move the point into the log domain")
    a_theta = RatFunc.from_poly(FPoly(spec.big, [spec.embed(s) for s in a.c]))
    va = ord_in(comp, a_theta)
    lg = log_point(aP, N + max(0, va), comp)[-1]
    inv = embed_exact(a_theta, comp, N + 2 * abs(va) + _GUARD).inverse(N + 2 * abs(va) + _GUARD)
    res = lg * inv
    return LaurentSeries(comp, res.start, res.digits, min(res.prec, N))


def cpl_v(spec: FieldSpec, n: int, alpha: RatFunc, place: Place, N: int = DEFAULT_PRECISION):
    """The v-adic polylogarithm ``Li_n(alpha)_v`` at a place ``x - c`` with ``c`` in F_q.

    Returns ``(value, multiplier)`` where ``multiplier`` is the polynomial
    ``a`` used for the twist (``1`` when the direct series converges).
    """
    comp = Completion.at(spec, place)
    if alpha.is_zero():
        return LaurentSeries.zero(comp, N), FPoly.one(spec.small)
    o = ord_in(comp, alpha)
    if o < 0:
        raise DomainError("|alpha|_v must be at most 1")
    if o >= 1:
        return cpl(n, alpha, comp, N), FPoly.one(spec.small)
    P = TensorPoint.last(spec, n, alpha)
    a = admissible_multiplier(P, comp)
    return cpl_v_twisted(n, alpha, comp, N, a), a


# ---------------------------------------------------------------------------
# verification of identities
# ---------------------------------------------------------------------------


def verify_relation(values, coeffs, N: int | None = None):
    """Valuation of ``sum c_i * value_i``.

    When every known digit vanishes the precision is returned (a lower
    bound); an exact zero gives ``inf``.  ``N`` caps the precision.
    """
    if len(values) != len(coeffs):
        raise ValueError("values and coefficients differ in length")
    if not values:
        return INF
    comp = values[0].comp
    if any(v.comp != comp for v in values):
        raise ValueError("values from different completions")
    acc = LaurentSeries.zero(comp)
    for v, c in zip(values, coeffs):
        if isinstance(c, int):
            c = RatFunc.const(comp.spec.big, comp.spec.big.from_int(c))
        if c.is_zero():
            continue
        rel = v.relprec if v.prec != INF else 64
        acc = acc + v * embed_exact(c, comp, rel)
    if N is not None:
        acc = acc.truncate(N)
    if acc.is_exact_zero():
        return INF
    return acc.valuation


__all__ = [
    "Completion",
    "LaurentSeries",
    "PrecisionError",
    "apply_dlie",
    "cpl",
    "cpl_deform_at_theta",
    "cpl_inf",
    "cpl_v",
    "cpl_v_twisted",
    "embed",
    "exp_lie",
    "log_last_coord_formula",
    "log_point",
    "verify_relation",
]
