"""Polynomials in t with coefficients in F_{q^m}(x).

The coefficients are stored in the power basis of ``t``.  The alternative
view in powers of ``(t - x)`` is computed on demand by
:func:`to_theta_basis`.
"""

from __future__ import annotations

from itertools import zip_longest

from .ffcore import INF, NEG_INF, FieldSpec, FPoly, RatFunc, binom_mod
from .places import INFINITY, ord_tpoly


class TPoly:
    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs=()):
        F = spec.big
        cs = []
        for c in coeffs:
            if isinstance(c, int):
                c = RatFunc.const(F, F.from_int(c))
            elif isinstance(c, FPoly):
                c = RatFunc.from_poly(c)
            cs.append(c)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.spec = spec
        self.coeffs = tuple(cs)

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls, spec):
        return cls(spec, ())

    @classmethod
    def const(cls, spec, c):
        return cls(spec, (c,))

    @classmethod
    def t(cls, spec):
        return cls(spec, (0, 1))

    @classmethod
    def t_minus_theta(cls, spec, power: int = 1):
        x = RatFunc.from_poly(spec.theta())
        return cls(spec, (-x, 1)) ** power

    @classmethod
    def from_fq(cls, spec: FieldSpec, a: FPoly):
        """Embed a polynomial with coefficients in the small field F_q."""
        F = spec.big
        return cls(spec, [RatFunc.const(F, spec.embed(c)) for c in a.c])

    # -- basic properties ----------------------------------------------------
    @property
    def deg(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return RatFunc.zero(self.spec.big)

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, TPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"TPoly({self.to_str()})"

    def to_str(self, fmt=None):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            cs = c.to_str(fmt=fmt)
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if not mono:
                terms.append(f"({cs})" if _compound(c) else cs)
            elif cs == "1":
                terms.append(mono)
            elif _compound(c):
                terms.append(f"({cs})*{mono}")
            else:
                terms.append(f"{cs}*{mono}")
        return "+".join(terms)

    # -- arithmetic ----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, TPoly):
            return other
        if isinstance(other, (RatFunc, FPoly, int)):
            return TPoly(self.spec, (other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        Z = RatFunc.zero(self.spec.big)
        return TPoly(self.spec, [a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=Z)])

    __radd__ = __add__

    def __neg__(self):
        return TPoly(self.spec, [-a for a in self.coeffs])

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
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return TPoly.zero(self.spec)
        out = [RatFunc.zero(self.spec.big)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x.is_zero():
                continue
            for j, y in enumerate(b):
                if not y.is_zero():
                    out[i + j] = out[i + j] + x * y
        return TPoly(self.spec, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        r = TPoly.const(self.spec, 1)
        for _ in range(e):
            r = r * self
        return r

    def shift(self, k: int):
        """Multiply by ``t^k``."""
        if not self.coeffs:
            return self
        return TPoly(self.spec, [RatFunc.zero(self.spec.big)] * k + list(self.coeffs))

    def eval_theta(self) -> RatFunc:
        """Substitute ``t = x``."""
        x = RatFunc.from_poly(self.spec.theta())
        acc = RatFunc.zero(self.spec.big)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def _compound(c: RatFunc) -> bool:
    return sum(1 for a in c.num.c if a) > 1 or not c.den.is_one()


# ---------------------------------------------------------------------------
# twisting and change of basis
# ---------------------------------------------------------------------------


def twist(f: TPoly, i: int) -> TPoly:
    """Raise every coefficient to the power ``q^i``; ``t`` is untouched.

    Negative ``i`` is accepted only when every coefficient is an exact
    ``q^|i|``-th power.
    """
    if i == 0 or not f.coeffs:
        return f
    q = f.spec.q
    if i > 0:
        power = q**i
        return TPoly(f.spec, [c.frobenius(power) for c in f.coeffs])
    return TPoly(f.spec, [_root(c, q ** (-i)) for c in f.coeffs])


def _root(c: RatFunc, power: int) -> RatFunc:
    num, den = c.num, c.den
    p = c.F.p
    while power > 1:
        try:
            num, den = num.pth_root(), den.pth_root()
        except ArithmeticError:
            raise ValueError("negative twist of a coefficient that is not a q-power") from None
        power //= p
    return RatFunc(num, den)


def to_theta_basis(f: TPoly) -> list[RatFunc]:
    """Coefficients ``q_j`` with ``f = sum q_j (t - x)^j``."""
    spec = f.spec
    p = spec.p
    x = RatFunc.from_poly(spec.theta())
    m = len(f.coeffs)
    xp = _powers(x, m)
    out = []
    for j in range(m):
        acc = RatFunc.zero(spec.big)
        for i in range(j, m):
            b = binom_mod(i, j, p)
            if b and not f.coeffs[i].is_zero():
                acc = acc + (f.coeffs[i] * xp[i - j]).scale(b)
        out.append(acc)
    while out and out[-1].is_zero():
        out.pop()
    return out


def from_theta_basis(spec: FieldSpec, qs) -> TPoly:
    """Inverse of :func:`to_theta_basis`."""
    p = spec.p
    mx = -RatFunc.from_poly(spec.theta())
    m = len(qs)
    xp = _powers(mx, m)
    coeffs = []
    for i in range(m):
        acc = RatFunc.zero(spec.big)
        for j in range(i, m):
            b = binom_mod(j, i, p)
            if b and not qs[j].is_zero():
                acc = acc + (qs[j] * xp[j - i]).scale(b)
        coeffs.append(acc)
    return TPoly(spec, coeffs)


def _powers(x: RatFunc, m: int):
    out = [RatFunc.one(x.F)]
    for _ in range(1, m):
        out.append(out[-1] * x)
    return out


def sigma_reduce(f: TPoly, n: int) -> TPoly:
    """Representative of ``f`` modulo ``(sigma - 1)`` with ``(t - x)``-degree below ``n``.

    Uses ``(t - x)^n s == s^(1)`` repeatedly; each round lowers the t-degree by ``n``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    spec = f.spec
    while f.deg >= n:
        qs = to_theta_basis(f)
        low = from_theta_basis(spec, qs[:n])
        high = from_theta_basis(spec, qs[n:])
        f = low + twist(high, 1)
    return f


def gauss_ord(f: TPoly) -> int | float:
    """``min_i ord_inf(f_i)``; the Gauss norm is ``q ** (-gauss_ord(f))``."""
    return ord_tpoly(INFINITY, f)


def gauss_norm_exponent(f: TPoly) -> int | float:
    """Exponent ``e`` with ``||f|| = q^e``; ``-inf`` for the zero polynomial."""
    o = gauss_ord(f)
    return NEG_INF if o == INF else -o
