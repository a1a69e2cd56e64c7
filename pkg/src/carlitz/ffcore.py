"""Exact arithmetic in F_{q^m}, in F_{q^m}[x] and in F_{q^m}(x).

Field elements are plain ``int`` codes: the base-p digits of the code are the
coefficients of the element in the power basis of ``F_p[X]/(modulus)``.  All
arithmetic goes through the owning field object, so the codes stay canonical
and hashable.

The variable of every polynomial here is the function-field variable theta,
printed as ``x``.
"""

from __future__ import annotations

import contextvars
import math
import random
from functools import lru_cache
from itertools import zip_longest

from sympy import factorint, isprime

NEG_INF = float("-inf")
INF = math.inf

#: seed for the equal-degree splitting step of :func:`poly_factor`
FACTOR_SEED = 1729
#: per-context override of that seed (the CLI sets it from ``--seed``)
factor_seed: contextvars.ContextVar[int] = contextvars.ContextVar("factor_seed", default=FACTOR_SEED)

# log/exp/Zech tables are built only for extension fields up to this size
_TABLE_LIMIT = 1 << 16


class FieldError(ValueError):
    pass


# ---------------------------------------------------------------------------
# finite fields
# ---------------------------------------------------------------------------


class GF:
    """The finite field with ``p**k`` elements."""

    def __new__(cls, p: int, k: int = 1, modulus=None):
        if cls is GF:
            cls = PrimeField if k == 1 else ExtField
        return super().__new__(cls)

    p: int
    k: int
    order: int
    modulus: tuple

    zero = 0
    one = 1

    def elements(self):
        return range(self.order)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def random(self, rng, nonzero=False):
        lo = 1 if nonzero else 0
        return rng.randrange(lo, self.order)

    def from_int(self, n: int):
        """Image of the integer ``n`` in the prime subfield."""
        return n % self.p

    def multiplicative_order(self, a):
        if a == 0:
            raise FieldError("0 has no multiplicative order")
        order = self.order - 1
        for r in factorint(order):
            while order % r == 0 and self.pow(a, order // r) == 1:
                order //= r
        return order

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.k})"


class PrimeField(GF):
    def __init__(self, p: int, k: int = 1, modulus=None):
        if not isprime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.k = 1
        self.order = p
        self.modulus = (0, 1)
        self.gen = _primitive_root(p)

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(p)")
        return pow(a, -1, self.p)

    def pow(self, a, e):
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def digits(self, a):
        return [a]

    def from_digits(self, ds):
        return ds[0] % self.p

    def log(self, a):
        return _dlog(self, a)


class ExtField(GF):
    """``F_p[X]/(modulus)`` with ``deg modulus = k > 1``.

    With no modulus given, the first primitive polynomial of degree ``k`` (in
    the order of its integer code) is used and ``X`` is the field generator.
    """

    def __init__(self, p: int, k: int = 1, modulus=None):
        if not isprime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.k = k
        self.order = p**k
        base = GF(p)
        if modulus is None:
            modulus = _first_primitive_poly(base, k)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != k + 1 or modulus[-1] != 1:
                raise FieldError("modulus must be monic of degree k")
            if not is_irreducible(FPoly(base, modulus)):
                raise FieldError("modulus is not irreducible")
        self.modulus = modulus
        self._tables = None
        if self.order <= _TABLE_LIMIT:
            self._build_tables()
        self.gen = self._find_gen()

    # -- digit-level helpers ------------------------------------------------
    def digits(self, a):
        p = self.p
        out = []
        for _ in range(self.k):
            a, r = divmod(a, p)
            out.append(r)
        return out

    def from_digits(self, ds):
        a = 0
        for d in reversed(list(ds)[: self.k]):
            a = a * self.p + d % self.p
        return a

    def _slow_add(self, a, b):
        if self.p == 2:
            return a ^ b
        return self.from_digits([x + y for x, y in zip(self.digits(a), self.digits(b))])

    def _slow_mul(self, a, b):
        p, k, mod = self.p, self.k, self.modulus
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i] % p
            if c:
                for j in range(k):
                    prod[i - k + j] -= c * mod[j]
        return self.from_digits([c % p for c in prod[:k]])

    def _build_tables(self):
        n = self.order - 1
        exp = [0] * n
        log = [0] * self.order
        x = 1
        X = self.p  # code of the class of X
        gen = None
        # find a primitive element by brute force over small codes
        for cand in range(2, self.order):
            y, period = 1, 0
            while True:
                y = self._slow_mul(y, cand)
                period += 1
                if y == 1:
                    break
            if period == n:
                gen = cand
                break
        if gen is None:  # order 2 field is prime, cannot happen here
            raise FieldError("no primitive element")
        if self._slow_order(X) == n:
            gen = X
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, gen)
        zech = [None] * n
        for i in range(n):
            s = self._slow_add(exp[i], 1)
            zech[i] = None if s == 0 else log[s]
        self._tables = (exp, log, zech, n)
        self._tgen = gen

    def _slow_order(self, a):
        y, period = a, 1
        while y != 1:
            y = self._slow_mul(y, a)
            period += 1
        return period

    def _find_gen(self):
        if self._tables is not None:
            return self._tgen
        X = self.p
        if self.multiplicative_order(X) == self.order - 1:
            return X
        for cand in range(2, self.order):
            if self.multiplicative_order(cand) == self.order - 1:
                return cand
        raise FieldError("no primitive element")

    # -- arithmetic ---------------------------------------------------------
    def add(self, a, b):
        if self._tables is None:
            return self._slow_add(a, b)
        if a == 0:
            return b
        if b == 0:
            return a
        exp, log, zech, n = self._tables
        la = log[a]
        z = zech[(log[b] - la) % n]
        return 0 if z is None else exp[(la + z) % n]

    def neg(self, a):
        if self.p == 2 or a == 0:
            return a
        return self.from_digits([-d for d in self.digits(a)])

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self._tables is None:
            return self._slow_mul(a, b)
        exp, log, _, n = self._tables
        return exp[(log[a] + log[b]) % n]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        if self._tables is None:
            return GF.pow(self, a, self.order - 2)
        exp, log, _, n = self._tables
        return exp[-log[a] % n]

    def pow(self, a, e):
        if self._tables is None or a == 0:
            if a == 0:
                if e < 0:
                    raise ZeroDivisionError("inverse of 0")
                return 1 if e == 0 else 0
            return GF.pow(self, a, e)
        exp, log, _, n = self._tables
        return exp[log[a] * e % n]

    def log(self, a):
        if self._tables is not None and self._tgen == self.gen:
            return self._tables[1][a]
        return _dlog(self, a)


def _dlog(F, a):
    if a == 0:
        raise FieldError("log of 0")
    x = 1
    for i in range(F.order - 1):
        if x == a:
            return i
        x = F.mul(x, F.gen)
    raise FieldError("element not in the cyclic group")


def _primitive_root(p):
    if p == 2:
        return 1
    fac = list(factorint(p - 1))
    for g in range(2, p):
        if all(pow(g, (p - 1) // r, p) != 1 for r in fac):
            return g
    raise FieldError("no primitive root")


@lru_cache(maxsize=None)
def _first_primitive_poly(base, k):
    p = base.p
    order = p**k - 1
    fac = list(factorint(order))
    for code in range(p**k):
        tail = [(code // p**i) % p for i in range(k)]
        if tail[0] == 0:
            continue
        f = FPoly(base, tail + [1])
        if not is_irreducible(f):
            continue
        x = FPoly(base, (0, 1))
        if all(x.powmod(order // r, f) != FPoly.one(base) for r in fac):
            return f.c
    raise FieldError(f"no primitive polynomial of degree {k} over GF({p})")


def binom_mod(n: int, k: int, p: int) -> int:
    """Binomial coefficient C(n, k) reduced mod p, via Lucas's theorem."""
    if k < 0 or k > n:
        return 0
    r = 1
    while n or k:
        a, b = n % p, k % p
        if b > a:
            return 0
        r = r * math.comb(a, b) % p
        n //= p
        k //= p
    return r


# ---------------------------------------------------------------------------
# field specification: F_q inside F_{q^m}
# ---------------------------------------------------------------------------


class FieldSpec:
    """Working constants ``F_{q^m}`` (``big``) with the marked subfield ``F_q`` (``small``).

    ``q = p**e``.  The F_q-basis of F_{q^m} is ``1, g, ..., g^{m-1}`` with ``g``
    the generator of ``big``.  Elements of ``small`` are embedded via the
    power ``zeta = g^((q^m-1)/(q-1))``, whose minimal polynomial is used as the
    modulus of ``small``.
    """

    def __init__(self, p: int, e: int = 1, m: int = 1, modulus=None):
        if e < 1 or m < 1:
            raise FieldError("e and m must be positive")
        if e * m > 16:
            raise FieldError("e*m > 16 is outside the supported range")
        if p >= 2**31:
            raise FieldError("p must be below 2^31")
        self.p, self.e, self.m = p, e, m
        self.q = p**e
        self.big = GF(p, e * m, modulus)
        if e == 1:
            self.small = GF(p)
            self._zeta = None
        else:
            Q = self.big.order
            zeta = self.big.pow(self.big.gen, (Q - 1) // (self.q - 1))
            self._zeta = zeta
            self.small = GF(p, e, _minpoly_over_prime(self.big, zeta, e))
        self._setup_coords()

    @property
    def gen(self):
        return self.big.gen

    def __repr__(self):
        return f"FieldSpec(p={self.p}, e={self.e}, m={self.m})"

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.p, self.e, self.m, self.big) == (
            other.p,
            other.e,
            other.m,
            other.big,
        )

    def __hash__(self):
        return hash((self.p, self.e, self.m, self.big))

    # -- embedding of F_q ---------------------------------------------------
    def embed(self, s: int) -> int:
        """Image in ``big`` of the element ``s`` of ``small``."""
        if self.e == 1:
            return s
        big = self.big
        acc, pw = 0, 1
        for d in self.small.digits(s):
            if d:
                acc = big.add(acc, big.mul(d, pw))
            pw = big.mul(pw, self._zeta)
        return acc

    def in_subfield(self, x: int) -> bool:
        return self.big.pow(x, self.q) == x

    def restrict(self, x: int) -> int:
        """Inverse of :meth:`embed`; raises if ``x`` is not in F_q."""
        if not self.in_subfield(x):
            raise FieldError("element is not in the subfield F_q")
        coords = self._fp_coords(x)
        # coordinates along zeta^a * g^0
        return self.small.from_digits([coords[a * self.m] for a in range(self.e)])

    # -- F_q-coordinates of F_{q^m} -------------------------------------------
    def _setup_coords(self):
        big, p, e, m = self.big, self.p, self.e, self.m
        k = e * m
        self.subfield_basis = tuple(big.pow(big.gen, r) for r in range(m))
        if k == 1:
            self._coord_inv = None
            return
        zeta = self._zeta if e > 1 else 1
        cols = []
        for a in range(e):
            za = big.pow(zeta, a)
            for b in range(m):
                cols.append(big.digits(big.mul(za, self.subfield_basis[b])))
        # matrix whose columns are the F_p-digits of zeta^a g^b
        mat = [[cols[j][i] for j in range(k)] for i in range(k)]
        self._coord_inv = _invert_mod_p(mat, p)

    def _fp_coords(self, x):
        """F_p-coordinates of x in the basis zeta^a g^b (index a*m + b)."""
        if self._coord_inv is None:
            return [x]
        d = self.big.digits(x)
        p = self.p
        return [sum(r * v for r, v in zip(row, d)) % p for row in self._coord_inv]

    def subfield_coords(self, x: int) -> tuple:
        """Coordinates of ``x`` over F_q in the basis ``1, g, ..., g^{m-1}``."""
        if self.m == 1:
            return (self.restrict(x) if self.e > 1 else x,)
        c = self._fp_coords(x)
        e, m = self.e, self.m
        return tuple(self.small.from_digits([c[a * m + b] for a in range(e)]) for b in range(m))

    def from_subfield_coords(self, coords) -> int:
        big = self.big
        acc = 0
        for s, beta in zip(coords, self.subfield_basis):
            acc = big.add(acc, big.mul(self.embed(s), beta))
        return acc

    # -- convenience constructors -------------------------------------------
    def poly(self, coeffs) -> FPoly:
        return FPoly(self.big, coeffs)

    def theta(self) -> FPoly:
        return FPoly(self.big, (0, 1))

    def ratfunc(self, num, den=1) -> RatFunc:
        def lift(v):
            if isinstance(v, FPoly):
                return v
            if isinstance(v, int):
                return FPoly(self.big, (self.big.from_int(v),))
            return FPoly(self.big, v)

        return RatFunc(lift(num), lift(den))

    def tpoly_scalar(self, s: int) -> int:
        return self.embed(s)


def _invert_mod_p(mat, p):
    n = len(mat)
    a = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] % p), None)
        if piv is None:
            raise FieldError("singular coordinate matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = pow(a[col][col], -1, p)
        a[col] = [v * inv % p for v in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [(x - f * y) % p for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def _minpoly_over_prime(big, z, deg):
    """Minimal polynomial over F_p of ``z`` whose orbit under x->x^p has size ``deg``."""
    poly = [1]  # coefficients in big, low to high
    conj = z
    for _ in range(deg):
        # multiply by (X - conj)
        nxt = [0] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i + 1] = big.add(nxt[i + 1], c)
            nxt[i] = big.sub(nxt[i], big.mul(c, conj))
        poly = nxt
        conj = big.pow(conj, big.p)
    if conj != z:
        raise FieldError("orbit size mismatch computing a minimal polynomial")
    for c in poly:
        if c >= big.p:
            raise FieldError("minimal polynomial not over F_p")
    return tuple(poly)


# ---------------------------------------------------------------------------
# polynomials over a finite field
# ---------------------------------------------------------------------------


class FPoly:
    """Dense univariate polynomial; coefficients low to high, no trailing zeros."""

    __slots__ = ("F", "c")

    def __init__(self, F: GF, coeffs=()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.F = F
        self.c = tuple(c)

    @classmethod
    def _raw(cls, F, c):
        obj = cls.__new__(cls)
        obj.F = F
        obj.c = c
        return obj

    @classmethod
    def zero(cls, F):
        return cls._raw(F, ())

    @classmethod
    def one(cls, F):
        return cls._raw(F, (1,))

    @classmethod
    def const(cls, F, a):
        return cls._raw(F, (a,) if a else ())

    @classmethod
    def monomial(cls, F, deg, a=1):
        if not a:
            return cls._raw(F, ())
        return cls._raw(F, (0,) * deg + (a,))

    # -- basic properties ---------------------------------------------------
    @property
    def deg(self):
        return len(self.c) - 1 if self.c else NEG_INF

    @property
    def lc(self):
        return self.c[-1] if self.c else 0

    def is_zero(self):
        return not self.c

    def is_one(self):
        return self.c == (1,)

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, FPoly):
            return self.c == other.c and self.F == other.F
        if isinstance(other, int):
            return self.c == ((other % self.F.p,) if other % self.F.p else ())
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def __getitem__(self, i):
        return self.c[i] if 0 <= i < len(self.c) else 0

    def __len__(self):
        return len(self.c)

    def __repr__(self):
        return f"FPoly({self.to_str()})"

    def __str__(self):
        return self.to_str()

    def to_str(self, var="x", fmt=None):
        if not self.c:
            return "0"
        fmt = fmt or _default_fmt(self.F)
        terms = []
        for i in range(len(self.c) - 1, -1, -1):
            a = self.c[i]
            if not a:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if not mono:
                terms.append(fmt(a))
            elif a == 1:
                terms.append(mono)
            else:
                terms.append(f"{fmt(a)}*{mono}")
        return "+".join(terms)

    # -- ring operations ------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, FPoly):
            return other
        if isinstance(other, int):
            return FPoly.const(self.F, self.F.from_int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.F
        if F.k == 1:
            p = F.p
            return FPoly(F, [(a + b) % p for a, b in zip_longest(self.c, other.c, fillvalue=0)])
        return FPoly(F, [F.add(a, b) for a, b in zip_longest(self.c, other.c, fillvalue=0)])

    __radd__ = __add__

    def __neg__(self):
        F = self.F
        return FPoly._raw(F, tuple(F.neg(a) for a in self.c))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.F
        if F.k == 1:
            p = F.p
            return FPoly(F, [(a - b) % p for a, b in zip_longest(self.c, other.c, fillvalue=0)])
        return FPoly(F, [F.sub(a, b) for a, b in zip_longest(self.c, other.c, fillvalue=0)])

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, a):
        if not a:
            return FPoly._raw(self.F, ())
        F = self.F
        if F.k == 1:
            p = F.p
            return FPoly._raw(F, tuple(x * a % p for x in self.c))
        return FPoly._raw(F, tuple(F.mul(x, a) for x in self.c))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.c, other.c
        F = self.F
        if not a or not b:
            return FPoly._raw(F, ())
        if len(a) == 1:
            return other.scale(a[0])
        if len(b) == 1:
            return self.scale(b[0])
        if F.k == 1:
            p = F.p
            out = [0] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        out[i + j] += x * y
            return FPoly._raw(F, tuple(v % p for v in out))
        out = [0] * (len(a) + len(b) - 1)
        add, mul = F.add, F.mul
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = add(out[i + j], mul(x, y))
        return FPoly(F, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        r = FPoly.one(self.F)
        b = self
        while e:
            if e & 1:
                r = r * b
            e >>= 1
            if e:
                b = b * b
        return r

    def __divmod__(self, other):
        other = self._coerce(other)
        if not other.c:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.F
        a = list(self.c)
        b = other.c
        db = len(b) - 1
        if len(a) <= db:
            return FPoly._raw(F, ()), self
        inv_lc = F.inv(b[-1])
        quot = [0] * (len(a) - db)
        if F.k == 1:
            p = F.p
            for i in range(len(a) - 1, db - 1, -1):
                c = a[i] % p
                if c:
                    c = c * inv_lc % p
                    quot[i - db] = c
                    for j in range(db + 1):
                        a[i - db + j] -= c * b[j]
            return FPoly(F, quot), FPoly(F, [v % p for v in a[:db]])
        for i in range(len(a) - 1, db - 1, -1):
            c = a[i]
            if c:
                c = F.mul(c, inv_lc)
                quot[i - db] = c
                for j in range(db + 1):
                    if b[j]:
                        a[i - db + j] = F.sub(a[i - db + j], F.mul(c, b[j]))
        return FPoly(F, quot), FPoly(F, a[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self):
        if not self.c or self.c[-1] == 1:
            return self
        return self.scale(self.F.inv(self.c[-1]))

    def __call__(self, a):
        F = self.F
        r = 0
        for c in reversed(self.c):
            r = F.add(F.mul(r, a), c)
        return r

    def derivative(self):
        F = self.F
        return FPoly(F, [F.mul(F.from_int(i), c) for i, c in enumerate(self.c)][1:])

    def frobenius(self, power: int):
        """Coefficientwise ``power``-th power composed with ``x -> x^power``.

        For ``power`` a power of p this is the ring map ``f -> f^power``.
        """
        if not self.c:
            return self
        F = self.F
        out = [0] * ((len(self.c) - 1) * power + 1)
        for i, a in enumerate(self.c):
            if a:
                out[i * power] = F.pow(a, power)
        return FPoly._raw(F, tuple(out))

    def taylor_shift(self, a):
        """Coefficients of ``f(a + u)`` as a polynomial in ``u``."""
        F = self.F
        c = list(self.c)
        n = len(c)
        for i in range(n):
            for j in range(n - 2, i - 1, -1):
                c[j] = F.add(c[j], F.mul(a, c[j + 1]))
        return FPoly(F, c)

    def powmod(self, e: int, mod: FPoly):
        r = FPoly.one(self.F)
        b = self % mod
        while e:
            if e & 1:
                r = (r * b) % mod
            e >>= 1
            if e:
                b = (b * b) % mod
        return r

    def pth_root(self):
        """``g`` with ``g**p == self``; raises if ``self`` is not a p-th power."""
        F, p = self.F, self.F.p
        out = []
        for i, a in enumerate(self.c):
            if i % p:
                if a:
                    raise ArithmeticError("not a p-th power")
                continue
            out.append(F.pow(a, F.order // p))
        return FPoly(F, out)


def _default_fmt(F):
    if F.k == 1:
        return str
    return lambda a: format_const(F, a)


def format_const(F, a):
    """Constants of an extension field print as powers of its generator."""
    if F.k == 1:
        return str(a)
    if a == 0:
        return "0"
    e = F.log(a)
    if e == 0:
        return "1"
    if e == 1:
        return "g"
    return f"g^{e}"


# ---------------------------------------------------------------------------
# gcd and factorization
# ---------------------------------------------------------------------------


def poly_gcd(a: FPoly, b: FPoly) -> FPoly:
    """Monic gcd; ``gcd(0, 0) == 0``."""
    while b.c:
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: FPoly, b: FPoly):
    """``(g, s, t)`` with ``g = s*a + t*b`` monic."""
    F = a.F
    r0, r1 = a, b
    s0, s1 = FPoly.one(F), FPoly.zero(F)
    t0, t1 = FPoly.zero(F), FPoly.one(F)
    while r1.c:
        qt, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - qt * s1
        t0, t1 = t1, t0 - qt * t1
    if not r0.c:
        return r0, s0, t0
    inv = F.inv(r0.lc)
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def poly_lcm(a: FPoly, b: FPoly) -> FPoly:
    if not a.c or not b.c:
        return FPoly.zero(a.F)
    return (a * b.exact_div(poly_gcd(a, b))).monic()


def _prime_divisors(n):
    return list(factorint(n))


def is_irreducible(f: FPoly) -> bool:
    """Rabin's test over the coefficient field of ``f``."""
    n = f.deg
    if n == NEG_INF or n < 1:
        return False
    if n == 1:
        return True
    f = f.monic()
    F = f.F
    x = FPoly(F, (0, 1))
    Q = F.order

    def frob_pow(k):
        h = x
        for _ in range(k):
            h = h.powmod(Q, f)
        return h

    if frob_pow(n) != x:
        return False
    for r in _prime_divisors(n):
        h = frob_pow(n // r)
        if not poly_gcd(f, h - x).is_one():
            return False
    return True


def squarefree_decomposition(f: FPoly):
    """Pairs ``(g, i)`` with ``f = lc * prod g^i`` and each ``g`` squarefree."""
    F = f.F
    f = f.monic()
    out = []
    if f.deg < 1:
        return out
    fp = f.derivative()
    c = poly_gcd(f, fp)
    w = f.exact_div(c)
    i = 1
    while not w.is_one():
        y = poly_gcd(w, c)
        fac = w.exact_div(y)
        if not fac.is_one():
            out.append((fac, i))
        w = y
        c = c.exact_div(y)
        i += 1
    if not c.is_one():
        for g, j in squarefree_decomposition(c.pth_root()):
            out.append((g, j * F.p))
    return out


def distinct_degree_factorization(f: FPoly):
    F = f.F
    Q = F.order
    x = FPoly(F, (0, 1))
    out = []
    h = x
    d = 0
    while f.deg >= 2 * (d + 1):
        d += 1
        h = h.powmod(Q, f)
        g = poly_gcd(f, h - x)
        if not g.is_one():
            out.append((g, d))
            f = f.exact_div(g)
            h = h % f
    if f.deg >= 1:
        out.append((f, f.deg))
    return out


def equal_degree_split(f: FPoly, d: int, rng: random.Random):
    """Factor a squarefree ``f`` whose irreducible factors all have degree ``d``."""
    if f.deg == d:
        return [f.monic()]
    F = f.F
    Q = F.order
    n = f.deg
    while True:
        a = FPoly(F, [F.random(rng) for _ in range(n)])
        if a.deg < 1:
            continue
        if F.p == 2:
            # trace map to F_2: a + a^2 + a^4 + ... + a^(2^(k*d - 1))
            b = a % f
            acc = b
            for _ in range(F.k * d - 1):
                b = (b * b) % f
                acc = acc + b
            g = poly_gcd(f, acc)
        else:
            b = a.powmod((Q**d - 1) // 2, f)
            g = poly_gcd(f, b - FPoly.one(F))
        if 0 < g.deg < n:
            return equal_degree_split(g, d, rng) + equal_degree_split(f.exact_div(g), d, rng)


def poly_factor(f: FPoly, seed: int | None = None):
    """Monic irreducible factors with multiplicities.

    Output is sorted by degree, then by coefficient tuple (low to high).  The
    leading coefficient of ``f`` is not part of the output.
    """
    if not f.c:
        raise ValueError("cannot factor the zero polynomial")
    rng = random.Random(factor_seed.get() if seed is None else seed)
    mult = {}
    for g, i in squarefree_decomposition(f):
        for h, d in distinct_degree_factorization(g):
            for irr in equal_degree_split(h, d, rng):
                mult[irr.c] = mult.get(irr.c, 0) + i
    F = f.F
    return sorted(((FPoly._raw(F, c), e) for c, e in mult.items()), key=lambda t: (len(t[0].c), t[0].c))


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------


class RatFunc:
    """``num/den`` with ``den`` monic and ``gcd(num, den) == 1``."""

    __slots__ = ("num", "den")

    def __init__(self, num: FPoly, den: FPoly | None = None):
        if den is None:
            den = FPoly.one(num.F)
        if not den.c:
            raise ZeroDivisionError("zero denominator")
        if not num.c:
            num, den = num, FPoly.one(num.F)
        else:
            g = poly_gcd(num, den)
            if not g.is_one():
                num = num.exact_div(g)
                den = den.exact_div(g)
            if den.lc != 1:
                inv = num.F.inv(den.lc)
                num, den = num.scale(inv), den.scale(inv)
        self.num = num
        self.den = den

    @classmethod
    def _raw(cls, num, den):
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def zero(cls, F):
        return cls._raw(FPoly.zero(F), FPoly.one(F))

    @classmethod
    def one(cls, F):
        return cls._raw(FPoly.one(F), FPoly.one(F))

    @classmethod
    def const(cls, F, a):
        return cls._raw(FPoly.const(F, a), FPoly.one(F))

    @classmethod
    def from_poly(cls, f: FPoly):
        return cls._raw(f, FPoly.one(f.F))

    @property
    def F(self):
        return self.num.F

    def is_zero(self):
        return not self.num.c

    def is_poly(self):
        return self.den.is_one()

    def __bool__(self):
        return bool(self.num.c)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (FPoly, int)):
            return self.den.is_one() and self.num == other
        return NotImplemented

    def __hash__(self):
        return hash((self.num.c, self.den.c))

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        return self.to_str()

    def to_str(self, var="x", fmt=None):
        n = self.num.to_str(var, fmt)
        if self.den.is_one():
            return n
        d = self.den.to_str(var, fmt)
        if _needs_parens(self.num):
            n = f"({n})"
        if _needs_parens(self.den):
            d = f"({d})"
        return f"{n}/{d}"

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, FPoly):
            return RatFunc.from_poly(other)
        if isinstance(other, int):
            return RatFunc.const(self.F, self.F.from_int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num.c:
            return other
        if not other.num.c:
            return self
        a, b, c, d = self.num, self.den, other.num, other.den
        if b.is_one() and d.is_one():
            return RatFunc._raw(a + c, b)
        if b == d:
            return RatFunc(a + c, b)
        # Henrici: only the gcd of the new numerator with gcd(b, d) can cancel
        g = poly_gcd(b, d)
        if g.is_one():
            return RatFunc._raw(a * d + b * c, b * d)
        bg, dg = b.exact_div(g), d.exact_div(g)
        num = a * dg + c * bg
        den = b * dg
        if not num.c:
            return RatFunc.zero(self.F)
        h = poly_gcd(num, g)
        if not h.is_one():
            num, den = num.exact_div(h), den.exact_div(h)
        return RatFunc._raw(num, den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

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
        a, b, c, d = self.num, self.den, other.num, other.den
        if not a.c or not c.c:
            return RatFunc.zero(self.F)
        if b.is_one() and d.is_one():
            return RatFunc._raw(a * c, b)
        g1 = poly_gcd(a, d)
        g2 = poly_gcd(c, b)
        if not g1.is_one():
            a, d = a.exact_div(g1), d.exact_div(g1)
        if not g2.is_one():
            c, b = c.exact_div(g2), b.exact_div(g2)
        num, den = a * c, b * d
        if den.lc != 1:
            inv = self.F.inv(den.lc)
            num, den = num.scale(inv), den.scale(inv)
        return RatFunc._raw(num, den)

    __rmul__ = __mul__

    def scale(self, a: int):
        """Multiply by the constant ``a`` of the coefficient field."""
        return RatFunc._raw(self.num.scale(a), self.den) if a else RatFunc.zero(self.F)

    def inverse(self):
        if not self.num.c:
            raise ZeroDivisionError("inverse of zero rational function")
        n, d = self.den, self.num
        inv = self.F.inv(d.lc)
        return RatFunc._raw(n.scale(inv), d.scale(inv))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc._raw(self.num**e, self.den**e)

    def frobenius(self, power: int):
        """``self ** power`` for ``power`` a power of the characteristic."""
        return RatFunc._raw(self.num.frobenius(power), self.den.frobenius(power))


def _needs_parens(f: FPoly):
    nz = sum(1 for a in f.c if a)
    if nz > 1:
        return True
    # a single term with a coefficient is a product and is safe; keep simple
    return False
