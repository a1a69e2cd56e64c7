"""Places, valuations, divisors and Riemann-Roch spaces of F_{q^m}(x)."""

from __future__ import annotations

from dataclasses import dataclass, field

from .ffcore import INF, FieldSpec, FPoly, RatFunc, is_irreducible, poly_factor


@dataclass(frozen=True)
class Place:
    """A closed point of the projective line: a monic irreducible, or infinity."""

    poly: FPoly | None = None

    def __post_init__(self):
        if self.poly is not None:
            if self.poly.lc != 1 or not is_irreducible(self.poly):
                raise ValueError(f"{self.poly} is not monic irreducible")

    @classmethod
    def infinity(cls) -> Place:
        return cls(None)

    @property
    def is_infinite(self) -> bool:
        return self.poly is None

    @property
    def degree(self) -> int:
        return 1 if self.poly is None else self.poly.deg

    def label(self) -> str:
        return "inf" if self.poly is None else self.poly.to_str()

    def sort_key(self):
        if self.poly is None:
            return (0, 0, ())
        return (1, self.poly.deg, self.poly.c)

    def __repr__(self):
        return f"Place({self.label()})"


INFINITY = Place.infinity()


def _poly_ord(w: Place, f: FPoly):
    if not f.c:
        return INF
    if w.poly is None:
        return -f.deg
    k = 0
    while True:
        qt, r = divmod(f, w.poly)
        if r.c:
            return k
        f = qt
        k += 1


def ord_at(w: Place, f) -> int | float:
    """Normalized valuation of a rational function (or polynomial) at ``w``."""
    if isinstance(f, FPoly):
        f = RatFunc.from_poly(f)
    if not f.num.c:
        return INF
    if w.poly is None:
        return f.den.deg - f.num.deg
    return _poly_ord(w, f.num) - _poly_ord(w, f.den)


def ord_tpoly(w: Place, f) -> int | float:
    """Minimum valuation over the t-coefficients; ``inf`` for the zero polynomial."""
    return min((ord_at(w, c) for c in f.coeffs), default=INF)


def finite_places(f) -> list[Place]:
    """Finite places in the support of ``div(f)`` for a rational function ``f``."""
    polys = {}
    for part in (f.num, f.den):
        if part.deg >= 1:
            for g, _ in poly_factor(part):
                polys[g.c] = g
    return sorted((Place(g) for g in polys.values()), key=Place.sort_key)


class Divisor:
    """A finitely supported integer combination of places."""

    def __init__(self, coeffs: dict | None = None):
        self._c = {w: int(k) for w, k in (coeffs or {}).items() if k}

    def __getitem__(self, w: Place) -> int:
        return self._c.get(w, 0)

    def items(self):
        return sorted(self._c.items(), key=lambda kv: kv[0].sort_key())

    def support(self):
        return [w for w, _ in self.items()]

    @property
    def degree(self) -> int:
        return sum(k * w.degree for w, k in self._c.items())

    def __add__(self, other: Divisor) -> Divisor:
        c = dict(self._c)
        for w, k in other._c.items():
            c[w] = c.get(w, 0) + k
        return Divisor(c)

    def __le__(self, other: Divisor) -> bool:
        return all(self[w] <= other[w] for w in set(self._c) | set(other._c))

    def __eq__(self, other):
        return isinstance(other, Divisor) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __repr__(self):
        inner = " + ".join(f"{k}({w.label()})" for w, k in self.items())
        return f"Divisor({inner or '0'})"


@dataclass
class RRBasis:
    """Basis of L(D) over F_{q^m}, together with the induced F_q-basis.

    Every element is ``x^j * h / g`` for ``j = 0..deg D`` where ``g`` collects
    the finite places with positive coefficient and ``h`` those with negative
    coefficient.  The F_q-basis multiplies each of these by the powers
    ``1, gen, ..., gen^(m-1)`` of the field generator, ordered by the power of
    ``x`` first.
    """

    spec: FieldSpec
    divisor: Divisor
    g: FPoly
    h: FPoly
    elements: list = field(default_factory=list)
    fq_basis: list = field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.elements)

    @property
    def fq_dim(self) -> int:
        return len(self.fq_basis)

    def contains(self, f: RatFunc) -> bool:
        return self.coords(f) is not None

    def coords(self, f: RatFunc):
        """F_q-coordinates of ``f`` in :attr:`fq_basis`, or ``None`` if ``f`` is not in L(D)."""
        num = f * RatFunc(self.g, self.h)
        if not num.is_poly():
            return None
        p = num.num
        top = self.divisor.degree
        if p.deg > top:
            return None
        out = []
        for j in range(top + 1):
            out.extend(self.spec.subfield_coords(p[j]))
        return out


def rr_basis(spec: FieldSpec, D: Divisor) -> RRBasis:
    F = spec.big
    g = FPoly.one(F)
    h = FPoly.one(F)
    for w, k in D.items():
        if w.poly is None:
            continue
        if k > 0:
            g = g * w.poly**k
        else:
            h = h * w.poly ** (-k)
    basis = RRBasis(spec, D, g, h)
    base = RatFunc(h, g)
    x = FPoly(F, (0, 1))
    for j in range(D.degree + 1):
        e = base * RatFunc.from_poly(x**j)
        basis.elements.append(e)
        for beta in spec.subfield_basis:
            basis.fq_basis.append(e.scale(beta))
    return basis
