"""Row reduction, rank and nullspace over a finite field, backed by the kernels."""

from __future__ import annotations

from functools import lru_cache

from . import _kernels
from .ffcore import GF


@lru_cache(maxsize=None)
def _tables(F: GF):
    els = range(F.order)
    add = [[F.add(a, b) for b in els] for a in els]
    mul = [[F.mul(a, b) for b in els] for a in els]
    neg = [F.neg(a) for a in els]
    inv = [0] + [F.inv(a) for a in range(1, F.order)]
    return add, mul, neg, inv


def rref(F: GF, rows, ncols: int):
    """``(nonzero reduced rows, pivot columns)`` of the matrix ``rows`` over ``F``."""
    rows = [list(r) for r in rows]
    if not rows or ncols == 0:
        return [], []
    if F.k == 1:
        return _kernels.rref_modp(rows, ncols, F.p)
    return _kernels.rref_table(rows, ncols, *_tables(F))


def rank(F: GF, rows, ncols: int) -> int:
    return len(rref(F, rows, ncols)[1])


def nullspace(F: GF, rows, ncols: int):
    """A basis of ``{x : M x = 0}``, one vector per free column, in column order."""
    red, pivots = rref(F, rows, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [0] * ncols
        v[free] = 1
        for row, pc in zip(red, pivots):
            if row[free]:
                v[pc] = F.neg(row[free])
        basis.append(v)
    return basis
