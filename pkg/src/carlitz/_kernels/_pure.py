"""Reference implementations of the hot kernels in plain Python.

Matrices are lists of lists of ints.  The compiled module in ``_native`` has
the same signatures and must return identical results.
"""

from __future__ import annotations


def rref_modp(rows, ncols, p):
    """Reduced row echelon form over GF(p).

    Returns ``(reduced_rows, pivots)``; only the nonzero rows are returned,
    and ``pivots[k]`` is the pivot column of row ``k``.
    """
    m = [[v % p for v in r] for r in rows]
    pivots = []
    r = 0
    nrows = len(m)
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        row = m[r]
        inv = pow(row[c], -1, p)
        if inv != 1:
            row = [v * inv % p for v in row]
            m[r] = row
        nz = [j for j in range(c, ncols) if row[j]]
        for i in range(nrows):
            if i != r:
                other = m[i]
                f = other[c]
                if f:
                    for j in nz:
                        other[j] = (other[j] - f * row[j]) % p
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rref_table(rows, ncols, add, mul, neg, inv):
    """Reduced row echelon form over a small field given by operation tables.

    ``add[a][b]``, ``mul[a][b]``, ``neg[a]`` and ``inv[a]`` are indexed by the
    integer codes of the field elements; ``0`` and ``1`` are the identities.
    """
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    nrows = len(m)
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        row = m[r]
        s = inv[row[c]]
        if s != 1:
            mr = mul[s]
            row = [mr[v] for v in row]
            m[r] = row
        nz = [j for j in range(c, ncols) if row[j]]
        for i in range(nrows):
            if i != r:
                other = m[i]
                f = other[c]
                if f:
                    mf = mul[neg[f]]
                    for j in nz:
                        other[j] = add[other[j]][mf[row[j]]]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def conv_modp(a, b, p):
    """Product of two coefficient lists over GF(p)."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return [v % p for v in out]
