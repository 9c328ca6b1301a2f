"""Small exact linear algebra helpers: Fraction Gauss, mod-p kernels,
integer determinant.  Everything works on lists of lists; sizes here
are desk scale (at most 64), so clarity beats asymptotics.
"""
from __future__ import annotations

from fractions import Fraction


def frac_rref(rows):
    """Reduced row echelon form over Q.  Returns (rref rows, pivot cols).
    Input rows are not mutated."""
    m = [list(map(Fraction, r)) for r in rows]
    pivots = []
    row = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((i for i in range(row, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = 1 / m[row][col]
        m[row] = [v * inv for v in m[row]]
        for i in range(len(m)):
            if i != row and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[row])]
        pivots.append(col)
        row += 1
        if row == len(m):
            break
    return m[:row], pivots


def frac_rank(rows) -> int:
    return len(frac_rref(rows)[0])


def frac_kernel(rows):
    """Basis of {v : M v = 0} over Q, for M given as rows."""
    if not rows:
        return []
    ncols = len(rows[0])
    rref, pivots = frac_rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in zip(rref, pivots):
            v[p] = -r[f]
        basis.append(v)
    return basis


def modp_rref(rows, p):
    """Reduced row echelon form over GF(p).  Returns (rref rows, pivots)."""
    m = [[v % p for v in r] for r in rows]
    pivots = []
    row = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((i for i in range(row, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = pow(m[row][col], p - 2, p)
        m[row] = [v * inv % p for v in m[row]]
        for i in range(len(m)):
            if i != row and m[i][col]:
                f = m[i][col]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[row])]
        pivots.append(col)
        row += 1
        if row == len(m):
            break
    return m[:row], pivots


def modp_rank(rows, p) -> int:
    return len(modp_rref(rows, p)[0])


def modp_kernel(rows, p):
    """Basis of {v : M v = 0 mod p}."""
    if not rows:
        return []
    ncols = len(rows[0])
    rref, pivots = modp_rref(rows, p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for r, p_col in zip(rref, pivots):
            v[p_col] = (-r[f]) % p
        basis.append(v)
    return basis


def modp_in_span(rref_rows, pivots, vec, p) -> bool:
    """Membership test against an rref basis."""
    v = [x % p for x in vec]
    for r, c in zip(rref_rows, pivots):
        if v[c]:
            f = v[c]
            v = [(a - f * b) % p for a, b in zip(v, r)]
    return not any(v)


def int_det(rows) -> int:
    """Determinant of a square integer matrix, Bareiss elimination
    (fraction free, exact)."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]
