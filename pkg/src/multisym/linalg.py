"""
Fraction-free (Bareiss) elimination over the rationals.

Rows are cleared of denominators first, so all elimination happens on
Python integers and every rank decision is exact.
"""

from fractions import Fraction
from math import lcm


def _integer_rows(rows):
    out = []
    for row in rows:
        row = [Fraction(v) for v in row]
        den = lcm(*(v.denominator for v in row)) if row else 1
        out.append([int(v * den) for v in row])
    return out


def echelon(rows, ncols=None):
    """Bareiss row echelon form of an integer matrix (modified in place).

    Only the first ``ncols`` columns are used as pivot columns.  Returns the
    list of pivot columns.
    """
    if not rows:
        return []
    nrows, width = len(rows), len(rows[0])
    ncols = width if ncols is None else ncols
    prev = 1
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, nrows):
            lead = rows[i][c]
            ri = rows[i]
            rr = rows[r]
            for j in range(c + 1, width):
                q, rem = divmod(piv * ri[j] - lead * rr[j], prev)
                assert not rem, "Bareiss division must be exact"
                ri[j] = q
            ri[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return pivots


def rank(rows):
    "Exact rank of a rational matrix given as a list of rows."
    m = _integer_rows(rows)
    return len(echelon(m))


def solve(A, b):
    """One rational solution x of A x = b, or None when inconsistent.

    Free variables are set to zero.
    """
    ncols = len(A[0]) if A else 0
    aug = _integer_rows([list(row) + [bv] for row, bv in zip(A, b)])
    pivots = echelon(aug, ncols)
    r = len(pivots)
    if any(row[ncols] for row in aug[r:]):
        return None
    x = [Fraction(0)] * ncols
    for i in range(r - 1, -1, -1):
        c = pivots[i]
        row = aug[i]
        s = Fraction(row[ncols]) - sum(row[j] * x[j] for j in range(c + 1, ncols))
        x[c] = s / row[c]
    return x
