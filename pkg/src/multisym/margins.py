"""
Enumeration of margin-constrained nonnegative integer matrices.

``L(alpha, beta, n)``: matrices gamma indexed by [0..a] x [0..b] with
gamma[0][0] = 0, row sums alpha (rows 1..a), column sums beta (columns
1..b) and total at most n.

``Q(alpha, beta, n, m)``: cubical arrays gamma[l][r][k] with the same margins
(summed over k), entries off the inner block (l = 0 or r = 0) living only in
slice k = 0, and weight  sum k * gamma[l][r][k] = m.

Both enumerators walk the entries in a fixed flattened order and emit
solutions in lexicographic order of that flattened vector.
"""

from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache


def L_positions(a, b):
    "Flattened (l, r) order for L: row-major, skipping (0, 0)."
    return [(l, r) for l in range(a + 1) for r in range(b + 1) if (l, r) != (0, 0)]


def Q_positions(a, b, kmax):
    "Flattened (l, r, k) order for Q, skipping entries forced to zero."
    out = []
    for l in range(a + 1):
        for r in range(b + 1):
            if (l, r) == (0, 0):
                continue
            top = kmax if (l and r) else 0
            for k in range(top + 1):
                out.append((l, r, k))
    return out


class CubicalMatrix:
    """An element of Q(alpha, beta, n, m): sparse entries keyed by (l, r, k)."""

    __slots__ = ("a", "b", "kmax", "flat", "_d")

    def __init__(self, a, b, kmax, flat):
        self.a = a
        self.b = b
        self.kmax = kmax
        self.flat = tuple(flat)
        self._d = {p: v for p, v in zip(Q_positions(a, b, kmax), self.flat) if v}

    def get(self, l, r, k=0):
        return self._d.get((l, r, k), 0)

    def items(self):
        return sorted(self._d.items())

    def total(self):
        return sum(self.flat)

    def weight(self):
        return sum(k * v for (_, _, k), v in self._d.items())

    def __eq__(self, other):
        if not isinstance(other, CubicalMatrix):
            return NotImplemented
        return (self.a, self.b, self._d) == (other.a, other.b, other._d)

    def __hash__(self):
        return hash((self.a, self.b, frozenset(self._d.items())))

    def __repr__(self):
        return "CubicalMatrix(%r)" % (self._d,)


def _check(alpha, beta, n):
    if any(v < 0 for v in list(alpha) + list(beta)):
        raise ValueError("margins must be nonnegative")
    if sum(alpha) > n or sum(beta) > n:
        raise ValueError("|alpha| and |beta| must be <= n (got %d, %d, n=%d)"
                         % (sum(alpha), sum(beta), n))


def _search(alpha, beta, n, positions, weight=None, prefix=()):
    """Generic depth-first search over ``positions`` = [(l, r, k), ...].

    Positions must be grouped by row l in increasing order.  Yields flattened
    tuples in lexicographic order.
    """
    a = len(alpha)
    npos = len(positions)
    # last index of each row, so the final entry of a constrained row is forced
    last_in_row = {}
    for idx, (l, _, _) in enumerate(positions):
        last_in_row[l] = idx
    # owed_after[l]: row sums still owed by rows l+1..a
    owed_after = [sum(alpha[l:]) for l in range(a + 1)]

    row_rem = [0] + list(alpha)
    col_rem = [0] + list(beta)
    vec = [0] * npos
    state = {"total": 0, "w": 0}

    def feasible(idx):
        # lower bound on what the remaining rows/columns still need
        l = positions[idx][0] if idx < npos else a + 1
        need_rows = (row_rem[l] if l else 0) + owed_after[l]
        need_cols = sum(col_rem[1:])
        return max(need_rows, need_cols) <= n - state["total"]

    def rec(idx):
        if idx == npos:
            if any(col_rem[1:]) or any(row_rem[1:]):
                return
            if weight is not None and state["w"] != weight:
                return
            yield tuple(vec)
            return
        if not feasible(idx):
            return
        l, r, k = positions[idx]
        cap = n - state["total"]
        if l:
            cap = min(cap, row_rem[l])
        if r:
            cap = min(cap, col_rem[r])
        if weight is not None and k:
            cap = min(cap, (weight - state["w"]) // k)
        lo = 0
        if l and idx == last_in_row[l]:
            # the last entry of a constrained row closes the row
            if row_rem[l] > cap:
                return
            lo = row_rem[l]
            cap = lo
        if idx < len(prefix):
            if not (lo <= prefix[idx] <= cap):
                return
            values = (prefix[idx],)
        else:
            values = range(lo, cap + 1)
        for v in values:
            vec[idx] = v
            row_rem[l] -= v if l else 0
            col_rem[r] -= v if r else 0
            state["total"] += v
            state["w"] += k * v
            yield from rec(idx + 1)
            row_rem[l] += v if l else 0
            col_rem[r] += v if r else 0
            state["total"] -= v
            state["w"] -= k * v
        vec[idx] = 0

    yield from rec(0)


def _L_flat_to_matrix(a, b, flat):
    rows = [[0] * (b + 1) for _ in range(a + 1)]
    for (l, r), v in zip(L_positions(a, b), flat):
        rows[l][r] = v
    return tuple(tuple(row) for row in rows)


def flatten_L(gamma):
    "Row-major flattening of an L-matrix, skipping the (0, 0) corner."
    return tuple(v for l, row in enumerate(gamma) for r, v in enumerate(row)
                 if (l, r) != (0, 0))


def _L_chunk(alpha, beta, n, prefix):
    a, b = len(alpha), len(beta)
    pos = [(l, r, 0) for l, r in L_positions(a, b)]
    return list(_search(alpha, beta, n, pos, None, prefix))


def _row0_prefixes(beta, n):
    "Candidate row-0 entries (gamma_01..gamma_0b) in lexicographic order."
    out = []

    def rec(r, acc, tot):
        if r == len(beta):
            out.append(tuple(acc))
            return
        for v in range(min(beta[r], n - tot) + 1):
            rec(r + 1, acc + [v], tot + v)

    rec(0, [], 0)
    return out


def enumerate_L(alpha, beta, n, workers=None):
    """All gamma in L(alpha, beta, n), as (a+1) x (b+1) tuples of rows.

    With ``workers`` > 1 the search is split by the row-0 prefix across a
    process pool; the merged output has the same order as the serial run.
    """
    alpha, beta = tuple(alpha), tuple(beta)
    _check(alpha, beta, n)
    a, b = len(alpha), len(beta)
    if workers and workers > 1:
        prefixes = _row0_prefixes(beta, n)
        with ProcessPoolExecutor(max_workers=workers) as ex:
            chunks = ex.map(_L_chunk, [alpha] * len(prefixes), [beta] * len(prefixes),
                            [n] * len(prefixes), prefixes)
            flats = [f for chunk in chunks for f in chunk]
    else:
        pos = [(l, r, 0) for l, r in L_positions(a, b)]
        flats = _search(alpha, beta, n, pos)
    return [_L_flat_to_matrix(a, b, f) for f in flats]


def iter_L(alpha, beta, n):
    "Lazy variant of enumerate_L."
    alpha, beta = tuple(alpha), tuple(beta)
    _check(alpha, beta, n)
    a, b = len(alpha), len(beta)
    pos = [(l, r, 0) for l, r in L_positions(a, b)]
    for f in _search(alpha, beta, n, pos):
        yield _L_flat_to_matrix(a, b, f)


def enumerate_Q(alpha, beta, n, m, kmax):
    """All gamma in Q(alpha, beta, n, m) with slice index k <= kmax.

    ``m=None`` drops the weight constraint.
    """
    alpha, beta = tuple(alpha), tuple(beta)
    _check(alpha, beta, n)
    if kmax < 0:
        raise ValueError("kmax must be >= 0")
    a, b = len(alpha), len(beta)
    if m is not None and (m < 0 or m > n * kmax):
        return []
    pos = Q_positions(a, b, kmax)
    return [CubicalMatrix(a, b, kmax, f) for f in _search(alpha, beta, n, pos, m)]


def count_L(alpha, beta, n):
    """|L(alpha, beta, n)| without building the matrices.

    Returns 0 when |alpha| or |beta| exceeds n.
    """
    alpha, beta = tuple(alpha), tuple(beta)
    if sum(alpha) > n or sum(beta) > n:
        return 0

    @lru_cache(maxsize=None)
    def rows(l, cols, room):
        # l: next row (1-based), cols: column remainders, room: n - total so far
        if l > len(alpha):
            # row 0 fills the remaining columns
            return 1 if sum(cols) <= room else 0
        return sum(rows(l + 1, tuple(c - v for c, v in zip(cols, split)), room - alpha[l - 1])
                   for split in _splits(alpha[l - 1], cols))

    return rows(1, beta, n)


def _splits(total, caps):
    "Ways to write total = gamma_l0 + sum_r gamma_lr with gamma_lr <= caps[r]."
    # returns the inner part (gamma_l1..gamma_lb); gamma_l0 absorbs the rest
    out = []

    def rec(r, acc, left):
        if r == len(caps):
            out.append(tuple(acc))
            return
        for v in range(min(caps[r], left) + 1):
            rec(r + 1, acc + [v], left - v)

    rec(0, [], total)
    return out
