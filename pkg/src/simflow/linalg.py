"""Arbitrary-precision integer matrices and Smith normal form.

Everything here is exact: entries are Python ints, elimination uses
minimal-absolute-value pivoting (no modular shortcuts, no floats).
Matrices in this problem are small (tens of rows/columns), so dense
row-major storage wins over anything clever.
"""

from dataclasses import dataclass
from itertools import product
from math import gcd, prod

from .caps import check_enum_cap
from .errors import BadModulusError


class IntMatrix:
    """Dense integer matrix. Rows are lists; entries are exact ints."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data, cols=None):
        self.data = [list(row) for row in data]
        self.rows = len(self.data)
        if self.rows:
            self.cols = len(self.data[0])
            if any(len(r) != self.cols for r in self.data):
                raise ValueError("ragged rows")
        else:
            self.cols = 0 if cols is None else cols

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n):
        m = cls.zeros(n, n)
        for i in range(n):
            m.data[i][i] = 1
        return m

    def copy(self):
        return IntMatrix(self.data, cols=self.cols)

    def transpose(self):
        return IntMatrix(
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def column(self, j):
        return [row[j] for row in self.data]

    def is_zero(self):
        return all(v == 0 for row in self.data for v in row)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        bt = other.transpose().data
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in bt] for row in self.data],
            cols=other.cols,
        )

    def mat_vec(self, vec):
        return [sum(a * b for a, b in zip(row, vec)) for row in self.data]

    def __eq__(self, other):
        return (
            isinstance(other, IntMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __repr__(self):
        return f"IntMatrix({self.data!r})"


@dataclass
class SNFResult:
    """diagonal d1 | d2 | ... | dr (positive), rank r, optional U,V with U A V = diag."""

    diagonal: tuple
    rank: int
    U: IntMatrix = None
    V: IntMatrix = None


def _chain_normalize(diag):
    """Turn a multiset of positive diagonal entries into invariant factors."""
    d = sorted(diag)
    if not d or d[-1] == 1:
        return d
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            di = d[i]
            for j in range(i + 1, len(d)):
                if d[j] % di:
                    g = gcd(di, d[j])
                    d[i], d[j] = g, di * d[j] // g
                    di = g
                    changed = True
    d.sort()
    return d


def snf_diagonal(rows):
    """Invariant factors of the matrix given as a list of row lists.

    Destroys `rows`. Fast path used by the subset sweeps: no transform
    bookkeeping, columns and rows are physically discarded as pivots
    are extracted.
    """
    rows = [r for r in rows if any(r)]
    diag = []
    while rows:
        ncols = len(rows[0])
        # locate a minimal-magnitude nonzero pivot
        best = 0
        pi = pj = -1
        for i, row in enumerate(rows):
            for j in range(ncols):
                v = row[j]
                if v:
                    a = v if v > 0 else -v
                    if best == 0 or a < best:
                        best, pi, pj = a, i, j
                        if a == 1:
                            break
            if best == 1:
                break
        if best == 0:
            break
        # reduce until pivot row and column are clear
        while True:
            prow = rows[pi]
            p = prow[pj]
            moved = False
            for i, row in enumerate(rows):
                if i == pi:
                    continue
                v = row[pj]
                if v:
                    q = v // p
                    if q:
                        rows[i] = row = [a - q * b for a, b in zip(row, prow)]
                    if row[pj]:
                        pi = i  # remainder is strictly smaller; make it the pivot
                        moved = True
                        break
            if moved:
                continue
            # column is clear: clearing the pivot row only touches the pivot row
            for j in range(ncols):
                if j == pj:
                    continue
                v = prow[j]
                if v:
                    q = v // p
                    if q:
                        prow[j] = v - q * p
                    if prow[j]:
                        pj = j
                        moved = True
                        break
            if moved:
                continue
            break
        diag.append(p if p > 0 else -p)
        # drop pivot row; swap pivot column with the last and drop it
        last = len(rows) - 1
        rows[pi] = rows[last]
        rows.pop()
        lastc = ncols - 1
        for row in rows:
            row[pj] = row[lastc]
            row.pop()
        rows = [r for r in rows if any(r)]
    return _chain_normalize(diag)


def _xgcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def smith_normal_form(mat, keep_transforms=False):
    """Smith normal form of an IntMatrix.

    Returns SNFResult; when keep_transforms is set, U and V are unimodular
    with U @ mat @ V equal to the diagonal embedded in the matrix shape.
    """
    M = [list(row) for row in mat.data]
    m, n = mat.rows, mat.cols
    U = IntMatrix.identity(m) if keep_transforms else None
    V = IntMatrix.identity(n) if keep_transforms else None

    def swap_rows(a, b):
        M[a], M[b] = M[b], M[a]
        if U:
            U.data[a], U.data[b] = U.data[b], U.data[a]

    def swap_cols(a, b):
        for row in M:
            row[a], row[b] = row[b], row[a]
        if V:
            for row in V.data:
                row[a], row[b] = row[b], row[a]

    def row_sub(i, k, q):
        Mk = M[k]
        M[i] = [a - q * b for a, b in zip(M[i], Mk)]
        if U:
            Uk = U.data[k]
            U.data[i] = [a - q * b for a, b in zip(U.data[i], Uk)]

    def col_sub(j, k, q):
        for row in M:
            row[j] -= q * row[k]
        if V:
            for row in V.data:
                row[j] -= q * row[k]

    t = 0
    bound = min(m, n)
    while t < bound:
        best = 0
        pi = pj = -1
        for i in range(t, m):
            Mi = M[i]
            for j in range(t, n):
                v = Mi[j]
                if v:
                    a = v if v > 0 else -v
                    if best == 0 or a < best:
                        best, pi, pj = a, i, j
                        if a == 1:
                            break
            if best == 1:
                break
        if best == 0:
            break
        if pi != t:
            swap_rows(t, pi)
        if pj != t:
            swap_cols(t, pj)
        while True:
            p = M[t][t]
            dirty = False
            for i in range(t + 1, m):
                v = M[i][t]
                if v:
                    q = v // p
                    if q:
                        row_sub(i, t, q)
                    if M[i][t]:
                        swap_rows(t, i)
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, n):
                v = M[t][j]
                if v:
                    q = v // p
                    if q:
                        col_sub(j, t, q)
                    if M[t][j]:
                        swap_cols(t, j)
                        dirty = True
                        break
            if dirty:
                continue
            break
        if M[t][t] < 0:
            M[t] = [-a for a in M[t]]
            if U:
                U.data[t] = [-a for a in U.data[t]]
        t += 1

    rank = t
    # enforce the divisibility chain
    changed = True
    while changed:
        changed = False
        for i in range(rank):
            for j in range(i + 1, rank):
                a, b = M[i][i], M[j][j]
                if b % a == 0:
                    continue
                changed = True
                g, s, tt = _xgcd(a, b)
                ag, bg = a // g, b // g
                M[i][i], M[j][j] = g, a * bg
                if keep_transforms:
                    ui, uj = U.data[i], U.data[j]
                    U.data[i] = [s * x + tt * y for x, y in zip(ui, uj)]
                    U.data[j] = [-bg * x + ag * y for x, y in zip(ui, uj)]
                    for row in V.data:
                        vi, vj = row[i], row[j]
                        row[i] = vi + vj
                        row[j] = -tt * bg * vi + s * ag * vj

    diagonal = tuple(M[i][i] for i in range(rank))
    return SNFResult(diagonal=diagonal, rank=rank, U=U, V=V)


def rational_rank(mat):
    """Rank over the rationals (equals the SNF rank)."""
    return len(snf_diagonal([list(row) for row in mat.data]))


def kernel_count_mod_q(mat, q):
    """Exact number of v in (Z_q)^cols with mat . v == 0 (mod q)."""
    if q < 1:
        raise BadModulusError(f"modulus must be >= 1, got {q}")
    diag = snf_diagonal([list(row) for row in mat.data])
    free = mat.cols - len(diag)
    return q**free * prod(gcd(d, q) for d in diag)


def kernel_basis(mat):
    """Integer basis of the rational kernel (columns of V past the rank)."""
    res = smith_normal_form(mat, keep_transforms=True)
    return [res.V.column(j) for j in range(res.rank, mat.cols)]


def enumerate_kernel_mod_q(mat, q, cap=None):
    """Yield each kernel vector of mat over Z_q exactly once.

    Solutions are V . y for y ranging over the diagonal system's solution
    box; distinct y give distinct vectors because V is invertible mod q.
    Raises CapExceededError (with the exact count) if the kernel is larger
    than the enumeration cap.
    """
    total = kernel_count_mod_q(mat, q)
    check_enum_cap(total, cap)
    n = mat.cols
    if n == 0:
        yield ()
        return
    res = smith_normal_form(mat, keep_transforms=True)
    vcols = [res.V.column(j) for j in range(n)]
    choices = []
    for i, d in enumerate(res.diagonal):
        g = gcd(d, q)
        if g > 1:
            choices.append((i, range(0, q, q // g)))
    for i in range(res.rank, n):
        choices.append((i, range(q)))
    if not choices:
        yield (0,) * n
        return
    idxs = [i for i, _ in choices]
    for ys in product(*(r for _, r in choices)):
        v = [0] * n
        for i, y in zip(idxs, ys):
            if y:
                col = vcols[i]
                for k in range(n):
                    v[k] += col[k] * y
        yield tuple(x % q for x in v)


def row_lattice_reduce(rows, ncols):
    """Reduce a list of integer rows to at most ncols rows spanning the
    same row lattice (unimodular row operations only), so kernels mod any
    modulus are unchanged."""
    table = {}
    for row in rows:
        row = list(row)
        col = 0
        while col < ncols:
            if row[col] == 0:
                col += 1
                continue
            pivot = table.get(col)
            if pivot is None:
                table[col] = row
                break
            while row[col]:
                q = pivot[col] // row[col]
                if q:
                    for j in range(col, ncols):
                        pivot[j] -= q * row[j]
                pivot, row = row, pivot
            table[col] = pivot
            # row now vanishes at col; keep folding it in
        # rows that reduce to zero are dropped
    return [table[c] for c in sorted(table)]


def determinant(mat):
    """Exact determinant via fraction-free (Bareiss) elimination."""
    if mat.rows != mat.cols:
        raise ValueError("determinant of a non-square matrix")
    n = mat.rows
    if n == 0:
        return 1
    M = [list(row) for row in mat.data]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pkk = M[k][k]
        for i in range(k + 1, n):
            Mi, Mk = M[i], M[k]
            mik = Mi[k]
            for j in range(k + 1, n):
                Mi[j] = (Mi[j] * pkk - mik * Mk[j]) // prev
            Mi[k] = 0
        prev = pkk
    return sign * M[n - 1][n - 1]
