"""Exact integer matrix algorithms: echelon row bases, kernels, Smith form.

Everything here works on plain lists of Python ints.  The augmented
echelon basis is the single workhorse: membership tests, certificates,
canonical coset representatives and left kernels all fall out of one
structure, and Z/n reduces to it by adjoining n times the unit rows.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import IllFormed


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) = x*a + y*b, g >= 0."""
    prevx, x = 1, 0
    prevy, y = 0, 1
    while b:
        q, r = divmod(a, b)
        x, prevx = prevx - q * x, x
        y, prevy = prevy - q * y, y
        a, b = b, r
    if a < 0:
        a, prevx, prevy = -a, -prevx, -prevy
    return a, prevx, prevy


class ZRowBasis:
    """Echelon basis of the lattice spanned by augmented integer rows.

    Only the first ``left`` columns are echelonized; trailing columns
    ride along and carry certificates.  Rows whose left block reduces to
    zero are collected; their right blocks form a basis of the left
    kernel of the input matrix.
    """

    def __init__(self, left: int, rows: list[list[int]]):
        self.left = left
        self.pivots: dict[int, list[int]] = {}
        self._null: list[list[int]] = []
        for row in rows:
            self._insert(list(row))
        self._back_reduce()
        self._null = _echelonize_plain(self._null)

    def _insert(self, r: list[int]):
        for c in range(self.left):
            if r[c] == 0:
                continue
            piv = self.pivots.get(c)
            if piv is None:
                if r[c] < 0:
                    r = [-x for x in r]
                self.pivots[c] = r
                return
            a, b = piv[c], r[c]
            if b % a == 0:
                q = b // a
                for k in range(c, len(r)):
                    r[k] -= q * piv[k]
            else:
                g, x, y = xgcd(a, b)
                ag, bg = a // g, b // g
                new_piv = [x * u + y * v for u, v in zip(piv, r)]
                r = [ag * v - bg * u for u, v in zip(piv, r)]
                self.pivots[c] = new_piv
        if any(r[self.left:]):
            self._null.append(r[self.left:])

    def _back_reduce(self):
        cols = sorted(self.pivots)
        for i, c in enumerate(cols):
            piv = self.pivots[c]
            for c2 in cols[i + 1:]:
                piv2 = self.pivots[c2]
                if piv[c2]:
                    q = piv[c2] // piv2[c2]
                    if q:
                        for k in range(c2, len(piv)):
                            piv[k] -= q * piv2[k]

    def reduce_full(self, row: list[int]) -> list[int]:
        r = list(row)
        for c in sorted(self.pivots):
            if r[c]:
                piv = self.pivots[c]
                q = r[c] // piv[c]
                if q:
                    for k in range(c, len(r)):
                        r[k] -= q * piv[k]
        return r

    def reduce_left(self, row_left: list[int]) -> list[int]:
        """Canonical representative of a left-block vector modulo the lattice."""
        if self.pivots:
            width = len(next(iter(self.pivots.values())))
        else:
            width = self.left
        r = list(row_left) + [0] * (width - self.left)
        return self.reduce_full(r)[: self.left]

    def contains_left(self, row_left: list[int]) -> bool:
        return not any(self.reduce_left(row_left))

    def certificate(self, row_left: list[int], nrows: int) -> list[int] | None:
        """Coefficients w with w * (input rows) = row_left, or None."""
        r = list(row_left) + [0] * nrows
        nf = self.reduce_full(r)
        if any(nf[: self.left]):
            return None
        return [-x for x in nf[self.left:]]

    def kernel(self) -> list[list[int]]:
        return [row[:] for row in self._null]


def _echelonize_plain(rows: list[list[int]]) -> list[list[int]]:
    if not rows:
        return []
    width = len(rows[0])
    basis = object.__new__(ZRowBasis)
    basis.left = width
    basis.pivots = {}
    basis._null = []
    for r in rows:
        basis._insert(list(r))
    basis._back_reduce()
    return [basis.pivots[c][:] for c in sorted(basis.pivots)]


def z_kernel(rows: list[list[int]], width: int) -> list[list[int]]:
    """Generators of {v : v * A = 0} for the integer matrix with given rows."""
    aug = [list(r) + [1 if j == i else 0 for j in range(len(rows))]
           for i, r in enumerate(rows)]
    basis = ZRowBasis(width, aug)
    return basis.kernel()


def identity_matrix(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul_int(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    if a and b and len(a[0]) != len(b):
        raise IllFormed("integer matrix dimensions disagree")
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(cols)]
            for i in range(len(a))]


def smith_form(a: list[list[int]]) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Return (U, D, V) with U*A*V = D, U and V unimodular, D diagonal
    with nonnegative entries in a divisibility chain.

    Each entry is cleared with one unimodular xgcd combine, so the pivot
    shrinks through gcds and the transform entries stay tame.
    """
    rows = len(a)
    cols = len(a[0]) if a else 0
    D = [row[:] for row in a]
    U = identity_matrix(rows)
    V = identity_matrix(cols)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in D:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def clear_row_entry(t, i):
        """Zero D[i][t] against the pivot row t by a unimodular combine."""
        p, b = D[t][t], D[i][t]
        if b % p == 0:
            q = b // p
            for k in range(cols):
                D[i][k] -= q * D[t][k]
            for k in range(rows):
                U[i][k] -= q * U[t][k]
        else:
            g, x, y = xgcd(p, b)
            pg, bg = p // g, b // g
            for m, width in ((D, cols), (U, rows)):
                for k in range(width):
                    rt, ri = m[t][k], m[i][k]
                    m[t][k] = x * rt + y * ri
                    m[i][k] = -bg * rt + pg * ri

    def clear_col_entry(t, j):
        p, b = D[t][t], D[t][j]
        if b % p == 0:
            q = b // p
            for r in D:
                r[j] -= q * r[t]
            for r in V:
                r[j] -= q * r[t]
        else:
            g, x, y = xgcd(p, b)
            pg, bg = p // g, b // g
            for m in (D, V):
                for r in m:
                    ct, cj = r[t], r[j]
                    r[t] = x * ct + y * cj
                    r[j] = -bg * ct + pg * cj

    t = 0
    while True:
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = abs(D[i][j])
                if v and (best is None or v < best):
                    best, pivot = v, (i, j)
        if pivot is None:
            break
        i, j = pivot
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            for i in range(t + 1, rows):
                if D[i][t]:
                    clear_row_entry(t, i)
            for j in range(t + 1, cols):
                if D[t][j]:
                    clear_col_entry(t, j)
            # column combines may resurrect entries below the pivot
            if not any(D[i][t] for i in range(t + 1, rows)):
                break
        if D[t][t] < 0:
            for k in range(cols):
                D[t][k] = -D[t][k]
            for k in range(rows):
                U[t][k] = -U[t][k]
        # divisibility fix-up: pivot must divide the remaining block
        offender = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if D[i][j] % D[t][t]:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            for k in range(cols):
                D[t][k] += D[offender][k]
            for k in range(rows):
                U[t][k] += U[offender][k]
            continue
        t += 1
    return U, D, V


def int_matrix_inverse(v: list[list[int]]) -> list[list[int]]:
    """Invert a unimodular integer matrix exactly."""
    n = len(v)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(v)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            raise IllFormed("matrix is singular")
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    out = [[x for x in row[n:]] for row in m]
    if any(x.denominator != 1 for row in out for x in row):
        raise IllFormed("matrix is not unimodular over the integers")
    return [[int(x) for x in row] for row in out]
