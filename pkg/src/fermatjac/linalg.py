"""Exact integer linear algebra: Hermite/Smith normal forms, kernels, LLL.

Everything here works on plain Python ints (arbitrary precision), with
matrices as lists of row lists.  No floating point is used except inside
the Gram-Schmidt bookkeeping of `lll_reduce`, which is kept exact
(Fractions) so the reduction itself is deterministic and exact.
"""

from __future__ import annotations

from fractions import Fraction


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y = g."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            c = ai[t]
            if c:
                bt = b[t]
                for j in range(m):
                    oi[j] += c * bt[j]
    return out


def _swap_rows(m: list[list[int]], i: int, j: int) -> None:
    m[i], m[j] = m[j], m[i]


def hnf_row(matrix: list[list[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Row-style Hermite normal form.

    Returns (H, U) with U unimodular and U * matrix = H, H in row echelon
    form with positive pivots and entries above each pivot reduced into
    [0, pivot).  Zero rows of H are collected at the bottom.
    """
    h = [row[:] for row in matrix]
    n = len(h)
    cols = len(h[0]) if n else 0
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    pivot_row = 0
    for col in range(cols):
        # find a row at or below pivot_row with a nonzero entry in col
        nz = [r for r in range(pivot_row, n) if h[r][col]]
        if not nz:
            continue
        r0 = nz[0]
        _swap_rows(h, pivot_row, r0)
        _swap_rows(u, pivot_row, r0)
        # euclidean elimination below the pivot
        for r in range(pivot_row + 1, n):
            while h[r][col]:
                a, b = h[pivot_row][col], h[r][col]
                if abs(b) < abs(a) or a == 0:
                    _swap_rows(h, pivot_row, r)
                    _swap_rows(u, pivot_row, r)
                    a, b = h[pivot_row][col], h[r][col]
                q = b // a
                if q:
                    for c in range(cols):
                        h[r][c] -= q * h[pivot_row][c]
                    for c in range(n):
                        u[r][c] -= q * u[pivot_row][c]
                else:
                    break
        if h[pivot_row][col] < 0:
            h[pivot_row] = [-x for x in h[pivot_row]]
            u[pivot_row] = [-x for x in u[pivot_row]]
        # reduce entries above the pivot
        p = h[pivot_row][col]
        for r in range(pivot_row):
            q = h[r][col] // p
            if q:
                for c in range(cols):
                    h[r][c] -= q * h[pivot_row][c]
                for c in range(n):
                    u[r][c] -= q * u[pivot_row][c]
        pivot_row += 1
        if pivot_row == n:
            break
    return h, u


def row_rank(matrix: list[list[int]]) -> int:
    h, _ = hnf_row(matrix)
    return sum(1 for row in h if any(row))


def kernel_basis(matrix: list[list[int]]) -> list[list[int]]:
    """Basis of the left null space of matrix^T, i.e. integer solutions of
    matrix @ x = 0 returned as rows.

    Computed by row-reducing [matrix^T | I]: rows of the identity block whose
    matrix^T part vanished span the kernel.  The result is HNF-normalized so
    it is deterministic.
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    # transpose and augment with identity
    aug = [[matrix[r][c] for r in range(rows)] + [int(i == c) for i in range(cols)]
           for c in range(cols)]
    h, _ = hnf_row(aug)
    ker = [row[rows:] for row in h if not any(row[:rows])]
    kh, _ = hnf_row(ker)
    return [row for row in kh if any(row)]


def solve_integer(matrix: list[list[int]], target: list[int]) -> list[int] | None:
    """One integer solution x of matrix @ x = target, or None.

    Uses the row HNF of the transpose: with U * A^T = H, solutions of
    x^T A^T = target^T correspond to y^T H = target^T, x = y^T U.
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    at = [[matrix[r][c] for r in range(rows)] for c in range(cols)]
    h, u = hnf_row(at)
    # forward-substitute target against the echelon rows of h
    t = list(target)
    y = [0] * cols
    for i, row in enumerate(h):
        piv = next((j for j, v in enumerate(row) if v), None)
        if piv is None:
            break
        if t[piv] % row[piv]:
            continue  # this pivot cannot help; a later row never reaches piv
        q = t[piv] // row[piv]
        y[i] = q
        if q:
            for j in range(rows):
                t[j] -= q * row[j]
    if any(t):
        return None
    x = [0] * cols
    for i in range(cols):
        if y[i]:
            for j in range(cols):
                x[j] += y[i] * u[i][j]
    # verify (cheap insurance, the callers rely on exactness)
    for r in range(rows):
        if sum(matrix[r][c] * x[c] for c in range(cols)) != target[r]:
            return None
    return x


def reduce_mod_lattice(vec: list[int], lattice_rows: list[list[int]]) -> list[int]:
    """Deterministic representative of vec modulo the row lattice.

    The lattice rows are HNF-normalized; the vector is reduced at each pivot
    into the half-open interval [0, pivot).
    """
    if not lattice_rows:
        return list(vec)
    h, _ = hnf_row(lattice_rows)
    v = list(vec)
    for row in h:
        piv = next((j for j, x in enumerate(row) if x), None)
        if piv is None:
            continue
        q = v[piv] // row[piv]
        if q:
            for j in range(len(v)):
                v[j] -= q * row[j]
    return v


def smith_normal_form(matrix: list[list[int]]) -> list[int]:
    """Elementary divisors d_1 | d_2 | ... (nonzero ones) of the matrix."""
    m = [row[:] for row in matrix]
    rows, cols = len(m), len(m[0]) if m else 0
    divisors: list[int] = []
    top = 0
    while top < rows and top < cols:
        # find a nonzero pivot in the submatrix
        pr = pc = -1
        best = None
        for i in range(top, rows):
            for j in range(top, cols):
                v = abs(m[i][j])
                if v and (best is None or v < best):
                    best, pr, pc = v, i, j
        if best is None:
            break
        m[top], m[pr] = m[pr], m[top]
        for row in m:
            row[top], row[pc] = row[pc], row[top]
        # clear row and column at top; repeat until stable
        while True:
            dirty = False
            for i in range(top + 1, rows):
                if m[i][top]:
                    q = m[i][top] // m[top][top]
                    for j in range(top, cols):
                        m[i][j] -= q * m[top][j]
                    if m[i][top]:
                        m[top], m[i] = m[i], m[top]
                        dirty = True
            for j in range(top + 1, cols):
                if m[top][j]:
                    q = m[top][j] // m[top][top]
                    for i in range(top, rows):
                        m[i][j] -= q * m[i][top]
                    if m[top][j]:
                        for i in range(top, rows):
                            m[i][top], m[i][j] = m[i][j], m[i][top]
                        dirty = True
            if not dirty:
                break
        divisors.append(abs(m[top][top]))
        top += 1
    # enforce the divisibility chain
    for i in range(len(divisors)):
        for j in range(i + 1, len(divisors)):
            a, b = divisors[i], divisors[j]
            g = xgcd(a, b)[0]
            divisors[i], divisors[j] = g, a * b // g if g else 0
    return [d for d in divisors if d]


def lll_reduce(basis: list[list[int]]) -> list[list[int]]:
    """All-integer LLL reduction of the lattice spanned by the rows of basis.

    Incremental lambda/d bookkeeping (no fractions, no floats), Lovasz
    parameter 3/4.  Rows must be linearly independent.
    """
    b = [row[:] for row in basis]
    n = len(b)
    if n <= 1:
        return b

    def dot(u: list[int], v: list[int]) -> int:
        return sum(x * y for x, y in zip(u, v))

    lam = [[0] * (n + 1) for _ in range(n + 1)]  # 1-indexed
    d = [0] * (n + 1)
    d[0] = 1
    d[1] = dot(b[0], b[0])
    if d[1] == 0:
        raise ValueError("lll_reduce: zero row in basis")

    def redi(k: int, l: int) -> None:
        if 2 * abs(lam[k][l]) > d[l]:
            q = (2 * lam[k][l] + d[l]) // (2 * d[l])
            if q:
                bk, bl = b[k - 1], b[l - 1]
                for c in range(len(bk)):
                    bk[c] -= q * bl[c]
                lam[k][l] -= q * d[l]
                for i in range(1, l):
                    lam[k][i] -= q * lam[l][i]

    def swapi(k: int, k_max: int) -> None:
        b[k - 1], b[k - 2] = b[k - 2], b[k - 1]
        for j in range(1, k - 1):
            lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
        lam_ = lam[k][k - 1]
        bb = (d[k - 2] * d[k] + lam_ * lam_) // d[k - 1]
        for i in range(k + 1, k_max + 1):
            t = lam[i][k]
            lam[i][k] = (d[k] * lam[i][k - 1] - lam_ * t) // d[k - 1]
            lam[i][k - 1] = (bb * t + lam_ * lam[i][k]) // d[k]
        d[k - 1] = bb

    k = 2
    k_max = 1
    while k <= n:
        if k > k_max:
            k_max = k
            for j in range(1, k + 1):
                u = dot(b[k - 1], b[j - 1])
                for i in range(1, j):
                    u = (d[i] * u - lam[k][i] * lam[j][i]) // d[i - 1]
                if j < k:
                    lam[k][j] = u
                else:
                    if u == 0:
                        raise ValueError("lll_reduce: dependent rows")
                    d[k] = u
        while True:
            redi(k, k - 1)
            if 4 * d[k] * d[k - 2] < 3 * d[k - 1] * d[k - 1] - 4 * lam[k][k - 1] * lam[k][k - 1]:
                swapi(k, k_max)
                k = max(2, k - 1)
            else:
                for l in range(k - 2, 0, -1):
                    redi(k, l)
                k += 1
                break
    return b
