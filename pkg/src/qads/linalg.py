"""Exact linear algebra over any field whose elements support +,-,*,/ and bool().

Works uniformly for Fraction, CycloNumber and rational-function scalars.
A modular fast path (homomorphism into a word-size prime field) is used to
discover ranks and pivot structure; every returned datum is certified by
exact arithmetic, so the modular layer can never corrupt a result.
"""

from __future__ import annotations

from fractions import Fraction


def mat_from_rows(rows):
    return [list(r) for r in rows]


def mat_mul(A, B, zero):
    n, k, m = len(A), len(B), len(B[0]) if B else 0
    out = [[zero for _ in range(m)] for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        for t in range(k):
            a = Ai[t]
            if a:
                Bt = B[t]
                row = out[i]
                for j in range(m):
                    if Bt[j]:
                        row[j] = row[j] + a * Bt[j]
    return out


def mat_vec(A, v, zero):
    out = []
    for row in A:
        acc = zero
        for a, x in zip(row, v):
            if a and x:
                acc = acc + a * x
        out.append(acc)
    return out


def row_reduce(mat):
    """In-place fraction-full Gaussian elimination.

    Returns (pivot_columns, pivot_rows); `mat` ends in (non-reduced) row
    echelon form with unit pivots.
    """
    if not mat:
        return [], []
    rows, cols = len(mat), len(mat[0])
    piv_cols, piv_rows = [], []
    one = None
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if mat[i][c]), None)
        if p is None:
            continue
        mat[r], mat[p] = mat[p], mat[r]
        if one is None:
            one = mat[r][c] / mat[r][c]
        pinv = one / mat[r][c]
        mat[r] = [x * pinv if x else x for x in mat[r]]
        for i in range(r + 1, rows):
            f = mat[i][c]
            if f:
                mat[i] = [a - f * b if b else a for a, b in zip(mat[i], mat[r])]
        piv_cols.append(c)
        piv_rows.append(r)
        r += 1
        if r == rows:
            break
    return piv_cols, piv_rows


def rank(matrix):
    work = [list(r) for r in matrix]
    piv, _ = row_reduce(work)
    return len(piv)


def kernel_basis(matrix, ncols, zero, one):
    """Exact basis of the right kernel of `matrix` (list of rows)."""
    work = [list(r) for r in matrix]
    piv, _ = row_reduce(work)
    piv_set = set(piv)
    free = [c for c in range(ncols) if c not in piv_set]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        # back substitution against echelon rows
        for r in range(len(piv) - 1, -1, -1):
            c = piv[r]
            acc = zero
            row = work[r]
            for j in range(c + 1, ncols):
                if row[j] and v[j]:
                    acc = acc + row[j] * v[j]
            v[c] = zero - acc
        basis.append(v)
    return basis


def solve(matrix, rhs, zero):
    """One solution of A x = b, or None if inconsistent."""
    n = len(matrix)
    cols = len(matrix[0]) if matrix else 0
    aug = [list(matrix[i]) + [rhs[i]] for i in range(n)]
    piv, _ = row_reduce(aug)
    if cols in piv:
        return None
    x = [zero] * cols
    for r in range(len(piv) - 1, -1, -1):
        c = piv[r]
        acc = aug[r][cols]
        for j in range(c + 1, cols):
            if aug[r][j] and x[j]:
                acc = acc - aug[r][j] * x[j]
        x[c] = acc
    return x


def det(matrix, zero, one):
    """Determinant by division elimination (field scalars)."""
    n = len(matrix)
    if n == 0:
        return one
    A = [list(r) for r in matrix]
    sign = 1
    acc = one
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c]), None)
        if p is None:
            return zero
        if p != c:
            A[c], A[p] = A[p], A[c]
            sign = -sign
        acc = acc * A[c][c]
        inv_p = A[c][c]
        for i in range(c + 1, n):
            f = A[i][c]
            if f:
                f = f / inv_p
                A[i] = [a - f * b for a, b in zip(A[i], A[c])]
    return acc if sign > 0 else zero - acc


# ---------------------------------------------------------------------------
# modular fast path

def _is_probable_prime(n):
    # deterministic Miller-Rabin for n < 3.3e24
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _factor_small(n):
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


_HOM_CACHE = {}


class CycloModHom:
    """Ring homomorphism Q(zeta_N) -> F_p sending zeta to an order-N element."""

    def __init__(self, order):
        self.order = order
        p = ((1 << 59) // order + 1) * order + 1
        while not _is_probable_prime(p):
            p += order
        self.p = p
        root = None
        qs = _factor_small(order)
        for g in range(2, 1000):
            w = pow(g, (p - 1) // order, p)
            if w != 1 and all(pow(w, order // q, p) != 1 for q in qs):
                root = w
                break
        assert root is not None
        self.zeta_pows = [1] * order
        for k in range(1, order):
            self.zeta_pows[k] = self.zeta_pows[k - 1] * root % p

    def map(self, x):
        """Image of a CycloNumber (or Fraction) in F_p."""
        p = self.p
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, p) % p
        acc = 0
        for k, c in enumerate(x.coeffs):
            if c:
                acc += c.numerator * pow(c.denominator, -1, p) % p * self.zeta_pows[k]
        return acc % p


def hom_for_order(order):
    if order not in _HOM_CACHE:
        _HOM_CACHE[order] = CycloModHom(order)
    return _HOM_CACHE[order]


def mod_rank_and_pivots(matrix, hom):
    """(rank, pivot columns) of the image of `matrix` mod p.

    The modular rank is a certified lower bound for the exact rank.
    """
    p = hom.p
    M = [[hom.map(e) if e else 0 for e in row] for row in matrix]
    rows = len(M)
    cols = len(M[0]) if M else 0
    piv_cols = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if M[i][c]), None)
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        inv = pow(M[r][c], -1, p)
        M[r] = [x * inv % p for x in M[r]]
        for i in range(r + 1, rows):
            f = M[i][c]
            if f:
                M[i] = [(a - f * b) % p for a, b in zip(M[i], M[r])]
        piv_cols.append(c)
        r += 1
        if r == rows:
            break
    return r, piv_cols


def certified_kernel(matrix, ncols, zero, one, hom=None):
    """Exact kernel basis with rank certificate.

    When a homomorphism is supplied, pivot structure is discovered mod p and
    the kernel vectors are then solved for and verified exactly; the count
    n - rank_p together with the verified vectors pins the exact rank.
    Falls back to plain exact elimination if the modular guess fails.
    """
    if hom is None or not matrix:
        basis = kernel_basis(matrix, ncols, zero, one)
        return basis, ncols - len(basis)
    r_p, piv = mod_rank_and_pivots(matrix, hom)
    piv_set = set(piv)
    free = [c for c in range(ncols) if c not in piv_set]
    # exact elimination restricted to pivot columns, augmented by free ones
    cols = piv + free
    sub = [[row[c] for c in cols] for row in matrix]
    work = [list(r) for r in sub]
    piv2, _ = row_reduce(work)
    if piv2 != list(range(r_p)):
        # modular pivots not independent exactly (possible only via p-collision)
        basis = kernel_basis(matrix, ncols, zero, one)
        return basis, ncols - len(basis)
    basis = []
    ok = True
    for idx, f in enumerate(free):
        v_sub = [zero] * len(cols)
        v_sub[r_p + idx] = one
        for r in range(r_p - 1, -1, -1):
            acc = zero
            row = work[r]
            for j in range(r + 1, len(cols)):
                if row[j] and v_sub[j]:
                    acc = acc + row[j] * v_sub[j]
            v_sub[r] = zero - acc
        v = [zero] * ncols
        for j, c in enumerate(cols):
            v[c] = v_sub[j]
        # exact verification
        for row in matrix:
            acc = zero
            for a, x in zip(row, v):
                if a and x:
                    acc = acc + a * x
            if acc:
                ok = False
                break
        if not ok:
            break
        basis.append(v)
    if not ok:
        basis = kernel_basis(matrix, ncols, zero, one)
        return basis, ncols - len(basis)
    return basis, r_p
