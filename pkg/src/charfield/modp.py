"""Deterministic linear algebra and polynomial root finding over GF(p).

Matrices are lists of lists of ints reduced mod p (numpy is used by the
caller for bulk products; the pivoting here is pure Python so the choice
of pivots is fixed).  Polynomials are coefficient lists, lowest degree
first, normalized monic where stated.
"""

from __future__ import annotations


def mat_mul(A, B, p):
    n, k, m = len(A), len(B), len(B[0])
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        row = out[i]
        for t in range(k):
            a = Ai[t]
            if a:
                Bt = B[t]
                for j in range(m):
                    row[j] = (row[j] + a * Bt[j]) % p
    return out


def mat_inv(A, p):
    n = len(A)
    M = [row[:] + [int(i == j) for j in range(n)] for i, row in enumerate(A)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] % p), None)
        if piv is None:
            raise ValueError("matrix is singular mod p")
        M[col], M[piv] = M[piv], M[col]
        inv = pow(M[col][col], -1, p)
        M[col] = [x * inv % p for x in M[col]]
        for r in range(n):
            if r != col and M[r][col]:
                f = M[r][col]
                M[r] = [(x - f * y) % p for x, y in zip(M[r], M[col])]
    return [row[n:] for row in M]


def rref(A, p):
    """Reduced row echelon form; returns (matrix, pivot column list)."""
    M = [row[:] for row in A]
    rows = len(M)
    cols = len(M[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i][c] % p), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = pow(M[r][c], -1, p)
        M[r] = [x * inv % p for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [(x - f * y) % p for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return M, pivots


def nullspace(A, p):
    """Basis of the right nullspace, one vector per free column, in order."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    R, pivots = rref(A, p)
    piv_set = set(pivots)
    basis = []
    for free in range(cols):
        if free in piv_set:
            continue
        v = [0] * cols
        v[free] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-R[r][free]) % p
        basis.append(v)
    return basis


def pivot_rows(B, p):
    """Indices of linearly independent rows spanning the row space of B."""
    cols = len(B[0])
    work = [row[:] for row in B]
    chosen = []
    used = [False] * len(B)
    for c in range(cols):
        piv = next((r for r in range(len(B)) if not used[r] and work[r][c] % p), None)
        if piv is None:
            continue
        used[piv] = True
        chosen.append(piv)
        inv = pow(work[piv][c], -1, p)
        work[piv] = [x * inv % p for x in work[piv]]
        for r in range(len(B)):
            if not used[r] and work[r][c]:
                f = work[r][c]
                work[r] = [(x - f * y) % p for x, y in zip(work[r], work[piv])]
        if len(chosen) == cols:
            break
    return chosen


def charpoly(A, p):
    """det(xI - A) mod p, coefficients lowest degree first, monic.

    Similarity reduction to upper Hessenberg form, then the standard
    leading-minor recurrence.
    """
    n = len(A)
    H = [[x % p for x in row] for row in A]
    for col in range(n - 2):
        piv = next((r for r in range(col + 1, n) if H[r][col]), None)
        if piv is None:
            continue
        if piv != col + 1:
            H[col + 1], H[piv] = H[piv], H[col + 1]
            for i in range(n):
                H[i][col + 1], H[i][piv] = H[i][piv], H[i][col + 1]
        inv = pow(H[col + 1][col], -1, p)
        for r in range(col + 2, n):
            if H[r][col]:
                f = H[r][col] * inv % p
                H[r] = [(x - f * y) % p for x, y in zip(H[r], H[col + 1])]
                for i in range(n):
                    H[i][col + 1] = (H[i][col + 1] + f * H[i][r]) % p
    polys = [[1]]
    for k in range(1, n + 1):
        prev = polys[k - 1]
        poly = [0] + prev  # x * p_{k-1}
        d = H[k - 1][k - 1]
        poly = [(a - d * b) % p for a, b in zip(poly, prev + [0])]
        prod = 1
        for i in range(k - 1, 0, -1):
            prod = prod * H[i][i - 1] % p
            coef = H[i - 1][k - 1] * prod % p
            if coef:
                pi = polys[i - 1]
                poly = [(a - coef * (pi[j] if j < len(pi) else 0)) % p
                        for j, a in enumerate(poly)]
        polys.append(poly)
    return polys[n]


# -- polynomials mod p -------------------------------------------------------


def poly_trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_mul(f, g, p):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return poly_trim(out)


def poly_mod(f, g, p):
    f = [x % p for x in f]
    dg = len(g) - 1
    inv = pow(g[-1], -1, p)
    for i in range(len(f) - 1, dg - 1, -1):
        c = f[i] * inv % p
        if c:
            for j in range(dg + 1):
                f[i - dg + j] = (f[i - dg + j] - c * g[j]) % p
    return poly_trim(f[:dg])


def poly_gcd(f, g, p):
    f, g = [x % p for x in f], [x % p for x in g]
    poly_trim(f)
    poly_trim(g)
    while g:
        f, g = g, poly_mod(f, g, p)
    if f:
        inv = pow(f[-1], -1, p)
        f = [x * inv % p for x in f]
    return f


def poly_powmod(base, e, mod, p):
    out = [1]
    base = poly_mod(base, mod, p)
    while e:
        if e & 1:
            out = poly_mod(poly_mul(out, base, p), mod, p)
        base = poly_mod(poly_mul(base, base, p), mod, p)
        e >>= 1
    return out


def poly_deriv(f, p):
    return poly_trim([i * c % p for i, c in enumerate(f)][1:])


def distinct_roots(f, p):
    """All roots of f in GF(p), each once, ascending (deterministic)."""
    f = poly_trim([x % p for x in f])
    if len(f) <= 1:
        return []
    inv = pow(f[-1], -1, p)
    f = [x * inv % p for x in f]
    d = poly_deriv(f, p)
    if d:
        sq = poly_gcd(f, d, p)
        if len(sq) > 1:
            f = _poly_div_exact(f, sq, p)
    # keep only the part splitting into distinct linear factors (p odd)
    xp = poly_powmod([0, 1], p, f, p)
    xp_minus_x = poly_trim([(a - b) % p for a, b in _pad(xp, [0, 1])])
    g = poly_gcd(f, xp_minus_x, p)
    roots: list[int] = []
    stack = [g]
    shift = 0
    while stack:
        h = stack.pop()
        if len(h) <= 1:
            continue
        if len(h) == 2:
            roots.append((-h[0]) * pow(h[1], -1, p) % p)
            continue
        split = None
        while split is None:
            if shift > 10000:  # pragma: no cover - expected after a few tries
                raise ArithmeticError("root splitting did not terminate")
            s = poly_powmod([shift, 1], (p - 1) // 2, h, p)
            s = poly_trim([(a - b) % p for a, b in _pad(s, [1])])
            cand = poly_gcd(h, s, p)
            shift += 1
            if 1 < len(cand) < len(h):
                split = cand
        stack.append(split)
        stack.append(_poly_div_exact(h, split, p))
    return sorted(roots)


def _pad(f, g):
    n = max(len(f), len(g))
    return zip(f + [0] * (n - len(f)), g + [0] * (n - len(g)))


def _poly_div_exact(f, g, p):
    f = [x % p for x in f]
    dg = len(g) - 1
    inv = pow(g[-1], -1, p)
    out = [0] * (len(f) - dg)
    for i in range(len(f) - 1, dg - 1, -1):
        c = f[i] * inv % p
        out[i - dg] = c
        if c:
            for j in range(dg + 1):
                f[i - dg + j] = (f[i - dg + j] - c * g[j]) % p
    if poly_trim(f):
        raise ArithmeticError("division was not exact")
    return poly_trim(out)
