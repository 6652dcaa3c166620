"""Exact integer and rational linear algebra on lists of rows.

Matrices are lists of rows; entries are ``int`` or ``fractions.Fraction``.
Nothing here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Row = Sequence[int]

# Mersenne prime used for fast one-sided rank certificates.
PRIME = (1 << 61) - 1


def primitive(v: Iterable[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries."""
    v = tuple(int(x) for x in v)
    g = 0
    for x in v:
        g = gcd(g, x)
    if g <= 1:
        return v
    return tuple(x // g for x in v)


def primitive_rational(v: Iterable[Fraction | int]) -> tuple[int, ...]:
    """Scale a rational vector to the primitive integer vector on its ray."""
    v = [Fraction(x) for x in v]
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    return primitive(int(x * den) for x in v)


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def vecmat(v: Sequence, m: Sequence[Sequence]) -> tuple:
    """Row vector times matrix."""
    n = len(m[0]) if m else 0
    out = [0] * n
    for x, row in zip(v, m):
        if x:
            for j, y in enumerate(row):
                if y:
                    out[j] += x * y
    return tuple(out)


def transpose(m: Sequence[Sequence]) -> list[list]:
    return [list(c) for c in zip(*m)]


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def rank(rows: Sequence[Sequence]) -> int:
    """Exact rank via fraction-free elimination."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    if any(isinstance(x, Fraction) for r in m for x in r):
        m = [[Fraction(x) for x in r] for r in m]
        return _rank_field(m)
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r]
        for i in range(r + 1, len(m)):
            f = m[i][c]
            if f:
                row = m[i]
                pc = p[c]
                new = [pc * x - f * y for x, y in zip(row, p)]
                g = 0
                for x in new:
                    g = gcd(g, x)
                    if g == 1:
                        break
                if g > 1:
                    new = [x // g for x in new]
                m[i] = new
        r += 1
        if r == len(m):
            break
    return r


def _rank_field(m: list[list[Fraction]]) -> int:
    r = 0
    ncols = len(m[0])
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        for i in range(r + 1, len(m)):
            f = m[i][c]
            if f:
                f *= inv
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def rank_mod(rows: Sequence[Sequence[int]], p: int = PRIME) -> int:
    """Rank over GF(p). A lower bound for the rational rank."""
    m = [[x % p for x in r] for r in rows]
    m = [r for r in m if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        pr = m[r]
        for i in range(r + 1, len(m)):
            f = m[i][c]
            if f:
                f = f * inv % p
                m[i] = [(x - f * y) % p for x, y in zip(m[i], pr)]
        r += 1
        if r == len(m):
            break
    return r


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q and pivot columns."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[tuple[int, ...]]:
    """Basis of the right kernel {x : M x = 0}, as primitive integer vectors."""
    if ncols is None:
        ncols = len(rows[0])
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, pc in zip(red, pivots):
            v[pc] = -r[f]
        basis.append(primitive_rational(v))
    return basis


def det(m: Sequence[Sequence[int]]) -> int:
    """Bareiss determinant of an integer square matrix."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            sw = next((i for i in range(k + 1, n) if a[i][k]), None)
            if sw is None:
                return 0
            a[k], a[sw] = a[sw], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def inverse(m: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ZeroDivisionError("singular matrix")
    return [r[n:] for r in red]


def solve_left(b: Sequence, m: Sequence[Sequence]) -> tuple[Fraction, ...] | None:
    """Find x with x · M = b (row combination), or None."""
    mt = transpose(m)
    aug = [list(r) + [bi] for r, bi in zip(mt, b)]
    red, pivots = rref(aug)
    nvars = len(m)
    if nvars in pivots:
        return None
    x = [Fraction(0)] * nvars
    for r, pc in zip(red, pivots):
        x[pc] = r[nvars]
    return tuple(x)


def hermite_basis(rows: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Row-style Hermite normal form: a basis of the lattice spanned by rows."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return []
    ncols = len(m[0])
    out: list[list[int]] = []
    r = 0
    for c in range(ncols):
        # gcd-reduce column c among rows r..end
        while True:
            nz = [i for i in range(r, len(m)) if m[i][c]]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(m[i][c]))
            m[r], m[piv] = m[piv], m[r]
            done = True
            for i in range(r + 1, len(m)):
                if m[i][c]:
                    q = m[i][c] // m[r][c]
                    m[i] = [x - q * y for x, y in zip(m[i], m[r])]
                    if m[i][c]:
                        done = False
            if done:
                break
        if r < len(m) and m[r][c]:
            if m[r][c] < 0:
                m[r] = [-x for x in m[r]]
            for i in range(r):
                q = m[i][c] // m[r][c]
                if q:
                    m[i] = [x - q * y for x, y in zip(m[i], m[r])]
            r += 1
            if r == len(m):
                break
    out = [tuple(row) for row in m[:r]]
    return out


def smith_normal_form(m: Sequence[Sequence[int]]):
    """Return (U, D, V) with U·M·V = D, U and V unimodular, D diagonal.

    The diagonal entries are non-negative and each divides the next.
    """
    nr = len(m)
    nc = len(m[0]) if nr else 0
    a = [list(r) for r in m]
    u = identity(nr)
    v = identity(nc)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst -= q * row_src
        a[dst] = [x - q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):  # col_dst -= q * col_src
        for row in a:
            row[dst] -= q * row[src]
        for row in v:
            row[dst] -= q * row[src]

    t = 0
    while t < min(nr, nc):
        nz = [(abs(a[i][j]), i, j) for i in range(t, nr) for j in range(t, nc) if a[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            changed = False
            for i in range(t + 1, nr):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    add_row(i, t, q)
                    if a[i][t]:
                        swap_rows(t, i)
                        changed = True
            for j in range(t + 1, nc):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    add_col(j, t, q)
                    if a[t][j]:
                        swap_cols(t, j)
                        changed = True
            if changed:
                continue
            # divisibility: pivot must divide the remaining block
            bad = next(
                ((i, j) for i in range(t + 1, nr) for j in range(t + 1, nc) if a[i][j] % a[t][t]),
                None,
            )
            if bad is None:
                break
            i, _ = bad
            a[t] = [x + y for x, y in zip(a[t], a[i])]
            u[t] = [x + y for x, y in zip(u[t], u[i])]
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return u, a, v
