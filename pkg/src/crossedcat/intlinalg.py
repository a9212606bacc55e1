"""Integer linear algebra: Smith normal form with transforms, congruence solving."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

import numpy as np

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(a))]


def matvec(a: Matrix, v: list[int]) -> list[int]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


@dataclass
class SmithForm:
    """``U @ M @ V == S`` with U, V unimodular and S diagonal, d_1 | d_2 | ...

    ``Uinv`` and ``Vinv`` are kept alongside so callers never invert.
    """
    S: Matrix
    U: Matrix
    V: Matrix
    Uinv: Matrix
    Vinv: Matrix

    @property
    def diagonal(self) -> list[int]:
        return [self.S[i][i] for i in range(min(len(self.S), len(self.S[0]) if self.S else 0))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)


def smith_normal_form(m: Matrix, ncols: int | None = None) -> SmithForm:
    rows = len(m)
    cols = ncols if ncols is not None else (len(m[0]) if m else 0)
    a = [list(r) for r in m]
    U, Uinv = identity(rows), identity(rows)
    V, Vinv = identity(cols), identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]
        for r in Uinv:
            r[i], r[j] = r[j], r[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]
        Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    def add_row(src, dst, k):  # row_dst += k * row_src
        if k == 0:
            return
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        U[dst] = [x + k * y for x, y in zip(U[dst], U[src])]
        for r in Uinv:  # column_src -= k * column_dst
            r[src] -= k * r[dst]

    def add_col(src, dst, k):  # col_dst += k * col_src
        if k == 0:
            return
        for r in a:
            r[dst] += k * r[src]
        for r in V:
            r[dst] += k * r[src]
        Vinv[src] = [x - k * y for x, y in zip(Vinv[src], Vinv[dst])]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        U[i] = [-x for x in U[i]]
        for r in Uinv:
            r[i] = -r[i]

    t = 0
    while t < min(rows, cols):
        # pivot: smallest nonzero |entry| in the trailing block
        best = None
        for i in range(t, rows):
            row = a[i]
            for j in range(t, cols):
                if row[j] and (best is None or abs(row[j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
                    if abs(row[j]) == 1:
                        break
            if best is not None and abs(a[best[0]][best[1]]) == 1:
                break
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            done = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    add_row(t, i, -q)
                    if a[i][t]:
                        done = False
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    add_col(t, j, -q)
                    if a[t][j]:
                        done = False
            if done:
                # divisibility of the rest by the pivot
                bad = None
                for i in range(t + 1, rows):
                    for j in range(t + 1, cols):
                        if a[i][j] % a[t][t]:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                add_row(bad, t, 1)
                continue
            # move the smallest remainder into the pivot position
            best = None
            for i in range(t, rows):
                if a[i][t] and (best is None or abs(a[i][t]) < abs(a[best][t])):
                    best = i
            swap_rows(t, best)
            bestc = None
            for j in range(t, cols):
                if a[t][j] and (bestc is None or abs(a[t][j]) < abs(a[t][bestc])):
                    bestc = j
            swap_cols(t, bestc)
        if a[t][t] < 0:
            negate_row(t)
        t += 1
    return SmithForm(a, U, V, Uinv, Vinv)


def solve_mod(m: Matrix, rhs: list[int], modulus: int, ncols: int | None = None,
              snf: SmithForm | None = None) -> list[int] | None:
    """One solution x of ``m @ x == rhs (mod modulus)``, or None."""
    cols = ncols if ncols is not None else (len(m[0]) if m else 0)
    if snf is None:
        snf = smith_normal_form(m, cols)
    b = [x % modulus for x in matvec(snf.U, rhs)]
    diag = snf.diagonal
    y = [0] * cols
    for i, bi in enumerate(b):
        d = diag[i] if i < len(diag) else 0
        g = gcd(d, modulus)
        if bi % g:
            return None
        if d == 0:
            continue
        mod_g = modulus // g
        y[i] = (bi // g) * pow(d // g, -1, mod_g) % mod_g if mod_g > 1 else 0
    return [x % modulus for x in matvec(snf.V, y)] if cols else []


# -- elimination over Z/p^k ---------------------------------------------------


def factor_prime_powers(m: int) -> list[tuple[int, int]]:
    """``m = prod p^k`` as a list of (p, k)."""
    out, p = [], 2
    while m > 1:
        if p * p > m:
            out.append((m, 1))
            break
        if m % p == 0:
            k = 0
            while m % p == 0:
                m //= p
                k += 1
            out.append((p, k))
        p += 1
    return out


@dataclass
class LocalSmith:
    """``U @ M @ V == diag(p^v_i)`` over Z/p^k; U itself is not stored.

    ``valuations`` has one entry per column (k for a zero diagonal slot) and
    ``rhs`` holds ``U @ b`` for every right-hand side passed in.
    """
    p: int
    k: int
    valuations: list[int]
    V: np.ndarray
    Vinv: np.ndarray
    rhs: np.ndarray | None


def local_smith(m, p: int, k: int, rhs=None) -> LocalSmith:
    """Smith form of an integer matrix over the local ring Z/p^k.

    Pivots are chosen with minimal p-adic valuation, so every elimination
    step is exact.  ``rhs`` is an optional (rows x r) array carried through
    the row operations.
    """
    q = p**k
    a = np.array(m, dtype=np.int64).reshape(len(m), -1) % q
    rows, cols = a.shape
    b = None if rhs is None else np.array(rhs, dtype=np.int64).reshape(rows, -1) % q
    V = np.eye(cols, dtype=np.int64)
    Vinv = np.eye(cols, dtype=np.int64)
    powers = [p**j for j in range(k + 1)]
    vals = [k] * cols
    for t in range(min(rows, cols)):
        sub = a[t:, t:]
        if not sub.any():
            break
        val = np.zeros(sub.shape, dtype=np.int64)
        for j in range(1, k + 1):
            val += (sub % powers[j] == 0)
        flat = int(np.argmin(val))
        i0, j0 = divmod(flat, sub.shape[1])
        v = int(val[i0, j0])
        i0 += t
        j0 += t
        if i0 != t:
            a[[t, i0]] = a[[i0, t]]
            if b is not None:
                b[[t, i0]] = b[[i0, t]]
        if j0 != t:
            a[:, [t, j0]] = a[:, [j0, t]]
            V[:, [t, j0]] = V[:, [j0, t]]
            Vinv[[t, j0]] = Vinv[[j0, t]]
        unit = (int(a[t, t]) // powers[v]) % q
        uinv = pow(unit, -1, q) if q > 1 else 0
        a[t] = a[t] * uinv % q
        if b is not None:
            b[t] = b[t] * uinv % q
        pv = powers[v]
        # clear column t below the pivot
        f = a[t + 1:, t] // pv
        nz = np.nonzero(f)[0]
        if nz.size:
            idx = nz + t + 1
            a[idx] = (a[idx] - np.outer(f[nz], a[t])) % q
            if b is not None:
                b[idx] = (b[idx] - np.outer(f[nz], b[t])) % q
        # clear row t right of the pivot (column t is now zero below the pivot)
        g = a[t, t + 1:] // pv
        if g.any():
            V[:, t + 1:] = (V[:, t + 1:] - np.outer(V[:, t], g)) % q
            Vinv[t] = (Vinv[t] + g @ Vinv[t + 1:]) % q
            a[t, t + 1:] = 0
        vals[t] = v
    return LocalSmith(p, k, vals, V, Vinv, b)


def solve_mod_fast(m, rhs: list[int], modulus: int) -> list[int] | None:
    """Like :func:`solve_mod`, via local elimination and CRT; fine for large sparse systems."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if modulus == 1:
        return [0] * cols
    x_total = np.zeros(cols, dtype=object)
    for p, k in factor_prime_powers(modulus):
        q = p**k
        ls = local_smith(m, p, k, rhs=[[r] for r in rhs]) if rows else None
        y = np.zeros(cols, dtype=np.int64)
        if ls is not None:
            bt = ls.rhs[:, 0]
            for i in range(rows):
                v = ls.valuations[i] if i < cols else k
                bi = int(bt[i])
                if bi % (p**v):
                    return None
                if v < k and i < cols:
                    y[i] = bi // (p**v)
            x = (ls.V @ y) % q
        else:
            x = y
        # CRT lift: x_total = x (mod q), 0 (mod modulus/q)
        rest = modulus // q
        e = rest * pow(rest, -1, q) % modulus
        x_total = (x_total + x.astype(object) * e) % modulus
    return [int(v) for v in x_total]


def all_solutions_mod(m, rhs: list[int], modulus: int, ncols: int, limit: int = 10**6
                      ) -> list[tuple[int, ...]]:
    """Every x in (Z/modulus)^ncols with ``m @ x == rhs``, via local Smith forms and CRT.

    Raises ValueError when the solution set has more than ``limit`` elements.
    """
    if modulus == 1:
        return [(0,) * ncols]
    rows = len(m)
    local = []  # per prime power: (q, list of solution vectors mod q)
    total = 1
    for p, k in factor_prime_powers(modulus):
        q = p**k
        if rows:
            ls = local_smith(m, p, k, rhs=[[r] for r in rhs])
            bt = [int(v) for v in ls.rhs[:, 0]]
            vals = ls.valuations
            V = ls.V
        else:
            bt, vals, V = [], [k] * ncols, np.eye(ncols, dtype=np.int64)
        for i in range(rows):
            v = vals[i] if i < ncols else k
            if bt[i] % (p**v):
                return []
        ranges = []
        for i in range(ncols):
            v = vals[i]
            base = bt[i] // (p**v) if i < rows and v < k else 0
            step = p ** (k - v)
            ranges.append([(base + t * step) % q for t in range(p**v)])
        count = 1
        for r in ranges:
            count *= len(r)
        total *= count
        if total > limit:
            raise ValueError(f"congruence system has more than {limit} solutions")
        sols = []
        for y in itertools.product(*ranges):
            x = (V @ np.array(y, dtype=np.int64)) % q if ncols else np.zeros(0, dtype=np.int64)
            sols.append([int(v) for v in x])
        local.append((q, sols))
    out = []
    for combo in itertools.product(*(sols for _, sols in local)):
        x = [0] * ncols
        for (q, _), part in zip(local, combo):
            rest = modulus // q
            e = rest * pow(rest, -1, q) % modulus
            for i in range(ncols):
                x[i] = (x[i] + part[i] * e) % modulus
        out.append(tuple(x))
    return sorted(out)
