"""Compiled inner loops.

All kernels take raw ``int64`` tables (``A`` addition, ``M`` multiplication,
``NEG`` additive inverse, ``z`` the zero index) and scan in a fixed
lexicographic order so that the first witness found is deterministic.
"""

from __future__ import annotations

import numpy as np
from numba import njit

# axiom codes returned by axiom_scan
AXIOM_CODES = {1: "add-assoc", 2: "mul-assoc", 3: "left-distrib", 4: "right-distrib"}


@njit(cache=True)
def axiom_scan(A, M, out):
    n = A.shape[0]
    for a in range(n):
        for b in range(n):
            ab = A[a, b]
            for c in range(n):
                if A[ab, c] != A[a, A[b, c]]:
                    out[0] = 1; out[1] = a; out[2] = b; out[3] = c
                    return
    for a in range(n):
        for b in range(n):
            ab = M[a, b]
            for c in range(n):
                if M[ab, c] != M[a, M[b, c]]:
                    out[0] = 2; out[1] = a; out[2] = b; out[3] = c
                    return
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if M[a, A[b, c]] != A[M[a, b], M[a, c]]:
                    out[0] = 3; out[1] = a; out[2] = b; out[3] = c
                    return
    for a in range(n):
        for b in range(n):
            ab = A[a, b]
            for c in range(n):
                if M[ab, c] != A[M[a, c], M[b, c]]:
                    out[0] = 4; out[1] = a; out[2] = b; out[3] = c
                    return
    out[0] = 0


@njit(cache=True)
def symmetric_scan(M, z, alpha, left, out):
    """First ``(a, b, c)`` with ``abc = 0`` but ``ac alpha(b) != 0``
    (``left``: ``alpha(b) ac != 0``).  Returns 1 if found."""
    n = M.shape[0]
    for a in range(n):
        for b in range(n):
            ab = M[a, b]
            for c in range(n):
                if M[ab, c] != z:
                    continue
                ac = M[a, c]
                if left:
                    v = M[alpha[b], ac]
                else:
                    v = M[ac, alpha[b]]
                if v != z:
                    out[0] = a; out[1] = b; out[2] = c
                    return 1
    return 0


@njit(cache=True)
def semicommutative_scan(M, z, alpha, out):
    """First ``(a, b, r)`` with ``ab = 0`` but ``a r alpha(b) != 0``."""
    n = M.shape[0]
    for a in range(n):
        for b in range(n):
            if M[a, b] != z:
                continue
            ab_ = alpha[b]
            for r in range(n):
                if M[M[a, r], ab_] != z:
                    out[0] = a; out[1] = b; out[2] = r
                    return 1
    return 0


@njit(cache=True)
def pair_search(A, M, NEG, P, z, D, rptr, ridx, shift_f, out):
    """Search pairs ``f, g`` of degree <= D with ``f g = 0`` in R[x; alpha]
    (row ``i`` of ``P`` is alpha^i) and some ``a_i b_j != 0``.

    ``b_0 != 0`` always (g = g' x reduces to g'); ``a_0 != 0`` when
    ``shift_f`` (valid when alpha is injective).  On success writes
    ``a_0..a_D, b_0..b_D, i, j`` into ``out`` and returns 1.
    """
    n = M.shape[0]
    a = np.full(D + 1, z, dtype=np.int64)
    b = np.full(D + 1, z, dtype=np.int64)
    nexta = np.zeros(D + 1, dtype=np.int64)
    pos = np.zeros(D + 1, dtype=np.int64)
    end = np.zeros(D + 1, dtype=np.int64)
    k = 0
    while k >= 0:
        if pos[k] < end[k]:
            bk = ridx[a[0], pos[k]]
            pos[k] += 1
            if k == 0 and bk == z:
                continue
            b[k] = bk
            if k < D:
                k += 1
                nexta[k] = 0
                pos[k] = 0
                end[k] = 0
                continue
            ok = True
            for kk in range(D + 1, 2 * D + 1):
                s = z
                for i in range(kk - D, D + 1):
                    s = A[s, M[a[i], P[i, b[kk - i]]]]
                if s != z:
                    ok = False
                    break
            if not ok:
                continue
            for i in range(D + 1):
                for j in range(D + 1):
                    if M[a[i], b[j]] != z:
                        for t in range(D + 1):
                            out[t] = a[t]
                            out[D + 1 + t] = b[t]
                        out[2 * D + 2] = i
                        out[2 * D + 3] = j
                        return 1
            continue
        if nexta[k] >= n:
            k -= 1
            continue
        ak = nexta[k]
        nexta[k] += 1
        if k == 0 and shift_f and ak == z:
            continue
        a[k] = ak
        if k == 0:
            t = z
        else:
            s = M[ak, P[k, b[0]]]
            for i in range(1, k):
                s = A[s, M[a[i], P[i, b[k - i]]]]
            t = NEG[s]
        pos[k] = rptr[a[0], t]
        end[k] = rptr[a[0], t + 1]
    return 0


@njit(cache=True)
def left_killer(A, M, NEG, P, z, b, D, Dp, lptr, lidx, shift_f, out):
    """Find nonzero ``f`` of degree <= Dp with ``f g = 0`` in R[x; alpha],
    where ``g`` has coefficients ``b[0..D]``.  Writes ``f`` into ``out``."""
    a = np.full(Dp + 1, z, dtype=np.int64)
    row = np.zeros(Dp + 1, dtype=np.int64)
    pos = np.zeros(Dp + 1, dtype=np.int64)
    end = np.zeros(Dp + 1, dtype=np.int64)
    row[0] = b[0]
    pos[0] = lptr[row[0], z]
    end[0] = lptr[row[0], z + 1]
    k = 0
    while k >= 0:
        if pos[k] >= end[k]:
            k -= 1
            continue
        ak = lidx[row[k], pos[k]]
        pos[k] += 1
        if k == 0 and shift_f and ak == z:
            continue
        a[k] = ak
        if k < Dp:
            k += 1
            s = z
            for i in range(0, k):
                j = k - i
                if j <= D:
                    s = A[s, M[a[i], P[i, b[j]]]]
            row[k] = P[k, b[0]]
            t = NEG[s]
            pos[k] = lptr[row[k], t]
            end[k] = lptr[row[k], t + 1]
            continue
        ok = True
        for kk in range(Dp + 1, Dp + D + 1):
            s = z
            for i in range(kk - D, Dp + 1):
                s = A[s, M[a[i], P[i, b[kk - i]]]]
            if s != z:
                ok = False
                break
        if not ok:
            continue
        nonzero = False
        for i in range(Dp + 1):
            if a[i] != z:
                nonzero = True
        if not nonzero:
            continue
        for i in range(Dp + 1):
            out[i] = a[i]
        return 1
    return 0


@njit(cache=True)
def _next_tuple(b, n, start):
    # lexicographic increment with b[0] most significant; returns False on wrap
    D = b.shape[0] - 1
    for i in range(D, -1, -1):
        if b[i] + 1 < n:
            b[i] += 1
            return True
        b[i] = 0
    return False


@njit(cache=True)
def mccoy_scan(A, M, NEG, P, z, D, Dp, lptr, lidx, out_g, out_f):
    """Left McCoy at bounded degree over R[x]: first ``g`` (``b_0 != 0``)
    with no nonzero constant ``c`` killing it from the left but some nonzero
    ``f`` with ``f g = 0``.  Returns 1 on violation."""
    n = M.shape[0]
    b = np.zeros(D + 1, dtype=np.int64)
    f = np.zeros(Dp + 1, dtype=np.int64)
    while True:
        if b[0] != z:
            killed = False
            for p in range(lptr[b[0], z], lptr[b[0], z + 1]):
                c = lidx[b[0], p]
                if c == z:
                    continue
                good = True
                for j in range(1, D + 1):
                    if M[c, b[j]] != z:
                        good = False
                        break
                if good:
                    killed = True
                    break
            if not killed:
                if left_killer(A, M, NEG, P, z, b, D, Dp, lptr, lidx, True, f):
                    for j in range(D + 1):
                        out_g[j] = b[j]
                    for i in range(Dp + 1):
                        out_f[i] = f[i]
                    return 1
        if not _next_tuple(b, n, 0):
            return 0


@njit(cache=True)
def zero_divisor_scan(A, M, NEG, P, z, D, Dp, lptr, lidx, shift_f, out_g, out_f):
    """Every nonzero ``g`` with a nonzero left annihilating ``f``.  Returns
    the count; rows of ``out_g``/``out_f`` hold the pairs."""
    n = M.shape[0]
    b = np.zeros(D + 1, dtype=np.int64)
    f = np.zeros(Dp + 1, dtype=np.int64)
    count = 0
    while True:
        nonzero = False
        for j in range(D + 1):
            if b[j] != z:
                nonzero = True
        if nonzero and left_killer(A, M, NEG, P, z, b, D, Dp, lptr, lidx, shift_f, f):
            for j in range(D + 1):
                out_g[count, j] = b[j]
            for i in range(Dp + 1):
                out_f[count, i] = f[i]
            count += 1
        if not _next_tuple(b, n, 0):
            return count


@njit(cache=True)
def gaussian_scan(A, M, z, D, principal, join, prod, out):
    """Commutative rings: first ``(f, g)`` (constant terms nonzero, ``f <= g``)
    with ``c(fg) != c(f) c(g)``.  Writes ``f, g`` into ``out``."""
    n = M.shape[0]
    f = np.zeros(D + 1, dtype=np.int64)
    g = np.zeros(D + 1, dtype=np.int64)
    while True:
        if f[0] != z:
            cf = principal[f[0]]
            for i in range(1, D + 1):
                cf = join[cf, principal[f[i]]]
            for t in range(D + 1):
                g[t] = f[t]
            while True:
                if g[0] != z:
                    cg = principal[g[0]]
                    for i in range(1, D + 1):
                        cg = join[cg, principal[g[i]]]
                    cfg = principal[z]
                    for k in range(2 * D + 1):
                        s = z
                        lo = k - D if k > D else 0
                        hi = k if k < D else D
                        for i in range(lo, hi + 1):
                            s = A[s, M[f[i], g[k - i]]]
                        cfg = join[cfg, principal[s]]
                    if cfg != prod[cf, cg]:
                        for t in range(D + 1):
                            out[t] = f[t]
                            out[D + 1 + t] = g[t]
                        return 1
                if not _next_tuple(g, n, 0):
                    break
        if not _next_tuple(f, n, 0):
            return 0


def division_index(M: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """For each row ``a`` of ``M``: ``idx[a, ptr[a, t]:ptr[a, t+1]]`` lists
    the ``b`` with ``M[a, b] = t`` in ascending order."""
    n = M.shape[0]
    idx = np.argsort(M, axis=1, kind="stable").astype(np.int64)
    sorted_vals = np.take_along_axis(M, idx, axis=1)
    ptr = np.empty((n, n + 1), dtype=np.int64)
    targets = np.arange(n + 1)
    for a in range(n):
        ptr[a] = np.searchsorted(sorted_vals[a], targets, side="left")
    return np.ascontiguousarray(ptr), np.ascontiguousarray(idx)
