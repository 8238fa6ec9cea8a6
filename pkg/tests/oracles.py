"""Independent brute-force oracles.

Plain loops over Python lists; nothing here calls the search kernels,
the predicate engine, the canonical-form code or the enumerator.
"""

from __future__ import annotations

import itertools


def tables(R):
    return R.add.tolist(), R.mul.tolist(), R.zero, R.one, R.order


def _neg(A, z, n):
    return [next(y for y in range(n) if A[x][y] == z) for x in range(n)]


# element-quantified ---------------------------------------------------------

def reduced(R):
    A, M, z, _, n = tables(R)
    for a in range(n):
        if a == z:
            continue
        p = a
        for _ in range(n + 1):
            p = M[p][a]
            if p == z:
                return False
    return True


def symmetric(R, alpha=None, left=False):
    A, M, z, _, n = tables(R)
    al = list(range(n)) if alpha is None else list(alpha)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if M[M[a][b]][c] == z:
                    v = M[al[b]][M[a][c]] if left else M[M[a][c]][al[b]]
                    if v != z:
                        return False
    return True


def reversible(R, alpha=None, left=None):
    A, M, z, _, n = tables(R)
    al = list(range(n)) if alpha is None else list(alpha)
    for a in range(n):
        for b in range(n):
            if M[a][b] != z:
                continue
            if left is None and M[b][a] != z:
                return False
            if left is False and M[b][al[a]] != z:
                return False
            if left is True and M[al[b]][a] != z:
                return False
    return True


def semicommutative(R, alpha=None):
    A, M, z, _, n = tables(R)
    al = list(range(n)) if alpha is None else list(alpha)
    return all(M[M[a][r]][al[b]] == z
               for a in range(n) for b in range(n) if M[a][b] == z for r in range(n))


def idempotents(R):
    A, M, z, _, n = tables(R)
    return [e for e in range(n) if M[e][e] == e]


def abelian(R):
    A, M, z, _, n = tables(R)
    return all(M[e][r] == M[r][e] for e in idempotents(R) for r in range(n))


def commutative(R):
    A, M, z, _, n = tables(R)
    return all(M[a][b] == M[b][a] for a in range(n) for b in range(n))


def boolean(R):
    A, M, z, _, n = tables(R)
    return all(M[a][a] == a for a in range(n))


def regular(R):
    A, M, z, _, n = tables(R)
    return all(any(M[M[a][b]][a] == a for b in range(n)) for a in range(n))


def _right_ideals_eR(R):
    A, M, z, _, n = tables(R)
    return {frozenset(M[e][r] for r in range(n)) for e in idempotents(R)}


def _ann_r(R, S):
    A, M, z, _, n = tables(R)
    return frozenset(x for x in range(n) if all(M[s][x] == z for s in S))


def right_pp(R):
    eR = _right_ideals_eR(R)
    return all(_ann_r(R, [a]) in eR for a in range(R.order))


def baer(R):
    """Every nonempty subset, enumerated explicitly (n <= 8 or so)."""
    eR = _right_ideals_eR(R)
    n = R.order
    for k in range(1, n + 1):
        for S in itertools.combinations(range(n), k):
            if _ann_r(R, S) not in eR:
                return False
    return True


# polynomial ------------------------------------------------------------------

def polys(n, D, z=0):
    return list(itertools.product(range(n), repeat=D + 1))


def mul_skew(R, f, g, al):
    """Coefficients of f g in R[x; alpha] via x^i b = alpha^i(b) x^i."""
    A, M, z, _, n = tables(R)
    out = [z] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            t = b
            for _ in range(i):
                t = al[t]
            out[i + j] = A[out[i + j]][M[a][t]]
    return out


def armendariz(R, D, alpha=None):
    A, M, z, _, n = tables(R)
    al = list(range(n)) if alpha is None else list(alpha)
    P = polys(n, D)
    for f in P:
        for g in P:
            if all(c == z for c in mul_skew(R, f, g, al)):
                if any(M[a][b] != z for a in f for b in g):
                    return False
    return True


def left_mccoy(R, D, Dp):
    A, M, z, _, n = tables(R)
    al = list(range(n))
    F = [f for f in polys(n, Dp) if any(c != z for c in f)]
    for g in polys(n, D):
        if all(c == z for c in g):
            continue
        if any(all(c == z for c in mul_skew(R, f, g, al)) for f in F):
            if not any(all(M[c][b] == z for b in g) for c in range(n) if c != z):
                return False
    return True


def right_mccoy(R, D, Dp):
    A, M, z, _, n = tables(R)
    al = list(range(n))
    F = [f for f in polys(n, Dp) if any(c != z for c in f)]
    for g in polys(n, D):
        if all(c == z for c in g):
            continue
        if any(all(c == z for c in mul_skew(R, g, f, al)) for f in F):
            if not any(all(M[b][c] == z for b in g) for c in range(n) if c != z):
                return False
    return True


def ideal(R, gens):
    A, M, z, _, n = tables(R)
    S = {z} | set(gens)
    while True:
        new = set(S)
        new |= {A[x][y] for x in S for y in S}
        new |= {M[r][x] for r in range(n) for x in S}
        new |= {M[x][r] for r in range(n) for x in S}
        if new == S:
            return frozenset(S)
        S = new


def gaussian(R, D):
    A, M, z, _, n = tables(R)
    al = list(range(n))
    P = polys(n, D)
    for f in P:
        for g in P:
            cf, cg = ideal(R, f), ideal(R, g)
            lhs = ideal(R, mul_skew(R, f, g, al))
            if lhs != ideal(R, [M[x][y] for x in cf for y in cg]):
                return False
    return True


# skew ------------------------------------------------------------------------

def alpha_rigid(R, al):
    A, M, z, _, n = tables(R)
    return all(a == z or M[a][al[a]] != z for a in range(n))


def alpha_compatible(R, al):
    A, M, z, _, n = tables(R)
    return all((M[a][b] == z) == (M[a][al[b]] == z) for a in range(n) for b in range(n))


def condition_c(R, al):
    A, M, z, _, n = tables(R)
    return all(M[a][b] == z for a in range(n) for b in range(n) if M[a][al[b]] == z)


# endomorphisms and enumeration ---------------------------------------------------

def endomorphisms(R):
    """All maps n -> n preserving + and * (n^n brute force)."""
    A, M, z, _, n = tables(R)
    out = []
    for m in itertools.product(range(n), repeat=n):
        if all(m[A[x][y]] == A[m[x]][m[y]] and m[M[x][y]] == M[m[x]][m[y]]
               for x in range(n) for y in range(n)):
            out.append(m)
    return out


def _group_endos(A, n):
    return [m for m in itertools.product(range(n), repeat=n)
            if all(m[A[x][y]] == A[m[x]][m[y]] for x in range(n) for y in range(n))]


def _is_unital_ring(A, M, n):
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if M[M[a][b]][c] != M[a][M[b][c]]:
                    return False
                if M[A[a][b]][c] != A[M[a][c]][M[b][c]]:
                    return False
    return any(all(M[u][x] == x and M[x][u] == x for x in range(n)) for u in range(n))


def _isomorphic(A1, M1, A2, M2, n):
    for p in itertools.permutations(range(n)):
        if all(p[A1[x][y]] == A2[p[x]][p[y]] and p[M1[x][y]] == M2[p[x]][p[y]]
               for x in range(n) for y in range(n)):
            return True
    return False


def naive_unital_rings(add_tables):
    """Every unital ring on each given additive table, up to isomorphism.

    Rows of the multiplication table are left multiplications, which are
    additive endomorphisms; all row choices are tried, then filtered by
    right distributivity, associativity and an identity.  Deduplication tries
    every permutation.
    """
    reps = []
    for A in add_tables:
        n = len(A)
        endos = _group_endos(A, n)
        for rows in itertools.product(endos, repeat=n):
            M = [list(r) for r in rows]
            if not _is_unital_ring(A, M, n):
                continue
            if not any(_isomorphic(A2, M2, A, M, n) for A2, M2 in reps):
                reps.append((A, M))
    return reps


def cyclic_add(n):
    return [[(x + y) % n for y in range(n)] for x in range(n)]


def klein_add():
    return [[x ^ y for y in range(4)] for x in range(4)]


def additive_automorphisms(A, n):
    """Permutations preserving the addition table, by brute force."""
    return [p for p in itertools.permutations(range(n))
            if all(p[A[x][y]] == A[p[x]][p[y]] for x in range(n) for y in range(n))]


def aut_min_form(M, autos):
    """Minimum relabelled multiplication table over additive automorphisms."""
    n = len(M)
    best = None
    for p in autos:
        inv = [0] * n
        for x, y in enumerate(p):
            inv[y] = x
        T = tuple(p[M[inv[x]][inv[y]]] for x in range(n) for y in range(n))
        if best is None or T < best:
            best = T
    return best
