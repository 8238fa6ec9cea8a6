"""Canonical forms and isomorphism of table rings.

Colour refinement over the addition and multiplication tables, then
individualization of one element at a time until the colouring is discrete.
Each discrete colouring is a relabelling; the canonical form is the
lexicographically smallest relabelled ``(add, mul)`` pair over all leaves.
Branches equivalent under automorphisms already found are skipped.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from .ring import FiniteRing, central_decomposition, corner_ring, relabel


@dataclass(frozen=True)
class CanonicalForm:
    key: bytes
    labelling: tuple[int, ...]  # element x maps to labelling[x]
    automorphisms: tuple[tuple[int, ...], ...]


def _refine(R: FiniteRing, colours: np.ndarray) -> np.ndarray:
    """Coarsest equitable refinement; colour ids depend only on structure."""
    A, M = R.add, R.mul
    c = colours
    k = len(np.unique(c))
    while True:
        _, c = np.unique(c, return_inverse=True)
        c = c.reshape(-1).astype(np.int64)
        base = int(c.max()) + 1
        code = ((c[None, :] * base + c[A]) * base + c[M]) * base + c[M.T]
        code.sort(axis=1)
        sig = np.concatenate([c[:, None], code], axis=1)
        _, new = np.unique(sig, axis=0, return_inverse=True)
        new = new.reshape(-1).astype(np.int64)
        k_new = int(new.max()) + 1
        c = new
        if k_new == k:
            return c
        k = k_new


def _relabelled_key(R: FiniteRing, perm: np.ndarray) -> bytes:
    n = R.order
    inv = np.empty(n, dtype=np.int64)
    inv[perm] = np.arange(n)
    A = perm[R.add[np.ix_(inv, inv)]]
    M = perm[R.mul[np.ix_(inv, inv)]]
    return A.astype(np.int32).tobytes() + M.astype(np.int32).tobytes()


def _orbits(n: int, gens: list[np.ndarray], fixed: list[int]) -> np.ndarray:
    parent = np.arange(n)

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        if any(g[v] != v for v in fixed):
            continue
        for x in range(n):
            a, b = find(x), find(int(g[x]))
            if a != b:
                parent[max(a, b)] = min(a, b)
    return np.array([find(x) for x in range(n)])


def canonical_form(R: FiniteRing) -> CanonicalForm:
    n = R.order
    init = np.zeros(n, dtype=np.int64)
    init[R.one] = 1
    init[R.zero] = 2  # zero and one coincide only for n = 1
    best_key: bytes | None = None
    best_perm: np.ndarray | None = None
    autos: list[np.ndarray] = []

    def search(colours: np.ndarray, seq: list[int]) -> None:
        nonlocal best_key, best_perm
        c = _refine(R, colours)
        sizes = np.bincount(c)
        if sizes.max() == 1:
            key = _relabelled_key(R, c)
            if best_key is None or key < best_key:
                best_key, best_perm = key, c.copy()
            elif key == best_key:
                # best_perm^-1 o c is an automorphism
                inv = np.empty(n, dtype=np.int64)
                inv[best_perm] = np.arange(n)
                autos.append(inv[c])
            return
        target = int(np.flatnonzero(sizes == sizes[sizes > 1].min())[0])
        cell = np.flatnonzero(c == target)
        tried: list[int] = []
        for v in cell.tolist():
            if tried:
                orb = _orbits(n, autos, seq)
                if any(orb[v] == orb[t] for t in tried):
                    continue
            tried.append(v)
            nxt = c * 2
            nxt[v] += 1
            search(nxt, seq + [v])

    search(init, [])
    return CanonicalForm(best_key, tuple(int(x) for x in best_perm),
                         tuple(tuple(int(x) for x in a) for a in autos))


def canonical_ring(R: FiniteRing) -> FiniteRing:
    return relabel(R, canonical_form(R).labelling)


def find_isomorphism(R: FiniteRing, S: FiniteRing) -> tuple[int, ...] | None:
    """A verified bijection ``phi`` with ``phi(x+y) = phi(x)+phi(y)`` and
    ``phi(xy) = phi(x)phi(y)``, or None."""
    if R.order != S.order:
        return None
    cr, cs = canonical_form(R), canonical_form(S)
    if cr.key != cs.key:
        return None
    inv_s = np.empty(S.order, dtype=np.int64)
    inv_s[np.array(cs.labelling)] = np.arange(S.order)
    phi = inv_s[np.array(cr.labelling)]
    if not (np.array_equal(phi[R.add], S.add[np.ix_(phi, phi)])
            and np.array_equal(phi[R.mul], S.mul[np.ix_(phi, phi)])):
        raise AssertionError("canonical forms agree but the induced map is not an isomorphism")
    return tuple(int(x) for x in phi)


def iso_class_id(R: FiniteRing) -> str:
    """Hash identifying ``R`` up to isomorphism.

    Rings that split are hashed through their indecomposable factors, whose
    multiset determines the ring up to isomorphism.
    """
    prim = central_decomposition(R)
    if len(prim) <= 1:
        keys = [canonical_form(R).key]
    else:
        keys = sorted(canonical_form(corner_ring(R, e)).key for e in prim)
    h = hashlib.sha256()
    for k in keys:
        h.update(len(k).to_bytes(8, "little"))
        h.update(k)
    return h.hexdigest()
