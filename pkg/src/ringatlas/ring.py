"""Table-based finite unital rings and element-level queries.

Elements are dense indices ``0..n-1``; a ring is its addition and
multiplication tables.  Everything else in the package (constructions,
predicates, polynomial arithmetic) compiles down to these tables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from ._kernels import AXIOM_CODES, axiom_scan
from .errors import AxiomViolation, EmptySubset

__all__ = [
    "FiniteRing",
    "ElementSet",
    "validate_ring",
    "right_annihilator",
    "left_annihilator",
    "idempotents",
    "is_central",
    "center",
    "generated_right_ideal",
    "generated_left_ideal",
    "two_sided_ideal",
    "additive_closure",
    "square_zero_elements",
    "nilpotent_elements",
    "is_commutative",
    "relabel",
    "central_idempotents",
    "central_decomposition",
    "corner_ring",
]


def _sealed(arr) -> np.ndarray:
    out = np.array(arr, dtype=np.int64, copy=True)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class FiniteRing:
    """A validated unital associative ring on ``{0, ..., order-1}``.

    Do not build instances directly; go through :func:`validate_ring`.
    """

    order: int
    add: np.ndarray
    mul: np.ndarray
    zero: int
    one: int
    label: str = "R"
    element_names: tuple[str, ...] | None = None

    def name(self, x: int) -> str:
        if self.element_names is not None:
            return self.element_names[x]
        return str(x)

    @cached_property
    def neg(self) -> np.ndarray:
        out = np.argmax(self.add == self.zero, axis=1).astype(np.int64)
        out.setflags(write=False)
        return out

    @cached_property
    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    @cached_property
    def additive_orders(self) -> np.ndarray:
        n = self.order
        orders = np.zeros(n, dtype=np.int64)
        cur = self.elements.copy()
        for k in range(1, n + 1):
            hit = (cur == self.zero) & (orders == 0)
            orders[hit] = k
            if not (orders == 0).any():
                break
            cur = self.add[cur, self.elements]
        return orders

    @cached_property
    def zero_product_mask(self) -> np.ndarray:
        """Boolean ``n x n`` mask of pairs ``(a, b)`` with ``ab = 0``."""
        return self.mul == self.zero

    def sum(self, xs: Iterable[int]) -> int:
        acc = self.zero
        for x in xs:
            acc = int(self.add[acc, x])
        return acc

    def product(self, xs: Iterable[int]) -> int:
        acc = self.one
        for x in xs:
            acc = int(self.mul[acc, x])
        return acc

    def power(self, x: int, k: int) -> int:
        return self.product([x] * k)

    def tables(self) -> tuple[list[list[int]], list[list[int]]]:
        return self.add.tolist(), self.mul.tolist()

    def fingerprint(self) -> bytes:
        """Bytes identifying the exact tables (not the isomorphism class)."""
        head = np.array([self.order, self.zero, self.one], dtype=np.int64)
        return head.tobytes() + self.add.tobytes() + self.mul.tobytes()

    def __repr__(self) -> str:
        return f"FiniteRing({self.label!r}, order={self.order})"


@dataclass(frozen=True)
class ElementSet:
    """Ascending, duplicate-free set of element indices of one ring."""

    ring: FiniteRing = field(compare=False, repr=False)
    members: tuple[int, ...]

    @classmethod
    def of(cls, ring: FiniteRing, xs: Iterable[int]) -> "ElementSet":
        xs = sorted({int(x) for x in xs})
        for x in xs:
            if not 0 <= x < ring.order:
                raise IndexError(f"element {x} outside ring of order {ring.order}")
        return cls(ring, tuple(xs))

    @classmethod
    def from_mask(cls, ring: FiniteRing, mask: np.ndarray) -> "ElementSet":
        return cls(ring, tuple(int(i) for i in np.flatnonzero(mask)))

    def mask(self) -> np.ndarray:
        m = np.zeros(self.ring.order, dtype=bool)
        m[list(self.members)] = True
        return m

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: object) -> bool:
        return x in set(self.members)

    def names(self) -> list[str]:
        return [self.ring.name(x) for x in self.members]


def _first(mask: np.ndarray) -> tuple[int, ...]:
    return tuple(int(i) for i in np.argwhere(mask)[0])


def validate_ring(
    order: int,
    add: Sequence[Sequence[int]] | np.ndarray,
    mul: Sequence[Sequence[int]] | np.ndarray,
    zero: int = 0,
    one: int | None = None,
    label: str = "R",
    element_names: Sequence[str] | None = None,
) -> FiniteRing:
    """Check every unital-ring axiom exhaustively and seal the tables.

    ``one=None`` searches for a two-sided identity.  Raises
    :class:`AxiomViolation` naming the first failing axiom and the
    lexicographically first offending elements.
    """
    n = int(order)
    if n < 1:
        raise AxiomViolation("table-shape", (n,))
    try:
        A = np.asarray(add, dtype=np.int64)
        M = np.asarray(mul, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise AxiomViolation("table-shape", ()) from exc
    if A.shape != (n, n) or M.shape != (n, n):
        raise AxiomViolation("table-shape", (n,))
    for T in (A, M):
        bad = (T < 0) | (T >= n)
        if bad.any():
            raise AxiomViolation("table-shape", _first(bad))
    if not 0 <= zero < n:
        raise AxiomViolation("table-shape", (zero,))
    if element_names is not None and len(element_names) != n:
        raise AxiomViolation("table-shape", (len(element_names),))
    idx = np.arange(n)

    bad = (A[zero] != idx) | (A[:, zero] != idx)
    if bad.any():
        raise AxiomViolation("add-identity", (zero, int(np.flatnonzero(bad)[0])))
    bad = A != A.T
    if bad.any():
        raise AxiomViolation("add-comm", _first(bad))
    bad = ~(A == zero).any(axis=1)
    if bad.any():
        raise AxiomViolation("add-inverse", (int(np.flatnonzero(bad)[0]),))
    A = np.ascontiguousarray(A)
    M = np.ascontiguousarray(M)
    found = np.zeros(4, dtype=np.int64)
    axiom_scan(A, M, found)
    if found[0] == 1:
        raise AxiomViolation("add-assoc", tuple(int(x) for x in found[1:]))

    if one is None:
        cands = [e for e in range(n) if (M[e] == idx).all() and (M[:, e] == idx).all()]
        if not cands:
            raise AxiomViolation("identity", ())
        one = cands[0]
    if not 0 <= one < n:
        raise AxiomViolation("identity", (one,))
    bad = (M[one] != idx) | (M[:, one] != idx)
    if bad.any():
        raise AxiomViolation("identity", (one, int(np.flatnonzero(bad)[0])))
    if one == zero and n > 1:
        raise AxiomViolation("identity", (one,))

    if found[0] > 1:
        raise AxiomViolation(AXIOM_CODES[int(found[0])], tuple(int(x) for x in found[1:]))

    names = tuple(str(s) for s in element_names) if element_names is not None else None
    return FiniteRing(n, _sealed(A), _sealed(M), int(zero), int(one), label, names)


def _as_list(S) -> list[int]:
    if isinstance(S, ElementSet):
        return list(S.members)
    if isinstance(S, (int, np.integer)):
        return [int(S)]
    return [int(x) for x in S]


def right_annihilator(R: FiniteRing, S) -> ElementSet:
    """``{b : s b = 0 for every s in S}``."""
    xs = _as_list(S)
    if not xs:
        raise EmptySubset("right annihilator of the empty set")
    mask = (R.mul[xs] == R.zero).all(axis=0)
    return ElementSet.from_mask(R, mask)


def left_annihilator(R: FiniteRing, S) -> ElementSet:
    """``{b : b s = 0 for every s in S}``."""
    xs = _as_list(S)
    if not xs:
        raise EmptySubset("left annihilator of the empty set")
    mask = (R.mul[:, xs] == R.zero).all(axis=1)
    return ElementSet.from_mask(R, mask)


def idempotents(R: FiniteRing) -> ElementSet:
    d = R.mul[R.elements, R.elements]
    return ElementSet.from_mask(R, d == R.elements)


def is_central(R: FiniteRing, e: int) -> bool:
    return bool((R.mul[e] == R.mul[:, e]).all())


def center(R: FiniteRing) -> ElementSet:
    mask = (R.mul == R.mul.T).all(axis=1)
    return ElementSet.from_mask(R, mask)


def is_commutative(R: FiniteRing) -> bool:
    return bool((R.mul == R.mul.T).all())


def generated_right_ideal(R: FiniteRing, e: int) -> ElementSet:
    """The set ``eR``."""
    return ElementSet.of(R, R.mul[e].tolist())


def generated_left_ideal(R: FiniteRing, e: int) -> ElementSet:
    """The set ``Re``."""
    return ElementSet.of(R, R.mul[:, e].tolist())


def additive_closure(R: FiniteRing, xs: Iterable[int]) -> ElementSet:
    """Additive subgroup generated by ``xs``."""
    mask = np.zeros(R.order, dtype=bool)
    mask[R.zero] = True
    for x in xs:
        mask[x] = True
    while True:
        members = np.flatnonzero(mask)
        new = mask.copy()
        new[R.add[np.ix_(members, members)].ravel()] = True
        if (new == mask).all():
            return ElementSet.from_mask(R, mask)
        mask = new


def two_sided_ideal(R: FiniteRing, generators) -> ElementSet:
    """Smallest two-sided ideal containing ``generators`` (fixed-point closure)."""
    mask = np.zeros(R.order, dtype=bool)
    mask[R.zero] = True
    mask[_as_list(generators)] = True
    while True:
        members = np.flatnonzero(mask)
        new = mask.copy()
        new[R.mul[members].ravel()] = True
        new[R.mul[:, members].ravel()] = True
        new[R.add[np.ix_(members, members)].ravel()] = True
        if (new == mask).all():
            return ElementSet.from_mask(R, mask)
        mask = new


def square_zero_elements(R: FiniteRing) -> ElementSet:
    """Nonzero ``a`` with ``a^2 = 0``; empty exactly when ``R`` is reduced."""
    sq = R.mul[R.elements, R.elements]
    mask = (sq == R.zero) & (R.elements != R.zero)
    return ElementSet.from_mask(R, mask)


def nilpotent_elements(R: FiniteRing) -> ElementSet:
    """All nonzero ``a`` with ``a^k = 0`` for some ``k <= n`` (full power scan)."""
    cur = R.elements.copy()
    hit = np.zeros(R.order, dtype=bool)
    for _ in range(R.order):
        hit |= cur == R.zero
        cur = R.mul[cur, R.elements]
    hit[R.zero] = False
    return ElementSet.from_mask(R, hit)


def relabel(R: FiniteRing, perm: Sequence[int], label: str | None = None) -> FiniteRing:
    """Isomorphic copy in which old element ``x`` becomes ``perm[x]``."""
    p = np.asarray(perm, dtype=np.int64)
    inv = np.empty_like(p)
    inv[p] = np.arange(len(p))
    A = p[R.add[np.ix_(inv, inv)]]
    M = p[R.mul[np.ix_(inv, inv)]]
    names = None
    if R.element_names is not None:
        names = [R.element_names[i] for i in inv]
    return FiniteRing(
        R.order, _sealed(A), _sealed(M), int(p[R.zero]), int(p[R.one]),
        label or R.label, tuple(names) if names else None,
    )


def central_idempotents(R: FiniteRing) -> list[int]:
    cen = center(R).mask()
    return [e for e in idempotents(R) if cen[e]]


def corner_ring(R: FiniteRing, e: int, label: str | None = None) -> FiniteRing:
    """The ring ``eR`` for a central idempotent ``e`` (identity ``e``)."""
    members = sorted(set(R.mul[e].tolist()))
    pos = {x: i for i, x in enumerate(members)}
    mem = np.array(members)
    A = np.vectorize(pos.__getitem__)(R.add[np.ix_(mem, mem)])
    M = np.vectorize(pos.__getitem__)(R.mul[np.ix_(mem, mem)])
    names = [R.name(x) for x in members]
    return validate_ring(
        len(members), A, M, pos[R.zero], pos[e], label or f"{R.label}*{R.name(e)}", names
    )


def central_decomposition(R: FiniteRing) -> list[int]:
    """Primitive central idempotents, ascending.

    ``R`` is the direct product of the corner rings ``eR`` over the
    returned list; a single entry means ``R`` is indecomposable.
    """
    if R.order == 1:
        return [R.one]
    cis = [e for e in central_idempotents(R) if e != R.zero]
    prim = []
    for e in cis:
        # e is primitive iff no central idempotent f differs from 0, e with fe = f
        if not any(f != e and R.mul[f, e] == f for f in cis):
            prim.append(e)
    return sorted(prim)
