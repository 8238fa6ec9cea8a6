"""Ring endomorphisms and alpha-derivations on table rings."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import (LeibnizViolation, NotAdditive, NotMultiplicative,
                     OrderOverflow, RingMismatch)
from .ring import FiniteRing

DEFAULT_ENUMERATION_CAP = 16


@dataclass(frozen=True, eq=False)
class RingEndomorphism:
    """Validated additive, multiplicative self-map of ``ring``.

    ``alpha(1) = 1`` is not required; ``unital`` records whether it holds.
    """

    ring: FiniteRing
    map: tuple[int, ...]
    unital: bool
    label: str = ""

    @cached_property
    def array(self) -> np.ndarray:
        out = np.array(self.map, dtype=np.int64)
        out.setflags(write=False)
        return out

    def __call__(self, x: int) -> int:
        return self.map[x]

    @property
    def injective(self) -> bool:
        return len(set(self.map)) == len(self.map)

    def powers(self, k: int) -> np.ndarray:
        """``(k+1) x n`` array whose row ``i`` is ``alpha^i``."""
        n = self.ring.order
        P = np.empty((k + 1, n), dtype=np.int64)
        P[0] = np.arange(n)
        for i in range(1, k + 1):
            P[i] = self.array[P[i - 1]]
        return P

    def compose(self, other: "RingEndomorphism") -> tuple[int, ...]:
        """Map of ``self o other``."""
        return tuple(self.map[x] for x in other.map)

    def describe(self) -> str:
        if self.label:
            return self.label
        return "map:" + ",".join(map(str, self.map))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingEndomorphism):
            return NotImplemented
        return self.ring is other.ring and self.map == other.map

    def __hash__(self) -> int:
        return hash(self.map)


@dataclass(frozen=True, eq=False)
class AlphaDerivation:
    """Additive ``delta`` with ``delta(ab) = delta(a) b + alpha(a) delta(b)``."""

    ring: FiniteRing
    alpha: RingEndomorphism
    map: tuple[int, ...]

    @cached_property
    def array(self) -> np.ndarray:
        out = np.array(self.map, dtype=np.int64)
        out.setflags(write=False)
        return out

    def __call__(self, x: int) -> int:
        return self.map[x]

    @property
    def is_zero(self) -> bool:
        return all(x == self.ring.zero for x in self.map)


def _check_map(R: FiniteRing, mapping: Sequence[int]) -> np.ndarray:
    m = np.asarray(list(mapping), dtype=np.int64)
    if m.shape != (R.order,) or ((m < 0) | (m >= R.order)).any():
        raise ValueError(f"map must list {R.order} valid element indices")
    return m


def _first_pair(bad: np.ndarray) -> tuple[int, int]:
    a, b = np.argwhere(bad)[0]
    return int(a), int(b)


def validate_endomorphism(R: FiniteRing, mapping: Sequence[int],
                          label: str = "") -> RingEndomorphism:
    m = _check_map(R, mapping)
    bad = m[R.add] != R.add[np.ix_(m, m)]
    if bad.any():
        raise NotAdditive(_first_pair(bad))
    bad = m[R.mul] != R.mul[np.ix_(m, m)]
    if bad.any():
        raise NotMultiplicative(_first_pair(bad))
    return RingEndomorphism(R, tuple(int(x) for x in m), bool(m[R.one] == R.one), label)


def identity_endomorphism(R: FiniteRing) -> RingEndomorphism:
    return validate_endomorphism(R, range(R.order), label="id")


def zero_endomorphism(R: FiniteRing) -> RingEndomorphism:
    return validate_endomorphism(R, [R.zero] * R.order, label="zero")


def validate_alpha_derivation(R: FiniteRing, alpha: RingEndomorphism,
                              mapping: Sequence[int]) -> AlphaDerivation:
    if alpha.ring is not R:
        raise RingMismatch("alpha is defined on a different ring")
    d = _check_map(R, mapping)
    bad = d[R.add] != R.add[np.ix_(d, d)]
    if bad.any():
        raise NotAdditive(_first_pair(bad))
    al = alpha.array
    # delta(ab) vs delta(a) b + alpha(a) delta(b)
    rhs = R.add[R.mul[d[:, None], R.elements[None, :]], R.mul[al[:, None], d[None, :]]]
    bad = d[R.mul] != rhs
    if bad.any():
        raise LeibnizViolation(_first_pair(bad))
    return AlphaDerivation(R, alpha, tuple(int(x) for x in d))


def zero_derivation(R: FiniteRing, alpha: RingEndomorphism) -> AlphaDerivation:
    return validate_alpha_derivation(R, alpha, [R.zero] * R.order)


def inner_derivation(R: FiniteRing, alpha: RingEndomorphism, c: int) -> AlphaDerivation:
    """``delta(a) = c a - alpha(a) c``."""
    al = alpha.array
    m = R.add[R.mul[c], R.neg[R.mul[al, c]]]
    return validate_alpha_derivation(R, alpha, m)


def ring_generators(R: FiniteRing) -> list[int]:
    """A small set whose closure under ``+`` and ``*`` is all of ``R``.

    Greedy: repeatedly add the element that enlarges the closure most
    (ties broken by lowest index).  ``1`` is not assumed to be available.
    """
    def closure(seed: np.ndarray) -> np.ndarray:
        mask = seed.copy()
        while True:
            mem = np.flatnonzero(mask)
            new = mask.copy()
            new[R.add[np.ix_(mem, mem)].ravel()] = True
            new[R.mul[np.ix_(mem, mem)].ravel()] = True
            if (new == mask).all():
                return mask
            mask = new

    mask = np.zeros(R.order, dtype=bool)
    mask[R.zero] = True
    gens: list[int] = []
    while not mask.all():
        best, best_mask = -1, None
        for x in np.flatnonzero(~mask):
            seed = mask.copy()
            seed[x] = True
            cm = closure(seed)
            if best_mask is None or cm.sum() > best_mask.sum():
                best, best_mask = int(x), cm
        gens.append(best)
        mask = best_mask
    return gens


def _extend(R: FiniteRing, img: np.ndarray, known: list[int], new: int) -> bool:
    """Propagate ``img`` through sums and products; False on a clash."""
    A, M = R.add, R.mul
    queue = [new]
    while queue:
        u = queue.pop()
        for v in list(known) + [u]:
            for x, y in ((A[u, v], A[img[u], img[v]]),
                         (M[u, v], M[img[u], img[v]]),
                         (M[v, u], M[img[v], img[u]])):
                if img[x] < 0:
                    img[x] = y
                    queue.append(int(x))
                elif img[x] != y:
                    return False
        known.append(u)
    return True


def enumerate_endomorphisms(R: FiniteRing, require_unital: bool = False,
                            cap: int | None = None) -> list[RingEndomorphism]:
    """All endomorphisms in lexicographic order of their maps.

    Images are assigned to a generating set one at a time and propagated
    through sums and products, so inconsistent partial maps die early.
    """
    cap = DEFAULT_ENUMERATION_CAP if cap is None else cap
    if R.order > cap:
        raise OrderOverflow(R.order, cap, what="endomorphism enumeration")
    gens = ring_generators(R)
    orders = R.additive_orders
    found: list[tuple[int, ...]] = []

    def dfs(i: int, img: np.ndarray, known: list[int]) -> None:
        if i == len(gens):
            if (img >= 0).all():
                found.append(tuple(int(x) for x in img))
            return
        g = gens[i]
        if img[g] >= 0:
            dfs(i + 1, img, known)
            return
        for y in range(R.order):
            if orders[g] % orders[y]:
                continue
            img2, known2 = img.copy(), list(known)
            img2[g] = y
            if _extend(R, img2, known2, g):
                dfs(i + 1, img2, known2)

    img0 = np.full(R.order, -1, dtype=np.int64)
    img0[R.zero] = R.zero
    dfs(0, img0, [R.zero])
    out = []
    for m in sorted(set(found)):
        e = validate_endomorphism(R, m)
        if e.unital or not require_unital:
            out.append(e)
    return out
