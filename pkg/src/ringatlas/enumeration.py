"""Unital rings of small order, up to isomorphism or as raw structures.

The additive group is fixed by its invariant factors ``d_1 | ... | d_k``.
The identity has maximal additive order, and an element of maximal order
spans a direct summand, so up to isomorphism the identity is the generator
``e_k`` of the largest cyclic factor.  The remaining products ``e_i e_j``
(``i, j < k``) range over elements killed by ``gcd(d_i, d_j)``; bilinearity
fills in the table and associativity filters it.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

import numpy as np

from .canon import canonical_form
from .errors import AxiomViolation, OrderOverflow
from .ring import FiniteRing, relabel, validate_ring

DEFAULT_ENUMERATION_ORDER_CAP = 8


def _prime_factors(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _partitions(e: int, largest: int | None = None):
    largest = e if largest is None else largest
    if e == 0:
        yield ()
        return
    for first in range(min(e, largest), 0, -1):
        for rest in _partitions(e - first, first):
            yield (first,) + rest


def invariant_factor_decompositions(n: int) -> list[tuple[int, ...]]:
    """Every abelian group of order ``n`` as ``(d_1, ..., d_k)`` with
    ``d_1 | d_2 | ... | d_k``; ``()`` for the trivial group."""
    if n == 1:
        return [()]
    primes = sorted(_prime_factors(n).items())
    out = []
    for parts in itertools.product(*(list(_partitions(e)) for _, e in primes)):
        k = max(len(p) for p in parts)
        factors = []
        for pos in range(k):
            d = 1
            for (p, _), lam in zip(primes, parts):
                if pos < len(lam):
                    d *= p ** lam[pos]
            factors.append(d)
        out.append(tuple(reversed(factors)))
    return sorted(out, key=lambda f: (len(f), f))


class AdditiveGroup:
    """``Z_{d_1} x ... x Z_{d_k}`` with mixed-radix indices (last factor
    least significant), so ``e_k`` has index 1."""

    def __init__(self, factors: tuple[int, ...]):
        self.factors = tuple(factors)
        self.order = math.prod(self.factors)
        d = np.array(self.factors, dtype=np.int64)
        self.moduli = d
        n = self.order
        self.coords = np.array(list(itertools.product(*(range(x) for x in self.factors))),
                               dtype=np.int64).reshape(n, len(self.factors))
        self.strides = np.array([math.prod(self.factors[i + 1:]) for i in range(len(d))],
                                dtype=np.int64)
        self.add = self.encode(self.coords[:, None, :] + self.coords[None, :, :])

    def encode(self, coords: np.ndarray) -> np.ndarray:
        return ((coords % self.moduli) * self.strides).sum(axis=-1)

    def basis(self, i: int) -> int:
        return int(self.strides[i])

    def killed_by(self, m: int) -> list[int]:
        return [x for x in range(self.order) if not ((self.coords[x] * m) % self.moduli).any()]

    def automorphisms(self) -> list[np.ndarray]:
        """All additive automorphisms as index maps."""
        choices = [self.killed_by(d) for d in self.factors]
        out = []
        for imgs in itertools.product(*choices):
            img_coords = self.coords[list(imgs)]  # k x k
            mapped = self.encode(self.coords @ img_coords)
            if len(np.unique(mapped)) == self.order:
                out.append(mapped)
        return out


def _structures(G: AdditiveGroup):
    """Multiplication tables with identity ``e_k`` from every admissible
    choice of basis products."""
    k = len(G.factors)
    n = G.order
    if k == 0:
        yield np.zeros((1, 1), dtype=np.int64)
        return
    free = [(i, j) for i in range(k - 1) for j in range(k - 1)]
    options = [G.killed_by(math.gcd(G.factors[i], G.factors[j])) for i, j in free]
    C = G.coords
    for choice in itertools.product(*options):
        T = np.zeros((k, k, k), dtype=np.int64)
        for i in range(k):
            T[i, k - 1] = T[k - 1, i] = G.coords[G.basis(i)]
        for (i, j), v in zip(free, choice):
            T[i, j] = G.coords[v]
        prod = np.einsum("xi,yj,ijl->xyl", C, C, T)
        yield G.encode(prod).reshape(n, n)


def _valid(G: AdditiveGroup, M: np.ndarray, label: str) -> FiniteRing | None:
    one = 1 if G.order > 1 else 0
    try:
        return validate_ring(G.order, G.add, M, zero=0, one=one, label=label)
    except AxiomViolation:
        return None


@lru_cache(maxsize=None)
def _iso_classes(n: int) -> tuple[FiniteRing, ...]:
    out: list[FiniteRing] = []
    seen: set[bytes] = set()
    for factors in invariant_factor_decompositions(n):
        G = AdditiveGroup(factors)
        for M in _structures(G):
            R = _valid(G, M, "")
            if R is None:
                continue
            key = canonical_form(R).key
            if key in seen:
                continue
            seen.add(key)
            out.append(R)
    return tuple(FiniteRing(R.order, R.add, R.mul, R.zero, R.one, f"enum:{n}:{i}")
                 for i, R in enumerate(out))


def enumerate_unital_rings(n: int, up_to_iso: bool = True,
                           cap: int | None = None) -> list[FiniteRing]:
    """Unital rings of order ``n``.

    With ``up_to_iso`` one representative per isomorphism class, labelled
    ``enum:n:i`` in a fixed order.  Otherwise every distinct multiplication
    table on each of the fixed additive groups (identity anywhere).
    """
    cap = DEFAULT_ENUMERATION_ORDER_CAP if cap is None else cap
    if n < 1:
        raise ValueError("order must be >= 1")
    if n > cap:
        raise OrderOverflow(n, cap, what="enumeration")
    reps = _iso_classes(n)
    if up_to_iso:
        return list(reps)
    out = []
    for factors in invariant_factor_decompositions(n):
        G = AdditiveGroup(factors)
        autos = G.automorphisms()
        tables: set[bytes] = set()
        for R in reps:
            if not np.array_equal(R.add, G.add):
                continue
            for phi in autos:
                S = relabel(R, phi)
                tables.add(S.mul.astype(np.int64).tobytes())
        for t in sorted(tables):
            M = np.frombuffer(t, dtype=np.int64).reshape(n, n)
            R = validate_ring(n, G.add, M, zero=0, label=f"struct:{factors}")
            out.append(R)
    return out


def enumerated_ring(n: int, i: int) -> FiniteRing:
    reps = enumerate_unital_rings(n)
    if not 0 <= i < len(reps):
        raise IndexError(f"enum:{n}:{i} out of range (there are {len(reps)} classes)")
    return reps[i]


def additive_rank(R: FiniteRing) -> int:
    """Minimal number of additive generators."""
    rank = 0
    for p in _prime_factors(R.order):
        # |{x : p x = 0}| = p^rank_p
        x = R.elements
        y = x
        for _ in range(p - 1):
            y = R.add[y, x]
        size = int((y == R.zero).sum())
        rank = max(rank, round(math.log(size, p)))
    return rank
