"""Polynomials over a table ring and the Ore product ``x r = alpha(r) x + delta(r)``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import _kernels as K
from .errors import BudgetExceeded, RingMismatch
from .morphisms import AlphaDerivation, RingEndomorphism
from .ring import ElementSet, FiniteRing, two_sided_ideal

# degree of the zero polynomial
DEG_ZERO = -math.inf

DEFAULT_BUDGET = 1e10


@dataclass(frozen=True, eq=False)
class SkewPolynomial:
    ring: FiniteRing
    coeffs: tuple[int, ...]

    @classmethod
    def of(cls, ring: FiniteRing, coeffs: Iterable[int]) -> "SkewPolynomial":
        cs = [int(c) for c in coeffs]
        for c in cs:
            if not 0 <= c < ring.order:
                raise IndexError(f"coefficient {c} outside ring of order {ring.order}")
        while cs and cs[-1] == ring.zero:
            cs.pop()
        return cls(ring, tuple(cs))

    @classmethod
    def zero(cls, ring: FiniteRing) -> "SkewPolynomial":
        return cls(ring, ())

    @property
    def degree(self) -> float:
        return len(self.coeffs) - 1 if self.coeffs else DEG_ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if i < len(self.coeffs) else self.ring.zero

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SkewPolynomial):
            return NotImplemented
        return self.ring is other.ring and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def render(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == self.ring.zero:
                continue
            name = self.ring.name(c)
            if i == 0:
                terms.append(name)
            else:
                x = "x" if i == 1 else f"x^{i}"
                terms.append(x if c == self.ring.one else f"{name}*{x}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"SkewPolynomial({self.render()})"


def _same_ring(f: SkewPolynomial, g: SkewPolynomial) -> FiniteRing:
    if f.ring is not g.ring:
        raise RingMismatch("polynomials live over different rings")
    return f.ring


def poly_add(f: SkewPolynomial, g: SkewPolynomial) -> SkewPolynomial:
    R = _same_ring(f, g)
    n = max(len(f.coeffs), len(g.coeffs))
    return SkewPolynomial.of(R, (int(R.add[f.coeff(i), g.coeff(i)]) for i in range(n)))


def poly_neg(f: SkewPolynomial) -> SkewPolynomial:
    return SkewPolynomial.of(f.ring, (int(f.ring.neg[c]) for c in f.coeffs))


def _x_times(R: FiniteRing, p: list[int], alpha: np.ndarray, delta: np.ndarray | None) -> list[int]:
    # x * sum c_m x^m = sum alpha(c_m) x^(m+1) + delta(c_m) x^m
    out = [R.zero] * (len(p) + 1)
    for m, c in enumerate(p):
        out[m + 1] = int(R.add[out[m + 1], alpha[c]])
        if delta is not None:
            out[m] = int(R.add[out[m], delta[c]])
    return out


def ore_mul(f: SkewPolynomial, g: SkewPolynomial,
            alpha: RingEndomorphism | None = None,
            delta: AlphaDerivation | None = None) -> SkewPolynomial:
    """Product in ``R[x; alpha, delta]`` (identity / zero when omitted).

    Each ``x^i b`` is normalized with the recurrence
    ``x^i b = x (x^(i-1) b)`` and ``x c = alpha(c) x + delta(c)``.
    """
    R = _same_ring(f, g)
    for m in (alpha, delta):
        if m is not None and m.ring is not R:
            raise RingMismatch("morphism is defined on a different ring")
    al = alpha.array if alpha is not None else R.elements
    de = None if delta is None or delta.is_zero else delta.array
    if not f.coeffs or not g.coeffs:
        return SkewPolynomial.zero(R)
    out = [R.zero] * (len(f.coeffs) + len(g.coeffs))
    for j, b in enumerate(g.coeffs):
        wrap = [b]  # x^i * b, i = 0
        for i, a in enumerate(f.coeffs):
            if i > 0:
                wrap = _x_times(R, wrap, al, de)
            if a == R.zero:
                continue
            for m, c in enumerate(wrap):
                out[m + j] = int(R.add[out[m + j], R.mul[a, c]])
    return SkewPolynomial.of(R, out)


def schoolbook_mul(f: SkewPolynomial, g: SkewPolynomial) -> SkewPolynomial:
    """Plain convolution, kept separate from :func:`ore_mul` for cross-checks."""
    R = _same_ring(f, g)
    out = [R.zero] * (len(f.coeffs) + len(g.coeffs))
    for i, a in enumerate(f.coeffs):
        for j, b in enumerate(g.coeffs):
            out[i + j] = int(R.add[out[i + j], R.mul[a, b]])
    return SkewPolynomial.of(R, out)


def content(f: SkewPolynomial) -> ElementSet:
    """Two-sided ideal generated by the coefficients."""
    return two_sided_ideal(f.ring, list(f.coeffs))


def parse_poly(R: FiniteRing, text: str) -> SkewPolynomial:
    """``"1,2"`` is ``1 + 2x`` (constant term first); ``poly:`` prefix allowed."""
    body = text[5:] if text.startswith("poly:") else text
    body = body.strip()
    if not body:
        return SkewPolynomial.zero(R)
    return SkewPolynomial.of(R, (int(tok) for tok in body.split(",")))


def tables_for(R: FiniteRing):
    """Contiguous tables plus division indexes used by the search kernels."""
    A = np.ascontiguousarray(R.add)
    M = np.ascontiguousarray(R.mul)
    NEG = np.ascontiguousarray(R.neg)
    rptr, ridx = K.division_index(M)
    lptr, lidx = K.division_index(np.ascontiguousarray(M.T))
    return A, M, NEG, rptr, ridx, lptr, lidx


def right_zero_divisors(R: FiniteRing, alpha: RingEndomorphism | None,
                        degree_bound: int, cofactor_bound: int,
                        budget: float = DEFAULT_BUDGET
                        ) -> list[tuple[SkewPolynomial, SkewPolynomial]]:
    """Every nonzero ``g`` of degree <= D with some nonzero ``f`` of degree
    <= D' and ``f g = 0`` in ``R[x; alpha]``; one ``f`` per ``g``, ``g`` in
    lexicographic coefficient order."""
    D, Dp = degree_bound, cofactor_bound
    if D < 0 or Dp < 0:
        raise ValueError("degree bounds must be >= 0")
    n = R.order
    estimate = float(n) ** (D + 1) * n
    if estimate > budget:
        raise BudgetExceeded(estimate, budget)
    if alpha is None:
        P = np.tile(R.elements, (max(D, Dp) + 1, 1))
        shift = True
    else:
        if alpha.ring is not R:
            raise RingMismatch("alpha is defined on a different ring")
        P = alpha.powers(max(D, Dp))
        shift = alpha.injective
    A, M, NEG, _, _, lptr, lidx = tables_for(R)
    cap = n ** (D + 1)
    out_g = np.zeros((cap, D + 1), dtype=np.int64)
    out_f = np.zeros((cap, Dp + 1), dtype=np.int64)
    count = K.zero_divisor_scan(A, M, NEG, np.ascontiguousarray(P), R.zero, D, Dp,
                                lptr, lidx, shift, out_g, out_f)
    return [(SkewPolynomial.of(R, out_g[i]), SkewPolynomial.of(R, out_f[i]))
            for i in range(count)]
