"""Constructors for the example rings: Z_n, products, matrix rings, the
Dorroh chain, group rings.  Every constructor returns a validated
:class:`~ringatlas.ring.FiniteRing`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from .errors import InvalidGroup, OrderOverflow
from .ring import FiniteRing, validate_ring

DEFAULT_ORDER_CAP = 512

MATRIX_SHAPES = ("full", "upper-triangular", "lower-triangular", "constant-diagonal")


def _check_cap(order: int, cap: int | None) -> None:
    cap = DEFAULT_ORDER_CAP if cap is None else cap
    if order > cap:
        raise OrderOverflow(order, cap)


def cyclic_ring(n: int) -> FiniteRing:
    if n < 1:
        raise ValueError("n must be positive")
    i = np.arange(n)
    return validate_ring(
        n, (i[:, None] + i[None, :]) % n, (i[:, None] * i[None, :]) % n,
        zero=0, one=1 % n, label=f"Z{n}",
    )


def direct_product(factors: Sequence[FiniteRing], cap: int | None = None,
                   label: str | None = None) -> FiniteRing:
    """Componentwise product; the first factor is the most significant digit."""
    if not factors:
        raise ValueError("need at least one factor")
    _check_cap(int(np.prod([F.order for F in factors], dtype=object)), cap)
    if len(factors) == 1:
        F = factors[0]
        return validate_ring(F.order, F.add, F.mul, F.zero, F.one,
                             label or F.label, F.element_names)
    A, M = factors[0].add, factors[0].mul
    zero, one = factors[0].zero, factors[0].one
    for F in factors[1:]:
        m = F.order
        n = A.shape[0]
        A = (A[:, None, :, None] * m + F.add[None, :, None, :]).reshape(n * m, n * m)
        M = (M[:, None, :, None] * m + F.mul[None, :, None, :]).reshape(n * m, n * m)
        zero, one = zero * m + F.zero, one * m + F.one
    names = [
        "(" + ",".join(F.name(x) for F, x in zip(factors, combo)) + ")"
        for combo in itertools.product(*[range(F.order) for F in factors])
    ]
    return validate_ring(len(names), A, M, zero, one,
                         label or "x".join(F.label for F in factors), names)


def _free_positions(k: int, shape: str) -> list[tuple[int, int]]:
    if shape == "full":
        return [(i, j) for i in range(k) for j in range(k)]
    if shape == "upper-triangular":
        return [(i, j) for i in range(k) for j in range(i, k)]
    if shape == "lower-triangular":
        return [(i, j) for i in range(k) for j in range(i + 1)]
    if shape == "constant-diagonal":
        # slot 0 is the shared diagonal value
        return [(0, 0)] + [(i, j) for i in range(k) for j in range(i + 1, k)]
    raise ValueError(f"unknown matrix shape {shape!r}")


def matrix_order(base_order: int, k: int, shape: str) -> int:
    return base_order ** len(_free_positions(k, shape))


def matrix_ring(base: FiniteRing, k: int, shape: str = "full",
                cap: int | None = None) -> FiniteRing:
    """k x k matrices over ``base`` restricted to ``shape``.

    ``constant-diagonal`` is the ring of upper-triangular matrices with one
    repeated diagonal entry and free strictly-upper entries.
    """
    if k < 1:
        raise ValueError("matrix size must be >= 1")
    free = _free_positions(k, shape)
    b = base.order
    N = b ** len(free)
    _check_cap(N, cap)
    coeffs = np.array(list(itertools.product(range(b), repeat=len(free))),
                      dtype=np.int64).reshape(N, len(free))
    mats = np.full((N, k, k), base.zero, dtype=np.int64)
    for slot, (i, j) in enumerate(free):
        mats[:, i, j] = coeffs[:, slot]
    if shape == "constant-diagonal":
        for i in range(1, k):
            mats[:, i, i] = coeffs[:, 0]

    def encode(arr: np.ndarray) -> np.ndarray:
        # arr: (..., k, k) -> index; raises if outside the shape
        idx = np.zeros(arr.shape[:-2], dtype=np.int64)
        for (i, j) in free:
            idx = idx * b + arr[..., i, j]
        inside = np.zeros((k, k), dtype=bool)
        for (i, j) in free:
            inside[i, j] = True
        if shape == "constant-diagonal":
            np.fill_diagonal(inside, True)
        bad = (~inside & (arr != base.zero)).any()
        if shape == "constant-diagonal":
            for i in range(1, k):
                bad = bad or (arr[..., i, i] != arr[..., 0, 0]).any()
        if bad:
            raise AssertionError("matrix shape not closed under the operation")
        return idx

    S = base.add[mats[:, None], mats[None, :]]
    A = encode(S)
    P = np.empty((N, N, k, k), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            acc = np.full((N, N), base.zero, dtype=np.int64)
            for l in range(k):
                acc = base.add[acc, base.mul[mats[:, None, i, l], mats[None, :, l, j]]]
            P[:, :, i, j] = acc
    M = encode(P)
    ident = np.full((k, k), base.zero, dtype=np.int64)
    np.fill_diagonal(ident, base.one)
    one = int(encode(ident[None])[0])
    zero = int(encode(np.full((1, k, k), base.zero, dtype=np.int64))[0])
    names = [
        "[" + ";".join(" ".join(base.name(x) for x in row) for row in m) + "]"
        for m in mats.tolist()
    ]
    tag = {"full": "M", "upper-triangular": "T", "lower-triangular": "L",
           "constant-diagonal": "R"}[shape]
    return validate_ring(N, A, M, zero, one, f"{tag}{k}({base.label})", names)


def dorroh_step(base: FiniteRing, cap: int | None = None,
                label: str | None = None) -> FiniteRing:
    """Pairs ``(a, b)`` with ``a`` in base, ``b`` in Z_2, and

    ``(a,b)+(c,d) = (a+c, b+d)``, ``(a,b)(c,d) = (ac + bc + da, bd)``.

    Element ``(a, b)`` has index ``2a + b``.  Also checks that
    ``a -> (a, 0)`` is a ring monomorphism (identity not preserved).
    """
    n = base.order
    _check_cap(2 * n, cap)
    a = np.repeat(np.arange(n), 2)
    bit = np.tile(np.arange(2), n)
    first_add = base.add[a[:, None], a[None, :]]
    bit_add = (bit[:, None] + bit[None, :]) % 2
    A = 2 * first_add + bit_add
    ac = base.mul[a[:, None], a[None, :]]
    bc = np.where(bit[:, None] == 1, a[None, :], base.zero)
    da = np.where(bit[None, :] == 1, a[:, None], base.zero)
    first_mul = base.add[base.add[ac, bc], da]
    M = 2 * first_mul + bit[:, None] * bit[None, :]
    names = [f"({base.name(x)},{y})" for x, y in zip(a.tolist(), bit.tolist())]
    S = validate_ring(2 * n, A, M, zero=2 * base.zero, one=2 * base.zero + 1,
                      label=label or f"D({base.label})", element_names=names)
    emb = 2 * np.arange(n)
    if not ((S.add[np.ix_(emb, emb)] == emb[base.add]).all()
            and (S.mul[np.ix_(emb, emb)] == emb[base.mul]).all()):
        raise AssertionError("a -> (a, 0) is not a ring homomorphism")
    return S


def dorroh_ring(m: int, cap: int | None = None) -> FiniteRing:
    """``S_m``: ``S_0 = Z_2`` and ``S_m = dorroh_step(S_{m-1})``."""
    if m < 0:
        raise ValueError("m must be >= 0")
    S = cyclic_ring(2)
    S = validate_ring(2, S.add, S.mul, 0, 1, "S0")
    for i in range(1, m + 1):
        S = dorroh_step(S, cap=cap, label=f"S{i}")
    return S


def generated_subring(R: FiniteRing, generators: Sequence[int],
                      label: str | None = None) -> FiniteRing:
    """Subring generated by ``generators`` together with ``0`` and ``1``."""
    mask = np.zeros(R.order, dtype=bool)
    mask[[R.zero, R.one, *generators]] = True
    while True:
        mem = np.flatnonzero(mask)
        new = mask.copy()
        new[R.add[np.ix_(mem, mem)].ravel()] = True
        new[R.mul[np.ix_(mem, mem)].ravel()] = True
        if (new == mask).all():
            break
        mask = new
    mem = np.flatnonzero(mask)
    pos = np.full(R.order, -1, dtype=np.int64)
    pos[mem] = np.arange(len(mem))
    A = pos[R.add[np.ix_(mem, mem)]]
    M = pos[R.mul[np.ix_(mem, mem)]]
    names = [R.name(int(x)) for x in mem]
    return validate_ring(len(mem), A, M, int(pos[R.zero]), int(pos[R.one]),
                         label or f"<{R.label}>", names)


def dorroh_truncation(m: int, cap: int | None = None) -> FiniteRing:
    """Subring of ``S_1 x ... x S_m`` generated by the coordinate copies of
    each ``S_i`` and the all-ones identity."""
    if m < 1:
        raise ValueError("truncation depth must be >= 1")
    chain = [dorroh_ring(i, cap=cap) for i in range(1, m + 1)]
    _check_cap(int(np.prod([S.order for S in chain])), cap)
    if m == 1:
        S = chain[0]
        return validate_ring(S.order, S.add, S.mul, S.zero, S.one, "Dtrunc1",
                             S.element_names)
    P = direct_product(chain, cap=cap)
    orders = [S.order for S in chain]
    gens = []
    for i, S in enumerate(chain):
        for x in range(S.order):
            digits = [F.zero for F in chain]
            digits[i] = x
            idx = 0
            for d, o in zip(digits, orders):
                idx = idx * o + d
            gens.append(idx)
    return generated_subring(P, gens, label=f"Dtrunc{m}")


# groups -----------------------------------------------------------------

def validate_group(table) -> np.ndarray:
    T = np.asarray(table, dtype=np.int64)
    g = T.shape[0]
    if T.shape != (g, g) or g < 1 or ((T < 0) | (T >= g)).any():
        raise InvalidGroup("group table must be square with valid entries")
    idx = np.arange(g)
    ids = [e for e in range(g) if (T[e] == idx).all() and (T[:, e] == idx).all()]
    if not ids:
        raise InvalidGroup("no identity element")
    if not all(len(set(row)) == g for row in T.tolist()):
        raise InvalidGroup("not a Latin square: missing inverses")
    for a in range(g):
        if (T[T[a]] != T[a][T]).any():
            raise InvalidGroup(f"not associative at {a}")
    return T


def cyclic_group(n: int) -> np.ndarray:
    i = np.arange(n)
    return (i[:, None] + i[None, :]) % n


# Q8 as [1, -1, i, -i, j, -j, k, -k]; index = 2*unit + sign
_QUAT = {
    (0, 0): (0, 1), (0, 1): (1, 1), (0, 2): (2, 1), (0, 3): (3, 1),
    (1, 0): (1, 1), (1, 1): (0, -1), (1, 2): (3, 1), (1, 3): (2, -1),
    (2, 0): (2, 1), (2, 1): (3, -1), (2, 2): (0, -1), (2, 3): (1, 1),
    (3, 0): (3, 1), (3, 1): (2, 1), (3, 2): (1, -1), (3, 3): (0, -1),
}


def quaternion_group() -> np.ndarray:
    T = np.zeros((8, 8), dtype=np.int64)
    for x in range(8):
        for y in range(8):
            ux, sx = divmod(x, 2)
            uy, sy = divmod(y, 2)
            u, s = _QUAT[ux, uy]
            neg = (sx + sy + (s < 0)) % 2
            T[x, y] = 2 * u + neg
    return T


def dihedral_group(n: int) -> np.ndarray:
    """Order ``2n``; element ``r^i s^f`` has index ``2i + f``."""
    T = np.zeros((2 * n, 2 * n), dtype=np.int64)
    for x in range(2 * n):
        i, f = divmod(x, 2)
        for y in range(2 * n):
            j, g = divmod(y, 2)
            k = (i + (j if f == 0 else -j)) % n
            T[x, y] = 2 * k + ((f + g) % 2)
    return T


def named_group(name: str) -> np.ndarray:
    if name == "Q8":
        return quaternion_group()
    if name.startswith("C") and name[1:].isdigit():
        return cyclic_group(int(name[1:]))
    if name.startswith("D") and name[1:].isdigit():
        return dihedral_group(int(name[1:]))
    raise InvalidGroup(f"unknown group {name!r}")


def group_ring(base: FiniteRing, group, cap: int | None = None,
               label: str | None = None) -> FiniteRing:
    """Formal sums ``sum a_g g`` with convolution product."""
    G = validate_group(group)
    g = G.shape[0]
    b = base.order
    N = b ** g
    _check_cap(N, cap)
    coeffs = np.array(list(itertools.product(range(b), repeat=g)),
                      dtype=np.int64).reshape(N, g)
    weights = b ** np.arange(g - 1, -1, -1, dtype=np.int64)
    A = (base.add[coeffs[:, None, :], coeffs[None, :, :]] * weights).sum(axis=-1)
    out = np.full((N, N, g), base.zero, dtype=np.int64)
    for x in range(g):
        for y in range(g):
            z = G[x, y]
            out[:, :, z] = base.add[out[:, :, z],
                                    base.mul[coeffs[:, None, x], coeffs[None, :, y]]]
    M = (out * weights).sum(axis=-1)
    e = int(np.flatnonzero([(G[i] == np.arange(g)).all() for i in range(g)])[0])
    zero_vec = np.full(g, base.zero)
    one_vec = zero_vec.copy()
    one_vec[e] = base.one
    names = ["+".join(f"{base.name(c)}g{t}" for t, c in enumerate(row) if c != base.zero) or "0"
             for row in coeffs.tolist()]
    return validate_ring(N, A, M, int(zero_vec @ weights), int(one_vec @ weights),
                         label or f"{base.label}[G{g}]", names)


@dataclass(frozen=True)
class ConstructionRecipe:
    """A buildable description of a ring; ``str()`` gives the CLI syntax."""

    kind: str
    params: tuple

    def realize(self, cap: int | None = None) -> FiniteRing:
        k, p = self.kind, self.params
        if k == "cyclic":
            R = cyclic_ring(p[0])
        elif k == "product":
            R = direct_product([r.realize(cap) for r in p], cap=cap)
        elif k in MATRIX_SHAPES or k == "full-matrix":
            shape = "full" if k == "full-matrix" else k
            R = matrix_ring(p[0].realize(cap), p[1], shape, cap=cap)
        elif k == "dorroh-step":
            R = dorroh_step(p[0].realize(cap), cap=cap)
        elif k == "dorroh":
            R = dorroh_ring(p[0], cap=cap)
        elif k == "dorroh-truncation":
            R = dorroh_truncation(p[0], cap=cap)
        elif k == "group-ring":
            R = group_ring(p[0].realize(cap), named_group(p[1]), cap=cap)
        else:
            raise ValueError(f"recipe kind {k!r} cannot be realized directly")
        return replace(R, label=str(self))

    def __str__(self) -> str:
        k, p = self.kind, self.params
        if k == "cyclic":
            return f"Zn:{p[0]}"
        if k == "product":
            return "prod(" + ",".join(str(r) for r in p) + ")"
        short = {"full-matrix": "full", "full": "full", "upper-triangular": "tri",
                 "lower-triangular": "lower", "constant-diagonal": "cdiag"}
        if k in short:
            return f"{short[k]}({p[0]},{p[1]})"
        if k == "dorroh-step":
            return f"dstep({p[0]})"
        if k == "dorroh":
            return f"dorroh:{p[0]}"
        if k == "dorroh-truncation":
            return f"dtrunc:{p[0]}"
        if k == "group-ring":
            return f"gring({p[0]},{p[1]})"
        if k == "enumerated":
            return f"enum:{p[0]}:{p[1]}"
        return f"{k}:{':'.join(map(str, p))}"


def Zn(n: int) -> ConstructionRecipe:
    return ConstructionRecipe("cyclic", (n,))


def library_recipes() -> list[ConstructionRecipe]:
    """The constructed rings that realize every worked example."""
    z2, z4 = Zn(2), Zn(4)
    recipes = [ConstructionRecipe("constant-diagonal", (z2, k)) for k in (1, 2, 3, 4)]
    recipes += [
        ConstructionRecipe("upper-triangular", (z2, 2)),
        ConstructionRecipe("full-matrix", (z2, 2)),
    ]
    recipes += [ConstructionRecipe("dorroh", (m,)) for m in (1, 2, 3)]
    recipes += [ConstructionRecipe("dorroh-truncation", (m,)) for m in (1, 2, 3)]
    recipes += [
        ConstructionRecipe("lower-triangular", (z4, 2)),
        ConstructionRecipe("group-ring", (z2, "Q8")),
    ]
    return recipes
