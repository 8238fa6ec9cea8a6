"""Ring-class predicates, classical and skew, each with a replayable witness.

Element-quantified properties are decided exhaustively.  Polynomial
properties (Armendariz, Gaussian, McCoy, alpha-Armendariz) are decided up to
a degree bound: a failure is definitive, a pass certifies only the bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Sequence

import numpy as np

from . import _kernels as K
from .errors import (BudgetExceeded, MorphismRingMismatch, NotCommutative,
                     WrongPropertyClass)
from .morphisms import RingEndomorphism
from .poly import DEFAULT_BUDGET, SkewPolynomial, content, ore_mul, tables_for
from .ring import (FiniteRing, central_decomposition, corner_ring,
                   idempotents, is_commutative, right_annihilator,
                   square_zero_elements, two_sided_ideal)

ELEMENTWISE = (
    "reduced", "symmetric", "reversible", "semicommutative", "abelian",
    "commutative", "boolean", "von-neumann-regular", "right-pp", "baer",
)
POLYNOMIAL = ("gaussian", "armendariz", "left-mccoy", "right-mccoy")
SKEW = (
    "alpha-rigid", "alpha-compatible", "condition-c-alpha",
    "right-alpha-symmetric", "left-alpha-symmetric", "alpha-symmetric",
    "right-alpha-reversible", "left-alpha-reversible", "alpha-reversible",
    "alpha-semicommutative",
    "alpha-unital", "alpha-injective", "alpha-fixes-idempotents",
)
SKEW_POLYNOMIAL = ("alpha-armendariz",)
CLASSICAL = ELEMENTWISE + POLYNOMIAL
ALL_PROPERTIES = CLASSICAL + SKEW + SKEW_POLYNOMIAL
BOUNDED = frozenset(POLYNOMIAL + SKEW_POLYNOMIAL)

# properties whose hypothesis is a zero product ab = 0 of ring elements
_ZERO_PRODUCT_TRIGGERED = frozenset({
    "symmetric", "reversible", "semicommutative", "armendariz",
    "left-mccoy", "right-mccoy",
    "right-alpha-symmetric", "left-alpha-symmetric", "alpha-symmetric",
    "right-alpha-reversible", "left-alpha-reversible", "alpha-reversible",
    "alpha-semicommutative",
})


def default_degree(order: int) -> int:
    """Degree bound used when none is given: 2, or 1 above order 64."""
    return 2 if order <= 64 else 1


@dataclass(frozen=True)
class PropertyId:
    name: str
    degree_bound: int | None = None

    def __post_init__(self):
        if self.name not in ALL_PROPERTIES:
            raise WrongPropertyClass(f"unknown property {self.name!r}")
        if (self.degree_bound is not None) != (self.name in BOUNDED):
            raise WrongPropertyClass(
                f"{self.name}: degree bound must be given exactly for polynomial properties")

    def __str__(self) -> str:
        if self.degree_bound is None:
            return self.name
        return f"{self.name}<={self.degree_bound}"


@dataclass(frozen=True)
class Witness:
    """Concrete elements certifying a violation.

    ``elements`` pairs role names with element indices or coefficient
    tuples (for polynomials); ``narrative`` is the rendered equation.
    """

    kind: str
    elements: tuple[tuple[str, object], ...]
    narrative: str

    def get(self, role: str):
        for r, v in self.elements:
            if r == role:
                return v
        raise KeyError(role)

    def short(self, R: FiniteRing | None = None) -> str:
        parts = []
        for role, v in self.elements:
            if isinstance(v, tuple):
                txt = "poly:" + ",".join(map(str, v))
            elif R is not None and role not in ("i", "j"):
                txt = R.name(v)
            else:
                txt = str(v)
            parts.append(f"{role}={txt}")
        return " ".join(parts)

    def to_dict(self) -> dict:
        return {"kind": self.kind,
                "elements": [[r, list(v) if isinstance(v, tuple) else v]
                             for r, v in self.elements],
                "narrative": self.narrative}

    @classmethod
    def from_dict(cls, d: dict) -> "Witness":
        els = tuple((r, tuple(v) if isinstance(v, list) else v) for r, v in d["elements"])
        return cls(d["kind"], els, d["narrative"])


@dataclass(frozen=True)
class Verdict:
    property: PropertyId
    holds: bool
    bounded: bool = False
    witness: Witness | None = None
    vacuous: bool = False
    note: str = ""

    def __post_init__(self):
        if not self.holds and self.witness is None:
            raise ValueError("a failing verdict needs a witness")

    @property
    def name(self) -> str:
        return self.property.name

    def line(self, R: FiniteRing | None = None) -> str:
        out = f"{self.name}: {'TRUE' if self.holds else 'FALSE'}"
        if self.bounded:
            out += f" (bounded D={self.property.degree_bound})"
        if self.vacuous:
            out += " (vacuous)"
        if self.witness is not None:
            out += f" witness {self.witness.short(R)}"
        if self.note:
            out += f" [{self.note}]"
        return out

    def to_dict(self) -> dict:
        return {"property": self.name, "degree_bound": self.property.degree_bound,
                "holds": self.holds, "bounded": self.bounded, "vacuous": self.vacuous,
                "note": self.note,
                "witness": self.witness.to_dict() if self.witness else None}

    @classmethod
    def from_dict(cls, d: dict) -> "Verdict":
        w = Witness.from_dict(d["witness"]) if d.get("witness") else None
        return cls(PropertyId(d["property"], d["degree_bound"]), d["holds"], d["bounded"],
                   w, d.get("vacuous", False), d.get("note", ""))


@dataclass
class Classification:
    """Verdict vector for one ring or one (ring, alpha) pair."""

    ring_label: str
    order: int
    degree_bound: int
    alpha: str | None = None
    verdicts: dict[str, Verdict] = field(default_factory=dict)

    def holds(self, name: str) -> bool:
        return self.verdicts[name].holds

    def __contains__(self, name: str) -> bool:
        return name in self.verdicts

    def lines(self, R: FiniteRing | None = None) -> list[str]:
        return [v.line(R) for v in self.verdicts.values()]

    def vector(self) -> tuple[tuple[str, bool], ...]:
        return tuple((k, v.holds) for k, v in self.verdicts.items())

    def to_dict(self) -> dict:
        return {"ring": self.ring_label, "order": self.order,
                "degree_bound": self.degree_bound, "alpha": self.alpha,
                "verdicts": [v.to_dict() for v in self.verdicts.values()]}

    @classmethod
    def from_dict(cls, d: dict) -> "Classification":
        vs = [Verdict.from_dict(v) for v in d["verdicts"]]
        return cls(d["ring"], d["order"], d["degree_bound"], d.get("alpha"),
                   {v.name: v for v in vs})


# helpers -------------------------------------------------------------------

def _n(R: FiniteRing, x) -> str:
    return R.name(int(x))


def _poly(R: FiniteRing, coeffs) -> tuple[int, ...]:
    return SkewPolynomial.of(R, coeffs).coeffs


def _render(R: FiniteRing, coeffs) -> str:
    return SkewPolynomial.of(R, coeffs).render()


def _has_zero_divisors(R: FiniteRing) -> bool:
    Z = R.mul == R.zero
    Z[R.zero, :] = False
    Z[:, R.zero] = False
    return bool(Z.any())


def _first_pair(mask: np.ndarray) -> tuple[int, int] | None:
    hits = np.argwhere(mask)
    if len(hits) == 0:
        return None
    return int(hits[0][0]), int(hits[0][1])


def _ok(prop: PropertyId, R: FiniteRing, bounded: bool = False, note: str = "") -> Verdict:
    vac = prop.name in _ZERO_PRODUCT_TRIGGERED and not _has_zero_divisors(R)
    return Verdict(prop, True, bounded, None, vac, note)


def _fail(prop: PropertyId, roles: Sequence[tuple[str, object]], narrative: str,
          bounded: bool = False, note: str = "") -> Verdict:
    els = tuple((r, tuple(int(c) for c in v) if isinstance(v, (tuple, list, np.ndarray))
                 else int(v)) for r, v in roles)
    return Verdict(prop, False, bounded, Witness(prop.name, els, narrative), False, note)


def _identity(R: FiniteRing) -> np.ndarray:
    return np.ascontiguousarray(R.elements)


# element-quantified --------------------------------------------------------

def _right_ideal_keys(R: FiniteRing) -> dict[bytes, int]:
    keys: dict[bytes, int] = {}
    for e in idempotents(R):
        m = np.zeros(R.order, dtype=bool)
        m[R.mul[e]] = True
        keys.setdefault(np.packbits(m).tobytes(), e)
    return keys


def annihilator_lattice(R: FiniteRing) -> list[tuple[np.ndarray, tuple[int, ...]]]:
    """Right annihilators of all nonempty subsets, each with a subset that
    realizes it.  Built as the intersection closure of element annihilators,
    since ``Ann_r(S)`` is the intersection of the ``Ann_r(s)``."""
    Z = R.mul == R.zero
    seen: dict[bytes, int] = {}
    lattice: list[tuple[np.ndarray, tuple[int, ...]]] = []

    def push(mask, subset) -> bool:
        key = np.packbits(mask).tobytes()
        if key in seen:
            return False
        seen[key] = len(lattice)
        lattice.append((mask, subset))
        return True

    for a in range(R.order):
        push(Z[a].copy(), (a,))
    i = 0
    while i < len(lattice):
        mi, si = lattice[i]
        for j in range(i):
            mj, sj = lattice[j]
            push(mi & mj, tuple(sorted(set(si) | set(sj))))
        i += 1
    return lattice


def check_elementwise(R: FiniteRing, prop: PropertyId | str) -> Verdict:
    prop = PropertyId(prop) if isinstance(prop, str) else prop
    name = prop.name
    if name not in ELEMENTWISE:
        raise WrongPropertyClass(f"{name} is not an element-quantified property")
    M, z, n = R.mul, R.zero, R.order
    ident = _identity(R)

    if name == "reduced":
        sq = square_zero_elements(R)
        if len(sq):
            a = sq.members[0]
            return _fail(prop, [("a", a)], f"a^2 = 0 with a = {_n(R, a)} != 0")
        return _ok(prop, R)

    if name == "symmetric":
        out = np.zeros(3, dtype=np.int64)
        if K.symmetric_scan(np.ascontiguousarray(M), z, ident, False, out):
            a, b, c = out.tolist()
            return _fail(prop, [("a", a), ("b", b), ("c", c)],
                         f"abc = 0 but acb = {_n(R, M[M[a, c], b])} with "
                         f"a = {_n(R, a)}, b = {_n(R, b)}, c = {_n(R, c)}")
        return _ok(prop, R)

    if name == "reversible":
        Z = M == z
        hit = _first_pair(Z & ~Z.T)
        if hit:
            a, b = hit
            return _fail(prop, [("a", a), ("b", b)],
                         f"ab = 0 but ba = {_n(R, M[b, a])} with a = {_n(R, a)}, b = {_n(R, b)}")
        return _ok(prop, R)

    if name == "semicommutative":
        out = np.zeros(3, dtype=np.int64)
        if K.semicommutative_scan(np.ascontiguousarray(M), z, ident, out):
            a, b, r = out.tolist()
            return _fail(prop, [("a", a), ("b", b), ("r", r)],
                         f"ab = 0 but arb = {_n(R, M[M[a, r], b])} with "
                         f"a = {_n(R, a)}, b = {_n(R, b)}, r = {_n(R, r)}")
        return _ok(prop, R)

    if name == "abelian":
        for e in idempotents(R):
            bad = np.flatnonzero(M[e] != M[:, e])
            if len(bad):
                r = int(bad[0])
                return _fail(prop, [("e", e), ("r", r)],
                             f"idempotent e = {_n(R, e)} is not central: "
                             f"er = {_n(R, M[e, r])}, re = {_n(R, M[r, e])} with r = {_n(R, r)}")
        return _ok(prop, R)

    if name == "commutative":
        hit = _first_pair(M != M.T)
        if hit:
            a, b = hit
            return _fail(prop, [("a", a), ("b", b)],
                         f"ab = {_n(R, M[a, b])} != ba = {_n(R, M[b, a])}")
        return _ok(prop, R)

    if name == "boolean":
        bad = np.flatnonzero(M[ident, ident] != ident)
        if len(bad):
            a = int(bad[0])
            return _fail(prop, [("a", a)], f"a^2 = {_n(R, M[a, a])} != a = {_n(R, a)}")
        return _ok(prop, R)

    if name == "von-neumann-regular":
        # T[a, b] = (ab)a
        T = M[M, ident[:, None]]
        bad = np.flatnonzero(~(T == ident[:, None]).any(axis=1))
        if len(bad):
            a = int(bad[0])
            return _fail(prop, [("a", a)], f"no b with aba = a for a = {_n(R, a)}")
        return _ok(prop, R)

    if name == "right-pp":
        keys = _right_ideal_keys(R)
        Z = M == z
        for a in range(n):
            if np.packbits(Z[a]).tobytes() not in keys:
                return _fail(prop, [("a", a)],
                             f"Ann_r({_n(R, a)}) (size {int(Z[a].sum())}) is not eR "
                             f"for any idempotent e")
        return _ok(prop, R)

    if name == "baer":
        keys = _right_ideal_keys(R)
        bad = []
        for mask, subset in annihilator_lattice(R):
            if np.packbits(mask).tobytes() not in keys:
                bad.append(subset)
        if bad:
            subset = min(bad, key=lambda s: (len(s), s))
            return _fail(prop, [(f"s{i}", s) for i, s in enumerate(subset)],
                         "Ann_r({" + ", ".join(_n(R, s) for s in subset)
                         + "}) is not eR for any idempotent e")
        return _ok(prop, R)
    raise AssertionError(name)


# polynomial-quantified -----------------------------------------------------

def _corner_members(R: FiniteRing, e: int) -> list[int]:
    return sorted(set(R.mul[e].tolist()))


def _opposite(R: FiniteRing) -> FiniteRing:
    M = np.ascontiguousarray(R.mul.T)
    M.setflags(write=False)
    return replace(R, mul=M, label=f"{R.label}^op")


def _armendariz_core(R: FiniteRing, D: int, P: np.ndarray, shift_f: bool):
    A, M, NEG, rptr, ridx, _, _ = tables_for(R)
    out = np.zeros(2 * D + 4, dtype=np.int64)
    if K.pair_search(A, M, NEG, np.ascontiguousarray(P), R.zero, D, rptr, ridx,
                     shift_f, out):
        return out[:D + 1].tolist(), out[D + 1:2 * D + 2].tolist(), int(out[-2]), int(out[-1])
    return None


def _left_mccoy_core(R: FiniteRing, D: int, Dp: int):
    A, M, NEG, _, _, lptr, lidx = tables_for(R)
    P = np.ascontiguousarray(np.tile(R.elements, (max(D, Dp) + 1, 1)))
    g = np.zeros(D + 1, dtype=np.int64)
    f = np.zeros(Dp + 1, dtype=np.int64)
    if K.mccoy_scan(A, M, NEG, P, R.zero, D, Dp, lptr, lidx, g, f):
        return g.tolist(), f.tolist()
    return None


def _ideal_lattice(R: FiniteRing):
    """All ideals of a commutative ring with sum and product tables."""
    n = R.order
    keys: dict[bytes, int] = {}
    masks: list[np.ndarray] = []

    def intern(mask: np.ndarray) -> int:
        k = np.packbits(mask).tobytes()
        if k not in keys:
            keys[k] = len(masks)
            masks.append(mask)
        return keys[k]

    principal = np.array([intern(two_sided_ideal(R, [a]).mask()) for a in range(n)],
                         dtype=np.int64)
    i = 0
    while i < len(masks):
        for j in range(i + 1):
            mi, mj = masks[i], masks[j]
            s = np.zeros(n, dtype=bool)
            s[R.add[np.ix_(np.flatnonzero(mi), np.flatnonzero(mj))].ravel()] = True
            intern(s)
        i += 1
    L = len(masks)
    join = np.zeros((L, L), dtype=np.int64)
    prod = np.zeros((L, L), dtype=np.int64)
    for i in range(L):
        for j in range(L):
            ii, jj = np.flatnonzero(masks[i]), np.flatnonzero(masks[j])
            s = np.zeros(n, dtype=bool)
            s[R.add[np.ix_(ii, jj)].ravel()] = True
            join[i, j] = keys[np.packbits(s).tobytes()]
            products = R.mul[np.ix_(ii, jj)].ravel().tolist()
            prod[i, j] = keys[np.packbits(two_sided_ideal(R, products).mask()).tobytes()]
    return principal, join, prod


def _gaussian_core(R: FiniteRing, D: int):
    A, M, *_ = tables_for(R)
    principal, join, prod = _ideal_lattice(R)
    out = np.zeros(2 * D + 2, dtype=np.int64)
    if K.gaussian_scan(A, M, R.zero, D, principal, join, prod, out):
        return out[:D + 1].tolist(), out[D + 1:].tolist()
    return None


def _estimate(name: str, n: int, D: int, Dp: int) -> float:
    if name == "gaussian":
        return float(n) ** (2 * D + 2) / 2
    if name in ("left-mccoy", "right-mccoy"):
        return float(n) ** (D + 1) * n
    return float(n) ** (D + 2)


def _by_factors(R: FiniteRing, core, lift):
    """Run ``core`` on each indecomposable factor; lift the first hit."""
    prim = central_decomposition(R)
    if len(prim) <= 1:
        return core(R)
    for e in prim:
        hit = core(corner_ring(R, e))
        if hit is not None:
            return lift(_corner_members(R, e), e, hit)
    return None


def check_polynomial(R: FiniteRing, prop: PropertyId | str,
                     degree_bound: int | None = None,
                     cofactor_bound: int | None = None,
                     budget: float = DEFAULT_BUDGET) -> Verdict:
    """Bounded verdict; rings that split as products are checked factor by
    factor (each property here holds for a product iff it holds for every
    factor, at every degree bound)."""
    if isinstance(prop, str):
        D = default_degree(R.order) if degree_bound is None else degree_bound
        prop = PropertyId(prop, D) if prop in BOUNDED else PropertyId(prop)
    name = prop.name
    if name not in POLYNOMIAL:
        raise WrongPropertyClass(f"{name} is not a polynomial property of R")
    D = prop.degree_bound
    Dp = D if cofactor_bound is None else cofactor_bound
    if name == "gaussian" and not is_commutative(R):
        raise NotCommutative(f"{R.label} is not commutative")
    # cost is driven by the largest indecomposable factor
    prim = central_decomposition(R)
    size = max((len(set(R.mul[e].tolist())) for e in prim), default=R.order)
    est = _estimate(name, max(size, 1), D, Dp)
    if est > budget:
        raise BudgetExceeded(est, budget)
    note = "" if Dp == D or name not in ("left-mccoy", "right-mccoy") else f"D'={Dp}"

    if R.order == 1:
        return _ok(prop, R, bounded=True)

    if name == "armendariz":
        def core(S):
            return _armendariz_core(S, D, np.tile(S.elements, (D + 1, 1)), True)

        def lift(mem, e, hit):
            f, g, i, j = hit
            return [mem[x] for x in f], [mem[x] for x in g], i, j

        hit = _by_factors(R, core, lift)
        if hit:
            f, g, i, j = hit
            return _fail(prop, [("f", _poly(R, f)), ("g", _poly(R, g)), ("i", i), ("j", j)],
                         f"f g = 0 but a_{i} b_{j} = {_n(R, R.mul[f[i], g[j]])} with "
                         f"f = {_render(R, f)}, g = {_render(R, g)}", bounded=True)
        return _ok(prop, R, bounded=True)

    if name == "gaussian":
        def lift(mem, e, hit):
            f, g = hit
            return [mem[x] for x in f], [mem[x] for x in g]

        hit = _by_factors(R, lambda S: _gaussian_core(S, D), lift)
        if hit:
            f, g = hit
            return _fail(prop, [("f", _poly(R, f)), ("g", _poly(R, g))],
                         f"c(fg) != c(f)c(g) with f = {_render(R, f)}, g = {_render(R, g)}",
                         bounded=True)
        return _ok(prop, R, bounded=True)

    # McCoy: right McCoy of R is left McCoy of the opposite ring
    right = name == "right-mccoy"
    base = _opposite(R) if right else R

    def lift(mem, e, hit):
        g, f = hit
        one_minus_e = int(base.add[base.one, base.neg[e]])
        g = [mem[x] for x in g]
        g[0] = int(base.add[g[0], one_minus_e])
        return g, [mem[x] for x in f]

    hit = _by_factors(base, lambda S: _left_mccoy_core(S, D, Dp), lift)
    if hit:
        g, f = hit
        if right:
            text = (f"g f = 0 with f = {_render(R, f)} != 0, but no c != 0 has g c = 0; "
                    f"g = {_render(R, g)}")
        else:
            text = (f"f g = 0 with f = {_render(R, f)} != 0, but no c != 0 has c g = 0; "
                    f"g = {_render(R, g)}")
        return _fail(prop, [("g", _poly(R, g)), ("f", _poly(R, f))], text, bounded=True,
                     note=note)
    return _ok(prop, R, bounded=True, note=note)


# skew ----------------------------------------------------------------------

def _alpha_for(R: FiniteRing, alpha: RingEndomorphism) -> np.ndarray:
    if alpha.ring is not R:
        if alpha.ring.order != R.order or not (
                np.array_equal(alpha.ring.mul, R.mul) and np.array_equal(alpha.ring.add, R.add)):
            raise MorphismRingMismatch("alpha is defined on a different ring")
    return np.ascontiguousarray(alpha.array)


def check_skew(R: FiniteRing, alpha: RingEndomorphism, prop: PropertyId | str) -> Verdict:
    prop = PropertyId(prop) if isinstance(prop, str) else prop
    name = prop.name
    if name not in SKEW:
        raise WrongPropertyClass(f"{name} is not an element-quantified skew property")
    al = _alpha_for(R, alpha)
    M, z, n = np.ascontiguousarray(R.mul), R.zero, R.order
    Z = M == z
    el = R.elements

    if name == "alpha-rigid":
        bad = np.flatnonzero((M[el, al] == z) & (el != z))
        if len(bad):
            r = int(bad[0])
            return _fail(prop, [("r", r)], f"r alpha(r) = 0 with r = {_n(R, r)} != 0")
        return _ok(prop, R)

    # Za[a, b]: a alpha(b) = 0
    Za = M[:, al] == z
    if name == "alpha-compatible":
        hit = _first_pair(Z != Za)
        if hit:
            a, b = hit
            return _fail(prop, [("a", a), ("b", b)],
                         f"ab = {_n(R, M[a, b])} but a alpha(b) = {_n(R, M[a, al[b]])} "
                         f"with a = {_n(R, a)}, b = {_n(R, b)}")
        return _ok(prop, R)

    if name == "condition-c-alpha":
        hit = _first_pair(Za & ~Z)
        if hit:
            a, b = hit
            return _fail(prop, [("a", a), ("b", b)],
                         f"a alpha(b) = 0 but ab = {_n(R, M[a, b])} with "
                         f"a = {_n(R, a)}, b = {_n(R, b)}")
        return _ok(prop, R)

    if name in ("right-alpha-symmetric", "left-alpha-symmetric", "alpha-symmetric"):
        sides = {"right-alpha-symmetric": (False,), "left-alpha-symmetric": (True,),
                 "alpha-symmetric": (False, True)}[name]
        for left in sides:
            out = np.zeros(3, dtype=np.int64)
            if K.symmetric_scan(M, z, al, left, out):
                a, b, c = out.tolist()
                if left:
                    v, expr = M[al[b], M[a, c]], "alpha(b)ac"
                else:
                    v, expr = M[M[a, c], al[b]], "ac alpha(b)"
                return _fail(prop, [("a", a), ("b", b), ("c", c)],
                             f"abc = 0 but {expr} = {_n(R, v)} with a = {_n(R, a)}, "
                             f"b = {_n(R, b)}, c = {_n(R, c)}",
                             note="left" if left else "right")
        return _ok(prop, R)

    if name in ("right-alpha-reversible", "left-alpha-reversible", "alpha-reversible"):
        # right: ab = 0 => b alpha(a) = 0 ; left: ab = 0 => alpha(b) a = 0
        right_bad = Z & (M[el[None, :], al[:, None]] != z)
        left_bad = Z & (M[al[None, :], el[:, None]] != z)
        sides = {"right-alpha-reversible": ("right",), "left-alpha-reversible": ("left",),
                 "alpha-reversible": ("right", "left")}[name]
        for side in sides:
            hit = _first_pair(right_bad if side == "right" else left_bad)
            if hit:
                a, b = hit
                if side == "right":
                    v, expr = M[b, al[a]], "b alpha(a)"
                else:
                    v, expr = M[al[b], a], "alpha(b) a"
                return _fail(prop, [("a", a), ("b", b)],
                             f"ab = 0 but {expr} = {_n(R, v)} with a = {_n(R, a)}, b = {_n(R, b)}",
                             note=side)
        return _ok(prop, R)

    if name == "alpha-semicommutative":
        out = np.zeros(3, dtype=np.int64)
        if K.semicommutative_scan(M, z, al, out):
            a, b, r = out.tolist()
            return _fail(prop, [("a", a), ("b", b), ("r", r)],
                         f"ab = 0 but a r alpha(b) = {_n(R, M[M[a, r], al[b]])} with "
                         f"a = {_n(R, a)}, b = {_n(R, b)}, r = {_n(R, r)}")
        return _ok(prop, R)

    if name == "alpha-unital":
        if al[R.one] != R.one:
            return _fail(prop, [("one", R.one)], f"alpha(1) = {_n(R, al[R.one])} != 1")
        return _ok(prop, R)

    if name == "alpha-injective":
        seen: dict[int, int] = {}
        for a in range(n):
            if int(al[a]) in seen:
                b = seen[int(al[a])]
                return _fail(prop, [("a", b), ("b", a)],
                             f"alpha(a) = alpha(b) = {_n(R, al[a])} with "
                             f"a = {_n(R, b)} != b = {_n(R, a)}")
            seen[int(al[a])] = a
        return _ok(prop, R)

    if name == "alpha-fixes-idempotents":
        for e in idempotents(R):
            if al[e] != e:
                return _fail(prop, [("e", e)],
                             f"alpha(e) = {_n(R, al[e])} != e = {_n(R, e)}")
        return _ok(prop, R)
    raise AssertionError(name)


def check_skew_polynomial(R: FiniteRing, alpha: RingEndomorphism,
                          prop: PropertyId | str = "alpha-armendariz",
                          degree_bound: int | None = None,
                          budget: float = DEFAULT_BUDGET) -> Verdict:
    if isinstance(prop, str):
        D = default_degree(R.order) if degree_bound is None else degree_bound
        prop = PropertyId(prop, D)
    if prop.name not in SKEW_POLYNOMIAL:
        raise WrongPropertyClass(f"{prop.name} is not a skew polynomial property")
    D = prop.degree_bound
    al = _alpha_for(R, alpha)
    est = _estimate(prop.name, R.order, D, D)
    if est > budget:
        raise BudgetExceeded(est, budget)
    if R.order == 1:
        return _ok(prop, R, bounded=True)
    P = np.empty((D + 1, R.order), dtype=np.int64)
    P[0] = R.elements
    for i in range(1, D + 1):
        P[i] = al[P[i - 1]]
    injective = len(set(al.tolist())) == R.order
    hit = _armendariz_core(R, D, P, injective)
    if hit:
        f, g, i, j = hit
        return _fail(prop, [("f", _poly(R, f)), ("g", _poly(R, g)), ("i", i), ("j", j)],
                     f"f g = 0 in R[x; alpha] but a_{i} b_{j} = {_n(R, R.mul[f[i], g[j]])} "
                     f"with f = {_render(R, f)}, g = {_render(R, g)}", bounded=True)
    return _ok(prop, R, bounded=True)


# dispatch ------------------------------------------------------------------

def check(R: FiniteRing, name: str, alpha: RingEndomorphism | None = None,
          degree_bound: int | None = None, cofactor_bound: int | None = None,
          budget: float = DEFAULT_BUDGET) -> Verdict:
    if name in ELEMENTWISE:
        return check_elementwise(R, name)
    if name in POLYNOMIAL:
        return check_polynomial(R, name, degree_bound, cofactor_bound, budget)
    if alpha is None:
        raise WrongPropertyClass(f"{name} needs an endomorphism")
    if name in SKEW:
        return check_skew(R, alpha, name)
    if name in SKEW_POLYNOMIAL:
        return check_skew_polynomial(R, alpha, name, degree_bound, budget)
    raise WrongPropertyClass(f"unknown property {name!r}")


def _gaussian_or_na(R: FiniteRing, D: int, budget: float) -> Verdict:
    try:
        return check_polynomial(R, PropertyId("gaussian", D), budget=budget)
    except NotCommutative:
        M = R.mul
        a, b = _first_pair(M != M.T)
        return _fail(PropertyId("gaussian", D), [("a", a), ("b", b)],
                     f"not commutative: ab = {_n(R, M[a, b])} != ba = {_n(R, M[b, a])}",
                     bounded=True, note="defined only for commutative rings")


def classify(R: FiniteRing, degree_bound: int | None = None,
             budget: float = DEFAULT_BUDGET) -> Classification:
    D = default_degree(R.order) if degree_bound is None else degree_bound
    out = Classification(R.label, R.order, D)
    for name in ELEMENTWISE:
        out.verdicts[name] = check_elementwise(R, name)
    out.verdicts["gaussian"] = _gaussian_or_na(R, D, budget)
    for name in ("armendariz", "left-mccoy", "right-mccoy"):
        out.verdicts[name] = check_polynomial(R, PropertyId(name, D), budget=budget)
    return out


def classify_skew(R: FiniteRing, alpha: RingEndomorphism, degree_bound: int | None = None,
                  budget: float = DEFAULT_BUDGET) -> Classification:
    D = default_degree(R.order) if degree_bound is None else degree_bound
    out = Classification(R.label, R.order, D, alpha=alpha.describe())
    for name in SKEW:
        out.verdicts[name] = check_skew(R, alpha, name)
    out.verdicts["alpha-armendariz"] = check_skew_polynomial(
        R, alpha, PropertyId("alpha-armendariz", D), budget=budget)
    return out


# replay --------------------------------------------------------------------

def replay_witness(R: FiniteRing, verdict: Verdict,
                   alpha: RingEndomorphism | None = None) -> bool:
    """Re-evaluate a failing verdict's witness directly on the tables.

    Uses plain table lookups and :func:`ore_mul`, not the search kernels.
    True when the witness exhibits a genuine violation.
    """
    w = verdict.witness
    if verdict.holds or w is None:
        return False
    M, z = R.mul, R.zero
    g_ = w.get
    al = alpha.array if alpha is not None else R.elements
    name = verdict.name

    def P(key):
        return SkewPolynomial.of(R, g_(key))

    if name == "gaussian" and w.elements[0][0] == "a":
        a, b = g_("a"), g_("b")
        return M[a, b] != M[b, a]
    if name == "reduced":
        a = g_("a")
        return a != z and M[a, a] == z
    if name == "symmetric":
        a, b, c = g_("a"), g_("b"), g_("c")
        return M[M[a, b], c] == z and M[M[a, c], b] != z
    if name == "reversible":
        a, b = g_("a"), g_("b")
        return M[a, b] == z and M[b, a] != z
    if name == "semicommutative":
        a, b, r = g_("a"), g_("b"), g_("r")
        return M[a, b] == z and M[M[a, r], b] != z
    if name == "abelian":
        e, r = g_("e"), g_("r")
        return M[e, e] == e and M[e, r] != M[r, e]
    if name == "commutative":
        a, b = g_("a"), g_("b")
        return M[a, b] != M[b, a]
    if name == "boolean":
        a = g_("a")
        return M[a, a] != a
    if name == "von-neumann-regular":
        a = g_("a")
        return all(M[M[a, b], a] != a for b in range(R.order))
    if name in ("right-pp", "baer"):
        subset = [v for _, v in w.elements]
        ann = set(right_annihilator(R, subset).members)
        return all(set(M[e].tolist()) != ann for e in idempotents(R))
    if name == "armendariz" or name == "alpha-armendariz":
        f, g = P("f"), P("g")
        prod = ore_mul(f, g, alpha if name == "alpha-armendariz" else None)
        i, j = g_("i"), g_("j")
        return prod.is_zero() and M[f.coeff(i), g.coeff(j)] != z
    if name == "gaussian":
        f, g = P("f"), P("g")
        cf, cg = content(f), content(g)
        products = [int(M[x, y]) for x in cf for y in cg]
        return content(ore_mul(f, g)) != two_sided_ideal(R, products)
    if name in ("left-mccoy", "right-mccoy"):
        f, g = P("f"), P("g")
        if f.is_zero():
            return False
        if name == "left-mccoy":
            killed = ore_mul(f, g).is_zero()
            no_c = all(any(M[c, b] != z for b in g.coeffs) for c in range(R.order) if c != z)
        else:
            killed = ore_mul(g, f).is_zero()
            no_c = all(any(M[b, c] != z for b in g.coeffs) for c in range(R.order) if c != z)
        return killed and no_c
    if name == "alpha-rigid":
        r = g_("r")
        return r != z and M[r, al[r]] == z
    if name == "alpha-compatible":
        a, b = g_("a"), g_("b")
        return (M[a, b] == z) != (M[a, al[b]] == z)
    if name == "condition-c-alpha":
        a, b = g_("a"), g_("b")
        return M[a, al[b]] == z and M[a, b] != z
    if name in ("right-alpha-symmetric", "left-alpha-symmetric", "alpha-symmetric"):
        a, b, c = g_("a"), g_("b"), g_("c")
        left = name.startswith("left") or verdict.note == "left"
        v = M[al[b], M[a, c]] if left else M[M[a, c], al[b]]
        return M[M[a, b], c] == z and v != z
    if name in ("right-alpha-reversible", "left-alpha-reversible", "alpha-reversible"):
        a, b = g_("a"), g_("b")
        left = name.startswith("left") or verdict.note == "left"
        v = M[al[b], a] if left else M[b, al[a]]
        return M[a, b] == z and v != z
    if name == "alpha-semicommutative":
        a, b, r = g_("a"), g_("b"), g_("r")
        return M[a, b] == z and M[M[a, r], al[b]] != z
    if name == "alpha-unital":
        return al[R.one] != R.one
    if name == "alpha-injective":
        a, b = g_("a"), g_("b")
        return a != b and al[a] == al[b]
    if name == "alpha-fixes-idempotents":
        e = g_("e")
        return M[e, e] == e and al[e] != e
    raise AssertionError(name)
