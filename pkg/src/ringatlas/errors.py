"""Exception types shared across the package."""

from __future__ import annotations


class RingAtlasError(Exception):
    """Base class for every error raised by ringatlas."""


class AxiomViolation(RingAtlasError):
    """A table fails one of the unital-ring axioms.

    ``kind`` is one of ``add-assoc``, ``add-comm``, ``add-identity``,
    ``add-inverse``, ``mul-assoc``, ``left-distrib``, ``right-distrib``,
    ``identity`` (plus ``table-shape`` for malformed input).
    """

    def __init__(self, kind: str, witness: tuple = ()):
        self.kind = kind
        self.witness = tuple(witness)
        super().__init__(f"{kind} fails at {self.witness}")


class EmptySubset(RingAtlasError):
    pass


class OrderOverflow(RingAtlasError):
    def __init__(self, order: int, cap: int, what: str = "ring"):
        self.order = order
        self.cap = cap
        super().__init__(f"{what} of order {order} exceeds cap {cap}")


class InvalidGroup(RingAtlasError):
    pass


class NotAdditive(RingAtlasError):
    def __init__(self, witness: tuple):
        self.witness = tuple(witness)
        super().__init__(f"map is not additive at {self.witness}")


class NotMultiplicative(RingAtlasError):
    def __init__(self, witness: tuple):
        self.witness = tuple(witness)
        super().__init__(f"map is not multiplicative at {self.witness}")


class LeibnizViolation(RingAtlasError):
    def __init__(self, witness: tuple):
        self.witness = tuple(witness)
        super().__init__(f"delta(ab) != delta(a)b + alpha(a)delta(b) at {self.witness}")


class RingMismatch(RingAtlasError):
    pass


class MorphismRingMismatch(RingMismatch):
    pass


class BudgetExceeded(RingAtlasError):
    def __init__(self, estimate: float, budget: float):
        self.estimate = estimate
        self.budget = budget
        super().__init__(f"estimated cost {estimate:.3g} exceeds budget {budget:.3g}")


class WrongPropertyClass(RingAtlasError):
    pass


class NotCommutative(RingAtlasError):
    pass


class CatalogCorrupt(RingAtlasError):
    pass


class VersionMismatch(RingAtlasError):
    pass


class ParseError(RingAtlasError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}")
