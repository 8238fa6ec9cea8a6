"""Text forms: the recipe grammar, ring files, and endomorphism specs.

Recipe grammar::

    recipe := "Zn:" INT
            | "prod(" recipe ("," recipe)+ ")"
            | ("full" | "tri" | "lower" | "cdiag") "(" recipe "," INT ")"
            | "dstep(" recipe ")"
            | "dorroh:" INT | "dtrunc:" INT
            | "gring(" recipe "," GROUP ")"        GROUP := C<n> | D<n> | Q8
            | "enum:" INT ":" INT

Anything ending in ``.json`` is read as a ring file.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

import numpy as np

from .constructions import ConstructionRecipe
from .errors import ParseError
from .morphisms import (RingEndomorphism, enumerate_endomorphisms,
                        identity_endomorphism, validate_endomorphism,
                        zero_endomorphism)
from .ring import FiniteRing, validate_ring

_SHAPES = {"full": "full-matrix", "tri": "upper-triangular",
           "lower": "lower-triangular", "cdiag": "constant-diagonal"}
_GROUP = re.compile(r"Q8|[CD][1-9][0-9]*")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: int | None = None):
        raise ParseError(f"{message} in {self.text!r}", self.pos if pos is None else pos)

    def peek_word(self) -> str:
        m = re.compile(r"[A-Za-z]+").match(self.text, self.pos)
        return m.group(0) if m else ""

    def expect(self, token: str) -> None:
        if not self.text.startswith(token, self.pos):
            found = self.text[self.pos:self.pos + 1] or "end of input"
            self.error(f"expected {token!r}, found {found!r}")
        self.pos += len(token)

    def integer(self) -> int:
        m = re.compile(r"[0-9]+").match(self.text, self.pos)
        if not m:
            self.error("expected an integer")
        self.pos = m.end()
        return int(m.group(0))

    def recipe(self) -> ConstructionRecipe:
        start = self.pos
        word = self.peek_word()
        self.pos += len(word)
        if word == "Zn":
            self.expect(":")
            n = self.integer()
            if n < 1:
                self.error("Zn needs n >= 1", start)
            return ConstructionRecipe("cyclic", (n,))
        if word in ("dorroh", "dtrunc"):
            self.expect(":")
            m = self.integer()
            if m < 1 and word == "dtrunc":
                self.error("dtrunc needs m >= 1", start)
            return ConstructionRecipe("dorroh" if word == "dorroh" else "dorroh-truncation", (m,))
        if word == "enum":
            self.expect(":")
            n = self.integer()
            self.expect(":")
            i = self.integer()
            return ConstructionRecipe("enumerated", (n, i))
        if word == "prod":
            self.expect("(")
            parts = [self.recipe()]
            while self.text.startswith(",", self.pos):
                self.pos += 1
                parts.append(self.recipe())
            self.expect(")")
            if len(parts) < 2:
                self.error("prod needs at least two factors", start)
            return ConstructionRecipe("product", tuple(parts))
        if word in _SHAPES:
            self.expect("(")
            base = self.recipe()
            self.expect(",")
            k = self.integer()
            self.expect(")")
            if k < 1:
                self.error("matrix size must be >= 1", start)
            return ConstructionRecipe(_SHAPES[word], (base, k))
        if word == "dstep":
            self.expect("(")
            base = self.recipe()
            self.expect(")")
            return ConstructionRecipe("dorroh-step", (base,))
        if word == "gring":
            self.expect("(")
            base = self.recipe()
            self.expect(",")
            m = _GROUP.match(self.text, self.pos)
            if not m:
                self.error("expected a group name (Cn, Dn or Q8)")
            self.pos = m.end()
            self.expect(")")
            return ConstructionRecipe("group-ring", (base, m.group(0)))
        self.error(f"unknown recipe {word!r}" if word else "expected a recipe", start)


def parse_recipe(text: str) -> ConstructionRecipe:
    p = _Parser(text.strip())
    rec = p.recipe()
    if p.pos != len(p.text):
        p.error("unexpected trailing input")
    return rec


def realize(recipe: ConstructionRecipe, cap: int | None = None) -> FiniteRing:
    if recipe.kind == "enumerated":
        from .enumeration import enumerated_ring
        return enumerated_ring(*recipe.params)
    return recipe.realize(cap)


# ring files ----------------------------------------------------------------

def ring_to_json(R: FiniteRing) -> dict:
    add, mul = R.tables()
    return {"order": R.order, "zero": R.zero, "one": R.one, "label": R.label,
            "element_names": list(R.element_names) if R.element_names else None,
            "add": add, "mul": mul}


def ring_from_json(d: dict) -> FiniteRing:
    try:
        names = d.get("element_names")
        return validate_ring(int(d["order"]), np.array(d["add"]), np.array(d["mul"]),
                             zero=int(d.get("zero", 0)), one=d.get("one"),
                             label=d.get("label", "R"),
                             element_names=tuple(names) if names else None)
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"malformed ring file: {e}") from None


def load_ring_file(path: str | Path) -> FiniteRing:
    try:
        d = json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise ParseError(f"ring file {str(path)!r} not found") from None
    except json.JSONDecodeError as e:
        raise ParseError(f"ring file is not valid JSON: {e.msg}", e.pos) from None
    return ring_from_json(d)


def parse_ring_source(text: str, cap: int | None = None) -> FiniteRing:
    if text.endswith(".json"):
        return load_ring_file(text)
    return realize(parse_recipe(text), cap)


# endomorphisms -------------------------------------------------------------

def bottom_right_alpha(R: FiniteRing) -> RingEndomorphism:
    """On lower-triangular 2x2 matrices ``[[a,0],[b,c]]`` over ``Z_m``:
    keep ``c``, zero out ``a`` and ``b``.  ``c`` is the last matrix slot."""
    m = round(R.order ** (1 / 3))
    if m ** 3 != R.order or not R.label.startswith("lower("):
        raise ParseError("corner needs a lower-triangular 2x2 matrix ring")
    return validate_endomorphism(R, [x % m for x in range(R.order)], label="corner")


def parse_alpha(R: FiniteRing, text: str) -> list[RingEndomorphism]:
    """``id``, ``zero``, ``corner``, ``all`` (every endomorphism),
    ``unital`` (every unital one) or ``map:i0,i1,...``."""
    if text == "id":
        return [identity_endomorphism(R)]
    if text == "zero":
        return [zero_endomorphism(R)]
    if text == "corner":
        return [bottom_right_alpha(R)]
    if text in ("all", "unital"):
        return enumerate_endomorphisms(R, require_unital=text == "unital")
    if text.startswith("map:"):
        try:
            mapping = [int(t) for t in text[4:].split(",")]
        except ValueError:
            raise ParseError(f"bad endomorphism map {text!r}", 4) from None
        return [validate_endomorphism(R, mapping)]
    raise ParseError(f"unknown endomorphism spec {text!r}", 0)
