"""On-disk catalog: one JSON file per ring plus an index with checksums."""

from __future__ import annotations

import hashlib
import json
import os
import re
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from . import __version__
from .atlas import CorpusEntry, CorpusItem
from .errors import CatalogCorrupt, ParseError, VersionMismatch
from .morphisms import validate_endomorphism
from .predicates import ALL_PROPERTIES, Classification
from .recipes import ring_from_json, ring_to_json

CATALOG_ENV = "RINGATLAS_CATALOG"
INDEX = "index.json"


def default_catalog_dir() -> Path:
    return Path(os.environ.get(CATALOG_ENV, "ringatlas-catalog"))


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=1) + "\n"


def _atomic_write(path: Path, text: str) -> None:
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=path.suffix)
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _file_name(i: int, recipe: str) -> str:
    return f"{i:04d}-" + re.sub(r"[^A-Za-z0-9]+", "_", recipe).strip("_") + ".json"


def _entry_to_json(e: CorpusEntry) -> dict:
    return {
        "recipe": e.recipe, "kind": e.kind, "iso_class_id": e.iso_class_id, "rank": e.rank,
        "alphas": e.alphas, "ring": ring_to_json(e.ring),
        "classification": e.classification.to_dict(),
        "skew": [{"alpha": list(a.map), "alpha_label": a.label, "classification": c.to_dict()}
                 for a, c in e.skew],
    }


def _entry_from_json(d: dict) -> CorpusEntry:
    R = ring_from_json(d["ring"])
    skew = []
    for s in d["skew"]:
        a = validate_endomorphism(R, s["alpha"], label=s["alpha_label"])
        skew.append((a, Classification.from_dict(s["classification"])))
    return CorpusEntry(R, d["recipe"], d["kind"], Classification.from_dict(d["classification"]),
                       skew, d["iso_class_id"], d["rank"], d["alphas"])


def _header(degree_bound: int | None) -> dict:
    return {"tool_version": __version__, "degree_bound": degree_bound,
            "properties": list(ALL_PROPERTIES)}


def catalog_store(entries: Sequence[CorpusEntry], path: str | Path,
                  degree_bound: int | None = None) -> Path:
    """Write every entry, then the index; stale entry files are removed.

    Each file is replaced atomically and the index is written last.
    ``degree_bound`` None records the default per-order policy.
    """
    root = Path(path)
    root.mkdir(parents=True, exist_ok=True)
    files = []
    for i, e in enumerate(entries):
        name = _file_name(i, e.recipe)
        text = _dumps(_entry_to_json(e))
        _atomic_write(root / name, text)
        files.append({"file": name, "recipe": e.recipe, "kind": e.kind, "alphas": e.alphas,
                      "order": e.ring.order,
                      "sha256": hashlib.sha256(text.encode()).hexdigest()})
    index = _header(degree_bound) | {"entries": files}
    _atomic_write(root / INDEX, _dumps(index))
    keep = {f["file"] for f in files} | {INDEX}
    for p in root.glob("*.json"):
        if p.name not in keep:
            p.unlink()
    return root


@dataclass
class CatalogFilter:
    """Conjunction of ``order<=N``, ``order>=N``, ``order=N``, ``kind=K``,
    ``P`` and ``!P`` terms joined by ``&``."""

    order_min: int = 0
    order_max: int | None = None
    kind: str | None = None
    require: list[tuple[str, bool]] = field(default_factory=list)

    @classmethod
    def parse(cls, text: str) -> "CatalogFilter":
        f = cls()
        pos = 0
        for term in text.split("&"):
            t = term.strip()
            here = pos + term.find(t[:1]) if t else pos
            pos += len(term) + 1
            if not t:
                continue
            m = re.fullmatch(r"order\s*(<=|>=|=)\s*(\d+)", t)
            if m:
                op, v = m.group(1), int(m.group(2))
                if op in ("<=", "="):
                    f.order_max = v if f.order_max is None else min(f.order_max, v)
                if op in (">=", "="):
                    f.order_min = max(f.order_min, v)
                continue
            if t.startswith("kind="):
                f.kind = t[5:].strip()
                continue
            neg = t.startswith(("!", "~", "¬"))
            name = t[1:].strip() if neg else t
            if name not in ALL_PROPERTIES:
                raise ParseError(f"unknown filter term {t!r}", here)
            f.require.append((name, not neg))
        return f

    def matches(self, e: CorpusEntry) -> bool:
        n = e.ring.order
        if n < self.order_min or (self.order_max is not None and n > self.order_max):
            return False
        if self.kind is not None and e.kind != self.kind:
            return False
        v = e.classification.verdicts
        return all(name in v and v[name].holds == want for name, want in self.require)


def read_index(path: str | Path) -> dict:
    p = Path(path) / INDEX
    try:
        return json.loads(p.read_text())
    except FileNotFoundError:
        raise CatalogCorrupt(f"no catalog index at {p}") from None
    except json.JSONDecodeError as e:
        raise CatalogCorrupt(f"catalog index is not valid JSON: {e.msg}") from None


def catalog_load(path: str | Path, flt: CatalogFilter | str | None = None,
                 degree_bound: int | None = None) -> list[CorpusEntry]:
    """Entries passing ``flt``, after checksum and version checks.

    Raises VersionMismatch when the catalog was written by another tool
    version, under other degree bounds, or for another property set.
    """
    root = Path(path)
    index = read_index(root)
    want = _header(degree_bound)
    for key, expected in want.items():
        if index.get(key) != expected:
            raise VersionMismatch(f"catalog {key} is {index.get(key)!r}, expected {expected!r}")
    if isinstance(flt, str):
        flt = CatalogFilter.parse(flt)
    out = []
    for f in index["entries"]:
        p = root / f["file"]
        try:
            text = p.read_text()
        except FileNotFoundError:
            raise CatalogCorrupt(f"missing catalog file {f['file']}") from None
        if hashlib.sha256(text.encode()).hexdigest() != f["sha256"]:
            raise CatalogCorrupt(f"checksum mismatch in {f['file']}")
        e = _entry_from_json(json.loads(text))
        if flt is None or flt.matches(e):
            out.append(e)
    return out


def catalog_items(path: str | Path) -> list[CorpusItem]:
    """What an index lists, for reclassification after a version mismatch."""
    return [CorpusItem(f["recipe"], f.get("alphas", "auto")) for f in read_index(path)["entries"]]
