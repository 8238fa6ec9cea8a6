"""Canned reproductions of the worked examples and both implication graphs."""

from __future__ import annotations

from dataclasses import dataclass

from .atlas import (build_corpus, classical_graph, parse_corpus_spec,
                    skew_graph, verify_implications)
from .constructions import ConstructionRecipe, Zn
from .predicates import (PropertyId, check_elementwise, check_polynomial,
                         check_skew, replay_witness)
from .recipes import bottom_right_alpha, parse_recipe, realize


@dataclass(frozen=True)
class Row:
    subject: str
    check: str
    expected: str
    observed: str

    @property
    def ok(self) -> bool:
        return self.expected == self.observed


@dataclass
class Replication:
    title: str
    rows: list[Row]
    notes: list[str]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    def lines(self) -> list[str]:
        w1 = max([len(r.subject) for r in self.rows] + [7])
        w2 = max([len(r.check) for r in self.rows] + [5])
        out = [self.title, f"  {'subject':<{w1}}  {'check':<{w2}}  expected  observed  result"]
        for r in self.rows:
            out.append(f"  {r.subject:<{w1}}  {r.check:<{w2}}  {r.expected:<8}  "
                       f"{r.observed:<8}  {'PASS' if r.ok else 'FAIL'}")
        out += [f"  note: {n}" for n in self.notes]
        out.append(f"  {'PASS' if self.ok else 'FAIL'}")
        return out


def _tf(b: bool) -> str:
    return "true" if b else "false"


def example_dorroh() -> Replication:
    """Dorroh towers: every level and every generated truncation is
    Boolean, regular, reduced, right p.p. and Armendariz at D = 2."""
    rows = []
    baer = []
    for m in (1, 2, 3):
        for rec in (f"dorroh:{m}", f"dtrunc:{m}"):
            R = realize(parse_recipe(rec))
            subj = f"{rec} (order {R.order})"
            for name in ("boolean", "von-neumann-regular", "reduced", "right-pp"):
                rows.append(Row(subj, name, "true", _tf(check_elementwise(R, name).holds)))
            v = check_polynomial(R, PropertyId("armendariz", 2))
            rows.append(Row(subj, "armendariz<=2", "true", _tf(v.holds)))
            baer.append(check_elementwise(R, "baer").holds)
    notes = [
        f"baer holds on {sum(baer)} of {len(baer)} finite levels and truncations: every "
        "finite truncation is Baer; failure of Baer needs the infinite construction, "
        "which is out of scope",
    ]
    return Replication("dorroh towers", rows, notes)


def example_constant_diagonal() -> Replication:
    """Constant-diagonal upper-triangular rings over Z_2: Armendariz for
    n <= 3 at D = 2, not Armendariz at n = 4 (D = 1), McCoy for n <= 4 at
    D = D' = 2."""
    rows = []
    notes = []
    for n in (1, 2, 3, 4):
        R = ConstructionRecipe("constant-diagonal", (Zn(2), n)).realize()
        subj = f"{R.label} (order {R.order})"
        if n < 4:
            v = check_polynomial(R, PropertyId("armendariz", 2))
            rows.append(Row(subj, "armendariz<=2", "true", _tf(v.holds)))
        else:
            v = check_polynomial(R, PropertyId("armendariz", 1))
            rows.append(Row(subj, "armendariz<=1", "false", _tf(v.holds)))
            if not v.holds:
                rows.append(Row(subj, "witness replays", "true", _tf(replay_witness(R, v))))
                notes.append(f"witness on {R.label}: {v.witness.narrative}")
        for side in ("left-mccoy", "right-mccoy"):
            v = check_polynomial(R, PropertyId(side, 2), cofactor_bound=2)
            rows.append(Row(subj, f"{side}<=2", "true", _tf(v.holds)))
    return Replication("constant-diagonal rings", rows, notes)


def example_nonunital_alpha() -> Replication:
    """Lower-triangular 2x2 over Z_4 with alpha keeping the (2,2) entry:
    alpha-semicommutative but not abelian, and alpha(1) != 1."""
    R = realize(parse_recipe("lower(Zn:4,2)"))
    a = bottom_right_alpha(R)
    subj = f"{R.label} alpha=corner"
    rows = [
        Row(subj, "alpha(1)=1", "false", _tf(a.unital)),
        Row(subj, "alpha-semicommutative", "true",
            _tf(check_skew(R, a, "alpha-semicommutative").holds)),
        Row(subj, "abelian", "false", _tf(check_elementwise(R, "abelian").holds)),
    ]
    v = check_elementwise(R, "abelian")
    notes = [f"non-central idempotent: {v.witness.narrative}"] if not v.holds else []
    return Replication("non-unital endomorphism", rows, notes)


def graph_replication(which: str, corpus: str = "default", workers: int = 1) -> Replication:
    graph = classical_graph() if which == "classical" else skew_graph()
    entries = build_corpus(parse_corpus_spec(corpus), workers=workers,
                           skew=graph.skew)
    report = verify_implications(entries, graph)
    rows = [Row(str(s.edge), "violations", "0", str(s.violations)) for s in report.stats]
    notes = [f"{report.subjects} subjects from corpus {corpus!r}"]
    return Replication(f"{which} implication graph", rows, notes)


EXAMPLES = {"1": example_dorroh, "2": example_constant_diagonal, "3": example_nonunital_alpha}
