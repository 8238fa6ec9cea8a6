"""Corpus of classified rings and the implication graphs checked against it."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .canon import iso_class_id
from .constructions import library_recipes
from .enumeration import additive_rank, enumerate_unital_rings
from .errors import ParseError
from .morphisms import (RingEndomorphism, enumerate_endomorphisms,
                        identity_endomorphism, zero_endomorphism)
from .predicates import (ALL_PROPERTIES, Classification, Verdict, check,
                         classify, classify_skew, replay_witness)
from .recipes import bottom_right_alpha, parse_recipe, realize
from .ring import FiniteRing

# rings up to this order are paired with every endomorphism
SKEW_ENUMERATION_CAP = 16

# Edge lists: "P & Q -> R  # anchor".  An anchor names the result an edge
# encodes.
CLASSICAL_EDGES = """\
reduced -> symmetric  # chain
symmetric -> reversible  # chain
reversible -> semicommutative  # chain
semicommutative -> abelian  # chain
reduced -> armendariz  # reduced-armendariz
armendariz -> abelian  # armendariz-abelian
boolean -> von-neumann-regular  # boolean-regular
commutative & von-neumann-regular -> reduced  # commutative-regular-reduced
von-neumann-regular & armendariz -> reduced  # regular-armendariz-reduced
baer -> right-pp  # baer-pp
abelian & right-pp -> reduced  # abelian-pp-reduced
abelian & right-pp -> armendariz  # abelian-pp-armendariz
gaussian -> armendariz  # gaussian-armendariz
armendariz -> left-mccoy  # armendariz-mccoy
armendariz -> right-mccoy  # armendariz-mccoy
commutative -> left-mccoy  # commutative-mccoy
commutative -> right-mccoy  # commutative-mccoy
"""

SKEW_EDGES = """\
alpha-rigid -> alpha-injective  # rigid-monomorphism
alpha-rigid -> reduced  # rigid-reduced
alpha-rigid -> alpha-semicommutative  # rigid-semicommutative
alpha-rigid -> alpha-armendariz  # rigid-armendariz
right-alpha-symmetric -> right-alpha-reversible  # symmetric-reversible
left-alpha-symmetric -> left-alpha-reversible  # symmetric-reversible
alpha-symmetric -> alpha-reversible  # symmetric-reversible
alpha-symmetric -> alpha-semicommutative  # symmetric-semicommutative
reduced & alpha-reversible -> alpha-semicommutative  # reduced-reversible-semicommutative
alpha-reversible & condition-c-alpha -> alpha-semicommutative  # reversible-c-semicommutative
alpha-reversible & alpha-compatible -> alpha-semicommutative  # reversible-compatible-semicommutative
alpha-compatible -> condition-c-alpha  # compatible-c
alpha-semicommutative & alpha-unital -> abelian  # unital-semicommutative-abelian
alpha-semicommutative & alpha-unital -> alpha-fixes-idempotents  # unital-fixes-idempotents
alpha-fixes-idempotents -> alpha-unital  # unital-fixes-idempotents
alpha-compatible & symmetric -> alpha-symmetric  # compatible-symmetric
alpha-compatible & alpha-symmetric -> symmetric  # compatible-symmetric
alpha-compatible & reversible -> alpha-reversible  # compatible-reversible
alpha-compatible & alpha-reversible -> reversible  # compatible-reversible
alpha-compatible & semicommutative -> alpha-semicommutative  # compatible-semicommutative
alpha-semicommutative & condition-c-alpha -> semicommutative  # c-semicommutative
"""

# tracked and reported, never counted as failures
OBSERVATIONS = """\
commutative & baer -> armendariz  # commutative-baer
"""


@dataclass(frozen=True)
class Edge:
    premises: tuple[str, ...]
    conclusion: str
    anchor: str

    def __str__(self) -> str:
        return f"{' & '.join(self.premises)} -> {self.conclusion}"

    def line(self) -> str:
        return f"{self} # {self.anchor}"


@dataclass
class ImplicationGraph:
    name: str
    edges: list[Edge]

    @property
    def nodes(self) -> list[str]:
        seen: dict[str, None] = {}
        for e in self.edges:
            for p in e.premises + (e.conclusion,):
                seen.setdefault(p, None)
        return list(seen)

    @property
    def skew(self) -> bool:
        return any(p.startswith(("alpha-", "right-alpha", "left-alpha", "condition-c"))
                   for p in self.nodes)

    def to_text(self) -> str:
        return "".join(e.line() + "\n" for e in self.edges)

    def is_acyclic(self) -> bool:
        # single-premise edges only; conjunctive edges cannot close a cycle alone
        adj: dict[str, list[str]] = {}
        for e in self.edges:
            if len(e.premises) == 1:
                adj.setdefault(e.premises[0], []).append(e.conclusion)
        state: dict[str, int] = {}

        def visit(u: str) -> bool:
            state[u] = 1
            for v in adj.get(u, []):
                if state.get(v) == 1 or (v not in state and not visit(v)):
                    return False
            state[u] = 2
            return True

        return all(visit(u) for u in list(adj) if u not in state)


def parse_graph(text: str, name: str = "custom") -> ImplicationGraph:
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body, _, anchor = raw.partition("#")
        body = body.strip()
        if not body:
            continue
        lhs, arrow, rhs = body.partition("->")
        if not arrow:
            raise ParseError(f"line {lineno}: expected '->'", len(lhs))
        premises = tuple(p.strip() for p in lhs.split("&"))
        conclusion = rhs.strip()
        for p in premises + (conclusion,):
            if p not in ALL_PROPERTIES:
                raise ParseError(f"line {lineno}: unknown property {p!r}", raw.find(p))
        if not anchor.strip():
            raise ParseError(f"line {lineno}: edge needs an anchor after '#'", len(raw))
        edges.append(Edge(premises, conclusion, anchor.strip()))
    return ImplicationGraph(name, edges)


def classical_graph() -> ImplicationGraph:
    return parse_graph(CLASSICAL_EDGES, "classical")


def skew_graph() -> ImplicationGraph:
    return parse_graph(SKEW_EDGES, "skew")


def observation_graph() -> ImplicationGraph:
    return parse_graph(OBSERVATIONS, "observations")


def named_graph(name: str) -> ImplicationGraph:
    graphs = {"classical": classical_graph, "skew": skew_graph,
              "observations": observation_graph}
    if name in graphs:
        return graphs[name]()
    try:
        with open(name) as fh:
            return parse_graph(fh.read(), name)
    except FileNotFoundError:
        raise ParseError(f"unknown graph {name!r}", 0) from None


# corpus --------------------------------------------------------------------

@dataclass
class CorpusEntry:
    ring: FiniteRing
    recipe: str
    kind: str
    classification: Classification
    skew: list[tuple[RingEndomorphism, Classification]] = field(default_factory=list)
    iso_class_id: str = ""
    rank: int = 0
    alphas: str = "auto"

    @property
    def label(self) -> str:
        return self.recipe

    def sort_key(self) -> tuple:
        return (self.ring.order, self.rank, self.iso_class_id, self.recipe)


@dataclass(frozen=True)
class CorpusItem:
    """What to build: a recipe plus which endomorphisms to pair it with."""

    recipe: str
    alphas: str = "auto"  # "auto", "none", or a comma list of id/zero/corner


def parse_corpus_spec(spec: str) -> list[CorpusItem]:
    """``order<=N``, ``library``, ``corner-alpha`` or ``default``, joined by ``+``;
    any other term is a single recipe."""
    items: list[CorpusItem] = []
    for term in spec.split("+"):
        term = term.strip()
        if term == "default":
            items += parse_corpus_spec("order<=8+library+corner-alpha")
        elif term.startswith("order<="):
            try:
                N = int(term[7:])
            except ValueError:
                raise ParseError(f"bad corpus term {term!r}", 7) from None
            for n in range(1, N + 1):
                items += [CorpusItem(R.label) for R in enumerate_unital_rings(n)]
        elif term == "library":
            items += [CorpusItem(str(r)) for r in library_recipes()]
        elif term == "corner-alpha":
            items.append(CorpusItem("lower(Zn:4,2)", "corner"))
        elif term:
            parse_recipe(term)
            items.append(CorpusItem(term))
    # merge duplicates at their first position
    merged: dict[str, list[str]] = {}
    for it in items:
        merged.setdefault(it.recipe, []).append(it.alphas)
    return [CorpusItem(rec, ",".join(dict.fromkeys(modes))) for rec, modes in merged.items()]


def _alphas_for(R: FiniteRing, mode: str) -> list[RingEndomorphism]:
    out: list[RingEndomorphism] = []
    for m in mode.split(","):
        if m == "none":
            continue
        if m == "auto":
            if R.order <= SKEW_ENUMERATION_CAP:
                out += enumerate_endomorphisms(R, cap=SKEW_ENUMERATION_CAP)
            else:
                out += [identity_endomorphism(R), zero_endomorphism(R)]
        elif m == "id":
            out.append(identity_endomorphism(R))
        elif m == "zero":
            out.append(zero_endomorphism(R))
        elif m == "corner":
            out.append(bottom_right_alpha(R))
    uniq: dict[tuple, RingEndomorphism] = {}
    for a in out:
        uniq.setdefault(a.map, a)
    return list(uniq.values())


def build_entry(item: CorpusItem, degree_bound: int | None = None,
                skew: bool = True) -> CorpusEntry:
    rec = parse_recipe(item.recipe)
    R = realize(rec)
    cls = classify(R, degree_bound)
    pairs = []
    if skew:
        for a in _alphas_for(R, item.alphas):
            pairs.append((a, classify_skew(R, a, degree_bound)))
    return CorpusEntry(R, item.recipe, rec.kind, cls, pairs, iso_class_id(R), additive_rank(R),
                       item.alphas)


def _build_entry_job(args):
    return build_entry(*args)


def build_corpus(items: Sequence[CorpusItem], workers: int = 1,
                 degree_bound: int | None = None, skew: bool = True) -> list[CorpusEntry]:
    jobs = [(it, degree_bound, skew) for it in items]
    if workers <= 1 or len(jobs) <= 1:
        return [build_entry(*j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_build_entry_job, jobs, chunksize=1))


# verification --------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    edge: Edge
    ring: str
    alpha: str | None
    witness: str

    def line(self) -> str:
        who = self.ring if self.alpha is None else f"{self.ring} alpha={self.alpha}"
        return f"VIOLATION {self.edge} [{self.edge.anchor}] on {who}: {self.witness}"


@dataclass
class EdgeStats:
    edge: Edge
    premise_true: int = 0
    violations: int = 0
    bounds: set = field(default_factory=set)


@dataclass
class VerificationReport:
    graph: str
    subjects: int
    stats: list[EdgeStats]
    violations: list[Violation]

    @property
    def ok(self) -> bool:
        return not self.violations

    def lines(self) -> list[str]:
        out = [f"graph {self.graph}: {len(self.stats)} edges over {self.subjects} subjects"]
        for s in self.stats:
            bound = f" bounded<={max(s.bounds)}" if s.bounds else ""
            out.append(f"  {s.edge} [{s.edge.anchor}]: premises hold on {s.premise_true}, "
                       f"violations {s.violations}{bound}")
        out += [v.line() for v in self.violations]
        out.append(f"{len(self.violations)} violations")
        return out


def _subjects(entries: Iterable[CorpusEntry], skew: bool):
    for e in entries:
        if not skew:
            yield e, None, e.classification.verdicts
        else:
            for a, c in e.skew:
                merged = dict(e.classification.verdicts)
                merged.update(c.verdicts)
                yield e, a, merged


def verify_implications(entries: Sequence[CorpusEntry],
                        graph: ImplicationGraph) -> VerificationReport:
    stats = [EdgeStats(e) for e in graph.edges]
    violations: list[Violation] = []
    count = 0
    for entry, alpha, verdicts in _subjects(entries, graph.skew):
        count += 1
        for s in stats:
            e = s.edge
            vs = [verdicts[p] for p in e.premises + (e.conclusion,)]
            for v in vs:
                if v.bounded:
                    s.bounds.add(v.property.degree_bound)
            if all(verdicts[p].holds for p in e.premises):
                s.premise_true += 1
                concl = verdicts[e.conclusion]
                if not concl.holds:
                    s.violations += 1
                    violations.append(Violation(
                        e, entry.label, alpha.describe() if alpha else None,
                        concl.witness.narrative))
    return VerificationReport(graph.name, count, stats, violations)


# strictness ----------------------------------------------------------------

@dataclass(frozen=True)
class StrictnessWitness:
    edge: Edge
    ring: str
    order: int
    alpha: str | None
    failing_premise: str
    witness: Verdict
    replayed: bool

    def line(self) -> str:
        who = self.ring if self.alpha is None else f"{self.ring} alpha={self.alpha}"
        return (f"{self.edge}: strict, witnessed by {who} (order {self.order}): "
                f"{self.edge.conclusion} holds, {self.failing_premise} fails "
                f"({self.witness.witness.narrative}); replay {'ok' if self.replayed else 'FAILED'}")


def search_strictness(entries: Sequence[CorpusEntry], edge: Edge,
                      skew: bool | None = None) -> StrictnessWitness | None:
    """Smallest corpus subject where the conclusion holds and some premise
    fails.  Ties break on additive rank, then isomorphism id."""
    if skew is None:
        skew = ImplicationGraph("", [edge]).skew
    best = None
    for entry, alpha, verdicts in _subjects(sorted(entries, key=CorpusEntry.sort_key), skew):
        if not verdicts[edge.conclusion].holds:
            continue
        # a premise that is undefined here (gaussian off commutative rings) separates nothing
        failing = [p for p in edge.premises
                   if not verdicts[p].holds and not verdicts[p].note.startswith("defined only")]
        if not failing:
            continue
        best = (entry, alpha, failing[0], verdicts[failing[0]])
        break
    if best is None:
        return None
    entry, alpha, prem, verdict = best
    R = entry.ring
    replay = replay_witness(R, verdict, alpha)
    # the conclusion is re-derived from the tables, not read from the cache
    again = check(R, edge.conclusion, alpha, degree_bound=entry.classification.degree_bound)
    replay = replay and again.holds
    return StrictnessWitness(edge, entry.label, R.order, alpha.describe() if alpha else None,
                             prem, verdict, replay)


def parse_edge(text: str) -> Edge:
    g = parse_graph(text if "#" in text else text + " # query")
    if len(g.edges) != 1:
        raise ParseError("expected exactly one edge", 0)
    return g.edges[0]


# DOT -----------------------------------------------------------------------

def to_dot(graph: ImplicationGraph, report: VerificationReport | None = None,
           strict: dict[str, StrictnessWitness | None] | None = None) -> str:
    """Verified edges solid, violated edges red and dashed, strict edges
    labelled with the separating ring, bounded edges marked with their bound."""
    stats = {str(s.edge): s for s in report.stats} if report else {}
    strict = strict or {}
    lines = [f'digraph "{graph.name}" {{', "  rankdir=TB;", '  node [shape=box];']
    for n in graph.nodes:
        lines.append(f'  "{n}";')
    for i, e in enumerate(graph.edges):
        s = stats.get(str(e))
        attrs = []
        labels = []
        if s is None:
            attrs.append("style=dotted")
        elif s.violations:
            attrs += ["color=red", "style=dashed"]
            labels.append(f"{s.violations} violations")
        else:
            attrs.append("style=solid")
        if s is not None and s.bounds:
            labels.append(f"≤{max(s.bounds)}")
        w = strict.get(str(e))
        if w is not None:
            labels.append(w.ring if w.alpha is None else f"{w.ring} alpha={w.alpha}")
        if labels:
            attrs.append('label="' + "; ".join(labels).replace('"', "'") + '"')
        attr = ", ".join(attrs)
        if len(e.premises) == 1:
            lines.append(f'  "{e.premises[0]}" -> "{e.conclusion}" [{attr}];')
        else:
            j = f"and{i}"
            lines.append(f'  "{j}" [shape=point, label=""];')
            for p in e.premises:
                lines.append(f'  "{p}" -> "{j}" [arrowhead=none];')
            lines.append(f'  "{j}" -> "{e.conclusion}" [{attr}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
