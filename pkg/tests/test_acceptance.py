"""Acceptance gate: criteria 1-10, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py`` (lines are printed even
without ``-s``) or ``python3 tests/test_acceptance.py``.
"""

import subprocess
import sys
import time
from functools import lru_cache

import numpy as np
import pytest

import oracles as O
from test_ring import CORRUPTED

from ringatlas.atlas import (build_corpus, classical_graph, parse_corpus_spec, parse_graph,
                             skew_graph, verify_implications)
from ringatlas.constructions import cyclic_ring, dorroh_ring, matrix_ring
from ringatlas.enumeration import enumerate_unital_rings
from ringatlas.errors import AxiomViolation
from ringatlas.predicates import (PropertyId, check_elementwise, check_polynomial, check_skew,
                                  replay_witness)
from ringatlas.recipes import bottom_right_alpha, parse_recipe, realize
from ringatlas.replicate import example_constant_diagonal, example_dorroh


@pytest.fixture
def report(capsys):
    def emit(n, ok, detail, seconds, limit=None):
        budget = f" (limit {limit:g} s)" if limit else ""
        line = f"criterion {n}: {'PASS' if ok else 'FAIL'} {detail} [{seconds:.2f} s{budget}]"
        with capsys.disabled():
            print("\n" + line)
        assert ok, line
    return emit


@lru_cache(maxsize=None)
def classical_corpus():
    t = time.perf_counter()
    entries = build_corpus(parse_corpus_spec("order<=8+library"), skew=False)
    return entries, time.perf_counter() - t


def _edges(graph, wanted):
    text = "".join(e.line() + "\n" for e in graph.edges if e.anchor in wanted)
    return parse_graph(text, graph.name)


def test_criterion_1_validator(report):
    t = time.perf_counter()
    accepted = [cyclic_ring(n) for n in range(1, 13)]
    accepted += [matrix_ring(cyclic_ring(2), 2, "upper-triangular"),
                 matrix_ring(cyclic_ring(2), 2, "full")]
    accepted += [dorroh_ring(m) for m in range(0, 4)]
    kinds = []
    for kind, make in CORRUPTED.items():
        A, M, edits = make()
        A = np.array(A)
        for _, (i, j, v) in edits.items():
            A[i, j] = v
        try:
            from ringatlas.ring import validate_ring
            validate_ring(len(A), A, M)
            kinds.append((kind, None))
        except AxiomViolation as e:
            kinds.append((kind, e.kind))
    dt = time.perf_counter() - t
    ok = len(accepted) == 18 and all(k == got for k, got in kinds) and len(kinds) >= 6 and dt < 1
    report(1, ok, f"accepted {len(accepted)} rings, rejected {len(kinds)} corrupted tables "
                  f"with kinds {', '.join(g or 'none' for _, g in kinds)}", dt, 1)


def _expected_size():
    from ringatlas.constructions import library_recipes
    return sum(len(enumerate_unital_rings(n)) for n in range(1, 9)) + len(library_recipes())


def test_criterion_2_chain(report):
    entries, build = classical_corpus()
    t = time.perf_counter()
    r = verify_implications(entries, _edges(classical_graph(), {"chain"}))
    dt = build + time.perf_counter() - t
    report(2, r.ok and r.subjects == _expected_size() and dt < 300,
           f"chain edges over {r.subjects} rings (order <= 8 plus library): "
           f"{len(r.violations)} violations", dt, 300)


def test_criterion_3_strictness(report):
    t = time.perf_counter()
    z4 = cyclic_ring(4)
    z4_ok = check_elementwise(z4, "symmetric").holds and not check_elementwise(z4, "reduced").holds
    t2 = realize(parse_recipe("tri(Zn:2,2)"))
    chain = ["abelian", "semicommutative", "reversible", "symmetric", "reduced"]
    t2_verdicts = [check_elementwise(t2, p) for p in chain]
    t2_ok = not any(v.holds for v in t2_verdicts) and all(replay_witness(t2, v) for v in t2_verdicts)
    tq = time.perf_counter()
    q8 = realize(parse_recipe("gring(Zn:2,Q8)"))
    rev, sym = check_elementwise(q8, "reversible"), check_elementwise(q8, "symmetric")
    q8_time = time.perf_counter() - tq
    q8_ok = rev.holds and not sym.holds and replay_witness(q8, sym) and q8_time < 60
    dt = time.perf_counter() - t
    report(3, z4_ok and t2_ok and q8_ok,
           f"Z4 symmetric & not reduced: {z4_ok}; T2(Z2) fails abelian..reduced: {t2_ok}; "
           f"Z2[Q8] reversible & not symmetric: {q8_ok} ({q8.order} elements, "
           f"{q8_time:.2f} s)", dt, 60)


def test_criterion_4_regular_and_pp(report):
    entries, _ = classical_corpus()
    t = time.perf_counter()
    r1 = verify_implications(entries, _edges(classical_graph(), {"commutative-regular-reduced"}))
    checked = bad = 0
    for e in entries:
        c = e.classification
        if c.holds("abelian") and c.holds("right-pp"):
            checked += 1
            reduced = check_elementwise(e.ring, "reduced").holds
            arm = check_polynomial(e.ring, PropertyId("armendariz", 2)).holds
            bad += not (reduced and arm)
    dt = time.perf_counter() - t
    report(4, r1.ok and bad == 0,
           f"commutative & regular -> reduced: {len(r1.violations)} violations; "
           f"abelian & right p.p. -> reduced -> armendariz (D=2) on {checked} rings: "
           f"{bad} violations", dt)


def test_criterion_5_constant_diagonal(report):
    t = time.perf_counter()
    rep = example_constant_diagonal()
    R4 = realize(parse_recipe("cdiag(Zn:2,4)"))
    tw = time.perf_counter()
    v = check_polynomial(R4, PropertyId("armendariz", 1))
    search = time.perf_counter() - tw
    independent = False
    if not v.holds:
        f, g = v.witness.get("f"), v.witness.get("g")
        i, j = v.witness.get("i"), v.witness.get("j")
        prod = O.mul_skew(R4, list(f), list(g), list(range(R4.order)))
        independent = all(c == R4.zero for c in prod) and R4.mul[f[i], g[j]] != R4.zero
    dt = time.perf_counter() - t
    failed = [f"{r.subject} {r.check}" for r in rep.rows if not r.ok]
    report(5, rep.ok and independent and search < 600,
           f"R1..R3 armendariz (D=2), R4 not armendariz (D=1) with witness "
           f"{v.witness.short(R4) if v.witness else None} replayed independently: {independent}; "
           f"R1..R4 left/right McCoy (D=D'=2); R4 search {search:.2f} s"
           + (f"; failing rows {failed}" if failed else ""), dt, 600)


def test_criterion_6_nonunital_alpha(report):
    t = time.perf_counter()
    R = realize(parse_recipe("lower(Zn:4,2)"))
    a = bottom_right_alpha(R)
    semi = check_skew(R, a, "alpha-semicommutative").holds
    abelian = check_elementwise(R, "abelian").holds
    dt = time.perf_counter() - t
    report(6, (not a.unital) and semi and not abelian and dt < 1,
           f"alpha unital={a.unital}, alpha-semicommutative={semi}, abelian={abelian}", dt, 1)


def test_criterion_7_skew_suite(report):
    t = time.perf_counter()
    entries = build_corpus(parse_corpus_spec("order<=8"), skew=True)
    r = verify_implications(entries, skew_graph())
    dt = time.perf_counter() - t
    report(7, r.ok and dt < 600,
           f"{len(r.stats)} skew edges over {r.subjects} (ring, endomorphism) pairs: "
           f"{len(r.violations)} violations", dt, 600)


def test_criterion_8_dorroh(report):
    t = time.perf_counter()
    rep = example_dorroh()
    note = " ".join(rep.notes)
    ok = rep.ok and "finite truncation is Baer" in note and "infinite" in note
    dt = time.perf_counter() - t
    report(8, ok, f"{len(rep.rows)} checks on S1..S3 and their truncations; note: {note}", dt)


def test_criterion_9_enumeration_oracle(report):
    t = time.perf_counter()
    naive = len(O.naive_unital_rings([O.cyclic_add(4), O.klein_add()]))
    ours = len(enumerate_unital_rings(4))
    primes = {p: (len(O.naive_unital_rings([O.cyclic_add(p)])), len(enumerate_unital_rings(p)))
              for p in (2, 3, 5, 7)}
    dt = time.perf_counter() - t
    ok = naive == ours == 4 and all(v == (1, 1) for v in primes.values())
    report(9, ok, f"order 4: oracle {naive}, enumerator {ours}; primes (oracle, enumerator) "
                  f"{primes}", dt)


COMMANDS = [
    ["classify", "--ring", "lower(Zn:4,2)"],
    ["verify", "--graph", "skew", "--corpus", "default"],
    ["search", "--graph", "classical", "--corpus", "default"],
]


def _cli(args):
    out = subprocess.run([sys.executable, "-m", "ringatlas.cli", *args],
                         capture_output=True, check=False)
    return out.returncode, out.stdout


def test_criterion_10_determinism(report):
    t = time.perf_counter()
    diffs = []
    for cmd in COMMANDS:
        runs = {w: _cli(cmd + ["--workers", str(w)]) for w in (1, 4, 8)}
        runs["repeat"] = _cli(cmd + ["--workers", "1"])
        base = runs[1]
        if base[0] != 0 or not base[1]:
            diffs.append(f"{cmd[0]} exit {base[0]}")
        diffs += [f"{cmd[0]} workers={w}" for w, r in runs.items() if r != base]
    dt = time.perf_counter() - t
    report(10, not diffs, "classify, verify, search byte-identical across repeated runs and "
                          "workers 1, 4, 8" + (f"; differing: {diffs}" if diffs else ""), dt)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
