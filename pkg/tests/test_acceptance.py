"""Acceptance criteria, one test per criterion.

Each criterion records a PASS/FAIL line in ``RESULTS``; the conftest hook
prints them after the pytest summary, and running this file as a script
prints them directly.  All thresholds are pinned below.
"""

from __future__ import annotations

import functools
import itertools
import subprocess
import sys
import time

from _random_scenarios import random_subcharts

from orbicheck.cli.evaluate import build_subchart
from orbicheck.cli.main import BUILTIN, builtin_text
from orbicheck.cli.scenario import parse_scenario
from orbicheck.exactnum import CycMatrix, rotation
from orbicheck.groups import direct_product, find_complement, find_sections, generate, subgroups
from orbicheck.orbicore import (
    Chart,
    LinearSubspace,
    Ray,
    Subchart,
    embeddability,
    enumerate_equivariant_homs,
    isotropy_data,
    recognize_suborbifold,
    sampling_oracle,
    setwise_stabilizer,
    span_shape,
)
from orbicheck.orbicore.charts import graph_image

RUNTIME_LIMIT_S = 10.0
RANDOM_SCENARIOS = 250
MIN_RANDOM_SCENARIOS = 200
RANDOM_SEED = 20261015
ORACLE_TRIALS = 100
ORACLE_SEED = 0
MAX_GROUP_ORDER = 16

GOLDEN_ROWS = [
    ("1", "Yes", "Yes", "Yes", "Yes", "Yes"),
    ("2", "Yes", "Yes", "Yes", "Yes", "Yes"),
    ("3", "Yes", "No", "Yes", "Yes", "Yes"),
    ("4", "Yes", "No", "Yes", "Yes", "Yes"),
    ("5", "Yes", "Yes", "Yes", "No", "No"),
    ("6", "Yes", "No", "No", "Yes", "No"),
    ("7", "Yes", "No", "Yes", "No", "No"),
    ("8", "No", "—", "—", "—", "No"),
]
HEADER = "| Example | Suborbifold | Full | Saturated | Split | Image of Orbifold Embedding |"

RESULTS: dict[int, str] = {}


def record(n: int, ok: bool, detail: str) -> bool:
    RESULTS[n] = f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}"
    print(RESULTS[n])
    return ok


# ---------------------------------------------------------------- corpora

@functools.lru_cache(maxsize=None)
def builtin_subcharts() -> tuple[Subchart, ...]:
    """Every subchart of the built-in scenarios, recognition hits included."""
    out = []
    for name in BUILTIN:
        scn = parse_scenario(builtin_text(name), name)
        out.extend(build_subchart(scn, d.name) for d in scn.subcharts)
        for r in scn.recognitions:
            out.extend(sub for sub, _ in recognize_suborbifold(scn.charts[r.chart], r.target, r.gamma_p))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def random_corpus() -> tuple[Subchart, ...]:
    return tuple(random_subcharts(RANDOM_SCENARIOS, RANDOM_SEED))


@functools.lru_cache(maxsize=None)
def verdicts() -> tuple:
    return tuple((sub, embeddability(sub)) for sub in builtin_subcharts() + random_corpus())


def recognition_candidates() -> list[Subchart]:
    """Every (line, lambda) pair the ray recognizer inspects for p = 2..8."""
    out = []
    for p in range(2, 9):
        chart = Chart(generate([rotation(p)]))
        shape = span_shape([[1, 0]], 2)
        stab = setwise_stabilizer(chart, shape)
        sg, idx = chart.group.subgroup_group(stab)
        out.extend(Subchart(chart, shape, frozenset(idx[i] for i in h)) for h in subgroups(sg))
    return out


# ---------------------------------------------------------------- criteria

def criterion_1() -> bool:
    start = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "orbicheck.cli.main", "examples"],
                          capture_output=True, text=True, check=False)
    elapsed = time.perf_counter() - start
    lines = proc.stdout.splitlines()
    rows = [tuple(c.strip() for c in line.strip("|").split("|")) for line in lines[2:]]
    ok = (proc.returncode == 0 and lines[:1] == [HEADER] and rows == GOLDEN_ROWS
          and elapsed < RUNTIME_LIMIT_S)
    return record(1, ok, f"golden table {len(rows)}/8 rows match={rows == GOLDEN_ROWS}, "
                         f"exit {proc.returncode}, {elapsed:.2f}s < {RUNTIME_LIMIT_S}s")


def criterion_2() -> bool:
    def load(scenario, sub):
        scn = parse_scenario(builtin_text(f"{scenario}.yaml"))
        s = build_subchart(scn, sub)
        return s, embeddability(s)

    s5, v5 = load("example-5", "axis")
    s7, v7 = load("example-7", "diagonal_Z4")
    s3, v3 = load("example-3", "diagonal")
    g3 = s3.chart.group
    checks = {
        "ex5 orders": v5.isotropy.orders == {"omega": 2, "lambda": 4, "gamma_p": 2},
        "ex5 names": v5.isotropy.names == {"omega": "Z2", "lambda": "Z4", "gamma_p": "Z2"},
        "ex5 non-split": not v5.split,
        "ex7 orders": (v7.isotropy.orders["omega"], v7.isotropy.orders["gamma_p"]) == (2, 2),
        "ex7 non-split saturated": (not v7.split) and v7.saturated,
        "ex3 omega trivial": v3.isotropy.orders["omega"] == 1,
        "ex3 lambda diagonal Z2": v3.isotropy.names["lambda"] == "Z2" and {
            g3.elements[i] for i in s3.lam} == {CycMatrix.identity(2), CycMatrix.diag([-1, -1])},
        "ex3 gamma_p Z2": v3.isotropy.names["gamma_p"] == "Z2",
        "ex3 split saturated": v3.split and v3.saturated,
    }
    failed = [k for k, ok in checks.items() if not ok]
    return record(2, not failed, f"{len(checks) - len(failed)}/{len(checks)} isotropy checks"
                                 + (f", failed: {failed}" if failed else ""))


def criterion_3() -> bool:
    data = verdicts()
    n_random = len(random_corpus())
    orders_ok = all(sub.chart.group.order <= MAX_GROUP_ORDER for sub in random_corpus())
    violations = 0
    for _, v in data:
        o = v.isotropy.orders
        if v.embeddable_topologically != v.saturated:
            violations += 1
        if v.embeddable_completely != (v.saturated and v.split):
            violations += 1
        if v.full and not v.saturated:
            violations += 1
        if o["lambda"] != o["omega"] * o["gamma_p"]:
            violations += 1
    ok = violations == 0 and n_random >= MIN_RANDOM_SCENARIOS and orders_ok
    return record(3, ok, f"{len(data)} scenarios ({len(builtin_subcharts())} built-in + {n_random} "
                         f"random, |G| <= {MAX_GROUP_ORDER}: {orders_ok}), {violations} violations")


def criterion_4() -> bool:
    data = verdicts()
    disagreements = sum(
        1 for sub, v in data
        if sampling_oracle(sub, trials=ORACLE_TRIALS, seed=ORACLE_SEED)[0] != v.saturated)
    unsaturated = sum(1 for _, v in data if not v.saturated)
    return record(4, disagreements == 0,
                  f"{len(data)} scenarios ({unsaturated} unsaturated), {ORACLE_TRIALS} trials, "
                  f"seed {ORACLE_SEED}, {disagreements} disagreements")


def criterion_5() -> bool:
    isos = [v.isotropy for _, v in verdicts()]
    isos += [isotropy_data(sub) for sub in recognition_candidates()]
    disagreements = 0
    non_split = 0
    for iso in isos:
        has_complement = find_complement(iso.lam_group, iso.omega_local) is not None
        has_section = bool(find_sections(iso.projection, iso.omega_local))
        disagreements += has_complement != has_section
        non_split += not has_complement
    return record(5, disagreements == 0,
                  f"{len(isos)} (lambda, omega) pairs ({non_split} non-split), "
                  f"{disagreements} disagreements")


def _theta_checks(sub: Subchart, v) -> bool:
    g = sub.chart.group
    iso = v.isotropy
    theta = v.embedding.theta
    images = [theta(k) for k in range(iso.gamma_p.order)]
    if len(set(images)) != len(images):
        return False
    for local, l in enumerate(iso.lam_index):
        m = g.elements[theta(iso.projection(local))]
        lam = g.elements[l]
        if isinstance(sub.shape, LinearSubspace):
            if any(m @ b != lam @ b for b in sub.shape.space.basis):
                return False
        elif graph_image(m, sub.shape.poly) != graph_image(lam, sub.shape.poly):
            return False
    return True


def criterion_6() -> bool:
    embeddable = [(sub, v) for sub, v in verdicts() if v.embeddable_completely]
    failures = sum(1 for sub, v in embeddable if v.embedding is None or not _theta_checks(sub, v))
    return record(6, failures == 0 and bool(embeddable),
                  f"{len(embeddable)} embeddable scenarios, {failures} equivariance/injectivity failures")


def criterion_7() -> bool:
    q = generate([CycMatrix([[-1]])])
    src = Chart(q)
    dst = Chart(direct_product(direct_product(q, q), q))
    lift = CycMatrix([[1], [0], [0]])
    gamma = q.index(CycMatrix([[-1]]))
    # brute-force oracle over the 8 maps Z2 -> Z2^3
    brute = 0
    for signs in itertools.product([1, -1], repeat=3):
        image = CycMatrix.diag(list(signs))
        brute += (image @ image).is_identity() and image @ lift == lift @ CycMatrix([[-1]])
    homs = enumerate_equivariant_homs(src, dst, lift)
    gd = dst.group
    flips = {gd.elements[h(gamma)] for h in homs}
    both = {CycMatrix.diag([-1, 1, 1]), CycMatrix.diag([-1, -1, -1])} <= flips
    reflect = Chart(generate([CycMatrix.diag([1, -1])]))
    identity_homs = enumerate_equivariant_homs(reflect, reflect, CycMatrix.identity(2))
    ok = brute == 4 and len(homs) == 4 and both and len(identity_homs) == 1
    return record(7, ok, f"brute force {brute}, enumerated {len(homs)}, both named homs present: "
                         f"{both}, identity lift homs {len(identity_homs)}")


def criterion_8() -> bool:
    counts = {p: len(recognize_suborbifold(Chart(generate([rotation(p)])), Ray((1, 0)), "Z2"))
              for p in (2, 3, 4, 5, 7, 8)}
    ok = all(counts[p] == 0 for p in (3, 5, 7)) and all(counts[p] > 0 for p in (2, 4, 8))
    return record(8, ok, "candidates per p: " + ", ".join(f"p={p}: {n}" for p, n in counts.items()))


# ---------------------------------------------------------------- pytest entry points

def test_criterion_1_golden_table():
    assert criterion_1()


def test_criterion_2_isotropy_orders():
    assert criterion_2()


def test_criterion_3_verdict_consistency():
    assert criterion_3()


def test_criterion_4_oracle_agreement():
    assert criterion_4()


def test_criterion_5_split_deciders_agree():
    assert criterion_5()


def test_criterion_6_embedding_construction():
    assert criterion_6()


def test_criterion_7_equivariant_homomorphisms():
    assert criterion_7()


def test_criterion_8_ray_recognition():
    assert criterion_8()


if __name__ == "__main__":
    results = [f() for f in (criterion_1, criterion_2, criterion_3, criterion_4,
                             criterion_5, criterion_6, criterion_7, criterion_8)]
    sys.exit(0 if all(results) else 1)
