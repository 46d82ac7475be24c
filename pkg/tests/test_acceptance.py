"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run standalone with ``python tests/test_acceptance.py`` or under pytest.
Every corpus is seeded, so reruns are reproducible.
"""

import random
import sys
import time
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

import pytest

from tropic import (MAX_PLUS_Q, ZERO, Vector, chebyshev, consistify, conjugate, distance_to_span,
                    general_solution, identity, is_independent, mat_leq, mat_vec,
                    principal_solution, pseudo_solve, reduce_to_independent, rho, row_vec, solve,
                    systems_equivalent, vec_leq, vec_row, verify)
from tropic.cli import run
from tropic.linalg import from_columns
from tropic.oracle import (enumerate_minimal_generators, grid_min_distance,
                           is_independent_by_definition, random_instance, random_scalar)

Q = MAX_PLUS_Q
FIXTURES = Path(__file__).parent / "fixtures"
RESULTS = {}


def record(k, ok, detail):
    RESULTS[k] = ok
    line = f"criterion {k:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    print(line, flush=True)
    return ok


def finite_vector(rng, m, lo=-5, hi=5, den=2):
    return Vector(Q, tuple(Fraction(rng.randint(lo * den, hi * den), den) for _ in range(m)))


def sparse_vector(rng, m, density=0.75):
    return Vector(Q, tuple(random_scalar(rng, density) for _ in range(m)))


@lru_cache(maxsize=None)
def corpus():
    """1,000 instances with m, n in 1..4, density in [0.5, 1], entries in [-5, 5]."""
    out = []
    for i in range(1000):
        rng = random.Random(i)
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        out.append(random_instance(rng, m, n, density=rng.uniform(0.5, 1.0)))
    return tuple(out)


# 1 -------------------------------------------------------------------------------

def criterion_1():
    start = time.perf_counter()
    bad = 0
    for A, d in corpus():
        delta = distance_to_span(A, d).delta
        res = grid_min_distance(A, d)
        if not (res.distance == delta and not res.grid_distance < delta):
            bad += 1
    elapsed = time.perf_counter() - start
    ok = bad == 0 and elapsed < 60
    return record(1, ok, f"grid oracle vs residual: {bad} mismatches / 1000, {elapsed:.1f}s (< 60s)")


# 2 -------------------------------------------------------------------------------

def criterion_2():
    bad = 0
    for A, d in corpus():
        if solve(A, d).solvable != verify(A, d, principal_solution(A, d)):
            bad += 1
    return record(2, bad == 0, f"verdict vs principal-vector check: {bad} disagreements / 1000")


# 3 -------------------------------------------------------------------------------

def criterion_3():
    bad = 0
    for i in range(1000):
        rng = random.Random(30_000 + i)
        m, n = rng.randint(2, 4), rng.randint(1, 4)
        A, _ = random_instance(rng, m, n, density=rng.uniform(0.5, 1.0))
        d = list(finite_vector(rng, m).entries)
        for k in rng.sample(range(m), rng.randint(1, m - 1)):
            d[k] = ZERO
        d = Vector(Q, tuple(d))
        x = sparse_vector(rng, n)
        a_hat = consistify(A, d).a_hat
        if rho(mat_vec(A, x), d) != rho(mat_vec(a_hat, x), d):
            bad += 1
    return record(3, bad == 0, f"rho(Ax,d) = rho(A_hat x,d): {bad} mismatches / 1000")


# 4 -------------------------------------------------------------------------------

def criterion_4():
    fam_bad = sol_bad = cover_bad = boxes = 0
    for i in range(300):
        rng = random.Random(40_000 + i)
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        A, _ = random_instance(rng, m, n, density=rng.uniform(0.5, 1.0))
        while True:
            x0 = sparse_vector(rng, n)
            d = mat_vec(A, x0)
            if not d.is_zero():
                break
        gen = general_solution(A, d)
        if gen.index_sets != enumerate_minimal_generators(A, d):
            fam_bad += 1
        for box in gen.family:
            boxes += 1
            points = [box.lower_corner(Q), box.upper_corner(Q)]
            points += [box.sample(Q, rng) for _ in range(10)]
            sol_bad += sum(not verify(A, d, x) for x in points)
        if not any(box.contains(x0) for box in gen.family):
            cover_bad += 1
    ok = fam_bad == sol_bad == cover_bad == 0
    return record(4, ok, f"family mismatches {fam_bad}, bad box points {sol_bad} "
                         f"({boxes} boxes), x0 uncovered {cover_bad} / 300")


# 5 -------------------------------------------------------------------------------

def criterion_5():
    found = skipped_infinite = opt_bad = probe_bad = 0
    seed = 50_000
    while found < 300:
        rng = random.Random(seed)
        seed += 1
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        A, d = random_instance(rng, m, n, density=rng.uniform(0.5, 1.0))
        if solve(A, d).solvable:
            continue
        delta = distance_to_span(A, d).delta
        if delta.is_infinite:
            skipped_infinite += 1  # no pseudo-solution exists
            continue
        found += 1
        x = pseudo_solve(A, d)
        if rho(mat_vec(A, x), d) != delta:
            opt_bad += 1
        base = [v if v is not ZERO else Fraction(-10) for v in x.entries]
        for p in range(1000):
            if p % 2:
                probe = finite_vector(rng, n, -12, 12, 4)
            else:
                probe = Vector(Q, tuple(b + Fraction(rng.randint(-8, 8), 4) for b in base))
            if rho(mat_vec(A, probe), d) < delta:
                probe_bad += 1
    ok = opt_bad == probe_bad == 0
    return record(5, ok, f"pseudo-solution misses {opt_bad} / 300, probes beating delta "
                         f"{probe_bad} / 300000 ({skipped_infinite} infinite-delta draws skipped)")


# 6 -------------------------------------------------------------------------------

def dependence_instances():
    """300 matrices, every other one with an extra column built from the others."""
    out = []
    for i in range(300):
        rng = random.Random(60_000 + i)
        m, n = rng.randint(1, 4), rng.randint(1, 3)
        A, _ = random_instance(rng, m, n, density=rng.uniform(0.5, 1.0))
        cols = [c.entries for c in A.columns()]
        if i % 2:
            extra = mat_vec(A, sparse_vector(rng, n))
            if not extra.is_zero():
                cols.insert(rng.randint(0, n), extra.entries)
        out.append(from_columns(Q, cols))
    return out


def criterion_6():
    matrices = [A for A, _ in corpus()] + dependence_instances()
    agree_bad = dependent = 0
    for A in matrices:
        indep = is_independent(A)
        dependent += not indep
        if indep != is_independent_by_definition(A):
            agree_bad += 1
    red_bad = 0
    for A in dependence_instances():
        B = A.take_columns(reduce_to_independent(A).kept)
        if not (is_independent(B) and systems_equivalent(A, B)):
            red_bad += 1
    ok = agree_bad == red_bad == 0
    return record(6, ok, f"independence vs definition: {agree_bad} mismatches / {len(matrices)} "
                         f"({dependent} dependent); reduction failures {red_bad} / 300")


# 7 -------------------------------------------------------------------------------

def criterion_7():
    bad = 0
    for i in range(1000):
        rng = random.Random(70_000 + i)
        m = rng.randint(1, 6)
        a, b = finite_vector(rng, m), finite_vector(rng, m)
        r = rho(a, b)
        if r != rho(b, a) or not rho(a, a).is_one() or not Q.leq(Q.one, r.value):
            bad += 1
        if r.value != chebyshev(a, b):
            bad += 1
    return record(7, bad == 0, f"symmetry, identity, lower bound, Chebyshev: {bad} failures / 1000")


# 8 -------------------------------------------------------------------------------

def criterion_8():
    ident_bad = anti_bad = 0
    for i in range(1000):
        rng = random.Random(80_000 + i)
        m = rng.randint(1, 6)
        x = finite_vector(rng, m)
        xc = conjugate(x)
        if row_vec(xc, x) != Q.one or not mat_leq(identity(Q, m), vec_row(x, xc)):
            ident_bad += 1
        y = Vector(Q, tuple(v + Fraction(rng.randint(0, 8), 2) for v in x.entries))
        assert vec_leq(x, y)
        if not vec_leq(conjugate(y), conjugate(x)):
            anti_bad += 1
    ok = ident_bad == anti_bad == 0
    return record(8, ok, f"x^-x = 1 and xx^- >= I: {ident_bad} failures; antitonicity: "
                         f"{anti_bad} failures / 1000")


# 9 -------------------------------------------------------------------------------

WORKED = [
    ("single_column", "distance"),
    ("two_by_two", "solve"),
    ("consistify", "consistify"),
    ("family", "general"),
    ("independence_pair", "independent"),
    ("reduction", "reduce"),
]


def criterion_9():
    bad = []
    for name, command in WORKED:
        out = run([command, str(FIXTURES / f"{name}.trop")])
        expected = (FIXTURES / f"{name}.{command}.out").read_text()
        if out.render() != expected:
            bad.append(name)
    return record(9, not bad, f"CLI text reports reproduced: {len(WORKED) - len(bad)} / {len(WORKED)}"
                              + (f" (diff: {', '.join(bad)})" if bad else ""))


# 10 ------------------------------------------------------------------------------

def criterion_10():
    inside = run(["solve", str(FIXTURES / "span_inside.trop")])
    outside = run(["solve", str(FIXTURES / "span_outside.trop")])
    ok = (inside.code == 0 and inside.report["residual_is_one"] == "true"
          and outside.code == 1 and outside.report["verdict"] == "none"
          and outside.report["residual_is_one"] == "false")
    return record(10, ok, f"d inside span: {inside.report['verdict']} (residual "
                          f"{inside.report['residual']}); d outside: {outside.report['verdict']} "
                          f"(residual {outside.report['residual']})")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda f: f.__name__)
def test_criterion(criterion, capsys):
    with capsys.disabled():
        print()
        ok = criterion()
    assert ok


if __name__ == "__main__":
    passed = sum(bool(c()) for c in CRITERIA)
    print(f"{passed}/{len(CRITERIA)} criteria passed")
    sys.exit(0 if passed == len(CRITERIA) else 1)
