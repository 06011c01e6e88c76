"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line."""
import random
import time
from itertools import product

import pytest

from oracles import convex_delta
from rigtrop import reference_data as ref
from rigtrop.boxball import asymptotic_solitons, energy_Ers, evolve_T1inf, parse_state, render, state_to_path
from rigtrop.crystals import apply_R_permutation, combinatorial_R, energy_H, kashiwara_tensor
from rigtrop.errors import InvalidCylindricShape
from rigtrop.loopsym import (
    LoopPolynomial,
    cell_transfer_positivity,
    cylindric_loop_schur,
    elementary_e,
    invariance_check,
    kappa_poly,
    loop_schur,
    noncrossing_generating_function,
    tau_poly,
)
from rigtrop.paths import all_paths, random_paths
from rigtrop.rigged import Q, RiggedConfiguration, phi, phi_inverse, phi_trace, rc_kashiwara
from rigtrop.suites import check_ist, suite_tables
from rigtrop.tableaux import Partition, SkewShape, build_cylindric_shape, conjugate
from rigtrop.tropical import (
    conjectured_shape,
    energy_formula_trop,
    first_shape_theorem,
    lambda_shapes,
    partition_from_convex,
    soliton_count_bound,
)

GRID = [(n, m) for n in (2, 3, 4) for m in (1, 2, 3, 4)]
SETUP = {}  # seconds spent computing phi for the shared grids


@pytest.fixture(scope="module")
def grid():
    """(n, path, phi(path)) over n in {2,3,4}, m <= 4, widths <= 2."""
    t = time.perf_counter()
    out = [(n, p, phi(p, n)) for n, m in GRID for p in all_paths(n, m, 2)]
    SETUP["grid"] = time.perf_counter() - t
    return out


@pytest.fixture(scope="module")
def random_grid():
    """1000 seeded paths with widths <= 4, spread over the same (n, m) grid."""
    t = time.perf_counter()
    out = []
    for k, (n, m) in enumerate(GRID):
        count = 1000 // len(GRID) + (k < 1000 % len(GRID))
        out += [(n, p, phi(p, n)) for p in random_paths(n, m, 4, count, seed=1000 + k)]
    assert len(out) == 1000
    SETUP["random"] = time.perf_counter() - t
    return out


def levels(d):
    return tuple(tuple(d.get(a, ())) for a in sorted(d))


def test_01_golden_boxball(record):
    t = time.perf_counter()
    state = parse_state(ref.BOXBALL_STATES[0])
    lines = []
    for _ in range(8):
        lines.append(render(state))
        state = evolve_T1inf(state, 4)
    elapsed = time.perf_counter() - t
    ok = tuple(lines) == ref.BOXBALL_STATES and elapsed < 1
    assert record(1, ok, f"8 states match, {elapsed:.3f}s")


def test_02_golden_energy(record):
    t = time.perf_counter()
    ok = energy_H(ref.R_LEFT, ref.R_RIGHT) == 1 and combinatorial_R(ref.R_LEFT, ref.R_RIGHT) == ref.R_IMAGE
    elapsed = time.perf_counter() - t
    assert record(2, ok and elapsed < 1, f"H = 1 and R-image match, {elapsed:.3f}s")


def test_03_golden_bijection_steps(record):
    t = time.perf_counter()
    trace = phi_trace(ref.PHI_PATH, 4)
    ok = len(trace) == 5
    for rc, (nu0, want) in zip(trace[1:], ref.PHI_STEPS):
        ok &= rc.nu0 == Partition(sorted(nu0, reverse=True))
        for a, strings in want.items():
            ok &= sorted((l, rc.vacancy(a, l), j) for l, j in rc.level(a)) == sorted(strings)
    elapsed = time.perf_counter() - t
    assert record(3, ok and elapsed < 1, f"4 steps with vacancies and riggings, {elapsed:.3f}s")


def test_04_golden_rc_operators(record):
    rc = RiggedConfiguration(4, ref.RC_EXAMPLE["nu0"], levels(ref.RC_EXAMPLE["strings"]))
    ok = (
        rc_kashiwara("f", 1, rc) == RiggedConfiguration(4, rc.nu0, levels(ref.RC_F1))
        and rc_kashiwara("f", 2, rc) is None
        and rc_kashiwara("f", 3, rc) == RiggedConfiguration(4, rc.nu0, levels(ref.RC_F3))
    )
    assert record(4, ok, "f1, f2 = null, f3")


def test_05_tables(record):
    t = time.perf_counter()
    ok, detail = suite_tables()
    names = {"n=3 tables", "n=4 table"}
    elapsed = time.perf_counter() - t
    failed = set(detail["failed"]) & names
    assert record(5, not failed and elapsed < 10, f"n=3 (2 families) and n=4 tables, {elapsed:.2f}s")


def test_06_first_shape_sweep(record, grid, random_grid):
    t = time.perf_counter()
    bad = [(n, p) for n, p, rc in grid + random_grid if first_shape_theorem(p, n) != rc.nu(1)]
    elapsed = time.perf_counter() - t + sum(SETUP.values())
    ok = not bad and elapsed < 120
    assert record(6, ok, f"{len(grid)} exhaustive + {len(random_grid)} random paths, {len(bad)} mismatches, {elapsed:.1f}s")


def test_07_conjecture_sweep(record, grid, random_grid):
    t = time.perf_counter()
    counterexamples = []
    for n, p, rc in grid + random_grid:
        for s in range(1, n):
            if conjectured_shape(p, s, n) != rc.nu(s):
                counterexamples.append((n, p, s))
    elapsed = time.perf_counter() - t + sum(SETUP.values())
    for ce in counterexamples[:20]:
        print("counterexample", ce)
    ok = not counterexamples and elapsed < 300
    assert record(7, ok, f"all s, {len(counterexamples)} counterexamples, {elapsed:.1f}s")


def test_08_energy_identity(record, grid):
    t = time.perf_counter()
    bad_eq = bad_trop = 0
    for n, p, rc in grid:
        for r in range(1, min(n - 1, 4) + 1):
            for s in range(1, 5):
                bad_eq += energy_Ers(p, r, s, n) != Q(s, rc.nu(r))
        for ell in range(1, 7):
            bad_trop += energy_formula_trop(p, ell, n) != energy_Ers(p, 1, ell, n)
    elapsed = time.perf_counter() - t
    assert record(8, bad_eq == bad_trop == 0, f"E=Q failures {bad_eq}, tropical energy failures {bad_trop}, {elapsed:.1f}s")


def test_09_structural_properties(record):
    t = time.perf_counter()
    fails = {"inverse": 0, "R": 0, "yang-baxter": 0, "crystal": 0, "shift": 0}
    shift_checked = 0
    for n in (2, 3, 4):
        for m in (1, 2, 3):
            for p in all_paths(n, m, 2):
                rc = phi(p, n)
                widths = [len(w) for w in p]
                q = phi_inverse(rc, widths)
                fails["inverse"] += q != p or phi(q, n) != rc
                fails["R"] += sum(phi(apply_R_permutation(p, [k]), n) != rc for k in range(1, m))
                for a in range(1, n):
                    for op in "ef":
                        moved = kashiwara_tensor(op, a, p)
                        fails["crystal"] += rc_kashiwara(op, a, rc) != (None if moved is None else phi(moved, n))
                if n <= 3:
                    for r in range(1, n):
                        for s in (1, 2, 3):
                            res = check_ist(p, n, r, s)
                            if res is not None:
                                shift_checked += 1
                                fails["shift"] += not res
    for n in (2, 3, 4):
        for p in all_paths(n, 3, 3 if n < 4 else 2):
            fails["yang-baxter"] += apply_R_permutation(p, [1, 2, 1]) != apply_R_permutation(p, [2, 1, 2])
    elapsed = time.perf_counter() - t
    ok = not any(fails.values()) and shift_checked > 0
    assert record(9, ok, f"failures {fails}, rigging shift checked on {shift_checked} cases, {elapsed:.1f}s")


def _partitions(rows, cols):
    def rec(i, mx):
        if i == rows:
            yield ()
            return
        for v in range(mx, -1, -1):
            for rest in rec(i + 1, v):
                yield (v,) + rest

    return [Partition(p) for p in rec(0, cols)]


def valid_cylindric_shapes(n, rows=4):
    out = []
    for s in range(1, n):
        for lam in _partitions(rows, n - s):
            for mu in _partitions(len(lam), n - s):
                if not lam or not lam.contains(mu) or mu == lam:
                    continue
                try:
                    out.append(build_cylindric_shape(SkewShape(lam, mu), n, s))
                except InvalidCylindricShape:
                    pass
    return out


def test_10_loop_symmetric_engine(record):
    t = time.perf_counter()

    def poly(monos, m, n):
        return LoopPolynomial.from_monomials(monos, m, n)

    golden = (
        elementary_e(2, 1, 3, 2) == poly(ref.E2_N2_M3, 3, 2)
        and elementary_e(3, 1, 3, 2) == poly(ref.E3_N2_M3, 3, 2)
        and loop_schur((2, 1), 1, 3, 3).monomial_set() == poly(ref.SCHUR_21_N3, 3, 3).monomial_set()
        and cylindric_loop_schur(build_cylindric_shape((2, 1), 3, 1), 1, 3, 3).monomial_set()
        == poly(ref.CYL_SCHUR_21_N3, 3, 3).monomial_set()
        and len(cylindric_loop_schur(build_cylindric_shape((2, 1, 1), 4, 2), 0, 4, 4)) == 14
        and kappa_poly(1, 4).monomial_set() == poly(ref.KAPPA1_N4, 2, 4).monomial_set()
    )

    tau_bad = tau_checked = 0
    for n in range(2, 14):
        for m in range(1, 13):
            if (n - 1) * m > 12:
                continue
            for r, lam in enumerate(lambda_shapes(1, n, m)):
                k = (n - 1) * m - r * n
                if k < 0:
                    continue
                D = build_cylindric_shape(lam, n, 1) if lam else ()
                tau_checked += 1
                tau_bad += tau_poly(k, 0, m, n) != cylindric_loop_schur(D, 0, m, n)

    pit_bad = pit_checked = 0
    for n in (2, 3, 4):
        shapes = valid_cylindric_shapes(n)
        for m in (2, 3, 4):
            polys = [elementary_e(k, r, m, n) for k in range(1, m + 1) for r in range(n)]
            polys += [f for f in (cylindric_loop_schur(D, 0, m, n) for D in shapes) if f]
            for f in polys:
                pit_checked += 1
                pit_bad += not invariance_check(f, trials=20, seed=0)

    net_bad = net_checked = 0
    example = build_cylindric_shape((2, 1), 3, 1)
    net_bad += noncrossing_generating_function(3, 3, example, 1) != cylindric_loop_schur(example, 1, 3, 3)
    for n in (2, 3, 4):
        for D in valid_cylindric_shapes(n):
            for m in (1, 2, 3):
                for r in range(n):
                    net_checked += 1
                    net_bad += noncrossing_generating_function(n, m, D, r) != cylindric_loop_schur(D, r, m, n)

    cell_bad = cell_checked = 0
    for n in (2, 3):
        for m in range(1, 5):
            for N in range(n, (n - 1) * m - n + 1):
                cell_checked += 1
                cell_bad += not cell_transfer_positivity(n, m, N)

    elapsed = time.perf_counter() - t
    ok = golden and not (tau_bad or pit_bad or net_bad or cell_bad) and elapsed < 180
    assert record(
        10,
        ok,
        f"golden {golden}; tau {tau_checked - tau_bad}/{tau_checked}; invariance {pit_checked - pit_bad}/{pit_checked}; "
        f"networks {net_checked - net_bad}/{net_checked}; cell transfer {cell_checked - cell_bad}/{cell_checked}; {elapsed:.1f}s",
    )


def test_11_convexity(record):
    golden = partition_from_convex([0, 2, 7]) == ((2, 2, 1, 1, 1), (5, 2))
    rng = random.Random(11)
    bad = 0
    for _ in range(500):
        incs = sorted(rng.randint(0, 9) for _ in range(rng.randint(1, 8)))
        A = [0]
        for d in incs:
            A.append(A[-1] + d)
        delta, conj = partition_from_convex(A)
        bad += delta != convex_delta(A) or conjugate(delta) != conj
    assert record(11, golden and not bad, f"golden {golden}, {bad}/500 oracle disagreements")


def test_12_soliton_bound(record, grid):
    t = time.perf_counter()
    golden_path = state_to_path(parse_state(ref.BOXBALL_STATES[0]))
    golden = sorted(map(len, asymptotic_solitons(golden_path, 4))) == sorted(phi(golden_path, 4).nu(1))
    violations = mismatches = 0
    for n, p, rc in grid:
        nu1 = rc.nu(1)
        violations += len(nu1) > soliton_count_bound(n, len(p))
        mismatches += sorted(map(len, asymptotic_solitons(p, n))) != sorted(nu1)
    elapsed = time.perf_counter() - t
    ok = golden and not violations and not mismatches
    assert record(12, ok, f"golden {golden}, bound violations {violations}, soliton mismatches {mismatches}, {elapsed:.1f}s")
