"""Acceptance suite. Each criterion records one PASS/FAIL line, printed in the
terminal summary (and asserted, so a failure is also a red test)."""

from __future__ import annotations

import itertools
import math
import random
import time
from fractions import Fraction

import numpy as np
import pytest

from zcpgbf.cli import main
from zcpgbf.construct import (
    SequencePair,
    Theorem1Params,
    claimed_zcz,
    gcp_pair,
    gdj_gbf,
    mate_pair,
    theorem1_pair,
)
from zcpgbf.corr import aacs_profile, accf
from zcpgbf.gbf import GeneralizedBooleanFunction, PhaseSequence, Term, to_sequence, truncate, x
from zcpgbf.verify import (
    exhaustive_search,
    magnitude_floor_check,
    ratio_table,
    verify_gcp,
    verify_mates,
    verify_zcp,
)

from conftest import brute_binary_accf, pm1, record

SEED = 20240601


def best_time(fn, repeats: int = 50) -> float:
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def check(criterion: str, ok: bool, detail: str) -> None:
    record(criterion, ok, detail)
    assert ok, detail


# ---------------------------------------------------------------------------


def test_criterion_1_example1():
    def build():
        f = GeneralizedBooleanFunction(3, 2, (Term.of(1, x(0), x(1)), Term.of(1, x(1), x(2))))
        s = to_sequence(f)
        return s, truncate(s, 1)

    s, t = build()
    elapsed = best_time(build)
    ok = s.signs() == "+++-++-+" and t.signs() == "++-++-" and elapsed < 1e-3
    check("1 example-1 sequence and truncation", ok, f"{s.signs()} / {t.signs()}, {elapsed * 1e3:.3f} ms")


def test_criterion_2_example2():
    p = Theorem1Params(6, 2, (2, 0, 1, 3))

    def build():
        return aacs_profile(theorem1_pair(p)).integers()

    vals = build()
    elapsed = best_time(build, 20)
    zero_inside = all(int(v) == 0 for v in vals[1:25])
    outside = {abs(int(v)) for v in vals[25:] if v != 0}
    ok = len(vals) == 34 and zero_inside and outside == {4} and elapsed < 1e-2
    check(
        "2 example-2 length 34, ZCZ 25, |AACS| = 4 outside",
        ok,
        f"N={len(vals)}, out-of-zone nonzero magnitudes {sorted(outside)}, {elapsed * 1e3:.2f} ms",
    )


def test_criterion_3_example3():
    p = Theorem1Params(5, 2, (1, 2, 0))

    def build():
        return aacs_profile(theorem1_pair(p)).integers()

    vals = build()
    elapsed = best_time(build, 20)
    ok = len(vals) == 18 and all(int(v) == 0 for v in vals[1:10]) and claimed_zcz(p) == 10 and elapsed < 1e-2
    check("3 example-3 length 18, ZCZ >= 10", ok, f"N={len(vals)}, {elapsed * 1e3:.2f} ms")


# ---------------------------------------------------------------------------
# criterion 4 (and 7a, which reuses its pairs)


def sweep_permutations(m: int, rng: random.Random) -> list[tuple[int, ...]]:
    k = m - 2
    if math.factorial(k) <= 720:
        return list(itertools.permutations(range(k)))
    out = []
    for _ in range(200):
        pi = list(range(k))
        rng.shuffle(pi)
        out.append(tuple(pi))
    return out


@pytest.fixture(scope="module")
def sweep():
    rng = random.Random(SEED)
    stats = {"pairs": 0, "length_bad": 0, "claim_bad": 0, "cor1_bad": 0, "floor_bad": 0, "q4_floor_bad": 0}
    t0 = time.perf_counter()
    for m in range(4, 11):
        for pi in sweep_permutations(m, rng):
            for q in (2, 4):
                for _ in range(10):
                    e = tuple(rng.randrange(q) for _ in range(m - 2))
                    f = tuple(rng.randrange(q) for _ in range(m - 2))
                    p = Theorem1Params(m, q, pi, e, f)
                    pair = theorem1_pair(p)
                    rep = verify_zcp(pair, claimed_zcz(p), corollary1=True)
                    stats["pairs"] += 1
                    stats["length_bad"] += rep.length != 2 ** (m - 1) + 2
                    stats["claim_bad"] += rep.actual_zcz < 2 ** (m - 2) + 2 ** pi[-1] + 1
                    if q == 2:
                        stats["cor1_bad"] += not rep.passes_corollary1
                        stats["floor_bad"] += not magnitude_floor_check(pair)
                    else:
                        # squared magnitudes: the quaternary analogue of |v| >= 4
                        stats["q4_floor_bad"] += any(0 < k < 16 for k in rep.out_of_zone_magnitudes)
    stats["seconds"] = time.perf_counter() - t0
    return stats


def test_criterion_4_theorem1_sweep(sweep):
    ok = (
        sweep["length_bad"] == 0
        and sweep["claim_bad"] == 0
        and sweep["cor1_bad"] == 0
        and sweep["seconds"] < 120
    )
    check(
        "4 construction sweep m=4..10, q in {2,4}",
        ok,
        f"{sweep['pairs']} pairs, length/claim/magnitude failures "
        f"{sweep['length_bad']}/{sweep['claim_bad']}/{sweep['cor1_bad']}, {sweep['seconds']:.1f} s",
    )


# ---------------------------------------------------------------------------


def test_criterion_5_golay_and_mates():
    rng = random.Random(SEED + 5)
    t0 = time.perf_counter()
    bad_gcp = bad_mate = total = 0
    for m in range(2, 11):
        for q in (2, 4):
            for _ in range(20):
                pi = list(range(m))
                rng.shuffle(pi)
                g = tuple(rng.randrange(q) for _ in range(m))
                f = gdj_gbf(m, q, pi, g, rng.randrange(q))
                p1 = gcp_pair(f, pi)
                bad_gcp += not verify_gcp(p1)
                bad_mate += not verify_mates(p1, mate_pair(f, pi))
                total += 1
    elapsed = time.perf_counter() - t0
    ok = bad_gcp == 0 and bad_mate == 0 and elapsed < 30
    check("5 Golay pairs and mates m=2..10", ok, f"{total} cases, GCP/mate failures {bad_gcp}/{bad_mate}, {elapsed:.2f} s")


# ---------------------------------------------------------------------------
# criterion 6 (and 7b, which reuses its enumerations)


@pytest.fixture(scope="module")
def searches():
    out = {}
    for n in (2, 6, 10):
        t0 = time.perf_counter()
        res = exhaustive_search(n)
        out[n] = (res, time.perf_counter() - t0)
    return out


def test_criterion_6_exhaustive_search(searches):
    got = {n: r.best_zcz for n, (r, _) in searches.items()}
    t10 = searches[10][1]
    witness_ok = all(verify_zcp(w).actual_zcz == 10 for w in searches[10][0].witness_pairs)
    ok = got[2] == 2 and got[6] <= 4 and got[10] == 10 and t10 < 60 and witness_ok
    check(
        "6 exhaustive best ZCZ at N=2,6,10",
        ok,
        f"best {got}, full enumeration at N=10 in {t10:.2f} s",
    )


def test_criterion_7a_floor_on_constructed_pairs(sweep):
    ok = sweep["floor_bad"] == 0 and sweep["q4_floor_bad"] == 0
    check(
        "7a out-of-zone floor on every sweep pair",
        ok,
        f"violations q=2: {sweep['floor_bad']}, q=4: {sweep['q4_floor_bad']} of {sweep['pairs']} pairs",
    )


def test_criterion_7b_floor_on_enumerated_pairs(searches):
    parts = {n: (r.floor_violations, r.pairs_examined) for n, (r, _) in searches.items()}
    ok = all(v == 0 for v, _ in parts.values())
    detail = ", ".join(f"N={n}: {v}/{t} violate" for n, (v, t) in parts.items())
    check("7b out-of-zone floor on every enumerated pair", ok, detail)


# ---------------------------------------------------------------------------


def test_criterion_8_ratio_law(capsys):
    law = all(
        Fraction(2 ** (m - 2) + 2 ** (m - 3) + 1, 2 ** (m - 1) + 2) == Fraction(3, 4) - Fraction(1, 2**m + 4)
        for m in range(4, 21)
    )
    rows = ratio_table(4, 20)
    table_ok = all(r["deviation"] == r["closed_form_deviation"] == Fraction(1, 2 ** r["m"] + 4) for r in rows)
    code = main(["table", "--m-min", "4", "--m-max", "20", "--format", "csv"])
    out = capsys.readouterr().out.splitlines()
    header = out[0].split(",")
    body = [dict(zip(header, line.split(","))) for line in out[1:18]]
    cli_ok = code == 0 and len(body) == 17 and all(
        Fraction(r["ratio"]) == Fraction(3, 4) - Fraction(1, 2 ** int(r["m"]) + 4) and r["matches_closed_form"] == "true"
        for r in body
    )
    ok = law and table_ok and cli_ok
    check("8 ratio law m=4..20 (exact rationals, CLI table)", ok, f"identity {law}, table {table_ok}, cli {cli_ok}")


def test_criterion_9_oracle_equivalence():
    rng = np.random.default_rng(SEED + 9)
    mismatches = checked = 0
    for _ in range(1000):
        n = int(rng.integers(1, 65))
        a = PhaseSequence(2, tuple(int(v) for v in rng.integers(0, 2, n)))
        b = PhaseSequence(2, tuple(int(v) for v in rng.integers(0, 2, n)))
        xa, xb = pm1(a), pm1(b)
        for t in range(-n, n + 1):
            checked += 1
            mismatches += accf(a, b, t).as_int() != brute_binary_accf(xa, xb, t)
        prof = aacs_profile(SequencePair(a, b)).integers().tolist()
        ref = [brute_binary_accf(xa, xa, t) + brute_binary_accf(xb, xb, t) for t in range(n)]
        mismatches += prof != ref
    check("9 exact engine vs +-1 integer oracle", mismatches == 0, f"{checked} shifts over 1000 pairs, {mismatches} mismatches")
