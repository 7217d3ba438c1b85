"""Exit criteria. Every check is exact; a pass/fail line per criterion is
printed in the "acceptance criteria" section of the pytest summary."""
import csv
import io
import random
import subprocess
import sys
from pathlib import Path

import pytest

from spectralign import (
    Alignment,
    ScoringScheme,
    align,
    alignment_score,
    allocate,
    brute_force_align,
    build_matrix,
    on_optimal_path,
)

acceptance = pytest.mark.acceptance
TESTS_DIR = Path(__file__).parent


@acceptance(1, "worked example aligns with score exactly 11")
def test_ac1_worked_example_score():
    assert align("GAATTCAGTTA", "GGATCGA", ScoringScheme(5, -3, -4)).score == 11


@acceptance(2, "worked example cell S[1][1] == 5")
def test_ac2_worked_example_cell():
    assert build_matrix("GAATTCAGTTA", "GGATCGA")[1, 1] == 5


@acceptance(3, "printed alignment rescored to 11 and lies on a stored optimal path")
def test_ac3_printed_alignment_optimal():
    printed = Alignment.from_strings("GAATTCAGTTA", "GGA-TC-G--A")
    gap_positions = [k for k, (_, b) in enumerate(printed.columns, start=1) if b is None]
    assert gap_positions == [4, 7, 9, 10]
    assert alignment_score(printed) == 11
    assert on_optimal_path(build_matrix("GAATTCAGTTA", "GGATCGA"), printed)


@acceptance(4, "t1 spectrum: 4 SUs on channels {2,3,7,11}")
def test_ac4_t1_allocation():
    res = allocate("GAATTCAGTTA", "AAAA")
    assert res.allocated_count == 4
    assert set(res.channels) == {2, 3, 7, 11}


@acceptance(5, "t2/t3 spectra: 4 SUs on {2,5,8,11} and {2,5,8,9}")
def test_ac5_t2_t3_allocation():
    t2 = allocate("GAGTATCAGTA", "AAAA")
    t3 = allocate("GAGTATCAATG", "AAAA")
    assert t2.allocated_count == 4 and set(t2.channels) == {2, 5, 8, 11}
    assert t3.allocated_count == 4 and set(t3.channels) == {2, 5, 8, 9}


@acceptance(6, "scarcity: 3 allocated on {2,8,11}, 1 waiting")
def test_ac6_scarcity():
    res = allocate("GAGTGTCAGTA", "AAAA")
    assert res.allocated_count == 3
    assert res.waiting_count == 1
    assert set(res.channels) == {2, 8, 11}


@acceptance(7, "DP score == brute-force score on 250 random pairs, scoring in [-9, 9]")
def test_ac7_oracle_equivalence():
    rng = random.Random(7)
    failures = []
    for _ in range(250):
        s1 = "".join(rng.choice("ACGT") for _ in range(rng.randint(0, 6)))
        s2 = "".join(rng.choice("ACGT") for _ in range(rng.randint(0, 6)))
        sc = ScoringScheme(rng.randint(-9, 9), rng.randint(-9, 9), rng.randint(-9, 9))
        if build_matrix(s1, s2, sc).score != brute_force_align(s1, s2, sc):
            failures.append((s1, s2, sc))
    assert failures == []


@acceptance(8, "property suite green")
def test_ac8_property_suite():
    proc = subprocess.run(
        [sys.executable, "-m", "pytest", "-q", "-m", "property", "-p", "no:cacheprovider", str(TESTS_DIR),
         "--ignore", str(Path(__file__))],
        capture_output=True,
        text=True,
        cwd=TESTS_DIR.parent,
    )
    assert proc.returncode == 0, proc.stdout[-3000:]
    assert " passed" in proc.stdout and "deselected" in proc.stdout


def _simulate_csv(name):
    proc = subprocess.run(
        [sys.executable, "-m", "spectralign", "simulate", "--scenario", name, "--format", "csv"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr
    return [{k: (v if k == "pu_sequence" else int(v)) for k, v in row.items()} for row in csv.DictReader(io.StringIO(proc.stdout))]


@acceptance(9, "simulate CLI: paper_t123 3 rows of 4 allocated; paper_scarcity 3 allocated / 1 waiting")
def test_ac9_end_to_end():
    rows = _simulate_csv("paper_t123")
    assert len(rows) == 3
    assert all(r["allocated_count"] == 4 for r in rows)
    assert all(r["moved_count"] >= 0 for r in rows)
    net = sum(r["admitted_count"] - r["evicted_count"] for r in rows)
    assert net == rows[-1]["allocated_count"]

    (row,) = _simulate_csv("paper_scarcity")
    assert (row["allocated_count"], row["waiting_count"]) == (3, 1)
