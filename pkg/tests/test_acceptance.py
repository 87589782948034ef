"""The acceptance criteria, one test each.  Every test prints a single PASS/FAIL line.

Criterion 1 runs the full bounded verification for the two-dimensional
algebra (a few minutes on one core).
"""

import json
import subprocess
import sys
from pathlib import Path

import pytest

from rbenvelope.envelope import (
    Envelope, check_dendriform_axioms, check_embedding, check_identities, check_lemma34, check_rb_in_quotient,
)
from rbenvelope.reducer import confluence_sample
from rbenvelope.report import Report

DATA = Path(__file__).resolve().parent.parent / "data"
ALGEBRAS = {"n=1 running": DATA / "running.json", "n=2 unit-extended": DATA / "unit2.json"}
SEED = 20240601


@pytest.fixture
def announce(capsys):
    def emit(number, title, ok, detail=""):
        with capsys.disabled():
            print(f"\n[acceptance {number}] {'PASS' if ok else 'FAIL'}  {title}  {detail}".rstrip())
        return ok

    return emit


def cli(*args, **kw):
    return subprocess.run([sys.executable, "-m", "rbenvelope", *args], capture_output=True, text=True, **kw)


def _counts(reps):
    total = sum(c.total for r in reps for c in r.checks)
    failed = sum(len(c.failures) for r in reps for c in r.checks)
    return f"({total} checks, {failed} failures)"


def test_1_gsb_verification(announce, tmp_path):
    results = {}
    for name, path in ALGEBRAS.items():
        out = tmp_path / f"{path.stem}.json"
        proc = cli("gsb-verify", str(path), "--max-deg", "5", "--max-rdeg", "2", "--json", str(out))
        report = json.loads(out.read_text())
        results[name] = (proc.returncode, report)
    ok = all(code == 0 and rep["pass"] and not any(c["failures"] for c in rep["checks"])
             for code, rep in results.values())
    detail = "; ".join(f"{k}: {rep['params']['compositions']} compositions" for k, (_, rep) in results.items())
    assert announce(1, "GSB bounded verification (5, 2)", ok, detail)


def test_2_confluence(announce, H1, H2):
    reps = [confluence_sample(H, 1000, 6, 2, seed=SEED) for H in (H1, H2)]
    assert announce(2, "confluence sampling, 1000 polynomials", all(r.passed for r in reps), _counts(reps))


def test_3_lemma34(announce, H1, H2):
    reps = [check_lemma34(H, max_l=6, binomial_l=12) for H in (H1, H2)]
    assert announce(3, "enveloping-algebra lemma l <= 6, binomial identity l <= 12",
                    all(r.passed for r in reps), _counts(reps))


def test_4_identities(announce, env1, env2):
    reps = [check_identities(env, max_k=4, max_l=5, seed=SEED) for env in (env1, env2)]
    assert announce(4, "long RB (k <= 4) and R(y x^l) formulas (l <= 5)", all(r.passed for r in reps), _counts(reps))


def test_5_rb_law(announce, env1, env2):
    reps = [check_rb_in_quotient(env, 200, seed=SEED) for env in (env1, env2)]
    assert announce(5, "RB law in the quotient, 200 pairs", all(r.passed for r in reps), _counts(reps))


def test_6_dendriform(announce, env1, env2):
    reps = [check_dendriform_axioms(env, 100, seed=SEED) for env in (env1, env2)]
    assert announce(6, "dendriform axioms, 100 triples", all(r.passed for r in reps), _counts(reps))


def test_7_embedding(announce, A1, A2, env1, env2):
    reps = [check_embedding(A, 100, seed=SEED, env=env) for A, env in ((A1, env1), (A2, env2))]
    assert announce(7, "embedding into the quotient", all(r.passed for r in reps), _counts(reps))


WORKED = [("R(y1)", "x1\n"), ("R(x1 x1)", "0\n"), ("x1 y1", "y1 x1 + y1\n"), ("R(y1 x1)", "1/2 x1 x1 - 1/2 x1\n")]


def test_8_worked_normal_forms(announce):
    got = [cli("nf", str(ALGEBRAS["n=1 running"]), "-e", e) for e, _ in WORKED]
    ok = all(p.returncode == 0 and p.stdout == want for p, (_, want) in zip(got, WORKED))
    detail = " | ".join(p.stdout.strip() for p in got)
    assert announce(8, "worked normal forms, byte-exact CLI output", ok, detail)
