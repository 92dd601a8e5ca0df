"""Acceptance criteria 1-10, one check per criterion.

Run under pytest (a summary line per criterion is printed at the end of the
session) or directly: ``python3 tests/test_acceptance.py``.
"""
import os
import subprocess
import sys
import time
from pathlib import Path

import pytest

from mcat import analysis, reporting
from mcat.categories import z2_category
from mcat.constructions import seq, table_from_backend
from mcat.core import DEFAULT_BUDGET
from mcat.fixtures import fixture, klein_slice
from mcat.laws import replay, validate_all
from mcat.theorems import run_theorem

sys.path.insert(0, str(Path(__file__).resolve().parent))
from oracles import commutative_monoids  # noqa: E402

ROOT = Path(__file__).resolve().parent.parent
RESULTS: dict = {}

FIXTURES_C1 = ["T", "I", "W", "Z2-", "dZ2", "FS2t", "FS2x", "Bool", "N", "FW"]


def _suite_ok(theorem_id):
    r = run_theorem(theorem_id, None, DEFAULT_BUDGET)
    bad = [c.law for c in r.children if not c.passed]
    return r.passed and not bad, f"{len(r.children)} instances" + (f", failing: {bad}" if bad else "")


def _corruptions(T):
    by_sig = {}
    for k, sig in T.arrow_sigs.items():
        by_sig.setdefault(sig, []).append(k)
    for kind, table in (("composition", T.composition), ("action", T.actions)):
        for key, v in table.items():
            if kind == "action" and key[1].mapping == tuple(range(len(key[1].mapping))) \
                    and key[1].source == key[1].target:
                continue
            for other in by_sig[T.arrow_sigs[v]]:
                if other != v:
                    yield kind, key, other
                    break


def criterion_1():
    failed = [k for k in FIXTURES_C1 if not validate_all(fixture(k), DEFAULT_BUDGET).passed]
    T = table_from_backend(seq(z2_category()), 2)
    missed = 0
    cases = 0
    for kind, key, new in _corruptions(T):
        cases += 1
        bad = T.corrupt(key, new, kind)
        r = validate_all(bad)
        if r.outcome != "counterexample" or not replay(bad, r.evidence):
            missed += 1
            continue
        block = reporting.replay_block(bad, r)
        if not reporting.replay_witness(bad, block) or reporting.replay_witness(T, block):
            missed += 1
    return not failed and not missed, f"fixtures failing: {failed}; corruptions {cases}, missed {missed}"


def criterion_2():
    return _suite_ok("cart1-products")


def criterion_3():
    expected = {"W": True, "Z2": True, "dZ2": False, "FS2t": False}
    wrong = []
    for key, want in expected.items():
        r = analysis.sequentiality_report(fixture(key), DEFAULT_BUDGET)
        conds = [r.details["conditions"][c] for c in ("2", "3", "4", "5")]
        if not r.passed or conds != [want] * 4:
            wrong.append(key)
    return not wrong, f"disagreeing: {wrong}"


def criterion_4():
    return _suite_ok("seqexp-iso")


def criterion_5():
    return _suite_ok("rep-pointwise")


def criterion_6():
    ok, detail = _suite_ok("cart8-biproducts")
    r = run_theorem("cart8-biproducts", None, DEFAULT_BUDGET)
    found = {c.details["input"]: 0 for c in r.children}
    for c in r.children:
        found[c.details["input"]] += bool(c.details.get("found"))
    K = klein_slice()
    z2 = next(x for x in K.objects if str(x) == "Z2")
    klein = analysis.biproduct_agreement(K, (z2, z2), DEFAULT_BUDGET)
    ok = ok and found["CM2"] > 0 and found["Bool"] == 0 and klein.passed and klein.details["found"]
    return ok, f"{detail}; biproducts found {found}; Z2+Z2 in Klein slice: {klein.details['found']}"


def criterion_7():
    oracle = sum(len(commutative_monoids(n)) for n in range(3))
    r = run_theorem("models-kronecker", ["2"], DEFAULT_BUDGET)
    count = r.children[0].details["models"]
    return r.passed and count == oracle == 5, f"models {count}, oracle {oracle}"


def criterion_8():
    return _suite_ok("corefsum")


def criterion_9():
    return _suite_ok("frobenius")


def _structured_run(seed):
    env = dict(os.environ, PYTHONHASHSEED=str(seed))
    outs = []
    for argv in (["theorem", "all"], *(["validate", k] for k in FIXTURES_C1)):
        p = subprocess.run([sys.executable, "-m", "mcat", "--format", "structured", *argv],
                           capture_output=True, env=env, cwd=ROOT)
        outs.append((p.returncode, p.stdout))
    return outs


def criterion_10():
    a, b = _structured_run(1), _structured_run(2)
    codes = [c for c, _ in a]
    return a == b and all(c == 0 for c in codes), f"exit codes {codes}, identical: {a == b}"


CRITERIA = {
    1: (criterion_1, 60), 2: (criterion_2, 120), 3: (criterion_3, 60), 4: (criterion_4, 120),
    5: (criterion_5, 60), 6: (criterion_6, 30), 7: (criterion_7, 120), 8: (criterion_8, 60),
    9: (criterion_9, 30), 10: (criterion_10, None),
}


def evaluate(n):
    fn, limit = CRITERIA[n]
    t = time.perf_counter()
    ok, detail = fn()
    dt = time.perf_counter() - t
    in_time = limit is None or dt < limit
    passed = ok and in_time
    line = f"criterion {n}: {'PASS' if passed else 'FAIL'} ({dt:.1f} s) {detail}"
    if not in_time:
        line += f" [over {limit} s]"
    RESULTS[n] = line
    print(line)
    return passed, line


@pytest.mark.parametrize("n", list(CRITERIA))
def test_criterion(n):
    passed, line = evaluate(n)
    assert passed, line


if __name__ == "__main__":
    results = [evaluate(n)[0] for n in CRITERIA]
    sys.exit(0 if all(results) else 1)
