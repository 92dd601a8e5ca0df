import pytest

from mcat.core import Budget, InputError
from mcat.reporting import decode, encode
from mcat.theorems import SUITES, run_theorem, tensor_count_check
from mcat.categories import walking_arrow, z2_category
from mcat.core import FamilyMap
from mcat.fixtures import fixture

FAST = ["char-equivalences", "frobenius", "cart8-biproducts", "free-nat-rig", "corefsum"]


@pytest.mark.parametrize("tid", FAST)
def test_fast_suites_pass(tid):
    r = run_theorem(tid)
    assert r.passed, r
    assert r.children


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_theorem("nope")


def test_pair_inputs_required():
    with pytest.raises(InputError):
        run_theorem("frobenius", ["W"])


def test_suite_ids_are_listed():
    assert set(FAST) <= set(SUITES)


def test_tensor_counts_on_non_posets():
    assert tensor_count_check(z2_category(), walking_arrow(), Budget(2, 2)).passed


def test_char_reports_false_conditions_as_agreement():
    r = run_theorem("char-equivalences", ["dZ2"])
    assert r.passed
    assert r.children[0].details["sequential"] is False


def test_witness_encoding_round_trip():
    M = fixture("W")
    f = next(M.iter_hom(("a", "a"), "b"))
    s = FamilyMap.permutation(f.dom, (1, 0))
    for value in (f, s, None, "x"):
        assert decode(M, encode(M, value)) == value
    # lists come back as tuples
    assert decode(M, encode(M, [f, [s, 3]])) == (f, (s, 3))
