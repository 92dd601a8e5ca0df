import pytest

from mcat import analysis
from mcat.core import Budget
from mcat.fixtures import fixture


@pytest.mark.parametrize("key, expected", [
    ("W", True), ("Z2", True), ("T", True), ("Bool", True),
    ("W-", False), ("I", False), ("dZ2", False), ("FS2t", False), ("FS2x", False),
])
def test_sequentiality(key, expected):
    r = analysis.sequentiality_report(fixture(key), Budget(2, 2))
    assert r.passed
    assert r.details["sequential"] is expected
    conds = [v for k, v in r.details["conditions"].items() if v != "closed form only"]
    assert all(c is expected for c in conds)


def test_products_in_finite_sets():
    FS = fixture("FS2x")
    w = analysis.algebraic_product_search(FS, (1, 2))
    assert w is not None and w.C == 2 and analysis.check_algebraic(FS, w)
    assert analysis.algebraic_product_search(FS, (2, 2)) is None
    assert analysis.universal_product_search(FS, (2, 2)) is None
    assert analysis.universal_product_search(FS, ()) is not None


def test_product_equivalence_on_finite_sets():
    r = analysis.product_equivalence_report(fixture("FS2x"), Budget(2, 2))
    assert r.passed, r


def test_biproducts_in_boolean_rig_absent():
    r = analysis.biproduct_agreement(fixture("Bool"), ("*", "*"))
    assert r.passed
    assert r.details["found"] is False


def test_biproduct_with_trivial_monoid():
    M = fixture("CM2")
    trivial = next(x for x in M.objects if str(x).endswith("[1]"))
    for x in M.objects:
        r = analysis.biproduct_agreement(M, (trivial, x))
        assert r.passed and r.details["found"], x


def test_hilton_eckmann():
    assert analysis.hilton_eckmann_check(fixture("Bool")).passed


def test_central_monoid_in_sequential_backend():
    w = analysis.find_central_monoid(fixture("Bool"))
    assert w is not None


def test_coreflection():
    assert analysis.coreflection_check(fixture("T"), fixture("FS2x")).passed


def test_cocartesian_monoids():
    from mcat.homs import monoid_mcat
    from mcat.constructions import finite_sets
    assert analysis.cocartesian_check(monoid_mcat(finite_sets(2))).passed
