import pytest

from mcat import homs
from mcat.categories import category_functors, terminal_category, walking_arrow, z2_category
from mcat.constructions import finite_sets, seq, terminal_mcat, unary
from mcat.core import Budget, PreconditionError
from mcat.fixtures import fixture

from oracles import commutative_monoids, monotone_self_maps_of_chain


def test_functors_between_unary_chains():
    W = walking_arrow()
    Fs = homs.enumerate_functors(unary(W), unary(W))
    assert len(Fs) == monotone_self_maps_of_chain(2) == len(category_functors(W, W))


def test_every_enumerated_functor_checks():
    for F in homs.enumerate_functors(seq(walking_arrow()), seq(z2_category())):
        assert homs.check_functor(F).passed


def test_monoids_in_finite_sets_match_oracle():
    H = homs.monoid_mcat(finite_sets(2))
    want = sum(len(commutative_monoids(n)) for n in range(3))
    assert len(H.objects) == want == 5
    by_carrier = {}
    for F in H.objects:
        by_carrier[F.on_object("*")] = by_carrier.get(F.on_object("*"), 0) + 1
    assert by_carrier == {1: 1, 2: 4}


def test_monoid_structure_is_a_monoid():
    for F in homs.monoid_mcat(finite_sets(2)).objects:
        m2, m0, n = homs.monoid_structure(F)
        op = {(x, y): m2.value[x * n + y] for x in range(n) for y in range(n)}
        e = m0.value[0]
        assert all(op[e, x] == x for x in range(n))
        assert all(op[x, y] == op[y, x] for x, y in op)


def test_identity_functor_is_a_functor():
    assert homs.check_functor(homs.identity_functor(fixture("W"))).passed


def test_seq_exponent_against_unary_hom():
    assert homs.iso_unaryhom_seqexp(walking_arrow(), fixture("W")).passed
    assert homs.iso_unaryhom_seqexp(z2_category(), fixture("dZ2")).passed


def test_unit_source_iso():
    assert homs.unit_source_iso(fixture("W")).passed


def test_unary_functor_category():
    assert homs.unary_functor_category_check(walking_arrow(), walking_arrow()).passed


def test_pointwise_product_of_monoids():
    T = terminal_mcat()
    FS = finite_sets(2)
    monoids = homs.enumerate_functors(T, FS)
    trivial = next(F for F in monoids if F.on_object("*") == 1)
    z = monoids[-1]
    pu = homs.pointwise_universal(T, FS, [trivial, z], targets=monoids)
    assert pu.report.passed
    assert pu.H.on_object("*") == z.on_object("*")


def test_pointwise_needs_universal_arrows():
    T = terminal_mcat()
    FS = finite_sets(2)
    z = [F for F in homs.enumerate_functors(T, FS) if F.on_object("*") == 2]
    with pytest.raises(PreconditionError):
        homs.pointwise_universal(T, FS, z[:2])


def test_internal_hom_validates():
    from mcat.laws import validate_multicat
    H = homs.internal_hom(unary(terminal_category()), fixture("W"))
    assert validate_multicat(H, Budget(2, 2)).passed
