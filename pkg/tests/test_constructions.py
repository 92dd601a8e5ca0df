import itertools
import math

import pytest

from mcat.analysis import is_representable
from mcat.categories import (boolean_rig, product_category, rig_category, terminal_category,
                             walking_arrow, z2_category)
from mcat.constructions import (bv_tensor_seq, bv_tensor_unary, extract_enrichment, finite_sets,
                                free_preadditive_seq, frobenius_check, nat_rig_seq, product, seq,
                                seq_cartesian, terminal_mcat, unary, underlying, z2_discrete)
from mcat.core import Arrow, Budget, InputError, PreconditionError, Signature, hom, signatures
from mcat.descriptions import load_backend
from mcat.laws import validate_all


def _count(M, dom, cod):
    return len(hom(M, Signature(tuple(dom), cod)))


def test_seq_hom_counts_match_product_of_homs():
    C = walking_arrow()
    M = seq(C)
    for sig in signatures(M, 3):
        assert _count(M, sig.dom, sig.cod) == math.prod(len(C.hom(x, sig.cod)) for x in sig.dom)


def test_unary_has_only_unary_arrows():
    M = unary(walking_arrow())
    assert _count(M, ("a",), "b") == 1
    assert _count(M, ("a", "a"), "b") == 0
    assert _count(M, (), "a") == 0


def test_underlying_of_seq_recovers_category():
    C = z2_category()
    U = underlying(seq(C))
    assert len(U.hom("*", "*")) == 2
    g = next(a for a in U.hom("*", "*") if a.value == ("g",))
    assert U.compose(g, g) == U.identities["*"]


def test_finite_sets_counts():
    FS = finite_sets(2)
    assert _count(FS, (2, 2), 2) == 16
    assert _count(FS, (), 1) == 1
    assert _count(FS, (), 0) == 0
    assert _count(FS, (0, 2), 0) == 1


def test_nat_composition_multiplies():
    N = nat_rig_seq()
    r = N.compose(Arrow(("*", "*"), "*", (2, 3)), [Arrow(("*",), "*", (1,)), Arrow(("*",), "*", (4,))])
    assert r.value == (2, 12)


def test_nat_bound_caps_components():
    N = nat_rig_seq(2)
    assert _count(N, ("*", "*"), "*") == 9


def test_free_preadditive_homs_are_bounded_multisets():
    C = walking_arrow()
    F = free_preadditive_seq(C, bound=2)
    for x, y in itertools.product(C.objects, repeat=2):
        k = len(C.hom(x, y))
        assert _count(F, (x,), y) == math.comb(k + 2, 2)


def test_discrete_monoid_homs():
    d = z2_discrete()
    for dom in itertools.chain.from_iterable(itertools.product(d.objects, repeat=n) for n in range(4)):
        for y in d.objects:
            assert _count(d, dom, y) == (1 if sum(dom) % 2 == y else 0)


def test_product_counts():
    M, N = seq(walking_arrow()), z2_discrete()
    P = product(M, N)
    for sig in signatures(P, 2):
        (xs, ys), (x, y) = zip(*sig.dom) if sig.dom else ((), ()), sig.cod
        assert _count(P, sig.dom, sig.cod) == _count(M, xs, x) * _count(N, ys, y)


def test_enrichment_round_trip_on_boolean_rig():
    C, e = boolean_rig()
    M = seq_cartesian(C, e)
    e2 = extract_enrichment(M)
    for f, g in itertools.product(e2.C.hom("*", "*"), repeat=2):
        assert e2.add(f, g).value == (f.value[0] | g.value[0],)
    assert e2.zero("*", "*").value == (0,)


def test_extract_enrichment_needs_cartesian():
    with pytest.raises(PreconditionError):
        extract_enrichment(seq(walking_arrow()))


def test_distributivity_failure_rejected():
    # "or" as sum with "xor" as product does not distribute
    with pytest.raises(InputError, match="distributivity"):
        rig_category([0, 1], lambda a, b: a | b, lambda a, b: a ^ b, 0, 0)


def test_fixture_constructions_validate():
    for M in (terminal_mcat(), seq(z2_category()), z2_discrete(), nat_rig_seq(2)):
        assert validate_all(M, Budget(2, 2)).passed, M.name


def test_representability():
    assert is_representable(seq(walking_arrow())).passed
    assert not is_representable(seq(z2_category())).passed
    P = load_backend("descriptions/walking_arrow.products.json")
    assert is_representable(P).passed


def test_tensor_closed_forms():
    C, D = walking_arrow(), walking_arrow()
    T = bv_tensor_seq(C, D)
    CD = product_category(C, D)
    for sig in signatures(T, 2):
        want = math.prod(len(CD.hom(x, sig.cod)) for x in sig.dom)
        assert _count(T, sig.dom, sig.cod) == want
    N = nat_rig_seq(2)
    U = bv_tensor_unary(terminal_category(), N)
    for sig in signatures(U, 2):
        inner = Signature(tuple(x[1] for x in sig.dom), sig.cod[1])
        assert _count(U, sig.dom, sig.cod) == _count(N, inner.dom, inner.cod)


def test_frobenius_instance():
    assert frobenius_check(seq(walking_arrow()), z2_category()).passed
