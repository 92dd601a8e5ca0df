import itertools

import pytest
from hypothesis import given, settings, strategies as st

from mcat.categories import FiniteCategory, boolean_rig, walking_arrow, z2_category
from mcat.constructions import (finite_sets, nat_rig_seq, seq, seq_cartesian, table_from_backend,
                                terminal_mcat)
from mcat.core import (Arrow, Budget, BudgetError, FamilyMap, InputError, Signature, UnsupportedAction,
                       cart_act, cart_act_factored, compose, contract, enumerate_family_maps,
                       factor_family_map, hom, monotone_part, sym_act, weaken)
from mcat.laws import replay, validate_all, validate_cartesian, validate_multicat


def concurrent_category():
    """l: D->A, t: E->A, q: F->C, f: A->X, g: B->X, h: C->X with composites fl, ft, hq."""
    objs = "ABCDEFX"
    arrows = {f"1{x}": (x, x) for x in objs}
    arrows.update({"l": ("D", "A"), "t": ("E", "A"), "q": ("F", "C"),
                   "f": ("A", "X"), "g": ("B", "X"), "h": ("C", "X"),
                   "fl": ("D", "X"), "ft": ("E", "X"), "hq": ("F", "X")})
    comp = {("f", "l"): "fl", ("f", "t"): "ft", ("h", "q"): "hq"}
    for a, (x, y) in arrows.items():
        comp[(f"1{y}", a)] = a
        comp[(a, f"1{x}")] = a
    return FiniteCategory(objs, arrows, comp, {x: f"1{x}" for x in objs}, name="K")


# -- hom -----------------------------------------------------------------------------

def test_seq_walking_arrow_hom():
    M = seq(walking_arrow())
    hs = hom(M, Signature(("a", "a"), "b"))
    assert [a.value for a in hs] == [("u", "u")]


def test_terminal_hom_is_singleton_per_arity():
    T = terminal_mcat()
    for n in range(4):
        assert len(hom(T, Signature(("*",) * n, "*"))) == 1


def test_nat_hom_truncates():
    N = nat_rig_seq()
    hs = hom(N, Signature(("*", "*"), "*"), Budget(max_enum=6))
    assert len(hs) == 6 and hs.truncated


def test_hom_errors():
    M = seq(walking_arrow())
    with pytest.raises(InputError):
        hom(M, Signature(("zz",), "a"))
    with pytest.raises(BudgetError):
        hom(M, Signature(("a",) * 4, "a"), Budget(max_arity=3))


# -- composition ---------------------------------------------------------------------

def test_sequential_composition_example():
    C = concurrent_category()
    M = seq(C)
    F = Arrow(("A", "B", "C"), "X", ("f", "g", "h"))
    lt = Arrow(("D", "E"), "A", ("l", "t"))
    empty = Arrow((), "B", ())
    q = Arrow(("F",), "C", ("q",))
    r = compose(M, F, [lt, empty, q])
    assert r.dom == ("D", "E", "F")
    assert r.value == ("fl", "ft", "hq")


def test_terminal_composition():
    T = terminal_mcat()
    m2, m1 = (next(T.iter_hom(("*",) * n, "*")) for n in (2, 1))
    assert compose(T, m2, [m2, m1]) == next(T.iter_hom(("*",) * 3, "*"))


def test_composition_signature_mismatch():
    M = seq(walking_arrow())
    f = Arrow(("a",), "b", ("u",))
    with pytest.raises(InputError):
        compose(M, f, [f])


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_finite_sets_composition_matches_pointwise(data):
    FS = finite_sets(2)
    dims = st.integers(0, 2)
    n = data.draw(st.integers(1, 2))
    f_dom = tuple(data.draw(st.integers(1, 2)) for _ in range(n))
    f = data.draw(st.sampled_from(list(FS.iter_hom(f_dom, data.draw(st.integers(1, 2))))))
    gs = []
    for x in f_dom:
        k = data.draw(st.integers(0, 2))
        dom = tuple(data.draw(dims) for _ in range(k))
        gs.append(data.draw(st.sampled_from(list(FS.iter_hom(dom, x)))))
    r = FS.compose(f, gs)
    for point in itertools.product(*(range(d) for d in r.dom)):
        it = iter(point)
        args = [FS(g, *(next(it) for _ in g.dom)) for g in gs]
        assert FS(r, *point) == FS(f, *args)


# -- actions -------------------------------------------------------------------------

def test_identity_and_transposition_on_seq():
    M = seq(z2_category())
    f = Arrow(("*", "*"), "*", ("e", "g"))
    assert sym_act(M, FamilyMap.identity(f.dom), f) == f
    assert sym_act(M, FamilyMap.permutation(f.dom, (1, 0)), f).value == ("g", "e")


def test_permutation_functoriality_on_table():
    T = table_from_backend(seq(z2_category()), 3)
    threes = [T.arrow(k) for k, (d, _) in T.arrow_sigs.items() if len(d) == 3]
    perms = list(itertools.permutations(range(3)))
    for f in threes:
        for s, r in itertools.product(perms, repeat=2):
            sigma = FamilyMap.permutation(f.dom, s)
            rho = FamilyMap.permutation(sigma.target, r)
            assert T.act(rho, T.act(sigma, f)) == T.act(rho.after(sigma), f)


def test_non_bijective_on_symmetric_backend():
    M = seq(walking_arrow())
    f = Arrow(("a", "a"), "b", ("u", "u"))
    with pytest.raises(UnsupportedAction):
        M.act(FamilyMap(("a", "a"), ("a",), (0, 0)), f)
    with pytest.raises(UnsupportedAction):
        contract(M, f, 0)


def test_contract_and_weaken_on_nat():
    N = nat_rig_seq()
    assert contract(N, Arrow(("*", "*"), "*", (3, 5)), 0).value == (8,)
    assert weaken(N, Arrow(("*",), "*", (2,)), 0, "*").value == (0, 2)
    sigma = FamilyMap(("*",) * 3, ("*",), (0, 0, 0))
    assert cart_act(N, sigma, Arrow(("*",) * 3, "*", (2, 3, 4))).value == (9,)


def test_contract_on_boolean_rig():
    C, e = boolean_rig()
    M = seq_cartesian(C, e)
    assert contract(M, Arrow(("*", "*"), "*", (1, 1)), 0).value == (1,)


def test_contract_mismatch():
    FS = finite_sets(2)
    f = next(FS.iter_hom((1, 2), 2))
    with pytest.raises(InputError):
        contract(FS, f, 0)


def test_contract_is_diagonal_on_finite_sets():
    FS = finite_sets(2)
    for f in FS.iter_hom((2, 2), 2):
        g = contract(FS, f, 0)
        assert [FS(g, x) for x in range(2)] == [FS(f, x, x) for x in range(2)]


def test_weaken_then_drop_on_terminal():
    T = terminal_mcat()
    f = next(T.iter_hom(("*",), "*"))
    w = weaken(T, f, 1, "*")
    assert contract(T, w, 0) == f


def test_family_map_reading():
    # sigma f (b, c, a) = f(a, b, a)
    FS = finite_sets(2)
    A, B, C, D = 2, 2, 1, 2
    sigma = FamilyMap((A, B, A), (B, C, A), (2, 0, 2))
    for f in FS.iter_hom((A, B, A), D):
        g = FS.act(sigma, f)
        for b_, c, a in itertools.product(range(B), range(C), range(A)):
            assert FS(g, b_, c, a) == FS(f, a, b_, a)


def test_one_based_constructor():
    s = FamilyMap.from_one_based("xyx", "yzx", (3, 1, 3))
    assert s.mapping == (2, 0, 2)


def test_family_map_not_over_objects():
    with pytest.raises(InputError):
        FamilyMap(("a",), ("b",), (0,))


# -- factorisation -------------------------------------------------------------------

def test_factor_examples():
    ident = FamilyMap.identity("abc")
    beta, blocks = factor_family_map(ident)
    assert beta.mapping == (0, 1, 2) and blocks == (1, 1, 1)
    beta, blocks = factor_family_map(FamilyMap("aa", "a", (0, 0)))
    assert beta.mapping == (0, 1) and blocks == (2,)
    beta, blocks = factor_family_map(FamilyMap.from_one_based("xyx", "yzx", (3, 1, 3)))
    assert blocks == (1, 0, 2)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.sampled_from("ab"), max_size=4), st.data())
def test_factorisation_recomposes(source, data):
    source = tuple(source)
    maps = list(enumerate_family_maps(source, "ab", 3))
    sigma = data.draw(st.sampled_from(maps))
    beta, blocks = factor_family_map(sigma)
    assert beta.is_bijective
    assert monotone_part(sigma).after(beta) == sigma
    assert sum(blocks) == len(source)


def test_cart_act_factorisation_independent():
    FS = finite_sets(2)
    for f in FS.iter_hom((2, 1), 2):
        for sigma in enumerate_family_maps(f.dom, FS.objects, 3):
            assert cart_act(FS, sigma, f) == cart_act_factored(FS, sigma, f)


# -- budget --------------------------------------------------------------------------

def test_budget_from_env(monkeypatch):
    monkeypatch.setenv("MCAT_BUDGET", "2,1,50")
    b = Budget.from_env(max_enum=7)
    assert (b.max_arity, b.max_depth, b.max_enum) == (2, 1, 7)
    monkeypatch.setenv("MCAT_BUDGET", "junk")
    with pytest.raises(InputError):
        Budget.from_env()


# -- validators ----------------------------------------------------------------------

@pytest.mark.parametrize("arity", [0, 1, 2, 4])
def test_terminal_passes_any_budget(arity):
    assert validate_all(terminal_mcat(), Budget(max_arity=arity)).passed


def test_boolean_rig_cartesian():
    C, e = boolean_rig()
    assert validate_cartesian(seq_cartesian(C, e), Budget(3, 2)).passed


def _corruptible(T):
    by_sig = {}
    for k, sig in T.arrow_sigs.items():
        by_sig.setdefault(sig, []).append(k)
    for kind, table in (("composition", T.composition), ("action", T.actions)):
        for key, v in table.items():
            if kind == "action" and key[1].mapping == tuple(range(len(key[1].mapping))) and key[1].source == key[1].target:
                continue  # identity actions never consult the table
            others = [k for k in by_sig[T.arrow_sigs[v]] if k != v]
            if others:
                yield kind, key, others[0]


def test_every_single_cell_corruption_is_caught():
    T = table_from_backend(seq(z2_category()), 2)
    assert validate_all(T).passed
    cases = list(_corruptible(T))
    assert cases
    for kind, key, new in cases:
        bad = T.corrupt(key, new, kind)
        r = validate_all(bad)
        assert r.outcome == "counterexample", (kind, key)
        assert replay(bad, r.evidence)
        assert not replay(T, r.evidence)


def test_associativity_corruption_found_at_depth_two():
    T = table_from_backend(seq(z2_category()), 2)
    # a binary composite of non-identity arguments only shows up through associativity
    key = next(k for k in T.composition if k[0] == "<g>: * -> *" and k[1] == ("<e,g>: *, * -> *",))
    bad = T.corrupt(key, "<e,e>: *, * -> *")
    r = validate_multicat(bad)
    failed = [c.law for c in r.children if not c.passed]
    assert "associativity (nested)" in failed or "associativity (parallel)" in failed
