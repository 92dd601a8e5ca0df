import pytest

from mcat import models
from mcat.categories import terminal_category, walking_arrow
from mcat.fixtures import fixture

from oracles import commutative_monoids


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_monoid_tables_against_oracle(n):
    assert len(models.commutative_monoid_tables(n)) == len(commutative_monoids(n))


def test_oracle_small_counts():
    assert [len(commutative_monoids(n)) for n in range(3)] == [0, 1, 4]


def test_models_of_nat_are_commutative_monoids():
    ms = models.enumerate_models(fixture("N"), 2)
    assert len(ms) == sum(len(commutative_monoids(n)) for n in range(3))


def test_cartesian_terminal_has_only_the_point():
    # contraction forces x.x = x and weakening forces e = x
    ms = models.enumerate_models(fixture("T"), 2)
    assert [m.carriers["*"] for m in ms] == [1]


def test_iso_classes():
    ms = models.enumerate_models(fixture("N"), 2)
    sizes = sorted(len(c) for c in models.iso_classes(ms))
    # trivial monoid; Z/2 and the two-element semilattice, each with two labellings
    assert sizes == [1, 2, 2]


def test_relabel_is_isomorphic():
    ms = models.enumerate_models(fixture("N"), 2)
    m = next(m for m in ms if m.carriers["*"] == 2)
    swapped = models.relabel(m, {"*": (1, 0)})
    assert models.isomorphic(m, swapped)
    assert swapped.functor != m.functor


@pytest.mark.parametrize("C", [terminal_category(), walking_arrow()])
def test_kronecker(C):
    assert models.kronecker_semantics_check(C, 2).passed
