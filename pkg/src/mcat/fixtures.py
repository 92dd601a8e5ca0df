"""The built-in catalog of small backends used by tests, demos and the CLI."""
from __future__ import annotations

from functools import lru_cache

from .categories import boolean_rig, terminal_category, walking_arrow, z2_category
from .constructions import (extract_enrichment, finite_sets, free_preadditive_seq, nat_rig_seq,
                            seq, seq_cartesian, terminal_mcat, unary, z2_discrete)
from .core import DEFAULT_BUDGET, Multicategory
from .homs import (InternalHom, enumerate_functors, monoid_enrichment, monoid_mcat,
                   pointwise_universal)


def bool_seq():
    C, e = boolean_rig()
    return seq_cartesian(C, e, name="Bool_seq")


@lru_cache(maxsize=None)
def monoids_fs2():
    """Commutative monoids on sets of size at most 2, as a backend."""
    return monoid_mcat(finite_sets(2), DEFAULT_BUDGET)


@lru_cache(maxsize=None)
def additive_fixture():
    """``cMon(FS2x)`` with pointwise addition of homomorphisms, made sequential."""
    e = extract_enrichment(monoids_fs2(), DEFAULT_BUDGET)
    return seq_cartesian(e.C, e, name="CM2")


@lru_cache(maxsize=None)
def klein_slice():
    """Monoids 1, Z/2 and Z/2 x Z/2 (built as a pointwise product) in FS4x.

    Small enough to enumerate, large enough to hold the biproduct of two
    copies of Z/2, which the size-2 fixture cannot.
    """
    T = terminal_mcat()
    FS4 = finite_sets(4)
    trivial, = enumerate_functors(T, FS4, DEFAULT_BUDGET, target_objects=[1])
    z2 = next(F for F in enumerate_functors(T, FS4, DEFAULT_BUDGET, target_objects=[2])
              if F(T.monoid_arrows("*")[1]).value == (0, 1, 1, 0))
    klein = pointwise_universal(T, FS4, [z2, z2], DEFAULT_BUDGET).H
    klein.label = "Z2xZ2"
    trivial.label, z2.label = "0", "Z2"
    H = InternalHom(T, FS4, [trivial, z2, klein], DEFAULT_BUDGET, name="Mon(FS4x)|Klein")
    e = monoid_enrichment(H, DEFAULT_BUDGET)
    return seq_cartesian(e.C, e, name="CM-Klein")


_CATALOG = {
    "T": ("terminal sequential backend 1_seq (cartesian)", terminal_mcat),
    "I": ("terminal category as a unary backend", lambda: unary(terminal_category())),
    "W": ("walking arrow a -> b, sequential", lambda: seq(walking_arrow())),
    "W-": ("walking arrow, unary", lambda: unary(walking_arrow())),
    "Z2": ("Z/2 as a one-object category, sequential", lambda: seq(z2_category())),
    "Z2-": ("Z/2 as a one-object category, unary", lambda: unary(z2_category())),
    "dZ2": ("discrete backend of the monoid Z/2", z2_discrete),
    "FS2x": ("finite sets of size <= 2, cartesian", lambda: finite_sets(2, True)),
    "FS2t": ("finite sets of size <= 2, symmetric only (tensor)", lambda: finite_sets(2, False)),
    "Bool": ("Boolean rig, sequential cartesian", bool_seq),
    "N": ("rig of naturals, sequential cartesian, components <= 2", lambda: nat_rig_seq(2)),
    "FW": ("free preadditive category on W, sequential, sums of <= 2 terms",
           lambda: free_preadditive_seq(walking_arrow(), bound=2)),
    "CM2": ("commutative monoids of size <= 2 with pointwise sums, sequential", additive_fixture),
}

_BUILT: dict = {}


def catalog() -> dict[str, str]:
    return {k: v[0] for k, v in _CATALOG.items()}


def fixture(key: str) -> Multicategory:
    if key not in _CATALOG:
        raise KeyError(key)
    if key not in _BUILT:
        _BUILT[key] = _CATALOG[key][1]()
    return _BUILT[key]
