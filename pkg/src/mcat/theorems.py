"""Named theorem suites.

Each suite takes a list of input references (catalog keys, description
paths, or ``"A:B"`` pairs for two-argument suites) and a budget, and
returns a :class:`~mcat.core.ValidationReport` with one child per
instance.  Without inputs a suite runs on its default instances.
"""
from __future__ import annotations

import itertools
import math
from typing import Callable

from . import analysis, constructions as K, homs, models
from .categories import FiniteCategory, terminal_category, walking_arrow
from .core import (COUNTEREXAMPLE, DEFAULT_BUDGET, Arrow, Budget, InputError, Multicategory,
                   ValidationReport, enumerate_family_maps, hom, signatures)
from .descriptions import load, load_backend
from .fixtures import catalog, fixture


def backend(ref: str) -> Multicategory:
    return load_backend(ref)


def category(ref: str) -> FiniteCategory:
    """A finite category from a catalog key (its underlying category) or a description."""
    if ref in ("T", "I", "1"):
        return terminal_category()
    if ref in catalog():
        M = fixture(ref)
        C = getattr(M, "cat", None)
        if isinstance(C, FiniteCategory):
            return C
        raise InputError(f"fixture {ref!r} is not built from a finite category")
    d = load(ref)
    if d.kind not in ("category", "preadditive", "monoidal", "products"):
        raise InputError(f"{ref}: expected a category description, got kind {d.kind!r}")
    return d.category()


def _pair(ref: str) -> tuple[str, ...]:
    parts = tuple(ref.split(":"))
    if len(parts) < 2:
        raise InputError(f"expected a pair 'A:B', got {ref!r}")
    return parts


def _suite(name: str, b: Budget, children) -> ValidationReport:
    top = ValidationReport(name, b)
    for c in children:
        top.add(c)
    return top


# -- suites --------------------------------------------------------------------------

def char_equivalences(inputs, b):
    """Sequentiality conditions agree on each backend."""
    out = []
    for ref in inputs or ["W", "Z2", "dZ2", "FS2t"]:
        r = analysis.sequentiality_report(backend(ref), b)
        r.details["input"] = ref
        out.append(r)
    return out


def cart1_products(inputs, b):
    out = []
    for ref in inputs or ["FS2x", "CM2"]:
        r = analysis.product_equivalence_report(backend(ref), b)
        r.details["input"] = ref
        out.append(r)
    return out


def rep_pointwise(inputs, b):
    """Pointwise products of monoids in ``[1_seq, M]`` and coproduct cones of monoids."""
    out = []
    T = K.terminal_mcat()
    for ref in inputs or ["FS2x"]:
        M = backend(ref)
        monoids = homs.enumerate_functors(T, M, b)
        for F1, F2 in itertools.product(monoids, repeat=2):
            if M.universal((F1.on_object("*"), F2.on_object("*"))) is None:
                continue
            pu = homs.pointwise_universal(T, M, [F1, F2], b, targets=monoids)
            r = pu.report
            r.law = f"pointwise product {F1.label} x {F2.label}"
            r.details.update(_monoid_product_oracle(M, F1, F2, pu.H))
            if not r.details["pointwise table"]:
                r.outcome = COUNTEREXAMPLE
                r.witness = {"problem": "multiplication is not the componentwise one"}
            out.append(r)
        r = analysis.cocartesian_check(homs.monoid_mcat(M, b), b)
        r.details["input"] = ref
        out.append(r)
    if not inputs:
        out.append(_klein_product(T, b))
    return out


def _klein_product(T, b):
    """Z/2 x Z/2 as a pointwise product in finite sets of size <= 4."""
    FS4 = K.finite_sets(4)
    z2 = next(F for F in homs.enumerate_functors(T, FS4, b, target_objects=[2])
              if F(T.monoid_arrows("*")[1]).value == (0, 1, 1, 0))
    pu = homs.pointwise_universal(T, FS4, [z2, z2], b)
    r = pu.report
    r.law = "pointwise product Z2 x Z2 in FS4x"
    r.details.update(_monoid_product_oracle(FS4, z2, z2, pu.H))
    if not r.details["pointwise table"]:
        r.outcome = COUNTEREXAMPLE
        r.witness = {"problem": "multiplication is not the componentwise one"}
    return r


def _monoid_product_oracle(M, F1, F2, H) -> dict:
    """The product monoid's table, read in pair coordinates, is componentwise."""
    (m1, e1, n1), (m2, e2, n2), (m, e, n) = (homs.monoid_structure(F) for F in (F1, F2, H))
    ok = n == n1 * n2 and e.value[0] == e1.value[0] * n2 + e2.value[0]
    for x1, y1, x2, y2 in itertools.product(range(n1), range(n1), range(n2), range(n2)):
        a, c = x1 * n2 + x2, y1 * n2 + y2
        want = m1.value[x1 * n1 + y1] * n2 + m2.value[x2 * n2 + y2]
        ok = ok and m.value[a * n + c] == want
    return {"carrier": n, "pointwise table": ok}


def seqexp_iso(inputs, b):
    out = []
    for ref in inputs or ["W:FS2t", "W:T", "Z2:dZ2"]:
        c, n = _pair(ref)[:2]
        r = homs.iso_unaryhom_seqexp(category(c), backend(n), b)
        r.details["input"] = ref
        out.append(r)
    if not inputs:
        for n in ("W", "dZ2"):
            out.append(homs.unit_source_iso(fixture(n), b))
        out.append(homs.unary_functor_category_check(walking_arrow(), walking_arrow(), b))
    return out


def frobenius(inputs, b):
    out = []
    for ref in inputs or ["W:Z2"]:
        m, c = _pair(ref)[:2]
        r = K.frobenius_check(backend(m), category(c), b)
        r.details["input"] = ref
        out.append(r)
    if not inputs:
        out.append(tensor_count_check(walking_arrow(), walking_arrow(), b))
    return out


def tensor_count_check(C: FiniteCategory, D: FiniteCategory, b: Budget = DEFAULT_BUDGET) -> ValidationReport:
    """Hom cardinalities of the closed-form ``C_seq (x) D_seq`` against ``seq(C x D)``
    and against the product formula computed from ``C`` and ``D`` alone."""
    T = K.bv_tensor_seq(C, D)
    S = K.seq(K.product_category(C, D))
    report = ValidationReport("closed-form tensor counts", b,
                              details={"tensor": T.name, "closed form": getattr(T, "closed_form", False)})
    for sig in signatures(S, b.max_arity):
        report.checked += 1
        formula = math.prod(len(C.hom(x, sig.cod[0])) * len(D.hom(y, sig.cod[1])) for x, y in sig.dom)
        left, right = len(hom(T, sig, b)), len(hom(S, sig, b))
        if not left == right == formula:
            report.outcome = COUNTEREXAMPLE
            report.witness = {"signature": str(sig), "tensor": left, "seq": right, "formula": formula}
            break
    return report


def corefsum(inputs, b):
    out = []
    for ref in inputs or ["T:FS2x", "W:W", "N:FS2x:fp"]:
        parts = _pair(ref)
        fp = len(parts) > 2 and parts[2] == "fp"
        r = analysis.coreflection_check(backend(parts[0]), backend(parts[1]), b, fp=fp)
        r.details["input"] = ref
        out.append(r)
    return out


def cart8_biproducts(inputs, b):
    out = []
    for ref in inputs or ["CM2", "Bool"]:
        M = backend(ref)
        for fam in analysis.families(M, min(2, b.max_arity)):
            if len(fam) == 1:
                continue
            r = analysis.biproduct_agreement(M, fam, b)
            r.details["input"] = ref
            out.append(r)
    return out


def free_nat_rig(inputs, b):
    """The free preadditive category on one object, made sequential, is the naturals backend."""
    bound = int(inputs[0]) if inputs else 2
    F = K.free_preadditive_seq(terminal_category(), bound=bound)
    N = K.nat_rig_seq(bound)

    def forward(a: Arrow) -> Arrow:
        return Arrow(a.dom, a.cod, tuple(len(s.terms) for s in a.value))

    def backward(a: Arrow) -> Arrow:
        return Arrow(a.dom, a.cod, tuple(F.cat.sum([F.cat.identity("*")] * k, "*", "*") for k in a.value))

    r = K.check_iso(F, N, forward, backward, b, law="F(1)_seq = N_seq")
    acts = ValidationReport("cartesian actions agree", b)
    for sig in signatures(F, min(2, b.max_arity)):
        for f in hom(F, sig, b):
            for s in enumerate_family_maps(f.dom, F.objects, min(2, b.max_arity)):
                acts.checked += 1
                if forward(F.act(s, f)) != N.act(s, forward(f)):
                    acts.outcome = COUNTEREXAMPLE
                    acts.witness = {"arrow": str(f), "map": str(s)}
                    return [r, acts]
    return [r, acts]


def models_kronecker(inputs, b):
    size = int(inputs[0]) if inputs else 2
    N = fixture("N")
    count = ValidationReport("models of N_seq = commutative monoids", b, details={"size cap": size})
    found = len(models.enumerate_models(N, size, b))
    oracle = sum(len(models.commutative_monoid_tables(n)) for n in range(size + 1))
    count.checked = found
    count.details.update({"models": found, "commutative monoids": oracle})
    if found != oracle:
        count.outcome = COUNTEREXAMPLE
        count.witness = {"models": found, "oracle": oracle}
    out = [count]
    for C in (terminal_category(), walking_arrow()):
        out.append(models.kronecker_semantics_check(C, size, b))
    return out


SUITES: dict[str, tuple[str, Callable]] = {
    "char-equivalences": ("sequentiality conditions agree", char_equivalences),
    "cart1-products": ("algebraic, universal and preuniversal products coincide", cart1_products),
    "rep-pointwise": ("pointwise monoid products and coproduct cones", rep_pointwise),
    "seqexp-iso": ("unary internal homs against sequential exponents", seqexp_iso),
    "frobenius": ("Frobenius law and closed-form tensors", frobenius),
    "corefsum": ("monoids coreflect", corefsum),
    "cart8-biproducts": ("biproducts against algebraic products", cart8_biproducts),
    "free-nat-rig": ("free preadditive on one object is the naturals", free_nat_rig),
    "models-kronecker": ("models against monoids in presheaves", models_kronecker),
}


def run_theorem(theorem_id: str, inputs=None, b: Budget = DEFAULT_BUDGET) -> ValidationReport:
    """Run one suite, or every suite on its defaults when ``theorem_id == "all"``."""
    if theorem_id == "all":
        return _suite("all", b, [run_theorem(k, None, b) for k in SUITES])
    if theorem_id not in SUITES:
        raise KeyError(theorem_id)
    title, runner = SUITES[theorem_id]
    top = _suite(theorem_id, b, runner(list(inputs or []), b))
    top.details["statement"] = title
    return top
