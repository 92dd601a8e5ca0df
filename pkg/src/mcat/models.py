"""Models of theories in finite sets.

A model of a cartesian backend ``T`` is an fp-functor ``T -> FSk`` (finite
sets with carriers of size at most ``k``); for a merely symmetric theory it
is a symmetric functor.  Counting is raw: labelled carriers, no
identification up to isomorphism unless :func:`iso_classes` is asked for.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .categories import FiniteCategory
from .constructions import finite_sets, seq
from .core import COUNTEREXAMPLE, DEFAULT_BUDGET, Arrow, Budget, InputError, Multicategory, ValidationReport
from .homs import (CatFunctor, InternalHom, MFunctor, category_functors_into, enumerate_functors,
                   fp_hom, functor_from_generators, internal_hom, plan_for)


@dataclass(frozen=True)
class Model:
    functor: MFunctor
    size_cap: int

    @property
    def carriers(self) -> dict:
        return dict(self.functor.obj_map)

    def __call__(self, a: Arrow) -> Arrow:
        return self.functor(a)


def enumerate_models(T: Multicategory, size_cap: int, b: Budget = DEFAULT_BUDGET) -> list[Model]:
    FS = finite_sets(size_cap)
    return [Model(F, size_cap) for F in enumerate_functors(T, FS, b, fp=T.cartesian)]


def relabel(model: Model, perms: dict, b: Budget = DEFAULT_BUDGET) -> Model:
    """Transport a model along bijections ``perms[A]`` of its carriers.

    ``perms[A]`` is a tuple with ``perms[A][x]`` the new name of ``x``.
    """
    F = model.functor
    T, FS = F.source, F.target
    inverse = {A: {y: x for x, y in enumerate(p)} for A, p in perms.items()}
    images = {}
    for g in T.generators(cartesian=F.fp, budget=b):
        f = F(g)
        images[g] = FS.function(f.dom, f.cod, lambda *xs, f=f, g=g: perms[g.cod][
            FS(f, *(inverse[A][x] for A, x in zip(g.dom, xs)))])
    G = functor_from_generators(T, FS, F.obj_map, images, b, fp=F.fp)
    return Model(G, model.size_cap)


def isomorphic(m1: Model, m2: Model, b: Budget = DEFAULT_BUDGET) -> bool:
    if m1.carriers != m2.carriers:
        return False
    T = m1.functor.source
    options = [list(itertools.permutations(range(m1.carriers[A]))) for A in T.objects]
    target = _key(m2, b)
    for choice in itertools.product(*options):
        if _key(relabel(m1, dict(zip(T.objects, choice)), b), b) == target:
            return True
    return False


def iso_classes(models: list[Model], b: Budget = DEFAULT_BUDGET) -> list[list[Model]]:
    classes: list[list[Model]] = []
    for m in models:
        for c in classes:
            if isomorphic(c[0], m, b):
                c.append(m)
                break
        else:
            classes.append([m])
    return classes


def _key(m: Model, b: Budget) -> tuple:
    F = m.functor
    plan = plan_for(F.source, b, F.fp)
    return tuple(F(a) for a in plan.arrows)


def model_hom_mcat(T: Multicategory, size_cap: int, b: Budget = DEFAULT_BUDGET) -> InternalHom:
    """Models as a backend: the fp internal hom (or the internal hom) into finite sets."""
    FS = finite_sets(size_cap)
    if T.cartesian:
        return fp_hom(T, FS, b)
    return internal_hom(T, FS, b)


# -- monoids in presheaves --------------------------------------------------------------

def commutative_monoid_tables(n: int) -> list[tuple[tuple, int]]:
    """Every commutative monoid on ``{0..n-1}`` as ``(table, unit)``; ``table[x*n+y] = xy``."""
    out = []
    for table in itertools.product(range(n), repeat=n * n):
        if any(table[x * n + y] != table[y * n + x] for x in range(n) for y in range(x)):
            continue
        if any(table[table[x * n + y] * n + z] != table[x * n + table[y * n + z]]
               for x in range(n) for y in range(n) for z in range(n)):
            continue
        for e in range(n):
            if all(table[e * n + x] == x for x in range(n)):
                out.append((table, e))
    return out


def kronecker_semantics_check(C: FiniteCategory, size_cap: int, b: Budget = DEFAULT_BUDGET) -> ValidationReport:
    """Models of ``seq(C)`` against functors ``C -> FinSet`` with compatible commutative monoids.

    The forward map reads off the images of unary arrows and of the monoid
    generators; the backward map rebuilds a functor from that data.  Both
    directions are checked on every element, and the two enumerations must
    match exactly.
    """
    report = ValidationReport("models of seq(C) = monoids in C-sets", b,
                              details={"category": C.name, "size cap": size_cap})
    S = seq(C)
    FS = finite_sets(size_cap)
    models = enumerate_functors(S, FS, b)
    tables = {n: commutative_monoid_tables(n) for n in FS.objects}
    pairs = []
    for P in category_functors_into(C, FS, b):
        per_object = [tables[P.on_object(A)] for A in C.objects]
        for structure in itertools.product(*per_object):
            m = dict(zip(C.objects, structure))
            if all(_is_hom(FS, P(a), m[x], m[y]) for a, (x, y) in C.arrows.items()):
                pairs.append((P, tuple(structure)))
    report.details.update({"models": len(models), "pairs": len(pairs)})

    def forward(G: MFunctor):
        om = {A: G.on_object(A) for A in C.objects}
        P = CatFunctor(C, FS, om, {a: G(S.unary(a)) for a in C.arrows})
        structure = []
        for A in C.objects:
            m0, m2 = S.monoid_arrows(A)
            structure.append((G(m2).value, G(m0).value[0]))
        return P, tuple(structure)

    def backward(pair) -> MFunctor:
        P, structure = pair
        om = {A: P.on_object(A) for A in C.objects}
        images = {}
        for a, (x, y) in C.arrows.items():
            if not (x == y and a == C.identity(x)):
                images[S.unary(a)] = P(a)
        for A, (table, e) in zip(C.objects, structure):
            n = om[A]
            m0, m2 = S.monoid_arrows(A)
            images[m0] = Arrow((), n, (e,))
            images[m2] = Arrow((n, n), n, tuple(table))
        return functor_from_generators(S, FS, om, images, b)

    report.checked = len(models) + len(pairs)
    image = [forward(G) for G in models]
    if len(set(image)) != len(image):
        report.outcome = COUNTEREXAMPLE
        report.witness = {"problem": "forward map is not injective"}
        return report
    if set(image) != set(pairs):
        report.outcome = COUNTEREXAMPLE
        report.witness = {"problem": "forward map misses pairs or leaves them",
                          "models": len(models), "pairs": len(pairs)}
        return report
    for pair in pairs:
        try:
            G = backward(pair)
        except InputError as exc:
            report.outcome = COUNTEREXAMPLE
            report.witness = {"problem": f"pair does not extend to a model: {exc}"}
            return report
        if forward(G) != pair:
            report.outcome = COUNTEREXAMPLE
            report.witness = {"problem": "round trip differs"}
            return report
    return report


def _is_hom(FS, f: Arrow, source, target) -> bool:
    (t1, e1), (t2, e2) = source, target
    v = f.value
    n, m = f.dom[0], f.cod
    if v[e1] != e2:
        return False
    return all(v[t1[x * n + y]] == t2[v[x] * m + v[y]] for x in range(n) for y in range(n))
