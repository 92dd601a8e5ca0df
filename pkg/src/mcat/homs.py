"""Functors, multi-transformations and the internal hom.

Functors out of a backend are determined by their values on a finite set
of generators.  A :class:`DerivationPlan` records, for every arrow of the
source within the arity cap, one way of building it from generators by
composition and actions; every other such relation becomes a check.
Enumeration then backtracks over generator images, running each check as
soon as all the arrows it mentions have values.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .categories import FiniteCategory
from .core import (COUNTEREXAMPLE, DEFAULT_BUDGET, Arrow, Budget, BudgetError, FamilyMap,
                   InputError, Multicategory, PreconditionError, Signature, ValidationReport,
                   enumerate_family_maps, hom, signatures)
from .laws import iter_composites, view


class MFunctor:
    """A functor between backends.

    Arrow images are stored for every arrow in the source view; functors
    given by a rule (identity, forgetful maps) carry a callable instead.
    """

    def __init__(self, source: Multicategory, target: Multicategory, obj_map: dict,
                 images: dict | None = None, fn: Callable | None = None, key=None,
                 label: str | None = None, fp: bool = False):
        self.source = source
        self.target = target
        self.obj_map = dict(obj_map)
        self.images = images
        self.fn = fn
        self.fp = fp
        objs = tuple(self.obj_map[x] for x in source.objects)
        if key is None:
            if images is None:
                raise InputError("a functor needs images or a rule")
            key = (objs, tuple(images[a] for a in view_order(source, images)))
        self.key = key
        self._hash = hash(key)
        self.label = label or "F(" + ",".join(f"{x}>{y}" for x, y in zip(source.objects, objs)) + ")"

    def on_object(self, x):
        return self.obj_map[x]

    def __call__(self, a: Arrow) -> Arrow:
        if self.images is not None and a in self.images:
            return self.images[a]
        if self.fn is not None:
            return self.fn(a)
        raise BudgetError(f"{self.label}: no image recorded for {a} (outside the view)")

    def __eq__(self, other):
        return isinstance(other, MFunctor) and self.key == other.key

    def __hash__(self):
        return self._hash

    def __str__(self):
        return self.label

    __repr__ = __str__


def view_order(M: Multicategory, images: dict) -> list:
    return sorted(images, key=_view_key(M))


def _view_key(M):
    idx = {}

    def key(a):
        if not idx:
            for i, x in enumerate(M.objects):
                idx[x] = i
        return (a.arity, tuple(idx[x] for x in a.dom), idx[a.cod], str(a.value))
    return key


def identity_functor(M: Multicategory) -> MFunctor:
    return MFunctor(M, M, {x: x for x in M.objects}, fn=lambda a: a, key=("identity", id(M)),
                    label="Id", fp=M.cartesian)


# -- derivation plans -----------------------------------------------------------

class DerivationPlan:
    """Generators, a defining derivation per arrow and the remaining checks.

    A derivation is ``(result, "c", f, gs)`` for a composite or
    ``(result, "a", sigma, f)`` for an action; entries are view indices.
    """

    def __init__(self, M: Multicategory, b: Budget, cartesian: bool):
        v = view(M, b)
        if v.truncated:
            raise BudgetError(f"{M.name}: the view is truncated; bound the backend first")
        self.M = M
        self.budget = b
        self.cartesian = cartesian
        self.arrows = v.arrows
        index = v.index
        self.index = index
        ids = {index[M.identity(x)] for x in M.objects}
        self.identity_idx = [index[M.identity(x)] for x in M.objects]
        gens = M.generators(cartesian=cartesian, budget=b)
        for g in gens:
            if g not in index:
                raise BudgetError(f"{M.name}: generator {g} lies outside the view")
        self.generators = [index[g] for g in gens]

        derivs = []
        for f, gs in iter_composites(M, self.arrows, b.max_arity):
            fi = index[f]
            gi = tuple(index[g] for g in gs)
            if fi in ids or all(k in ids for k in gi):
                continue
            r = M.compose(f, gs)
            if r in index:
                derivs.append((index[r], "c", fi, gi))
        if cartesian or M.symmetric:
            for f in self.arrows:
                for s in enumerate_family_maps(f.dom, M.objects, b.max_arity,
                                               bijective_only=not cartesian):
                    if s.source == s.target and s.mapping == tuple(range(len(s.mapping))):
                        continue
                    r = M.act(s, f)
                    if r in index:
                        derivs.append((index[r], "a", s, index[f]))
        self.derivations = derivs

        level = {i: 0 for i in self.identity_idx}
        self.defining: list[list] = [[]]  # per level: (arrow idx, derivation or None)
        self.fixed: list[bool] = [False]  # level's generator already reached
        used = set()
        for lvl in range(1, len(self.generators) + 1):
            new = []
            g = self.generators[lvl - 1]
            if g in level:
                self.fixed.append(True)
            else:
                self.fixed.append(False)
                level[g] = lvl
                new.append((g, None))
            changed = True
            while changed:
                changed = False
                for k, d in enumerate(derivs):
                    r = d[0]
                    if r in level:
                        continue
                    if all(o in level for o in _operands(d)):
                        level[r] = lvl
                        new.append((r, d))
                        used.add(k)
                        changed = True
            self.defining.append(new)
        missing = [self.arrows[i] for i in range(len(self.arrows)) if i not in level]
        if missing:
            raise BudgetError(f"{M.name}: {len(missing)} arrows are not generated within the view, "
                              f"e.g. {missing[0]}")
        self.level = level
        self.checks: list[list] = [[] for _ in self.defining]
        for k, d in enumerate(derivs):
            if k in used:
                continue
            lvl = max(level[i] for i in (d[0], *_operands(d)))
            self.checks[lvl].append(d)

    @property
    def depth(self) -> int:
        return len(self.generators)


def _operands(d) -> tuple:
    return (d[2], *d[3]) if d[1] == "c" else (d[3],)


def plan_for(M: Multicategory, b: Budget, cartesian: bool) -> DerivationPlan:
    cache = M.__dict__.setdefault("_plans", {})
    key = (b.max_arity, b.max_enum, cartesian)
    if key not in cache:
        cache[key] = DerivationPlan(M, b, cartesian)
    return cache[key]


def _evaluate(N: Multicategory, d, values: list, obj_of: Callable) -> Arrow:
    if d[1] == "c":
        return N.compose(values[d[2]], [values[k] for k in d[3]])
    return N.act(d[2].relabel(obj_of), values[d[3]])


def _hom_list(N: Multicategory, dom: tuple, cod, b: Budget, cache: dict) -> tuple:
    key = (dom, cod)
    hs = cache.get(key)
    if hs is None:
        h = hom(N, Signature(dom, cod), b)
        if h.truncated:
            raise BudgetError(f"{N.name}: hom{Signature(dom, cod)} exceeds max_enum; cannot enumerate images")
        hs = h.arrows
        cache[key] = hs
    return hs


def enumerate_functors(M: Multicategory, N: Multicategory, b: Budget = DEFAULT_BUDGET,
                       fp: bool = False, target_objects: Sequence | None = None,
                       limit: int | None = None) -> list[MFunctor]:
    """Every functor ``M -> N`` (fp-functors when ``fp``), in deterministic order.

    Functors are determined on the source view; generator images range over
    full hom-sets of ``N``.  ``target_objects`` restricts the object map.
    """
    if fp and not (M.cartesian and N.cartesian):
        raise PreconditionError("fp-functors need cartesian source and target")
    plan = plan_for(M, b, fp)
    objs = tuple(target_objects) if target_objects is not None else N.objects
    out: list[MFunctor] = []
    homs: dict = {}
    n = len(plan.arrows)
    for choice in itertools.product(objs, repeat=len(M.objects)):
        obj_map = dict(zip(M.objects, choice))
        obj_of = obj_map.__getitem__
        values: list = [None] * n
        for x, i in zip(M.objects, plan.identity_idx):
            values[i] = N.identity(obj_map[x])
        if not _run_level(N, plan, 0, values, obj_of):
            continue
        for vals in _search(N, plan, 1, values, obj_of, b, homs):
            images = {a: vals[i] for i, a in enumerate(plan.arrows)}
            F = MFunctor(M, N, obj_map, images, key=(choice, tuple(vals[g] for g in plan.generators)),
                         fp=fp)
            F.label = f"F{len(out)}[" + ",".join(map(str, choice)) + "]"
            out.append(F)
            if limit is not None and len(out) >= limit:
                return out
    return out


def _run_level(N, plan, lvl, values, obj_of) -> bool:
    for r, d in plan.defining[lvl]:
        if d is not None:
            values[r] = _evaluate(N, d, values, obj_of)
    for d in plan.checks[lvl]:
        if _evaluate(N, d, values, obj_of) != values[d[0]]:
            return False
    return True


def _search(N, plan, lvl, values, obj_of, b, homs):
    if lvl > plan.depth:
        yield list(values)
        return
    g = plan.generators[lvl - 1]
    if plan.fixed[lvl]:
        if _run_level(N, plan, lvl, values, obj_of):
            yield from _search(N, plan, lvl + 1, values, obj_of, b, homs)
        return
    a = plan.arrows[g]
    cands = _hom_list(N, tuple(obj_of(x) for x in a.dom), obj_of(a.cod), b, homs)
    for c in cands:
        values[g] = c
        if _run_level(N, plan, lvl, values, obj_of):
            yield from _search(N, plan, lvl + 1, values, obj_of, b, homs)


def functor_from_generators(M: Multicategory, N: Multicategory, obj_map: dict, gen_images: dict,
                            b: Budget = DEFAULT_BUDGET, fp: bool = False,
                            label: str | None = None) -> MFunctor:
    """Extend generator images to the view; InputError if a relation fails."""
    plan = plan_for(M, b, fp)
    obj_of = obj_map.__getitem__
    values: list = [None] * len(plan.arrows)
    for x, i in zip(M.objects, plan.identity_idx):
        values[i] = N.identity(obj_map[x])
    for lvl in range(plan.depth + 1):
        if lvl > 0 and not plan.fixed[lvl]:
            g = plan.generators[lvl - 1]
            values[g] = gen_images[plan.arrows[g]]
        for r, d in plan.defining[lvl]:
            if d is not None:
                values[r] = _evaluate(N, d, values, obj_of)
        for d in plan.checks[lvl]:
            if _evaluate(N, d, values, obj_of) != values[d[0]]:
                raise InputError(f"generator images violate a relation producing {plan.arrows[d[0]]}")
        if lvl > 0 and plan.fixed[lvl]:
            g = plan.generators[lvl - 1]
            if gen_images.get(plan.arrows[g], values[g]) != values[g]:
                raise InputError(f"image of {plan.arrows[g]} is forced to {values[g]}")
    images = {a: values[i] for i, a in enumerate(plan.arrows)}
    choice = tuple(obj_map[x] for x in M.objects)
    return MFunctor(M, N, obj_map, images, key=(choice, tuple(values[g] for g in plan.generators)),
                    label=label, fp=fp)


def check_functor(F: MFunctor, b: Budget = DEFAULT_BUDGET) -> ValidationReport:
    """Identities, composites and actions within the view are preserved."""
    M, N = F.source, F.target
    law = "fp-functor" if F.fp else "functor"
    report = ValidationReport(law, b, details={"functor": F.label})
    plan = plan_for(M, b, F.fp)
    obj_of = F.on_object
    values = [F(a) for a in plan.arrows]
    for a, img in zip(plan.arrows, values):
        report.checked += 1
        if img.dom != tuple(obj_of(x) for x in a.dom) or img.cod != obj_of(a.cod):
            report.outcome = COUNTEREXAMPLE
            report.witness = {"arrow": str(a), "image": str(img), "problem": "ill-typed image"}
            return report
    for x in M.objects:
        report.checked += 1
        if F(M.identity(x)) != N.identity(obj_of(x)):
            report.outcome = COUNTEREXAMPLE
            report.witness = {"object": str(x), "problem": "identity not preserved"}
            return report
    for d in plan.derivations:
        report.checked += 1
        got = _evaluate(N, d, values, obj_of)
        if got != values[d[0]]:
            report.outcome = COUNTEREXAMPLE
            if d[1] == "c":
                inst = {"composite": str(plan.arrows[d[2]]), "arguments": [str(plan.arrows[k]) for k in d[3]]}
            else:
                inst = {"action": str(d[2]), "arrow": str(plan.arrows[d[3]])}
            report.witness = {**inst, "image of result": str(values[d[0]]), "computed": str(got)}
            return report
    return report


# -- transformations -----------------------------------------------------------

def transposition(n: int, m: int) -> tuple:
    """Block transposition: position ``i*m + j`` goes to ``j*n + i``."""
    return tuple(j * n + i for i in range(n) for j in range(m))


def mnat_sides(N: Multicategory, f_dom: tuple, f_cod, Ff: Arrow, Fis: Sequence[Arrow],
               comps: dict) -> tuple[Arrow, Arrow]:
    """Both sides of the naturality condition for an arrow ``f: f_dom -> f_cod``.

    ``Ff`` is the target functor's image and ``Fis`` the source functors'
    images; ``comps`` maps objects to components.
    """
    lhs = N.compose(Ff, [comps[A] for A in f_dom])
    inner = N.compose(comps[f_cod], list(Fis))
    if len(Fis) <= 1 or len(f_dom) <= 1:
        return lhs, inner
    sigma = FamilyMap(inner.dom, lhs.dom, transposition(len(Fis), len(f_dom)))
    return lhs, N.act(sigma, inner)


class _PointwiseHom(Multicategory):
    """Shared machinery: arrows are component families indexed by source objects."""

    N: Multicategory
    budget: Budget
    index_objects: tuple

    def _functor_obj(self, F, A):
        raise NotImplementedError

    def _constraints(self):
        """Triples ``(f_dom, f_cod, image)`` with ``image(F)`` the functor's image of f."""
        raise NotImplementedError

    def _accept(self, alpha: Arrow) -> None:
        """Hook run on every transformation found."""

    def iter_hom(self, dom: tuple, cod):
        cache = self.__dict__.setdefault("_found", {})
        key = (dom, cod)
        found = cache.get(key)
        if found is None:
            found = []
            for alpha in self._search(dom, cod):
                self._accept(alpha)
                found.append(alpha)
            found = cache[key] = tuple(found)
        return iter(found)

    def _search(self, dom: tuple, cod):
        N, b = self.N, self.budget
        objs = self.index_objects
        pos = {A: k for k, A in enumerate(objs)}
        cands = [_hom_list(N, tuple(self._functor_obj(F, A) for F in dom), self._functor_obj(cod, A),
                           b, self._homs) for A in objs]
        if any(not c for c in cands):
            return
        # constraints with the functor images resolved once per signature
        ready: list[list] = [[] for _ in objs]
        for f_dom, f_cod, image in self._constraints():
            Fis = [image(F) for F in dom]
            Ff = image(cod)
            sigma = None
            if len(Fis) > 1 and len(f_dom) > 1:
                inner_dom = tuple(x for F in Fis for x in F.dom)
                lhs_dom = tuple(x for A in f_dom for x in (self._functor_obj(F, A) for F in dom))
                sigma = FamilyMap(inner_dom, lhs_dom, transposition(len(Fis), len(f_dom)))
            lvl = max(pos[A] for A in (*f_dom, f_cod))
            ready[lvl].append((f_dom, f_cod, Ff, Fis, sigma))
        # join index for unary constraints whose source is settled earlier
        keyed: list = [None] * len(objs)
        for k, A in enumerate(objs):
            for con in ready[k]:
                f_dom, f_cod, Ff, Fis, _ = con
                if len(f_dom) == 1 and f_cod == A and pos[f_dom[0]] < k:
                    table: dict = {}
                    for c in cands[k]:
                        table.setdefault(N.compose(c, Fis), []).append(c)
                    keyed[k] = (con, table)
                    break
        comps: dict = {}

        def holds(con) -> bool:
            f_dom, f_cod, Ff, Fis, sigma = con
            lhs = N.compose(Ff, [comps[A] for A in f_dom])
            inner = N.compose(comps[f_cod], Fis)
            return lhs == (inner if sigma is None else N.act(sigma, inner))

        def rec(k):
            if k == len(objs):
                yield Arrow(dom, cod, tuple(comps[A] for A in objs))
                return
            A = objs[k]
            pool = cands[k]
            skip = None
            if keyed[k] is not None:
                skip, table = keyed[k]
                pool = table.get(N.compose(skip[2], [comps[skip[0][0]]]), ())
            for c in pool:
                comps[A] = c
                if all(con is skip or holds(con) for con in ready[k]):
                    yield from rec(k + 1)
            comps.pop(A, None)

        yield from rec(0)

    def identity(self, F) -> Arrow:
        return Arrow((F,), F, tuple(self.N.identity(self._functor_obj(F, A)) for A in self.index_objects))

    def _compose(self, alpha: Arrow, betas) -> Arrow:
        comps = tuple(self.N.compose(a, [bt.value[k] for bt in betas])
                      for k, a in enumerate(alpha.value))
        return Arrow(tuple(x for bt in betas for x in bt.dom), alpha.cod, comps)

    def _act(self, sigma: FamilyMap, alpha: Arrow) -> Arrow:
        comps = tuple(self.N.act(sigma.relabel(lambda F, A=A: self._functor_obj(F, A)), a)
                      for A, a in zip(self.index_objects, alpha.value))
        return Arrow(sigma.target, alpha.cod, comps)

    def component(self, alpha: Arrow, A) -> Arrow:
        return alpha.value[self.index_objects.index(A)]


class InternalHom(_PointwiseHom):
    """Functors ``M -> N`` and the transformations between them.

    Naturality is tested on the generators of ``M``; every accepted
    transformation is then spot-checked on further arrows of the view as a
    runtime assertion of the closure argument.
    """

    def __init__(self, M: Multicategory, N: Multicategory, functors: Iterable[MFunctor],
                 b: Budget = DEFAULT_BUDGET, fp: bool = False, name: str | None = None):
        self.M, self.N, self.budget, self.fp = M, N, b, fp
        self.objects = tuple(functors)
        self.index_objects = tuple(M.objects)
        self.symmetric = N.symmetric
        self.cartesian = N.cartesian
        self.name = name or f"[{M.name},{N.name}]{'_fp' if fp else ''}"
        self._homs: dict = {}
        self.gens = M.generators(cartesian=fp, budget=b)
        spot =[a for a in view(M, b).arrows
                if a.arity <= 2 and a not in self.gens and not (a.arity == 1 and a == M.identity(a.cod))]
        self.spot = spot[:32]

    def _functor_obj(self, F, A):
        return F.on_object(A)

    def _constraints(self):
        return [(g.dom, g.cod, (lambda F, g=g: F(g))) for g in self.gens]

    def _accept(self, alpha: Arrow) -> None:
        comps = dict(zip(self.index_objects, alpha.value))
        for a in self.spot:
            lhs, rhs = mnat_sides(self.N, a.dom, a.cod, alpha.cod(a), [F(a) for F in alpha.dom], comps)
            if lhs != rhs:
                raise AssertionError(f"naturality on generators did not propagate to {a}")

    def check_transform(self, alpha: Arrow) -> ValidationReport:
        """Naturality of ``alpha`` on every arrow of the source view."""
        report = ValidationReport("naturality", self.budget)
        comps = dict(zip(self.index_objects, alpha.value))
        for a in view(self.M, self.budget).arrows:
            report.checked += 1
            lhs, rhs = mnat_sides(self.N, a.dom, a.cod, alpha.cod(a), [F(a) for F in alpha.dom], comps)
            if lhs != rhs:
                report.outcome = COUNTEREXAMPLE
                report.witness = {"arrow": str(a), "lhs": str(lhs), "rhs": str(rhs)}
                break
        return report


def internal_hom(M: Multicategory, N: Multicategory, b: Budget = DEFAULT_BUDGET,
                 objects: Sequence[MFunctor] | None = None, fp: bool = False) -> InternalHom:
    if objects is None:
        objects = enumerate_functors(M, N, b, fp=fp)
    return InternalHom(M, N, objects, b, fp=fp)


def fp_hom(M: Multicategory, N: Multicategory, b: Budget = DEFAULT_BUDGET,
           objects: Sequence[MFunctor] | None = None,
           target_objects: Sequence | None = None) -> InternalHom:
    """The full sub-backend of the internal hom on fp-functors (cartesian pointwise)."""
    if not (M.cartesian and N.cartesian):
        raise PreconditionError("fp_hom needs cartesian source and target")
    if objects is None:
        objects = enumerate_functors(M, N, b, fp=True, target_objects=target_objects)
    return InternalHom(M, N, objects, b, fp=True)


def monoid_mcat(M: Multicategory, b: Budget = DEFAULT_BUDGET,
                target_objects: Sequence | None = None) -> InternalHom:
    """``[1_seq, M]``: commutative monoids in ``M`` and their multi-morphisms."""
    T = _terminal()
    return InternalHom(T, M, enumerate_functors(T, M, b, target_objects=target_objects), b,
                       name=f"Mon({M.name})")


_TERMINAL = []


def _terminal():
    if not _TERMINAL:
        from .constructions import terminal_mcat
        _TERMINAL.append(terminal_mcat())
    return _TERMINAL[0]


def monoid_structure(F: MFunctor) -> tuple[Arrow, Arrow, object]:
    """``(m2, m0, carrier)`` of a functor out of ``1_seq``."""
    T = F.source
    m0, m2 = T.monoid_arrows("*")
    return F(m2), F(m0), F.on_object("*")


def forgetful(H: InternalHom) -> MFunctor:
    """``[1_seq, M] -> M``: underlying object and the single component."""
    return MFunctor(H, H.N, {F: F.on_object("*") for F in H.objects},
                    fn=lambda a: a.value[0], key=("forget", id(H)), label="U")


def cmon_category(M: Multicategory, b: Budget = DEFAULT_BUDGET,
                  target_objects: Sequence | None = None) -> FiniteCategory:
    """Commutative monoids in ``M`` with their homomorphisms."""
    from .constructions import underlying
    return underlying(monoid_mcat(M, b, target_objects), b, name=f"cMon({M.name})")


def monoid_enrichment(H: InternalHom, b: Budget = DEFAULT_BUDGET):
    """Pointwise addition of homomorphisms in ``cMon``: ``(f + g)(x) = f(x) g(x)``.

    Only unary hom-sets are enumerated, so this works for slices whose
    higher hom-sets are out of reach.
    """
    from .categories import CMonEnrichment
    from .constructions import underlying
    C = underlying(H, Budget(1, b.max_depth, b.max_enum), name=f"{H.name}_-")
    N = H.N
    zero, add = {}, {}
    for F in H.objects:
        for G in H.objects:
            m2, m0, y = monoid_structure(G)
            x = F.on_object("*")
            zero[(F, G)] = Arrow((F,), G, (N.act(FamilyMap((), (x,), ()), m0),))
            hs = C.hom(F, G)
            for f in hs:
                for g in hs:
                    s = N.act(FamilyMap.constant(x, 2), N.compose(m2, [f.value[0], g.value[0]]))
                    add[(f, g)] = Arrow((F,), G, (s,))
    return CMonEnrichment(C, zero, add)


# -- sequential exponent ----------------------------------------------------------

class CatFunctor:
    """A functor from a finite category into the unary part of a backend."""

    def __init__(self, C: FiniteCategory, N: Multicategory, obj_map: dict, arr_map: dict, label: str = ""):
        self.C, self.N = C, N
        self.obj_map = dict(obj_map)
        self.arr_map = dict(arr_map)
        self.key = (tuple(self.obj_map[x] for x in C.objects), tuple(self.arr_map[a] for a in C.arrows))
        self._hash = hash(self.key)
        self.label = label or "G(" + ",".join(map(str, self.key[0])) + ")"

    def on_object(self, x):
        return self.obj_map[x]

    def __call__(self, a) -> Arrow:
        return self.arr_map[a]

    def __eq__(self, other):
        return isinstance(other, CatFunctor) and self.key == other.key

    def __hash__(self):
        return self._hash

    def __str__(self):
        return self.label

    __repr__ = __str__


def category_functors_into(C: FiniteCategory, N: Multicategory, b: Budget = DEFAULT_BUDGET) -> list[CatFunctor]:
    """Functors ``C -> N_-`` by brute force over object maps and arrow images."""
    out = []
    homs: dict = {}
    names = list(C.arrows)
    for objs in itertools.product(N.objects, repeat=len(C.objects)):
        om = dict(zip(C.objects, objs))
        choices = []
        for a in names:
            x, y = C.arrows[a]
            if x == y and a == C.identity(x):
                choices.append((N.identity(om[x]),))
            else:
                choices.append(_hom_list(N, (om[x],), om[y], b, homs))
        for imgs in itertools.product(*choices):
            am = dict(zip(names, imgs))
            if all(am[h] == N.compose(am[g], [am[f]]) for (g, f), h in C.composition.items()):
                out.append(CatFunctor(C, N, om, am, label=f"G{len(out)}[" + ",".join(map(str, objs)) + "]"))
    return out


class SeqExponent(_PointwiseHom):
    """``N^{C_seq}``: functors ``C -> N_-``; components natural for unary arrows only."""

    def __init__(self, C: FiniteCategory, N: Multicategory, b: Budget = DEFAULT_BUDGET):
        self.C, self.N, self.budget = C, N, b
        self.objects = tuple(category_functors_into(C, N, b))
        self.index_objects = tuple(C.objects)
        self.symmetric = N.symmetric
        self.cartesian = N.cartesian
        self.name = f"{N.name}^({C.name}_seq)"
        self._homs: dict = {}

    def _functor_obj(self, F, A):
        return F.on_object(A)

    def _constraints(self):
        C = self.C
        return [((x,), y, (lambda F, a=a: F(a))) for a, (x, y) in C.arrows.items()
                if not (x == y and a == C.identity(x))]

    def end_by_filter(self, dom: tuple, cod) -> list[Arrow]:
        """The same hom-set by filtering every component family (independent path)."""
        N, b = self.N, self.budget
        cands = [hom(N, Signature(tuple(F.on_object(A) for F in dom), cod.on_object(A)), b).arrows
                 for A in self.index_objects]
        out = []
        for comps in itertools.product(*cands):
            table = dict(zip(self.index_objects, comps))
            ok = True
            for a, (x, y) in self.C.arrows.items():
                lhs = N.compose(cod(a), [table[x]])
                rhs = N.compose(table[y], [F(a) for F in dom])
                if lhs != rhs:
                    ok = False
                    break
            if ok:
                out.append(Arrow(dom, cod, comps))
        return out


def seq_exponent(C: FiniteCategory, N: Multicategory, b: Budget = DEFAULT_BUDGET) -> SeqExponent:
    return SeqExponent(C, N, b)


def iso_unaryhom_seqexp(C: FiniteCategory, N: Multicategory, b: Budget = DEFAULT_BUDGET) -> ValidationReport:
    """Compare ``[C^-, N]`` with ``N^{C_seq}`` through identical components."""
    from .constructions import unary
    report = ValidationReport("unary internal hom = sequential exponent", b,
                              details={"category": C.name, "target": N.name})
    U = unary(C)
    L = internal_hom(U, N, b)
    R = seq_exponent(C, N, b)

    def to_cat(G: MFunctor) -> CatFunctor:
        am = {a: G(Arrow((x,), y, a)) for a, (x, y) in C.arrows.items()}
        return CatFunctor(C, N, {x: G.on_object(x) for x in C.objects}, am)

    phi = {G: to_cat(G) for G in L.objects}
    report.details["functors"] = len(L.objects)
    if len(set(phi.values())) != len(L.objects) or set(phi.values()) != set(R.objects):
        report.outcome = COUNTEREXAMPLE
        report.witness = {"problem": "object map is not a bijection",
                          "left": len(L.objects), "right": len(R.objects)}
        return report
    rmap = {c: c for c in R.objects}
    sample = []
    for n in range(b.max_arity + 1):
        for dom in itertools.product(L.objects, repeat=n):
            for cod in L.objects:
                report.checked += 1
                left = list(L.iter_hom(dom, cod))
                rdom = tuple(rmap[phi[G]] for G in dom)
                right = list(R.iter_hom(rdom, rmap[phi[cod]]))
                if len(left) != len(right) or {a.value for a in left} != {a.value for a in right}:
                    report.outcome = COUNTEREXAMPLE
                    report.witness = {"signature": f"({', '.join(map(str, dom))}; {cod})",
                                      "left": len(left), "right": len(right)}
                    return report
                if len(sample) < b.max_enum:
                    sample.extend(zip(left, right))
    report.details["arrows compared"] = len(sample)
    # composition with unary arrows and the symmetric action, computed on both sides
    unary_pairs = [(l, r) for l, r in sample if l.arity == 1]
    checked = 0
    for l, r in sample:
        for i in range(l.arity):
            for lu, ru in unary_pairs:
                if lu.cod != l.dom[i] or checked >= b.max_enum:
                    continue
                checked += 1
                lc = L.partial(l, i, lu)
                rc = R.partial(r, i, ru)
                if lc.value != rc.value:
                    report.outcome = COUNTEREXAMPLE
                    report.witness = {"problem": "composition differs", "arrow": str(l), "argument": str(lu)}
                    return report
        if N.symmetric:
            for perm in itertools.permutations(range(l.arity)):
                checked += 1
                sl = FamilyMap.permutation(l.dom, perm)
                sr = FamilyMap.permutation(r.dom, perm)
                if L.act(sl, l).value != R.act(sr, r).value:
                    report.outcome = COUNTEREXAMPLE
                    report.witness = {"problem": "action differs", "arrow": str(l), "perm": list(perm)}
                    return report
    report.checked += checked
    report.details["operation checks"] = checked
    return report


def unit_source_iso(N: Multicategory, b: Budget = DEFAULT_BUDGET) -> ValidationReport:
    """``[1^-, N]`` against ``N``: evaluate functors at the point, transformations at their component."""
    from .categories import terminal_category
    from .constructions import unary
    H = internal_hom(unary(terminal_category()), N, b)
    report = ValidationReport("[1^-, N] = N", b, details={"target": N.name})
    phi = {F: F.on_object("*") for F in H.objects}
    back = {x: F for F, x in phi.items()}
    if len(back) != len(phi) or set(back) != set(N.objects):
        report.outcome = COUNTEREXAMPLE
        report.witness = {"problem": "object map is not a bijection",
                          "left": len(phi), "right": len(N.objects)}
        return report
    arrows = []
    for sig in signatures(N, b.max_arity):
        report.checked += 1
        left = list(H.iter_hom(tuple(back[x] for x in sig.dom), back[sig.cod]))
        right = hom(N, sig, b)
        image = [a.value[0] for a in left]
        if len(set(image)) != len(image) or set(image) != set(right):
            report.outcome = COUNTEREXAMPLE
            report.witness = {"signature": str(sig), "left": len(left), "right": len(right)}
            return report
        arrows.extend(left)
    report.details["arrows"] = len(arrows)
    for f, gs in iter_composites(H, arrows, b.max_arity):
        report.checked += 1
        if H.compose(f, gs).value[0] != N.compose(f.value[0], [g.value[0] for g in gs]):
            report.outcome = COUNTEREXAMPLE
            report.witness = {"problem": "composition differs", "arrow": str(f)}
            return report
    if N.symmetric:
        for f in arrows:
            for perm in itertools.permutations(range(f.arity)):
                report.checked += 1
                s = FamilyMap.permutation(f.dom, perm)
                if H.act(s, f).value[0] != N.act(s.relabel(phi.__getitem__), f.value[0]):
                    report.outcome = COUNTEREXAMPLE
                    report.witness = {"problem": "action differs", "arrow": str(f), "perm": list(perm)}
                    return report
    return report


def unary_functor_category_check(C: FiniteCategory, D: FiniteCategory,
                                 b: Budget = DEFAULT_BUDGET) -> ValidationReport:
    """``[C^-, D^-]`` has only unary arrows and its underlying category counts
    like the functor category ``[C, D]`` (brute-force naturals)."""
    from .categories import category_functors, functor_category_naturals
    from .constructions import unary
    H = internal_hom(unary(C), unary(D), b)
    report = ValidationReport("[C^-, D^-] underlying = [C, D]", b,
                              details={"source": C.name, "target": D.name})
    oracle = category_functors(C, D)
    report.details.update({"functors": len(H.objects), "oracle functors": len(oracle)})
    if len(H.objects) != len(oracle):
        report.outcome = COUNTEREXAMPLE
        report.witness = {"problem": "functor counts differ"}
        return report

    def as_pair(F: MFunctor) -> tuple:
        om = {x: F.on_object(x) for x in C.objects}
        am = {a: F(Arrow((x,), y, a)).value for a, (x, y) in C.arrows.items()}
        return om, am

    pairs = {F: as_pair(F) for F in H.objects}
    keyed = {repr(sorted(om.items(), key=repr)) + repr(sorted(am.items(), key=repr)) for om, am in pairs.values()}
    wanted = {repr(sorted(om.items(), key=repr)) + repr(sorted(am.items(), key=repr)) for om, am in oracle}
    if keyed != wanted:
        report.outcome = COUNTEREXAMPLE
        report.witness = {"problem": "functor sets differ"}
        return report
    counts = {}
    for n in range(b.max_arity + 1):
        for dom in itertools.product(H.objects, repeat=n):
            for G in H.objects:
                report.checked += 1
                got = sum(1 for _ in H.iter_hom(dom, G))
                want = len(functor_category_naturals(C, D, pairs[dom[0]], pairs[G])) if n == 1 else 0
                if n == 1:
                    counts[f"{dom[0].label}->{G.label}"] = got
                if got != want:
                    report.outcome = COUNTEREXAMPLE
                    report.witness = {"signature": f"({', '.join(F.label for F in dom)}; {G.label})",
                                      "left": got, "right": want}
                    return report
    report.details["unary hom counts"] = counts
    return report


# -- pointwise universals -----------------------------------------------------------

@dataclass
class PointwiseUniversal:
    H: MFunctor
    u: Arrow
    report: ValidationReport


def factor_through(N: Multicategory, us: Sequence[Arrow], g: Arrow, b: Budget = DEFAULT_BUDGET) -> Arrow:
    """The unique ``h`` with ``h(us) == g``, via the backend or by search."""
    if hasattr(N, "factor"):
        h = N.factor(us, g)
        if N.compose(h, list(us)) == g:
            return h
    found = [h for h in hom(N, Signature(tuple(u.cod for u in us), g.cod), b)
             if N.compose(h, list(us)) == g]
    if len(found) != 1:
        raise PreconditionError(f"{g} does not factor uniquely through the given universals")
    return found[0]


def pointwise_universal(M: Multicategory, N: Multicategory, Fs: Sequence[MFunctor],
                        b: Budget = DEFAULT_BUDGET, targets: Sequence[MFunctor] | None = None,
                        fp: bool = False) -> PointwiseUniversal:
    """Build ``H`` and ``u: F1..Fn -> H`` from universal arrows ``u_A`` of ``N``."""
    if not hasattr(N, "universal"):
        raise PreconditionError(f"{N.name} has no designated universal arrows")
    Fs = tuple(Fs)
    us = {}
    for A in M.objects:
        u = N.universal(tuple(F.on_object(A) for F in Fs))
        if u is None:
            raise PreconditionError(f"{N.name} has no universal arrow on {tuple(F.on_object(A) for F in Fs)}")
        us[A] = u
    obj_map = {A: us[A].cod for A in M.objects}
    gen_images = {}
    n = len(Fs)
    for g in M.generators(cartesian=fp, budget=b):
        inner = N.compose(us[g.cod], [F(g) for F in Fs])
        target = tuple(F.on_object(A) for A in g.dom for F in Fs)
        rhs = N.act(FamilyMap(inner.dom, target, transposition(n, g.arity)), inner)
        gen_images[g] = factor_through(N, [us[A] for A in g.dom], rhs, b)
    H = functor_from_generators(M, N, obj_map, gen_images, b, fp=fp, label="H")
    u = Arrow(Fs, H, tuple(us[A] for A in M.objects))

    report = ValidationReport("pointwise universal", b, details={"arity": n})
    objects = list(dict.fromkeys([*Fs, H, *(targets or [])]))
    I = InternalHom(M, N, objects, b, fp=fp)
    nat = I.check_transform(u)
    report.add(nat)
    if not nat.passed:
        return PointwiseUniversal(H, u, report)
    for L in (targets if targets is not None else objects):
        sub = ValidationReport(f"unique factorisation into {L}", b)
        ls = list(I.iter_hom((H,), L))
        images = [I.compose(l, [u]) for l in ls]
        all_t = set(I.iter_hom(Fs, L))
        sub.checked = len(ls) + len(all_t)
        if len(set(images)) != len(images) or set(images) != all_t:
            sub.outcome = COUNTEREXAMPLE
            sub.witness = {"target": str(L), "factored": len(set(images)), "transforms": len(all_t)}
        report.add(sub)
    return PointwiseUniversal(H, u, report)
