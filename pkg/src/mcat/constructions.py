"""Backend constructors: embeddings of categories, representable and
cartesian-representable multicategories, preadditive bridges, symbolic
rigs, products and the closed-form tensor cases."""
from __future__ import annotations

import itertools
import math
from typing import Callable, Iterator, Sequence

from .categories import (CMonEnrichment, ChosenProducts, FiniteCategory, FreePreadditive,
                         NatCategory, StrictMonoidalData, product_category, terminal_category)
from .core import (DEFAULT_BUDGET, Arrow, Budget, BudgetError, FamilyMap, InputError,
                   Multicategory, PreconditionError, ValidationReport, hom, signatures)


def _compositions(total: int, caps: Sequence) -> Iterator[tuple]:
    """Tuples ``k`` with ``sum(k) == total`` and ``k[i] <= caps[i]`` in lex order."""
    if not caps:
        if total == 0:
            yield ()
        return
    head_cap = caps[0] if caps[0] is not None else total
    rest_cap = None if any(c is None for c in caps[1:]) else sum(caps[1:])
    for k in range(min(head_cap, total) + 1):
        if rest_cap is not None and total - k > rest_cap:
            continue
        for tail in _compositions(total - k, caps[1:]):
            yield (k,) + tail


class SequentialMulticat(Multicategory):
    """Arrows ``X1..Xn -> X`` are tuples of concurrent arrows ``Xi -> X``.

    With an enrichment the non-bijective action sums the components landing
    in the same position (zero where nothing lands).  ``bound`` caps the
    size of each enumerated component for categories with infinite homs;
    composites may leave the bounded view and remain valid arrows.
    """

    def __init__(self, cat, enrichment=None, bound: int | None = None, name: str | None = None):
        self.cat = cat
        self.enrichment = enrichment
        self.bound = bound
        self.objects = tuple(cat.objects)
        self.cartesian = enrichment is not None
        self.symmetric = True
        self.finite_homs = bool(getattr(cat, "finite", True)) or bound is not None
        suffix = "" if bound is None else f"<={bound}"
        self.name = name or f"{cat.name}_seq{suffix}"

    def _slot(self, x, y):
        C = self.cat
        if C.hom_is_finite(x, y):
            cap = max((C.size(a) for a in C.hom(x, y)), default=0)
        else:
            cap = self.bound
        if self.bound is not None and cap is not None:
            cap = min(cap, self.bound)
        return cap

    def iter_hom(self, dom: tuple, cod) -> Iterator[Arrow]:
        C = self.cat
        caps = [self._slot(x, cod) for x in dom]
        if any(c is not None and not any(C.hom_graded(x, cod, k) for k in range(c + 1))
               for x, c in zip(dom, caps)):
            return
        top = None if any(c is None for c in caps) else sum(caps)
        t = 0
        while top is None or t <= top:
            for ks in _compositions(t, caps):
                layers = [C.hom_graded(x, cod, k) for x, k in zip(dom, ks)]
                for value in itertools.product(*layers):
                    yield Arrow(dom, cod, value)
            t += 1

    def identity(self, obj) -> Arrow:
        return Arrow((obj,), obj, (self.cat.identity(obj),))

    def _compose(self, f: Arrow, gs) -> Arrow:
        comp = self.cat.compose
        value = [comp(fi, gij) for fi, g in zip(f.value, gs) for gij in g.value]
        dom = ()
        for g in gs:
            dom += g.dom
        return Arrow(dom, f.cod, tuple(value))

    def _act(self, sigma: FamilyMap, f: Arrow) -> Arrow:
        if sigma.is_bijective:
            value = [None] * len(f.value)
            for k, j in enumerate(sigma.mapping):
                value[j] = f.value[k]
            return Arrow(sigma.target, f.cod, tuple(value))
        e = self.enrichment
        buckets = [[] for _ in sigma.target]
        for k, j in enumerate(sigma.mapping):
            buckets[j].append(f.value[k])
        value = tuple(e.sum(b, x, f.cod) for b, x in zip(buckets, sigma.target))
        return Arrow(sigma.target, f.cod, value)

    def unary(self, a) -> Arrow:
        """The one-component arrow ``<a>``."""
        return Arrow((self.cat.dom(a),), self.cat.cod(a), (a,))

    def monoid_arrows(self, obj) -> tuple[Arrow, Arrow]:
        """``(m0, m2)``: the empty tuple and ``<id, id>`` on ``obj``."""
        i = self.cat.identity(obj)
        return Arrow((), obj, ()), Arrow((obj, obj), obj, (i, i))

    def generators(self, cartesian: bool = False, budget: Budget = DEFAULT_BUDGET) -> tuple:
        C = self.cat
        if getattr(C, "finite", True):
            unary = [self.unary(a) for a, (x, y) in C.arrows.items()
                     if not (x == y and a == C.identity(x))]
        elif cartesian and self.cartesian and hasattr(C, "additive_generators"):
            unary = [self.unary(a) for a in C.additive_generators()]
        else:
            raise BudgetError(f"{self.name}: infinite homs are generated only under the cartesian action")
        monoids = [a for x in self.objects for a in self.monoid_arrows(x)]
        return tuple(unary + monoids)


class UnaryMulticat(Multicategory):
    """A category seen as a multicategory with unary arrows only."""

    def __init__(self, cat: FiniteCategory, name: str | None = None):
        self.cat = cat
        self.objects = tuple(cat.objects)
        self.name = name or f"{cat.name}^-"

    def iter_hom(self, dom: tuple, cod) -> Iterator[Arrow]:
        if len(dom) != 1:
            return
        for a in self.cat.hom(dom[0], cod):
            yield Arrow(dom, cod, a)

    def identity(self, obj) -> Arrow:
        return Arrow((obj,), obj, self.cat.identity(obj))

    def _compose(self, f: Arrow, gs) -> Arrow:
        (g,) = gs
        return Arrow(g.dom, f.cod, self.cat.compose(f.value, g.value))

    def _act(self, sigma, f):
        return f

    def generators(self, cartesian: bool = False, budget: Budget = DEFAULT_BUDGET) -> tuple:
        C = self.cat
        return tuple(Arrow((x,), y, a) for a, (x, y) in C.arrows.items()
                     if not (x == y and a == C.identity(x)))


class FiniteSets(Multicategory):
    """Skeletal finite sets ``0..max_size`` with the lexicographic product.

    An arrow ``X1..Xn -> X`` is the table of its outputs listed over the
    domain tuples in lexicographic order.  With ``cartesian=True`` every
    family map acts by reindexing variables; otherwise only bijections do.
    """

    def __init__(self, max_size: int = 2, cartesian: bool = True, name: str | None = None):
        self.max_size = max_size
        self.objects = tuple(range(max_size + 1))
        self.cartesian = cartesian
        self.name = name or f"FS{max_size}{'x' if cartesian else 't'}"
        self._strides: dict = {}
        self._plans: dict = {}

    def strides(self, dims: tuple) -> tuple:
        s = self._strides.get(dims)
        if s is None:
            acc, out = 1, []
            for d in reversed(dims):
                out.append(acc)
                acc *= d
            s = tuple(reversed(out))
            self._strides[dims] = s
        return s

    def index(self, dims: tuple, point: Sequence[int]) -> int:
        return sum(p * s for p, s in zip(point, self.strides(dims)))

    def iter_hom(self, dom: tuple, cod) -> Iterator[Arrow]:
        n = math.prod(dom)
        for values in itertools.product(range(cod), repeat=n):
            yield Arrow(dom, cod, values)

    def identity(self, obj) -> Arrow:
        return Arrow((obj,), obj, tuple(range(obj)))

    def representation_scope(self, family: Sequence[int]) -> bool:
        """Families whose product still fits among the objects."""
        return math.prod(family) <= self.max_size

    def function(self, dom: Sequence[int], cod: int, fn: Callable) -> Arrow:
        dom = tuple(dom)
        return Arrow(dom, cod, tuple(fn(*p) for p in itertools.product(*(range(d) for d in dom))))

    def __call__(self, f: Arrow, *args) -> int:
        return f.value[self.index(f.dom, args)]

    composition_by_slots = True

    def _partial(self, f: Arrow, i: int, g: Arrow) -> Arrow:
        key = (f.dom, i, g.dom)
        plan = self._plans.get(key)
        if plan is None:
            after = math.prod(f.dom[i + 1:])
            block = f.dom[i] * after
            plan = (after, tuple((p * block + q, k) for p in range(math.prod(f.dom[:i]))
                                 for k in range(math.prod(g.dom)) for q in range(after)))
            self._plans[key] = plan
        after, table = plan
        fv, gv = f.value, g.value
        return Arrow(f.dom[:i] + g.dom + f.dom[i + 1:], f.cod,
                     tuple([fv[base + gv[k] * after] for base, k in table]))

    def _compose(self, f: Arrow, gs) -> Arrow:
        r = f
        for i in reversed(range(len(gs))):
            g = gs[i]
            if g.arity == 1 and g.value == tuple(range(g.cod)):
                continue
            r = self._partial(r, i, g)
        return r

    def _act(self, sigma: FamilyMap, f: Arrow) -> Arrow:
        key = (f.dom, sigma.target, sigma.mapping)
        idx = self._plans.get(key)
        if idx is None:
            pairs = list(zip(sigma.mapping, self.strides(f.dom)))
            idx = tuple(sum(y[j] * s for j, s in pairs)
                        for y in itertools.product(*(range(d) for d in sigma.target)))
            self._plans[key] = idx
        fv = f.value
        return Arrow(sigma.target, f.cod, tuple([fv[k] for k in idx]))

    # representability ---------------------------------------------------

    def universal(self, family: Sequence[int]) -> Arrow | None:
        """The lexicographic pairing, when the product fits in the skeleton."""
        family = tuple(family)
        p = math.prod(family)
        if p > self.max_size:
            return None
        return Arrow(family, p, tuple(range(p)))

    def factor(self, us: Sequence[Arrow], g: Arrow) -> Arrow:
        """The unique ``h`` with ``h(us) == g`` for lexicographic universals."""
        return Arrow(tuple(u.cod for u in us), g.cod, g.value)


class DiscreteMonoidMulticat(Multicategory):
    """Objects are monoid elements; one arrow ``x1..xn -> x`` iff the product is ``x``."""

    def __init__(self, elements: Sequence, mul: Callable, unit, name: str = "dmon",
                 commutative: bool | None = None):
        self.objects = tuple(elements)
        self.mul = mul
        self.unit = unit
        self.name = name
        for a in self.objects:
            if mul(unit, a) != a or mul(a, unit) != a:
                raise InputError(f"{name}: {unit!r} is not a unit")
            for b in self.objects:
                if mul(a, b) not in self.objects:
                    raise InputError(f"{name}: product not closed")
                for c in self.objects:
                    if mul(mul(a, b), c) != mul(a, mul(b, c)):
                        raise InputError(f"{name}: multiplication not associative")
        if commutative is None:
            commutative = all(mul(a, b) == mul(b, a) for a in self.objects for b in self.objects)
        self.symmetric = commutative

    def product(self, xs) -> object:
        acc = self.unit
        for x in xs:
            acc = self.mul(acc, x)
        return acc

    def iter_hom(self, dom: tuple, cod) -> Iterator[Arrow]:
        if self.product(dom) == cod:
            yield Arrow(dom, cod, "*")

    def identity(self, obj) -> Arrow:
        return Arrow((obj,), obj, "*")

    def _compose(self, f, gs) -> Arrow:
        return Arrow(tuple(x for g in gs for x in g.dom), f.cod, "*")

    def _act(self, sigma, f) -> Arrow:
        return Arrow(sigma.target, f.cod, "*")

    def universal(self, family) -> Arrow:
        return Arrow(tuple(family), self.product(family), "*")

    def factor(self, us, g) -> Arrow:
        return Arrow(tuple(u.cod for u in us), g.cod, "*")


class TableMulticat(Multicategory):
    """A multicategory given by explicit tables up to an arity cap.

    ``arrows`` maps a name to ``(dom, cod)``; ``composition`` maps
    ``(f, (g1, ..., gn))`` to a name and ``actions`` maps ``(f, sigma)`` to a
    name.  Arrow values are the names.
    """

    def __init__(self, objects, arrows: dict, identities: dict, composition: dict,
                 actions: dict | None = None, symmetric: bool = True, cartesian: bool = False,
                 arity_cap: int = 3, name: str = "table"):
        self.objects = tuple(objects)
        self.name = name
        self.symmetric = symmetric
        self.cartesian = cartesian
        self.arity_cap = arity_cap
        self.arrow_sigs = {k: (tuple(d), c) for k, (d, c) in arrows.items()}
        self.identities = dict(identities)
        self.composition = dict(composition)
        self.actions = dict(actions or {})
        self._by_sig: dict = {}
        objs = set(self.objects)
        for k, (d, c) in self.arrow_sigs.items():
            if not set(d) | {c} <= objs:
                raise InputError(f"{name}: arrow {k!r} mentions an unknown object")
            if len(d) > arity_cap:
                raise InputError(f"{name}: arrow {k!r} exceeds the arity cap {arity_cap}")
            self._by_sig.setdefault((d, c), []).append(k)
        for x in self.objects:
            i = self.identities.get(x)
            if self.arrow_sigs.get(i) != ((x,), x):
                raise InputError(f"{name}: missing or ill-typed identity on {x!r}")

    def arrow(self, name) -> Arrow:
        d, c = self.arrow_sigs[name]
        return Arrow(d, c, name)

    def iter_hom(self, dom: tuple, cod) -> Iterator[Arrow]:
        if len(dom) > self.arity_cap:
            raise BudgetError(f"{self.name}: tables stop at arity {self.arity_cap}")
        for k in self._by_sig.get((tuple(dom), cod), ()):
            yield Arrow(tuple(dom), cod, k)

    def identity(self, obj) -> Arrow:
        return self.arrow(self.identities[obj])

    def _compose(self, f, gs) -> Arrow:
        key = (f.value, tuple(g.value for g in gs))
        if key not in self.composition:
            dom = tuple(x for g in gs for x in g.dom)
            if len(dom) > self.arity_cap:
                raise BudgetError(f"{self.name}: composite of arity {len(dom)} beyond the table")
            raise InputError(f"{self.name}: no composition cell for {key}")
        return self.arrow(self.composition[key])

    def _act(self, sigma, f) -> Arrow:
        key = (f.value, sigma)
        if key not in self.actions:
            if len(sigma.target) > self.arity_cap:
                raise BudgetError(f"{self.name}: action target beyond the table")
            raise InputError(f"{self.name}: no action cell for {f.value!r} under {sigma}")
        return self.arrow(self.actions[key])

    def corrupt(self, key, new_value, kind: str = "composition") -> TableMulticat:
        """A copy with one composition (or action) cell overwritten."""
        comp = dict(self.composition)
        acts = dict(self.actions)
        table = comp if kind == "composition" else acts
        if key not in table:
            raise InputError(f"no {kind} cell {key}")
        if self.arrow_sigs[table[key]] != self.arrow_sigs[new_value]:
            raise InputError("corruption must keep the signature")
        table[key] = new_value
        arrows = {k: v for k, v in self.arrow_sigs.items()}
        return TableMulticat(self.objects, arrows, self.identities, comp, acts, self.symmetric,
                             self.cartesian, self.arity_cap, name=f"{self.name}*")


def table_from_backend(M: Multicategory, max_arity: int = 3, b: Budget = DEFAULT_BUDGET,
                       name: str | None = None) -> TableMulticat:
    """Tabulate every arrow, composite and action of ``M`` up to ``max_arity``."""
    arrows, names, by_sig = {}, {}, {}
    for sig in signatures(M, max_arity):
        hs = hom(M, sig, b)
        if hs.truncated:
            raise BudgetError(f"{M.name}: hom{sig} does not fit the table budget")
        by_sig[(sig.dom, sig.cod)] = list(hs)
        for a in hs:
            key = _show_key(a, names, arrows)
            arrows[key] = (a.dom, a.cod)
            names[a] = key
    ids = {x: names[M.identity(x)] for x in M.objects}
    comp = {}
    for f in names:
        for gs in _argument_tuples(f, by_sig, max_arity):
            comp[(names[f], tuple(names[g] for g in gs))] = names[M.compose(f, gs)]
    acts = {}
    if M.symmetric or M.cartesian:
        from .core import enumerate_family_maps
        for f in names:
            for s in enumerate_family_maps(f.dom, M.objects, max_arity, bijective_only=not M.cartesian):
                acts[(names[f], s)] = names[M.act(s, f)]
    return TableMulticat(M.objects, arrows, ids, comp, acts, M.symmetric, M.cartesian,
                         max_arity, name=name or f"table({M.name})")


def _show_key(a: Arrow, names: dict, arrows: dict) -> str:
    base = str(a)
    return base if base not in arrows else f"{base}#{len(names)}"


def _argument_tuples(f: Arrow, by_sig: dict, max_arity: int) -> Iterator[tuple]:
    pools = []
    for x in f.dom:
        pools.append([g for (d, c), gs in by_sig.items() if c == x for g in gs])

    def rec(i, room):
        if i == len(pools):
            yield ()
            return
        for g in pools[i]:
            if g.arity <= room:
                for rest in rec(i + 1, room - g.arity):
                    yield (g,) + rest

    yield from rec(0, max_arity)


class ProductMulticat(Multicategory):
    """Componentwise product; objects and arrow values are pairs."""

    def __init__(self, M: Multicategory, N: Multicategory, name: str | None = None):
        self.M, self.N = M, N
        self.objects = tuple(itertools.product(M.objects, N.objects))
        self.symmetric = M.symmetric and N.symmetric
        self.cartesian = M.cartesian and N.cartesian
        self.finite_homs = M.finite_homs and N.finite_homs
        self.name = name or f"{M.name}x{N.name}"

    def iter_hom(self, dom: tuple, cod) -> Iterator[Arrow]:
        d1 = tuple(x for x, _ in dom)
        d2 = tuple(y for _, y in dom)
        right = list(self.N.iter_hom(d2, cod[1]))
        if not right:
            return
        for f in self.M.iter_hom(d1, cod[0]):
            for g in right:
                yield Arrow(dom, cod, (f, g))

    def identity(self, obj) -> Arrow:
        return Arrow((obj,), obj, (self.M.identity(obj[0]), self.N.identity(obj[1])))

    def _compose(self, f, gs) -> Arrow:
        a = self.M.compose(f.value[0], [g.value[0] for g in gs])
        b = self.N.compose(f.value[1], [g.value[1] for g in gs])
        return Arrow(tuple(x for g in gs for x in g.dom), f.cod, (a, b))

    def _act(self, sigma, f) -> Arrow:
        s1 = FamilyMap(tuple(x for x, _ in sigma.source), tuple(x for x, _ in sigma.target), sigma.mapping)
        s2 = FamilyMap(tuple(y for _, y in sigma.source), tuple(y for _, y in sigma.target), sigma.mapping)
        return Arrow(sigma.target, f.cod, (self.M.act(s1, f.value[0]), self.N.act(s2, f.value[1])))


class RepresentableMulticat(Multicategory):
    """``C_tensor(X1..Xn; X) = C(X1 * ... * Xn, X)`` for strict monoidal data."""

    def __init__(self, data: StrictMonoidalData, name: str | None = None):
        self.data = data
        self.C = data.C
        self.objects = tuple(self.C.objects)
        self.symmetric = data.braiding is not None
        self.name = name or f"{self.C.name}_tensor"

    def iter_hom(self, dom: tuple, cod) -> Iterator[Arrow]:
        for a in self.C.hom(self.data.tensor(dom), cod):
            yield Arrow(dom, cod, a)

    def identity(self, obj) -> Arrow:
        return Arrow((obj,), obj, self.C.identity(obj))

    def _compose(self, f, gs) -> Arrow:
        t = self.data.tensor_arrows([g.value for g in gs])
        return Arrow(tuple(x for g in gs for x in g.dom), f.cod, self.C.compose(f.value, t))

    def _act(self, sigma, f) -> Arrow:
        iso = self.data.permutation_iso(sigma.source, sigma.target, sigma.mapping)
        return Arrow(sigma.target, f.cod, self.C.compose(f.value, iso))

    def universal(self, family) -> Arrow:
        family = tuple(family)
        t = self.data.tensor(family)
        return Arrow(family, t, self.C.identity(t))

    def factor(self, us, g) -> Arrow:
        # universals are identities on tensors, so the factor has the same value
        return Arrow(tuple(u.cod for u in us), g.cod, g.value)


class CartesianRepresentable(Multicategory):
    """``C_x(X1..Xn; X) = C(P(X1..Xn), X)`` with actions ``f . sigma_bar``."""

    def __init__(self, C: FiniteCategory, P: ChosenProducts, name: str | None = None):
        self.C, self.P = C, P
        self.objects = tuple(C.objects)
        self.cartesian = True
        self.name = name or f"{C.name}_x"
        self.arity_cap = max(len(k) for k in P.table)
        for x in self.objects:
            if P.table.get((x,)) != (x, (C.identity(x),)):
                raise InputError("chosen unary products must be identities")

    def _P(self, fam):
        fam = tuple(fam)
        if fam not in self.P.table:
            raise BudgetError(f"{self.name}: no chosen product for a family of arity {len(fam)}")
        return self.P.obj(fam)

    def iter_hom(self, dom: tuple, cod) -> Iterator[Arrow]:
        for a in self.C.hom(self._P(dom), cod):
            yield Arrow(dom, cod, a)

    def identity(self, obj) -> Arrow:
        return Arrow((obj,), obj, self.C.identity(obj))

    def _reindex(self, source: tuple, target: tuple, mapping: tuple):
        """``t: P(target) -> P(source)`` with ``p_i t = q_{mapping[i]}``."""
        qs = self.P.projections(target)
        return self.P.pair(source, self._P(target), [qs[j] for j in mapping])

    def _compose(self, f, gs) -> Arrow:
        dom = tuple(x for g in gs for x in g.dom)
        top = self._P(dom)
        comps, offset = [], 0
        for g in gs:
            sub = self._reindex(g.dom, dom, tuple(range(offset, offset + g.arity)))
            comps.append(self.C.compose(g.value, sub))
            offset += g.arity
        h = self.P.pair(f.dom, top, comps)
        return Arrow(dom, f.cod, self.C.compose(f.value, h))

    def _act(self, sigma, f) -> Arrow:
        bar = self._reindex(sigma.source, sigma.target, sigma.mapping)
        return Arrow(sigma.target, f.cod, self.C.compose(f.value, bar))

    def universal(self, family) -> Arrow:
        family = tuple(family)
        p = self._P(family)
        return Arrow(family, p, self.C.identity(p))

    def factor(self, us, g) -> Arrow:
        return Arrow(tuple(u.cod for u in us), g.cod, g.value)


# -- constructors --------------------------------------------------------------

def unary(C: FiniteCategory) -> UnaryMulticat:
    return UnaryMulticat(C)


def underlying(M: Multicategory, b: Budget = DEFAULT_BUDGET, name: str | None = None) -> FiniteCategory:
    """The category of unary arrows; arrows are the backend's unary ``Arrow`` values."""
    arrows = {}
    for x in M.objects:
        for y in M.objects:
            hs = hom(M, _sig((x,), y), b)
            if hs.truncated:
                raise BudgetError(f"{M.name}: unary hom({x},{y}) is infinite")
            for a in hs:
                arrows[a] = (x, y)
    ids = {x: M.identity(x) for x in M.objects}
    return FiniteCategory.from_function(M.objects, arrows, lambda g, f: M.compose(g, [f]), ids,
                                        name=name or f"{M.name}_-", check=False)


def _sig(dom, cod):
    from .core import Signature
    return Signature(tuple(dom), cod)


def seq(C, bound: int | None = None) -> SequentialMulticat:
    return SequentialMulticat(C, bound=bound)


def seq_cartesian(C, e, bound: int | None = None, name: str | None = None) -> SequentialMulticat:
    if isinstance(e, CMonEnrichment):
        if e.C is not C:
            raise InputError("enrichment belongs to a different category")
        e.validate()
    return SequentialMulticat(C, enrichment=e, bound=bound, name=name)


def extract_enrichment(M: Multicategory, b: Budget = DEFAULT_BUDGET) -> CMonEnrichment:
    """Hom addition from contraction and zero from weakening.

    The central monoid ``m2, m0`` turns unary arrows ``f, g: X -> Y`` into
    ``f + g = contract(m2_Y(f, g))`` and ``0 = weaken(m0_Y)``.
    """
    from .analysis import find_central_monoid, sequentiality_report
    if not M.cartesian:
        raise PreconditionError(f"{M.name} is not cartesian")
    report = sequentiality_report(M, b)
    if not report.details.get("sequential"):
        raise PreconditionError(f"{M.name} is not sequential")
    cm = find_central_monoid(M, b)
    C = underlying(M, b)
    zero, add = {}, {}
    for x in M.objects:
        for y in M.objects:
            m0, m2 = cm.m0[y], cm.m2[y]
            zero[(x, y)] = M.act(FamilyMap((), (x,), ()), m0)
            hs = C.hom(x, y)
            for f in hs:
                for g in hs:
                    add[(f, g)] = M.act(FamilyMap.constant(x, 2), M.compose(m2, [f, g]))
    return CMonEnrichment(C, zero, add)


def monoidal_to_mcat(D: StrictMonoidalData) -> RepresentableMulticat:
    return RepresentableMulticat(D)


def fp_category_to_mcat(C: FiniteCategory, P: ChosenProducts) -> CartesianRepresentable:
    return CartesianRepresentable(C, P)


def finite_sets(max_size: int = 2, cartesian: bool = True) -> FiniteSets:
    return FiniteSets(max_size, cartesian)


def nat_rig_seq(bound: int | None = None) -> SequentialMulticat:
    """The rig of naturals as a sequential cartesian backend (arrows: tuples of naturals)."""
    N = NatCategory()
    return SequentialMulticat(N, enrichment=N, bound=bound, name="N_seq" if bound is None else f"N_seq<={bound}")


def free_preadditive(C: FiniteCategory) -> FreePreadditive:
    return FreePreadditive(C)


def free_preadditive_seq(C: FiniteCategory, bound: int | None = None) -> SequentialMulticat:
    F = FreePreadditive(C)
    return SequentialMulticat(F, enrichment=F, bound=bound)


def discrete_monoid_mcat(elements, mul, unit, name: str = "dmon") -> DiscreteMonoidMulticat:
    return DiscreteMonoidMulticat(elements, mul, unit, name=name)


def z2_discrete() -> DiscreteMonoidMulticat:
    return DiscreteMonoidMulticat([0, 1], lambda a, b: (a + b) % 2, 0, name="dmon(Z2)")


def terminal_mcat() -> SequentialMulticat:
    """``1_seq``: one object, exactly one arrow of every arity (cartesian, trivially)."""
    C = terminal_category()
    e = CMonEnrichment(C, {("*", "*"): "id"}, {("id", "id"): "id"})
    return SequentialMulticat(C, enrichment=e, name="1_seq")


def product(M: Multicategory, N: Multicategory) -> ProductMulticat:
    return ProductMulticat(M, N)


def frobenius_check(M: Multicategory, C: FiniteCategory, b: Budget = DEFAULT_BUDGET) -> ValidationReport:
    """``M x C^-`` against ``(M_- x C)^-`` by an explicit bijection on every hom-set."""
    left = ProductMulticat(M, UnaryMulticat(C))
    MC = product_category(underlying(M, b), C)
    right = UnaryMulticat(MC)

    def forward(a: Arrow) -> Arrow:
        f, g = a.value
        return Arrow(a.dom, a.cod, (f, g.value))

    def backward(a: Arrow) -> Arrow:
        f, c = a.value
        return Arrow(a.dom, a.cod, (f, Arrow(tuple(y for _, y in a.dom), a.cod[1], c)))

    report = ValidationReport("frobenius", b)
    return _check_iso(report, left, right, forward, backward, b)


def _check_iso(report: ValidationReport, L: Multicategory, R: Multicategory,
               forward: Callable, backward: Callable, b: Budget) -> ValidationReport:
    """Hom-set bijection plus preservation of composition and the symmetric action."""
    view = []
    if set(L.objects) != set(R.objects):
        report.outcome = "counterexample"
        report.witness = {"objects": "object sets differ"}
        return report
    for sig in signatures(L, b.max_arity):
        hl = hom(L, sig, b)
        hr = hom(R, sig, b)
        report.checked += 1
        img = {forward(a) for a in hl}
        if img != set(hr) or len(img) != len(hl) or any(backward(forward(a)) != a for a in hl):
            report.outcome = "counterexample"
            report.witness = {"signature": str(sig), "left": len(hl), "right": len(hr)}
            return report
        view.extend(hl)
    from .laws import iter_composites
    for f, gs in iter_composites(L, view, b.max_arity):
        report.checked += 1
        if forward(L.compose(f, gs)) != R.compose(forward(f), [forward(g) for g in gs]):
            report.outcome = "counterexample"
            report.witness = {"composite": str(f), "arguments": [str(g) for g in gs]}
            return report
    if L.symmetric and R.symmetric:
        for f in view:
            for s in itertools.permutations(range(f.arity)):
                sigma = FamilyMap.permutation(f.dom, s)
                report.checked += 1
                if forward(L.act(sigma, f)) != R.act(sigma, forward(f)):
                    report.outcome = "counterexample"
                    report.witness = {"arrow": str(f), "sigma": str(sigma)}
                    return report
    return report


def check_iso(L: Multicategory, R: Multicategory, forward: Callable, backward: Callable,
              b: Budget = DEFAULT_BUDGET, law: str = "iso") -> ValidationReport:
    return _check_iso(ValidationReport(law, b), L, R, forward, backward, b)


class ClosedFormTensor(Multicategory):
    """A tensor product realised by its closed form (a representation up to iso)."""

    closed_form = True

    def __init__(self, inner: Multicategory, formula: str):
        self.inner = inner
        self.formula = formula
        self.objects = inner.objects
        self.symmetric = inner.symmetric
        self.cartesian = inner.cartesian
        self.finite_homs = inner.finite_homs
        self.name = formula

    def iter_hom(self, dom, cod):
        return self.inner.iter_hom(dom, cod)

    def identity(self, obj):
        return self.inner.identity(obj)

    def _compose(self, f, gs):
        return self.inner.compose(f, gs)

    def _act(self, sigma, f):
        return self.inner.act(sigma, f)

    def generators(self, cartesian=False, budget=DEFAULT_BUDGET):
        return self.inner.generators(cartesian, budget)


def bv_tensor_unary(C: FiniteCategory, N: Multicategory) -> ClosedFormTensor:
    """``C^- (x) N`` realised as ``C_seq x N``."""
    return ClosedFormTensor(ProductMulticat(seq(C), N), f"{C.name}^- (x) {N.name} := {C.name}_seq x {N.name}")


def bv_tensor_seq(C: FiniteCategory, D: FiniteCategory) -> ClosedFormTensor:
    """``C_seq (x) D_seq`` realised as ``(C x D)_seq``."""
    return ClosedFormTensor(seq(product_category(C, D)),
                            f"{C.name}_seq (x) {D.name}_seq := ({C.name}x{D.name})_seq")
