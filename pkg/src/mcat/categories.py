"""Ordinary categories feeding the multicategory constructions.

Every category here exposes the same small protocol used by the
sequential and unary backends::

    objects, hom(X, Y), hom_graded(X, Y, k), hom_is_finite(X, Y),
    dom(a), cod(a), compose(g, f)  # g after f
    identity(X), finite

Enriched categories (preadditive ones) additionally carry an
``enrichment`` with ``zero(X, Y)`` and ``add(f, g)``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Sequence

from .core import InputError


class FiniteCategory:
    """A category given by explicit composition tables."""

    finite = True
    enrichment = None

    def __init__(self, objects: Sequence, arrows: dict, composition: dict,
                 identities: dict, name: str = "C", check: bool = True):
        self.name = name
        self.objects = tuple(objects)
        self.arrows = dict(arrows)  # name -> (dom, cod)
        self.composition = dict(composition)  # (g, f) -> g o f
        self.identities = dict(identities)
        self._order = {a: i for i, a in enumerate(self.arrows)}
        self._hom: dict = {}
        for a, (x, y) in self.arrows.items():
            self._hom.setdefault((x, y), []).append(a)
        if check:
            self.validate()

    @classmethod
    def from_function(cls, objects, arrows: dict, compose: Callable, identities: dict,
                      name: str = "C", check: bool = True) -> FiniteCategory:
        table = {}
        for g, (y, z) in arrows.items():
            for f, (x, y2) in arrows.items():
                if y2 == y:
                    table[(g, f)] = compose(g, f)
        return cls(objects, arrows, table, identities, name=name, check=check)

    def validate(self) -> None:
        obj = set(self.objects)
        for a, (x, y) in self.arrows.items():
            if x not in obj or y not in obj:
                raise InputError(f"{self.name}: arrow {a!r} has unknown endpoint")
        for x in self.objects:
            i = self.identities.get(x)
            if i is None or self.arrows.get(i) != (x, x):
                raise InputError(f"{self.name}: missing or ill-typed identity on {x!r}")
        for g, (y, z) in self.arrows.items():
            for f in self.hom_into(y):
                h = self.composition.get((g, f))
                if h is None:
                    raise InputError(f"{self.name}: missing composite {g!r} o {f!r}")
                if self.arrows.get(h) != (self.dom(f), z):
                    raise InputError(f"{self.name}: composite {g!r} o {f!r} = {h!r} is ill-typed")
        for f, (x, y) in self.arrows.items():
            if self.compose(self.identities[y], f) != f or self.compose(f, self.identities[x]) != f:
                raise InputError(f"{self.name}: unit law fails at {f!r}")
        for h, (z, w) in self.arrows.items():
            for g in self.hom_into(z):
                for f in self.hom_into(self.dom(g)):
                    if self.compose(h, self.compose(g, f)) != self.compose(self.compose(h, g), f):
                        raise InputError(f"{self.name}: associativity fails at {h!r}, {g!r}, {f!r}")

    def hom(self, x, y) -> tuple:
        return tuple(self._hom.get((x, y), ()))

    def hom_into(self, y) -> list:
        return [a for a, (_, t) in self.arrows.items() if t == y]

    def hom_graded(self, x, y, k: int) -> tuple:
        return self.hom(x, y) if k == 0 else ()

    def hom_is_finite(self, x, y) -> bool:
        return True

    def size(self, a) -> int:
        return 0

    def dom(self, a):
        return self.arrows[a][0]

    def cod(self, a):
        return self.arrows[a][1]

    def compose(self, g, f):
        return self.composition[(g, f)]

    def identity(self, x):
        return self.identities[x]

    def order_key(self, a) -> int:
        return self._order[a]

    def __repr__(self) -> str:
        return f"FiniteCategory({self.name}, {len(self.objects)} objects, {len(self.arrows)} arrows)"


def terminal_category() -> FiniteCategory:
    return FiniteCategory(["*"], {"id": ("*", "*")}, {("id", "id"): "id"}, {"*": "id"}, name="1")


def walking_arrow() -> FiniteCategory:
    """``a --u--> b``."""
    arrows = {"id_a": ("a", "a"), "id_b": ("b", "b"), "u": ("a", "b")}
    comp = {("id_a", "id_a"): "id_a", ("id_b", "id_b"): "id_b",
            ("u", "id_a"): "u", ("id_b", "u"): "u"}
    return FiniteCategory(["a", "b"], arrows, comp, {"a": "id_a", "b": "id_b"}, name="W")


def monoid_category(elements: Sequence, mul: Callable, unit, name: str = "M") -> FiniteCategory:
    """One-object category of a finite monoid (composition ``g o f = mul(g, f)``)."""
    arrows = {e: ("*", "*") for e in elements}
    return FiniteCategory.from_function(["*"], arrows, mul, {"*": unit}, name=name)


def z2_category() -> FiniteCategory:
    return monoid_category(["e", "g"], lambda x, y: "e" if x == y else "g", "e", name="Z2")


def product_category(C, D, name: str | None = None) -> FiniteCategory:
    objects = [(x, y) for x in C.objects for y in D.objects]
    arrows = {}
    for (x, y), (x2, y2) in itertools.product(objects, repeat=2):
        for f in C.hom(x, x2):
            for g in D.hom(y, y2):
                arrows[(f, g)] = ((x, y), (x2, y2))
    ids = {(x, y): (C.identity(x), D.identity(y)) for x, y in objects}
    return FiniteCategory.from_function(
        objects, arrows, lambda a, b: (C.compose(a[0], b[0]), D.compose(a[1], b[1])), ids,
        name=name or f"{C.name}x{D.name}")


def functor_category_naturals(C, D, F, G) -> list:
    """Natural transformations ``F -> G`` between functors given as
    ``(obj_map dict, arrow_map dict)`` pairs, by brute force."""
    Fo, Fa = F
    Go, Ga = G
    comps = [D.hom(Fo[x], Go[x]) for x in C.objects]
    out = []
    for alpha in itertools.product(*comps):
        a = dict(zip(C.objects, alpha))
        if all(D.compose(Ga[f], a[C.dom(f)]) == D.compose(a[C.cod(f)], Fa[f]) for f in C.arrows):
            out.append(alpha)
    return out


def category_functors(C, D) -> list:
    """All functors ``C -> D`` between finite categories as (obj_map, arrow_map)."""
    out = []
    for objs in itertools.product(D.objects, repeat=len(C.objects)):
        om = dict(zip(C.objects, objs))
        names = list(C.arrows)
        choices = []
        for f in names:
            if f == C.identity(C.dom(f)) and C.dom(f) == C.cod(f):
                choices.append([D.identity(om[C.dom(f)])])
            else:
                choices.append(D.hom(om[C.dom(f)], om[C.cod(f)]))
        for imgs in itertools.product(*choices):
            am = dict(zip(names, imgs))
            ok = all(am[C.compose(g, f)] == D.compose(am[g], am[f])
                     for (g, f) in C.composition)
            if ok:
                out.append((om, am))
    return out


class CMonEnrichment:
    """Commutative-monoid structure on the hom-sets of a finite category."""

    def __init__(self, C: FiniteCategory, zero: dict, add: dict, check: bool = True):
        self.C = C
        self.zeros = dict(zero)  # (X, Y) -> arrow
        self.adds = dict(add)  # (f, g) -> f + g
        if check:
            self.validate()

    def zero(self, x, y):
        return self.zeros[(x, y)]

    def add(self, f, g):
        return self.adds[(f, g)]

    def sum(self, terms: Iterable, x, y):
        acc = self.zero(x, y)
        for t in terms:
            acc = self.add(acc, t)
        return acc

    def validate(self) -> None:
        C = self.C
        for x in C.objects:
            for y in C.objects:
                hs = C.hom(x, y)
                z = self.zeros.get((x, y))
                if z not in hs:
                    raise InputError(f"enrichment: hom({x!r},{y!r}) lacks a zero")
                for f in hs:
                    if self.add(f, z) != f:
                        raise InputError(f"enrichment: zero is not neutral at {f!r}")
                    for g in hs:
                        s = self.adds.get((f, g))
                        if s not in hs:
                            raise InputError(f"enrichment: {f!r} + {g!r} missing or ill-typed")
                        if s != self.add(g, f):
                            raise InputError(f"enrichment: addition not commutative at {f!r}, {g!r}")
                        for h in hs:
                            if self.add(self.add(f, g), h) != self.add(f, self.add(g, h)):
                                raise InputError(f"enrichment: addition not associative at {f!r}")
        for g, (y, z) in C.arrows.items():
            for x in C.objects:
                hs = C.hom(x, y)
                if C.compose(g, self.zero(x, y)) != self.zero(x, z):
                    raise InputError(f"distributivity failure: {g!r} o 0 != 0")
                for f1 in hs:
                    for f2 in hs:
                        if C.compose(g, self.add(f1, f2)) != self.add(C.compose(g, f1), C.compose(g, f2)):
                            raise InputError(f"distributivity failure: {g!r} o ({f1!r} + {f2!r})")
            for w in C.objects:
                hs = C.hom(z, w)
                if C.compose(self.zero(z, w), g) != self.zero(y, w):
                    raise InputError(f"distributivity failure: 0 o {g!r} != 0")
                for h1 in hs:
                    for h2 in hs:
                        if C.compose(self.add(h1, h2), g) != self.add(C.compose(h1, g), C.compose(h2, g)):
                            raise InputError(f"distributivity failure: ({h1!r} + {h2!r}) o {g!r}")


def rig_category(elements: Sequence, add: Callable, mul: Callable, zero, one,
                 name: str = "R") -> tuple[FiniteCategory, CMonEnrichment]:
    """A finite rig as a one-object preadditive category."""
    C = monoid_category(elements, mul, one, name=name)
    e = CMonEnrichment(C, {("*", "*"): zero},
                       {(a, b): add(a, b) for a in elements for b in elements})
    return C, e


def boolean_rig() -> tuple[FiniteCategory, CMonEnrichment]:
    return rig_category([0, 1], lambda a, b: a | b, lambda a, b: a & b, 0, 1, name="Bool")


class NatCategory:
    """The rig of natural numbers as a one-object preadditive category."""

    name = "N"
    finite = False
    objects = ("*",)

    def __init__(self):
        self.enrichment = self

    def hom(self, x, y):
        return itertools.count()

    def hom_graded(self, x, y, k: int) -> tuple:
        return (k,)

    def hom_is_finite(self, x, y) -> bool:
        return False

    def size(self, a) -> int:
        return a

    def dom(self, a):
        return "*"

    def cod(self, a):
        return "*"

    def compose(self, g, f):
        return g * f

    def identity(self, x):
        return 1

    def zero(self, x, y):
        return 0

    def add(self, f, g):
        return f + g

    def sum(self, terms, x, y):
        return sum(terms, 0)

    def additive_generators(self) -> tuple:
        return ()


@dataclass(frozen=True)
class FreeSum:
    """A formal finite sum (multiset) of parallel arrows."""

    dom: Hashable
    cod: Hashable
    terms: tuple

    def __str__(self) -> str:
        return "+".join(map(str, self.terms)) if self.terms else "0"


class FreePreadditive:
    """Free preadditive category on a finite category: homs are multisets."""

    finite = False

    def __init__(self, C: FiniteCategory):
        self.C = C
        self.name = f"F({C.name})"
        self.objects = C.objects
        self.enrichment = self
        self._memo: dict = {}

    def _sorted(self, terms) -> tuple:
        return tuple(sorted(terms, key=self.C.order_key))

    def hom(self, x, y):
        if not self.C.hom(x, y):
            return (FreeSum(x, y, ()),)
        return (a for k in itertools.count() for a in self.hom_graded(x, y, k))

    def hom_graded(self, x, y, k: int) -> tuple:
        return tuple(FreeSum(x, y, combo)
                     for combo in itertools.combinations_with_replacement(self.C.hom(x, y), k))

    def hom_is_finite(self, x, y) -> bool:
        return not self.C.hom(x, y)

    def size(self, a: FreeSum) -> int:
        return len(a.terms)

    def dom(self, a):
        return a.dom

    def cod(self, a):
        return a.cod

    def compose(self, g: FreeSum, f: FreeSum) -> FreeSum:
        key = (g, f)
        h = self._memo.get(key)
        if h is None:
            h = FreeSum(f.dom, g.cod, self._sorted(self.C.compose(b, a) for b in g.terms for a in f.terms))
            self._memo[key] = h
        return h

    def identity(self, x) -> FreeSum:
        return FreeSum(x, x, (self.C.identity(x),))

    def zero(self, x, y) -> FreeSum:
        return FreeSum(x, y, ())

    def add(self, f: FreeSum, g: FreeSum) -> FreeSum:
        return FreeSum(f.dom, f.cod, self._sorted(f.terms + g.terms))

    def sum(self, terms, x, y) -> FreeSum:
        acc = self.zero(x, y)
        for t in terms:
            acc = self.add(acc, t)
        return acc

    def single(self, a) -> FreeSum:
        return FreeSum(self.C.dom(a), self.C.cod(a), (a,))

    def additive_generators(self) -> tuple:
        return tuple(self.single(a) for a, (x, y) in self.C.arrows.items()
                     if not (x == y and a == self.C.identity(x)))


class StrictMonoidalData:
    """A strict monoidal structure on a finite category.

    ``braiding`` (optional) maps ``(X, Y)`` to the symmetry ``X*Y -> Y*X``;
    without it the associated multicategory is not symmetric.
    """

    def __init__(self, C: FiniteCategory, unit, tensor_objects: dict, tensor_arrows: dict,
                 braiding: dict | None = None, check: bool = True):
        self.C = C
        self.unit = unit
        self.tobj = dict(tensor_objects)
        self.tarr = dict(tensor_arrows)
        self.braiding = dict(braiding) if braiding else None
        if check:
            self.validate()

    def tensor(self, objs: Sequence):
        acc = self.unit
        for x in objs:
            acc = self.tobj[(acc, x)]
        return acc

    def tensor_arrows(self, arrows: Sequence):
        acc = self.C.identity(self.unit)
        for a in arrows:
            acc = self.tarr[(acc, a)]
        return acc

    def validate(self) -> None:
        C = self.C
        obs = C.objects
        for x in obs:
            for y in obs:
                if self.tobj.get((x, y)) not in obs:
                    raise InputError(f"tensor of objects {x!r}, {y!r} missing")
        for x in obs:
            if self.tobj[(self.unit, x)] != x or self.tobj[(x, self.unit)] != x:
                raise InputError("tensor unit is not strict")
            for y in obs:
                for z in obs:
                    if self.tobj[(self.tobj[(x, y)], z)] != self.tobj[(x, self.tobj[(y, z)])]:
                        raise InputError("tensor of objects is not strictly associative")
        for f in C.arrows:
            for g in C.arrows:
                h = self.tarr.get((f, g))
                want = (self.tobj[(C.dom(f), C.dom(g))], self.tobj[(C.cod(f), C.cod(g))])
                if h is None or C.arrows.get(h) != want:
                    raise InputError(f"tensor of arrows {f!r}, {g!r} missing or ill-typed")
        for x in obs:
            for y in obs:
                if self.tarr[(C.identity(x), C.identity(y))] != C.identity(self.tobj[(x, y)]):
                    raise InputError("tensor does not preserve identities")
        for (f2, f1) in C.composition:
            for (g2, g1) in C.composition:
                lhs = self.tarr[(C.compose(f2, f1), C.compose(g2, g1))]
                rhs = C.compose(self.tarr[(f2, g2)], self.tarr[(f1, g1)])
                if lhs != rhs:
                    raise InputError("tensor is not functorial (interchange fails)")
        for f in C.arrows:
            for g in C.arrows:
                for h in C.arrows:
                    if self.tarr[(self.tarr[(f, g)], h)] != self.tarr[(f, self.tarr[(g, h)])]:
                        raise InputError("tensor of arrows is not strictly associative")
        if self.braiding is not None:
            for x in obs:
                for y in obs:
                    s = self.braiding.get((x, y))
                    if C.arrows.get(s) != (self.tobj[(x, y)], self.tobj[(y, x)]):
                        raise InputError(f"braiding at {x!r}, {y!r} missing or ill-typed")
                    if C.compose(self.braiding[(y, x)], s) != C.identity(self.tobj[(x, y)]):
                        raise InputError("braiding is not a symmetry")
            for f in C.arrows:
                for g in C.arrows:
                    lhs = C.compose(self.braiding[(C.cod(f), C.cod(g))], self.tarr[(f, g)])
                    rhs = C.compose(self.tarr[(g, f)], self.braiding[(C.dom(f), C.dom(g))])
                    if lhs != rhs:
                        raise InputError("braiding is not natural")

    def permutation_iso(self, source: tuple, target: tuple, mapping: tuple):
        """Arrow ``tensor(target) -> tensor(source)`` realising a bijection.

        ``mapping[k]`` is the target position of source factor ``k``; the
        arrow moves the factor at target position ``mapping[k]`` back to
        position ``k``.
        """
        C = self.C
        # current arrangement: labels = source positions in target order
        inv = [0] * len(mapping)
        for k, j in enumerate(mapping):
            inv[j] = k
        labels = list(inv)
        acc = C.identity(self.tensor(target))
        # bubble sort labels into 0..n-1 using adjacent symmetries
        n = len(labels)
        for i in range(n):
            for p in range(n - 1 - i):
                if labels[p] > labels[p + 1]:
                    objs = [source[l] for l in labels]
                    swap = self.tensor_arrows(
                        [C.identity(o) for o in objs[:p]]
                        + [self.braiding[(objs[p], objs[p + 1])]]
                        + [C.identity(o) for o in objs[p + 2:]])
                    acc = C.compose(swap, acc)
                    labels[p], labels[p + 1] = labels[p + 1], labels[p]
        return acc


class ChosenProducts:
    """A chosen universal cone for each finite family of objects."""

    def __init__(self, C: FiniteCategory, table: dict, check: bool = True):
        self.C = C
        self.table = {tuple(k): (v[0], tuple(v[1])) for k, v in table.items()}
        if check:
            for fam in self.table:
                self._check(fam)

    def _check(self, fam: tuple) -> None:
        C = self.C
        P, projs = self.table[fam]
        if len(projs) != len(fam):
            raise InputError(f"product of {fam}: wrong number of projections")
        for p, a in zip(projs, fam):
            if C.arrows.get(p) != (P, a):
                raise InputError(f"product of {fam}: projection {p!r} ill-typed")
        for x in C.objects:
            images = {}
            for t in C.hom(x, P):
                key = tuple(C.compose(p, t) for p in projs)
                if key in images:
                    raise InputError(f"product of {fam}: factorisation through {P!r} not unique from {x!r}")
                images[key] = t
            want = 1
            for a in fam:
                want *= len(C.hom(x, a))
            if len(images) != want:
                raise InputError(f"product of {fam}: cone from {x!r} does not factor")

    @classmethod
    def search(cls, C: FiniteCategory, max_arity: int) -> ChosenProducts:
        """Find products of every family up to ``max_arity`` by brute force."""
        table = {}
        for n in range(max_arity + 1):
            for fam in itertools.product(C.objects, repeat=n):
                if n == 1:
                    table[fam] = (fam[0], (C.identity(fam[0]),))
                    continue
                found = None
                for P in C.objects:
                    for projs in itertools.product(*(C.hom(P, a) for a in fam)):
                        trial = cls(C, {fam: (P, projs)}, check=False)
                        try:
                            trial._check(fam)
                        except InputError:
                            continue
                        found = (P, projs)
                        break
                    if found:
                        break
                if found is None:
                    raise InputError(f"{C.name}: family {fam} has no product")
                table[fam] = found
        return cls(C, table, check=False)

    def obj(self, fam: Sequence):
        fam = tuple(fam)
        if fam not in self.table:
            raise InputError(f"no chosen product for family {fam}")
        return self.table[fam][0]

    def projections(self, fam: Sequence) -> tuple:
        return self.table[tuple(fam)][1]

    def pair(self, fam: Sequence, x, comps: Sequence):
        """The unique ``t: x -> P(fam)`` with ``p_i t = comps[i]``."""
        fam = tuple(fam)
        P, projs = self.table[fam]
        want = tuple(comps)
        for t in self.C.hom(x, P):
            if tuple(self.C.compose(p, t) for p in projs) == want:
                return t
        raise InputError(f"no pairing into product of {fam}")
