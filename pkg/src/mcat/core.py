"""Data model for finite multicategories with symmetric and cartesian structure.

Conventions
-----------
Positions are 0-based throughout.

A :class:`FamilyMap` ``sigma`` sends positions of an arrow's domain to
positions of the acted arrow's domain.  Read set-theoretically::

    (sigma f)(y_0, ..., y_{m-1}) = f(y_{sigma(0)}, ..., y_{sigma(n-1)})

so for ``f: A, B, A -> D`` and ``sigma = (2, 0, 2)`` into the family
``(B, C, A)`` one gets ``(sigma f)(b, c, a) = f(a, b, a)``.  Composition of
family maps is written ``rho.after(sigma)`` (first ``sigma`` then ``rho``)
and the action is functorial: ``act(rho, act(sigma, f)) == act(rho.after(sigma), f)``.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from typing import Any, Hashable, Iterable, Iterator, Sequence


class McatError(Exception):
    """Base class for library errors."""


class InputError(McatError, ValueError):
    """Malformed input: unknown object, signature mismatch, invalid table."""


class BudgetError(McatError):
    """A requested computation exceeds the budget or is not finitely generated."""


class UnsupportedAction(McatError):
    """The backend does not carry the structure needed for an action."""


class PreconditionError(McatError):
    """A construction was applied outside its stated hypotheses."""


@dataclass(frozen=True)
class Signature:
    dom: tuple
    cod: Hashable

    @property
    def arity(self) -> int:
        return len(self.dom)

    def __str__(self) -> str:
        return f"({', '.join(map(str, self.dom))}; {self.cod})"


@dataclass(frozen=True)
class Arrow:
    """An arrow of some backend.  ``value`` is the backend's payload."""

    dom: tuple
    cod: Hashable
    value: Hashable

    @property
    def arity(self) -> int:
        return len(self.dom)

    @property
    def sig(self) -> Signature:
        return Signature(self.dom, self.cod)

    def __str__(self) -> str:
        return f"{_show(self.value)}: {', '.join(map(str, self.dom))} -> {self.cod}"

    __repr__ = __str__


def _show(value: Any) -> str:
    if isinstance(value, Arrow):
        return _show(value.value)
    if isinstance(value, tuple):
        return "<" + ",".join(_show(v) for v in value) + ">"
    return str(value)


@dataclass(frozen=True)
class FamilyMap:
    """A map of families ``source -> target`` over the objects.

    ``mapping[i]`` is the target position of source position ``i``; the
    invariant is ``target[mapping[i]] == source[i]``.
    """

    source: tuple
    target: tuple
    mapping: tuple

    def __post_init__(self):
        if len(self.mapping) != len(self.source):
            raise InputError("family map: mapping length differs from source arity")
        for i, j in enumerate(self.mapping):
            if not 0 <= j < len(self.target):
                raise InputError(f"family map: position {i} sent out of range ({j})")
            if self.target[j] != self.source[i]:
                raise InputError(
                    f"family map is not over objects: source[{i}]={self.source[i]!r} "
                    f"but target[{j}]={self.target[j]!r}")

    @classmethod
    def identity(cls, family: Sequence) -> FamilyMap:
        family = tuple(family)
        return cls(family, family, tuple(range(len(family))))

    @classmethod
    def permutation(cls, source: Sequence, perm: Sequence[int]) -> FamilyMap:
        """Bijection sending position ``i`` to ``perm[i]``; the target is derived."""
        source = tuple(source)
        if sorted(perm) != list(range(len(source))):
            raise InputError(f"not a permutation: {perm}")
        target = [None] * len(source)
        for i, j in enumerate(perm):
            target[j] = source[i]
        return cls(source, tuple(target), tuple(perm))

    @classmethod
    def from_one_based(cls, source, target, mapping) -> FamilyMap:
        return cls(tuple(source), tuple(target), tuple(j - 1 for j in mapping))

    @classmethod
    def contraction(cls, source: Sequence, i: int) -> FamilyMap:
        """Merge positions ``i`` and ``i + 1``."""
        source = tuple(source)
        if not 0 <= i < len(source) - 1:
            raise InputError(f"contraction position {i} out of range")
        if source[i] != source[i + 1]:
            raise InputError(
                f"cannot contract positions {i}, {i + 1}: {source[i]!r} != {source[i + 1]!r}")
        target = source[:i + 1] + source[i + 2:]
        return cls(source, target, tuple(k if k <= i else k - 1 for k in range(len(source))))

    @classmethod
    def weakening(cls, source: Sequence, i: int, obj: Hashable) -> FamilyMap:
        """Insert an unused position carrying ``obj`` at index ``i``."""
        source = tuple(source)
        if not 0 <= i <= len(source):
            raise InputError(f"weakening position {i} out of range")
        target = source[:i] + (obj,) + source[i:]
        return cls(source, target, tuple(k if k < i else k + 1 for k in range(len(source))))

    @classmethod
    def constant(cls, obj: Hashable, n: int) -> FamilyMap:
        """The constant map ``n -> 1`` on a family of ``n`` copies of ``obj``."""
        return cls((obj,) * n, (obj,), (0,) * n)

    @property
    def is_bijective(self) -> bool:
        return len(self.source) == len(self.target) and len(set(self.mapping)) == len(self.mapping)

    @property
    def is_monotone(self) -> bool:
        return all(a <= b for a, b in zip(self.mapping, self.mapping[1:]))

    def after(self, first: FamilyMap) -> FamilyMap:
        """``self . first``: apply ``first`` then ``self``."""
        if first.target != self.source:
            raise InputError("family maps are not composable")
        return FamilyMap(first.source, self.target, tuple(self.mapping[j] for j in first.mapping))

    def inverse(self) -> FamilyMap:
        if not self.is_bijective:
            raise InputError("only bijections are invertible")
        inv = [0] * len(self.mapping)
        for i, j in enumerate(self.mapping):
            inv[j] = i
        return FamilyMap(self.target, self.source, tuple(inv))

    def preimage_sizes(self) -> tuple:
        sizes = [0] * len(self.target)
        for j in self.mapping:
            sizes[j] += 1
        return tuple(sizes)

    def relabel(self, obj_map) -> FamilyMap:
        """Push the map along an object function (used by functors)."""
        return FamilyMap(tuple(obj_map(x) for x in self.source),
                         tuple(obj_map(x) for x in self.target), self.mapping)

    @staticmethod
    def sum(maps: Sequence[FamilyMap]) -> FamilyMap:
        """Block sum ``sigma_1 + ... + sigma_n``."""
        source, target, mapping = (), (), []
        for s in maps:
            offset = len(target)
            mapping.extend(offset + j for j in s.mapping)
            source += s.source
            target += s.target
        return FamilyMap(source, target, tuple(mapping))

    def __str__(self) -> str:
        return f"[{' '.join(f'{i}>{j}' for i, j in enumerate(self.mapping))}]"


def factor_family_map(sigma: FamilyMap) -> tuple[FamilyMap, tuple]:
    """Split ``sigma`` into a bijection followed by a monotone map.

    Returns ``(beta, blocks)`` with ``beta`` a bijection that sorts source
    positions by ``(sigma(i), i)`` and ``blocks[j]`` the preimage size of
    target position ``j``; the monotone part is the sum of the constant
    maps ``blocks[j] -> 1``.
    """
    order = sorted(range(len(sigma.mapping)), key=lambda i: (sigma.mapping[i], i))
    rank = [0] * len(order)
    for r, i in enumerate(order):
        rank[i] = r
    beta = FamilyMap.permutation(sigma.source, rank)
    return beta, sigma.preimage_sizes()


def monotone_part(sigma: FamilyMap) -> FamilyMap:
    beta, blocks = factor_family_map(sigma)
    mapping = tuple(j for j, k in enumerate(blocks) for _ in range(k))
    return FamilyMap(beta.target, sigma.target, mapping)


def block_reindex(order: Sequence[int], sizes: Sequence[int]) -> tuple:
    """Positions of blocks laid out in ``order`` sent to their natural layout.

    The source concatenates blocks ``order[0], order[1], ...`` (block ``b``
    has ``sizes[b]`` positions); the result maps each position to where the
    same element sits when the blocks are laid out ``0, 1, 2, ...``.
    """
    offsets = list(itertools.accumulate([0] + list(sizes)))
    return tuple(offsets[b] + t for b in order for t in range(sizes[b]))


@dataclass(frozen=True)
class Budget:
    """Scope of every exhaustive check."""

    max_arity: int = 3
    max_depth: int = 2
    max_enum: int = 10000

    def __post_init__(self):
        if min(self.max_arity, self.max_depth, self.max_enum) < 0:
            raise InputError("budget caps must be non-negative")

    @classmethod
    def from_env(cls, var: str = "MCAT_BUDGET", **overrides) -> Budget:
        """Read ``arity,depth,enum`` from the environment, then apply overrides."""
        base = cls()
        raw = os.environ.get(var)
        if raw:
            try:
                a, d, e = (int(x) for x in raw.split(","))
            except ValueError as exc:
                raise InputError(f"{var} must look like 'arity,depth,enum', got {raw!r}") from exc
            base = cls(a, d, e)
        values = {k: v for k, v in overrides.items() if v is not None}
        return cls(**{**base.as_dict(), **values})

    def as_dict(self) -> dict:
        return {"max_arity": self.max_arity, "max_depth": self.max_depth, "max_enum": self.max_enum}


DEFAULT_BUDGET = Budget()

PASS = "pass"
COUNTEREXAMPLE = "counterexample"
EXHAUSTED = "budget-exhausted"
_SEVERITY = {PASS: 0, EXHAUSTED: 1, COUNTEREXAMPLE: 2}


@dataclass
class ValidationReport:
    law: str
    budget: Budget
    outcome: str = PASS
    witness: dict | None = None
    checked: int = 0
    details: dict = field(default_factory=dict)
    children: list = field(default_factory=list)
    #: ``(law_key, args)`` that :func:`mcat.laws.replay` re-evaluates
    evidence: tuple | None = field(default=None, repr=False, compare=False)

    @property
    def passed(self) -> bool:
        return self.outcome == PASS

    def add(self, child: ValidationReport) -> ValidationReport:
        self.children.append(child)
        self.checked += child.checked
        if _SEVERITY[child.outcome] > _SEVERITY[self.outcome]:
            self.outcome = child.outcome
            if child.witness is not None and self.witness is None:
                self.witness = {"law": child.law, **child.witness}
                self.evidence = child.evidence
        return self

    def first_failure(self) -> ValidationReport | None:
        if self.outcome == COUNTEREXAMPLE and not self.children:
            return self
        for c in self.children:
            found = c.first_failure()
            if found is not None:
                return found
        return None

    def to_dict(self) -> dict:
        return {
            "law": self.law,
            "outcome": self.outcome,
            "budget": self.budget.as_dict(),
            "checked": self.checked,
            "witness": _jsonable(self.witness),
            "details": _jsonable(self.details),
            "children": [c.to_dict() for c in self.children],
        }

    def lines(self, indent: int = 0) -> list[str]:
        pad = "  " * indent
        out = [f"{pad}{self.law}: {self.outcome} ({self.checked} checked)"]
        if self.witness and not self.children:
            for k, v in self.witness.items():
                out.append(f"{pad}    {k} = {_jsonable(v)}")
        for k, v in self.details.items():
            out.append(f"{pad}    {k}: {_jsonable(v)}")
        for c in self.children:
            out.extend(c.lines(indent + 1))
        return out

    def __str__(self) -> str:
        return "\n".join(self.lines())


def _jsonable(obj):
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return str(obj)


@dataclass(frozen=True)
class HomSet:
    arrows: tuple
    truncated: bool = False

    def __iter__(self):
        return iter(self.arrows)

    def __len__(self):
        return len(self.arrows)

    def __contains__(self, item):
        return item in self.arrows


class Multicategory:
    """Backend interface.

    Subclasses provide ``objects``, ``iter_hom``, ``identity``, ``_compose``
    and (for symmetric or cartesian backends) ``_act``.  Public methods
    check signatures and then delegate.
    """

    name = "M"
    symmetric = True
    cartesian = False
    #: True when every hom-set is finite (no truncation possible)
    finite_homs = True

    objects: tuple = ()
    #: True when ``_compose`` is defined as a fold of a native ``_partial``
    composition_by_slots = False

    def iter_hom(self, dom: tuple, cod) -> Iterator[Arrow]:
        raise NotImplementedError

    def identity(self, obj) -> Arrow:
        raise NotImplementedError

    def _compose(self, f: Arrow, gs: Sequence[Arrow]) -> Arrow:
        raise NotImplementedError

    def _act(self, sigma: FamilyMap, f: Arrow) -> Arrow:
        raise NotImplementedError

    def generators(self, cartesian: bool = False, budget: Budget = DEFAULT_BUDGET) -> tuple:
        """A set of arrows generating the view under composition (and actions).

        Default: every non-identity arrow of arity <= 2.
        """
        gens = []
        for sig in signatures(self, min(2, budget.max_arity)):
            hs = hom(self, sig, budget)
            if hs.truncated:
                raise BudgetError(f"{self.name}: hom{sig} is infinite; declare generators")
            for a in hs:
                if a.arity == 1 and a == self.identity(a.cod):
                    continue
                gens.append(a)
        return tuple(gens)

    # -- checked operations -------------------------------------------------

    def check_object(self, obj) -> None:
        if obj not in self._object_set:
            raise InputError(f"{self.name}: unknown object {obj!r}")

    @property
    def _object_set(self):
        cached = self.__dict__.get("_objset")
        if cached is None:
            cached = frozenset(self.objects)
            self.__dict__["_objset"] = cached
        return cached

    def compose(self, f: Arrow, gs: Sequence[Arrow]) -> Arrow:
        gs = tuple(gs)
        if len(gs) != f.arity:
            raise InputError(f"compose: {f} expects {f.arity} arguments, got {len(gs)}")
        for i, (g, x) in enumerate(zip(gs, f.dom)):
            if g.cod != x:
                raise InputError(f"compose: argument {i} has codomain {g.cod!r}, expected {x!r}")
        return self._compose(f, gs)

    def act(self, sigma: FamilyMap, f: Arrow) -> Arrow:
        if sigma.source != f.dom:
            raise InputError(f"act: family map source {sigma.source} differs from domain {f.dom}")
        if sigma.is_bijective:
            if not (self.symmetric or sigma.mapping == tuple(range(len(sigma.mapping)))):
                raise UnsupportedAction(f"{self.name} is not symmetric")
        elif not self.cartesian:
            raise UnsupportedAction(f"{self.name} carries no cartesian structure")
        if sigma.mapping == tuple(range(len(sigma.mapping))) and sigma.source == sigma.target:
            return f
        return self._act(sigma, f)

    def partial(self, f: Arrow, i: int, g: Arrow) -> Arrow:
        """Single-slot composition ``f o_i g``."""
        if self.composition_by_slots:
            if g.cod != f.dom[i]:
                raise InputError(f"partial: argument has codomain {g.cod!r}, expected {f.dom[i]!r}")
            return self._partial(f, i, g)
        ids = self._identities
        gs = [ids[x] if x in ids else self.identity(x) for x in f.dom]
        gs[i] = g
        return self.compose(f, gs)

    @property
    def _identities(self) -> dict:
        cached = self.__dict__.get("_ids")
        if cached is None:
            cached = {x: self.identity(x) for x in self.objects}
            self.__dict__["_ids"] = cached
        return cached

    def __str__(self) -> str:
        return self.name


def hom(M: Multicategory, sig: Signature, b: Budget = DEFAULT_BUDGET) -> HomSet:
    """Every arrow of ``sig``, or the first ``b.max_enum`` with a truncation flag."""
    for x in (*sig.dom, sig.cod):
        M.check_object(x)
    if sig.arity > b.max_arity:
        raise BudgetError(f"arity {sig.arity} exceeds budget max_arity={b.max_arity}")
    it = M.iter_hom(tuple(sig.dom), sig.cod)
    arrows = tuple(itertools.islice(it, b.max_enum))
    truncated = len(arrows) == b.max_enum and next(it, None) is not None
    return HomSet(arrows, truncated)


def signatures(M: Multicategory, max_arity: int, min_arity: int = 0) -> Iterator[Signature]:
    """All signatures up to ``max_arity``, ordered by arity then object order."""
    for n in range(min_arity, max_arity + 1):
        for dom in itertools.product(M.objects, repeat=n):
            for cod in M.objects:
                yield Signature(dom, cod)


def compose(M: Multicategory, f: Arrow, gs: Sequence[Arrow]) -> Arrow:
    return M.compose(f, gs)


def sym_act(M: Multicategory, sigma: FamilyMap, f: Arrow) -> Arrow:
    if not sigma.is_bijective:
        raise UnsupportedAction("sym_act needs a bijective family map")
    return M.act(sigma, f)


def contract(M: Multicategory, f: Arrow, i: int) -> Arrow:
    if not M.cartesian:
        raise UnsupportedAction(f"{M.name} carries no cartesian structure")
    return M.act(FamilyMap.contraction(f.dom, i), f)


def weaken(M: Multicategory, f: Arrow, i: int, obj) -> Arrow:
    if not M.cartesian:
        raise UnsupportedAction(f"{M.name} carries no cartesian structure")
    M.check_object(obj)
    return M.act(FamilyMap.weakening(f.dom, i, obj), f)


def cart_act(M: Multicategory, sigma: FamilyMap, f: Arrow) -> Arrow:
    return M.act(sigma, f)


def cart_act_factored(M: Multicategory, sigma: FamilyMap, f: Arrow) -> Arrow:
    """The action rebuilt from a permutation, contractions and weakenings."""
    if sigma.source != f.dom:
        raise InputError("cart_act: family map source differs from domain")
    beta, blocks = factor_family_map(sigma)
    g = M.act(beta, f)
    # contractions first (right to left keeps offsets valid), then weakenings,
    # so no intermediate is wider than both ends
    offsets = list(itertools.accumulate([0] + list(blocks)))
    for j in reversed(range(len(blocks))):
        for _ in range(blocks[j] - 1):
            g = contract(M, g, offsets[j])
    for j, k in enumerate(blocks):
        if k == 0:
            g = weaken(M, g, j, sigma.target[j])
    return g


def enumerate_family_maps(source: tuple, objects: Sequence, max_arity: int,
                          bijective_only: bool = False) -> Iterator[FamilyMap]:
    """All family maps out of ``source`` into families of arity <= ``max_arity``."""
    n = len(source)
    if bijective_only:
        for perm in itertools.permutations(range(n)):
            yield FamilyMap.permutation(source, perm)
        return
    for m in range(max_arity + 1):
        for target in itertools.product(objects, repeat=m):
            choices = [[j for j in range(m) if target[j] == x] for x in source]
            for mapping in itertools.product(*choices):
                yield FamilyMap(source, target, mapping)
