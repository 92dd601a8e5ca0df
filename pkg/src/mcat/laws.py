"""Budget-bounded axiom checks with replayable counterexamples.

Every law is a function returning the two sides of an equation.  The
sweeps quantify it over the arrows within ``max_arity`` (the *view*) and
stop at the first violation, which is therefore minimal in view order
(arity first, then enumeration index).

Composition laws are checked in single-slot form: unit laws, agreement of
simultaneous composition with iterated single-slot composition (depth 1)
and the sequential and parallel associativity laws (depth 2).  Together
these imply associativity of simultaneous composition for every nesting
within the arity cap.
"""
from __future__ import annotations

import dataclasses
import itertools
from typing import Iterator, Sequence

from .core import (COUNTEREXAMPLE, DEFAULT_BUDGET, EXHAUSTED, Arrow, Budget, BudgetError, FamilyMap,
                   Multicategory, ValidationReport, block_reindex, cart_act_factored,
                   enumerate_family_maps, hom, signatures)


class View:
    """All arrows of arity <= ``max_arity``, grouped for fast lookup."""

    def __init__(self, M: Multicategory, b: Budget):
        self.M = M
        self.budget = b
        self.arrows: list[Arrow] = []
        self.truncated = False
        for sig in signatures(M, b.max_arity):
            hs = hom(M, sig, b)
            self.truncated |= hs.truncated
            self.arrows.extend(hs)
        self.index = {a: i for i, a in enumerate(self.arrows)}
        self.by_cod: dict = {}
        for a in self.arrows:
            self.by_cod.setdefault(a.cod, []).append(a)

    def __len__(self):
        return len(self.arrows)

    def __contains__(self, a):
        return a in self.index

    def into(self, obj, max_arity: int | None = None) -> list[Arrow]:
        xs = self.by_cod.get(obj, [])
        if max_arity is None:
            return xs
        return [a for a in xs if a.arity <= max_arity]


def scoped(M: Multicategory, b: Budget) -> Budget:
    """Clamp the arity cap to a backend that is only defined up to its own cap."""
    cap = getattr(M, "arity_cap", None)
    if cap is not None and cap < b.max_arity:
        return dataclasses.replace(b, max_arity=cap)
    return b


def view(M: Multicategory, b: Budget = DEFAULT_BUDGET) -> View:
    cache = M.__dict__.setdefault("_views", {})
    key = (b.max_arity, b.max_enum)
    v = cache.get(key)
    if v is None:
        v = View(M, b)
        cache[key] = v
    return v


def iter_composites(M: Multicategory, arrows: Sequence[Arrow], max_arity: int) -> Iterator[tuple]:
    """Pairs ``(f, gs)`` drawn from ``arrows`` whose composite has arity <= ``max_arity``."""
    by_cod: dict = {}
    for a in arrows:
        by_cod.setdefault(a.cod, []).append(a)
    for f in arrows:
        pools = [by_cod.get(x, []) for x in f.dom]

        def rec(i, room):
            if i == len(pools):
                yield ()
                return
            for g in pools[i]:
                if g.arity <= room:
                    for rest in rec(i + 1, room - g.arity):
                        yield (g,) + rest

        for gs in rec(0, max_arity):
            yield f, gs


# -- laws: each returns (lhs, rhs) ---------------------------------------------

def _left_unit(M, f):
    return M.compose(M.identity(f.cod), [f]), f


def _right_unit(M, f):
    return M.compose(f, [M.identity(x) for x in f.dom]), f


def _unbiased(M, f, gs):
    lhs = M.compose(f, gs)
    try:
        rhs = f
        for i in reversed(range(len(gs))):
            rhs = M.partial(rhs, i, gs[i])
    except BudgetError:
        # a bounded backend: fill low arities first so intermediates stay small
        rhs, pos = f, list(range(len(gs)))
        for j in sorted(range(len(gs)), key=lambda j: gs[j].arity):
            rhs = M.partial(rhs, pos[j], gs[j])
            for t in range(j + 1, len(gs)):
                pos[t] += gs[j].arity - 1
    return lhs, rhs


def _assoc_sequential(M, f, i, g, j, h):
    return M.partial(M.partial(f, i, g), i + j, h), M.partial(f, i, M.partial(g, j, h))


def _assoc_parallel(M, f, i, g, k, h):
    # i < k: plug g at i and h at k in either order
    lhs = M.partial(M.partial(f, k, h), i, g)
    rhs = M.partial(M.partial(f, i, g), k + g.arity - 1, h)
    return lhs, rhs


def _act_functorial(M, rho, sigma, f):
    return M.act(rho, M.act(sigma, f)), M.act(rho.after(sigma), f)


def _compat_one(M, f, i, sigma, g):
    """``f o_i (sigma g) == (id + sigma + id)(f o_i g)``."""
    lhs = M.partial(f, i, M.act(sigma, g))
    inner = M.partial(f, i, g)
    parts = [FamilyMap.identity(f.dom[:i]), sigma, FamilyMap.identity(f.dom[i + 1:])]
    return lhs, M.act(FamilyMap.sum(parts), inner)


def _compat_two(M, sigma, f, gs):
    """``(sigma f)(gs) == sigma'(f(g_{sigma(0)}, ..., g_{sigma(n-1)}))``."""
    lhs = M.compose(M.act(sigma, f), gs)
    inner = M.compose(f, [gs[j] for j in sigma.mapping])
    prime = FamilyMap(inner.dom, lhs.dom, block_reindex(sigma.mapping, [g.arity for g in gs]))
    return lhs, M.act(prime, inner)


def _factored(M, sigma, f):
    return M.act(sigma, f), cart_act_factored(M, sigma, f)


LAWS = {
    "left-unit": _left_unit,
    "right-unit": _right_unit,
    "unbiased": _unbiased,
    "assoc-sequential": _assoc_sequential,
    "assoc-parallel": _assoc_parallel,
    "act-functorial": _act_functorial,
    "compat-one": _compat_one,
    "compat-two": _compat_two,
    "act-factorisation": _factored,
}


def replay(M: Multicategory, evidence: tuple) -> bool:
    """Re-evaluate a recorded counterexample; True when the sides still differ."""
    key, args = evidence
    lhs, rhs = LAWS[key](M, *args)
    return lhs != rhs


class _Sweep:
    def __init__(self, name: str, key: str, M: Multicategory, b: Budget):
        self.report = ValidationReport(name, b)
        self.key = key
        self.M = M
        self.law = LAWS[key]

    def check(self, *args) -> bool:
        """Evaluate one instance; False once a counterexample is recorded."""
        self.report.checked += 1
        lhs, rhs = self.law(self.M, *args)
        if lhs != rhs:
            r = self.report
            r.outcome = COUNTEREXAMPLE
            r.witness = {"instance": [_fmt(a) for a in args], "lhs": str(lhs), "rhs": str(rhs)}
            r.evidence = (self.key, args)
            return False
        return True


def _fmt(a):
    if isinstance(a, (list, tuple)):
        return [_fmt(x) for x in a]
    return str(a)


def _finish(top: ValidationReport, v: View) -> ValidationReport:
    if v.truncated and top.outcome != COUNTEREXAMPLE:
        top.outcome = EXHAUSTED
        top.details["note"] = "some hom-sets were truncated at max_enum"
    top.details["arrows in view"] = len(v)
    return top


def _slot_pairs(v: View, f: Arrow, room: int) -> Iterator[tuple]:
    for i, x in enumerate(f.dom):
        for g in v.into(x, room):
            yield i, g


def validate_multicat(M: Multicategory, b: Budget = DEFAULT_BUDGET,
                      force_unbiased: bool = False) -> ValidationReport:
    """Unit laws, unbiased composition and associativity within the budget.

    Backends whose simultaneous composition is a fold of single-slot
    composition satisfy the unbiased law by construction; the sweep is
    then skipped unless ``force_unbiased`` is set.
    """
    b = scoped(M, b)
    v = view(M, b)
    top = ValidationReport("multicategory", b, details={"backend": M.name})
    cap = b.max_arity

    lu = _Sweep("left unit", "left-unit", M, b)
    ru = _Sweep("right unit", "right-unit", M, b)
    for f in v.arrows:
        if not lu.check(f) or not ru.check(f):
            break
    top.add(lu.report)
    top.add(ru.report)

    if b.max_depth >= 1:
        top.add(_unbiased_sweep(M, v, b, force_unbiased))

    if b.max_depth >= 2:
        seq_ = _Sweep("associativity (nested)", "assoc-sequential", M, b)
        par = _Sweep("associativity (parallel)", "assoc-parallel", M, b)
        done_s = done_p = False
        for f in v.arrows:
            n = f.arity
            for i, g in _slot_pairs(v, f, cap - n + 1):
                fg = n - 1 + g.arity
                if not done_s:
                    for j, x in enumerate(g.dom):
                        for h in v.into(x, cap - fg + 1):
                            if not seq_.check(f, i, g, j, h):
                                done_s = True
                                break
                        if done_s:
                            break
                if not done_p:
                    for k in range(i + 1, n):
                        # both orders build an intermediate; keep each within the cap
                        for h in v.into(f.dom[k], min(cap - fg + 1, cap - n + 1)):
                            if not par.check(f, i, g, k, h):
                                done_p = True
                                break
                        if done_p:
                            break
                if done_s and done_p:
                    break
            if done_s and done_p:
                break
        top.add(seq_.report)
        top.add(par.report)
    return _finish(top, v)


def _unbiased_sweep(M: Multicategory, v: View, b: Budget, force: bool = False) -> ValidationReport:
    """Every simultaneous composite against the chain of single-slot ones.

    Slots are filled right to left so the chain prefix is shared between
    argument tuples; arguments come from the view, so signatures are
    correct by construction and the unchecked ``_compose`` is used.
    """
    sweep = _Sweep("simultaneous = iterated single-slot composition", "unbiased", M, b)
    report = sweep.report
    if M.composition_by_slots and not force:
        report.details["note"] = "holds by construction: composition is a fold of single-slot composition"
        return report
    cap = b.max_arity
    ids = M._identities
    comp = M._compose
    pools = {x: sorted(((g.arity, g) for g in v.into(x)), key=lambda t: t[0]) for x in M.objects}

    def partial(r, i, g):
        args = [ids[x] for x in r.dom]
        args[i] = g
        return comp(r, args)

    def chain(f, gs):
        # single-slot chain filling low arities first, so no intermediate exceeds the cap
        r, pos = f, list(range(len(gs)))
        for j in sorted(range(len(gs)), key=lambda j: gs[j].arity):
            r = partial(r, pos[j], gs[j])
            for t in range(j + 1, len(gs)):
                pos[t] += gs[j].arity - 1
        return r

    def fill(f, r, i, room, tail):
        # r = f with slots > i already filled by ``tail``; None once r would overflow
        if i < 0:
            report.checked += 1
            gs = tuple(tail)
            if comp(f, gs) != (chain(f, gs) if r is None else r):
                return sweep.check(f, gs)
            return True
        used = cap - room
        for k, g in pools[f.dom[i]]:
            if k > room:
                break
            tail.appendleft(g)
            nxt = None if r is None or i + used + k > cap else partial(r, i, g)
            ok = fill(f, nxt, i - 1, room - k, tail)
            tail.popleft()
            if not ok:
                return False
        return True

    from collections import deque
    for f in v.arrows:
        if not fill(f, f, f.arity - 1, cap, deque()):
            break
    return report


def _bijections(dom: tuple) -> Iterator[FamilyMap]:
    for perm in itertools.permutations(range(len(dom))):
        yield FamilyMap.permutation(dom, perm)


def _elementary(target: tuple, objects, cap: int, cartesian: bool) -> Iterator[FamilyMap]:
    """Adjacent transpositions and, when cartesian, contractions and weakenings."""
    m = len(target)
    for p in range(m - 1):
        perm = list(range(m))
        perm[p], perm[p + 1] = p + 1, p
        yield FamilyMap.permutation(target, perm)
    if cartesian:
        for p in range(m - 1):
            if target[p] == target[p + 1]:
                yield FamilyMap.contraction(target, p)
        if m + 1 <= cap:
            for p in range(m + 1):
                for x in objects:
                    yield FamilyMap.weakening(target, p, x)


def _action_sweeps(M: Multicategory, v: View, b: Budget, cartesian: bool) -> list[ValidationReport]:
    cap = b.max_arity
    tag = "cartesian" if cartesian else "symmetric"

    def maps(dom):
        if cartesian:
            return enumerate_family_maps(dom, M.objects, cap)
        return _bijections(dom)

    fun = _Sweep(f"{tag} action functoriality", "act-functorial", M, b)
    ok = True
    for f in v.arrows:
        for sigma in maps(f.dom):
            for rho in _elementary(sigma.target, M.objects, cap, cartesian):
                if not fun.check(rho, sigma, f):
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            break

    # Both compatibility laws are stable under composing family maps once the
    # action is functorial, so elementary maps suffice.
    def elementary(dom):
        return _elementary(dom, M.objects, cap, cartesian)

    c1 = _Sweep(f"{tag} compatibility: acted arguments", "compat-one", M, b)
    ok = True
    for f in v.arrows:
        for i, g in _slot_pairs(v, f, cap - f.arity + 1):
            room = cap - f.arity + 1
            for sigma in elementary(g.dom):
                if len(sigma.target) > room:
                    continue
                if not c1.check(f, i, sigma, g):
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            break

    c2 = _Sweep(f"{tag} compatibility: acted operation", "compat-two", M, b)
    ok = True
    for f in v.arrows:
        for sigma in elementary(f.dom):
            tgt = sigma.target
            ids = [M.identity(x) for x in tgt]
            if not c2.check(sigma, f, tuple(ids)):
                ok = False
                break
            for j, x in enumerate(tgt):
                uses = sum(1 for k in sigma.mapping if k == j)
                for g in v.into(x):
                    if g == ids[j]:
                        continue
                    if f.arity + uses * (g.arity - 1) > cap or len(tgt) - 1 + g.arity > cap:
                        continue
                    gs = ids[:j] + [g] + ids[j + 1:]
                    if not c2.check(sigma, f, tuple(gs)):
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            break
    reports = [fun.report, c1.report, c2.report]

    if cartesian:
        fac = _Sweep("cartesian action = permutation, contractions, weakenings", "act-factorisation", M, b)
        ok = True
        for f in v.arrows:
            for sigma in maps(f.dom):
                if not fac.check(sigma, f):
                    ok = False
                    break
            if not ok:
                break
        reports.append(fac.report)
    return reports


def validate_symmetric(M: Multicategory, b: Budget = DEFAULT_BUDGET) -> ValidationReport:
    """Functoriality of the permutation action and both equivariance laws."""
    b = scoped(M, b)
    v = view(M, b)
    top = ValidationReport("symmetric", b, details={"backend": M.name})
    if not M.symmetric:
        top.details["note"] = "backend declares no symmetric structure"
        return _finish(top, v)
    for r in _action_sweeps(M, v, b, cartesian=False):
        top.add(r)
    return _finish(top, v)


def validate_cartesian(M: Multicategory, b: Budget = DEFAULT_BUDGET) -> ValidationReport:
    """Functoriality over all family maps, both compatibility laws and
    independence of the factorisation into permutation, contractions and
    weakenings."""
    b = scoped(M, b)
    v = view(M, b)
    top = ValidationReport("cartesian", b, details={"backend": M.name})
    if not M.cartesian:
        top.details["note"] = "backend declares no cartesian structure"
        return _finish(top, v)
    for r in _action_sweeps(M, v, b, cartesian=True):
        top.add(r)
    return _finish(top, v)


def validate_all(M: Multicategory, b: Budget = DEFAULT_BUDGET) -> ValidationReport:
    b = scoped(M, b)
    top = ValidationReport("axioms", b, details={"backend": M.name})
    top.add(validate_multicat(M, b))
    if M.symmetric:
        top.add(validate_symmetric(M, b))
    if M.cartesian:
        top.add(validate_cartesian(M, b))
    return top
