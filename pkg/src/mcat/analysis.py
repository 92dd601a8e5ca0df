"""Instance checkers: representability, centers and sequentiality,
algebraic and universal products, biproducts, coproduct cones and
coreflections.

Every search is exhaustive in a deterministic order and returns the first
witness (or all of them with ``all=True``).
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .core import (COUNTEREXAMPLE, DEFAULT_BUDGET, EXHAUSTED, PASS, Arrow, Budget, BudgetError,
                   FamilyMap, Multicategory, PreconditionError, Signature, ValidationReport, hom)
from .homs import (InternalHom, MFunctor, enumerate_functors, forgetful, identity_functor,
                   monoid_mcat, plan_for)


def homs(M: Multicategory, dom: Sequence, cod, b: Budget = DEFAULT_BUDGET) -> tuple:
    """Cached full hom-set; BudgetError when it does not fit ``b.max_enum``."""
    cache = M.__dict__.setdefault("_homcache", {})
    key = (tuple(dom), cod, b.max_enum)
    hs = cache.get(key)
    if hs is None:
        h = hom(M, Signature(tuple(dom), cod), b)
        if h.truncated:
            raise BudgetError(f"{M.name}: hom{Signature(tuple(dom), cod)} exceeds max_enum")
        hs = cache[key] = h.arrows
    return hs


def families(M: Multicategory, max_arity: int) -> list[tuple]:
    return [fam for n in range(max_arity + 1) for fam in itertools.product(M.objects, repeat=n)]


def projection(M: Multicategory, family: tuple, i: int) -> Arrow:
    """The identity on ``family[i]`` weakened to the whole family."""
    x = family[i]
    return M.act(FamilyMap((x,), tuple(family), (i,)), M.identity(x))


def contract_all(M: Multicategory, f: Arrow, obj) -> Arrow:
    return M.act(FamilyMap.constant(obj, f.arity), f)


# -- representability -----------------------------------------------------------

def is_preuniversal(M: Multicategory, u: Arrow, b: Budget = DEFAULT_BUDGET) -> bool:
    """``t -> t u`` is a bijection ``M(C; D) -> M(family; D)`` for every ``D``."""
    for D in M.objects:
        source = homs(M, (u.cod,), D, b)
        target = homs(M, u.dom, D, b)
        if len(source) != len(target):
            return False
        if {M.compose(t, [u]) for t in source} != set(target):
            return False
    return True


def find_preuniversal(M: Multicategory, family: Sequence, b: Budget = DEFAULT_BUDGET,
                      all: bool = False):
    family = tuple(family)
    found = []
    for C in M.objects:
        # cardinality prune before any composition
        if any(len(homs(M, (C,), D, b)) != len(homs(M, family, D, b)) for D in M.objects):
            continue
        for u in homs(M, family, C, b):
            if is_preuniversal(M, u, b):
                if not all:
                    return u
                found.append(u)
    return found if all else None


def is_representable(M: Multicategory, b: Budget = DEFAULT_BUDGET,
                     scope: Callable | None = None) -> ValidationReport:
    """Preuniversal arrows for every family in scope, closed under composition.

    ``scope`` (or the backend's ``representation_scope``) limits the
    families considered; the number left out is reported.
    """
    scope = scope or getattr(M, "representation_scope", None) or (lambda fam: True)
    report = ValidationReport("representable", b)
    fams = families(M, b.max_arity)
    chosen = {}
    skipped = 0
    for fam in fams:
        if not scope(fam):
            skipped += 1
            continue
        report.checked += 1
        u = find_preuniversal(M, fam, b)
        if u is None:
            report.outcome = COUNTEREXAMPLE
            report.witness = {"family": list(fam), "problem": "no preuniversal arrow"}
            return report
        chosen[fam] = u
    for fam, u in chosen.items():
        for i in range(len(fam)):
            for sub, v in chosen.items():
                if v.cod != fam[i] or len(fam) - 1 + len(sub) > b.max_arity:
                    continue
                report.checked += 1
                w = M.partial(u, i, v)
                if not is_preuniversal(M, w, b):
                    report.outcome = COUNTEREXAMPLE
                    report.witness = {"outer": str(u), "slot": i, "inner": str(v),
                                      "problem": "composite is not preuniversal"}
                    return report
    report.details = {"families": len(chosen), "out of scope": skipped}
    return report


# -- centers and sequentiality ------------------------------------------------------

@dataclass
class CentralMonoidWitness:
    m0: dict
    m2: dict

    def mn(self, M: Multicategory, obj, n: int) -> Arrow:
        """``m^n`` on ``obj``: nullary unit, identity, or iterated ``m2``."""
        if n == 0:
            return self.m0[obj]
        acc = M.identity(obj)
        for _ in range(n - 1):
            acc = M.compose(self.m2[obj], [acc, M.identity(obj)])
        return acc


def center(M: Multicategory, b: Budget = DEFAULT_BUDGET) -> InternalHom:
    """Full sub-backend of ``[M, M]`` on the identity functor."""
    return InternalHom(M, M, [identity_functor(M)], b, name=f"Z({M.name})")


def _central_magmas(M: Multicategory, b: Budget, monoid: bool) -> list[CentralMonoidWitness]:
    Z = center(M, b)
    Id = Z.objects[0]
    zeros = list(Z.iter_hom((), Id))
    twos = list(Z.iter_hom((Id, Id), Id))
    out = []
    for z, t in itertools.product(zeros, twos):
        w = CentralMonoidWitness(dict(zip(M.objects, z.value)), dict(zip(M.objects, t.value)))
        if _unital(M, w) and (not monoid or _commutative_monoid(M, w)):
            out.append(w)
    return out


def _unital(M, w) -> bool:
    for x in M.objects:
        i = M.identity(x)
        m2, m0 = w.m2[x], w.m0[x]
        if M.compose(m2, [m0, i]) != i or M.compose(m2, [i, m0]) != i:
            return False
    return True


def _commutative_monoid(M, w) -> bool:
    for x in M.objects:
        i = M.identity(x)
        m2 = w.m2[x]
        if M.compose(m2, [m2, i]) != M.compose(m2, [i, m2]):
            return False
        if M.act(FamilyMap.permutation((x, x), (1, 0)), m2) != m2:
            return False
    return True


def find_central_monoid(M: Multicategory, b: Budget = DEFAULT_BUDGET, all: bool = False):
    """Commutative monoids in the center, i.e. central monoids of ``M``."""
    found = _central_magmas(M, b, monoid=True)
    if all:
        return found
    return found[0] if found else None


def hilton_eckmann_check(M: Multicategory, b: Budget = DEFAULT_BUDGET) -> ValidationReport:
    """Every central unital magma is a commutative monoid, and there is at most one."""
    report = ValidationReport("central unital magmas are commutative monoids", b)
    magmas = _central_magmas(M, b, monoid=False)
    report.checked = len(magmas)
    bad = [w for w in magmas if not _commutative_monoid(M, w)]
    report.details = {"central unital magmas": len(magmas)}
    if bad:
        report.outcome = COUNTEREXAMPLE
        report.witness = {"m2": {str(k): str(v) for k, v in bad[0].m2.items()}}
    elif len(magmas) > 1:
        report.outcome = COUNTEREXAMPLE
        report.witness = {"problem": "central monoid is not unique", "count": len(magmas)}
    return report


def _hom_counting(M: Multicategory, b: Budget) -> tuple[bool, dict | None]:
    for fam in families(M, b.max_arity):
        for y in M.objects:
            whole = len(homs(M, fam, y, b))
            parts = math.prod(len(homs(M, (x,), y, b)) for x in fam)
            if whole != parts:
                return False, {"signature": str(Signature(fam, y)), "arrows": whole, "tuples": parts}
    return True, None


def forgetful_iso(M: Multicategory, b: Budget = DEFAULT_BUDGET) -> tuple[bool, dict | None]:
    """Is ``[1_seq, M] -> M`` bijective on objects and on every hom-set in scope?"""
    H = monoid_mcat(M, b)
    U = forgetful(H)
    carriers = [U.on_object(F) for F in H.objects]
    if sorted(map(str, carriers)) != sorted(map(str, M.objects)) or len(set(carriers)) != len(carriers):
        return False, {"monoids": len(H.objects), "objects": len(M.objects)}
    for n in range(b.max_arity + 1):
        for dom in itertools.product(H.objects, repeat=n):
            for cod in H.objects:
                left = [U(a) for a in H.iter_hom(dom, cod)]
                right = homs(M, tuple(U.on_object(F) for F in dom), U.on_object(cod), b)
                if len(set(left)) != len(left) or set(left) != set(right):
                    return False, {"signature": f"({', '.join(map(str, dom))}; {cod})",
                                   "monoid arrows": len(left), "arrows": len(right)}
    return True, None


def sequentiality_report(M: Multicategory, b: Budget = DEFAULT_BUDGET) -> ValidationReport:
    """Evaluate the equivalent sequentiality conditions and compare them.

    (2) hom counting against tuples of unary arrows, (3) a central monoid,
    (4) a central unital magma, (5) the forgetful map from monoids is an
    iso.  (6) is only decided through closed-form tensors and is reported
    as such.
    """
    report = ValidationReport("sequentiality conditions", b, details={"backend": M.name})
    conds, notes = {}, {}
    conds["2"], notes["2"] = _hom_counting(M, b)
    conds["3"] = find_central_monoid(M, b) is not None
    conds["4"] = bool(_central_magmas(M, b, monoid=False))
    conds["5"], notes["5"] = forgetful_iso(M, b)
    report.checked = len(conds)
    report.details["conditions"] = {**conds, "6": "closed form only"}
    report.details["sequential"] = all(conds.values())
    witnesses = {k: v for k, v in notes.items() if v is not None}
    if witnesses:
        report.details["failures"] = witnesses
    if len(set(conds.values())) > 1:
        report.outcome = COUNTEREXAMPLE
        report.witness = {"conditions": conds, "problem": "conditions disagree"}
    return report


# -- products ---------------------------------------------------------------------

@dataclass
class AlgebraicProductWitness:
    family: tuple
    C: object
    projections: tuple
    u: Arrow


@dataclass
class UniversalProductWitness:
    family: tuple
    C: object
    projections: tuple


def _need_cartesian(M):
    if not M.cartesian:
        raise PreconditionError(f"{M.name} is not cartesian")


def check_algebraic(M: Multicategory, w: AlgebraicProductWitness) -> bool:
    fam, C = w.family, w.C
    if w.u.dom != fam or w.u.cod != C:
        return False
    if contract_all(M, M.compose(w.u, list(w.projections)), C) != M.identity(C):
        return False
    return all(M.compose(p, [w.u]) == projection(M, fam, i) for i, p in enumerate(w.projections))


def check_universal(M: Multicategory, family: tuple, C, projections: Sequence[Arrow],
                    b: Budget = DEFAULT_BUDGET) -> bool:
    """Every family of arrows out of a common domain factors uniquely."""
    for gamma in families(M, b.max_arity):
        ts = homs(M, gamma, C, b)
        if len(ts) != math.prod(len(homs(M, gamma, A, b)) for A in family):
            return False
        images = {tuple(M.compose(p, [t]) for p in projections) for t in ts}
        if len(images) != len(ts):
            return False
    return True


def algebraic_product_search(M: Multicategory, family: Sequence, b: Budget = DEFAULT_BUDGET,
                             all: bool = False):
    _need_cartesian(M)
    fam = tuple(family)
    pis = [projection(M, fam, i) for i in range(len(fam))]
    found = []
    for C in M.objects:
        for u in homs(M, fam, C, b):
            options = [[p for p in homs(M, (C,), A, b) if M.compose(p, [u]) == pi]
                       for A, pi in zip(fam, pis)]
            for ps in itertools.product(*options):
                w = AlgebraicProductWitness(fam, C, tuple(ps), u)
                if check_algebraic(M, w):
                    if not all:
                        return w
                    found.append(w)
    return found if all else None


def universal_product_search(M: Multicategory, family: Sequence, b: Budget = DEFAULT_BUDGET,
                             all: bool = False):
    _need_cartesian(M)
    fam = tuple(family)
    found = []
    for C in M.objects:
        for ps in itertools.product(*[homs(M, (C,), A, b) for A in fam]):
            if check_universal(M, fam, C, ps, b):
                w = UniversalProductWitness(fam, C, tuple(ps))
                if not all:
                    return w
                found.append(w)
    return found if all else None


def algebraic_from_preuniversal(M: Multicategory, u: Arrow, b: Budget = DEFAULT_BUDGET):
    """Projections as the unique factorisations of the weakened identities."""
    fam = u.dom
    ps = []
    for i, A in enumerate(fam):
        pi = projection(M, fam, i)
        ts = [t for t in homs(M, (u.cod,), A, b) if M.compose(t, [u]) == pi]
        if len(ts) != 1:
            return None
        ps.append(ts[0])
    return AlgebraicProductWitness(fam, u.cod, tuple(ps), u)


def algebraic_from_universal(M: Multicategory, w: UniversalProductWitness, b: Budget = DEFAULT_BUDGET):
    """Pairing as the unique arrow whose projections are the weakened identities."""
    pis = tuple(projection(M, w.family, i) for i in range(len(w.family)))
    us = [t for t in homs(M, w.family, w.C, b)
          if tuple(M.compose(p, [t]) for p in w.projections) == pis]
    if len(us) != 1:
        return None
    return AlgebraicProductWitness(w.family, w.C, w.projections, us[0])


def compose_witnesses(M: Multicategory, outer: AlgebraicProductWitness, slot: int,
                      inner: AlgebraicProductWitness) -> AlgebraicProductWitness:
    """Substitute ``inner`` (a product of part of the family) into ``outer``."""
    if outer.family[slot] != inner.C:
        raise PreconditionError("inner product object does not match the slot")
    fam = outer.family[:slot] + inner.family + outer.family[slot + 1:]
    q = outer.projections[slot]
    ps = (outer.projections[:slot] + tuple(M.compose(p, [q]) for p in inner.projections)
          + outer.projections[slot + 1:])
    return AlgebraicProductWitness(fam, outer.C, ps, M.partial(outer.u, slot, inner.u))


def product_equivalence_report(M: Multicategory, b: Budget = DEFAULT_BUDGET,
                               fams: Sequence[tuple] | None = None) -> ValidationReport:
    """Algebraic, universal and preuniversal existence agree; conversions validate;
    composites of binary (and binary with nullary) witnesses validate."""
    _need_cartesian(M)
    report = ValidationReport("product notions agree", b, details={"backend": M.name})
    fams = list(fams) if fams is not None else families(M, b.max_arity)
    alg = {}
    exists = 0
    for fam in fams:
        report.checked += 1
        a = algebraic_product_search(M, fam, b)
        un = universal_product_search(M, fam, b)
        pre = find_preuniversal(M, fam, b)
        flags = (a is not None, un is not None, pre is not None)
        if len(set(flags)) > 1:
            report.outcome = COUNTEREXAMPLE
            report.witness = {"family": list(fam), "algebraic": flags[0], "universal": flags[1],
                              "preuniversal": flags[2]}
            return report
        if a is None:
            continue
        exists += 1
        alg[fam] = a
        conversions = {
            "algebraic pairing is preuniversal": is_preuniversal(M, a.u, b),
            "algebraic projections are universal": check_universal(M, fam, a.C, a.projections, b),
            "preuniversal yields algebraic": _valid(M, algebraic_from_preuniversal(M, pre, b)),
            "universal yields algebraic": _valid(M, algebraic_from_universal(M, un, b)),
        }
        bad = [k for k, ok in conversions.items() if not ok]
        if bad:
            report.outcome = COUNTEREXAMPLE
            report.witness = {"family": list(fam), "failed conversion": bad[0]}
            return report
    composites = 0
    for fam, outer in alg.items():
        for slot in range(len(fam)):
            for sub, inner in alg.items():
                if len(sub) not in (0, 2) or inner.C != fam[slot] or len(fam) != 2:
                    continue
                if len(fam) - 1 + len(sub) > b.max_arity:
                    continue
                composites += 1
                w = compose_witnesses(M, outer, slot, inner)
                if not check_algebraic(M, w):
                    report.outcome = COUNTEREXAMPLE
                    report.witness = {"outer": list(fam), "slot": slot, "inner": list(sub),
                                      "problem": "composite is not an algebraic product"}
                    return report
    report.checked += composites
    report.details.update({"families": len(fams), "with products": exists, "composites": composites})
    return report


def _valid(M, w) -> bool:
    return w is not None and check_algebraic(M, w)


def check_product_preservation(F: MFunctor, b: Budget = DEFAULT_BUDGET) -> ValidationReport:
    """Images of algebraic products under an fp-functor are algebraic products."""
    M, N = F.source, F.target
    report = ValidationReport("fp-functor preserves algebraic products", b, details={"functor": F.label})
    for fam in families(M, b.max_arity):
        w = algebraic_product_search(M, fam, b)
        if w is None:
            continue
        report.checked += 1
        img = AlgebraicProductWitness(tuple(F.on_object(x) for x in fam), F.on_object(w.C),
                                      tuple(F(p) for p in w.projections), F(w.u))
        if not check_algebraic(N, img):
            report.outcome = COUNTEREXAMPLE
            report.witness = {"family": list(fam)}
            break
    return report


# -- biproducts --------------------------------------------------------------------

@dataclass
class BiproductWitness:
    family: tuple
    C: object
    projections: tuple
    injections: tuple


def _enriched(M: Multicategory, b: Budget):
    from .constructions import SequentialMulticat, extract_enrichment
    if isinstance(M, SequentialMulticat) and M.enrichment is not None:
        return M.cat, M.enrichment
    e = extract_enrichment(M, b)
    return e.C, e


def biproduct_view(M: Multicategory, family: Sequence, b: Budget = DEFAULT_BUDGET, all: bool = False):
    """Classical biproduct data: ``sum i_k p_k = id``, ``p_k i_l = delta_kl``."""
    from .constructions import SequentialMulticat
    if not (M.cartesian and isinstance(M, SequentialMulticat)):
        raise PreconditionError(f"{M.name} is not a sequential cartesian backend")
    cat, e = _enriched(M, b)
    fam = tuple(family)
    found = []
    for C in cat.objects:
        for ps in itertools.product(*[cat.hom(C, A) for A in fam]):
            for js in itertools.product(*[cat.hom(A, C) for A in fam]):
                if _biproduct_equations(cat, e, fam, C, ps, js):
                    w = BiproductWitness(fam, C, ps, js)
                    if not all:
                        return w
                    found.append(w)
    return found if all else None


def _biproduct_equations(cat, e, fam, C, ps, js) -> bool:
    if e.sum([cat.compose(j, p) for p, j in zip(ps, js)], C, C) != cat.identity(C):
        return False
    for k, p in enumerate(ps):
        for l, j in enumerate(js):
            want = cat.identity(fam[k]) if k == l else e.zero(fam[l], fam[k])
            if cat.compose(p, j) != want:
                return False
    return True


def biproduct_agreement(M: Multicategory, family: Sequence, b: Budget = DEFAULT_BUDGET) -> ValidationReport:
    """Biproduct data and algebraic products correspond through tuples of injections."""
    fam = tuple(family)
    report = ValidationReport("biproducts = algebraic products", b, details={"family": list(fam)})
    bi = biproduct_view(M, fam, b)
    alg = algebraic_product_search(M, fam, b)
    uni = universal_product_search(M, fam, b)
    report.checked = 3
    report.details["found"] = bi is not None
    if len({bi is None, alg is None, uni is None}) > 1:
        report.outcome = COUNTEREXAMPLE
        report.witness = {"biproduct": bi is not None, "algebraic": alg is not None,
                          "universal": uni is not None}
        return report
    if bi is None:
        report.details["note"] = "no biproduct exists, all three searches agree absent"
        return report
    cat, e = _enriched(M, b)
    translated = AlgebraicProductWitness(fam, bi.C, tuple(M.unary(p) for p in bi.projections),
                                         Arrow(fam, bi.C, tuple(bi.injections)))
    back = (alg.C, tuple(p.value[0] for p in alg.projections), tuple(alg.u.value))
    report.checked += 2
    if not check_algebraic(M, translated):
        report.outcome = COUNTEREXAMPLE
        report.witness = {"problem": "biproduct does not translate to an algebraic product"}
    elif not _biproduct_equations(cat, e, fam, *back):
        report.outcome = COUNTEREXAMPLE
        report.witness = {"problem": "algebraic product does not translate to a biproduct"}
    else:
        report.details["witness"] = {"C": str(bi.C), "p": [str(p) for p in bi.projections],
                                     "i": [str(j) for j in bi.injections]}
    return report


# -- coproduct cones -----------------------------------------------------------------

def _is_coproduct(M: Multicategory, T, injections: Sequence[Arrow], b: Budget) -> dict | None:
    """None when ``t -> (t i_k)_k`` is bijective for every target; else a witness."""
    for D in M.objects:
        ts = homs(M, (T,), D, b)
        want = math.prod(len(homs(M, (i.dom[0],), D, b)) for i in injections)
        images = {tuple(M.compose(t, [i]) for i in injections) for t in ts}
        if len(images) != len(ts) or len(ts) != want:
            kind = "not jointly epimorphic" if len(images) != len(ts) else "not every cocone factors"
            return {"target": str(D), "factorisations": len(ts), "cocones": want, "problem": kind}
    return None


def cocartesian_check(M: Multicategory, b: Budget = DEFAULT_BUDGET,
                      scope: Callable | None = None) -> ValidationReport:
    """Sequentiality of a representable backend against coproduct cones.

    For every family with a preuniversal arrow ``u`` the cone
    ``i_k = u(e_1, .., id, .., e_n)`` is tested, with the ``e_j`` the units
    of the central monoid, or every choice of nullary arrows when there is
    none.  The instance passes when "has a central monoid" and "all tensor
    cones are coproducts" agree.
    """
    scope = scope or getattr(M, "representation_scope", None) or (lambda fam: True)
    report = ValidationReport("cocartesian iff sequential", b, details={"backend": M.name})
    cm = find_central_monoid(M, b)
    cones_ok = True
    failure = None
    tested = 0
    for fam in sorted(families(M, min(2, b.max_arity)), key=len, reverse=True):
        if not scope(fam):
            continue
        u = find_preuniversal(M, fam, b)
        if u is None:
            continue
        tested += 1
        if cm is not None:
            choices = [tuple(cm.m0[x] for x in fam)]
        else:
            choices = list(itertools.product(*[homs(M, (), x, b) for x in fam]))
        ok_here = False
        last = {"problem": "no nullary arrows to build injections"}
        for units in choices:
            inj = []
            for k, x in enumerate(fam):
                args = list(units)
                args[k] = M.identity(x)
                inj.append(M.compose(u, args))
            bad = _is_coproduct(M, u.cod, inj, b)
            if bad is None:
                ok_here = True
                break
            last = bad
        if not ok_here:
            cones_ok = False
            failure = {"family": list(fam), **last}
            break
    report.checked = tested
    report.details.update({"sequential": cm is not None, "coproduct cones": cones_ok,
                           "families tested": tested})
    if failure is not None:
        report.details["cone failure"] = failure
    if (cm is not None) != cones_ok:
        report.outcome = COUNTEREXAMPLE
        report.witness = {"sequential": cm is not None, "coproduct cones": cones_ok}
    return report


# -- coreflections -------------------------------------------------------------------

def _fingerprint(F: MFunctor, b: Budget) -> tuple:
    plan = plan_for(F.source, b, F.fp)
    return (tuple(F.on_object(x) for x in F.source.objects), tuple(F(a) for a in plan.arrows))


def coreflection_check(L: Multicategory, M: Multicategory, b: Budget = DEFAULT_BUDGET,
                       fp: bool = False) -> ValidationReport:
    """Functors ``L -> [1_seq, M]`` correspond to functors ``L -> M`` via the forgetful map.

    With ``fp`` both sides are fp-functors (``[1_seq, M]`` is cartesian
    pointwise when ``M`` is).
    """
    report = ValidationReport("coreflection" + (" (fp)" if fp else ""), b,
                              details={"source": L.name, "target": M.name})
    H = monoid_mcat(M, b)
    U = forgetful(H)
    lifted = enumerate_functors(L, H, b, fp=fp)
    plain = enumerate_functors(L, M, b, fp=fp)
    plan = plan_for(L, b, fp)
    composites = []
    for G in lifted:
        composites.append((tuple(U.on_object(G.on_object(x)) for x in L.objects),
                           tuple(U(G(a)) for a in plan.arrows)))
    targets = [_fingerprint(F, b) for F in plain]
    report.checked = len(lifted) + len(plain)
    report.details.update({"functors into monoids": len(lifted), "functors": len(plain)})
    if len(set(composites)) != len(composites):
        report.outcome = COUNTEREXAMPLE
        report.witness = {"problem": "composition with the forgetful map is not injective"}
    elif set(composites) != set(targets):
        report.outcome = COUNTEREXAMPLE
        missing = [F.label for F, t in zip(plain, targets) if t not in set(composites)]
        report.witness = {"problem": "not surjective", "missing": missing[:5]}
    return report
