"""JSON description documents and their loader.

Every document is an object with a ``"kind"`` tag.  Objects and arrow names
are JSON scalars or (nested) lists; lists are read as tuples so that product
objects like ``["a", "b"]`` work as keys.

=============  ==============================================================
kind           fields
=============  ==============================================================
category       ``objects``, ``arrows`` ``{name: [dom, cod]}``, ``identities``
               ``[[obj, name], ...]``, ``composition`` ``[[g, f, g∘f], ...]``
preadditive    a category plus ``zero`` ``[[X, Y, arrow], ...]`` and ``add``
               ``[[f, g, f+g], ...]``
monoidal       a category plus ``unit``, ``tensor_objects`` ``[[X, Y, X⊗Y]]``,
               ``tensor_arrows`` ``[[f, g, f⊗g]]``, optional ``braiding``
               ``[[X, Y, arrow]]``
products       a category plus ``products`` ``[{"family": [...], "object": P,
               "projections": [...]}, ...]``; optional ``search_arity`` fills
               every unlisted family up to that arity by search
monoid         ``elements``, ``unit``, ``table`` ``[[a, b, ab], ...]``
table          ``objects``, ``arrows`` ``{name: {"dom": [...], "cod": X}}``,
               ``identities`` ``[[obj, name]]``, ``composition`` ``[[f, [g1, ...], h]]``,
               optional ``actions`` ``[[f, {"target": [...], "mapping":
               [...]}, h], ...]``, ``symmetric``, ``cartesian``, ``arity_cap``
fixture        ``name``: a key of the built-in catalog
=============  ==============================================================

Malformed documents raise :class:`DescriptionError`, whose message starts
with the JSON path of the offending value (and line/column for syntax
errors).
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .categories import ChosenProducts, CMonEnrichment, FiniteCategory, StrictMonoidalData
from .core import FamilyMap, InputError, Multicategory

KINDS = ("category", "preadditive", "monoidal", "products", "monoid", "table", "fixture")


class DescriptionError(InputError):
    def __init__(self, path: str, message: str, line: int | None = None, col: int | None = None):
        self.path, self.line, self.col = path, line, col
        where = path if line is None else f"{path} (line {line}, column {col})"
        super().__init__(f"{where}: {message}")


def _freeze(x):
    if isinstance(x, list):
        return tuple(_freeze(v) for v in x)
    if isinstance(x, dict):
        raise TypeError("objects inside identifiers are not allowed")
    return x


@dataclass
class Description:
    kind: str
    data: dict
    source: str = "<document>"

    def _get(self, key: str, typ=None, default=...):
        if key not in self.data:
            if default is not ...:
                return default
            raise DescriptionError(f"$.{key}", "required field is missing")
        v = self.data[key]
        if typ is not None and not isinstance(v, typ):
            raise DescriptionError(f"$.{key}", f"expected {_typename(typ)}, got {type(v).__name__}")
        return v

    def _ident(self, value, path: str):
        try:
            return _freeze(value)
        except TypeError as exc:
            raise DescriptionError(path, str(exc)) from None

    def _rows(self, key: str, width: int, default=...) -> list:
        rows = self._get(key, list, default)
        out = []
        for i, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != width:
                raise DescriptionError(f"$.{key}[{i}]", f"expected a list of {width} entries")
            out.append(row)
        return out

    # -- builders -----------------------------------------------------------------------

    def category(self) -> FiniteCategory:
        objects = [self._ident(x, f"$.objects[{i}]") for i, x in enumerate(self._get("objects", list))]
        arrows = {}
        for name, ends in self._get("arrows", dict).items():
            if not isinstance(ends, list) or len(ends) != 2:
                raise DescriptionError(f"$.arrows.{name}", "expected [dom, cod]")
            arrows[name] = (self._ident(ends[0], f"$.arrows.{name}[0]"),
                            self._ident(ends[1], f"$.arrows.{name}[1]"))
            for k, x in enumerate(arrows[name]):
                if x not in objects:
                    raise DescriptionError(f"$.arrows.{name}[{k}]", f"unknown object {x!r}")
        ids = {}
        for i, (x, a) in enumerate(self._rows("identities", 2)):
            ids[self._ident(x, f"$.identities[{i}][0]")] = a
        comp = {}
        for i, (g, f, h) in enumerate(self._rows("composition", 3)):
            for j, a in enumerate((g, f, h)):
                if a not in arrows:
                    raise DescriptionError(f"$.composition[{i}][{j}]", f"unknown arrow {a!r}")
            comp[(g, f)] = h
        name = self._get("name", str, "C")
        try:
            return FiniteCategory(objects, arrows, comp, ids, name=name)
        except InputError as exc:
            raise DescriptionError("$", str(exc)) from None

    def enrichment(self, C: FiniteCategory) -> CMonEnrichment:
        zero = {}
        for i, (x, y, a) in enumerate(self._rows("zero", 3)):
            zero[(self._ident(x, f"$.zero[{i}][0]"), self._ident(y, f"$.zero[{i}][1]"))] = a
        add = {}
        for i, (f, g, h) in enumerate(self._rows("add", 3)):
            add[(f, g)] = h
        try:
            return CMonEnrichment(C, zero, add)
        except (InputError, KeyError) as exc:
            raise DescriptionError("$.add", f"not a valid enrichment: {exc}") from None

    def monoidal(self) -> StrictMonoidalData:
        C = self.category()
        unit = self._ident(self._get("unit"), "$.unit")
        tobj = {}
        for i, (x, y, z) in enumerate(self._rows("tensor_objects", 3)):
            p = f"$.tensor_objects[{i}]"
            tobj[(self._ident(x, p), self._ident(y, p))] = self._ident(z, p)
        tarr = {(f, g): h for f, g, h in self._rows("tensor_arrows", 3)}
        braid = None
        if "braiding" in self.data:
            braid = {}
            for i, (x, y, a) in enumerate(self._rows("braiding", 3)):
                p = f"$.braiding[{i}]"
                braid[(self._ident(x, p), self._ident(y, p))] = a
        try:
            return StrictMonoidalData(C, unit, tobj, tarr, braid)
        except (InputError, KeyError) as exc:
            raise DescriptionError("$", f"not a strict monoidal structure: {exc}") from None

    def products(self) -> ChosenProducts:
        C = self.category()
        table = {}
        for i, entry in enumerate(self._get("products", list)):
            p = f"$.products[{i}]"
            if not isinstance(entry, dict) or not {"family", "object", "projections"} <= set(entry):
                raise DescriptionError(p, "expected {family, object, projections}")
            fam = self._ident(entry["family"], p + ".family")
            if not isinstance(fam, tuple):
                raise DescriptionError(p + ".family", "expected a list")
            table[fam] = (self._ident(entry["object"], p + ".object"), tuple(entry["projections"]))
        try:
            if "search_arity" in self.data:
                found = ChosenProducts.search(C, self._get("search_arity", int)).table
                table = {**found, **table}
            return ChosenProducts(C, table)
        except (InputError, KeyError) as exc:
            raise DescriptionError("$.products", f"not universal: {exc}") from None

    def monoid(self) -> tuple[list, dict, Any]:
        elements = [self._ident(x, f"$.elements[{i}]") for i, x in enumerate(self._get("elements", list))]
        unit = self._ident(self._get("unit"), "$.unit")
        table = {}
        for i, (a, b, c) in enumerate(self._rows("table", 3)):
            p = f"$.table[{i}]"
            a, b, c = (self._ident(v, p) for v in (a, b, c))
            if not {a, b, c} <= set(elements):
                raise DescriptionError(p, "entry mentions an unknown element")
            table[(a, b)] = c
        for a in elements:
            for b in elements:
                if (a, b) not in table:
                    raise DescriptionError("$.table", f"missing product {a!r}*{b!r}")
        if unit not in elements or any(table[(unit, a)] != a or table[(a, unit)] != a for a in elements):
            raise DescriptionError("$.unit", "not a two-sided unit")
        for a in elements:
            for b in elements:
                for c in elements:
                    if table[(table[(a, b)], c)] != table[(a, table[(b, c)])]:
                        raise DescriptionError("$.table", f"not associative at {a!r},{b!r},{c!r}")
        return elements, table, unit

    def table(self):
        from .constructions import TableMulticat
        objects = [self._ident(x, f"$.objects[{i}]") for i, x in enumerate(self._get("objects", list))]
        arrows = {}
        for name, spec in self._get("arrows", dict).items():
            p = f"$.arrows.{name}"
            if not isinstance(spec, dict) or not {"dom", "cod"} <= set(spec):
                raise DescriptionError(p, "expected {dom, cod}")
            dom = self._ident(spec["dom"], p + ".dom")
            if not isinstance(dom, tuple):
                raise DescriptionError(p + ".dom", "expected a list")
            arrows[name] = (dom, self._ident(spec["cod"], p + ".cod"))
        ids = {self._ident(x, f"$.identities[{i}][0]"): a
               for i, (x, a) in enumerate(self._rows("identities", 2))}
        comp = {}
        for i, (f, gs, h) in enumerate(self._rows("composition", 3)):
            p = f"$.composition[{i}]"
            if not isinstance(gs, list):
                raise DescriptionError(p + "[1]", "expected a list of arrow names")
            for a in (f, *gs, h):
                if a not in arrows:
                    raise DescriptionError(p, f"unknown arrow {a!r}")
            comp[(f, tuple(gs))] = h
        acts = {}
        for i, (f, sigma, h) in enumerate(self._rows("actions", 3, [])):
            p = f"$.actions[{i}]"
            if f not in arrows or h not in arrows:
                raise DescriptionError(p, "unknown arrow")
            if not isinstance(sigma, dict) or not {"target", "mapping"} <= set(sigma):
                raise DescriptionError(p + "[1]", "expected {target, mapping}")
            try:
                s = FamilyMap(arrows[f][0], self._ident(sigma["target"], p + "[1].target"),
                              tuple(sigma["mapping"]))
            except InputError as exc:
                raise DescriptionError(p + "[1]", str(exc)) from None
            acts[(f, s)] = h
        try:
            return TableMulticat(objects, arrows, ids, comp, acts,
                                 symmetric=self._get("symmetric", bool, False),
                                 cartesian=self._get("cartesian", bool, False),
                                 arity_cap=self._get("arity_cap", int, 3),
                                 name=self._get("name", str, "table"))
        except InputError as exc:
            raise DescriptionError("$", str(exc)) from None

    def backend(self, view: str | None = None) -> Multicategory:
        """The multicategory this document stands for.

        Categories become ``seq(C)`` unless ``view="unary"``; preadditive
        categories become the cartesian ``seq``; monoidal and products kinds
        become representable backends; monoids become discrete backends.
        """
        from . import constructions as K
        if self.kind == "fixture":
            from .fixtures import fixture
            key = self._get("name", str)
            try:
                return fixture(key)
            except KeyError:
                raise DescriptionError("$.name", f"unknown fixture {key!r}") from None
        if self.kind == "category":
            C = self.category()
            return K.unary(C) if view == "unary" else K.seq(C)
        if self.kind == "preadditive":
            C = self.category()
            return K.seq_cartesian(C, self.enrichment(C), name=f"{C.name}_seq")
        if self.kind == "monoidal":
            return K.monoidal_to_mcat(self.monoidal())
        if self.kind == "products":
            P = self.products()
            return K.fp_category_to_mcat(P.C, P)
        if self.kind == "monoid":
            elements, table, unit = self.monoid()
            return K.discrete_monoid_mcat(elements, lambda a, b: table[(a, b)], unit,
                                          name=self._get("name", str, "dmon"))
        return self.table()


def _typename(typ) -> str:
    return {list: "a list", dict: "an object", str: "a string", bool: "a boolean",
            int: "an integer"}.get(typ, str(typ))


def parse(text: str, source: str = "<document>") -> Description:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DescriptionError("$", exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, dict):
        raise DescriptionError("$", "a description is a JSON object")
    kind = data.get("kind")
    if kind not in KINDS:
        raise DescriptionError("$.kind", f"expected one of {', '.join(KINDS)}, got {kind!r}")
    return Description(kind, data, source)


def load(path: str) -> Description:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DescriptionError("$", f"cannot read {path}: {exc.strerror}") from None
    return parse(text, path)


def load_backend(ref: str, view: str | None = None) -> Multicategory:
    """A catalog key, or a path to a description document."""
    from .fixtures import catalog, fixture
    if ref in catalog():
        return fixture(ref)
    return load(ref).backend(view)
