import json
from pathlib import Path

import pytest

from mcat.core import Budget, hom, Signature
from mcat.descriptions import DescriptionError, load, load_backend, parse
from mcat.laws import validate_all

DOCS = Path(__file__).resolve().parent.parent / "descriptions"
CLEAN = sorted(p for p in DOCS.glob("*.json") if "corrupt" not in p.name)


@pytest.mark.parametrize("path", CLEAN, ids=lambda p: p.name)
def test_clean_descriptions_validate(path):
    M = load_backend(str(path))
    assert validate_all(M, Budget(2, 2)).passed


def test_corrupt_table_fails():
    M = load_backend(str(DOCS / "z2_seq_corrupt.table.json"))
    assert validate_all(M).outcome == "counterexample"


def test_category_views():
    path = str(DOCS / "walking_arrow.category.json")
    seq_view = load_backend(path)
    unary_view = load_backend(path, "unary")
    assert len(hom(seq_view, Signature(("a", "a"), "b"))) == 1
    assert len(hom(unary_view, Signature(("a", "a"), "b"))) == 0


def test_monoid_description_is_discrete():
    M = load_backend(str(DOCS / "z2.monoid.json"))
    assert len(hom(M, Signature((1, 1), 0))) == 1
    assert len(hom(M, Signature((1, 1), 1))) == 0


def test_catalog_keys_resolve():
    assert load_backend("W").objects == ("a", "b")
    with pytest.raises(Exception):
        load_backend("no-such-key")


def test_syntax_error_reports_position():
    with pytest.raises(DescriptionError) as info:
        parse('{"kind": "category",\n  "objects": [1, 2,]}')
    assert info.value.line == 2


def test_unknown_kind():
    with pytest.raises(DescriptionError, match="kind"):
        parse('{"kind": "sheaf"}').backend()


def test_missing_identity():
    doc = json.loads((DOCS / "walking_arrow.category.json").read_text())
    doc["identities"] = doc["identities"][:1]
    with pytest.raises(DescriptionError):
        parse(json.dumps(doc)).backend()


def test_bad_endpoint_has_path():
    doc = json.loads((DOCS / "walking_arrow.category.json").read_text())
    doc["arrows"]["u"] = ["a", "c"]
    with pytest.raises(DescriptionError, match=r"\$\.arrows\.u"):
        parse(json.dumps(doc)).backend()


def test_monoid_without_unit_rejected():
    doc = json.loads((DOCS / "z2.monoid.json").read_text())
    doc["table"][1] = [0, 1, 0]
    with pytest.raises(DescriptionError):
        parse(json.dumps(doc)).backend()


def test_preadditive_zero_must_be_neutral():
    doc = json.loads((DOCS / "boolean_rig.preadditive.json").read_text())
    doc["zero"] = [["*", "*", "1"]]
    with pytest.raises(DescriptionError, match="zero"):
        parse(json.dumps(doc)).backend()


def test_missing_file():
    with pytest.raises(Exception) as info:
        load("/nonexistent/x.json")
    assert "x.json" in str(info.value)
