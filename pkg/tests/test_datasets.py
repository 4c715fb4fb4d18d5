import json

import pytest

from hurwitzmon import datasets
from hurwitzmon.datasets import DocumentError
from hurwitzmon.groups import Permutation
from hurwitzmon.representations import sl2_mod_rep, sym_rep


def test_sqrt2_dataset_entries():
    doc = datasets.dataset("paper-sqrt2")
    assert doc["labels"] == [1, 2, 3, 4, 5]
    assert doc["entries"][0] == [2] * 8
    assert doc["entries"][1] == [2, 2, 2, 2, 1, 1, -2, -2, -2, -2]
    assert doc["entries"][4] == [-1, -1, -1, 2, 1, 1, 1]
    assert max(len(w) for w in doc["entries"]) <= 11


def test_neg_sqrt2_dataset_entries():
    doc = datasets.dataset("paper-neg-sqrt2")
    assert doc["labels"] == [3, 5, 1, 4, 2]
    assert doc["entries"][1] == [2, -1, 2, 1, -2, 1, -2]
    assert doc["entries"][2] == [2] + [1] * 8 + [-2]


def test_sigma3_documents():
    t = datasets.to_tuple(datasets.dataset("sigma3-1"))
    assert t.elements == tuple(Permutation.from_cycles(c, 3) for c in ("(1,2)", "(1,3)", "()"))
    assert set(t.labels) == {0}


@pytest.mark.parametrize("name", datasets.dataset_names())
def test_digests_and_round_trip(name):
    doc = datasets.dataset(name)
    assert datasets.digest(doc) == datasets.DIGESTS[name]
    assert datasets.parse(datasets.serialize(doc)) == doc
    if doc["kind"] == "monodromy":
        M = datasets.to_factorization(doc)
        back = datasets.from_factorization(M, doc.get("metadata"))
        assert back == doc


def test_dataset_returns_copies():
    doc = datasets.dataset("paper-sqrt2")
    doc["labels"].append(9)
    assert datasets.dataset("paper-sqrt2")["labels"] == [1, 2, 3, 4, 5]
    with pytest.raises(KeyError):
        datasets.dataset("nope")


@pytest.mark.parametrize("mutate, fragment", [
    (lambda d: d.pop("strands"), "strands"),
    (lambda d: d["entries"][2].__setitem__(0, 0), "entries/2/0"),
    (lambda d: d["entries"][0].__setitem__(0, 3), "out of range"),
    (lambda d: d["labels"].pop(), "labels has 4 items"),
    (lambda d: d.__setitem__("format", 2), "format"),
])
def test_validation_diagnostics(mutate, fragment):
    doc = datasets.dataset("paper-sqrt2")
    mutate(doc)
    with pytest.raises(DocumentError, match=fragment):
        datasets.validate(doc)


def test_json_errors_carry_position():
    with pytest.raises(DocumentError, match="line 2, column"):
        datasets.parse('{"format": 1,\n "strands": }')
    with pytest.raises(DocumentError, match="JSON object"):
        datasets.parse("[1, 2]")


def test_file_and_builtin_refs_are_interchangeable(tmp_path):
    path = tmp_path / "m.json"
    path.write_text(datasets.serialize(datasets.dataset("paper-neg-sqrt2")))
    assert datasets.load(str(path)) == datasets.load("@paper-neg-sqrt2")
    with pytest.raises(DocumentError):
        datasets.load("@nope")
    with pytest.raises(DocumentError):
        datasets.load(str(tmp_path / "missing.json"))
    with pytest.raises(DocumentError, match="expected a tuple"):
        datasets.load("@paper-sqrt2", "tuple")


def test_tuple_documents_with_matrices_and_labels():
    doc = {"format": 1, "kind": "tuple", "group": {"type": "sl2mod", "modulus": 5},
           "labels": [1, 2], "elements": [[[1, 1], [0, 1]], [[1, 0], [4, 1]]]}
    t = datasets.to_tuple(datasets.validate(doc))
    assert t.labels == (1, 2) and t.elements[1].rows() == [[1, 0], [4, 1]]
    doc["elements"][0] = "(1,2)"
    with pytest.raises(DocumentError):
        datasets.to_tuple(doc)


def test_parse_rep(tmp_path):
    assert datasets.parse_rep("sl2mod:32") == sl2_mod_rep(32)
    assert datasets.parse_rep("sym:4") == sym_rep(4)
    path = tmp_path / "rep.json"
    path.write_text(json.dumps(datasets.rep_to_doc(sl2_mod_rep(7))))
    assert datasets.parse_rep(str(path)) == sl2_mod_rep(7)
    bad = datasets.rep_to_doc(sym_rep(3))
    bad["images"] = ["(1,2)", "(1,2,3)"]
    path.write_text(json.dumps(bad))
    with pytest.raises(DocumentError, match="braid relation"):
        datasets.parse_rep(str(path))
    for spec in ("sl2mod:x", "sym:1"):
        with pytest.raises(DocumentError):
            datasets.parse_rep(spec)
