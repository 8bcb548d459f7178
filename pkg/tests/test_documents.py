"""JSON wire format: exact roundtrips and input validation."""

from __future__ import annotations

import json

import pytest

from mqsp.documents import (
    DocumentError,
    dumps,
    load_pair,
    load_sequence,
    pair_from_document,
    pair_to_document,
    save_pair,
    save_sequence,
    sequence_from_document,
    sequence_to_document,
)
from mqsp.fixtures import counterexample_pair
from helpers import oracle_pair


@pytest.mark.parametrize("seed,m,n", [(0, 1, 4), (1, 2, 5), (2, 3, 0)])
def test_pair_roundtrip_is_exact(seed, m, n):
    pair, _ = oracle_pair(m, n, seed)
    again = pair_from_document(json.loads(dumps(pair_to_document(pair))))
    assert again.p == pair.p
    assert again.q == pair.q


def test_sequence_roundtrip_is_exact():
    _, seq = oracle_pair(3, 9, seed=5)
    again = sequence_from_document(json.loads(dumps(sequence_to_document(seq))))
    assert again == seq


def test_terms_serialized_in_lexicographic_order():
    pair = counterexample_pair()
    doc = pair_to_document(pair)
    exps = [tuple(rec["exponents"]) for rec in doc["P"]]
    assert exps == sorted(exps)


def test_counterexample_reserialized_degrees():
    doc = pair_to_document(counterexample_pair(), {"name": "counterexample-2-2"})
    pair = pair_from_document(json.loads(dumps(doc)))
    assert pair.p.degrees() == (2, 2)
    assert pair.q.degrees() == (2, 2)


def test_metadata_is_optional_and_preserved():
    pair, _ = oracle_pair(1, 2, seed=9)
    doc = pair_to_document(pair, {"name": "x", "source": "y"})
    assert doc["metadata"] == {"name": "x", "source": "y"}
    assert "metadata" not in pair_to_document(pair)


def test_duplicate_exponents_rejected():
    doc = {
        "variables": 1,
        "P": [
            {"exponents": [1], "re": 1.0, "im": 0.0},
            {"exponents": [1], "re": 2.0, "im": 0.0},
        ],
        "Q": [],
    }
    with pytest.raises(DocumentError, match="duplicate"):
        pair_from_document(doc)


def test_wrong_exponent_length_rejected():
    doc = {"variables": 2, "P": [{"exponents": [1], "re": 1.0, "im": 0.0}], "Q": []}
    with pytest.raises(DocumentError):
        pair_from_document(doc)


def test_bad_variables_rejected():
    for bad in (0, -1, "2", None, True):
        with pytest.raises(DocumentError):
            pair_from_document({"variables": bad, "P": [], "Q": []})


def test_missing_components_rejected():
    with pytest.raises(DocumentError):
        pair_from_document({"variables": 1, "Q": []})
    with pytest.raises(DocumentError):
        pair_from_document("not an object")
    with pytest.raises(DocumentError):
        sequence_from_document({"variables": 1, "phases": [0.0]})


def test_non_numeric_coefficient_rejected():
    doc = {"variables": 1, "P": [{"exponents": [0], "re": "1", "im": 0.0}], "Q": []}
    with pytest.raises(DocumentError):
        pair_from_document(doc)


def test_sequence_validation_errors():
    with pytest.raises(DocumentError):
        sequence_from_document({"variables": 1, "phases": [0.0], "indices": [1]})
    with pytest.raises(DocumentError):
        sequence_from_document({"variables": 1, "phases": [0.0, 0.0], "indices": [2]})
    with pytest.raises(DocumentError):
        sequence_from_document({"variables": 1, "phases": "nope", "indices": []})


def test_file_roundtrip(tmp_path):
    pair, seq = oracle_pair(2, 4, seed=17)
    pair_path = tmp_path / "pair.json"
    seq_path = tmp_path / "seq.json"
    save_pair(pair, str(pair_path), {"name": "t"})
    save_sequence(seq, str(seq_path))
    assert load_pair(str(pair_path)).p == pair.p
    assert load_sequence(str(seq_path)) == seq


def test_invalid_json_file(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"variables": 1, "P": [')
    with pytest.raises(DocumentError, match="invalid JSON"):
        load_pair(str(path))
