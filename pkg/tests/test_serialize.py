import json

import pytest

from adlvdim.errors import InvalidInput
from adlvdim.extended import enumerate_esm
from adlvdim.semimodule import SlopeDatum
from adlvdim.serialize import FIELDS, dumps, esm_document, loads


def test_round_trip_all(s45):
    for mu in [(0, 0, 0, 2, 2), (0, 0, 1, 1, 2), (0, 0, 0, 0, 4)]:
        for esm in enumerate_esm(s45, mu):
            line = dumps(esm_document(esm))
            assert loads(line) == esm
            assert dumps(esm_document(loads(line))) == line


def test_field_order_and_bytes(ex_noncyclic):
    line = dumps(esm_document(ex_noncyclic))
    assert list(json.loads(line)) == list(FIELDS)
    assert line == dumps(esm_document(ex_noncyclic))
    doc = json.loads(line)
    assert doc["B"] == [-2, -1, 2, 5, 6] and doc["dim"] == 4 and doc["cyclic"] is False


def test_tampered_document_rejected(ex_noncyclic):
    doc = esm_document(ex_noncyclic)
    doc["phi"] = [[a, 7 if a == -1 else v] for a, v in doc["phi"]]
    with pytest.raises(InvalidInput):
        loads(json.dumps(doc))
    doc = esm_document(ex_noncyclic)
    doc["dim"] = 3
    with pytest.raises(InvalidInput):
        loads(json.dumps(doc))
    doc.pop("mu")
    with pytest.raises(InvalidInput, match="lacks"):
        loads(json.dumps(doc))


def test_other_slope():
    for esm in enumerate_esm(SlopeDatum(7, 3), (0, 2, 5)):
        assert loads(dumps(esm_document(esm))) == esm
