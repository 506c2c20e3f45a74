import json

import pytest

import _plcs

CUSP = json.dumps({"branches": [{"den": 2, "terms": [[3, "1"]]}], "centre": "origin"})
NODE = json.dumps(
    {
        "branches": [
            {"den": 1, "terms": [[1, "1"]]},
            {"den": 1, "terms": [[1, "-1"]]},
        ],
        "centre": "origin",
    }
)


def test_invariants():
    inv = json.loads(_plcs.invariants(CUSP))
    assert inv["deg"] == 5
    assert inv["mt"] == 2
    assert inv["mu"] == 2
    assert not inv["gs1"]
    assert json.loads(_plcs.invariants(NODE))["deg"] == 3


def test_canonical_round_trip():
    canon = _plcs.canonical(CUSP)
    assert _plcs.canonical(canon) == canon


def test_reduce_bookkeeping():
    child = json.loads(_plcs.invariants(_plcs.reduce(CUSP, "y")))
    assert child["deg"] == 2  # 5 minus the on-line degree 3


def test_certify_and_replay():
    cert = _plcs.certify(CUSP, 20, "gs", True)
    rep = _plcs.replay(cert)
    assert rep["terminal_empty"]
    assert rep["top_deg"] == 5

    tampered = cert.replace('"s_counts":[7', '"s_counts":[6')
    assert tampered != cert
    with pytest.raises(_plcs.ReplayMismatch):
        _plcs.replay(tampered)


def test_strict_refusal():
    header = json.loads(_plcs.certify(CUSP, 8, "gs", True).splitlines()[0])
    assert header["status"] == "refused"


def test_cohomology():
    coh = json.loads(_plcs.cohomology(CUSP, 6))
    assert coh["h1"] == 0
    assert coh["rank"] == 5


def test_bounds():
    assert _plcs.sigma(CUSP) == 15
    report = json.loads(_plcs.bounds(CUSP, 28))
    assert all(c["holds"] for c in report["checks"])


def test_corpus_determinism():
    a = _plcs.corpus(5, 4, 6, 9)
    b = _plcs.corpus(5, 4, 6, 9)
    assert a == b
    assert len(a) == 5


def test_input_error():
    with pytest.raises(_plcs.InputError):
        _plcs.invariants("{not json")
