import json
import os
from pathlib import Path

import pytest

import superinv

FIXTURES = Path(os.environ.get("SUPERINV_FIXTURES", Path(__file__).resolve().parents[2] / "fixtures"))


def load(name):
    return json.loads((FIXTURES / name).read_text())


def test_molien_superspace():
    s = superinv.molien(load("trivial_1_1.json"), dq=3)
    assert s["caps"] == {"t": 0, "q": 3, "u": 1}
    assert all(c["c"] == "1" for c in s["coeffs"])
    assert len(s["coeffs"]) == 8


def test_molien_sign_character():
    s = superinv.molien(load("pm1.json"), dq=4, character="sgn")
    assert [superinv.coefficient(s, q=i) for i in range(5)] == ["0", "1", "0", "1", "0"]
    assert superinv.molien_check(load("s3_diagonal.json"), 4, "sgn")["mismatches"] == []


def test_wreath_routes_agree():
    args = (load("s2.json"), load("pm1.json"), 2)
    assert superinv.wreath(*args, route="direct") == superinv.wreath(*args, route="plethysm")


def test_collate_routes_agree():
    g = load("trivial_1_1.json")
    assert superinv.collate(g, 2, 4, route="sum") == superinv.collate(g, 2, 4, route="product")


def test_cycle_index_s3():
    z = superinv.cycle_index(load("s3.json"))
    assert {tuple(t["lambda"]): t["c"] for t in z["terms"]} == {(3,): "1/3", (2, 1): "1/2", (1, 1, 1): "1/6"}


def test_signed_shuffle_has_six_terms():
    out = superinv.shuffle(load("shuffle_a.json"), load("shuffle_b.json"), signed=True)
    assert out["sig"]["n"] == 4
    assert len(out["terms"]) == 6


def test_verify_suite():
    report = superinv.verify("collate", 42)
    assert report["all_pass"] and report["failed"] == 0


def test_errors_become_value_errors():
    with pytest.raises(ValueError):
        superinv.molien("{not json", 2)
    with pytest.raises(ValueError):
        superinv.verify("nope", 1)
    with pytest.raises(superinv.SuperinvError):
        superinv.wreath(load("s3.json"), load("pm1.json"), 2)
