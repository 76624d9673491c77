import json
import pathlib

import pytest

import aslkit

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"

CHAIN3 = {"elements": ["0", "1", "2"], "covers": [["0", "1"], ["1", "2"]]}


def test_version():
    assert aslkit.__version__ == "0.1.0"


def test_h_poset_sizes():
    assert len(aslkit.h_poset(3, 2)["elements"]) == 6
    assert len(aslkit.h_poset(3, 3)["elements"]) == 10


def test_zigzag_of_chain_matches_h_poset():
    z = aslkit.zigzag(CHAIN3, 2)
    assert len(z["elements"]) == 6
    assert len(z["covers"]) == len(aslkit.h_poset(3, 2)["covers"])


def test_rank3_rejects_rank_four():
    chain4 = {"elements": list("0123"), "covers": [["0", "1"], ["1", "2"], ["2", "3"]]}
    with pytest.raises(aslkit.AslkitError) as info:
        aslkit.rank3_veronese(chain4, 2)
    assert info.value.code == "RankTooLarge"


def test_distributivity():
    assert aslkit.is_distributive((DATA / "divisors36.json").read_text())
    assert not aslkit.is_distributive((DATA / "pentagon.json").read_text())


def test_cli_round_trip():
    code, out, _ = aslkit.run("poset", "info", str(DATA / "forked.json"), "--no-timings")
    assert code == 0
    report = json.loads(out)
    assert all(c["status"] == "pass" for c in report["checks"])


def test_msl_report():
    report = aslkit.msl_report(3, 2, 1, seed=7)
    assert report["checks"]
    assert all(c["status"] == "pass" for c in report["checks"])
