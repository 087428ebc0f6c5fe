import json
import math

import pytest

import bitprobe


def test_fixture_roundtrip():
    scheme = bitprobe.fixture("fig1c")
    assert (scheme.m, scheme.s, scheme.b) == (64, 8, 8)
    again = bitprobe.Scheme.from_json(scheme.to_json())
    assert again == scheme
    assert scheme.validate() == []
    assert json.loads(scheme.to_json())["blocks"][0] == "a"


def test_store_toy3():
    toy = bitprobe.fixture("toy3")
    ok = bitprobe.can_store(toy, "a:1")
    assert ok["storable"] and len(ok["a_bits"]) == 3
    refuted = bitprobe.can_store(toy, "a:1,b:2")
    assert not refuted["storable"] and refuted["steps"]


def test_universe_and_badness():
    fig = bitprobe.fixture("fig1c")
    assert bitprobe.i_universe(fig, "a:1", "B", 2) == ["c:3", "d:3", "e:3"]
    assert bitprobe.universe_via_paths(fig, "a:1", "B", 2) == ["c:3", "d:3", "e:3"]
    assert bitprobe.badness(fig, "a:1", "B", 2) == {"j": 2, "u": "d:3", "v": "e:3"}
    assert bitprobe.badness(bitprobe.fixture("fig1c_good"), "a:1", "B", 2) is None


def test_adversary():
    pair = bitprobe.adversarial_pair(bitprobe.fixture("fig1c"), "a:1", "B", 2)
    assert pair["certified"] and len(pair["s"]) <= 4
    dbl = bitprobe.fixture("dbl")
    contradiction = bitprobe.two_table_contradiction(dbl, "a", 1)
    assert contradiction["certified"] and len(contradiction["s"]) <= 4
    assert bitprobe.two_table_contradiction(bitprobe.fixture("fig1c"), "a", 1) is None


def test_modify():
    out = bitprobe.modify(bitprobe.fixture("dbl"), 1)
    assert out["ok"]
    assert out["bad"] == ["a", "b", "c"]
    assert json.loads(out["report_json"])


def test_bounds():
    assert bitprobe.theorem_bound(1e6, 8) == pytest.approx(125000 ** 0.75, rel=1e-12)
    assert bitprobe.general_bound(100, 3) is None
    assert bitprobe.compare_bounds([2.0**64], [4]).startswith("m,n,")


def test_synth():
    out = bitprobe.synth_min_space(1, 8, 2)
    assert out["minimal_s"] == 4 and out["exhaustive"]
    assert out["witness"].validate() == []


def test_errors():
    with pytest.raises(ValueError):
        bitprobe.can_store(bitprobe.fixture("toy3"), "q:1")
    with pytest.raises(ValueError):
        bitprobe.fixture("nope")
    assert not math.isnan(bitprobe.theorem_bound(2.0**64, 1))
