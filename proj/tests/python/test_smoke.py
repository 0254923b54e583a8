import pytest

import vsl


def parity():
    v = vsl.Vass(1)
    v.add_state("q")
    v.add_transition("q", [2], "q")
    return v


def test_vass_text_round_trip():
    v = parity()
    assert vsl.Vass.from_text(v.to_text()).to_text() == v.to_text()
    assert v.transitions == [("q", [2], "q")]


def test_fire_and_guard():
    v = vsl.Vass(1)
    v.add_state("q")
    v.add_transition("q", [-1], "q")
    assert vsl.fire(v, ("q", [1]), 0) == ("q", [0])
    assert vsl.fire(v, ("q", [0]), 0) is None


def test_shortest_run():
    v = parity()
    r = vsl.shortest_run(v, ("q", [0]), ("q", [4]))
    assert r["verdict"] == "Reachable"
    assert r["witness"]["length"] == 2
    assert vsl.shortest_run(v, ("q", [0]), ("q", [3]), norm_bound=10)["verdict"] == "Exhausted"


def test_decide_duality():
    v = parity()
    assert vsl.decide(v, ("q", [0]), ("q", [4]))["verdict"] == "RunFound"
    d = vsl.decide(v, ("q", [0]), ("q", [3]))
    assert d["verdict"] == "SeparatorFound"
    assert d["separator_text"] == "component q\nbase 0\nperiod 2\n"
    sep = d["separator_text"]
    assert vsl.is_separator(v, ("q", [0]), ("q", [3]), sep) == ("Verified", 0)
    assert vsl.contains(v, sep, ("q", [10]))
    assert not vsl.contains(v, sep, ("q", [7]))


def test_minimal_separators_budget():
    v = parity()
    assert vsl.minimal_separators(v, ("q", [0]), ("q", [3]), 2) == ["component q\nbase 0\nperiod 2\n"]
    with pytest.raises(vsl.VslError):
        vsl.minimal_separators(v, ("q", [0]), ("q", [3]), 1)


def test_bezout_big_numbers():
    a = [6, 10, 15]
    target = 10**30 + 1
    b = vsl.bezout_nonneg(a, target)
    assert all(x >= 0 for x in b)
    assert sum(x * y for x, y in zip(a, b)) == target
    assert vsl.bezout_nonneg([4, 6], 5) is None


def test_zero_path():
    path = vsl.zero_run_path([1, 1], [3, 0], [0, 3])
    assert path[0] == [3, 0] and path[-1] == [0, 3]
    steps = {tuple(s) for s in vsl.zero_set([1, 1])}
    for p, q in zip(path, path[1:]):
        assert tuple(b - a for a, b in zip(p, q)) in steps
        assert min(q) >= 0


def test_fraction_family():
    v, side = vsl.build_vn()
    assert side["delta"] == [16, 25, 0, 0]
    assert side["q"] == "p_0"
    u, uside = vsl.build_un()
    r = vsl.shortest_run(u, uside["s"], uside["t"], norm_bound=60)
    assert r["verdict"] == "Reachable"


def test_modification_loops():
    loops = vsl.modification_loops([1, 2, 0, 0], [0, 0, 1, 0])
    assert sorted(map(tuple, loops)) == sorted(
        [(0, 0, -1, 0), (0, 0, 0, 1), (0, 0, 0, -1), (2, -1, 0, 0), (-2, 1, 0, 0)]
    )
    with pytest.raises(vsl.VslError):
        vsl.modification_loops([1, 1], [0, 1])


def test_pump_and_check():
    v, side = vsl.toy_slope()
    path = vsl.pump(v, side["s"], [0, 1], [0, 0, 1], 3)
    configs = vsl.replay(v, side["s"], path)
    assert configs[-1] == ("q_t", [4, 7])
    rep = vsl.check_thm_simple(v, side["s"], side["t"], side["q"], side["a"], side["delta"])
    assert [c["status"] for c in rep["conditions"]] == [
        "Verified",
        "Verified",
        "VerifiedOnSamples",
        "VerifiedOnSamples",
    ]


def test_bad_input_raises():
    v = parity()
    with pytest.raises(vsl.VslError):
        vsl.shortest_run(v, ("nope", [0]), ("q", [1]))
    with pytest.raises(vsl.VslError):
        vsl.Vass.from_text("dim 1\nstate q\ntrans q r 1\n")
