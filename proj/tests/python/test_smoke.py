import os
from pathlib import Path

import pytest

import sppp

DATA = Path(os.environ.get("SPPP_DATA", Path(__file__).resolve().parents[2] / "data"))


def test_appendix_planes():
    planes = sppp.appendix_planes()
    assert len(planes) == 4
    for p in planes:
        assert p.order == 6
        assert len(p) == 25
        assert p.is_pure()
        assert p.is_saturated()
    assert len(sppp.dedupe(planes)) == 4
    h = planes[3].histogram()
    assert (h[5], h[4], h[0]) == (15, 25, 3)


def test_plane_construction_and_relabeling():
    fano = sppp.PartialPlane(2, [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]])
    assert fano.is_saturated()
    swap = {0: 6, 6: 0}
    relabeled = sppp.PartialPlane(2, [[swap.get(x, x) for x in line] for line in reversed(fano.lines)])
    assert sppp.isomorphic(fano, relabeled)
    assert fano.certificate() == relabeled.certificate()
    assert not sppp.PartialPlane(2, [[0, 1, 2], [0, 1, 3]]).is_pure()


def test_bad_input_raises():
    with pytest.raises(ValueError):
        sppp.PartialPlane(2, [[0, 0, 1]])
    with pytest.raises(ValueError):
        sppp.seed("case6")


def test_small_orders():
    order2 = sppp.exhaustive_small_order(2)
    assert max(len(p) for p in order2) == 7
    small = sppp.construct_odd_order(3)
    assert len(small) == 5 and small.is_saturated()
    assert any(len(p) == 5 and sppp.isomorphic(p, small) for p in sppp.exhaustive_small_order(3))


def test_feasibility():
    [s26] = sppp.feasibility(size=26, fixed={7: 0, 1: 0, 2: 0, 3: 0})
    assert s26["profiles"] == []
    assert "2*a4 = 39" in s26["reason"]
    [s25] = sppp.feasibility(size=25, fixed={7: 0, 1: 0, 2: 0}, constraints=["3*a3<=s"])
    assert len(s25["profiles"]) == 1
    a = s25["profiles"][0]
    assert (a[5], a[4], a[3]) == (15, 25, 0)


def test_case_phase_and_file_round_trip(tmp_path):
    assert "case1-2" in sppp.case_ids()
    out = sppp.run_case("case1-2", 1, sppp.seed("case1-2"))
    assert len(out) == 2 and all(len(p) == 18 for p in out)
    path = tmp_path / "out.ppp"
    sppp.write_planes(path, 6, out)
    assert sppp.read_planes(path) == out
    assert len(sppp.read_planes(DATA / "appendix.ppp")) == 4
