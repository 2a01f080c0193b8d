from corpus import frame
from evengraphs.normalize import CenterTag, ZeroCount
from evengraphs.orbits import EnumSpec, orbit_bfs


def test_two_classes_small():
    rep = orbit_bfs(EnumSpec(frame(6, (0, 3)), 6))
    assert [c.invariant for c in rep.classes] == [CenterTag("CenterDoubleEdge"), CenterTag("CenterVertex")]
    assert not rep.merges and not rep.rep_mismatches
    assert all(c.connected for c in rep.classes)
    assert sum(c.members for c in rep.classes) == 33


def test_zero_count_classes():
    rep = orbit_bfs(EnumSpec(frame(8, (0, 2, 4, 6)), 5))
    assert [c.invariant for c in rep.classes] == [ZeroCount(k) for k in range(5)]


def test_report_text():
    rep = orbit_bfs(EnumSpec(frame(6, (0, 3)), 4))
    lines = rep.lines().splitlines()
    assert lines[0].startswith("class CenterTag(CenterDoubleEdge) members ")
    assert lines[0].endswith("rep class0.sgr")
    assert "merges 0" in rep.table()
    assert rep.classes[1].rep_sgr.startswith("sgr 1\n")


def test_seeds_close_under_generators():
    from evengraphs.builders import worked_ivy

    rep = orbit_bfs(EnumSpec(frame(8, (0, 4)), 5), seeds=[worked_ivy()])
    assert [c.invariant for c in rep.classes] == [CenterTag("CenterVertex")]
