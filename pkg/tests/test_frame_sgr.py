import pytest
from hypothesis import given
from hypothesis import strategies as st

from corpus import SMALL_FRAMES, corpus, frame
from evengraphs import sgr
from evengraphs.builders import central_bigon, structure_sample
from evengraphs.errors import GraphError, SgrError
from evengraphs.frame import SectorFrame
from evengraphs.metrics import equals
from evengraphs.tree import PlaneTree, as_tree


def test_frame_quantities():
    f = SectorFrame(8, [0, 4])
    assert (f.d, f.nu, f.m) == (6, 4, 1)
    assert f.dominant == (1, 2, 3, 5, 6, 7)
    assert not f.alternating
    assert SectorFrame(8, [0, 2, 4, 6]).alternating
    assert f.succ(3) == 5 and f.pred(5) == 3
    assert f.shift(3) == 7


@pytest.mark.parametrize(
    "n, J",
    [(7, [0, 3]), (4, [0, 2]), (8, [0, 1, 4, 5]), (8, [0, 3]), (8, [])],
)
def test_frame_rejects(n, J):
    with pytest.raises(GraphError):
        SectorFrame(n, J)


graphs = st.sampled_from(corpus(SMALL_FRAMES, 6))


@given(graphs)
def test_round_trip(t):
    text = t.to_cellgraph().serialize()
    again = sgr.parse(text)
    assert again.serialize() == text
    assert as_tree(again).canonical() == t


def test_parse_canonicalizes_relabelled_input():
    text = central_bigon(frame(6, (0, 3))).to_cellgraph().serialize()
    shuffled = text.replace("rot 0 e0.t r5 r0 r1 e1.h", "rot 0 r0 r1 e1.h e0.t r5")
    assert sgr.parse(shuffled).serialize() == text
    # swapping the two vertex ids is the same graph up to canonical form
    swapped = text.replace("rot 0", "rot X").replace("rot 1", "rot 0").replace("rot X", "rot 1")
    swapped = swapped.replace("edge 0 0 1", "edge 0 1 0").replace("edge 1 1 0", "edge 1 0 1")
    for k, v in ((0, 0), (1, 0), (5, 0), (2, 1), (3, 1), (4, 1)):
        swapped = swapped.replace(f"ray {k} {v}\n", f"ray {k} {1 - v}\n")
    assert equals(sgr.parse(swapped), sgr.parse(text))


BIGON = central_bigon(SectorFrame(6, [0, 3])).to_cellgraph().serialize()


@pytest.mark.parametrize(
    "edit, message",
    [
        (lambda s: s.replace("ray 5 0\n", ""), "ray count mismatch"),
        (lambda s: s.replace("rot 1 e0.h e1.t", "rot 1 e0.t e1.t"), "dart reused"),
        (lambda s: s.replace("sgr 1", "sgr 2"), "header"),
        (lambda s: s.replace("anchor 0 sector 0\n", ""), "missing anchor"),
        (lambda s: s + "bogus line\n", "unknown line kind"),
        (lambda s: s.replace("edge 1 1 0", "edge 1 1 1"), "loop"),
    ],
)
def test_parse_errors(edit, message):
    with pytest.raises(SgrError, match=message):
        sgr.parse(edit(BIGON))


def test_load_and_dump(tmp_path):
    g = structure_sample().to_cellgraph()
    p = tmp_path / "g.sgr"
    sgr.dump(g, p)
    assert sgr.load(p) == g


def test_plane_tree_rejects_bad_rotation():
    f = SectorFrame(6, [0, 3])
    with pytest.raises(GraphError):
        PlaneTree(f, {0: [~0, ~1, ~2, ~3, ~4]})
