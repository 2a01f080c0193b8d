from hypothesis import given
from hypothesis import strategies as st

from corpus import MEDIUM_FRAMES, corpus, frame
from evengraphs.builders import worked_start, worked_ivy, central_bigon, structure_sample, min_graph
from evengraphs.metrics import INFINITE, bounded_faces, root_metric, tree_view
from evengraphs.structures import all_structures, structure_at
from evengraphs.tree import as_tree

graphs = st.sampled_from(corpus(MEDIUM_FRAMES, 6))


def test_root_metric_of_examples():
    assert root_metric(min_graph(frame(8, (0, 4)))) == 0
    assert root_metric(worked_start()) == 6
    assert root_metric(worked_ivy()) == 4


def test_bounded_faces():
    assert bounded_faces(min_graph(frame(8, (0, 4)))) is INFINITE
    assert str(INFINITE) == "Infinite"
    assert bounded_faces(min_graph(frame(8, (0, 2, 4, 6)))) == 0
    assert bounded_faces(central_bigon(frame(8, (0, 2, 4, 6)))) == 1


@given(graphs)
def test_tree_view_is_a_tree(t):
    view = tree_view(t.to_cellgraph())
    assert view.is_tree


@given(graphs)
def test_bounded_faces_finite_iff_alternating(t):
    assert (bounded_faces(t) is INFINITE) == (not t.frame.alternating)


@given(graphs)
def test_root_metric_nonnegative_and_zero_on_one_junction(t):
    m = root_metric(t)
    assert m >= 0
    if len(t.rot) == 1:
        assert m == 0


def test_structures_of_example():
    t = as_tree(structure_sample())
    kinds = {s.j: s.kind for s in all_structures(t)}
    assert kinds == {1: "I", 2: "V", 4: "I", 5: "Y"}
    y = structure_at(t, 5)
    assert y.yjunction is not None and y.yjunction != y.junction
    assert structure_at(t, 1).yjunction is None


@given(graphs)
def test_structures_only_at_dominant_labels(t):
    for s in all_structures(t):
        assert t.frame.is_dominant(s.j)
        assert s.kind in ("I", "V", "Y")
        # I exactly when the next sector is dominant; V and Y when it is subdominant
        assert (s.kind == "I") == t.frame.is_dominant(s.j + 1)
