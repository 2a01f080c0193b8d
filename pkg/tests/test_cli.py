import re
import xml.etree.ElementTree as ET

import pytest

from corpus import frame
from evengraphs.builders import worked_start, worked_ivy, central_bigon, structure_sample, min_graph
from evengraphs.cli import main
from evengraphs.render import to_dot, to_svg


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, g in [
        ("b", worked_ivy()),
        ("a", worked_start()),
        ("min", min_graph(frame(8, (0, 4)))),
        ("asym", structure_sample()),
    ]:
        p = tmp_path / f"{name}.sgr"
        p.write_text(g.to_cellgraph().serialize())
        out[name] = p
    bad = tmp_path / "bad.sgr"
    bad.write_text(central_bigon(frame(6, (0, 3))).to_cellgraph().serialize().replace("label 4", "label 0"))
    out["bad"] = bad
    return out


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_validate(capsys, files):
    assert run(capsys, "validate", files["b"]) == (0, "ok\n", "")
    code, out, _ = run(capsys, "validate", files["bad"])
    assert code == 1 and "law VI:" in out
    code, out, _ = run(capsys, "validate", files["asym"])
    assert code == 1 and "law symmetry" in out
    assert run(capsys, "validate", "--no-symmetry", files["asym"])[0] == 0


def test_worked_example_through_cli(capsys, files, tmp_path):
    s1, s2 = tmp_path / "s1.sgr", tmp_path / "s2.sgr"
    assert run(capsys, "act", files["b"], "-j", 1, "-r", 2, "-o", s1)[0] == 0
    assert run(capsys, "act", s1, "-j", 3, "-r", 2, "-o", s2)[0] == 0
    assert s2.read_text() == files["min"].read_text()
    log = (tmp_path / "s1.sgr.log").read_text().splitlines()
    assert [l.split(" #")[0] for l in log] == ["E 1 +2", "E 1 +2"]
    _, r1, _ = run(capsys, "reduce", s2)
    _, r2, _ = run(capsys, "reduce", files["min"])
    assert r1 == r2


def test_inverse_act(capsys, files, tmp_path):
    fwd, back = tmp_path / "f.sgr", tmp_path / "g.sgr"
    run(capsys, "act", files["b"], "-j", 2, "-o", fwd)
    run(capsys, "act", fwd, "-j", 2, "--inverse", "-o", back)
    assert back.read_text() == files["b"].read_text()


def test_normalize_and_replay(capsys, files, tmp_path):
    out = tmp_path / "n.sgr"
    assert run(capsys, "normalize", files["a"], "-o", out, "--log", tmp_path / "n.log")[0] == 0
    code, replayed, _ = run(capsys, "replay", files["a"], tmp_path / "n.log")
    assert code == 0 and replayed == out.read_text()


def test_stdout_output_is_deterministic(capsys, files):
    first = run(capsys, "reduce", files["a"])
    second = run(capsys, "reduce", files["a"])
    assert first == second and first[0] == 0
    assert "# log" in first[1]


def test_orbit(capsys, tmp_path):
    reps = tmp_path / "reps"
    code, out, _ = run(capsys, "orbit", "-n", 6, "-J", "0,3", "--max-vertices", 5, "--rep-dir", reps)
    assert code == 0
    assert "class CenterTag(CenterVertex) members 15 rep class1.sgr" in out
    assert sorted(p.name for p in reps.iterdir()) == ["class0.sgr", "class1.sgr"]


def test_spectrum(capsys, tmp_path):
    job = tmp_path / "job.txt"
    job.write_text("d 4\nalpha 0\ncount 4\nN 4000\n")
    code, out, _ = run(capsys, "spectrum", job)
    assert code == 0
    assert re.search(r"^\s+0\s+even\s+1\.0603", out, re.M)


def test_render(capsys, files, tmp_path):
    code, dot, _ = run(capsys, "render", files["b"], "--format", "dot")
    assert code == 0 and dot == to_dot(worked_ivy())
    svg = tmp_path / "b.svg"
    assert run(capsys, "render", files["b"], "--format", "svg", "-o", svg)[0] == 0
    assert svg.read_text() == to_svg(worked_ivy())


def test_exit_codes(capsys, files, tmp_path):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "act", files["b"])[0] == 2  # missing -j
    assert run(capsys, "render", files["b"], "--format", "png")[0] == 2
    assert run(capsys, "validate", tmp_path / "missing.sgr")[0] == 1
    assert run(capsys, "act", files["asym"], "-j", 1)[0] == 1
    code, _, err = run(capsys, "orbit", "-n", 8, "-J", "0,4", "--max-vertices", 9, "--limit", 10)
    assert code == 3 and "resource guard" in err


def _dot_is_well_formed(text):
    body = text.strip()
    assert body.startswith("graph ") and body.endswith("}")
    assert body.count("{") == body.count("}")
    for line in body.splitlines()[1:-1]:
        line = line.strip()
        assert line.endswith(";"), line
        assert line.count('"') % 2 == 0


def test_dot_is_well_formed():
    for g in (worked_start(), worked_ivy(), central_bigon(frame(8, (0, 2, 4, 6)))):
        text = to_dot(g)
        _dot_is_well_formed(text)
        assert "dominant" in text and "subdominant" in text


def test_svg_is_xml():
    for g in (worked_start(), central_bigon(frame(6, (0, 3)))):
        root = ET.fromstring(to_svg(g))
        assert root.tag.endswith("svg")
        assert len([e for e in root.iter() if e.tag.endswith("circle")]) == len(g.to_cellgraph().vertices)


def test_dot_parses_with_pydot():
    pydot = pytest.importorskip("pydot")
    for g in (worked_start(), worked_ivy(), central_bigon(frame(8, (0, 2, 4, 6)))):
        (graph,) = pydot.graph_from_dot_data(to_dot(g))
        names = {n.get_name() for n in graph.get_nodes()}
        assert {f"v{v}" for v in g.to_cellgraph().vertices} <= names
