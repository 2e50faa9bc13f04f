import io
import json

import jsonschema
import pytest

from stewart_alhazen import schemas
from stewart_alhazen.cli import run


def invoke(argv):
    out = io.StringIO()
    code = run(argv, stdout=out)
    text = out.getvalue()
    return code, (json.loads(text) if text.strip() else None)


def test_stewart_analyze_princeps():
    code, doc = invoke(["stewart-analyze", "-r", "1"])
    assert code == 0
    jsonschema.validate(doc, schemas.STEWART_REPORT)
    assert doc["reducible"] is False
    assert doc["constructibility"] == "NotConstructible"
    assert doc["galois_class"] == "S4"


def test_stewart_analyze_negative_fraction():
    code, doc = invoke(["stewart-analyze", "-r", "-15/2"])
    assert code == 0
    assert doc["r"] == "-15/2"
    assert doc["reducible"] is True and doc["c1_witness"] == "-2"


def test_stewart_analyze_zero(capsys):
    code, _ = invoke(["stewart-analyze", "-r", "0"])
    assert code == 2
    assert "r must be a nonzero rational" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv, flag",
    [
        (["stewart-analyze"], "-r"),
        (["stewart-analyze", "-r", "1/0"], "-r"),
        (["mirror-solve", "--a", "1/2,0"], "--b"),
        (["mirror-solve", "--a", "x,0", "--b", "0,1"], "--a"),
        (["dioph-search", "--bound", "0"], "--bound"),
        (["plot", "--a", "1,0", "--b", "0,1"], "-o"),
    ],
)
def test_usage_errors(argv, flag, capsys):
    code, _ = invoke(argv)
    assert code == 2
    assert flag in capsys.readouterr().err


def test_no_subcommand():
    assert invoke([])[0] == 2


def test_dioph_search():
    code, doc = invoke(["dioph-search", "--bound", "100"])
    assert code == 0
    jsonschema.validate(doc, schemas.DIOPH_REPORT)
    assert doc == {"bound": 100, "solutions": [], "checked_pairs": 10000}


def test_mirror_solve():
    code, doc = invoke(["mirror-solve", "--a", "1/2,0", "--b", "-0.5,0"])
    assert code == 0
    jsonschema.validate(doc, schemas.MIRROR_REPORT)
    assert doc["quartic"] == ["0", "-1", "0", "1", "0"]
    assert [s["point"] for s in doc["solutions"]] == [[0.0, -1.0], [1.0, 0.0], [0.0, 1.0], [-1.0, 0.0]]
    assert doc["solutions"][-1]["z"] == "infinity"


def test_mirror_solve_scenario_file(tmp_path):
    path = tmp_path / "scene.json"
    path.write_text(json.dumps({"center": ["1", "1"], "radius": "2", "A": ["2", "1"], "B": ["1", "2"]}))
    code, doc = invoke(["mirror-solve", "--scenario", str(path), "--tol", "1e-9"])
    assert code == 0
    jsonschema.validate(doc, schemas.MIRROR_REPORT)
    assert len(doc["solutions"]) == 2


def test_mirror_solve_degenerate():
    code, doc = invoke(["mirror-solve", "--a", "0,0", "--b", "0,0"])
    assert code == 1
    jsonschema.validate(doc, schemas.ERROR_REPORT)
    assert doc["error"] == "DegenerateConfiguration"


def test_mirror_solve_bad_radius(capsys):
    code, _ = invoke(["mirror-solve", "--a", "1,0", "--b", "0,1", "--radius", "-1"])
    assert code == 2
    assert "--radius" in capsys.readouterr().err


def test_mirror_embed():
    code, doc = invoke(["mirror-embed", "-r", "1"])
    assert code == 0
    jsonschema.validate(doc, schemas.EMBED_REPORT)
    assert doc["scenario"]["A"] == ["-1/10", "-1/10"]
    assert doc["scenario"]["B"] == ["1/6", "-1/6"]
    assert doc["lambda"] == "-4/15"


@pytest.mark.parametrize("r", ["4", "-4"])
def test_mirror_embed_degenerate(r):
    code, doc = invoke(["mirror-embed", "-r", r])
    assert code == 1
    assert doc["error"] == "EmbeddingDegenerate"


def test_plot(tmp_path):
    path = tmp_path / "fig.svg"
    code, doc = invoke(["plot", "--a", "1/2,0", "--b", "0,1/2", "-o", str(path)])
    assert code == 0
    jsonschema.validate(doc, schemas.PLOT_REPORT)
    assert doc["solutions"] == 2
    assert path.read_text().count("<polyline") == 2
