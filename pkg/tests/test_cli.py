import io
import json

from slablab import fixtures
from slablab.cli import run
from slablab.lattice import Region
from slablab.tiling import Piece, Tiling


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def fixture_path(name):
    return str(fixtures.path(name))


def test_count():
    assert call("count", "--box", "2,2,4", "--family", "slab") == (0, "11\n")
    code, text = call("--json", "count", "--box", "4,4,2", "--family", "mixed")
    assert code == 0 and json.loads(text) == {"count": 35}


def test_count_region_file(tmp_path):
    p = tmp_path / "r.json"
    p.write_text(json.dumps({"disk": [[0, 0], [1, 0], [0, 1], [1, 1]], "height": 4}))
    assert call("count", "--region", str(p), "--family", "slab") == (0, "11\n")


def test_enumerate():
    code, text = call("enumerate", "--box", "2,2,2", "--family", "slab")
    assert code == 0
    assert text.splitlines()[-1] == "# 3 tilings"
    code, text = call("enumerate", "--box", "4,4,2", "--family", "slab", "--limit", "4", "--json")
    lines = text.splitlines()
    assert len(lines) == 4 and json.loads(lines[0])["family"] == "slab"


def test_ttw():
    assert call("ttw", "--tiling", fixture_path("slab_6x6x6_ttw_002")) == (0, "(0,0,2)\n")


def test_twist(tmp_path):
    assert call("twist", "--tiling", fixture_path("domino_3x3x2_twist_minus1")) == (0, "-1\n")
    assert call("twist", "--tiling", fixture_path("mixed_6x6x6_twist_2"), "--pair", "z,1") == (0, "-2\n")
    flat = Tiling(Region.box(2, 2, 2), [Piece.domino((x, 0, z), "y") for x in (0, 1) for z in (0, 1)], "domino")
    p = tmp_path / "flat.json"
    flat.dump(p)
    assert call("twist", "--tiling", str(p)) == (0, "0\n")


def test_components(tmp_path):
    dot = tmp_path / "g.dot"
    code, text = call("components", "--box", "3,3,2", "--family", "domino")
    assert code == 0
    assert text.startswith("229 tilings, 3 components")
    assert call("components", "--box", "3,3,2", "--family", "domino", "--dot", str(dot))[0] == 2
    assert call("components", "--box", "2,2,4", "--family", "domino", "--dot", str(dot))[0] == 0
    assert dot.read_text().startswith("graph")
    code, text = call("--json", "components", "--box", "4,4,2", "--family", "slab")
    assert json.loads(text)["components"] == 1


def test_construct(tmp_path):
    out = tmp_path / "s.json"
    assert call("construct", "solenoid", "--n", "1", "--u", "1", "--v", "-1", "-o", str(out))[0] == 0
    assert call("ttw", "--tiling", str(out)) == (0, "(0,0,-2)\n")
    assert call("construct", "rigid", "--N", "4", "-o", str(out))[0] == 0
    assert call("ttw", "--tiling", str(out)) == (0, "(0,0,12)\n")
    assert call("construct", "composed", "--t", "2,0,-2", "-o", str(out))[0] == 0
    assert call("ttw", "--tiling", str(out)) == (0, "(2,0,-2)\n")


def test_verify(tmp_path):
    code, text = call("verify", "rigidity", "--json", "--witness-dir", str(tmp_path))
    assert code == 0 and json.loads(text)["status"] == "confirmed"
    region = tmp_path / "r.json"
    region.write_text(json.dumps({"box": [2, 2, 2]}))
    code, text = call("verify", "parity", "--region", str(region), "--json")
    detail = json.loads(text)["detail"]
    assert detail[str(region)] == [0, 0, 0]


def test_render(tmp_path):
    code, text = call("render", "--tiling", fixture_path("domino_3x3x2_twist_minus1"))
    assert code == 0 and text.count("\n") == 3
    out = tmp_path / "f.svg"
    assert call("render", "--tiling", fixture_path("rigid_6x6x5"), "--format", "svg", "-o", str(out))[0] == 0
    assert out.read_text().startswith("<svg")


def test_usage_errors(tmp_path, capsys):
    assert call("count", "--box", "2,x,2", "--family", "slab")[0] == 2
    assert call("count", "--family", "slab")[0] == 2
    assert call("frobnicate")[0] == 2
    assert call("verify", "nonsense")[0] == 2
    assert call("ttw", "--tiling", str(tmp_path / "missing.json"))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"region": {"box": [2, 2, 2]}, "family": "slab", "pieces": []}))
    assert call("ttw", "--tiling", str(bad))[0] == 2
    assert call("ttw", "--tiling", fixture_path("mixed_6x6x6_twist_2"))[0] == 2


def test_internal_error_exit_code(monkeypatch):
    import slablab.enumerator

    def boom(*a, **k):
        raise RuntimeError("boom")

    monkeypatch.setattr(slablab.enumerator, "count", boom)
    assert call("count", "--box", "2,2,2", "--family", "slab")[0] == 1


def test_deterministic_output():
    a = call("components", "--box", "4,4,2", "--family", "mixed", "--json", "--seed", "3")
    b = call("components", "--box", "4,4,2", "--family", "mixed", "--json", "--seed", "9")
    assert a == b


def test_threads_from_environment(monkeypatch):
    from slablab.cli import build_parser

    monkeypatch.setenv("SLABLAB_THREADS", "3")
    assert build_parser().parse_args(["count", "--box", "2,2,2", "--family", "slab"]).threads == 3
