import json

import pytest

from balanced_forge.cli import main
from balanced_forge.enumeration import enumerate_mbc, load_catalog, save_catalog

TRIANGLE_TEXT = "n=3; edges=[{1,2},{1,3},{2,3}]\n"
FIG3_TEXT = "n=7; edges=[{1,2,3,4},{1,5,6,7},{3,4,5,6},{3,4,6,7}]\n"


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_version():
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0


def test_mbc_enum_count(capsys):
    rc, out, _ = run(capsys, "mbc", "enum", "--players", "3")
    assert rc == 0
    assert out == "count=6\n"


def test_mbc_enum_oracle_and_duality(capsys):
    rc, out, _ = run(capsys, "mbc", "enum", "--players", "3", "--method", "oracle")
    assert (rc, out) == (0, "count=6\n")
    rc, out, _ = run(capsys, "mbc", "enum", "--players", "3", "--method", "duality")
    assert (rc, out) == (0, "count=6\n")


def test_mbc_enum_writes_text_catalog(tmp_path, capsys):
    path = str(tmp_path / "n3.mbc")
    rc, out, _ = run(capsys, "mbc", "enum", "--players", "3", "--out", path, "--json")
    assert rc == 0
    blob = json.loads(out)
    assert blob == {"n": 3, "method": "direct", "count": 6, "out": path}
    cat = load_catalog(path)
    assert cat.count == 6
    assert cat.method == "direct"


def test_mbc_enum_writes_json_catalog(tmp_path, capsys):
    path = str(tmp_path / "n3.json")
    rc, _, _ = run(capsys, "mbc", "enum", "--players", "3", "--out", path)
    assert rc == 0
    assert json.loads((tmp_path / "n3.json").read_text())["count"] == 6
    assert load_catalog(path).coalition_sets() == enumerate_mbc(3).coalition_sets()


def test_mbc_enum_bad_players(capsys):
    rc, _, err = run(capsys, "mbc", "enum", "--players", "9")
    assert rc == 2
    assert err.startswith("error:")


def test_mbc_check_minimal(capsys):
    rc, out, _ = run(
        capsys, "mbc", "check", "--collection", "n=3; [{1,2}:1/2, {1,3}:1/2, {2,3}:1/2]"
    )
    assert rc == 0
    assert out.splitlines() == [
        "balanced=true minimal=true",
        "n=3; [{1,2}:1/2, {1,3}:1/2, {2,3}:1/2]",
    ]


def test_mbc_check_weightless_form(capsys):
    rc, out, _ = run(capsys, "mbc", "check", "--collection", "n=3; [{1,2}, {1,3}, {2,3}]")
    assert rc == 0
    assert out.splitlines()[1] == "n=3; [{1,2}:1/2, {1,3}:1/2, {2,3}:1/2]"


def test_mbc_check_balanced_but_not_minimal(capsys):
    rc, out, _ = run(capsys, "mbc", "check", "--collection", "n=2; [{1}, {2}, {1,2}]")
    assert rc == 3
    assert out.splitlines()[0] == "balanced=true minimal=false"


def test_mbc_check_unbalanced(capsys):
    rc, out, _ = run(capsys, "mbc", "check", "--collection", "n=2; [{1}]", "--json")
    assert rc == 3
    blob = json.loads(out)
    assert blob["balanced"] is False
    assert blob["minimal"] is False
    assert blob["weights"] is None


def test_mbc_check_reads_file(tmp_path, capsys):
    path = tmp_path / "col"
    path.write_text("n=2; [{1}:1, {2}:1]\n")
    rc, out, _ = run(capsys, "mbc", "check", "--in", str(path))
    assert rc == 0
    assert "minimal=true" in out


def test_mbc_check_needs_input(capsys):
    rc, _, err = run(capsys, "mbc", "check")
    assert rc == 2
    assert "give --in or --collection" in err


def test_hyper_count_spanning(capsys):
    rc, out, _ = run(capsys, "hyper", "count", "--nodes", "3", "--degree", "2", "--size", "3")
    assert (rc, out) == (0, "7\n")


def test_hyper_count_variants(capsys):
    rc, out, _ = run(
        capsys, "hyper", "count", "--nodes", "3", "--degree", "2", "--size", "3", "--total"
    )
    assert (rc, out) == (0, "10\n")
    rc, out, _ = run(
        capsys, "hyper", "count", "--nodes", "3", "--degree", "2", "--size", "3", "--cumulative"
    )
    assert (rc, out) == (0, "8\n")
    rc, out, _ = run(capsys, "hyper", "count", "--graphs", "--nodes", "3")
    assert (rc, out) == (0, "8\n")
    rc, out, _ = run(
        capsys, "hyper", "count", "--nodes", "3", "--degree", "2", "--size", "3", "--json"
    )
    assert rc == 0
    assert json.loads(out) == {"kind": "spanning", "count": 7}


def test_hyper_count_table_csv(capsys):
    rc, out, _ = run(
        capsys, "hyper", "count", "--table", "5", "--degree", "2", "--size", "3"
    )
    assert rc == 0
    assert out == "n,count\n0,0\n1,0\n2,1\n3,7\n4,22\n5,30\n"


def test_hyper_count_missing_args(capsys):
    rc, _, err = run(capsys, "hyper", "count", "--graphs")
    assert rc == 2
    rc, _, err = run(capsys, "hyper", "count", "--nodes", "3")
    assert rc == 2
    assert err.startswith("error:")


def test_hyper_enum_text(capsys):
    rc, out, _ = run(
        capsys, "hyper", "enum", "--nodes", "3", "--degree", "2", "--size", "3", "--spanning"
    )
    assert rc == 0
    lines = out.splitlines()
    assert len(lines) == 8
    assert lines[-1] == "count=7"


def test_hyper_enum_minimal(capsys):
    rc, out, _ = run(
        capsys, "hyper", "enum", "--nodes", "3", "--degree", "2", "--size", "3", "--minimal"
    )
    assert rc == 0
    assert out.splitlines() == ["n=3; edges=[{1,2},{1,3},{2,3}]", "count=1"]


def test_hyper_enum_json(capsys):
    rc, out, _ = run(
        capsys,
        "hyper", "enum", "--nodes", "3", "--degree", "2", "--size", "3",
        "--spanning", "--json",
    )
    assert rc == 0
    blob = json.loads(out)
    assert blob["count"] == 7
    assert len(blob["hypergraphs"]) == 7


def test_hyper_dual_text(tmp_path, capsys):
    path = tmp_path / "tri"
    path.write_text(TRIANGLE_TEXT)
    rc, out, _ = run(capsys, "hyper", "dual", "--in", str(path))
    assert rc == 0
    assert out == "n=3; edges=[{1,2},{1,3},{2,3}]\n"


def test_hyper_dual_json_sniff(tmp_path, capsys):
    path = tmp_path / "tri.json"
    path.write_text('{"n": 3, "edges": [[1,2],[1,3],[2,3]]}')
    rc, out, _ = run(capsys, "hyper", "dual", "--in", str(path))
    assert rc == 0
    assert json.loads(out)["n"] == 3


def test_hyper_decompose_first(tmp_path, capsys):
    path = tmp_path / "fig"
    path.write_text(FIG3_TEXT)
    rc, out, _ = run(capsys, "hyper", "decompose", "--in", str(path))
    assert rc == 0
    assert json.loads(out) == [[1, 3, 6], [2, 4, 5, 7]]


def test_hyper_decompose_all_json(tmp_path, capsys):
    path = tmp_path / "fig"
    path.write_text(FIG3_TEXT)
    rc, out, _ = run(capsys, "hyper", "decompose", "--in", str(path), "--all", "--json")
    assert rc == 0
    blob = json.loads(out)
    assert blob["n"] == 7
    assert blob["size"] == 4
    blocks = [p["blocks"] for p in blob["partitions"]]
    assert [[1, 3, 6], [2, 4, 5, 7]] in blocks
    assert [[1, 3, 4, 5, 7], [2, 6]] in blocks
    assert len(blocks) == 3


def test_game_random_stdout_and_file(tmp_path, capsys):
    rc, out, _ = run(capsys, "game", "random", "--players", "3", "--seed", "42")
    assert rc == 0
    assert json.loads(out)["v"]["{1,2,3}"] == 93
    path = str(tmp_path / "g.json")
    rc, out, _ = run(
        capsys, "game", "random", "--players", "3", "--seed", "42", "--out", path
    )
    assert rc == 0
    assert out == "wrote %s\n" % path


def test_game_core_empty(tmp_path, capsys):
    path = str(tmp_path / "g.json")
    run(capsys, "game", "random", "--players", "3", "--seed", "42", "--out", path)
    rc, out, _ = run(capsys, "game", "core", "--game", path)
    assert rc == 3
    lines = out.splitlines()
    assert lines[0] == "core: empty"
    assert lines[1] == "collection: n=3; [{2}:1, {1,3}:1]"
    assert lines[2] == "efficiency: 105 > v(N) = 93"


def test_game_core_nonempty(tmp_path, capsys):
    path = str(tmp_path / "g.json")
    run(capsys, "game", "random", "--players", "3", "--seed", "86", "--out", path)
    rc, out, _ = run(capsys, "game", "core", "--game", path)
    assert rc == 0
    assert out.splitlines() == ["core: nonempty", "x = (17, 56, 25)"]


def test_game_core_json(tmp_path, capsys):
    path = str(tmp_path / "g.json")
    run(capsys, "game", "random", "--players", "3", "--seed", "42", "--out", path)
    rc, out, _ = run(capsys, "game", "core", "--game", path, "--json")
    assert rc == 3
    blob = json.loads(out)
    assert blob["nonempty"] is False
    assert blob["payment"] is None
    assert blob["efficiency"] == 105


def test_game_core_with_catalog(tmp_path, capsys):
    gpath = str(tmp_path / "g.json")
    cpath = str(tmp_path / "n3.mbc")
    run(capsys, "game", "random", "--players", "3", "--seed", "42", "--out", gpath)
    save_catalog(enumerate_mbc(3), cpath)
    rc, out, _ = run(capsys, "game", "core", "--game", gpath, "--catalog", cpath)
    assert rc == 3
    assert out.splitlines()[0] == "core: empty"


def test_game_core_catalog_mismatch(tmp_path, capsys):
    gpath = str(tmp_path / "g.json")
    cpath = str(tmp_path / "n2.mbc")
    run(capsys, "game", "random", "--players", "3", "--seed", "42", "--out", gpath)
    save_catalog(enumerate_mbc(2), cpath)
    rc, _, err = run(capsys, "game", "core", "--game", gpath, "--catalog", cpath)
    assert rc == 2
    assert err.startswith("error:")


def test_missing_file_is_usage_error(capsys):
    rc, _, err = run(capsys, "game", "core", "--game", "/nonexistent/game.json")
    assert rc == 2
    assert err.startswith("error:")
    rc, _, err = run(capsys, "hyper", "dual", "--in", "/nonexistent/h")
    assert rc == 2


def test_verify_example8(capsys):
    rc, out, _ = run(capsys, "verify", "example8")
    assert rc == 0
    lines = out.splitlines()
    assert len(lines) == 7
    assert all(ln.startswith("ok  ") for ln in lines[:-1])
    assert lines[-1] == "suite example8: pass"


def test_verify_example8_json(capsys):
    rc, out, _ = run(capsys, "verify", "example8", "--json")
    assert rc == 0
    blob = json.loads(out)
    assert blob["ok"] is True
    assert len(blob["checks"]) == 6


def test_verify_table1_small(capsys):
    rc, out, _ = run(capsys, "verify", "table1", "--max-n", "3")
    assert rc == 0
    assert "suite table1: pass" in out


def test_verify_prop1_small(capsys):
    rc, out, _ = run(capsys, "verify", "prop1", "--max-nodes", "2", "--max-size", "2")
    assert rc == 0
    assert "suite prop1: pass" in out


def test_verify_prop2_small(capsys):
    rc, out, _ = run(capsys, "verify", "prop2", "--max-nodes", "2")
    assert rc == 0
    assert "prop2 non-uniqueness" in out


def test_verify_sharpbs_small(capsys):
    rc, out, _ = run(capsys, "verify", "sharpbs", "--max-n", "2", "--games", "25")
    assert rc == 0
    assert "suite sharpbs: pass" in out
