import json

import pytest

from a1weyl.cli import main

WORKED_LOOP_TEXT = "g2 g0 g2 g1 g0 g1 g0 g2 g1 g2 g1 g0".split()


@pytest.fixture
def baby2_config(tmp_path):
    path = tmp_path / "baby2.json"
    path.write_text(json.dumps({"rank": 2, "cosets": [[0, 0], [1, 0], [0, 1]]}))
    return str(path)


@pytest.fixture
def toroidal2_config(tmp_path):
    path = tmp_path / "tor2.json"
    path.write_text(
        json.dumps({"rank": 2, "cosets": [[0, 0], [1, 0], [0, 1], [1, 1]]})
    )
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_validate_ok(capsys, baby2_config):
    code, out = run(capsys, "validate", "--config", baby2_config)
    assert code == 0
    assert "ok" in out


def test_validate_duplicate_coset(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"rank": 2, "cosets": [[0, 0], [1, 0], [1, 0]]}))
    code = main(["validate", "--config", str(bad)])
    err = capsys.readouterr().err
    assert code == 2
    assert "duplicate" in err


def test_missing_config_file(capsys, tmp_path):
    code = main(["validate", "--config", str(tmp_path / "nope.json")])
    assert code == 3


def test_eval_relation_flag(capsys, baby2_config):
    code, data = run_json(
        capsys, "eval", "--config", baby2_config, "--group", "W",
        "g0", "g1", "g2", "g0", "g1", "g2",
    )
    assert code == 0
    assert data["relation"] is True
    assert data["element"] == {"eps": 1, "t": [0, 0]}


def test_eval_extension_is_central_not_trivial(capsys, baby2_config):
    code, data = run_json(
        capsys, "eval", "--config", baby2_config, "--group", "Wt",
        "g0", "g1", "g2", "g0", "g1", "g2",
    )
    assert code == 0
    assert data["relation"] is False
    assert data["central"] is True


def test_eval_single_generator(capsys, baby2_config):
    code, data = run_json(capsys, "eval", "--config", baby2_config, "g0")
    assert code == 0
    assert data["element"] == {"eps": -1, "t": [0, 0]}


def test_eval_parse_error(capsys, baby2_config):
    assert main(["eval", "--config", baby2_config, "gX"]) == 4


def test_eval_root_outside_system(capsys, baby2_config):
    assert main(["eval", "--config", baby2_config, "+e:1,1"]) == 5


def test_check(capsys, baby2_config):
    code, data = run_json(capsys, "check", "--config", baby2_config, "g1", "g1")
    assert code == 0 and data["relation"] is True
    code, data = run_json(
        capsys, "check", "--config", baby2_config, "--group", "Wt",
        "g0", "g1", "g2", "g0", "g1", "g2",
    )
    assert code == 0 and data["relation"] is False


def test_alt_enum(capsys, baby2_config):
    code, data = run_json(capsys, "alt-enum", "--config", baby2_config, "--k", "2")
    assert code == 0
    assert data["count"] == 3
    assert data["tuples"] == ["g0 g0", "g1 g1", "g2 g2"]


def test_alt_enum_odd_k(capsys, baby2_config):
    assert main(["alt-enum", "--config", baby2_config, "--k", "3"]) == 5


def test_presentation_verify(capsys, baby2_config):
    code, data = run_json(
        capsys, "presentation", "--config", baby2_config, "--kind", "baby", "--verify"
    )
    assert code == 0
    assert data["verified"] is True
    assert len(data["relators"]) == 4


def test_presentation_hyp_counts(capsys, toroidal2_config):
    code, data = run_json(
        capsys, "presentation", "--config", toroidal2_config, "--kind", "hyp", "--verify"
    )
    assert code == 0
    assert len(data["generators"]) == 4
    assert len(data["relators"]) == 8
    assert data["verified"] is True


def test_presentation_round_trip(capsys, baby2_config):
    from a1weyl import presentation_baby_w
    from a1weyl.presentation import presentation_from_dict

    code, data = run_json(capsys, "presentation", "--config", baby2_config, "--kind", "baby")
    assert code == 0
    data.pop("verified", None)
    data.pop("failures", None)
    assert presentation_from_dict(data) == presentation_baby_w(2)


def test_reduce_with_replay(capsys, baby2_config):
    code, data = run_json(capsys, "reduce", "--config", baby2_config, *WORKED_LOOP_TEXT)
    assert code == 0
    assert data["final_empty"] is True
    assert len(data["macros"]) == 3


def test_reduce_rejects_non_relation(capsys, baby2_config):
    assert main(["reduce", "--config", baby2_config, "g0", "g1"]) == 5


def test_path(capsys, baby2_config):
    code, data = run_json(capsys, "path", "--config", baby2_config, "g1", "g1")
    assert code == 0
    assert data["loop"] is True
    assert data["entries"] == [
        {"anchor": [0, 0], "orient": 1},
        {"anchor": [1, 0], "orient": -1},
        {"anchor": [0, 0], "orient": 1},
    ]


def test_render_svg(capsys, tmp_path, baby2_config):
    out = tmp_path / "loop.svg"
    code, data = run_json(
        capsys, "render-svg", "--config", baby2_config, "--out", str(out), *WORKED_LOOP_TEXT
    )
    assert code == 0
    text = out.read_text()
    assert text.startswith("<svg") and text.rstrip().endswith("</svg>")
    assert text.count("<polygon") == 12


def test_center_basis(capsys, toroidal2_config):
    code, data = run_json(capsys, "center-basis", "--config", toroidal2_config)
    assert code == 0
    assert data["count"] == 1
    (gen,) = data["generators"]
    assert gen["word"] == "g3 g1 g0 g2"
    assert gen["element"]["q"] == [[0, -1], [1, 0]]


def test_oracle_compare(capsys, baby2_config):
    code, data = run_json(
        capsys, "oracle-compare", "--config", baby2_config, "--n", "100", "--len", "8"
    )
    assert code == 0
    assert data["mismatches"] == 0


def test_oracle_compare_deterministic(capsys, baby2_config):
    _, first = run(capsys, "oracle-compare", "--config", baby2_config, "--n", "20", "--seed", "5")
    _, second = run(capsys, "oracle-compare", "--config", baby2_config, "--n", "20", "--seed", "5")
    assert first == second


def test_element_json_round_trips(capsys, baby2_config):
    from a1weyl.hyperbolic import element_from_dict
    from a1weyl.weyl import element_from_dict as w_from_dict

    code, data = run_json(capsys, "eval", "--config", baby2_config, "g1", "g0")
    assert w_from_dict(data["element"]).shift == (-1, 0)
    code, data = run_json(
        capsys, "eval", "--config", baby2_config, "--group", "Wt", "g1", "g0"
    )
    assert element_from_dict(data["element"]).projection().shift == (-1, 0)
