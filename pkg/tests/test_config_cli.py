"""Config parsing and the command-line entry point."""

import json
from fractions import Fraction

import pytest

from krallhahn.cli import main
from krallhahn.config import (
    BUILTIN_CONFIGS,
    builtin_config,
    config_from_dict,
    config_from_file,
)
from krallhahn.errors import ConfigInvalid

GOOD = {
    "a": "1/2",
    "b": "1/3",
    "N": 8,
    "F": [[], [], [], [1]],
    "path": "corollary",
    "checks": ["all"],
}


def _variant(**overrides):
    data = dict(GOOD)
    data.update(overrides)
    return data


class TestConfigParsing:
    def test_round_trip(self):
        cfg = config_from_dict(dict(GOOD), name="demo")
        assert cfg.a == Fraction(1, 2)
        assert cfg.quartet.fourth == (1,)
        assert cfg.resolved_checks() == tuple(
            config_from_dict(cfg.to_dict()).resolved_checks()
        )
        assert config_from_dict(cfg.to_dict()) == cfg

    @pytest.mark.parametrize(
        "overrides,fragment",
        [
            ({"a": "1/0"}, "zero denominator"),
            ({"a": "abc"}, "field 'a'"),
            ({"a": 1.5}, "rational string"),
            ({"N": 0}, "positive integer"),
            ({"N": True}, "positive integer"),
            ({"F": [[], []]}, "four integer lists"),
            ({"F": [[0], [], [], []]}, "field 'F'"),
            ({"path": "sideways"}, "field 'path'"),
            ({"checks": []}, "nonempty list"),
            ({"checks": ["spin"]}, "unknown check"),
            ({"n_max": -1}, "n_max"),
            ({"extra": 1}, "unknown fields"),
            ({"h": [1, 1]}, "three integers"),
            ({"h": [2, 1, 1]}, "determined by F"),
        ],
    )
    def test_rejections(self, overrides, fragment):
        with pytest.raises(ConfigInvalid, match=fragment):
            config_from_dict(_variant(**overrides))

    def test_missing_field(self):
        data = dict(GOOD)
        del data["a"]
        with pytest.raises(ConfigInvalid, match="missing field 'a'"):
            config_from_dict(data)

    def test_theorem_path_free_pads(self):
        cfg = config_from_dict(_variant(path="theorem", h=[2, 1, 1]))
        assert cfg.pads == (2, 1, 1)

    def test_builtins(self):
        for name in BUILTIN_CONFIGS:
            cfg = builtin_config(name)
            assert cfg.name == name
        with pytest.raises(ConfigInvalid, match="no builtin config"):
            builtin_config("nope")


class TestConfigFiles:
    def test_file_round_trip(self, tmp_path):
        path = tmp_path / "cfg.json"
        path.write_text(json.dumps(GOOD))
        cfg = config_from_file(path)
        assert cfg.N == 8

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigInvalid, match="cannot read"):
            config_from_file(tmp_path / "absent.json")

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(ConfigInvalid):
            config_from_file(path)


class TestCli:
    def test_verify_writes_report(self, tmp_path, capsys):
        cfg_path = tmp_path / "a.json"
        cfg_path.write_text(json.dumps(_variant(name="single-root", checks=["genre", "support"])))
        report_path = tmp_path / "out.json"
        code = main(["verify", "--config", str(cfg_path), "--report", str(report_path)])
        assert code == 0
        out = capsys.readouterr().out
        assert "genre: PASS" in out
        assert "2/2 checks passed" in out
        payload = json.loads(report_path.read_text())
        assert payload["summary"]["passed"] is True
        assert [c["name"] for c in payload["checks"]] == ["genre", "support"]

    def test_verify_multiple_configs_report_is_a_list(self, tmp_path):
        paths = []
        for i in range(2):
            p = tmp_path / f"c{i}.json"
            p.write_text(json.dumps(_variant(checks=["genre"], name=f"c{i}")))
            paths.append(str(p))
        report_path = tmp_path / "out.json"
        code = main(
            ["verify", "--config", paths[0], "--config", paths[1], "--report", str(report_path)]
        )
        assert code == 0
        payload = json.loads(report_path.read_text())
        assert isinstance(payload, list) and len(payload) == 2

    def test_malformed_rational_exits_2(self, tmp_path, capsys):
        cfg_path = tmp_path / "bad.json"
        cfg_path.write_text(json.dumps(_variant(a="1/0")))
        assert main(["verify", "--config", str(cfg_path)]) == 2
        assert "zero denominator" in capsys.readouterr().err

    def test_invalid_parameters_exit_2(self, tmp_path, capsys):
        # parses fine, fails the construction constraints
        cfg_path = tmp_path / "bad.json"
        cfg_path.write_text(json.dumps(_variant(a="2", F=[[], [1], [], []])))
        assert main(["verify", "--config", str(cfg_path)]) == 2
        assert "second/fourth" in capsys.readouterr().err

    def test_demo(self, capsys):
        assert main(["demo", "--name", "classical"]) == 0
        out = capsys.readouterr().out
        assert "9/9 checks passed" in out
        assert "half-width r = 1" in out

    def test_enumerate_couples(self, capsys):
        assert main(["enumerate-couples", "--N", "10", "--roots", "2"]) == 0
        out = capsys.readouterr().out
        assert "2 couples" in out
        assert "minimal r" in out

    def test_enumerate_couples_bad_roots(self, capsys):
        assert main(["enumerate-couples", "--N", "10", "--roots", "2,x"]) == 2
        assert "comma-separated" in capsys.readouterr().err

    def test_enumerate_couples_out_of_range(self, capsys):
        assert main(["enumerate-couples", "--N", "10", "--roots", "12"]) == 2
