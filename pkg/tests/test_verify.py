"""The verification harness: runs, checks, reports, enumeration."""

import json
from fractions import Fraction

import pytest

from krallhahn.config import (
    CHECK_NAMES,
    ConstructionConfig,
    builtin_config,
    config_from_dict,
)
from krallhahn.errors import ConfigInvalid
from krallhahn.sets import SetQuartet
from krallhahn.verify import (
    build_run,
    check_foeq,
    enumerate_root_couples,
    run_config,
    run_many,
)


def _scrub(payload):
    """Drop elapsed-time fields so reports can be compared exactly."""
    if isinstance(payload, dict):
        return {k: _scrub(v) for k, v in payload.items() if k != "elapsed"}
    if isinstance(payload, list):
        return [_scrub(v) for v in payload]
    return payload


def test_build_run_theorem_path():
    run = build_run(builtin_config("single-root-direct"))
    assert run.shift == 0
    assert run.ctx.m == 1
    assert run.n_max == 9
    assert run.measure is run.inner_measure
    assert run.measure.size == 10


def test_build_run_corollary_path():
    run = build_run(builtin_config("single-root"))
    assert run.shift == 2
    assert run.n_max == 7
    assert run.measure.size == 8
    assert sorted(run.measure.support) == [0, 2, 3, 4, 5, 6, 7, 8]


def test_build_run_honours_n_max_cap():
    cfg = ConstructionConfig(
        a=Fraction(1, 2),
        b=Fraction(1, 3),
        N=8,
        quartet=SetQuartet.of((), (), (), (1,)),
        pads=None,
        path="corollary",
        checks=("eigen-equation",),
        n_max=3,
    )
    assert build_run(cfg).n_max == 3


def test_build_run_rejects_bad_parameters():
    cfg = config_from_dict(
        {
            "a": "2",
            "b": "1/3",
            "N": 8,
            "F": [[], [1], [], []],
            "path": "corollary",
        }
    )
    with pytest.raises(ConfigInvalid, match="second/fourth"):
        build_run(cfg)


def test_run_config_report_shape():
    report = run_config(builtin_config("classical"))
    assert report.passed
    assert tuple(c.name for c in report.checks) == CHECK_NAMES
    assert report.summary["rows"] == 0
    assert report.summary["path"] == "theorem"
    assert report.summary["r"] == 1
    payload = report.to_json_dict()
    assert set(payload) == {"config", "summary", "checks"}
    assert payload["summary"]["passed"] is True


def test_run_config_criteria_constant_surfaces():
    report = run_config(builtin_config("single-root"))
    assert report.passed
    assert report.summary["criteria_constant"] == "-20095806215/17915904"
    assert report.summary["eigenvalues"][0] == "-44/3"


def test_report_is_deterministic():
    cfg = builtin_config("single-root")
    first = _scrub(run_config(cfg).to_json_dict())
    second = _scrub(run_config(cfg).to_json_dict())
    assert json.dumps(first, sort_keys=True) == json.dumps(second, sort_keys=True)


def test_run_many_serial():
    configs = [builtin_config("classical"), builtin_config("single-root")]
    reports = run_many(configs, workers=1)
    assert [r.config.name for r in reports] == ["classical", "single-root"]
    assert all(r.passed for r in reports)


def test_check_foeq_vacuous_without_rows():
    run = build_run(builtin_config("classical"))
    ok, witness = check_foeq(run.ctx, run.inner_measure)
    assert ok
    assert "vacuous" in witness["note"]


def test_checks_subset_is_respected():
    cfg = ConstructionConfig(
        a=Fraction(1, 2),
        b=Fraction(1, 3),
        N=8,
        quartet=SetQuartet.of((), (), (), (1,)),
        pads=None,
        path="corollary",
        checks=("genre", "support"),
    )
    report = run_config(cfg)
    assert [c.name for c in report.checks] == ["genre", "support"]
    assert report.passed


class TestEnumeration:
    def test_small_case(self):
        couples = enumerate_root_couples(10, [2])
        assert couples == [
            {
                "F3": [],
                "F4": [2],
                "r": 3,
                "sign": 1,
                "within_half": True,
                "minimal": True,
            },
            {
                "F3": [8],
                "F4": [],
                "r": 9,
                "sign": -1,
                "within_half": False,
                "minimal": False,
            },
        ]

    def test_root_bounds(self):
        with pytest.raises(ValueError):
            enumerate_root_couples(10, [10])
        with pytest.raises(ValueError):
            enumerate_root_couples(10, [0])
        with pytest.raises(ValueError):
            enumerate_root_couples(10, [])
