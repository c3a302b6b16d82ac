#!/usr/bin/env python3
"""
测试统一配置与参考数据加载
"""

import os

import pytest

from hypack.config import HypackConfig, get_unified_config, reload_unified_config, reset_unified_config
from hypack.geometry import TilingParams, build_orthoscheme
from hypack.packing import feasible_t_interval
from hypack.reference import DATA_FILE, ReferenceRecord, load_reference_records
from hypack.utils.errors import ConfigurationError


def test_defaults():
    cfg = get_unified_config()
    assert cfg.verify_tol == 2e-5
    assert cfg.curve_samples == 100
    assert cfg.log_level == "WARNING"
    assert cfg.to_dict()["endpoint_tol"] == 5e-4


def test_singleton_and_reset():
    first = get_unified_config()
    assert get_unified_config() is first
    reset_unified_config()
    assert get_unified_config() is not first


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("HYPACK_VERIFY_TOL", "1e-5")
    monkeypatch.setenv("HYPACK_CURVE_SAMPLES", "25")
    monkeypatch.setenv("HYPACK_LOG_LEVEL", "debug")
    cfg = reload_unified_config()
    assert cfg.verify_tol == 1e-5
    assert cfg.curve_samples == 25
    assert cfg.log_level == "DEBUG"
    assert get_unified_config() is cfg


def test_env_file(tmp_path):
    env_file = tmp_path / ".env"
    env_file.write_text("HYPACK_GOLDEN_TOL=1e-8\n", encoding="utf-8")
    try:
        cfg = reload_unified_config(str(env_file))
        assert cfg.golden_tol == 1e-8
    finally:
        os.environ.pop("HYPACK_GOLDEN_TOL", None)


def test_unparsable_environment_value(monkeypatch):
    monkeypatch.setenv("HYPACK_CURVE_SAMPLES", "many")
    with pytest.raises(ConfigurationError) as exc:
        reload_unified_config()
    assert exc.value.details["field"] == "curve_samples"


@pytest.mark.parametrize("kwargs", [
    {"verify_tol": 0.0},
    {"tangency_tol": -1e-9},
    {"curve_samples": 1},
    {"log_level": "LOUD"},
])
def test_invalid_values(kwargs):
    with pytest.raises(ConfigurationError):
        HypackConfig(**kwargs)


def test_reference_records():
    records = load_reference_records()
    assert len(records) == 90
    assert {r.table for r in records} == {1, 2, 3, 4}
    assert load_reference_records(DATA_FILE) == records


def test_reference_prefers_adopted_value():
    records = {(r.table, r.key, r.quantity): r for r in load_reference_records()}
    volume = records[(4, "(6,3)", "orthoscheme_volume")]
    assert volume.printed == pytest.approx(0.4288923)
    assert volume.reference == pytest.approx(0.4228923)
    plain = records[(1, "(3,3)", "density")]
    assert plain.adopted is None
    assert plain.reference == plain.printed


def test_reference_record_validation():
    with pytest.raises(ValueError):
        ReferenceRecord(table=5, key="(3,3)", quantity="density", printed=0.1)


def test_reload_clears_tolerance_dependent_caches(monkeypatch):
    params = TilingParams(q=4, r=4)
    first = build_orthoscheme(params)
    assert build_orthoscheme(params) is first
    feasible_t_interval(params)
    assert feasible_t_interval.cache_info().currsize > 0

    monkeypatch.setenv("HYPACK_INCIDENCE_TOL", "1e-8")
    reload_unified_config()
    assert feasible_t_interval.cache_info().currsize == 0
    assert build_orthoscheme(params) is not first

    reset_unified_config()
    assert build_orthoscheme.cache_info().currsize == 0
