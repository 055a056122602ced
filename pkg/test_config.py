"""
Configuration System Tests

Tests for the YAML profile loader, field-named validation errors, the
backend factory and the suite runner.
"""

import asyncio
import os
import tempfile
from pathlib import Path

import pytest
from dotenv import load_dotenv

load_dotenv()

CONFIG_PATH = Path(__file__).parent / "src" / "config" / "profiles.yaml"


def test_load_config_from_yaml():
    """Test loading profiles from the bundled YAML file."""
    print("=" * 60)
    print("TEST 1: Load configuration from YAML")
    print("=" * 60)

    from src.config.loader import load_config_from_yaml

    profile = load_config_from_yaml(CONFIG_PATH, "test")
    print("\nLoaded profile: test")
    print(f"  Suites: {profile.suites}")
    print(f"  Backends: {profile.quantum.backends}")

    assert profile.suites == ["cluster", "classical", "quantum"]
    assert profile.workers == 2
    assert profile.quantum.backends == ["classical", "series"]
    assert profile.lambdas == [-1, 0, 1]
    print("\n[PASS] test profile loaded correctly")

    profile = load_config_from_yaml(CONFIG_PATH, "quick")
    assert profile.controls is False
    assert profile.qdilog.hs == [0.7, 1j]
    assert profile.opsim.points_2d == 256
    assert profile.opsim.extent_1d == 120.0
    assert profile.opsim.modular_dim == 12
    print("[PASS] quick profile loaded correctly")

    profile = load_config_from_yaml(CONFIG_PATH, "full")
    assert profile.record_timings is True
    assert profile.output.report_path == Path("reports/full/report.json")
    print("[PASS] full profile loaded correctly")

    profile = load_config_from_yaml(CONFIG_PATH, "default")
    assert profile.suites == ["cluster", "classical", "quantum", "qdilog", "opsim"]
    assert profile.hbars == [0.5, 1.0]
    assert profile.qdilog.hs == [0.3, 0.7, 1, 0.5j, 1j, 2j]
    print("[PASS] default profile runs every suite")


def test_load_config_env_fallback():
    """Test loading configuration from environment variables."""
    print("\n" + "=" * 60)
    print("TEST 2: Load configuration from environment (fallback)")
    print("=" * 60)

    from src.config import load_config
    from src.config.loader import load_config_from_env

    original = {key: os.environ.get(key) for key in ("CLUSTER_LAMBDA_WORKERS", "CLUSTER_LAMBDA_SEED")}
    os.environ["CLUSTER_LAMBDA_WORKERS"] = "3"
    os.environ["CLUSTER_LAMBDA_SEED"] = "17"
    try:
        profile = load_config_from_env()
        print(f"\nLoaded from environment: workers={profile.workers}, seed={profile.random_seed}")
        assert profile.workers == 3
        assert profile.random_seed == 17

        with tempfile.TemporaryDirectory() as tmp:
            profile = load_config(config_path=Path(tmp) / "missing.yaml")
            assert profile.workers == 3
        print("\n[PASS] Missing profile file falls back to the environment")
    finally:
        for key, value in original.items():
            if value is None:
                os.environ.pop(key, None)
            else:
                os.environ[key] = value


def test_load_config_main():
    """Test the main load_config function."""
    print("\n" + "=" * 60)
    print("TEST 3: Main load_config function")
    print("=" * 60)

    from src.config import load_config

    profile = load_config(profile="test")
    assert profile.quantum.series_order == 4
    print("\n[PASS] load_config with explicit profile works")

    original = os.environ.get("CLUSTER_LAMBDA_PROFILE")
    os.environ["CLUSTER_LAMBDA_PROFILE"] = "quick"
    try:
        profile = load_config()
        print(f"\nLoaded from CLUSTER_LAMBDA_PROFILE=quick: hbars={profile.hbars}")
        assert profile.hbars == [1.0]
        print("[PASS] load_config with CLUSTER_LAMBDA_PROFILE works")
    finally:
        if original:
            os.environ["CLUSTER_LAMBDA_PROFILE"] = original
        else:
            del os.environ["CLUSTER_LAMBDA_PROFILE"]

    with pytest.raises(KeyError):
        load_config(profile="nonexistent")
    print("[PASS] Unknown profile raises KeyError")


def test_validation_errors():
    """Invalid fields are reported by their dotted path."""
    print("\n" + "=" * 60)
    print("TEST 4: Validation errors")
    print("=" * 60)

    from src.config import validate_config
    from src.errors import ConfigError

    cases = {
        "hbars": {"hbars": [5.0]},
        "quantum.matrix_orders": {"quantum": {"matrix_orders": [4]}},
        "qdilog.h_values": {"qdilog": {"h_values": ["-1"]}},
        "workers": {"workers": 0},
        "surprise": {"surprise": 1},
        "<root>": {"suites": ["cluster", "cluster"]},
    }
    for field, data in cases.items():
        with pytest.raises(ConfigError) as info:
            validate_config(data)
        assert info.value.field == field, info.value.field
        print(f"[PASS] {data} → field '{field}'")

    config = validate_config({"lam": 0, "qdilog": {"h_values": [1, "2i"]}})
    assert config.lambdas == [0]
    assert config.qdilog.h_values == ["1", "2i"]
    print("[PASS] Valid overrides are accepted and h values kept as text")


def test_yaml_files():
    """Env var expansion and malformed profile files."""
    print("\n" + "=" * 60)
    print("TEST 5: Profile files")
    print("=" * 60)

    from src.config.loader import load_config_from_yaml
    from src.errors import ConfigError

    original = os.environ.get("CLUSTER_LAMBDA_TEST_SEED")
    os.environ["CLUSTER_LAMBDA_TEST_SEED"] = "seeds/torus.json"
    try:
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "profiles.yaml"
            path.write_text("profiles:\n  mine:\n    seed_path: ${CLUSTER_LAMBDA_TEST_SEED}\n", encoding="utf-8")
            profile = load_config_from_yaml(path, "mine")
            assert profile.seed_path == Path("seeds/torus.json")
            print("[PASS] ${VAR} references are expanded")

            path.write_text("suites: [cluster]\n", encoding="utf-8")
            with pytest.raises(ConfigError) as info:
                load_config_from_yaml(path, "mine")
            assert info.value.field == "profiles"

            path.write_text("profiles: [unclosed\n", encoding="utf-8")
            with pytest.raises(ConfigError):
                load_config_from_yaml(path, "mine")
            print("[PASS] Missing profiles and broken YAML raise ConfigError")
    finally:
        if original is None:
            os.environ.pop("CLUSTER_LAMBDA_TEST_SEED", None)
        else:
            os.environ["CLUSTER_LAMBDA_TEST_SEED"] = original


def test_parse_complex():
    """Complex literals in config files and on the command line."""
    print("\n" + "=" * 60)
    print("TEST 6: parse_complex")
    print("=" * 60)

    from src.config import parse_complex

    cases = {"0.7": 0.7, "2i": 2j, "i0.5": 0.5j, "0.1+0.2i": 0.1 + 0.2j, "0.1+0.2j": 0.1 + 0.2j, "i": 1j, "-i": -1j}
    for text, expected in cases.items():
        assert parse_complex(text) == expected, text
    assert parse_complex(1.5) == 1.5
    with pytest.raises(ValueError):
        parse_complex("abc")
    print(f"[PASS] {len(cases)} literals parsed; garbage refused")


def test_factory_create_backends():
    """Test creating relation backends from config."""
    print("\n" + "=" * 60)
    print("TEST 7: Factory - create_relation_backend")
    print("=" * 60)

    from src.config import QuantumConfig, create_relation_backend, create_relation_backends
    from src.quantum import ClassicalBackend, MatrixBackend, SeriesBackend

    config = QuantumConfig(series_order=6, matrix_orders=[5, 7], matrix_tolerance=1e-9)
    backends = create_relation_backends(config)
    print(f"\nCreated: {[type(b).__name__ for b in backends.values()]}")
    assert isinstance(backends["classical"], ClassicalBackend)
    assert isinstance(backends["series"], SeriesBackend)
    assert backends["series"].order == 6
    matrix = backends["matrix"]
    assert isinstance(matrix, MatrixBackend)
    assert matrix.orders == (5, 7)
    assert matrix.tolerance == 1e-9
    print("[PASS] Backends carry the configured orders and tolerances")

    assert create_relation_backend("matrix").orders is None
    with pytest.raises(ValueError):
        create_relation_backend("symbolic")
    print("[PASS] Defaults and unknown names")


async def test_factory_create_suite_runner():
    """Test the suite runner with stand-in suites."""
    print("\n" + "=" * 60)
    print("TEST 8: Factory - create_suite_runner")
    print("=" * 60)

    from src.config import create_suite_runner, validate_config
    from src.verification import CheckOutcome, SuiteRecorder, SuiteRunner

    empty = await create_suite_runner(validate_config({"suites": []})).run()
    assert empty.records == []
    assert empty.passed
    print("\n[PASS] An empty selection gives an empty passing report")

    def passing(config):
        recorder = SuiteRecorder("cluster")
        recorder.check("always", "exmat.involution", lambda: CheckOutcome.exact(True))
        recorder.check("failing", "exmat.kernel", lambda: CheckOutcome(False, 0.5, 0.1))
        recorder.check("raising", "exmat.kernel", lambda: 1 / 0)
        return recorder

    def crashing(config):
        raise RuntimeError("boom")

    config = validate_config({"suites": ["classical", "cluster"], "workers": 1})
    report = await SuiteRunner(config, {"cluster": passing, "classical": crashing}).run()
    statuses = [(r.suite, r.name, r.status.value) for r in report.records]
    print(f"Records: {statuses}")
    assert statuses == [
        ("classical", "suite", "error"),
        ("cluster", "always", "passed"),
        ("cluster", "failing", "failed"),
        ("cluster", "raising", "error"),
    ]
    assert not report.passed
    assert report.counts() == {"passed": 1, "failed": 1, "error": 2}
    assert report.config["workers"] == 1
    print("[PASS] Records merged in configured order; crashes become error records")


def main():
    """Run all tests."""
    print("\n" + "=" * 60)
    print("CONFIGURATION SYSTEM TESTS")
    print("=" * 60)

    test_load_config_from_yaml()
    test_load_config_env_fallback()
    test_load_config_main()
    test_validation_errors()
    test_yaml_files()
    test_parse_complex()
    test_factory_create_backends()
    asyncio.run(test_factory_create_suite_runner())

    print("\n" + "=" * 60)
    print("ALL TESTS PASSED!")
    print("=" * 60)


if __name__ == "__main__":
    main()
