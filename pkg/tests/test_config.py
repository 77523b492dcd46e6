import os

import yaml

import interlacepy
from interlacepy.core.tools.config_file_parser import DEFAULT_CONFIG, SuiteConfigParser, data_directory

PACKAGED_CONFIG = os.path.join(os.path.dirname(interlacepy.__file__), "config", "interlace-config.yml")


def test_missing_file_gives_defaults(tmp_path):
    parser = SuiteConfigParser(str(tmp_path / "absent.yml"))
    assert parser.get_config() == DEFAULT_CONFIG
    assert parser.get_caps() == DEFAULT_CONFIG["caps"]


def test_file_overrides_defaults(tmp_path):
    path = tmp_path / "interlace-config.yml"
    path.write_text("seed : 7\ncaps :\n  statesum_max_n : 16\nsuites :\n  euler :\n    trials : 3\n")
    config = SuiteConfigParser(str(path)).get_config()
    assert config["seed"] == 7
    assert config["caps"]["statesum_max_n"] == 16
    assert config["caps"]["global_max_n"] == DEFAULT_CONFIG["caps"]["global_max_n"]
    assert config["suites"]["euler"] == {"trials": 3, "max_n": 5}
    assert SuiteConfigParser(str(path)).get_suite("plane") == {"max_edges": 7}


def test_defaults_are_not_shared(tmp_path):
    config = SuiteConfigParser(str(tmp_path / "absent.yml")).get_config()
    config["caps"]["statesum_max_n"] = 1
    assert DEFAULT_CONFIG["caps"]["statesum_max_n"] == 20


def test_data_directory(monkeypatch, tmp_path):
    monkeypatch.setenv("INTERLACEPY_PATH", str(tmp_path))
    assert data_directory() == os.path.join(str(tmp_path), "interlacepy-data")
    parser = SuiteConfigParser()
    assert parser.config_file_path == os.path.join(str(tmp_path), "interlacepy-data", "interlace-config.yml")


def test_packaged_config_matches_defaults():
    with open(PACKAGED_CONFIG, encoding="utf-8") as config_file:
        assert yaml.load(config_file, Loader=yaml.SafeLoader) == DEFAULT_CONFIG
