"""Unit tests for rule configuration files and runtime settings."""
import json

import pytest
from pydantic import ValidationError

from hiercomplex.config.loader import ConfigLoader, load_rule_table
from hiercomplex.config.settings import SuiteSettings, get_settings
from hiercomplex.core.errors import RuleTableError
from hiercomplex.core.kinds import ChildPosition
from hiercomplex.core.rules import RuleTable


def write_config(tmp_path, payload):
    path = tmp_path / "rules.json"
    path.write_text(json.dumps(payload))
    return path


class TestConfigLoader:
    """JSON rule configuration files."""

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            ConfigLoader(str(tmp_path / "absent.json")).load()

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "rules.json"
        path.write_text("{not json")
        with pytest.raises(RuleTableError):
            ConfigLoader(str(path)).load()

    def test_missing_key(self, tmp_path):
        path = write_config(tmp_path, {"orientation": {}})
        with pytest.raises(RuleTableError):
            ConfigLoader(str(path)).load()

    def test_default_table_round_trips(self, tmp_path):
        """A file holding the default table loads back as the default table."""
        payload = {"rule_table": RuleTable.default().model_dump(mode="json")}
        path = write_config(tmp_path, payload)
        assert load_rule_table(str(path)) == RuleTable.default()

    def test_no_path_gives_default(self):
        assert load_rule_table(None) == RuleTable.default()

    def test_reflected_orientation_rejected(self, tmp_path):
        """Orientations must be rotations of the child's corner cycle."""
        table = RuleTable.default().model_dump(mode="json")
        table["orientation"][ChildPosition.LEFT_UPPER.value] = ["L", "A", "U", "UL"]
        path = write_config(tmp_path, {"rule_table": table})
        with pytest.raises(RuleTableError):
            load_rule_table(str(path))

    def test_malformed_table_rejected(self, tmp_path):
        table = RuleTable.default().model_dump(mode="json")
        del table["edge_types"]
        path = write_config(tmp_path, {"rule_table": table})
        with pytest.raises(RuleTableError):
            load_rule_table(str(path))


class TestSettings:
    """Environment driven settings."""

    def test_defaults(self):
        settings = SuiteSettings()
        assert settings.seed == 0
        assert settings.workers == 1
        assert settings.log_level == "INFO"

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("HIERCOMPLEX_SEED", "7")
        monkeypatch.setenv("HIERCOMPLEX_LOG_LEVEL", "debug")
        settings = SuiteSettings()
        assert settings.seed == 7
        assert settings.log_level == "DEBUG"

    def test_invalid_log_level(self, monkeypatch):
        monkeypatch.setenv("HIERCOMPLEX_LOG_LEVEL", "CHATTY")
        with pytest.raises(ValidationError):
            SuiteSettings()

    def test_invalid_budget(self, monkeypatch):
        monkeypatch.setenv("HIERCOMPLEX_REDUCE_BUDGET", "0")
        with pytest.raises(ValidationError):
            SuiteSettings()

    def test_singleton(self):
        assert get_settings() is get_settings()
