"""Load and validate external JSON rule configuration files."""
import json
from pathlib import Path
from typing import Any, Dict, Optional

from pydantic import ValidationError

from hiercomplex.construction.subdivision import validate_rule_table
from hiercomplex.core.errors import RuleTableError
from hiercomplex.core.rules import RuleTable
from hiercomplex.utils.validation import validate_config_structure, validate_path_exists


class ConfigLoader:
    """Loads a rule configuration of the form ``{"rule_table": {...}}``."""

    def __init__(self, config_path: str):
        """
        Initialize config loader.

        Args:
            config_path: Path to JSON config file
        """
        self.config_path = Path(config_path)
        self.config: Optional[Dict[str, Any]] = None

    def load(self) -> Dict[str, Any]:
        """
        Load the configuration file and check its top-level keys.

        Returns:
            Configuration dictionary

        Raises:
            FileNotFoundError: If config file doesn't exist
            RuleTableError: If the file is not valid JSON or lacks required keys
        """
        validate_path_exists(self.config_path)
        try:
            with open(self.config_path, "r") as f:
                self.config = json.load(f)
        except json.JSONDecodeError as e:
            raise RuleTableError([f"{self.config_path}: invalid JSON ({e.msg})"]) from e
        missing = validate_config_structure(self.config, ("rule_table",))
        if missing:
            raise RuleTableError([f"missing key: {key}" for key in missing])
        return self.config

    def get_rule_table(self) -> RuleTable:
        """
        Build and validate the rule table from the loaded configuration.

        Raises:
            RuleTableError: If the table is malformed or violates the subdivision constraints
        """
        if self.config is None:
            self.load()
        try:
            table = RuleTable.model_validate(self.config["rule_table"])
        except ValidationError as e:
            raise RuleTableError(
                [f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}" for err in e.errors()]
            ) from e
        violations = validate_rule_table(table)
        if violations:
            raise RuleTableError(violations)
        return table


def load_rule_table(config_path: Optional[str]) -> RuleTable:
    """Rule table from a config file, or the default table when no path is given."""
    if config_path is None:
        return RuleTable.default()
    return ConfigLoader(config_path).get_rule_table()
