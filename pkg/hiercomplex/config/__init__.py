"""Configuration management module."""
from hiercomplex.config.loader import ConfigLoader, load_rule_table
from hiercomplex.config.settings import SuiteSettings, get_settings

__all__ = ["ConfigLoader", "load_rule_table", "SuiteSettings", "get_settings"]
