"""
process-wide search configuration and diagnostics:
- budget: number of states a breadth-first minor / minor* search may expand
- max_cycle_vertices: largest graph handed to exhaustive cycle enumeration
- verbose: whether the command line prints the log stack

defaults can be overridden by EULERMINOR_<KEY> environment variables or at
runtime through override_config.
"""

from warnings import warn
from typing import Any, Dict, Optional

from .env_vars import get_eulerminor_env_vars, parse_flag

DEFAULT_CONFIG: Dict[str, Any] = {
    "budget": 200_000,
    "max_cycle_vertices": 10,
    "verbose": False,
}


def parse_config_value(key: str, raw: str) -> Any:
    if isinstance(DEFAULT_CONFIG[key], bool):
        return parse_flag(raw)
    value = int(raw)
    if value <= 0:
        raise ValueError(f"{key} must be positive, got {value}")
    return value


class SearchSetup:
    _instance = None

    def __init__(self):
        raise RuntimeError("Call get_instance() instead")

    def initialize(self):
        self.config = dict(DEFAULT_CONFIG)
        self.search_log = []
        self.apply_env_overrides()

    def apply_env_overrides(self):
        for key, raw in get_eulerminor_env_vars().items():
            if key not in DEFAULT_CONFIG:
                continue
            try:
                self.config[key] = parse_config_value(key, raw)
            except ValueError as ex:
                self.add_log_entry(f"SEARCH SETUP: ignoring EULERMINOR_{key.upper()}={raw!r}: {ex}", is_warning=True)

    def override_config(self, key=None, value=None, key_value_dict=None):
        """
        Overrides the search configuration.

        Parameters
        ----------
        key : str
            The setting to override.
        value : object
            The new value of the setting.
        key_value_dict : dict
            A dictionary with multiple key-values to override.
        """
        if key is not None and value is not None:
            assert key_value_dict is None
            key_value_dict = {key: value}

        if key_value_dict is None:
            return
        unknown = set(key_value_dict) - set(DEFAULT_CONFIG)
        if unknown:
            raise ValueError(f"Unknown search setting(s): {sorted(unknown)}")
        self.config.update(key_value_dict)

    def reset(self):
        self.config = dict(DEFAULT_CONFIG)
        self.search_log = []

    def get(self, key: str) -> Any:
        return self.config[key]

    def resolve_budget(self, budget: Optional[int]) -> int:
        if budget is None:
            return self.config["budget"]
        if budget <= 0:
            raise ValueError(f"budget must be positive, got {budget}")
        return budget

    def add_log_entry(self, msg, is_warning=False):
        self.search_log.append((msg, is_warning))

    def clear_log(self):
        self.search_log = []

    def print_log_stack(self, file=None):
        for msg, is_warning in self.search_log:
            if is_warning:
                warn(msg)
            else:
                print(msg, file=file)

    @classmethod
    def get_instance(cls):
        if cls._instance is None:
            cls._instance = cls.__new__(cls)
            cls._instance.initialize()
        return cls._instance
