import os
from typing import Dict

ENV_PREFIX = "EULERMINOR_"

TRUTHY = {"1", "true", "yes", "on"}
FALSY = {"0", "false", "no", "off", ""}


def is_eulerminor_env_var(env_var: str) -> bool:
    return env_var.startswith(ENV_PREFIX)


def to_config_key(env_var: str) -> str:
    return env_var[len(ENV_PREFIX):].lower()


def get_eulerminor_env_vars() -> Dict[str, str]:
    return {
        to_config_key(env_var): value
        for env_var, value in os.environ.items()
        if is_eulerminor_env_var(env_var)
    }


def parse_flag(value: str) -> bool:
    lowered = value.strip().lower()
    if lowered in TRUTHY:
        return True
    if lowered in FALSY:
        return False
    raise ValueError(f"Cannot read {value!r} as a boolean flag")


def acceptance_scale() -> str:
    """Returns "full" when the long-running family checks are requested, else "quick"."""
    scale = os.environ.get(f"{ENV_PREFIX}ACCEPTANCE", "quick").strip().lower()
    return "full" if scale == "full" else "quick"
