"""Resource ceilings for exhaustive searches."""

from __future__ import annotations

import os

ENV_CEILING = "SPECTRAL_DS_CEILING"

DEFAULT_ENUMERATION_CEILING = 11
DEFAULT_MATE_CEILING = 9


class ResourceCeilingError(RuntimeError):
    """An exhaustive search was asked to run above the configured order."""


def _env_ceiling() -> int | None:
    raw = os.environ.get(ENV_CEILING)
    if raw is None or raw.strip() == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{ENV_CEILING} must be an integer, got {raw!r}") from None


def enumeration_ceiling() -> int:
    env = _env_ceiling()
    return DEFAULT_ENUMERATION_CEILING if env is None else max(env, DEFAULT_ENUMERATION_CEILING)


def mate_ceiling() -> int:
    env = _env_ceiling()
    return DEFAULT_MATE_CEILING if env is None else env


def check_ceiling(n: int, ceiling: int, what: str = "search") -> None:
    if n > ceiling:
        raise ResourceCeilingError(
            f"{what} on {n} vertices exceeds the ceiling of {ceiling} "
            f"(raise it with {ENV_CEILING})"
        )
