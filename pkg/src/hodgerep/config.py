"""Size caps and their sources: defaults, a key=value file, the environment.

Precedence (lowest to highest): built-in defaults, config file, environment
variables prefixed ``HODGEREP_``, explicit command-line flags.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace
from pathlib import Path

from .errors import UsageError

ENV_PREFIX = "HODGEREP_"


@dataclass(frozen=True)
class Caps:
    weight_system_dim: int = 10**6
    oracle_dim: int = 2000
    oracle_rank: int = 6
    max_dim_v: int = 10**4
    max_rank: int = 8
    max_factors: int = 3

    def updated(self, values: dict[str, object]) -> Caps:
        known = {f.name for f in fields(self)}
        clean = {}
        for key, raw in values.items():
            if key not in known:
                raise UsageError(f"unknown cap {key!r}; expected one of {sorted(known)}")
            try:
                value = int(raw)
            except (TypeError, ValueError):
                raise UsageError(f"cap {key!r} must be an integer, got {raw!r}") from None
            if value < 1:
                raise UsageError(f"cap {key!r} must be positive, got {value}")
            clean[key] = value
        return replace(self, **clean)


def parse_config_text(text: str) -> dict[str, str]:
    values: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"config line {lineno}: expected key=value, got {line!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        values[key.replace("-", "_").lower()] = value
    return values


def env_overrides(environ: dict[str, str] | None = None) -> dict[str, str]:
    environ = os.environ if environ is None else environ
    return {
        key[len(ENV_PREFIX):].lower(): value
        for key, value in environ.items()
        if key.startswith(ENV_PREFIX)
    }


def load_caps(path: str | Path | None = None, environ: dict[str, str] | None = None) -> Caps:
    caps = Caps()
    if path is not None:
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read config file {path}: {exc.strerror}") from None
        caps = caps.updated(parse_config_text(text))
    return caps.updated(env_overrides(environ))


_active = Caps()


def active_caps() -> Caps:
    return _active


def set_active_caps(caps: Caps) -> None:
    global _active
    _active = caps
