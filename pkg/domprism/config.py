"""Runtime configuration.

Later sources win: defaults, [tool.domprism] in ./pyproject.toml, an explicit
TOML file, DOMPRISM_JOBS, then command-line flags.
"""
from __future__ import annotations

import dataclasses
import os
import sys
import typing as t
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from domprism.errors import ConfigError

ENV_JOBS = "DOMPRISM_JOBS"


@dataclasses.dataclass(frozen=True)
class Config:
    """Settings shared by the command line, census and suites."""

    jobs: int = 1
    node_budget: int = 50_000_000
    search_budget: int = 50_000_000
    bipartite_shortcut: bool = False
    audit_rate: float = 0.01
    seed: int = 0
    progress: bool = True

    def __post_init__(self) -> None:
        """Validate ranges.

        Raises:
            ConfigError if a value is out of range
        """
        for name in ("jobs", "node_budget", "search_budget"):
            if getattr(self, name) < 1:
                msg = f"{name} must be >= 1, got {getattr(self, name)}"
                raise ConfigError(msg)
        if not 0.0 <= self.audit_rate <= 1.0:
            msg = f"audit_rate must be within [0, 1], got {self.audit_rate}"
            raise ConfigError(msg)

    def update(self, values: t.Mapping[str, t.Any], source: str = "") -> Config:
        """New Config with values applied after type checks.

        Args:
            values: Field name to value
            source: Where values came from, for error messages

        Raises:
            ConfigError for an unknown key or a value of the wrong type
        """
        where = f" in {source}" if source else ""
        fields = {f.name: f for f in dataclasses.fields(self)}
        checked = {}
        for key, value in values.items():
            if key not in fields:
                msg = f"Unknown setting '{key}'{where}"
                raise ConfigError(msg)
            checked[key] = _coerce(key, type(getattr(self, key)), value, where)
        return dataclasses.replace(self, **checked)


def _coerce(key: str, expected: type, value: t.Any, where: str) -> t.Any:
    # bool is an int subclass but never a valid number here
    stray_bool = isinstance(value, bool) and expected is not bool
    if isinstance(value, expected) and not stray_bool:
        return value
    if expected is float and isinstance(value, int) and not stray_bool:
        return float(value)
    msg = (
        f"Setting '{key}'{where} must be {expected.__name__}, "
        f"got {type(value).__name__}"
    )
    raise ConfigError(msg)


def _read_toml(path: Path) -> t.Dict[str, t.Any]:
    try:
        with path.open("rb") as file:
            return tomllib.load(file)
    except OSError as e:
        msg = f"Cannot read config {path}: {e}"
        raise ConfigError(msg) from e
    except tomllib.TOMLDecodeError as e:
        msg = f"Malformed TOML in {path}: {e}"
        raise ConfigError(msg) from e


def load_config(
    path: t.Union[Path, None] = None,
    cwd: t.Union[Path, None] = None,
    environ: t.Union[t.Mapping[str, str], None] = None,
) -> Config:
    """Resolve configuration from files and the environment.

    Args:
        path: Explicit TOML file whose top-level keys are settings
        cwd: Directory searched for pyproject.toml, default current directory
        environ: Environment mapping, default os.environ

    Returns:
        Resolved Config; command-line flags are applied by the caller

    Raises:
        ConfigError for unreadable files, unknown keys or bad values
    """
    config = Config()
    pyproject = (cwd or Path.cwd()).joinpath("pyproject.toml")
    if pyproject.is_file():
        table = _read_toml(pyproject).get("tool", {}).get("domprism", {})
        config = config.update(table, str(pyproject))
    if path is not None:
        config = config.update(_read_toml(path), str(path))

    environ = os.environ if environ is None else environ
    jobs = environ.get(ENV_JOBS)
    if jobs:
        try:
            n_jobs = int(jobs)
        except ValueError as e:
            msg = f"{ENV_JOBS} must be an integer, got '{jobs}'"
            raise ConfigError(msg) from e
        config = config.update({"jobs": n_jobs}, ENV_JOBS)
    return config
