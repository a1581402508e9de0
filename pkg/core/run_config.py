"""
Run configuration: command-line flags over a JSON config file over config.py
"""

import json
import logging
import math
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any, Dict, List, Optional

import config
from .errors import ConfigError, SteklovError

logger = logging.getLogger(__name__)

COMMANDS = ("verify-all", "verify", "average", "converge-study", "gen-corpus")
FORMATS = ("json", "csv")


@dataclass
class RunConfig:
    command: str
    lemma_ids: Optional[List[str]] = None
    field_in: Optional[str] = None
    field_out: Optional[str] = None
    h: Optional[float] = None
    q: Optional[str] = None
    r: Optional[str] = None
    dt: Optional[float] = None
    time_points: Optional[int] = None
    space_points: Optional[int] = None
    extended: bool = False
    seed: int = config.CORPUS_CONFIG["seed"]
    report_path: str = config.REPORT_CONFIG["default_path"]
    format: str = config.REPORT_CONFIG["default_format"]
    jobs: int = config.VERIFY_CONFIG["jobs"]
    random_fields: int = config.VERIFY_CONFIG["random_fields"]
    config_path: Optional[str] = field(default=None, repr=False)

    # ═══ validation ═══

    def validate(self) -> "RunConfig":
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}; expected one of {', '.join(COMMANDS)}")
        if self.format not in FORMATS:
            raise ConfigError(f"unknown report format {self.format!r}; expected json or csv")
        if int(self.jobs) != self.jobs or self.jobs < 1:
            raise ConfigError(f"jobs must be an integer >= 1, got {self.jobs}")
        if self.random_fields < 0:
            raise ConfigError(f"random_fields must be >= 0, got {self.random_fields}")
        if self.h is not None and not (math.isfinite(self.h) and self.h > 0):
            raise ConfigError(f"h must be a positive number, got {self.h}")
        if self.command == "average":
            missing = [flag for flag, value in (("--in", self.field_in), ("--out", self.field_out), ("--h", self.h))
                       if value is None]
            if missing:
                raise ConfigError(f"average needs {', '.join(missing)}")
        if self.command == "gen-corpus" and self.field_out is None:
            raise ConfigError("gen-corpus needs --out <directory>")
        if self.lemma_ids is not None and self.command == "verify-all":
            raise ConfigError("verify-all runs every check; use verify --lemma to filter")

        try:
            if self.q is not None:
                self.q_values()
            if self.r is not None:
                self.r_values()
            if self.command != "average":
                time = self.time_grid()
                self.space_grid()
                if self.command in ("verify-all", "converge-study"):
                    self.check_study_grid(time)
                if self.h is not None:
                    self.window_list(time)
        except SteklovError as e:
            raise ConfigError(str(e)) from e
        return self

    # ═══ derived settings ═══

    def time_grid(self):
        from modules.field import TimeGrid

        grid = config.DEFAULT_GRID
        t0, t_end = grid["t0"], grid["t_end"]
        if self.dt is not None:
            steps = (t_end - t0) / self.dt
            if not (self.dt > 0 and abs(steps - round(steps)) <= 1e-9 * max(1.0, steps)):
                raise ConfigError(f"dt={self.dt} does not divide [{t0}, {t_end}] evenly")
            return TimeGrid.over(t0, t_end, int(round(steps)) + 1)
        return TimeGrid.over(t0, t_end, self.time_points or grid["time_points"])

    def space_grid(self):
        from modules.field import SpaceGrid

        grid = config.DEFAULT_GRID
        return SpaceGrid.uniform(self.space_points or grid["space_points"],
                                 grid["space_origin"], grid["space_length"])

    def grid_overridden(self) -> bool:
        return any(v is not None for v in (self.dt, self.time_points, self.space_points))

    def q_values(self) -> List[float]:
        from modules.operators import parse_exponent

        raw = [self.q] if self.q is not None else config.VERIFY_CONFIG["exponents"]
        return [parse_exponent(x) for x in raw]

    def r_values(self) -> List[float]:
        from modules.operators import parse_exponent

        raw = [self.r] if self.r is not None else config.VERIFY_CONFIG["exponents"]
        return [parse_exponent(x) for x in raw]

    def window_list(self, time) -> List[float]:
        """h values for the per-window sweeps: --h alone, or window_steps * dt"""
        from modules.operators import SteklovParams

        if self.h is not None:
            return [SteklovParams.from_h(self.h, time.dt).h]
        return [k * time.dt for k in config.VERIFY_CONFIG["window_steps"]]

    @staticmethod
    def check_study_grid(time) -> None:
        """Convergence studies need at least MIN_WINDOWS window sizes on the time grid."""
        from modules.verify.lemma_checks import MIN_WINDOWS, default_h_list

        found = len(default_h_list(time))
        if found < MIN_WINDOWS:
            raise ConfigError(
                f"time grid dt={time.dt:g} (n={time.n}) leaves {found} window sizes; "
                f"convergence studies need {MIN_WINDOWS}, so use a smaller dt or more time_points"
            )

    def to_dict(self) -> Dict[str, Any]:
        return {f.name: getattr(self, f.name) for f in fields(self) if f.name != "config_path"}


FILE_KEYS = {f.name for f in fields(RunConfig)} - {"command", "config_path"}


def load_config_file(path: str) -> Dict[str, Any]:
    """Read a JSON config file; unknown keys are an error."""
    config_path = Path(path)
    if not config_path.exists():
        raise FileNotFoundError(f"Config file not found: {config_path}")
    try:
        data = json.loads(config_path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise ConfigError(f"{config_path} is not valid JSON: {e}") from e
    if not isinstance(data, dict):
        raise ConfigError(f"{config_path} must hold a JSON object")
    unknown = sorted(set(data) - FILE_KEYS)
    if unknown:
        raise ConfigError(f"{config_path} has unknown keys: {', '.join(unknown)}")
    return data


def resolve(command: str, flags: Dict[str, Any]) -> RunConfig:
    """
    Merge settings: flag > config file > default.
    flags maps RunConfig field names to parsed flag values (None = not given).
    """
    merged: Dict[str, Any] = {}
    config_path = flags.get("config_path")
    if config_path:
        merged.update(load_config_file(config_path))
    merged.update({k: v for k, v in flags.items() if v is not None and k != "config_path"})
    if isinstance(merged.get("lemma_ids"), str):
        merged["lemma_ids"] = [x.strip() for x in merged["lemma_ids"].split(",") if x.strip()]
    for key in ("q", "r"):
        if merged.get(key) is not None:
            merged[key] = str(merged[key])

    try:
        run_config = RunConfig(command=command, config_path=config_path, **merged)
    except TypeError as e:
        raise ConfigError(f"invalid configuration: {e}") from e
    logger.debug("Resolved run config: %s", run_config)
    return run_config.validate()
