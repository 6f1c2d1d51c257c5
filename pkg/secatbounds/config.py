# secatbounds/config.py

import os
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Any, Optional

import yaml
from dotenv import load_dotenv

from secatbounds.errors import CapExceededError, InputError

# Load the .env file from the repository root
dotenv_path = os.path.join(os.path.dirname(__file__), '..', '.env')
load_dotenv(dotenv_path)

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parent.parent / "config.yaml"

ENV_PREFIX = "SECATBOUNDS_"


@dataclass(frozen=True)
class Caps:
    max_order: int = 100_000  # |G^r| for enumeration ops
    max_rank: int = 20_000  # rank of any single cochain space
    max_degree: int = 4
    full_check_order: int = 64  # exhaustive axiom checks up to this order
    sampled_checks: int = 2_000  # random triples/pairs above it

    def check(self, cap: str, value: int) -> None:
        limit = getattr(self, cap)
        if value > limit:
            raise CapExceededError(cap, value, limit)


@dataclass(frozen=True)
class EngineSettings:
    seed: int = 1729
    workers: int = 1  # threads for independent degrees / cells


@dataclass(frozen=True)
class VerifySettings:
    """Budget for the structural suites run by ``verify``."""
    max_degree: int = 3
    powers: tuple[int, ...] = (2, 3)
    bockstein_samples: int = 20
    # suites skip (not fail) instances whose cochain spaces exceed this rank
    max_cochain_rank: int = 6000
    spectral_window: int = 2  # r + s ≤ this for exact couple checks
    oracle_order: int = 8  # resolution vs bar comparison
    family_order: int = 12  # resolution exactness and the diagonal family
    grid_order: int = 16  # subgroup-pair grid for Shapiro, E_0 and the exact couple


@dataclass(frozen=True)
class LoggingSettings:
    level: str = "INFO"
    fmt: str = "%(asctime)s %(levelname)s %(name)s: %(message)s"


@dataclass(frozen=True)
class Settings:
    caps: Caps = field(default_factory=Caps)
    engine: EngineSettings = field(default_factory=EngineSettings)
    verify: VerifySettings = field(default_factory=VerifySettings)
    logging: LoggingSettings = field(default_factory=LoggingSettings)


def _section(cls, raw: Optional[dict[str, Any]], name: str):
    raw = raw or {}
    known = {f.name for f in fields(cls)}
    unknown = sorted(set(raw) - known)
    if unknown:
        raise InputError(f"unknown config keys: {', '.join(unknown)}", field=name)
    values = dict(raw)
    if "powers" in values:
        values["powers"] = tuple(int(p) for p in values["powers"])
    return cls(**values)


def _env_overrides(settings: Settings) -> Settings:
    caps = settings.caps
    for name in ("max_order", "max_rank", "max_degree"):
        value = os.getenv(ENV_PREFIX + name.upper())
        if value:
            caps = replace(caps, **{name: int(value)})
    engine = settings.engine
    seed = os.getenv(ENV_PREFIX + "SEED")
    if seed:
        engine = replace(engine, seed=int(seed))
    log = settings.logging
    level = os.getenv(ENV_PREFIX + "LOG_LEVEL")
    if level:
        log = replace(log, level=level.upper())
    return replace(settings, caps=caps, engine=engine, logging=log)


def load_settings(path: Optional[str | Path] = None) -> Settings:
    """Read ``config.yaml`` (or ``path``) and apply environment overrides."""
    cfg_path = Path(path) if path else DEFAULT_CONFIG_PATH
    raw: dict[str, Any] = {}
    if cfg_path.exists():
        with open(cfg_path, 'r') as f:
            raw = yaml.safe_load(f) or {}
    elif path:
        raise InputError(f"config file not found: {cfg_path}", field="--config")

    settings = Settings(
        caps=_section(Caps, raw.get("caps"), "caps"),
        engine=_section(EngineSettings, raw.get("engine"), "engine"),
        verify=_section(VerifySettings, raw.get("verify"), "verify"),
        logging=_section(LoggingSettings, raw.get("logging"), "logging"),
    )
    settings = _env_overrides(settings)
    for f in fields(Caps):
        if getattr(settings.caps, f.name) <= 0:
            raise InputError("caps must be positive", field=f"caps.{f.name}")
    return settings


_settings: Optional[Settings] = None


def get_settings() -> Settings:
    global _settings
    if _settings is None:
        _settings = load_settings()
    return _settings


def set_settings(settings: Settings) -> None:
    global _settings
    _settings = settings


def resolve_caps(caps: Optional[Caps]) -> Caps:
    return caps if caps is not None else get_settings().caps
