"""Run configuration: defaults, then the JSON file named by GFT_CONFIG, then flags."""

from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, field, fields, replace
from pathlib import Path
from typing import Optional

from ..analysis.grid import DiskGrid
from ..errors import DomainError
from ..series import DEFAULT_DEGREE

ENV_VAR = "GFT_CONFIG"


@dataclass(frozen=True)
class Config:
    degree: int = DEFAULT_DEGREE
    oracle_degree: int = 128
    rmax: float = 0.9995
    radii: int = 60
    angles: int = 720
    refine: int = 3
    seed: int = 20201
    parallel: bool = False
    workers: int = 1
    tol_overrides: dict = field(default_factory=dict)
    lambdas: Optional[tuple] = None
    alphas: Optional[tuple] = None
    betas: Optional[tuple] = None

    @property
    def grid(self) -> DiskGrid:
        return DiskGrid(rmax=self.rmax, radii=self.radii, angles=self.angles, refine=self.refine)

    def tol(self, check_id, default):
        return float(self.tol_overrides.get(check_id, default))

    def sweep(self, key, default):
        override = getattr(self, key)
        return tuple(default) if override is None else tuple(override)

    def echo(self):
        d = asdict(self)
        for k in ("lambdas", "alphas", "betas"):
            if d[k] is not None:
                d[k] = list(d[k])
        return d

    def with_overrides(self, **kw):
        kw = {k: v for k, v in kw.items() if v is not None}
        return _validated(replace(self, **_coerce(kw)))


_NAMES = {f.name for f in fields(Config)}


def _coerce(raw):
    out = {}
    for k, v in raw.items():
        if k not in _NAMES:
            raise DomainError(f"unknown config key {k!r}")
        if k in ("lambdas", "alphas", "betas") and v is not None:
            v = tuple(float(x) for x in v)
        if k == "tol_overrides" and isinstance(v, (str, Path)):
            v = load_tol_overrides(v)
        out[k] = v
    return out


def _validated(cfg):
    cfg.grid  # raises DomainError on a bad grid
    if cfg.degree < 1 or cfg.oracle_degree < 1:
        raise DomainError("degree must be >= 1")
    return cfg


def load_tol_overrides(path):
    data = json.loads(Path(path).read_text())
    if not isinstance(data, dict):
        raise DomainError("tolerance overrides must be a JSON object mapping check id -> tolerance")
    return {str(k): float(v) for k, v in data.items()}


def load_config(env=None, **flags) -> Config:
    env = os.environ if env is None else env
    cfg = Config()
    path = env.get(ENV_VAR)
    if path:
        try:
            raw = json.loads(Path(path).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise DomainError(f"cannot read {ENV_VAR}={path}: {exc}") from exc
        cfg = _validated(replace(cfg, **_coerce(raw)))
    return cfg.with_overrides(**flags)
