"""Run-time limits for the brute-force oracle."""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .errors import SizeCapExceeded


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    return int(raw) if raw else default


@dataclass(frozen=True)
class Limits:
    max_module_dim: int = field(default_factory=lambda: _env_int("SUPERKAC_MAX_DIM", 512))
    max_cochain_dim: int = field(default_factory=lambda: _env_int("SUPERKAC_MAX_COCHAIN", 200_000))

    def check_module(self, dim: int) -> None:
        if dim > self.max_module_dim:
            raise SizeCapExceeded(f"module dimension {dim} exceeds cap {self.max_module_dim}")

    def check_cochains(self, dim: int) -> None:
        if dim > self.max_cochain_dim:
            raise SizeCapExceeded(f"cochain dimension {dim} exceeds cap {self.max_cochain_dim}")


def limits() -> Limits:
    return Limits()
