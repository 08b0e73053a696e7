"""Run-time defaults shared by the CLI."""
from __future__ import annotations

import os
from dataclasses import dataclass, replace
from fractions import Fraction

PLAIN = "plain"
JSON = "json"


@dataclass(frozen=True)
class Config:
    depth: int = 1000
    max_steps: int = 10_000
    output: str = PLAIN
    eps: Fraction = Fraction(1, 10**12)

    def __post_init__(self):
        if self.depth <= 0 or self.max_steps <= 0 or self.eps <= 0:
            raise ValueError("depth, max_steps and eps must be positive")
        if self.output not in (PLAIN, JSON):
            raise ValueError(f"unknown output format {self.output!r}")

    @classmethod
    def from_env(cls, env=None) -> "Config":
        env = os.environ if env is None else env
        cfg = cls()
        if env.get("UNIVOQ_DEPTH"):
            cfg = replace(cfg, depth=int(env["UNIVOQ_DEPTH"]))
        return cfg

    def override(self, **kw) -> "Config":
        return replace(self, **{k: v for k, v in kw.items() if v is not None})
