"""Default search bounds shared by the library entry points and the CLI."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Bounds:
    e_max: int = 5
    n_max: int = 32
    denominator_bound: int = 24
    seed: int = 0
    threads: int | None = None


DEFAULTS = Bounds()
