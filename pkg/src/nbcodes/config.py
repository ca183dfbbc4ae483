"""Default budgets shared by the library entry points and the CLI flags."""

from __future__ import annotations

from dataclasses import dataclass

from .numfield import DEFAULT_MAX_PPRIME
from .statecheck import DEFAULT_CAP
from .weights import DEFAULT_BUDGET


@dataclass(frozen=True)
class Budgets:
    enumeration: int = DEFAULT_BUDGET  # codewords per exhaustive enumeration
    dim_cap: int = DEFAULT_CAP  # Hilbert space dimension for dense operators
    max_pprime: int = DEFAULT_MAX_PPRIME
    trials: int = 2000  # restarts of the self-dual search
    attempts: int = 200  # random extension draws per step of one restart
    seed: int = 1
