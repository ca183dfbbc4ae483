"""Randomized greedy search for self-dual symplectic codes of a given minimum weight."""

from __future__ import annotations

import numpy as np

from . import weights
from .errors import NotFoundError
from .sympcode import CodeParams, SympCode, dual, parameters


def search_selfdual(n: int, d: int, p: int, trials: int = 2000, seed: int = 1,
                    attempts: int = 200) -> tuple[SympCode, CodeParams, int]:
    """Find a self-dual code (dim n) whose nonzero words all have weight >= d.

    Each restart grows an isotropic subspace one vector at a time, accepting a
    random vector of the current dual only if the new coset keeps every word
    at weight >= d.  Returns ``(code, params, trial_index)``.
    """
    if 2 * d > n + 2:
        raise NotFoundError(f"no pure ((n={n}, 1, d={d})) exists: 2d > n + 2")
    rng = np.random.default_rng(seed)
    for trial in range(trials):
        C = SympCode.zero(p, n)
        while C.dim < n:
            D = dual(C)
            for _ in range(attempts):
                v = (rng.integers(0, p, D.dim) @ D.gens) % p
                if C.contains(v):
                    continue
                if weights.min_weight_coset(v[None, :], C.gens, p, 2, floor=d - 1) >= d:
                    C = SympCode(p, n, np.vstack([C.gens, v]))
                    break
            else:
                break
        if C.dim == n:
            params = parameters(C)
            if params.d >= d:
                return C, params, trial
    raise NotFoundError(f"no self-dual [[{n},0,{d}]]_{p} found in {trials} trials")
