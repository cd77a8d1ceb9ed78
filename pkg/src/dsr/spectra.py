"""Distance spectral radius and Perron vector with certified residuals.

The distance matrix of a connected graph is nonnegative, symmetric, and
irreducible, so its largest eigenvalue is simple with a strictly positive
eigenvector; power iteration started inside the positive cone converges to
exactly that pair.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .graphs import DistanceMatrix


class ConvergenceError(RuntimeError):
    """Power iteration failed to reach its residual tolerance within the cap."""


@dataclass(frozen=True, eq=False)
class PerronPair:
    """Dominant eigenvalue with a unit, entrywise-positive eigenvector.

    ``residual`` is the max-norm of D x - rho x at the returned pair; callers
    can treat it as an a-posteriori certificate.
    """

    rho: float
    x: np.ndarray
    residual: float
    iterations: int

    def __post_init__(self):
        self.x.setflags(write=False)


def perron(dm: DistanceMatrix) -> PerronPair:
    """Dominant eigenpair of a distance matrix by power iteration.

    Starts from the uniform vector, estimates the eigenvalue by Rayleigh
    quotient each step, and stops once the infinity-norm residual drops to
    1e-12 * n.  Non-convergence raises instead of returning a bad pair.
    """
    n = dm.n
    if n == 1:
        return PerronPair(0.0, np.ones(1), 0.0, 0)
    a = dm.d.astype(np.float64)
    tol = 1e-12 * n
    max_iter = int(100 * n * math.log(1.0 / tol))
    x = np.full(n, 1.0 / math.sqrt(n))
    for it in range(1, max_iter + 1):
        y = a @ x
        rho = float(x @ y)
        residual = float(np.max(np.abs(y - rho * x)))
        if residual <= tol:
            return PerronPair(rho, x.copy(), residual, it)
        x = y / np.linalg.norm(y)
    raise ConvergenceError(
        f"no convergence after {max_iter} iterations (last residual {residual:.3e})"
    )


def quadratic_form(dm: DistanceMatrix, x: Sequence[float] | np.ndarray) -> float:
    """sum_{u,v} d_uv x_u x_v."""
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (dm.n,):
        raise ValueError(f"vector length {x.shape} does not match order {dm.n}")
    return float(x @ (dm.d @ x))


def rayleigh_bound_check(
    dm: DistanceMatrix, x: Sequence[float] | np.ndarray
) -> tuple[float, float]:
    """Quadratic form of a unit vector and its slack below the spectral radius.

    The slack is nonnegative for every unit vector and zero exactly at the
    Perron vector.
    """
    x = np.asarray(x, dtype=np.float64)
    norm = float(np.linalg.norm(x))
    if abs(norm - 1.0) > 1e-9:
        raise ValueError(f"vector must be unit norm, got |x| = {norm!r}")
    value = quadratic_form(dm, x)
    slack = perron(dm).rho - value
    return value, slack


def perron_group_pattern(
    pp: PerronPair, groups: Sequence[Iterable[int]]
) -> list[tuple[float, float]]:
    """Per-group (mean entry, max within-group deviation) of the Perron vector.

    ``groups`` must partition 0..n-1; used to assert block-constant eigenvector
    structure on symmetric constructions.
    """
    n = len(pp.x)
    seen: set[int] = set()
    out = []
    for group in groups:
        idx = list(group)
        if not idx:
            raise ValueError("empty group")
        for v in idx:
            if not 0 <= v < n or v in seen:
                raise ValueError(f"groups do not partition 0..{n - 1}: bad index {v}")
            seen.add(v)
        entries = pp.x[idx]
        mean = float(entries.mean())
        out.append((mean, float(np.max(np.abs(entries - mean)))))
    if len(seen) != n:
        raise ValueError(f"groups do not partition 0..{n - 1}: {n - len(seen)} missing")
    return out
