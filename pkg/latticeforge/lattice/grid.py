# latticeforge/lattice/grid.py
"""Serialization, grid snapping and random sampling of solution vectors."""

from __future__ import annotations

import math
from typing import Optional, Sequence

import numpy as np

from ..errors import InvalidSolution
from ..models.solution import (
    DEFAULT_GRID,
    GRID_TOL,
    N_GENES,
    SERIAL_ORDER,
    ParameterGrid,
    SolutionVector,
    check_values,
)

# Decimal places kept when converting grid indices back to values.
_VALUE_DIGITS = 10


def serialize(sol: SolutionVector) -> str:
    """Comma-joined 15 values in FUE1_enr..FUE11_gads order, one decimal each."""
    return ",".join(f"{v:.1f}" for v in sol.values())


def split_values(text: str) -> list[str]:
    return [tok.strip() for tok in text.split(",")]


def parse_values(
    text: str, grid: Optional[ParameterGrid] = None, *, snap: bool = False
) -> SolutionVector:
    """
    Inverse of `serialize`. With `snap`, values are clamped and rounded onto
    `grid`; otherwise, when a grid is given, off-grid values raise.
    """
    tokens = split_values(text)
    if len(tokens) != N_GENES:
        raise InvalidSolution(f"expected {N_GENES} comma-separated values, got {len(tokens)}")
    try:
        raw = [float(tok) for tok in tokens]
    except ValueError as e:
        raise InvalidSolution(f"non-numeric value in solution: {e}") from e
    if snap:
        return snap_to_grid(raw, grid or DEFAULT_GRID)
    sol = SolutionVector.from_values(raw)
    return sol if grid is None else grid.check(sol)


def _snap_index(value: float, grid: ParameterGrid, kind: str) -> int:
    lo, hi, step = grid.slot_bounds(kind)
    lo_i, hi_i = grid.index_bounds(kind)
    # clamp before dividing so huge finite values cannot overflow
    value = min(max(value, lo), hi)
    # ties round up; the tolerance absorbs binary representation error (2.55 -> 2.6)
    idx = math.floor(value / step + 0.5 + GRID_TOL)
    return min(max(idx, lo_i), hi_i)


def snap_to_grid(raw: Sequence[float], grid: ParameterGrid = DEFAULT_GRID) -> SolutionVector:
    """Clamp each of the 15 raw values to its range and round to the nearest grid step."""
    values = check_values(raw)
    if len(values) != N_GENES:
        raise InvalidSolution(f"expected {N_GENES} values, got {len(values)}")
    return from_indices([_snap_index(v, grid, kind) for (kind, _), v in zip(SERIAL_ORDER, values)], grid)


def from_indices(indices: Sequence[int], grid: ParameterGrid = DEFAULT_GRID) -> SolutionVector:
    """Build a solution from integer step multiples in serialized order."""
    values = [
        round(int(i) * grid.slot_bounds(kind)[2], _VALUE_DIGITS)
        for (kind, _), i in zip(SERIAL_ORDER, indices)
    ]
    return SolutionVector.from_values(values)


def to_indices(sol: SolutionVector, grid: ParameterGrid = DEFAULT_GRID) -> np.ndarray:
    """Integer step multiples of a grid-valid solution, in serialized order."""
    return np.array(
        [_snap_index(v, grid, kind) for (kind, _), v in zip(SERIAL_ORDER, sol.values())],
        dtype=np.int64,
    )


def random_indices(grid: ParameterGrid, rng: np.random.Generator, size: Optional[int] = None) -> np.ndarray:
    lows, highs, _ = grid.gene_bounds()
    shape = (N_GENES,) if size is None else (size, N_GENES)
    return rng.integers(np.array(lows), np.array(highs) + 1, size=shape)


def random_solution(grid: ParameterGrid, rng: np.random.Generator) -> SolutionVector:
    """Uniform random grid-valid solution; the initial-solution generation rule."""
    return from_indices(random_indices(grid, rng), grid)
