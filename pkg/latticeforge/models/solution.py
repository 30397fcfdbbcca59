# latticeforge/models/solution.py
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from ..errors import InvalidSolution

N_ENR = 11
N_GAD = 4
N_GENES = N_ENR + N_GAD

# Fuel types (1-based) that carry gadolinia, in `gad` order.
GAD_TYPES: Tuple[int, ...] = (8, 9, 10, 11)

# Tolerance for "integer multiple of the step" and bound checks.
GRID_TOL = 1e-9

PARAMETER_NAMES: Tuple[str, ...] = (
    "FUE1_enr",
    "FUE2_enr",
    "FUE3_enr",
    "FUE4_enr",
    "FUE5_enr",
    "FUE6_enr",
    "FUE7_enr",
    "FUE8_enr",
    "FUE8_gads",
    "FUE9_enr",
    "FUE9_gads",
    "FUE10_enr",
    "FUE10_gads",
    "FUE11_enr",
    "FUE11_gads",
)

# Serialized slot -> ("enr", index into enr) or ("gad", index into gad).
SERIAL_ORDER: Tuple[Tuple[str, int], ...] = tuple(
    ("gad", GAD_TYPES.index(int(name[3:-5]))) if name.endswith("_gads") else ("enr", int(name[3:-4]) - 1)
    for name in PARAMETER_NAMES
)


@dataclass(frozen=True)
class ParameterGrid:
    """Bounds and step sizes (wt%) of the enrichment and gadolinia grids."""

    enr_min: float = 0.1
    enr_max: float = 5.0
    enr_step: float = 0.1
    gad_min: float = 0.0
    gad_max: float = 10.0
    gad_step: float = 1.0

    def __post_init__(self) -> None:
        for label, lo, hi, step in (
            ("enr", self.enr_min, self.enr_max, self.enr_step),
            ("gad", self.gad_min, self.gad_max, self.gad_step),
        ):
            if not (step > 0):
                raise ValueError(f"{label}_step must be positive, got {step}")
            if not (lo < hi):
                raise ValueError(f"{label}_min must be below {label}_max ({lo} >= {hi})")
            if lo < 0:
                raise ValueError(f"{label}_min must be nonnegative, got {lo}")

    def slot_bounds(self, kind: str) -> Tuple[float, float, float]:
        if kind == "enr":
            return self.enr_min, self.enr_max, self.enr_step
        return self.gad_min, self.gad_max, self.gad_step

    def index_bounds(self, kind: str) -> Tuple[int, int]:
        """Smallest and largest step multiples lying inside [min, max]."""
        lo, hi, step = self.slot_bounds(kind)
        return math.ceil(lo / step - GRID_TOL), math.floor(hi / step + GRID_TOL)

    def gene_bounds(self) -> Tuple[List[int], List[int], List[float]]:
        """Per-slot (low index, high index, step) in serialized order."""
        lows, highs, steps = [], [], []
        for kind, _ in SERIAL_ORDER:
            lo_i, hi_i = self.index_bounds(kind)
            lows.append(lo_i)
            highs.append(hi_i)
            steps.append(self.slot_bounds(kind)[2])
        return lows, highs, steps

    def in_bounds(self, kind: str, value: float) -> bool:
        lo, hi, _ = self.slot_bounds(kind)
        return lo - GRID_TOL <= value <= hi + GRID_TOL

    def on_grid(self, kind: str, value: float) -> bool:
        step = self.slot_bounds(kind)[2]
        return abs(value - round(value / step) * step) <= GRID_TOL

    def contains(self, sol: SolutionVector) -> bool:
        return all(
            self.in_bounds(kind, v) and self.on_grid(kind, v)
            for (kind, _), v in zip(SERIAL_ORDER, sol.values())
        )

    def check(self, sol: SolutionVector) -> SolutionVector:
        """Return `sol` if it lies on this grid; otherwise raise InvalidSolution naming the first bad slot."""
        for (kind, idx), v in zip(SERIAL_ORDER, sol.values()):
            name = f"FUE{idx + 1}_enr" if kind == "enr" else f"FUE{GAD_TYPES[idx]}_gads"
            lo, hi, step = self.slot_bounds(kind)
            if not self.in_bounds(kind, v):
                raise InvalidSolution(f"{name} = {v} is outside [{lo}, {hi}]")
            if not self.on_grid(kind, v):
                raise InvalidSolution(f"{name} = {v} is not a multiple of {step}")
        return sol


DEFAULT_GRID = ParameterGrid()


@dataclass(frozen=True)
class SolutionVector:
    """
    The 15-parameter lattice design: 11 type enrichments (FUE1..FUE11) and the
    gadolinia contents of fuel types 8, 9, 10 and 11, all in wt%.

    Construction checks shape and finiteness only. Bounds and step size belong to
    a ParameterGrid, so the same vector may be valid on one grid and not another:
    use `grid.contains(sol)` to test and `grid.check(sol)` to enforce.
    """

    enr: Tuple[float, ...]
    gad: Tuple[float, ...]

    def __post_init__(self) -> None:
        enr = tuple(float(v) for v in self.enr)
        gad = tuple(float(v) for v in self.gad)
        if len(enr) != N_ENR or len(gad) != N_GAD:
            raise InvalidSolution(
                f"expected {N_ENR} enrichments and {N_GAD} gadolinia values, "
                f"got {len(enr)} and {len(gad)}"
            )
        if not all(math.isfinite(v) for v in enr + gad):
            raise InvalidSolution("solution values must be finite")
        object.__setattr__(self, "enr", enr)
        object.__setattr__(self, "gad", gad)

    @classmethod
    def from_values(cls, values: Sequence[float]) -> SolutionVector:
        """Build from the 15 values in serialized order."""
        if len(values) != N_GENES:
            raise InvalidSolution(f"expected {N_GENES} values, got {len(values)}")
        enr = [0.0] * N_ENR
        gad = [0.0] * N_GAD
        for (kind, idx), v in zip(SERIAL_ORDER, values):
            if kind == "enr":
                enr[idx] = v
            else:
                gad[idx] = v
        return cls(enr=tuple(enr), gad=tuple(gad))

    def values(self) -> Tuple[float, ...]:
        """The 15 values in serialized order."""
        return tuple(self.enr[i] if kind == "enr" else self.gad[i] for kind, i in SERIAL_ORDER)

    def gadolinia_of(self, fuel_type: int) -> float:
        return self.gad[GAD_TYPES.index(fuel_type)] if fuel_type in GAD_TYPES else 0.0

    def enrichment_of(self, fuel_type: int) -> float:
        return self.enr[fuel_type - 1]

    def to_wire(self) -> dict:
        return {"enr": list(self.enr), "gad": list(self.gad)}


def check_values(values: Iterable[float]) -> List[float]:
    out = [float(v) for v in values]
    if not all(math.isfinite(v) for v in out):
        raise InvalidSolution("solution values must be finite")
    return out
