# latticeforge/lattice/geometry.py
"""
Half-symmetric lattice maps.

Row i (1-based) of a half map lists the cells (i, 1..i); the last entry of a
row is the diagonal. Off-diagonal cells stand for two mirrored pins.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple, Union

from ..errors import LatticeMapError
from ..models.solution import SolutionVector

WATER = 0
MAX_FUEL_TYPE = 11

# GE-14 dominant lattice, half map as printed in the detailed meta-prompt.
GE14_DOM_MAP = """\
1
2  7
3  8  5
7  4  9  6
4 10  5 11  5
4  5 11  0  0  5
7  5  6  0  0  5 10
7  5  5  5  5  5  5  5
3  6 10  5  5  5  5  5 10
2  7  6  6  6  6  6  6  4  7
"""


@dataclass(frozen=True)
class LatticeCell:
    row: int
    col: int
    fuel_type: int
    multiplicity: int
    is_edge: bool
    is_water_adjacent: bool

    @property
    def is_water(self) -> bool:
        return self.fuel_type == WATER


# (enrichment, gadolinia) for fuel, None for water
FullCell = Optional[Tuple[float, float]]


@dataclass(frozen=True)
class LatticeMap:
    """Half-lattice cells in row-major order with derived multiplicity and flags."""

    size: int
    cells: Tuple[LatticeCell, ...]

    @classmethod
    def from_rows(cls, rows: List[List[int]]) -> LatticeMap:
        size = len(rows)
        if size == 0:
            raise LatticeMapError("lattice map has no rows")
        for i, row in enumerate(rows, start=1):
            if len(row) != i:
                raise LatticeMapError(f"row {i} has {len(row)} entries, expected {i}")
            for v in row:
                if not 0 <= v <= MAX_FUEL_TYPE:
                    raise LatticeMapError(f"row {i}: fuel type {v} outside 0..{MAX_FUEL_TYPE}")

        full = _mirror(rows)
        water = {(r, c) for (r, c), t in full.items() if t == WATER}
        cells = []
        for i, row in enumerate(rows, start=1):
            for j, t in enumerate(row, start=1):
                near_water = t != WATER and any(
                    (i + di, j + dj) in water for di, dj in ((1, 0), (-1, 0), (0, 1), (0, -1))
                )
                cells.append(
                    LatticeCell(
                        row=i,
                        col=j,
                        fuel_type=t,
                        multiplicity=1 if i == j else 2,
                        is_edge=(i == size or j == 1),
                        is_water_adjacent=near_water,
                    )
                )
        return cls(size=size, cells=tuple(cells))

    @property
    def fueled_cells(self) -> Tuple[LatticeCell, ...]:
        return tuple(c for c in self.cells if not c.is_water)

    @property
    def total_pins(self) -> int:
        return sum(c.multiplicity for c in self.cells)

    @property
    def fueled_pins(self) -> int:
        return sum(c.multiplicity for c in self.fueled_cells)

    @property
    def water_pins(self) -> int:
        return self.total_pins - self.fueled_pins

    def type_counts(self) -> Dict[int, int]:
        """Full-lattice pin count per fuel type, from multiplicities."""
        counts: Dict[int, int] = {}
        for c in self.fueled_cells:
            counts[c.fuel_type] = counts.get(c.fuel_type, 0) + c.multiplicity
        return dict(sorted(counts.items()))

    def water_positions(self) -> FrozenSet[Tuple[int, int]]:
        return frozenset(
            pos for c in self.cells if c.is_water for pos in {(c.row, c.col), (c.col, c.row)}
        )

    def rows(self) -> List[List[int]]:
        out: List[List[int]] = [[] for _ in range(self.size)]
        for c in self.cells:
            out[c.row - 1].append(c.fuel_type)
        return out


def _mirror(rows: List[List[int]]) -> Dict[Tuple[int, int], int]:
    full: Dict[Tuple[int, int], int] = {}
    for i, row in enumerate(rows, start=1):
        for j, t in enumerate(row, start=1):
            full[(i, j)] = t
            full[(j, i)] = t
    return full


def parse_lattice_map(text: str) -> LatticeMap:
    """Parse rows of whitespace-separated integers (row i holds i entries)."""
    rows: List[List[int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError as e:
            raise LatticeMapError(f"line {lineno}: {e}") from e
    return LatticeMap.from_rows(rows)


def load_lattice_map(path: Union[str, os.PathLike, None] = None) -> LatticeMap:
    """Read a map file; `None` or "builtin" gives the GE-14 default."""
    if path is None or str(path) == "builtin":
        return default_lattice_map()
    try:
        with open(path, encoding="utf-8") as f:
            return parse_lattice_map(f.read())
    except OSError as e:
        raise LatticeMapError(f"cannot read lattice map '{path}': {e}") from e


_DEFAULT: Optional[LatticeMap] = None


def default_lattice_map() -> LatticeMap:
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = parse_lattice_map(GE14_DOM_MAP)
    return _DEFAULT


def render_half_map(lattice: LatticeMap) -> str:
    """Render in the meta-prompt layout: first value bare, the rest right-aligned in width 3."""
    lines = []
    for row in lattice.rows():
        lines.append(str(row[0]) + "".join(f"{v:>3}" for v in row[1:]))
    return "\n".join(lines)


def expand_full_lattice(lattice: LatticeMap, sol: SolutionVector) -> List[List[FullCell]]:
    """
    Full size×size grid (0-based lists) of (enrichment, gadolinia), None for water.
    Gadolinia is zero for fuel types without a gadolinia parameter.
    """
    n = lattice.size
    grid: List[List[FullCell]] = [[None] * n for _ in range(n)]
    for c in lattice.cells:
        value: FullCell = None
        if not c.is_water:
            value = (sol.enrichment_of(c.fuel_type), sol.gadolinia_of(c.fuel_type))
        grid[c.row - 1][c.col - 1] = value
        grid[c.col - 1][c.row - 1] = value
    return grid
