from .geometry import (
    GE14_DOM_MAP,
    LatticeCell,
    LatticeMap,
    default_lattice_map,
    expand_full_lattice,
    load_lattice_map,
    parse_lattice_map,
    render_half_map,
)
from .grid import (
    from_indices,
    parse_values,
    random_solution,
    serialize,
    snap_to_grid,
    to_indices,
)

__all__ = [
    "GE14_DOM_MAP",
    "LatticeCell",
    "LatticeMap",
    "default_lattice_map",
    "expand_full_lattice",
    "load_lattice_map",
    "parse_lattice_map",
    "render_half_map",
    "serialize",
    "parse_values",
    "snap_to_grid",
    "random_solution",
    "to_indices",
    "from_indices",
]
