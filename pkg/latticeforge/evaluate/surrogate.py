# latticeforge/evaluate/surrogate.py
"""
Reduced-order lattice model standing in for a transport code.

Per fueled half-cell p (multiplicity m_p, enrichment e_p, gadolinia g_p):
    worth       w_p = e_p / (1 + gd_alpha * g_p)
    importance  s_p = 1 + s_edge * [edge] + s_water * [next to water]
    pin power   P_p = w_p * s_p
with N fueled pins in the full lattice:
    E    = sum(m_p * w_p) / N
    kinf = k_asym * E / (E + k_sat)
    ppf  = max(P_p) / (sum(m_p * P_p) / N)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from ..lattice.geometry import LatticeMap, default_lattice_map
from ..models.solution import SolutionVector


@dataclass(frozen=True)
class SurrogateConfig:
    k_asym: float = 1.30
    k_sat: float = 1.0
    gd_alpha: float = 0.5
    s_edge: float = 0.06
    s_water: float = 0.08

    def __post_init__(self) -> None:
        if self.k_asym <= 1:
            raise ValueError("k_asym must exceed 1 so criticality is reachable")
        if min(self.k_sat, self.gd_alpha) <= 0:
            raise ValueError("k_sat and gd_alpha must be positive")
        if min(self.s_edge, self.s_water) < 0:
            raise ValueError("s_edge and s_water must be nonnegative")


class SurrogateEvaluator:
    """Vectorized surrogate over the fueled cells of one lattice map."""

    pure = True

    def __init__(self, lattice: Optional[LatticeMap] = None, cfg: Optional[SurrogateConfig] = None):
        self.lattice = lattice or default_lattice_map()
        self.cfg = cfg or SurrogateConfig()
        fueled = self.lattice.fueled_cells
        self._types = np.array([c.fuel_type for c in fueled], dtype=np.int64)
        self._mult = np.array([c.multiplicity for c in fueled], dtype=float)
        self._importance = np.array(
            [
                1.0 + self.cfg.s_edge * c.is_edge + self.cfg.s_water * c.is_water_adjacent
                for c in fueled
            ]
        )
        self._n_fueled = float(self._mult.sum())

    def evaluate(self, sol: SolutionVector) -> Tuple[float, float]:
        cfg = self.cfg
        enr = np.array(sol.enr)[self._types - 1]
        gad = np.array([sol.gadolinia_of(int(t)) for t in range(1, 12)])[self._types - 1]
        worth = enr / (1.0 + cfg.gd_alpha * gad)
        power = worth * self._importance

        mean_worth = float(np.dot(self._mult, worth)) / self._n_fueled
        kinf = cfg.k_asym * mean_worth / (mean_worth + cfg.k_sat)
        mean_power = float(np.dot(self._mult, power)) / self._n_fueled
        ppf = float(power.max()) / mean_power
        return kinf, ppf


def surrogate_evaluate(
    sol: SolutionVector,
    lattice: Optional[LatticeMap] = None,
    cfg: Optional[SurrogateConfig] = None,
) -> Tuple[float, float]:
    return SurrogateEvaluator(lattice, cfg).evaluate(sol)
