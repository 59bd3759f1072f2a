"""
Contexte d'exécution des vérifications: corps, budgets et cache optionnel.
"""

import logging
import dataclasses
from dataclasses import dataclass
from typing import Optional

from config.settings import Settings
from src.algebra.lcm_lattice import LcmLattice, lcm_lattice
from src.algebra.monomials import MonomialIdeal
from src.homology.fields import FieldSpec, RATIONALS
from src.stanley.characteristic import Side, characteristic_poset
from src.stanley.decomposition import verify_partition
from src.stanley.sdepth import SdepthResult, sdepth
from src.storage.database import ResultStore

logger = logging.getLogger("bettilab.lab")


@dataclass
class LabContext:
    """Paramètres partagés par toutes les vérifications d'une exécution."""

    field: FieldSpec = RATIONALS
    budget_nodes: Optional[int] = None
    surjection_budget: Optional[int] = None
    max_points: Optional[int] = None
    max_lattice_nodes: Optional[int] = None
    store: Optional[ResultStore] = None
    _lattices: dict = dataclasses.field(default_factory=dict, repr=False)

    @classmethod
    def from_settings(
        cls,
        settings: Settings,
        field_spec: Optional[FieldSpec] = None,
        budget_nodes: Optional[int] = None,
        store: Optional[ResultStore] = None,
    ) -> "LabContext":
        return cls(
            field=field_spec or FieldSpec.parse(settings.default_field),
            budget_nodes=budget_nodes or settings.sdepth_budget_nodes,
            surjection_budget=settings.surjection_budget_nodes,
            max_points=settings.sdepth_max_points,
            max_lattice_nodes=settings.lcm_max_nodes,
            store=store,
        )

    def with_field(self, field_spec: FieldSpec) -> "LabContext":
        return LabContext(
            field=field_spec,
            budget_nodes=self.budget_nodes,
            surjection_budget=self.surjection_budget,
            max_points=self.max_points,
            max_lattice_nodes=self.max_lattice_nodes,
            store=self.store,
            _lattices=self._lattices,
        )

    def lattice(self, ideal: MonomialIdeal) -> LcmLattice:
        """L_I, mémorisé par empreinte pendant l'exécution."""
        key = ideal.fingerprint
        if key not in self._lattices:
            self._lattices[key] = lcm_lattice(ideal, self.max_lattice_nodes)
        return self._lattices[key]

    def sdepth(self, ideal: MonomialIdeal, side: Side | str) -> SdepthResult:
        """
        sdepth via le cache s'il est actif; un certificat en cache est revérifié
        et ignoré s'il ne passe pas la vérification.
        """
        side = Side(side)
        if self.store is None:
            return sdepth(ideal, side, budget_nodes=self.budget_nodes, max_points=self.max_points)

        poset = characteristic_poset(ideal, side, max_points=self.max_points)
        stored = self.store.get_sdepth(ideal, side, poset.g)
        if stored is not None:
            diagnostics = verify_partition(poset, stored.certificate)
            if diagnostics.valid and diagnostics.value == stored.value:
                logger.debug(f"Cache sdepth utilisé pour {ideal.fingerprint} ({side.value})")
                return SdepthResult(ideal.n, side, stored.value, stored.certificate)
            logger.warning(f"Certificat en cache invalide pour {ideal.fingerprint}: {diagnostics.problems}")

        result = sdepth(ideal, side, budget_nodes=self.budget_nodes, max_points=self.max_points)
        self.store.put_sdepth(ideal, side, poset.g, result.value, result.certificate)
        return result
