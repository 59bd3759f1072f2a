"""
Source de corpus aléatoire reproductible (graine explicite).
"""

import logging
from dataclasses import asdict, dataclass
from typing import Optional

from src.algebra.monomials import MonomialIdeal
from src.algebra.random_ideals import random_corpus
from src.inputs.base_input import BaseInput, InputError, InputRegistry

logger = logging.getLogger("bettilab.inputs")


@dataclass(frozen=True)
class CorpusParameters:
    """Paramètres d'un corpus aléatoire; avec la graine, ils déterminent le corpus."""
    count: int
    n_vars: int
    n_gens: int
    max_exp: int = 1
    squarefree: bool = False

    def to_json(self) -> dict:
        return asdict(self)


class RandomCorpusInput(BaseInput):
    """Corpus tiré par random_corpus; même graine, mêmes idéaux."""

    SOURCE_NAME = "random"

    def __init__(
        self,
        params: Optional[CorpusParameters] = None,
        seed: int = 0,
        max_retries: Optional[int] = None,
    ):
        super().__init__()
        self.params = params
        self.seed = seed
        self.max_retries = max_retries

    def is_configured(self) -> bool:
        p = self.params
        return p is not None and p.count >= 0 and p.n_vars >= 1 and p.n_gens >= 1 and p.max_exp >= 1

    def connect(self) -> bool:
        if not self.is_configured():
            self._last_error = f"Paramètres de corpus invalides: {self.params}"
            return False
        self._connected = True
        return True

    def fetch_ideals(self, limit: Optional[int] = None) -> list[MonomialIdeal]:
        if not self._connected:
            raise InputError("Source non connectée. Appelez connect() d'abord.")
        p = self.params
        count = min(p.count, limit) if limit else p.count
        logger.info(f"Tirage de {count} idéaux ({p.n_vars} variables, {p.n_gens} générateurs, graine {self.seed})")
        return random_corpus(
            count, p.n_vars, p.n_gens, p.max_exp, p.squarefree, seed=self.seed, max_retries=self.max_retries
        )


InputRegistry.register(RandomCorpusInput)
