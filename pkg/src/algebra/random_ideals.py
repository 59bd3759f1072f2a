"""
Génération reproductible d'idéaux monomiaux aléatoires (corpus de balayage).
Tout l'aléa passe par la graine: aucun état global.
"""

import logging
from typing import Optional

import numpy as np

from src.algebra.monomials import AlgebraError, Monomial, MonomialIdeal, is_generic, minimalize
from src.utils.resilience import BudgetExceeded

logger = logging.getLogger("bettilab.algebra")

DEFAULT_MAX_RETRIES = 1000


class RetriesExhausted(BudgetExceeded):
    """Aucun tirage valide après le nombre maximal d'essais."""
    pass


def variable_names(n_vars: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n_vars))


def _draw(rng: np.random.Generator, n_vars: int, n_gens: int, max_exp: int, squarefree: bool):
    high = 2 if squarefree else max_exp + 1
    return rng.integers(0, high, size=(n_gens, n_vars))


def random_ideal(
    n_vars: int,
    n_gens: int,
    max_exp: int = 1,
    squarefree: bool = False,
    seed: int = 0,
    max_retries: Optional[int] = None,
) -> MonomialIdeal:
    """
    Tire un idéal à exactement n_gens générateurs minimaux.

    Args:
        n_vars: Nombre de variables
        n_gens: Nombre de générateurs voulus (≥ 1)
        max_exp: Exposant maximal (ignoré si squarefree)
        squarefree: Exposants dans {0, 1}
        seed: Graine numpy (même graine => même idéal)
        max_retries: Nombre de tirages avant abandon

    Raises:
        RetriesExhausted: aucun tirage à n_gens survivants
    """
    if n_gens < 1 or max_exp < 1 or n_vars < 1:
        raise AlgebraError("n_vars, n_gens et max_exp doivent être ≥ 1")
    retries = max_retries if max_retries is not None else DEFAULT_MAX_RETRIES
    rng = np.random.default_rng(seed)
    variables = variable_names(n_vars)

    for _ in range(retries):
        draw = _draw(rng, n_vars, n_gens, max_exp, squarefree)
        monomials = [Monomial(tuple(int(e) for e in row)) for row in draw]
        if any(m.is_unit for m in monomials) or len(set(monomials)) != n_gens:
            continue
        if len(minimalize(monomials)) == n_gens:
            return MonomialIdeal(variables, tuple(monomials))

    raise RetriesExhausted(
        f"Pas d'idéal à {n_gens} générateurs minimaux après {retries} tirages",
        nodes=retries,
        state={"n_vars": n_vars, "n_gens": n_gens, "max_exp": max_exp, "seed": seed},
    )


def random_generic_ideal(
    n_vars: int,
    n_gens: int,
    max_exp: int,
    seed: int = 0,
    max_retries: Optional[int] = None,
) -> MonomialIdeal:
    """Échantillonnage par rejet: premier idéal générique des graines seed, seed+1, ..."""
    retries = max_retries if max_retries is not None else DEFAULT_MAX_RETRIES
    for offset in range(retries):
        ideal = random_ideal(n_vars, n_gens, max_exp, seed=seed + offset, max_retries=retries)
        if is_generic(ideal):
            return ideal
    raise RetriesExhausted(
        f"Pas d'idéal générique après {retries} graines", nodes=retries, state={"seed": seed}
    )


def random_corpus(
    count: int,
    n_vars: int,
    n_gens: int,
    max_exp: int = 1,
    squarefree: bool = False,
    seed: int = 0,
    max_retries: Optional[int] = None,
) -> list[MonomialIdeal]:
    """Corpus de `count` idéaux; le membre i utilise la graine dérivée (seed, i)."""
    corpus = []
    for i in range(count):
        member_seed = int(np.random.SeedSequence([seed, i]).generate_state(1)[0])
        corpus.append(random_ideal(n_vars, n_gens, max_exp, squarefree, member_seed, max_retries))
    logger.debug(f"Corpus de {count} idéaux (graine {seed})")
    return corpus
