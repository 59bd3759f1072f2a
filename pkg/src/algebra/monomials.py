"""
Monômes et idéaux monomiaux: générateurs minimaux, idéal quotient par une
variable, somme en variables disjointes, généricité.
"""

import hashlib
import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

logger = logging.getLogger("bettilab.algebra")


class AlgebraError(ValueError):
    """Erreur sur un monôme ou un idéal monomial."""
    pass


class UnknownVariable(AlgebraError):
    pass


class UnitGenerator(AlgebraError):
    """Un générateur vaut 1: l'idéal serait l'anneau entier."""
    pass


class EmptyAfterMinimalization(AlgebraError):
    pass


@dataclass(frozen=True, order=True)
class Monomial:
    """Monôme x^a, représenté par son vecteur d'exposants."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise AlgebraError(f"Exposant négatif dans {self.exponents}")

    @classmethod
    def unit(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    def __len__(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def is_unit(self) -> bool:
        return not any(self.exponents)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(j for j, e in enumerate(self.exponents) if e)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def format(self, variables: Sequence[str]) -> str:
        """Écriture `a^2*x` (1 pour le monôme unité)."""
        factors = [
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(variables, self.exponents)
            if e
        ]
        return "*".join(factors) if factors else "1"


def lcm_of(monomials: Iterable[Monomial], n: int) -> Monomial:
    """ppcm d'une famille (le ppcm vide vaut 1)."""
    result = Monomial.unit(n)
    for m in monomials:
        result = result.lcm(m)
    return result


def minimalize(generators: Sequence[Monomial]) -> list[Monomial]:
    """
    Générateurs minimaux pour la divisibilité, ordre d'origine des survivants conservé.

    Raises:
        EmptyAfterMinimalization: si la liste d'entrée est vide
    """
    if not generators:
        raise EmptyAfterMinimalization("Aucun générateur")
    survivors: list[Monomial] = []
    for i, m in enumerate(generators):
        dominated = any(
            other.divides(m) and (other != m or j < i)
            for j, other in enumerate(generators)
            if j != i
        )
        if not dominated:
            survivors.append(m)
    return survivors


@dataclass(frozen=True)
class MonomialIdeal:
    """
    Idéal monomial donné par ses générateurs minimaux, rangés dans l'ordre
    lexicographique des vecteurs d'exposants.
    """

    variables: tuple[str, ...]
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        n = len(self.variables)
        if len(set(self.variables)) != n:
            raise AlgebraError("Variables dupliquées")
        if not self.generators:
            raise EmptyAfterMinimalization("Un idéal a au moins un générateur")
        for g in self.generators:
            if len(g) != n:
                raise AlgebraError(f"Monôme de longueur {len(g)} dans un anneau à {n} variables")
            if g.is_unit:
                raise UnitGenerator("Le générateur 1 est interdit")
        for i, g in enumerate(self.generators):
            for j, h in enumerate(self.generators):
                if i != j and g.divides(h):
                    raise AlgebraError(
                        f"Générateurs non minimaux: {g.format(self.variables)} divise {h.format(self.variables)}"
                    )
        object.__setattr__(self, "generators", tuple(sorted(self.generators)))

    @classmethod
    def from_generators(cls, variables: Sequence[str], generators: Sequence[Monomial]) -> "MonomialIdeal":
        """Construit l'idéal après minimalisation."""
        return cls(tuple(variables), tuple(minimalize(list(generators))))

    @property
    def n(self) -> int:
        return len(self.variables)

    @property
    def is_squarefree(self) -> bool:
        return all(g.is_squarefree for g in self.generators)

    def variable_index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise UnknownVariable(f"Variable inconnue: {name}") from None

    def contains(self, m: Monomial) -> bool:
        """Appartenance d'un monôme à l'idéal."""
        return any(g.divides(m) for g in self.generators)

    def lcm(self) -> Monomial:
        return lcm_of(self.generators, self.n)

    def format(self) -> str:
        return "(" + ", ".join(g.format(self.variables) for g in self.generators) + ")"

    @property
    def fingerprint(self) -> str:
        """Hash stable du texte canonique (indépendant de l'ordre d'entrée)."""
        from src.algebra.ideal_format import format_ideal

        content = format_ideal(self)
        return hashlib.sha256(content.encode("utf-8")).hexdigest()[:16]


def colon_by_variable(ideal: MonomialIdeal, variable: str) -> MonomialIdeal:
    """
    (I : v): l'exposant en v de chaque générateur diminue de 1 (plancher 0),
    puis minimalisation.

    Raises:
        UnknownVariable: v n'est pas une variable de l'anneau
        UnitGenerator: l'idéal quotient est l'anneau entier
    """
    j = ideal.variable_index(variable)
    reduced = [
        Monomial(tuple(max(e - 1, 0) if k == j else e for k, e in enumerate(g.exponents)))
        for g in ideal.generators
    ]
    if any(m.is_unit for m in reduced):
        raise UnitGenerator(f"({ideal.format()} : {variable}) est l'anneau entier")
    return MonomialIdeal.from_generators(ideal.variables, reduced)


def _rename_apart(first: Sequence[str], second: Sequence[str]) -> list[str]:
    taken = set(first)
    renamed = []
    for name in second:
        candidate = name
        suffix = 2
        while candidate in taken:
            candidate = f"{name}_{suffix}"
            suffix += 1
        taken.add(candidate)
        renamed.append(candidate)
    return renamed


def disjoint_sum(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    """
    I + I' dans l'anneau aux variables concaténées (renommées si collision):
    S/I ⊗ S'/I' = S''/(I + I').
    """
    variables = list(first.variables) + _rename_apart(first.variables, second.variables)
    pad_right = (0,) * second.n
    pad_left = (0,) * first.n
    generators = [Monomial(g.exponents + pad_right) for g in first.generators]
    generators += [Monomial(pad_left + g.exponents) for g in second.generators]
    return MonomialIdeal(tuple(variables), tuple(generators))


def strictly_divides(m: Monomial, target: Monomial) -> bool:
    """m divise target / x_j pour toute variable x_j du support de target."""
    return all(
        (a < b) if b > 0 else a == 0
        for a, b in zip(m.exponents, target.exponents)
    )


def is_generic(ideal: MonomialIdeal) -> bool:
    """
    Généricité au sens de Miller-Sturmfels-Yanagawa: dès que deux générateurs
    distincts ont le même exposant strictement positif en une variable, un
    troisième générateur divise strictement leur ppcm.
    """
    gens = ideal.generators
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            a, b = gens[i].exponents, gens[j].exponents
            if not any(x == y and x > 0 for x, y in zip(a, b)):
                continue
            target = gens[i].lcm(gens[j])
            if not any(
                strictly_divides(gens[k], target)
                for k in range(len(gens))
                if k not in (i, j)
            ):
                return False
    return True
