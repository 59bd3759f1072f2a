"""
Format texte `.ideal`.

    # commentaire
    vars a b c x y
    gen a^2*x^2
    gen a*b*c*x*y

Une ligne `vars` (avant tout générateur), puis une ligne `gen` par générateur;
un facteur s'écrit `v` ou `v^k` avec k ≥ 1, les facteurs séparés par `*`.
"""

import logging
import re
from pathlib import Path
from typing import Union

from src.algebra.monomials import (
    AlgebraError,
    Monomial,
    MonomialIdeal,
    UnitGenerator,
    UnknownVariable,
)

logger = logging.getLogger("bettilab.algebra")

VARIABLE_PATTERN = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")
FACTOR_PATTERN = re.compile(r"^([A-Za-z][A-Za-z0-9_]*)(?:\^(\d+))?$")


class IdealSyntaxError(AlgebraError):
    """Texte `.ideal` mal formé; `line` est le numéro de ligne (à partir de 1)."""

    def __init__(self, message: str, line: int):
        super().__init__(f"Ligne {line}: {message}")
        self.line = line


def _parse_monomial(text: str, variables: tuple[str, ...], line: int) -> Monomial:
    exponents = [0] * len(variables)
    if text.strip() == "1":
        raise UnitGenerator(f"Ligne {line}: le générateur 1 est interdit")
    for raw in text.split("*"):
        factor = raw.strip()
        match = FACTOR_PATTERN.match(factor)
        if not match:
            raise IdealSyntaxError(f"facteur invalide {factor!r}", line)
        name, power = match.group(1), match.group(2)
        if name not in variables:
            raise UnknownVariable(f"Ligne {line}: variable inconnue {name!r}")
        k = int(power) if power is not None else 1
        if k < 1:
            raise IdealSyntaxError(f"exposant nul pour {name}", line)
        exponents[variables.index(name)] += k
    return Monomial(tuple(exponents))


def parse_ideal(text: str) -> MonomialIdeal:
    """
    Lit un idéal au format `.ideal` et le minimalise.

    Raises:
        IdealSyntaxError: ligne mal formée, `vars` manquant ou répété, aucun `gen`
        UnknownVariable: facteur sur une variable non déclarée
        UnitGenerator: générateur égal à 1
    """
    variables: tuple[str, ...] | None = None
    generators: list[Monomial] = []

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()

        if keyword == "vars":
            if variables is not None:
                raise IdealSyntaxError("ligne `vars` répétée", number)
            names = rest.split()
            if not names:
                raise IdealSyntaxError("aucune variable déclarée", number)
            for name in names:
                if not VARIABLE_PATTERN.match(name):
                    raise IdealSyntaxError(f"nom de variable invalide {name!r}", number)
            if len(set(names)) != len(names):
                raise IdealSyntaxError("variable déclarée deux fois", number)
            variables = tuple(names)
        elif keyword == "gen":
            if variables is None:
                raise IdealSyntaxError("`gen` avant `vars`", number)
            if not rest:
                raise IdealSyntaxError("générateur vide", number)
            generators.append(_parse_monomial(rest, variables, number))
        else:
            raise IdealSyntaxError(f"mot-clé inconnu {keyword!r}", number)

    if variables is None:
        raise IdealSyntaxError("ligne `vars` manquante", 1)
    if not generators:
        raise IdealSyntaxError("aucun générateur", max(1, len(text.splitlines())))
    return MonomialIdeal.from_generators(variables, generators)


def format_ideal(ideal: MonomialIdeal) -> str:
    """Texte canonique: générateurs minimaux en ordre lexicographique."""
    lines = ["vars " + " ".join(ideal.variables)]
    lines += [f"gen {g.format(ideal.variables)}" for g in ideal.generators]
    return "\n".join(lines) + "\n"


def read_ideal_file(path: Union[str, Path]) -> MonomialIdeal:
    path = Path(path)
    logger.debug(f"Lecture de {path}")
    return parse_ideal(path.read_text(encoding="utf-8"))


def write_ideal_file(ideal: MonomialIdeal, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_ideal(ideal), encoding="utf-8")
    return path
