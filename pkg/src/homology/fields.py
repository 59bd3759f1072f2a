"""
Spécification du corps des coefficients: ℚ (caractéristique 0) ou F_p.
"""

from dataclasses import dataclass

from sympy import isprime
from sympy.polys.domains import GF, QQ


@dataclass(frozen=True, order=True)
class FieldSpec:
    """Corps de coefficients; `characteristic` vaut 0 ou un nombre premier."""

    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic < 0 or (self.characteristic and not isprime(self.characteristic)):
            raise ValueError(f"Caractéristique invalide: {self.characteristic}")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Lit "q" ou "fp:<p>"."""
        value = text.strip().lower()
        if value in ("q", "qq", "0"):
            return cls(0)
        if value.startswith("fp:"):
            try:
                return cls(int(value[3:]))
            except ValueError:
                raise ValueError(f"Corps invalide: {text!r}") from None
        raise ValueError(f"Corps invalide: {text!r} (attendu q ou fp:<p>)")

    @property
    def domain(self):
        """Domaine sympy correspondant."""
        return QQ if self.characteristic == 0 else GF(self.characteristic)

    def __str__(self) -> str:
        return "q" if self.characteristic == 0 else f"fp:{self.characteristic}"


RATIONALS = FieldSpec(0)
GF2 = FieldSpec(2)
