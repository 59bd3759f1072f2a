"""
Modèles de données du laboratoire de conjectures.
Définit les verdicts et les rapports (CheckReport) émis par toutes les vérifications.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

REPORT_SCHEMA_VERSION = 1


class Verdict(Enum):
    """Issue d'une vérification."""
    HOLDS = "holds"
    VIOLATED = "violated"            # Événement de recherche, jamais un bogue
    UNKNOWN = "unknown"              # Budget épuisé ou précondition non établie
    NOT_APPLICABLE = "not-applicable"
    FIELD_SENSITIVE = "field-sensitive"

    @classmethod
    def from_string(cls, value: str) -> "Verdict":
        return cls(value.strip().lower())


@dataclass
class CheckReport:
    """
    Résultat d'une vérification sur des entrées concrètes.

    `inputs` contient les empreintes des idéaux et le corps; `quantities` les
    grandeurs calculées; `witness` les données nécessaires pour rejouer un
    verdict « violated » (textes `.ideal`, certificats, éléments fautifs).
    """

    check: str
    inputs: dict
    quantities: dict = field(default_factory=dict)
    verdict: Verdict = Verdict.HOLDS
    witness: Optional[dict] = None

    def __post_init__(self):
        if self.verdict == Verdict.VIOLATED and not self.witness:
            raise ValueError(f"Verdict violated sans témoin pour {self.check}")

    @property
    def fingerprint(self) -> str:
        """Clé de tri stable: première empreinte d'entrée."""
        prints = self.inputs.get("fingerprints") or [""]
        return prints[0]

    @property
    def is_violation(self) -> bool:
        return self.verdict == Verdict.VIOLATED

    def to_json(self) -> dict:
        return {
            "schema": REPORT_SCHEMA_VERSION,
            "check": self.check,
            "inputs": self.inputs,
            "quantities": self.quantities,
            "verdict": self.verdict.value,
            "witness": self.witness,
        }

    @classmethod
    def from_json(cls, data: dict) -> "CheckReport":
        if data.get("schema") != REPORT_SCHEMA_VERSION:
            raise ValueError(f"Schéma de rapport non supporté: {data.get('schema')}")
        return cls(
            check=data["check"],
            inputs=data["inputs"],
            quantities=data.get("quantities", {}),
            verdict=Verdict.from_string(data["verdict"]),
            witness=data.get("witness"),
        )


ReportList = list[CheckReport]
