"""
Configuration centralisée pour BettiLab.
Charge les variables depuis .env et fournit des valeurs par défaut.
"""

import os
from pathlib import Path
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, Field


# Charger le fichier .env depuis la racine du projet
PROJECT_ROOT = Path(__file__).parent.parent
ENV_FILE = PROJECT_ROOT / ".env"
load_dotenv(ENV_FILE)


class Settings(BaseModel):
    """Configuration de la bibliothèque et de la CLI."""

    # === Treillis des ppcm ===
    lcm_max_nodes: int = Field(
        default_factory=lambda: int(os.getenv("BETTILAB_LCM_MAX_NODES", "65536"))
    )

    # === Profondeur de Stanley ===
    sdepth_max_points: int = Field(
        default_factory=lambda: int(os.getenv("BETTILAB_SDEPTH_MAX_POINTS", "1000000"))
    )
    sdepth_budget_nodes: int = Field(
        default_factory=lambda: int(os.getenv("BETTILAB_SDEPTH_BUDGET", "100000000"))
    )

    # === Laboratoire de conjectures ===
    surjection_budget_nodes: int = Field(
        default_factory=lambda: int(os.getenv("BETTILAB_SURJECTION_BUDGET", "1000000"))
    )
    taylor_max_generators: int = Field(
        default_factory=lambda: int(os.getenv("BETTILAB_TAYLOR_MAX_GENERATORS", "20"))
    )
    random_max_retries: int = Field(
        default_factory=lambda: int(os.getenv("BETTILAB_RANDOM_RETRIES", "1000"))
    )

    # === Valeurs par défaut de la CLI ===
    default_field: str = Field(
        default_factory=lambda: os.getenv("BETTILAB_FIELD", "q")
    )
    default_seed: int = Field(
        default_factory=lambda: int(os.getenv("BETTILAB_SEED", "0"))
    )
    log_level: str = Field(
        default_factory=lambda: os.getenv("BETTILAB_LOG_LEVEL", "INFO")
    )

    # === Chemins ===
    project_root: Path = PROJECT_ROOT
    data_dir: Path = Field(default_factory=lambda: PROJECT_ROOT / "data")
    results_db_path: Path = Field(
        default_factory=lambda: Path(
            os.getenv("BETTILAB_RESULTS_DB", str(PROJECT_ROOT / "data" / "results.db"))
        )
    )

    class Config:
        arbitrary_types_allowed = True

    def validate_config(self) -> list[str]:
        """Vérifie la configuration et retourne les erreurs éventuelles."""
        errors = []

        for name in (
            "lcm_max_nodes",
            "sdepth_max_points",
            "sdepth_budget_nodes",
            "surjection_budget_nodes",
            "taylor_max_generators",
            "random_max_retries",
        ):
            if getattr(self, name) <= 0:
                errors.append(f"{name} doit être strictement positif")

        # Import local: src dépend de config, pas l'inverse
        from src.homology.fields import FieldSpec

        try:
            FieldSpec.parse(self.default_field)
        except ValueError as e:
            errors.append(f"BETTILAB_FIELD invalide: {e}")

        return errors


@lru_cache()
def get_settings() -> Settings:
    """Retourne une instance singleton des settings."""
    return Settings()


if __name__ == "__main__":
    # Test de la configuration
    s = get_settings()
    print(f"Projet: {s.project_root}")
    print(f"Plafond treillis: {s.lcm_max_nodes} éléments")
    print(f"Budget sdepth: {s.sdepth_budget_nodes} nœuds")
    print(f"Corps par défaut: {s.default_field}")

    errors = s.validate_config()
    if errors:
        print("\n⚠️ Erreurs de configuration:")
        for e in errors:
            print(f"  - {e}")
    else:
        print("\n✅ Configuration valide")
