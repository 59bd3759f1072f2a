"""
Classe abstraite pour les sources de corpus d'idéaux.
Définit l'interface commune aux fichiers `.ideal` et aux générateurs aléatoires.
"""

from abc import ABC, abstractmethod
from typing import Optional

from src.algebra.monomials import MonomialIdeal


class InputError(ValueError):
    """Erreur lors de la récupération des idéaux depuis une source."""
    pass


class BaseInput(ABC):
    """
    Classe abstraite pour les sources d'idéaux.

    Pour ajouter une nouvelle source:
    1. Créer un fichier dans src/inputs/
    2. Hériter de BaseInput
    3. Implémenter les méthodes abstraites
    4. Ajouter la source dans le registre (voir InputRegistry)
    """

    # Nom unique de la source (à définir dans chaque sous-classe)
    SOURCE_NAME: str = "base"

    def __init__(self):
        self._connected = False
        self._last_error: Optional[str] = None

    @property
    def source_name(self) -> str:
        return self.SOURCE_NAME

    @property
    def is_connected(self) -> bool:
        return self._connected

    @property
    def last_error(self) -> Optional[str]:
        return self._last_error

    @abstractmethod
    def connect(self) -> bool:
        """
        Prépare la source (lecture des fichiers, initialisation du générateur).

        Returns:
            True si la source est prête; sinon l'erreur est dans last_error
        """
        pass

    @abstractmethod
    def fetch_ideals(self, limit: Optional[int] = None) -> list[MonomialIdeal]:
        """
        Récupère les idéaux de la source, dans un ordre déterministe.

        Args:
            limit: Nombre maximum d'idéaux (None = tous)

        Raises:
            InputError: source non connectée ou illisible
        """
        pass

    @abstractmethod
    def is_configured(self) -> bool:
        pass

    def disconnect(self):
        self._connected = False

    def __enter__(self):
        if not self.connect():
            raise InputError(self._last_error or f"Source {self.SOURCE_NAME} indisponible")
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.disconnect()
        return False  # Ne pas supprimer les exceptions


class InputRegistry:
    """
    Registre des sources de corpus disponibles.
    """

    _sources: dict[str, type[BaseInput]] = {}

    @classmethod
    def register(cls, source_class: type[BaseInput]):
        cls._sources[source_class.SOURCE_NAME] = source_class

    @classmethod
    def get(cls, source_name: str) -> Optional[type[BaseInput]]:
        return cls._sources.get(source_name)

    @classmethod
    def list_sources(cls) -> list[str]:
        return list(cls._sources.keys())

    @classmethod
    def create(cls, source_name: str, **kwargs) -> Optional[BaseInput]:
        """
        Crée une instance de source.

        Args:
            source_name: Nom de la source
            **kwargs: Arguments à passer au constructeur

        Returns:
            Instance de la source ou None
        """
        source_class = cls.get(source_name)
        if source_class:
            return source_class(**kwargs)
        return None
