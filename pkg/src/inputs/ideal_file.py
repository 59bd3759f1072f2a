"""
Source de corpus locale: un fichier `.ideal` ou un répertoire de fichiers `.ideal`.
"""

import logging
from pathlib import Path
from typing import Optional, Union

from src.algebra.ideal_format import read_ideal_file
from src.algebra.monomials import MonomialIdeal
from src.inputs.base_input import BaseInput, InputError, InputRegistry

logger = logging.getLogger("bettilab.inputs")


class IdealFileInput(BaseInput):
    """
    Idéaux lus depuis le disque.

    Un répertoire est parcouru par nom de fichier croissant (`*.ideal`); une
    erreur de syntaxe dans un membre interrompt la lecture (erreur d'usage).
    """

    SOURCE_NAME = "ideal_file"
    SUFFIX = ".ideal"

    def __init__(self, path: Optional[Union[str, Path]] = None):
        super().__init__()
        self.path = Path(path) if path is not None else None
        self._files: list[Path] = []

    def is_configured(self) -> bool:
        return self.path is not None and self.path.exists()

    def connect(self) -> bool:
        """Liste les fichiers à lire."""
        if not self.is_configured():
            self._last_error = f"Fichier non trouvé: {self.path}"
            return False

        if self.path.is_dir():
            self._files = sorted(p for p in self.path.iterdir() if p.suffix == self.SUFFIX)
            if not self._files:
                self._last_error = f"Aucun fichier {self.SUFFIX} dans {self.path}"
                return False
        else:
            self._files = [self.path]
        self._connected = True
        logger.debug(f"{len(self._files)} fichier(s) dans {self.path}")
        return True

    def fetch_ideals(self, limit: Optional[int] = None) -> list[MonomialIdeal]:
        if not self._connected:
            raise InputError("Source non connectée. Appelez connect() d'abord.")
        files = self._files[:limit] if limit else self._files
        return [read_ideal_file(path) for path in files]


InputRegistry.register(IdealFileInput)
