"""
Storage module - Persistance des résultats de calcul.
"""

from src.storage.database import ResultStore, StoredSdepth

__all__ = ["ResultStore", "StoredSdepth"]
