"""
Utilitaires de résilience - budgets, classification des erreurs, suivi des corpus.
Permet aux balayages de corpus de continuer quand un membre dépasse son budget.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Optional, TypeVar

logger = logging.getLogger("bettilab")


class ErrorSeverity(Enum):
    """Niveau de sévérité des erreurs (détermine le code de sortie)."""
    USAGE = "usage"      # Entrée invalide (syntaxe, variable inconnue) - code 1
    BUDGET = "budget"    # Budget de calcul épuisé - code 2, résultat inconnu
    FATAL = "fatal"      # Erreur inattendue


class BudgetExceeded(Exception):
    """
    Budget de calcul épuisé.

    Distingue « inconnu » de « non » : l'appelant ne doit jamais
    interpréter cette exception comme un verdict négatif.
    """

    def __init__(self, message: str, nodes: int = 0, state: Optional[dict] = None):
        super().__init__(message)
        self.nodes = nodes
        self.state = state or {}


EXIT_CODES = {
    ErrorSeverity.USAGE: 1,
    ErrorSeverity.BUDGET: 2,
    ErrorSeverity.FATAL: 1,
}


def classify_error(error: Exception) -> ErrorSeverity:
    """
    Classifie une erreur selon sa sévérité.

    Args:
        error: L'exception à classifier

    Returns:
        ErrorSeverity indiquant comment gérer l'erreur
    """
    if isinstance(error, BudgetExceeded):
        return ErrorSeverity.BUDGET

    # Erreurs d'entrée: fichiers, syntaxe, arguments
    if isinstance(error, (ValueError, KeyError, OSError)):
        return ErrorSeverity.USAGE

    return ErrorSeverity.FATAL


def exit_code_for(error: Exception) -> int:
    """Code de sortie de la CLI pour une exception donnée."""
    return EXIT_CODES[classify_error(error)]


@dataclass
class MemberHealth:
    """Bilan d'un membre de corpus."""
    member: str
    successes: int = 0
    skipped: int = 0
    last_error: Optional[str] = None
    severity: Optional[ErrorSeverity] = None

    @property
    def is_healthy(self) -> bool:
        return self.skipped == 0

    def record_success(self):
        """Enregistre un succès."""
        self.successes += 1

    def record_failure(self, error: Exception):
        """Enregistre un membre ignoré."""
        self.skipped += 1
        self.last_error = str(error)
        self.severity = classify_error(error)


@dataclass
class ScanMonitor:
    """Suivi des membres traités ou ignorés pendant un balayage."""
    _members: dict[str, MemberHealth] = field(default_factory=dict)

    def get_health(self, member: str) -> MemberHealth:
        """Récupère ou crée le bilan d'un membre."""
        if member not in self._members:
            self._members[member] = MemberHealth(member=member)
        return self._members[member]

    def record_success(self, member: str):
        self.get_health(member).record_success()

    def record_failure(self, member: str, error: Exception):
        self.get_health(member).record_failure(error)

    @property
    def skipped_members(self) -> list[str]:
        return sorted(name for name, h in self._members.items() if not h.is_healthy)

    @property
    def budget_exhausted(self) -> bool:
        """Au moins un membre a été ignoré faute de budget."""
        return any(h.severity == ErrorSeverity.BUDGET for h in self._members.values())



T = TypeVar("T")


def safe_execute(
    func: Callable[..., T],
    *args: Any,
    default: Optional[T] = None,
    member: Optional[str] = None,
    monitor: Optional[ScanMonitor] = None,
    **kwargs: Any,
) -> tuple[Optional[T], Optional[Exception]]:
    """
    Exécute un calcul sur un membre de corpus sans interrompre le balayage.

    Seul un budget épuisé est absorbé; les autres erreurs remontent.

    Args:
        func: Calcul à exécuter
        *args: Arguments positionnels
        default: Valeur renvoyée si le budget est épuisé
        member: Nom du membre (empreinte) pour le suivi
        monitor: ScanMonitor à mettre à jour
        **kwargs: Arguments nommés

    Returns:
        Tuple (résultat, exception) - exception est None si succès
    """
    try:
        result = func(*args, **kwargs)
    except BudgetExceeded as e:
        if monitor is not None and member:
            monitor.record_failure(member, e)
        logger.warning(f"⏳ Membre ignoré {member or '?'}: {e}")
        return default, e

    if monitor is not None and member:
        monitor.record_success(member)
    return result, None
