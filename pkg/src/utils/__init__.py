"""
Utilitaires pour BettiLab.
"""

from src.utils.resilience import (
    BudgetExceeded,
    ErrorSeverity,
    classify_error,
    exit_code_for,
    safe_execute,
    MemberHealth,
    ScanMonitor,
)

__all__ = [
    "BudgetExceeded",
    "ErrorSeverity",
    "classify_error",
    "exit_code_for",
    "safe_execute",
    "MemberHealth",
    "ScanMonitor",
]
