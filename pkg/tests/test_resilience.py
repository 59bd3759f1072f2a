"""
Tests de l'exécution protégée des membres de corpus et du suivi des balayages.
"""

import pytest

from src.algebra.lcm_lattice import TooLarge, lcm_lattice
from src.utils.resilience import BudgetExceeded, ErrorSeverity, ScanMonitor, exit_code_for, safe_execute


class TestSafeExecute:

    def test_success_is_recorded(self, triangle):
        monitor = ScanMonitor()
        result, error = safe_execute(lcm_lattice, triangle, member="triangle", monitor=monitor)
        assert error is None
        assert result.size == 5
        assert monitor.get_health("triangle").successes == 1
        assert monitor.skipped_members == []

    def test_budget_is_absorbed(self, maximal_ideal):
        monitor = ScanMonitor()
        result, error = safe_execute(
            lcm_lattice, maximal_ideal, max_nodes=6, default="aucun", member="maximal", monitor=monitor
        )
        assert result == "aucun"
        assert isinstance(error, TooLarge)
        assert monitor.skipped_members == ["maximal"]
        assert monitor.get_health("maximal").severity == ErrorSeverity.BUDGET
        assert monitor.budget_exhausted

    def test_without_monitor(self):
        def exhausted():
            raise BudgetExceeded("plus de nœuds", nodes=3)

        result, error = safe_execute(exhausted)
        assert result is None
        assert error.nodes == 3

    def test_other_errors_propagate(self):
        monitor = ScanMonitor()
        with pytest.raises(ZeroDivisionError):
            safe_execute(lambda: 1 // 0, member="m", monitor=monitor)
        assert monitor.skipped_members == []


class TestExitCodes:

    @pytest.mark.parametrize("error, code", [
        (BudgetExceeded("budget"), 2),
        (TooLarge("trop grand"), 2),
        (ValueError("syntaxe"), 1),
        (RuntimeError("bug"), 1),
    ])
    def test_codes(self, error, code):
        assert exit_code_for(error) == code
