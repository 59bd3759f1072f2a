"""
Tests du cache SQLite des résultats et de sa revérification par LabContext.
"""

import pytest

from src.lab import LabContext, stanley_bounds_check
from src.stanley import IntervalPartition, Side, characteristic_poset, sdepth
from src.storage.database import ResultStore


@pytest.fixture
def store(tmp_path):
    with ResultStore(tmp_path / "cache" / "results.db") as db:
        yield db


class TestResultStore:

    def test_put_and_get(self, store, triangle):
        result = sdepth(triangle)
        g = (1, 1, 1)
        assert store.put_sdepth(triangle, Side.QUOTIENT, g, result.value, result.certificate)
        stored = store.get_sdepth(triangle, Side.QUOTIENT, g)
        assert stored.value == 1
        assert stored.certificate == result.certificate
        assert stored.side == Side.QUOTIENT
        assert stored.g == g

    def test_key_depends_on_side_and_cap(self, store, triangle):
        result = sdepth(triangle)
        store.put_sdepth(triangle, Side.QUOTIENT, (1, 1, 1), result.value, result.certificate)
        assert store.get_sdepth(triangle, Side.IDEAL, (1, 1, 1)) is None
        assert store.get_sdepth(triangle, Side.QUOTIENT, (2, 2, 2)) is None

    def test_unreadable_row_is_ignored(self, store, triangle):
        key = store.compute_key(triangle.fingerprint, Side.QUOTIENT, (1, 1, 1))
        conn = store._get_connection()
        conn.execute(
            "INSERT INTO sdepth_results (result_key, fingerprint, side, g, value, certificate) "
            "VALUES (?, ?, ?, ?, ?, ?)",
            (key, triangle.fingerprint, "quotient", "[1, 1, 1]", 3, "{pas du json"),
        )
        conn.commit()
        assert store.get_sdepth(triangle, Side.QUOTIENT, (1, 1, 1)) is None

    def test_stats(self, store, triangle):
        store.record_report(stanley_bounds_check(triangle))
        stats = store.get_stats()
        assert stats["reports"] == 1
        assert stats["by_check"] == {"stanley-bounds": {"holds": 1}}
        assert stats["sdepth_cached"] == 0


class TestCachedContext:

    def test_results_are_cached(self, store, triangle):
        context = LabContext(store=store)
        first = context.sdepth(triangle, "ideal")
        assert store.get_stats()["sdepth_cached"] == 1
        assert context.sdepth(triangle, "ideal") == first

    def test_tampered_certificate_is_recomputed(self, store, triangle):
        poset = characteristic_poset(triangle)
        # Valeur 3 annoncée avec un seul intervalle: ne couvre pas P
        forged = IntervalPartition(poset.g, Side.QUOTIENT, (((0, 0, 0), (1, 0, 0)),))
        store.put_sdepth(triangle, Side.QUOTIENT, poset.g, 3, forged)

        result = LabContext(store=store).sdepth(triangle, Side.QUOTIENT)
        assert result.value == 1
        repaired = store.get_sdepth(triangle, Side.QUOTIENT, poset.g)
        assert repaired.value == 1
        assert repaired.certificate.value == 1
