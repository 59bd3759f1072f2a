"""
ResultStore - Stockage SQLite des résultats de calcul.
Met en cache les certificats de profondeur de Stanley et archive les rapports
de vérification.
"""

import hashlib
import json
import logging
import sqlite3
from dataclasses import dataclass
from datetime import datetime
from pathlib import Path
from typing import TYPE_CHECKING, Optional, Sequence

from src.algebra.monomials import MonomialIdeal
from src.stanley.characteristic import Side
from src.stanley.decomposition import IntervalPartition

if TYPE_CHECKING:
    from src.lab.models import CheckReport

logger = logging.getLogger("bettilab.storage")


@dataclass
class StoredSdepth:
    """Ligne de cache sdepth (le certificat doit être revérifié avant usage)."""
    key: str
    fingerprint: str
    side: Side
    g: tuple[int, ...]
    value: int
    certificate: IntervalPartition
    computed_at: datetime


class ResultStore:
    """
    Base SQLite des résultats.

    La clé d'un résultat sdepth est un hash de (empreinte de l'idéal, côté, g):
    le même idéal écrit dans un autre ordre retombe sur la même ligne.
    """

    DEFAULT_DB_PATH = Path("data/results.db")

    def __init__(self, db_path: Optional[Path] = None):
        """
        Initialise la connexion à la base de données.

        Args:
            db_path: Chemin vers le fichier SQLite (défaut: data/results.db)
        """
        self.db_path = Path(db_path) if db_path else self.DEFAULT_DB_PATH
        self.db_path.parent.mkdir(parents=True, exist_ok=True)
        self._conn: Optional[sqlite3.Connection] = None
        self._init_db()

    def _init_db(self):
        """Crée les tables si elles n'existent pas."""
        conn = self._get_connection()
        cursor = conn.cursor()

        cursor.execute("""
            CREATE TABLE IF NOT EXISTS sdepth_results (
                result_key TEXT PRIMARY KEY,
                fingerprint TEXT NOT NULL,
                side TEXT NOT NULL,
                g TEXT NOT NULL,
                value INTEGER NOT NULL,
                certificate TEXT NOT NULL,
                computed_at TIMESTAMP DEFAULT CURRENT_TIMESTAMP
            )
        """)

        cursor.execute("""
            CREATE TABLE IF NOT EXISTS check_reports (
                id INTEGER PRIMARY KEY AUTOINCREMENT,
                fingerprint TEXT NOT NULL,
                check_name TEXT NOT NULL,
                verdict TEXT NOT NULL,
                report TEXT NOT NULL,
                recorded_at TIMESTAMP DEFAULT CURRENT_TIMESTAMP
            )
        """)

        cursor.execute("""
            CREATE INDEX IF NOT EXISTS idx_sdepth_fingerprint ON sdepth_results(fingerprint)
        """)
        cursor.execute("""
            CREATE INDEX IF NOT EXISTS idx_report_check ON check_reports(check_name, verdict)
        """)

        conn.commit()

    def _get_connection(self) -> sqlite3.Connection:
        """Retourne une connexion à la base (lazy loading)."""
        if self._conn is None:
            self._conn = sqlite3.connect(
                str(self.db_path),
                detect_types=sqlite3.PARSE_DECLTYPES | sqlite3.PARSE_COLNAMES
            )
            self._conn.row_factory = sqlite3.Row
        return self._conn

    @staticmethod
    def compute_key(fingerprint: str, side: Side, g: Sequence[int]) -> str:
        """
        Hash identifiant un résultat sdepth.

        Returns:
            Hash SHA256 tronqué à 16 caractères
        """
        content = f"{fingerprint}|{Side(side).value}|{','.join(map(str, g))}"
        return hashlib.sha256(content.encode("utf-8")).hexdigest()[:16]

    def get_sdepth(self, ideal: MonomialIdeal, side: Side, g: Sequence[int]) -> Optional[StoredSdepth]:
        """
        Récupère un résultat en cache.

        Returns:
            StoredSdepth si trouvé et lisible, None sinon
        """
        key = self.compute_key(ideal.fingerprint, side, g)
        cursor = self._get_connection().cursor()
        cursor.execute("SELECT * FROM sdepth_results WHERE result_key = ?", (key,))
        row = cursor.fetchone()
        if row is None:
            return None

        try:
            certificate = IntervalPartition.from_json(json.loads(row["certificate"]))
        except (ValueError, KeyError, TypeError) as e:
            logger.warning(f"Ligne de cache {key} illisible, ignorée: {e}")
            return None

        return StoredSdepth(
            key=key,
            fingerprint=row["fingerprint"],
            side=Side(row["side"]),
            g=tuple(json.loads(row["g"])),
            value=row["value"],
            certificate=certificate,
            computed_at=row["computed_at"],
        )

    def put_sdepth(
        self, ideal: MonomialIdeal, side: Side, g: Sequence[int], value: int, certificate: IntervalPartition
    ) -> bool:
        """
        Enregistre (ou remplace) un résultat sdepth.

        Returns:
            True si l'écriture a réussi
        """
        key = self.compute_key(ideal.fingerprint, side, g)
        conn = self._get_connection()
        try:
            conn.execute("""
                INSERT OR REPLACE INTO sdepth_results
                (result_key, fingerprint, side, g, value, certificate, computed_at)
                VALUES (?, ?, ?, ?, ?, ?, ?)
            """, (
                key,
                ideal.fingerprint,
                Side(side).value,
                json.dumps(list(g)),
                value,
                json.dumps(certificate.to_json(), sort_keys=True),
                datetime.now(),
            ))
            conn.commit()
            return True
        except sqlite3.Error as e:
            logger.warning(f"Écriture du cache impossible: {e}")
            return False

    def record_report(self, report: "CheckReport") -> bool:
        """Archive un rapport de vérification."""
        conn = self._get_connection()
        try:
            conn.execute("""
                INSERT INTO check_reports (fingerprint, check_name, verdict, report, recorded_at)
                VALUES (?, ?, ?, ?, ?)
            """, (
                report.fingerprint,
                report.check,
                report.verdict.value,
                json.dumps(report.to_json(), sort_keys=True),
                datetime.now(),
            ))
            conn.commit()
            return True
        except sqlite3.Error as e:
            logger.warning(f"Archivage du rapport impossible: {e}")
            return False

    def get_stats(self) -> dict:
        """
        Retourne des statistiques sur la base.

        Returns:
            dict avec le nombre de résultats sdepth et les rapports par vérification et verdict
        """
        cursor = self._get_connection().cursor()

        cursor.execute("SELECT COUNT(*) FROM sdepth_results")
        cached = cursor.fetchone()[0]

        cursor.execute("""
            SELECT check_name, verdict, COUNT(*) as count
            FROM check_reports
            GROUP BY check_name, verdict
            ORDER BY check_name, verdict
        """)
        by_check: dict[str, dict[str, int]] = {}
        total = 0
        for row in cursor.fetchall():
            by_check.setdefault(row["check_name"], {})[row["verdict"]] = row["count"]
            total += row["count"]

        return {
            "sdepth_cached": cached,
            "reports": total,
            "by_check": by_check,
        }

    def close(self):
        """Ferme la connexion à la base."""
        if self._conn:
            self._conn.close()
            self._conn = None

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.close()
