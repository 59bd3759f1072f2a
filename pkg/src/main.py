"""
BettiLab - Point d'entrée principal.
CLI pour calculer treillis des ppcm, nombres de Betti, profondeur de Stanley
et lancer les vérifications de conjectures sur des idéaux monomiaux.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

# Ajouter le chemin du projet
PROJECT_ROOT = Path(__file__).parent.parent
sys.path.insert(0, str(PROJECT_ROOT))

from config.settings import Settings, get_settings
from src.algebra.ideal_format import parse_ideal, read_ideal_file
from src.algebra.monomials import Monomial, MonomialIdeal
from src.betti.invariants import betti_poset, betti_table, hilbert_shape_difference, homological_summary
from src.betti.taylor import format_polynomial, hilbert_numerator, scarf_complex
from src.homology.fields import FieldSpec
from src.inputs.ideal_file import IdealFileInput
from src.inputs.random_corpus import CorpusParameters, RandomCorpusInput
from src.lab import checks
from src.lab.context import LabContext
from src.lab.models import CheckReport, Verdict
from src.output.corpus_writer import gen_corpus
from src.output.report_writer import emit_report
from src.posets.lattice import meet_irreducibles
from src.storage.database import ResultStore
from src.utils.resilience import ErrorSeverity, ScanMonitor, classify_error, exit_code_for

logger = logging.getLogger("bettilab.cli")

EXIT_OK = 0
EXIT_BUDGET = 2
EXIT_VIOLATION = 3


class CliUsageError(ValueError):
    """Ligne de commande invalide."""
    pass


class _Parser(argparse.ArgumentParser):
    """Les erreurs d'arguments sont des erreurs d'usage (code 1), pas un SystemExit(2)."""

    def error(self, message):
        raise CliUsageError(message)


def _say(message: str):
    """Messages humains sur le flux d'erreur; stdout ne reçoit que les résultats."""
    print(message, file=sys.stderr)


class BettiLab:
    """
    Application principale BettiLab.
    Orchestre: lecture des idéaux → calcul ou vérification → émission.
    """

    def __init__(self, settings: Settings, fields: list[FieldSpec], budget: Optional[int] = None,
                 cache: Optional[Path] = None, out: Optional[Path] = None, fmt: str = "json"):
        self.settings = settings
        self.fields = fields
        self.field = fields[0]
        self.store = ResultStore(cache) if cache else None
        self.context = LabContext.from_settings(settings, self.field, budget, self.store)
        self.out = out
        self.fmt = fmt

    def close(self):
        if self.store:
            self.store.close()

    # === Sortie ===

    def _write(self, lines: list[str]):
        text = "".join(line + "\n" for line in lines)
        if self.out:
            self.out.parent.mkdir(parents=True, exist_ok=True)
            self.out.write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)

    def emit_payload(self, payload: dict) -> int:
        self._write([json.dumps(payload, sort_keys=True, ensure_ascii=False)])
        return EXIT_OK

    def emit_reports(self, reports: list[CheckReport]) -> int:
        """Écrit les rapports et calcule le code de sortie (3 si une violation)."""
        if self.store:
            for report in reports:
                self.store.record_report(report)
        if self.out:
            with open(self.out, "w", encoding="utf-8") as stream:
                emit_report(reports, self.fmt, stream)
        else:
            emit_report(reports, self.fmt, sys.stdout)

        violations = [r for r in reports if r.is_violation]
        if violations:
            _say(f"🚨 {len(violations)} violation(s) sur {len(reports)} rapport(s)")
            return EXIT_VIOLATION
        unknown = [r for r in reports if r.verdict == Verdict.UNKNOWN]
        if any(r.quantities.get("budget_exhausted") for r in unknown):
            _say("⏳ Verdict inconnu (budget) sur au moins un rapport")
            return EXIT_BUDGET
        if unknown:
            _say(f"❔ {len(unknown)} rapport(s) sans conclusion (hypothèse non satisfaite)")
        _say(f"✅ {len(reports)} rapport(s), aucune violation")
        return EXIT_OK

    # === Entrées ===

    @staticmethod
    def read(path: Path) -> MonomialIdeal:
        return read_ideal_file(path)

    @staticmethod
    def read_many(path: Path) -> list[MonomialIdeal]:
        with IdealFileInput(path) as source:
            return source.fetch_ideals()

    def corpus(self, args) -> list[MonomialIdeal]:
        if args.corpus is not None:
            return self.read_many(args.corpus)
        params = CorpusParameters(args.count, args.vars, args.gens, args.max_exp, args.squarefree)
        with RandomCorpusInput(params, seed=args.seed, max_retries=self.settings.random_max_retries) as source:
            return source.fetch_ideals()

    # === Calculs ===

    def lcm(self, ideal: MonomialIdeal) -> dict:
        return {"fingerprint": ideal.fingerprint, **self.context.lattice(ideal).to_json()}

    def betti(self, ideal: MonomialIdeal) -> dict:
        table = betti_table(ideal, self.field, self.context.lattice(ideal))
        return {"fingerprint": ideal.fingerprint, **table.to_json()}

    def betti_poset(self, ideal: MonomialIdeal) -> dict:
        return {"fingerprint": ideal.fingerprint, **betti_poset(ideal, self.field, self.context.lattice(ideal)).to_json()}

    def scarf(self, ideal: MonomialIdeal) -> dict:
        return {"fingerprint": ideal.fingerprint, **scarf_complex(ideal, self.settings.taylor_max_generators).to_json()}

    def hilbert(self, ideal: MonomialIdeal, source: str) -> dict:
        coefficients = hilbert_numerator(ideal, source, self.field, self.settings.taylor_max_generators)
        return {
            "fingerprint": ideal.fingerprint,
            "source": source,
            "numerator": format_polynomial(coefficients, ideal.variables),
            "coefficients": [{"deg": list(m.exponents), "c": c} for m, c in coefficients.items()],
        }

    def sdepth(self, ideal: MonomialIdeal, side: str) -> dict:
        return {"fingerprint": ideal.fingerprint, **self.context.sdepth(ideal, side).to_json()}

    def summary(self, ideal: MonomialIdeal) -> dict:
        table = betti_table(ideal, self.field, self.context.lattice(ideal))
        return {
            "fingerprint": ideal.fingerprint,
            "field": str(self.field),
            **homological_summary(ideal, self.field, table).to_json(),
        }

    def hilbert_shape(self, first: MonomialIdeal, second: MonomialIdeal) -> dict:
        difference = hilbert_shape_difference(first, second, self.field)
        return {
            "fingerprints": [first.fingerprint, second.fingerprint],
            "field": str(self.field),
            "difference": [{"deg": list(m.exponents), "alternating_sum": s} for m, s in difference],
        }

    # === Vérifications ===

    def check_onestep(self, ideal: MonomialIdeal, variable: Optional[str]) -> list[CheckReport]:
        variables = [variable] if variable else list(ideal.variables)
        return [checks.check_onestep(ideal, v, self.context) for v in variables]

    def check_conjecture(self, corpus: list[MonomialIdeal]) -> list[CheckReport]:
        reports = []
        for field in self.fields:
            monitor = ScanMonitor()
            reports.append(checks.conjecture_scan(corpus, self.context.with_field(field), monitor))
            if monitor.skipped_members:
                _say(f"⏭️  {len(monitor.skipped_members)} membre(s) ignoré(s) sur {field}")
        if len(self.fields) > 1:
            reports.append(checks.field_sensitivity(corpus, self.fields, self.context))
        return reports

    def check_reduction(self, ideal: MonomialIdeal, element: Optional[str], p: Optional[int]) -> list[CheckReport]:
        lcm = self.context.lattice(ideal)
        if element:
            degree = _parse_monomial(element, ideal)
            node = lcm.node_of(degree)
            if node is None:
                raise CliUsageError(f"{element} n'est pas un élément de L_I")
            nodes = [node]
        else:
            nodes = sorted(meet_irreducibles(lcm.lattice) - {lcm.bottom})
        return [checks.reduction_lemma_check(lcm.lattice, a, p, self.context) for a in nodes]

    def replay(self, path: Path) -> list[CheckReport]:
        """Relance chaque rapport d'un fichier JSON-lines sur le corps qu'il déclare."""
        reports = []
        for number, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
            if not line.strip():
                continue
            try:
                archived = CheckReport.from_json(json.loads(line))
            except (json.JSONDecodeError, KeyError, TypeError) as e:
                raise CliUsageError(f"{path}:{number}: rapport illisible ({e})") from e
            context = self.context.with_field(FieldSpec.parse(archived.inputs.get("field", str(self.field))))
            reports.append(checks.replay(archived, context))
        if not reports:
            raise CliUsageError(f"Aucun rapport dans {path}")
        return reports


def _parse_monomial(text: str, ideal: MonomialIdeal) -> Monomial:
    """Monôme écrit dans les variables de l'idéal (`a^2*x`)."""
    wrapped = parse_ideal(f"vars {' '.join(ideal.variables)}\ngen {text}\n")
    return wrapped.generators[0]


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    """Construit l'analyseur de la ligne de commande."""
    common = _Parser(add_help=False)
    common.add_argument(
        "--field", action="append", metavar="q|fp:<p>",
        help=f"Corps des coefficients (répétable pour check-conjecture, défaut: {settings.default_field})"
    )
    common.add_argument("--budget", type=int, help="Budget de nœuds de la recherche sdepth")
    common.add_argument("--seed", type=int, default=settings.default_seed, help="Graine des tirages aléatoires")
    common.add_argument("--format", choices=["json", "table"], default="json", help="Format des rapports")
    common.add_argument("--json", dest="format", action="store_const", const="json", help="Alias de --format json")
    common.add_argument("--out", "-o", type=Path, help="Fichier de sortie (défaut: stdout)")
    common.add_argument("--cache", type=Path, help="Base SQLite des résultats (désactivée par défaut)")

    parser = _Parser(
        prog="bettilab",
        description="BettiLab - Invariants homologiques et profondeur de Stanley des idéaux monomiaux",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Exemples:
  python src/main.py betti data/triangle.ideal --field q
  python src/main.py sdepth data/i1.ideal --side quotient
  python src/main.py check-onestep data/triangle.ideal --var z
  python src/main.py gen-corpus --count 50 --vars 4 --gens 4 --squarefree --seed 7 --out corpus/
  python src/main.py check-conjecture corpus/ --field q --field fp:2
        """
    )
    parser.add_argument(
        "--db-stats", nargs="?", const=str(settings.results_db_path), metavar="PATH",
        help="Afficher les statistiques de la base de résultats et quitter"
    )
    sub = parser.add_subparsers(dest="command")

    def command(name: str, help_text: str, files: int = 1, plural: bool = False):
        p = sub.add_parser(name, parents=[common], help=help_text)
        for i in range(files):
            p.add_argument(
                "file" if i == 0 else "file2", type=Path,
                help="Fichier .ideal" + (" ou répertoire" if plural else "")
            )
        return p

    command("lcm", "Treillis des ppcm L_I")
    command("betti", "Nombres de Betti multigradués de S/I")
    command("betti-poset", "Poset de Betti B(I)")
    command("scarf", "Complexe de Scarf comme poset")
    command("hilbert", "Numérateur de la série de Hilbert").add_argument(
        "--source", choices=["betti", "taylor"], default="betti"
    )
    command("sdepth", "Profondeur de Stanley avec certificat").add_argument(
        "--side", choices=["quotient", "ideal"], default="quotient"
    )
    command("summary", "pdim et profondeur de S/I et de I")
    command("hilbert-shape", "Éléments de B(I1) absents de B(I2) et sommes alternées", files=2)

    command("check-onestep", "Conjecture en un pas (I : v)").add_argument("--var", help="Variable (défaut: toutes)")
    for name, help_text in (
        ("check-bounds", "sdepth ≥ depth − 1 (quotient) et sdepth ≥ depth (idéal)"),
        ("check-length", "spdim bornée par la longueur de L_I"),
        ("check-small", "spdim = pdim jusqu'à cinq générateurs"),
        ("mb-chain", "Chaîne L_I ⊋ ... ⊋ M(B) à poset de Betti constant"),
    ):
        command(name, help_text, plural=True)
    for name, help_text in (
        ("check-surjection", "Monotonie de pdim et spdim le long d'une surjection"),
        ("check-generic", "Version faible pour un idéal générique"),
        ("check-superadditivity", "sdepth de la somme disjointe"),
    ):
        command(name, help_text, files=2)

    reduction = command("check-reduction", "Lemme de réduction sur L_I")
    reduction.add_argument("--element", help="Élément de L_I (monôme, défaut: tous les meet-irréductibles)")
    reduction.add_argument("--p", type=int, help="Valeur de p (défaut: pdim calculée sur le treillis)")

    replay = sub.add_parser("replay", parents=[common], help="Rejouer des rapports JSON-lines archivés")
    replay.add_argument("reports", type=Path, help="Fichier de rapports (une ligne JSON par rapport)")

    conjecture = sub.add_parser("check-conjecture", parents=[common], help="Balayage d'un corpus par classe de Betti")
    conjecture.add_argument("corpus", type=Path, nargs="?", help="Fichier ou répertoire .ideal (sinon corpus aléatoire)")
    generate = sub.add_parser("gen-corpus", parents=[common], help="Écrire un corpus aléatoire reproductible")
    for p in (conjecture, generate):
        p.add_argument("--count", type=int, default=50, help="Nombre d'idéaux")
        p.add_argument("--vars", type=int, default=4, help="Nombre de variables")
        p.add_argument("--gens", type=int, default=4, help="Nombre de générateurs minimaux")
        p.add_argument("--max-exp", type=int, default=1, help="Exposant maximal")
        p.add_argument("--squarefree", action="store_true", help="Idéaux squarefree")
    return parser


def _print_db_stats(path: Path) -> int:
    with ResultStore(path) as store:
        stats = store.get_stats()
    _say("\n📦 Statistiques de la base de résultats:")
    _say(f"   Résultats sdepth en cache: {stats['sdepth_cached']}")
    _say(f"   Rapports archivés: {stats['reports']}")
    for check, verdicts in stats["by_check"].items():
        detail = ", ".join(f"{v}: {n}" for v, n in verdicts.items())
        _say(f"     - {check}: {detail}")
    return EXIT_OK


def _run(args, settings: Settings) -> int:
    fields = [FieldSpec.parse(f) for f in (args.field or [settings.default_field])]
    if len(fields) > 1 and args.command != "check-conjecture":
        raise CliUsageError("--field n'est répétable que pour check-conjecture")

    if args.command == "gen-corpus":
        if args.out is None:
            raise CliUsageError("gen-corpus exige --out <répertoire>")
        params = CorpusParameters(args.count, args.vars, args.gens, args.max_exp, args.squarefree)
        manifest = gen_corpus(params, args.seed, args.out, settings.random_max_retries)
        _say(f"✅ {len(manifest['members'])} idéaux écrits dans {args.out}")
        return EXIT_OK

    app = BettiLab(settings, fields, args.budget, args.cache, args.out, args.format)
    try:
        c = args.command
        payloads = {
            "lcm": lambda: app.lcm(app.read(args.file)),
            "betti": lambda: app.betti(app.read(args.file)),
            "betti-poset": lambda: app.betti_poset(app.read(args.file)),
            "scarf": lambda: app.scarf(app.read(args.file)),
            "hilbert": lambda: app.hilbert(app.read(args.file), args.source),
            "sdepth": lambda: app.sdepth(app.read(args.file), args.side),
            "summary": lambda: app.summary(app.read(args.file)),
            "hilbert-shape": lambda: app.hilbert_shape(app.read(args.file), app.read(args.file2)),
        }
        if c in payloads:
            return app.emit_payload(payloads[c]())

        per_member = {
            "check-bounds": checks.stanley_bounds_check,
            "check-length": checks.length_bounds_check,
            "check-small": checks.small_generator_check,
            "mb-chain": checks.mb_chain_check,
        }
        pairs = {
            "check-surjection": checks.surjection_monotonicity_check,
            "check-generic": checks.generic_weak_check,
            "check-superadditivity": checks.superadditivity_check,
        }
        if c in per_member:
            reports = [per_member[c](ideal, app.context) for ideal in app.read_many(args.file)]
        elif c in pairs:
            reports = [pairs[c](app.read(args.file), app.read(args.file2), app.context)]
        elif c == "check-onestep":
            reports = app.check_onestep(app.read(args.file), args.var)
        elif c == "check-reduction":
            reports = app.check_reduction(app.read(args.file), args.element, args.p)
        elif c == "check-conjecture":
            reports = app.check_conjecture(app.corpus(args))
        elif c == "replay":
            reports = app.replay(args.reports)
        else:
            raise CliUsageError(f"Commande inconnue: {c}")
        return app.emit_reports(reports)
    finally:
        app.close()


def dispatch(argv: Optional[Sequence[str]] = None) -> int:
    """
    Exécute une commande et retourne le code de sortie.

    Returns:
        0 succès, 1 erreur d'usage, 2 budget épuisé, 3 verdict « violated »
    """
    settings = get_settings()
    logging.basicConfig(
        level=getattr(logging, settings.log_level.upper(), logging.INFO),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
        stream=sys.stderr,
    )

    try:
        parser = build_parser(settings)
        args = parser.parse_args(list(argv) if argv is not None else None)
        if args.db_stats:
            return _print_db_stats(Path(args.db_stats))
        if not args.command:
            parser.print_help(sys.stderr)
            return exit_code_for(CliUsageError())
        return _run(args, settings)
    except SystemExit as e:
        # --help
        return e.code if isinstance(e.code, int) else EXIT_OK
    except Exception as e:
        severity = classify_error(e)
        if severity == ErrorSeverity.BUDGET:
            _say(f"⏳ Budget épuisé: {e}")
        elif severity == ErrorSeverity.USAGE:
            _say(f"❌ {e}")
        else:
            logger.exception("Erreur inattendue")
            _say(f"❌ Erreur inattendue: {e}")
        return exit_code_for(e)


def main():
    """Point d'entrée CLI."""
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
