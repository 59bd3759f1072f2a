# Output module - Rapports et corpus
from .corpus_writer import MANIFEST_NAME, gen_corpus
from .report_writer import ReportFormat, emit_report, report_lines, report_table

__all__ = ["MANIFEST_NAME", "ReportFormat", "emit_report", "gen_corpus", "report_lines", "report_table"]
