# Lab module - Vérifications de conjectures et de théorèmes
from .checks import (
    NotGeneric,
    NotSquarefree,
    betti_form,
    check_onestep,
    conjecture_scan,
    field_sensitivity,
    generic_weak_check,
    lattice_pdim,
    length_bounds_check,
    mb_chain_check,
    reduction_lemma_check,
    replay,
    small_generator_check,
    stanley_bounds_check,
    superadditivity_check,
    surjection_monotonicity_check,
)
from .context import LabContext
from .models import REPORT_SCHEMA_VERSION, CheckReport, ReportList, Verdict
from .surjections import find_join_surjection, validate_join_surjection

__all__ = [
    "CheckReport",
    "LabContext",
    "NotGeneric",
    "NotSquarefree",
    "REPORT_SCHEMA_VERSION",
    "ReportList",
    "Verdict",
    "betti_form",
    "check_onestep",
    "conjecture_scan",
    "field_sensitivity",
    "find_join_surjection",
    "generic_weak_check",
    "lattice_pdim",
    "length_bounds_check",
    "mb_chain_check",
    "reduction_lemma_check",
    "replay",
    "small_generator_check",
    "stanley_bounds_check",
    "superadditivity_check",
    "surjection_monotonicity_check",
    "validate_join_surjection",
]
