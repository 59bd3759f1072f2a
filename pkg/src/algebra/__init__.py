# Algebra module - Idéaux monomiaux et treillis des ppcm
from .monomials import (
    AlgebraError,
    EmptyAfterMinimalization,
    Monomial,
    MonomialIdeal,
    UnitGenerator,
    UnknownVariable,
    colon_by_variable,
    disjoint_sum,
    is_generic,
    lcm_of,
    minimalize,
)
from .ideal_format import IdealSyntaxError, format_ideal, parse_ideal, read_ideal_file, write_ideal_file
from .lcm_lattice import LcmLattice, TooLarge, lcm_lattice, realize_lattice
from .random_ideals import RetriesExhausted, random_corpus, random_generic_ideal, random_ideal

__all__ = [
    "AlgebraError", "EmptyAfterMinimalization", "Monomial", "MonomialIdeal",
    "UnitGenerator", "UnknownVariable", "colon_by_variable", "disjoint_sum",
    "is_generic", "lcm_of", "minimalize",
    "IdealSyntaxError", "format_ideal", "parse_ideal", "read_ideal_file", "write_ideal_file",
    "LcmLattice", "TooLarge", "lcm_lattice", "realize_lattice",
    "RetriesExhausted", "random_corpus", "random_generic_ideal", "random_ideal",
]
