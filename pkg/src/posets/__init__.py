# Posets module - Posets et treillis finis
from .poset import (
    CycleDetected,
    EmptyPoset,
    FinitePoset,
    PosetError,
    UnknownElement,
    augment_with_top,
    build_poset,
    length,
    poset_from_order,
)
from .lattice import (
    BottomExcluded,
    CannotRemoveBottom,
    FiniteLattice,
    NotALattice,
    NotMeetClosed,
    NotMeetIrreducible,
    StepNotLattice,
    boolean_algebra,
    chain_lattice,
    decreasing_rank_chain,
    lattice_from_poset,
    meet_closure,
    meet_irreducibles,
    rank,
    remove_element,
)
from .canonical import canonical_form, is_isomorphic
from .complexes import SimplicialComplexData, complex_from_faces, cone, open_lower_complex, order_complex
from .maps import atom_correspondence, extend_atom_map, is_join_preserving, is_surjective

__all__ = [
    "CycleDetected", "EmptyPoset", "FinitePoset", "PosetError", "UnknownElement",
    "augment_with_top", "build_poset", "length", "poset_from_order",
    "BottomExcluded", "CannotRemoveBottom", "FiniteLattice", "NotALattice", "NotMeetClosed",
    "NotMeetIrreducible", "StepNotLattice", "boolean_algebra", "chain_lattice",
    "decreasing_rank_chain", "lattice_from_poset", "meet_closure", "meet_irreducibles",
    "rank", "remove_element",
    "canonical_form", "is_isomorphic",
    "SimplicialComplexData", "complex_from_faces", "cone", "open_lower_complex", "order_complex",
    "atom_correspondence", "extend_atom_map", "is_join_preserving", "is_surjective",
]
