"""
Tests des posets finis, treillis, formes canoniques et complexes d'ordre.
"""

import random

import networkx as nx
import pytest

from src.posets import (
    BottomExcluded,
    CannotRemoveBottom,
    CycleDetected,
    EmptyPoset,
    NotALattice,
    NotMeetClosed,
    NotMeetIrreducible,
    UnknownElement,
    augment_with_top,
    boolean_algebra,
    build_poset,
    canonical_form,
    chain_lattice,
    decreasing_rank_chain,
    extend_atom_map,
    is_isomorphic,
    is_join_preserving,
    is_surjective,
    lattice_from_poset,
    length,
    meet_closure,
    meet_irreducibles,
    open_lower_complex,
    order_complex,
    rank,
    remove_element,
)
from src.posets.poset import FinitePoset


def diamond():
    return build_poset("0abt", [("0", "a"), ("0", "b"), ("a", "t"), ("b", "t")])


class TestFinitePoset:

    def test_closure_and_covers(self):
        p = diamond()
        assert p.leq(p.index("0"), p.index("t"))
        assert not p.leq(p.index("a"), p.index("b"))
        assert p.lower_covers(p.index("t")) == (p.index("a"), p.index("b"))
        assert p.upper_covers(p.index("0")) == (p.index("a"), p.index("b"))
        assert p.heights == (0, 1, 1, 2)
        assert length(p) == 2

    def test_redundant_relation_is_absorbed(self):
        p = build_poset("abc", [("a", "b"), ("b", "c"), ("a", "c")])
        assert p.lower_covers(p.index("c")) == (p.index("b"),)

    def test_cycle_is_rejected(self):
        with pytest.raises(CycleDetected):
            build_poset("abc", [("a", "b"), ("b", "c"), ("c", "a")])

    def test_unknown_element_in_relation(self):
        with pytest.raises(UnknownElement):
            build_poset("ab", [("a", "z")])

    def test_inconsistent_table_is_rejected(self):
        # 0 ≤ 1 et 1 ≤ 2 sans 0 ≤ 2
        with pytest.raises(ValueError):
            FinitePoset((0, 1, 2), (0b011, 0b110, 0b100))

    def test_induced_keeps_names_and_order(self):
        p = diamond()
        sub = p.induced([p.index("t"), p.index("a")])
        assert sub.names == ("a", "t")
        assert sub.leq(0, 1)

    def test_hasse_diagram_edges(self):
        graph = diamond().hasse_diagram()
        assert graph.number_of_edges() == 4

    def test_length_of_empty_poset(self):
        with pytest.raises(EmptyPoset):
            length(FinitePoset((), ()))

    def test_augment_with_top(self):
        p = build_poset("ab", [])
        augmented = augment_with_top(p)
        assert augmented.size == 3
        assert length(p) == 0
        assert length(augmented) == 1


class TestLattices:

    def test_boolean_algebra(self):
        b3 = boolean_algebra(3)
        assert b3.size == 8
        assert len(b3.atoms) == 3
        assert b3.atomistic
        assert rank(b3, b3.top) == 3
        assert length(b3.base) == 3

    def test_meet_and_join_tables(self):
        b2 = boolean_algebra(2)
        x, y = b2.atoms
        assert b2.join(x, y) == b2.top
        assert b2.meet(x, y) == b2.bottom
        assert b2.join_all([]) == b2.bottom
        assert b2.meet_all([]) == b2.top

    def test_not_a_lattice(self):
        # Deux éléments maximaux au-dessus de deux minimaux: pas de join unique
        p = build_poset("abcd", [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])
        with pytest.raises(NotALattice):
            lattice_from_poset(p)

    def test_chain_is_not_atomistic_beyond_two(self):
        assert chain_lattice(2).atomistic
        assert not chain_lattice(3).atomistic
        assert length(chain_lattice(3).base) == 2

    def test_meet_irreducibles_of_b3(self):
        b3 = boolean_algebra(3)
        names = {b3.name(a) for a in meet_irreducibles(b3)}
        assert names == {(1, 2), (1, 3), (2, 3), (1, 2, 3)}

    def test_remove_coatom(self):
        b3 = boolean_algebra(3)
        reduced = remove_element(b3, b3.base.index((1, 2)))
        assert reduced.size == 7
        assert reduced.atomistic

    def test_remove_errors(self):
        b3 = boolean_algebra(3)
        with pytest.raises(CannotRemoveBottom):
            remove_element(b3, b3.bottom)
        with pytest.raises(NotMeetIrreducible):
            remove_element(b3, b3.base.index((1,)))

    def test_remove_top_with_two_lower_covers(self):
        b2 = boolean_algebra(2)
        with pytest.raises(NotALattice):
            remove_element(b2, b2.top)

    def test_meet_closure(self):
        closure = meet_closure(3, [[1, 2], [2, 3]])
        assert closure.base.names == ((2,), (1, 2), (2, 3), (1, 2, 3))

    def test_meet_closure_rejects_foreign_atoms(self):
        with pytest.raises(ValueError):
            meet_closure(2, [[1, 3]])

    def test_decreasing_rank_chain(self):
        b3 = boolean_algebra(3)
        keep = [b3.bottom, b3.base.index((1,)), b3.top]
        chain = decreasing_rank_chain(b3, keep)
        assert [lat.size for lat in chain] == [8, 7, 6, 5, 4, 3]
        assert chain[-1].base.names == ((), (1,), (1, 2, 3))

    def test_decreasing_rank_chain_requires_meet_closed(self):
        b3 = boolean_algebra(3)
        with pytest.raises(NotMeetClosed):
            decreasing_rank_chain(b3, [b3.bottom, b3.base.index((1,))])
        keep = [b3.bottom, b3.base.index((1, 2)), b3.base.index((2, 3)), b3.top]
        with pytest.raises(NotMeetClosed):
            decreasing_rank_chain(b3, keep)


class TestCanonicalForm:

    def test_relabelled_posets_agree(self):
        p = build_poset("abcde", [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d"), ("c", "e")])
        q = build_poset("54321", [("5", "3"), ("5", "4"), ("4", "2"), ("3", "2"), ("3", "1")])
        assert canonical_form(p) == canonical_form(q)
        assert is_isomorphic(p, q)

    def test_labels_are_ignored(self):
        p = build_poset("ab", [("a", "b")], labels=["x", "y"])
        q = build_poset("ab", [("a", "b")])
        assert is_isomorphic(p, q)

    def test_non_isomorphic(self):
        chain = build_poset("abc", [("a", "b"), ("b", "c")])
        vee = build_poset("abc", [("a", "b"), ("a", "c")])
        assert not is_isomorphic(chain, vee)

    def test_agrees_with_networkx_on_random_posets(self):
        rng = random.Random(3)
        posets = []
        for _ in range(12):
            names = list(range(6))
            relations = [(i, j) for i in names for j in names if i < j and rng.random() < 0.3]
            posets.append(build_poset(names, relations))
        for p in posets:
            for q in posets:
                expected = nx.is_isomorphic(p.hasse_diagram(), q.hasse_diagram())
                assert is_isomorphic(p, q) == expected


class TestComplexes:

    def test_order_complex_of_chain_is_simplex(self):
        chain = build_poset("abc", [("a", "b"), ("b", "c")])
        data = order_complex(chain, [0, 1, 2])
        assert len(data.faces) == 8
        assert data.dimension == 2

    def test_open_interval_of_b3_is_hexagon(self):
        b3 = boolean_algebra(3)
        data = open_lower_complex(b3, b3.top)
        assert len(data.vertices) == 6
        assert len(data.faces_of_dimension(1)) == 6
        assert data.dimension == 1

    def test_open_interval_at_bottom(self):
        b3 = boolean_algebra(3)
        with pytest.raises(BottomExcluded):
            open_lower_complex(b3, b3.bottom)

    def test_open_interval_at_atom_is_empty(self):
        b3 = boolean_algebra(3)
        data = open_lower_complex(b3, b3.atoms[0])
        assert data.faces == ((),)
        assert data.dimension == -1


class TestMaps:

    def test_identity_is_join_preserving(self):
        b2 = boolean_algebra(2)
        images = extend_atom_map(b2, b2, {a: a for a in b2.atoms})
        assert is_join_preserving(b2, b2, images)
        assert is_surjective(b2, images)

    def test_collapse_onto_chain(self):
        b2 = boolean_algebra(2)
        two = chain_lattice(2)
        images = extend_atom_map(b2, two, {a: two.top for a in b2.atoms})
        assert is_join_preserving(b2, two, images)
        assert is_surjective(two, images)

    def test_swapping_into_non_surjective_map(self):
        b2 = boolean_algebra(2)
        images = extend_atom_map(b2, b2, {a: b2.atoms[0] for a in b2.atoms})
        assert is_join_preserving(b2, b2, images)
        assert not is_surjective(b2, images)
