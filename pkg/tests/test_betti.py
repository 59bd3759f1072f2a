"""
Tests des nombres de Betti multigradués, du poset de Betti, de l'oracle de
Taylor, du complexe de Scarf et de la série de Hilbert.
"""

import pytest

from src.algebra import Monomial, lcm_lattice, random_corpus, random_generic_ideal
from src.betti import (
    ShapeMismatch,
    TooManyGenerators,
    betti_poset,
    betti_table,
    format_polynomial,
    hilbert_numerator,
    hilbert_shape_difference,
    homological_summary,
    lattice_betti_elements,
    scarf_complex,
    taylor_betti_oracle,
)
from src.betti.tables import BettiTable
from src.homology import GF2, RATIONALS
from src.posets import boolean_algebra
from tests.conftest import ideal

T = Monomial((2, 2, 2, 2, 0))
T5 = Monomial((2, 2, 2, 2, 1))


class TestBettiTable:

    def test_triangle(self, triangle):
        table = betti_table(triangle)
        assert table.get(2, Monomial((1, 1, 1))) == 2
        assert table.get(1, Monomial((1, 1, 0))) == 1
        assert table.get(0, Monomial((0, 0, 0))) == 1
        assert table.totals() == {1: 3, 2: 2}
        assert table.max_degree == 2

    def test_koszul(self, maximal_ideal):
        table = betti_table(maximal_ideal)
        assert table.totals() == {1: 3, 2: 3, 3: 1}
        assert table.get(3, Monomial((1, 1, 1))) == 1

    def test_json(self, triangle):
        data = betti_table(triangle, GF2).to_json()
        assert data["field"] == "fp:2"
        assert {"i": 2, "deg": [1, 1, 1], "beta": 2} in data["entries"]

    def test_alternating_sum(self, triangle):
        table = betti_table(triangle)
        assert table.alternating_sum(Monomial((1, 1, 1))) == 2
        assert table.alternating_sum(Monomial((0, 0, 0))) == 1

    def test_zero_entries_rejected(self):
        with pytest.raises(ValueError):
            BettiTable(1, RATIONALS, ((1, Monomial((1,)), 0),))

    @pytest.mark.parametrize("fixture", ["triangle", "maximal_ideal", "x2xyy2", "x2xyy2z", "i2"])
    def test_matches_taylor_oracle(self, request, fixture):
        target = request.getfixturevalue(fixture)
        for field in (RATIONALS, GF2):
            assert betti_table(target, field) == taylor_betti_oracle(target, field)

    def test_matches_taylor_on_random_ideals(self):
        corpus = random_corpus(15, 4, 4, max_exp=2, seed=9)
        for member in corpus:
            assert betti_table(member) == taylor_betti_oracle(member)
            assert betti_table(member, GF2) == taylor_betti_oracle(member, GF2)

    def test_taylor_generator_cap(self, i1):
        with pytest.raises(TooManyGenerators):
            taylor_betti_oracle(i1, max_generators=4)


class TestHomologicalSummary:

    def test_triangle(self, triangle):
        summary = homological_summary(triangle)
        assert summary.to_json() == {
            "n": 3,
            "pdim_quotient": 2,
            "pdim_ideal": 1,
            "depth_quotient": 1,
            "depth_ideal": 2,
        }

    def test_maximal_ideal_has_depth_zero(self, maximal_ideal):
        assert homological_summary(maximal_ideal).depth_quotient == 0

    def test_pdim_of_i1_i2(self, i1, i2):
        assert homological_summary(i1).pdim_quotient == 4
        assert homological_summary(i2).pdim_quotient == 3


class TestBettiPoset:

    def test_triangle_poset(self, triangle):
        poset = betti_poset(triangle)
        assert poset.size == 4
        assert Monomial((1, 1, 1)) in poset.degrees
        assert len(poset.to_json()["covers"]) == 3

    def test_sizes_of_i1_i2(self, i1, i2):
        first, second = betti_poset(i1), betti_poset(i2)
        assert first.size == 17
        assert second.size == 15
        assert T in first.degrees and T5 in first.degrees

    def test_boolean_lattice_is_all_betti(self):
        b3 = boolean_algebra(3)
        assert lattice_betti_elements(b3) == set(range(b3.size)) - {b3.bottom}


class TestScarf:

    def test_triangle_scarf_is_atoms(self, triangle):
        scarf = scarf_complex(triangle)
        assert scarf.field is None
        assert set(scarf.degrees) == set(triangle.generators)
        assert set(scarf.nodes) <= set(betti_poset(triangle).nodes)

    def test_generic_ideals_scarf_equals_betti(self, x2xyy2):
        samples = [x2xyy2] + [random_generic_ideal(3, 4, 3, seed=s) for s in range(5)]
        for sample in samples:
            assert set(scarf_complex(sample).nodes) == set(betti_poset(sample).nodes)

    def test_betti_contains_scarf_on_random_ideals(self):
        for member in random_corpus(10, 3, 4, max_exp=2, seed=4):
            assert set(scarf_complex(member).nodes) <= set(betti_poset(member).nodes)


class TestHilbert:

    def test_triangle_numerator(self, triangle):
        betti = hilbert_numerator(triangle, "betti")
        assert betti == hilbert_numerator(triangle, "taylor")
        assert format_polynomial(betti, triangle.variables) == (
            "1 - t_y*t_z - t_x*t_z - t_x*t_y + 2*t_x*t_y*t_z"
        )

    def test_sources_agree_on_i1_i2(self, i1, i2):
        for target in (i1, i2):
            assert hilbert_numerator(target, "betti") == hilbert_numerator(target, "taylor")

    def test_unknown_source(self, triangle):
        with pytest.raises(ValueError):
            hilbert_numerator(triangle, "koszul")

    def test_shape_difference_of_i1_i2(self, i1, i2):
        assert hilbert_shape_difference(i1, i2) == [(T, 0), (T5, 0)]

    def test_shape_difference_needs_same_generator_count(self, triangle):
        with pytest.raises(ShapeMismatch):
            hilbert_shape_difference(triangle, ideal("x y z: x*y, y*z"))

    def test_lattice_used_by_table_is_shared(self, i2):
        lcm = lcm_lattice(i2)
        assert betti_table(i2, lcm=lcm) == betti_table(i2)


@pytest.mark.slow
class TestRandomSweeps:

    def test_oracle_on_hundred_ideals(self):
        from src.algebra import random_ideal

        for s in range(100):
            member = random_ideal(3 + s % 4, 2 + s % 5, max_exp=3, seed=s)
            for field in (RATIONALS, GF2):
                assert betti_table(member, field) == taylor_betti_oracle(member, field), member.format()

    def test_scarf_on_fifty_generic_ideals(self):
        for s in range(50):
            member = random_generic_ideal(3 + s % 2, 3 + s % 3, 4, seed=101 * s)
            assert set(scarf_complex(member).nodes) == set(betti_poset(member).nodes), member.format()
