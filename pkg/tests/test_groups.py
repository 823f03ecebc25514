from fractions import Fraction
from functools import reduce
from itertools import permutations
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxtoric.errors import HypothesisError, ShapeError
from coxtoric.groups import (
    DiagonalizableSubgroup,
    MonomialMatrix,
    WeightAction,
    centralizes_torus,
    character_root_isogeny,
    classify_quotient,
    commutes_with_torus,
    contains_coordinate_subtorus,
    decompose_subgroup,
    hyperplane_permutation_report,
    is_effective,
    subgroup_from_weights,
)
from coxtoric.intlin import IntMatrix, vector_gcd


def weight(rows):
    m = IntMatrix.from_rows(rows)
    return WeightAction(m.rows, m)


def rank_one_subgroup(column):
    return DiagonalizableSubgroup(len(column), IntMatrix.from_columns([column], rows=len(column)))


class TestSubgroupFromWeights:
    def test_hyperbolic(self):
        g = subgroup_from_weights(weight([[1, -1]]))
        assert g.dimension == 1
        assert [tuple(abs(x) for x in c) for c in g.relations.columns()] == [(1, 1)]

    def test_full_torus(self):
        g = subgroup_from_weights(weight([[1, 0], [0, 1]]))
        assert g.relations.cols == 0
        assert g.dimension == 2

    def test_weighted_line(self):
        g = subgroup_from_weights(weight([[1, 2, 1]]))
        assert g.relations.cols == 2
        assert g.dimension == 1

    def test_image_closure_is_connected(self):
        g = subgroup_from_weights(weight([[2, 0], [0, 3]]))
        assert g.is_connected()


class TestEffective:
    def test_cases(self):
        assert is_effective(weight([[1, -1]]))
        assert not is_effective(weight([[2]]))
        assert is_effective(weight([[1, 0, 0], [0, 1, 1]]))
        assert not is_effective(weight([[2, 0], [0, 1]]))


class TestClassifyQuotient:
    def test_monomial_cases(self):
        assert classify_quotient(rank_one_subgroup((1, 1))) == (1, 1)
        assert classify_quotient(rank_one_subgroup((1, 0))) == (1, 0)
        assert classify_quotient(subgroup_from_weights(weight([[0, 1]]))) == (1, 0)

    def test_point_case(self):
        assert classify_quotient(rank_one_subgroup((1, -1))) is None
        assert classify_quotient(subgroup_from_weights(weight([[1, 1]]))) is None

    def test_negative_generator_normalized(self):
        assert classify_quotient(rank_one_subgroup((-1, -2))) == (1, 2)

    def test_hypothesis_errors(self):
        with pytest.raises(HypothesisError):
            classify_quotient(rank_one_subgroup((2, 2)))  # disconnected
        with pytest.raises(HypothesisError):
            classify_quotient(DiagonalizableSubgroup(3, IntMatrix.from_columns(
                [(1, 0, 0), (0, 1, 0)], rows=3)))  # wrong dimension

    @given(st.lists(st.integers(-4, 4), min_size=1, max_size=5).filter(any))
    def test_monomial_iff_one_signed(self, a):
        g = vector_gcd(a)
        a = tuple(x // g for x in a)
        result = classify_quotient(rank_one_subgroup(a))
        one_signed = all(x >= 0 for x in a) or all(x <= 0 for x in a)
        assert (result is not None) == one_signed
        if result is not None:
            assert vector_gcd(result) == 1
            assert all(x >= 0 for x in result)


class TestCoordinateSubtorus:
    def test_whole_torus(self):
        g = DiagonalizableSubgroup.full_torus(3)
        assert all(contains_coordinate_subtorus(g, i) for i in range(3))

    def test_hyperbolic(self):
        assert not contains_coordinate_subtorus(rank_one_subgroup((1, 1)), 0)

    def test_pointwise_fixed_first_axis(self):
        g = rank_one_subgroup((1, 0, 0))
        assert not contains_coordinate_subtorus(g, 0)
        assert contains_coordinate_subtorus(g, 1)
        assert contains_coordinate_subtorus(g, 2)


class TestMonomialMatrix:
    def test_scalars_reduced(self):
        g = MonomialMatrix((0, 1), (Fraction(3, 2), Fraction(-1, 3)))
        assert g.scalars == (Fraction(1, 2), Fraction(2, 3))

    def test_not_a_permutation(self):
        with pytest.raises(ShapeError):
            MonomialMatrix((0, 0), (0, 0))

    def test_compose_inverse_order(self):
        g = MonomialMatrix((1, 2, 0), (Fraction(1, 2), 0, Fraction(1, 3)))
        ident = MonomialMatrix.identity(3)
        assert g.compose(g.inverse()) == ident
        assert g.inverse().compose(g) == ident
        assert g.compose(ident) == g
        n = g.order()
        power = g
        for _ in range(n - 1):
            power = power.compose(g)
        assert power == ident
        assert n == 18  # permutation order 3, scalar denominators 2 and 3

    @given(st.permutations(list(range(4))),
           st.lists(st.fractions(max_denominator=6), min_size=4, max_size=4),
           st.permutations(list(range(4))),
           st.lists(st.fractions(max_denominator=6), min_size=4, max_size=4))
    @settings(max_examples=30)
    def test_group_laws(self, p1, s1, p2, s2):
        g1 = MonomialMatrix(tuple(p1), tuple(s1))
        g2 = MonomialMatrix(tuple(p2), tuple(s2))
        ident = MonomialMatrix.identity(4)
        assert g1.compose(g1.inverse()) == ident
        assert g1.compose(g2).inverse() == g2.inverse().compose(g1.inverse())


class TestCommutesWithTorus:
    def test_identity_always(self):
        g0 = rank_one_subgroup((1, 1))
        assert commutes_with_torus(MonomialMatrix.identity(2), g0)

    def test_symmetric_lattice(self):
        swap = MonomialMatrix((1, 0), (0, 0))
        assert commutes_with_torus(swap, rank_one_subgroup((1, 1)))
        assert not commutes_with_torus(swap, rank_one_subgroup((1, 0)))

    def test_normalizing_does_not_imply_centralizing(self):
        # swapping coordinates of {(t, 1/t)} inverts every element: the swap
        # normalizes the subtorus but does not commute with it elementwise
        swap = MonomialMatrix((1, 0), (0, 0))
        g0 = rank_one_subgroup((1, 1))
        assert commutes_with_torus(swap, g0)
        assert not centralizes_torus(swap, g0)

    def test_normalizer_counterexample_to_pointwise_fixing(self):
        # Swapping the two zero-support coordinates of a = (0, 0, 1)
        # normalizes {(t, s, 1)} yet moves V(z_0) and V(z_1); only the
        # elementwise-commuting matrices must fix the zero support pointwise.
        g0 = rank_one_subgroup((0, 0, 1))
        swap01 = MonomialMatrix((1, 0, 2), (0, 0, 0))
        assert commutes_with_torus(swap01, g0)
        assert not centralizes_torus(swap01, g0)
        report = hyperplane_permutation_report(swap01, (0, 0, 1))
        assert report.permutes_positive_support
        assert not report.fixes_zero_support

    def test_centralizing_diagonal(self):
        g0 = rank_one_subgroup((1, 1, 0))
        diag = MonomialMatrix((0, 1, 2), (Fraction(1, 2), Fraction(1, 3), 0))
        assert centralizes_torus(diag, g0)
        assert commutes_with_torus(diag, g0)


class TestHyperplaneReport:
    def test_identity(self):
        rep = hyperplane_permutation_report(MonomialMatrix.identity(3), (2, 0, 1))
        assert rep.fixes_zero_support and rep.permutes_positive_support

    def test_swap_of_positive_support(self):
        rep = hyperplane_permutation_report(MonomialMatrix((1, 0, 2), (0, 0, 0)), (1, 1, 0))
        assert rep.pi == (1, 0, 2)
        assert rep.fixes_zero_support and rep.permutes_positive_support

    def test_mixing_supports(self):
        rep = hyperplane_permutation_report(MonomialMatrix((0, 2, 1), (0, 0, 0)), (1, 1, 0))
        assert not rep.permutes_positive_support

    def test_negative_exponent_rejected(self):
        with pytest.raises(HypothesisError):
            hyperplane_permutation_report(MonomialMatrix.identity(2), (1, -1))


class TestCharacterRootIsogeny:
    def test_zero_character(self):
        kappa, xi0 = character_root_isogeny((0, 0, 0), 7)
        assert kappa == IntMatrix.identity(3)
        assert xi0 == (0, 0, 0)

    def test_minimal_determinant_is_two(self):
        kappa, xi0 = character_root_isogeny((1, 0), 2)
        assert abs(kappa.det()) == 2
        assert kappa.transpose().apply((1, 0)) == tuple(2 * x for x in xi0)
        # brute force: any 2x2 integer kappa with kappa^T xi divisible by 2
        # has even determinant, so 2 is the least possible absolute value
        best = None
        for k11 in range(-2, 3):
            for k12 in range(-2, 3):
                for k21 in range(-2, 3):
                    for k22 in range(-2, 3):
                        if k11 % 2 or k12 % 2:
                            continue
                        det = k11 * k22 - k12 * k21
                        if det and (best is None or abs(det) < best):
                            best = abs(det)
        assert best == 2

    def test_gcd_absorbs_degree(self):
        kappa, xi0 = character_root_isogeny((2,), 2)
        assert kappa == IntMatrix.identity(1)
        assert xi0 == (1,)

    def test_degree_zero_rejected(self):
        with pytest.raises(ValueError):
            character_root_isogeny((1, 2), 0)

    @given(st.lists(st.integers(-9, 9), min_size=1, max_size=4), st.integers(1, 12))
    def test_identity_and_determinant(self, xi, d):
        kappa, xi0 = character_root_isogeny(xi, d)
        assert kappa.transpose().apply(xi) == tuple(d * x for x in xi0)
        g = vector_gcd(xi)
        expected = 1 if g == 0 else d // gcd(d, g)
        assert abs(kappa.det()) == expected


class TestDecompose:
    def test_cases(self):
        assert decompose_subgroup(rank_one_subgroup((1, 1))) == (1, ())
        trivial = DiagonalizableSubgroup(2, IntMatrix.identity(2))
        assert decompose_subgroup(trivial) == (0, ())
        mu2 = DiagonalizableSubgroup(2, IntMatrix.from_columns([(1, 1), (0, 2)], rows=2))
        assert decompose_subgroup(mu2) == (0, (2,))

    def test_full_torus_weights_give_trivial_relations(self):
        for m in range(1, 4):
            g = subgroup_from_weights(WeightAction(m, IntMatrix.identity(m)))
            assert g.relations.cols == 0
            assert decompose_subgroup(g) == (m, ())


class TestSmallExhaustive:
    def test_normalizing_matrices_respect_support_partition(self):
        # small-bound version of the exhaustive acceptance sweep (m <= 3)
        from itertools import product
        for m in range(1, 4):
            for a in product(range(-2, 3), repeat=m):
                if not any(a) or vector_gcd(a) != 1:
                    continue
                group = rank_one_subgroup(a)
                result = classify_quotient(group)
                if result is None:
                    continue
                for perm in permutations(range(m)):
                    g = MonomialMatrix(perm, (0,) * m)
                    if commutes_with_torus(g, group):
                        rep = hyperplane_permutation_report(g, result)
                        assert rep.permutes_positive_support
                        if centralizes_torus(g, group):
                            assert rep.fixes_zero_support
