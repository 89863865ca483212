from fractions import Fraction

import pytest

from torsion13.fields import BadReductionError, PrimeField, build_quadratic_extension
from torsion13.hyperelliptic import (HyperellipticModel, ModelPoint,
                                     count_points, genus, is_smooth_mod_p,
                                     jacobian_order_fp, mod_p_residues,
                                     points_mod_p, search_rational_points)
from torsion13.polynomials import Polynomial, qpoly
from torsion13.x13 import D1_MODEL, D2_MIN_MODEL, D2_RAW_MODEL, X13_MODEL

from oracles import count_curve_points, divisor_class_count


def int_coeffs(poly):
    return [int(Fraction(c)) for c in poly.coeffs]


class TestModel:
    def test_genus_values(self):
        assert genus(X13_MODEL) == 2
        assert genus(D1_MODEL) == 2
        assert genus(D2_RAW_MODEL) == 3
        assert genus(D2_MIN_MODEL) == 3
        assert genus(HyperellipticModel(f=qpoly(1, 0, 0, 1), h=Polynomial())) == 1

    def test_singular_model_rejected(self):
        with pytest.raises(ValueError):
            HyperellipticModel(f=qpoly(0, 0, 1), h=Polynomial())  # v^2 = u^2

    def test_h_degree_bound(self):
        # h^2 + 4f cancels down to u^3 + u + 1 (genus 1) while deg h = 3
        f = qpoly(Fraction(1, 4), Fraction(1, 4), 0, Fraction(1, 4), 0, 0,
                  Fraction(-1, 4))
        with pytest.raises(ValueError):
            HyperellipticModel(f=f, h=qpoly(0, 0, 0, 1))

    def test_json_round_trip(self):
        data = D2_MIN_MODEL.to_json()
        again = HyperellipticModel.from_json(data)
        assert again.f == D2_MIN_MODEL.f and again.h == D2_MIN_MODEL.h


class TestInfinityChart:
    def test_x13_has_two_points_at_infinity(self):
        pts = X13_MODEL.points_at_infinity()
        assert len(pts) == 2
        assert {p.v for p in pts} == {0, -1}
        # chart data: ht(0) = leading x^3 coefficient of h, ft(0) = 0
        ft, ht = X13_MODEL.infinity_chart()
        assert ht(Fraction(0)) == 1 and ft(Fraction(0)) == 0

    def test_odd_degree_single_point(self):
        assert len(D2_MIN_MODEL.points_at_infinity()) == 1
        assert len(D2_RAW_MODEL.points_at_infinity()) == 1

    def test_even_degree_square_leading_coefficient(self):
        model = HyperellipticModel(f=qpoly(1, 0, 0, 0, 0, 0, 1), h=Polynomial())
        pts = model.points_at_infinity()
        assert {p.v for p in pts} == {1, -1}

    def test_points_satisfy_chart_equation(self):
        for model in (X13_MODEL, D2_MIN_MODEL, D1_MODEL):
            for p in model.points_at_infinity():
                assert model.satisfies(p)


class TestCountPoints:
    def test_d2_minimal_has_three_f2_points(self):
        assert count_points(D2_MIN_MODEL, PrimeField(2)) == 3

    def test_x13_f2_against_bruteforce(self):
        n = count_points(X13_MODEL, PrimeField(2))
        assert n == 6
        assert n == count_curve_points(int_coeffs(X13_MODEL.f),
                                       int_coeffs(X13_MODEL.h), 2, 2)

    def test_counts_match_independent_loop(self):
        for model, g in ((X13_MODEL, 2), (D1_MODEL, 2), (D2_MIN_MODEL, 3)):
            for p in (3, 5, 7):
                assert count_points(model, PrimeField(p)) == \
                    count_curve_points(int_coeffs(model.f), int_coeffs(model.h), g, p)

    def test_quadratic_extension_counts_match_oracle(self):
        for p in (2, 3, 5):
            ours = count_points(X13_MODEL, build_quadratic_extension(p))
            oracle = count_curve_points(int_coeffs(X13_MODEL.f),
                                        int_coeffs(X13_MODEL.h), 2, p, squared=True)
            assert ours == oracle

    def test_bad_reduction_denominator(self):
        model = HyperellipticModel(f=qpoly(Fraction(1, 3), 0, 0, 0, 0, 1),
                                   h=Polynomial())
        with pytest.raises(BadReductionError):
            count_points(model, PrimeField(3))

    def test_count_bound(self):
        # quadratic in v: at most 2 points per u, plus at most 2 at infinity
        for p in (3, 5, 7, 11, 13):
            n = count_points(X13_MODEL, PrimeField(p))
            assert n <= 2 * p + 3

    def test_hasse_weil_window(self):
        for model, g in ((X13_MODEL, 2), (D2_MIN_MODEL, 3)):
            for p in (3, 5, 7, 11, 13, 17, 19, 23):
                if not is_smooth_mod_p(model, p):
                    continue
                n = count_points(model, PrimeField(p))
                assert (n - (p + 1)) ** 2 <= (2 * g) ** 2 * 4 * p


class TestSmoothness:
    def test_d2_minimal_good_at_2(self):
        assert is_smooth_mod_p(D2_MIN_MODEL, 2)

    def test_x13_outcomes(self):
        # recorded outcomes: good away from 13, bad exactly at the level
        assert is_smooth_mod_p(X13_MODEL, 2)
        assert not is_smooth_mod_p(X13_MODEL, 13)
        for p in (3, 5, 7, 11, 19, 23):
            assert is_smooth_mod_p(X13_MODEL, p)

    def test_smooth_over_q_but_singular_mod_5(self):
        model = HyperellipticModel(f=qpoly(5, 0, 0, 0, 0, 0, 1), h=Polynomial())
        assert not is_smooth_mod_p(model, 5)
        assert is_smooth_mod_p(model, 7)

    def test_d1_good_at_sieve_primes(self):
        for p in (3, 7, 11):
            assert is_smooth_mod_p(D1_MODEL, p)


class TestSearch:
    def test_d1_exactly_five_points(self):
        pts = search_rational_points(D1_MODEL, 100)
        assert pts == [
            ModelPoint("affine", Fraction(-1), Fraction(0)),
            ModelPoint("affine", Fraction(0), Fraction(-1)),
            ModelPoint("affine", Fraction(0), Fraction(1)),
            ModelPoint("affine", Fraction(-4, 13), Fraction(-57, 2197)),
            ModelPoint("affine", Fraction(-4, 13), Fraction(57, 2197)),
        ]

    def test_d2_exactly_three_points(self):
        pts = search_rational_points(D2_RAW_MODEL, 100)
        assert pts == [
            ModelPoint("infinity", Fraction(0), Fraction(0)),
            ModelPoint("affine", Fraction(-1), Fraction(0)),
            ModelPoint("affine", Fraction(0), Fraction(0)),
        ]

    def test_full_two_torsion_cubic(self):
        model = HyperellipticModel(f=qpoly(0, -1, 0, 1), h=Polynomial())  # v^2 = u^3 - u
        pts = search_rational_points(model, 3)
        assert set(pts) == {
            ModelPoint("infinity", Fraction(0), Fraction(0)),
            ModelPoint("affine", Fraction(-1), Fraction(0)),
            ModelPoint("affine", Fraction(0), Fraction(0)),
            ModelPoint("affine", Fraction(1), Fraction(0)),
        }

    def test_results_stable_under_height_increase(self):
        for h1, h2 in ((5, 20), (20, 60)):
            small = set(search_rational_points(D1_MODEL, h1))
            large = set(search_rational_points(D1_MODEL, h2))
            assert small <= large

    def test_every_point_satisfies_its_chart_equation(self):
        for model in (D1_MODEL, D2_RAW_MODEL, X13_MODEL):
            for p in search_rational_points(model, 30):
                assert model.satisfies(p)

    def test_nontrivial_v_solutions_on_x13(self):
        pts = search_rational_points(X13_MODEL, 2)
        affine = {(p.u, p.v) for p in pts if p.chart == "affine"}
        assert {(Fraction(-1), Fraction(-1)), (Fraction(-1), Fraction(0)),
                (Fraction(0), Fraction(-1)), (Fraction(0), Fraction(0))} <= affine


class TestJacobianOrder:
    def test_x13_orders(self):
        assert jacobian_order_fp(X13_MODEL, 3) == 19
        assert jacobian_order_fp(X13_MODEL, 5) == 19

    def test_wrong_genus_rejected(self):
        with pytest.raises(ValueError):
            jacobian_order_fp(D2_MIN_MODEL, 3)

    def test_bad_reduction_rejected(self):
        with pytest.raises(BadReductionError):
            jacobian_order_fp(X13_MODEL, 13)

    def test_formula_against_divisor_class_enumeration_f3(self):
        model = HyperellipticModel(f=qpoly(1, 0, 0, 0, 0, 1), h=Polynomial())
        ours = jacobian_order_fp(model, 3)
        assert ours == divisor_class_count([1, 0, 0, 0, 0, 1], [0], 3) == 10

    def test_formula_against_divisor_class_enumeration_f2(self):
        # v^2 + v = u^5, good reduction at 2 thanks to the h term
        model = HyperellipticModel(f=qpoly(0, 0, 0, 0, 0, 1), h=qpoly(1))
        ours = jacobian_order_fp(model, 2)
        assert ours == divisor_class_count([0, 0, 0, 0, 0, 1], [1], 2)

    def test_elliptic_sanity(self):
        # genus-1 analogue by hand: #J = #C for an elliptic curve, checked
        # via the same N1 bookkeeping specialized by the test itself
        model = HyperellipticModel(f=qpoly(1, 0, 0, 0, 0, 1), h=Polynomial())
        p = 7
        n1 = count_points(model, PrimeField(p))
        n2 = count_points(model, build_quadratic_extension(p))
        s1 = p + 1 - n1
        s2 = (s1 * s1 - (p * p + 1 - n2)) // 2
        assert jacobian_order_fp(model, p) == 1 - s1 + s2 - p * s1 + p * p


class TestResidues:
    def test_d1_residues_mod_3(self):
        pts = search_rational_points(D1_MODEL, 100)
        res = mod_p_residues(D1_MODEL, pts, 3)
        assert res == {("affine", 2, 0), ("affine", 0, 1), ("affine", 0, 2)}
        everything = points_mod_p(D1_MODEL, 3)
        assert res <= everything
        assert len(everything) == 6

    def test_d2min_residue_bijection_mod_2(self):
        pts = search_rational_points(D2_MIN_MODEL, 100)
        res = mod_p_residues(D2_MIN_MODEL, pts, 2)
        everything = points_mod_p(D2_MIN_MODEL, 2)
        assert res == everything
        assert len(everything) == 3

    def test_residue_with_bad_denominator(self):
        pts = [ModelPoint("affine", Fraction(-4, 13), Fraction(57, 2197))]
        with pytest.raises(BadReductionError):
            mod_p_residues(D1_MODEL, pts, 13)
