from fractions import Fraction

import pytest

from at4tools.at4 import (
    At4Params,
    EQUALITY,
    IntersectionArray,
    STRICT,
    VIOLATED,
    antipodal_check,
    at4_eigenvalues,
    char_poly,
    derived,
    feasible_r,
    fundamental_bound_check,
    intersection_array,
    local_eigen_from_array,
    quotient_params,
    second_subconstituent_array,
    second_subconstituent_quotient,
    triple_constant,
)
from at4tools.srg import srg_spectrum


def test_params_validation():
    At4Params(2, 3)
    At4Params(3, 4)  # 2*3*4*5/4 = 30 is even
    with pytest.raises(ValueError):
        At4Params(1, 3)
    with pytest.raises(ValueError):
        At4Params(5, 2)  # r must exceed 2
    with pytest.raises(ValueError):
        At4Params(5, 7)  # r must be below p + 2
    with pytest.raises(ValueError):
        At4Params(11, 5)  # 5 does not divide 24
    with pytest.raises(ValueError):
        At4Params(5, 4)  # 420/4 = 105 is odd


def test_feasible_r():
    assert feasible_r(2) == (3,)
    assert feasible_r(3) == (4,)
    assert feasible_r(5) == (3, 6)
    assert feasible_r(11) == (3, 4, 6, 12)


def test_intersection_array_values():
    assert intersection_array(At4Params(2, 3)).b == (56, 45, 16, 1)
    assert intersection_array(At4Params(2, 3)).c == (1, 8, 45, 56)
    assert intersection_array(At4Params(11, 4)).b == (2171, 2016, 234, 1)
    assert intersection_array(At4Params(11, 4)).c == (1, 78, 2016, 2171)
    # direct substitution at (3, 4): c2 = 2*4*5/4 = 10, b2 = 3*10 = 30
    arr = intersection_array(At4Params(3, 4))
    assert arr.b == (115, 96, 30, 1) and arr.c == (1, 10, 96, 115)


def test_intersection_array_type_validation():
    with pytest.raises(ValueError):
        IntersectionArray((4, 2), (2, 1))  # c1 != 1
    with pytest.raises(ValueError):
        IntersectionArray((2, 3), (1, 1))  # a1 = 2 - 3 - 1 < 0
    with pytest.raises(ValueError):
        IntersectionArray((5, 3), (1, 2))  # layer size 5*3/2 not integral
    with pytest.raises(ValueError):
        IntersectionArray((4, 0), (1, 1))  # entries must be positive


def test_antipodal_check():
    arr = intersection_array(At4Params(2, 3))
    assert antipodal_check(arr) == (True, Fraction(3))
    arr34 = intersection_array(At4Params(3, 4))
    assert antipodal_check(arr34) == (True, Fraction(4))
    # formally valid diameter-4 array with b_0 != c_4
    not_antipodal = IntersectionArray((4, 2, 2, 2), (1, 1, 1, 2))
    assert antipodal_check(not_antipodal) == (False, None)


def test_quotient_params():
    assert quotient_params(2).as_tuple() == (162, 56, 10, 24)
    assert quotient_params(3).as_tuple() == (392, 115, 18, 40)
    assert quotient_params(11).as_tuple() == (16200, 2171, 154, 312)


def test_second_subconstituent_quotient():
    assert second_subconstituent_quotient(2).as_tuple() == (105, 32, 4, 12)
    assert second_subconstituent_quotient(3).as_tuple() == (276, 75, 10, 24)
    assert second_subconstituent_quotient(5).as_tuple() == (1128, 245, 28, 60)


def test_second_subconstituent_array():
    assert second_subconstituent_array(At4Params(2, 3)).b == (32, 27, 8, 1)
    assert second_subconstituent_array(At4Params(2, 3)).c == (1, 4, 27, 32)
    arr = second_subconstituent_array(At4Params(3, 4))
    assert arr.b == (75, 64, 18, 1) and arr.c == (1, 6, 64, 75)
    arr = second_subconstituent_array(At4Params(5, 3))
    assert arr.b == (245, 216, 40, 1) and arr.c == (1, 20, 216, 245)


def test_fundamental_bound_soicher_values():
    assert fundamental_bound_check(56, 10, 45, 14, -16) == EQUALITY
    shift = Fraction(56, 11)
    assert (14 + shift) * (-16 + shift) == Fraction(-25200, 121)
    assert Fraction(-56 * 10 * 45, 121) == Fraction(-25200, 121)


def test_fundamental_bound_perturbed():
    assert fundamental_bound_check(56, 10, 45, 15, -16) == VIOLATED
    assert fundamental_bound_check(56, 10, 45, 14, -15) == STRICT


def test_fundamental_bound_zero_a1():
    # right side vanishes when a1 = 0
    assert fundamental_bound_check(4, 0, 3, 2, -2) == STRICT
    assert fundamental_bound_check(4, 0, 3, 2, -5) == VIOLATED
    with pytest.raises(ValueError):
        fundamental_bound_check(4, -1, 3, 2, -2)


def test_local_eigen_from_array():
    assert local_eigen_from_array(45, 14, -16) == (Fraction(2), Fraction(4))
    assert local_eigen_from_array(96, 23, -25) == (Fraction(3), Fraction(5))
    assert local_eigen_from_array(0, 14, -16) == (Fraction(-1), Fraction(1))
    with pytest.raises(ValueError):
        local_eigen_from_array(45, -1, -16)


def test_triple_constant():
    assert triple_constant(At4Params(2, 3)) == 2
    assert triple_constant(At4Params(3, 4)) == 2
    assert triple_constant(At4Params(11, 3)) == 8


def test_derived_counts():
    d = derived(At4Params(2, 3))
    assert d.vertices == 486
    assert d.classes == 162
    assert d.kernel_order_divides == 3
    assert d.triple_constant == 2


def test_eigenvalues_soicher():
    assert at4_eigenvalues(At4Params(2, 3)) == (56, 14, 2, -4, -16)


def test_eigenvalues_match_closed_form():
    # independent route: characteristic polynomial of the tridiagonal
    # intersection matrix, against the eigenvalues predicted by the
    # local-parameter relations and the antipodal quotient
    for p in range(2, 61):
        for r in feasible_r(p):
            expected = ((p + 2) * (p * p + 4 * p + 2), p * p + 4 * p + 2, p, -(p + 2), -((p + 2) ** 2))
            assert at4_eigenvalues(At4Params(p, r)) == expected


def test_char_poly_petersen_style():
    # diameter-2 check on {3, 2; 1, 1}: eigenvalues 3, 1, -2
    poly = char_poly(IntersectionArray((3, 2), (1, 1)))
    assert len(poly) == 4 and poly[-1] == 1
    roots = {x for x in range(-10, 11) if sum(c * x**i for i, c in enumerate(poly)) == 0}
    assert roots == {3, 1, -2}


def test_generated_arrays_invariants():
    for p in range(2, 201):
        params_list = [At4Params(p, r) for r in feasible_r(p)]
        for params in params_list:
            arr = intersection_array(params)
            ok, r_back = antipodal_check(arr)
            assert ok and r_back == params.r
            sizes = arr.layer_sizes
            assert all(k > 0 for k in sizes)
            d = derived(params)
            assert d.vertices == sum(sizes)
            # quotient read off the array equals the closed-form quotient
            quot = (d.vertices // params.r, arr.b[0], arr.a[1], params.r * arr.c[1])
            assert quot == quotient_params(p).as_tuple()
            # the generic antipodal quotient mu = r*c2 agrees with 2(p+1)(p+2)
            assert params.r * arr.c[1] == 2 * (p + 1) * (p + 2)
            # second subconstituent is antipodal with the same index
            ok2, r2 = antipodal_check(second_subconstituent_array(params))
            assert ok2 and r2 == params.r


def test_generated_arrays_are_tight():
    for p in range(2, 101):
        for r in feasible_r(p):
            arr = intersection_array(At4Params(p, r))
            theta1 = -1 + arr.b[1] // (p + 1)
            theta4 = -1 - arr.b[1] // (p + 1)
            recovered = local_eigen_from_array(arr.b[1], theta1, theta4)
            assert recovered == (p, p + 2)
            assert fundamental_bound_check(arr.b[0], arr.a[1], arr.b[1], theta1, theta4) == EQUALITY


def test_quotient_spectra_agree():
    for p in (2, 3, 5, 11, 27):
        spec = srg_spectrum(quotient_params(p))
        assert (spec.theta_pos, spec.theta_neg) == (p, -((p + 2) ** 2))
        spec2 = srg_spectrum(second_subconstituent_quotient(p))
        assert (spec2.theta_pos, spec2.theta_neg) == (p, -(p * p + 2 * p + 2))
