import random

import pytest

from symcc.algebra import LaurentPoly, MultiTerm, multi_series, series_expand
from symcc.constraint import ConstraintVector, ValidationError, constraint_matrix
from symcc.general import (
    generator_matrix_t2,
    gf_multi_general,
    gf_q_general,
    parallelepiped_points,
    parallelepiped_points_scan,
    validate_general,
)
from symcc.intlinalg import adjugate, bareiss_det, column_hnf, matmul
from symcc.oracle import count_by_weight
from symcc.sampling import random_general_vector, random_sum_one_vector
from symcc.sum_one import generator_matrix_t1, gf_multi_t1, gf_q_t1

from helpers import fraction_inverse, oracle_multi_series

CV = ConstraintVector.from_raw


def test_validate_general():
    assert validate_general([-1, 3]).s == 2
    cv = validate_general([2, 1, -2])
    assert cv.a == (-2, 1, 2) and cv.prefix[:2] == (-2, -1)
    with pytest.raises(ValidationError):
        validate_general([1, 1])
    with pytest.raises(ValidationError):
        validate_general([-2, 1])
    with pytest.raises(ValidationError) as err:
        validate_general([-3, 2, 2, 2])
    assert err.value.route == "oracle"


def test_generator_matrix_examples():
    M = generator_matrix_t2(CV([-1, 3]), reduce=False)
    assert M.A == ((3, 1), (1, 1)) and M.det == 2
    assert generator_matrix_t2(CV([-1, 1, 1]), reduce=False).A == tuple(
        map(tuple, generator_matrix_t1(CV([-1, 1, 1])))
    )
    M = generator_matrix_t2(CV([-2, 1, 2]), reduce=False)
    assert M.columns == [(3, 2, 2), (2, 2, 1), (1, 1, 1)]


def _random_accepted(rng, n_range=(2, 5), s_range=(1, 4)):
    n = rng.randint(*n_range)
    s = rng.randint(*s_range)
    return CV(random_general_vector(n, s, rng))


@pytest.mark.parametrize("seed", range(25))
def test_generator_matrix_properties(seed):
    rng = random.Random(seed)
    cv = _random_accepted(rng)
    n, s = cv.n, cv.s
    M = generator_matrix_t2(cv, reduce=False)
    A = [list(r) for r in M.A]
    # independent route: s * C^{-1}
    assert [[s * x for x in row] for row in fraction_inverse(constraint_matrix(cv))] == A
    assert M.det == s ** (n - 1) == bareiss_det(A)
    assert min(min(r) for r in A) >= 0
    for j in range(n - 1):
        assert A[j][j] > A[j + 1][j]
    for j in range(n):
        for i in range(n - 1):
            if i != j:
                assert A[i][j] == A[i + 1][j]
    assert M.column_sums[:-1] == [j * s - n * cv.prefix[j - 1] for j in range(1, n)]
    assert M.column_sums[-1] == n


def test_column_sums_reproduce_sum_one_exponents():
    cv = CV([-2, 0, 1, 2])
    sums = generator_matrix_t2(cv, reduce=False).column_sums
    assert sorted(sums) == sorted(gf_q_t1(cv).denominators)


def test_parallelepiped_examples():
    assert parallelepiped_points(generator_matrix_t2(CV([-1, 1, 1]), reduce=False)).points == ((0, 0, 0),)
    assert parallelepiped_points(generator_matrix_t2(CV([-1, 3]), reduce=False)).points == ((0, 0), (2, 1))
    M = generator_matrix_t2(CV([-1, -1, 4]), reduce=False)
    assert M.det == 4
    P = parallelepiped_points(M)
    assert len(P.points) == 4 and (0, 0, 0) in P.points
    assert set(P.points) == set(parallelepiped_points_scan(M).points)


@pytest.mark.parametrize("seed", range(15))
def test_lattice_enumeration_matches_scan(seed):
    rng = random.Random(500 + seed)
    cv = _random_accepted(rng, n_range=(2, 3), s_range=(1, 4))
    for reduce in (False, True):
        M = generator_matrix_t2(cv, reduce=reduce)
        fast = parallelepiped_points(M).points
        assert set(fast) == set(parallelepiped_points_scan(M).points)
        assert len(fast) == M.det and (0,) * cv.n in fast
        adj = adjugate([list(r) for r in M.A])
        for p in fast:
            assert all(0 <= sum(x * y for x, y in zip(row, p)) < M.det for row in adj)


def test_gcd_reduction_shrinks_point_count():
    cv = CV([-1, -1, 4])
    full = generator_matrix_t2(cv, reduce=False)
    red = generator_matrix_t2(cv, reduce=True)
    assert red.column_divisors == (1, 2, 1)
    assert red.columns[1] == (2, 2, 1)
    assert len(parallelepiped_points(full).points) == 2 * len(parallelepiped_points(red).points)
    rng = random.Random(3)
    for _ in range(20):
        cv = _random_accepted(rng)
        full = generator_matrix_t2(cv, reduce=False)
        red = generator_matrix_t2(cv, reduce=True)
        factor = 1
        for d in red.column_divisors:
            factor *= d
        assert full.det == factor * red.det


def test_column_hnf_is_triangular_basis():
    A = [[3, 1, 1], [2, 2, 1], [2, 1, 1]]
    H = column_hnf(A)
    assert all(H[i][j] == 0 for i in range(3) for j in range(i + 1, 3))
    assert bareiss_det(H) == abs(bareiss_det(A))
    # H = A U with U unimodular
    U = matmul([[int(x) for x in row] for row in fraction_inverse(A)], H)
    assert abs(bareiss_det(U)) == 1


def test_gf_q_general_examples():
    gf = gf_q_general(CV([-1, 3]))
    assert gf.numerator == LaurentPoly({0: 1, 3: 2, 4: 1})
    assert gf.denominators == (2, 4)
    assert series_expand(gf, 4) == [1, 0, 1, 2, 3]
    assert gf_q_general(CV([-1, 1, 1])) == gf_q_t1(CV([-1, 1, 1]))
    gf = gf_q_general(CV([2]))
    assert gf.numerator == LaurentPoly.one() and gf.denominators == (1,)


@pytest.mark.parametrize("seed", range(10))
def test_sum_one_specialization_is_term_for_term(seed):
    rng = random.Random(seed)
    cv = CV(random_sum_one_vector(rng.randint(1, 6), rng))
    assert gf_q_general(cv) == gf_q_t1(cv)
    assert gf_q_general(cv, reduce=False) == gf_q_t1(cv)


@pytest.mark.parametrize("seed", range(20))
def test_general_oracle_equivalence(seed):
    rng = random.Random(2000 + seed)
    cv = _random_accepted(rng, n_range=(2, 4))
    expected = count_by_weight(cv, 12)
    assert series_expand(gf_q_general(cv, reduce=True), 12) == expected
    assert series_expand(gf_q_general(cv, reduce=False), 12) == expected


def test_point_cap():
    with pytest.raises(ValidationError):
        gf_q_general(CV([-1, -1, 4]), reduce=False, cap=3)


@pytest.mark.parametrize("a", [[-1, 1, 1], [-1, 2], [-2, 1, 2]])
def test_multi_general_matches_sum_one(a):
    assert multi_series(gf_multi_general(CV(a)), 8) == multi_series(gf_multi_t1(CV(a)), 8)


@pytest.mark.parametrize("a,reduce", [([-1, 3], True), ([-1, -1, 4], False), ([-1, -1, 4], True), ([-2, 1, 3], True)])
def test_multi_general_matches_oracle(a, reduce):
    assert multi_series(gf_multi_general(CV(a), reduce=reduce), 8) == oracle_multi_series(a, 8)


def test_multi_general_single_variable():
    gf = gf_multi_general(CV([2]))
    assert gf.terms == (MultiTerm((((0,), 1),), ((1,),)),)
