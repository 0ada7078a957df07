"""The metacommutation map, its three routes, permutation analytics,
predictions and the order-count formula."""
import pytest

from metacommute.errors import CoprimalityError, NonPrimeNorm, ScaleLimit
from metacommute.geometry import conic_points, conic_to_prime, trace_zero_rep
from metacommute.metacomm import (
    MetaQuery,
    Permutation,
    analyze,
    cycle_decomposition,
    meta_conj,
    meta_divide,
    meta_permutation,
    order_count,
    pgl2_order_census,
    predict,
)
from metacommute.modp import legendre, reduce_mod
from metacommute.quatcore import (
    HurwitzInt,
    PrimeClass,
    canonical_rep,
    elements_of_norm,
    make,
    primes_of_norm,
    units,
)

ONE_PLUS_I = make(2, 2, 0, 0)
TWO_PLUS_3I = make(4, 6, 0, 0)


def images_of(p, Q):
    return meta_permutation(MetaQuery.create(p, Q)).images


# ------------------------------------------------------------------ queries

def test_query_fields():
    query = MetaQuery.create(3, TWO_PLUS_3I)
    assert query.q == 13
    assert query.central  # 3i vanishes mod 3
    assert not MetaQuery.create(3, ONE_PLUS_I).central


def test_query_coprimality():
    with pytest.raises(CoprimalityError):
        MetaQuery.create(3, make(0, 6, 0, 0))  # norm 9
    with pytest.raises(CoprimalityError):
        meta_divide(PrimeClass.of(make(2, 2, 2, 0)), HurwitzInt.scalar(3))
    with pytest.raises(CoprimalityError):
        meta_conj(PrimeClass.of(make(2, 2, 2, 0)), HurwitzInt.scalar(6))


# ------------------------------------------------------------- the two routes

def test_divide_and_conj_agree_p3():
    for P in primes_of_norm(3):
        assert meta_divide(P, ONE_PLUS_I) == meta_conj(P, ONE_PLUS_I)


def test_unit_q_is_unit_conjugation():
    # for a unit u, PQ = P u, and the partner class is u^-1 P u = conj(u) P u
    for p in (3, 5):
        for P in primes_of_norm(p):
            for u in units():
                want = PrimeClass.of(u.conjugate() * P.rep * u)
                assert meta_divide(P, u) == want
                assert meta_conj(P, u) == want


def test_q_one_is_identity():
    one = HurwitzInt.scalar(1)
    for P in primes_of_norm(5):
        assert meta_divide(P, one) == P
        assert meta_conj(P, one) == P


def test_central_q_fixes_every_class():
    # 2+3i reduces to the scalar 2 mod 3
    assert reduce_mod(TWO_PLUS_3I, 3).is_central()
    for P in primes_of_norm(3):
        assert meta_divide(P, TWO_PLUS_3I) == P
        assert meta_conj(P, TWO_PLUS_3I) == P


def test_product_identity_qprime():
    # Q' = P Q conj(P') / p is a Hurwitz integer of norm q with P Q = Q' P'
    for p, q in ((3, 5), (5, 2), (7, 3)):
        for P in primes_of_norm(p):
            for Q in elements_of_norm(q)[:24]:
                p2 = meta_divide(P, Q)
                pq = P.rep * Q
                num = pq * p2.rep.conjugate()
                assert all(c % p == 0 for c in num.coeffs)
                qprime = HurwitzInt(*(c // p for c in num.coeffs))
                assert qprime.norm() == q
                assert qprime * p2.rep == pq


# ---------------------------------------------------------------- permutation

def test_permutation_p3_one_plus_i_is_a_four_cycle():
    perm = meta_permutation(MetaQuery.create(3, ONE_PLUS_I))
    report = analyze(perm)
    assert report.fixed_count == 0
    assert report.cycle_lengths == (4,)
    assert report.sign == -1
    assert perm.ground == conic_points(3)


def test_permutation_p3_central_is_identity():
    assert images_of(3, TWO_PLUS_3I) == (0, 1, 2, 3)


def test_permutation_p5_one_plus_i():
    report = analyze(meta_permutation(MetaQuery.create(5, ONE_PLUS_I)))
    assert report.fixed_count == 2
    assert report.cycle_lengths == (4,)
    assert report.sign == -1


def test_permutation_matches_divide_route():
    for p in (3, 5, 7):
        ground = conic_points(p)
        pos = {c: i for i, c in enumerate(ground)}
        for Q in (ONE_PLUS_I, make(1, 1, 1, 1), make(3, 1, 1, 1)):
            if Q.norm() % p == 0:
                continue
            perm = meta_permutation(MetaQuery.create(p, Q))
            for P in primes_of_norm(p):
                i = pos[trace_zero_rep(P)]
                assert conic_to_prime(ground[perm.images[i]]) == meta_divide(P, Q)


def test_right_action_composition():
    # acting by Q1 then Q2 equals acting by Q1*Q2 (composite norms included)
    for p in (3, 5):
        for Q1 in (ONE_PLUS_I, make(3, 1, 1, 1)):
            for Q2 in (make(1, 1, 1, 1), TWO_PLUS_3I):
                prod = Q1 * Q2
                if Q1.norm() % p == 0 or Q2.norm() % p == 0:
                    continue
                img1 = images_of(p, Q1)
                img2 = images_of(p, Q2)
                combined = tuple(img2[i] for i in img1)
                assert combined == images_of(p, prod)


def test_permutation_for_composite_norm_exists():
    # the map only needs coprimality; norm 4 is fine at p = 3
    query = MetaQuery.create(3, make(2, 2, 2, 2))
    perm = meta_permutation(query)
    assert sorted(perm.images) == [0, 1, 2, 3]
    with pytest.raises(NonPrimeNorm):
        predict(query)


# ------------------------------------------------------------------ analytics

def test_cycle_decomposition():
    assert cycle_decomposition((1, 0, 3, 2)) == [[0, 1], [2, 3]]
    assert cycle_decomposition((0, 1, 2, 3)) == [[0], [1], [2], [3]]
    assert cycle_decomposition((1, 3, 0, 2)) == [[0, 1, 3, 2]]


def test_analyze_identity():
    perm = Permutation(p=3, ground=conic_points(3), images=(0, 1, 2, 3))
    report = analyze(perm)
    assert (report.sign, report.fixed_count) == (1, 4)
    assert report.cycle_lengths == ()
    assert report.uniform_length


def test_analyze_four_cycle():
    perm = Permutation(p=3, ground=conic_points(3), images=(1, 3, 0, 2))
    report = analyze(perm)
    assert (report.sign, report.fixed_count) == (-1, 0)
    assert report.cycle_lengths == (4,)


def test_analyze_two_fixed_plus_four_cycle():
    perm = Permutation(p=5, ground=conic_points(5), images=(0, 1, 3, 4, 5, 2))
    report = analyze(perm)
    assert (report.sign, report.fixed_count) == (-1, 2)
    assert report.cycle_lengths == (4,)
    assert report.uniform_length


def test_permutation_rejects_non_bijection():
    with pytest.raises(Exception):
        Permutation(p=3, ground=conic_points(3), images=(0, 0, 1, 2))


def test_report_invariants_over_sample():
    # fixed_count plus the non-fixed cycle lengths always account for all
    # p+1 points, and the sign is the parity of the even-length cycle count
    for p in (3, 5, 7, 11):
        for Q in (ONE_PLUS_I, TWO_PLUS_3I, make(1, 1, 1, 1), make(3, 1, 1, 1)):
            if Q.norm() % p == 0:
                continue
            report = analyze(meta_permutation(MetaQuery.create(p, Q)))
            assert report.fixed_count + sum(report.cycle_lengths) == p + 1
            evens = sum(1 for n in report.cycle_lengths if n % 2 == 0)
            assert report.sign == (-1) ** evens


# ---------------------------------------------------------------- predictions

def test_predict_p3_q2():
    sign, fixed = predict(MetaQuery.create(3, ONE_PLUS_I))
    assert sign == legendre(2, 3) == -1
    assert fixed == 0  # tr^2 - 4q = -4 = 2 mod 3, a non-residue


def test_predict_central():
    sign, fixed = predict(MetaQuery.create(3, TWO_PLUS_3I))
    assert fixed == 4  # p + 1
    assert sign == legendre(13, 3) == 1


def test_predict_p5_q2():
    assert predict(MetaQuery.create(5, ONE_PLUS_I)) == (-1, 2)


# -------------------------------------------------------------- order counts

def test_order_count_examples():
    assert order_count(4, 3) == 6
    assert order_count(3, 3) == 8   # k = p
    assert order_count(2, 3) == 9   # both divisibility branches sum
    assert order_count(5, 3) == 0
    with pytest.raises(ValueError):
        order_count(1, 3)


FROZEN_CENSUS = {
    3: {1: 1, 2: 9, 3: 8, 4: 6},
    5: {1: 1, 2: 25, 3: 20, 4: 30, 5: 24, 6: 20},
    7: {1: 1, 2: 49, 3: 56, 4: 42, 6: 56, 7: 48, 8: 84},
}


@pytest.mark.parametrize("p", sorted(FROZEN_CENSUS))
def test_census_frozen_and_matches_formula(p):
    census = pgl2_order_census(p)
    assert census == FROZEN_CENSUS[p]
    assert sum(census.values()) == p * (p - 1) * (p + 1)
    for k in range(2, p + 2):
        assert census.get(k, 0) == order_count(k, p)


def test_census_scale_limit():
    with pytest.raises(ScaleLimit):
        pgl2_order_census(17)
