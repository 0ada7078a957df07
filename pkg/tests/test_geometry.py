"""Conic points, the prime-class bijection, the P^1 identification and the
right standard projective action."""
import itertools
import random

import pytest

from metacommute.errors import ModulusMismatch, SingularMatrix, UnsupportedPrime
from metacommute.geometry import (
    ConicPoint,
    ProjPoint,
    conic_points,
    conic_to_prime,
    conic_to_proj,
    pgl2_act,
    trace_zero_rep,
)
from metacommute.modp import FpMat2, QuotQuat, phi, phi_inv, reduce_mod, two_square_rep
from metacommute.quatcore import HurwitzInt, PrimeClass, make, primes_of_norm

ODD_PRIMES = (3, 5, 7, 11, 13)


def _brute_force_conic(p):
    """Oracle: scan every nonzero triple in F_p^3 and normalize."""
    pts = set()
    for x, y, z in itertools.product(range(p), repeat=3):
        if (x, y, z) == (0, 0, 0) or (x * x + y * y + z * z) % p:
            continue
        lead = next(v for v in (x, y, z) if v)
        inv = pow(lead, -1, p)
        pts.add(((x * inv) % p, (y * inv) % p, (z * inv) % p))
    return sorted(pts)


# -------------------------------------------------------------------- conic

def test_conic_points_p3_frozen():
    assert [(c.x, c.y, c.z) for c in conic_points(3)] == [
        (1, 1, 1), (1, 1, 2), (1, 2, 1), (1, 2, 2)
    ]


@pytest.mark.parametrize("p", ODD_PRIMES + (17, 53))
def test_conic_points_against_brute_force(p):
    pts = conic_points(p)
    assert len(pts) == p + 1
    assert [(c.x, c.y, c.z) for c in pts] == _brute_force_conic(p)
    assert list(pts) == sorted(pts)


def test_conic_rejects_p_two():
    with pytest.raises(UnsupportedPrime):
        conic_points(2)


def test_conic_point_normalization_and_validation():
    c = ConicPoint.normalized(3, 2, 1, 1)  # scales to (1, 2, 2)
    assert (c.x, c.y, c.z) == (1, 2, 2)
    assert str(c) == "1:2:2"
    with pytest.raises(ValueError):
        ConicPoint.normalized(3, 0, 0, 0)
    with pytest.raises(ValueError):
        ConicPoint.normalized(3, 1, 0, 0)  # not on the conic


# --------------------------------------------------------- class <-> conic

def test_trace_zero_rep_example():
    # class of 1+i+j at p=3: t = k(1+i+j) = -i+j+k, normalized (1,2,2)
    P = PrimeClass.of(make(2, 2, 2, 0))
    c = trace_zero_rep(P)
    assert (c.x, c.y, c.z) == (1, 2, 2)


def test_trace_zero_point_is_killed_by_conjugate():
    # t lies in the reduced left ideal: t * conj(P) = 0 mod p
    for p in ODD_PRIMES:
        for P in primes_of_norm(p):
            c = trace_zero_rep(P)
            t = reduce_mod(HurwitzInt(0, 2 * c.x, 2 * c.y, 2 * c.z), p)
            assert t.norm() == 0
            assert not t * reduce_mod(P.rep.conjugate(), p)


@pytest.mark.parametrize("p", ODD_PRIMES)
def test_trace_zero_rep_bijection(p):
    classes = primes_of_norm(p)
    points = [trace_zero_rep(P) for P in classes]
    assert sorted(points) == list(conic_points(p))


def test_p3_bijection_frozen():
    got = {P.rep.coeffs: (trace_zero_rep(P).x, trace_zero_rep(P).y, trace_zero_rep(P).z)
           for P in primes_of_norm(3)}
    assert got == {
        (-3, -1, -1, -1): (1, 1, 1),
        (-3, -1, -1, 1): (1, 1, 2),
        (-3, -1, 1, -1): (1, 2, 1),
        (-3, -1, 1, 1): (1, 2, 2),
    }


def test_conic_to_prime_example():
    c = ConicPoint.normalized(3, 1, 2, 2)
    assert conic_to_prime(c) == PrimeClass.of(make(2, 2, 2, 0))


@pytest.mark.parametrize("p", ODD_PRIMES)
def test_round_trip_class_conic_class(p):
    for P in primes_of_norm(p):
        assert conic_to_prime(trace_zero_rep(P)) == P
    for c in conic_points(p):
        got = conic_to_prime(c)
        assert got.p == p and got.rep.norm() == p
        assert trace_zero_rep(got) == c


# --------------------------------------------------------------- conic -> P^1

def test_conic_to_proj_frozen_example():
    rep = two_square_rep(3)
    pt = conic_to_proj(ConicPoint.normalized(3, 1, 2, 2), rep)
    assert (pt.x, pt.y) == (1, 0)


def test_conic_to_proj_nilpotent_point():
    # the conic point whose matrix image has zero bottom-left entry is <0,1>
    for p in ODD_PRIMES:
        rep = two_square_rep(p)
        images = {conic_to_proj(c, rep): c for c in conic_points(p)}
        special = images[ProjPoint(p, 0, 1)]
        m = phi(QuotQuat(p, 0, special.x, special.y, special.z), rep)
        assert m.a3 == 0 and m.a1 == 0 and m.a4 == 0 and m.a2 != 0


@pytest.mark.parametrize("p", ODD_PRIMES)
def test_conic_to_proj_bijective(p):
    rep = two_square_rep(p)
    image = {conic_to_proj(c, rep) for c in conic_points(p)}
    assert len(image) == p + 1
    assert image == {ProjPoint(p, 0, 1)} | {ProjPoint(p, 1, m) for m in range(p)}


# ------------------------------------------------------------------ action

def test_action_moves_zero_one_to_bottom_row():
    A = FpMat2(7, 2, 3, 4, 5)
    assert pgl2_act(ProjPoint(7, 0, 1), A) == ProjPoint.normalized(7, 4, 5)


def test_action_formula_on_one_m():
    p = 7
    A = FpMat2(p, 2, 3, 4, 5)
    for m in range(p):
        got = pgl2_act(ProjPoint(p, 1, m), A)
        assert got == ProjPoint.normalized(p, 2 + 4 * m, 3 + 5 * m)


def test_identity_fixes_everything():
    for p in ODD_PRIMES:
        A = FpMat2.identity(p)
        for pt in [ProjPoint(p, 0, 1)] + [ProjPoint(p, 1, m) for m in range(p)]:
            assert pgl2_act(pt, A) == pt


def test_action_is_right_action_and_scale_invariant():
    rng = random.Random(67)
    for p in ODD_PRIMES:
        pts = [ProjPoint(p, 0, 1)] + [ProjPoint(p, 1, m) for m in range(p)]
        for _ in range(50):
            A = FpMat2(p, *(rng.randrange(p) for _ in range(4)))
            B = FpMat2(p, *(rng.randrange(p) for _ in range(4)))
            if A.det() == 0 or B.det() == 0:
                continue
            lam = rng.randrange(1, p)
            scaled = FpMat2(p, lam * A.a1, lam * A.a2, lam * A.a3, lam * A.a4)
            for pt in pts:
                assert pgl2_act(pgl2_act(pt, A), B) == pgl2_act(pt, A * B)
                assert pgl2_act(pt, scaled) == pgl2_act(pt, A)


def test_action_rejects_singular_and_mixed_moduli():
    with pytest.raises(SingularMatrix):
        pgl2_act(ProjPoint(5, 0, 1), FpMat2(5, 1, 2, 2, 4))
    with pytest.raises(ModulusMismatch):
        pgl2_act(ProjPoint(5, 0, 1), FpMat2(7, 1, 0, 0, 1))


def test_equivariance_of_conjugation_and_right_action():
    # conjugating the matrix image of a conic point by A is the same as the
    # right standard action on its P^1 label
    rng = random.Random(71)
    for p in ODD_PRIMES:
        rep = two_square_rep(p)
        for _ in range(30):
            g = QuotQuat(p, *(rng.randrange(p) for _ in range(4)))
            if g.norm() == 0:
                continue
            A = phi(g, rep)
            for c in conic_points(p):
                m = phi(QuotQuat(p, 0, c.x, c.y, c.z), rep)
                conj = A.inverse() * m * A
                # read the conjugated matrix back as a conic point
                gamma = phi_inv(conj, rep)
                assert gamma.c1 == 0
                c2 = ConicPoint.normalized(p, gamma.ci, gamma.cj, gamma.ck)
                assert conic_to_proj(c2, rep) == pgl2_act(conic_to_proj(c, rep), A)
