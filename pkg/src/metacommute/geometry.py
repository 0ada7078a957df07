"""The conic x^2 + y^2 + z^2 = 0 in P^2(F_p), its bijection with prime
classes through the trace-zero element of the reduced ideal, the further
identification with P^1(F_p), and the right standard PGL_2 action.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from metacommute.errors import (
    InternalInvariantViolation,
    ModulusMismatch,
    SingularMatrix,
)
from metacommute.modp import (
    FpMat2,
    QuotQuat,
    TwoSquareRep,
    _require_odd_prime,
    phi,
    reduce_mod,
)
from metacommute.quatcore import HurwitzInt, PrimeClass, gcrd


@dataclass(frozen=True, slots=True, order=True)
class ConicPoint:
    """A point (x : y : z) on the conic, first nonzero coordinate scaled to 1."""

    p: int
    x: int
    y: int
    z: int

    @classmethod
    def normalized(cls, p: int, x: int, y: int, z: int) -> "ConicPoint":
        x, y, z = x % p, y % p, z % p
        lead = x or y or z
        if not lead:
            raise ValueError("(0, 0, 0) is not a projective point")
        inv = pow(lead, -1, p)
        pt = cls(p, (x * inv) % p, (y * inv) % p, (z * inv) % p)
        if (pt.x ** 2 + pt.y ** 2 + pt.z ** 2) % p != 0:
            raise ValueError(f"({x}:{y}:{z}) is not on the conic mod {p}")
        return pt

    def __str__(self) -> str:
        return f"{self.x}:{self.y}:{self.z}"


@dataclass(frozen=True, slots=True, order=True)
class ProjPoint:
    """A point of P^1(F_p) in canonical form <0,1> or <1,m>."""

    p: int
    x: int
    y: int

    @classmethod
    def normalized(cls, p: int, x: int, y: int) -> "ProjPoint":
        x, y = x % p, y % p
        if x == 0:
            if y == 0:
                raise ValueError("(0, 0) is not a projective point")
            return cls(p, 0, 1)
        return cls(p, 1, (y * pow(x, -1, p)) % p)

    def __str__(self) -> str:
        return f"[{self.x},{self.y}]"


@lru_cache(maxsize=None)
def conic_points(p: int) -> tuple[ConicPoint, ...]:
    """All p+1 points of the conic, lexicographically sorted."""
    _require_odd_prime(p)
    pts = []
    # canonical representatives of P^2(F_p): (1,y,z), (0,1,z), (0,0,1)
    for y in range(p):
        for z in range(p):
            if (1 + y * y + z * z) % p == 0:
                pts.append(ConicPoint(p, 1, y, z))
    for z in range(p):
        if (1 + z * z) % p == 0:
            pts.append(ConicPoint(p, 0, 1, z))
    # (0,0,1) has x^2+y^2+z^2 = 1, never on the conic
    pts.sort()
    if len(pts) != p + 1:
        raise InternalInvariantViolation(f"conic over F_{p} has {len(pts)} points")
    return tuple(pts)


@lru_cache(maxsize=None)
def trace_zero_rep(P: PrimeClass) -> ConicPoint:
    """The conic point of a prime class: coordinates of the unique-up-to-
    scaling trace-zero element t = ai + bj + ck of the reduced left ideal
    generated by the class mod p.
    """
    p = P.p
    _require_odd_prime(p)
    pbar = reduce_mod(P.rep, p)
    t = None
    if pbar.trace() == 0:
        t = pbar
    else:
        tr0 = pbar.trace()
        for e in ((0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)):
            v = QuotQuat(p, *e) * pbar
            w = v.scale(tr0) + pbar.scale(-v.trace())
            if w:
                t = w
                break
    if t is None or t.c1 != 0 or t.norm() != 0:
        raise InternalInvariantViolation(
            f"no trace-zero generator found for {P!r}"
        )
    return ConicPoint.normalized(p, t.ci, t.cj, t.ck)


@lru_cache(maxsize=None)
def conic_to_prime(c: ConicPoint) -> PrimeClass:
    """The prime class of a conic point: lift t = xi + yj + zk with
    coordinates in [0, p) and take the class of gcrd(lift, p)."""
    p = c.p
    lift = HurwitzInt(0, 2 * c.x, 2 * c.y, 2 * c.z)
    d = gcrd(lift, HurwitzInt.scalar(p))
    if d.norm() != p:
        raise InternalInvariantViolation(
            f"gcrd(lift, {p}) has norm {d.norm()}, expected {p}"
        )
    return PrimeClass(rep=d, p=p)


def conic_to_proj(c: ConicPoint, rep: TwoSquareRep) -> ProjPoint:
    """Identify a conic point with a point of P^1(F_p).

    The matrix image of the pure quaternion xi + yj + zk is trace-zero with
    zero determinant; the bottom row (a3, a4) read as projective
    coordinates gives <0,1> when a3 = 0 and <1, a4/a3> otherwise.
    """
    p = c.p
    m = phi(QuotQuat(p, 0, c.x, c.y, c.z), rep)
    if m.trace() != 0 or m.det() != 0 or not any(m.entries):
        raise InternalInvariantViolation(
            f"phi image {m.entries} of conic point {c} is not a trace-zero "
            "rank-one matrix"
        )
    if m.a3 == 0:
        # trace 0 and det 0 force the diagonal to vanish here, leaving the
        # projectively unique nilpotent [[0,1],[0,0]]
        return ProjPoint(p, 0, 1)
    return ProjPoint.normalized(p, m.a3, m.a4)


def pgl2_act(pt: ProjPoint, A: FpMat2) -> ProjPoint:
    """Right standard action <x,y> * A = <a1 x + a3 y, a2 x + a4 y>."""
    if A.p != pt.p:
        raise ModulusMismatch(f"moduli differ: {A.p} vs {pt.p}")
    if A.det() == 0:
        raise SingularMatrix("projective action needs an invertible matrix")
    return ProjPoint.normalized(
        pt.p, A.a1 * pt.x + A.a3 * pt.y, A.a2 * pt.x + A.a4 * pt.y
    )
