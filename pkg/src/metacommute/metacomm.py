"""The metacommutation map on prime classes of norm p, computed three
independent ways, plus the permutation analytics.

Routes:
  * meta_divide  - factor-extraction: the class of gcrd(P*Q, p).
  * meta_conj    - conjugate the trace-zero conic representative by Q mod p.
  * meta_permutation - transport to P^1(F_p) and apply the right standard
    action of the matrix image of Q.

All three agree; the verification sweeps check that exhaustively.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from metacommute.errors import (
    CoprimalityError,
    InternalInvariantViolation,
    NonPrimeNorm,
    ScaleLimit,
    UnsupportedPrime,
)
from metacommute.geometry import (
    ConicPoint,
    ProjPoint,
    conic_points,
    conic_to_prime,
    conic_to_proj,
    pgl2_act,
    trace_zero_rep,
)
from metacommute.modp import FpMat2, legendre, phi, reduce_mod, two_square_rep
from metacommute.quatcore import (
    HurwitzInt,
    PrimeClass,
    _is_rational_prime,
    gcrd,
)

_CENSUS_MAX_P = 13


def _check_coprime(p: int, Q: HurwitzInt) -> int:
    q = Q.norm()
    if gcd(q, p) != 1:
        raise CoprimalityError(f"N(Q) = {q} is not coprime to p = {p}")
    return q


@dataclass(frozen=True, slots=True)
class MetaQuery:
    """One metacommutation instance: the pair (p, Q) with N(Q) coprime to p."""

    p: int
    Q: HurwitzInt
    q: int
    central: bool

    @classmethod
    def create(cls, p: int, Q: HurwitzInt) -> "MetaQuery":
        _require_odd(p)
        q = _check_coprime(p, Q)
        return cls(p=p, Q=Q, q=q, central=reduce_mod(Q, p).is_central())


@dataclass(frozen=True, slots=True)
class Permutation:
    """A permutation of the p+1 conic points, in their lexicographic order."""

    p: int
    ground: tuple[ConicPoint, ...]
    images: tuple[int, ...]

    def __post_init__(self):
        if self.ground != conic_points(self.p):
            raise InternalInvariantViolation("ground set must be the sorted conic")
        if sorted(self.images) != list(range(len(self.ground))):
            raise InternalInvariantViolation("images are not a bijection")


@dataclass(frozen=True, slots=True)
class PermReport:
    """Cycle-level summary: sign, fixed points, non-trivial cycle lengths."""

    sign: int
    fixed_count: int
    cycle_lengths: tuple[int, ...]
    uniform_length: bool


def meta_divide(P: PrimeClass, Q: HurwitzInt) -> PrimeClass:
    """The partner class via factor extraction: class of gcrd(P*Q, p)."""
    p = P.p
    _require_odd(p)
    _check_coprime(p, Q)
    d = gcrd(P.rep * Q, HurwitzInt.scalar(p))
    if d.norm() != p:
        raise InternalInvariantViolation(
            f"gcrd(PQ, {p}) has norm {d.norm()}, expected {p}"
        )
    return PrimeClass(rep=d, p=p)


def meta_conj(P: PrimeClass, Q: HurwitzInt) -> PrimeClass:
    """The partner class via conjugation of the trace-zero representative:
    the conic point of Qbar^-1 * t * Qbar."""
    p = P.p
    _require_odd(p)
    _check_coprime(p, Q)
    c = trace_zero_rep(P)
    t = reduce_mod(HurwitzInt(0, 2 * c.x, 2 * c.y, 2 * c.z), p)
    qbar = reduce_mod(Q, p)
    t2 = qbar.inverse() * t * qbar
    if t2.c1 != 0 or not t2:
        raise InternalInvariantViolation("conjugation lost the trace-zero form")
    return conic_to_prime(ConicPoint.normalized(p, t2.ci, t2.cj, t2.ck))


def meta_permutation(query: MetaQuery) -> Permutation:
    """The full permutation of the p+1 conic points induced by Q, computed
    through the right standard action on P^1(F_p)."""
    p = query.p
    ground = conic_points(p)
    rep = two_square_rep(p)
    A = phi(reduce_mod(query.Q, p), rep)
    proj = [conic_to_proj(c, rep) for c in ground]
    index_of = {pt: i for i, pt in enumerate(proj)}
    if len(index_of) != len(ground):
        raise InternalInvariantViolation("conic -> P^1 map is not injective")
    images = tuple(index_of[pgl2_act(pt, A)] for pt in proj)
    return Permutation(p=p, ground=ground, images=images)


def cycle_decomposition(images: tuple[int, ...]) -> list[list[int]]:
    """Cycles of a permutation given as an image array, each cycle starting
    at its smallest element, cycles sorted by that element."""
    seen: set[int] = set()
    cycles = []
    for start in range(len(images)):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        j = images[start]
        while j != start:
            cycle.append(j)
            seen.add(j)
            j = images[j]
        cycles.append(cycle)
    return cycles


def analyze(perm: Permutation) -> PermReport:
    """Sign, fixed-point count and non-fixed cycle lengths of a permutation."""
    cycles = cycle_decomposition(perm.images)
    fixed = sum(1 for c in cycles if len(c) == 1)
    lengths = tuple(sorted(len(c) for c in cycles if len(c) > 1))
    sign = -1 if sum(1 for c in cycles if len(c) % 2 == 0) % 2 else 1
    return PermReport(
        sign=sign,
        fixed_count=fixed,
        cycle_lengths=lengths,
        uniform_length=len(set(lengths)) <= 1,
    )


def predict(query: MetaQuery) -> tuple[int, int]:
    """Predicted (sign, fixed point count) for a query with prime N(Q):
    sign is the quadratic character of q mod p; the fixed-point count is
    1 + legendre(tr(Q)^2 - 4q, p), except that a central reduction fixes
    all p+1 points."""
    if not _is_rational_prime(query.q):
        raise NonPrimeNorm(
            f"predictions need a prime N(Q); got {query.q}"
        )
    sign = legendre(query.q, query.p)
    if query.central:
        return sign, query.p + 1
    disc = query.Q.trace() ** 2 - 4 * query.q
    return sign, 1 + legendre(disc, query.p)


def _totient(k: int) -> int:
    result = k
    n = k
    f = 2
    while f * f <= n:
        if n % f == 0:
            while n % f == 0:
                n //= f
            result -= result // f
        f += 1
    if n > 1:
        result -= result // n
    return result


def order_count(k: int, p: int) -> int:
    """Number of elements of order k > 1 in the projective group on p+1
    points: phi(k) p(p-1)/2 for k | p+1, plus phi(k) p(p+1)/2 for k | p-1
    (both branches apply at k = 2), and p^2 - 1 for k = p."""
    if k <= 1:
        raise ValueError("order_count is defined for k > 1")
    _require_odd(p)
    total = 0
    if (p + 1) % k == 0:
        total += _totient(k) * p * (p - 1) // 2
    if (p - 1) % k == 0:
        total += _totient(k) * p * (p + 1) // 2
    if k == p:
        total += p * p - 1
    return total


def _require_odd(p: int) -> None:
    if p == 2 or not _is_rational_prime(p):
        raise UnsupportedPrime(f"expected an odd rational prime, got {p}")


def _proj_points(p: int) -> list[ProjPoint]:
    return [ProjPoint(p, 0, 1)] + [ProjPoint(p, 1, m) for m in range(p)]


def pgl2_order_census(p: int) -> dict[int, int]:
    """Element orders of the full projective group, by brute enumeration of
    all p(p-1)(p+1) matrices mod scalars acting on P^1(F_p)."""
    _require_odd(p)
    if p > _CENSUS_MAX_P:
        raise ScaleLimit(f"census enumerates the full group only for p <= {_CENSUS_MAX_P}")
    pts = _proj_points(p)
    idx = {pt: i for i, pt in enumerate(pts)}
    n = len(pts)
    identity = list(range(n))
    tally: dict[int, int] = {}
    # canonical representatives mod scalars: first nonzero entry equal to 1
    mats = []
    for a2 in range(p):
        for a3 in range(p):
            for a4 in range(p):
                mats.append((1, a2, a3, a4))
    for a3 in range(p):
        for a4 in range(p):
            mats.append((0, 1, a3, a4))
    for entries in mats:
        m = FpMat2(p, *entries)
        if m.det() == 0:
            continue
        images = [idx[pgl2_act(pt, m)] for pt in pts]
        order = 1
        cur = images
        while cur != identity:
            cur = [images[i] for i in cur]
            order += 1
        tally[order] = tally.get(order, 0) + 1
    if sum(tally.values()) != p * (p - 1) * (p + 1):
        raise InternalInvariantViolation("census does not cover the whole group")
    return dict(sorted(tally.items()))
