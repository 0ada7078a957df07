"""The quotient algebra of the Hurwitz order mod an odd prime p, and its
identification with 2x2 matrices over F_p.

Field scalars are plain ints in [0, p); the containing values carry the
modulus. Reduction of a doubled-coordinate quaternion multiplies by the
inverse of 2 mod p, which exists because p is odd.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from metacommute.errors import ModulusMismatch, SingularMatrix, UnsupportedPrime
from metacommute.quatcore import HurwitzInt, _is_rational_prime


def _require_odd_prime(p: int) -> None:
    if p == 2 or not _is_rational_prime(p):
        raise UnsupportedPrime(f"expected an odd rational prime, got {p}")


def legendre(n: int, p: int) -> int:
    """Legendre symbol (n/p) via Euler's criterion: 0, +1 or -1."""
    _require_odd_prime(p)
    n %= p
    if n == 0:
        return 0
    e = pow(n, (p - 1) // 2, p)
    return 1 if e == 1 else -1


@dataclass(frozen=True, slots=True)
class QuotQuat:
    """A quaternion mod p, coordinates in the basis {1, i, j, k}."""

    p: int
    c1: int
    ci: int
    cj: int
    ck: int

    def __post_init__(self):
        for name in ("c1", "ci", "cj", "ck"):
            object.__setattr__(self, name, getattr(self, name) % self.p)

    def _same(self, other: "QuotQuat") -> None:
        if self.p != other.p:
            raise ModulusMismatch(f"moduli differ: {self.p} vs {other.p}")

    @property
    def coords(self) -> tuple[int, int, int, int]:
        return (self.c1, self.ci, self.cj, self.ck)

    def __bool__(self) -> bool:
        return any(self.coords)

    def __add__(self, other: "QuotQuat") -> "QuotQuat":
        self._same(other)
        return QuotQuat(self.p, self.c1 + other.c1, self.ci + other.ci,
                        self.cj + other.cj, self.ck + other.ck)

    def __mul__(self, other: "QuotQuat") -> "QuotQuat":
        self._same(other)
        a, b, c, d = self.coords
        e, f, g, h = other.coords
        return QuotQuat(
            self.p,
            a * e - b * f - c * g - d * h,
            a * f + b * e + c * h - d * g,
            a * g - b * h + c * e + d * f,
            a * h + b * g - c * f + d * e,
        )

    def scale(self, s: int) -> "QuotQuat":
        return QuotQuat(self.p, s * self.c1, s * self.ci, s * self.cj, s * self.ck)

    def conjugate(self) -> "QuotQuat":
        return QuotQuat(self.p, self.c1, -self.ci, -self.cj, -self.ck)

    def norm(self) -> int:
        return (self.c1 ** 2 + self.ci ** 2 + self.cj ** 2 + self.ck ** 2) % self.p

    def trace(self) -> int:
        return (2 * self.c1) % self.p

    def inverse(self) -> "QuotQuat":
        n = self.norm()
        if n == 0:
            raise SingularMatrix("quaternion with norm 0 mod p has no inverse")
        return self.conjugate().scale(pow(n, -1, self.p))

    def is_central(self) -> bool:
        """True iff the value lies in F_p (zero i, j, k coordinates)."""
        return self.ci == 0 and self.cj == 0 and self.ck == 0


def reduce_mod(h: HurwitzInt, p: int) -> QuotQuat:
    """Reduction mod p: a ring homomorphism from the Hurwitz order.

    Doubled coordinates are folded with the inverse of 2 mod p, so
    half-integer quaternions reduce exactly.
    """
    _require_odd_prime(p)
    inv2 = pow(2, -1, p)
    return QuotQuat(p, h.A * inv2, h.B * inv2, h.C * inv2, h.D * inv2)


@dataclass(frozen=True, slots=True)
class TwoSquareRep:
    """A pair (a, b) with a^2 + b^2 = -1 mod p."""

    p: int
    a: int
    b: int


@lru_cache(maxsize=None)
def two_square_rep(p: int) -> TwoSquareRep:
    """The canonical representation of -1 as a sum of two squares mod p:
    smallest a >= 0 with -1 - a^2 a square, then smallest such b >= 0."""
    _require_odd_prime(p)
    roots: dict[int, int] = {}
    for b in range(p - 1, -1, -1):
        roots[(b * b) % p] = b  # descending, so the smallest root survives
    for a in range(p):
        t = (-1 - a * a) % p
        if t in roots:
            return TwoSquareRep(p, a, roots[t])
    raise AssertionError("unreachable: -1 is always a sum of two squares mod p")


@dataclass(frozen=True, slots=True)
class FpMat2:
    """A 2x2 matrix over F_p, row-major entries [[a1, a2], [a3, a4]]."""

    p: int
    a1: int
    a2: int
    a3: int
    a4: int

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4"):
            object.__setattr__(self, name, getattr(self, name) % self.p)

    def _same(self, other: "FpMat2") -> None:
        if self.p != other.p:
            raise ModulusMismatch(f"moduli differ: {self.p} vs {other.p}")

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return (self.a1, self.a2, self.a3, self.a4)

    def __add__(self, other: "FpMat2") -> "FpMat2":
        self._same(other)
        return FpMat2(self.p, self.a1 + other.a1, self.a2 + other.a2,
                      self.a3 + other.a3, self.a4 + other.a4)

    def __mul__(self, other: "FpMat2") -> "FpMat2":
        self._same(other)
        return FpMat2(
            self.p,
            self.a1 * other.a1 + self.a2 * other.a3,
            self.a1 * other.a2 + self.a2 * other.a4,
            self.a3 * other.a1 + self.a4 * other.a3,
            self.a3 * other.a2 + self.a4 * other.a4,
        )

    def det(self) -> int:
        return (self.a1 * self.a4 - self.a2 * self.a3) % self.p

    def trace(self) -> int:
        return (self.a1 + self.a4) % self.p

    def inverse(self) -> "FpMat2":
        d = self.det()
        if d == 0:
            raise SingularMatrix("matrix with det 0 has no inverse")
        dinv = pow(d, -1, self.p)
        return FpMat2(self.p, dinv * self.a4, -dinv * self.a2,
                      -dinv * self.a3, dinv * self.a1)

    @classmethod
    def identity(cls, p: int) -> "FpMat2":
        return cls(p, 1, 0, 0, 1)


def mat2_mul(m: FpMat2, n: FpMat2) -> FpMat2:
    return m * n


def mat2_inv(m: FpMat2) -> FpMat2:
    return m.inverse()


def mat2_det(m: FpMat2) -> int:
    return m.det()


def mat2_trace(m: FpMat2) -> int:
    return m.trace()


def phi(gamma: QuotQuat, rep: TwoSquareRep) -> FpMat2:
    """The splitting isomorphism onto 2x2 matrices over F_p.

    With gamma = g1 + g2 i + g3 j + g4 k and a^2 + b^2 = -1 mod p:

        [[g1 + g2 a + g4 b,   g3 + g4 a - g2 b],
         [-g3 + g4 a - g2 b,  g1 - g2 a - g4 b]]

    Preserves products and sums; det transports the norm and the matrix
    trace transports the quaternion trace.
    """
    if gamma.p != rep.p:
        raise ModulusMismatch(f"moduli differ: {gamma.p} vs {rep.p}")
    g1, g2, g3, g4 = gamma.coords
    a, b = rep.a, rep.b
    return FpMat2(
        gamma.p,
        g1 + g2 * a + g4 * b,
        g3 + g4 * a - g2 * b,
        -g3 + g4 * a - g2 * b,
        g1 - g2 * a - g4 * b,
    )


@lru_cache(maxsize=None)
def _phi_matrix_inverse(p: int, a: int, b: int) -> tuple[tuple[int, ...], ...]:
    """Inverse of the 4x4 matrix of phi (columns = flattened images of the
    basis 1, i, j, k), by Gauss-Jordan elimination mod p."""
    rep = TwoSquareRep(p, a, b)
    cols = [phi(QuotQuat(p, *e), rep).entries
            for e in ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))]
    # aug[r] = row r of T | row r of identity
    aug = [[cols[c][r] for c in range(4)] + [1 if r == c else 0 for c in range(4)]
           for r in range(4)]
    for col in range(4):
        pivot = next(r for r in range(col, 4) if aug[r][col] % p != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = pow(aug[col][col], -1, p)
        aug[col] = [(v * inv) % p for v in aug[col]]
        for r in range(4):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [(aug[r][c] - f * aug[col][c]) % p for c in range(8)]
    return tuple(tuple(row[4:]) for row in aug)


def phi_inv(m: FpMat2, rep: TwoSquareRep) -> QuotQuat:
    """The unique quaternion mod p mapping to m under phi."""
    if m.p != rep.p:
        raise ModulusMismatch(f"moduli differ: {m.p} vs {rep.p}")
    tinv = _phi_matrix_inverse(m.p, rep.a, rep.b)
    flat = m.entries
    g = [sum(tinv[r][c] * flat[c] for c in range(4)) % m.p for r in range(4)]
    return QuotQuat(m.p, g[0], g[1], g[2], g[3])
