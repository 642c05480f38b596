"""Fundamental units of real quadratic fields and their powers, exactly and mod f.

A unit is stored as (x + y*sqrt(m))/c with c = 2 when m = 1 mod 4 and c = 1
otherwise. Internally all products are done in the integral basis (1, w) with
w = sqrt(m) (c = 1) or w = (1 + sqrt(m))/2 (c = 2), so nothing is ever halved.
"""

from dataclasses import dataclass
from functools import lru_cache

from .arith import isqrt, is_squarefree
from .errors import UnsupportedInput


@dataclass(frozen=True)
class QuadUnit:
    m: int
    x: int
    y: int
    c: int
    norm: int

    def __post_init__(self):
        if self.c != (2 if self.m % 4 == 1 else 1):
            raise ValueError(f"denominator {self.c} does not match m={self.m}")
        if self.x * self.x - self.m * self.y * self.y != self.norm * self.c * self.c:
            raise ValueError(f"({self.x}, {self.y}) is not a unit of Q(sqrt({self.m}))")
        if self.c == 2 and (self.x - self.y) % 2:
            raise ValueError("x and y must have equal parity when c = 2")

    @property
    def integral(self) -> tuple[int, int]:
        """Coordinates (u, v) with unit = u + v*w."""
        return ((self.x - self.y) // 2, self.y) if self.c == 2 else (self.x, self.y)

    def __str__(self):
        return f"x={self.x} y={self.y} c={self.c} norm={self.norm:+d}"


@dataclass(frozen=True)
class PellCoords:
    """Coordinates of the n-th power of a unit: (a + b*sqrt(m))/c."""

    n: int
    a: int
    b: int
    m: int
    c: int


def _basis(m: int) -> tuple[int, int, int]:
    """(c, t, r) with w^2 = t*w + r."""
    return (2, 1, (m - 1) // 4) if m % 4 == 1 else (1, 0, m)


def _mul(p, q, t, r, mod=None):
    u1, v1 = p
    u2, v2 = q
    vv = v1 * v2
    u = u1 * u2 + r * vv
    v = u1 * v2 + u2 * v1 + t * vv
    if mod is not None:
        return u % mod, v % mod
    return u, v


def _pow(base, n, t, r, mod=None):
    result = (1, 0) if mod is None else (1 % mod, 0)
    while n:
        if n & 1:
            result = _mul(result, base, t, r, mod)
        n >>= 1
        if n:
            base = _mul(base, base, t, r, mod)
    return result


def _pqa(m: int, modulus: int | None = None) -> tuple[int, int, int]:
    """Run the continued fraction of w to the end of its first period.

    Returns (p, q, norm) where p/q is the last convergent of the period,
    reduced mod `modulus` when given. The surd is (P + sqrt(m))/Q with
    Q | m - P^2 throughout.
    """
    c = 2 if m % 4 == 1 else 1
    s = isqrt(m)
    P0, Q0 = (1, 2) if c == 2 else (0, 1)
    a = (P0 + s) // Q0
    p_prev, p = 1, a
    q_prev, q = 0, 1
    P = a * Q0 - P0
    Q = (m - P * P) // Q0
    k = 1
    while Q != Q0:
        a = (P + s) // Q
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        if modulus is not None:
            p %= modulus
            q %= modulus
        P = a * Q - P
        Q = (m - P * P) // Q
        k += 1
    return p, q, (-1) ** k


@lru_cache(maxsize=4096)
def fundamental_unit(m: int) -> QuadUnit:
    """Smallest unit > 1 of the ring of integers of Q(sqrt(m))."""
    if m <= 1 or not is_squarefree(m):
        raise ValueError(f"{m} is not a squarefree integer > 1")
    p, q, norm = _pqa(m)
    c = 2 if m % 4 == 1 else 1
    x = 2 * p - q if c == 2 else p
    return QuadUnit(m, x, q, c, norm)


def unit_y_mod(m: int, modulus: int) -> tuple[int, int]:
    """(y mod modulus, norm) of the fundamental unit without building it exactly."""
    if m <= 1 or not is_squarefree(m):
        raise ValueError(f"{m} is not a squarefree integer > 1")
    _, q, norm = _pqa(m, modulus)
    return q % modulus, norm


def unit_power(u: QuadUnit, n: int) -> PellCoords:
    if n < 1:
        raise ValueError(f"exponent must be >= 1, got {n}")
    c, t, r = _basis(u.m)
    uu, vv = _pow(u.integral, n, t, r)
    return PellCoords(n, c * uu + t * vv, vv, u.m, c)


def next_coords(u: QuadUnit, pc: PellCoords) -> PellCoords:
    """One step of a_{n+1} = (a1 a_n + m b1 b_n)/c, b_{n+1} = (a1 b_n + b1 a_n)/c."""
    a = u.x * pc.a + u.m * u.y * pc.b
    b = u.x * pc.b + u.y * pc.a
    if a % u.c or b % u.c:
        raise ArithmeticError("recurrence left the ring of integers")
    return PellCoords(pc.n + 1, a // u.c, b // u.c, u.m, u.c)


@dataclass(frozen=True)
class ModMatrix2:
    """The matrix [[A, m*B], [B, A]] with entries mod f."""

    f: int
    A: int
    B: int
    m_res: int

    @classmethod
    def identity(cls, f: int, m: int) -> "ModMatrix2":
        return cls(f, 1 % f, 0, m % f)

    def __matmul__(self, other: "ModMatrix2") -> "ModMatrix2":
        if (self.f, self.m_res) != (other.f, other.m_res):
            raise ValueError("matrices over different moduli or fields")
        f = self.f
        A = (self.A * other.A + self.m_res * self.B * other.B) % f
        B = (self.A * other.B + self.B * other.A) % f
        return ModMatrix2(f, A, B, self.m_res)

    def det(self) -> int:
        return (self.A * self.A - self.m_res * self.B * self.B) % self.f

    def is_diagonal(self) -> bool:
        return self.B % self.f == 0

    def is_identity(self) -> bool:
        return self.B % self.f == 0 and (self.A - 1) % self.f == 0

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.A, self.m_res * self.B % self.f), (self.B, self.A))


def unit_matrix_mod(u: QuadUnit, f: int) -> ModMatrix2:
    """Multiplication-by-unit matrix mod f, in c-cleared coordinates."""
    if f < 2:
        raise ValueError(f"modulus must be >= 2, got {f}")
    if u.c == 2:
        if f % 2 == 0:
            raise UnsupportedInput(f"cannot halve mod even f={f} for m={u.m}; use integral_coords_mod")
        inv2 = pow(2, -1, f)
        return ModMatrix2(f, u.x * inv2 % f, u.y * inv2 % f, u.m % f)
    return ModMatrix2(f, u.x % f, u.y % f, u.m % f)


def matrix_power_mod(M: ModMatrix2, t: int) -> ModMatrix2:
    if t < 0:
        raise ValueError(f"exponent must be >= 0, got {t}")
    result = ModMatrix2.identity(M.f, M.m_res)
    while t:
        if t & 1:
            result = result @ M
        t >>= 1
        if t:
            M = M @ M
    return result


def coords_mod(u: QuadUnit, n: int, f: int) -> tuple[int, int]:
    """(a_n mod f, b_n mod f) via the matrix route."""
    if n < 1:
        raise ValueError(f"exponent must be >= 1, got {n}")
    P = matrix_power_mod(unit_matrix_mod(u, f), n)
    return u.c * P.A % f, u.c * P.B % f


def integral_coords_mod(u: QuadUnit, n: int, f: int) -> tuple[int, int]:
    """(a_n mod f, b_n mod f) via powers of (u, v) in the integral basis; any f >= 1."""
    if n < 0:
        raise ValueError(f"exponent must be >= 0, got {n}")
    c, t, r = _basis(u.m)
    uu, vv = _pow(u.integral, n, t, r, f)
    return (c * uu + t * vv) % f, vv % f


def b_mod(u: QuadUnit, n: int, f: int) -> int:
    """b_n mod f, choosing the matrix route when it is defined."""
    if u.c == 2 and f % 2 == 0:
        return integral_coords_mod(u, n, f)[1]
    return coords_mod(u, n, f)[1]
