"""Class numbers of indefinite binary quadratic forms by reduction cycles.

This module deliberately shares no code with the unit/conductor route in
`orders`; it only uses exact integer helpers.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .arith import factor, is_square, isqrt
from .errors import InvariantViolation


@dataclass(frozen=True, order=True)
class IndefiniteForm:
    a: int
    b: int
    c: int

    @property
    def d(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def __call__(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y

    def is_primitive(self) -> bool:
        return gcd(self.a, self.b, self.c) == 1

    def is_reduced(self) -> bool:
        # 0 < b < sqrt(d) and sqrt(d) - b < 2|a| < sqrt(d) + b, decided with s = isqrt(d)
        s = isqrt(self.d)
        a2 = 2 * abs(self.a)
        return 0 < self.b <= s and a2 + self.b > s and a2 - self.b <= s

    def __str__(self):
        return f"({self.a}, {self.b}, {self.c})"


def _check_discriminant(d: int) -> None:
    if d <= 0 or d % 4 not in (0, 1) or is_square(d):
        raise ValueError(f"{d} is not a positive non-square discriminant")


def rho_step(F: IndefiniteForm) -> IndefiniteForm:
    """Right neighbour (c, b', c') with b' = -b mod 2|c| and sqrt(d) - 2|c| < b' < sqrt(d)."""
    if not F.is_reduced():
        raise ValueError(f"{F} is not reduced")
    d = F.d
    s = isqrt(d)
    c2 = 2 * abs(F.c)
    b = s - (s + F.b) % c2
    return IndefiniteForm(F.c, b, (b * b - d) // (4 * F.c))


def reduced_forms(d: int) -> list[IndefiniteForm]:
    """All properly primitive reduced forms of discriminant d, sorted by (a, b)."""
    _check_discriminant(d)
    s = isqrt(d)
    out = []
    for b in range(2 - d % 2, s + 1, 2):
        n = (d - b * b) // 4  # = -a*c
        for a in range((s - b) // 2 + 1, (s + b) // 2 + 1):
            if n % a:
                continue
            c = n // a
            for F in (IndefiniteForm(a, b, -c), IndefiniteForm(-a, b, c)):
                if F.is_primitive():
                    out.append(F)
    out.sort()
    return out


def cycles(d: int) -> list[list[IndefiniteForm]]:
    """Partition of the reduced forms into rho-cycles, each starting at its least form."""
    remaining = set(reduced_forms(d))
    out = []
    for start in sorted(remaining):
        if start not in remaining:
            continue
        cyc = [start]
        remaining.discard(start)
        G = rho_step(start)
        while G != start:
            if G not in remaining:
                raise InvariantViolation(f"rho is not a permutation of reduced forms at d={d}")
            remaining.discard(G)
            cyc.append(G)
            G = rho_step(G)
        out.append(cyc)
    return out


@lru_cache(maxsize=65536)
def form_class_number(d: int) -> int:
    """H(d): proper equivalence classes of primitive forms of discriminant d."""
    return len(cycles(d))


def principal_form(d: int) -> IndefiniteForm:
    """The reduced form (1, b, c) of discriminant d with b as large as possible."""
    _check_discriminant(d)
    s = isqrt(d)
    b = s if (s - d) % 2 == 0 else s - 1
    return IndefiniteForm(1, b, (b * b - d) // 4)


def unit_norm_from_forms(d: int) -> int:
    """Norm of the fundamental unit of the order of discriminant d.

    It is -1 exactly when the principal form represents -1, i.e. when
    (1, b, c) and (-1, b, -c) share a cycle.
    """
    P = principal_form(d)
    target = IndefiniteForm(-1, P.b, -P.c)
    G = rho_step(P)
    while G != P:
        if G == target:
            return -1
        G = rho_step(G)
    return 1


def split_discriminant(d: int) -> tuple[int, int]:
    """(d0, f) with d = d0 * f^2 and d0 a fundamental discriminant."""
    _check_discriminant(d)
    core = 1
    for p, e in factor(d):
        if e % 2:
            core *= p
    d0 = core if core % 4 == 1 else 4 * core
    f = isqrt(d // d0)
    if d0 * f * f != d:
        raise ValueError(f"{d} is not a discriminant")
    return d0, f


def strict_and_wide(d: int) -> tuple[int, int]:
    """(h_plus(d), h(d)) for the order of discriminant d."""
    h_plus = form_class_number(d)
    if unit_norm_from_forms(d) == -1:
        return h_plus, h_plus
    if h_plus % 2:
        raise InvariantViolation(f"H({d}) = {h_plus} is odd but the order has no unit of norm -1")
    return h_plus, h_plus // 2


def relative_form_class_number(d0: int, f: int) -> int:
    """H(d0 f^2) / H(d0)."""
    if f < 1:
        raise ValueError(f"conductor must be >= 1, got {f}")
    if split_discriminant(d0) != (d0, 1):
        raise ValueError(f"{d0} is not a fundamental discriminant")
    num, den = form_class_number(d0 * f * f), form_class_number(d0)
    if num % den:
        raise InvariantViolation(f"H({d0 * f * f}) = {num} is not a multiple of H({d0}) = {den}")
    return num // den
