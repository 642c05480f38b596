"""Relative class numbers h_{d0}(f) = psi(f)/phi(f) and the strict/ordinary bookkeeping."""

from dataclasses import dataclass
from functools import lru_cache

from .arith import divisors, is_prime, kronecker, prime_divisors, squarefree_part, discriminant_of
from .errors import InvariantViolation
from .pell import b_mod, fundamental_unit, integral_coords_mod, matrix_power_mod, unit_matrix_mod


@dataclass(frozen=True)
class OrderId:
    d0: int
    f: int
    m: int

    @classmethod
    def of(cls, d0: int, f: int) -> "OrderId":
        if f < 1:
            raise ValueError(f"conductor must be >= 1, got {f}")
        return cls(d0, f, _field(d0))

    @property
    def discriminant(self) -> int:
        return self.d0 * self.f * self.f


@dataclass(frozen=True)
class ClassRecord:
    order: OrderId
    psi: int
    phi: int
    h_rel: int
    norm_eps_d0: int
    unit_exponent: int  # least k with eps^k in O_f, so eps_{d0 f^2} = eps^k
    norm_eps_d0f2: int
    h_plus_rel: int
    H_rel: int

    def as_dict(self) -> dict:
        out = {"d0": self.order.d0, "f": self.order.f, "m": self.order.m}
        out.update({k: getattr(self, k) for k in (
            "psi", "phi", "h_rel", "norm_eps_d0", "unit_exponent",
            "norm_eps_d0f2", "h_plus_rel", "H_rel")})
        return out


@lru_cache(maxsize=None)
def _field(d0: int) -> int:
    return squarefree_part(d0)


def psi(d0: int, f: int) -> int:
    """f * prod over primes q | f of (1 - (d0/q)/q)."""
    _field(d0)
    if f < 1:
        raise ValueError(f"conductor must be >= 1, got {f}")
    out = f
    for q in prime_divisors(f):
        out = out // q * (q - kronecker(d0, q))
    return out


def _phi_exhaustive(d0: int, f: int, bound: int) -> int:
    u = fundamental_unit(_field(d0))
    for n in range(1, bound + 1):
        if integral_coords_mod(u, n, f)[1] == 0:
            return n
    raise InvariantViolation(f"no power <= {bound} of eps lies in O_{f} (d0={d0})")


def phi(d0: int, f: int, exhaustive: bool = False) -> int:
    """Least n >= 1 with eps^n in O_f, i.e. f | b_n.

    The default search only tries divisors of psi(f), which is valid because
    psi/phi is an integer. `exhaustive=True` scans n = 1, 2, ... instead.
    """
    if f < 1:
        raise ValueError(f"conductor must be >= 1, got {f}")
    if f == 1:
        _field(d0)
        return 1
    bound = psi(d0, f)
    if exhaustive:
        return _phi_exhaustive(d0, f, bound)
    u = fundamental_unit(_field(d0))
    for n in divisors(bound):
        if b_mod(u, n, f) == 0:
            return n
    raise InvariantViolation(f"eps^psi(f) not in O_{f} for d0={d0}")


def relative_class_number(d0: int, f: int) -> int:
    s, p = psi(d0, f), phi(d0, f)
    if s % p:
        raise InvariantViolation(f"phi={p} does not divide psi={s} for d0={d0}, f={f}")
    return s // p


def class_record(d0: int, f: int) -> ClassRecord:
    order = OrderId.of(d0, f)
    s, p = psi(d0, f), phi(d0, f)
    if s % p:
        raise InvariantViolation(f"phi={p} does not divide psi={s} for d0={d0}, f={f}")
    h = s // p
    norm = fundamental_unit(order.m).norm
    k = p
    norm_f = norm**k
    if norm == 1 and norm_f == -1:
        raise InvariantViolation(f"norm +1 field with norm -1 order unit, d0={d0}, f={f}")
    h_plus = 2 * h if (norm == -1 and norm_f == 1) else h
    return ClassRecord(order, s, p, h, norm, k, norm_f, h_plus, h_plus)


def has_trivial_relative_order(m: int) -> int | None:
    """A prime f | m with f not dividing y(eps_m), checked to give h_{d0}(f) = 1.

    None when m | y, in which case no such prime exists.
    """
    u = fundamental_unit(m)
    if u.y % m == 0:
        return None
    d0 = discriminant_of(m)
    f = next(q for q in prime_divisors(m) if u.y % q)
    h = relative_class_number(d0, f)
    if h != 1:
        raise InvariantViolation(f"m={m}, f={f}: expected relative class number 1, got {h}")
    return f


def half_power_membership(m: int, f: int) -> bool:
    """Whether eps_m^(psi(f)/2) lies in O_f, for odd primes f not dividing m.

    Also checks along the way that the unit matrix has order dividing psi(f)
    mod f and that its psi(f)/2 power is diagonal exactly when membership holds.
    """
    if f % 2 == 0 or not is_prime(f) or m % f == 0:
        raise ValueError(f"f={f} must be an odd prime not dividing 2m={2 * m}")
    u = fundamental_unit(m)
    if u.norm != 1:
        raise ValueError(f"eps_{m} has norm -1")
    s = psi(discriminant_of(m), f)
    if s % 2:
        raise ValueError(f"psi({f}) = {s} is odd")
    M = unit_matrix_mod(u, f)
    half = matrix_power_mod(M, s // 2)
    if not (half @ half).is_identity():
        raise InvariantViolation(f"unit matrix order does not divide psi({f})={s} mod {f}")
    member = integral_coords_mod(u, s // 2, f)[1] == 0
    if member != half.is_diagonal():
        raise InvariantViolation(f"matrix and scalar routes disagree at m={m}, f={f}")
    return member


def relative_divisibility_check(d0: int, f: int, g: int) -> bool:
    if f < 1 or g % f:
        raise ValueError(f"{f} does not divide {g}")
    return relative_class_number(d0, g) % relative_class_number(d0, f) == 0
