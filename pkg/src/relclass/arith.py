"""Exact integer primitives: square roots, primality, factorization, Kronecker symbol."""

import math
from math import gcd

# Miller-Rabin with these bases is deterministic for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_LIMIT = 3317044064679887385961981
_TRIAL_LIMIT = 10**6


def isqrt(n: int) -> int:
    """Floor of the square root of n, exact for arbitrarily large n."""
    if n < 0:
        raise ValueError(f"isqrt of negative number {n}")
    return math.isqrt(n)


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n >= _MR_LIMIT:
        raise ValueError(f"{n} is beyond the deterministic primality range")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _rho(n: int) -> int:
    """A nontrivial factor of the odd composite n (Brent's variant)."""
    for c in range(1, n):
        y, r, q, g = 2, 1, 1, 1
        x = ys = 2
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += 128
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed on {n}")


def _split(n: int, out: dict) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _rho(n)
    _split(d, out)
    _split(n // d, out)


def factor(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as ascending (prime, exponent) pairs."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    p = 5
    while p * p <= n and p <= _TRIAL_LIMIT:
        for q in (p, p + 2):
            while n % q == 0:
                out[q] = out.get(q, 0) + 1
                n //= q
        p += 6
    if n > 1:
        if p * p > n:
            out[n] = out.get(n, 0) + 1
        else:
            _split(n, out)
    return sorted(out.items())


def prime_divisors(n: int) -> list[int]:
    return [p for p, _ in factor(n)]


def divisors(n: int) -> list[int]:
    """All positive divisors of n in increasing order."""
    divs = [1]
    for p, e in factor(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def is_squarefree(n: int) -> bool:
    if n < 1:
        raise ValueError(f"squarefree test needs n >= 1, got {n}")
    return all(e == 1 for _, e in factor(n))


def squarefree_upto(limit: int) -> list[int]:
    """Squarefree integers in [1, limit], by sieving out multiples of p^2."""
    flags = bytearray([1]) * (limit + 1)
    flags[0] = 0
    p = 2
    while p * p <= limit:
        flags[p * p :: p * p] = bytes(len(range(p * p, limit + 1, p * p)))
        p += 1
    return [n for n in range(1, limit + 1) if flags[n]]


def primes_upto(limit: int) -> list[int]:
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return [n for n in range(limit + 1) if sieve[n]]


def jacobi(a: int, n: int) -> int:
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"Jacobi symbol needs odd positive n, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def kronecker(d: int, q: int) -> int:
    """Kronecker symbol (d/q) for q >= 1."""
    if q < 1:
        raise ValueError(f"kronecker needs q >= 1, got {q}")
    if q == 1:
        return 1
    if d % 2 == 0 and q % 2 == 0:
        return 0
    result = 1
    while q % 2 == 0:
        q //= 2
        # (d/2) = 0 for even d, +1 for d = +-1 mod 8, -1 for d = +-3 mod 8
        if d % 8 in (3, 5):
            result = -result
    return result * jacobi(d, q) if q > 1 else result


def is_fundamental_discriminant(d: int) -> bool:
    if d % 4 == 1:
        return d != 1 and is_squarefree(abs(d))
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and is_squarefree(abs(m))
    return False


def discriminant_of(m: int) -> int:
    """Field discriminant of Q(sqrt(m)) for squarefree m > 1."""
    if m <= 1 or not is_squarefree(m):
        raise ValueError(f"{m} is not a squarefree integer > 1")
    return m if m % 4 == 1 else 4 * m


def squarefree_part(d0: int) -> int:
    """Inverse of discriminant_of on positive fundamental discriminants."""
    if d0 <= 1 or not is_fundamental_discriminant(d0):
        raise ValueError(f"{d0} is not a positive fundamental discriminant")
    return d0 if d0 % 4 == 1 else d0 // 4
