"""Integer helpers: primality, factorization, and factored integers."""
from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

# Deterministic Miller-Rabin: the first 13 primes are a valid witness set
# for every n < 3317044064679887385961981 (about 3.3e24).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_LIMIT = 3317044064679887385961981

_SMALL_PRIMES = tuple(p for p in range(2, 1000) if all(p % d for d in range(2, int(p ** 0.5) + 1)))


def _mr_round(n: int, d: int, s: int, a: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < _MR_LIMIT:
        return all(_mr_round(n, d, s, a) for a in _MR_WITNESSES)
    # beyond the deterministic range: many random rounds on top of the fixed set
    rng = random.Random(n)
    witnesses = list(_MR_WITNESSES) + [rng.randrange(2, n - 1) for _ in range(32)]
    return all(_mr_round(n, d, s, a) for a in witnesses)


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(n ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i:: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i in range(n + 1) if sieve[i]]


def iter_primes(start: int = 2) -> Iterator[int]:
    n = max(start, 2)
    while True:
        if is_prime(n):
            yield n
        n += 1


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    rng = random.Random(n)
    while True:
        c = rng.randrange(1, n)
        f = lambda x: (x * x + c) % n  # noqa: E731
        x = y = rng.randrange(2, n)
        d = 1
        while d == 1:
            x = f(x)
            y = f(f(y))
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d


def _factor_into(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_rho(n)
    _factor_into(d, out)
    _factor_into(n // d, out)


@lru_cache(maxsize=65536)
def _factor_tuple(n: int) -> tuple[tuple[int, int], ...]:
    out: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n > 1:
        _factor_into(n, out)
    return tuple(sorted(out.items()))


def factorize(n: int) -> "FactoredInteger":
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    return FactoredInteger(_factor_tuple(n))


def is_prime_power(n: int) -> tuple[int, int] | None:
    """Return (l, k) with l prime and l**k == n, or None."""
    if n < 2:
        raise ValueError(f"is_prime_power needs n >= 2, got {n}")
    f = _factor_tuple(n)
    if len(f) == 1:
        return f[0]
    return None


def integer_root(n: int, k: int) -> int | None:
    """Exact k-th root of n >= 0 if it exists."""
    if n < 0 or k < 1:
        return None
    if n < 2:
        return n
    r = round(n ** (1.0 / k))
    for c in (r - 1, r, r + 1):
        if c >= 0 and c ** k == n:
            return c
    # float rounding can miss for huge n; fall back to bisection
    lo, hi = 0, 1 << (n.bit_length() // k + 1)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** k < n:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo ** k == n else None


def multiplicative_order(a: int, n: int) -> int:
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit mod {n}")
    k, x = 1, a % n
    while x != 1 % n:
        x = x * a % n
        k += 1
    return k


def euler_phi(n: int) -> int:
    out = n
    for p, _ in _factor_tuple(n):
        out = out // p * (p - 1)
    return out


def mobius(n: int) -> int:
    f = _factor_tuple(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


_TERM = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


@dataclass(frozen=True, order=True)
class FactoredInteger:
    """Positive integer stored as sorted (prime, exponent) pairs."""

    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        fs = tuple((int(p), int(e)) for p, e in self.factors)
        last = 1
        for p, e in fs:
            if p <= last or e < 1 or not is_prime(p):
                raise ValueError(f"bad factorization {fs}")
            last = p
        object.__setattr__(self, "factors", fs)

    @classmethod
    def from_int(cls, n: int) -> "FactoredInteger":
        return factorize(n)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "FactoredInteger":
        acc: dict[int, int] = {}
        for p, e in pairs:
            if e:
                acc[p] = acc.get(p, 0) + e
        return cls(tuple(sorted((p, e) for p, e in acc.items() if e)))

    @classmethod
    def parse(cls, text: str) -> "FactoredInteger":
        """Accept '2^3*3^2*5*7', '2^6 3^4 5' or a plain decimal."""
        s = text.strip().replace("·", "*")
        if not s:
            raise ValueError("empty factored integer")
        parts = [t for t in re.split(r"[*\s]+", s) if t]
        acc: dict[int, int] = {}
        for t in parts:
            m = _TERM.match(t)
            if not m:
                raise ValueError(f"cannot parse factor {t!r} in {text!r}")
            base, exp = int(m.group(1)), int(m.group(2) or 1)
            if base < 1:
                raise ValueError(f"factor must be positive in {text!r}")
            # bases need not be prime; refactor them
            for p, e in _factor_tuple(base):
                acc[p] = acc.get(p, 0) + e * exp
        return cls(tuple(sorted(acc.items())))

    @property
    def value(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p ** e
        return out

    def __int__(self) -> int:
        return self.value

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def divides(self, other: "FactoredInteger") -> bool:
        return divides(self, other)

    def __mul__(self, other: "FactoredInteger") -> "FactoredInteger":
        if isinstance(other, int):
            other = factorize(other)
        return FactoredInteger.from_pairs(list(self.factors) + list(other.factors))

    def __truediv__(self, other: "FactoredInteger") -> "FactoredInteger":
        if isinstance(other, int):
            other = factorize(other)
        if not divides(other, self):
            raise ValueError("inexact division of factored integers")
        return FactoredInteger.from_pairs(list(self.factors) + [(p, -e) for p, e in other.factors])

    def render(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)

    def __str__(self) -> str:
        return self.render()


def divides(a: FactoredInteger, b: FactoredInteger) -> bool:
    bd = dict(b.factors)
    return all(bd.get(p, 0) >= e for p, e in a.factors)


def p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def valuation(n: int, p: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k
