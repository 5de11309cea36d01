"""Necessary conditions on the order of a (quasi-)primitive finite subgroup
of GL(n, C), applied to the central quotient order."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .arith.integers import FactoredInteger, is_prime, p_part, valuation

FORBIDDEN = "Forbidden"
EXCEPTIONAL_PSL2P = "ExceptionalPSL2p"
LARGE_UNIQUE = "LargePrimeUniqueSquareFree"
UNRESTRICTED = "Unrestricted"

PRIMITIVE = "primitive-in-GL"
ANY_FINITE = "any-finite-in-GL"


@dataclass(frozen=True)
class PrimeVerdict:
    kind: str
    note: str = ""


def admissible_prime(n: int, p: int) -> PrimeVerdict:
    if n < 2:
        raise ValueError(f"degree must be >= 2, got {n}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p > 2 * n + 1:
        return PrimeVerdict(FORBIDDEN, f"{p} > 2n+1 = {2 * n + 1} cannot divide [G:Z(G)]")
    if p == 2 * n + 1:
        return PrimeVerdict(EXCEPTIONAL_PSL2P, f"p = 2n+1 forces G/Z(G) = PSL(2,{p})")
    if p > n + 1:
        return PrimeVerdict(LARGE_UNIQUE, f"{p} must be the only prime > n+1 and p^2 must not divide |G|")
    return PrimeVerdict(UNRESTRICTED, "")


def blichfeldt_general_bound(n: int, p: int, constant: int = 6) -> int:
    """Largest k with p^k <= (n!)_p * constant^(n-1)."""
    lim = p_part(math.factorial(n), p) * constant ** (n - 1)
    k, v = 0, p
    while v <= lim:
        k += 1
        v *= p
    return k


def blichfeldt_exponent_bound(n: int, p: int, constant: int = 6) -> int:
    if n < 2:
        raise ValueError(f"degree must be >= 2, got {n}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    k = blichfeldt_general_bound(n, p, constant)
    if n % p:
        k = min(k, valuation(math.factorial(n), p) + n - 1)
    return k


def collins_index_bound(n: int, context: str = PRIMITIVE) -> int | None:
    if n < 2:
        raise ValueError(f"degree must be >= 2, got {n}")
    if context == PRIMITIVE:
        if n > 12 or n in (10, 11):
            return math.factorial(n + 1)
        return None
    if context == ANY_FINITE:
        if n >= 71 or n in (63, 65, 67, 69):
            return math.factorial(n + 1)
        if n >= 20:
            r = n // 2
            return 60 ** r * math.factorial(r)
        return None
    raise ValueError(f"unknown context {context!r}")


@dataclass
class QuasiprimitiveCheck:
    ok: bool
    violations: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def can_be_quasiprimitive(n: int, order: FactoredInteger | int, constant: int = 6) -> QuasiprimitiveCheck:
    """Advisory filter: False means some necessary condition fails."""
    if isinstance(order, int):
        order = FactoredInteger.from_int(order)
    out = QuasiprimitiveCheck(True)
    large = []
    for p, e in order.factors:
        v = admissible_prime(n, p)
        if v.kind == FORBIDDEN:
            out.violations.append(f"prime {p}: {v.note}")
        if v.kind == EXCEPTIONAL_PSL2P:
            out.notes.append(v.note)
        if p > n + 1:
            large.append(p)
            # p^2 must not divide the order for any prime above n+1
            if e > 1:
                out.violations.append(f"prime {p} > n+1 appears with exponent {e}")
        bound = blichfeldt_exponent_bound(n, p, constant)
        if e > bound:
            out.violations.append(f"exponent of {p} is {e}, bound is {bound}")
    if len(large) > 1:
        out.violations.append(f"more than one prime exceeds n+1: {large}")
    cb = collins_index_bound(n, PRIMITIVE)
    if cb is not None and order.value > cb:
        out.violations.append(f"order exceeds the index bound (n+1)! = {cb}")
    out.ok = not out.violations
    return out
