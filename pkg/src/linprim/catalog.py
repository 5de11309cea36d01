"""Finite simple groups: identifiers, orders, simplicity, canonical forms,
Schur multipliers and the text code grammar."""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import lru_cache

from .arith.integers import FactoredInteger, factorize, is_prime, is_prime_power

# family tags (dimension convention for classical groups)
ALT = "ALT"
PSL = "PSL"      # PSL(n, q)
PSU = "PSU"      # PSU(n, q)
PSP = "PSP"      # PSp(2m, q), params stored as (2m, q)
OMEGA = "O"      # Omega(2m+1, q)
OPLUS = "O+"     # POmega+(2m, q)
OMINUS = "O-"    # POmega-(2m, q)
G2 = "G2"
F4 = "F4"
E6 = "E6"
TE6 = "2E6"
E7 = "E7"
E8 = "E8"
T3D4 = "3D4"
SZ = "SZ"
R2G2 = "2G2"
R2F4 = "2F4"
TITS = "TITS"
SPOR = "SPOR"
CYC = "CYC"

CLASSICAL = (PSL, PSU, PSP, OMEGA, OPLUS, OMINUS)
EXCEPTIONAL = (G2, F4, E6, TE6, E7, E8, T3D4, SZ, R2G2, R2F4)
LIE_FAMILIES = CLASSICAL + EXCEPTIONAL

# Sporadic groups: code name -> (display name, order as prime powers).
# Orders are the standard ATLAS values.
SPORADIC: dict[str, tuple[str, tuple[tuple[int, int], ...]]] = {
    "M11": ("M11", ((2, 4), (3, 2), (5, 1), (11, 1))),
    "M12": ("M12", ((2, 6), (3, 3), (5, 1), (11, 1))),
    "M22": ("M22", ((2, 7), (3, 2), (5, 1), (7, 1), (11, 1))),
    "M23": ("M23", ((2, 7), (3, 2), (5, 1), (7, 1), (11, 1), (23, 1))),
    "M24": ("M24", ((2, 10), (3, 3), (5, 1), (7, 1), (11, 1), (23, 1))),
    "J1": ("J1", ((2, 3), (3, 1), (5, 1), (7, 1), (11, 1), (19, 1))),
    "J2": ("J2", ((2, 7), (3, 3), (5, 2), (7, 1))),
    "J3": ("J3", ((2, 7), (3, 5), (5, 1), (17, 1), (19, 1))),
    "J4": ("J4", ((2, 21), (3, 3), (5, 1), (7, 1), (11, 3), (23, 1), (29, 1), (31, 1), (37, 1), (43, 1))),
    "HS": ("HS", ((2, 9), (3, 2), (5, 3), (7, 1), (11, 1))),
    "MCL": ("McL", ((2, 7), (3, 6), (5, 3), (7, 1), (11, 1))),
    "SUZ": ("Suz", ((2, 13), (3, 7), (5, 2), (7, 1), (11, 1), (13, 1))),
    "CO3": ("Co3", ((2, 10), (3, 7), (5, 3), (7, 1), (11, 1), (23, 1))),
    "CO2": ("Co2", ((2, 18), (3, 6), (5, 3), (7, 1), (11, 1), (23, 1))),
    "CO1": ("Co1", ((2, 21), (3, 9), (5, 4), (7, 2), (11, 1), (13, 1), (23, 1))),
    "HE": ("He", ((2, 10), (3, 3), (5, 2), (7, 3), (17, 1))),
    "RU": ("Ru", ((2, 14), (3, 3), (5, 3), (7, 1), (13, 1), (29, 1))),
    "ON": ("O'N", ((2, 9), (3, 4), (5, 1), (7, 3), (11, 1), (19, 1), (31, 1))),
    "FI22": ("Fi22", ((2, 17), (3, 9), (5, 2), (7, 1), (11, 1), (13, 1))),
    "FI23": ("Fi23", ((2, 18), (3, 13), (5, 2), (7, 1), (11, 1), (13, 1), (17, 1), (23, 1))),
    "FI24": ("Fi24'", ((2, 21), (3, 16), (5, 2), (7, 3), (11, 1), (13, 1), (17, 1), (23, 1), (29, 1))),
    "HN": ("HN", ((2, 14), (3, 6), (5, 6), (7, 1), (11, 1), (19, 1))),
    "LY": ("Ly", ((2, 8), (3, 7), (5, 6), (7, 1), (11, 1), (31, 1), (37, 1), (67, 1))),
    "TH": ("Th", ((2, 15), (3, 10), (5, 3), (7, 2), (13, 1), (19, 1), (31, 1))),
    "B": ("B", ((2, 41), (3, 13), (5, 6), (7, 2), (11, 1), (13, 1), (17, 1), (19, 1), (23, 1), (31, 1), (47, 1))),
    "M": ("M", ((2, 46), (3, 20), (5, 9), (7, 6), (11, 2), (13, 3), (17, 1), (19, 1), (23, 1), (29, 1),
                (31, 1), (41, 1), (47, 1), (59, 1), (71, 1))),
}

# Decimal orders, kept separately so a test can cross-check the factored table.
SPORADIC_DECIMAL = {
    "M11": 7920, "M12": 95040, "M22": 443520, "M23": 10200960, "M24": 244823040,
    "J1": 175560, "J2": 604800, "J3": 50232960, "J4": 86775571046077562880,
    "HS": 44352000, "MCL": 898128000, "SUZ": 448345497600, "CO3": 495766656000,
    "CO2": 42305421312000, "CO1": 4157776806543360000, "HE": 4030387200,
    "RU": 145926144000, "ON": 460815505920, "FI22": 64561751654400,
    "FI23": 4089470473293004800, "FI24": 1255205709190661721292800,
    "HN": 273030912000000, "LY": 51765179004000000, "TH": 90745943887872000,
    "B": 4154781481226426191177580544000000,
    "M": 808017424794512875886459904961710757005754368000000000,
}

_SPOR_ALIASES = {"FI24'": "FI24", "O'N": "ON", "F24": "FI24", "F22": "FI22", "F23": "FI23"}


class InvalidGroup(ValueError):
    pass


@dataclass(frozen=True, order=True)
class SimpleGroupId:
    family: str
    params: tuple[int, ...] = ()
    name: str = ""

    def __str__(self) -> str:
        return display_name(self)

    @property
    def code(self) -> str:
        return render_code(self)


def _need_prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise InvalidGroup(f"q={q} is not a prime power")
    pp = is_prime_power(q)
    if pp is None:
        raise InvalidGroup(f"q={q} is not a prime power")
    return pp


def _check_structure(g: SimpleGroupId) -> None:
    """Reject malformed parameters (independent of simplicity)."""
    f, ps = g.family, g.params
    if f == ALT:
        if len(ps) != 1 or ps[0] < 1:
            raise InvalidGroup(f"Alt needs one positive degree, got {ps}")
        return
    if f == SPOR:
        if g.name not in SPORADIC:
            raise InvalidGroup(f"unknown sporadic group {g.name!r}")
        return
    if f == TITS:
        return
    if f == CYC:
        if len(ps) != 1 or not is_prime(ps[0]):
            raise InvalidGroup(f"cyclic simple group needs a prime order, got {ps}")
        return
    if f in CLASSICAL:
        if len(ps) != 2:
            raise InvalidGroup(f"{f} needs (dimension, q)")
        n, q = ps
        _need_prime_power(q)
        if f == PSL and n < 2:
            raise InvalidGroup("PSL needs n >= 2")
        if f == PSU and n < 3:
            raise InvalidGroup("PSU needs n >= 3")
        if f == PSP and (n < 4 or n % 2):
            raise InvalidGroup("PSp needs even dimension >= 4")
        if f == OMEGA and (n < 5 or n % 2 == 0):
            raise InvalidGroup("Omega needs odd dimension >= 5")
        if f in (OPLUS, OMINUS) and (n < 8 or n % 2):
            raise InvalidGroup(f"{f} needs even dimension >= 8")
        return
    if f in EXCEPTIONAL:
        if len(ps) != 1:
            raise InvalidGroup(f"{f} needs one parameter q")
        l, k = _need_prime_power(ps[0])
        if f in (SZ, R2F4) and (l != 2 or k % 2 == 0):
            raise InvalidGroup(f"{f} needs q = 2^(2m+1)")
        if f == R2G2 and (l != 3 or k % 2 == 0):
            raise InvalidGroup(f"{f} needs q = 3^(2m+1)")
        return
    raise InvalidGroup(f"unknown family {f!r}")


def is_simple(g: SimpleGroupId) -> bool:
    """False on the standard small non-simple members of each family."""
    f, ps = g.family, g.params
    if f == ALT:
        return ps[0] >= 5
    if f == PSL:
        return not (ps[0] == 2 and ps[1] in (2, 3))
    if f == PSU:
        return ps != (3, 2)
    if f == PSP:
        return ps != (4, 2)
    if f == OMEGA:
        return ps != (5, 2)  # Omega(5,2) = PSp(4,2)
    if f == G2:
        return ps[0] != 2
    if f == SZ:
        return ps[0] != 2
    if f == R2G2:
        return ps[0] != 3
    if f == R2F4:
        return ps[0] != 2
    return True


def make(family: str, *params: int, name: str = "", allow_nonsimple: bool = False) -> SimpleGroupId:
    if family == SPOR:
        key = name.upper()
        name = _SPOR_ALIASES.get(key, key)
    g = SimpleGroupId(family, tuple(int(p) for p in params), name)
    _check_structure(g)
    if not allow_nonsimple and not is_simple(g):
        raise InvalidGroup(f"{display_name(g)} is not simple")
    return g


# short constructors
def Alt(n: int, **kw) -> SimpleGroupId:
    return make(ALT, n, **kw)


def PSL_(n: int, q: int, **kw) -> SimpleGroupId:
    return make(PSL, n, q, **kw)


def PSU_(n: int, q: int, **kw) -> SimpleGroupId:
    return make(PSU, n, q, **kw)


def PSp(dim: int, q: int, **kw) -> SimpleGroupId:
    return make(PSP, dim, q, **kw)


def Omega(dim: int, q: int, **kw) -> SimpleGroupId:
    return make(OMEGA, dim, q, **kw)


def OmegaPlus(dim: int, q: int, **kw) -> SimpleGroupId:
    return make(OPLUS, dim, q, **kw)


def OmegaMinus(dim: int, q: int, **kw) -> SimpleGroupId:
    return make(OMINUS, dim, q, **kw)


def Exc(family: str, q: int, **kw) -> SimpleGroupId:
    return make(family, q, **kw)


def Sporadic(name: str) -> SimpleGroupId:
    return make(SPOR, name=name)


def Tits() -> SimpleGroupId:
    return make(TITS)


def Cyclic(p: int) -> SimpleGroupId:
    return make(CYC, p)


# ---------------------------------------------------------------- orders

def _prod(xs) -> int:
    out = 1
    for x in xs:
        out *= x
    return out


def order_value(g: SimpleGroupId) -> int:
    f, ps = g.family, g.params
    if f == ALT:
        n = ps[0]
        return math.factorial(n) // 2 if n >= 2 else 1
    if f == SPOR:
        return FactoredInteger(SPORADIC[g.name][1]).value
    if f == TITS:
        return 17971200
    if f == CYC:
        return ps[0]
    if f == PSL:
        n, q = ps
        return q ** (n * (n - 1) // 2) * _prod(q ** i - 1 for i in range(2, n + 1)) // math.gcd(n, q - 1)
    if f == PSU:
        n, q = ps
        return q ** (n * (n - 1) // 2) * _prod(q ** i - (-1) ** i for i in range(2, n + 1)) // math.gcd(n, q + 1)
    if f in (PSP, OMEGA):
        m = ps[0] // 2
        q = ps[1]
        return q ** (m * m) * _prod(q ** (2 * i) - 1 for i in range(1, m + 1)) // math.gcd(2, q - 1)
    if f in (OPLUS, OMINUS):
        m, q = ps[0] // 2, ps[1]
        eps = 1 if f == OPLUS else -1
        top = q ** m - eps
        return q ** (m * (m - 1)) * top * _prod(q ** (2 * i) - 1 for i in range(1, m)) // math.gcd(4, q ** m - eps)
    q = ps[0] if ps else 0
    if f == G2:
        return q ** 6 * (q ** 6 - 1) * (q ** 2 - 1)
    if f == F4:
        return q ** 24 * (q ** 12 - 1) * (q ** 8 - 1) * (q ** 6 - 1) * (q ** 2 - 1)
    if f == E6:
        return q ** 36 * _prod(q ** i - 1 for i in (2, 5, 6, 8, 9, 12)) // math.gcd(3, q - 1)
    if f == TE6:
        return (q ** 36 * (q ** 12 - 1) * (q ** 9 + 1) * (q ** 8 - 1) * (q ** 6 - 1) * (q ** 5 + 1)
                * (q ** 2 - 1) // math.gcd(3, q + 1))
    if f == E7:
        return q ** 63 * _prod(q ** i - 1 for i in (2, 6, 8, 10, 12, 14, 18)) // math.gcd(2, q - 1)
    if f == E8:
        return q ** 120 * _prod(q ** i - 1 for i in (2, 8, 12, 14, 18, 20, 24, 30))
    if f == T3D4:
        return q ** 12 * (q ** 8 + q ** 4 + 1) * (q ** 6 - 1) * (q ** 2 - 1)
    if f == SZ:
        return q ** 2 * (q ** 2 + 1) * (q - 1)
    if f == R2G2:
        return q ** 3 * (q ** 3 + 1) * (q - 1)
    if f == R2F4:
        return q ** 12 * (q ** 6 + 1) * (q ** 4 - 1) * (q ** 3 + 1) * (q - 1)
    raise InvalidGroup(f"unknown family {f!r}")


@lru_cache(maxsize=None)
def order(g: SimpleGroupId) -> FactoredInteger:
    if g.family == SPOR:
        return FactoredInteger(SPORADIC[g.name][1])
    return factorize(order_value(g))


def positive_roots(g: SimpleGroupId) -> int:
    """Exponent N with |G(q)|_l = q^N for the defining characteristic l."""
    f, ps = g.family, g.params
    if f in (PSL, PSU):
        n = ps[0]
        return n * (n - 1) // 2
    if f in (PSP, OMEGA):
        m = ps[0] // 2
        return m * m
    if f in (OPLUS, OMINUS):
        m = ps[0] // 2
        return m * (m - 1)
    return {G2: 6, F4: 24, E6: 36, TE6: 36, E7: 63, E8: 120, T3D4: 12, SZ: 2, R2G2: 3, R2F4: 12}[f]


def field_size(g: SimpleGroupId) -> int | None:
    if g.family in CLASSICAL:
        return g.params[1]
    if g.family in EXCEPTIONAL:
        return g.params[0]
    return None


# ---------------------------------------------------------------- isomorphisms

def _canon_once(g: SimpleGroupId) -> SimpleGroupId:
    f, ps = g.family, g.params
    if f == PSL and ps in ((2, 4), (2, 5)):
        return SimpleGroupId(ALT, (5,))
    if f == PSL and ps == (2, 9):
        return SimpleGroupId(ALT, (6,))
    if f == PSL and ps == (3, 2):
        return SimpleGroupId(PSL, (2, 7))
    if f == PSL and ps == (4, 2):
        return SimpleGroupId(ALT, (8,))
    if f == PSP and ps == (4, 3):
        return SimpleGroupId(PSU, (4, 2))
    if f == OMEGA:
        dim, q = ps
        # B2 = C2 always; B_m(2^k) = C_m(2^k)
        if dim == 5 or q % 2 == 0:
            return SimpleGroupId(PSP, (dim - 1, q))
    return g


def canonical(g: SimpleGroupId) -> SimpleGroupId:
    prev = None
    while prev != g:
        prev, g = g, _canon_once(g)
    return g


def aliases(g: SimpleGroupId) -> list[SimpleGroupId]:
    """Every catalog id isomorphic to g (including the canonical one)."""
    c = canonical(g)
    out = {c}
    f, ps = c.family, c.params
    if c == SimpleGroupId(ALT, (5,)):
        out |= {SimpleGroupId(PSL, (2, 4)), SimpleGroupId(PSL, (2, 5))}
    elif c == SimpleGroupId(ALT, (6,)):
        out.add(SimpleGroupId(PSL, (2, 9)))
    elif c == SimpleGroupId(ALT, (8,)):
        out.add(SimpleGroupId(PSL, (4, 2)))
    elif c == SimpleGroupId(PSL, (2, 7)):
        out.add(SimpleGroupId(PSL, (3, 2)))
    elif c == SimpleGroupId(PSU, (4, 2)):
        out |= {SimpleGroupId(PSP, (4, 3)), SimpleGroupId(OMEGA, (5, 3))}
    if f == PSP:
        dim, q = ps
        if dim == 4 or q % 2 == 0:
            out.add(SimpleGroupId(OMEGA, (dim + 1, q)))
    return sorted(out)


# ---------------------------------------------------------------- multipliers

@dataclass(frozen=True)
class SchurMultiplier:
    invariants: tuple[int, ...]
    provenance: str  # "generic-formula" | "embedded-exception" | "unknown"

    @property
    def order(self) -> int | None:
        if self.provenance == "unknown":
            return None
        return _prod(self.invariants)

    def __str__(self) -> str:
        if self.provenance == "unknown":
            return "unknown"
        if not self.invariants:
            return "1"
        return " x ".join(f"C{d}" for d in self.invariants)


def _cyc(d: int) -> tuple[int, ...]:
    return (d,) if d > 1 else ()


# exceptional multipliers, keyed by non-canonical or canonical ids (all aliases are checked)
_MULT_EXCEPTIONS: dict[SimpleGroupId, tuple[int, ...]] = {
    SimpleGroupId(ALT, (6,)): (6,),
    SimpleGroupId(ALT, (7,)): (6,),
    SimpleGroupId(PSL, (2, 4)): (2,),
    SimpleGroupId(PSL, (2, 9)): (6,),
    SimpleGroupId(PSL, (3, 2)): (2,),
    SimpleGroupId(PSL, (3, 4)): (4, 12),
    SimpleGroupId(PSL, (4, 2)): (2,),
    SimpleGroupId(PSU, (4, 2)): (2,),
    SimpleGroupId(PSU, (4, 3)): (3, 12),
    SimpleGroupId(PSU, (6, 2)): (2, 6),
    SimpleGroupId(PSP, (6, 2)): (2,),
    SimpleGroupId(OMEGA, (7, 3)): (6,),
    SimpleGroupId(OPLUS, (8, 2)): (2, 2),
    SimpleGroupId(F4, (2,)): (2,),
    SimpleGroupId(G2, (3,)): (3,),
    SimpleGroupId(G2, (4,)): (2,),
    SimpleGroupId(TE6, (2,)): (2, 6),
    SimpleGroupId(SZ, (8,)): (2, 2),
    SimpleGroupId(TITS, ()): (),
}

_SPOR_MULT = {"M12": 2, "M22": 12, "J2": 2, "HS": 2, "J3": 3, "MCL": 3, "RU": 2, "SUZ": 6,
              "ON": 3, "FI22": 6, "CO1": 2, "FI24": 3, "B": 2}


def schur_multiplier(g: SimpleGroupId) -> SchurMultiplier:
    c = canonical(g)
    for a in aliases(c):
        if a in _MULT_EXCEPTIONS:
            return SchurMultiplier(_MULT_EXCEPTIONS[a], "embedded-exception")
    f, ps = c.family, c.params
    if f == SPOR:
        return SchurMultiplier(_cyc(_SPOR_MULT.get(c.name, 1)), "embedded-exception")
    if f == ALT:
        return SchurMultiplier((2,), "generic-formula")
    if f == CYC:
        return SchurMultiplier((), "generic-formula")
    if f == PSL:
        n, q = ps
        return SchurMultiplier(_cyc(math.gcd(n, q - 1)), "generic-formula")
    if f == PSU:
        n, q = ps
        return SchurMultiplier(_cyc(math.gcd(n, q + 1)), "generic-formula")
    if f in (PSP, OMEGA):
        return SchurMultiplier(_cyc(math.gcd(2, ps[1] - 1)), "generic-formula")
    if f == OPLUS:
        m, q = ps[0] // 2, ps[1]
        if q % 2 == 0:
            return SchurMultiplier((), "generic-formula")
        if m % 2 == 0:
            return SchurMultiplier((2, 2), "generic-formula")
        return SchurMultiplier(_cyc(math.gcd(4, q ** m - 1)), "generic-formula")
    if f == OMINUS:
        m, q = ps[0] // 2, ps[1]
        return SchurMultiplier(_cyc(math.gcd(4, q ** m + 1)), "generic-formula")
    if f == E6:
        return SchurMultiplier(_cyc(math.gcd(3, ps[0] - 1)), "generic-formula")
    if f == TE6:
        return SchurMultiplier(_cyc(math.gcd(3, ps[0] + 1)), "generic-formula")
    if f == E7:
        return SchurMultiplier(_cyc(math.gcd(2, ps[0] - 1)), "generic-formula")
    if f in (G2, F4, E8, T3D4, SZ, R2G2, R2F4):
        return SchurMultiplier((), "generic-formula")
    return SchurMultiplier((), "unknown")


# ---------------------------------------------------------------- names and codes

_EXC_DISPLAY = {G2: "G2", F4: "F4", E6: "E6", TE6: "2E6", E7: "E7", E8: "E8", T3D4: "3D4",
                SZ: "Sz", R2G2: "2G2", R2F4: "2F4"}


def display_name(g: SimpleGroupId) -> str:
    f, ps = g.family, g.params
    if f == ALT:
        return f"A{ps[0]}"
    if f == SPOR:
        return SPORADIC[g.name][0]
    if f == TITS:
        return "2F4(2)'"
    if f == CYC:
        return f"C{ps[0]}"
    if f == PSL:
        return f"PSL({ps[0]},{ps[1]})"
    if f == PSU:
        return f"PSU({ps[0]},{ps[1]})"
    if f == PSP:
        return f"PSp({ps[0]},{ps[1]})"
    if f == OMEGA:
        return f"Omega({ps[0]},{ps[1]})"
    if f == OPLUS:
        return f"POmega+({ps[0]},{ps[1]})"
    if f == OMINUS:
        return f"POmega-({ps[0]},{ps[1]})"
    return f"{_EXC_DISPLAY[f]}({ps[0]})"


_EXC_CODE = {G2: "G2", F4: "F4", E6: "E6", TE6: "T2E6", E7: "E7", E8: "E8", T3D4: "T3D4",
             SZ: "SZ", R2G2: "R2G2", R2F4: "R2F4"}
_CODE_EXC = {v: k for k, v in _EXC_CODE.items()}


def render_code(g: SimpleGroupId) -> str:
    f, ps = g.family, g.params
    if f == ALT:
        return f"ALT-{ps[0]}"
    if f == SPOR:
        return f"SPOR-{g.name}"
    if f == TITS:
        return "TITS"
    if f == CYC:
        return f"CYC-{ps[0]}"
    if f == PSL:
        return f"CA-{ps[0] - 1}-{ps[1]}"
    if f == PSU:
        return f"T2A-{ps[0] - 1}-{ps[1]}"
    if f == PSP:
        return f"CC-{ps[0] // 2}-{ps[1]}"
    if f == OMEGA:
        return f"CB-{ps[0] // 2}-{ps[1]}"
    if f == OPLUS:
        return f"CD-{ps[0] // 2}-{ps[1]}"
    if f == OMINUS:
        return f"T2D-{ps[0] // 2}-{ps[1]}"
    return f"{_EXC_CODE[f]}-{ps[0]}"


class CodeError(ValueError):
    pass


_CODE_RE = re.compile(r"^([A-Z0-9]+?)(?:-([^-]+))?(?:-([^-]+))?$")


def parse_code(text: str, allow_nonsimple: bool = False) -> SimpleGroupId:
    s = text.strip().upper()
    try:
        if s == "TITS":
            return Tits()
        if s.startswith("SPOR-"):
            return Sporadic(s[5:])
        m = _CODE_RE.match(s)
        if not m:
            raise CodeError(f"malformed group code {text!r}")
        fam, a, b = m.groups()
        ints = [int(x) for x in (a, b) if x is not None]
        kw = {"allow_nonsimple": allow_nonsimple}
        if fam == "ALT" and len(ints) == 1:
            return make(ALT, ints[0], **kw)
        if fam == "CYC" and len(ints) == 1:
            return make(CYC, ints[0], **kw)
        if fam in ("CA", "T2A", "CB", "CC", "CD", "T2D") and len(ints) == 2:
            r, q = ints
            if fam == "CA":
                return make(PSL, r + 1, q, **kw)
            if fam == "T2A":
                return make(PSU, r + 1, q, **kw)
            if fam == "CB":
                return make(OMEGA, 2 * r + 1, q, **kw)
            if fam == "CC":
                return make(PSP, 2 * r, q, **kw)
            if fam == "CD":
                return make(OPLUS, 2 * r, q, **kw)
            return make(OMINUS, 2 * r, q, **kw)
        if fam in _CODE_EXC and len(ints) == 1:
            return make(_CODE_EXC[fam], ints[0], **kw)
    except (InvalidGroup, ValueError) as e:
        if isinstance(e, CodeError):
            raise
        raise CodeError(f"invalid group code {text!r}: {e}") from e
    raise CodeError(
        f"unknown group code {text!r}; expected ALT-n, CA-n-q, CB-, CC-, CD-, T2A-, T2D-, "
        "T3D4-q, E6-, T2E6-, E7-, E8-, F4-, G2-q, SZ-q, R2G2-q, R2F4-q, TITS, SPOR-name or CYC-p"
    )


# names as they appear in printed tables, e.g. "PSL(2,7)", "A_6", "PSU_4(2)"
_NAME_PATTERNS = [
    (re.compile(r"^A_?\{?(\d+)\}?$"), lambda m: Alt(int(m[1]))),
    (re.compile(r"^PSL_?\{?(\d+)\}?\((\d+)\)$"), lambda m: PSL_(int(m[1]), int(m[2]))),
    (re.compile(r"^PSL\((\d+),(\d+)\)$"), lambda m: PSL_(int(m[1]), int(m[2]))),
    (re.compile(r"^PSU_?\{?(\d+)\}?\((\d+)\)$"), lambda m: PSU_(int(m[1]), int(m[2]))),
    (re.compile(r"^PSU\((\d+),(\d+)\)$"), lambda m: PSU_(int(m[1]), int(m[2]))),
    (re.compile(r"^PSp_?\{?(\d+)\}?\((\d+)\)$"), lambda m: PSp(int(m[1]), int(m[2]))),
    (re.compile(r"^PSp\((\d+),(\d+)\)$"), lambda m: PSp(int(m[1]), int(m[2]))),
]


def parse_name(text: str) -> SimpleGroupId:
    s = text.replace(" ", "")
    for pat, fn in _NAME_PATTERNS:
        m = pat.match(s)
        if m:
            return fn(m)
    if s.upper() in SPORADIC or s.upper() in _SPOR_ALIASES:
        return Sporadic(s)
    if s.startswith("J_"):
        return Sporadic("J" + s[2:].strip("{}"))
    return parse_code(s)


def all_sporadics() -> list[SimpleGroupId]:
    return [Sporadic(k) for k in SPORADIC]
