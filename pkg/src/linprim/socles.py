"""Candidate socles of primitive subgroups of SL(p, C) for a prime p."""
from __future__ import annotations

from dataclasses import dataclass, field

from .arith.integers import is_prime, is_prime_power
from . import catalog as C
from .catalog import SimpleGroupId

PRIMITIVE_SOCLE = "PrimitiveSocle"
IMPRIMITIVE_SOCLE = "ImprimitiveSocle"

# exceptional clause: p -> groups
_EXCEPTIONAL = {
    3: [C.SimpleGroupId(C.ALT, (6,))],
    7: [C.SimpleGroupId(C.PSP, (6, 2))],
    11: [C.SimpleGroupId(C.SPOR, (), "M12")],
    23: [C.SimpleGroupId(C.SPOR, (), "CO2"), C.SimpleGroupId(C.SPOR, (), "CO3"),
         C.SimpleGroupId(C.SPOR, (), "M24")],
}

S1_NOTE = ("clause 1(c)(i) is solved with s >= 1 so that PSp(4,q) occurs; "
           "use strict_s2 for the printed s >= 2 reading")


@dataclass(frozen=True)
class Witness:
    clause: str
    params: tuple[tuple[str, int], ...]

    def get(self, k: str) -> int:
        return dict(self.params)[k]


@dataclass
class SocleCandidate:
    group: SimpleGroupId
    socle_kind: str
    witnesses: list[Witness] = field(default_factory=list)

    @property
    def clauses(self) -> list[str]:
        return [w.clause for w in self.witnesses]


def _w(clause: str, **kw) -> Witness:
    return Witness(clause, tuple(sorted(kw.items())))


def _is_l_2k(q: int) -> bool:
    """q = l^(2^k) with l an odd prime and k >= 0."""
    pp = is_prime_power(q) if q >= 2 else None
    if pp is None or pp[0] == 2:
        return False
    e = pp[1]
    return e & (e - 1) == 0


def clause_value(w: Witness) -> int:
    """Recompute p from a witness; used to audit every emitted candidate."""
    c, g = w.clause, w.get
    if c == "1(a)":
        return g("n") - 1
    if c == "1(b)(i)":
        return g("q")
    if c == "1(b)(ii)":
        return (g("q") - 1) // 2
    if c == "1(b)(iii)":
        return (g("q") + 1) // 2
    if c == "1(b)(iv)":
        return 2 ** g("l") - 1
    if c == "1(c)(i)":
        return (g("q") ** g("n") + 1) // 2
    if c == "1(c)(ii)":
        return (3 ** g("n") - 1) // 2
    if c == "1(d)":
        q, n = g("q"), g("n")
        return (q ** n + 1) // (q + 1)
    if c == "1(e)":
        return g("p")
    if c == "2":
        q, n = g("q"), g("n")
        return (q ** n - 1) // (q - 1)
    raise ValueError(c)


def _raw_candidates(p: int, strict_s2: bool) -> list[tuple[SimpleGroupId, str, Witness]]:
    out: list[tuple[SimpleGroupId, str, Witness]] = []

    def add(fam, params, kind, w, name=""):
        g = C.SimpleGroupId(fam, params, name)
        try:
            C._check_structure(g)
        except C.InvalidGroup:
            return
        if C.is_simple(g):
            out.append((g, kind, w))

    P = PRIMITIVE_SOCLE
    # 1(a)
    if p >= 7:
        add(C.ALT, (p + 1,), P, _w("1(a)", n=p + 1))
    # linear-in-q clauses: scan prime powers q <= 2p+1
    for q in range(2, 2 * p + 2):
        pp = is_prime_power(q)
        if pp is None:
            continue
        l, k = pp
        if q == p and p >= 11:
            add(C.PSL, (2, q), P, _w("1(b)(i)", q=q))
        if q - 1 == 2 * p and (k == 1 or (l == 3 and is_prime(k) and k % 2 == 1)):
            add(C.PSL, (2, q), P, _w("1(b)(ii)", q=q))
        if q + 1 == 2 * p and q >= 5 and _is_l_2k(q):
            add(C.PSL, (2, q), P, _w("1(b)(iii)", q=q))
        if l == 2 and is_prime(k) and k % 2 == 1 and q - 1 == p:
            add(C.PSL, (2, q), P, _w("1(b)(iv)", q=q, l=k))
    # 1(c)(i): (q^n + 1)/2 = p with n = 2^s; monotone in q and s
    s = 2 if strict_s2 else 1
    while (3 ** (2 ** s) + 1) // 2 <= p:
        n = 2 ** s
        q = 3
        while (q ** n + 1) // 2 <= p:
            if _is_l_2k(q) and (q ** n + 1) == 2 * p:
                add(C.PSP, (2 * n, q), P, _w("1(c)(i)", n=n, q=q, s=s))
            q += 2
        s += 1
    # 1(c)(ii): (3^n - 1)/2 = p, n odd prime
    n = 3
    while (3 ** n - 1) // 2 <= p:
        if is_prime(n) and 3 ** n - 1 == 2 * p:
            add(C.PSP, (2 * n, 3), P, _w("1(c)(ii)", n=n, q=3))
        n += 2
    # 1(d): (q^n + 1)/(q + 1) = p, n odd prime; expression grows in q and n
    n = 3
    while (2 ** n + 1) // 3 <= p:
        if is_prime(n):
            q = 2
            while (q ** n + 1) // (q + 1) <= p:
                if is_prime_power(q) and (q ** n + 1) == p * (q + 1):
                    add(C.PSU, (n, q), P, _w("1(d)", n=n, q=q))
                q += 1
        n += 2
    # 1(e)
    for g in _EXCEPTIONAL.get(p, []):
        out.append((g, P, _w("1(e)", p=p)))
    # 2: (q^n - 1)/(q - 1) = p
    n = 2
    while 2 ** n - 1 <= p:
        q = 2
        while (q ** n - 1) // (q - 1) <= p:
            if (q ** n - 1) == p * (q - 1) and is_prime_power(q):
                ok = (q % 2 == 0) if n == 2 else (q % 2 == 1 or (n, q) == (3, 2))
                if ok:
                    add(C.PSL, (n, q), IMPRIMITIVE_SOCLE, _w("2", n=n, q=q))
            q += 1
        n += 1
    return out


def nonabelian_socles(p: int, strict_s2: bool = False) -> tuple[list[SocleCandidate], list[str]]:
    """Candidates and notes. Duplicates across clauses merge under canonical()."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    merged: dict[tuple[SimpleGroupId, str], SocleCandidate] = {}
    notes: list[str] = []
    for g, kind, w in _raw_candidates(p, strict_s2):
        if w.clause != "1(e)":
            assert clause_value(w) == p, (g, w)
        c = C.canonical(g)
        key = (c, kind)
        if key not in merged:
            merged[key] = SocleCandidate(c, kind)
        merged[key].witnesses.append(w)
        if w.clause == "1(c)(i)" and w.get("s") == 1 and S1_NOTE not in notes:
            notes.append(S1_NOTE)
    cands = sorted(merged.values(),
                   key=lambda c: (c.socle_kind != PRIMITIVE_SOCLE, C.order_value(c.group), C.render_code(c.group)))
    return cands, notes


# ---------------------------------------------------------------- abelian socle

@dataclass(frozen=True)
class SubgroupOption:
    index: int
    name: str
    order: int
    coprime_to_p: bool
    note: str = ""


@dataclass
class AbelianSocleStructure:
    p: int
    extraspecial_order: int
    full_g0_order: int
    options: list[SubgroupOption] = field(default_factory=list)

    @property
    def projective_orders(self) -> list[int]:
        """Order of D/Z(D) extended by each option, i.e. p^2 |K|."""
        return [self.p ** 2 * o.order for o in self.options]


# K_i lists as recorded in the observation columns of the degree 3, 5 and 7 tables
_K_OPTIONS = {
    3: [("C4", 4, ""), ("Q8", 8, ""), ("SL(2,3)", 24, "")],
    5: [("C3", 3, ""), ("C6", 6, ""), ("Q8", 8, ""), ("Dic3", 12, ""), ("SL(2,3)", 24, ""),
        ("SL(2,5)", 120, "")],
    7: [("C4", 4, ""), ("C8", 8, ""), ("Q8", 8, "first conjugacy class"), ("Q8", 8, "second conjugacy class"),
        ("Dic3", 12, ""), ("Q16", 16, ""), ("SL(2,3)", 24, "first conjugacy class"),
        ("SL(2,3)", 24, "second conjugacy class"), ("CSU2(3)", 48, "first conjugacy class"),
        ("CSU2(3)", 48, "second conjugacy class"), ("SL(2,7)", 336, "")],
}


def abelian_socle_structure(p: int) -> AbelianSocleStructure:
    if not is_prime(p) or p == 2:
        raise ValueError(f"abelian-socle structure needs an odd prime, got {p}")
    s = AbelianSocleStructure(p, p ** 3, p ** 4 * (p * p - 1))
    for i, (name, order, note) in enumerate(_K_OPTIONS.get(p, []), start=1):
        s.options.append(SubgroupOption(i, name, order, order % p != 0, note))
    return s


# ---------------------------------------------------------------- small primes

@dataclass(frozen=True)
class OverrideEntry:
    quotient: str
    socle: SimpleGroupId | None
    note: str = ""


def small_p_overrides(p: int) -> list[OverrideEntry]:
    A = lambda n: C.SimpleGroupId(C.ALT, (n,))  # noqa: E731
    L2 = lambda q: C.SimpleGroupId(C.PSL, (2, q))  # noqa: E731
    if p == 2:
        return [OverrideEntry("A4", None, "socle C2^2"), OverrideEntry("S4", None, "socle C2^2"),
                OverrideEntry("A5", A(5))]
    if p == 3:
        return [OverrideEntry("A5", A(5)), OverrideEntry("A6", A(6)), OverrideEntry("PSL(2,7)", L2(7))]
    if p == 5:
        # A5 removed: its degree-5 representation is imprimitive
        return [OverrideEntry("S5", A(5)), OverrideEntry("A6", A(6)), OverrideEntry("S6", A(6)),
                OverrideEntry("PSL(2,11)", L2(11)), OverrideEntry("PSU(4,2)", C.SimpleGroupId(C.PSU, (4, 2)))]
    if p == 7:
        # PSL(2,7) removed: its degree-7 representation is imprimitive
        return [OverrideEntry("A8", A(8)), OverrideEntry("S8", A(8)), OverrideEntry("PSL(2,13)", L2(13)),
                OverrideEntry("PSp(6,2)", C.SimpleGroupId(C.PSP, (6, 2))),
                OverrideEntry("PGL(2,7)", L2(7)), OverrideEntry("PSL(2,8)", L2(8)),
                OverrideEntry("R(3)", L2(8), "R(3) = PSL(2,8):C3"),
                OverrideEntry("PSU(3,3)", C.SimpleGroupId(C.PSU, (3, 3))),
                OverrideEntry("G2(2)", C.SimpleGroupId(C.PSU, (3, 3)), "G2(2)' = PSU(3,3)")]
    if p == 11:
        return [OverrideEntry(f"G' = {n}", g) for n, g in (
            ("A12", A(12)), ("M12", C.SimpleGroupId(C.SPOR, (), "M12")), ("PSL(2,11)", L2(11)),
            ("PSL(2,23)", L2(23)), ("PSU(5,2)", C.SimpleGroupId(C.PSU, (5, 2))))]
    raise ValueError(f"small-prime data covers p in {{2,3,5,7,11}}, got {p}")
