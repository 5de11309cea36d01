"""Enumerate simple groups by order bound or by order divisibility."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .arith.integers import FactoredInteger, divides, factorize, iter_primes, primes_up_to, valuation
from . import catalog as C
from .catalog import SimpleGroupId

# minimal rank (in the family's own dimension convention) and rank step
_RANKS = {
    C.PSL: (2, 1), C.PSU: (3, 1), C.PSP: (4, 2), C.OMEGA: (7, 2),
    C.OPLUS: (8, 2), C.OMINUS: (8, 2),
}
_EXC_ONLY = (C.G2, C.F4, C.E6, C.TE6, C.E7, C.E8, C.T3D4, C.SZ, C.R2G2, C.R2F4)


@dataclass(frozen=True)
class SearchQuery:
    divisor_target: FactoredInteger
    max_order: int | None = None

    @property
    def bound(self) -> int:
        v = self.divisor_target.value
        return v if self.max_order is None else min(v, self.max_order)


def _fields(fam: str, l: int) -> Iterator[int]:
    """Admissible field sizes q = l^f for the family, increasing."""
    if fam in (C.SZ, C.R2F4):
        if l != 2:
            return
        f, step = 1, 2
    elif fam == C.R2G2:
        if l != 3:
            return
        f, step = 1, 2
    elif fam == C.OMEGA and l == 2:
        # Omega(2m+1, 2^k) is PSp(2m, 2^k)
        return
    else:
        f, step = 1, 1
    while True:
        yield l ** f
        f += step


def _make(fam: str, rank: int | None, q: int) -> SimpleGroupId | None:
    try:
        if rank is None:
            return C.make(fam, q)
        return C.make(fam, rank, q)
    except C.InvalidGroup:
        return None


def _lie_groups(fits: Callable[[str, int | None, int], bool], chars: list[int] | None) -> Iterator[SimpleGroupId]:
    """Walk every Lie family. fits(fam, rank, q) is monotone in q for a fixed
    characteristic, in the characteristic, and in rank, so every loop stops
    at its first miss. chars=None means all primes."""
    fams = [(f, _RANKS[f]) for f in C.CLASSICAL] + [(f, None) for f in _EXC_ONLY]
    for fam, rk in fams:
        if chars is not None:
            allowed = chars
        elif fam in (C.SZ, C.R2F4):
            allowed = [2]
        elif fam == C.R2G2:
            allowed = [3]
        else:
            allowed = None
        rank = rk[0] if rk else None
        while True:
            any_fit = False
            for l in (allowed if allowed is not None else iter_primes(2)):
                l_fit = False
                for q in _fields(fam, l):
                    if not fits(fam, rank, q):
                        break
                    l_fit = True
                    g = _make(fam, rank, q)
                    if g is not None and C.is_simple(g):
                        yield g
                if l_fit:
                    any_fit = True
                elif allowed is None and not (fam == C.OMEGA and l == 2):
                    break
            if rk is None or not any_fit:
                break
            rank += rk[1]


def _alt_candidates(fits_n: Callable[[int], bool]) -> Iterator[SimpleGroupId]:
    n = 5
    while fits_n(n):
        yield C.Alt(n)
        n += 1


def _finish(groups, include_cyclic: bool, extra=()) -> list[SimpleGroupId]:
    seen = {}
    for g in list(groups) + list(extra):
        c = C.canonical(g)
        if c.family == C.CYC and not include_cyclic:
            continue
        seen[c] = None
    return sorted(seen, key=lambda g: (C.order_value(g), C.render_code(g)))


def enumerate_up_to(bound: int, include_cyclic: bool = False) -> list[SimpleGroupId]:
    """All canonical simple groups of order <= bound."""
    if bound < 1:
        raise ValueError("bound must be positive")

    def fits(fam, rank, q):
        g = C.SimpleGroupId(fam, (rank, q) if rank is not None else (q,))
        return C.order_value(g) <= bound

    out = list(_lie_groups(fits, None))
    out += list(_alt_candidates(lambda n: C.order_value(C.SimpleGroupId(C.ALT, (n,))) <= bound))
    out += [g for g in C.all_sporadics() + [C.Tits()] if C.order_value(g) <= bound]
    if include_cyclic:
        out += [C.Cyclic(p) for p in primes_up_to(bound)]
    return _finish(out, include_cyclic)


def groups_with_order_dividing(q: SearchQuery | FactoredInteger, include_cyclic: bool = False) -> list[SimpleGroupId]:
    if isinstance(q, FactoredInteger):
        q = SearchQuery(q)
    target = q.divisor_target
    bound = q.bound
    texp = target.as_dict()

    def fits(fam, rank, qq):
        g = C.SimpleGroupId(fam, (rank, qq) if rank is not None else (qq,))
        l = factorize(qq).factors[0][0]
        # the defining-characteristic part of |G(q)| is exactly q^N
        if qq ** C.positive_roots(g) > l ** texp.get(l, 0):
            return False
        return q.max_order is None or C.order_value(g) <= q.max_order

    def alt_fits(n):
        for p in primes_up_to(n):
            if p not in texp:
                return False
        e2 = sum(valuation(k, 2) for k in range(2, n + 1)) - 1
        return e2 <= texp.get(2, 0)

    cands = list(_lie_groups(fits, target.primes()))
    cands += list(_alt_candidates(alt_fits))
    cands += C.all_sporadics() + [C.Tits()]
    if include_cyclic:
        cands += [C.Cyclic(p) for p in target.primes()]
    keep = [g for g in cands if C.order_value(g) <= bound and divides(C.order(g), target)]
    return _finish(keep, include_cyclic)
