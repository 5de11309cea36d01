"""Low-degree irreducible representations of quasisimple groups: the
Tiep-Zalesskii rule engine, minimal projective degree of PSL(n,q), and a
loader for externally supplied degree tables."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .arith.integers import is_prime, is_prime_power
from . import catalog as C
from .catalog import SimpleGroupId

NOTE_3A = "clause 3(a) uses d = 2^n - 2; the printed 2n - 2 is below the minimal degree of PSL(n,2)"
NOTE_5C = "clause 5(c) read as q = 5, n an odd prime, r = (5^n - 1)/4, d = 2r"


@dataclass
class RepDegreeRecord:
    group: SimpleGroupId
    r: int
    d: int
    count: int | None = None
    clauses: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    provenance: str = "embedded"

    @property
    def key(self) -> tuple[SimpleGroupId, int, int]:
        return (self.group, self.r, self.d)


def _odd_prime(n: int) -> bool:
    return n > 2 and is_prime(n)


def _q_kind(q: int) -> tuple[int, int]:
    pp = is_prime_power(q)
    if pp is None:
        raise ValueError(q)
    return pp


# ---------------------------------------------------------------- family clauses

def _alt_records(n: int):
    if n < 9:
        return
    for r in range((n - 1) // 2, n + 1):
        if is_prime(r) and max(9, r) <= n <= 2 * r + 1:
            yield r, n - 1, None, "1", None


def _psl2_records(q: int):
    if q in (5, 7, 9):
        return
    l, a = _q_kind(q)
    if l == 2 and a >= 3:
        for r, sign in ((q + 1, +1), (q - 1, -1)):
            if is_prime(r):
                # d in {r, r -/+ 1, r -/+ 2}
                for d in (r, r - sign, r - 2 * sign):
                    yield r, d, None, "2(a)", None
    if a == 1 and q >= 11:
        r = q
        for d in (r, (r - 1) // 2, (r + 1) // 2, r - 1, r + 1):
            yield r, d, None, "2(b)", None
    if (a == 1 and q >= 11) or (l == 3 and _odd_prime(a)):
        if (q - 1) % 2 == 0 and is_prime((q - 1) // 2):
            r = (q - 1) // 2
            for d in (r, r + 1, 2 * r):
                yield r, d, None, "2(c)", None
        if (q + 1) % 4 == 0 and is_prime((q + 1) // 4):
            r = (q + 1) // 4
            for d in (2 * r - 1, 2 * r):
                yield r, d, None, "2(f)", None
    if (a == 1 and q >= 13) or (l == 5 and _odd_prime(a)):
        if (q - 1) % 4 == 0 and is_prime((q - 1) // 4):
            r = (q - 1) // 4
            yield r, 2 * r, None, "2(d)", None
    if q >= 13 and (q + 1) % 2 == 0 and is_prime((q + 1) // 2):
        r = (q + 1) // 2
        for d in (r - 1, r, 2 * r - 2, 2 * r - 1, 2 * r):
            yield r, d, None, "2(e)", None


def _psl_records(n: int, q: int):
    if n == 2:
        yield from _psl2_records(q)
        return
    if q == 2 and n >= 5:
        for r in (2 ** (n - 1) - 1, 2 ** n - 1):
            if is_prime(r):
                yield r, 2 ** n - 2, 1, "3(a)", NOTE_3A
    if q >= 3 and _odd_prime(n):
        r = (q ** n - 1) // (q - 1)
        if is_prime(r):
            yield r, r - 1, 1, "3(b)", None
            yield r, r, q - 2, "3(b)", None


def _psu_records(n: int, q: int):
    if q == 2 and _odd_prime(n - 1) and n - 1 >= 5:
        if (2 ** (n - 1) + 1) % 3 == 0 and is_prime((2 ** (n - 1) + 1) // 3):
            r = (2 ** (n - 1) + 1) // 3
            yield r, 2 * r - 1, 2, "4(a)", None
            yield r, 2 * r, 1, "4(a)", None
    if _odd_prime(n):
        r = (q ** n + 1) // (q + 1)
        if is_prime(r):
            yield r, r - 1, 1, "4(b)", None
            yield r, r, q, "4(b)", None


def _psp_records(dim: int, q: int):
    n = dim // 2
    if q == 3 and _odd_prime(n):
        r = (3 ** n - 1) // 2
        if is_prime(r):
            yield r, r, 2, "5(a)", None
            yield r, r + 1, 2, "5(a)", None
        if (3 ** n + 1) % 4 == 0 and is_prime((3 ** n + 1) // 4):
            r = (3 ** n + 1) // 4
            yield r, 2 * r - 2, 2, "5(b)", None
            yield r, 2 * r, 2, "5(b)", None
    if q == 5 and _odd_prime(n):
        r = (5 ** n - 1) // 4
        if is_prime(r):
            yield r, 2 * r, 2, "5(c)", NOTE_5C
    if n >= 2 and n & (n - 1) == 0 and q % 2 == 1:
        r = (q ** n + 1) // 2
        if is_prime(r):
            yield r, r - 1, 2, "5(d)", None
            yield r, r, 2, "5(d)", None


def _family_records(g: SimpleGroupId):
    f, ps = g.family, g.params
    if f == C.ALT:
        yield from _alt_records(ps[0])
    elif f == C.PSL:
        yield from _psl_records(*ps)
    elif f == C.PSU:
        yield from _psu_records(*ps)
    elif f == C.PSP:
        yield from _psp_records(*ps)


# ---------------------------------------------------------------- exception data

@lru_cache(maxsize=1)
def _exceptions() -> dict[SimpleGroupId, list[tuple[int, int, int | None, str]]]:
    text = resources.files("linprim").joinpath("data/tz_exceptions.csv").read_text(encoding="utf-8")
    rows = csv.DictReader(line for line in io.StringIO(text) if not line.startswith("#"))
    out: dict[SimpleGroupId, list] = {}
    for row in rows:
        g = C.canonical(C.parse_code(row["group_code"]))
        cnt = int(row["count"]) if row["count"] else None
        out.setdefault(g, []).append((int(row["r"]), int(row["d"]), cnt, row["clause"]))
    return out


def exception_groups() -> list[SimpleGroupId]:
    return sorted(_exceptions())


# ---------------------------------------------------------------- queries

def tz_triples_for_group(L: SimpleGroupId) -> list[RepDegreeRecord]:
    L = C.canonical(L)
    merged: dict[tuple, RepDegreeRecord] = {}

    def put(r, d, cnt, clause, note):
        key = (r, d)
        rec = merged.get(key)
        if rec is None:
            rec = merged[key] = RepDegreeRecord(L, r, d, cnt)
        elif rec.count is None and cnt is not None:
            rec.count = cnt
        if clause not in rec.clauses:
            rec.clauses.append(clause)
        if note and note not in rec.notes:
            rec.notes.append(note)

    for a in C.aliases(L):
        for r, d, cnt, clause, note in _family_records(a):
            put(r, d, cnt, clause, note)
    for r, d, cnt, clause in _exceptions().get(L, []):
        put(r, d, cnt, clause, None)
    return sorted(merged.values(), key=lambda x: (x.r, x.d))


def _prime_powers(lo: int, hi: int):
    for q in range(max(lo, 2), hi + 1):
        if is_prime_power(q):
            yield q


def _candidates_for_degree(d: int) -> set[SimpleGroupId]:
    """Superset of groups with a record of degree d. In every clause the
    prime r satisfies d/2 <= r <= d+2."""
    rmax = d + 2
    out: set[SimpleGroupId] = set()

    def add(fam, *ps):
        try:
            out.add(C.canonical(C.make(fam, *ps)))
        except C.InvalidGroup:
            pass

    if d + 1 >= 9:
        add(C.ALT, d + 1)
    # PSL(2,q): q <= 4r + 1
    for q in _prime_powers(4, 4 * rmax + 1):
        add(C.PSL, 2, q)
    # PSL(n,2), n >= 5: r >= 2^(n-1) - 1
    n = 5
    while 2 ** (n - 1) - 1 <= rmax:
        add(C.PSL, n, 2)
        n += 1
    # PSL(n,q), PSU(n,q) with n an odd prime
    n = 3
    while (2 ** n + 1) // 3 <= rmax:
        if is_prime(n):
            q = 2
            while (q ** n + 1) // (q + 1) <= rmax:
                if is_prime_power(q):
                    if q >= 3 and (q ** n - 1) // (q - 1) <= rmax:
                        add(C.PSL, n, q)
                    add(C.PSU, n, q)
                q += 1
        n += 2
    # PSU(n,2) with n - 1 an odd prime
    n = 6
    while (2 ** (n - 1) + 1) // 3 <= rmax:
        add(C.PSU, n, 2)
        n += 1
    # PSp(2n,3), PSp(2n,5) with n an odd prime
    n = 3
    while (3 ** n + 1) // 4 <= rmax:
        add(C.PSP, 2 * n, 3)
        if (5 ** n - 1) // 4 <= rmax:
            add(C.PSP, 2 * n, 5)
        n += 2
    # PSp(2n,q) with n = 2^m
    n = 2
    while (3 ** n + 1) // 2 <= rmax:
        q = 3
        while (q ** n + 1) // 2 <= rmax:
            if is_prime_power(q):
                add(C.PSP, 2 * n, q)
            q += 2
        n *= 2
    out.update(_exceptions())
    return out


def tz_groups_for_degree(d: int) -> list[RepDegreeRecord]:
    if d < 2:
        raise ValueError(f"degree must be >= 2, got {d}")
    recs = []
    for g in _candidates_for_degree(d):
        recs.extend(r for r in tz_triples_for_group(g) if r.d == d)
    return sorted(recs, key=lambda x: (C.order_value(x.group), C.render_code(x.group), x.r))


# ---------------------------------------------------------------- minimal degree

_MINDEG_EXCEPTIONS = {(3, 2): 2, (3, 4): 4, (4, 2): 7, (4, 3): 26}


def min_degree_psl(n: int, q: int) -> int:
    """Minimal degree of a nontrivial projective representation of PSL(n,q), n >= 3."""
    if n < 3:
        raise ValueError(f"min_degree_psl needs n >= 3, got {n}")
    if q < 2 or is_prime_power(q) is None:
        raise ValueError(f"q={q} is not a prime power")
    if (n, q) in _MINDEG_EXCEPTIONS:
        return _MINDEG_EXCEPTIONS[(n, q)]
    return (q ** n - 1) // (q - 1) - n


# ---------------------------------------------------------------- external data

class DataFileError(ValueError):
    pass


EXTERNAL_HEADER = ["group_code", "cover", "degree", "count", "characteristic", "source"]


@dataclass(frozen=True)
class ExternalDegreeRecord:
    group: SimpleGroupId
    cover: int
    degree: int
    count: int | None
    characteristic: int
    source: str
    provenance: str = "external"


def load_degree_table(path: str | Path) -> list[ExternalDegreeRecord]:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise DataFileError(f"{path}: cannot read ({e.strerror})") from e
    lines = [(i, ln) for i, ln in enumerate(text.splitlines(), start=1) if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise DataFileError(f"{path}: empty file")
    header = next(csv.reader([lines[0][1]]))
    if [h.strip() for h in header] != EXTERNAL_HEADER:
        raise DataFileError(f"{path}:{lines[0][0]}: header must be {','.join(EXTERNAL_HEADER)}")
    out = []
    for lineno, ln in lines[1:]:
        row = next(csv.reader([ln]))
        if len(row) != len(EXTERNAL_HEADER):
            raise DataFileError(f"{path}:{lineno}: expected {len(EXTERNAL_HEADER)} fields, got {len(row)}")
        code, cover, degree, count, char, source = (x.strip() for x in row)
        try:
            g = C.canonical(C.parse_code(code))
        except (C.CodeError, C.InvalidGroup) as e:
            raise DataFileError(f"{path}:{lineno}: bad group code {code!r} ({e})") from e
        try:
            rec = ExternalDegreeRecord(g, int(cover), int(degree), int(count) if count else None, int(char), source)
        except ValueError as e:
            raise DataFileError(f"{path}:{lineno}: non-integer field ({e})") from e
        if rec.cover < 1 or rec.degree < 1 or rec.characteristic < 0:
            raise DataFileError(f"{path}:{lineno}: cover and degree must be positive, characteristic >= 0")
        out.append(rec)
    return out


def merge_external(records: list[RepDegreeRecord], external: list[ExternalDegreeRecord],
                   degree: int | None = None, group: SimpleGroupId | None = None) -> list:
    """Embedded records followed by matching external rows (complex characteristic only)."""
    out: list = list(records)
    for e in external:
        if e.characteristic != 0:
            continue
        if degree is not None and e.degree != degree:
            continue
        if group is not None and e.group != C.canonical(group):
            continue
        out.append(e)
    return out
