"""Embedded small-degree classification tables and composite-degree case data."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .arith.integers import FactoredInteger, integer_root, is_prime
from . import catalog as C
from .catalog import SimpleGroupId

COVERING = "CoveringInduced"
LINEAR = "LinearInduced"
_ORIGIN = {"C": COVERING, "L": LINEAR}

TABLE_RANGE = range(2, 8)
STATUS_RANGE = range(2, 12)


class OutOfRange(ValueError):
    pass


@dataclass(frozen=True)
class TableEntry:
    degree: int
    group: str
    order: FactoredInteger | None
    origin: tuple[str, ...]
    external_id: str
    external_db: str
    structure: str
    fi_counts: tuple[int, ...] | None
    blichfeldt: str = ""
    k_sub: str = ""
    obs: tuple[str, ...] = ()
    simple: SimpleGroupId | None = None

    @property
    def is_placeholder(self) -> bool:
        return "tensor-product" in self.obs

    def to_json(self) -> dict:
        return {
            "degree": self.degree, "group": self.group,
            "order": self.order.value if self.order else None,
            "order_factored": self.order.render() if self.order else None,
            "origin": list(self.origin), "external_id": self.external_id, "external_db": self.external_db,
            "structure": self.structure, "fi": list(self.fi_counts) if self.fi_counts else None,
            "blichfeldt": self.blichfeldt or None, "k_sub": self.k_sub or None, "obs": list(self.obs),
            "simple_code": C.render_code(self.simple) if self.simple else None,
        }


def _split(s: str) -> list[str]:
    return [x for x in s.split(";") if x]


def _entry(row: dict) -> TableEntry:
    return TableEntry(
        degree=int(row["degree"]),
        group=row["group"],
        order=FactoredInteger.parse(row["order"]) if row["order"] else None,
        origin=tuple(_ORIGIN[o] for o in _split(row["origin"])),
        external_id=row["gap_id"],
        external_db=row["gap_db"],
        structure=row["structure"],
        fi_counts=tuple(int(x) for x in _split(row["fi"])) or None,
        blichfeldt=row["blichfeldt"],
        k_sub=row["k_sub"],
        obs=tuple(_split(row["obs"])),
        simple=C.parse_code(row["simple_code"]) if row["simple_code"] else None,
    )


@lru_cache(maxsize=1)
def _rows() -> tuple[TableEntry, ...]:
    text = resources.files("linprim").joinpath("data/primitive_tables.csv").read_text(encoding="utf-8")
    body = io.StringIO("".join(ln for ln in text.splitlines(keepends=True) if not ln.startswith("#")))
    return tuple(_entry(r) for r in csv.DictReader(body))


def primitive_groups(n: int) -> list[TableEntry]:
    if n not in TABLE_RANGE:
        raise OutOfRange(f"degree {n} is not classified here; tables cover 2..7, see classification_status")
    return [e for e in _rows() if e.degree == n]


def all_entries() -> list[TableEntry]:
    return list(_rows())


# ---------------------------------------------------------------- composite degree

@dataclass(frozen=True)
class CompositeCase:
    degree: int
    case: int
    params: tuple[tuple[str, int], ...] = ()
    note: str = ""

    def get(self, k: str) -> int:
        return dict(self.params)[k]


def composite_cases(n: int) -> list[CompositeCase]:
    if n < 4 or is_prime(n):
        raise ValueError(f"{n} is not a composite degree >= 4; prime degrees are handled by the socle solver")
    out = [
        CompositeCase(n, 1, (), "reducible or not quasi-primitive"),
        CompositeCase(n, 2, (), "contained in a Kronecker product of two representations of smaller degree"),
    ]
    for s in range(1, n.bit_length() + 1):
        r = integer_root(n, s)
        if r is not None and is_prime(r):
            out.append(CompositeCase(n, 3, (("p", r), ("s", s)),
                                     "normal elementary abelian p-subgroup, quotient in Sp(2s,p)"))
    for m in range(1, n.bit_length() + 1):
        s = integer_root(n, m)
        if s is not None and s >= 2:
            out.append(CompositeCase(n, 4, (("s", s), ("m", m)),
                                     "normal product of m conjugate nonabelian simple groups, degree s^m"))
    return out


# ---------------------------------------------------------------- composite-degree structure theorems

@dataclass(frozen=True)
class StructureClause:
    label: str
    kind: str
    groups: tuple[str, ...] = ()
    note: str = ""
    simple: tuple[SimpleGroupId, ...] = ()
    link: str = ""

    def to_json(self) -> dict:
        return {"label": self.label, "kind": self.kind, "groups": list(self.groups), "note": self.note,
                "simple_codes": [C.render_code(g) for g in self.simple], "link": self.link}


@dataclass
class StructureStatement:
    degree: int
    status: str
    clauses: list[StructureClause] = field(default_factory=list)


QUASISIMPLE = "quasisimple"
EXTENSION = "extension"
PRODUCT = "tensor-product"
ABELIAN_NORMAL = "abelian-normal"
ORDER_SHAPE = "order-shape"
P_CORE = "2-core"


def _codes(*codes: str) -> tuple[SimpleGroupId, ...]:
    return tuple(C.parse_code(c) for c in codes)


def _names(gs) -> tuple[str, ...]:
    return tuple(C.display_name(g) for g in gs)


def _qs(label: str, *codes: str) -> StructureClause:
    gs = _codes(*codes)
    return StructureClause(label, QUASISIMPLE, _names(gs), "G quasisimple", gs)


def quasiprimitive_structures(n: int) -> StructureStatement:
    if n == 4:
        return StructureStatement(4, "primitive groups classified", [
            _qs("i", "ALT-5", "ALT-6", "ALT-7", "CA-1-7", "T2A-3-2"),
            StructureClause("ii", EXTENSION, ("S5", "S6")),
            StructureClause("iii", PRODUCT, ("A x B", "A, B in {S4, A4, A5}"),
                            "or an index-2 extension when A = B, or index 4 over A4 x A4", link="kron"),
            StructureClause("iv", ABELIAN_NORMAL, ("C5", "D5", "Sz(2)", "A5", "S5", "A6", "S6"),
                            "normal abelian P = C2^4 with quotient in the list"),
        ])
    if n == 6:
        return StructureStatement(6, "quasi-primitive groups classified", [
            StructureClause("i", PRODUCT, ("A x B", "A in {A5, A4, S4}", "B in {PSL(2,7), A5, A6, H1, H2, H3}"),
                            "H3 Hessian, H2 and H1 of index 3 and 6 in H3", link="kron"),
            StructureClause("ii", PRODUCT, ("index 2 in S4 x H1", "index 2 in S4 x H2",
                                            "index 3, 12 or 24 in A4 x H3"), link="kron"),
            _qs("iii", "ALT-5", "ALT-6", "ALT-7", "CA-1-7", "CA-1-11", "CA-1-13", "T2A-3-2", "T2A-2-3",
                "T2A-3-3", "CA-2-4", "SPOR-J2"),
            StructureClause("iv", EXTENSION, ("S5", "S7", "A6:C2", "PSL(3,4):C2", "PSU(3,3):C2", "PSU(4,2):C2"),
                            "split index-2 extensions", _codes("ALT-6", "CA-2-4", "T2A-2-3", "T2A-3-2")),
        ])
    if n == 8:
        return StructureStatement(8, "quasi-primitive groups classified up to tensor-product details", [
            _qs("i", "ALT-6", "ALT-8", "ALT-9", "CA-1-7", "CA-1-17", "CA-1-8", "CC-3-2", "CD-4-2"),
            StructureClause("ii", EXTENSION, ("S8", "S9", "PGL(2,7)", "A6.2", "POmega+(8,2).2", "PSL(2,8).3"),
                            "POmega+(8,2) and its index-2 extension are W(E8)' and W(E8) modulo centre",
                            _codes("ALT-6", "CD-4-2", "CA-1-8")),
            StructureClause("iii", PRODUCT, ("A x B",), "A, B quasi-primitive of degrees 2 and 4", link="kron"),
            StructureClause("iv", P_CORE, ("O_2(G/Z) != 1", "G/O_2(G) <= Sp(6,2)")),
            StructureClause("v", EXTENSION, ("A5^3.C3", "A5^3.S3"), "", _codes("ALT-5")),
        ])
    if n == 9:
        return StructureStatement(9, "partially classified", [
            StructureClause("1", ORDER_SHAPE, ("|G| = 2^a 3^b 5^c",), "a, b, c >= 0"),
            _qs("2", "ALT-10", "CA-1-7", "CA-1-19"),
            StructureClause("3", EXTENSION, ("S10", "PSL(2,7) x A", "PSL(2,7)^2.2"),
                            "A quasi-primitive of degree 3", _codes("ALT-10", "CA-1-7"), link="kron"),
        ])
    if n == 10:
        return StructureStatement(10, "essentially unclassified", [])
    raise ValueError(f"structure statements exist for n in {{4, 6, 8, 9}} (10 reports its status); got {n}")


# ---------------------------------------------------------------- status

@dataclass(frozen=True)
class ClassificationStatus:
    degree: int
    complete: bool
    missing: tuple[str, ...] = ()
    comment: str = ""


_STATUS = {
    2: (True, (), ""),
    3: (True, (), ""),
    4: (True, (), "primitive groups classified, quasi-primitive ones not"),
    5: (True, (), ""),
    6: (False, ("explicit quasi-primitive groups coming from subgroups of tensor products, with representations",), ""),
    7: (True, (), ""),
    8: (False, ("explicit quasi-primitive groups coming from subgroups of tensor products, with representations",
                "explicit group extensions of A6, POmega+(8,2), PSL(2,8) and A5^3"), ""),
    9: (False, ("explicit groups PSL(2,7) x A with A quasi-primitive of degree 3",
                "explicit groups with |G| = 2^a 3^b 5^c",
                "explicit extension of PSL(2,7)^2"), ""),
    10: (False, ("essentially unclassified",), ""),
    11: (False, ("full groups G over each listed derived subgroup G'",
                 "groups with abelian socle for p = 11, up to conjugacy, with representations"), ""),
}


def classification_status(n: int) -> ClassificationStatus:
    if n not in STATUS_RANGE:
        raise OutOfRange(f"status is recorded for degrees 2..11, got {n}")
    complete, missing, comment = _STATUS[n]
    return ClassificationStatus(n, complete, missing, comment)
