"""Exact character tables, induction, restriction and Frobenius reciprocity."""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .arith.cyclotomic import CycloNumber, parse_cyclo


class CharacterDataError(ValueError):
    pass


class NotACharacter(ValueError):
    pass


@dataclass(frozen=True)
class ClassInfo:
    name: str
    size: int
    centralizer: int
    element_order: int


@dataclass
class CharacterTable:
    label: str
    order: int
    exponent: int
    classes: list[ClassInfo]
    irreducibles: list[tuple[CycloNumber, ...]]

    def class_index(self, name: str) -> int:
        for i, c in enumerate(self.classes):
            if c.name == name:
                return i
        raise KeyError(f"{self.label} has no class {name!r}")

    def character(self, i: int) -> "ClassFunction":
        """Irreducible number i, counted from 1 as in the data file."""
        if not 1 <= i <= len(self.irreducibles):
            raise IndexError(f"{self.label} has irreducibles 1..{len(self.irreducibles)}, got {i}")
        return ClassFunction(self, self.irreducibles[i - 1])

    def characters(self) -> list["ClassFunction"]:
        return [ClassFunction(self, v) for v in self.irreducibles]

    def check(self) -> None:
        if sum(c.size for c in self.classes) != self.order:
            raise CharacterDataError(f"{self.label}: class sizes do not sum to {self.order}")
        for c in self.classes:
            if c.size * c.centralizer != self.order:
                raise CharacterDataError(f"{self.label}: class {c.name} size*centralizer != order")
            if self.exponent % c.element_order:
                raise CharacterDataError(f"{self.label}: element order of {c.name} does not divide the exponent")
        for v in self.irreducibles:
            if len(v) != len(self.classes):
                raise CharacterDataError(f"{self.label}: character of wrong length")


@dataclass(frozen=True)
class ClassFunction:
    table: CharacterTable
    values: tuple[CycloNumber, ...]

    @property
    def degree(self) -> CycloNumber:
        return self.values[0]

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        _same(self.table, other.table)
        return ClassFunction(self.table, tuple(x + y for x, y in zip(self.values, other.values)))

    def __mul__(self, k: int) -> "ClassFunction":
        return ClassFunction(self.table, tuple(x * k for x in self.values))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, ClassFunction) and self.table is other.table and self.values == other.values

    def __hash__(self):
        return hash(self.values)


def _same(a: CharacterTable, b: CharacterTable) -> None:
    if a is not b and a.label != b.label:
        raise ValueError(f"class functions live on different tables ({a.label}, {b.label})")


@dataclass
class SubgroupFusion:
    sub: CharacterTable
    ambient: CharacterTable
    mapping: list[int]  # subgroup class index -> ambient class index

    @property
    def index(self) -> int:
        return self.ambient.order // self.sub.order


# ---------------------------------------------------------------- file formats

def _lines(text: str):
    for lineno, ln in enumerate(text.splitlines(), start=1):
        ln = ln.strip()
        if ln and not ln.startswith("#"):
            yield lineno, [x.strip() for x in next(csv.reader([ln]))]


def parse_table(text: str, source: str = "<table>") -> CharacterTable:
    label, order, exponent = None, 0, 0
    classes: list[ClassInfo] = []
    raw_chars: list[tuple[int, list[str]]] = []
    for lineno, f in _lines(text):
        try:
            if f[0] == "group":
                label, order, exponent = f[1], int(f[2]), int(f[3])
            elif f[0] == "class":
                classes.append(ClassInfo(f[1], int(f[2]), int(f[3]), int(f[4])))
            elif f[0] == "chi":
                raw_chars.append((lineno, f[2:]))
            else:
                raise CharacterDataError(f"{source}:{lineno}: unknown record {f[0]!r}")
        except (IndexError, ValueError) as e:
            if isinstance(e, CharacterDataError):
                raise
            raise CharacterDataError(f"{source}:{lineno}: malformed line ({e})") from e
    if label is None:
        raise CharacterDataError(f"{source}: missing group line")
    chars = []
    for lineno, vals in raw_chars:
        try:
            chars.append(tuple(parse_cyclo(v, exponent) for v in vals))
        except ValueError as e:
            raise CharacterDataError(f"{source}:{lineno}: {e}") from e
    t = CharacterTable(label, order, exponent, classes, chars)
    t.check()
    return t


def parse_fusion(text: str, sub: CharacterTable, ambient: CharacterTable, source: str = "<fusion>") -> SubgroupFusion:
    mapping: dict[int, int] = {}
    for lineno, f in _lines(text):
        if f[0] == "fusion":
            if len(f) < 3 or (f[1], f[2]) != (sub.label, ambient.label):
                raise CharacterDataError(f"{source}:{lineno}: fusion is for {f[1:3]}, "
                                         f"tables are {sub.label}, {ambient.label}")
        elif f[0] == "map":
            try:
                mapping[sub.class_index(f[1])] = ambient.class_index(f[2])
            except (KeyError, IndexError) as e:
                raise CharacterDataError(f"{source}:{lineno}: {e}") from e
        else:
            raise CharacterDataError(f"{source}:{lineno}: unknown record {f[0]!r}")
    if sorted(mapping) != list(range(len(sub.classes))):
        raise CharacterDataError(f"{source}: every subgroup class must be mapped exactly once")
    if ambient.order % sub.order:
        raise CharacterDataError(f"{source}: |{sub.label}| does not divide |{ambient.label}|")
    return SubgroupFusion(sub, ambient, [mapping[i] for i in range(len(sub.classes))])


def load_table(path: str | Path) -> CharacterTable:
    path = Path(path)
    try:
        return parse_table(path.read_text(encoding="utf-8"), str(path))
    except OSError as e:
        raise CharacterDataError(f"{path}: cannot read ({e.strerror})") from e


def load_fusion(path: str | Path, sub: CharacterTable, ambient: CharacterTable) -> SubgroupFusion:
    path = Path(path)
    try:
        return parse_fusion(path.read_text(encoding="utf-8"), sub, ambient, str(path))
    except OSError as e:
        raise CharacterDataError(f"{path}: cannot read ({e.strerror})") from e


_TABLE_FILES = {"A4": "A4.tbl", "A5": "A5.tbl", "S4": "S4.tbl", "PSL(2,7)": "PSL2_7.tbl"}
_FUSION_FILES = {("A4", "A5"): "A4_A5.fus", ("S4", "PSL(2,7)"): "S4_PSL2_7.fus"}
_cache: dict[str, CharacterTable] = {}


def _data(name: str) -> str:
    return resources.files("linprim").joinpath(f"data/{name}").read_text(encoding="utf-8")


def embedded_table(label: str) -> CharacterTable:
    if label not in _TABLE_FILES:
        raise KeyError(f"no embedded table for {label!r}; have {sorted(_TABLE_FILES)}")
    if label not in _cache:
        _cache[label] = parse_table(_data(_TABLE_FILES[label]), _TABLE_FILES[label])
    return _cache[label]


def embedded_fusion(sub: str, ambient: str) -> SubgroupFusion:
    fname = _FUSION_FILES[(sub, ambient)]
    return parse_fusion(_data(fname), embedded_table(sub), embedded_table(ambient), fname)


def embedded_tables() -> list[str]:
    return list(_TABLE_FILES)


def embedded_fusions() -> list[tuple[str, str]]:
    return list(_FUSION_FILES)


# ---------------------------------------------------------------- operations

def inner_product(phi: ClassFunction, psi: ClassFunction) -> Fraction:
    _same(phi.table, psi.table)
    t = phi.table
    acc = CycloNumber.zero(t.exponent)
    for c, x, y in zip(t.classes, phi.values, psi.values):
        acc = acc + x * y.conj() * c.size
    acc = acc / t.order
    if not acc.is_rational():
        raise ValueError("inner product is not rational; values are not class functions of a group")
    return acc.to_rational()


def induce(chi: ClassFunction, fusion: SubgroupFusion) -> ClassFunction:
    if chi.table is not fusion.sub and chi.table.label != fusion.sub.label:
        raise ValueError(f"character is on {chi.table.label}, fusion starts at {fusion.sub.label}")
    G, H = fusion.ambient, fusion.sub
    m = math.lcm(G.exponent, H.exponent)
    out = []
    for j, cg in enumerate(G.classes):
        acc = CycloNumber.zero(m)
        for i, ch in enumerate(H.classes):
            if fusion.mapping[i] == j:
                acc = acc + chi.values[i] / ch.centralizer
        out.append((acc * cg.centralizer).embed(G.exponent) if m == G.exponent else acc * cg.centralizer)
    return ClassFunction(G, tuple(out))


def restrict(phi: ClassFunction, fusion: SubgroupFusion) -> ClassFunction:
    _same(phi.table, fusion.ambient)
    return ClassFunction(fusion.sub, tuple(phi.values[fusion.mapping[i]] for i in range(len(fusion.sub.classes))))


def decompose(phi: ClassFunction) -> list[Fraction]:
    return [inner_product(phi, chi) for chi in phi.table.characters()]


def is_character(phi: ClassFunction) -> bool:
    return all(m.denominator == 1 and m >= 0 for m in decompose(phi)) and any(decompose(phi))


def is_irreducible(phi: ClassFunction) -> bool:
    if not is_character(phi):
        raise NotACharacter("class function is not a character of the table")
    return inner_product(phi, phi) == 1


def fusion_problems(fusion: SubgroupFusion) -> list[str]:
    """Consistency checks on a fusion map; empty when it is plausible."""
    H, G = fusion.sub, fusion.ambient
    out = []
    if len(fusion.mapping) != len(H.classes):
        out.append("mapping length differs from the number of subgroup classes")
        return out
    for i, j in enumerate(fusion.mapping):
        ch, cg = H.classes[i], G.classes[j]
        if ch.element_order != cg.element_order:
            out.append(f"{ch.name} -> {cg.name}: element orders {ch.element_order} and {cg.element_order}")
        if cg.centralizer % ch.centralizer:
            out.append(f"{ch.name} -> {cg.name}: centralizer {ch.centralizer} does not divide {cg.centralizer}")
    if fusion.mapping[0] != 0 or H.classes[0].element_order != 1:
        out.append("identity class must map to identity class")
    if not out:
        for k, chi in enumerate(G.characters(), start=1):
            if not is_character(restrict(chi, fusion)):
                out.append(f"restriction of irreducible {k} is not a character of {H.label}")
    return out


def frobenius_check(tau: ClassFunction, phi: ClassFunction, fusion: SubgroupFusion) -> bool:
    """<Ind tau, phi>_G == <tau, Res phi>_H, with the fusion itself validated."""
    if fusion_problems(fusion):
        return False
    return inner_product(induce(tau, fusion), phi) == inner_product(tau, restrict(phi, fusion))
