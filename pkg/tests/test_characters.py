from fractions import Fraction
from itertools import permutations

import pytest

from linprim.arith.cyclotomic import CycloNumber
from linprim.characters import (
    CharacterDataError, ClassFunction, NotACharacter, SubgroupFusion, decompose, embedded_fusion,
    embedded_fusions, embedded_table, embedded_tables, frobenius_check, fusion_problems, induce,
    inner_product, is_character, is_irreducible, load_table, parse_fusion, parse_table, restrict,
)


def _ints(phi):
    return [x.to_rational() for x in phi.values]


@pytest.mark.parametrize("label", ["A4", "A5", "S4", "PSL(2,7)"])
def test_row_orthogonality(label):
    t = embedded_table(label)
    chars = t.characters()
    for i, a in enumerate(chars):
        for j, b in enumerate(chars):
            assert inner_product(a, b) == (1 if i == j else 0)


@pytest.mark.parametrize("label", ["A4", "A5", "S4", "PSL(2,7)"])
def test_column_orthogonality(label):
    t = embedded_table(label)
    k = len(t.classes)
    for i in range(k):
        for j in range(k):
            s = CycloNumber.zero(t.exponent)
            for v in t.irreducibles:
                s = s + v[i] * v[j].conj()
            assert s == (t.classes[i].centralizer if i == j else 0)


def test_degrees_square_sum():
    for label in embedded_tables():
        t = embedded_table(label)
        assert sum(v[0].to_rational() ** 2 for v in t.irreducibles) == t.order


def test_induce_a4_to_a5():
    fus = embedded_fusion("A4", "A5")
    chi = induce(embedded_table("A4").character(2), fus)
    assert _ints(chi) == [5, 1, -1, 0, 0]
    assert inner_product(chi, embedded_table("A5").character(1)) == 0
    assert inner_product(chi, chi) == 1
    assert is_irreducible(chi)
    triv = induce(embedded_table("A4").character(1), fus)
    assert decompose(triv) == [1, 0, 0, 1, 0]


def test_induce_s4_to_psl27():
    fus = embedded_fusion("S4", "PSL(2,7)")
    sign = embedded_table("S4").character(2)
    assert _ints(sign) == [1, -1, 1, 1, -1]
    chi = induce(sign, fus)
    assert chi.degree == 7
    assert is_irreducible(chi)


# ---------------------------------------------------------------- brute-force permutation characters

def _compose(a, b):
    return tuple(a[b[i]] for i in range(len(b)))


def _inverse(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def _even(p):
    sign, seen = 1, set()
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        sign *= (-1) ** (length - 1)
    return sign == 1


def _order(p):
    e = tuple(range(len(p)))
    k, x = 1, p
    while x != e:
        x = _compose(p, x)
        k += 1
    return k


def test_a5_permutation_character_brute_force():
    """Ind from V4 to A5 of the trivial character, counted on cosets."""
    a5 = [p for p in permutations(range(5)) if _even(p)]
    v4 = {(0, 1, 2, 3, 4), (1, 0, 3, 2, 4), (2, 3, 0, 1, 4), (3, 2, 1, 0, 4)}
    reps = {1: (0, 1, 2, 3, 4), 2: (1, 0, 3, 2, 4), 3: (1, 2, 0, 3, 4), 5: (1, 2, 3, 4, 0)}
    want = {}
    for o, g in reps.items():
        fixed = sum(1 for x in a5 if _compose(_inverse(x), _compose(g, x)) in v4)
        want[o] = Fraction(fixed, len(v4))
    # sum of the three linear characters of A4 is Ind from V4 to A4 of 1
    t4 = embedded_table("A4")
    phi = t4.character(1) + t4.character(2) + t4.character(3)
    got = induce(phi, embedded_fusion("A4", "A5"))
    t5 = embedded_table("A5")
    for c, v in zip(t5.classes, got.values):
        assert v == want[c.element_order], c.name
    assert all(_order(g) == o for o, g in reps.items())


# ---------------------------------------------------------------- reciprocity and fusion validation

@pytest.mark.parametrize("pair", [("A4", "A5"), ("S4", "PSL(2,7)")])
def test_frobenius_full_product(pair):
    fus = embedded_fusion(*pair)
    assert fusion_problems(fus) == []
    for tau in fus.sub.characters():
        for phi in fus.ambient.characters():
            assert frobenius_check(tau, phi, fus)
            assert inner_product(induce(tau, fus), phi) == inner_product(tau, restrict(phi, fus))


def test_corrupted_fusion_rejected():
    good = embedded_fusion("A4", "A5")
    bad = SubgroupFusion(good.sub, good.ambient, [0, 1, 3, 2])  # 3a -> 5a
    assert fusion_problems(bad)
    tau, phi = good.sub.character(2), good.ambient.character(2)
    assert not frobenius_check(tau, phi, bad)
    good = embedded_fusion("S4", "PSL(2,7)")
    swapped = SubgroupFusion(good.sub, good.ambient, [0, 1, 1, 2, 4])  # 4a -> 7a
    assert not frobenius_check(good.sub.character(1), good.ambient.character(1), swapped)


def test_restriction_and_decompose():
    fus = embedded_fusion("A4", "A5")
    res = restrict(embedded_table("A5").character(4), fus)
    assert decompose(res) == [1, 0, 0, 1]
    assert is_character(res)


def test_not_a_character():
    t = embedded_table("A5")
    half = ClassFunction(t, tuple(x * Fraction(1, 2) for x in t.character(2).values))
    assert not is_character(half)
    with pytest.raises(NotACharacter):
        is_irreducible(half)
    diff = ClassFunction(t, tuple(a - b for a, b in zip(t.character(1).values, t.character(4).values)))
    assert not is_character(diff)


def test_embedded_index():
    assert embedded_fusions() == [("A4", "A5"), ("S4", "PSL(2,7)")]
    assert embedded_fusion("A4", "A5").index == 5
    assert embedded_fusion("S4", "PSL(2,7)").index == 7
    with pytest.raises(KeyError):
        embedded_table("M11")


# ---------------------------------------------------------------- file formats

C3 = """group,C3,3,3
class,1a,1,3,1
class,3a,1,3,3
class,3b,1,3,3
chi,1,1,1,1
chi,2,1,z,z^2
chi,3,1,z^2,z
"""


def test_parse_and_load(tmp_path):
    t = parse_table(C3)
    assert t.order == 3 and len(t.irreducibles) == 3
    p = tmp_path / "c3.tbl"
    p.write_text(C3)
    assert load_table(p).label == "C3"
    triv = parse_table("group,1,1,1\nclass,1a,1,1,1\nchi,1,1\n")
    fus = parse_fusion("fusion,1,C3\nmap,1a,1a\n", triv, t)
    assert _ints(induce(triv.character(1), fus)) == [3, 0, 0]


@pytest.mark.parametrize("text,msg", [
    ("class,1a,1,3,1\n", "missing group"),
    ("group,C3,3,3\nclass,1a,1,3\n", ":2:"),
    ("group,C3,3,3\nclass,1a,2,3,1\n", "sum"),
    ("group,C3,3,3\nfoo,1\n", "unknown record"),
    (C3.replace("z^2,z\n", "z^^2,z\n"), ":7:"),
])
def test_parse_errors(text, msg):
    with pytest.raises(CharacterDataError, match=msg):
        parse_table(text)


def test_fusion_errors():
    t = parse_table(C3)
    triv = parse_table("group,1,1,1\nclass,1a,1,1,1\nchi,1,1\n")
    with pytest.raises(CharacterDataError):
        parse_fusion("fusion,1,C3\n", triv, t)
    with pytest.raises(CharacterDataError):
        parse_fusion("fusion,1,C3\nmap,1a,9z\n", triv, t)
    with pytest.raises(CharacterDataError):
        parse_fusion("fusion,X,C3\nmap,1a,1a\n", triv, t)


def test_missing_file(tmp_path):
    with pytest.raises(CharacterDataError):
        load_table(tmp_path / "nope.tbl")
