import pytest

from linprim import bounds as B
from linprim import catalog as C
from linprim.socles import (
    IMPRIMITIVE_SOCLE, PRIMITIVE_SOCLE, abelian_socle_structure, clause_value, nonabelian_socles,
    small_p_overrides,
)


def _names(p, kind, **kw):
    cands, _ = nonabelian_socles(p, **kw)
    return {C.display_name(c.group) for c in cands if c.socle_kind == kind}


# ---------------------------------------------------------------- brute-force oracle

def _prime(n):
    return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))


def _ppow(q):
    """(l, k) with q = l^k, l prime, else None."""
    for l in range(2, q + 1):
        if q % l == 0:
            if not _prime(l):
                return None
            k = 0
            while q % l == 0:
                q //= l
                k += 1
            return (l, k) if q == 1 else None
    return None


_ISO = {"PSL(2,4)": "A5", "PSL(2,5)": "A5", "PSL(2,9)": "A6", "PSL(3,2)": "PSL(2,7)",
        "PSp(4,3)": "PSU(4,2)", "PSL(4,2)": "A8"}
_EXC = {3: ["A6"], 7: ["PSp(6,2)"], 11: ["M12"], 23: ["Co2", "Co3", "M24"]}


def _scan(p, qmax=400, nmax=14):
    """Try every grid point of every clause and keep those that give p."""
    prim, imprim = set(), set()
    if p >= 7:
        prim.add(f"A{p + 1}")
    for q in range(2, qmax):
        pp = _ppow(q)
        if pp is None:
            continue
        l, k = pp
        if p == q and p >= 11:
            prim.add(f"PSL(2,{q})")
        if 2 * p == q - 1 and (k == 1 or (l == 3 and _prime(k) and k % 2)):
            prim.add(f"PSL(2,{q})")
        if 2 * p == q + 1 and q >= 5 and l > 2 and (k & (k - 1)) == 0:
            prim.add(f"PSL(2,{q})")
        if l == 2 and _prime(k) and k % 2 and p == q - 1:
            prim.add(f"PSL(2,{q})")
        for s in range(1, 5):
            n = 2 ** s
            if l > 2 and (k & (k - 1)) == 0 and 2 * p == q ** n + 1:
                prim.add(f"PSp({2 * n},{q})")
        for n in range(2, nmax):
            if q == 3 and _prime(n) and n % 2 and 2 * p == 3 ** n - 1:
                prim.add(f"PSp({2 * n},3)")
            if _prime(n) and n % 2 and p * (q + 1) == q ** n + 1:
                prim.add(f"PSU({n},{q})")
            if p * (q - 1) == q ** n - 1:
                if (n == 2 and q % 2 == 0) or (n > 2 and (q % 2 or (n, q) == (3, 2))):
                    imprim.add(f"PSL({n},{q})")
    prim |= set(_EXC.get(p, []))
    solvable = {"PSL(2,2)", "PSL(2,3)", "PSU(3,2)"}
    prim, imprim = prim - solvable, imprim - solvable
    return {_ISO.get(x, x) for x in prim}, {_ISO.get(x, x) for x in imprim}


# ---------------------------------------------------------------- tests

@pytest.mark.parametrize("p,prim,imprim", [
    (5, {"A6", "PSL(2,11)", "PSU(4,2)"}, {"A5"}),
    (7, {"A8", "PSL(2,13)", "PSp(6,2)", "PSL(2,8)", "PSU(3,3)"}, {"PSL(2,7)"}),
    (11, {"A12", "M12", "PSL(2,11)", "PSL(2,23)", "PSU(5,2)"}, set()),
    (23, {"A24", "PSL(2,23)", "PSL(2,47)", "M24", "Co2", "Co3"}, set()),
])
def test_small_p_sets(p, prim, imprim):
    assert _names(p, PRIMITIVE_SOCLE) == prim
    assert _names(p, IMPRIMITIVE_SOCLE) == imprim


def test_strict_s2_drops_psu42():
    assert _names(5, PRIMITIVE_SOCLE, strict_s2=True) == {"A6", "PSL(2,11)"}
    _, notes = nonabelian_socles(5)
    assert notes


@pytest.mark.parametrize("p", [q for q in range(2, 120) if _prime(q)])
def test_matches_brute_force_scan(p):
    assert (_names(p, PRIMITIVE_SOCLE), _names(p, IMPRIMITIVE_SOCLE)) == _scan(p)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13, 17, 19, 23, 31, 41, 127, 8191])
def test_witnesses_reproduce_p(p):
    cands, _ = nonabelian_socles(p)
    for c in cands:
        assert c.witnesses
        for w in c.witnesses:
            assert clause_value(w) == p, (c.group, w)


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 19, 23])
def test_candidates_pass_bounds(p):
    for c in nonabelian_socles(p)[0]:
        assert B.can_be_quasiprimitive(p, C.order(c.group)).ok, c.group


def test_no_duplicates():
    for p in (5, 7, 13, 31):
        cands, _ = nonabelian_socles(p)
        keys = [(c.group, c.socle_kind) for c in cands]
        assert len(keys) == len(set(keys))
        assert all(C.canonical(c.group) == c.group for c in cands)


def test_large_mersenne_prime():
    names = _names(8191, PRIMITIVE_SOCLE)
    assert {"PSL(2,8191)", "PSL(2,8192)", "A8192"} <= names
    # (2^13 - 1)/(2 - 1) solves clause 2 but q = 2 is excluded for n > 3
    assert _names(8191, IMPRIMITIVE_SOCLE) == set()


@pytest.mark.parametrize("p", [5, 7, 11])
def test_overrides_agree_with_solver(p):
    from_overrides = {C.display_name(o.socle) for o in small_p_overrides(p) if o.socle}
    assert from_overrides == _names(p, PRIMITIVE_SOCLE) | _names(p, IMPRIMITIVE_SOCLE)


def test_overrides_content():
    assert [o.quotient for o in small_p_overrides(5)] == ["S5", "A6", "S6", "PSL(2,11)", "PSU(4,2)"]
    q7 = [o.quotient for o in small_p_overrides(7)]
    assert "PGL(2,7)" in q7 and "PSL(2,7)" not in q7
    with pytest.raises(ValueError):
        small_p_overrides(13)


def test_abelian_socle():
    s5 = abelian_socle_structure(5)
    assert s5.extraspecial_order == 125 and s5.full_g0_order == 15000
    assert [o.name for o in s5.options] == ["C3", "C6", "Q8", "Dic3", "SL(2,3)", "SL(2,5)"]
    assert len(abelian_socle_structure(7).options) == 11
    assert [o.name for o in abelian_socle_structure(3).options] == ["C4", "Q8", "SL(2,3)"]
    assert abelian_socle_structure(11).full_g0_order == 11 ** 4 * 120
    with pytest.raises(ValueError):
        abelian_socle_structure(2)
    for p in (3, 5, 7):
        s = abelian_socle_structure(p)
        assert s.projective_orders == [p * p * o.order for o in s.options]
