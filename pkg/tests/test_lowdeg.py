import pytest

from linprim import catalog as C
from linprim.lowdeg import (
    DataFileError, exception_groups, load_degree_table, merge_external, min_degree_psl,
    tz_groups_for_degree, tz_triples_for_group,
)
from linprim.search import enumerate_up_to
from linprim.socles import nonabelian_socles


def _pairs(g):
    return [(r.r, r.d) for r in tz_triples_for_group(g)]


def test_a5_thirteen_pairs():
    assert _pairs(C.Alt(5)) == [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (3, 4), (3, 5), (3, 6),
                                (5, 2), (5, 3), (5, 4), (5, 5), (5, 6)]
    # aliases give the same answer
    assert _pairs(C.PSL_(2, 4)) == _pairs(C.PSL_(2, 5)) == _pairs(C.Alt(5))


def test_suz():
    recs = tz_triples_for_group(C.Sporadic("SUZ"))
    assert [(r.r, r.d, r.count) for r in recs] == [(7, 12, 2), (11, 12, 2), (13, 12, 2)]


def test_psl2_17_family_clause():
    # q = r = 17: d in {r, (r-1)/2, (r+1)/2, r-1, r+1}
    assert sorted({r.d for r in tz_triples_for_group(C.PSL_(2, 17))}) == [8, 9, 16, 17, 18]


def test_psl_n_q_counts():
    recs = {(r.r, r.d): r.count for r in tz_triples_for_group(C.PSL_(3, 5))}
    assert recs == {(31, 30): 1, (31, 31): 3}


def test_psl33_merges_family_and_exception():
    recs = {r.d: r for r in tz_triples_for_group(C.PSL_(3, 3))}
    assert set(recs) == {12, 13, 16, 26}
    assert recs[16].count == 4 and recs[26].count == 3
    assert len(recs[12].clauses) == 2


def test_degree_two_only_a5():
    assert {r.group for r in tz_groups_for_degree(2)} == {C.Alt(5)}


def test_degree_26():
    names = {(C.display_name(r.group), r.count) for r in tz_groups_for_degree(26)}
    for want in [("PSL(3,3)", 3), ("PSL(4,3)", 2), ("2F4(2)'", 2), ("3D4(2)", 1), ("A27", None)]:
        assert want in names


def test_bad_degree():
    with pytest.raises(ValueError):
        tz_groups_for_degree(1)


def test_records_are_consistent():
    for g in enumerate_up_to(10 ** 9) + exception_groups():
        order = C.order_value(g)
        for r in tz_triples_for_group(g):
            assert order % r.r == 0, (g, r)
            assert r.d <= 2 * r.r, (g, r)
            assert all(r.r % k for k in range(2, int(r.r ** 0.5) + 1)), (g, r)


def test_duality_up_to_1e7():
    groups = enumerate_up_to(10 ** 7)
    by_degree = {d: {r.key for r in tz_groups_for_degree(d)} for d in range(2, 51)}
    for g in groups:
        mine = {r.key for r in tz_triples_for_group(g) if r.d <= 50}
        for d in range(2, 51):
            from_d = {k for k in by_degree[d] if k[0] == g}
            assert from_d == {k for k in mine if k[2] == d}, (g, d)


def test_sorted_by_order():
    recs = tz_groups_for_degree(12)
    keys = [(C.order_value(r.group), C.render_code(r.group), r.r) for r in recs]
    assert keys == sorted(keys)


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_socles_have_degree_p_reps(p):
    tz = {r.group for r in tz_groups_for_degree(p)}
    socles = {c.group for c in nonabelian_socles(p)[0]}
    assert socles <= tz
    extra = tz - socles
    # M11's 11-dimensional representation is induced from a linear character of M10,
    # hence monomial; it never shows up as a socle
    assert extra == ({C.Sporadic("M11")} if p == 11 else set())


def test_min_degree_psl():
    assert min_degree_psl(3, 2) == 2
    assert min_degree_psl(3, 4) == 4
    assert min_degree_psl(4, 2) == 7
    assert min_degree_psl(4, 3) == 26
    for n, q in [(3, 3), (3, 5), (3, 7), (5, 2), (4, 4), (6, 3)]:
        assert min_degree_psl(n, q) == (q ** n - 1) // (q - 1) - n
    assert min_degree_psl(3, 3) == 10
    for bad in [(2, 7), (3, 6), (3, 1)]:
        with pytest.raises(ValueError):
            min_degree_psl(*bad)


def _write(tmp_path, text):
    p = tmp_path / "degrees.csv"
    p.write_text(text)
    return p


def test_load_degree_table(tmp_path):
    p = _write(tmp_path, "# comment\ngroup_code,cover,degree,count,characteristic,source\n"
                         "ALT-5,2,2,2,0,atlas\nCA-1-5,1,3,2,0,atlas\nALT-5,1,3,2,3,modular\n")
    rows = load_degree_table(p)
    assert len(rows) == 3
    assert rows[1].group == C.Alt(5)
    merged = merge_external(tz_triples_for_group(C.Alt(5)), rows, group=C.Alt(5))
    assert len(merged) == 13 + 2
    merged = merge_external(tz_groups_for_degree(2), rows, degree=2)
    assert [getattr(m, "provenance", "") for m in merged][-1] == "external"


@pytest.mark.parametrize("text,where", [
    ("", "empty"),
    ("a,b\n", ":1:"),
    ("group_code,cover,degree,count,characteristic,source\nALT-5,1,x,1,0,s\n", ":2:"),
    ("group_code,cover,degree,count,characteristic,source\nALT-4,1,3,1,0,s\n", ":2:"),
    ("group_code,cover,degree,count,characteristic,source\n\nALT-5,1,3,1\n", ":3:"),
    ("group_code,cover,degree,count,characteristic,source\nALT-5,0,3,1,0,s\n", ":2:"),
])
def test_load_degree_table_errors(tmp_path, text, where):
    p = _write(tmp_path, text)
    with pytest.raises(DataFileError, match=where):
        load_degree_table(p)


def test_load_missing_file(tmp_path):
    with pytest.raises(DataFileError):
        load_degree_table(tmp_path / "nope.csv")
