"""Command-line front end: linprim <command> ... [--json]."""
from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import resources
from pathlib import Path

from . import bounds as B
from . import catalog as C
from . import characters as K
from . import extraspecial as X
from . import lowdeg as L
from . import search as S
from . import socles as SO
from . import tables as T
from .arith.integers import FactoredInteger, is_prime

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_DATA = 0, 2, 3, 4
DATA_ENV = "LINPRIM_DATA_DIR"

EMBEDDED, DERIVED, EXTERNAL = "embedded", "derived", "external"


class DomainError(ValueError):
    pass


def _group(g: C.SimpleGroupId) -> dict:
    return {"code": C.render_code(g), "name": C.display_name(g), "order": str(C.order_value(g))}


def _factored(text: str) -> FactoredInteger:
    try:
        return FactoredInteger.parse(text)
    except ValueError as e:
        raise DomainError(f"cannot read {text!r} as a positive integer or a product like 2^3*3^2*5") from e


def _code(text: str) -> C.SimpleGroupId:
    try:
        return C.parse_code(text)
    except (C.CodeError, C.InvalidGroup) as e:
        raise DomainError(str(e)) from e


def _prime(p: int, what: str = "p") -> int:
    if p < 2 or not is_prime(p):
        raise DomainError(f"{what} = {p} must be a prime >= 2")
    return p


# ---------------------------------------------------------------- commands

def cmd_order(a):
    g = _code(a.code)
    c = C.canonical(g)
    sm = C.schur_multiplier(c)
    res = {
        "group": _group(c),
        "order_factored": C.order(c).render(),
        "aliases": sorted(C.render_code(x) for x in C.aliases(c)),
        "schur_multiplier": {"invariants": list(sm.invariants), "text": str(sm), "provenance": sm.provenance},
    }
    text = [f"{res['group']['code']}  {res['group']['name']}  {res['group']['order']} = {res['order_factored']}",
            f"aliases: {', '.join(res['aliases'])}",
            f"Schur multiplier: {sm} ({sm.provenance})"]
    return res, [], [DERIVED], text


def cmd_search_order(a):
    target = _factored(a.target)
    if a.max is not None and a.max < 1:
        raise DomainError("--max must be a positive integer")
    gs = S.groups_with_order_dividing(S.SearchQuery(target, a.max), include_cyclic=a.include_cyclic)
    res = {"target": target.render(), "max": a.max, "groups": [_group(g) for g in gs]}
    text = [f"{len(gs)} simple groups with order dividing {target.render()}"]
    text += [f"  {g['code']:<14} {g['name']:<16} {g['order']}" for g in res["groups"]]
    return res, [], [DERIVED], text


def cmd_socles(a):
    p = _prime(a.p)
    if a.abelian:
        if p == 2:
            raise DomainError("abelian-socle data needs an odd prime p >= 3")
        s = SO.abelian_socle_structure(p)
        res = {"p": p, "extraspecial_order": s.extraspecial_order, "full_g0_order": s.full_g0_order,
               "options": [{"index": o.index, "name": o.name, "order": o.order, "coprime_to_p": o.coprime_to_p,
                            "note": o.note} for o in s.options],
               "projective_orders": s.projective_orders}
        notes = [] if s.options else [f"no embedded K_i list for p = {p}; tables cover p in 3, 5, 7"]
        text = [f"p = {p}: extraspecial group of order {s.extraspecial_order}, G0 of order {s.full_g0_order}"]
        text += [f"  K{o.index} = {o.name} (order {o.order}) {o.note}".rstrip() for o in s.options]
        return res, notes, [EMBEDDED, DERIVED], text
    cands, notes = SO.nonabelian_socles(p, strict_s2=a.strict_s2)
    items = [{"group": _group(c.group), "kind": c.socle_kind,
              "witnesses": [{"clause": w.clause, "params": dict(w.params)} for w in c.witnesses]} for c in cands]
    res = {"p": p, "strict_s2": a.strict_s2,
           "primitive": [i for i in items if i["kind"] == SO.PRIMITIVE_SOCLE],
           "imprimitive": [i for i in items if i["kind"] == SO.IMPRIMITIVE_SOCLE]}
    text = [f"p = {p}: {len(res['primitive'])} primitive, {len(res['imprimitive'])} imprimitive"]
    for i in items:
        cl = ", ".join(w["clause"] for w in i["witnesses"])
        text.append(f"  {i['kind']:<16} {i['group']['name']:<12} [{cl}]")
    return res, notes, [DERIVED], text


def cmd_bounds(a):
    n = a.n
    if n < 2:
        raise DomainError(f"degree n = {n} must be >= 2")
    const = 5 if a.blichfeldt_5 else 6
    primes = [_prime(a.prime, "--prime")] if a.prime else [p for p in range(2, 2 * n + 2) if is_prime(p)]
    rows = []
    for p in primes:
        v = B.admissible_prime(n, p)
        rows.append({"p": p, "verdict": v.kind, "note": v.note,
                     "exponent_bound": B.blichfeldt_exponent_bound(n, p, const)})
    cp = B.collins_index_bound(n, B.PRIMITIVE)
    ca = B.collins_index_bound(n, B.ANY_FINITE)
    res = {"n": n, "constant": const, "primes": rows,
           "collins_primitive": None if cp is None else str(cp),
           "collins_any_finite": None if ca is None else str(ca), "check": None}
    text = [f"n = {n}, Blichfeldt constant {const}"]
    text += [f"  p = {r['p']:<4} {r['verdict']:<28} k <= {r['exponent_bound']}" for r in rows]
    text.append(f"  index bound (primitive): {res['collins_primitive'] or 'absent'}")
    text.append(f"  index bound (any finite): {res['collins_any_finite'] or 'absent'}")
    notes = ["filter is advisory: passing means no necessary condition fails"]
    if a.order:
        o = _factored(a.order)
        chk = B.can_be_quasiprimitive(n, o, const)
        res["check"] = {"order": o.render(), "ok": chk.ok, "violations": chk.violations, "notes": chk.notes}
        text.append(f"order {o.render()}: {'passes' if chk.ok else 'fails'}")
        text += [f"  violation: {v}" for v in chk.violations]
        text += [f"  note: {v}" for v in chk.notes]
    return res, notes, [DERIVED], text


def _rep(r) -> dict:
    if isinstance(r, L.ExternalDegreeRecord):
        return {"group": _group(r.group), "r": None, "d": r.degree, "count": r.count, "clauses": [],
                "notes": [f"cover {r.cover}", f"source {r.source}"], "provenance": EXTERNAL}
    return {"group": _group(r.group), "r": r.r, "d": r.d, "count": r.count, "clauses": list(r.clauses),
            "notes": list(r.notes), "provenance": EMBEDDED}


def _external_degrees() -> list:
    d = os.environ.get(DATA_ENV)
    if not d:
        return []
    path = Path(d) / "degrees.csv"
    return L.load_degree_table(path) if path.exists() else []


def cmd_lowdeg(a):
    ext = _external_degrees()
    if a.degree is not None:
        if a.degree < 2:
            raise DomainError(f"degree d = {a.degree} must be >= 2")
        recs = L.merge_external(L.tz_groups_for_degree(a.degree), ext, degree=a.degree)
        head = f"degree {a.degree}"
    else:
        g = _code(a.group)
        recs = L.merge_external(L.tz_triples_for_group(g), ext, group=g)
        head = C.display_name(C.canonical(g))
    items = [_rep(r) for r in recs]
    notes = sorted({n for i in items for n in i["notes"] if i["provenance"] == EMBEDDED})
    res = {"query": {"degree": a.degree, "group": a.group}, "records": items}
    text = [f"{head}: {len(items)} records"]
    for i in items:
        cnt = "-" if i["count"] is None else str(i["count"])
        r = "-" if i["r"] is None else str(i["r"])
        text.append(f"  {i['group']['name']:<14} r={r:<5} d={i['d']:<5} reps={cnt:<3} "
                    f"{','.join(i['clauses']) or i['provenance']}")
    prov = [EMBEDDED, DERIVED] + ([EXTERNAL] if ext else [])
    return res, notes, prov, text


def cmd_mindeg(a):
    if a.n < 3:
        raise DomainError(f"n = {a.n} must be >= 3")
    try:
        v = L.min_degree_psl(a.n, a.q)
    except ValueError as e:
        raise DomainError(f"{e}; q must be a prime power >= 2") from e
    exc = (a.n, a.q) in L._MINDEG_EXCEPTIONS
    res = {"n": a.n, "q": a.q, "min_degree": v, "exception": exc}
    return res, [], [EMBEDDED if exc else DERIVED], [f"PSL({a.n},{a.q}): {v}" + (" (exception)" if exc else "")]


def cmd_tables(a):
    try:
        rows = T.primitive_groups(a.n)
    except T.OutOfRange as e:
        raise DomainError(str(e)) from e
    res = {"n": a.n, "rows": [r.to_json() for r in rows]}
    text = [f"degree {a.n}: {len(rows)} rows"]
    for r in rows:
        o = r.order.render() if r.order else "-"
        text.append(f"  {r.group:<16} {o:<16} {','.join(x[0] for x in r.origin) or '-':<6} "
                    f"{r.external_id or '-':<16} {r.structure or '-'}")
    notes = []
    if a.n in (5, 7):
        notes.append(f"{'A5' if a.n == 5 else 'PSL(2,7)'} is omitted: its degree-{a.n} representation is imprimitive")
    return res, notes, [EMBEDDED], text


def cmd_status(a):
    try:
        s = T.classification_status(a.n)
    except T.OutOfRange as e:
        raise DomainError(str(e)) from e
    res = {"n": a.n, "complete": s.complete, "missing": list(s.missing)}
    text = [f"n = {a.n}: {'complete' if s.complete else 'incomplete'}"] + [f"  missing: {m}" for m in s.missing]
    return res, [], [EMBEDDED], text


def cmd_composite(a):
    try:
        cases = T.composite_cases(a.n)
    except ValueError as e:
        raise DomainError(str(e)) from e
    res = {"n": a.n, "cases": [{"case": c.case, "params": dict(c.params), "note": c.note} for c in cases]}
    structure = None
    if a.n in (4, 6, 8, 9, 10):
        st = T.quasiprimitive_structures(a.n)
        structure = {"status": st.status, "clauses": [c.to_json() for c in st.clauses]}
    res["structure"] = structure
    text = [f"n = {a.n}"]
    for c in cases:
        ps = ", ".join(f"{k}={v}" for k, v in c.params)
        text.append(f"  case {c.case}: {ps or c.note}")
    if structure:
        text.append(f"  known structure: {structure['status']}")
        text += [f"    ({c['label']}) {c['kind']}: {'; '.join(c['groups'])}" for c in structure["clauses"]]
    return res, [], [DERIVED, EMBEDDED], text


def cmd_construct(a):
    p = a.p
    if p == 2 or not is_prime(p):
        raise DomainError(f"p = {p} must be an odd prime >= 3")
    gens = X.generators(p, unimodular=True)
    res: dict = {"p": p, "modulus": X.working_modulus(p),
                 "generators": {k: {"det": m.det().to_poly_string(), "monomial": m.is_monomial()}
                                for k, m in gens.items()}}
    sig, tau = gens["sigma"], gens["tau"]
    zeta = X._z(p, 1, X.working_modulus(p))
    res["heisenberg"] = tau @ sig == (sig @ tau) * zeta
    text = [f"p = {p}, working field Q(zeta_{res['modulus']})"]
    text += [f"  {k}: det = {v['det']}" for k, v in res["generators"].items()]
    text.append(f"  tau sigma = zeta sigma tau: {res['heisenberg']}")
    notes = []
    if a.verify_closure:
        if p >= 11 and not a.allow_large:
            raise DomainError(f"closure for p = {p} is disabled (cost); use p in 3, 5, 7 or pass --allow-large")
        d = X.projective_closure([X.make_sigma(p), X.make_tau(p)])
        lin = X.linear_closure(list(gens.values()), cap=a.cap)
        proj = X.projective_closure(list(X.generators(p).values()), cap=a.cap)
        res["closure"] = {"socle_projective": d.cardinality, "cardinality": lin.cardinality,
                          "projective_cardinality": proj.cardinality, "expected": X.paper_order(p),
                          "cap_exceeded": lin.cap_exceeded or proj.cap_exceeded}
        text.append(f"  <sigma,tau> modulo scalars: {d.cardinality}")
        text.append(f"  closure in SL({p}): {lin.cardinality if not lin.cap_exceeded else 'cap exceeded'} "
                    f"(expected {X.paper_order(p)})")
        text.append(f"  closure in PGL({p}): {proj.cardinality if not proj.cap_exceeded else 'cap exceeded'}")
        notes.append("cardinality counts matrices in SL(p); projective_cardinality counts classes modulo scalars")
    if a.polygons:
        ps = X.polygons(p)
        found = X.search_polygons(p)
        constructed = ps.line_sets()
        labels = sorted(k for k, v in constructed.items() if v in found)
        res["polygons"] = {"constructed": len(constructed), "found_by_search": len(found),
                           "matched_labels": labels,
                           "all_invariant": all(X.is_polygon(v, [X.make_sigma(p), X.make_tau(p)])
                                                for v in ps.polygons.values())}
        text.append(f"  polygons: {len(constructed)} constructed, {len(found)} found by eigenbasis search")
    if a.dump:
        res["dump"] = X.dump_matrices(gens)
        text.append(res["dump"].rstrip("\n"))
    return res, notes, [DERIVED], text


def _table_arg(s: str) -> K.CharacterTable:
    if s in K.embedded_tables():
        return K.embedded_table(s)
    return K.load_table(s)


def cmd_induce(a):
    sub, amb = _table_arg(a.sub), _table_arg(a.ambient)
    if a.fusion in ("embedded", "") and (sub.label, amb.label) in K.embedded_fusions():
        fus = K.embedded_fusion(sub.label, amb.label)
    else:
        fus = K.load_fusion(a.fusion, sub, amb)
    try:
        chi = sub.character(a.char)
    except IndexError as e:
        raise DomainError(str(e)) from e
    ind = K.induce(chi, fus)
    norm = K.inner_product(ind, ind)
    triv = K.inner_product(ind, amb.character(1))
    dec = K.decompose(ind)
    frob = all(K.frobenius_check(t, f, fus) for t in sub.characters() for f in amb.characters())
    res = {"sub": sub.label, "ambient": amb.label, "index": fus.index, "char": a.char,
           "values": [v.to_poly_string() for v in ind.values], "degree": str(ind.degree),
           "norm": str(norm), "trivial_multiplicity": str(triv),
           "decomposition": [str(m) for m in dec], "irreducible": norm == 1,
           "frobenius_all_pairs": frob, "fusion_problems": K.fusion_problems(fus)}
    text = [f"Ind_{sub.label}^{amb.label}(chi_{a.char}) = ({', '.join(res['values'])})",
            f"  degree {res['degree']}, <chi,chi> = {norm}, <chi,1> = {triv}, irreducible: {res['irreducible']}",
            f"  decomposition: {' '.join(res['decomposition'])}",
            f"  Frobenius reciprocity over all pairs: {frob}"]
    return res, [], [EMBEDDED if a.sub in K.embedded_tables() else EXTERNAL, DERIVED], text


def cmd_load_degrees(a):
    path = Path(a.csv)
    if not path.exists() and os.environ.get(DATA_ENV):
        alt = Path(os.environ[DATA_ENV]) / a.csv
        if alt.exists():
            path = alt
    recs = L.load_degree_table(path)
    res = {"path": str(a.csv), "records": [_rep(r) for r in recs]}
    text = [f"{len(recs)} records from {a.csv}"]
    text += [f"  {C.display_name(r.group):<14} cover={r.cover} d={r.degree} count={r.count} char={r.characteristic}"
             for r in recs]
    return res, [], [EXTERNAL], text


# ---------------------------------------------------------------- wiring

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="linprim", description="Finite primitive linear groups: queries and checks.")
    ap.add_argument("--json", action="store_true", help="emit a JSON envelope")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        p.set_defaults(fn=fn)
        return p

    p = add("order", cmd_order, "order and Schur multiplier of a simple group")
    p.add_argument("code")
    p = add("search-order", cmd_search_order, "simple groups whose order divides N")
    p.add_argument("target")
    p.add_argument("--max", type=int)
    p.add_argument("--include-cyclic", action="store_true")
    p = add("socles", cmd_socles, "candidate socles of primitive groups of prime degree p")
    p.add_argument("p", type=int)
    p.add_argument("--abelian", action="store_true")
    p.add_argument("--strict-s2", action="store_true", help="read the symplectic clause with s >= 2")
    p = add("bounds", cmd_bounds, "prime and order bounds at degree n")
    p.add_argument("n", type=int)
    p.add_argument("--prime", type=int)
    p.add_argument("--order")
    p.add_argument("--blichfeldt-5", action="store_true", help="use constant 5 instead of 6")
    p = add("lowdeg", cmd_lowdeg, "low-degree representation records")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--degree", type=int)
    g.add_argument("--group")
    p = add("mindeg-psl", cmd_mindeg, "minimal projective degree of PSL(n,q)")
    p.add_argument("n", type=int)
    p.add_argument("q", type=int)
    p = add("tables", cmd_tables, "embedded table rows for degree n (2..7)")
    p.add_argument("n", type=int)
    p = add("status", cmd_status, "classification status for degree n (2..11)")
    p.add_argument("n", type=int)
    p = add("composite", cmd_composite, "composite-degree case parameters")
    p.add_argument("n", type=int)
    p = add("construct", cmd_construct, "extraspecial-normalizer matrices for an odd prime p")
    p.add_argument("p", type=int)
    p.add_argument("--verify-closure", action="store_true")
    p.add_argument("--polygons", action="store_true")
    p.add_argument("--dump", action="store_true")
    p.add_argument("--allow-large", action="store_true", help="permit closures for p >= 11")
    p.add_argument("--cap", type=int)
    p = add("induce", cmd_induce, "induce an irreducible character along a fusion")
    p.add_argument("--ambient", required=True, help="table file or embedded label (A5, PSL(2,7))")
    p.add_argument("--sub", required=True, help="table file or embedded label (A4, S4)")
    p.add_argument("--fusion", default="embedded", help="fusion file, or 'embedded'")
    p.add_argument("--char", type=int, required=True)
    p = add("load-degrees", cmd_load_degrees, "validate and list an external degree table")
    p.add_argument("csv")
    return ap


def _schema(command: str) -> dict:
    text = resources.files("linprim").joinpath(f"schemas/{command}.json").read_text(encoding="utf-8")
    return json.loads(text)


def envelope_schema() -> dict:
    return _schema("envelope")


def validate(payload: dict) -> None:
    import jsonschema

    jsonschema.validate(payload, envelope_schema())
    jsonschema.validate(payload["result"], _schema(payload["command"]["name"]))


def run(argv: list[str]) -> tuple[int, str, str]:
    """Returns (exit code, stdout text, stderr text)."""
    ap = build_parser()
    try:
        a = ap.parse_args(argv)
    except SystemExit as e:
        return (e.code if isinstance(e.code, int) else EXIT_USAGE), "", ""
    try:
        result, notes, prov, text = a.fn(a)
    except (L.DataFileError, K.CharacterDataError) as e:
        return EXIT_DATA, "", f"linprim: data error: {e}\n"
    except (DomainError, ValueError, KeyError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        return EXIT_DOMAIN, "", f"linprim: error: {msg}\n"
    if a.json:
        payload = {"command": {"name": a.command, "argv": list(argv)}, "result": result,
                   "notes": notes, "provenance": prov}
        return EXIT_OK, json.dumps(payload, indent=2, sort_keys=True) + "\n", ""
    out = "\n".join(text)
    if notes:
        out += "\n" + "\n".join(f"note: {n}" for n in notes)
    return EXIT_OK, out + "\n", ""


def main(argv: list[str] | None = None) -> int:
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
