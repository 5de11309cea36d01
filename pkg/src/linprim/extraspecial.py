"""Matrices of the primitive subgroups of SL(p, C) with an extraspecial
normal subgroup <sigma, tau>, exact closure enumeration, and D-polygons."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .arith.cyclotomic import CycloMatrix, CycloNumber, _power_table, kron  # noqa: F401
from .arith.integers import euler_phi, is_prime, legendre, multiplicative_order


def _check_p(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")


def working_modulus(p: int) -> int:
    """Field Q(zeta_N) holding the unimodular scalings c1, c2, c3."""
    _check_p(p)
    return 36 if p == 3 else 4 * p


def _z(p: int, k: int, modulus: int | None = None) -> CycloNumber:
    x = CycloNumber.zeta(p, k % p)
    return x.embed(modulus) if modulus else x


def _diag(vals: list[CycloNumber], m: int) -> CycloMatrix:
    n = len(vals)
    return CycloMatrix([[vals[i] if i == j else 0 for j in range(n)] for i in range(n)], m)


def _perm(p: int, image, scale, m: int) -> CycloMatrix:
    """Column j carries scale * e_{image(j)}."""
    rows = [[0] * p for _ in range(p)]
    for j in range(p):
        rows[image(j) % p][j] = scale
    return CycloMatrix(rows, m)


def make_sigma(p: int, modulus: int | None = None) -> CycloMatrix:
    _check_p(p)
    return _perm(p, lambda j: j + 1, 1, modulus or p)


def make_tau(p: int, modulus: int | None = None) -> CycloMatrix:
    _check_p(p)
    m = modulus or p
    return _diag([_z(p, j, m) for j in range(p)], m)


def make_lambda(p: int, d: int, modulus: int | None = None) -> CycloMatrix:
    """e_j -> eps e_{dj}; eps is the Legendre symbol (d/p), which makes det = 1."""
    _check_p(p)
    if d % p == 0:
        raise ValueError(f"d must be nonzero mod {p}")
    return _perm(p, lambda j: d * j, legendre(d, p), modulus or p)


def _gauss_sum(p: int, m: int) -> CycloNumber:
    g = CycloNumber.zero(m)
    for k in range(1, p):
        g = g + _z(p, k, m) * legendre(k, p)
    return g


def scaling_constants(p: int) -> tuple[CycloNumber, CycloNumber, CycloNumber]:
    """(c1, c2, c3) giving det f1 = det f2 = det f3 = 1 in Q(zeta_N), N = working_modulus(p)."""
    m = working_modulus(p)
    # det f1 = c1^p zeta^binom(p,3); binom(p,3) is divisible by p unless p = 3
    c1 = CycloNumber.zeta(9, 8).embed(m) if p == 3 else CycloNumber.one(m)
    # s = sqrt(p) from the Gauss sum; F/s is unitary with det a 4th root of unity
    i = CycloNumber.zeta(4, 1).embed(m)
    s = _gauss_sum(p, m)
    if p % 4 == 3:
        s = s * i
    u = _fourier(p, m).det() / s ** p
    t = pow(p, -1, 4)
    omega = u ** (-t)
    c2 = omega / s
    # j -> mj is a (p-1)-cycle on the nonzero indices, an odd permutation
    c3 = CycloNumber.rational(-1, m)
    return c1, c2, c3


def _fourier(p: int, m: int) -> CycloMatrix:
    return CycloMatrix([[_z(p, j * k, m) for k in range(p)] for j in range(p)], m)


def make_f1(p: int, unimodular: bool = False) -> CycloMatrix:
    _check_p(p)
    m = working_modulus(p) if unimodular else p
    c1 = scaling_constants(p)[0] if unimodular else CycloNumber.one(m)
    return _diag([c1 * _z(p, j * (j - 1) // 2, m) for j in range(p)], m)


def make_f2(p: int, unimodular: bool = False) -> CycloMatrix:
    _check_p(p)
    if not unimodular:
        return _fourier(p, p)
    m = working_modulus(p)
    return _fourier(p, m) * scaling_constants(p)[1]


def make_f3(p: int, m: int, unimodular: bool = False) -> CycloMatrix:
    _check_p(p)
    if m % p == 0 or multiplicative_order(m, p) != p - 1:
        raise ValueError(f"{m} does not generate (Z/{p})^*")
    mod = working_modulus(p) if unimodular else p
    c3 = -1 if unimodular else 1
    return _perm(p, lambda j: m * j, c3, mod)


def primitive_root(p: int) -> int:
    return next(g for g in range(2, p) if multiplicative_order(g, p) == p - 1)


def generators(p: int, unimodular: bool = False, full: bool = True) -> dict[str, CycloMatrix]:
    m = working_modulus(p) if unimodular else p
    out = {"sigma": make_sigma(p, m), "tau": make_tau(p, m)}
    if full:
        out["f1"] = make_f1(p, unimodular)
        out["f2"] = make_f2(p, unimodular)
        out["f3"] = make_f3(p, primitive_root(p), unimodular)
    return out


def paper_order(p: int) -> int:
    return p ** 4 * (p * p - 1)


# ---------------------------------------------------------------- projective classes

def _normalize(a: CycloMatrix) -> CycloMatrix:
    for r in a.rows:
        for x in r:
            if not x.is_zero():
                return a * x.inv()
    raise ValueError("zero matrix")


@dataclass(frozen=True)
class ProjectiveMatrix:
    """Scalar class of an invertible matrix; stored with first nonzero entry 1."""
    matrix: CycloMatrix

    @classmethod
    def of(cls, a: CycloMatrix) -> "ProjectiveMatrix":
        return cls(_normalize(a))

    def __eq__(self, other) -> bool:
        return isinstance(other, ProjectiveMatrix) and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)


# ---------------------------------------------------------------- closure engine

@lru_cache(maxsize=None)
def _ptab(n: int) -> np.ndarray:
    return np.array(_power_table(n), dtype=np.int64)


def _int_coeffs(a: CycloMatrix) -> tuple[np.ndarray, int]:
    """Integer coefficient array (n, n, phi) and common denominator."""
    den = 1
    for r in a.rows:
        for x in r:
            for c in x.coeffs:
                den = math.lcm(den, c.denominator)
    arr = np.array([[[int(c * den) for c in x.coeffs] for x in r] for r in a.rows], dtype=object)
    return arr, den


def _mult_tensor(g: np.ndarray, N: int) -> np.ndarray:
    """T with vec(row) @ T = row * g, rows flattened as (j, e)."""
    n, _, phi = g.shape
    pt = _ptab(N)
    e = np.arange(phi)
    idx = (e[:, None] + e[None, :]) % N
    shift = pt[idx]  # [e, f', f]
    gi = g.astype(np.int64) if _fits(g) else g
    t = np.einsum("jkg,egf->jekf", gi, shift.astype(gi.dtype))
    return t.reshape(n * phi, n * phi)


def _fits(a: np.ndarray, limit: int = 2 ** 31) -> bool:
    return int(np.max(np.abs(a))) < limit if a.size else True


class _Engine:
    def __init__(self, gens: list[CycloMatrix], projective: bool):
        if not gens:
            raise ValueError("no generators")
        n = gens[0].n
        if any(g.n != n for g in gens):
            raise ValueError("generators must have equal size")
        N = 1
        for g in gens:
            N = math.lcm(N, g.modulus)
        gens = [g.embed(N) for g in gens]
        for g in gens:
            if g.det().is_zero():
                raise ValueError("singular generator")
        self.n, self.N, self.phi = n, N, euler_phi(N)
        self.projective = projective
        self.tensors = []
        for g in gens:
            arr, den = _int_coeffs(g)
            self.tensors.append((_mult_tensor(arr, N), den))

    def _canon(self, x: np.ndarray, den: int) -> tuple[np.ndarray, int]:
        if self.projective:
            x, den = self._scale_first(x, den)
        g = math.gcd(int(np.gcd.reduce(np.abs(x).ravel())) if x.dtype != object else
                     math.gcd(*[int(v) for v in x.ravel()]), den)
        if g > 1:
            x = x // g
            den //= g
        if x.dtype == object and _fits(x, 2 ** 40):
            x = x.astype(np.int64)
        return x, den

    def _scale_first(self, x, den):
        flat = x.reshape(self.n * self.n, self.phi)
        k = next(i for i in range(flat.shape[0]) if flat[i].any())
        lead = CycloNumber(self.N, [Fraction(int(v), den) for v in flat[k]])
        if lead == CycloNumber.one(self.N):
            return x, den
        s = lead.inv()
        sden = 1
        for c in s.coeffs:
            sden = math.lcm(sden, c.denominator)
        sv = np.array([int(c * sden) for c in s.coeffs], dtype=object)
        pt = _ptab(self.N)
        e = np.arange(self.phi)
        S = np.einsum("g,egf->ef", sv, pt[(e[:, None] + e[None, :]) % self.N].astype(object))
        out = flat.astype(object) @ S
        return out.reshape(x.shape), den * sden

    def identity(self):
        x = np.zeros((self.n, self.n * self.phi), dtype=np.int64)
        for i in range(self.n):
            x[i, i * self.phi] = 1
        return x, 1

    def mul(self, x, den, gi):
        t, tden = self.tensors[gi]
        if x.dtype != object and t.dtype != object:
            bound = int(np.max(np.abs(x))) * int(np.max(np.abs(t).sum(axis=0)))
            if bound >= 2 ** 62:
                x, t = x.astype(object), t.astype(object)
        else:
            x, t = x.astype(object), t.astype(object)
        return self._canon(x @ t, den * tden)

    def to_matrix(self, x, den) -> CycloMatrix:
        arr = x.reshape(self.n, self.n, self.phi)
        return CycloMatrix([[CycloNumber(self.N, [Fraction(int(v), den) for v in arr[i, j]])
                             for j in range(self.n)] for i in range(self.n)], self.N)


@dataclass
class ClosureResult:
    cardinality: int | None
    cap_exceeded: bool
    cap: int
    projective: bool
    _elements: list = field(default_factory=list, repr=False)
    _engine: object = field(default=None, repr=False)

    def matrices(self) -> list[CycloMatrix]:
        return [self._engine.to_matrix(x, d) for x, d in self._elements]

    def elements(self) -> list:
        """ProjectiveMatrix values for a projective closure, matrices otherwise."""
        ms = self.matrices()
        return [ProjectiveMatrix(m) for m in ms] if self.projective else ms


def default_cap(n: int) -> int:
    return 2 * n ** 4 * (n * n - 1)


def _closure(gens: list[CycloMatrix], cap: int | None, projective: bool) -> ClosureResult:
    eng = _Engine(gens, projective)
    cap = cap if cap is not None else default_cap(eng.n)
    if cap < 1:
        raise ValueError("cap must be positive")
    start = eng._canon(*eng.identity())
    seen = {(start[1], start[0].tobytes()): start}
    frontier = [start]
    while frontier:
        nxt = []
        for x, den in frontier:
            for gi in range(len(eng.tensors)):
                y, dy = eng.mul(x, den, gi)
                key = (dy, y.tobytes() if y.dtype != object else repr(y.tolist()))
                if key not in seen:
                    seen[key] = (y, dy)
                    if len(seen) > cap:
                        return ClosureResult(None, True, cap, projective)
                    nxt.append((y, dy))
        frontier = nxt
    return ClosureResult(len(seen), False, cap, projective, list(seen.values()), eng)


def projective_closure(gens: list[CycloMatrix], cap: int | None = None) -> ClosureResult:
    """Closure of the scalar classes of gens in PGL."""
    return _closure(gens, cap, projective=True)


def linear_closure(gens: list[CycloMatrix], cap: int | None = None) -> ClosureResult:
    """Closure of gens as matrices; with unimodular generators this is the subgroup of SL."""
    return _closure(gens, cap, projective=False)


# ---------------------------------------------------------------- polygons

Vector = list[CycloNumber]


def _line_key(v: Vector) -> tuple:
    lead = next(x for x in v if not x.is_zero())
    li = lead.inv()
    return tuple(x * li for x in v)


@dataclass
class PolygonSet:
    p: int
    polygons: dict[str, list[Vector]]

    def labels(self) -> list[str]:
        return list(self.polygons)

    def line_sets(self) -> dict[str, frozenset]:
        return {k: frozenset(_line_key(v) for v in vs) for k, vs in self.polygons.items()}


def polygons(p: int) -> PolygonSet:
    _check_p(p)
    m = p
    out: dict[str, list[Vector]] = {}
    one, zero = CycloNumber.one(m), CycloNumber.zero(m)
    out["inf"] = [[one if k == j else zero for k in range(p)] for j in range(p)]
    out["0"] = [[_z(p, j * k) for k in range(p)] for j in range(p)]
    sig = make_sigma(p)
    for i in range(1, p):
        w = [_z(p, i * (k * (k - 1) // 2)) for k in range(p)]
        vs = []
        for _ in range(p):
            vs.append(w)
            w = sig.apply(w)
        out[str(i)] = vs
    return PolygonSet(p, out)


def _spans(vs: list[Vector]) -> bool:
    return not CycloMatrix(vs).det().is_zero()


def is_polygon(vs: list[Vector], gens: list[CycloMatrix]) -> bool:
    """n vectors spanning the space whose lines are permuted by every generator."""
    if not vs or len(vs) != len(vs[0]) or not _spans(vs):
        return False
    lines = {_line_key(v) for v in vs}
    for g in gens:
        for v in vs:
            if _line_key(g.apply(v)) not in lines:
                return False
    return True


def search_polygons(p: int) -> list[frozenset]:
    """Eigenbases of the nonscalar elements sigma^a tau^b found via spectral
    projectors, kept when they form a <sigma, tau>-polygon."""
    _check_p(p)
    sig, tau = make_sigma(p), make_tau(p)
    gens = [sig, tau]
    found: list[frozenset] = []
    for a in range(p):
        for b in range(p):
            if a == 0 and b == 0:
                continue
            g = (sig ** a) @ (tau ** b)
            powers = [CycloMatrix.identity(p, p)]
            for _ in range(p - 1):
                powers.append(powers[-1] @ g)
            basis = []
            for j in range(p):
                proj = powers[0]
                for k in range(1, p):
                    proj = proj + powers[k] * _z(p, -j * k)
                col = next((list(c) for c in zip(*proj.rows) if any(not x.is_zero() for x in c)), None)
                if col is not None:
                    basis.append(col)
            if len(basis) == p and is_polygon(basis, gens):
                key = frozenset(_line_key(v) for v in basis)
                if key not in found:
                    found.append(key)
    return found


def dump_matrices(named: dict[str, CycloMatrix]) -> str:
    blocks = [f"# {name}\n{m.dump()}" for name, m in named.items()]
    return "\n\n".join(blocks) + "\n"
