"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored in the power basis 1, z, ..., z^(phi(N)-1), reduced
modulo the N-th cyclotomic polynomial, so equal values have equal
coefficient tuples at a fixed modulus.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

from .integers import euler_phi, mobius

Scalar = Union[int, Fraction]


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    # x^n - 1 = prod_{d | n} Phi_d(x)
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _poly_exact_div(num, list(cyclotomic_poly(d)))
    return tuple(num)


def _poly_exact_div(a: list[int], b: list[int]) -> list[int]:
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(out) - 1, -1, -1):
        c = a[i + len(b) - 1] // lead
        out[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    assert not any(a), "inexact polynomial division"
    return out


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Row e holds the reduced coefficients of z^e, for 0 <= e < n."""
    phi = euler_phi(n)
    poly = cyclotomic_poly(n)
    rows = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by z, then reduce the overflow coefficient with Phi_n (monic)
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(phi):
                cur[j] -= top * poly[j]
    return tuple(rows)


@lru_cache(maxsize=None)
def _basis_trace(n: int) -> tuple[Fraction, ...]:
    """Normalized trace Tr(z^e)/phi(n) for the basis exponents."""
    out = []
    for e in range(euler_phi(n)):
        m = n // math.gcd(e, n)
        out.append(Fraction(mobius(m), euler_phi(m)))
    return tuple(out)


def _solve_bareiss(m: list[list[int]], rhs: list[int]) -> list[Fraction]:
    """Solve m x = rhs over Q; fraction-free forward elimination (m nonsingular)."""
    n = len(m)
    aug = [row[:] + [r] for row, r in zip(m, rhs)]
    prev = 1
    for k in range(n):
        piv = next(i for i in range(k, n) if aug[i][k])
        aug[k], aug[piv] = aug[piv], aug[k]
        pk = aug[k]
        for i in range(k + 1, n):
            ri = aug[i]
            f = ri[k]
            ri[k] = 0
            for j in range(k + 1, n + 1):
                ri[j] = (pk[k] * ri[j] - f * pk[j]) // prev
        prev = pk[k]
    x: list[Fraction] = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        row = aug[i]
        acc = Fraction(row[n])
        for j in range(i + 1, n):
            if row[j] and x[j]:
                acc -= row[j] * x[j]
        x[i] = acc / row[i]
    return x


def _int_vector(cs: Sequence[Fraction]) -> tuple[list[int], int]:
    den = 1
    for c in cs:
        if c.denominator != 1:
            den = math.lcm(den, c.denominator)
    return [c.numerator * (den // c.denominator) for c in cs], den


def _as_fraction(x: Scalar) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class CycloNumber:
    """Element of Q(zeta_N); immutable."""

    __slots__ = ("modulus", "coeffs", "_hash")

    def __init__(self, modulus: int, coeffs: Sequence[Scalar] | dict[int, Scalar] = ()):
        if modulus < 1:
            raise ValueError("modulus must be positive")
        self.modulus = modulus
        phi = euler_phi(modulus)
        if isinstance(coeffs, dict):
            self.coeffs = _reduce_exponent_map(modulus, coeffs)
        else:
            cs = [_as_fraction(c) for c in coeffs]
            if len(cs) > phi:
                self.coeffs = _reduce_exponent_map(modulus, dict(enumerate(cs)))
            else:
                self.coeffs = tuple(cs) + (Fraction(0),) * (phi - len(cs))
        self._hash = None

    # constructors
    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "CycloNumber":
        return cls(n, {k % n: 1})

    @classmethod
    def rational(cls, x: Scalar, modulus: int = 1) -> "CycloNumber":
        return cls(modulus, {0: x})

    @classmethod
    def zero(cls, modulus: int = 1) -> "CycloNumber":
        return cls(modulus, ())

    @classmethod
    def one(cls, modulus: int = 1) -> "CycloNumber":
        return cls(modulus, {0: 1})

    # structure
    def reduce(self) -> "CycloNumber":
        return CycloNumber(self.modulus, dict(enumerate(self.coeffs)))

    def embed(self, m: int) -> "CycloNumber":
        if m % self.modulus:
            raise ValueError(f"cannot embed Q(zeta_{self.modulus}) into Q(zeta_{m})")
        if m == self.modulus:
            return self
        step = m // self.modulus
        return CycloNumber(m, {e * step: c for e, c in enumerate(self.coeffs) if c})

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    # arithmetic
    def _coerce(self, other) -> tuple["CycloNumber", "CycloNumber"]:
        if isinstance(other, (int, Fraction)):
            return self, CycloNumber(self.modulus, {0: other})
        if not isinstance(other, CycloNumber):
            return NotImplemented, NotImplemented
        if other.modulus == self.modulus:
            return self, other
        m = math.lcm(self.modulus, other.modulus)
        return self.embed(m), other.embed(m)

    def __add__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return _make(a.modulus, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return _make(self.modulus, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return _make(a.modulus, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return _make(self.modulus, tuple(x * other for x in self.coeffs))
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        n = a.modulus
        phi = len(a.coeffs)
        # integer numerators over a common denominator; one division at the end
        na, da = _int_vector(a.coeffs)
        nb, db = _int_vector(b.coeffs)
        prod = [0] * (2 * phi - 1 if phi else 0)
        nzb = [(j, y) for j, y in enumerate(nb) if y]
        for i, x in enumerate(na):
            if x:
                for j, y in nzb:
                    prod[i + j] += x * y
        out = prod[:phi]
        table = _power_table(n)
        for e in range(phi, len(prod)):
            c = prod[e]
            if c:
                row = table[e % n]
                for j, v in enumerate(row):
                    if v:
                        out[j] += c * v
        den = da * db
        return _make(n, tuple(Fraction(v, den) if v else Fraction(0) for v in out))

    __rmul__ = __mul__

    def galois(self, k: int) -> "CycloNumber":
        """Apply z -> z^k (k must be a unit mod N)."""
        n = self.modulus
        if math.gcd(k, n) != 1:
            raise ValueError(f"{k} is not a unit mod {n}")
        return CycloNumber(n, {(e * k) % n: c for e, c in enumerate(self.coeffs) if c})

    def conj(self) -> "CycloNumber":
        return self.galois(-1)

    def norm(self) -> Fraction:
        """Field norm down to Q."""
        n = self.modulus
        out = CycloNumber.one(n)
        for k in range(1, n + 1):
            if math.gcd(k, n) == 1:
                out = out * self.galois(k)
        return out.to_rational()

    def inv(self) -> "CycloNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        if self.is_rational():
            return CycloNumber(self.modulus, {0: 1 / self.coeffs[0]})
        n = self.modulus
        # column j of the multiplication matrix is den * a * zeta^j
        nums, den = _int_vector(self.coeffs)
        phi = len(nums)
        table = _power_table(n)
        cols = []
        for j in range(phi):
            col = [0] * phi
            for i, c in enumerate(nums):
                if c:
                    e = i + j
                    if e < phi:
                        col[e] += c
                    else:
                        for t, v in enumerate(table[e % n]):
                            if v:
                                col[t] += c * v
            cols.append(col)
        mat = [[cols[j][i] for j in range(phi)] for i in range(phi)]
        x = _solve_bareiss(mat, [den] + [0] * (phi - 1))
        return _make(n, tuple(x))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / other)
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return a * b.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        out = CycloNumber.one(self.modulus)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # comparison and hashing
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other if self.coeffs else other == 0
        if not isinstance(other, CycloNumber):
            return NotImplemented
        if other.modulus == self.modulus:
            return self.coeffs == other.coeffs
        a, b = self._coerce(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        # normalized trace is invariant under embedding, so equal values
        # at different moduli hash alike
        if self._hash is None:
            tr = sum((c * t for c, t in zip(self.coeffs, _basis_trace(self.modulus)) if c), Fraction(0))
            self._hash = hash(tr)
        return self._hash

    def __complex__(self) -> complex:
        import cmath

        return sum(
            (float(c) * cmath.exp(2j * cmath.pi * e / self.modulus) for e, c in enumerate(self.coeffs) if c),
            0j,
        )

    # text form
    def to_poly_string(self, var: str = "z") -> str:
        terms = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s

    def __str__(self) -> str:
        return self.to_poly_string()

    def __repr__(self) -> str:
        return f"CycloNumber({self.modulus}, {self.to_poly_string()!r})"


def _reduce_exponent_map(n: int, coeffs) -> tuple[Fraction, ...]:
    phi = euler_phi(n)
    table = _power_table(n)
    out = [Fraction(0)] * phi
    items = coeffs.items() if isinstance(coeffs, dict) else coeffs
    for e, c in items:
        c = _as_fraction(c)
        if not c:
            continue
        row = table[e % n]
        for j, v in enumerate(row):
            if v:
                out[j] += c * v
    return tuple(out)


def _make(n: int, coeffs: tuple[Fraction, ...]) -> CycloNumber:
    x = CycloNumber.__new__(CycloNumber)
    x.modulus = n
    x.coeffs = coeffs
    x._hash = None
    return x


def cyclo_add(x: CycloNumber, y: CycloNumber) -> CycloNumber:
    return x + y


def cyclo_mul(x: CycloNumber, y: CycloNumber) -> CycloNumber:
    return x * y


def cyclo_inv(x: CycloNumber) -> CycloNumber:
    return x.inv()


def cyclo_conj(x: CycloNumber) -> CycloNumber:
    return x.conj()


_POLY_TERM = re.compile(r"^([+-]?)\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?(z(?:\^(\d+))?)?$")


def parse_cyclo(text: str, modulus: int, var: str = "z") -> CycloNumber:
    """Parse a polynomial like '-z^12 - 1/2*z^3 + 4' into Q(zeta_modulus)."""
    s = text.replace(" ", "").replace(var, "z")
    if not s:
        raise ValueError("empty cyclotomic expression")
    # split keeping signs
    pieces = re.findall(r"[+-]?[^+-]+", s)
    if "".join(pieces) != s:
        raise ValueError(f"cannot parse {text!r}")
    acc: dict[int, Fraction] = {}
    for piece in pieces:
        m = _POLY_TERM.match(piece)
        if not m or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse term {piece!r} in {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coef = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(3):
            e = int(m.group(4)) if m.group(4) else 1
        else:
            e = 0
        acc[e] = acc.get(e, Fraction(0)) + sign * coef
    return CycloNumber(modulus, acc)


class CycloMatrix:
    """Dense square matrix over Q(zeta_N), all entries at one modulus."""

    __slots__ = ("n", "modulus", "rows")

    def __init__(self, rows: Iterable[Iterable], modulus: int | None = None):
        raw = [list(r) for r in rows]
        n = len(raw)
        if any(len(r) != n for r in raw):
            raise ValueError("CycloMatrix must be square")
        mods = [x.modulus for r in raw for x in r if isinstance(x, CycloNumber)]
        m = modulus or 1
        for k in mods:
            m = math.lcm(m, k)
        conv = []
        for r in raw:
            conv.append(tuple(
                x.embed(m) if isinstance(x, CycloNumber) else CycloNumber(m, {0: x}) for x in r
            ))
        self.n = n
        self.modulus = m
        self.rows = tuple(conv)

    @classmethod
    def identity(cls, n: int, modulus: int = 1) -> "CycloMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], modulus)

    @classmethod
    def scalar(cls, n: int, x: CycloNumber) -> "CycloMatrix":
        z = CycloNumber.zero(x.modulus)
        return cls([[x if i == j else z for j in range(n)] for i in range(n)], x.modulus)

    def __getitem__(self, ij: tuple[int, int]) -> CycloNumber:
        i, j = ij
        return self.rows[i][j]

    def embed(self, m: int) -> "CycloMatrix":
        return CycloMatrix(self.rows, math.lcm(m, self.modulus))

    def __matmul__(self, other: "CycloMatrix") -> "CycloMatrix":
        if self.n != other.n:
            raise ValueError("size mismatch")
        m = math.lcm(self.modulus, other.modulus)
        a = self if self.modulus == m else self.embed(m)
        b = other if other.modulus == m else other.embed(m)
        cols = list(zip(*b.rows))
        zero = CycloNumber.zero(m)
        out = []
        for r in a.rows:
            row = []
            for c in cols:
                acc = zero
                for x, y in zip(r, c):
                    if not x.is_zero() and not y.is_zero():
                        acc = acc + x * y
                row.append(acc)
            out.append(row)
        return CycloMatrix(out, m)

    def __mul__(self, s) -> "CycloMatrix":
        return CycloMatrix([[x * s for x in r] for r in self.rows], self.modulus)

    __rmul__ = __mul__

    def __add__(self, other: "CycloMatrix") -> "CycloMatrix":
        return CycloMatrix([[x + y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "CycloMatrix") -> "CycloMatrix":
        return CycloMatrix([[x - y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __pow__(self, k: int) -> "CycloMatrix":
        if k < 0:
            return self.inverse() ** (-k)
        out = CycloMatrix.identity(self.n, self.modulus)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycloMatrix) or other.n != self.n:
            return NotImplemented if not isinstance(other, CycloMatrix) else False
        return all(x == y for r, s in zip(self.rows, other.rows) for x, y in zip(r, s))

    def __hash__(self):
        return hash(tuple(hash(x) for r in self.rows for x in r))

    def transpose(self) -> "CycloMatrix":
        return CycloMatrix(list(zip(*self.rows)), self.modulus)

    def apply(self, v: Sequence[CycloNumber]) -> list[CycloNumber]:
        """Matrix times column vector."""
        zero = CycloNumber.zero(self.modulus)
        out = []
        for r in self.rows:
            acc = zero
            for x, y in zip(r, v):
                acc = acc + x * y
            out.append(acc)
        return out

    def _elimination(self):
        m = self.modulus
        a = [list(r) for r in self.rows]
        n = self.n
        det = CycloNumber.one(m)
        for col in range(n):
            piv = next((r for r in range(col, n) if not a[r][col].is_zero()), None)
            if piv is None:
                return CycloNumber.zero(m), None
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                det = -det
            p = a[col][col]
            det = det * p
            pinv = p.inv()
            for r in range(col + 1, n):
                f = a[r][col]
                if f.is_zero():
                    continue
                f = f * pinv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return det, a

    def det(self) -> CycloNumber:
        return self._elimination()[0]

    def inverse(self) -> "CycloMatrix":
        n, m = self.n, self.modulus
        one, zero = CycloNumber.one(m), CycloNumber.zero(m)
        a = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(self.rows)]
        for col in range(n):
            piv = next((r for r in range(col, n) if not a[r][col].is_zero()), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            a[col], a[piv] = a[piv], a[col]
            pinv = a[col][col].inv()
            a[col] = [x * pinv for x in a[col]]
            for r in range(n):
                if r != col and not a[r][col].is_zero():
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return CycloMatrix([r[n:] for r in a], m)

    def is_scalar(self) -> bool:
        d = self.rows[0][0]
        return all(
            (x == d if i == j else x.is_zero()) for i, r in enumerate(self.rows) for j, x in enumerate(r)
        )

    def is_monomial(self) -> bool:
        return all(sum(not x.is_zero() for x in r) == 1 for r in self.rows) and all(
            sum(not x.is_zero() for x in c) == 1 for c in zip(*self.rows)
        )

    def dump(self, var: str = "z") -> str:
        lines = [f"N={self.modulus}"]
        for r in self.rows:
            lines.append(", ".join(x.to_poly_string(var) for x in r))
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"CycloMatrix(n={self.n}, N={self.modulus})"


def kron(a: CycloMatrix, b: CycloMatrix) -> CycloMatrix:
    m = math.lcm(a.modulus, b.modulus)
    rows = []
    for i in range(a.n):
        for k in range(b.n):
            rows.append([a.rows[i][j] * b.rows[k][l] for j in range(a.n) for l in range(b.n)])
    return CycloMatrix(rows, m)
