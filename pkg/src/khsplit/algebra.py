"""Exact arithmetic: Laurent polynomials in q, rational functions in q, and
sparse exact matrices over Q or Q(q).

Nothing in here ever touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Callable, Iterable, Iterator, Mapping, Sequence


class SingularMatrixError(ZeroDivisionError):
    """Raised when an exact inversion or solve hits a singular matrix."""


class InexactDivisionError(ArithmeticError):
    """Raised when a Laurent polynomial division leaves a remainder."""


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


# ---------------------------------------------------------------------------
# dense polynomial helpers (coefficient lists, lowest degree first)


def _poly_trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list, b: list) -> tuple[list, list]:
    b = _poly_trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    # stay in int arithmetic while every quotient coefficient divides evenly
    ints = all(type(x) is int for x in a) and all(type(x) is int for x in b)
    a = list(a) if ints else [Fraction(x) for x in a]
    lead = b[-1] if ints else Fraction(b[-1])
    db = len(b) - 1
    quot = [0] * max(len(a) - db, 0)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c == 0:
            continue
        if ints and c % lead == 0:
            f = c // lead
        else:
            if ints:
                ints = False
                a = [Fraction(x) for x in a]
                lead = Fraction(lead)
            f = a[k] / lead
        quot[k - db] = f
        off = k - db
        for i, bi in enumerate(b):
            a[off + i] -= f * bi
    return _poly_trim(quot), _poly_trim(a[:db] if db else [])


def _primitive(p: list) -> list:
    g = 0
    for x in p:
        g = gcd(g, x)
    if g == 0:
        return []
    if p[-1] < 0:
        g = -g
    return [x // g for x in p]


def _to_int_poly(p: list) -> list:
    den = 1
    for x in p:
        if isinstance(x, Fraction):
            den = den * x.denominator // gcd(den, x.denominator)
    return _poly_trim([int(x * den) for x in p])


def _poly_gcd(a: list, b: list) -> list:
    """Primitive integer gcd (positive leading coefficient) via a primitive PRS."""
    a = _primitive(_to_int_poly(a))
    b = _primitive(_to_int_poly(b))
    if len(a) < len(b):
        a, b = b, a
    while b:
        # pseudo-remainder of a by b, kept primitive to stop coefficient growth
        r = list(a)
        lb, db = b[-1], len(b) - 1
        while len(r) - 1 >= db and r:
            c = r[-1]
            shift = len(r) - 1 - db
            r = [x * lb for x in r]
            for i, bi in enumerate(b):
                r[shift + i] -= c * bi
            _poly_trim(r)
            r = _primitive(r) if r else r
        a, b = b, r
    return a


# ---------------------------------------------------------------------------


class LaurentPolynomial:
    """An element of Q[q, q^-1], stored as {exponent: coefficient}."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, Rational] | None = None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                if v != 0:
                    c[int(e)] = _norm(v)
        self._c = c
        self._hash = None

    # construction helpers
    @classmethod
    def const(cls, v: Rational) -> "LaurentPolynomial":
        return cls({0: v})

    @classmethod
    def monomial(cls, exp: int, coeff: Rational = 1) -> "LaurentPolynomial":
        return cls({exp: coeff})

    @classmethod
    def q(cls) -> "LaurentPolynomial":
        return cls({1: 1})

    @classmethod
    def qdim_v(cls) -> "LaurentPolynomial":
        """q + q^-1, the graded dimension of V."""
        return cls({1: 1, -1: 1})

    @classmethod
    def _coerce(cls, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, Rational):
            return cls.const(other)
        return NotImplemented

    # accessors
    @property
    def coeffs(self) -> dict[int, Rational]:
        return dict(self._c)

    def __getitem__(self, exp: int):
        return self._c.get(exp, 0)

    def items(self) -> Iterator[tuple[int, Rational]]:
        return iter(sorted(self._c.items()))

    def is_zero(self) -> bool:
        return not self._c

    @property
    def low(self) -> int:
        return min(self._c) if self._c else 0

    @property
    def high(self) -> int:
        return max(self._c) if self._c else 0

    @property
    def leading(self):
        return self._c[self.high] if self._c else 0

    # arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return LaurentPolynomial(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c: dict[int, Rational] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return LaurentPolynomial(c)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._c) != 1:
                raise InexactDivisionError("negative power of a non-monomial")
            (e, v), = self._c.items()
            return LaurentPolynomial({e * k: Fraction(1) / Fraction(v) ** -k})
        out = LaurentPolynomial.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, l: int) -> "LaurentPolynomial":
        """Multiply by q^l."""
        return LaurentPolynomial({e + l: v for e, v in self._c.items()})

    def _as_poly(self) -> tuple[int, list]:
        lo = self.low
        p = [0] * (self.high - lo + 1) if self._c else []
        for e, v in self._c.items():
            p[e - lo] = v
        return lo, p

    @classmethod
    def _from_poly(cls, lo: int, p: Sequence) -> "LaurentPolynomial":
        return cls({lo + i: v for i, v in enumerate(p) if v != 0})

    def divmod_exact(self, other: "LaurentPolynomial") -> tuple["LaurentPolynomial", "LaurentPolynomial"]:
        """Polynomial long division after clearing the q-powers; returns (quotient, remainder)."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if self.is_zero():
            return LaurentPolynomial(), LaurentPolynomial()
        la, a = self._as_poly()
        lb, b = other._as_poly()
        quo, rem = _poly_divmod(a, b)
        return (LaurentPolynomial._from_poly(la - lb, quo),
                LaurentPolynomial._from_poly(la, rem))

    def exact_div(self, other) -> "LaurentPolynomial":
        quo, rem = self.divmod_exact(other)
        if not rem.is_zero():
            raise InexactDivisionError(f"{self} is not divisible by {other}")
        return quo

    def __truediv__(self, other):
        other_l = self._coerce(other)
        if other_l is NotImplemented:
            if isinstance(other, RationalFunction):
                return RationalFunction(self) / other
            return NotImplemented
        return rational_fn_divide(self, other_l)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return rational_fn_divide(other, self)

    def __call__(self, x):
        return sum((v * x ** e for e, v in self._c.items()), Fraction(0))

    def substitute_t(self) -> dict[Fraction, Rational]:
        """Rewrite in the Jones parameter t via q = -t^(1/2).

        Returns {t-exponent (a half-integer Fraction): coefficient}.
        """
        return {Fraction(e, 2): _norm(v * (-1) ** (e % 2)) for e, v in self._c.items()}

    # comparisons
    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __bool__(self):
        return bool(self._c)

    def __repr__(self):
        return f"LaurentPolynomial({self})"

    def __str__(self):
        return format_laurent(self._c, "q")


def _fmt_exp(e) -> str:
    if isinstance(e, Fraction):
        return str(e.numerator) if e.denominator == 1 else f"{e.numerator}/{e.denominator}"
    return str(e)


def format_laurent(coeffs: Mapping, var: str = "q") -> str:
    if not coeffs:
        return "0"
    parts = []
    for e in sorted(coeffs):
        v = coeffs[e]
        if e == 0:
            mono = ""
        elif e == 1:
            mono = var
        else:
            mono = f"{var}^{_fmt_exp(e)}" if not (isinstance(e, Fraction) and e.denominator != 1) \
                else f"{var}^({_fmt_exp(e)})"
        if mono and abs(v) == 1:
            body = mono
        elif mono:
            body = f"{abs(v)}*{mono}"
        else:
            body = str(abs(v))
        sign = "-" if v < 0 else "+"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------


class RationalFunction:
    """An element of Q(q) kept in lowest terms.

    Canonical form: the denominator has lowest exponent 0 and is monic, so two
    equal rational functions have identical (numerator, denominator) pairs.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, _reduced: bool = False):
        num = LaurentPolynomial._coerce(num)
        den = LaurentPolynomial.const(1) if den is None else LaurentPolynomial._coerce(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("RationalFunction needs Laurent polynomial parts")
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced:
            num, den = self._canonical(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def _canonical(num: LaurentPolynomial, den: LaurentPolynomial):
        if num.is_zero():
            return LaurentPolynomial(), LaurentPolynomial.const(1)
        ln, a = num._as_poly()
        ld, b = den._as_poly()
        g = _poly_gcd(a, b)
        if len(g) > 1:
            a, _ = _poly_divmod(a, g)
            b, _ = _poly_divmod(b, g)
        lead = Fraction(b[-1])
        a = [Fraction(x) / lead for x in a]
        b = [Fraction(x) / lead for x in b]
        return (LaurentPolynomial._from_poly(ln - ld, a),
                LaurentPolynomial._from_poly(0, b))

    @classmethod
    def one(cls) -> "RationalFunction":
        return cls(LaurentPolynomial.const(1))

    @classmethod
    def zero(cls) -> "RationalFunction":
        return cls(LaurentPolynomial())

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (LaurentPolynomial, Rational)):
            return cls(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den == LaurentPolynomial.const(1)

    def to_laurent(self) -> LaurentPolynomial:
        if not self.is_laurent():
            raise InexactDivisionError(f"{self} is not a Laurent polynomial")
        return self.num

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, k: int):
        if k < 0:
            return RationalFunction.one() / (self ** -k)
        return RationalFunction(self.num ** k, self.den ** k)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        if self.is_laurent():
            return str(self.num)
        return f"({self.num}) / ({self.den})"


def laurent_arith(a: LaurentPolynomial, b: LaurentPolynomial, op: str) -> LaurentPolynomial:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def rational_fn_divide(a, b) -> RationalFunction:
    a = LaurentPolynomial._coerce(a)
    b = LaurentPolynomial._coerce(b)
    if b.is_zero():
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    return RationalFunction(a, b)


# ---------------------------------------------------------------------------
# matrices


def _is_zero(x) -> bool:
    return x == 0


class ExactMatrix:
    """A rows x cols matrix of exact field elements.

    Storage is sparse (row -> {col: value}); zero entries are never stored.
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, entries: Mapping[tuple[int, int], object] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix dimension")
        self.rows = rows
        self.cols = cols
        data: dict[int, dict[int, object]] = {}
        for (i, j), v in (entries or {}).items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise IndexError(f"entry {(i, j)} outside {rows}x{cols}")
            if not _is_zero(v):
                data.setdefault(i, {})[j] = v
        self._data = data

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "ExactMatrix":
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        if any(len(r) != nc for r in rows):
            raise ValueError("ragged rows")
        return cls(nr, nc, {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r)})

    @classmethod
    def _from_row_dicts(cls, rows: int, cols: int, data: dict[int, dict[int, object]]) -> "ExactMatrix":
        m = cls(rows, cols)
        m._data = {i: r for i, r in data.items() if r}
        return m

    @classmethod
    def identity(cls, n: int, one=1) -> "ExactMatrix":
        return cls(n, n, {(i, i): one for i in range(n)})

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self._data.get(i, {}).get(j, 0)

    def row(self, i: int) -> dict[int, object]:
        return dict(self._data.get(i, {}))

    def items(self) -> Iterator[tuple[tuple[int, int], object]]:
        for i in sorted(self._data):
            r = self._data[i]
            for j in sorted(r):
                yield (i, j), r[j]

    def nnz(self) -> int:
        return sum(len(r) for r in self._data.values())

    def is_zero(self) -> bool:
        return not self._data

    def to_rows(self) -> list[list]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.items():
            out[i][j] = v
        return out

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows, {(j, i): v for (i, j), v in self.items()})

    @property
    def T(self) -> "ExactMatrix":
        return self.transpose()

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out: dict[int, dict[int, object]] = {}
        for i, r in self._data.items():
            acc: dict[int, object] = {}
            for k, v in r.items():
                orow = other._data.get(k)
                if not orow:
                    continue
                for j, w in orow.items():
                    acc[j] = acc[j] + v * w if j in acc else v * w
            acc = {j: x for j, x in acc.items() if not _is_zero(x)}
            if acc:
                out[i] = acc
        return ExactMatrix._from_row_dicts(self.rows, other.cols, out)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        ent = dict(self.items())
        for ij, v in other.items():
            ent[ij] = ent[ij] + v if ij in ent else v
        return ExactMatrix(self.rows, self.cols, ent)

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, {ij: -v for ij, v in self.items()})

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + (-other)

    def scale(self, c) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, {ij: c * v for ij, v in self.items()})

    def map(self, f: Callable) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, {ij: f(v) for ij, v in self.items()})

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "ExactMatrix":
        rpos = {r: a for a, r in enumerate(row_idx)}
        cpos = {c: b for b, c in enumerate(col_idx)}
        ent = {}
        for r, a in rpos.items():
            for c, v in self._data.get(r, {}).items():
                b = cpos.get(c)
                if b is not None:
                    ent[(a, b)] = v
        return ExactMatrix(len(row_idx), len(col_idx), ent)

    def apply(self, vec: Mapping[int, object]) -> dict[int, object]:
        """Multiply by a sparse column vector {index: value}."""
        out: dict[int, object] = {}
        for i, r in self._data.items():
            acc = None
            for j, v in r.items():
                x = vec.get(j)
                if x is None or _is_zero(x):
                    continue
                acc = v * x if acc is None else acc + v * x
            if acc is not None and not _is_zero(acc):
                out[i] = acc
        return out

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and dict(self.items()) == dict(other.items())

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols}, nnz={self.nnz()})"


# ---------------------------------------------------------------------------
# elimination


def _echelon(rows: list[dict[int, object]], col_order: Sequence[int] | None = None):
    """Sparse Gauss-Jordan elimination over a field.

    Returns (pivots, reduced) where `reduced` maps each pivot column to its
    fully reduced, pivot-normalised row. Pivot rows are chosen sparsest-first
    within each column, which keeps fill-in down on the cube differentials.
    """
    work = [dict(r) for r in rows if r]
    if col_order is None:
        cols = sorted({j for r in work for j in r})
    else:
        cols = list(col_order)
    by_col: dict[int, set[int]] = {}
    for idx, r in enumerate(work):
        for j in r:
            by_col.setdefault(j, set()).add(idx)
    alive = set(range(len(work)))
    pivots: dict[int, dict[int, object]] = {}
    order: list[int] = []
    for j in cols:
        cand = [i for i in by_col.get(j, ()) if i in alive and j in work[i]]
        if not cand:
            continue
        p = min(cand, key=lambda i: (len(work[i]), i))
        alive.discard(p)
        prow = work[p]
        inv = 1 / Fraction(prow[j]) if isinstance(prow[j], (int, Fraction)) else 1 / prow[j]
        prow = {k: _norm(v * inv) for k, v in prow.items()}
        work[p] = prow
        for i in cand:
            if i == p:
                continue
            r = work[i]
            f = r[j]
            for k, v in prow.items():
                nv = r[k] - f * v if k in r else -f * v
                if _is_zero(nv):
                    if k in r:
                        del r[k]
                        by_col.get(k, set()).discard(i)
                else:
                    if k not in r:
                        by_col.setdefault(k, set()).add(i)
                    r[k] = _norm(nv) if isinstance(nv, Fraction) else nv
        pivots[j] = prow
        order.append(j)
    # back-substitution to reduced form
    for idx in range(len(order) - 1, -1, -1):
        j = order[idx]
        prow = pivots[j]
        for jj in order[:idx]:
            r = pivots[jj]
            f = r.get(j)
            if f is None or _is_zero(f):
                continue
            for k, v in prow.items():
                nv = r[k] - f * v if k in r else -f * v
                if _is_zero(nv):
                    r.pop(k, None)
                else:
                    r[k] = _norm(nv) if isinstance(nv, Fraction) else nv
    return order, pivots


def rank(m: ExactMatrix, col_order: Sequence[int] | None = None) -> int:
    order, _ = _echelon([m.row(i) for i in range(m.rows)], col_order)
    return len(order)


def rank_and_kernel(m: ExactMatrix) -> tuple[int, list[dict[int, object]]]:
    """Rank of m and a basis of its right kernel as sparse vectors."""
    order, piv = _echelon([m.row(i) for i in range(m.rows)])
    pivset = set(order)
    basis = []
    for f in range(m.cols):
        if f in pivset:
            continue
        v: dict[int, object] = {f: 1}
        for j in order:
            c = piv[j].get(f)
            if c is not None and not _is_zero(c):
                v[j] = -c
        basis.append(v)
    return len(order), basis


def span_rank(vectors: Iterable[Mapping[int, object]]) -> int:
    order, _ = _echelon([dict(v) for v in vectors])
    return len(order)


def row_space_basis(vectors: Iterable[Mapping[int, object]]) -> list[dict[int, object]]:
    """Reduced basis (one vector per pivot) of the span of `vectors`."""
    order, piv = _echelon([dict(v) for v in vectors])
    return [piv[j] for j in order]


def matrix_invert(m: ExactMatrix) -> ExactMatrix:
    """Exact inverse by Gauss-Jordan on [m | I]."""
    if m.rows != m.cols:
        raise ValueError("only square matrices can be inverted")
    n = m.rows
    one = _field_one(m)
    rows = []
    for i in range(n):
        r = m.row(i)
        r[n + i] = one
        rows.append(r)
    order, piv = _echelon(rows, col_order=list(range(2 * n)))
    if sum(1 for j in order if j < n) < n:
        raise SingularMatrixError("matrix is singular")
    ent = {}
    for i in range(n):
        for k, v in piv[i].items():
            if k >= n:
                ent[(i, k - n)] = v
    return ExactMatrix(n, n, ent)


def solve(m: ExactMatrix, rhs: Sequence) -> list:
    """Solve m x = rhs for square non-singular m."""
    inv = matrix_invert(m)
    vec = {i: v for i, v in enumerate(rhs) if not _is_zero(v)}
    out = inv.apply(vec)
    return [out.get(i, 0) for i in range(m.cols)]


def _field_one(m: ExactMatrix):
    for _, v in m.items():
        if isinstance(v, RationalFunction):
            return RationalFunction.one()
        if isinstance(v, LaurentPolynomial):
            return RationalFunction.one()
    return Fraction(1)


def to_field(m: ExactMatrix) -> ExactMatrix:
    """Lift Laurent-polynomial entries into Q(q) so elimination can divide."""
    return m.map(lambda v: RationalFunction(v) if isinstance(v, LaurentPolynomial) else v)


def laurent_matrix_inverse(m: ExactMatrix) -> ExactMatrix:
    """Inverse of a square matrix with Laurent-polynomial entries, as rational functions.

    Fraction-free Gauss-Jordan (Bareiss): every intermediate entry is a minor,
    so the divisions by the previous pivot are exact and no gcds are needed
    until the final adj/det step.
    """
    if m.rows != m.cols:
        raise ValueError("only square matrices can be inverted")
    n = m.rows
    zero, one = LaurentPolynomial(), LaurentPolynomial.const(1)

    def lp(x):
        return x if isinstance(x, LaurentPolynomial) else LaurentPolynomial.const(x)

    a = [[lp(m[i, j]) for j in range(n)] + [one if k == i else zero for k in range(n)] for i in range(n)]
    prev = one
    for k in range(n):
        p = next((i for i in range(k, n) if not a[i][k].is_zero()), None)
        if p is None:
            raise SingularMatrixError("matrix is singular")
        a[k], a[p] = a[p], a[k]
        piv = a[k][k]
        for i in range(n):
            if i == k:
                continue
            f = a[i][k]
            row = a[i]
            for j in range(2 * n):
                if j == k:
                    continue
                v = piv * row[j] - f * a[k][j]
                row[j] = v.exact_div(prev) if not v.is_zero() else zero
            row[k] = zero
        prev = piv
    # now a = [det*I | adj] up to the row swaps already folded in
    det = prev
    ent = {}
    for i in range(n):
        for j in range(n):
            v = a[i][n + j]
            if not v.is_zero():
                ent[(i, j)] = RationalFunction(v, det)
    return ExactMatrix(n, n, ent)
