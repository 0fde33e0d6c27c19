"""Exact dense linear algebra over the rationals.

Every entry is a ``fractions.Fraction``; there is no floating point anywhere
in this package.  Rank, null space and linear solve run a fraction-free
sparse echelon reduction (integer rows, gcd-normalized after every
combination step, so intermediate growth stays bounded the way Bareiss
elimination bounds it).  Determinants use the classical Bareiss scheme.

Matrices are immutable and hashable; vectors are plain tuples of Fraction.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

Vector = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(x) -> Fraction:
    """Coerce ints, strings like '3/4', and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted; use Fraction or 'p/q' strings")
    return Fraction(x)


def vector(xs) -> Vector:
    return tuple(frac(x) for x in xs)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_scale(c, v: Vector) -> Vector:
    c = frac(c)
    return tuple(c * a for a in v)


def vec_dot(u: Vector, v: Vector) -> Fraction:
    return sum((a * b for a, b in zip(u, v, strict=True)), ZERO)


def vec_is_zero(v: Vector) -> bool:
    return all(a == 0 for a in v)


class Matrix:
    """Immutable dense matrix of Fractions (row-major)."""

    __slots__ = ("rows", "cols", "entries", "_hash")

    def __init__(self, rows: int, cols: int, entries):
        ents = tuple(tuple(frac(x) for x in row) for row in entries)
        if len(ents) != rows or any(len(r) != cols for r in ents):
            raise ValueError(f"expected {rows}x{cols} entries")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", ents)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):
        raise AttributeError("Matrix is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rows(cls, rows, cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if not rows:
            if cols is None:
                raise ValueError("cols required for a matrix with no rows")
            return cls(0, cols, [])
        return cls(len(rows), len(rows[0]), rows)

    @classmethod
    def from_cols(cls, cols, rows: int | None = None) -> "Matrix":
        cols = [list(c) for c in cols]
        if not cols:
            if rows is None:
                raise ValueError("rows required for a matrix with no columns")
            return cls(rows, 0, [[] for _ in range(rows)])
        n = len(cols[0])
        return cls(n, len(cols), [[cols[j][i] for j in range(len(cols))] for i in range(n)])

    @classmethod
    def from_sparse(cls, rows: int, cols: int, data: dict) -> "Matrix":
        grid = [[ZERO] * cols for _ in range(rows)]
        for (i, j), x in data.items():
            x = frac(x)
            if x:
                grid[i][j] = x
        return cls(rows, cols, grid)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [[ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, diag) -> "Matrix":
        diag = [frac(x) for x in diag]
        n = len(diag)
        return cls(n, n, [[diag[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def stack(cls, mats, cols: int | None = None) -> "Matrix":
        """Vertical concatenation."""
        mats = list(mats)
        if not mats:
            if cols is None:
                raise ValueError("cols required to stack nothing")
            return cls.zero(0, cols)
        c = mats[0].cols
        if any(m.cols != c for m in mats):
            raise ValueError("column mismatch in stack")
        rows = []
        for m in mats:
            rows.extend(m.entries)
        return cls(sum(m.rows for m in mats), c, rows)

    # -- access -------------------------------------------------------

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def sparse_rows(self) -> list[dict[int, Fraction]]:
        return [{j: x for j, x in enumerate(r) if x} for r in self.entries]

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.entries for x in r)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.rows) for j in range(i + 1, self.cols)
        )

    # -- algebra ------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.rows, self.cols, self.entries))
            object.__setattr__(self, "_hash", h)
        return h

    def __add__(self, other: "Matrix") -> "Matrix":
        self._shape_check(other)
        return Matrix(self.rows, self.cols,
                      [[a + b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._shape_check(other)
        return Matrix(self.rows, self.cols,
                      [[a - b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.entries, other.entries)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [[-a for a in r] for r in self.entries])

    def _shape_check(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self._matmul(other)
        c = frac(other)
        return Matrix(self.rows, self.cols, [[c * a for a in r] for r in self.entries])

    def __rmul__(self, other):
        return self.__mul__(other)

    def _matmul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        # sparse-aware: only walk nonzero entries (differentials are mostly zeros)
        bnz = [[(j, x) for j, x in enumerate(r) if x] for r in other.entries]
        out = []
        for arow in self.entries:
            acc = [ZERO] * other.cols
            for k, a in enumerate(arow):
                if a:
                    for j, b in bnz[k]:
                        acc[j] += a * b
            out.append(acc)
        return Matrix(self.rows, other.cols, out)

    def mul_vec(self, v: Vector) -> Vector:
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        nz = [(j, x) for j, x in enumerate(v) if x]
        out = []
        for r in self.entries:
            s = ZERO
            for j, x in nz:
                if r[j]:
                    s += r[j] * x
            out.append(s)
        return tuple(out)

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      [[self.entries[i][j] for i in range(self.rows)]
                       for j in range(self.cols)])

    def trace(self) -> Fraction:
        if not self.is_square():
            raise ValueError("trace of a non-square matrix")
        return sum((self.entries[i][i] for i in range(self.rows)), ZERO)

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product; row/col index (i,k) -> i*other.rows + k."""
        out = [[ZERO] * (self.cols * other.cols) for _ in range(self.rows * other.rows)]
        for i, arow in enumerate(self.entries):
            for j, a in enumerate(arow):
                if a:
                    for k, brow in enumerate(other.entries):
                        for l, b in enumerate(brow):
                            if b:
                                out[i * other.rows + k][j * other.cols + l] = a * b
        return Matrix(self.rows * other.rows, self.cols * other.cols, out)

    # -- elimination-backed operations ---------------------------------

    def rank(self) -> int:
        return len(_echelon(_int_rows(self.entries), self.cols))

    def null_space(self) -> list[Vector]:
        """Basis of the right kernel; exactly cols - rank vectors."""
        piv = _echelon(_int_rows(self.entries), self.cols)
        _back_reduce(piv)
        return _kernel_from_rref(piv, self.cols)

    def solve(self, b) -> Vector | None:
        """Some x with self @ x = b, or None when inconsistent."""
        b = vector(b)
        if len(b) != self.rows:
            raise ValueError("rhs length mismatch")
        n = self.cols
        aug = []
        for row, bi in zip(self.entries, b):
            r = {j: x for j, x in enumerate(row) if x}
            if bi:
                r[n] = -bi
            aug.append(r)
        piv = _echelon(_int_rows_sparse(aug), n + 1)
        if n in piv:
            return None
        _back_reduce(piv)
        x = [ZERO] * n
        for c, row in piv.items():
            rhs = row.get(n, 0)
            if rhs:
                x[c] = Fraction(-rhs, row[c])
        return tuple(x)

    def det(self) -> Fraction:
        """Exact determinant by Bareiss fraction-free elimination."""
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return ONE
        denom = 1
        a = []
        for row in self.entries:
            m = lcm(*(x.denominator for x in row)) if row else 1
            denom *= m
            a.append([int(x * m) for x in row])
        sign = 1
        prev = 1
        for k in range(n - 1):
            p = next((i for i in range(k, n) if a[i][k]), None)
            if p is None:
                return ZERO
            if p != k:
                a[k], a[p] = a[p], a[k]
                sign = -sign
            akk = a[k][k]
            for i in range(k + 1, n):
                aik = a[i][k]
                ai, ak = a[i], a[k]
                for j in range(k + 1, n):
                    ai[j] = (akk * ai[j] - aik * ak[j]) // prev
                ai[k] = 0
            prev = akk
        return Fraction(sign * a[n - 1][n - 1], denom)

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols})"

    def pretty(self) -> str:
        cells = [[str(x) for x in r] for r in self.entries]
        w = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[" + " ".join(c.rjust(w) for c in r) + "]" for r in cells)


# ---------------------------------------------------------------------------
# fraction-free echelon core (integer sparse rows, gcd-normalized)
# ---------------------------------------------------------------------------


def _int_rows(entries) -> list[dict[int, int]]:
    """Clear denominators row by row; drop zero rows."""
    out = []
    for row in entries:
        r = {j: x for j, x in enumerate(row) if x}
        if r:
            m = lcm(*(x.denominator for x in r.values()))
            out.append({j: int(x * m) for j, x in r.items()})
    return out


def _int_rows_sparse(rows: list[dict[int, Fraction]]) -> list[dict[int, int]]:
    out = []
    for r in rows:
        r = {j: x for j, x in r.items() if x}
        if r:
            m = lcm(*(x.denominator for x in r.values()))
            out.append({j: int(x * m) for j, x in r.items()})
    return out


def _normalize(row: dict[int, int]) -> None:
    g = 0
    for x in row.values():
        g = gcd(g, x)
        if g == 1:
            break
    if g > 1:
        for j in row:
            row[j] //= g
    if row[min(row)] < 0:
        for j in row:
            row[j] = -row[j]


def _echelon(rows, ncols: int) -> dict[int, dict[int, int]]:
    """Forward echelon; returns {pivot column: normalized integer row}."""
    pivots: dict[int, dict[int, int]] = {}
    for r in rows:
        r = dict(r)
        while r:
            lead = min(r)
            p = pivots.get(lead)
            if p is None:
                _normalize(r)
                pivots[lead] = r
                break
            a, b = p[lead], r[lead]
            g = gcd(a, b)
            ca, cb = a // g, b // g
            new = {}
            for j, x in r.items():
                v = ca * x - cb * p.get(j, 0)
                if v:
                    new[j] = v
            for j, x in p.items():
                if j not in r:
                    v = -cb * x
                    if v:
                        new[j] = v
            r = new
            if r:
                _normalize(r)
    return pivots


def _back_reduce(pivots: dict[int, dict[int, int]]) -> None:
    """Eliminate every pivot column from the other pivot rows (RREF shape)."""
    for c in sorted(pivots, reverse=True):
        prow = pivots[c]
        for c2, row in pivots.items():
            if c2 < c and c in row:
                a, b = prow[c], row[c]
                g = gcd(a, b)
                ca, cb = a // g, b // g
                new = {}
                for j, x in row.items():
                    v = ca * x - cb * prow.get(j, 0)
                    if v:
                        new[j] = v
                for j, x in prow.items():
                    if j not in row:
                        v = -cb * x
                        if v:
                            new[j] = v
                _normalize(new)
                pivots[c2] = new


def _kernel_from_rref(pivots: dict[int, dict[int, int]], ncols: int) -> list[Vector]:
    pivcols = sorted(pivots)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for c in pivcols:
            row = pivots[c]
            if f in row:
                v[c] = Fraction(-row[f], row[c])
        basis.append(tuple(v))
    return basis


# ---------------------------------------------------------------------------
# subspace helpers (canonical echelon bases of row spans)
# ---------------------------------------------------------------------------


def echelon_basis(vectors, ncols: int | None = None) -> tuple[Vector, ...]:
    """Canonical RREF basis (leading coefficient 1) of the span of `vectors`."""
    vectors = [vector(v) for v in vectors]
    if not vectors:
        return ()
    n = len(vectors[0]) if ncols is None else ncols
    piv = _echelon(_int_rows(vectors), n)
    _back_reduce(piv)
    out = []
    for c in sorted(piv):
        row = piv[c]
        lead = row[c]
        v = [ZERO] * n
        for j, x in row.items():
            v[j] = Fraction(x, lead)
        out.append(tuple(v))
    return tuple(out)


def span_rank(vectors, ncols: int | None = None) -> int:
    vectors = [vector(v) for v in vectors]
    if not vectors:
        return 0
    n = len(vectors[0]) if ncols is None else ncols
    return len(_echelon(_int_rows(vectors), n))


def in_span(basis, v) -> bool:
    """Membership of v in the span of `basis` (any spanning set)."""
    basis = [vector(b) for b in basis]
    v = vector(v)
    if vec_is_zero(v):
        return True
    if not basis:
        return False
    return span_rank(basis) == span_rank(basis + [v])

def coordinates_in_span(basis, v) -> Vector | None:
    """Coefficients expressing v in `basis` columns, or None if outside."""
    basis = [vector(b) for b in basis]
    v = vector(v)
    if not basis:
        return () if vec_is_zero(v) else None
    return Matrix.from_cols(basis).solve(v)


def extend_to_standard_basis(vectors, n: int) -> list[int]:
    """Indices of standard basis vectors completing `vectors` to a basis of F^n.

    Greedy on index order, so the completion is deterministic.
    """
    chosen: list[Vector] = [vector(v) for v in vectors]
    r = span_rank(chosen, n) if chosen else 0
    if r != len(chosen):
        raise ValueError("input vectors are linearly dependent")
    idx = []
    for j in range(n):
        if r == n:
            break
        e = tuple(ONE if t == j else ZERO for t in range(n))
        r2 = span_rank(chosen + [e], n)
        if r2 > r:
            chosen.append(e)
            idx.append(j)
            r = r2
    if r != n:
        raise ValueError("could not complete basis")
    return idx


def solve_matrix(a: Matrix, b: Matrix) -> Matrix | None:
    """X with a @ X = b, or None when any column is inconsistent."""
    cols = []
    for j in range(b.cols):
        x = a.solve(b.col(j))
        if x is None:
            return None
        cols.append(x)
    return Matrix.from_cols(cols, rows=a.cols)


def block_diag(mats) -> Matrix:
    """Square block-diagonal assembly."""
    mats = list(mats)
    n = sum(m.rows for m in mats)
    c = sum(m.cols for m in mats)
    data = {}
    r0 = c0 = 0
    for m in mats:
        for i, row in enumerate(m.entries):
            for j, x in enumerate(row):
                if x:
                    data[(r0 + i, c0 + j)] = x
        r0 += m.rows
        c0 += m.cols
    return Matrix.from_sparse(n, c, data)
