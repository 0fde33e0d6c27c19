"""Lie algebra structure theory over the rationals.

A Lie algebra is given by structure constants on a named basis (only pairs
i < j are stored; antisymmetry is built into the storage).  Everything here
is exact: characteristic series, Killing form, solvable radical, nilradical,
derivation algebra, Levi decomposition, quotients, semidirect products and
base changes all reduce to rational rank / kernel / solve computations.

Values are immutable and hashable, so the expensive operations are memoized.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .linalg import (
    Matrix,
    Vector,
    ZERO,
    ONE,
    coordinates_in_span,
    echelon_basis,
    extend_to_standard_basis,
    frac,
    in_span,
    solve_matrix,
    span_rank,
    vec_add,
    vec_is_zero,
    vector,
    zero_vector,
)


class LieAlgebra:
    """Finite-dimensional Lie algebra with rational structure constants.

    ``brackets`` maps a pair (i, j) with i < j to a sparse mapping
    {k: c} meaning [b_i, b_j] = sum_k c * b_k.  The Jacobi identity is not
    enforced at construction; use :func:`validate_structure`.
    """

    __slots__ = ("dim", "basis_names", "name", "_table", "_key", "_hash")

    def __init__(self, dim, brackets, basis_names=None, name="g"):
        if dim < 0:
            raise ValueError("dimension must be nonnegative")
        if basis_names is None:
            basis_names = tuple(f"x{i}" for i in range(dim))
        basis_names = tuple(str(s) for s in basis_names)
        if len(basis_names) != dim:
            raise ValueError("need one basis name per dimension")
        table: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j), entry in brackets.items():
            i, j = int(i), int(j)
            if not (0 <= i < j < dim):
                raise ValueError(f"bracket key ({i},{j}) out of range (need 0 <= i < j < {dim})")
            row = {}
            for k, c in entry.items():
                k = int(k)
                if not 0 <= k < dim:
                    raise ValueError(f"bracket target index {k} out of range")
                c = frac(c)
                if c:
                    row[k] = c
            if row:
                table[(i, j)] = row
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "basis_names", basis_names)
        object.__setattr__(self, "name", str(name))
        object.__setattr__(self, "_table", table)
        key = (dim, basis_names, tuple(sorted(
            (i, j, k, c) for (i, j), row in table.items() for k, c in row.items())))
        object.__setattr__(self, "_key", key)
        object.__setattr__(self, "_hash", hash(key))

    def __setattr__(self, *a):
        raise AttributeError("LieAlgebra is immutable")

    def __eq__(self, other):
        return isinstance(other, LieAlgebra) and self._key == other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"LieAlgebra({self.name!r}, dim={self.dim})"

    # -- brackets -------------------------------------------------------

    @property
    def bracket_table(self) -> dict[tuple[int, int], dict[int, Fraction]]:
        return {ij: dict(row) for ij, row in self._table.items()}

    def bracket_basis(self, i: int, j: int) -> dict[int, Fraction]:
        """[b_i, b_j] as a sparse vector (any order of i, j)."""
        if i == j:
            return {}
        if i < j:
            return dict(self._table.get((i, j), {}))
        return {k: -c for k, c in self._table.get((j, i), {}).items()}

    def structure_constant(self, i: int, j: int, k: int) -> Fraction:
        return self.bracket_basis(i, j).get(k, ZERO)

    def bracket(self, x, y) -> Vector:
        """Bilinear extension of the structure constants."""
        x, y = vector(x), vector(y)
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("vector length must equal the algebra dimension")
        out = [ZERO] * self.dim
        xn = [(i, a) for i, a in enumerate(x) if a]
        yn = [(j, b) for j, b in enumerate(y) if b]
        for i, a in xn:
            for j, b in yn:
                if i == j:
                    continue
                coef = a * b
                for k, c in self.bracket_basis(i, j).items():
                    out[k] += coef * c
        return tuple(out)

    def ad_basis(self, i: int) -> Matrix:
        """Matrix of ad(b_i); column j holds [b_i, b_j]."""
        cols = []
        for j in range(self.dim):
            col = [ZERO] * self.dim
            for k, c in self.bracket_basis(i, j).items():
                col[k] = c
            cols.append(col)
        return Matrix.from_cols(cols, rows=self.dim)

    def ad(self, x) -> Matrix:
        x = vector(x)
        cols = []
        for j in range(self.dim):
            e = basis_vector(self.dim, j)
            cols.append(self.bracket(x, e))
        return Matrix.from_cols(cols, rows=self.dim)

    def basis_vector(self, i: int) -> Vector:
        return basis_vector(self.dim, i)

    def renamed(self, name: str) -> "LieAlgebra":
        return LieAlgebra(self.dim, self._table, self.basis_names, name)


def basis_vector(n: int, i: int) -> Vector:
    return tuple(ONE if j == i else ZERO for j in range(n))


# ---------------------------------------------------------------------------
# subspaces
# ---------------------------------------------------------------------------


class Subspace:
    """Subspace of a Lie algebra, stored as a canonical echelon basis."""

    __slots__ = ("parent", "basis", "ideal")

    def __init__(self, parent: LieAlgebra, vectors, ideal: bool = False):
        basis = echelon_basis([vector(v) for v in vectors], parent.dim)
        if ideal:
            _check_ideal(parent, basis)
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "ideal", bool(ideal))

    def __setattr__(self, *a):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def whole(cls, g: LieAlgebra) -> "Subspace":
        return cls(g, [basis_vector(g.dim, i) for i in range(g.dim)], ideal=True)

    @classmethod
    def zero(cls, g: LieAlgebra) -> "Subspace":
        return cls(g, [], ideal=True)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v) -> bool:
        return in_span(self.basis, vector(v))

    def coordinates(self, v) -> Vector | None:
        """Coefficients of v in the canonical basis, or None if outside."""
        return coordinates_in_span(self.basis, vector(v))

    def is_subalgebra(self) -> bool:
        b = self.basis
        return all(
            in_span(b, self.parent.bracket(b[i], b[j]))
            for i in range(len(b)) for j in range(i + 1, len(b))
        )

    def is_ideal(self) -> bool:
        try:
            _check_ideal(self.parent, self.basis)
        except ValueError:
            return False
        return True

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.parent == other.parent
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.parent, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim} of {self.parent.name})"


def _check_ideal(g: LieAlgebra, basis) -> None:
    for i in range(g.dim):
        e = basis_vector(g.dim, i)
        for v in basis:
            if not in_span(basis, g.bracket(e, v)):
                raise ValueError("subspace is not an ideal")


def _span_bracket(g: LieAlgebra, abasis, bbasis) -> tuple[Vector, ...]:
    """Canonical basis of span{[a, b]}."""
    vecs = [g.bracket(a, b) for a in abasis for b in bbasis]
    return echelon_basis([v for v in vecs if not vec_is_zero(v)], g.dim)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class JacobiViolation:
    triple: tuple[int, int, int]
    residual: Vector


def jacobi_residual(g: LieAlgebra, i: int, j: int, k: int) -> Vector:
    bi, bj, bk = (basis_vector(g.dim, t) for t in (i, j, k))
    r = g.bracket(g.bracket(bi, bj), bk)
    r = vec_add(r, g.bracket(g.bracket(bj, bk), bi))
    r = vec_add(r, g.bracket(g.bracket(bk, bi), bj))
    return r


def validate_structure(g: LieAlgebra) -> list[JacobiViolation]:
    """All violated Jacobi triples (empty list means the input is a Lie algebra)."""
    bad = []
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            for k in range(j + 1, g.dim):
                r = jacobi_residual(g, i, j, k)
                if not vec_is_zero(r):
                    bad.append(JacobiViolation((i, j, k), r))
    return bad


# ---------------------------------------------------------------------------
# series and basic predicates
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def derived_series(g: LieAlgebra) -> tuple[Subspace, ...]:
    """g = g^0 >= g^1 = [g^0,g^0] >= ... until stabilization."""
    chain = [Subspace.whole(g)]
    while True:
        cur = chain[-1].basis
        nxt = _span_bracket(g, cur, cur)
        if len(nxt) == len(cur):
            break
        chain.append(Subspace(g, nxt))
        if not nxt:
            break
    return tuple(chain)


@lru_cache(maxsize=None)
def lower_central_series(g: LieAlgebra) -> tuple[Subspace, ...]:
    """g >= [g,g] >= [g,[g,g]] >= ... until stabilization."""
    whole = Subspace.whole(g)
    chain = [whole]
    while True:
        nxt = _span_bracket(g, whole.basis, chain[-1].basis)
        if len(nxt) == len(chain[-1].basis):
            break
        chain.append(Subspace(g, nxt))
        if not nxt:
            break
    return tuple(chain)


def is_solvable(g: LieAlgebra) -> bool:
    return derived_series(g)[-1].dim == 0


def is_nilpotent(g: LieAlgebra) -> bool:
    return lower_central_series(g)[-1].dim == 0


def is_abelian(g: LieAlgebra) -> bool:
    return not g._table


def _subspace_series_dies(g: LieAlgebra, basis, lower_central: bool) -> bool:
    cur = tuple(basis)
    while cur:
        nxt = _span_bracket(g, basis if lower_central else cur, cur)
        if len(nxt) == len(cur):
            return False
        cur = nxt
    return True


def is_solvable_subspace(g: LieAlgebra, basis) -> bool:
    return _subspace_series_dies(g, tuple(basis), lower_central=False)


def is_nilpotent_subspace(g: LieAlgebra, basis) -> bool:
    return _subspace_series_dies(g, tuple(basis), lower_central=True)


@lru_cache(maxsize=None)
def derived_subalgebra(g: LieAlgebra) -> Subspace:
    whole = Subspace.whole(g).basis
    return Subspace(g, _span_bracket(g, whole, whole), ideal=True)


@lru_cache(maxsize=None)
def center(g: LieAlgebra) -> Subspace:
    """{x : [b_i, x] = 0 for all i} via the stacked adjoint kernel."""
    if g.dim == 0:
        return Subspace.zero(g)
    stacked = Matrix.stack([g.ad_basis(i) for i in range(g.dim)])
    return Subspace(g, stacked.null_space(), ideal=True)


# ---------------------------------------------------------------------------
# Killing form, radical, nilradical
# ---------------------------------------------------------------------------


class BilinearForm:
    """Bilinear form on a Lie algebra, stored by its Gram matrix."""

    __slots__ = ("parent", "gram")

    def __init__(self, parent: LieAlgebra, gram: Matrix):
        if gram.rows != parent.dim or gram.cols != parent.dim:
            raise ValueError("Gram matrix must be dim x dim")
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "gram", gram)

    def __setattr__(self, *a):
        raise AttributeError("BilinearForm is immutable")

    def value(self, x, y) -> Fraction:
        x, y = vector(x), vector(y)
        col = self.gram.mul_vec(y)
        return sum((a * b for a, b in zip(x, col)), ZERO)

    def is_symmetric(self) -> bool:
        return self.gram.is_symmetric()

    def is_invariant(self) -> bool:
        """K([x,y],z) == K(x,[y,z]) on all basis triples."""
        g = self.parent
        bs = [basis_vector(g.dim, i) for i in range(g.dim)]
        for x in bs:
            for y in bs:
                for z in bs:
                    if self.value(g.bracket(x, y), z) != self.value(x, g.bracket(y, z)):
                        return False
        return True


@lru_cache(maxsize=None)
def killing_form(g: LieAlgebra) -> BilinearForm:
    ads = [g.ad_basis(i) for i in range(g.dim)]
    n = g.dim
    gram = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            t = (ads[i] * ads[j]).trace()
            gram[i][j] = t
            gram[j][i] = t
    return BilinearForm(g, Matrix(n, n, gram))


@lru_cache(maxsize=None)
def radical(g: LieAlgebra) -> Subspace:
    """Solvable radical: the Killing-orthogonal complement of [g, g].

    (Valid in characteristic zero.)  The result is an ideal and solvable;
    both facts are re-verified here because everything downstream leans on
    them.
    """
    der = derived_subalgebra(g)
    if der.dim == 0:
        return Subspace.whole(g)
    k = killing_form(g).gram
    rows = [k.mul_vec(d) for d in der.basis]
    rad = Matrix.from_rows(rows, cols=g.dim).null_space()
    out = Subspace(g, rad, ideal=True)
    if not is_solvable_subspace(g, out.basis):
        raise RuntimeError("internal error: Killing-orthogonal of [g,g] is not solvable")
    return out


def is_semisimple(g: LieAlgebra) -> bool:
    return killing_form(g).gram.det() != 0


def _associative_closure(mats: list[Matrix], n: int) -> list[Matrix]:
    """Basis of the unital associative matrix algebra generated by `mats`."""
    basis_mats: list[Matrix] = []
    flat: list[Vector] = []

    def try_add(m: Matrix) -> bool:
        v = tuple(x for row in m.entries for x in row)
        if in_span(flat, v):
            return False
        basis_mats.append(m)
        flat.append(v)
        return True

    try_add(Matrix.identity(n))
    for m in mats:
        try_add(m)
    frontier = list(range(len(basis_mats)))
    while frontier:
        new_idx = []
        for i in frontier:
            for j in range(len(basis_mats)):
                for prod in (basis_mats[i] * basis_mats[j], basis_mats[j] * basis_mats[i]):
                    if try_add(prod):
                        new_idx.append(len(basis_mats) - 1)
        frontier = new_idx
    return basis_mats


@lru_cache(maxsize=None)
def nilradical(g: LieAlgebra) -> Subspace:
    """Largest nilpotent ideal, as {x in radical : ad(x) nilpotent}.

    The nilpotency condition is linearized through the unital associative
    algebra A generated by ad(radical): ad(x) is nilpotent exactly when it
    lies in the trace-form radical of A, i.e. tr(ad(x) * S) = 0 for every
    S in A.  A pairwise trace test on ad(radical) alone is not enough --
    eigenvalues can cancel in squares -- hence the associative closure.
    """
    rad = radical(g)
    if rad.dim == 0 or is_nilpotent_subspace(g, rad.basis):
        return Subspace(g, rad.basis, ideal=True)
    ad_rad = [g.ad(v) for v in rad.basis]
    closure = _associative_closure(ad_rad, g.dim)
    rows = []
    for s in closure:
        rows.append([(a * s).trace() for a in ad_rad])
    coeffs = Matrix.from_rows(rows, cols=rad.dim).null_space()
    vecs = []
    for c in coeffs:
        v = zero_vector(g.dim)
        for ci, b in zip(c, rad.basis):
            if ci:
                v = vec_add(v, tuple(ci * x for x in b))
        vecs.append(v)
    out = Subspace(g, vecs, ideal=True)
    if not is_nilpotent_subspace(g, out.basis):
        raise RuntimeError("internal error: nilradical candidate is not nilpotent")
    bracket_gr = _span_bracket(g, Subspace.whole(g).basis, rad.basis)
    if not all(out.contains(v) for v in bracket_gr):
        raise RuntimeError("internal error: nilradical does not contain [g, radical]")
    return out


# ---------------------------------------------------------------------------
# derivations
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def derivations(g: LieAlgebra) -> tuple[Matrix, ...]:
    """Basis of Der(g) = {D : D[x,y] = [Dx,y] + [x,Dy]}.

    Unknowns are the n^2 entries of D (row-major); one n-row block of
    equations per basis pair i < j.
    """
    n = g.dim
    if n == 0:
        return ()
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            cij = g.bracket_basis(i, j)
            for k in range(n):
                row: dict[int, Fraction] = {}

                def add(a, b, c):
                    if c:
                        row[a * n + b] = row.get(a * n + b, ZERO) + c

                for l, c in cij.items():
                    add(k, l, c)
                for a in range(n):
                    add(a, i, -g.structure_constant(a, j, k))
                    add(a, j, -g.structure_constant(i, a, k))
                if row:
                    rows.append([row.get(t, ZERO) for t in range(n * n)])
    if not rows:
        # abelian: every linear map is a derivation
        return tuple(
            Matrix.from_sparse(n, n, {(a, b): ONE})
            for a in range(n) for b in range(n)
        )
    kernel = Matrix.from_rows(rows, cols=n * n).null_space()
    return tuple(
        Matrix(n, n, [v[a * n:(a + 1) * n] for a in range(n)]) for v in kernel
    )


def is_derivation(g: LieAlgebra, d: Matrix) -> bool:
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            bi, bj = basis_vector(g.dim, i), basis_vector(g.dim, j)
            lhs = d.mul_vec(g.bracket(bi, bj))
            rhs = vec_add(g.bracket(d.mul_vec(bi), bj), g.bracket(bi, d.mul_vec(bj)))
            if lhs != rhs:
                return False
    return True


# ---------------------------------------------------------------------------
# structure report
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AlgebraReport:
    dim: int
    perfect: bool
    solvable: bool
    nilpotent: bool
    abelian: bool
    semisimple: bool
    unimodular: bool
    complete: bool
    sympathetic: bool
    center_dim: int
    derived_dim: int
    radical_dim: int
    nilradical_dim: int
    derivation_dim: int

    def as_dict(self) -> dict:
        return dict(self.__dict__)


@lru_cache(maxsize=None)
def structure_report(g: LieAlgebra) -> AlgebraReport:
    """All structural flags and dimensions used by the checkers.

    complete means trivial center plus Der(g) = ad(g), detected by
    dim Der(g) == dim g - dim Z(g) together with Z(g) = 0.
    """
    z = center(g).dim
    der = derived_subalgebra(g).dim
    rad = radical(g).dim
    nil = nilradical(g).dim
    nder = len(derivations(g))
    perfect = der == g.dim
    unimodular = all(g.ad_basis(i).trace() == 0 for i in range(g.dim))
    complete = z == 0 and nder == g.dim - z
    return AlgebraReport(
        dim=g.dim,
        perfect=perfect,
        solvable=is_solvable(g),
        nilpotent=is_nilpotent(g),
        abelian=is_abelian(g),
        semisimple=is_semisimple(g),
        unimodular=unimodular,
        complete=complete,
        sympathetic=perfect and complete,
        center_dim=z,
        derived_dim=der,
        radical_dim=rad,
        nilradical_dim=nil,
        derivation_dim=nder,
    )


# ---------------------------------------------------------------------------
# quotients, subalgebras, Levi decomposition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuotientData:
    algebra: LieAlgebra
    projection: Matrix  # (n-k) x n, coordinates in the quotient
    section: Matrix     # n x (n-k), representatives of the quotient basis


@lru_cache(maxsize=None)
def _quotient_cached(g: LieAlgebra, ideal_basis: tuple[Vector, ...]) -> QuotientData:
    n = g.dim
    k = len(ideal_basis)
    comp_idx = extend_to_standard_basis(ideal_basis, n)
    cols = list(ideal_basis) + [basis_vector(n, j) for j in comp_idx]
    b = Matrix.from_cols(cols, rows=n)
    binv = solve_matrix(b, Matrix.identity(n))
    if binv is None:
        raise RuntimeError("internal error: completed basis is singular")
    proj = Matrix.from_rows(binv.entries[k:], cols=n) if k < n else Matrix.zero(0, n)
    section = Matrix.from_cols([basis_vector(n, j) for j in comp_idx], rows=n)
    m = n - k
    brackets = {}
    for s in range(m):
        for t in range(s + 1, m):
            w = g.bracket(basis_vector(n, comp_idx[s]), basis_vector(n, comp_idx[t]))
            coords = proj.mul_vec(w)
            entry = {u: c for u, c in enumerate(coords) if c}
            if entry:
                brackets[(s, t)] = entry
    names = tuple(g.basis_names[j] for j in comp_idx)
    q = LieAlgebra(m, brackets, names, name=f"{g.name}.quo{k}")
    return QuotientData(q, proj, section)


def quotient_algebra(g: LieAlgebra, a: Subspace) -> QuotientData:
    """Quotient by an ideal, with projection and a section of it.

    The quotient basis consists of the standard basis vectors chosen by
    greedy pivoting, so the construction is deterministic.
    """
    if a.parent != g:
        raise ValueError("subspace belongs to a different algebra")
    if not a.is_ideal():
        raise ValueError("quotient requires an ideal")
    return _quotient_cached(g, a.basis)


@lru_cache(maxsize=None)
def subalgebra_structure(g: LieAlgebra, vectors: tuple[Vector, ...]) -> tuple[LieAlgebra, Matrix]:
    """Abstract copy of the subalgebra spanned by `vectors` (must be closed).

    Returns the copy plus the embedding matrix whose columns are the input
    vectors.
    """
    vecs = [vector(v) for v in vectors]
    k = len(vecs)
    if k and span_rank(vecs, g.dim) != k:
        raise ValueError("subalgebra basis vectors are dependent")
    emb = Matrix.from_cols(vecs, rows=g.dim)
    brackets = {}
    for i in range(k):
        for j in range(i + 1, k):
            w = g.bracket(vecs[i], vecs[j])
            coords = emb.solve(w)
            if coords is None:
                raise ValueError("vectors do not span a subalgebra")
            entry = {u: c for u, c in enumerate(coords) if c}
            if entry:
                brackets[(i, j)] = entry
    sub = LieAlgebra(k, brackets, tuple(f"u{i}" for i in range(k)), name=f"{g.name}.sub{k}")
    return sub, emb


def _levi_abelian(g: LieAlgebra, rad_basis: tuple[Vector, ...]) -> list[Vector]:
    """Levi complement when the radical is abelian: correct a vector-space
    complement c_e -> c_e + phi(c_e), phi solving the linear closure system."""
    n = g.dim
    mr = len(rad_basis)
    comp_idx = extend_to_standard_basis(rad_basis, n)
    comp = [basis_vector(n, j) for j in comp_idx]
    mc = len(comp)
    b = Matrix.from_cols(list(rad_basis) + comp, rows=n)
    binv = solve_matrix(b, Matrix.identity(n))
    if binv is None:
        raise RuntimeError("internal error: radical complement basis singular")

    def split(w):
        y = binv.mul_vec(w)
        return y[:mr], y[mr:]

    # ad(c_a) restricted to the radical, in radical coordinates
    ad_on_rad = []
    for c in comp:
        cols = [split(g.bracket(c, r))[0] for r in rad_basis]
        ad_on_rad.append(Matrix.from_cols(cols, rows=mr) if mr else Matrix.zero(0, 0))

    unknowns = mr * mc  # phi[t][e], flattened t * mc + e
    rows, rhs = [], []
    for a in range(mc):
        for bb in range(a + 1, mc):
            delta, pi = split(g.bracket(comp[a], comp[bb]))
            for t in range(mr):
                row = [ZERO] * unknowns
                for tp in range(mr):
                    row[tp * mc + bb] += ad_on_rad[a][t, tp]
                    row[tp * mc + a] -= ad_on_rad[bb][t, tp]
                for e in range(mc):
                    if pi[e]:
                        row[t * mc + e] -= pi[e]
                rows.append(row)
                rhs.append(-delta[t])
    if rows:
        sol = Matrix.from_rows(rows, cols=unknowns).solve(rhs)
        if sol is None:
            raise RuntimeError("internal error: Levi correction system inconsistent")
    else:
        sol = zero_vector(unknowns)
    out = []
    for e in range(mc):
        v = comp[e]
        for t in range(mr):
            c = sol[t * mc + e]
            if c:
                v = vec_add(v, tuple(c * x for x in rad_basis[t]))
        out.append(v)
    return out


def _levi_vectors(g: LieAlgebra, rad_basis: tuple[Vector, ...]) -> list[Vector]:
    r1 = _span_bracket(g, rad_basis, rad_basis)
    if not r1:
        return _levi_abelian(g, rad_basis)
    # reduce through the derived series of the radical: split g / [r,r]
    # (abelian radical there), pull the complement back, and recurse inside
    # the pullback, whose radical is the strictly smaller [r,r].
    qd = quotient_algebra(g, Subspace(g, r1, ideal=True))
    q_rad = [qd.projection.mul_vec(v) for v in rad_basis]
    s_bar = _levi_vectors(qd.algebra, echelon_basis(q_rad, qd.algebra.dim))
    h_vecs = tuple(list(r1) + [qd.section.mul_vec(v) for v in s_bar])
    h_alg, h_emb = subalgebra_structure(g, h_vecs)
    s_in_h = _levi_vectors(h_alg, echelon_basis(
        [h_emb.solve(v) for v in r1], h_alg.dim))
    return [h_emb.mul_vec(v) for v in s_in_h]


@lru_cache(maxsize=None)
def levi_decomposition(g: LieAlgebra) -> tuple[Subspace, Subspace]:
    """(s, r) with r the radical and s a semisimple complement subalgebra."""
    r = radical(g)
    if r.dim == 0:
        return Subspace.whole(g), r
    if r.dim == g.dim:
        return Subspace.zero(g), r
    s_vecs = _levi_vectors(g, r.basis)
    s = Subspace(g, s_vecs)
    if s.dim + r.dim != g.dim or not s.is_subalgebra():
        raise RuntimeError("internal error: Levi complement is not a complement subalgebra")
    return s, r


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------


def semidirect_product(s: LieAlgebra, r: LieAlgebra, action) -> LieAlgebra:
    """s acting on r: bracket [(x,v),(y,u)] = ([x,y], x.u - y.v + [v,u]).

    `action` is a representation of s on the underlying space of r (one
    matrix per basis element of s); every action matrix must be a derivation
    of r, and the matrices must satisfy the commutator identity.  Jacobi is
    re-verified on the result.
    """
    mats = list(action.action) if hasattr(action, "action") else [m for m in action]
    if len(mats) != s.dim:
        raise ValueError("need one action matrix per basis element of s")
    for m in mats:
        if m.rows != r.dim or m.cols != r.dim:
            raise ValueError("action matrices must be dim(r) x dim(r)")
        if not is_derivation(r, m):
            raise ValueError("action is not by derivations of r")
    for i in range(s.dim):
        for j in range(i + 1, s.dim):
            comm = mats[i] * mats[j] - mats[j] * mats[i]
            expect = Matrix.zero(r.dim, r.dim)
            for k, c in s.bracket_basis(i, j).items():
                expect = expect + c * mats[k]
            if comm != expect:
                raise ValueError("action matrices do not represent s")
    n = s.dim + r.dim
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for (i, j), row in s._table.items():
        brackets[(i, j)] = dict(row)
    for i in range(s.dim):
        for t in range(r.dim):
            entry = {s.dim + k: mats[i][k, t] for k in range(r.dim) if mats[i][k, t]}
            if entry:
                brackets[(i, s.dim + t)] = entry
    for (i, j), row in r._table.items():
        brackets[(s.dim + i, s.dim + j)] = {s.dim + k: c for k, c in row.items()}
    names = list(s.basis_names)
    for nm in r.basis_names:
        names.append(nm if nm not in names else nm + "'")
    out = LieAlgebra(n, brackets, tuple(names), name=f"{s.name}|x{r.name}")
    bad = validate_structure(out)
    if bad:
        raise RuntimeError(f"internal error: semidirect product violates Jacobi at {bad[0].triple}")
    return out


def change_of_basis(g: LieAlgebra, p: Matrix) -> LieAlgebra:
    """Transport the structure constants along the new basis b'_j = P e_j."""
    if p.rows != g.dim or p.cols != g.dim:
        raise ValueError("base change matrix must be dim x dim")
    pinv = solve_matrix(p, Matrix.identity(g.dim))
    if pinv is None:
        raise ValueError("base change matrix is singular")
    brackets = {}
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            w = g.bracket(p.col(i), p.col(j))
            coords = pinv.mul_vec(w)
            entry = {k: c for k, c in enumerate(coords) if c}
            if entry:
                brackets[(i, j)] = entry
    return LieAlgebra(g.dim, brackets, g.basis_names, name=f"{g.name}~")
