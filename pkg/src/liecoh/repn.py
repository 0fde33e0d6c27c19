"""Representations of a Lie algebra and their functorial constructions.

A representation stores one explicit action matrix per basis element of the
algebra; no weight-theoretic shortcuts are used anywhere, so every module
(trivial, adjoint, dual, tensor, hom, restriction, sub/quotient) goes
through the same exact linear algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .linalg import (
    Matrix,
    Vector,
    echelon_basis,
    extend_to_standard_basis,
    in_span,
    solve_matrix,
    vector,
)
from .liealg import LieAlgebra, Subspace, basis_vector, subalgebra_structure


class Representation:
    """A module over a Lie algebra, given by action matrices."""

    __slots__ = ("algebra", "dim", "action", "_hash")

    def __init__(self, algebra: LieAlgebra, action, dim: int | None = None):
        action = tuple(action)
        if len(action) != algebra.dim:
            raise ValueError("need one action matrix per basis element")
        if action:
            m = action[0].rows
        elif dim is not None:
            m = dim
        else:
            m = 0  # module over the zero algebra; pass dim explicitly if nonzero
        for a in action:
            if a.rows != a.cols or a.rows != m:
                raise ValueError("action matrices must be square of equal size")
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "dim", m)
        object.__setattr__(self, "action", action)
        object.__setattr__(self, "_hash", hash((algebra, action)))

    def __setattr__(self, *a):
        raise AttributeError("Representation is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Representation)
            and self.algebra == other.algebra
            and self.dim == other.dim
            and self.action == other.action
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Representation(dim={self.dim} over {self.algebra.name})"

    def action_of(self, x) -> Matrix:
        """rho(x) for an algebra element in coordinates."""
        x = vector(x)
        out = Matrix.zero(self.dim, self.dim)
        for i, c in enumerate(x):
            if c:
                out = out + c * self.action[i]
        return out

    def apply(self, i: int, v: Vector) -> Vector:
        return self.action[i].mul_vec(v)


def _zero_rep(g: LieAlgebra, m: int) -> Representation:
    return Representation(g, [Matrix.zero(m, m) for _ in range(g.dim)], dim=m)


def validate_representation(rep: Representation) -> list[tuple[int, int]]:
    """Basis pairs (i, j) where rho([b_i,b_j]) != [rho(b_i), rho(b_j)]."""
    g = rep.algebra
    bad = []
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            comm = rep.action[i] * rep.action[j] - rep.action[j] * rep.action[i]
            expect = Matrix.zero(rep.dim, rep.dim)
            for k, c in g.bracket_basis(i, j).items():
                expect = expect + c * rep.action[k]
            if comm != expect:
                bad.append((i, j))
    return bad


@lru_cache(maxsize=None)
def trivial_rep(g: LieAlgebra, m: int = 1) -> Representation:
    return _zero_rep(g, m)


@lru_cache(maxsize=None)
def adjoint_rep(g: LieAlgebra) -> Representation:
    return Representation(g, [g.ad_basis(i) for i in range(g.dim)])


@lru_cache(maxsize=None)
def dual_rep(rep: Representation) -> Representation:
    """Contragredient action rho*(x) = -rho(x)^T."""
    return Representation(rep.algebra, [-(a.transpose()) for a in rep.action])


@lru_cache(maxsize=None)
def tensor_rep(m: Representation, n: Representation) -> Representation:
    """Leibniz-rule action on M (x) N; basis index (a, b) -> a*dim(N) + b."""
    if m.algebra != n.algebra:
        raise ValueError("tensor factors live over different algebras")
    im = Matrix.identity(m.dim)
    inn = Matrix.identity(n.dim)
    return Representation(
        m.algebra,
        [am.kron(inn) + im.kron(an) for am, an in zip(m.action, n.action)],
    )


@lru_cache(maxsize=None)
def hom_rep(m: Representation, n: Representation) -> Representation:
    """Hom(M, N) = M* (x) N with (x.f)(v) = x.f(v) - f(x.v)."""
    return tensor_rep(dual_rep(m), n)


def hom_vector_to_matrix(v: Vector, m_dim: int, n_dim: int) -> Matrix:
    """Reshape a Hom(M, N) coordinate vector into the map's matrix (N x M)."""
    if len(v) != m_dim * n_dim:
        raise ValueError("length must be dim(M) * dim(N)")
    return Matrix(n_dim, m_dim,
                  [[v[a * n_dim + b] for a in range(m_dim)] for b in range(n_dim)])


def restrict_rep(rep: Representation, h: Subspace) -> Representation:
    """Restriction to a subalgebra, over its abstract copy.

    The returned representation's algebra is `subalgebra_structure(parent,
    h.basis)[0]`; use that call to recover the embedding.
    """
    if h.parent != rep.algebra:
        raise ValueError("subspace belongs to a different algebra")
    if not h.is_subalgebra():
        raise ValueError("restriction requires a subalgebra")
    sub, _ = subalgebra_structure(h.parent, h.basis)
    return Representation(sub, [rep.action_of(v) for v in h.basis], dim=rep.dim)


@dataclass(frozen=True)
class SubQuotient:
    sub: Representation
    quotient: Representation
    inclusion: Matrix   # M-coordinates of the U basis (columns)
    projection: Matrix  # quotient coordinates of M vectors


def sub_and_quotient_rep(rep: Representation, u_vectors) -> SubQuotient:
    """Induced actions on an invariant subspace U and on M/U."""
    u = echelon_basis([vector(v) for v in u_vectors], rep.dim)
    k = len(u)
    m = rep.dim
    for a in rep.action:
        for v in u:
            if not in_span(u, a.mul_vec(v)):
                raise ValueError("subspace is not invariant under the action")
    comp_idx = extend_to_standard_basis(u, m)
    cols = list(u) + [basis_vector(m, j) for j in comp_idx]
    b = Matrix.from_cols(cols, rows=m)
    binv = solve_matrix(b, Matrix.identity(m))
    assert binv is not None
    proj = Matrix.from_rows(binv.entries[k:], cols=m) if k < m else Matrix.zero(0, m)
    inc = Matrix.from_cols(list(u), rows=m) if k else Matrix.zero(m, 0)
    sub_action, quot_action = [], []
    for a in rep.action:
        sub_cols = []
        for v in u:
            coords = binv.mul_vec(a.mul_vec(v))
            sub_cols.append(coords[:k])
        sub_action.append(Matrix.from_cols(sub_cols, rows=k) if k else Matrix.zero(0, 0))
        q_cols = [proj.mul_vec(a.mul_vec(basis_vector(m, j))) for j in comp_idx]
        quot_action.append(Matrix.from_cols(q_cols, rows=m - k) if k < m else Matrix.zero(0, 0))
    return SubQuotient(
        sub=Representation(rep.algebra, sub_action),
        quotient=Representation(rep.algebra, quot_action),
        inclusion=inc,
        projection=proj,
    )


def invariants(rep: Representation, over: Subspace | None = None) -> list[Vector]:
    """Basis of {v : rho(x) v = 0 for x in the subalgebra} (default: whole g)."""
    if over is None:
        mats = list(rep.action)
    else:
        if over.parent != rep.algebra:
            raise ValueError("subspace belongs to a different algebra")
        mats = [rep.action_of(v) for v in over.basis]
    if not mats:
        return [basis_vector(rep.dim, i) for i in range(rep.dim)]
    return Matrix.stack(mats, cols=rep.dim).null_space()


def equivariant_homs(m: Representation, n: Representation,
                     over: Subspace | None = None) -> tuple[int, list[Matrix]]:
    """Dimension and basis of Hom(M, N) invariant under the given subalgebra."""
    if m.algebra != n.algebra:
        raise ValueError("modules live over different algebras")
    hom = hom_rep(m, n)
    basis = invariants(hom, over)
    return len(basis), [hom_vector_to_matrix(v, m.dim, n.dim) for v in basis]
