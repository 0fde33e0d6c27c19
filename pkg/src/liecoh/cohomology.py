"""Chevalley-Eilenberg (co)chain complexes and their Betti numbers.

Degree-p cochains are Hom(Lambda^p g, M); the basis of Lambda^p g consists
of the lexicographically ordered index subsets, and a cochain coordinate is
indexed by (subset, module index) flattened as subset_index * dim(M) + a.

Sign conventions (the classical ones, pinned by the degree-0/1 behavior):

* cochains:  (d f)(x_0..x_p) = sum_i (-1)^i x_i.f(..x_i^..)
             + sum_{i<j} (-1)^{i+j} f([x_i,x_j], .. x_i^ .. x_j^ ..)
  so that (d v)(x) = x.v and (d f)(x,y) = x.f(y) - y.f(x) - f([x,y]).
* chains:    the formally dual boundary on Lambda^p g (x) M.

On top of the plain Betti computation this module provides representative
cocycles, the induced module structure of g/a on H^q(a, M) for an ideal a,
cohomology of an invariant subcomplex, and the Hochschild-Serre E2 grid of
dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .linalg import Matrix, Vector, ZERO, echelon_basis, in_span, vector
from .liealg import LieAlgebra, QuotientData, Subspace, is_derivation, quotient_algebra, subalgebra_structure
from .repn import Representation


@lru_cache(maxsize=None)
def _subsets(n: int, p: int) -> tuple[tuple[int, ...], ...]:
    return tuple(combinations(range(n), p))


@lru_cache(maxsize=None)
def _subset_index(n: int, p: int) -> dict[tuple[int, ...], int]:
    return {s: i for i, s in enumerate(_subsets(n, p))}


class ChainComplex:
    """A finite graded complex; maps[t] connects degrees t and t+1.

    orientation 'cochain': maps[t] sends degree t to t+1 (shape d_{t+1} x d_t);
    orientation 'chain':   maps[t] sends degree t+1 to t (shape d_t x d_{t+1}).
    """

    __slots__ = ("degrees", "maps", "orientation")

    def __init__(self, degrees, maps, orientation: str):
        degrees = tuple(int(d) for d in degrees)
        maps = tuple(maps)
        if orientation not in ("cochain", "chain"):
            raise ValueError("orientation must be 'cochain' or 'chain'")
        if len(maps) != max(len(degrees) - 1, 0):
            raise ValueError("need exactly one map between consecutive degrees")
        for t, m in enumerate(maps):
            lo, hi = degrees[t], degrees[t + 1]
            want = (hi, lo) if orientation == "cochain" else (lo, hi)
            if (m.rows, m.cols) != want:
                raise ValueError(f"map {t} has shape {(m.rows, m.cols)}, expected {want}")
        object.__setattr__(self, "degrees", degrees)
        object.__setattr__(self, "maps", maps)
        object.__setattr__(self, "orientation", orientation)

    def __setattr__(self, *a):
        raise AttributeError("ChainComplex is immutable")

    @property
    def top(self) -> int:
        return len(self.degrees) - 1

    def is_complex(self) -> bool:
        """d o d == 0 in every composable degree."""
        for t in range(len(self.maps) - 1):
            if self.orientation == "cochain":
                prod = self.maps[t + 1] * self.maps[t]
            else:
                prod = self.maps[t] * self.maps[t + 1]
            if not prod.is_zero():
                return False
        return True

    def euler_characteristic(self) -> int:
        return sum((-1) ** p * d for p, d in enumerate(self.degrees))


@dataclass
class CohomologyResult:
    """Betti numbers per degree, with the ambient complex dimensions.

    When `inexact_top` is set, the value reported at that degree was computed
    with the missing outgoing differential treated as zero; it bounds the true
    dimension but is not asserted to be exact.
    """

    betti: dict[int, int]
    dims: dict[int, int]
    representatives: dict[int, list[Vector]] | None = None
    inexact_top: int | None = None

    def betti_list(self) -> list[int]:
        return [self.betti[p] for p in sorted(self.betti)]

    def dims_list(self) -> list[int]:
        return [self.dims[p] for p in sorted(self.dims)]

    def is_zero(self, degrees=None) -> bool:
        ps = sorted(self.betti) if degrees is None else degrees
        return all(self.betti[p] == 0 for p in ps)

    def euler_characteristic(self) -> int:
        return sum((-1) ** p * b for p, b in self.betti.items())


def _adjacent_ranks(cx: ChainComplex) -> list[int]:
    return [m.rank() for m in cx.maps]


def cohomology_of(cx: ChainComplex, with_representatives: bool = False,
                  inexact_top: int | None = None) -> CohomologyResult:
    """Betti numbers of a finite complex: dim_p - rank(adjacent maps)."""
    ranks = _adjacent_ranks(cx)
    betti = {}
    for p, d in enumerate(cx.degrees):
        r_lo = ranks[p - 1] if p >= 1 else 0
        r_hi = ranks[p] if p < len(ranks) else 0
        b = d - r_lo - r_hi
        if b < 0:
            raise RuntimeError("internal error: negative Betti number (not a complex?)")
        betti[p] = b
    reps = None
    if with_representatives:
        reps = {p: _representatives(cx, p) for p in range(len(cx.degrees))}
    return CohomologyResult(
        betti=betti,
        dims={p: d for p, d in enumerate(cx.degrees)},
        representatives=reps,
        inexact_top=inexact_top,
    )


def _kernel_basis(cx: ChainComplex, p: int) -> list[Vector]:
    """Basis of the (co)cycles in degree p."""
    if cx.orientation == "cochain":
        out = cx.maps[p] if p < len(cx.maps) else None
    else:
        out = cx.maps[p - 1] if p >= 1 else None
    if out is None:
        n = cx.degrees[p]
        return [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    return out.null_space()


def _image_basis(cx: ChainComplex, p: int) -> list[Vector]:
    """Spanning set of the (co)boundaries in degree p (matrix columns)."""
    if cx.orientation == "cochain":
        inc = cx.maps[p - 1] if p >= 1 else None
    else:
        inc = cx.maps[p] if p < len(cx.maps) else None
    if inc is None:
        return []
    return [inc.col(j) for j in range(inc.cols)]


def _representatives(cx: ChainComplex, p: int) -> list[Vector]:
    """Cycles spanning a complement of the boundaries inside the kernel.

    Deterministic: kernel basis vectors are kept in order whenever they
    enlarge the span of the boundaries.
    """
    image = [v for v in _image_basis(cx, p) if any(v)]
    span = list(echelon_basis(image, cx.degrees[p])) if image else []
    reps = []
    for v in _kernel_basis(cx, p):
        if not in_span(span, v):
            reps.append(v)
            span = list(echelon_basis(span + [v], cx.degrees[p]))
    return reps


# ---------------------------------------------------------------------------
# Chevalley-Eilenberg complexes
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def ce_cochain_complex(g: LieAlgebra, m: Representation) -> ChainComplex:
    """C^p = Hom(Lambda^p g, M) for p = 0..dim g, with the standard differential."""
    if m.algebra != g:
        raise ValueError("module is over a different algebra")
    n, md = g.dim, m.dim
    degrees = [len(_subsets(n, p)) * md for p in range(n + 1)]
    rho_cols = [
        [[(b, mat[b, a]) for b in range(md) if mat[b, a]] for a in range(md)]
        for mat in m.action
    ]
    maps = []
    for p in range(n):
        col_index = _subset_index(n, p)
        row_sets = _subsets(n, p + 1)
        data: dict[tuple[int, int], Fraction] = {}
        for t_i, t in enumerate(row_sets):
            # module action terms: (-1)^i x_i . f(T \ i)
            for i, gen in enumerate(t):
                s_idx = col_index[t[:i] + t[i + 1:]]
                sgn = -1 if i % 2 else 1
                for a in range(md):
                    for b, val in rho_cols[gen][a]:
                        key = (t_i * md + b, s_idx * md + a)
                        data[key] = data.get(key, ZERO) + sgn * val
            # bracket contraction terms: (-1)^{i+j} f([x_i,x_j] ^ rest)
            for i in range(p + 1):
                for j in range(i + 1, p + 1):
                    rest = t[:i] + t[i + 1:j] + t[j + 1:]
                    base = -1 if (i + j) % 2 else 1
                    for l, c in g.bracket_basis(t[i], t[j]).items():
                        if l in rest:
                            continue
                        pos = sum(1 for x in rest if x < l)
                        s = tuple(sorted(rest + (l,)))
                        coef = base * c * (1 if pos % 2 == 0 else -1)
                        s_idx = col_index[s]
                        for a in range(md):
                            key = (t_i * md + a, s_idx * md + a)
                            data[key] = data.get(key, ZERO) + coef
        maps.append(Matrix.from_sparse(degrees[p + 1], degrees[p], data))
    return ChainComplex(degrees, maps, "cochain")


@lru_cache(maxsize=None)
def ce_chain_complex(g: LieAlgebra, m: Representation) -> ChainComplex:
    """C_p = Lambda^p g (x) M with the boundary dual to the cochain convention:

    d(y_1^..^y_p (x) v) = sum_i (-1)^i (..y_i^..) (x) y_i.v
      + sum_{i<j} (-1)^{i+j} [y_i,y_j]^(..y_i^..y_j^..) (x) v   (1-based signs).
    """
    if m.algebra != g:
        raise ValueError("module is over a different algebra")
    n, md = g.dim, m.dim
    degrees = [len(_subsets(n, p)) * md for p in range(n + 1)]
    rho_cols = [
        [[(b, mat[b, a]) for b in range(md) if mat[b, a]] for a in range(md)]
        for mat in m.action
    ]
    maps = []
    for p in range(1, n + 1):
        row_index = _subset_index(n, p - 1)
        col_sets = _subsets(n, p)
        data: dict[tuple[int, int], Fraction] = {}
        for s_i, s in enumerate(col_sets):
            for i, gen in enumerate(s):  # (-1)^{i+1} with 1-based = (-1)^(i+1), i 0-based
                r_idx = row_index[s[:i] + s[i + 1:]]
                sgn = 1 if i % 2 else -1
                for a in range(md):
                    for b, val in rho_cols[gen][a]:
                        key = (r_idx * md + b, s_i * md + a)
                        data[key] = data.get(key, ZERO) + sgn * val
            for i in range(p):
                for j in range(i + 1, p):
                    rest = s[:i] + s[i + 1:j] + s[j + 1:]
                    base = -1 if (i + j) % 2 else 1  # (-1)^{(i+1)+(j+1)} = (-1)^{i+j}
                    for l, c in g.bracket_basis(s[i], s[j]).items():
                        if l in rest:
                            continue
                        pos = sum(1 for x in rest if x < l)
                        r = tuple(sorted(rest + (l,)))
                        coef = base * c * (1 if pos % 2 == 0 else -1)
                        r_idx = row_index[r]
                        for a in range(md):
                            key = (r_idx * md + a, s_i * md + a)
                            data[key] = data.get(key, ZERO) + coef
        maps.append(Matrix.from_sparse(degrees[p - 1], degrees[p], data))
    return ChainComplex(degrees, maps, "chain")


@lru_cache(maxsize=None)
def ce_cohomology(g: LieAlgebra, m: Representation,
                  with_representatives: bool = False) -> CohomologyResult:
    return cohomology_of(ce_cochain_complex(g, m), with_representatives)


@lru_cache(maxsize=None)
def ce_homology(g: LieAlgebra, m: Representation) -> CohomologyResult:
    return cohomology_of(ce_chain_complex(g, m))


# ---------------------------------------------------------------------------
# cochain actions (Lie derivative) and induced modules on cohomology
# ---------------------------------------------------------------------------


def _cochain_action_matrix(n: int, md: int, q: int,
                           module_mat: Matrix, arg_mat: Matrix) -> Matrix:
    """Matrix on C^q(a, M) of f |-> y.f(..) - sum_t f(.., y.x_t, ..).

    `module_mat` is the action of y on M; `arg_mat` the action of y on the
    algebra underlying the complex (n = its dimension).
    """
    sets = _subsets(n, q)
    idx = _subset_index(n, q)
    dim = len(sets) * md
    data: dict[tuple[int, int], Fraction] = {}
    mod_nz = [
        [(b, module_mat[b, a]) for b in range(md) if module_mat[b, a]]
        for a in range(md)
    ]
    for t_i, t in enumerate(sets):
        for a in range(md):
            for b, val in mod_nz[a]:
                key = (t_i * md + b, t_i * md + a)
                data[key] = data.get(key, ZERO) + val
        for slot, gen in enumerate(t):
            rest = t[:slot] + t[slot + 1:]
            for l in range(n):
                w = arg_mat[l, gen]
                if not w or l in rest:
                    continue
                pos = sum(1 for x in rest if x < l)
                s = tuple(sorted(rest + (l,)))
                sgn = 1 if (slot - pos) % 2 == 0 else -1
                s_idx = idx[s]
                for a in range(md):
                    key = (t_i * md + a, s_idx * md + a)
                    data[key] = data.get(key, ZERO) - sgn * w
    return Matrix.from_sparse(dim, dim, data)


@dataclass
class InducedCohomologyAction:
    """g/a acting on each H^q(a, M) for an ideal a of g."""

    quotient: QuotientData
    cohomology: CohomologyResult           # of (a, M|_a), with representatives
    actions: tuple[Representation, ...]    # one per degree q


@lru_cache(maxsize=None)
def induced_action_on_cohomology(g: LieAlgebra, a: Subspace,
                                 m: Representation) -> InducedCohomologyAction:
    """Representation of g/a on H^q(a, M), computed on representative cocycles.

    Well-definedness is verified at runtime: the cochain action of every y
    maps coboundaries to coboundaries, and elements of a act as zero on
    cohomology (so the choice of coset representatives does not matter).
    """
    if a.parent != g or not a.is_ideal():
        raise ValueError("induced action requires an ideal of g")
    if m.algebra != g:
        raise ValueError("module is over a different algebra")
    qd = quotient_algebra(g, a)
    sub, emb = subalgebra_structure(g, a.basis)
    m_a = Representation(sub, [m.action_of(v) for v in a.basis], dim=m.dim)
    cx = ce_cochain_complex(sub, m_a)
    cohom = cohomology_of(cx, with_representatives=True)
    k = sub.dim

    def arg_matrix(y: Vector) -> Matrix:
        cols = []
        for v in a.basis:
            w = g.bracket(y, v)
            coords = emb.solve(w)
            if coords is None:
                raise RuntimeError("internal error: bracket left the ideal")
            cols.append(coords)
        return Matrix.from_cols(cols, rows=k) if cols else Matrix.zero(0, 0)

    section_vecs = [qd.section.col(j) for j in range(qd.section.cols)]
    actions = []
    for q in range(k + 1):
        reps = cohom.representatives[q]
        image = [v for v in _image_basis(cx, q) if any(v)]
        basis_mat = (Matrix.from_cols(list(reps) + image, rows=cx.degrees[q])
                     if reps or image else None)
        image_span = list(echelon_basis(image, cx.degrees[q])) if image else []

        def induced_matrix(y: Vector) -> Matrix:
            lmat = _cochain_action_matrix(k, m.dim, q, m.action_of(y), arg_matrix(y))
            for bv in image_span:
                if not in_span(image_span, lmat.mul_vec(bv)):
                    raise RuntimeError("internal error: cochain action does not preserve coboundaries")
            cols = []
            for r in reps:
                w = lmat.mul_vec(r)
                sol = basis_mat.solve(w)
                if sol is None:
                    raise RuntimeError("internal error: action of a cocycle is not a cocycle")
                cols.append(sol[:len(reps)])
            return Matrix.from_cols(cols, rows=len(reps)) if reps else Matrix.zero(0, 0)

        for v in a.basis:
            if not induced_matrix(v).is_zero():
                raise RuntimeError("internal error: ideal acts nontrivially on its cohomology")
        actions.append(Representation(
            qd.algebra, [induced_matrix(y) for y in section_vecs], dim=len(reps)))
    return InducedCohomologyAction(quotient=qd, cohomology=cohom, actions=tuple(actions))


def e2_page(g: LieAlgebra, a: Subspace, m: Representation) -> dict[tuple[int, int], int]:
    """Hochschild-Serre E2 dimensions: E2^{p,q} = dim H^p(g/a, H^q(a, M))."""
    ind = induced_action_on_cohomology(g, a, m)
    grid = {}
    for q, rep in enumerate(ind.actions):
        hq = ce_cohomology(ind.quotient.algebra, rep)
        for p, b in hq.betti.items():
            grid[(p, q)] = b
    return grid


@lru_cache(maxsize=None)
def invariant_subcomplex(r: LieAlgebra, m: Representation,
                         s_on_r: tuple[Matrix, ...],
                         s_on_m: tuple[Matrix, ...]) -> ChainComplex:
    """Subcomplex of C^*(r, M) cut out by an outer action.

    `s_on_r` / `s_on_m` give, for each generator of the acting algebra, its
    action on r (by derivations) and on M; the two must be compatible with
    the r-module structure, which makes the cochain actions commute with the
    differential so that the joint kernels form a subcomplex.
    """
    if m.algebra != r:
        raise ValueError("module is over a different algebra")
    if len(s_on_r) != len(s_on_m):
        raise ValueError("need matching action matrices on r and on M")
    for y_r, y_m in zip(s_on_r, s_on_m):
        if not is_derivation(r, y_r):
            raise ValueError("outer action on r is not by derivations")
        for x in range(r.dim):
            lhs = y_m * m.action[x] - m.action[x] * y_m
            rhs = m.action_of(y_r.col(x))
            if lhs != rhs:
                raise ValueError("outer action is incompatible with the module structure")
    cx = ce_cochain_complex(r, m)
    inv_bases = []
    for q in range(len(cx.degrees)):
        mats = [_cochain_action_matrix(r.dim, m.dim, q, y_m, y_r)
                for y_r, y_m in zip(s_on_r, s_on_m)]
        if mats:
            inv = Matrix.stack(mats, cols=cx.degrees[q]).null_space()
        else:
            inv = [vector([int(i == j) for j in range(cx.degrees[q])])
                   for i in range(cx.degrees[q])]
        inv_bases.append(inv)
    degrees = [len(b) for b in inv_bases]
    maps = []
    for q in range(len(cx.maps)):
        target = Matrix.from_cols(inv_bases[q + 1], rows=cx.degrees[q + 1]) \
            if inv_bases[q + 1] else None
        cols = []
        for v in inv_bases[q]:
            w = cx.maps[q].mul_vec(v)
            if target is None:
                if any(w):
                    raise RuntimeError("internal error: differential left the invariant subcomplex")
                cols.append(())
            else:
                sol = target.solve(w)
                if sol is None:
                    raise RuntimeError("internal error: differential left the invariant subcomplex")
                cols.append(sol)
        maps.append(Matrix.from_cols(cols, rows=degrees[q + 1])
                    if cols else Matrix.zero(degrees[q + 1], 0))
    return ChainComplex(degrees, maps, "cochain")


@lru_cache(maxsize=None)
def invariant_subcomplex_cohomology(r: LieAlgebra, m: Representation,
                                    s_on_r: tuple[Matrix, ...],
                                    s_on_m: tuple[Matrix, ...],
                                    with_representatives: bool = False) -> CohomologyResult:
    """Cohomology of the invariant subcomplex.  For a semisimple acting
    algebra this equals the invariants of the induced action on H^*(r, M)."""
    cx = invariant_subcomplex(r, m, s_on_r, s_on_m)
    return cohomology_of(cx, with_representatives)
