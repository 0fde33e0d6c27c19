"""Leibniz (co)chain complexes of a Lie algebra with a degree cap.

Degree-p cochains are Hom(g^{(x)p}, M); tensor tuples are ordered
lexicographically, i.e. a tuple is its base-n numeral.  Unlike the
Chevalley-Eilenberg complex, this one does not terminate at dim g, so a
maximal degree and a resource cap are part of the input; Betti numbers at
the top degree lack the outgoing differential and are flagged as bounds.

The module coefficient is an ordinary left module viewed as a symmetric
bimodule (right action = minus left action).  The cochain differential is
the Loday convention

  (d f)(x_1..x_{p+1}) = sum_{i<=p} (-1)^{i+1} x_i . f(..x_i^..)
      + (-1)^{p+1} f(x_1..x_p) . x_{p+1}
      + sum_{i<j} (-1)^i f(x_1, .., x_i^, .., [x_i,x_j] at slot j, ..),

pinned operationally by d o d = 0 and agreement with Lie cohomology in
degree one; the homology boundary is its formal dual.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .linalg import Matrix, ZERO
from .liealg import LieAlgebra
from .repn import Representation
from .cohomology import ChainComplex, CohomologyResult, cohomology_of

DEFAULT_MAX_DEGREE = 4
DEFAULT_RESOURCE_CAP = 2_000_000


class ResourceCapExceeded(Exception):
    """A differential would exceed the entry-count cap."""

    def __init__(self, degree: int, needed: int, cap: int):
        self.degree = degree
        self.needed = needed
        self.cap = cap
        super().__init__(
            f"differential into degree {degree} needs {needed} entries (cap {cap})")


@dataclass(frozen=True)
class LeibnizComplexSpec:
    algebra: LieAlgebra
    module: Representation
    max_degree: int = DEFAULT_MAX_DEGREE
    resource_cap: int = DEFAULT_RESOURCE_CAP

    def __post_init__(self):
        if self.module.algebra != self.algebra:
            raise ValueError("module is over a different algebra")
        if self.max_degree < 1:
            raise ValueError("max_degree must be at least 1")


def _tuple_index(t: tuple[int, ...], n: int) -> int:
    idx = 0
    for x in t:
        idx = idx * n + x
    return idx


@lru_cache(maxsize=None)
def _bracket_expansions(g: LieAlgebra) -> dict[int, list[tuple[int, int, Fraction]]]:
    """For each target k, all ordered pairs (x, y) with [b_x, b_y] = .. + c b_k + .."""
    out: dict[int, list[tuple[int, int, Fraction]]] = {k: [] for k in range(g.dim)}
    for (i, j), row in g.bracket_table.items():
        for k, c in row.items():
            out[k].append((i, j, c))
            out[k].append((j, i, -c))
    return out


def _check_cap(spec: LeibnizComplexSpec, degree: int, rows: int, cols: int) -> None:
    if rows * cols > spec.resource_cap:
        raise ResourceCapExceeded(degree, rows * cols, spec.resource_cap)


@lru_cache(maxsize=None)
def leibniz_cochain_complex(spec: LeibnizComplexSpec) -> ChainComplex:
    g, m = spec.algebra, spec.module
    n, md = g.dim, m.dim
    degrees = [n ** p * md for p in range(spec.max_degree + 1)]
    rho_cols = [
        [[(b, mat[b, a]) for b in range(md) if mat[b, a]] for a in range(md)]
        for mat in m.action
    ]
    expansions = _bracket_expansions(g)
    maps = []
    for p in range(spec.max_degree):
        rows, cols = degrees[p + 1], degrees[p]
        _check_cap(spec, p + 1, rows, cols)
        data: dict[tuple[int, int], Fraction] = {}
        for w in product(range(n), repeat=p):
            w_base = _tuple_index(w, n) * md
            # left module action: x inserted at slot i (1-based i <= p)
            for i0 in range(p):
                sgn = -1 if i0 % 2 else 1  # (-1)^{(i0+1)+1}
                for x in range(n):
                    u = w[:i0] + (x,) + w[i0:]
                    u_base = _tuple_index(u, n) * md
                    for a in range(md):
                        for b, val in rho_cols[x][a]:
                            key = (u_base + b, w_base + a)
                            data[key] = data.get(key, ZERO) + sgn * val
            # symmetric right action by the appended last argument
            sgn = -1 if p % 2 else 1  # (-1)^{p+1} * (-1) from f(..).x = -x.f(..)
            for x in range(n):
                u = w + (x,)
                u_base = _tuple_index(u, n) * md
                for a in range(md):
                    for b, val in rho_cols[x][a]:
                        key = (u_base + b, w_base + a)
                        data[key] = data.get(key, ZERO) + sgn * val
            # bracket substitution: x at slot i, y bracketed into slot q of w
            for q in range(p):
                pairs = expansions[w[q]]
                for i0 in range(q + 1):
                    sgn = 1 if i0 % 2 else -1  # (-1)^{i0+1}
                    for x, y, c in pairs:
                        u = w[:i0] + (x,) + w[i0:q] + (y,) + w[q + 1:]
                        u_base = _tuple_index(u, n) * md
                        for a in range(md):
                            key = (u_base + a, w_base + a)
                            data[key] = data.get(key, ZERO) + sgn * c
        maps.append(Matrix.from_sparse(rows, cols, data))
    return ChainComplex(degrees, maps, "cochain")


@lru_cache(maxsize=None)
def leibniz_chain_complex(spec: LeibnizComplexSpec) -> ChainComplex:
    """Chains g^{(x)p} (x) M with the boundary dual to the cochain convention:

    d(x_1.. x_p (x) v) = sum_i (-1)^i (..x_i^..) (x) x_i.v
        + sum_{i<j} (-1)^i (.. x_i^ .., [x_i,x_j] at slot j, ..) (x) v.
    """
    g, m = spec.algebra, spec.module
    n, md = g.dim, m.dim
    degrees = [n ** p * md for p in range(spec.max_degree + 1)]
    rho_cols = [
        [[(b, mat[b, a]) for b in range(md) if mat[b, a]] for a in range(md)]
        for mat in m.action
    ]
    maps = []
    for p in range(1, spec.max_degree + 1):
        rows, cols = degrees[p - 1], degrees[p]
        _check_cap(spec, p, rows, cols)
        data: dict[tuple[int, int], Fraction] = {}
        for w in product(range(n), repeat=p):
            w_base = _tuple_index(w, n) * md
            for i0 in range(p):
                v = w[:i0] + w[i0 + 1:]
                v_base = _tuple_index(v, n) * md
                sgn = -1 if (i0 + 1) % 2 else 1  # (-1)^i, 1-based slot
                for a in range(md):
                    for b, val in rho_cols[w[i0]][a]:
                        key = (v_base + b, w_base + a)
                        data[key] = data.get(key, ZERO) + sgn * val
            for i0 in range(p):
                for j0 in range(i0 + 1, p):
                    sgn = -1 if (i0 + 1) % 2 else 1  # (-1)^{i0+1}
                    for l, c in g.bracket_basis(w[i0], w[j0]).items():
                        v = w[:i0] + w[i0 + 1:j0] + (l,) + w[j0 + 1:]
                        v_base = _tuple_index(v, n) * md
                        for a in range(md):
                            key = (v_base + a, w_base + a)
                            data[key] = data.get(key, ZERO) + sgn * c
        maps.append(Matrix.from_sparse(rows, cols, data))
    return ChainComplex(degrees, maps, "chain")


@lru_cache(maxsize=None)
def leibniz_cohomology(spec: LeibnizComplexSpec) -> CohomologyResult:
    """HL^p for p < max_degree exact; the top degree is flagged as a bound."""
    cx = leibniz_cochain_complex(spec)
    return cohomology_of(cx, inexact_top=spec.max_degree)


@lru_cache(maxsize=None)
def leibniz_homology(spec: LeibnizComplexSpec) -> CohomologyResult:
    """HL_p for p < max_degree exact; the top degree is flagged as a bound."""
    cx = leibniz_chain_complex(spec)
    return cohomology_of(cx, inexact_top=spec.max_degree)
