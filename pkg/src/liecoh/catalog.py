"""Built-in constructors for the named algebras used by tests and checks.

Names accept an optional integer parameter in the form "name(k)"; `make`
parses that shape.  Every constructed algebra is Jacobi-verified before it
leaves this module.  Entries carry metadata flags consumed by the checkers
(e.g. whether the radical is declared irreducible for the H^1 dimension
comparison) -- these are declarations, not computed facts.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .linalg import Matrix
from .liealg import LieAlgebra, semidirect_product, validate_structure
from .repn import Representation


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    algebra: LieAlgebra
    flags: frozenset[str]
    description: str


def abelian(n: int) -> LieAlgebra:
    return LieAlgebra(n, {}, [f"a{i}" for i in range(n)], name=f"abelian({n})")


def heisenberg(dim: int) -> LieAlgebra:
    """h_{2k+1}: [x_i, y_i] = z."""
    if dim < 3 or dim % 2 == 0:
        raise ValueError("heisenberg dimension must be odd and at least 3")
    k = (dim - 1) // 2
    names = [f"x{i + 1}" for i in range(k)] + [f"y{i + 1}" for i in range(k)] + ["z"]
    brackets = {(i, k + i): {2 * k: 1} for i in range(k)}
    return LieAlgebra(dim, brackets, names, name=f"heisenberg({dim})")


def r2() -> LieAlgebra:
    """The 2-dimensional non-abelian algebra: [t, x] = x."""
    return LieAlgebra(2, {(0, 1): {1: 1}}, ["t", "x"], name="r2")


def sl2() -> LieAlgebra:
    """(h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h."""
    brackets = {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}}
    return LieAlgebra(3, brackets, ["h", "e", "f"], name="sl2")


def so3() -> LieAlgebra:
    """[e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2."""
    brackets = {(0, 1): {2: 1}, (1, 2): {0: 1}, (0, 2): {1: -1}}
    return LieAlgebra(3, brackets, ["e1", "e2", "e3"], name="so3")


def oscillator() -> LieAlgebra:
    """Dim 4 solvable: [t,x] = y, [t,y] = -x, [x,y] = z.

    Its radical is the whole algebra but is not nilpotent, while the
    nilradical is the Heisenberg ideal span(x, y, z); ad(t) has irrational
    eigenvalue structure over Q, which exercises the associative-closure
    nilradical path.
    """
    brackets = {(0, 1): {2: 1}, (0, 2): {1: -1}, (1, 2): {3: 1}}
    return LieAlgebra(4, brackets, ["t", "x", "y", "z"], name="oscillator(4)")


def _matrix_algebra(basis_mats: list[Matrix], names: list[str], name: str) -> LieAlgebra:
    """Lie algebra of matrices under commutator, on the given basis."""
    flat = Matrix.from_cols([tuple(x for row in b.entries for x in row) for b in basis_mats])
    brackets = {}
    for i in range(len(basis_mats)):
        for j in range(i + 1, len(basis_mats)):
            comm = basis_mats[i] * basis_mats[j] - basis_mats[j] * basis_mats[i]
            coords = flat.solve(tuple(x for row in comm.entries for x in row))
            if coords is None:
                raise ValueError("matrix basis is not closed under commutators")
            entry = {k: c for k, c in enumerate(coords) if c}
            if entry:
                brackets[(i, j)] = entry
    return LieAlgebra(len(basis_mats), brackets, names, name=name)


def _unit(n: int, i: int, j: int) -> Matrix:
    return Matrix.from_sparse(n, n, {(i, j): 1})


def gln(n: int) -> LieAlgebra:
    if n < 1:
        raise ValueError("gln needs n >= 1")
    mats, names = [], []
    for i in range(n):
        for j in range(n):
            mats.append(_unit(n, i, j))
            names.append(f"E{i + 1}{j + 1}")
    return _matrix_algebra(mats, names, name=f"gln({n})")


def sln(n: int) -> LieAlgebra:
    if n < 2:
        raise ValueError("sln needs n >= 2")
    mats, names = [], []
    for i in range(n):
        for j in range(n):
            if i != j:
                mats.append(_unit(n, i, j))
                names.append(f"E{i + 1}{j + 1}")
    for i in range(n - 1):
        mats.append(_unit(n, i, i) - _unit(n, i + 1, i + 1))
        names.append(f"H{i + 1}")
    return _matrix_algebra(mats, names, name=f"sln({n})")


def affine(n: int) -> LieAlgebra:
    """aff(n) = gln(n) acting naturally on the n-dimensional abelian algebra."""
    g = gln(n)
    v = abelian(n)
    action = Representation(
        g, [_unit(n, i, j) for i in range(n) for j in range(n)], dim=n)
    out = semidirect_product(g, v, action)
    return out.renamed(f"affine({n})")


def sl2_irrep_matrices(m: int) -> tuple[Matrix, Matrix, Matrix]:
    """Integer action of (h, e, f) on the (m+1)-dimensional irreducible module.

    h v_k = (m - 2k) v_k, e v_k = (m - k + 1) v_{k-1}, f v_k = (k + 1) v_{k+1}.
    """
    d = m + 1
    h = Matrix.diagonal([m - 2 * k for k in range(d)])
    e = Matrix.from_sparse(d, d, {(k - 1, k): m - k + 1 for k in range(1, d)})
    f = Matrix.from_sparse(d, d, {(k + 1, k): k + 1 for k in range(d - 1)})
    return h, e, f


def sl2_semidirect_irrep(m: int) -> LieAlgebra:
    """sl2 acting irreducibly on an (m+1)-dimensional abelian radical."""
    if m < 0:
        raise ValueError("highest weight must be nonnegative")
    s = sl2()
    v = abelian(m + 1)
    action = Representation(s, sl2_irrep_matrices(m), dim=m + 1)
    out = semidirect_product(s, v, action)
    return out.renamed(f"sl2_semidirect_irrep({m})")


def sl2_semidirect_heisenberg() -> LieAlgebra:
    """sl2 acting on h_3 by derivations: the natural module on span(x, y),
    trivially on the center."""
    s = sl2()
    h3 = heisenberg(3)
    h, e, f = sl2_irrep_matrices(1)
    pad = [Matrix.from_sparse(3, 3, {(i, j): mat[i, j]
                                     for i in range(2) for j in range(2)})
           for mat in (h, e, f)]
    action = Representation(s, pad, dim=3)
    out = semidirect_product(s, h3, action)
    return out.renamed("sl2_semidirect_heisenberg")


_PARAM_RE = re.compile(r"^([a-z0-9_]+)\s*(?:\(\s*(\d+)\s*\))?$")

_BUILDERS = {
    "abelian": (abelian, True),
    "heisenberg": (heisenberg, True),
    "r2": (r2, False),
    "sl2": (sl2, False),
    "so3": (so3, False),
    "sln": (sln, True),
    "gln": (gln, True),
    "affine": (affine, True),
    "oscillator": (oscillator, False),
    "sl2_semidirect_irrep": (sl2_semidirect_irrep, True),
    "sl2_semidirect_heisenberg": (sl2_semidirect_heisenberg, False),
}

_FLAGS = {
    "sl2": {"semisimple"},
    "so3": {"semisimple"},
    "sln": {"semisimple"},
    "gln": {"prop3.8-hypothesis-holds"},
    "affine": {"complete", "non-perfect"},
    "sl2_semidirect_irrep": {"prop3.8-hypothesis-holds", "absolutely-irreducible-radical",
                             "perfect"},
    "sl2_semidirect_heisenberg": {"perfect", "nilpotent-radical"},
    "heisenberg": {"nilpotent"},
    "oscillator": {"solvable"},
    "abelian": {"abelian"},
    "r2": {"complete", "solvable"},
}


def list_names() -> list[str]:
    return sorted(_BUILDERS)


def make(name: str) -> CatalogEntry:
    """Construct a catalog entry from a name like "sl2" or "affine(2)"."""
    m = _PARAM_RE.match(name.strip())
    if not m:
        raise KeyError(f"unknown catalog name: {name!r}")
    base, param = m.group(1), m.group(2)
    if base not in _BUILDERS:
        raise KeyError(f"unknown catalog name: {name!r}")
    builder, wants_param = _BUILDERS[base]
    if wants_param:
        if param is None:
            raise KeyError(f"{base} requires a parameter, e.g. {base}(2)")
        alg = builder(int(param))
    else:
        if param is not None and base == "oscillator" and param != "4":
            raise KeyError("oscillator is only available in dimension 4")
        if param is not None and base not in ("oscillator",):
            raise KeyError(f"{base} takes no parameter")
        alg = builder()
    bad = validate_structure(alg)
    if bad:
        raise RuntimeError(f"internal error: catalog algebra {name} fails Jacobi")
    return CatalogEntry(
        name=alg.name,
        algebra=alg,
        flags=frozenset(_FLAGS.get(base, set())),
        description=(builder.__doc__ or "").strip().splitlines()[0] if builder.__doc__ else "",
    )


def default_entries() -> list[CatalogEntry]:
    """The fixed roster used by the test-suite sweeps."""
    names = [
        "abelian(1)", "abelian(2)", "abelian(3)",
        "r2", "sl2", "so3", "heisenberg(3)", "oscillator(4)",
        "gln(2)", "affine(1)", "affine(2)",
        "sl2_semidirect_irrep(1)", "sl2_semidirect_irrep(2)",
        "sl2_semidirect_heisenberg", "heisenberg(5)",
    ]
    return [make(n) for n in names]
