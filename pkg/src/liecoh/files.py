"""File formats: algebras and modules as JSON with string-encoded rationals.

An algebra file looks like

    {"name": "heisenberg(3)", "dim": 3, "basis": ["x", "y", "z"],
     "brackets": {"0,1": {"2": "1"}}}

with 0-based indices, bracket keys "i,j" for i < j only, and every rational
written as "p" or "p/q" (sign on the numerator; no floats ever).  A module
file gives one dim(M) x dim(M) action matrix per basis element of the paired
algebra, each as a flat row-major array of rational strings.

Parse errors carry the JSON-path location of the offending value.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .linalg import Matrix
from .liealg import LieAlgebra, validate_structure
from .repn import Representation, validate_representation
from .checks import CheckResult, HuntReport

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


class InputError(ValueError):
    """Malformed or invalid input file; `location` is a JSON-ish path."""

    def __init__(self, message: str, location: str = ""):
        self.location = location
        self.message = message
        super().__init__(f"{location}: {message}" if location else message)


def parse_rational(s, location: str = "") -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str) or not _RATIONAL_RE.match(s.strip()):
        raise InputError(f"not a rational string: {s!r}", location)
    s = s.strip()
    if "/" in s:
        num, den = s.split("/")
        if int(den) == 0:
            raise InputError(f"zero denominator in {s!r}", location)
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def rational_str(x: Fraction) -> str:
    return str(x)


def parse_algebra_dict(data: dict, name: str | None = None) -> LieAlgebra:
    if not isinstance(data, dict):
        raise InputError("algebra file must be a JSON object")
    try:
        dim = int(data["dim"])
    except (KeyError, TypeError, ValueError):
        raise InputError("missing or invalid 'dim'", "dim")
    if dim < 0:
        raise InputError("'dim' must be nonnegative", "dim")
    basis = data.get("basis")
    if basis is not None:
        if not isinstance(basis, list) or len(basis) != dim:
            raise InputError(f"'basis' must list exactly {dim} names", "basis")
    brackets = {}
    raw = data.get("brackets", {})
    if not isinstance(raw, dict):
        raise InputError("'brackets' must be an object", "brackets")
    for key, entry in raw.items():
        loc = f"brackets[{key!r}]"
        m = re.match(r"^\s*(\d+)\s*,\s*(\d+)\s*$", str(key))
        if not m:
            raise InputError("bracket keys must look like 'i,j'", loc)
        i, j = int(m.group(1)), int(m.group(2))
        if not (0 <= i < j < dim):
            raise InputError(f"need 0 <= i < j < {dim}", loc)
        if not isinstance(entry, dict):
            raise InputError("bracket value must map k -> rational", loc)
        row = {}
        for k, c in entry.items():
            kloc = f"{loc}[{k!r}]"
            try:
                ki = int(k)
            except (TypeError, ValueError):
                raise InputError("component keys must be integers", kloc)
            if not 0 <= ki < dim:
                raise InputError(f"component index out of range 0..{dim - 1}", kloc)
            row[ki] = parse_rational(c, kloc)
        brackets[(i, j)] = row
    g = LieAlgebra(dim, brackets, basis, name=name or data.get("name", "algebra"))
    violations = validate_structure(g)
    if violations:
        triples = ", ".join(str(v.triple) for v in violations[:5])
        raise InputError(f"Jacobi identity fails at triples {triples}", "brackets")
    return g


def algebra_to_dict(g: LieAlgebra) -> dict:
    brackets = {}
    for (i, j), row in sorted(g.bracket_table.items()):
        brackets[f"{i},{j}"] = {str(k): rational_str(c) for k, c in sorted(row.items())}
    return {
        "name": g.name,
        "dim": g.dim,
        "basis": list(g.basis_names),
        "brackets": brackets,
    }


def parse_module_dict(data: dict, g: LieAlgebra) -> Representation:
    if not isinstance(data, dict):
        raise InputError("module file must be a JSON object")
    try:
        dim = int(data["dim"])
    except (KeyError, TypeError, ValueError):
        raise InputError("missing or invalid 'dim'", "dim")
    if dim < 0:
        raise InputError("'dim' must be nonnegative", "dim")
    action = data.get("action")
    if not isinstance(action, list) or len(action) != g.dim:
        raise InputError(f"'action' must list {g.dim} matrices", "action")
    mats = []
    for idx, flat in enumerate(action):
        loc = f"action[{idx}]"
        if not isinstance(flat, list) or len(flat) != dim * dim:
            raise InputError(f"matrix must be a flat row-major array of {dim * dim} rationals", loc)
        vals = [parse_rational(x, f"{loc}[{t}]") for t, x in enumerate(flat)]
        mats.append(Matrix(dim, dim, [vals[r * dim:(r + 1) * dim] for r in range(dim)]))
    rep = Representation(g, mats, dim=dim)
    bad = validate_representation(rep)
    if bad:
        raise InputError(f"not a representation: commutator identity fails at pairs {bad[:5]}",
                         "action")
    return rep


def module_to_dict(rep: Representation) -> dict:
    return {
        "dim": rep.dim,
        "action": [[rational_str(x) for row in mat.entries for x in row]
                   for mat in rep.action],
    }


def matrix_to_dict(m: Matrix) -> dict:
    return {"rows": m.rows, "cols": m.cols,
            "entries": [rational_str(x) for row in m.entries for x in row]}


def _jsonable(value):
    if isinstance(value, Matrix):
        return matrix_to_dict(value)
    if isinstance(value, Fraction):
        return rational_str(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def check_result_to_dict(res: CheckResult) -> dict:
    return {
        "check_id": res.check_id,
        "algebra_id": res.algebra_id,
        "degrees": list(res.degrees),
        "lhs_dims": list(res.lhs_dims),
        "rhs_dims": list(res.rhs_dims),
        "verdict": res.verdict,
        "detail": res.detail,
        "witness": _jsonable(res.witness) if res.witness is not None else None,
        "flagged": res.flagged,
    }


def hunt_report_to_dict(report: HuntReport) -> dict:
    return {
        "family": report.family,
        "seed": report.seed,
        "count": report.count,
        "checks": list(report.checks),
        "failures": [
            {"algebra": alg, "result": check_result_to_dict(res)}
            for alg, res in report.failures
        ],
    }
