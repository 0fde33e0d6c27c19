"""Exact-arithmetic (co)homology of finite-dimensional Lie algebras.

Core layers:

* ``linalg``     -- exact rational matrices (rank / kernel / solve / det)
* ``liealg``     -- Lie algebra structure theory (series, Killing form,
                    radical, nilradical, derivations, Levi decomposition)
* ``repn``       -- representations and their functorial constructions
* ``cohomology`` -- Chevalley-Eilenberg (co)chain complexes and Betti numbers
* ``leibniz``    -- Leibniz (co)chain complexes with a degree cap
* ``catalog``    -- named example algebras
* ``checks``     -- instance checkers for the structural claims, plus the
                    randomized counterexample hunt
* ``service``    -- FastAPI front end
* ``cli``        -- command line client
"""

from .linalg import Matrix, Vector, frac, vector
from .liealg import (
    AlgebraReport,
    BilinearForm,
    LieAlgebra,
    Subspace,
    center,
    change_of_basis,
    derivations,
    derived_series,
    killing_form,
    levi_decomposition,
    lower_central_series,
    nilradical,
    quotient_algebra,
    radical,
    semidirect_product,
    structure_report,
    validate_structure,
)
from .repn import (
    Representation,
    adjoint_rep,
    dual_rep,
    equivariant_homs,
    hom_rep,
    invariants,
    restrict_rep,
    sub_and_quotient_rep,
    tensor_rep,
    trivial_rep,
    validate_representation,
)
from .cohomology import (
    ChainComplex,
    CohomologyResult,
    ce_cochain_complex,
    ce_chain_complex,
    ce_cohomology,
    ce_homology,
    e2_page,
    induced_action_on_cohomology,
    invariant_subcomplex,
    invariant_subcomplex_cohomology,
)
from .leibniz import (
    LeibnizComplexSpec,
    ResourceCapExceeded,
    leibniz_chain_complex,
    leibniz_cochain_complex,
    leibniz_cohomology,
    leibniz_homology,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
