"""Matrix exponentials by finite elements in artificial time.

The exponential of a square complex matrix is computed as the endpoint of
an initial-value problem integrated over a unit artificial-time interval,
using finite elements in time and an integrated-Chebyshev basis on each
element.  ``expm`` is the main entry point; ``expm_taylor_squaring`` is an
independent reference implementation used for validation.
"""

from .basis import BasisTables, build_tables, chebyshev_t, integrated_chebyshev
from .dense import (
    LuFactorization,
    SingularMatrixError,
    as_complex_matrix,
    lu_factor,
    lu_solve,
    mat_mul,
    max_abs_diff,
)
from .matio import MatrixParseError, format_matrix, load_matrix, parse_matrix
from .mesh import TimeMesh, uniform_mesh
from .oracles import (
    EXACT_EXPM,
    NAMED_MATRICES,
    exact_m1,
    exact_m2,
    exact_unit2,
    expm_taylor_squaring,
    m1,
    m2,
    m3,
    m4,
    unit2,
)
from .propagator import (
    ExpmReport,
    PropagatorFactorization,
    assemble_rhs,
    assemble_system,
    build_factorization,
    expm,
    propagate_element,
)
from .studies import StudyRow, TABLE1_STEPS, min_basis_for_tolerance, sweep, table1

__version__ = "1.0.0"

__all__ = [
    "BasisTables",
    "EXACT_EXPM",
    "ExpmReport",
    "LuFactorization",
    "MatrixParseError",
    "NAMED_MATRICES",
    "PropagatorFactorization",
    "SingularMatrixError",
    "StudyRow",
    "TABLE1_STEPS",
    "TimeMesh",
    "as_complex_matrix",
    "assemble_rhs",
    "assemble_system",
    "build_factorization",
    "build_tables",
    "chebyshev_t",
    "exact_m1",
    "exact_m2",
    "exact_unit2",
    "expm",
    "expm_taylor_squaring",
    "format_matrix",
    "integrated_chebyshev",
    "load_matrix",
    "lu_factor",
    "lu_solve",
    "m1",
    "m2",
    "m3",
    "m4",
    "mat_mul",
    "max_abs_diff",
    "min_basis_for_tolerance",
    "parse_matrix",
    "propagate_element",
    "sweep",
    "table1",
    "uniform_mesh",
    "unit2",
]
