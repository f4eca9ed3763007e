"""Element-by-element propagation that turns exponentiation into an IVP.

For a square matrix ``a``, the matrix function ``psi(t) = exp(a t)`` solves
``d(psi)/dt = a @ psi`` with ``psi(0) = I``, so ``exp(a)`` is reached by
integrating over an artificial unit time interval.  The interval is split
into elements; on each element every column of ``psi`` is expanded in the
integrated-Chebyshev basis on top of its value at the element's left edge,
which keeps the solution continuous across elements for free.

A weighted Galerkin projection of the differential equation couples the
``m`` basis coefficients of the ``n`` rows of one column into the block
system

    (scale * kron(deriv, I_n) - kron(overlap, a)) @ coeffs
        = kron(load, a @ psi_prev[:, j])

laid out basis-major: composite index ``mu * n + i`` addresses basis
function ``mu``, matrix row ``i``.  The system matrix depends only on
``a``, the element width and ``m``, so one LU factorization serves every
element and every column.  Column solves are independent of each other and
may run concurrently against the shared factorization; elements are
inherently sequential, each consuming the previous element's end value.
"""

from dataclasses import dataclass

import numpy as np

from .basis import BasisTables, build_tables
from .dense import LuFactorization, as_complex_matrix, lu_factor, lu_solve
from .mesh import uniform_mesh


@dataclass(frozen=True)
class PropagatorFactorization:
    """One element's assembled block system and its LU factors.

    Valid only for the (matrix, scale, basis-count) triple it was built
    from; reusing it across elements is sound exactly when all elements
    share the same width and the same matrix.
    """

    n: int
    m: int
    scale: float
    tables: BasisTables
    system: np.ndarray
    system_lu: LuFactorization


@dataclass(frozen=True)
class ExpmReport:
    """Result of a full propagation plus solve diagnostics.

    ``residuals`` holds, per element, the largest infinity-norm of
    ``system @ coeffs - rhs`` over the columns solved in that element,
    making ill-conditioning of the block system observable.
    """

    result: np.ndarray
    num_elements: int
    num_basis: int
    residuals: tuple


def assemble_system(a, scale: float, tables: BasisTables) -> np.ndarray:
    """Assemble the (n*m) x (n*m) block system matrix for one element.

    Block entry (mu', i), (mu, k) is
    ``scale * deriv[mu', mu] * (i == k) - a[i, k] * overlap[mu', mu]``.
    """
    a = as_complex_matrix(a)
    n, n_cols = a.shape
    if n != n_cols:
        raise ValueError(f"matrix must be square, got {a.shape}")
    if not scale > 0.0:
        raise ValueError("scale must be positive")
    with np.errstate(over="ignore", invalid="ignore"):
        system = scale * np.kron(tables.deriv, np.eye(n)) - np.kron(tables.overlap, a)
    if not np.isfinite(system).all():
        raise OverflowError("block system overflowed to non-finite values")
    return system


def assemble_rhs(a, psi_prev, load: np.ndarray, col: int) -> np.ndarray:
    """Right-hand side for one column of the block system.

    Entry at composite index (mu', i) is ``load[mu'] * (a @ psi_prev)[i, col]``.
    The matrix-vector product accumulates in plain ascending order so the
    result is reproducible entry for entry by a nested-loop construction.
    """
    a = as_complex_matrix(a)
    psi_prev = as_complex_matrix(psi_prev)
    n = a.shape[0]
    if a.shape != (n, n) or psi_prev.shape != (n, n):
        raise ValueError("matrix and state must be square and equally sized")
    if not 0 <= col < n:
        raise ValueError(f"column {col} out of range for size {n}")
    driven = np.einsum("ik,k->i", a, psi_prev[:, col])
    return np.kron(load, driven)


def build_factorization(a, scale: float, tables: BasisTables) -> PropagatorFactorization:
    """Assemble and LU-factor the element system once, for reuse across elements."""
    a = as_complex_matrix(a)
    system = assemble_system(a, scale, tables)
    return PropagatorFactorization(
        n=a.shape[0],
        m=tables.m,
        scale=float(scale),
        tables=tables,
        system=system,
        system_lu=lu_factor(system),
    )


def _advance(fact: PropagatorFactorization, a, psi_prev):
    """One element step: returns the new end value and the worst column residual."""
    n, m = fact.n, fact.m
    psi_new = psi_prev.copy()
    worst = 0.0
    for col in range(n):
        rhs = assemble_rhs(a, psi_prev, fact.tables.load, col)
        coeffs = lu_solve(fact.system_lu, rhs)
        resid = float(np.max(np.abs(fact.system @ coeffs - rhs)))
        worst = max(worst, resid)
        psi_new[:, col] += fact.tables.end_vals @ coeffs.reshape(m, n)
    return psi_new, worst


def propagate_element(fact: PropagatorFactorization, a, psi_prev) -> np.ndarray:
    """Advance the solution across one element.

    ``psi_prev`` is the solution at the element's left edge; the return
    value is the solution at its right edge, obtained by evaluating the
    basis expansion at local time +1 on top of ``psi_prev``.
    """
    a = as_complex_matrix(a)
    psi_prev = as_complex_matrix(psi_prev)
    if a.shape != (fact.n, fact.n) or psi_prev.shape != (fact.n, fact.n):
        raise ValueError("matrix and state must match the factorization size")
    psi_new, _ = _advance(fact, a, psi_prev)
    return psi_new


def expm(a, num_elements: int = 8, num_basis: int = 8) -> ExpmReport:
    """Exponential of a square complex matrix by element-wise propagation.

    Parameters
    ----------
    a : array_like
        Square matrix with finite entries, real or complex.
    num_elements : int
        Number of equal time elements covering the unit interval.
    num_basis : int
        Number of integrated-Chebyshev basis functions per element.

    Returns
    -------
    ExpmReport
        The n x n exponential at t = 1 plus per-element solve residuals.

    The defaults reproduce the method's reference accuracy on
    well-scaled matrices (about 13 significant digits).
    """
    a = as_complex_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix must be square, got {a.shape}")
    num_elements = int(num_elements)
    num_basis = int(num_basis)
    if num_elements < 1:
        raise ValueError("number of elements must be >= 1")
    if num_basis < 1:
        raise ValueError("number of basis functions must be >= 1")

    tables = build_tables(num_basis)
    mesh = uniform_mesh(num_elements)
    # uniform mesh + constant matrix: one factorization serves all elements
    fact = build_factorization(a, float(mesh.scale[0]), tables)
    psi = np.eye(fact.n, dtype=np.complex128)
    residuals = []
    for _ in range(num_elements):
        psi, worst = _advance(fact, a, psi)
        residuals.append(worst)
    return ExpmReport(
        result=psi,
        num_elements=num_elements,
        num_basis=num_basis,
        residuals=tuple(residuals),
    )
