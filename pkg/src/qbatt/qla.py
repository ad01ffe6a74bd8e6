"""Dense complex linear algebra for small quantum systems.

Operators and density matrices are plain square complex ndarrays, pure
states are 1-D complex ndarrays.  Everything stays dense: the largest
matrices in this package are a few thousand rows, well inside LAPACK
comfort.
"""

from __future__ import annotations

import numpy as np

from .errors import CapacityError, DomainError, NumericalError, ValidationError

EIG_FLOOR = 1e-14        # eigenvalues below this are treated as exact zeros
HERMITIAN_TOL = 1e-12
MAX_EIGH_DIM = 4096
MAX_TENSOR_ENTRIES = 2 ** 20


# ---------------------------------------------------------------------------
# Elementary operators
# ---------------------------------------------------------------------------

def annihilation(dim: int) -> np.ndarray:
    """Truncated oscillator lowering operator b with <n|b|n+1> = sqrt(n+1)."""
    return np.diag(np.sqrt(np.arange(1.0, dim)), k=1).astype(complex)


def number_operator(dim: int) -> np.ndarray:
    return np.diag(np.arange(dim, dtype=float)).astype(complex)


def transition(dim: int, i: int, j: int) -> np.ndarray:
    """Matrix unit |i><j| on a dim-level system."""
    m = np.zeros((dim, dim), dtype=complex)
    m[i, j] = 1.0
    return m


def basis_vector(dim: int, i: int) -> np.ndarray:
    v = np.zeros(dim, dtype=complex)
    v[i] = 1.0
    return v


# ---------------------------------------------------------------------------
# Validation helpers
# ---------------------------------------------------------------------------

def assert_hermitian(m: np.ndarray, tol: float = HERMITIAN_TOL) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValidationError("expected a square matrix")
    scale = max(1.0, float(np.abs(m).max(initial=0.0)))
    dev = float(np.abs(m - m.conj().T).max(initial=0.0))
    if dev > tol * scale:
        raise ValidationError(f"matrix is not Hermitian (max deviation {dev:.3e})")
    return m


def check_density_matrix(rho: np.ndarray, trace_tol: float = 1e-10,
                         eig_tol: float = 1e-10) -> np.ndarray:
    """Validate trace one, hermiticity and positivity; return the array."""
    rho = assert_hermitian(rho)
    tr = float(np.trace(rho).real)
    if abs(tr - 1.0) > trace_tol:
        raise ValidationError(f"density matrix trace is {tr:.12g}, expected 1")
    evals = np.linalg.eigvalsh(rho)
    if evals.min() < -eig_tol:
        raise ValidationError(f"density matrix has eigenvalue {evals.min():.3e} < 0")
    return rho


# ---------------------------------------------------------------------------
# Core operations
# ---------------------------------------------------------------------------

def eigh(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix.

    Returns (eigenvalues descending, eigenvectors as columns in matching
    order).  The input is validated for hermiticity first.
    """
    m = assert_hermitian(m)
    if m.shape[0] > MAX_EIGH_DIM:
        raise CapacityError(f"dimension {m.shape[0]} exceeds eigh limit {MAX_EIGH_DIM}")
    try:
        w, v = np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise NumericalError(f"eigendecomposition did not converge: {exc}") from exc
    return w[::-1].copy(), v[:, ::-1].copy()


def tensor(a: np.ndarray, b: np.ndarray,
           max_entries: int = MAX_TENSOR_ENTRIES) -> np.ndarray:
    """Kronecker product with the row-major block convention a (x) b."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    entries = a.shape[0] * b.shape[0] * a.shape[1] * b.shape[1]
    if entries > max_entries:
        raise CapacityError(
            f"tensor product would hold {entries} entries (cap {max_entries})"
        )
    return np.kron(a, b)


def partial_trace(rho: np.ndarray, dims: list[int], keep: int) -> np.ndarray:
    """Trace out every subsystem except ``keep``.

    ``dims`` lists the subsystem dimensions in tensor order (slowest index
    first); their product must match the matrix dimension.
    """
    rho = np.asarray(rho, dtype=complex)
    dims = [int(d) for d in dims]
    total = int(np.prod(dims))
    if rho.shape != (total, total):
        raise ValidationError(
            f"matrix dimension {rho.shape} does not match prod(dims)={total}"
        )
    if not 0 <= keep < len(dims):
        raise ValidationError(f"keep index {keep} out of range for {len(dims)} subsystems")
    t = rho.reshape(dims + dims)
    remaining = list(range(len(dims)))
    for sub in sorted((i for i in range(len(dims)) if i != keep), reverse=True):
        pos = remaining.index(sub)
        t = np.trace(t, axis1=pos, axis2=pos + len(remaining))
        remaining.remove(sub)
    return t


def von_neumann_entropy(rho: np.ndarray) -> float:
    """Entropy -sum(l ln l) in nats, with eigenvalues below 1e-14 dropped."""
    rho = check_density_matrix(rho)
    evals = np.linalg.eigvalsh(rho)
    evals = evals[evals >= EIG_FLOOR]
    return float(-np.sum(evals * np.log(evals)))


def relative_entropy_quantum(rho: np.ndarray, sigma: np.ndarray) -> float:
    """Tr rho (ln rho - ln sigma), requiring support(rho) inside support(sigma)."""
    rho = check_density_matrix(rho)
    sigma = check_density_matrix(sigma)
    if rho.shape != sigma.shape:
        raise ValidationError("states must share a dimension")
    w_r = np.linalg.eigvalsh(rho)
    w_s, v_s = np.linalg.eigh(sigma)
    null = w_s < EIG_FLOOR
    if np.any(null):
        proj = v_s[:, null]
        mass = float(np.real(np.einsum("ij,jk,ik->", proj.conj().T, rho, proj.T)))
        if mass > 1e-12:
            raise DomainError(
                f"support violation: rho holds {mass:.3e} outside support(sigma); "
                "relative entropy is infinite"
            )
    w_r_pos = w_r[w_r >= EIG_FLOOR]
    tr_rho_ln_rho = float(np.sum(w_r_pos * np.log(w_r_pos)))
    supp = ~null
    weights = np.real(np.einsum("ij,jk,ki->i", v_s[:, supp].conj().T, rho, v_s[:, supp]))
    tr_rho_ln_sigma = float(np.dot(weights, np.log(w_s[supp])))
    return tr_rho_ln_rho - tr_rho_ln_sigma
