"""Container types for the oscillator field and entangled-chain states."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import CutoffError, RepresentationError, ValidationError

POPULATION_SUM_TOL = 1e-10
TOP_BIN_LIMIT = 1e-9


@dataclass
class FieldState:
    """Oscillator state over a truncated number basis 0..n_max.

    Exactly one representation is held: either a real vector of level
    populations (diagonal states) or a full complex density matrix.
    """

    n_max: int
    populations: np.ndarray | None = None
    matrix: np.ndarray | None = None

    @classmethod
    def diagonal(cls, populations) -> "FieldState":
        pops = np.asarray(populations, dtype=float)
        if pops.ndim != 1 or pops.size < 1:
            raise ValidationError("populations must be a non-empty 1-D vector")
        if abs(pops.sum() - 1.0) > POPULATION_SUM_TOL:
            raise ValidationError(
                f"populations sum to {pops.sum():.12g}, expected 1 within {POPULATION_SUM_TOL}"
            )
        return cls(n_max=pops.size - 1, populations=pops)

    @classmethod
    def full(cls, matrix) -> "FieldState":
        rho = np.asarray(matrix, dtype=complex)
        if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
            raise ValidationError("density matrix must be square")
        if abs(np.trace(rho).real - 1.0) > POPULATION_SUM_TOL:
            raise ValidationError("density matrix trace must be 1")
        return cls(n_max=rho.shape[0] - 1, matrix=rho)

    @property
    def is_diagonal(self) -> bool:
        return self.populations is not None

    def diag_populations(self) -> np.ndarray:
        """Level occupation probabilities, whichever representation is held."""
        if self.populations is not None:
            return self.populations
        return np.real(np.diag(self.matrix)).copy()

    def require_diagonal(self) -> np.ndarray:
        if self.populations is None:
            raise RepresentationError("operation requires a diagonal field state")
        return self.populations

    def mean_n(self) -> float:
        pops = self.diag_populations()
        return float(np.dot(np.arange(pops.size), pops))

    def energy(self, omega_q: float) -> float:
        return omega_q * self.mean_n()

    def check_cutoff(self, context: str = "") -> None:
        """Dynamic guard: the top bin must stay effectively unpopulated."""
        top = float(self.diag_populations()[-1])
        if top >= TOP_BIN_LIMIT:
            where = f" ({context})" if context else ""
            raise CutoffError(
                f"top-bin population {top:.3e} at n_max={self.n_max} exceeds "
                f"{TOP_BIN_LIMIT}{where}; increase n_max"
            )


@dataclass
class JointState:
    """Pure-state mixture over (two-level chain) x (truncated field).

    Each branch is a normalized vector on 2**K * (n_max+1) dimensions with a
    classical weight.  Population trapped in the inert upper atomic level is
    carried as an extra frozen branch (weight + diagonal field populations)
    so that the total weight is exactly one.
    """

    K: int
    n_max: int
    branches: list[tuple[float, np.ndarray]] = field(default_factory=list)
    inert_weight: float = 0.0
    inert_populations: np.ndarray | None = None

    def validate(self, norm_tol: float = 1e-10, weight_tol: float = 1e-12) -> None:
        total = self.inert_weight + sum(w for w, _ in self.branches)
        if abs(total - 1.0) > weight_tol:
            raise ValidationError(f"branch weights sum to {total:.15g}, expected 1")
        for w, vec in self.branches:
            nrm = float(np.vdot(vec, vec).real)
            if abs(nrm - 1.0) > norm_tol:
                raise ValidationError(f"branch (weight {w:.3e}) has norm^2 {nrm:.15g}")

    def reduced_field(self) -> np.ndarray:
        """Field density matrix after tracing out the whole atom chain."""
        fdim = self.n_max + 1
        rho = np.zeros((fdim, fdim), dtype=complex)
        for w, vec in self.branches:
            m = vec.reshape(-1, fdim)
            rho += w * (m.T @ m.conj())
        if self.inert_weight > 0.0 and self.inert_populations is not None:
            rho += self.inert_weight * np.diag(self.inert_populations.astype(complex))
        return rho
