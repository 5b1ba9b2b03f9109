"""
Validated symmetric and positive (semi)definite matrix types
"""

import logging
from collections.abc import Callable
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from scipy import linalg

from .errors import DimensionMismatch, NotPd, NotPsd

logger = logging.getLogger(__name__)

PD_THRESHOLD_SCALE = 1e-12
RECON_TOL = 1e-9


class Definiteness(Enum):
    POSITIVE_DEFINITE = "positive-definite"
    POSITIVE_SEMIDEFINITE = "positive-semidefinite"


def symmetrize(matrix: np.ndarray) -> np.ndarray:
    """Return (M + Mᵀ)/2"""
    return 0.5 * (matrix + matrix.T)


def pd_threshold(largest_eigenvalue: float) -> float:
    """Smallest eigenvalue a matrix may have and still count as positive definite"""
    return PD_THRESHOLD_SCALE * max(float(largest_eigenvalue), 1.0)


def as_array(matrix) -> np.ndarray:
    """Coerce any supported matrix-like value to a square float64 array"""
    if isinstance(matrix, SpdMatrix | SymMatrix):
        return matrix.entries
    array = np.asarray(matrix, dtype=np.float64)
    if array.ndim == 0:
        array = array.reshape(1, 1)
    if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] == 0:
        raise DimensionMismatch(f"Expected a non-empty square matrix, got shape {array.shape}")
    if not np.all(np.isfinite(array)):
        raise NotPsd("Matrix has non-finite entries")
    return array


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=np.float64, copy=True)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    """Eigenvalues in nonincreasing order with orthonormal eigenvector columns"""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @classmethod
    def of(cls, matrix: np.ndarray) -> "SpectralDecomposition":
        values, vectors = linalg.eigh(symmetrize(matrix))
        order = np.argsort(values)[::-1]
        return cls(eigenvalues=_frozen(values[order]), eigenvectors=_frozen(vectors[:, order]))

    def apply(self, fn: Callable[[np.ndarray], np.ndarray]) -> np.ndarray:
        """Q f(Λ) Qᵀ, symmetrized"""
        q = self.eigenvectors
        return symmetrize((q * fn(self.eigenvalues)) @ q.T)

    def reconstruct(self) -> np.ndarray:
        return self.apply(lambda values: values)

    def reconstruction_error(self, matrix: np.ndarray) -> tuple[float, float]:
        """Relative reconstruction error and orthogonality defect"""
        q = self.eigenvectors
        scale = max(float(linalg.norm(matrix)), np.finfo(float).tiny)
        recon = float(linalg.norm(self.reconstruct() - matrix)) / scale
        ortho = float(linalg.norm(q.T @ q - np.eye(q.shape[0])))
        return recon, ortho


@dataclass(frozen=True, eq=False)
class SymMatrix:
    """Dense real symmetric matrix (a tangent vector at a point of the SPD manifold)"""

    entries: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "entries", _frozen(symmetrize(as_array(self.entries))))

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True, eq=False)
class SpdMatrix:
    """
    Real symmetric positive (semi)definite matrix

    Entries are symmetrized on construction and the spectrum is computed once and
    cached; every fractional power is read off that spectrum. For PSD matrices,
    eigenvalues in [-threshold, 0) are rounding noise and are clamped to zero.
    """

    entries: np.ndarray
    definiteness: Definiteness = Definiteness.POSITIVE_DEFINITE
    spectrum: SpectralDecomposition = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        entries = symmetrize(as_array(self.entries))
        spectrum = SpectralDecomposition.of(entries)
        largest = spectrum.eigenvalues[0]
        smallest = spectrum.eigenvalues[-1]
        threshold = pd_threshold(largest)

        if self.definiteness is Definiteness.POSITIVE_DEFINITE:
            if smallest < threshold:
                raise NotPd(f"Smallest eigenvalue {smallest:.3e} is below the PD threshold {threshold:.3e}")
        else:
            if smallest < -threshold:
                raise NotPsd(f"Smallest eigenvalue {smallest:.3e} is below -{threshold:.3e}")
            if smallest < 0:
                logger.debug(f"Clamping eigenvalues down to {smallest:.3e} to zero")
                spectrum = SpectralDecomposition(
                    eigenvalues=_frozen(np.maximum(spectrum.eigenvalues, 0.0)),
                    eigenvectors=spectrum.eigenvectors,
                )

        object.__setattr__(self, "entries", _frozen(entries))
        object.__setattr__(self, "spectrum", spectrum)

    @classmethod
    def psd(cls, entries) -> "SpdMatrix":
        return cls(entries, Definiteness.POSITIVE_SEMIDEFINITE)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def is_pd(self) -> bool:
        values = self.spectrum.eigenvalues
        return bool(values[-1] >= pd_threshold(values[0]))

    @property
    def trace(self) -> float:
        return float(np.trace(self.entries))

    @property
    def condition_number(self) -> float:
        values = self.spectrum.eigenvalues
        return float(values[0] / values[-1]) if values[-1] > 0 else float("inf")

    def power(self, exponent: float) -> np.ndarray:
        """A^p from the cached spectrum; negative exponents need a nonsingular matrix"""
        if exponent < 0:
            self.require_nonsingular()
        return self.spectrum.apply(lambda values: np.power(values, exponent))

    def sqrt(self) -> np.ndarray:
        return self.spectrum.apply(np.sqrt)

    def inv_sqrt(self) -> np.ndarray:
        return self.power(-0.5)

    def inverse(self) -> np.ndarray:
        return self.power(-1.0)

    def log(self) -> np.ndarray:
        self.require_nonsingular()
        return self.spectrum.apply(np.log)

    def require_nonsingular(self) -> "SpdMatrix":
        """
        Return self if every eigenvalue is strictly positive, else raise NotPd

        Intermediate products such as A^{-1/2} B A^{-1/2} are held to this rather than
        to the PD threshold, which applies to inputs.
        """
        if not self.spectrum.eigenvalues[-1] > 0:
            raise NotPd("Operation needs a nonsingular matrix; smallest eigenvalue is 0")
        return self

    def require_pd(self) -> "SpdMatrix":
        """Return self if strictly positive definite, else raise NotPd"""
        if not self.is_pd:
            values = self.spectrum.eigenvalues
            raise NotPd(f"Operation needs a positive definite matrix; smallest eigenvalue is {values[-1]:.3e}")
        return self


def as_spd(matrix, definiteness: Definiteness = Definiteness.POSITIVE_DEFINITE) -> SpdMatrix:
    """Validate matrix-like input as SpdMatrix; existing SpdMatrix values pass through"""
    if isinstance(matrix, SpdMatrix):
        if definiteness is Definiteness.POSITIVE_DEFINITE:
            matrix.require_pd()
        return matrix
    return SpdMatrix(as_array(matrix), definiteness)


def as_psd(matrix) -> SpdMatrix:
    return as_spd(matrix, Definiteness.POSITIVE_SEMIDEFINITE)


def as_sym(matrix) -> SymMatrix:
    return matrix if isinstance(matrix, SymMatrix) else SymMatrix(as_array(matrix))


def require_same_dim(*matrices: "SpdMatrix | SymMatrix") -> int:
    dims = {m.dim for m in matrices}
    if len(dims) != 1:
        raise DimensionMismatch(f"Matrices have different dimensions: {sorted(dims)}")
    return dims.pop()


def frobenius(matrix: np.ndarray) -> float:
    return float(linalg.norm(matrix))


def relative_error(actual: np.ndarray, expected: np.ndarray) -> float:
    """‖actual − expected‖_F / max(‖expected‖_F, 1e-300)"""
    return frobenius(actual - expected) / max(frobenius(expected), 1e-300)
