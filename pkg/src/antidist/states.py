"""Value types: pure states, density matrices, POVMs, state sets, certificates.

Global phase is quotiented out everywhere by working with projectors:
two states count as equal exactly when their operators coincide within
``DUPLICATE_TOL`` in Frobenius norm.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import linalg
from .errors import (
    DuplicateState,
    MixedStateInput,
    NormOutOfRange,
    NotNormalized,
    NotPsd,
    ZeroVector,
)

#: operator Frobenius distance at or below which two states are "the same"
DUPLICATE_TOL = 1e-7

#: accepted deviation of an input vector's norm from 1 (renormalized exactly)
NORM_SLACK = 1e-6

#: entrywise tolerance for the POVM normalization sum
POVM_SUM_TOL = 1e-8


class Verdict(str, Enum):
    YES = "AntidistYes"
    NO = "AntidistNo"
    UNKNOWN = "Unknown"


class Method(str, Enum):
    PAIRWISE_ORTHOGONAL = "PairwiseOrthogonal"
    SUM_PROJECTION = "SumProjection"
    QUBIT_BLOCH = "QubitBloch"
    CHART = "Chart"
    GROUP_ORBIT = "GroupOrbit"
    FIDELITY_VIOLATION = "FidelityViolation"
    UNION = "Union"
    TWO_N = "TwoNConstruction"


def _as_finite_complex(data, what: str) -> np.ndarray:
    arr = np.asarray(data, dtype=complex)
    if not (np.isfinite(arr.real).all() and np.isfinite(arr.imag).all()):
        raise ValueError(f"{what} contains non-finite entries")
    return arr


class PureState:
    """A unit vector together with its cached rank-1 projector."""

    __slots__ = ("dim", "vector", "projector")

    def __init__(self, vector, tol: float = linalg.DEFAULT_TOL):
        v = _as_finite_complex(vector, "state vector").reshape(-1)
        nrm = float(np.linalg.norm(v))
        if nrm <= tol:
            raise ZeroVector("state vector has zero norm")
        if abs(nrm - 1.0) > NORM_SLACK:
            raise NormOutOfRange(f"vector norm {nrm:.9f} deviates from 1 by more than {NORM_SLACK}")
        v = v / nrm
        self.dim = v.size
        self.vector = v
        self.projector = np.outer(v, v.conj())

    def density(self) -> np.ndarray:
        return self.projector

    def overlap(self, other: "PureState") -> float:
        """tr(P Q), the squared modulus of the inner product."""
        return float(np.trace(self.projector @ other.projector).real)

    def __repr__(self):
        return f"PureState(dim={self.dim})"


class DensityMatrix:
    """Positive trace-one operator; carries the mixed states of constructions."""

    __slots__ = ("dim", "matrix")

    def __init__(self, matrix, tol: float = linalg.DEFAULT_TOL):
        m = _as_finite_complex(matrix, "density matrix")
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("density matrix must be square")
        if not linalg.is_psd(m, tol):
            raise ValueError("density matrix must be Hermitian and positive semidefinite")
        if abs(float(np.trace(m).real) - 1.0) > max(tol, 1e-8):
            raise ValueError("density matrix must have unit trace")
        self.dim = m.shape[0]
        self.matrix = m

    def density(self) -> np.ndarray:
        return self.matrix

    def __repr__(self):
        return f"DensityMatrix(dim={self.dim})"


class Povm:
    """Finite list of positive effects summing to the identity."""

    __slots__ = ("dim", "effects")

    def __init__(self, effects, tol: float = linalg.DEFAULT_TOL):
        mats = [_as_finite_complex(e, "POVM effect") for e in effects]
        if not mats:
            raise ValueError("a POVM needs at least one effect")
        d = mats[0].shape[0]
        for idx, e in enumerate(mats):
            if e.ndim != 2 or e.shape != (d, d):
                raise ValueError(f"effect {idx} is not {d}x{d}")
            if not linalg.is_psd(e, tol):
                raise NotPsd(idx)
        residual = float(np.abs(sum(mats) - np.eye(d)).max())
        if residual > POVM_SUM_TOL:
            raise NotNormalized(residual)
        self.dim = d
        self.effects = tuple(mats)

    def __len__(self):
        return len(self.effects)

    def __repr__(self):
        return f"Povm(dim={self.dim}, outcomes={len(self.effects)})"


class StateSet:
    """States sharing a dimension, pairwise distinct as operators."""

    __slots__ = ("dim", "states")

    def __init__(self, states, tol: float = linalg.DEFAULT_TOL):
        members = tuple(states)
        if not members:
            raise ValueError("a state set needs at least one state")
        d = members[0].dim
        if any(s.dim != d for s in members):
            raise ValueError("all states must share a dimension")
        mats = [s.density() for s in members]
        for i in range(len(mats)):
            for j in range(i + 1, len(mats)):
                if linalg.frobenius(mats[i] - mats[j]) <= DUPLICATE_TOL:
                    raise DuplicateState(f"states {i} and {j} coincide up to global phase")
        self.dim = d
        self.states = members

    @property
    def n(self) -> int:
        return len(self.states)

    def densities(self) -> list[np.ndarray]:
        return [s.density() for s in self.states]

    def all_pure(self) -> bool:
        return all(isinstance(s, PureState) for s in self.states)

    def require_pure(self, what: str = "this operation"):
        if not self.all_pure():
            raise MixedStateInput(f"{what} requires pure states")

    def vectors(self) -> list[np.ndarray]:
        self.require_pure("vector access")
        return [s.vector for s in self.states]

    def __repr__(self):
        return f"StateSet(dim={self.dim}, n={self.n})"


@dataclass
class Certificate:
    """Portable evidence object from which a verdict can be re-verified."""

    verdict: Verdict
    method: Method | None = None
    weights: np.ndarray | None = None
    projector_r: np.ndarray | None = None
    povm: Povm | None = None
    bloch_weights: np.ndarray | None = None
    added_state: np.ndarray | None = None
    added_bloch: np.ndarray | None = None
    notes: str = ""
