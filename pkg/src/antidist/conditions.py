"""Algebraic exclusion conditions and constructions.

Covers pairwise-orthogonality (distinguishability), verification of an
excluding measurement, the weighted sum-equals-projection certificate with
its explicit POVM, the pairwise-fidelity necessary bound, and the two set
constructions (disjoint union, doubling to at most 2n states).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import CountMismatch, DimensionOne, OverlappingSets, RankTooSmall, WrongDimension
from .states import DUPLICATE_TOL, DensityMatrix, Povm, PureState, StateSet

#: Frobenius tolerance for the identity "sum of weighted projectors = R"
SUM_RESIDUAL_TOL = 1e-8


@dataclass
class SumConditionResult:
    """Outcome of testing whether sum_j t_j P_j is the span projector R."""

    weights: np.ndarray
    projector_r: np.ndarray
    rank_r: int
    satisfied: bool


@dataclass
class FidelityBound:
    """lhs = sum of pairwise fidelities over ordered pairs, rhs = n(n-2)."""

    lhs: float
    rhs: float
    violated: bool


def is_distinguishable(states: StateSet, tol: float = linalg.DEFAULT_TOL) -> bool:
    """True iff the pure states are pairwise orthogonal."""
    states.require_pure("the distinguishability test")
    mats = states.densities()
    for i in range(states.n):
        for j in range(i + 1, states.n):
            if np.trace(mats[i] @ mats[j]).real > tol:
                return False
    return True


def swap_povm(states: StateSet, tol: float = linalg.DEFAULT_TOL) -> Povm:
    """Excluding measurement for a pairwise-orthogonal set: outcome j looks
    for state j+1, with the span complement spread uniformly."""
    if states.n < 2:
        raise CountMismatch("outcome swapping needs at least two states")
    if not is_distinguishable(states, tol):
        raise ValueError("swap_povm needs pairwise orthogonal states")
    mats = states.densities()
    comp = np.eye(states.dim) - linalg.span_projector(states.vectors(), tol)
    effects = [mats[(j + 1) % states.n] + comp / states.n for j in range(states.n)]
    return Povm(effects, tol)


def verify_antidistinguishing(states: StateSet, m: Povm, tol: float = linalg.DEFAULT_TOL) -> bool:
    """Check both defining conditions of an excluding measurement:
    tr(rho_j M(j)) = 0 and sum_k tr(rho_k M(j)) > 0 for every outcome j."""
    if len(m.effects) != states.n:
        raise CountMismatch(f"{len(m.effects)} effects for {states.n} states")
    if m.dim != states.dim:
        raise WrongDimension("POVM and states live in different dimensions")
    mats = states.densities()
    for j, effect in enumerate(m.effects):
        if abs(np.trace(mats[j] @ effect).real) > tol:
            return False
        total = sum(np.trace(rho @ effect).real for rho in mats)
        if total <= tol:
            return False
    return True


def gram_overlaps(states: StateSet) -> np.ndarray:
    """Symmetric matrix of pairwise overlaps p_jk = tr(P_j P_k)."""
    states.require_pure("the Gram overlap matrix")
    mats = states.densities()
    n = states.n
    p = np.empty((n, n))
    for i in range(n):
        p[i, i] = 1.0
        for j in range(i + 1, n):
            p[i, j] = p[j, i] = np.trace(mats[i] @ mats[j]).real
    return p


def solve_weights(states: StateSet) -> np.ndarray:
    """Candidate weights from the Gram system sum_k p_jk t_k = 1.

    The solution may contain non-positive entries; callers must test it
    with check_sum_condition.  Raises SingularSystem for degenerate sets.
    """
    p = gram_overlaps(states)
    return linalg.solve_linear(p, np.ones(states.n))


def check_sum_condition(
    states: StateSet, weights, tol: float = linalg.DEFAULT_TOL
) -> SumConditionResult:
    """Test whether sum_j t_j P_j equals the projector onto the span."""
    weights = np.asarray(weights, dtype=float)
    if weights.shape != (states.n,):
        raise CountMismatch("one weight per state required")
    states.require_pure("the sum condition")
    r_proj = linalg.span_projector(states.vectors(), tol)
    rank = int(round(np.trace(r_proj).real))
    total = sum(w * p for w, p in zip(weights, states.densities()))
    satisfied = bool(weights.min() > tol) and linalg.frobenius(total - r_proj) <= SUM_RESIDUAL_TOL
    return SumConditionResult(weights, r_proj, rank, satisfied)


def build_povm(states: StateSet, result: SumConditionResult, tol: float = linalg.DEFAULT_TOL) -> Povm:
    """Explicit excluding measurement from a satisfied sum condition:
    M(j) = t_j/(r-1) (R - P_j) + R_perp / n."""
    if not result.satisfied:
        raise ValueError("sum condition not satisfied; no measurement to build")
    if result.rank_r < 2:
        raise RankTooSmall("span projector has rank < 2")
    r_proj = result.projector_r
    comp = np.eye(states.dim) - r_proj
    denom = result.rank_r - 1
    effects = [
        (w / denom) * (r_proj - p) + comp / states.n
        for w, p in zip(result.weights, states.densities())
    ]
    return Povm(effects, tol)


def _psd_sqrt(m: np.ndarray, tol: float) -> np.ndarray:
    w, v = linalg.hermitian_eigen(m, max(tol, 1e-8))
    w = np.clip(w, 0.0, None)
    return (v * np.sqrt(w)) @ v.conj().T


def fidelity(rho: np.ndarray, sigma: np.ndarray, tol: float = linalg.DEFAULT_TOL) -> float:
    """Squared-overlap fidelity; reduces to tr(P Q) for pure states."""
    root = _psd_sqrt(np.asarray(rho, complex), tol)
    inner = root @ np.asarray(sigma, complex) @ root
    w, _ = linalg.hermitian_eigen((inner + linalg.adjoint(inner)) / 2, max(tol, 1e-8))
    return float(np.sqrt(np.clip(w, 0.0, None)).sum() ** 2)


def fidelity_bound_check(states: StateSet, tol: float = linalg.DEFAULT_TOL) -> FidelityBound:
    """Necessary bound for exclusion: sum over ordered pairs j != k of
    F(rho_j, rho_k) must not exceed n(n-2).

    A violation certifies that the set is not antidistinguishable.  For
    n = 1 the bound reads 0 <= -1 and correctly refutes a single state.
    """
    mats = states.densities()
    pure = [isinstance(s, PureState) for s in states.states]
    n = states.n
    lhs = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            if pure[i] and pure[j]:
                f = float(np.trace(mats[i] @ mats[j]).real)
            else:
                f = fidelity(mats[i], mats[j], tol)
            lhs += 2.0 * f
    rhs = float(n * (n - 2))
    return FidelityBound(lhs, rhs, bool(lhs > rhs + tol))


def union_povm(
    a: StateSet, ma: Povm, b: StateSet, mb: Povm, tol: float = linalg.DEFAULT_TOL
) -> tuple[StateSet, Povm]:
    """Join two disjoint excludable sets: concatenate the states and halve
    both measurements."""
    if a.dim != b.dim:
        raise WrongDimension("sets to unite must share a dimension")
    for sa in a.states:
        for sb in b.states:
            if linalg.frobenius(sa.density() - sb.density()) <= DUPLICATE_TOL:
                raise OverlappingSets("the two sets share a state")
    if not verify_antidistinguishing(a, ma, tol) or not verify_antidistinguishing(b, mb, tol):
        raise ValueError("both input measurements must exclude their sets")
    joined = StateSet(a.states + b.states, tol)
    effects = [e / 2.0 for e in ma.effects] + [e / 2.0 for e in mb.effects]
    return joined, Povm(effects, tol)


def two_n_construction(
    states: StateSet, balanced: bool = True, tol: float = linalg.DEFAULT_TOL
) -> tuple[StateSet, Povm]:
    """Embed n pure states into an excludable set of at most 2n states.

    Each state P is paired with the complement state (1 - P)/(d-1); the
    pair is excluded by {1 - P, P}.  Pairs are joined either with uniform
    1/n effect scaling (default, well conditioned) or with the chained
    halving scales 2^-(n-1), 2^-(n-1), 2^-(n-2), ..., 1/2.  States that
    coincide across pairs are merged and their effects summed.
    """
    d = states.dim
    if d < 2:
        raise DimensionOne("the doubling construction needs dimension >= 2")
    states.require_pure("the doubling construction")
    n = states.n
    if balanced:
        scales = [1.0 / n] * n
    else:
        scales = [2.0 ** -(n - 1)] + [2.0 ** -(n - i) for i in range(1, n)]
    eye = np.eye(d)
    entries = []
    for scale, p in zip(scales, states.states):
        proj = p.projector
        complement = DensityMatrix((eye - proj) / (d - 1), tol)
        entries.append((p, scale * (eye - proj)))
        entries.append((complement, scale * proj))
    merged_states: list = []
    merged_effects: list[np.ndarray] = []
    for state, effect in entries:
        for k, existing in enumerate(merged_states):
            if linalg.frobenius(state.density() - existing.density()) <= DUPLICATE_TOL:
                merged_effects[k] = merged_effects[k] + effect
                break
        else:
            merged_states.append(state)
            merged_effects.append(effect)
    return StateSet(merged_states, tol), Povm(merged_effects, tol)
