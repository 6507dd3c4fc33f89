"""Shared test data and generators.

The two hand-checked triples in dimension 3:

* ``sum_condition_triple`` has Gram weights (3/4, 5/8, 5/8) that reproduce
  the rank-2 span projector diag(1, 1, 0), so the explicit measurement
  formula applies.  The three effect matrices are frozen below.
* ``chart_triple`` has Gram weights (63/73, 50/73, 65/73) whose weighted
  sum is not a projection; the set is still antidistinguishable via the
  frozen completion chart.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from antidist import (
    GroupRep,
    Povm,
    PureState,
    StateSet,
    builtin_quaternion,
    builtin_symmetric_permutation,
    orbit,
    schur_sum,
    standard_subspace_vectors,
    state_from_bloch,
    tetrahedral_state,
)

S5 = np.sqrt(5.0)


def sum_condition_triple() -> StateSet:
    return StateSet(
        [
            PureState([1, 0, 0]),
            PureState(np.array([1, 2, 0]) / S5),
            PureState(np.array([1, -2, 0]) / S5),
        ]
    )


#: frozen excluding measurement for sum_condition_triple
SUM_TRIPLE_POVM = [
    np.diag([0, 9, 4]) / 12.0,
    np.array([[1 / 2, -1 / 4, 0], [-1 / 4, 1 / 8, 0], [0, 0, 1 / 3]]),
    np.array([[1 / 2, 1 / 4, 0], [1 / 4, 1 / 8, 0], [0, 0, 1 / 3]]),
]

SUM_TRIPLE_WEIGHTS = np.array([3 / 4, 5 / 8, 5 / 8])


def chart_triple() -> StateSet:
    return StateSet(
        [
            PureState([1, 0, 0]),
            PureState(np.array([1, 2, 0]) / S5),
            PureState(np.array([0, 1, 2]) / S5),
        ]
    )


def chart_triple_completions():
    e1, e2, e3 = np.eye(3)
    return (
        (PureState(e3), PureState(e2)),
        (PureState(e3), PureState(np.array([2, -1, 0]) / S5)),
        (PureState(np.array([0, 2, -1]) / S5), PureState(e1)),
    )


#: coefficients for the frozen chart, shape (n, d - 1)
CHART_TRIPLE_ALPHAS = np.array([[0.0, 1.0], [1.0, 0.0], [0.0, 1.0]])


TETRA_BLOCH = np.array(
    [[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]], dtype=float
) / np.sqrt(3.0)


def tetrahedron() -> StateSet:
    return StateSet([state_from_bloch(r) for r in TETRA_BLOCH])


def trine() -> StateSet:
    return StateSet(
        [
            state_from_bloch((1, 0, 0)),
            state_from_bloch((-0.5, np.sqrt(3) / 2, 0)),
            state_from_bloch((-0.5, -np.sqrt(3) / 2, 0)),
        ]
    )


def standard_orbit_triple() -> StateSet:
    return StateSet(
        [
            PureState(np.array([1, -1, 0]) / np.sqrt(2)),
            PureState(np.array([1, 0, -1]) / np.sqrt(2)),
            PureState(np.array([0, 1, -1]) / np.sqrt(2)),
        ]
    )


def random_vector(d: int, rng: np.random.Generator) -> np.ndarray:
    v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return v / np.linalg.norm(v)


def random_pure(d: int, rng: np.random.Generator) -> PureState:
    return PureState(random_vector(d, rng))


def random_qubit_set(n: int, rng: np.random.Generator) -> StateSet:
    while True:
        try:
            return StateSet([random_pure(2, rng) for _ in range(n)])
        except Exception:
            continue


def random_orthonormal_subset(d: int, n: int, rng: np.random.Generator) -> StateSet:
    from antidist.linalg import haar_unitary

    u = haar_unitary(d, rng)
    return StateSet([PureState(u[:, k]) for k in range(n)])


@lru_cache(maxsize=None)
def cached_quaternion() -> GroupRep:
    return builtin_quaternion()


@lru_cache(maxsize=None)
def cached_symmetric(n: int) -> GroupRep:
    return builtin_symmetric_permutation(n)


@lru_cache(maxsize=None)
def cached_cyclic(d: int) -> GroupRep:
    shift = np.zeros((d, d), dtype=complex)
    for k in range(d):
        shift[(k + 1) % d, k] = 1.0
    mats = [np.linalg.matrix_power(shift, k) for k in range(d)]
    return GroupRep(mats, [f"c{k}" for k in range(d)])


def random_zero_sum_base(n: int, rng: np.random.Generator) -> PureState:
    """Random pure state inside the zero-coordinate-sum subspace of C^n."""
    basis = standard_subspace_vectors(n)
    coeffs = rng.standard_normal(n - 1) + 1j * rng.standard_normal(n - 1)
    v = sum(c * b for c, b in zip(coeffs, basis))
    return PureState(v / np.linalg.norm(v))


def random_certified_orbit(rng: np.random.Generator):
    """Random orbit whose sum is scalar on its span, with (c, R).

    Draws from the quaternion action on a random qubit state or a
    symmetric-group action on a random zero-sum vector.
    """
    kind = rng.integers(0, 3)
    if kind == 0:
        rep = cached_quaternion()
        base = random_pure(2, rng)
    elif kind == 1:
        rep = cached_symmetric(3)
        base = random_zero_sum_base(3, rng)
    else:
        rep = cached_symmetric(4)
        base = random_zero_sum_base(4, rng)
    orb = orbit(rep, base)
    c, r_proj = schur_sum(orb)
    return orb, c, r_proj


def linprog_strictly_feasible(bloch: np.ndarray, threshold: float = 1e-9) -> bool:
    """Independent oracle: maximize eps s.t. sum t_j r_j = 0, sum t_j = 2,
    t_j >= eps, via scipy's LP solver."""
    from scipy.optimize import linprog

    n = bloch.shape[0]
    c = np.zeros(n + 1)
    c[-1] = -1.0
    a_eq = np.zeros((4, n + 1))
    a_eq[:3, :n] = bloch.T
    a_eq[3, :n] = 1.0
    b_eq = np.array([0.0, 0.0, 0.0, 2.0])
    a_ub = np.zeros((n, n + 1))
    a_ub[:, :n] = -np.eye(n)
    a_ub[:, -1] = 1.0
    b_ub = np.zeros(n)
    bounds = [(0, None)] * n + [(None, 2)]
    res = linprog(c, A_ub=a_ub, b_ub=b_ub, A_eq=a_eq, b_eq=b_eq, bounds=bounds, method="highs")
    return bool(res.status == 0 and res.x is not None and res.x[-1] > threshold)


def naive_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Triple-loop product, the hand-multiplication oracle."""
    n, k = a.shape
    k2, m = b.shape
    assert k == k2
    out = np.zeros((n, m), dtype=complex)
    for i in range(n):
        for j in range(m):
            for l in range(k):
                out[i, j] += a[i, l] * b[l, j]
    return out
