"""Certificate pipeline: cheap exact tests first, heuristic search last.

Order of attack for a pure state set:

1. pairwise orthogonality (yes via the outcome-swapped measurement),
2. the exact qubit decision when d = 2 (yes or no),
3. the pairwise-fidelity bound (no on violation),
4. Gram weights plus the sum-equals-projection test (yes with the
   explicit measurement),
5. randomized chart search within a trial budget (yes when found),
6. otherwise unknown.
"""

from __future__ import annotations

import numpy as np

from . import chart as chart_mod
from . import conditions, linalg, qubit
from .errors import SingularSystem
from .states import Certificate, Method, StateSet, Verdict


def decide(
    states: StateSet,
    tol: float = linalg.DEFAULT_TOL,
    budget: int = chart_mod.DEFAULT_BUDGET,
    seed: int = 0,
    seeded_chart: chart_mod.Chart | None = None,
) -> Certificate:
    """Run the full certificate pipeline on a pure state set."""
    states.require_pure("the decision pipeline")
    n = states.n

    if n >= 2 and conditions.is_distinguishable(states, tol):
        povm = conditions.swap_povm(states, tol)
        return Certificate(
            Verdict.YES,
            Method.PAIRWISE_ORTHOGONAL,
            weights=np.ones(n),
            povm=povm,
            notes="pairwise orthogonal; outcomes of the identifying measurement rearranged",
        )

    if states.dim == 2:
        verdict = qubit.qubit_decide(states, tol)
        if verdict.feasible:
            return Certificate(
                Verdict.YES,
                Method.QUBIT_BLOCH,
                weights=verdict.weights,
                bloch_weights=verdict.weights,
                povm=qubit.exclusion_povm(states, verdict.weights),
                notes="strictly positive weights cancel the Bloch vectors",
            )
        return Certificate(
            Verdict.NO,
            Method.QUBIT_BLOCH,
            notes="no strictly positive weights cancel the Bloch vectors",
        )

    bound = conditions.fidelity_bound_check(states, tol)
    if bound.violated:
        return Certificate(
            Verdict.NO,
            Method.FIDELITY_VIOLATION,
            notes=f"pairwise fidelity sum {bound.lhs:.12g} exceeds n(n-2) = {bound.rhs:.12g}",
        )

    try:
        weights = conditions.solve_weights(states)
    except SingularSystem:
        weights = None
    if weights is not None:
        result = conditions.check_sum_condition(states, weights, tol)
        if result.satisfied and result.rank_r >= 2:
            return Certificate(
                Verdict.YES,
                Method.SUM_PROJECTION,
                weights=result.weights,
                projector_r=result.projector_r,
                povm=conditions.build_povm(states, result, tol),
                notes="weighted projector sum equals the span projector",
            )

    found = chart_mod.search_chart(states, budget, seed=seed, tol=tol, initial=seeded_chart)
    if found is not None:
        return Certificate(
            Verdict.YES,
            Method.CHART,
            povm=chart_mod.povm_from_chart(found, tol),
            notes="verifying orthonormal-completion chart found",
        )

    return Certificate(
        Verdict.UNKNOWN,
        notes="no certificate found within the search budget; absence is not a refutation",
    )
