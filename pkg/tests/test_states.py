import json

import numpy as np
import pytest

from antidist import Certificate, DensityMatrix, Method, Povm, PureState, StateSet, Verdict
from antidist import io
from antidist.errors import (
    DuplicateState,
    NormOutOfRange,
    NotNormalized,
    NotPsd,
    ZeroVector,
)

import helpers


def test_pure_state_known_projectors():
    p1 = PureState([1, 0, 0])
    assert np.allclose(p1.projector, np.diag([1.0, 0.0, 0.0]))

    p2 = PureState(np.array([1, 2, 0]) / np.sqrt(5))
    expected = np.array([[1, 2, 0], [2, 4, 0], [0, 0, 0]]) / 5.0
    assert np.allclose(p2.projector, expected, atol=1e-12)


def test_pure_state_norm_validation():
    with pytest.raises(NormOutOfRange):
        PureState([0.5, 0.5])
    with pytest.raises(ZeroVector):
        PureState([0.0, 0.0])
    # tiny norm deviations are renormalized exactly
    s = PureState(np.array([1.0, 0.0]) * (1 + 5e-7))
    assert np.isclose(np.linalg.norm(s.vector), 1.0)


def test_pure_state_projector_roundtrip_random():
    rng = np.random.default_rng(5)
    for _ in range(50):
        d = int(rng.integers(2, 7))
        v = helpers.random_vector(d, rng)
        s = PureState(v)
        assert np.linalg.norm(s.projector - np.outer(v, v.conj())) <= 1e-10
        assert np.isclose(np.trace(s.projector).real, 1.0)


def test_global_phase_is_quotiented():
    rng = np.random.default_rng(6)
    v = helpers.random_vector(3, rng)
    a = PureState(v)
    b = PureState(np.exp(1j * 0.37) * v)
    assert np.linalg.norm(a.projector - b.projector) <= 1e-12
    with pytest.raises(DuplicateState):
        StateSet([a, b])


def test_density_matrix_validation():
    DensityMatrix(np.eye(3) / 3)
    with pytest.raises(ValueError):
        DensityMatrix(np.eye(3))  # trace 3
    with pytest.raises(ValueError):
        DensityMatrix(np.array([[1.5, 0], [0, -0.5]]))  # not PSD


def test_povm_validation():
    p = PureState([1, 0]).projector
    Povm([p, np.eye(2) - p])

    Povm([np.asarray(e, complex) for e in helpers.SUM_TRIPLE_POVM])

    with pytest.raises(NotNormalized):
        Povm([np.eye(2), np.eye(2)])
    with pytest.raises(NotPsd):
        Povm([1.5 * np.eye(2), -0.5 * np.eye(2)])


def test_state_set_rejects_duplicates():
    with pytest.raises(DuplicateState):
        StateSet([PureState([1, 0]), PureState([1, 0])])


def test_state_set_mixed_members():
    mixed = DensityMatrix(np.eye(2) / 2)
    sset = StateSet([PureState([1, 0]), mixed])
    assert not sset.all_pure()
    with pytest.raises(Exception):
        sset.vectors()


def test_certificate_roundtrip_is_byte_identical():
    from antidist import decide

    cert = decide(helpers.sum_condition_triple())
    doc = io.certificate_to_doc(cert)
    text = io.dumps_doc(doc)
    parsed = io.certificate_from_doc(json.loads(text))
    text2 = io.dumps_doc(io.certificate_to_doc(parsed))
    assert text == text2
    assert parsed.verdict is Verdict.YES
    assert parsed.method is Method.SUM_PROJECTION


def test_certificate_fields_survive_serialization():
    cert = Certificate(
        Verdict.YES,
        Method.QUBIT_BLOCH,
        weights=np.array([1.0, 1.0]),
        bloch_weights=np.array([1.0, 1.0]),
        added_bloch=np.array([0.0, 0.0, -1.0]),
        notes="test",
    )
    doc = io.certificate_to_doc(cert)
    back = io.certificate_from_doc(doc)
    assert np.allclose(back.weights, [1, 1])
    assert np.allclose(back.added_bloch, [0, 0, -1])
    assert back.notes == "test"
