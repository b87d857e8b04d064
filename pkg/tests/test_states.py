"""Initial states, basis conventions, and their classification at t = 0."""

import numpy as np
import pytest

from qutrit_dephasing import (
    InvariantViolation,
    N_STATES,
    SZ_BY_INDEX,
    basis_index,
    check_density_matrix,
    cyclic_mixture,
    horodecki_state,
    negativity,
    psi_plus,
    realignment_witness,
    sz_value,
    unextendible_product_basis,
    upb_state,
    witness_pair,
)

# frozen after the first computation; realignment witness of the UPB state
UPB_REALIGNMENT = 0.08741246483752096


def test_basis_indexing_first_qutrit_major():
    assert basis_index(0, 0) == 0
    assert basis_index(0, 2) == 2
    assert basis_index(1, 0) == 3
    assert basis_index(2, 2) == 8


def test_sector_labels():
    assert sz_value(0, 0) == -2
    assert sz_value(2, 2) == 2
    assert [sz_value(i // 3, i % 3) for i in range(N_STATES)] == list(SZ_BY_INDEX)
    assert sorted(set(SZ_BY_INDEX)) == [-2, -1, 0, 1, 2]


def test_psi_plus_is_normalized():
    assert abs(np.linalg.norm(psi_plus()) - 1.0) < 1e-12


@pytest.mark.parametrize("shift", [1, 2])
def test_cyclic_mixtures_are_valid_states(shift):
    rho = cyclic_mixture(shift)
    check_density_matrix(rho)
    assert abs(np.trace(rho).real - 1.0) < 1e-14


def test_cyclic_mixture_occupies_expected_states():
    plus = cyclic_mixture(1)
    for m1, m2 in ((0, 1), (1, 2), (2, 0)):
        assert plus[basis_index(m1, m2), basis_index(m1, m2)].real == pytest.approx(1 / 3)
    minus = cyclic_mixture(2)
    for m1, m2 in ((1, 0), (2, 1), (0, 2)):
        assert minus[basis_index(m1, m2), basis_index(m1, m2)].real == pytest.approx(1 / 3)


def test_cyclic_mixture_rejects_bad_shift():
    with pytest.raises(ValueError):
        cyclic_mixture(0)


def test_horodecki_entries_at_a_4():
    rho = horodecki_state(4.0)
    assert rho[basis_index(0, 0), basis_index(0, 0)].real == pytest.approx(2 / 21, abs=1e-14)
    assert rho[basis_index(0, 0), basis_index(1, 1)].real == pytest.approx(2 / 21, abs=1e-14)
    assert rho[basis_index(0, 1), basis_index(0, 1)].real == pytest.approx(4 / 21, abs=1e-14)
    assert rho[basis_index(1, 0), basis_index(1, 0)].real == pytest.approx(1 / 21, abs=1e-14)


@pytest.mark.parametrize("a", np.linspace(2.0, 5.0, 7))
def test_horodecki_is_valid_density_matrix(a):
    rho = horodecki_state(a)
    assert abs(np.trace(rho).real - 1.0) < 1e-12
    check_density_matrix(rho)


@pytest.mark.parametrize("a", [1.9, 5.1, -3.0])
def test_horodecki_rejects_out_of_range(a):
    with pytest.raises(ValueError, match=r"\[2, 5\]"):
        horodecki_state(a)


@pytest.mark.parametrize("a", np.arange(2.0, 5.01, 0.5))
def test_classification_boundaries_at_t0(a):
    rho = horodecki_state(a)
    assert (negativity(rho) > 1e-9) == (a > 4.0)
    assert (realignment_witness(rho) > 1e-9) == (a > 3.0)


def test_bound_entanglement_flag_at_a_3_5():
    pair = witness_pair(horodecki_state(3.5))
    assert pair.negativity <= 1e-10
    assert pair.realignment > 0
    assert pair.bound_entangled
    assert pair.classification == "bound"


def test_upb_vectors_are_orthonormal():
    vecs = unextendible_product_basis()
    gram = vecs.conj() @ vecs.T
    np.testing.assert_allclose(gram, np.eye(5), atol=1e-12)


def test_upb_projector_is_idempotent():
    vecs = unextendible_product_basis()
    p = vecs.T @ vecs.conj()
    assert np.max(np.abs(p @ p - p)) < 1e-10


def test_upb_state_trace_and_validity():
    rho = upb_state()
    assert abs(np.trace(rho).real - 1.0) < 1e-12
    check_density_matrix(rho)


def test_upb_state_is_ppt_but_realignment_positive():
    rho = upb_state()
    assert negativity(rho) <= 1e-10
    witness = realignment_witness(rho)
    assert witness > 0
    assert witness == pytest.approx(UPB_REALIGNMENT, abs=1e-12)
    assert witness_pair(rho).classification == "bound"


def test_check_density_matrix_rejects_bad_inputs():
    good = horodecki_state(3.0)
    with pytest.raises(InvariantViolation, match="Hermitian"):
        bad = good.copy()
        bad[0, 1] += 1e-6
        check_density_matrix(bad)
    with pytest.raises(InvariantViolation, match="trace"):
        check_density_matrix(good * 0.5)
    with pytest.raises(InvariantViolation, match="positive"):
        bad = good.copy()
        bad[0, 0] -= 0.2
        bad[1, 1] += 0.2
        bad[0, 4] = 0.3
        bad[4, 0] = 0.3
        check_density_matrix(bad)
    with pytest.raises(InvariantViolation, match="9x9"):
        check_density_matrix(np.eye(3))
