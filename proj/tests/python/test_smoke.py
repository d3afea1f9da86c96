import math

import numpy as np
import pytest

import sepcert


def bell():
    psi = np.zeros(4, dtype=complex)
    psi[0] = psi[3] = 1 / math.sqrt(2)
    return sepcert.DensityMatrix.pure(psi, [2, 2])


def test_tau_basics():
    tau = sepcert.DensityMatrix.maximally_mixed([2, 2])
    assert sepcert.purity(tau) == pytest.approx(0.25)
    assert sepcert.min_eigenvalue(tau) == pytest.approx(0.25)
    assert sepcert.spectrum(tau) == pytest.approx([0.25] * 4)
    assert sepcert.is_ppt(tau).is_ppt


def test_bell_modulus_and_ppt():
    b = bell()
    assert sepcert.is_ppt(b).min_pt_eigenvalue == pytest.approx(-0.5)
    est = sepcert.modulus_ppt(b)
    assert est.exact
    assert est.value == pytest.approx(1 / 3, abs=1e-6)
    assert est.random_robustness == pytest.approx(2.0, abs=1e-5)


def test_werner_detection():
    w = sepcert.mix_with_trace(bell(), 0.5)
    assert not sepcert.is_ppt(w).is_ppt
    report = sepcert.theorem1_detector(w)
    assert report.verdict == sepcert.Verdict.inconclusive

    sep = sepcert.mix_with_trace(bell(), 0.2)
    reports = sepcert.run_all_detectors(sep)
    assert any(r.verdict == sepcert.Verdict.certified_separable for r in reports)


def test_l_constant():
    assert sepcert.l_constant([2, 2]) == pytest.approx(1 / 3)
    assert sepcert.l_constant([2, 3]) == pytest.approx(1 / 4)
    assert sepcert.l_constant([2, 2, 2]) == pytest.approx(1 / 25)


def test_validation_rejects_garbage():
    with pytest.raises(ValueError):
        sepcert.DensityMatrix.validate(np.eye(4, dtype=complex), [2, 2])  # trace 4


def test_gibbs_window():
    h = sepcert.Hamiltonian(np.diag([-1.0, 1.0, 1.0, 1.0]).astype(complex), [2, 2])
    tau = sepcert.gibbs(h, 0.0)
    assert sepcert.purity(tau) == pytest.approx(0.25)
    bo = sepcert.beta_o_bound(h)
    assert bo == pytest.approx(math.log(1.5) / 2)
    inside = sepcert.gibbs(h, bo)
    r = sepcert.theorem1_detector(inside)
    assert r.verdict == sepcert.Verdict.certified_separable


def test_critical_table():
    entries = {e.name: e for e in sepcert.critical_table([2, 2])}
    assert entries["C_purity"].exact
    assert entries["C_purity"].lo == pytest.approx(1 / 3)
    assert entries["C[2]"].lo == pytest.approx(2 / 3)


def test_run_suite_smoke():
    results = sepcert.run_suite("simplex", samples=10, seed=42)
    assert results
    assert all(r.passed for r in results)
