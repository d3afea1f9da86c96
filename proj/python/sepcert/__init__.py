"""Spectral separability certification toolkit."""

from sepcert._core import (
    CheckResult,
    CompositeDims,
    DensityMatrix,
    DetectorReport,
    Hamiltonian,
    ModulusEstimate,
    PPTReport,
    TableEntry,
    Verdict,
    beta_o_bound,
    critical_table,
    gibbs,
    is_ppt,
    l_constant,
    min_eigenvalue,
    mix_with_trace,
    modulus_ppt,
    partial_transpose,
    purity,
    run_all_detectors,
    run_suite,
    spectrum,
    theorem1_detector,
)

__all__ = [
    "CheckResult",
    "CompositeDims",
    "DensityMatrix",
    "DetectorReport",
    "Hamiltonian",
    "ModulusEstimate",
    "PPTReport",
    "TableEntry",
    "Verdict",
    "beta_o_bound",
    "critical_table",
    "gibbs",
    "is_ppt",
    "l_constant",
    "min_eigenvalue",
    "mix_with_trace",
    "modulus_ppt",
    "partial_transpose",
    "purity",
    "run_all_detectors",
    "run_suite",
    "spectrum",
    "theorem1_detector",
]
