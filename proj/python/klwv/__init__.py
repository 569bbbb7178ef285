"""Exact checks for the simple-current extension and its free-field pieces."""

from klwv._core import (
    KlwvError,
    classify,
    delta_atypical,
    delta_theta,
    delta_typical,
    enumerate_ordinary,
    eq1_solutions,
    fock_delta,
    fw_inner,
    gram_check,
    run_cli,
    singlet_delta,
    sos_certificate,
    sugawara_weight,
    verify_sympfermion,
    weyl_dim,
)

__all__ = [
    "KlwvError",
    "classify",
    "delta_atypical",
    "delta_theta",
    "delta_typical",
    "enumerate_ordinary",
    "eq1_solutions",
    "fock_delta",
    "fw_inner",
    "gram_check",
    "run_cli",
    "singlet_delta",
    "sos_certificate",
    "sugawara_weight",
    "verify_sympfermion",
    "weyl_dim",
]
