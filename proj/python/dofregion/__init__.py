# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 The dofregion Authors
"""Degree-of-freedom regions of two-user MIMO interference channels without CSIT."""

from ._core import (
    AntennaConfig,
    Check,
    DofRegion,
    Estimate,
    HalfPlane,
    SuiteReport,
    __version__,
    bpsk_awgn_mi,
    c_star,
    compute_region,
    immse_check,
    is_subset,
    previous_outer_bound,
    run_cli,
    run_suite,
    same_vertices,
    single_link_mi,
    suite_names,
    sweep,
    tradeoff_slope,
)

__all__ = [
    "AntennaConfig",
    "Check",
    "DofRegion",
    "Estimate",
    "HalfPlane",
    "SuiteReport",
    "__version__",
    "bpsk_awgn_mi",
    "c_star",
    "compute_region",
    "immse_check",
    "is_subset",
    "previous_outer_bound",
    "run_cli",
    "run_suite",
    "same_vertices",
    "single_link_mi",
    "suite_names",
    "sweep",
    "tradeoff_slope",
]
