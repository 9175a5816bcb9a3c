"""Exact certification of spectral radius maximizers among connected graphs
with n - 1 + e edges."""

from ._threshcert import (
    InvalidArgument,
    OutOfProvenRange,
    ThreshcertError,
    VerificationFailed,
    bell_f,
    brute_force_max,
    build_D,
    build_V,
    certify_all,
    certify_candidate,
    charpoly,
    classify,
    corollary_range_check,
    count_S,
    d_steps,
    edge_params,
    ell_bound,
    enumerate_S,
    enumerate_S_star,
    omega_value,
    psi_poly,
    psi_value,
    recheck,
    spectral_radius,
    threshold_graph,
    v_steps,
)

__all__ = [name for name in dir() if not name.startswith("_")]
