"""Frequency matrices, positionwise distances and skeleton maps of vote distributions."""

from ._core import (
    VotemapError,
    compass_matrix,
    emd,
    fit_model,
    frequency_matrix,
    kemeny,
    model_matrix,
    norm_phi_to_phi,
    phi_to_norm_phi,
    positionwise_distance,
    read_soc,
    sample_election,
    skeleton_map,
    write_soc,
)

__version__ = "0.1.0"

__all__ = [
    "VotemapError",
    "compass_matrix",
    "emd",
    "fit_model",
    "frequency_matrix",
    "kemeny",
    "model_matrix",
    "norm_phi_to_phi",
    "phi_to_norm_phi",
    "positionwise_distance",
    "read_soc",
    "sample_election",
    "skeleton_map",
    "write_soc",
]
