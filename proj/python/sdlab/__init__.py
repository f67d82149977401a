"""Exact Stanley depth, depth, Hilbert series and polarization of quotients
I/J of monomial ideals."""

from ._sdlab import (
    ModuleSpec,
    SdlabError,
    decompose,
    depth,
    hilbert_series,
    polarize,
    polarize_step,
    random_spec,
    sdepth,
    theorem_tags,
    verify,
)

__all__ = [
    "ModuleSpec",
    "SdlabError",
    "decompose",
    "depth",
    "hilbert_series",
    "polarize",
    "polarize_step",
    "random_spec",
    "sdepth",
    "theorem_tags",
    "verify",
]
