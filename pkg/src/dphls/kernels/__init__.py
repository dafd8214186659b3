"""The shipped kernel catalog: 15 alignment kernels as KernelSpec values."""

from __future__ import annotations

from ..core.contract import KernelSpec
from ..core.scoring import ScoringParams
from .affine import (
    kernel_banded_local_affine,
    kernel_global_affine,
    kernel_local_affine,
)
from .dtw import kernel_dtw, kernel_sdtw
from .hmm import kernel_viterbi
from .linear import (
    kernel_banded_global_linear,
    kernel_global_linear,
    kernel_local_linear,
    kernel_overlap,
    kernel_protein_local,
    kernel_semiglobal,
)
from .profile import kernel_profile
from .twopiece import kernel_banded_global_two_piece, kernel_global_two_piece

#: Factories in catalog order; banded entries accept a band_width keyword.
KERNEL_FACTORIES = {
    "1": kernel_global_linear,
    "2": kernel_global_affine,
    "3": kernel_local_linear,
    "4": kernel_local_affine,
    "5": kernel_global_two_piece,
    "6": kernel_overlap,
    "7": kernel_semiglobal,
    "8": kernel_profile,
    "9": kernel_dtw,
    "10": kernel_viterbi,
    "11": kernel_banded_global_linear,
    "12": kernel_banded_local_affine,
    "13": kernel_banded_global_two_piece,
    "14": kernel_sdtw,
    "15": kernel_protein_local,
}

BANDED_KERNEL_IDS = frozenset({"11", "12", "13"})

_BY_NAME = {
    "global-linear": "1",
    "global-affine": "2",
    "local-linear": "3",
    "local-affine": "4",
    "global-two-piece": "5",
    "overlap": "6",
    "semi-global": "7",
    "profile": "8",
    "dtw": "9",
    "viterbi": "10",
    "banded-global-linear": "11",
    "banded-local-affine": "12",
    "banded-global-two-piece": "13",
    "sdtw": "14",
    "protein-local": "15",
}


def catalog() -> dict[str, KernelSpec]:
    """All 15 kernels (no parameters bound), keyed by catalog id."""
    return {k: make() for k, make in KERNEL_FACTORIES.items()}


def create(
    key: str,
    params: ScoringParams | None = None,
    band_width: int | None = None,
) -> KernelSpec:
    """Instantiate a kernel by catalog id ('1'..'15', '#1' also accepted)
    or by name.  band_width applies to banded kernels only."""
    kernel_id = str(key).lstrip("#").lower()
    kernel_id = _BY_NAME.get(kernel_id, kernel_id)
    factory = KERNEL_FACTORIES.get(kernel_id)
    if factory is None:
        raise KeyError(f"unknown kernel {key!r}")
    if kernel_id in BANDED_KERNEL_IDS:
        if band_width is not None:
            return factory(params, band_width=band_width)
        return factory(params)
    if band_width is not None:
        raise ValueError(f"kernel {key!r} does not take a band width")
    return factory(params)


__all__ = [
    "KERNEL_FACTORIES",
    "BANDED_KERNEL_IDS",
    "catalog",
    "create",
    "kernel_global_linear",
    "kernel_global_affine",
    "kernel_local_linear",
    "kernel_local_affine",
    "kernel_global_two_piece",
    "kernel_overlap",
    "kernel_semiglobal",
    "kernel_profile",
    "kernel_dtw",
    "kernel_viterbi",
    "kernel_banded_global_linear",
    "kernel_banded_local_affine",
    "kernel_banded_global_two_piece",
    "kernel_sdtw",
    "kernel_protein_local",
]
