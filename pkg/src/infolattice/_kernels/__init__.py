"""Kernel backend selection.

The hot loops (phase-exact GF(2) row reduction of Pauli rows) exist twice:
a Cython extension (``_core``) operating on packed uint64 words, and a
pure-Python fallback (``_purepy``) on arbitrary-precision ints.  The compiled
backend is used when it imported successfully and the chain is short enough
to pack into single words; set ``INFOLATTICE_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import importlib
import os

from . import _purepy
from ._purepy import pauli_mul_phase, reduce_vector_against

_core = None
if os.environ.get("INFOLATTICE_PURE", "") in ("", "0"):
    try:
        _core = importlib.import_module("._core", __name__)
    except ImportError:
        _core = None

BACKEND = "compiled" if _core is not None else "pure"

_COMPILED_MAX_SITES = 64


def has_compiled() -> bool:
    return _core is not None


def reduce_pauli_rows(
    xs: list[int],
    zs: list[int],
    phases: list[int],
    cols: list[int],
    num_sites: int,
) -> tuple[int, list[int]]:
    """Dispatching wrapper around the backend row reduction.

    Mutates the row lists in place; see ``_purepy.reduce_pauli_rows`` for the
    contract.  ``num_sites`` decides whether rows fit the packed compiled path.
    """
    if _core is not None and num_sites <= _COMPILED_MAX_SITES:
        return _core.reduce_pauli_rows_packed(xs, zs, phases, cols)
    return _purepy.reduce_pauli_rows(xs, zs, phases, cols)


__all__ = [
    "BACKEND",
    "has_compiled",
    "pauli_mul_phase",
    "reduce_pauli_rows",
    "reduce_vector_against",
]
