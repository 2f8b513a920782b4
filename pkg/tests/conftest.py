"""Shared helpers: dense Pauli oracle, canonical random-circuit ensemble."""

from __future__ import annotations

import numpy as np
import pytest

from infolattice.pauli import PauliString

I2 = np.eye(2, dtype=complex)
PAULI_1Q = {
    "I": I2,
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def dense_pauli(p: PauliString) -> np.ndarray:
    """Independent dense matrix of a signed Pauli string (site 0 = MSB)."""
    m = np.array([[1.0 + 0j]])
    for j in range(p.length):
        m = np.kron(m, PAULI_1Q[p.site_letter(j)])
    return (1j ** p.phase_exp) * m


def random_pauli(rng: np.random.Generator, length: int, hermitian: bool = False) -> PauliString:
    x = int(rng.integers(0, 1 << length))
    z = int(rng.integers(0, 1 << length))
    phase = int(rng.integers(0, 2)) * 2 if hermitian else int(rng.integers(0, 4))
    return PauliString(length, x, z, phase)


def ensemble_specs(count: int = 200) -> list[tuple[int, int, int]]:
    """Canonical (L, layers, seed) triples for the random Clifford ensemble."""
    specs = []
    for i in range(count):
        L = (6, 8, 10, 12)[i % 4]
        layers = (i * 7) % 21
        specs.append((L, layers, 1000 + i))
    return specs


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240817)
