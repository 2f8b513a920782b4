"""Elementary gate set: tableau conjugation rules and dense matrices.

The tableau rules act in place on parallel lists of packed Pauli rows
(``xs``, ``zs`` ints with bit ``j`` = site ``j``; ``ph`` i-exponents mod 4),
conjugating every row by the gate.  Dense matrices follow the global
convention that lower site indices are more significant tensor factors.
"""

from __future__ import annotations

import numpy as np

from .errors import NonCliffordGateError

CLIFFORD_GATES = {"H": 1, "S": 1, "X": 1, "Z": 1, "CNOT": 2, "CZ": 2}
NON_CLIFFORD_GATES = {"T": 1}
GATE_ARITY = {**CLIFFORD_GATES, **NON_CLIFFORD_GATES}

Gate = tuple  # (name, (qubits...))


def is_clifford(name: str) -> bool:
    return name in CLIFFORD_GATES


def apply_gate_rows(xs: list[int], zs: list[int], ph: list[int], name: str, qubits: tuple[int, ...]) -> None:
    """Conjugate every packed Pauli row by the named Clifford gate, in place."""
    n = len(xs)
    if name == "H":
        (q,) = qubits
        b = 1 << q
        for r in range(n):
            xq = xs[r] & b
            zq = zs[r] & b
            if xq and zq:
                ph[r] = (ph[r] + 2) % 4
            elif xq or zq:
                xs[r] ^= b
                zs[r] ^= b
    elif name == "S":
        (q,) = qubits
        b = 1 << q
        for r in range(n):
            xq = xs[r] & b
            if xq:
                if zs[r] & b:
                    ph[r] = (ph[r] + 2) % 4
                zs[r] ^= b
    elif name == "X":
        (q,) = qubits
        b = 1 << q
        for r in range(n):
            if zs[r] & b:
                ph[r] = (ph[r] + 2) % 4
    elif name == "Z":
        (q,) = qubits
        b = 1 << q
        for r in range(n):
            if xs[r] & b:
                ph[r] = (ph[r] + 2) % 4
    elif name == "CNOT":
        c, t = qubits
        bc, bt = 1 << c, 1 << t
        for r in range(n):
            xc = bool(xs[r] & bc)
            zt = bool(zs[r] & bt)
            if xc and zt and (bool(xs[r] & bt) == bool(zs[r] & bc)):
                ph[r] = (ph[r] + 2) % 4
            if xc:
                xs[r] ^= bt
            if zt:
                zs[r] ^= bc
    elif name == "CZ":
        a, b_ = qubits
        ba, bb = 1 << a, 1 << b_
        for r in range(n):
            xa = bool(xs[r] & ba)
            xb = bool(xs[r] & bb)
            if xa and xb and (bool(zs[r] & ba) != bool(zs[r] & bb)):
                ph[r] = (ph[r] + 2) % 4
            if xb:
                zs[r] ^= ba
            if xa:
                zs[r] ^= bb
    else:
        raise NonCliffordGateError(f"gate {name!r} is not in the Clifford set")


_SQ2 = 1.0 / np.sqrt(2.0)

MATRICES_1Q = {
    "H": np.array([[_SQ2, _SQ2], [_SQ2, -_SQ2]], dtype=complex),
    "S": np.array([[1, 0], [0, 1j]], dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
    "T": np.diag([1.0, np.exp(1j * np.pi / 4)]).astype(complex),
}

# two-qubit matrices in the basis |ab> with a the *first* (more significant) qubit
MATRICES_2Q = {
    "CNOT": np.array(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
    ),
    "CZ": np.diag([1, 1, 1, -1]).astype(complex),
}


def gate_matrix(name: str) -> np.ndarray:
    """Dense matrix of an elementary gate (2x2 or 4x4, first qubit = MSB)."""
    if name in MATRICES_1Q:
        return MATRICES_1Q[name]
    if name in MATRICES_2Q:
        return MATRICES_2Q[name]
    raise KeyError(f"no dense matrix for gate {name!r}")


def word_matrix(word: tuple[Gate, ...], num_qubits: int) -> np.ndarray:
    """Dense matrix of a gate word on ``num_qubits`` logical qubits (<= 2)."""
    if num_qubits not in (1, 2):
        raise ValueError("word_matrix supports 1 or 2 logical qubits")
    dim = 2**num_qubits
    u = np.eye(dim, dtype=complex)
    eye = np.eye(2, dtype=complex)
    for name, qubits in word:
        m = gate_matrix(name)
        if num_qubits == 1:
            full = m
        elif len(qubits) == 2:
            if qubits == (0, 1):
                full = m
            else:  # (1, 0): conjugate by swap
                swap = np.array(
                    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]],
                    dtype=complex,
                )
                full = swap @ m @ swap
        else:
            (q,) = qubits
            full = np.kron(m, eye) if q == 0 else np.kron(eye, m)
        u = full @ u
    return u
