"""State factory: reference states, T-doped circuits, and the spin-1/2
three-state Potts chain with a symmetric-sector ground-state solver.

The Potts Hamiltonian on N qutrits (open boundaries) is

    H = -(J/3) * sum_{i<N} (Zd_i Z_{i+1} + Z_i Zd_{i+1}) - h * sum_i (Xd_i + X_i)

with the 3x3 clock matrix Z = diag(1, w, w^2), w = exp(2*pi*i/3), and the
shift X|k> = |k+1 mod 3>.  It commutes with the charge Q = prod_i X_i; the
symmetric ground state is the lowest state in the Q = +1 sector.  The qutrit
chain embeds into 2N spins-1/2 by mapping each qutrit onto the triplet of a
neighboring pair: |0> -> |00>, |1> -> (|01>+|10>)/sqrt(2), |2> -> |11>.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from . import cliffords, gates
from .errors import ConfigurationError, NumericalError
from .lattice import (
    DEFAULT_GAP_THRESHOLD,
    analyze,
)
from .states import PureState
from .tableau import brickwork_bonds
from .witness import GROUND_STATE_TOL, LatticeVerdict, witness_long_range

OMEGA = np.exp(2j * np.pi / 3)

CLOCK_Z = np.diag([1.0, OMEGA, OMEGA**2]).astype(complex)
SHIFT_X = np.array([[0, 0, 1], [1, 0, 0], [0, 1, 0]], dtype=complex)

# triplet embedding isometry: qutrit basis -> two-qubit pair (left qubit MSB)
TRIPLET_ISOMETRY = np.array(
    [
        [1.0, 0.0, 0.0],
        [0.0, 1.0 / np.sqrt(2.0), 0.0],
        [0.0, 1.0 / np.sqrt(2.0), 0.0],
        [0.0, 0.0, 1.0],
    ],
    dtype=complex,
)


# ---------------------------------------------------------------------------
# reference states


def reference_state(name: str, length: int) -> PureState:
    """Named qubit reference states: ``neel``, ``bell`` (L=4 only), ``ghz``."""
    name = name.lower()
    if name == "neel":
        if length < 1:
            raise ConfigurationError("neel needs L >= 1")
        return PureState.from_label("".join(str(j % 2) for j in range(length)))
    if name == "bell":
        if length != 4:
            raise ConfigurationError("the bell reference state is defined for L = 4")
        amps = np.zeros(16, dtype=complex)
        amps[0b0101] = amps[0b0011] = 1.0 / np.sqrt(2.0)
        return PureState(amps, (2, 2, 2, 2))
    if name == "ghz":
        if length < 2:
            raise ConfigurationError("ghz needs L >= 2")
        amps = np.zeros(2**length, dtype=complex)
        amps[0] = amps[-1] = 1.0 / np.sqrt(2.0)
        return PureState(amps, (2,) * length)
    raise ConfigurationError(f"unknown reference state {name!r}")


def cat_state(branches: int, length: int, local_dim: Optional[int] = None) -> PureState:
    """q-fold cat state ``sum_k |k...k> / sqrt(q)`` on d-dimensional sites."""
    d = branches if local_dim is None else local_dim
    if branches > d:
        raise ConfigurationError("more branches than local levels")
    if length < 2:
        raise ConfigurationError("cat state needs at least two sites")
    amps = np.zeros(d**length, dtype=complex)
    step = (d**length - 1) // (d - 1)  # index of |k...k> is k * step
    for k in range(branches):
        amps[k * step] = 1.0 / np.sqrt(branches)
    return PureState(amps, (d,) * length)


def edge_bell_state(length: int) -> PureState:
    """Bell pair between the chain ends, product |0> elsewhere."""
    if length < 2:
        raise ConfigurationError("need at least two sites")
    amps = np.zeros(2**length, dtype=complex)
    amps[0] = 1.0 / np.sqrt(2.0)
    amps[(1 << (length - 1)) | 1] = 1.0 / np.sqrt(2.0)
    return PureState(amps, (2,) * length)


# ---------------------------------------------------------------------------
# T-doped circuits


@dataclass(frozen=True)
class TDopedCircuitSpec:
    """Blocks of single-qubit Clifford layers with T insertions, closed by a
    two-layer brickwork entangler.

    Within each block, ``t_gates_per_block`` positions are drawn without
    replacement from (qubit, inter-layer slot) pairs; slot s means after the
    s-th Clifford layer of the block, so every T sits strictly between two
    Clifford layers.  The closing pair of uniform two-qubit brickwork layers
    spreads correlations over a few scales while its light cone keeps all
    information strictly below scale L/2, so the output is genuinely
    short-range (exactly zero large-scale information) yet carries noninteger
    local information from the T gates.
    """

    length: int
    blocks: int = 3
    clifford_layers_per_block: int = 10
    t_gates_per_block: int = 5
    seed: int = 0
    entangling_layers: int = 2

    def __post_init__(self) -> None:
        if self.length < 2:
            raise ConfigurationError("need at least two qubits")
        if self.clifford_layers_per_block < 2 and self.t_gates_per_block > 0:
            raise ConfigurationError("T slots need at least two Clifford layers")
        slots = self.length * max(0, self.clifford_layers_per_block - 1)
        if self.t_gates_per_block > slots:
            raise ConfigurationError("more T gates than available slots")
        if 2 * self.entangling_layers >= self.length // 2:
            raise ConfigurationError(
                "entangling depth would close the large-scale gap"
            )


def t_doped_state(spec: TDopedCircuitSpec) -> PureState:
    """Dense output state of the T-doped circuit; deterministic under seed."""
    L = spec.length
    rng = np.random.Generator(np.random.Philox(spec.seed))
    psi = PureState.from_label("0" * L)
    t_matrix = gates.MATRICES_1Q["T"]
    for _ in range(spec.blocks):
        slots = [(q, s) for s in range(1, spec.clifford_layers_per_block) for q in range(L)]
        t_at: dict[int, list[int]] = {}
        if spec.t_gates_per_block:
            picks = rng.choice(len(slots), size=spec.t_gates_per_block, replace=False)
            for j in (int(p) for p in picks):
                q, s = slots[j]
                t_at.setdefault(s, []).append(q)
        for layer in range(1, spec.clifford_layers_per_block + 1):
            for q in range(L):
                idx = int(rng.integers(0, cliffords.SINGLE_QUBIT_COUNT))
                psi = psi.apply_unitary(cliffords.clifford_matrix(1, idx), q)
            for q in sorted(t_at.get(layer, [])):
                psi = psi.apply_unitary(t_matrix, q)
    for k in range(spec.entangling_layers):
        for a, _ in brickwork_bonds(L, k):
            idx = int(rng.integers(0, cliffords.TWO_QUBIT_COUNT))
            psi = psi.apply_unitary(cliffords.clifford_matrix(2, idx), a)
    return psi


# ---------------------------------------------------------------------------
# Potts model


@dataclass(frozen=True)
class PottsSpec:
    """Qutrit count and couplings of the three-state Potts chain."""

    qutrits: int
    coupling: float = 1.0
    field: float = 0.0

    def __post_init__(self) -> None:
        if self.qutrits < 2:
            raise ConfigurationError("need at least two qutrits")
        for name, v in (("coupling", self.coupling), ("field", self.field)):
            if not math.isfinite(v) or v < 0:
                raise ConfigurationError(f"{name} must be finite and nonnegative")


def _site_operator(op: np.ndarray, site: int, n: int) -> sp.csr_matrix:
    mats = [sp.identity(3, format="csr", dtype=complex)] * n
    mats[site] = sp.csr_matrix(op)
    out = mats[0]
    for m in mats[1:]:
        out = sp.kron(out, m, format="csr")
    return out


def potts_hamiltonian(spec: PottsSpec) -> sp.csr_matrix:
    """Sparse Hermitian Hamiltonian on the full 3^N space, open boundaries."""
    n = spec.qutrits
    dim = 3**n
    h = sp.csr_matrix((dim, dim), dtype=complex)
    zdz = CLOCK_Z.conj().T
    for i in range(n - 1):
        zi = _site_operator(CLOCK_Z, i, n)
        zdi = _site_operator(zdz, i, n)
        zj = _site_operator(CLOCK_Z, i + 1, n)
        zdj = _site_operator(zdz, i + 1, n)
        h = h - (spec.coupling / 3.0) * (zdi @ zj + zi @ zdj)
    for i in range(n):
        xi = _site_operator(SHIFT_X, i, n)
        h = h - spec.field * (xi.conj().T + xi)
    return h.tocsr()


def charge_operator(n: int) -> sp.csr_matrix:
    """Global shift ``prod_i X_i`` as a sparse basis permutation."""
    dim = 3**n
    rows = np.empty(dim, dtype=np.int64)
    for idx in range(dim):
        rem, out, place = idx, 0, 1
        for _ in range(n):
            out += ((rem % 3 + 1) % 3) * place
            rem //= 3
            place *= 3
        rows[idx] = out
    data = np.ones(dim)
    return sp.csr_matrix((data, (rows, np.arange(dim))), shape=(dim, dim))


def symmetric_sector_isometry(n: int) -> sp.csr_matrix:
    """Isometry onto the charge-0 sector of ``prod_i X_i`` (dimension 3^{N-1}).

    Basis orbits under the global shift have size three; each orbit
    contributes the uniform combination of its members.
    """
    dim = 3**n

    def shifted(idx: int) -> int:
        rem, out, place = idx, 0, 1
        for _ in range(n):
            out += ((rem % 3 + 1) % 3) * place
            rem //= 3
            place *= 3
        return out

    cols: list[int] = []
    rows: list[int] = []
    seen = np.zeros(dim, dtype=bool)
    col = 0
    for idx in range(dim):
        if seen[idx]:
            continue
        orbit = [idx, shifted(idx), shifted(shifted(idx))]
        for member in orbit:
            seen[member] = True
            rows.append(member)
            cols.append(col)
        col += 1
    data = np.full(len(rows), 1.0 / np.sqrt(3.0))
    return sp.csr_matrix((data, (rows, cols)), shape=(dim, col))


def symmetric_ground_state(
    spec: PottsSpec, *, residual_tol: float = 1e-9
) -> tuple[PureState, float]:
    """Lowest eigenvector of H in the charge-0 sector, with its energy.

    Diagonalizes the sector-projected Hamiltonian (dense below ~1000 states,
    Lanczos above), lifts back to the full space, fixes the global phase, and
    verifies the eigen-residual and the sector membership.
    """
    n = spec.qutrits
    h = potts_hamiltonian(spec)
    p = symmetric_sector_isometry(n)
    h_sym = p.conj().T @ h @ p
    if n <= 6:
        dense = h_sym.toarray()
        if np.max(np.abs(dense - dense.conj().T)) > 1e-12:
            raise NumericalError("projected Hamiltonian lost hermiticity")
        energies, vectors = np.linalg.eigh(dense)
    else:
        energies, vectors = spla.eigsh(h_sym.tocsc(), k=1, which="SA", tol=0)
    energy = float(energies[0])
    v_sym = vectors[:, 0]
    v = p @ v_sym
    v = v / np.linalg.norm(v)
    k = int(np.argmax(np.abs(v)))
    v = v * (abs(v[k]) / v[k])
    residual = float(np.linalg.norm(h @ v - energy * v))
    if residual > residual_tol:
        raise NumericalError(f"eigen-residual {residual} above {residual_tol}")
    q = charge_operator(n)
    if float(np.linalg.norm(q @ v - v)) > 1e-9:
        raise NumericalError("ground state left the symmetric sector")
    return PureState(v, (3,) * n), energy


def embed_qutrit_to_spins(state: PureState) -> PureState:
    """Isometric embedding of a qutrit chain into pairs of spins-1/2."""
    if set(state.dims) != {3}:
        raise ConfigurationError("embedding expects a uniform qutrit chain")
    n = state.num_sites
    t = state.tensor()
    for axis in range(n):
        t = np.tensordot(TRIPLET_ISOMETRY, t, axes=([1], [axis]))
        t = np.moveaxis(t, 0, axis)
    # each 4-dim axis splits into two qubit axes in place (left qubit first)
    return PureState(t.ravel(), (2,) * (2 * n))


# ---------------------------------------------------------------------------
# sweep


@dataclass(frozen=True)
class SweepPoint:
    """One Potts sweep result row."""

    length: int
    field: float
    gamma: Optional[float]
    gamma_folded: Optional[float]
    omega: Optional[float]
    localized: Optional[bool]
    long_range_witnessed: Optional[bool]
    origin: Optional[str] = None
    energy: Optional[float] = None
    error: Optional[str] = None

    def to_csv_row(self) -> list:
        return [
            self.length,
            self.field,
            self.gamma,
            self.gamma_folded,
            self.omega,
            self.localized,
            self.long_range_witnessed,
        ]

    def to_dict(self) -> dict:
        return {
            "L": self.length,
            "h": self.field,
            "gamma": self.gamma,
            "gamma_folded": self.gamma_folded,
            "omega": self.omega,
            "localized": self.localized,
            "long_range_witnessed": self.long_range_witnessed,
            "origin": self.origin,
            "energy": self.energy,
            "error": self.error,
        }


SWEEP_CSV_COLUMNS = [
    "L",
    "h",
    "gamma",
    "gamma_folded",
    "omega",
    "localized",
    "long_range_witnessed",
]


def potts_point(
    length: int,
    field: float,
    coupling: float = 1.0,
    gap_threshold: float = DEFAULT_GAP_THRESHOLD,
    tol: float = GROUND_STATE_TOL,
    granularity: str = "qubit",
) -> tuple[SweepPoint, LatticeVerdict]:
    """Ground state -> (embedded) chain -> lattice -> verdict for one point."""
    if granularity not in ("qubit", "qutrit"):
        raise ConfigurationError(f"unknown granularity {granularity!r}")
    if granularity == "qubit" and length % 2:
        raise ConfigurationError("qubit chains have even length L = 2N")
    n = length // 2 if granularity == "qubit" else length
    gs, energy = symmetric_ground_state(PottsSpec(n, coupling, field))
    chain = embed_qutrit_to_spins(gs) if granularity == "qubit" else gs
    _, summary = analyze(chain, gap_threshold, with_fold=True)
    verdict = witness_long_range(summary, tol)
    point = SweepPoint(
        length=length,
        field=field,
        gamma=summary.gamma,
        gamma_folded=summary.gamma_folded,
        omega=summary.omega,
        localized=summary.localized,
        long_range_witnessed=verdict.long_range_witnessed,
        origin=verdict.origin,
        energy=energy,
    )
    return point, verdict


def potts_sweep(
    sizes: Sequence[int],
    fields: Sequence[float],
    coupling: float = 1.0,
    gap_threshold: float = DEFAULT_GAP_THRESHOLD,
    tol: float = GROUND_STATE_TOL,
    granularity: str = "qubit",
) -> list[SweepPoint]:
    """Sweep the field grid for each size; failures become error rows."""
    rows: list[SweepPoint] = []
    for length in sizes:
        for field in fields:
            try:
                point, _ = potts_point(
                    length, field, coupling, gap_threshold, tol, granularity
                )
            except Exception as exc:  # keep sweeping, record the failure
                point = SweepPoint(
                    length=length,
                    field=field,
                    gamma=None,
                    gamma_folded=None,
                    omega=None,
                    localized=None,
                    long_range_witnessed=None,
                    error=f"{type(exc).__name__}: {exc}",
                )
            rows.append(point)
    return rows


def crossing_brackets(
    rows: Sequence[SweepPoint], length_a: int, length_b: int
) -> list[tuple[float, float]]:
    """Field intervals where the gamma curves of two sizes cross.

    Returns (h_low, h_high) bracket pairs from sign changes of the difference
    on the common grid.
    """
    curve = {}
    for r in rows:
        if r.gamma is not None:
            curve.setdefault(r.length, {})[r.field] = r.gamma
    if length_a not in curve or length_b not in curve:
        return []
    common = sorted(set(curve[length_a]) & set(curve[length_b]))
    diffs = [curve[length_a][h] - curve[length_b][h] for h in common]
    brackets = []
    for k in range(len(common) - 1):
        if diffs[k] == 0.0:
            brackets.append((common[k], common[k]))
        elif diffs[k] * diffs[k + 1] < 0:
            brackets.append((common[k], common[k + 1]))
    return brackets
