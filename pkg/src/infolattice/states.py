"""Dense pure states on qudit chains: gates, partial traces, entropies.

Amplitude indexing is row-major over sites with site 0 the most significant
tensor factor, i.e. the basis label reads left to right like the ket.
Chains may mix local dimensions (needed after folding); most constructors
produce uniform-dimension chains.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import gates
from .errors import DimensionMismatchError, MemoryCapError, NumericalError
from .pauli import PauliString, SupportInterval

NORM_ATOL = 1e-10
DEFAULT_MAX_RDM_SIDE = 4096


class PureState:
    """Normalized dense state vector over a chain with per-site dimensions."""

    __slots__ = ("dims", "amps")

    def __init__(self, amps: Sequence[complex], dims: Sequence[int], *, normalize: bool = False):
        amps = np.asarray(amps, dtype=complex).ravel()
        dims = tuple(int(d) for d in dims)
        if any(d < 2 for d in dims):
            raise ValueError(f"local dimensions must be >= 2, got {dims}")
        if math.prod(dims) != amps.size:
            raise DimensionMismatchError(
                f"amplitude count {amps.size} does not match dims {dims}"
            )
        norm = float(np.linalg.norm(amps))
        if normalize:
            if norm == 0.0:
                raise ValueError("cannot normalize the zero vector")
            amps = amps / norm
        elif abs(norm - 1.0) > NORM_ATOL:
            raise ValueError(f"state norm {norm} deviates from 1 beyond {NORM_ATOL}")
        self.amps = amps
        self.dims = dims

    # -- constructors ------------------------------------------------------

    @classmethod
    def computational(cls, dims: Sequence[int], digits: Sequence[int]) -> "PureState":
        """Basis state |digits...> on a chain with the given dimensions."""
        dims = tuple(dims)
        if len(digits) != len(dims):
            raise DimensionMismatchError("one digit per site required")
        idx = 0
        for d, g in zip(dims, digits):
            if not 0 <= g < d:
                raise ValueError(f"digit {g} out of range for dimension {d}")
            idx = idx * d + g
        amps = np.zeros(math.prod(dims), dtype=complex)
        amps[idx] = 1.0
        return cls(amps, dims)

    @classmethod
    def from_label(cls, label: str, d: int = 2) -> "PureState":
        """Basis state from a digit string, e.g. ``"0101"``."""
        digits = [int(ch) for ch in label]
        return cls.computational((d,) * len(label), digits)

    # -- basic structure ----------------------------------------------------

    @property
    def num_sites(self) -> int:
        return len(self.dims)

    @property
    def local_dim(self) -> int:
        """Uniform local dimension; raises on mixed-dimension chains."""
        d = set(self.dims)
        if len(d) != 1:
            raise ValueError(f"chain has mixed local dimensions {self.dims}")
        return d.pop()

    @property
    def log2_dims(self) -> tuple[float, ...]:
        return tuple(math.log2(d) for d in self.dims)

    def tensor(self) -> np.ndarray:
        return self.amps.reshape(self.dims)

    def overlap(self, other: "PureState") -> complex:
        if self.dims != other.dims:
            raise DimensionMismatchError("overlap of states with different dims")
        return complex(np.vdot(other.amps, self.amps))

    def mirror(self) -> "PureState":
        """Site-reflected state (site j -> L-1-j)."""
        t = self.tensor().transpose(tuple(reversed(range(self.num_sites))))
        return PureState(t.ravel(), tuple(reversed(self.dims)))

    # -- gates ---------------------------------------------------------------

    def apply_unitary(self, u: np.ndarray, first_site: int) -> "PureState":
        """Apply a unitary on contiguous sites starting at ``first_site``.

        The side of ``u`` must equal the product of the local dimensions it
        covers; unitarity is checked to 1e-10.
        """
        u = np.asarray(u, dtype=complex)
        if u.ndim != 2 or u.shape[0] != u.shape[1]:
            raise ValueError("unitary must be a square matrix")
        side = u.shape[0]
        if not 0 <= first_site < self.num_sites:
            raise IndexError(f"site {first_site} out of range")
        block = 1
        last = first_site
        while block < side and last < self.num_sites:
            block *= self.dims[last]
            last += 1
        if block != side:
            raise DimensionMismatchError(
                f"matrix side {side} does not cover whole sites from {first_site}"
            )
        if not np.allclose(u @ u.conj().T, np.eye(side), atol=1e-10):
            raise ValueError("matrix is not unitary within 1e-10")
        a = math.prod(self.dims[:first_site])
        c = math.prod(self.dims[last:])
        t = self.amps.reshape(a, side, c)
        out = np.einsum("ij,ajc->aic", u, t)
        return PureState(out.ravel(), self.dims)

    def apply_gate(self, name: str, *qubits: int) -> "PureState":
        """Apply a named elementary gate (qubit chains only)."""
        arity = gates.GATE_ARITY.get(name)
        if arity is None:
            raise ValueError(f"unknown gate {name!r}")
        if len(qubits) != arity:
            raise ValueError(f"gate {name} expects {arity} qubit(s)")
        for q in qubits:
            if not 0 <= q < self.num_sites:
                raise IndexError(f"qubit {q} out of range")
            if self.dims[q] != 2:
                raise DimensionMismatchError(f"gate {name} needs a qubit at site {q}")
        if arity == 1:
            return self._apply_axes(gates.gate_matrix(name), qubits)
        if qubits[0] == qubits[1]:
            raise ValueError("two-qubit gate needs distinct qubits")
        return self._apply_axes(
            gates.gate_matrix(name).reshape(2, 2, 2, 2), qubits
        )

    def _apply_axes(self, op: np.ndarray, axes: tuple[int, ...]) -> "PureState":
        """Contract an operator tensor (out-indices first) onto given site axes."""
        t = np.tensordot(op, self.tensor(), axes=(range(len(axes), 2 * len(axes)), axes))
        t = np.moveaxis(t, range(len(axes)), axes)
        return PureState(t.ravel(), self.dims)

    # -- reductions ----------------------------------------------------------

    def _split(self, interval: SupportInterval) -> tuple[int, int, int]:
        if interval.right >= self.num_sites:
            raise IndexError(f"interval {interval} exceeds chain of {self.num_sites} sites")
        a = math.prod(self.dims[: interval.left])
        m = math.prod(self.dims[interval.left : interval.right + 1])
        c = math.prod(self.dims[interval.right + 1 :])
        return a, m, c

    def reduced_density(
        self, interval: SupportInterval, max_side: int = DEFAULT_MAX_RDM_SIDE
    ) -> "ReducedDensityMatrix":
        """Reduced density matrix of a contiguous interval."""
        a, m, c = self._split(interval)
        if m > max_side:
            raise MemoryCapError(
                f"RDM side {m} exceeds cap {max_side} for interval {interval}"
            )
        t = self.amps.reshape(a, m, c)
        rho = np.einsum("amc,anc->mn", t, t.conj())
        rho = 0.5 * (rho + rho.conj().T)
        return ReducedDensityMatrix(
            interval, self.dims[interval.left : interval.right + 1], rho
        )

    def complement_density(
        self, interval: SupportInterval, max_side: int = DEFAULT_MAX_RDM_SIDE
    ) -> np.ndarray:
        """Density matrix of the (possibly two-piece) complement of an interval."""
        a, m, c = self._split(interval)
        if a * c > max_side:
            raise MemoryCapError(
                f"complement side {a * c} exceeds cap {max_side} for interval {interval}"
            )
        t = self.amps.reshape(a, m, c)
        rho = np.einsum("amc,bmd->acbd", t, t.conj()).reshape(a * c, a * c)
        return 0.5 * (rho + rho.conj().T)

    def entropy_of_interval(
        self, interval: SupportInterval, max_side: int = DEFAULT_MAX_RDM_SIDE
    ) -> float:
        """Von Neumann entropy in bits, via the smaller of interval/complement.

        For a pure state both sides have equal entropy, so the cheaper
        contraction is used.
        """
        a, m, c = self._split(interval)
        if m <= a * c:
            return entropy_bits(self.reduced_density(interval, max_side).matrix)
        return entropy_bits(self.complement_density(interval, max_side))


@dataclass(frozen=True)
class ReducedDensityMatrix:
    """Hermitized reduced density matrix of a contiguous interval."""

    interval: SupportInterval
    dims: tuple[int, ...]
    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = self.matrix
        if abs(float(np.trace(m).real) - 1.0) > 1e-10:
            raise NumericalError(f"RDM trace {np.trace(m)} deviates from 1")
        if float(np.max(np.abs(m - m.conj().T))) > 1e-12:
            raise NumericalError("RDM is not Hermitian within 1e-12")

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.matrix)


def entropy_bits(rho: np.ndarray) -> float:
    """Spectral von Neumann entropy in bits with clamping of tiny negatives."""
    lam = np.linalg.eigvalsh(rho)
    if float(lam.min(initial=0.0)) < -1e-9:
        raise NumericalError(f"density matrix has eigenvalue {lam.min()} < -1e-9")
    lam = np.clip(lam, 0.0, None)
    nz = lam[lam > 0.0]
    # an eigenvalue 1+eps would otherwise yield a spuriously negative total
    return max(0.0, float(-(nz * np.log2(nz)).sum()))


def von_neumann_entropy(rdm: "ReducedDensityMatrix | np.ndarray") -> float:
    """Entropy in bits of a reduced density matrix."""
    m = rdm.matrix if isinstance(rdm, ReducedDensityMatrix) else np.asarray(rdm)
    return entropy_bits(m)


def apply_pauli(amps: np.ndarray, num_sites: int, p: PauliString) -> np.ndarray:
    """Apply a signed Pauli string to a dense qubit amplitude vector."""
    if p.length != num_sites:
        raise DimensionMismatchError("Pauli length does not match chain")
    idx = np.arange(amps.size, dtype=np.uint64)
    xm = zm = 0
    for j in range(num_sites):
        shift = num_sites - 1 - j
        if (p.x >> j) & 1:
            xm |= 1 << shift
        if (p.z >> j) & 1:
            zm |= 1 << shift
    par = np.bitwise_count(idx & np.uint64(zm)) & 1
    glob = 1j ** ((p.phase_exp + (p.x & p.z).bit_count()) % 4)
    signed = amps * (glob * np.where(par, -1.0, 1.0))
    return signed[idx ^ np.uint64(xm)]


def pauli_expectation(state: PureState, p: PauliString) -> complex:
    return complex(np.vdot(state.amps, apply_pauli(state.amps, state.num_sites, p)))


def haar_random_state(dims: Sequence[int], rng: np.random.Generator) -> PureState:
    """Haar-random pure state from a normalized complex Gaussian vector."""
    n = math.prod(dims)
    v = rng.normal(size=n) + 1j * rng.normal(size=n)
    return PureState(v, dims, normalize=True)


def save_amplitudes(state: PureState, path: str) -> None:
    """Text export: header line with the dims, then one ``re im`` pair per row."""
    with open(path, "w", encoding="ascii") as fh:
        fh.write("dims " + " ".join(str(d) for d in state.dims) + "\n")
        for a in state.amps:
            fh.write(f"{float(a.real)!r} {float(a.imag)!r}\n")


def load_amplitudes(path: str) -> PureState:
    with open(path, encoding="ascii") as fh:
        header = fh.readline().split()
        if not header or header[0] != "dims":
            raise ValueError(f"{path}: missing 'dims' header")
        dims = [int(tok) for tok in header[1:]]
        amps = []
        for line in fh:
            line = line.strip()
            if not line:
                continue
            re_s, im_s = line.split()
            amps.append(complex(float(re_s), float(im_s)))
    return PureState(np.array(amps), dims)
