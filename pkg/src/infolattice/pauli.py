"""Signed Pauli strings in symplectic (bit-packed) form and GF(2) elimination.

A string is ``i**phase_exp * W_0 x W_1 x ... x W_{L-1}`` with each ``W_j`` one
of the Hermitian matrices I, X, Y, Z selected by the bit pair
``(x_j, z_j)``: (0,0) -> I, (1,0) -> X, (1,1) -> Y, (0,1) -> Z.  Bit ``j`` of
the packed integers ``x`` and ``z`` is the exponent on site ``j``.  Hermitian
strings therefore carry an even i-exponent (prefactor +1 or -1); products are
tracked phase-exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from . import _kernels
from .errors import DimensionMismatchError

_PHASE_PREFIX = {0: "", 1: "+i", 2: "-", 3: "-i"}
_PREFIX_PHASE = {"": 0, "+": 0, "+i": 1, "i": 1, "-": 2, "-i": 3}
_BITS_CHAR = {(0, 0): "I", (1, 0): "X", (1, 1): "Y", (0, 1): "Z"}
_CHAR_BITS = {v: k for k, v in _BITS_CHAR.items()}


@dataclass(frozen=True)
class SupportInterval:
    """Closed interval of sites ``[left, right]``; scale is its diameter."""

    left: int
    right: int

    def __post_init__(self) -> None:
        if not (0 <= self.left <= self.right):
            raise ValueError(f"invalid interval [{self.left}, {self.right}]")

    @property
    def diameter(self) -> int:
        return self.right - self.left

    @property
    def num_sites(self) -> int:
        return self.right - self.left + 1

    @property
    def center(self) -> float:
        return (self.left + self.right) / 2

    def sites(self) -> range:
        return range(self.left, self.right + 1)

    def contains(self, site: int) -> bool:
        return self.left <= site <= self.right


@dataclass(frozen=True)
class PauliString:
    """Signed Pauli string on ``length`` sites with packed X/Z exponent bits."""

    length: int
    x: int
    z: int
    phase_exp: int = 0

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError("negative length")
        mask = (1 << self.length) - 1
        if (self.x & ~mask) or (self.z & ~mask):
            raise ValueError("bit pattern exceeds string length")
        object.__setattr__(self, "phase_exp", self.phase_exp % 4)

    # -- constructors ------------------------------------------------------

    @classmethod
    def identity(cls, length: int) -> "PauliString":
        return cls(length, 0, 0, 0)

    @classmethod
    def single(cls, length: int, site: int, kind: str, phase_exp: int = 0) -> "PauliString":
        """One nonidentity letter (X, Y or Z) at ``site``."""
        if not 0 <= site < length:
            raise IndexError(f"site {site} out of range for length {length}")
        xb, zb = _CHAR_BITS[kind.upper()]
        return cls(length, xb << site, zb << site, phase_exp)

    @classmethod
    def from_label(cls, label: str) -> "PauliString":
        """Parse e.g. ``"XXXX"``, ``"-IZII"``, ``"+iXY"``, ``"-iZ"``."""
        s = label.strip()
        prefix = ""
        while s and s[0] in "+-i":
            prefix += s[0]
            s = s[1:]
        if prefix not in _PREFIX_PHASE:
            raise ValueError(f"bad phase prefix in {label!r}")
        phase = _PREFIX_PHASE[prefix]
        x = z = 0
        for j, ch in enumerate(s):
            try:
                xb, zb = _CHAR_BITS[ch.upper()]
            except KeyError:
                raise ValueError(f"bad Pauli letter {ch!r} in {label!r}") from None
            x |= xb << j
            z |= zb << j
        return cls(len(s), x, z, phase)

    # -- presentation ------------------------------------------------------

    def label(self) -> str:
        letters = "".join(
            _BITS_CHAR[((self.x >> j) & 1, (self.z >> j) & 1)] for j in range(self.length)
        )
        return _PHASE_PREFIX[self.phase_exp] + letters

    def __str__(self) -> str:
        return self.label()

    # -- structure ---------------------------------------------------------

    @property
    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0

    @property
    def is_hermitian(self) -> bool:
        return self.phase_exp % 2 == 0

    def site_letter(self, site: int) -> str:
        return _BITS_CHAR[((self.x >> site) & 1, (self.z >> site) & 1)]

    def support(self) -> list[int]:
        occ = self.x | self.z
        return [j for j in range(self.length) if (occ >> j) & 1]

    def minimal_support(self) -> Optional[SupportInterval]:
        """Smallest interval covering all nonidentity sites; None for identity."""
        occ = self.x | self.z
        if occ == 0:
            return None
        left = (occ & -occ).bit_length() - 1
        right = occ.bit_length() - 1
        return SupportInterval(left, right)

    # -- algebra -----------------------------------------------------------

    def __mul__(self, other: "PauliString") -> "PauliString":
        return multiply(self, other)

    def commutes_with(self, other: "PauliString") -> bool:
        return commutes(self, other)


def _check_lengths(a: PauliString, b: PauliString) -> None:
    if a.length != b.length:
        raise DimensionMismatchError(
            f"Pauli strings act on {a.length} vs {b.length} sites"
        )


def multiply(a: PauliString, b: PauliString) -> PauliString:
    """Group product ``a * b`` with exact phase."""
    _check_lengths(a, b)
    delta = _kernels.pauli_mul_phase(a.x, a.z, b.x, b.z)
    return PauliString(a.length, a.x ^ b.x, a.z ^ b.z, (a.phase_exp + b.phase_exp + delta) % 4)


def commutes(a: PauliString, b: PauliString) -> bool:
    """True iff the symplectic inner product of the two strings is even."""
    _check_lengths(a, b)
    return ((a.x & b.z).bit_count() + (a.z & b.x).bit_count()) % 2 == 0


def default_column_order(length: int) -> list[int]:
    """Site 0 X, site 0 Z, site 1 X, ... (column ``2*site + (0 for X, 1 for Z)``)."""
    return list(range(2 * length))


def row_reduce(generators: Sequence[PauliString]) -> tuple[list[PauliString], int]:
    """Reduce to an independent generating set of the (phaseless) span.

    Elimination runs in the fixed column order of ``default_column_order`` so
    the resulting basis is canonical for the span; phases ride along on the
    representatives.  Returns ``(basis, rank)``.
    """
    gens = list(generators)
    if not gens:
        return [], 0
    length = gens[0].length
    for g in gens:
        if g.length != length:
            raise DimensionMismatchError("mixed string lengths in row_reduce")
    xs = [g.x for g in gens]
    zs = [g.z for g in gens]
    ph = [g.phase_exp for g in gens]
    rank, _ = _kernels.reduce_pauli_rows(xs, zs, ph, default_column_order(length), length)
    basis = [PauliString(length, xs[k], zs[k], ph[k]) for k in range(rank)]
    return basis, rank


def spans_same_group(a: Iterable[PauliString], b: Iterable[PauliString]) -> bool:
    """Phaseless comparison of the groups generated by two sets."""
    basis_a, rank_a = row_reduce(list(a))
    basis_b, rank_b = row_reduce(list(b))
    if rank_a != rank_b:
        return False
    return [(g.x, g.z) for g in basis_a] == [(g.x, g.z) for g in basis_b]
