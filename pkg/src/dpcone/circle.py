"""Atomic extraction on the circle from Fourier coefficients.

A measure on ``[0, 2 pi)`` is stored as finitely many atoms plus a density
given by a trigonometric polynomial, so

    mu^(n) = sum_j a_j exp(-i n x_j) + d^(n),    d^(n) = 0 for |n| > D.

The mean value over the dual group is realized as the Cesaro average
``M_N(phi) = (1/(2N+1)) sum_{|n|<=N} phi(n)``. Every estimate below comes with
an explicit bound built from the Dirichlet kernel

    |sum_{|n|<=N} exp(i n t)| = |sin((N+1/2) t) / sin(t/2)| <= min(2N+1, 1/|sin(t/2)|).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

import numpy as np
from scipy.optimize import minimize_scalar

TWO_PI = 2.0 * math.pi
MIN_SEPARATION = 1e-12
# relative allowance for floating-point summation in the closed-form bounds
_ROUND = 64 * np.finfo(float).eps


@dataclass(frozen=True, eq=False)
class CircleMeasure:
    positions: np.ndarray
    masses: np.ndarray
    density: np.ndarray = field(default_factory=lambda: np.zeros(1, dtype=complex))

    def __post_init__(self):
        x = np.mod(np.asarray(self.positions, dtype=float).reshape(-1), TWO_PI)
        a = np.asarray(self.masses, dtype=complex).reshape(-1)
        d = np.asarray(self.density, dtype=complex).reshape(-1)
        if x.size != a.size:
            raise ValueError(f"{x.size} positions but {a.size} masses")
        if d.size % 2 == 0:
            raise ValueError("density table must cover a symmetric range -D..D")
        if not (np.all(np.isfinite(x)) and np.all(np.isfinite(a)) and np.all(np.isfinite(d))):
            raise ValueError("non-finite measure data")
        if x.size > 1:
            s = np.sort(x)
            gaps = np.append(np.diff(s), s[0] + TWO_PI - s[-1])
            if gaps.min() <= MIN_SEPARATION:
                raise ValueError("atom positions must be distinct")
        for arr in (x, a, d):
            arr.setflags(write=False)
        object.__setattr__(self, "positions", x)
        object.__setattr__(self, "masses", a)
        object.__setattr__(self, "density", d)

    @classmethod
    def from_atoms(cls, atoms: Iterable = (), density: Optional[dict] = None) -> "CircleMeasure":
        """Build from ``(x, a)`` pairs and a ``{n: coefficient}`` table.

        Atoms that land on the same point (mod 2 pi) are merged.
        """
        merged: list[list] = []
        for x, a in atoms:
            x = math.fmod(float(x), TWO_PI)
            x = x + TWO_PI if x < 0 else x
            for item in merged:
                t = abs(item[0] - x)
                if min(t, TWO_PI - t) <= MIN_SEPARATION:
                    item[1] += complex(a)
                    break
            else:
                merged.append([x, complex(a)])
        density = density or {}
        D = max((abs(int(n)) for n in density), default=0)
        table = np.zeros(2 * D + 1, dtype=complex)
        for n, c in density.items():
            table[int(n) + D] += complex(c)
        pos = [m[0] for m in merged]
        mass = [m[1] for m in merged]
        return cls(np.array(pos, dtype=float), np.array(mass, dtype=complex), table)

    @property
    def degree(self) -> int:
        return (self.density.size - 1) // 2

    @property
    def n_atoms(self) -> int:
        return self.positions.size

    def density_coeff(self, n) -> np.ndarray:
        n = np.asarray(n)
        D = self.degree
        out = np.zeros(n.shape, dtype=complex)
        inside = np.abs(n) <= D
        out[inside] = self.density[n[inside] + D]
        return out

    def is_real(self, tol: float = 1e-12) -> bool:
        """Real measure: real masses and ``d^(-n) = conj(d^(n))``."""
        if self.n_atoms and np.abs(self.masses.imag).max() > tol:
            return False
        return bool(np.abs(self.density - np.conj(self.density[::-1])).max(initial=0.0) <= tol)

    def point_mass(self, x0: float) -> complex:
        """``mu({x0})`` read off the stored atoms."""
        j = _nearest_atom(self, x0)
        return complex(self.masses[j]) if j is not None else 0j

    def atomic_part(self) -> "CircleMeasure":
        return CircleMeasure(self.positions, self.masses)

    def continuous_part(self) -> "CircleMeasure":
        return CircleMeasure(np.zeros(0), np.zeros(0), self.density)

    def to_json(self) -> dict:
        D = self.degree
        return {
            "atoms": [[float(x), float(a.real), float(a.imag)] for x, a in zip(self.positions, self.masses)],
            "density": [
                [n - D, float(c.real), float(c.imag)] for n, c in enumerate(self.density) if c != 0
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CircleMeasure":
        atoms = []
        for row in data.get("atoms", []):
            x, re, im = (list(row) + [0.0, 0.0])[:3]
            atoms.append((x, complex(re, im)))
        density = {}
        for row in data.get("density", []):
            n, re, im = (list(row) + [0.0, 0.0])[:3]
            if float(n) != int(n):
                raise ValueError(f"density index must be an integer, got {n}")
            density[int(n)] = density.get(int(n), 0j) + complex(re, im)
        return cls.from_atoms(atoms, density)


def _nearest_atom(m: CircleMeasure, x0: float) -> Optional[int]:
    if not m.n_atoms:
        return None
    t = np.abs(m.positions - math.fmod(x0, TWO_PI) % TWO_PI)
    t = np.minimum(t, TWO_PI - t)
    j = int(np.argmin(t))
    return j if t[j] <= MIN_SEPARATION else None


def atomic_transform(m: CircleMeasure, n) -> np.ndarray:
    n = np.asarray(n, dtype=float)
    if not m.n_atoms:
        return np.zeros(n.shape, dtype=complex)
    return np.exp(-1j * np.multiply.outer(n, m.positions)) @ m.masses


def fourier_coeff(m: CircleMeasure, n):
    """``mu^(n)``; vectorized over integer arrays."""
    n_arr = np.asarray(n)
    if not np.issubdtype(n_arr.dtype, np.integer):
        if np.any(n_arr != np.round(n_arr)):
            raise ValueError("Fourier coefficients are indexed by integers")
        n_arr = n_arr.astype(int)
    out = atomic_transform(m, n_arr) + m.density_coeff(n_arr)
    return complex(out) if out.ndim == 0 else out


def mean_value(phi: Callable, N: int) -> complex:
    """Cesaro mean of ``phi`` over ``-N..N``; ``phi`` receives the index array."""
    if N < 0:
        raise ValueError(f"N must be nonnegative, got {N}")
    n = np.arange(-N, N + 1)
    vals = np.broadcast_to(np.asarray(phi(n)), n.shape)
    return complex(vals.sum() / (2 * N + 1))


def dirichlet_factor(t, N: int) -> np.ndarray:
    """``min(1, 1/((2N+1)|sin(t/2)|))``, the bound on ``|M_N(exp(i n t))|``."""
    s = np.abs(np.sin(np.asarray(t, dtype=float) / 2))
    with np.errstate(divide="ignore"):
        return np.minimum(1.0, 1.0 / ((2 * N + 1) * s))


def atomic_mass(m: CircleMeasure, x0: float, N: int) -> complex:
    """``M_N(exp(i n x0) mu^(n))``, which tends to ``mu({x0})``."""
    if N < m.degree:
        raise ValueError(f"N = {N} is below the density degree {m.degree}")
    return mean_value(lambda n: np.exp(1j * n * x0) * fourier_coeff(m, n), N)


def atomic_mass_bound(m: CircleMeasure, x0: float, N: int) -> float:
    """Closed-form bound on ``|atomic_mass(m, x0, N) - mu({x0})|``.

    Atoms away from ``x0`` contribute a Dirichlet tail each; the density adds
    its window sum ``|sum_{|n|<=D} exp(i n x0) d^(n)| / (2N+1)``. A rounding
    allowance proportional to the total variation keeps the bound valid when
    it is attained exactly.
    """
    j0 = _nearest_atom(m, x0)
    others = np.ones(m.n_atoms, dtype=bool)
    if j0 is not None:
        others[j0] = False
    atoms = float(np.sum(np.abs(m.masses[others]) * dirichlet_factor(x0 - m.positions[others], N)))
    D = m.degree
    k = np.arange(-D, D + 1)
    dens = abs(np.sum(np.exp(1j * k * x0) * m.density)) / (2 * N + 1)
    return atoms + dens + _ROUND * _mass(m)


def _mass(m: CircleMeasure) -> float:
    return float(np.abs(m.masses).sum() + np.abs(m.density).sum())


def energy(m: CircleMeasure, N: int) -> float:
    """``M_N(|mu^|^2)``, which tends to ``sum_j |a_j|^2``."""
    return mean_value(lambda n: np.abs(fourier_coeff(m, n)) ** 2, N).real


def atomic_energy(m: CircleMeasure) -> float:
    return float(np.sum(np.abs(m.masses) ** 2))


def energy_bound(m: CircleMeasure, N: int) -> float:
    """Closed-form bound on ``|energy(m, N) - sum |a_j|^2|``.

    Expanding ``|A + d|^2`` leaves the atom cross terms, each a Dirichlet
    mean, plus ``|d|^2 + 2|A||d|`` on the density's support.
    """
    a = np.abs(m.masses)
    cross = 0.0
    if m.n_atoms > 1:
        t = np.subtract.outer(m.positions, m.positions)
        w = dirichlet_factor(t, N)
        np.fill_diagonal(w, 0.0)
        cross = float(a @ w @ a)
    D = min(N, m.degree)
    k = np.arange(-D, D + 1)
    d = np.abs(m.density_coeff(k))
    A = np.abs(atomic_transform(m, k))
    dens = float(np.sum(d * d + 2 * A * d)) / (2 * N + 1)
    return cross + dens + _ROUND * _mass(m) ** 2


def scan_atoms(m: CircleMeasure, N: int, oversample: int = 4, max_atoms: int = 64) -> list[tuple[float, complex]]:
    """Grid search for atoms whose estimated mass exceeds ``10/(2N+1)``.

    The estimate on the grid ``x_k = 2 pi k / L`` is one inverse FFT of the
    truncated coefficients. Found atoms are peeled off one at a time (largest
    first, position refined off-grid), and their Dirichlet response is
    subtracted so sidelobes are not reported as atoms.
    """
    if N < m.degree:
        raise ValueError(f"N = {N} is below the density degree {m.degree}")
    L = oversample * (2 * N + 1)
    n = np.arange(-N, N + 1)
    coeffs = fourier_coeff(m, n)
    thresh = 10.0 / (2 * N + 1)
    found: list[tuple[float, complex]] = []

    def estimate(x):
        return np.sum(np.exp(1j * n * x) * coeffs) / (2 * N + 1)

    for _ in range(max_atoms):
        spec = np.zeros(L, dtype=complex)
        spec[n % L] = coeffs
        mag = np.abs(np.fft.ifft(spec)) * L / (2 * N + 1)
        k = int(np.argmax(mag))
        if mag[k] <= thresh:
            break
        step = TWO_PI / L
        res = minimize_scalar(
            lambda x: -abs(estimate(x)), bounds=(k * step - step, k * step + step), method="bounded",
            options={"xatol": 1e-12 * TWO_PI},
        )
        x = float(res.x) % TWO_PI
        a = complex(estimate(x))
        found.append((x, a))
        coeffs = coeffs - a * np.exp(-1j * n * x)
    return sorted(found)


@dataclass
class PostypeCheck:
    ok: bool
    violated_index: Optional[int]
    min_real_part: float
    budget: float

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "violated_index": self.violated_index,
            "min_real_part": self.min_real_part,
            "budget": self.budget,
        }


def atomic_part_postype_check(
    m: CircleMeasure, sample_range: int, tol: float = 1e-9, N: Optional[int] = None
) -> PostypeCheck:
    """Positive type (real sense) of ``m`` should pass to its atomic part.

    Requires ``Re mu^(n) >= -tol`` for ``|n| <= sample_range`` and raises
    ``ValueError`` otherwise. Then checks ``Re mu_at^(n) >= -tol - eps``
    on the same range. With ``N`` given the atom masses are re-extracted by
    ``atomic_mass`` and ``eps`` is the sum of their error bounds; without it
    the stored masses are used and ``eps = 0``.
    """
    if sample_range < 0:
        raise ValueError("sample_range must be nonnegative")
    if not m.is_real(tol):
        raise ValueError("atomic positivity check needs a real measure")
    n = np.arange(-sample_range, sample_range + 1)
    total = fourier_coeff(m, n).real
    if total.min() < -tol:
        k = int(n[np.argmin(total)])
        raise ValueError(f"measure is not of positive type: Re mu^({k}) = {total.min():.3g}")
    if N is None:
        masses, eps = m.masses, 0.0
    else:
        masses = np.array([atomic_mass(m, x, N) for x in m.positions], dtype=complex)
        eps = float(sum(atomic_mass_bound(m, x, N) for x in m.positions))
    at = CircleMeasure(m.positions, masses)
    vals = atomic_transform(at, n).real
    low = float(vals.min(initial=np.inf)) if vals.size else 0.0
    bad = np.flatnonzero(vals < -tol - eps)
    idx = int(n[bad[0]]) if bad.size else None
    return PostypeCheck(idx is None, idx, low, eps)


def negative_part_energy(m: CircleMeasure, N: int) -> tuple[float, float]:
    """Mean square of the negative part of ``Re mu_at^`` against that of ``Re d^``.

    Where ``Re mu^ >= 0`` the negative part of the almost periodic piece is
    dominated pointwise by the small piece, so the first number never
    exceeds the second; the second is at most ``(2D+1) max|d^|^2 / (2N+1)``.
    """
    n = np.arange(-N, N + 1)
    ap = atomic_transform(m, n).real
    small = m.density_coeff(n).real
    neg = np.minimum(ap, 0.0)
    return float(np.mean(neg * neg)), float(np.mean(small * small))
