"""Shapiro-type extremal constants on finite abelian groups.

``S(U, V)`` is the largest ratio ``sum_V f / sum_U f`` over nonzero doubly
positive ``f``. Doubly positive real functions are even, so the LP runs over
reflection orbits with the normalization ``sum_U f = 1``.

The dual side asks for the least ``C`` such that

    h_C = C chi_U - chi_V - chi_{-V}

dominates some positive definite ``g``; ``sigma = C / 2``. The two are solved
as separate LPs and must agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import cones
from .decomp import SolverFailure, orbit_sums, spectral_block, spectrum_to_function
from .group import GroupSpec, Window, reflect, sumset, translate
from .lp import LpProblem, solve
from .spectral import GFunc

DUALITY_TOL = 1e-7


@dataclass
class ExtremalResult:
    value: float
    optimizer: GFunc
    dual_C: float
    dual_g: GFunc
    gap: float

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "optimizer": self.optimizer.to_json(),
            "dual_C": self.dual_C,
            "dual_g": self.dual_g.to_json(),
            "gap": self.gap,
        }


class SigmaResult(NamedTuple):
    C: float
    g: GFunc

    @property
    def sigma(self) -> float:
        return self.C / 2


@dataclass
class DualityReport:
    s: float
    sigma: float
    gap: float
    C: float

    @property
    def ok(self) -> bool:
        return self.gap <= DUALITY_TOL

    def to_json(self) -> dict:
        return {"S": self.s, "sigma": self.sigma, "C": self.C, "gap": self.gap, "ok": self.ok}


def _check_base(U: Window) -> None:
    if len(U) == 0:
        raise ValueError("U must be nonempty")
    if 0 not in U.members:
        raise ValueError("U must contain the identity")
    if not U.is_symmetric:
        raise ValueError("U must be symmetric")


def _same_group(U: Window, V: Window) -> GroupSpec:
    if U.group != V.group:
        raise ValueError(f"windows live on different groups: {U.group} vs {V.group}")
    return U.group


def h_C(U: Window, V: Window, C: float) -> np.ndarray:
    return C * U.indicator() - V.indicator() - reflect(V).indicator()


def s_value(U: Window, V: Window) -> ExtremalResult:
    G = _same_group(U, V)
    _check_base(U)
    n_orb = len(G.orbits)
    sizes = G.orbit_sizes.astype(float)
    u = orbit_sums(G, U.indicator())
    v = orbit_sums(G, V.indicator())
    # spectrum of the orbit-constant f:  f^(gamma_P) = sum_O v_O sum_{x in O} cos(...)
    # which is |G| / |P| times the transposed spectral block
    K = spectral_block(G).T * G.total_order / sizes[:, None]
    A = np.vstack([u[None, :], K])
    senses = ["=="] + [">="] * n_orb
    b = np.concatenate([[1.0], np.zeros(n_orb)])
    sol = solve(LpProblem(v, A, senses, b, maximize=True))
    if sol.status != "optimal":
        raise SolverFailure(f"S(U,V) LP returned status {sol.status!r}")
    f = GFunc(G, np.clip(sol.x, 0.0, None)[G.orbit_of])
    value = float(V.indicator() @ f.real)

    # dual multipliers: c on the normalization, s_P <= 0 on the spectral rows
    c = float(sol.duals[0])
    s = np.clip(-sol.duals[1:], 0.0, None)
    # g(x) = 2 sum_P s_P cos(2 pi <gamma_P, x>) is positive definite
    g = spectrum_to_function(G, 2 * s * G.total_order / sizes)
    dual_C = 2 * c
    return ExtremalResult(value, f, dual_C, g, abs(dual_C / 2 - value))


def q_value(U: Window, k: int) -> ExtremalResult:
    return s_value(U, sumset(U, k))


def t_value(U: Window, g) -> ExtremalResult:
    return s_value(U, translate(U, g))


def sigma_value(U: Window, V: Window) -> SigmaResult:
    """Least ``C`` with a positive definite ``g <= h_C``, and that ``g``."""
    G = _same_group(U, V)
    _check_base(U)
    n_orb = len(G.orbits)
    sizes = G.orbit_sizes.astype(float)
    hu = orbit_sums(G, U.indicator()) / sizes
    hv = orbit_sums(G, V.indicator() + reflect(V).indicator()) / sizes
    # g on orbit O equals (1/|O|) * (orbit sum), i.e. spectral_block / |O|
    Kg = spectral_block(G) / sizes[:, None]
    # variables [C, t_P]:  g(O) - C hu(O) <= -hv(O)
    A = np.hstack([-hu[:, None], Kg])
    c = np.zeros(1 + n_orb)
    c[0] = 1.0
    lower = np.zeros(1 + n_orb)
    lower[0] = -np.inf
    sol = solve(LpProblem(c, A, ["<="] * n_orb, -hv, lower=lower))
    if sol.status != "optimal":
        raise SolverFailure(f"sigma LP returned status {sol.status!r}")
    C = float(sol.x[0])
    g = spectrum_to_function(G, np.clip(sol.x[1:], 0.0, None))
    return SigmaResult(C, g)


def duality_check(U: Window, V: Window) -> DualityReport:
    s = s_value(U, V).value
    C, _ = sigma_value(U, V)
    return DualityReport(s, C / 2, abs(C / 2 - s), C)


def logan_bound(T: float) -> float:
    """Logan's upper bound ``(1/2)([2T]+1)([2T]+2) / ([2T]+1-T)``."""
    if not T > 0:
        raise ValueError(f"T must be positive, got {T}")
    k = math.floor(2 * T)
    denom = k + 1 - T
    if denom <= 0:
        raise ValueError(f"[2T]+1-T must be positive, got {denom}")
    return 0.5 * (k + 1) * (k + 2) / denom


def discretize_line(T: float, half_width: float = 16.0, n: int = 512) -> tuple[GroupSpec, Window, Window]:
    """Embed ``S([-1,1], [-T,T])`` on the line into ``Z_n`` with spacing ``2 half_width / n``."""
    if n < 2 or n % 2:
        raise ValueError(f"n must be even and >= 2, got {n}")
    if half_width <= 0 or T <= 0:
        raise ValueError("half_width and T must be positive")
    G = GroupSpec.cyclic(n)
    h = 2.0 * half_width / n
    x = np.arange(n)
    pos = np.where(x < n // 2, x, x - n) * h
    eps = 1e-9 * h
    U = Window(G, frozenset(np.flatnonzero(np.abs(pos) <= 1.0 + eps).tolist()))
    V = Window(G, frozenset(np.flatnonzero(np.abs(pos) <= T + eps).tolist()))
    if len(U) == 0 or len(V) == 0:
        raise ValueError("grid too coarse: a window came out empty")
    if not U.is_symmetric:
        # only the antipode n/2 can break symmetry; it pairs with itself
        raise ValueError("U is not symmetric on this grid")
    return G, U, V


def optimizer_is_doubly_positive(res: ExtremalResult, tol: float = 1e-9) -> bool:
    return cones.is_doubly_positive(res.optimizer, tol)
