"""Dual-cone membership for the cone of real doubly positive functions.

A real measure ``rho`` pairs nonnegatively with every real doubly positive
function iff ``rho = omega + tau + o`` with ``omega >= 0``, ``tau`` of
positive type and ``o`` odd. Doubly positive real functions are even, so only
the even part of ``rho`` is constrained; the odd part goes to ``o`` as is.

The even part is split by an LP over reflection orbits:

    sum_{x in O} (omega(x) + tau(x)) = sum_{x in O} rho_even(x)   for each orbit O,
    omega >= 0 on orbits,  tau = idft(t),  t >= 0 on dual orbits.

Among feasible splits the LP picks the one with least ``tau(0)``. When the
system is infeasible its Farkas ray, read as a function constant on orbits,
is a doubly positive ``f`` with ``sum rho * f < 0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import cones
from .group import GroupSpec
from .lp import LpProblem, solve
from .spectral import GFunc, even_odd_split

DEFAULT_TOL = 1e-9


class SolverFailure(RuntimeError):
    """The LP engine returned something no certificate could be built from."""


@dataclass
class DecompResult:
    status: str
    omega: Optional[GFunc] = None
    tau: Optional[GFunc] = None
    odd: Optional[GFunc] = None
    residual: float = math.nan
    witness: Optional[GFunc] = None
    rho: Optional[GFunc] = field(default=None, repr=False)

    @property
    def is_member(self) -> bool:
        return self.status == "member"

    def verify(self, tol: float = DEFAULT_TOL) -> bool:
        """Re-check the certificate using only the cone predicates."""
        if self.is_member:
            total = self.omega + self.tau + self.odd
            return (
                np.abs(total.values - self.rho.values).max() <= tol
                and cones.is_nonneg(self.omega, tol)
                and cones.is_postype(self.tau, tol)
                and cones.is_odd(self.odd, tol)
            )
        f = self.witness
        return cones.is_doubly_positive(f, tol) and self.rho.pair(f).real <= -tol

    def to_json(self) -> dict:
        if self.is_member:
            return {
                "status": self.status,
                "omega": self.omega.to_json(),
                "tau": self.tau.to_json(),
                "odd": self.odd.to_json(),
                "residual": self.residual,
            }
        return {
            "status": self.status,
            "witness": self.witness.to_json(),
            "pairing": float(self.rho.pair(self.witness).real),
        }


@dataclass
class IntervalResult:
    empty: bool
    lo: float = math.nan
    hi: float = math.nan

    def __contains__(self, C: float) -> bool:
        return not self.empty and self.lo <= C <= self.hi

    def to_json(self) -> dict:
        enc = lambda v: None if not np.isfinite(v) else float(v)
        return {"empty": self.empty, "lo": enc(self.lo), "hi": enc(self.hi)}


# ---------------------------------------------------------------------------
# orbit bookkeeping shared with the extremal module


def orbit_sums(G: GroupSpec, values: np.ndarray) -> np.ndarray:
    """``sum_{x in O} values[x]`` for each reflection orbit ``O``."""
    return np.bincount(G.orbit_of, weights=values, minlength=len(G.orbits))


def spectral_block(G: GroupSpec) -> np.ndarray:
    """``K[O, P] = (1/|G|) sum_{x in O} sum_{gamma in P} cos(2 pi <gamma, x>)``.

    Column ``P`` is the orbit-summed values of ``idft`` of the indicator of
    dual orbit ``P``.
    """
    n_orb = len(G.orbits)
    C = G.cos_table  # [gamma, x]
    S = np.zeros((n_orb, n_orb))
    for P, gam in enumerate(G.orbits):
        row = C[gam].sum(axis=0)  # over gamma in P, as a function of x
        S[:, P] = orbit_sums(G, row)
    return S / G.total_order


def spectrum_to_function(G: GroupSpec, t_orbit: np.ndarray) -> GFunc:
    """Real even function whose transform equals ``t`` spread over dual orbits."""
    spec = t_orbit[G.orbit_of]
    f = np.fft.ifftn(spec.reshape(G.orders)).reshape(-1).real
    return GFunc(G, f)


def _require_real(f: GFunc, name: str, tol: float) -> np.ndarray:
    if not f.is_real(tol):
        raise ValueError(f"{name} must be a real measure")
    return f.real


def _membership_lp(G: GroupSpec, extra_col: Optional[np.ndarray] = None) -> tuple:
    n_orb = len(G.orbits)
    sizes = G.orbit_sizes.astype(float)
    K = spectral_block(G)
    blocks = [np.diag(sizes), K]
    if extra_col is not None:
        blocks.insert(0, extra_col[:, None])
    A = np.hstack(blocks)
    return A, n_orb


def decompose(rho: GFunc, tol: float = DEFAULT_TOL) -> DecompResult:
    G = rho.group
    r = _require_real(rho, "rho", tol)
    rho = GFunc(G, r)
    even, odd = even_odd_split(rho)
    A, n_orb = _membership_lp(G)
    b = orbit_sums(G, even.real)
    # least tau(0) = (1/|G|) sum_P |P| t_P
    c = np.concatenate([np.zeros(n_orb), G.orbit_sizes / G.total_order])
    sol = solve(LpProblem(c, A, ["=="] * n_orb, b))

    if sol.status == "optimal":
        w = np.clip(sol.x[:n_orb], 0.0, None)
        t = np.clip(sol.x[n_orb:], 0.0, None)
        omega = GFunc(G, w[G.orbit_of])
        tau = spectrum_to_function(G, t)
        odd = GFunc(G, odd.real)
        resid = float(np.abs((omega + tau + odd).values - rho.values).max())
        return DecompResult("member", omega=omega, tau=tau, odd=odd, residual=resid, rho=rho)
    if sol.status == "infeasible":
        witness = _witness_from_ray(G, sol.farkas)
        return DecompResult("non_member", witness=witness, rho=rho)
    raise SolverFailure(f"membership LP returned status {sol.status!r}")


def _witness_from_ray(G: GroupSpec, y: np.ndarray) -> GFunc:
    # the ray satisfies A^T y >= 0 and b.y < 0; read on orbits, A^T y >= 0
    # says exactly f >= 0 and dft(f) >= 0
    f = np.clip(np.asarray(y, dtype=float)[G.orbit_of], 0.0, None)
    scale = f.max(initial=0.0)
    if scale == 0:
        raise SolverFailure("Farkas ray does not lift to a nonzero doubly positive function")
    f = f / scale
    # lift spectral rounding dust: adding c * delta_0 raises every Fourier
    # coefficient by c and keeps f >= 0
    low = np.fft.fftn(f.reshape(G.orders)).real.min()
    if low < 0:
        f[0] -= low
    return GFunc(G, f / f[0])


def check_inequality(mu: GFunc, nu: GFunc, C: float, tol: float = DEFAULT_TOL) -> DecompResult:
    """Is ``sum f nu <= C sum f mu`` for every real doubly positive ``f``?"""
    return decompose(C * mu - nu, tol)


def admissible_interval(mu: GFunc, nu: GFunc, tol: float = DEFAULT_TOL) -> IntervalResult:
    """The set of ``C`` with ``C mu - nu`` in the dual cone, as ``[lo, hi]``."""
    G = mu.group
    m = _require_real(mu, "mu", tol)
    v = _require_real(nu, "nu", tol)
    mu_e = orbit_sums(G, (m + m[G.neg_index]) / 2)
    nu_e = orbit_sums(G, (v + v[G.neg_index]) / 2)
    A, n_orb = _membership_lp(G, extra_col=-mu_e)
    n_var = A.shape[1]
    lower = np.zeros(n_var)
    lower[0] = -np.inf
    c = np.zeros(n_var)
    c[0] = 1.0
    ends = []
    for maximize in (False, True):
        sol = solve(LpProblem(c, A, ["=="] * n_orb, -nu_e, lower=lower, maximize=maximize))
        if sol.status == "infeasible":
            return IntervalResult(True)
        if sol.status == "unbounded":
            ends.append(np.inf if maximize else -np.inf)
        elif sol.status == "optimal":
            ends.append(float(sol.x[0]))
        else:
            raise SolverFailure(f"interval LP returned status {sol.status!r}")
    return IntervalResult(False, ends[0], ends[1])


def intersection_is_odd(rho: GFunc, tol: float = DEFAULT_TOL) -> bool:
    """Does ``rho`` lie in both the dual cone and its negative?"""
    return decompose(rho, tol).is_member and decompose(-rho, tol).is_member
