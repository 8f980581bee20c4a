"""Dense revised simplex with optimality and Farkas certificates.

Problems are stated in the natural form

    min/max  c.x   s.t.  a_i.x (<= | == | >=) b_i,   lo <= x <= hi

and converted internally to ``min c'.x', A'x' = b', x' >= 0``. Phase I drives
artificials out; phase II optimizes.

Each phase runs on a slightly perturbed right-hand side so that degenerate
vertices do not stall, then a few dual simplex pivots restore feasibility for
the true data. Pricing takes the steepest normalized reduced cost and the
leaving row comes from a Harris ratio test; after a long run of degenerate
pivots both switch to Bland's rule (lowest index), which cannot cycle. If the
perturbed pass fails to certify its answer the problem is re-solved without
perturbation.

Sign conventions, all relative to the caller's rows:

* ``duals[i]`` is the shadow price d(objective)/d(b_i) in the caller's sense.
* ``farkas[i]`` is nonnegative on ``<=`` rows and nonpositive on ``>=`` rows;
  every feasible ``x`` satisfies ``(A^T y).x <= y.b``, and infeasibility is
  certified by ``min over the box of (A^T y).x > y.b``.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

FEAS_TOL = 1e-9
GAP_TOL = 1e-7
_PIVOT_TOL = 1e-9
_TIE_TOL = 1e-12
# consecutive degenerate pivots before the leaving rule falls back to Bland
_BLAND_AFTER = 50
_SAFE_PIVOT = 1e-7
# below this (relative) a pivot is re-checked on a fresh factorization
_CHECK_PIVOT = 1e-3
_OPT_TOL = 1e-9
# relative size of the right-hand-side perturbation used against degeneracy
_PERTURB = 1e-7
_PERTURB_SEED = 20240611
_REFACTOR_EVERY = 40
# coefficients this small on an unbounded side are treated as exact zeros
# when a certificate is re-verified
_DUST = 1e-12

SENSES = ("<=", "==", ">=")


class LpFormatError(ValueError):
    pass


class IterationLimitError(RuntimeError):
    pass


class NumericalError(RuntimeError):
    pass


@dataclass
class LpProblem:
    c: np.ndarray
    A: np.ndarray
    senses: Sequence[str]
    b: np.ndarray
    lower: Optional[np.ndarray] = None
    upper: Optional[np.ndarray] = None
    maximize: bool = False

    def __post_init__(self):
        self.c = np.asarray(self.c, dtype=float).reshape(-1)
        n = self.c.size
        self.b = np.asarray(self.b, dtype=float).reshape(-1)
        A = np.asarray(self.A, dtype=float)
        if A.size == 0:
            A = np.zeros((self.b.size, n))
        elif A.ndim == 1:
            A = A[None, :]
        if A.ndim != 2 or A.shape[1] != n:
            raise LpFormatError(f"constraint matrix of shape {A.shape} does not match {n} variables")
        self.A = A
        self.senses = [("==" if s == "=" else s) for s in self.senses]
        m = self.A.shape[0]
        if self.b.size != m or len(self.senses) != m:
            raise LpFormatError(f"{m} constraint rows but {self.b.size} rhs and {len(self.senses)} senses")
        bad = [s for s in self.senses if s not in SENSES]
        if bad:
            raise LpFormatError(f"unknown constraint senses {bad}")
        self.lower = np.zeros(n) if self.lower is None else np.asarray(self.lower, dtype=float).reshape(-1)
        self.upper = np.full(n, np.inf) if self.upper is None else np.asarray(self.upper, dtype=float).reshape(-1)
        if self.lower.size != n or self.upper.size != n:
            raise LpFormatError("bounds must have one entry per variable")
        for name, arr in (("c", self.c), ("A", self.A), ("b", self.b)):
            if not np.all(np.isfinite(arr)):
                raise LpFormatError(f"non-finite entries in {name}")
        if np.any(np.isnan(self.lower)) or np.any(np.isnan(self.upper)):
            raise LpFormatError("NaN bounds")
        if np.any(self.lower == np.inf) or np.any(self.upper == -np.inf):
            raise LpFormatError("bounds point the wrong way to infinity")
        if np.any(self.lower > self.upper):
            raise LpFormatError("lower bound above upper bound")

    @property
    def n_vars(self) -> int:
        return self.c.size

    @property
    def n_rows(self) -> int:
        return self.b.size

    def dump(self) -> str:
        """Human-readable LP text for debugging."""
        out = io.StringIO()
        out.write("maximize\n" if self.maximize else "minimize\n")
        out.write("  obj: " + _linexpr(self.c) + "\n")
        out.write("subject to\n")
        for i in range(self.n_rows):
            out.write(f"  r{i}: {_linexpr(self.A[i])} {self.senses[i]} {self.b[i]:.17g}\n")
        out.write("bounds\n")
        for j in range(self.n_vars):
            out.write(f"  {self.lower[j]:.17g} <= x{j} <= {self.upper[j]:.17g}\n")
        out.write("end\n")
        return out.getvalue()


def _linexpr(row: np.ndarray) -> str:
    terms = [f"{v:+.17g} x{j}" for j, v in enumerate(row) if v != 0]
    return " ".join(terms) if terms else "0"


@dataclass
class LpSolution:
    status: str
    x: Optional[np.ndarray] = None
    objective: Optional[float] = None
    duals: Optional[np.ndarray] = None
    reduced_costs: Optional[np.ndarray] = None
    farkas: Optional[np.ndarray] = None
    ray: Optional[np.ndarray] = None
    iterations: int = 0
    residuals: dict = field(default_factory=dict)

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"


# ---------------------------------------------------------------------------
# certificate checks; these only look at problem data and the reported vectors


def _box_extreme(d: np.ndarray, lo: np.ndarray, hi: np.ndarray, minimize: bool) -> float:
    """min (or max) of d.x over lo <= x <= hi, possibly infinite."""
    total = 0.0
    for dj, l, h in zip(d, lo, hi):
        if dj == 0:
            continue
        pick = (l if dj > 0 else h) if minimize else (h if dj > 0 else l)
        if np.isfinite(pick):
            total += dj * pick
        elif abs(dj) > _DUST:
            return -np.inf if minimize else np.inf
    return total


def row_violation(p: LpProblem, x: np.ndarray) -> float:
    ax = p.A @ x
    viol = 0.0
    for i, s in enumerate(p.senses):
        r = ax[i] - p.b[i]
        if s == "<=":
            viol = max(viol, r)
        elif s == ">=":
            viol = max(viol, -r)
        else:
            viol = max(viol, abs(r))
    bound = max(np.max(p.lower - x, initial=0.0), np.max(x - p.upper, initial=0.0))
    return float(max(viol, bound))


def dual_bound(p: LpProblem, y: np.ndarray) -> float:
    """Bound on the objective implied by multipliers ``y`` (weak duality).

    Returns -inf/+inf when ``y`` has the wrong signs or leaves an unbounded
    reduced cost.
    """
    flip = -1.0 if p.maximize else 1.0
    for yi, s in zip(y, p.senses):
        # for minimization: y <= 0 on <= rows, y >= 0 on >= rows
        if s == "<=" and flip * yi > _DUST:
            return -flip * np.inf
        if s == ">=" and flip * yi < -_DUST:
            return -flip * np.inf
    r = p.c - p.A.T @ y
    return float(y @ p.b + _box_extreme(r, p.lower, p.upper, minimize=not p.maximize))


def check_optimality(p: LpProblem, x: np.ndarray, y: np.ndarray) -> dict:
    """Residuals of a claimed optimal pair: feasibility, slackness, gap."""
    feas = row_violation(p, x)
    obj = float(p.c @ x)
    dbound = dual_bound(p, y)
    gap = abs(obj - dbound) if np.isfinite(dbound) else np.inf
    slack = p.b - p.A @ x
    comp_rows = float(np.max(np.abs(y * np.where(np.array(p.senses) == "==", 0.0, slack)), initial=0.0))
    r = p.c - p.A.T @ y
    dist = np.where(r > 0, x - p.lower, p.upper - x) if not p.maximize else np.where(r > 0, p.upper - x, x - p.lower)
    dist = np.where(np.abs(r) <= _DUST, 0.0, dist)
    comp_cols = float(np.max(np.abs(r * np.nan_to_num(dist, posinf=0.0, neginf=0.0)), initial=0.0))
    return {"primal": feas, "gap": gap, "complementarity": max(comp_rows, comp_cols), "objective": obj, "dual_objective": dbound}


def check_farkas(p: LpProblem, y: np.ndarray, feas_tol: float = FEAS_TOL) -> bool:
    y = np.asarray(y, dtype=float)
    for yi, s in zip(y, p.senses):
        if s == "<=" and yi < -_DUST:
            return False
        if s == ">=" and yi > _DUST:
            return False
    d = p.A.T @ y
    lo = _box_extreme(d, p.lower, p.upper, minimize=True)
    return bool(lo - y @ p.b >= feas_tol)


def farkas_strength(p: LpProblem, y: np.ndarray) -> float:
    d = p.A.T @ y
    return float(_box_extreme(d, p.lower, p.upper, minimize=True) - y @ p.b)


# ---------------------------------------------------------------------------
# standard form


@dataclass
class _Std:
    A: np.ndarray
    b: np.ndarray
    c: np.ndarray
    # x = shift + T @ x_std[:n_struct]
    T: np.ndarray
    shift: np.ndarray
    row_sign: np.ndarray  # +-1 per std row
    orig_rows: np.ndarray  # std row index for each original row (-1 if dropped)
    n_struct: int
    slack_of_row: dict
    obj_shift: float


def _standardize(p: LpProblem) -> tuple[Optional[_Std], Optional[np.ndarray]]:
    n = p.n_vars
    cols = []  # (orig var j, coefficient sign)
    shift = np.zeros(n)
    bound_rows = []  # (std struct col, capacity)
    for j in range(n):
        lo, hi = p.lower[j], p.upper[j]
        if np.isfinite(lo):
            shift[j] = lo
            cols.append((j, 1.0))
            if np.isfinite(hi):
                bound_rows.append((len(cols) - 1, hi - lo))
        elif np.isfinite(hi):
            shift[j] = hi
            cols.append((j, -1.0))
        else:
            cols.append((j, 1.0))
            cols.append((j, -1.0))
    ns = len(cols)
    T = np.zeros((n, ns))
    for k, (j, s) in enumerate(cols):
        T[j, k] = s
    A1 = p.A @ T
    b1 = p.b - p.A @ shift
    c1 = p.c @ T
    if p.maximize:
        c1 = -c1
    obj_shift = float(p.c @ shift)

    keep = []
    orig_rows = np.full(p.n_rows, -1)
    for i in range(p.n_rows):
        if np.any(A1[i] != 0):
            orig_rows[i] = len(keep)
            keep.append(i)
            continue
        ok = (b1[i] >= -FEAS_TOL) if p.senses[i] == "<=" else (b1[i] <= FEAS_TOL) if p.senses[i] == ">=" else abs(b1[i]) <= FEAS_TOL
        if not ok:
            y = np.zeros(p.n_rows)
            y[i] = 1.0 if p.senses[i] == "<=" else -1.0 if p.senses[i] == ">=" else -np.sign(b1[i])
            return None, y

    m = len(keep) + len(bound_rows)
    n_slack = sum(1 for i in keep if p.senses[i] != "==") + len(bound_rows)
    A = np.zeros((m, ns + n_slack))
    b = np.zeros(m)
    A[: len(keep), :ns] = A1[keep]
    b[: len(keep)] = b1[keep]
    slack_of_row = {}
    k = ns
    for r, i in enumerate(keep):
        if p.senses[i] == "<=":
            A[r, k] = 1.0
        elif p.senses[i] == ">=":
            A[r, k] = -1.0
        else:
            continue
        slack_of_row[r] = k
        k += 1
    for q, (col, cap) in enumerate(bound_rows):
        r = len(keep) + q
        A[r, col] = 1.0
        A[r, k] = 1.0
        b[r] = cap
        slack_of_row[r] = k
        k += 1
    row_sign = np.where(b < 0, -1.0, 1.0)
    # a zero right-hand side can go either way; orient it so the slack is +1
    for r, k in slack_of_row.items():
        if b[r] == 0 and A[r, k] < 0:
            row_sign[r] = -1.0
    A *= row_sign[:, None]
    b *= row_sign
    c = np.zeros(A.shape[1])
    c[:ns] = c1
    return _Std(A, b, c, T, shift, row_sign, orig_rows, ns, slack_of_row, obj_shift), None


# ---------------------------------------------------------------------------
# revised simplex core


class _Simplex:
    def __init__(self, A, b, basis, allowed, max_iter):
        self.A = A
        self.b = b
        self.basis = list(basis)
        self.allowed = allowed  # columns permitted to enter
        self.max_iter = max_iter
        self.iterations = 0
        self.degenerate_run = 0
        self.zero_cap = np.zeros(A.shape[1], dtype=bool)  # basic columns pinned at 0
        self.col_norm = np.maximum(np.linalg.norm(A, axis=0), 1e-300)
        self.refactor()

    def refactor(self):
        B = self.A[:, self.basis]
        self.Binv = np.linalg.inv(B)
        self.xB = self.Binv @ self.b
        self.xB[np.abs(self.xB) < 1e-14] = 0.0
        self.since_refactor = 0

    def duals(self, c):
        return c[self.basis] @ self.Binv

    def set_rhs(self, b):
        self.b = b
        self.refactor()

    def perturbed_rhs(self, b, rng, scale):
        """``b + B delta`` with small random ``delta > 0`` on free basics.

        Shifting the basic values up by ``delta`` keeps the basis feasible
        while breaking the ties that make degenerate problems stall.
        """
        delta = scale * (1.0 + np.abs(self.xB)) * rng.uniform(0.5, 1.0, len(self.basis))
        delta[self.zero_cap[self.basis]] = 0.0
        return b + self.A[:, self.basis] @ delta

    def _tick(self):
        if self.iterations >= self.max_iter:
            raise IterationLimitError(f"simplex exceeded {self.max_iter} iterations")

    def run(self, c) -> tuple[str, Optional[int], Optional[np.ndarray]]:
        """Primal simplex from a feasible basis."""
        m, N = self.A.shape
        in_basis = np.zeros(N, dtype=bool)
        in_basis[self.basis] = True
        scale = 1.0 + np.abs(c).max(initial=0.0)
        while True:
            self._tick()
            y = self.duals(c)
            r = c - y @ self.A
            # candidates in pricing order (lowest index once Bland takes over);
            # columns whose only blocking pivots are tiny are skipped
            cand = np.flatnonzero(self.allowed & ~in_basis & (r < -_OPT_TOL * scale))
            if cand.size == 0:
                return "optimal", None, None
            if self.degenerate_run <= _BLAND_AFTER:
                cand = cand[np.argsort(r[cand] / self.col_norm[cand], kind="stable")]
            choice = None
            for j in cand:
                j = int(j)
                d = self.Binv @ self.A[:, j]
                dmax = np.abs(d).max()
                piv_tol = _PIVOT_TOL * max(1.0, dmax)
                d[np.abs(d) <= piv_tol] = 0.0
                cBd = c[self.basis] * d
                if c[j] - cBd.sum() >= -_OPT_TOL * (scale + np.abs(cBd).sum()):
                    # the improvement is rounding noise
                    continue
                block = d > piv_tol
                pinned = self.zero_cap[self.basis] & (np.abs(d) > piv_tol)
                if not np.any(block | pinned):
                    if self.since_refactor:
                        break
                    return "unbounded", j, d
                leave, theta = self._ratio_test(d, block, pinned)
                if self.since_refactor and abs(d[leave]) < _CHECK_PIVOT * dmax:
                    # small pivots on an updated inverse may be pure drift
                    break
                if abs(d[leave]) >= _SAFE_PIVOT * dmax:
                    choice = (j, d, leave, theta)
                    break
            if choice is None:
                if self.since_refactor:
                    # re-examine on a fresh factorization
                    self.refactor()
                    continue
                # every improving column is numerically blocked
                return "optimal", None, None
            j, d, leave, theta = choice
            old = self.basis[leave]
            self._pivot(leave, j, d, theta)
            in_basis[old] = False
            in_basis[j] = True
            self.iterations += 1
            self.degenerate_run = self.degenerate_run + 1 if theta <= _TIE_TOL else 0

    def _ratio_test(self, d, block, pinned):
        if np.any(pinned):
            cand = np.flatnonzero(pinned)
            r = int(cand[np.argmax(np.abs(d[cand]))])
            return r, 0.0
        xB = np.maximum(self.xB, 0.0)
        ratios = np.full(d.size, np.inf)
        ratios[block] = xB[block] / d[block]
        if self.degenerate_run > _BLAND_AFTER:
            # strict Bland: minimum ratio, ties go to the lowest basic index
            theta = ratios.min()
            ties = np.flatnonzero(ratios <= theta * (1 + 1e-9) + _TIE_TOL)
            # skip pivots that would wreck the conditioning of the basis
            ties = ties[d[ties] >= _SAFE_PIVOT * d[ties].max()]
            r = int(ties[np.argmin(np.asarray(self.basis)[ties])])
            return r, ratios[r]
        # Harris two-pass: relax each bound by a hair, then take the largest
        # pivot among rows whose exact ratio fits under the relaxed step
        relaxed = np.full(d.size, np.inf)
        relaxed[block] = (xB[block] + _TIE_TOL) / d[block]
        cand = np.flatnonzero(ratios <= relaxed.min())
        r = int(cand[np.argmax(d[cand])])
        return r, ratios[r]

    def dual_cleanup(self, c, limit: int = 5000) -> tuple[str, Optional[int]]:
        """Dual simplex from a dual feasible basis back to primal feasibility.

        Returns ``("optimal", None)``, ``("infeasible", r)`` when row ``r`` of
        the basis inverse proves the constraints inconsistent, or
        ``("stalled", None)``.
        """
        m, N = self.A.shape
        in_basis = np.zeros(N, dtype=bool)
        in_basis[self.basis] = True
        pinned = self.zero_cap[self.basis]
        for _ in range(limit):
            self._tick()
            scale = 1.0 + np.abs(self.xB).max(initial=0.0)
            low = np.where(pinned, -np.abs(self.xB), self.xB)
            r = int(np.argmin(low))
            if low[r] >= -FEAS_TOL * 0.1 * scale:
                return "optimal", None
            sign = -1.0 if (pinned[r] and self.xB[r] > 0) else 1.0
            alpha = sign * (self.Binv[r] @ self.A)
            rc = np.maximum(c - self.duals(c) @ self.A, 0.0)
            elig = self.allowed & ~in_basis & (alpha < -_PIVOT_TOL * max(1.0, np.abs(alpha).max()))
            if not np.any(elig):
                if self.since_refactor:
                    self.refactor()
                    continue
                return ("infeasible", r) if sign > 0 else ("stalled", None)
            cols = np.flatnonzero(elig)
            ratios = rc[cols] / -alpha[cols]
            cap = ratios.min() + _TIE_TOL
            near = cols[ratios <= cap]
            j = int(near[np.argmax(np.abs(alpha[near]))])
            d = self.Binv @ self.A[:, j]
            theta = self.xB[r] / d[r]
            old = self.basis[r]
            self._pivot(r, j, d, theta)
            in_basis[old] = False
            in_basis[j] = True
            pinned = self.zero_cap[self.basis]
            self.iterations += 1
        return "stalled", None

    def _pivot(self, r, j, d, theta):
        self.xB -= theta * d
        self.xB[r] = theta
        piv = d[r]
        row = self.Binv[r] / piv
        self.Binv -= np.outer(d, row)
        self.Binv[r] = row
        self.basis[r] = j
        self.since_refactor += 1
        if self.since_refactor >= _REFACTOR_EVERY:
            self.refactor()
        else:
            self.xB[np.abs(self.xB) < 1e-14] = 0.0


class _Retry(Exception):
    """The perturbed pass could not certify its answer; rerun without it."""


def solve(p: LpProblem, max_iter: int = 100_000) -> LpSolution:
    """Solve ``p``.

    Raises :class:`IterationLimitError` if the pivot budget runs out and
    :class:`NumericalError` if no nonsingular basis can be kept.
    """
    std, ray0 = _standardize(p)
    if std is None:
        return LpSolution("infeasible", farkas=ray0)
    if std.A.shape[0] == 0:
        return _finish_empty(p, std)
    try:
        return _solve_std(p, std, max_iter, perturb=True)
    except (_Retry, np.linalg.LinAlgError):
        pass
    try:
        return _solve_std(p, std, max_iter, perturb=False)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"basis became singular: {exc}") from exc


def _solve_std(p: LpProblem, std: _Std, max_iter: int, perturb: bool) -> LpSolution:
    A, b, c = std.A, std.b, std.c
    m, N = A.shape
    # fixed seed: identical input must give identical output
    rng = np.random.default_rng(_PERTURB_SEED)

    # start from slack columns where they form a unit column, artificials elsewhere
    basis = []
    art_rows = []
    for r in range(m):
        k = std.slack_of_row.get(r)
        if k is not None and A[r, k] == 1.0:
            basis.append(k)
        else:
            basis.append(None)
            art_rows.append(r)
    n_art = len(art_rows)
    A_full = np.hstack([A, np.zeros((m, n_art))])
    for q, r in enumerate(art_rows):
        A_full[r, N + q] = 1.0
        basis[r] = N + q
    allowed = np.ones(N + n_art, dtype=bool)
    allowed[N:] = False

    sx = _Simplex(A_full, b, basis, allowed, max_iter)

    def phase(cost):
        if perturb:
            sx.set_rhs(sx.perturbed_rhs(b, rng, _PERTURB))
        status, j, d = sx.run(cost)
        if status == "unbounded":
            return status, j, d
        if perturb:
            sx.set_rhs(b)
            st, r = sx.dual_cleanup(cost)
            if st == "stalled":
                raise _Retry()
            if st == "infeasible":
                return "infeasible", r, None
        sx.refactor()
        return "optimal", None, None

    if n_art:
        c1 = np.zeros(N + n_art)
        c1[N:] = 1.0
        status, r, _ = phase(c1)
        if status == "infeasible":
            farkas = _map_rows(p, std, sx.Binv[r])
        else:
            infeas = float(c1[sx.basis] @ sx.xB)
            farkas = None
            if infeas > FEAS_TOL:
                farkas = -_map_rows(p, std, sx.duals(c1))
        if farkas is not None:
            farkas = _normalize_farkas(p, farkas)
            if perturb and not check_farkas(p, farkas):
                raise _Retry("Farkas ray failed verification")
            return LpSolution("infeasible", farkas=farkas, iterations=sx.iterations)
        sx.zero_cap[N:] = True

    c2 = np.zeros(N + n_art)
    c2[:N] = c
    status, j, d = phase(c2)
    iters = sx.iterations
    if status == "infeasible":
        raise _Retry()
    if status == "unbounded":
        dir_std = np.zeros(N + n_art)
        dir_std[j] = 1.0
        dir_std[sx.basis] = -d
        ray = std.T @ dir_std[: std.n_struct]
        return LpSolution("unbounded", ray=ray, iterations=iters)

    xs = np.zeros(N + n_art)
    xs[sx.basis] = np.maximum(sx.xB, 0.0)
    x = std.shift + std.T @ xs[: std.n_struct]
    x = np.clip(x, p.lower, p.upper)
    y_std = sx.duals(c2)
    duals = _map_rows(p, std, y_std)
    if p.maximize:
        duals = -duals
    sol = LpSolution(
        "optimal",
        x=x,
        objective=float(p.c @ x),
        duals=duals,
        reduced_costs=p.c - p.A.T @ duals,
        iterations=iters,
    )
    sol.residuals = check_optimality(p, x, duals)
    if perturb and (sol.residuals["gap"] > GAP_TOL or sol.residuals["primal"] > FEAS_TOL):
        raise _Retry(f"residuals too large: {sol.residuals}")
    return sol


def _map_rows(p: LpProblem, std: _Std, y_std: np.ndarray) -> np.ndarray:
    y = np.zeros(p.n_rows)
    for i in range(p.n_rows):
        r = std.orig_rows[i]
        if r >= 0:
            y[i] = std.row_sign[r] * y_std[r]
    return y


def _normalize_farkas(p: LpProblem, y: np.ndarray) -> np.ndarray:
    s = np.abs(y).max(initial=0.0)
    if s == 0:
        return y
    y = y / s
    y[np.abs(y) < 1e-14] = 0.0
    # clean sign dust on inequality rows
    for i, sense in enumerate(p.senses):
        if sense == "<=" and y[i] < 0:
            y[i] = 0.0
        elif sense == ">=" and y[i] > 0:
            y[i] = 0.0
    return y


def _finish_empty(p: LpProblem, std: _Std) -> LpSolution:
    # no constraint rows left: each variable sits at its best bound
    x = std.shift.copy()
    cost = -p.c if p.maximize else p.c
    for j in range(p.n_vars):
        if cost[j] < 0:
            if not np.isfinite(p.upper[j]):
                ray = np.zeros(p.n_vars)
                ray[j] = 1.0
                return LpSolution("unbounded", ray=ray)
            x[j] = p.upper[j]
        elif cost[j] > 0:
            if not np.isfinite(p.lower[j]):
                ray = np.zeros(p.n_vars)
                ray[j] = -1.0
                return LpSolution("unbounded", ray=ray)
            x[j] = p.lower[j]
        else:
            x[j] = p.lower[j] if np.isfinite(p.lower[j]) else (p.upper[j] if np.isfinite(p.upper[j]) else 0.0)
    duals = np.zeros(p.n_rows)
    sol = LpSolution("optimal", x=x, objective=float(p.c @ x), duals=duals, reduced_costs=p.c.copy())
    sol.residuals = check_optimality(p, x, duals)
    return sol
