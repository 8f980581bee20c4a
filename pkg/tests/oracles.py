"""Independent reference implementations used only by the tests.

Nothing here calls into the FFT path or the simplex engine of the package.
"""

import itertools

import numpy as np
from scipy.optimize import linprog

from dpcone.group import GroupSpec, Window
from dpcone.spectral import GFunc


def dft_direct(f: GFunc) -> np.ndarray:
    """O(|G|^2) sum of conj(gamma(x)) f(x), characters built from coordinates."""
    G = f.group
    coords = np.array([G.element(i) for i in range(G.total_order)])
    orders = np.array(G.orders, dtype=float)
    phase = (coords[:, None, :] * coords[None, :, :] / orders).sum(axis=2)
    chars = np.exp(2j * np.pi * phase)  # [gamma, x]
    return np.conj(chars) @ f.values


def convolve_direct(f: GFunc, g: GFunc) -> np.ndarray:
    G = f.group
    n = G.total_order
    out = np.zeros(n, dtype=complex)
    for x in range(n):
        for y in range(n):
            out[x] += f.values[G.add_index(x, G.neg_index[y])] * g.values[y]
    return out


def gram_matrix(f: GFunc) -> np.ndarray:
    G = f.group
    n = G.total_order
    A = np.empty((n, n), dtype=complex)
    for x in range(n):
        for y in range(n):
            A[x, y] = f.values[G.add_index(x, G.neg_index[y])]
    return A


def highs(c, A, senses, b, lower=None, upper=None, maximize=False):
    """scipy/HiGHS with presolve off; returns (status, objective, x)."""
    c = np.asarray(c, dtype=float)
    A = np.asarray(A, dtype=float).reshape(len(b), c.size)
    A_ub, b_ub, A_eq, b_eq = [], [], [], []
    for row, s, rhs in zip(A, senses, b):
        if s == "<=":
            A_ub.append(row)
            b_ub.append(rhs)
        elif s == ">=":
            A_ub.append(-row)
            b_ub.append(-rhs)
        else:
            A_eq.append(row)
            b_eq.append(rhs)
    n = c.size
    lower = np.zeros(n) if lower is None else np.asarray(lower, dtype=float)
    upper = np.full(n, np.inf) if upper is None else np.asarray(upper, dtype=float)
    bounds = [(None if not np.isfinite(lo) else lo, None if not np.isfinite(hi) else hi) for lo, hi in zip(lower, upper)]
    res = linprog(
        -c if maximize else c,
        A_ub=np.array(A_ub) if A_ub else None,
        b_ub=b_ub or None,
        A_eq=np.array(A_eq) if A_eq else None,
        b_eq=b_eq or None,
        bounds=bounds,
        method="highs",
        options={"presolve": False},
    )
    status = {0: "optimal", 2: "infeasible", 3: "unbounded"}.get(res.status, "error")
    obj = None
    if status == "optimal":
        obj = -res.fun if maximize else res.fun
    return status, obj, res.x


def vertex_max(c, A_ineq, b_ineq, A_eq=None, b_eq=None, tol=1e-9):
    """max c.x over {A_ineq x <= b_ineq, A_eq x = b_eq} by enumerating vertices.

    Only for bounded polytopes in a handful of variables.
    """
    c = np.asarray(c, dtype=float)
    n = c.size
    A_ineq = np.asarray(A_ineq, dtype=float).reshape(-1, n)
    b_ineq = np.asarray(b_ineq, dtype=float)
    A_eq = np.zeros((0, n)) if A_eq is None else np.asarray(A_eq, dtype=float).reshape(-1, n)
    b_eq = np.zeros(0) if b_eq is None else np.asarray(b_eq, dtype=float)
    best, arg = -np.inf, None
    need = n - A_eq.shape[0]
    for rows in itertools.combinations(range(A_ineq.shape[0]), need):
        M = np.vstack([A_eq, A_ineq[list(rows)]])
        rhs = np.concatenate([b_eq, b_ineq[list(rows)]])
        if abs(np.linalg.det(M)) < 1e-12:
            continue
        x = np.linalg.solve(M, rhs)
        if np.all(A_ineq @ x <= b_ineq + tol) and np.allclose(A_eq @ x, b_eq, atol=tol):
            val = c @ x
            if val > best:
                best, arg = val, x
    return best, arg


def s_value_vertices(U: Window, V: Window):
    """S(U, V) by vertex enumeration over orbit-constant f."""
    G = U.group
    orbits = G.orbits
    k = len(orbits)
    cos = G.cos_table
    # f = sum_O w_O chi_O;  f >= 0 and dft(f) >= 0 on each dual orbit
    spec = np.array([[cos[P[0]][O].sum() for O in orbits] for P in orbits])
    A_ineq = np.vstack([-np.eye(k), -spec])
    b_ineq = np.zeros(2 * k)
    u = np.array([U.indicator()[O].sum() for O in orbits])
    v = np.array([V.indicator()[O].sum() for O in orbits])
    return vertex_max(v, A_ineq, b_ineq, u[None, :], np.array([1.0]))


def random_group(rng, max_order=48, max_rank=3) -> GroupSpec:
    while True:
        k = int(rng.integers(1, max_rank + 1))
        orders = tuple(int(x) for x in rng.integers(2, 13, size=k))
        if np.prod(orders) <= max_order:
            return GroupSpec(orders)


def random_symmetric_window(rng, G: GroupSpec, density=None, with_zero=True) -> Window:
    p = rng.uniform(0.1, 0.5) if density is None else density
    m = rng.random(G.total_order) < p
    m = m | m[G.neg_index]
    if with_zero:
        m[0] = True
    return Window(G, frozenset(np.flatnonzero(m).tolist()))


def random_window(rng, G: GroupSpec) -> Window:
    m = rng.random(G.total_order) < rng.uniform(0.05, 0.6)
    if not m.any():
        m[rng.integers(G.total_order)] = True
    return Window(G, frozenset(np.flatnonzero(m).tolist()))
