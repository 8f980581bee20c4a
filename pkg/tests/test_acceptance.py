"""Acceptance criteria, one function each.

Every ``criterion_*`` returns ``(ok, detail)``. Under pytest each becomes a
test; run as a script the file prints one PASS/FAIL line per criterion:

    python3 tests/test_acceptance.py
"""

import itertools
import math
import sys
import time

import numpy as np

from dpcone import circle, cones, decomp, extremal
from dpcone.group import GroupSpec, Window
from dpcone.spectral import GFunc, converse, even_odd_split

from oracles import random_symmetric_window, random_window, s_value_vertices


def groups_up_to(max_order):
    """Every nondecreasing tuple of cyclic factors >= 2 with product <= max_order."""
    out = []

    def grow(prefix, lo, prod):
        if prefix:
            out.append(GroupSpec(tuple(prefix)))
        for n in range(lo, max_order // prod + 1):
            grow(prefix + [n], n, prod * n)

    grow([], 2, 1)
    return out


def member_sample(rng, G):
    n = G.total_order
    w = rng.random(n) * (rng.random(n) < 0.5)
    g = rng.normal(size=n)
    tau = cones.convolution_square(GFunc(G, g + g[G.neg_index])).real
    _, odd = even_odd_split(GFunc(G, rng.normal(size=n)))
    return GFunc(G, w + w[G.neg_index] + tau + odd.real)


def doubly_positive_sample(rng, G):
    u = rng.random(G.total_order) * (rng.random(G.total_order) < 0.6)
    u[0] += 0.1
    return GFunc(G, cones.convolution_square(GFunc(G, u + u[G.neg_index])).real)


# ---------------------------------------------------------------------------


def criterion_1(seed=1):
    rng = np.random.default_rng(seed)
    t0 = time.perf_counter()
    worst_gap = 0.0
    worst_dom = -np.inf
    bad = []
    for trial in range(100):
        n = int(rng.integers(2, 49))
        # mix cyclic groups and products of the same order range
        if rng.random() < 0.3:
            a = int(rng.integers(2, 7))
            b = int(rng.integers(2, 48 // a + 1))
            G = GroupSpec((a, b))
        else:
            G = GroupSpec.cyclic(n)
        U = random_symmetric_window(rng, G)
        V = random_window(rng, G)
        S = extremal.s_value(U, V).value
        C, g = extremal.sigma_value(U, V)
        gap = abs(C / 2 - S)
        dom = float(np.max(g.real - extremal.h_C(U, V, 2 * S)))
        worst_gap = max(worst_gap, gap)
        worst_dom = max(worst_dom, dom)
        if gap > 1e-7 or dom > 1e-9 or not cones.is_pd_fourier(g, 1e-9):
            bad.append(trial)
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed <= 60
    return ok, f"100 instances, max gap {worst_gap:.2e}, max (g - h_2S) {worst_dom:.2e}, failures {bad}, {elapsed:.1f}s"


def criterion_2():
    G = GroupSpec.cyclic(2)
    U, V = Window.from_elements(G, [0, 1]), Window.from_elements(G, [1])
    oracle, _ = s_value_vertices(U, V)
    res = extremal.s_value(U, V)
    C, g = extremal.sigma_value(U, V)
    ok = (
        abs(oracle - 0.5) <= 1e-12
        and abs(res.value - 0.5) <= 1e-9
        and abs(C - 1.0) <= 1e-9
        and np.allclose(g.real, [1, -1], atol=1e-9)
    )
    return ok, f"S = {res.value:.12g} (oracle {oracle:.12g}), C = {C:.12g}, g = {np.round(g.real, 12).tolist()}"


def criterion_3(seed=3):
    rng = np.random.default_rng(seed)
    pool = [G for G in groups_up_to(24)]
    t0 = time.perf_counter()
    member_fail, reject_fail = [], []
    worst_resid, worst_pair = 0.0, -np.inf
    for i in range(200):
        G = pool[int(rng.integers(len(pool)))]
        rho = member_sample(rng, G)
        res = decomp.decompose(rho)
        if not (res.is_member and res.residual <= 1e-9 and res.verify()):
            member_fail.append(i)
        else:
            worst_resid = max(worst_resid, res.residual)
    for i in range(200):
        G = pool[int(rng.integers(len(pool)))]
        # rho pairs to -1 with a known doubly positive f, so it cannot be a member
        f = doubly_positive_sample(rng, G)
        r = rng.normal(size=G.total_order)
        r = r - ((r @ f.real) + 1.0) * f.real / (f.real @ f.real)
        rho = GFunc(G, r)
        res = decomp.decompose(rho)
        if res.is_member:
            reject_fail.append(i)
            continue
        w = res.witness
        pair = rho.pair(w).real
        worst_pair = max(worst_pair, pair)
        if not (cones.is_doubly_positive(w) and pair <= -1e-9):
            reject_fail.append(i)
    elapsed = time.perf_counter() - t0
    ok = not member_fail and not reject_fail and elapsed <= 30
    return ok, (
        f"members: max residual {worst_resid:.2e}, failures {member_fail}; "
        f"rejections: max pairing {worst_pair:.3g}, failures {reject_fail}; {elapsed:.1f}s"
    )


def criterion_4(seed=4):
    rng = np.random.default_rng(seed)
    disagree = 0
    total = 0
    npd = 0
    groups = groups_up_to(12)
    for G in groups:
        n = G.total_order
        for k in range(200):
            kind = k % 4
            z = rng.normal(size=n) + 1j * rng.normal(size=n)
            if kind == 0:
                f = GFunc(G, rng.normal(size=n))
            elif kind == 1:
                f = GFunc(G, z)
            elif kind == 2:
                f = cones.convolution_square(GFunc(G, z))
            else:
                # positive definite shifted by a small multiple of delta_0
                f = cones.convolution_square(GFunc(G, z)) + rng.uniform(-0.3, 0.3) * GFunc.delta(G)
            a, b = cones.is_pd_fourier(f, 1e-8), cones.is_pd_gram(f, 1e-8)
            npd += a
            disagree += a != b
            total += 1
    return disagree == 0, f"{len(groups)} groups, {total} functions ({npd} positive definite), {disagree} disagreements"


def criterion_5(seed=5):
    rng = np.random.default_rng(seed)
    groups = groups_up_to(16)
    disagree = 0
    total = odd_count = 0
    for G in groups:
        n = G.total_order
        for k in range(100):
            v = rng.normal(size=n)
            if k % 3 == 0:
                rho = GFunc(G, v)
            elif k % 3 == 1:
                rho = GFunc(G, (v - v[G.neg_index]) / 2)
            else:
                # odd plus a small even bump
                bump = np.zeros(n)
                bump[G.orbits[int(rng.integers(len(G.orbits)))]] = rng.choice([-1e-3, 1e-3])
                rho = GFunc(G, (v - v[G.neg_index]) / 2 + bump)
            a = decomp.intersection_is_odd(rho)
            b = cones.is_odd(rho)
            odd_count += b
            disagree += a != b
            total += 1
    return disagree == 0, f"{len(groups)} groups, {total} measures ({odd_count} odd), {disagree} disagreements"


def _same(x, y, tol=1e-7):
    if math.isinf(x) or math.isinf(y):
        return x == y
    return abs(x - y) <= tol * max(1.0, abs(x))


def _interval_pairs(seed):
    rng = np.random.default_rng(seed)
    pairs = []
    for k in range(50):
        G = GroupSpec.cyclic(int(rng.integers(2, 9)))
        n = G.total_order
        if k % 5 == 0:
            mu = member_sample(rng, G)  # sup A = +inf whenever A is nonempty
        elif k % 5 == 1:
            _, mu = even_odd_split(GFunc(G, rng.normal(size=n)))  # A is R or empty
        else:
            mu = GFunc(G, rng.normal(size=n) + (k % 5 == 2) * n * (np.arange(n) == 0))
        nu = -member_sample(rng, G) if k % 2 else GFunc(G, rng.normal(size=n))
        pairs.append((mu, nu))
    return pairs


def criterion_6(seed=6):
    """A(mu, -nu) against the reflection of A(mu, nu), as stated."""
    mismatches = []
    unbounded = 0
    control = 0
    for k, (mu, nu) in enumerate(_interval_pairs(seed)):
        a = decomp.admissible_interval(mu, nu)
        b = decomp.admissible_interval(mu, -nu)
        c = decomp.admissible_interval(-mu, nu)
        if not a.empty and (math.isinf(a.lo) or math.isinf(a.hi)):
            unbounded += 1
        if a.empty and b.empty:
            match = True
        elif a.empty != b.empty:
            match = False
        else:
            match = _same(b.lo, -a.hi) and _same(b.hi, -a.lo)
        if not match:
            mismatches.append((k, _fmt(a), _fmt(b)))
        # the reflection does hold when mu is negated instead of nu
        if not (a.empty == c.empty and (a.empty or (_same(c.lo, -a.hi) and _same(c.hi, -a.lo)))):
            control += 1
    ok = not mismatches
    detail = (
        f"50 pairs ({unbounded} with an unbounded end), {len(mismatches)} mismatches for A(mu,-nu) = -A(mu,nu)"
        f"{'; first: A=' + mismatches[0][1] + ' vs A(mu,-nu)=' + mismatches[0][2] if mismatches else ''}; "
        f"control A(-mu,nu) = -A(mu,nu): {control} mismatches"
    )
    return ok, detail


def _fmt(iv):
    return "empty" if iv.empty else f"[{iv.lo:.6g}, {iv.hi:.6g}]"


def criterion_7():
    exact = extremal.logan_bound(1) == 3 and extremal.logan_bound(2) == 5 and extremal.logan_bound(0.5) == 2
    parts = [f"Logan(1,2,0.5) = {extremal.logan_bound(1):g}, {extremal.logan_bound(2):g}, {extremal.logan_bound(0.5):g}"]
    ok = exact
    for T in (1.0, 2.0):
        vals = {}
        for n in (128, 256, 512):
            _, U, V = extremal.discretize_line(T, 16.0, n)
            vals[n] = extremal.s_value(U, V).value
        within = vals[512] <= extremal.logan_bound(T) * 1.05
        spread = (max(vals.values()) - min(vals.values())) / max(vals.values())
        stable = spread <= 0.02
        ok = ok and within and stable
        parts.append(
            f"T={T:g}: S(n=128,256,512) = {vals[128]:.6g}, {vals[256]:.6g}, {vals[512]:.6g}; "
            f"<= 1.05 bound: {within}; spread {100 * spread:.2f}% (<= 2%: {stable})"
        )
    return ok, "; ".join(parts)


def reference_measure():
    atoms = [
        (circle.TWO_PI * 7 / 100, 1.0),
        (circle.TWO_PI * 31 / 100, -0.5 + 0.25j),
        (circle.TWO_PI * 64 / 100, 0.75),
    ]
    density = {0: 0.4, 1: 0.2 - 0.1j, -1: 0.2 + 0.1j, 2: 0.1, -2: 0.1, 3: 0.05j, 4: -0.02}
    return circle.CircleMeasure.from_atoms(atoms, density)


def criterion_8():
    t0 = time.perf_counter()
    m = reference_measure()
    errs, within = {}, True
    for N in (1000, 2000):
        e = abs(circle.energy(m, N) - circle.atomic_energy(m))
        within &= e <= circle.energy_bound(m, N)
        errs[N] = [e]
        for x, a in zip(m.positions, m.masses):
            err = abs(circle.atomic_mass(m, x, N) - a)
            within &= err <= circle.atomic_mass_bound(m, x, N)
            errs[N].append(err)
    ratios = [e2 / e1 for e1, e2 in zip(errs[1000], errs[2000])]
    halves = all(0.4 <= r <= 0.6 for r in ratios)
    elapsed = time.perf_counter() - t0
    ok = within and halves and elapsed <= 5
    return ok, (
        f"errors at N=2000 (energy, masses) {[f'{e:.3g}' for e in errs[2000]]}; within bounds {within}; "
        f"ratios N=2000/N=1000 {[f'{r:.4f}' for r in ratios]}; {elapsed:.2f}s"
    )


def criterion_9(seed=9):
    rng = np.random.default_rng(seed)
    pool = groups_up_to(32)
    fails = {name: 0 for name in ("p1", "p3", "p6", "real_restriction", "schur", "boas_kac")}
    worst_bk = 0.0
    for _ in range(500):
        G = pool[int(rng.integers(len(pool)))]
        n = G.total_order
        z = lambda: rng.normal(size=n) + 1j * rng.normal(size=n)
        f = cones.convolution_square(GFunc(G, z()))
        if not np.abs(f.values).max() <= f.values[0].real + 1e-9:
            fails["p1"] += 1
        if not np.abs(f.values - converse(f).values).max() <= 1e-9:
            fails["p3"] += 1
        m = GFunc(G, np.fft.ifftn(rng.exponential(size=G.orders)).reshape(-1))
        if not (cones.is_postype(m) and np.abs(m.values - converse(m).values).max() <= 1e-9):
            fails["p6"] += 1
        t = rng.exponential(size=len(G.orbits)) * (rng.random(len(G.orbits)) < 0.7)
        pe = GFunc(G, np.fft.ifftn(t[G.orbit_of].reshape(G.orders)).reshape(-1).real)
        _, o = even_odd_split(GFunc(G, rng.normal(size=n)))
        for r in (GFunc(G, rng.normal(size=n)), pe, pe + o):
            if cones.is_pd_fourier(r) != (cones.is_postype_real_sense(r) and cones.is_even(r)):
                fails["real_restriction"] += 1
        g = cones.convolution_square(GFunc(G, z()))
        if not (cones.is_pd_fourier(f * g, 1e-8) and cones.is_pd_gram(f * g, 1e-8)):
            fails["schur"] += 1
        dp = doubly_positive_sample(rng, G)
        root = cones.boas_kac_root(dp)
        resid = float(np.abs(cones.convolution_square(root).values - dp.values).max())
        worst_bk = max(worst_bk, resid)
        if resid > 1e-9:
            fails["boas_kac"] += 1
    ok = not any(fails.values())
    return ok, f"500 cases, failures {fails}, max Boas-Kac residual {worst_bk:.2e}"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8, criterion_9]


def _make_test(fn):
    def test():
        ok, detail = fn()
        assert ok, detail

    test.__name__ = "test_" + fn.__name__
    return test


for _fn in CRITERIA:
    globals()["test_" + _fn.__name__] = _make_test(_fn)


def main() -> int:
    failed = 0
    for k, fn in enumerate(CRITERIA, 1):
        try:
            ok, detail = fn()
        except Exception as exc:  # report, keep going
            ok, detail = False, f"raised {type(exc).__name__}: {exc}"
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'} criterion {k}: {detail}", flush=True)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
