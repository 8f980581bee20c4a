"""Membership predicates for the cones of positive definite, positive type,
nonnegative, even and odd functions/measures on a finite abelian group.

On a finite group a function is positive definite iff its transform is
entrywise nonnegative, and a measure is of positive type under the same
condition, so both predicates share one implementation. The Gram-matrix test
works from the definition instead and serves as an independent oracle.
"""

from __future__ import annotations

import numpy as np

from .spectral import GFunc, converse, convolve, dft, idft

DEFAULT_TOL = 1e-9
GRAM_MAX_ORDER = 512


class NotPositiveDefiniteError(ValueError):
    pass


def _require_real(f: GFunc, tol: float) -> np.ndarray:
    if not f.is_real(tol):
        raise ValueError(f"expected a real-valued function (max |imag| = {np.abs(f.imag).max():.3g})")
    return f.real


def is_nonneg(f: GFunc, tol: float = DEFAULT_TOL) -> bool:
    return bool(_require_real(f, tol).min() >= -tol)


def _spectrum_nonneg(F: np.ndarray, tol: float) -> bool:
    return bool(np.all(np.abs(F.imag) <= tol) and np.all(F.real >= -tol))


def is_pd_fourier(f: GFunc, tol: float = DEFAULT_TOL) -> bool:
    """Positive definiteness via Bochner: ``dft(f)`` real and ``>= -tol``."""
    return _spectrum_nonneg(dft(f).values, tol)


def is_pd_gram(f: GFunc, tol: float = DEFAULT_TOL) -> bool:
    """Positive definiteness straight from the quadratic forms.

    Materializes ``A[x, y] = f(x - y)``. The form ``c^H A c`` is real and
    nonnegative for every ``c`` iff the skew part ``(A - A^H) / 2i`` vanishes
    and the Hermitian part is positive semidefinite; both are tested through
    their eigenvalues.
    """
    G = f.group
    n = G.total_order
    if n > GRAM_MAX_ORDER:
        raise ValueError(f"Gram oracle is capped at |G| <= {GRAM_MAX_ORDER}, got {n}")
    idx = np.arange(n)
    diff = G.add_index(idx[:, None], G.neg_index[idx][None, :])
    A = f.values[diff]
    herm = (A + A.conj().T) / 2
    skew = (A - A.conj().T) / 2j
    if np.abs(np.linalg.eigvalsh(skew)).max() > tol:
        return False
    return bool(np.linalg.eigvalsh(herm).min() >= -tol)


def is_postype(m: GFunc, tol: float = DEFAULT_TOL) -> bool:
    return _spectrum_nonneg(dft(m).values, tol)


def is_postype_real_sense(m: GFunc, tol: float = DEFAULT_TOL) -> bool:
    """Positive type against real weights only: ``Re dft(m) >= -tol``."""
    return bool(np.all(dft(m).real >= -tol))


def is_even(f: GFunc, tol: float = DEFAULT_TOL) -> bool:
    return bool(np.abs(f.values - f.values[f.group.neg_index]).max() <= tol)


def is_odd(f: GFunc, tol: float = DEFAULT_TOL) -> bool:
    return bool(np.abs(f.values + f.values[f.group.neg_index]).max() <= tol)


def is_doubly_positive(f: GFunc, tol: float = DEFAULT_TOL) -> bool:
    if not f.is_real(tol):
        return False
    return is_nonneg(f, tol) and is_pd_fourier(f, tol)


def convolution_square(g: GFunc) -> GFunc:
    """``g * converse(g)``; its transform is ``|dft(g)|^2``."""
    return convolve(g, converse(g))


def boas_kac_root(f: GFunc, tol: float = DEFAULT_TOL) -> GFunc:
    """Return ``g`` with ``g * converse(g) = f`` for positive definite ``f``.

    Takes the branch with ``dft(g) = sqrt(dft(f)) >= 0``, so a real even ``f``
    gets a real even root.
    """
    F = dft(f).values
    if not _spectrum_nonneg(F, tol):
        raise NotPositiveDefiniteError("Boas-Kac root requires a positive definite function")
    root = np.sqrt(np.clip(F.real, 0.0, None))
    g = idft(GFunc(f.group, root))
    if np.abs(f.imag).max() <= tol and np.abs(f.values - f.values[f.group.neg_index]).max() <= tol:
        g = GFunc(g.group, g.real)
    return g
