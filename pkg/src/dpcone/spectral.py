"""Functions (and measures) on a finite abelian group and their transforms.

Haar measure is counting measure, so a function and the measure with that
density are the same object here. Forward transform is unnormalized,

    dft(f)(gamma) = sum_x conj(gamma(x)) f(x),

and the inverse carries the ``1/|G|``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .group import GroupMismatchError, GroupSpec


@dataclass(frozen=True, eq=False)
class GFunc:
    group: GroupSpec
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=complex).reshape(-1).copy()
        if v.size != self.group.total_order:
            raise ValueError(f"expected {self.group.total_order} values, got {v.size}")
        if not np.all(np.isfinite(v)):
            raise ValueError("function values must be finite")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zeros(cls, group: GroupSpec) -> "GFunc":
        return cls(group, np.zeros(group.total_order))

    @classmethod
    def const(cls, group: GroupSpec, c: complex = 1.0) -> "GFunc":
        return cls(group, np.full(group.total_order, c, dtype=complex))

    @classmethod
    def delta(cls, group: GroupSpec, x=None) -> "GFunc":
        """Point mass at ``x`` (an element; the identity when omitted)."""
        v = np.zeros(group.total_order, dtype=complex)
        v[0 if x is None else group.index(x)] = 1.0
        return cls(group, v)

    @classmethod
    def indicator(cls, window) -> "GFunc":
        return cls(window.group, window.indicator())

    # -- views --------------------------------------------------------------

    @property
    def real(self) -> np.ndarray:
        return self.values.real

    @property
    def imag(self) -> np.ndarray:
        return self.values.imag

    def is_real(self, tol: float = 1e-9) -> bool:
        return bool(np.max(np.abs(self.values.imag), initial=0.0) <= tol)

    def total_variation(self) -> float:
        return float(np.abs(self.values).sum())

    def sup_norm(self) -> float:
        return float(np.abs(self.values).max(initial=0.0))

    def at(self, x) -> complex:
        return complex(self.values[self.group.index(x)])

    def __len__(self) -> int:
        return self.values.size

    def __repr__(self) -> str:
        return f"GFunc({self.group!r}, {np.array2string(self.values, precision=4)})"

    # -- arithmetic ---------------------------------------------------------

    def _other(self, other) -> np.ndarray:
        if isinstance(other, GFunc):
            if other.group != self.group:
                raise GroupMismatchError(f"{self.group} vs {other.group}")
            return other.values
        return other

    def __add__(self, other):
        return GFunc(self.group, self.values + self._other(other))

    __radd__ = __add__

    def __sub__(self, other):
        return GFunc(self.group, self.values - self._other(other))

    def __rsub__(self, other):
        return GFunc(self.group, self._other(other) - self.values)

    def __mul__(self, other):
        return GFunc(self.group, self.values * self._other(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return GFunc(self.group, self.values / self._other(other))

    def __neg__(self):
        return GFunc(self.group, -self.values)

    def pair(self, other: "GFunc") -> complex:
        """``sum_x self(x) * other(x)``, the integral of ``other`` against ``self``."""
        return complex(np.sum(self.values * self._other(other)))

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "group": self.group.to_json(),
            "values": [[float(z.real), float(z.imag)] for z in self.values],
        }

    @classmethod
    def from_json(cls, data: dict) -> "GFunc":
        group = GroupSpec.from_json(data["group"])
        vals = []
        for item in data["values"]:
            if isinstance(item, (list, tuple)):
                re, im = (list(item) + [0.0])[:2]
                vals.append(complex(re, im))
            else:
                vals.append(complex(item))
        return cls(group, np.array(vals))


def _cube(f: GFunc) -> np.ndarray:
    return f.values.reshape(f.group.orders)


def dft(f: GFunc) -> GFunc:
    """Fourier transform indexed by dual elements."""
    return GFunc(f.group, np.fft.fftn(_cube(f)).reshape(-1))


def idft(F: GFunc) -> GFunc:
    return GFunc(F.group, np.fft.ifftn(_cube(F)).reshape(-1))


def convolve(f: GFunc, g: GFunc) -> GFunc:
    """``(f * g)(x) = sum_y f(x - y) g(y)``."""
    if f.group != g.group:
        raise GroupMismatchError(f"cannot convolve {f.group} with {g.group}")
    return idft(GFunc(f.group, dft(f).values * dft(g).values))


def reflect(f: GFunc) -> GFunc:
    """``x -> f(-x)``."""
    return GFunc(f.group, f.values[f.group.neg_index])


def converse(f: GFunc) -> GFunc:
    """``x -> conj(f(-x))``."""
    return GFunc(f.group, np.conj(f.values[f.group.neg_index]))


def even_odd_split(f: GFunc) -> tuple[GFunc, GFunc]:
    r = f.values[f.group.neg_index]
    return GFunc(f.group, (f.values + r) / 2), GFunc(f.group, (f.values - r) / 2)
