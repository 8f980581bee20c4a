"""Finite abelian groups as products of cyclic factors.

Elements are tuples of residues; every element also has a flat index in
row-major order (first factor slowest), which is how functions on the group
are stored. The dual group is represented by the same :class:`GroupSpec`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence, Union

import numpy as np

Elem = tuple[int, ...]
ElemLike = Union[int, Sequence[int]]


class GroupMismatchError(ValueError):
    """Raised when objects living on different groups are combined."""


@dataclass(frozen=True)
class GroupSpec:
    orders: tuple[int, ...]

    def __post_init__(self):
        orders = tuple(int(n) for n in self.orders)
        if not orders:
            raise ValueError("a group needs at least one cyclic factor")
        if any(n < 1 for n in orders):
            raise ValueError(f"cyclic factor orders must be >= 1, got {orders}")
        object.__setattr__(self, "orders", orders)

    @classmethod
    def cyclic(cls, n: int) -> "GroupSpec":
        return cls((n,))

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def total_order(self) -> int:
        return math.prod(self.orders)

    def __len__(self) -> int:
        return self.total_order

    def __repr__(self) -> str:
        return "GroupSpec(" + "x".join(f"Z{n}" for n in self.orders) + ")"

    # -- indexing ---------------------------------------------------------

    def elem(self, x: ElemLike) -> Elem:
        """Normalize ``x`` to a residue tuple (ints are allowed for rank one)."""
        if isinstance(x, (int, np.integer)):
            if self.rank != 1:
                raise ValueError(f"bare integer element {x} needs a rank-1 group")
            x = (int(x),)
        x = tuple(int(r) for r in x)
        if len(x) != self.rank:
            raise ValueError(f"element {x} has {len(x)} residues, group has rank {self.rank}")
        return tuple(r % n for r, n in zip(x, self.orders))

    def index(self, x: ElemLike) -> int:
        return int(np.ravel_multi_index(self.elem(x), self.orders))

    def element(self, i: int) -> Elem:
        if not 0 <= i < self.total_order:
            raise IndexError(f"element index {i} out of range for {self}")
        return tuple(int(r) for r in np.unravel_index(i, self.orders))

    def elements(self) -> Iterable[Elem]:
        for i in range(self.total_order):
            yield self.element(i)

    @cached_property
    def coords(self) -> np.ndarray:
        """``(|G|, rank)`` array of residues, row ``i`` is element ``i``."""
        grids = np.indices(self.orders).reshape(self.rank, -1)
        return grids.T.copy()

    @cached_property
    def neg_index(self) -> np.ndarray:
        """``neg_index[i]`` is the index of ``-element(i)``."""
        neg = (-self.coords) % np.asarray(self.orders)
        return np.ravel_multi_index(neg.T, self.orders)

    def add_index(self, i: np.ndarray, j: np.ndarray) -> np.ndarray:
        c = (self.coords[i] + self.coords[j]) % np.asarray(self.orders)
        return np.ravel_multi_index(np.moveaxis(c, -1, 0), self.orders)

    @cached_property
    def phase(self) -> np.ndarray:
        """``phase[g, x] = sum_j g_j x_j / n_j  (mod 1)`` for dual ``g`` and ``x``."""
        n = np.asarray(self.orders)
        c = self.coords
        # integer accumulation keeps the phases exact before the final division
        L = math.lcm(*self.orders)
        w = L // n
        num = (c * w) @ c.T
        return (num % L) / L

    @cached_property
    def character_table(self) -> np.ndarray:
        """``table[g, x] = gamma_g(x)``."""
        return np.exp(2j * np.pi * self.phase)

    @cached_property
    def cos_table(self) -> np.ndarray:
        return np.cos(2 * np.pi * self.phase)

    @cached_property
    def orbits(self) -> list[np.ndarray]:
        """Orbits of ``x -> -x`` as index arrays, ordered by smallest member."""
        seen = np.zeros(self.total_order, dtype=bool)
        out = []
        for i in range(self.total_order):
            if not seen[i]:
                j = int(self.neg_index[i])
                orb = np.array([i] if i == j else [i, j])
                seen[orb] = True
                out.append(orb)
        return out

    @cached_property
    def orbit_of(self) -> np.ndarray:
        lab = np.empty(self.total_order, dtype=int)
        for k, orb in enumerate(self.orbits):
            lab[orb] = k
        return lab

    @cached_property
    def orbit_sizes(self) -> np.ndarray:
        return np.array([len(o) for o in self.orbits])

    def to_json(self) -> list[int]:
        return list(self.orders)

    @classmethod
    def from_json(cls, data) -> "GroupSpec":
        if isinstance(data, int):
            data = [data]
        return cls(tuple(data))


def _check(g: GroupSpec, *xs: ElemLike) -> list[Elem]:
    return [g.elem(x) for x in xs]


def add(g: GroupSpec, x: ElemLike, y: ElemLike) -> Elem:
    x, y = _check(g, x, y)
    return tuple((a + b) % n for a, b, n in zip(x, y, g.orders))


def negate(g: GroupSpec, x: ElemLike) -> Elem:
    (x,) = _check(g, x)
    return tuple((n - r) % n for r, n in zip(x, g.orders))


def character_value(g: GroupSpec, gamma: ElemLike, x: ElemLike) -> complex:
    """Value of the character indexed by ``gamma`` at ``x``."""
    gamma, x = _check(g, gamma, x)
    t = sum(gj * xj / n for gj, xj, n in zip(gamma, x, g.orders))
    t -= math.floor(t)
    return complex(np.exp(2j * np.pi * t))


@dataclass(frozen=True)
class Window:
    """A subset of a finite group, stored as a frozenset of element indices."""

    group: GroupSpec
    members: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        members = frozenset(int(i) for i in self.members)
        bad = [i for i in members if not 0 <= i < self.group.total_order]
        if bad:
            raise ValueError(f"window indices {sorted(bad)} out of range for {self.group}")
        object.__setattr__(self, "members", members)

    @classmethod
    def from_elements(cls, group: GroupSpec, elems: Iterable[ElemLike]) -> "Window":
        return cls(group, frozenset(group.index(x) for x in elems))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x) -> bool:
        if isinstance(x, (int, np.integer)) and self.group.rank != 1:
            return int(x) in self.members
        return self.group.index(x) in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def indices(self) -> np.ndarray:
        return np.array(sorted(self.members), dtype=int)

    def indicator(self) -> np.ndarray:
        chi = np.zeros(self.group.total_order)
        chi[self.indices()] = 1.0
        return chi

    @property
    def is_symmetric(self) -> bool:
        return reflect(self) == self

    def to_json(self) -> list[int]:
        return sorted(self.members)


def reflect(w: Window) -> Window:
    idx = w.indices()
    return Window(w.group, frozenset(w.group.neg_index[idx].tolist()))


def translate(w: Window, s: ElemLike) -> Window:
    g = w.group
    si = g.index(s)
    idx = w.indices()
    return Window(g, frozenset(g.add_index(idx, np.full_like(idx, si)).tolist()))


def sumset(w: Window, k: int) -> Window:
    """k-fold Minkowski sum ``W + W + ... + W``."""
    if k < 1:
        raise ValueError(f"sumset needs k >= 1, got {k}")
    g = w.group
    base = w.indices()
    acc = base
    for _ in range(k - 1):
        if acc.size == 0:
            break
        a, b = np.meshgrid(acc, base, indexing="ij")
        acc = np.unique(g.add_index(a.ravel(), b.ravel()))
    return Window(g, frozenset(acc.tolist()))
