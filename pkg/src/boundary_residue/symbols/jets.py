"""Lazy Taylor jets of symbols in the base variables x_1..x_5 at x_0.

A jet maps a derivative key (sorted tuple of directions, 5 = normal) to the
corresponding derivative at the boundary point.  Components are computed on
demand and memoised.  Derivatives that the geometric model does not fix
(curvature-level tangential jets of the metric) raise ``Unavailable``.
"""
from __future__ import annotations

from collections import Counter
from itertools import product
from math import comb
from typing import Callable

from .sym import Sym

Key = tuple


class Unavailable(LookupError):
    """A requested jet component lies outside the modelled data."""


def _key(*dirs: int) -> Key:
    return tuple(sorted(dirs))


class Jet:
    __slots__ = ("_fn", "_memo", "name")

    def __init__(self, fn: Callable[[Key], Sym], name: str = "jet"):
        self._fn = fn
        self._memo: dict[Key, Sym] = {}
        self.name = name

    def __getitem__(self, key: Key) -> Sym:
        key = tuple(sorted(key))
        hit = self._memo.get(key)
        if hit is None:
            hit = self._fn(key)
            self._memo[key] = hit
        return hit

    def at(self) -> Sym:
        return self[()]

    @classmethod
    def constant(cls, value: Sym, name: str = "const") -> "Jet":
        zero = Sym()
        return cls(lambda key: value if not key else zero, name)

    def __add__(self, other: "Jet") -> "Jet":
        return Jet(lambda key: self[key] + other[key], f"({self.name}+{other.name})")

    def __neg__(self) -> "Jet":
        return Jet(lambda key: -self[key], f"-{self.name}")

    def __sub__(self, other: "Jet") -> "Jet":
        return Jet(lambda key: self[key] - other[key], f"({self.name}-{other.name})")

    def scale(self, s) -> "Jet":
        return Jet(lambda key: self[key] * s, self.name)

    def __mul__(self, other: "Jet") -> "Jet":
        def fn(key: Key) -> Sym:
            out = Sym()
            for k1, k2, mult in splittings(key):
                a = self[k1]
                if a.is_zero():
                    continue
                b = other[k2]
                if b.is_zero():
                    continue
                term = a * b
                out = out + (term * mult if mult != 1 else term)
            return out

        return Jet(fn, f"{self.name}*{other.name}")

    def deriv(self, direction: int, times: int = 1) -> "Jet":
        extra = (direction,) * times
        return Jet(lambda key: self[key + extra], f"d{direction}^{times}{self.name}")

    def d_xn(self, times: int = 1) -> "Jet":
        def fn(key):
            v = self[key]
            for _ in range(times):
                v = v.d_xn()
            return v
        return Jet(fn, f"dxin{self.name}")

    def d_xi(self, j: int, times: int = 1) -> "Jet":
        def fn(key):
            v = self[key]
            for _ in range(times):
                v = v.d_xi(j)
            return v
        return Jet(fn, f"dxi{j}{self.name}")

    def map(self, fn_sym: Callable[[Sym], Sym], name: str = "map") -> "Jet":
        return Jet(lambda key: fn_sym(self[key]), name)


def splittings(key: Key):
    """Leibniz splittings of a multi-index: (left, right, multiplicity)."""
    counts = Counter(key)
    dirs = sorted(counts)
    for choice in product(*(range(counts[d] + 1) for d in dirs)):
        left: list[int] = []
        right: list[int] = []
        mult = 1
        for d, c in zip(dirs, choice):
            left += [d] * c
            right += [d] * (counts[d] - c)
            mult *= comb(counts[d], c)
        yield tuple(left), tuple(right), mult


def jet_sum(jets) -> Jet:
    jets = list(jets)
    return Jet(lambda key: sum((j[key] for j in jets), Sym()), "sum")
