"""Edge binomials ``e^u - e^v`` with a fixed normal form."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph_model import Graph


@dataclass(frozen=True)
class Binomial:
    """Normalized binomial: disjoint supports, the monomial holding the
    smallest edge index of the combined support is ``plus``."""

    plus: tuple[int, ...]
    minus: tuple[int, ...]
    degree: tuple[int, ...]

    @classmethod
    def from_pair(cls, g: Graph, u: Sequence[int], v: Sequence[int]) -> "Binomial":
        u = list(u)
        v = list(v)
        for i in range(len(u)):
            c = min(u[i], v[i])
            u[i] -= c
            v[i] -= c
        first = next((i for i in range(len(u)) if u[i] or v[i]), None)
        if first is None:
            raise ValueError("zero binomial")
        if v[first]:
            u, v = v, u
        du, dv = g.g_degree(u), g.g_degree(v)
        if du != dv:
            raise ValueError("monomials have different G-degrees; binomial not in the toric ideal")
        return cls(tuple(u), tuple(v), du)

    @property
    def total_degree(self) -> int:
        return sum(self.plus)

    def key(self):
        return (self.total_degree, self.degree, self.plus, self.minus)

    def __lt__(self, other):
        return self.key() < other.key()

    @property
    def plus_support(self) -> frozenset[int]:
        return frozenset(i for i, k in enumerate(self.plus) if k)

    @property
    def minus_support(self) -> frozenset[int]:
        return frozenset(i for i, k in enumerate(self.minus) if k)

    def to_json(self) -> dict:
        return {"plus": list(self.plus), "minus": list(self.minus), "degree": list(self.degree)}

    def __str__(self):
        return f"{monomial_text(self.plus)} - {monomial_text(self.minus)}"


def monomial_text(exps: Sequence[int]) -> str:
    terms = [f"e{i + 1}" if k == 1 else f"e{i + 1}^{k}" for i, k in enumerate(exps) if k]
    return "*".join(terms) if terms else "1"


def parse_binomial(text: str, m: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Inverse of ``str(Binomial)``; returns the raw exponent pair."""
    left, sep, right = text.partition(" - ")
    if not sep:
        raise ValueError(f"not a binomial: {text!r}")

    def mono(s):
        exps = [0] * m
        s = s.strip()
        if s == "1":
            return tuple(exps)
        for term in s.split("*"):
            name, _, power = term.partition("^")
            if not name.startswith("e"):
                raise ValueError(f"bad variable {term!r}")
            exps[int(name[1:]) - 1] += int(power) if power else 1
        return tuple(exps)

    return mono(left), mono(right)
