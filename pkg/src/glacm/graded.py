"""Dimensions of graded pieces of ``R = k[X1..X4]/(sum X_i^p_i)`` and its truncations.

``dim_R`` uses the closed form ``C(ell + 2, 2)``. :func:`monomial_degree_counts`
is an independent brute-force oracle that counts the monomial basis of R
(leading term ``X1^p1`` eliminated, so ``a_1 < p_1``) degree by degree.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from .errors import DomainError
from .picard import RANK, LElem, Weights

__all__ = [
    "Truncation",
    "dim_R",
    "dim_S",
    "line_ext_dims",
    "monomial_degree_counts",
    "dim_R_oracle",
    "truncated_degree_counts",
]


@dataclass(frozen=True)
class Truncation:
    """Exponent bounds ``q`` for ``S = R / (X_i^q_i)``; requires ``2 <= q_i <= p_i``."""

    q: tuple[int, int, int, int]

    def __post_init__(self):
        object.__setattr__(self, "q", tuple(int(v) for v in self.q))
        if len(self.q) != RANK:
            raise DomainError(f"need {RANK} truncation exponents, got {len(self.q)}")
        if min(self.q) < 2:
            raise DomainError(f"truncation exponents must be >= 2, got {self.q}")

    def validate(self, w: Weights) -> "Truncation":
        if any(not 2 <= q <= p for q, p in zip(self.q, w.p)):
            raise DomainError(f"truncation {self.q} must satisfy 2 <= q_i <= p_i for p={w.p}")
        return self

    @classmethod
    def parse(cls, text: str) -> "Truncation":
        try:
            return cls(tuple(int(t) for t in text.split(",")))  # type: ignore[arg-type]
        except ValueError as exc:
            raise DomainError(f"malformed truncation {text!r}") from exc

    @classmethod
    def full(cls, w: Weights) -> "Truncation":
        return cls(w.p)

    @classmethod
    def two(cls) -> "Truncation":
        return cls((2, 2, 2, 2))


def dim_R(w: Weights, x: LElem) -> int:
    """``dim R_x``: ``C(ell + 2, 2)`` if ``x >= 0`` else 0."""
    w.check(x)
    return comb(x.ell + 2, 2) if x.ell >= 0 else 0


@lru_cache(maxsize=64)
def monomial_degree_counts(w: Weights, max_ell: int) -> Counter:
    """Count basis monomials of R by degree, for all degrees with ``ell <= max_ell``.

    Enumerates exponent vectors with ``a_1 < p_1`` and ``a_i < (max_ell + 1) p_i``
    for ``i > 1``, computes each degree in L from scratch and tallies.
    """
    p = w.p
    ranges = [np.arange(p[0])] + [np.arange((max_ell + 1) * pi) for pi in p[1:]]
    grids = np.meshgrid(*ranges, indexing="ij")
    a = np.stack([g.ravel() for g in grids])  # shape (4, N)
    pv = np.array(p).reshape(RANK, 1)
    lam = a % pv
    ell = (a // pv).sum(axis=0)
    keep = ell <= max_ell
    lam, ell = lam[:, keep], ell[keep]
    counts: Counter = Counter()
    for col in zip(*lam.tolist(), ell.tolist()):
        counts[LElem(tuple(col[:RANK]), col[RANK])] += 1  # type: ignore[arg-type]
    return counts


def dim_R_oracle(w: Weights, x: LElem) -> int:
    """Brute-force ``dim R_x`` by monomial enumeration."""
    w.check(x)
    if x.ell < 0:
        return 0
    return monomial_degree_counts(w, max(x.ell, 0))[x]


@lru_cache(maxsize=256)
def truncated_degree_counts(w: Weights, q: Truncation) -> Counter:
    """Degrees of all monomials ``prod X_i^a_i`` with ``0 <= a_i < q_i``."""
    q.validate(w)
    counts: Counter = Counter()
    grids = np.meshgrid(*(np.arange(qi) for qi in q.q), indexing="ij")
    for a in zip(*(g.ravel().tolist() for g in grids)):
        counts[w.normalize(a, 0)] += 1
    return counts


def dim_S(w: Weights, x: LElem, q: Truncation) -> int:
    """``dim S_x`` for ``S = R/(X_i^q_i)``, by bounded monomial enumeration."""
    w.check(x)
    return truncated_degree_counts(w, q)[x]


def line_ext_dims(w: Weights, x: LElem, y: LElem) -> tuple[int, int, int]:
    """``(dim Hom, dim Ext^1, dim Ext^2)`` from ``O(x)`` to ``O(y)``."""
    hom = dim_R(w, w.sub(y, x))
    ext2 = dim_R(w, w.add(w.sub(x, y), w.omega))
    return hom, 0, ext2
