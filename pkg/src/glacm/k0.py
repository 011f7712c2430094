"""Grothendieck group classes as formal sums of line-bundle degrees.

A :class:`K0Class` stores ``sum n_x [O(x)]`` for arbitrary degrees ``x``; it is
never reduced to a basis. Equality in K0 is decided by the fingerprint: the
vector of Euler pairings against the canonical basis ``[O(b)]``,
``0 <= b <= 2c``. The Gram matrix of that basis is unimodular for every
tuple checked (see :func:`gram_determinant`), so the fingerprint is a faithful
coordinate system there.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping

from sympy import Matrix
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from .errors import DomainError
from .graded import dim_R
from .picard import LElem, Weights

__all__ = [
    "K0Class",
    "euler_pairing",
    "line_euler",
    "fingerprint",
    "classes_equal",
    "gram_matrix",
    "gram_determinant",
    "is_unimodular",
    "koszul_class",
    "verify_koszul",
    "verify_triangle_class",
]


class K0Class:
    """Formal integer combination of line-bundle classes ``[O(x)]``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[LElem, int] | Iterable[tuple[LElem, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: Counter = Counter()
        for deg, n in items:
            acc[deg] += int(n)
        self.coeffs: dict[LElem, int] = {d: n for d, n in sorted(acc.items()) if n != 0}

    @classmethod
    def line(cls, x: LElem, n: int = 1) -> "K0Class":
        return cls({x: n})

    @property
    def rank(self) -> int:
        return sum(self.coeffs.values())

    def __add__(self, other: "K0Class") -> "K0Class":
        return K0Class(list(self.coeffs.items()) + list(other.coeffs.items()))

    def __neg__(self) -> "K0Class":
        return K0Class({d: -n for d, n in self.coeffs.items()})

    def __sub__(self, other: "K0Class") -> "K0Class":
        return self + (-other)

    def __rmul__(self, k: int) -> "K0Class":
        return K0Class({d: k * n for d, n in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        # syntactic equality of the stored formal sum; use classes_equal for K0
        return isinstance(other, K0Class) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))

    def __repr__(self) -> str:
        terms = " ".join(f"{n:+d}[{d}]" for d, n in self.coeffs.items())
        return f"K0Class({terms or '0'})"

    def twist(self, w: Weights, z: LElem) -> "K0Class":
        return K0Class({w.add(d, z): n for d, n in self.coeffs.items()})

    def to_json(self) -> list[dict]:
        return [{"degree": d.to_json(), "coeff": n} for d, n in self.coeffs.items()]

    @classmethod
    def from_json(cls, obj: list[dict]) -> "K0Class":
        return cls([(LElem.from_json(t["degree"]), int(t["coeff"])) for t in obj])


def line_euler(w: Weights, x: LElem, y: LElem) -> int:
    """``chi(O(x), O(y)) = dim R_{y-x} + dim R_{x-y+omega}``."""
    return dim_R(w, w.sub(y, x)) + dim_R(w, w.add(w.sub(x, y), w.omega))


def euler_pairing(w: Weights, xi: K0Class, eta: K0Class) -> int:
    return sum(
        n * m * line_euler(w, x, y)
        for x, n in xi.coeffs.items()
        for y, m in eta.coeffs.items()
    )


def fingerprint(w: Weights, xi: K0Class) -> tuple[int, ...]:
    return tuple(euler_pairing(w, K0Class.line(b), xi) for b in w.k0_basis)


def classes_equal(w: Weights, xi: K0Class, eta: K0Class) -> bool:
    """Equality in K0, decided by rank and fingerprint.

    Exact when :func:`is_unimodular` holds for ``w``; otherwise only a
    necessary condition.
    """
    diff = xi - eta
    if diff.rank != 0:
        return False
    return not any(fingerprint(w, diff))


@lru_cache(maxsize=64)
def gram_matrix(w: Weights) -> tuple[tuple[int, ...], ...]:
    basis = w.k0_basis
    return tuple(tuple(line_euler(w, a, b) for b in basis) for a in basis)


@lru_cache(maxsize=64)
def gram_determinant(w: Weights) -> int:
    """Exact integer determinant of the Euler Gram matrix on ``[0, 2c]``."""
    dm = DomainMatrix.from_Matrix(Matrix(gram_matrix(w))).convert_to(ZZ)
    return int(dm.det())


def is_unimodular(w: Weights) -> bool:
    return abs(gram_determinant(w)) == 1


def koszul_class(w: Weights, base: LElem, index_set: tuple[int, ...], ells: tuple[int, ...]) -> K0Class:
    """``sum_{J subset I} (-1)^|J| [O(base + sum_{j in J} ell_j x_j)]``."""
    if len(index_set) != len(ells):
        raise DomainError("index set and exponents must have the same length")
    terms = []
    for k in range(len(index_set) + 1):
        for sub in combinations(range(len(index_set)), k):
            coeffs = [0, 0, 0, 0]
            for t in sub:
                coeffs[index_set[t] - 1] += ells[t]
            terms.append((w.add(base, w.normalize(coeffs)), (-1) ** k))
    return K0Class(terms)


def verify_koszul(w: Weights, base: LElem, index_set: tuple[int, ...], ells: tuple[int, ...]) -> bool:
    """The alternating Koszul class on three indices has zero fingerprint."""
    if len(set(index_set)) != 3 or any(not 1 <= i <= 4 for i in index_set):
        raise DomainError(f"index set must be 3 distinct indices in 1..4, got {index_set}")
    if any(e < 1 for e in ells):
        raise DomainError(f"Koszul exponents must be positive, got {ells}")
    return not any(fingerprint(w, koszul_class(w, base, index_set, ells)))


def verify_triangle_class(w: Weights, x: LElem, i: int) -> bool:
    """Class identity behind the triangle ``E<x> -> E<x+x_i> -> E<x - lam_i x_i>((1+lam_i) x_i)``."""
    from .extbundle import ExtLabel, class_of_ext

    xi_ = w.x(i)
    y = w.add(x, xi_)
    if not (w.in_delta_box(x) and w.in_delta_box(y)):
        raise DomainError(f"need 0 <= x <= x + x_{i} <= delta; got x={x}")
    lam = x.lam[i - 1]
    cone = class_of_ext(w, ExtLabel.make(w, w.sub(x, w.mul(lam, xi_)), w.mul(1 + lam, xi_)))
    rhs = (
        class_of_ext(w, ExtLabel.make(w, y, w.zero))
        - class_of_ext(w, ExtLabel.make(w, x, w.zero))
        + K0Class.line(w.add(w.omega, w.mul(1 + lam, xi_)))
        + K0Class(
            (w.sub(x, w.mul(1 + x.lam[j - 1], w.x(j))), 1) for j in range(1, 5) if j != i
        )
    )
    return classes_equal(w, cone, rhs)
