"""Orbits of the Picard group on 2-extension bundles.

Twisting is quotiented out, so orbits live on ``S = [0, delta]``. Two parameters
lie in one orbit iff they are related by a reflection ``sigma_I`` for an even
subset ``I``. The orbit number is counted three ways: explicit orbit
decomposition, the Burnside average over the eight symbols ``sigma_I``, and the
closed formula

    (1/8) * sum_{I subset J, |I| even} prod_{i not in I} (p_i - 1),

with ``J`` the indices of even weights.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import prod

from .errors import DomainError
from .extbundle import EVEN_SUBSETS
from .picard import RANK, LElem, Weights

__all__ = [
    "OrbitReport",
    "sigma_action",
    "fixed_count",
    "closed_formula",
    "burnside_count",
    "is_transitive",
    "TRANSITIVE_TUPLES",
]

# Sorted weight tuples with a single orbit (every tuple with p_i <= 7 checked).
# (2,3,3,3) belongs here: with p_1 = 2 the rule sigma_{1j} flips coordinate j alone.
TRANSITIVE_TUPLES = ((2, 2, 2, 2), (2, 2, 2, 3), (2, 2, 3, 3), (2, 3, 3, 3))


def _reflect(p, lam, index_set):
    out = list(lam)
    for i in index_set:
        out[i - 1] = p[i - 1] - 2 - out[i - 1]
    return tuple(out)


def sigma_action(w: Weights, index_set, x: LElem) -> LElem:
    index_set = tuple(sorted(index_set))
    if len(index_set) % 2 or any(not 1 <= i <= RANK for i in index_set):
        raise DomainError(f"sigma_I needs an even subset of 1..4; got {index_set}")
    if not w.in_delta_box(x):
        raise DomainError(f"sigma_I acts on [0, delta]; got {x}")
    return LElem(_reflect(w.p, x.lam, index_set), 0)  # type: ignore[arg-type]


def fixed_count(p, index_set) -> int:
    """Brute-force ``|S^{sigma_I}|``."""
    return sum(
        1
        for lam in product(*(range(pi - 1) for pi in p))
        if _reflect(p, lam, index_set) == lam
    )


def closed_formula(p) -> int:
    even = [i for i in range(1, RANK + 1) if p[i - 1] % 2 == 0]
    total = sum(
        prod(p[i - 1] - 1 for i in range(1, RANK + 1) if i not in sub)
        for sub in EVEN_SUBSETS
        if set(sub) <= set(even)
    )
    value = Fraction(total, 8)
    if value.denominator != 1:
        raise ArithmeticError(f"closed formula is not integral for {p}: {value}")
    return int(value)


@dataclass
class OrbitReport:
    weights: Weights
    fixed_counts: dict[tuple[int, ...], int]
    burnside: int
    closed_formula: int
    orbits: list[list[LElem]] = field(default_factory=list)
    faithful_order: int = 8

    @property
    def orbit_count(self) -> int:
        return len(self.orbits)

    def to_json(self) -> dict:
        return {
            "weights": list(self.weights.p),
            "fixed_counts": {
                "{" + ",".join(map(str, k)) + "}": v for k, v in self.fixed_counts.items()
            },
            "burnside": self.burnside,
            "closed_formula": self.closed_formula,
            "orbit_count": self.orbit_count,
            "faithful_order": self.faithful_order,
            "orbits": [[list(v.lam) for v in orb] for orb in self.orbits],
        }


def burnside_count(w: Weights, with_orbits: bool = True) -> OrbitReport:
    p = w.p
    points = [v.lam for v in w.delta_box]
    images = {I: [_reflect(p, lam, I) for lam in points] for I in EVEN_SUBSETS}
    fixed = {I: sum(a == b for a, b in zip(points, images[I])) for I in EVEN_SUBSETS}
    avg = Fraction(sum(fixed.values()), len(EVEN_SUBSETS))
    if avg.denominator != 1:
        raise ArithmeticError(f"Burnside average is not integral for {p}: {avg}")
    faithful = len({tuple(images[I]) for I in EVEN_SUBSETS})

    orbits: list[list[LElem]] = []
    if with_orbits:
        seen: set = set()
        for k, lam in enumerate(points):
            if lam in seen:
                continue
            orb = sorted({images[I][k] for I in EVEN_SUBSETS})
            seen.update(orb)
            orbits.append([LElem(m, 0) for m in orb])  # type: ignore[arg-type]
    return OrbitReport(w, fixed, int(avg), closed_formula(p), orbits, faithful)


def is_transitive(w: Weights) -> bool:
    return burnside_count(w, with_orbits=False).burnside == 1
