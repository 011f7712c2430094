"""Stable Hom dimensions with 2-Auslander sources or 2-coAuslander targets.

Two independent routes are provided for ``dim Hom(E(x), E(y)[n])``:

* :func:`hom_rig` - the closed form (``1`` iff ``n = sigma(x) - sigma(y)`` and
  ``0 <= x - y <= s``);
* :func:`hom_from_auslander` - cover membership: ``Hom(E(z), X) != 0`` iff
  ``O(z + omega)`` is a summand of the projective cover of ``X``, after the
  shift of ``X`` has been absorbed into its label.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .errors import DomainError, UnsupportedInput
from .extbundle import (
    ExtLabel,
    dualize,
    injective_hull,
    is_auslander,
    projective_cover,
    suspend,
)
from .picard import LElem, Weights

__all__ = [
    "StableObj",
    "hom_from_auslander",
    "hom_to_coauslander",
    "stable_hom",
    "hom_rig",
    "rigidity_check",
    "hom_table",
]


@dataclass(frozen=True)
class StableObj:
    """``label[shift]`` in the stable category."""

    label: ExtLabel
    shift: int = 0

    def normalized(self, w: Weights) -> ExtLabel:
        return suspend(w, self.label, self.shift)

    def dual(self, w: Weights) -> "StableObj":
        return StableObj(dualize(w, self.label), -self.shift)


def hom_from_auslander(w: Weights, source_twist: LElem, target: StableObj) -> int:
    """``dim Hom(E(source_twist), target)``; at most 1."""
    label = target.normalized(w)
    return int(w.add(source_twist, w.omega) in projective_cover(w, label))


def hom_to_coauslander(w: Weights, source: StableObj, target_twist: LElem) -> int:
    """``dim Hom(source, F(target_twist))`` where ``F = E[1]``; at most 1."""
    w.check(target_twist)
    return int(target_twist in injective_hull(w, source.normalized(w)))


def stable_hom(w: Weights, source: StableObj, target: StableObj) -> int:
    """``dim Hom(source, target)`` for a source isomorphic to a shifted 2-Auslander bundle.

    Raises :class:`UnsupportedInput` for any other source.
    """
    z = is_auslander(w, source.label)
    if z is None:
        raise UnsupportedInput(f"source {source.label} is not a 2-Auslander bundle")
    moved = StableObj(target.label, target.shift - source.shift)
    return hom_from_auslander(w, z, moved)


def hom_rig(w: Weights, x: LElem, y: LElem, n: int) -> int:
    """``dim Hom(E(x), E(y)[n])`` for ``x, y`` in ``[0, delta]``, closed form."""
    for v in (x, y):
        if not w.in_delta_box(v):
            raise DomainError(f"hom_rig needs arguments in [0, delta]; got {v}")
    if n != w.sigma(x) - w.sigma(y):
        return 0
    d = w.sub(x, y)
    return int(w.is_effective(d) and w.leq(d, w.s))


def _engine(w: Weights, x: LElem, y: LElem, n: int) -> int:
    return hom_from_auslander(w, x, StableObj(ExtLabel.make(w, w.zero, y), n))


def rigidity_check(
    w: Weights,
    n_range: Optional[Iterable[int]] = None,
    *,
    engine: str = "closed",
    grading: Optional[Callable[[LElem], int]] = None,
) -> bool:
    """``Hom(T, T[n]) = 0`` for ``n != 0`` where ``T = + E(x)[-grading(x)]``.

    ``engine`` is ``"closed"`` (:func:`hom_rig`) or ``"cover"``
    (:func:`hom_from_auslander`). ``grading`` defaults to ``sigma``.
    """
    grading = w.sigma if grading is None else grading
    hom = {"closed": hom_rig, "cover": _engine}[engine]
    if n_range is None:
        bound = w.sigma(w.delta) + 4
        n_range = range(-bound, bound + 1)
    shifts = [n for n in n_range if n != 0]
    box = w.delta_box
    for x in box:
        for y in box:
            base = grading(x) - grading(y)
            if any(hom(w, x, y, base + n) for n in shifts):
                return False
    return True


def hom_table(w: Weights, n_bound: Optional[int] = None) -> list[dict]:
    """Nonzero entries of ``dim Hom(E(x), E(y)[n])`` over the delta box."""
    bound = w.sigma(w.delta) + 4 if n_bound is None else n_bound
    rows = []
    for x in w.delta_box:
        for y in w.delta_box:
            for n in range(-bound, bound + 1):
                d = hom_rig(w, x, y, n)
                if d:
                    rows.append({"x": x.to_json(), "y": y.to_json(), "n": n, "dim": d})
    return rows
