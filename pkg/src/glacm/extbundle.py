"""Label calculus for 2-extension bundles ``E<x>(z)``.

A label is a pair ``(x, twist)`` with ``0 <= x <= delta``. The stable category
operations (suspension, duality, coextension) are implemented as rewrites of
labels; isomorphism of labels is governed by an order-8 family of rewrites
indexed by the even subsets of ``{1, 2, 3, 4}``:

    E<x> ~= E<r_I(x)>(z_I),   z_I = sum_{i in I} (lam_i + 1) x_i - (|I|/2) c

where ``r_I`` reflects ``lam_i -> p_i - 2 - lam_i`` for ``i in I``. ``I`` empty is
the identity, ``|I| = 2`` gives six mixed rules and ``I = {1,2,3,4}`` gives
``E<x> ~= E<delta - x>(x - omega - c)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import DomainError
from .k0 import K0Class
from .picard import RANK, LElem, Weights

__all__ = [
    "EVEN_SUBSETS",
    "ExtLabel",
    "LineBundleMultiset",
    "class_of_ext",
    "suspend",
    "suspend_via",
    "dualize",
    "coextension",
    "iso_images",
    "iso_equivalent",
    "canonical_form",
    "injective_hull",
    "projective_cover",
    "is_auslander",
    "u_to_ext",
    "ext_to_u",
]

EVEN_SUBSETS: tuple[tuple[int, ...], ...] = tuple(
    sub for k in (0, 2, 4) for sub in combinations(range(1, RANK + 1), k)
)


@dataclass(frozen=True, order=True)
class ExtLabel:
    """``E<x>(twist)``. Ordered by ``(x, twist)``."""

    x: LElem
    twist: LElem

    @classmethod
    def make(cls, w: Weights, x: LElem, twist: Optional[LElem] = None) -> "ExtLabel":
        twist = w.zero if twist is None else twist
        w.check(x, twist)
        if not w.in_delta_box(x):
            raise DomainError(f"extension parameter must lie in [0, delta]; got {x}")
        return cls(x, twist)

    def twisted(self, w: Weights, z: LElem) -> "ExtLabel":
        return ExtLabel(self.x, w.add(self.twist, z))

    def to_json(self) -> dict:
        return {"x": self.x.to_json(), "twist": self.twist.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "ExtLabel":
        return cls(LElem.from_json(obj["x"]), LElem.from_json(obj["twist"]))

    def __str__(self) -> str:
        return f"E<{self.x}>({self.twist})"


class LineBundleMultiset(tuple):
    """Sorted tuple of degrees naming a direct sum of line bundles."""

    def __new__(cls, degrees):
        return super().__new__(cls, sorted(degrees))

    def to_json(self) -> list[dict]:
        return [d.to_json() for d in self]


def _reflect(w: Weights, x: LElem, index_set) -> LElem:
    lam = list(x.lam)
    for i in index_set:
        lam[i - 1] = w.p[i - 1] - 2 - lam[i - 1]
    return LElem(tuple(lam), 0)  # type: ignore[arg-type]


def _check(w: Weights, a: ExtLabel) -> None:
    w.check(a.x, a.twist)
    if not w.in_delta_box(a.x):
        raise DomainError(f"invalid label {a}: x outside [0, delta]")


def class_of_ext(w: Weights, a: ExtLabel) -> K0Class:
    """``[E<x>(z)] = [O(omega)] + sum_i [O(x - (1+lam_i) x_i)] - [O(x)]``, all twisted by z."""
    _check(w, a)
    terms = [(w.omega, 1), (a.x, -1)]
    for i in range(1, RANK + 1):
        terms.append((w.sub(a.x, w.mul(1 + a.x.lam[i - 1], w.x(i))), 1))
    return K0Class(terms).twist(w, a.twist)


def suspend_via(w: Weights, a: ExtLabel, i: int) -> ExtLabel:
    """One suspension using the reflection in coordinate ``i``."""
    _check(w, a)
    lam_i = a.x.lam[i - 1]
    return ExtLabel(_reflect(w, a.x, (i,)), w.add(a.twist, w.mul(1 + lam_i, w.x(i))))


def suspend(w: Weights, a: ExtLabel, n: int = 1) -> ExtLabel:
    """``a[n]``: ``[2k]`` twists by ``k c``; an odd remainder uses the ``i = 1`` rule."""
    k, r = divmod(n, 2)
    out = ExtLabel.make(w, a.x, w.add(a.twist, w.mul(k, w.c)))
    if r:
        out = suspend_via(w, out, 1)
    return out


def dualize(w: Weights, a: ExtLabel) -> ExtLabel:
    """Vector-bundle dual: ``E<x>(z)^v = E<x>[1](-x - omega - z)``."""
    shifted = suspend(w, ExtLabel.make(w, a.x), 1)
    return shifted.twisted(w, w.sub(w.neg(w.add(a.x, w.omega)), a.twist))


def coextension(w: Weights, x: LElem, twist: Optional[LElem] = None) -> ExtLabel:
    """The 2-coextension bundle ``F<x>(twist) = E<x>(twist)[1]`` as an extension label."""
    return suspend(w, ExtLabel.make(w, x, twist), 1)


def iso_images(w: Weights, a: ExtLabel) -> tuple[ExtLabel, ...]:
    """The eight labels isomorphic to ``a``, one per even subset."""
    _check(w, a)
    out = []
    for index_set in EVEN_SUBSETS:
        coeffs = [0, 0, 0, 0]
        for i in index_set:
            coeffs[i - 1] = a.x.lam[i - 1] + 1
        z = w.normalize(coeffs, -(len(index_set) // 2))
        out.append(ExtLabel(_reflect(w, a.x, index_set), w.add(a.twist, z)))
    return tuple(out)


def iso_equivalent(w: Weights, a: ExtLabel, b: ExtLabel) -> bool:
    _check(w, b)
    return b in iso_images(w, a)


def canonical_form(w: Weights, a: ExtLabel) -> ExtLabel:
    return min(iso_images(w, a))


def injective_hull(w: Weights, a: ExtLabel) -> LineBundleMultiset:
    """``+_i O(omega + (1+lam_i) x_i)  +  +_i O(x - (1+lam_i) x_i)``, twisted."""
    _check(w, a)
    degs = []
    for i in range(1, RANK + 1):
        step = w.mul(1 + a.x.lam[i - 1], w.x(i))
        degs.append(w.add(w.omega, step, a.twist))
        degs.append(w.add(w.sub(a.x, step), a.twist))
    return LineBundleMultiset(degs)


def projective_cover(w: Weights, a: ExtLabel) -> LineBundleMultiset:
    """``O(omega) + +_{|I|=2} O(sum_I (1+lam_i) x_i + omega - c) + O(x - c)``, twisted."""
    _check(w, a)
    omega_c = w.sub(w.omega, w.c)
    degs = [w.add(w.omega, a.twist), w.add(w.sub(a.x, w.c), a.twist)]
    for i, j in combinations(range(1, RANK + 1), 2):
        coeffs = [0, 0, 0, 0]
        coeffs[i - 1] = 1 + a.x.lam[i - 1]
        coeffs[j - 1] = 1 + a.x.lam[j - 1]
        degs.append(w.add(w.normalize(coeffs), omega_c, a.twist))
    return LineBundleMultiset(degs)


def is_auslander(w: Weights, a: ExtLabel) -> Optional[LElem]:
    """Twist ``z`` with ``a ~= E(z)`` (least such, lexicographically), or None."""
    twists = [b.twist for b in iso_images(w, a) if b.x == w.zero]
    return min(twists) if twists else None


def u_to_ext(w: Weights, ell: LElem) -> ExtLabel:
    """Label of the sheafified module ``U^ell``: ``E<s + delta - ell>(-omega)``."""
    w.check(ell)
    x = w.sub(w.add(w.s, w.delta), ell)
    if not (w.leq(w.s, ell) and w.in_delta_box(x)):
        raise DomainError(f"need s <= ell <= s + delta; got {ell}")
    return ExtLabel.make(w, x, w.neg(w.omega))


def ext_to_u(w: Weights, x: LElem) -> LElem:
    if not w.in_delta_box(x):
        raise DomainError(f"need 0 <= x <= delta; got {x}")
    return w.sub(w.add(w.s, w.delta), x)
