"""Arithmetic in the Picard group ``L = <x1..x4, c | p_i x_i = c>``.

Every element has a unique normal form ``sum(lam_i * x_i) + ell * c`` with
``0 <= lam_i < p_i``. Elements are stored in that form as plain :class:`LElem`
values; the :class:`Weights` object is the context that knows the relations.

>>> w = Weights((3, 3, 3, 3))
>>> w.omega
LElem(lam=(2, 2, 2, 2), ell=-3)
>>> w.leq(w.zero, w.c)
True
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import ContextError, DomainError

__all__ = ["LElem", "Weights", "RANK"]

RANK = 4


@dataclass(frozen=True, order=True)
class LElem:
    """An element of L in normal form.

    Ordering is lexicographic on ``(lam_1, .., lam_4, ell)``; this order fixes
    all enumeration and tie-breaking in the package.
    """

    lam: tuple[int, int, int, int]
    ell: int

    def to_json(self) -> dict:
        return {"lambda": list(self.lam), "ell": self.ell}

    @classmethod
    def from_json(cls, obj: dict) -> "LElem":
        lam = tuple(int(v) for v in obj["lambda"])
        if len(lam) != RANK:
            raise ValueError(f"lambda must have {RANK} entries, got {len(lam)}")
        return cls(lam, int(obj["ell"]))  # type: ignore[arg-type]

    def __str__(self) -> str:
        return f"{'.'.join(map(str, self.lam))}|{self.ell}"


@dataclass(frozen=True)
class Weights:
    """A weight quadruple ``(p1, .., p4)`` with every ``p_i >= 2``.

    Acts as the arithmetic context for :class:`LElem` values.
    """

    p: tuple[int, int, int, int]

    def __post_init__(self):
        p = tuple(int(v) for v in self.p)
        if len(p) != RANK:
            raise DomainError(f"need {RANK} weights, got {len(p)}")
        if any(v < 2 for v in p):
            raise DomainError(f"weights must be >= 2, got {p}")
        object.__setattr__(self, "p", p)

    @classmethod
    def parse(cls, text: str) -> "Weights":
        """Parse ``"p1,p2,p3,p4"``."""
        try:
            values = tuple(int(t) for t in text.split(","))
        except ValueError as exc:
            raise DomainError(f"malformed weights {text!r}") from exc
        return cls(values)  # type: ignore[arg-type]

    def __str__(self) -> str:
        return ",".join(map(str, self.p))

    # -- construction -------------------------------------------------------

    def normalize(self, raw_lam: Sequence[int], raw_ell: int = 0) -> LElem:
        """Reduce ``sum(raw_lam_i x_i) + raw_ell c`` to normal form."""
        if len(raw_lam) != RANK:
            raise ValueError(f"need {RANK} coefficients, got {len(raw_lam)}")
        lam = []
        ell = int(raw_ell)
        for a, p in zip(raw_lam, self.p):
            q, r = divmod(int(a), p)
            lam.append(r)
            ell += q
        return LElem(tuple(lam), ell)  # type: ignore[arg-type]

    def elem(self, *lam: int, ell: int = 0) -> LElem:
        """Shorthand: ``w.elem(1, 0, 0, 0, ell=-1)``."""
        return self.normalize(lam, ell)

    def x(self, i: int) -> LElem:
        """The generator ``x_i`` (1-based index)."""
        if not 1 <= i <= RANK:
            raise DomainError(f"generator index must be in 1..{RANK}, got {i}")
        lam = [0] * RANK
        lam[i - 1] = 1
        return self.normalize(lam, 0)

    @cached_property
    def zero(self) -> LElem:
        return LElem((0, 0, 0, 0), 0)

    @cached_property
    def c(self) -> LElem:
        return LElem((0, 0, 0, 0), 1)

    @cached_property
    def s(self) -> LElem:
        """``x1 + x2 + x3 + x4``."""
        return self.normalize((1, 1, 1, 1), 0)

    @cached_property
    def omega(self) -> LElem:
        """Dualizing element ``c - sum x_i``."""
        return self.normalize((-1, -1, -1, -1), 1)

    @cached_property
    def delta(self) -> LElem:
        """Dominant element ``2c + 2 omega = sum (p_i - 2) x_i``."""
        return self.add(self.mul(2, self.c), self.mul(2, self.omega))

    def distinguished(self) -> dict[str, LElem]:
        return {"c": self.c, "omega": self.omega, "delta": self.delta, "s": self.s}

    # -- group law ----------------------------------------------------------

    def check(self, *elems: LElem) -> None:
        """Raise :class:`ContextError` unless every element is normal for these weights."""
        p0, p1, p2, p3 = self.p
        for a in elems:
            if not isinstance(a, LElem):
                raise ContextError(f"expected LElem, got {type(a).__name__}")
            l0, l1, l2, l3 = a.lam
            if not (0 <= l0 < p0 and 0 <= l1 < p1 and 0 <= l2 < p2 and 0 <= l3 < p3):
                raise ContextError(f"{a} is not a normal form for weights {self.p}")

    def add(self, *elems: LElem) -> LElem:
        self.check(*elems)
        if len(elems) == 2:
            (a, b), p = elems, self.p
            lam, ell = [], a.ell + b.ell
            for u, v, pi in zip(a.lam, b.lam, p):
                t = u + v
                if t >= pi:  # both summands are reduced, so one carry at most
                    t -= pi
                    ell += 1
                lam.append(t)
            return LElem(tuple(lam), ell)  # type: ignore[arg-type]
        lam = [sum(a.lam[i] for a in elems) for i in range(RANK)]
        return self.normalize(lam, sum(a.ell for a in elems))

    def neg(self, a: LElem) -> LElem:
        self.check(a)
        return self.normalize([-v for v in a.lam], -a.ell)

    def sub(self, a: LElem, b: LElem) -> LElem:
        self.check(a, b)
        return self.normalize([u - v for u, v in zip(a.lam, b.lam)], a.ell - b.ell)

    def mul(self, k: int, a: LElem) -> LElem:
        self.check(a)
        return self.normalize([k * v for v in a.lam], k * a.ell)

    def combo(self, coeffs: Sequence[int], ell: int = 0) -> LElem:
        """``sum coeffs_i x_i + ell c``; alias of :meth:`normalize`."""
        return self.normalize(coeffs, ell)

    # -- order --------------------------------------------------------------

    def is_effective(self, a: LElem) -> bool:
        """``a >= 0``; true iff the normal form has ``ell >= 0``."""
        self.check(a)
        return a.ell >= 0

    def leq(self, a: LElem, b: LElem) -> bool:
        return self.sub(b, a).ell >= 0

    def in_delta_box(self, a: LElem) -> bool:
        """``0 <= a <= delta``, i.e. ``ell == 0`` and ``lam_i <= p_i - 2``."""
        self.check(a)
        return a.ell == 0 and all(v <= p - 2 for v, p in zip(a.lam, self.p))

    def sigma(self, a: LElem) -> int:
        """Sum of the normal-form coefficients of ``a`` in ``[0, delta]``."""
        if not self.in_delta_box(a):
            raise DomainError(f"sigma is defined on [0, delta]; got {a}")
        return sum(a.lam)

    # -- enumeration --------------------------------------------------------

    def box(self, lo: LElem, hi: LElem) -> list[LElem]:
        """All ``x`` with ``lo <= x <= hi``, sorted lexicographically.

        Writes ``x = lo + d``; ``d = (mu, m)`` needs ``m >= 0`` and
        ``ell(hi - lo - d) = n - m - #{i : mu_i > nu_i} >= 0`` where
        ``hi - lo = (nu, n)``.
        """
        self.check(lo, hi)
        gap = self.sub(hi, lo)
        out = []
        for mu in itertools.product(*(range(p) for p in self.p)):
            borrows = sum(1 for m_i, n_i in zip(mu, gap.lam) if m_i > n_i)
            for m in range(0, gap.ell - borrows + 1):
                out.append(self.add(lo, LElem(mu, m)))  # type: ignore[arg-type]
        out.sort()
        return out

    @cached_property
    def delta_box(self) -> tuple[LElem, ...]:
        """``[0, delta]`` in lexicographic order (``prod(p_i - 1)`` elements)."""
        return tuple(
            LElem(lam, 0)  # type: ignore[arg-type]
            for lam in itertools.product(*(range(p - 1) for p in self.p))
        )

    @cached_property
    def k0_basis(self) -> tuple[LElem, ...]:
        """``[0, 2c]``, the degrees of the canonical K0 basis."""
        return tuple(self.box(self.zero, self.mul(2, self.c)))

    def iter_window(self, lo_c: int, hi_c: int) -> Iterable[LElem]:
        """``[lo_c * c, hi_c * c]``."""
        return self.box(LElem((0, 0, 0, 0), lo_c), LElem((0, 0, 0, 0), hi_c))
