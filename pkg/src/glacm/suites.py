"""Named verification suites.

Each check returns a :class:`Check`; a suite collects them into a
:class:`SuiteResult`. The same check functions back the ``verify`` CLI
subcommand and the acceptance tests.
"""
from __future__ import annotations

import itertools
import random
import time
from collections import defaultdict
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np

from .errors import DomainError
from .extbundle import (
    ExtLabel,
    canonical_form,
    class_of_ext,
    dualize,
    ext_to_u,
    injective_hull,
    iso_equivalent,
    iso_images,
    projective_cover,
    suspend,
    suspend_via,
    u_to_ext,
)
from .graded import Truncation, dim_R, line_ext_dims, monomial_degree_counts
from .k0 import K0Class, classes_equal, euler_pairing, gram_determinant, verify_koszul, verify_triangle_class
from .orbits import burnside_count, fixed_count
from .picard import LElem, Weights
from .stablehom import StableObj, hom_from_auslander, hom_rig, rigidity_check
from .tilting import cartan_matrix, kronecker_cartan, quiver_presentation, tensor_factor_check

__all__ = ["Check", "SuiteResult", "SUITES", "run_suite"]


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    @property
    def status(self) -> str:
        return "pass" if self.ok else "fail"

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass
class SuiteResult:
    suite: str
    weights: str
    checks: list[Check] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "weights": self.weights,
            "ok": self.ok,
            "checks": [c.to_json() for c in self.checks],
            "elapsed_ms": self.elapsed_ms,
        }


def _first_failure(items, pred, fmt=str):
    for item in items:
        if not pred(item):
            return fmt(item)
    return None


def _check(name: str, failure) -> Check:
    return Check(name, failure is None, "" if failure is None else f"counterexample: {failure}")


# -- picard --------------------------------------------------------------------


def picard_checks(w: Weights) -> list[Check]:
    window = w.iter_window(-2, 3)
    checks = [
        _check("round-trip", _first_failure(
            window,
            lambda a: w.normalize([a.lam[0] + 3 * w.p[0], *a.lam[1:]], a.ell - 3) == a,
        )),
        _check("dichotomy", _first_failure(
            window,
            lambda a: w.leq(w.zero, a) or w.leq(a, w.add(w.mul(2, w.c), w.omega)),
        )),
        _check("delta-box", _first_failure(
            window,
            lambda a: (w.leq(w.zero, a) and w.leq(a, w.delta))
            == (a.ell == 0 and all(v <= p - 2 for v, p in zip(a.lam, w.p))),
        )),
        _check("delta-identity", None if w.add(w.mul(2, w.c), w.mul(2, w.omega)) == w.delta else w.delta),
        _check("box-count", None if len(w.delta_box) == np.prod([p - 1 for p in w.p]) else len(w.delta_box)),
    ]
    rng = random.Random(0)
    sample = rng.sample(window, min(len(window), 40))
    trans = _first_failure(
        itertools.product(sample, repeat=3),
        lambda t: not (w.leq(t[0], t[1]) and w.leq(t[1], t[2])) or w.leq(t[0], t[2]),
    )
    shift = _first_failure(
        itertools.product(sample[:15], repeat=3),
        lambda t: not w.leq(t[0], t[1]) or w.leq(w.add(t[0], t[2]), w.add(t[1], t[2])),
    )
    checks += [_check("order-transitive", trans), _check("order-translation", shift)]
    return checks


# -- graded --------------------------------------------------------------------


def graded_oracle_check(w: Weights, lo_c: int = -2, hi_c: int = 3) -> Check:
    counts = monomial_degree_counts(w, hi_c)
    window = w.iter_window(lo_c, hi_c)
    failure = _first_failure(window, lambda a: dim_R(w, a) == counts[a])
    return _check(f"dim_R-closed-form-vs-monomials[{lo_c}c,{hi_c}c]", failure)


def graded_checks(w: Weights) -> list[Check]:
    window = w.iter_window(-1, 2)
    serre = _first_failure(
        itertools.product(window[:60], window[-60:]),
        lambda t: line_ext_dims(w, *t)[2] == line_ext_dims(w, t[1], w.add(t[0], w.omega))[0],
    )
    return [graded_oracle_check(w), _check("serre-symmetry", serre)]


# -- k0 ------------------------------------------------------------------------


def gram_check(w: Weights) -> Check:
    det = gram_determinant(w)
    return Check("gram-unimodular", abs(det) == 1, f"det={det} size={len(w.k0_basis)}")


def exceptional_checks(w: Weights, n_twists: int = 10, seed: int = 0) -> list[Check]:
    rng = random.Random(seed)
    window = w.iter_window(-2, 2)
    twists = [w.zero] + rng.sample(window, min(n_twists, len(window)))
    self_pair = _first_failure(
        ((x, z) for x in w.delta_box for z in twists),
        lambda t: euler_pairing(w, c := class_of_ext(w, ExtLabel.make(w, *t)), c) == 1,
    )

    def vanish(x):
        e = class_of_ext(w, ExtLabel.make(w, x))
        below = w.box(w.zero, x)
        return all(euler_pairing(w, K0Class.line(y), e) == 0 for y in below)

    rank = _first_failure(w.delta_box, lambda x: class_of_ext(w, ExtLabel.make(w, x)).rank == 4)
    return [
        _check("chi(E,E)=1", self_pair),
        _check("chi(O(y),E<x>)=0 for y<=x", _first_failure(w.delta_box, vanish)),
        _check("rank=4", rank),
    ]


def triangle_koszul_checks(w: Weights) -> list[Check]:
    admissible = [
        (x, i)
        for x in w.delta_box
        for i in range(1, 5)
        if w.in_delta_box(w.add(x, w.x(i)))
    ]
    tri = _first_failure(admissible, lambda t: verify_triangle_class(w, *t))
    bases = [w.zero, w.omega, w.c, w.delta, w.neg(w.s)]
    subsets = list(itertools.combinations(range(1, 5), 3))
    kos = _first_failure(
        itertools.product(bases, subsets, itertools.product((1, 2), repeat=3)),
        lambda t: verify_koszul(w, *t),
    )
    return [
        Check("triangle-class", tri is None, f"{len(admissible)} cases" if tri is None else f"counterexample: {tri}"),
        _check("koszul-vanishing", kos),
    ]


# -- extension bundles --------------------------------------------------------


def suspension_checks(w: Weights) -> list[Check]:
    labels = [ExtLabel.make(w, x) for x in w.delta_box]
    indep = _first_failure(
        itertools.product(labels, range(1, 5), range(1, 5)),
        lambda t: iso_equivalent(w, suspend_via(w, t[0], t[1]), suspend_via(w, t[0], t[2])),
    )
    two = _first_failure(
        itertools.product(labels, range(1, 5)),
        lambda t: iso_equivalent(
            w, suspend_via(w, suspend_via(w, t[0], t[1]), t[1]), t[0].twisted(w, w.c)
        ),
    )
    two_label = _first_failure(labels, lambda a: suspend(w, suspend(w, a, 1), 1) == a.twisted(w, w.c))
    four = _first_failure(labels, lambda a: iso_equivalent(w, suspend(w, a, 4), a.twisted(w, w.mul(2, w.c))))
    inverse = _first_failure(labels, lambda a: iso_equivalent(w, suspend(w, suspend(w, a, 1), -1), a))
    flip = _first_failure(
        labels,
        lambda a: iso_equivalent(
            w, a, ExtLabel.make(w, w.sub(w.delta, a.x), w.sub(w.sub(a.x, w.omega), w.c))
        ),
    )
    k0 = _first_failure(
        labels[:: max(1, len(labels) // 12)],
        lambda a: all(classes_equal(w, class_of_ext(w, a), class_of_ext(w, b)) for b in iso_images(w, a)),
    )
    dual = _first_failure(labels, lambda a: dualize(w, dualize(w, a)) == a)
    return [
        _check("[1]-index-independent", indep),
        _check("[1][1]=(c) per index", two),
        _check("[2]=(c) on labels", two_label),
        _check("[4]=(2c)", four),
        _check("[1][-1]=id", inverse),
        _check("E<x>=E<delta-x>(x-omega-c)", flip),
        _check("iso=>equal K0 class", k0),
        _check("dual-involution", dual),
    ]


def correspondence_check(w: Weights) -> Check:
    lo, hi = w.s, w.add(w.s, w.delta)
    us = w.box(lo, hi)
    fwd = [u_to_ext(w, u).x for u in us]
    ok = (
        sorted(fwd) == list(w.delta_box)
        and all(ext_to_u(w, u_to_ext(w, u).x) == u for u in us)
        and all(u_to_ext(w, ext_to_u(w, x)).x == x for x in w.delta_box)
    )
    return Check("U-correspondence-bijection", ok, f"{len(us)} elements")


def hull_cover_equivalence(w: Weights) -> Check:
    """iso <=> hull equal <=> cover equal <=> canonical equal, twists in ``[-c, c]``.

    Compares the partition of the window induced by each key with the
    iso relation, which is equivalent to the all-pairs statement.
    """
    twists = w.box(w.neg(w.c), w.c)
    labels = [ExtLabel(x, z) for x in w.delta_box for z in twists]
    label_set = set(labels)
    keys = {
        "hull": lambda a: injective_hull(w, a),
        "cover": lambda a: projective_cover(w, a),
        "canon": lambda a: canonical_form(w, a),
    }
    groups = {name: defaultdict(set) for name in keys}
    key_of = {name: {} for name in keys}
    for a in labels:
        for name, fn in keys.items():
            k = fn(a)
            key_of[name][a] = k
            groups[name][k].add(a)
    for a in labels:
        iso_class = set(iso_images(w, a)) & label_set
        for name in keys:
            if groups[name][key_of[name][a]] != iso_class:
                return Check("iso<=>hull<=>cover<=>canon", False, f"{name} differs at {a}")
    return Check("iso<=>hull<=>cover<=>canon", True, f"{len(labels)} labels")


def _encode(w: Weights, lam: np.ndarray, ell: np.ndarray, offset: int = 1 << 20) -> np.ndarray:
    """Order-preserving int64 code of normal forms ``(lam, ell)``."""
    code = np.zeros(ell.shape, dtype=np.int64)
    for i, p in enumerate(w.p):
        code = code * p + lam[..., i]
    return code * (2 * offset) + (ell + offset)


def _as_arrays(elems) -> tuple[np.ndarray, np.ndarray]:
    lam = np.array([[list(a.lam) for a in row] for row in elems], dtype=np.int64)
    ell = np.array([[a.ell for a in row] for row in elems], dtype=np.int64)
    return lam, ell


def _shift(w: Weights, base, twists) -> np.ndarray:
    """Codes of ``d + z`` for every base row, every twist ``z`` and every degree ``d`` in the row.

    Shape ``(len(base), len(twists), row length)``; additions carry as in ``Weights.add``.
    """
    b_lam, b_ell = _as_arrays(base)
    t_lam, t_ell = _as_arrays([twists])
    p = np.array(w.p, dtype=np.int64)
    lam = b_lam[:, None, :, :] + t_lam[0][None, :, None, :]
    carry = lam >= p
    lam = lam - carry * p
    ell = b_ell[:, None, :] + t_ell[0][None, :, None] + carry.sum(axis=-1)
    return _encode(w, lam, ell)


def hull_cover_equivalence_fast(w: Weights, samples: int = 200, seed: int = 0) -> Check:
    """Vectorized form of :func:`hull_cover_equivalence`.

    Hulls, covers and the eight iso images are taken from the library at
    twist 0 and shifted to every twist in ``[-c, c]`` with numpy; this uses
    twist-equivariance of all three, which holds by construction and is
    tested separately. Partitions are compared through group ids: the keys
    induce the iso partition on the window iff the (key, iso-class) pairs
    form a bijection.
    """
    box = w.delta_box
    twists = w.box(w.neg(w.c), w.c)
    zero_labels = [ExtLabel(x, w.zero) for x in box]
    n, m = len(box), len(twists)
    x_index = {x: k for k, x in enumerate(box)}

    images = [iso_images(w, a) for a in zero_labels]
    img_codes = _shift(w, [[b.twist for b in row] for row in images], twists)
    stride = int(np.prod(w.p)) * (2 << 20)
    y_idx = np.array([[x_index[b.x] for b in row] for row in images], dtype=np.int64)
    iso_id = (img_codes + y_idx[:, None, :] * stride).min(axis=-1).ravel()
    n_iso = len(np.unique(iso_id))

    for name, fn in (("hull", injective_hull), ("cover", projective_cover)):
        codes = np.sort(_shift(w, [list(fn(w, a)) for a in zero_labels], twists), axis=-1).reshape(n * m, -1)
        _, key_id = np.unique(codes, axis=0, return_inverse=True)
        key_id = key_id.ravel()
        pairs = len(np.unique(np.stack([key_id, iso_id]), axis=1).T)
        if not pairs == n_iso == len(np.unique(key_id)):
            return Check("iso<=>hull<=>cover<=>canon", False, f"{name} partition differs from iso classes")

    # canonical_form is the least image; its code must equal the iso id
    rng = random.Random(seed)
    picks = [(k, j) for k in range(n) for j in range(m)]
    picks = rng.sample(picks, min(samples, len(picks))) + [(k, twists.index(w.zero)) for k in range(n)]
    for k, j in picks:
        canon = canonical_form(w, ExtLabel(box[k], twists[j]))
        lam = np.array([canon.twist.lam], dtype=np.int64)
        code = int(_encode(w, lam, np.array([canon.twist.ell]))[0]) + x_index[canon.x] * stride
        if code != iso_id[k * m + j]:
            return Check("iso<=>hull<=>cover<=>canon", False, f"canonical form differs at {box[k]}, {twists[j]}")
    return Check("iso<=>hull<=>cover<=>canon", True, f"{n * m} labels")


def hom_orthogonality(w: Weights) -> Check:
    def identity(degs):
        mat = [[line_ext_dims(w, a, b)[0] for b in degs] for a in degs]
        return mat == np.eye(len(degs), dtype=int).tolist()

    failure = None
    for x in w.delta_box:
        a = ExtLabel.make(w, x)
        if not identity(list(injective_hull(w, a))):
            failure = f"hull of {a}"
            break
        if not identity(list(projective_cover(w, a))):
            failure = f"cover of {a}"
            break
    return _check("hom-orthogonal hull/cover", failure)


def cover_is_shifted_hull(w: Weights) -> Check:
    labels = [ExtLabel.make(w, x, z) for x in w.delta_box for z in (w.zero, w.x(1), w.omega)]
    return _check(
        "P(a)=I(a[-1])",
        _first_failure(labels, lambda a: projective_cover(w, a) == injective_hull(w, suspend(w, a, -1))),
    )


# -- stable homs / tilting -----------------------------------------------------


def homrig_crosscheck(w: Weights) -> Check:
    bound = w.sigma(w.delta) + 4
    box = w.delta_box
    cases = itertools.product(box, box, range(-bound, bound + 1))
    failure = _first_failure(
        cases,
        lambda t: hom_rig(w, *t)
        == hom_from_auslander(w, t[0], StableObj(ExtLabel.make(w, w.zero, t[1]), t[2])),
    )
    return _check("hom_rig==cover-engine", failure)


def rigidity_checks(w: Weights) -> list[Check]:
    return [
        Check("rigid(closed)", rigidity_check(w, engine="closed")),
        Check("rigid(cover)", rigidity_check(w, engine="cover")),
    ]


def quiver_checks(w: Weights) -> list[Check]:
    out = []
    for q in (Truncation.two(), Truncation.full(w)):
        tag = ",".join(map(str, q.q))
        cartan = cartan_matrix(w, q)
        out.append(Check(f"tensor-factor q={tag}", tensor_factor_check(w, q, cartan), f"dim={int(cartan.sum())}"))
        det = int(round(np.linalg.det(cartan))) if len(cartan) else 1
        out.append(Check(f"cartan-unimodular q={tag}", abs(det) == 1, f"det={det}"))
        pres = quiver_presentation(w, q)
        expect = sum(
            (w.p[i] - 2) * int(np.prod([w.p[j] - 1 for j in range(4) if j != i])) for i in range(4)
        )
        out.append(Check(f"arrow-count q={tag}", len(pres.arrows) == expect, f"{len(pres.arrows)} arrows"))
        sig = all(
            w.sigma(pres.vertices[pres.target(s, g)]) == w.sigma(pres.vertices[s]) + 1
            for s, g in pres.arrows
        )
        out.append(Check(f"arrows-raise-sigma q={tag}", sig))
    return out


# -- orbits --------------------------------------------------------------------


def orbit_sweep(bound: int) -> list[Check]:
    bad_formula, bad_trans, bad_fixed, n = [], [], [], 0
    transitive: set = set()
    for p in itertools.product(range(2, bound + 1), repeat=4):
        n += 1
        rep = burnside_count(Weights(p))
        if not rep.burnside == rep.closed_formula == rep.orbit_count:
            bad_formula.append(p)
        if rep.orbit_count == 1:
            transitive.add(tuple(sorted(p)))
            if rep.burnside != 1:
                bad_trans.append(p)
    for p in itertools.product(range(2, min(bound, 5) + 1), repeat=4):
        for I, cnt in burnside_count(Weights(p), with_orbits=False).fixed_counts.items():
            predicted = (
                int(np.prod([p[i - 1] - 1 for i in range(1, 5) if i not in I]))
                if all(p[i - 1] % 2 == 0 for i in I)
                else 0
            )
            if cnt != predicted or cnt != fixed_count(p, I):
                bad_fixed.append((p, I))
    return [
        Check("burnside==closed-formula==orbits", not bad_formula, f"{n} tuples; bad={bad_formula[:3]}"),
        Check("transitive<=>count-1", not bad_trans, f"transitive up to order: {sorted(transitive)}"),
        Check("fixed-point-structure", not bad_fixed, f"bad={bad_fixed[:3]}"),
    ]


def orbit_iso_agreement(w: Weights) -> Check:
    rep = burnside_count(w)
    where = {x: k for k, orb in enumerate(rep.orbits) for x in orb}
    images = {x: {b.x for b in iso_images(w, ExtLabel.make(w, x))} for x in w.delta_box}
    failure = _first_failure(
        itertools.product(w.delta_box, repeat=2),
        lambda t: (where[t[0]] == where[t[1]]) == (t[1] in images[t[0]]),
    )
    return _check("orbits==iso-classes-mod-twist", failure)


# -- registry ------------------------------------------------------------------

SuiteFn = Callable[[Weights], list[Check]]

SUITES: dict[str, SuiteFn] = {
    "picard": picard_checks,
    "graded-oracle": graded_checks,
    "k0-gram": lambda w: [gram_check(w)] + exceptional_checks(w) + triangle_koszul_checks(w),
    "extbundle-iso": lambda w: suspension_checks(w) + [correspondence_check(w)],
    "hulls-covers": lambda w: [
        hull_cover_equivalence(w),
        hull_cover_equivalence_fast(w),
        hom_orthogonality(w),
        cover_is_shifted_hull(w),
    ],
    "homrig-crosscheck": lambda w: [homrig_crosscheck(w)],
    "rigidity": rigidity_checks,
    "quiver-cartan": quiver_checks,
    "orbit-sweep": lambda w: [orbit_iso_agreement(w)],
}


def run_suite(name: str, weights: Weights | None = None, bound: int | None = None) -> SuiteResult:
    """Run a named suite. ``orbit-sweep`` sweeps ``2 <= p_i <= bound`` when a bound is given."""
    if name not in SUITES and name != "all":
        raise DomainError(f"unknown suite {name!r}; choose from {sorted(SUITES) + ['all']}")
    start = time.perf_counter()
    result = SuiteResult(name, "" if weights is None else str(weights))
    names = list(SUITES) if name == "all" else [name]
    for n in names:
        if n == "orbit-sweep" and bound is not None:
            result.checks += orbit_sweep(bound)
        if weights is not None:
            result.checks += [
                Check(f"{n}:{c.name}" if name == "all" else c.name, c.ok, c.detail) for c in SUITES[n](weights)
            ]
    if not result.checks:
        raise DomainError("suite needs --weights (or --sweep for orbit-sweep)")
    result.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return result
