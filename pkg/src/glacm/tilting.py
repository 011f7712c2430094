"""The algebras ``Lambda(q)`` on the vertex set ``[0, delta]``.

``Lambda(q)_{x,y} = S_{x-y}`` with ``S = R/(X_i^q_i)``. The quiver has an arrow
``v -> v + x_i`` whenever both ends lie in the box, commutativity squares, and
``x_i^q_i = 0`` wherever that path fits. ``q = p`` is the tilting 4-cuboid,
``q = (2,2,2,2)`` the algebra of the tilting object built from shifted
2-Auslander bundles.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce

import numpy as np

from .errors import DomainError
from .graded import Truncation, dim_S
from .picard import RANK, LElem, Weights

__all__ = [
    "QuiverPresentation",
    "lambda_dim",
    "quiver_presentation",
    "cartan_matrix",
    "nakayama_cartan",
    "kronecker_cartan",
    "path_count_matrix",
    "tensor_factor_check",
    "to_dot",
]


@dataclass
class QuiverPresentation:
    """Vertices, arrows ``(source index, generator)`` and explicit relation lists."""

    weights: Weights
    q: Truncation
    vertices: list[LElem]
    arrows: list[tuple[int, int]] = field(default_factory=list)
    comm_relations: list[tuple[int, int, int]] = field(default_factory=list)
    nil_relations: list[tuple[int, int]] = field(default_factory=list)

    def index(self, v: LElem) -> int:
        return self._index[v]

    def __post_init__(self):
        self._index = {v: k for k, v in enumerate(self.vertices)}

    def target(self, src: int, gen: int) -> int:
        return self._index[self.weights.add(self.vertices[src], self.weights.x(gen))]

    def to_json(self, with_cartan: bool = True) -> dict:
        out = {
            "vertices": [v.to_json() for v in self.vertices],
            "arrows": [{"from": s, "gen": g} for s, g in self.arrows],
            "comm": [{"at": v, "i": i, "j": j} for v, i, j in self.comm_relations],
            "nil": [{"at": v, "gen": g, "power": self.q.q[g - 1]} for v, g in self.nil_relations],
        }
        if with_cartan:
            out["cartan"] = cartan_matrix(self.weights, self.q).tolist()
        return out


def lambda_dim(w: Weights, x: LElem, y: LElem, q: Truncation) -> int:
    """``dim Lambda(q)_{x,y} = dim S_{x-y}``."""
    for v in (x, y):
        if not w.in_delta_box(v):
            raise DomainError(f"vertices must lie in [0, delta]; got {v}")
    return dim_S(w, w.sub(x, y), q)


def _fits(w: Weights, v: LElem, steps: list[int]) -> bool:
    lam = list(v.lam)
    for i, k in enumerate(steps):
        lam[i] += k
    return all(a <= p - 2 for a, p in zip(lam, w.p))


def quiver_presentation(w: Weights, q: Truncation) -> QuiverPresentation:
    q.validate(w)
    pres = QuiverPresentation(w, q, list(w.delta_box))
    for k, v in enumerate(pres.vertices):
        for i in range(1, RANK + 1):
            step = [0] * RANK
            step[i - 1] = 1
            if _fits(w, v, step):
                pres.arrows.append((k, i))
            for j in range(i + 1, RANK + 1):
                sq = list(step)
                sq[j - 1] = 1
                if _fits(w, v, sq):
                    pres.comm_relations.append((k, i, j))
            nil = [0] * RANK
            nil[i - 1] = q.q[i - 1]
            if _fits(w, v, nil):
                pres.nil_relations.append((k, i))
    return pres


def cartan_matrix(w: Weights, q: Truncation) -> np.ndarray:
    """Entry ``(x, y)`` is ``lambda_dim(x, y, q)`` in lexicographic vertex order."""
    q.validate(w)
    box = w.delta_box
    return np.array([[lambda_dim(w, x, y, q) for y in box] for x in box], dtype=np.int64)


def nakayama_cartan(n: int, m: int) -> np.ndarray:
    """Cartan matrix of ``kA_n / rad^m``: ``(a, b)`` is 1 iff ``0 <= a - b <= m - 1``."""
    a = np.arange(n).reshape(-1, 1)
    b = np.arange(n).reshape(1, -1)
    return ((a - b >= 0) & (a - b <= m - 1)).astype(np.int64)


def kronecker_cartan(w: Weights, q: Truncation) -> np.ndarray:
    """Kronecker product of the factor Cartan matrices, index 4 fastest."""
    factors = [nakayama_cartan(p - 1, qi) for p, qi in zip(w.p, q.q)]
    return reduce(np.kron, factors)


def path_count_matrix(pres: QuiverPresentation) -> np.ndarray:
    """Count paths modulo relations by walking the quiver.

    Paths are identified up to the commutativity relations by their exponent
    vector; a path dies once some generator is used ``q_i`` times. Entry
    ``(x, y)`` counts surviving paths from ``y`` to ``x``.
    """
    n = len(pres.vertices)
    q = pres.q.q
    out_arrows: dict[int, list[int]] = {}
    for s, g in pres.arrows:
        out_arrows.setdefault(s, []).append(g)
    mat = np.zeros((n, n), dtype=np.int64)
    for src in range(n):
        frontier = {(src, (0,) * RANK)}
        seen = set(frontier)
        while frontier:
            nxt = set()
            for v, expo in frontier:
                for g in out_arrows.get(v, ()):
                    e = list(expo)
                    e[g - 1] += 1
                    if e[g - 1] >= q[g - 1]:
                        continue
                    state = (pres.target(v, g), tuple(e))
                    if state not in seen:
                        seen.add(state)
                        nxt.add(state)
            frontier = nxt
        for v, _ in seen:
            mat[v, src] += 1
    return mat


def tensor_factor_check(w: Weights, q: Truncation, cartan: np.ndarray | None = None) -> bool:
    """Cartan matrix equals both the Kronecker product and the quiver path count."""
    cartan = cartan_matrix(w, q) if cartan is None else np.asarray(cartan)
    if not np.array_equal(cartan, kronecker_cartan(w, q)):
        return False
    return bool(np.array_equal(cartan, path_count_matrix(quiver_presentation(w, q))))


def to_dot(pres: QuiverPresentation) -> str:
    """Graphviz digraph; relations are listed as comments."""
    label = lambda k: ".".join(map(str, pres.vertices[k].lam))  # noqa: E731
    lines = [f"digraph Lambda {{", f"  // weights {pres.weights} q {','.join(map(str, pres.q.q))}"]
    for k in range(len(pres.vertices)):
        lines.append(f'  v{k} [label="{label(k)}"];')
    for s, g in pres.arrows:
        lines.append(f'  v{s} -> v{pres.target(s, g)} [label="x{g}"];')
    for v, i, j in pres.comm_relations:
        lines.append(f"  // comm at {label(v)}: x{i} x{j} = x{j} x{i}")
    for v, g in pres.nil_relations:
        lines.append(f"  // nil at {label(v)}: x{g}^{pres.q.q[g - 1]} = 0")
    lines.append("}")
    return "\n".join(lines) + "\n"
