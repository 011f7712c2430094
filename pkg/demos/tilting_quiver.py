"""Endomorphism algebras Lambda(q) of the two tilting objects."""
import sys

import numpy as np

from glacm import Weights
from glacm.graded import Truncation
from glacm.stablehom import hom_rig, rigidity_check
from glacm.tilting import cartan_matrix, kronecker_cartan, quiver_presentation, tensor_factor_check, to_dot

w = Weights((2, 2, 3, 4))

# T = sum E(x)[-sigma(x)] is rigid: all Homs to nonzero shifts vanish
print("rigid:", rigidity_check(w), " (closed form and cover engine:", rigidity_check(w, engine="cover"), ")")
x, y = w.add(w.x(3), w.x(4)), w.x(4)
print("Hom(E(x), E(y)[1]) for x-y = x3:", hom_rig(w, x, y, 1))

for q in (Truncation.two(), Truncation.full(w)):
    m = cartan_matrix(w, q)
    print(f"\nq = {q.q}: {m.shape[0]} vertices, total dim {m.sum()}")
    print(m)
    print("equals Kronecker product of Nakayama factors:", np.array_equal(m, kronecker_cartan(w, q)))
    print("path count agrees:", tensor_factor_check(w, q, m))

# Graphviz output; pipe into `dot -Tpng` to draw it
sys.stdout.write("\n" + to_dot(quiver_presentation(w, Truncation.two())))
