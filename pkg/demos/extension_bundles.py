"""2-extension bundles E<x>(z): classes, suspension, iso classes, hulls and covers."""
from glacm import Weights
from glacm.extbundle import (
    ExtLabel,
    canonical_form,
    class_of_ext,
    injective_hull,
    is_auslander,
    iso_images,
    projective_cover,
    suspend,
)
from glacm.k0 import classes_equal, euler_pairing, gram_determinant

w = Weights((3, 4, 5, 6))
a = ExtLabel.make(w, w.x(2))
xi = class_of_ext(w, a)
print("label", a)
print("K0 class:", {str(d): n for d, n in sorted(xi.coeffs.items())})
print("rank", xi.rank, " chi(E,E) =", euler_pairing(w, xi, xi))
print("Gram det on [0, 2c]:", gram_determinant(w), f"({len(w.k0_basis)} basis degrees)")

# suspension: [1] is a reflection plus a twist, [2] is the twist by c
for n in range(5):
    print(f"E[{n}] =", suspend(w, a, n))

# the flip rule E<x> = E<delta-x>(x-omega-c), twisted by 2c
rhs = ExtLabel.make(w, w.sub(w.delta, a.x), w.add(w.sub(a.x, w.omega), w.c))
print("E<x2>(2c) ~ E<delta-x2>(x2-omega+c):",
      classes_equal(w, class_of_ext(w, a.twisted(w, w.mul(2, w.c))), class_of_ext(w, rhs)))

# eight labels name the same bundle; the least one is the canonical form
for b in iso_images(w, a):
    print("  ~", b)
print("canonical:", canonical_form(w, a))

# hull and cover are complete invariants
print("hull :", [str(d) for d in injective_hull(w, a)])
print("cover:", [str(d) for d in projective_cover(w, a)])

# 2-Auslander bundles sit at the corners sum_{i in I} (p_i - 2) x_i, I even
corner = w.add(w.mul(1, w.x(1)), w.mul(2, w.x(2)))
print("is", corner, "Auslander? twist =", is_auslander(w, ExtLabel.make(w, corner)))
