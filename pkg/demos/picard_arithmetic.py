"""Walk through the Picard group L for p = (2, 3, 4, 5)."""
from glacm import Weights
from glacm.graded import dim_R, line_ext_dims

w = Weights((2, 3, 4, 5))

# every element has a unique normal form sum(lam_i x_i) + ell c with 0 <= lam_i < p_i
print("x1 + x1      =", w.add(w.x(1), w.x(1)))          # p_1 x_1 = c
print("x2 - x1      =", w.sub(w.x(2), w.x(1)))
for name, a in w.distinguished().items():
    print(f"{name:<12} =", a)

# a >= 0 exactly when ell >= 0, so omega is not effective but c is
print("0 <= c ?", w.leq(w.zero, w.c), "  0 <= omega ?", w.leq(w.zero, w.omega))

# the box [0, delta] indexes the 2-extension bundles
box = w.delta_box
print(len(box), "elements in [0, delta]; first few:", [str(a) for a in box[:4]])
print("sigma(delta) =", w.sigma(w.delta))

# graded pieces of R = k[X1..X4]/(sum X_i^p_i) grow like C(ell + 2, 2)
for k in range(4):
    print(f"dim R_{k}c =", dim_R(w, w.mul(k, w.c)))

# Hom, Ext^1, Ext^2 between line bundles
print("Ext*(O, O(c))     =", line_ext_dims(w, w.zero, w.c))
print("Ext*(O, O(omega)) =", line_ext_dims(w, w.zero, w.omega))
