"""Discriminant forms of a few even lattices, and the Witt index search."""

from thetalift.lattice import named_lattice, witt_index_bounded

for name in ["A2", "diag(2,-2)", "A2+U", "UU", "E8+U"]:
    L = named_lattice(name)
    A = L.discriminant_form
    p, q = L.signature
    print(f"{name}: signature ({p},{q}), |L'/L| = {A.order}, level {A.level}, Witt index {witt_index_bounded(L)}")
    for h in A.labels:
        print(f"    {h}  rep {[str(x) for x in A.representative(h)]}  q = {A.q(h)}")

# diag(2,-6) is anisotropic: x^2 = 3 y^2 has no rational solution
print("diag(2,-6) Witt index:", witt_index_bounded(named_lattice("diag(2,-6)")))
