"""The product expansion for U+U with input J reproduces j(tau_1) - j(tau_2)."""

from thetalift.borcherds import borcherds_product_expansion, borcherds_weight, j_difference, named_form, split_UU

split = split_UU()
J = named_form("J", 40)
datum = borcherds_product_expansion(split, J, (-1, 0), 6)
print("weight:", borcherds_weight(J), " divisor:", datum.divisor)
print("first factors (lambda, exponent):", datum.factors[:6])
for key, c in sorted(datum.expansion.coeffs.items()):
    print(f"  q1^{key[0]} q2^{key[1]}: {c}")
print("equals j(tau1) - j(tau2):", datum.expansion == j_difference(6))
print("E4^2/Delta gives weight", borcherds_weight(named_form("E4^2/Delta", 3)))
