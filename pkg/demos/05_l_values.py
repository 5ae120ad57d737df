"""D_Delta(5) two ways: Euler product and Rankin series, with rigorous bounds."""

import mpmath

from thetalift.lfunctions import standard_L_euler, standard_L_rankin, zeta_value
from thetalift.modforms import eigenforms

(delta,) = eigenforms(12, 90001)
with mpmath.workprec(160):
    for v in (
        standard_L_euler(delta, 5, 10 ** 4),
        standard_L_rankin(delta, 5, 300, "c(n^2)"),
        standard_L_rankin(delta, 5, 300, "c(n)^2"),
    ):
        print(f"{v.method:15s} {mpmath.nstr(v.value, 20)}  +- {mpmath.nstr(v.bound, 3)}")
    exact, num = zeta_value(6)
    print("zeta(6) =", exact, "=", mpmath.nstr(num.value, 20))
