"""The exactly computable factors of the norm ratio and the injectivity verdict."""

from thetalift.lfunctions import norm_ratio_report
from thetalift.modforms import eigenforms

(delta,) = eigenforms(12, 10001)
for key, value in norm_ratio_report(10, 2, 6, delta, witt_r=2).render():
    print(f"{key:20s} {value}")
print()
for key, value in norm_ratio_report(1, 9, 7, None).render():
    print(f"{key:20s} {value}")
