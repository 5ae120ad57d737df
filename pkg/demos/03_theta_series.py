"""Theta series: E8 against E4, and the Siegel theta of an indefinite lattice."""

import mpmath

from thetalift.lattice import NegativePlane, named_lattice
from thetalift.modforms import eisenstein
from thetalift.thetaseries import check_modularity, theta_definite

th = theta_definite(named_lattice("E8"), 8)[()]
e4 = eisenstein(4, 8)
print("theta_E8:", [th[n] for n in range(8)])
print("E4      :", [e4[n] for n in range(8)])

L = named_lattice("diag(2,-2)")
z = NegativePlane(L, [[1, 2]])  # spanned by a negative vector of norm -6
for tau in [mpmath.mpc(0.1, 1.1), mpmath.mpc(-0.3, 0.8)]:
    r = check_modularity(L, z, "S", tau)
    print(f"tau = {tau}: |Theta(-1/tau) - tau^0 rho(S) Theta(tau)| = {mpmath.nstr(r.value, 3)} (bound {mpmath.nstr(r.error, 3)})")
