#!/usr/bin/env python3
"""Build the rank-5 SU(2)_9/Z_2 datum and run every admissibility check:
the seven conditions, Verlinde fusion, balancing, twists, FS indicators."""

from moddata import (
    check_admissible,
    check_balancing,
    check_twist_equation,
    derived_scalars,
    fs_exponent,
    fs_indicator,
    su2_odd_mod2,
    verlinde_fusion,
)

datum = su2_odd_mod2(5)  # q = 11
print("rank", datum.rank, " ord(T) =", datum.ord_t)
print("dims ~", [round(d.complex_eval().real, 6) for d in datum.dims])
ds = derived_scalars(datum)
print("D^2 ~", round(ds.global_dim_sq.complex_eval().real, 6))

print()
print(check_admissible(datum).format_table())

print()
fusion = verlinde_fusion(datum)
print("fusion matrix N_1 =")
for row in fusion.matrix(1):
    print("  ", list(row))
print("balancing:", check_balancing(datum, fusion).ok)
print("twist equation:", check_twist_equation(datum).ok)
print("nu_2 values:", [str(fs_indicator(datum, fusion, 2, k)) for k in range(5)])
print("Frobenius-Schur exponent:", fs_exponent(datum, fusion))
