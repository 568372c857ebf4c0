#!/usr/bin/env python3
"""SL(2,Z) liftings: the 12 representations of a datum, levels and parity,
spectra connectivity, the inadmissible degree-p representation, and the
level p^l spectra table."""

from moddata import (
    inadmissible_psi,
    normalize,
    spectra_connectivity,
    spectra_lookup,
    su2_odd_mod2,
)
from moddata.sl2z_reps import all_lifts

datum = su2_odd_mod2(5)
print("== the 12 lifts of SU(2)_9/Z_2 ==")
for idx, rep in enumerate(all_lifts(datum)):
    print(f"  x = zeta_12^{idx:<2d} level {rep.level:>3d}  parity {rep.parity}")

rep = normalize(datum)
print()
print("canonical lift: level", rep.level, "parity", rep.parity)
print("t-spectrum orders:", [v.root_of_unity_order() for v in rep.t])
print("connected:", spectra_connectivity(rep).ok)

print()
print("== inadmissibility certificate for psi(5) ==")
cert = inadmissible_psi(5)
print("relations verified; level", cert.rep.level)
print("sqrt(6) has conductor", cert.sqrt_conductor, "which does not divide 5:",
      cert.inadmissible)

print()
print("== spectra table: degree 2, level 5, odd ==")
for record in spectra_lookup(2, 5, "odd"):
    for spec in record.spectra:
        print("  ", sorted(str(v) for v in spec))
