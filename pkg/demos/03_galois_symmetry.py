#!/usr/bin/env python3
"""Galois symmetry of modular data: character permutations, sign vectors,
dimension classification, and the twist identity sigma^2(t_i) = t_{h(i)}."""

from moddata import (
    classify_dimensions,
    compute_profile,
    galois_twist_symmetry,
    normalize,
    pointed_zn,
    su2_4_family_all,
    su2_odd_mod2,
)

for name, datum in [
    ("SU(2)_9/Z_2", su2_odd_mod2(5)),
    ("SU(2)_4 family member", su2_4_family_all()[0]),
    ("pointed Z_5", pointed_zn(5)),
]:
    rep = normalize(datum)
    profile = compute_profile(datum, rep=rep)
    print(f"== {name} ==")
    print("  conductor of F_S:", profile.field_conductor)
    print("  orbits:", [list(o) for o in profile.orbits])
    for k in profile.units:
        print(f"  sigma_{k}: {list(profile.perms[k])}  signs {list(profile.signs[k])}")
    print("  class:", classify_dimensions(datum, profile).label)
    print("  twist symmetry holds:", galois_twist_symmetry(rep).ok)
    print()
