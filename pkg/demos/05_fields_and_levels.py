#!/usr/bin/env python3
"""Modularly admissible extensions: conductors, multi-quadratic tests,
level enumeration for Galois shapes, and Cauchy prime supports."""

from moddata import (
    GroupShape,
    cauchy_prime_support,
    enumerate_levels,
    is_modularly_admissible,
    sqrt_int,
    subfield_conductor,
    su2_odd_mod2,
)

print("conductor of Q(sqrt 2):", subfield_conductor([sqrt_int(2)]))
facts = is_modularly_admissible(8, [sqrt_int(2)])
print("Q_8 / Q(sqrt 2) multi-quadratic:", facts.ok,
      "| n/f divides 24:", facts.quotient_divides_24)

print()
for text in ("p=5,m=1,r=1", "p=3,m=1,r=1", "multiquadratic,m=2"):
    shape = GroupShape.parse(text)
    print(f"levels for {text}: {sorted(enumerate_levels(shape))}")

print()
datum = su2_odd_mod2(5)
support = cauchy_prime_support(datum)
print("Cauchy support for SU(2)_9/Z_2:",
      sorted(support.norm_primes), "vs", sorted(support.torder_primes),
      "->", "match" if support.ok else "MISMATCH")
