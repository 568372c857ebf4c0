"""Modularly admissible cyclotomic extensions, conductors, and the
admissible-level enumeration for prime-power Galois shapes."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod
from typing import Iterable, Optional

from .cyclotomic import (
    Cyclotomic,
    divisors,
    euler_phi,
    factorize,
    get_order_cap,
    is_prime,
    units_mod,
)
from .modular_data import ModularDatum, derived_scalars, norm_prime_support

FERMAT_PRIMES = (3, 5, 17, 257, 65537)


class BadLevelError(ValueError):
    """A generator does not lie in the requested Q_n."""


@dataclass(frozen=True)
class GroupShape:
    """An abelian p-group Z/p^r1 x ... x Z/p^rm (invariant factor exponents)."""

    p: int
    exponents: tuple[int, ...]
    multiquadratic: bool = False

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if not self.exponents or any(r < 1 for r in self.exponents):
            raise ValueError("exponents must be a nonempty tuple of positives")
        if tuple(sorted(self.exponents)) != self.exponents:
            raise ValueError("exponents must be ascending")
        if self.multiquadratic and (self.p != 2 or set(self.exponents) != {1}):
            raise ValueError("multiquadratic shapes are (Z/2Z)^m")

    @classmethod
    def elementary2(cls, m: int) -> "GroupShape":
        return cls(2, (1,) * m, multiquadratic=True)

    @classmethod
    def parse(cls, text: str) -> "GroupShape":
        """"p=3,m=1,r=1" (repeat r= for several factors) or "multiquadratic,m=2"."""
        fields = [f.strip() for f in text.split(",") if f.strip()]
        if fields and fields[0] == "multiquadratic":
            opts = dict(f.split("=", 1) for f in fields[1:])
            return cls.elementary2(int(opts.get("m", 1)))
        p = m = None
        rs: list[int] = []
        for f in fields:
            key, _, value = f.partition("=")
            if key == "p":
                p = int(value)
            elif key == "m":
                m = int(value)
            elif key == "r":
                rs.append(int(value))
            else:
                raise ValueError(f"unknown shape field {f!r}")
        if p is None or not rs:
            raise ValueError(f"shape {text!r} needs p= and at least one r=")
        if m is not None and m != len(rs):
            raise ValueError(f"m={m} but {len(rs)} exponents given")
        return cls(p, tuple(sorted(rs)))


LevelSet = frozenset


def subfield_conductor(generators: Iterable[Cyclotomic]) -> int:
    """Minimal m with every generator inside Q_m."""
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    cond = 1
    for g in gens:
        cond = cond * g.conductor // gcd(cond, g.conductor)
    return cond


@dataclass(frozen=True)
class AdmissibilityFacts:
    ok: bool
    conductor: int
    quotient_divides_24: bool
    gcd_divides_2: bool
    gal_over_conductor_in_z2_cubed: bool
    witness: str = ""


def is_modularly_admissible(
    n: int, k_generators: Iterable[Cyclotomic]
) -> AdmissibilityFacts:
    """Is Q_n multi-quadratic over the field generated by the given elements?

    Also reports the conductor facts n/f | 24, gcd(n/f, f) | 2 and
    Gal(Q_n/Q_f) inside (Z/2Z)^3.
    """
    gens = list(k_generators)
    f = subfield_conductor(gens)
    if n % f != 0:
        raise BadLevelError(f"generators have conductor {f}, not inside Q_{n}")
    ok, witness = True, ""
    for k in units_mod(n):
        if all(g.galois(k) == g for g in gens) and (k * k) % n != 1 % n:
            ok, witness = False, f"sigma_{k} fixes K but has order > 2"
            break
    quot = n // f
    fixing_f = [k for k in units_mod(n) if k % f == 1]
    elem2 = all((k * k) % n == 1 % n for k in fixing_f) and len(fixing_f) <= 8
    return AdmissibilityFacts(
        ok,
        f,
        24 % quot == 0,
        gcd(quot, f) in (1, 2),
        elem2,
        witness,
    )


def enumerate_levels(shape: GroupShape) -> frozenset[int]:
    """All levels n of modularly admissible Q_n/K for Gal(K/Q) of this shape.

    May be empty: the shape is then not realizable as a Galois group of a
    modularly admissible pair.
    """
    p, rs = shape.p, shape.exponents
    if p > 3:
        if p % 3 != 2 or len(set(rs)) != len(rs) or any(r % 2 == 0 for r in rs):
            return frozenset()
        qs = [2 * p**r + 1 for r in rs]
        if len(set(qs)) != len(qs) or not all(is_prime(q) for q in qs):
            return frozenset()
        core = prod(qs)
        return frozenset(f * core for f in divisors(24))
    if p == 3:
        out: set[int] = set()
        qs = [2 * 3**r + 1 for r in rs]
        if len(set(qs)) == len(qs) and all(is_prime(q) for q in qs):
            core = prod(qs)
            out.update(f * core for f in divisors(24))
        for i, r in enumerate(rs):
            others = [q for j, q in enumerate(qs) if j != i]
            if len(set(others)) == len(others) and all(is_prime(q) for q in others):
                core = 3 ** (r + 1) * prod(others)
                out.update(f * core for f in divisors(8))
        return frozenset(out)
    # p == 2: n = 2^a * distinct Fermat primes, within the order cap
    cap = get_order_cap()
    out = set()
    for mask in range(1 << len(FERMAT_PRIMES)):
        core = prod(
            q for i, q in enumerate(FERMAT_PRIMES) if mask >> i & 1
        )
        a = 0
        while True:
            n = 2**a * core
            if euler_phi(n) > cap:
                break
            out.add(n)
            a += 1
    if set(rs) == {1}:
        out = {n for n in out if 240 % n == 0}
    return frozenset(out)


@dataclass(frozen=True)
class OddPrimeReport:
    ok: bool
    witness: str = ""


def odd_prime_constraints(n: int, p: Optional[int] = None) -> OddPrimeReport:
    """Constraints on odd primes q | n for an odd-degree subfield: q = 3 mod 4,
    q a simple factor, and q = 2 p^r + 1 (p given, or any prime power)."""
    if n < 1:
        raise ValueError("n must be positive")
    for q, mult in factorize(n).items():
        if q <= 3:
            continue
        if q % 4 != 3:
            return OddPrimeReport(False, f"{q} = 1 mod 4")
        if mult > 1:
            return OddPrimeReport(False, f"{q}^{mult} is not a simple factor")
        half = (q - 1) // 2
        if p is not None:
            r = 0
            while half % p == 0:
                half //= p
                r += 1
            if half != 1 or r < 1:
                return OddPrimeReport(False, f"{q} != 2*{p}^r + 1")
        else:
            fac = factorize(half)
            if len(fac) != 1:
                return OddPrimeReport(False, f"({q}-1)/2 is not a prime power")
    return OddPrimeReport(True)


@dataclass(frozen=True)
class CauchySupport:
    norm_primes: frozenset[int]
    torder_primes: frozenset[int]
    ok: bool


def cauchy_prime_support(datum: ModularDatum) -> CauchySupport:
    """Prime support of Norm(D^2) versus the prime support of ord(T)."""
    d2 = derived_scalars(datum).global_dim_sq
    left = norm_prime_support(d2)
    right = frozenset(factorize(datum.ord_t))
    return CauchySupport(left, right, left == right)


def unit_quotient_shape(n: int) -> tuple[int, ...]:
    """Prime-power decomposition of (Z/nZ)^x / (its maximal elementary
    2-subgroup), sorted.  Cross-validation oracle for enumerate_levels."""
    cyclic: list[int] = []
    for q, e in factorize(n).items():
        if q == 2:
            if e == 2:
                cyclic.append(2)
            elif e >= 3:
                cyclic.extend([2, 2 ** (e - 2)])
        else:
            cyclic.append((q - 1) * q ** (e - 1))
    shape: list[int] = []
    for d in cyclic:
        d //= gcd(d, 2)
        for q, e in factorize(d).items():
            shape.append(q**e)
    return tuple(sorted(shape))
