"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are stored on the power basis {zeta_n^e : 0 <= e < phi(n)} with
Fraction coefficients, reduced modulo the n-th cyclotomic polynomial and
then pushed down to their conductor.  As a consequence two values are equal
iff their (order, coefficients) pairs are identical, and the stored order is
never congruent to 2 mod 4.

Values are immutable; the per-order polynomial/reduction caches are guarded
by a lock so instances can be shared freely between threads.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Optional, Union

import mpmath

Rational = Fraction

RationalLike = Union[int, Fraction]
Scalar = Union[int, Fraction, "Cyclotomic"]

#: complex_eval returns a Python complex, so this is the honest digit cap.
EVAL_DIGIT_CAP = 15

_DEFAULT_ORDER_CAP = 2000
_order_cap = _DEFAULT_ORDER_CAP


class InvalidOrderError(ValueError):
    """Raised for order 0 or an order whose phi(n) exceeds the cap."""


class NotAUnitError(ValueError):
    """Raised when a Galois index is not coprime to the order."""


def set_order_cap(cap: int) -> None:
    """Set the maximal allowed phi(n) (cost guard for Phi_n reduction)."""
    global _order_cap
    if cap < 1:
        raise ValueError("cap must be positive")
    _order_cap = cap


def get_order_cap() -> int:
    return _order_cap


# ---------------------------------------------------------------------------
# elementary number theory helpers


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {p: exponent}."""
    fac: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            fac[d] = fac.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        fac[n] = fac.get(n, 0) + 1
    return fac


def euler_phi(n: int) -> int:
    phi = 1
    for p, e in factorize(n).items():
        phi *= (p - 1) * p ** (e - 1)
    return phi


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def radical(n: int) -> int:
    r = 1
    for p in factorize(n):
        r *= p
    return r


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return factorize(n) == {n: 1}


def units_mod(n: int) -> list[int]:
    """The unit group (Z/nZ)^x as a sorted list of representatives."""
    return [k for k in range(1, max(n, 2)) if gcd(k, n) == 1] or [1]


# ---------------------------------------------------------------------------
# cyclotomic polynomials and power-basis reduction tables

_poly_lock = threading.Lock()
_phi_cache: dict[int, tuple[int, ...]] = {}
_red_cache: dict[int, list[tuple[int, ...]]] = {}


def _poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    # little-endian integer polynomials, den monic; division is exact
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            out[i - dd] = c
            for j, dc in enumerate(den):
                num[i - dd + j] -= c * dc
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return out


def _cyclotomic_poly_squarefree(r: int) -> list[int]:
    if r == 1:
        return [-1, 1]
    f = [0] * (r + 1)
    f[0], f[r] = -1, 1
    for d in divisors(r)[:-1]:
        f = _poly_div_exact(f, _cyclotomic_poly_squarefree(d))
    return f


def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, little-endian, monic of degree phi(n)."""
    with _poly_lock:
        cached = _phi_cache.get(n)
        if cached is not None:
            return cached
        r = radical(n)
        base = _cyclotomic_poly_squarefree(r)
        step = n // r
        poly = [0] * ((len(base) - 1) * step + 1)
        for i, c in enumerate(base):
            poly[i * step] = c
        result = tuple(poly)
        _phi_cache[n] = result
        return result


def _reduction_rows(n: int) -> list[tuple[int, ...]]:
    """Row e-phi(n) is x^e mod Phi_n for phi(n) <= e <= max(n-1, 2*phi(n)-2)."""
    with _poly_lock:
        cached = _red_cache.get(n)
        if cached is not None:
            return cached
    phi_poly = cyclotomic_polynomial(n)
    deg = len(phi_poly) - 1
    top = [-c for c in phi_poly[:deg]]  # x^deg = top
    rows = [tuple(top)]
    hi = max(n - 1, 2 * deg - 2)
    cur = top
    for _ in range(deg + 1, hi + 1):
        nxt = [0] + cur[:-1]
        lead = cur[-1]
        if lead:
            for j in range(deg):
                nxt[j] += lead * top[j]
        rows.append(tuple(nxt))
        cur = nxt
    with _poly_lock:
        _red_cache[n] = rows
    return rows


def _check_order(n: int) -> None:
    if n < 1:
        raise InvalidOrderError(f"invalid order {n}")
    if euler_phi(n) > _order_cap:
        raise InvalidOrderError(f"phi({n}) exceeds the order cap {_order_cap}")


def _reduce_exponents(n: int, raw: Mapping[int, Fraction]) -> dict[int, Fraction]:
    """Fold exponents mod n, then mod Phi_n, dropping zero coefficients."""
    deg = euler_phi(n)
    merged: dict[int, Fraction] = {}
    for e, c in raw.items():
        if c:
            e %= n
            merged[e] = merged.get(e, Fraction(0)) + c
    out: dict[int, Fraction] = {}
    rows = None
    for e, c in merged.items():
        if not c:
            continue
        if e < deg:
            out[e] = out.get(e, Fraction(0)) + c
        else:
            if rows is None:
                rows = _reduction_rows(n)
            for j, rc in enumerate(rows[e - deg]):
                if rc:
                    out[j] = out.get(j, Fraction(0)) + c * rc
    return {e: c for e, c in out.items() if c}


# ---------------------------------------------------------------------------
# conductor reduction


def _is_fixed_by(n: int, coeffs: Mapping[int, Fraction], k: int) -> bool:
    image = _reduce_exponents(n, {(k * e) % n: c for e, c in coeffs.items()})
    return image == dict(coeffs)


def _lies_in_subfield(n: int, coeffs: Mapping[int, Fraction], m: int) -> bool:
    # Q_m-membership: fixed by every unit k == 1 (mod m) of (Z/nZ)^x
    for k in range(1 + m, n, m):
        if gcd(k, n) == 1 and not _is_fixed_by(n, coeffs, k):
            return False
    return True


def _express_at_suborder(
    n: int, coeffs: Mapping[int, Fraction], m: int
) -> dict[int, Fraction]:
    """Rewrite an element of Q_m < Q_n on the order-m power basis."""
    deg_n, deg_m, step = euler_phi(n), euler_phi(m), n // m
    cols = []
    for j in range(deg_m):
        vec = [Fraction(0)] * deg_n
        for e, c in _reduce_exponents(n, {j * step: Fraction(1)}).items():
            vec[e] = c
        cols.append(vec)
    target = [Fraction(0)] * deg_n
    for e, c in coeffs.items():
        target[e] = c
    # Gaussian elimination on the (deg_n x deg_m) system
    rows = [[cols[j][i] for j in range(deg_m)] + [target[i]] for i in range(deg_n)]
    piv_cols: list[int] = []
    piv = 0
    for col in range(deg_m):
        sel = next((r for r in range(piv, len(rows)) if rows[r][col]), None)
        if sel is None:
            continue
        rows[piv], rows[sel] = rows[sel], rows[piv]
        inv = 1 / rows[piv][col]
        rows[piv] = [v * inv for v in rows[piv]]
        for r in range(len(rows)):
            if r != piv and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[piv])]
        piv_cols.append(col)
        piv += 1
        if piv == deg_m:
            break
    for r in range(piv, len(rows)):
        if rows[r][-1]:
            raise ArithmeticError("element does not lie in the claimed subfield")
    sol = {col: rows[i][-1] for i, col in enumerate(piv_cols) if rows[i][-1]}
    return sol


def _conductor_reduce(n: int, coeffs: dict[int, Fraction]) -> tuple[int, dict[int, Fraction]]:
    if not coeffs:
        return 1, {}
    if set(coeffs) == {0}:
        return 1, coeffs
    changed = True
    while changed and n > 1:
        changed = False
        for p in factorize(n):
            m = n // p
            if euler_phi(m) == euler_phi(n) or _lies_in_subfield(n, coeffs, m):
                coeffs = _express_at_suborder(n, coeffs, m)
                n = m
                changed = True
                break
    return n, coeffs


# ---------------------------------------------------------------------------
# the scalar type


class Cyclotomic:
    """An exact element of some Q(zeta_n), always in canonical reduced form."""

    __slots__ = ("order", "_coeffs", "_hash")

    order: int
    _coeffs: dict[int, Fraction]

    def __init__(self, order: int, coeffs: Mapping[int, RationalLike]):
        _check_order(order)
        raw = {int(e): Fraction(c) for e, c in coeffs.items()}
        reduced = _reduce_exponents(order, raw)
        order, reduced = _conductor_reduce(order, reduced)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "_coeffs", reduced)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *_):
        raise AttributeError("Cyclotomic values are immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def make(cls, order: int, raw: Mapping[int, RationalLike]) -> "Cyclotomic":
        """Sum of c_e * zeta_order^e for arbitrary integer exponents e."""
        return cls(order, raw)

    @classmethod
    def from_rational(cls, value: RationalLike) -> "Cyclotomic":
        return cls(1, {0: Fraction(value)})

    @classmethod
    def _coerce(cls, value: Scalar) -> "Cyclotomic":
        if isinstance(value, Cyclotomic):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.from_rational(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to Cyclotomic")

    # -- structure ---------------------------------------------------------

    def items(self) -> Iterable[tuple[int, Fraction]]:
        """Canonical (exponent, coefficient) pairs, exponent-sorted."""
        return sorted(self._coeffs.items())

    def coefficient(self, e: int) -> Fraction:
        return self._coeffs.get(e, Fraction(0))

    @property
    def conductor(self) -> int:
        """Smallest m with self in Q_m (the stored order, by canonicity)."""
        return self.order

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.from_rational(other)
        elif not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.order == other.order and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.order, frozenset(self._coeffs.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        return f"Cyclotomic({self.order}, {dict(self.items())!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in self.items():
            if e == 0:
                parts.append(str(c))
            else:
                z = f"z{self.order}" if e == 1 else f"z{self.order}^{e}"
                if c == 1:
                    parts.append(z)
                elif c == -1:
                    parts.append(f"-{z}")
                else:
                    parts.append(f"{c}*{z}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    # -- arithmetic --------------------------------------------------------

    def _with_order(self, n: int) -> dict[int, Fraction]:
        """Coefficients re-expressed at a multiple n of self.order (no reduce)."""
        step = n // self.order
        return {e * step: c for e, c in self._coeffs.items()}

    def __add__(self, other: Scalar) -> "Cyclotomic":
        other = Cyclotomic._coerce(other)
        n = self.order * other.order // gcd(self.order, other.order)
        merged = self._with_order(n)
        for e, c in other._with_order(n).items():
            merged[e] = merged.get(e, Fraction(0)) + c
        return Cyclotomic(n, merged)

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        out = object.__new__(Cyclotomic)
        object.__setattr__(out, "order", self.order)
        object.__setattr__(out, "_coeffs", {e: -c for e, c in self._coeffs.items()})
        object.__setattr__(out, "_hash", None)
        return out

    def __sub__(self, other: Scalar) -> "Cyclotomic":
        return self + (-Cyclotomic._coerce(other))

    def __rsub__(self, other: Scalar) -> "Cyclotomic":
        return Cyclotomic._coerce(other) + (-self)

    def __mul__(self, other: Scalar) -> "Cyclotomic":
        other = Cyclotomic._coerce(other)
        if not self._coeffs or not other._coeffs:
            return ZERO
        n = self.order * other.order // gcd(self.order, other.order)
        a, b = self._with_order(n), other._with_order(n)
        prod: dict[int, Fraction] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                prod[e] = prod.get(e, Fraction(0)) + c1 * c2
        return Cyclotomic(n, prod)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse; raises ZeroDivisionError on 0."""
        if not self._coeffs:
            raise ZeroDivisionError("division by zero cyclotomic")
        n = self.order
        deg = euler_phi(n)
        if deg == 1 or set(self._coeffs) == {0}:
            return Cyclotomic.from_rational(1 / self._coeffs[0])
        # extended Euclid of f and Phi_n over Q[x]: u*f + v*Phi = 1
        f = [self._coeffs.get(e, Fraction(0)) for e in range(deg)]
        g = [Fraction(c) for c in cyclotomic_polynomial(n)]
        r0, r1 = g, f
        u0, u1 = [Fraction(0)], [Fraction(1)]
        while True:
            while r1 and not r1[-1]:
                r1.pop()
            if len(r1) == 1:
                break
            q, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            u0, u1 = u1, _poly_sub(u0, _poly_mul(q, u1))
        c = r1[0]  # nonzero constant: gcd(f, Phi_n) = 1 in Q[x]
        inv_coeffs = {e: u / c for e, u in enumerate(u1) if u}
        return Cyclotomic(n, inv_coeffs)

    def __truediv__(self, other: Scalar) -> "Cyclotomic":
        return self * Cyclotomic._coerce(other).inverse()

    def __rtruediv__(self, other: Scalar) -> "Cyclotomic":
        return Cyclotomic._coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "Cyclotomic":
        if k < 0:
            return self.inverse() ** (-k)
        base, out = self, ONE
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    # -- Galois ------------------------------------------------------------

    def galois(self, k: int) -> "Cyclotomic":
        """Apply sigma_k : zeta_n -> zeta_n^k; k must be a unit mod order."""
        n = self.order
        k %= n
        if gcd(k, n) != 1:
            raise NotAUnitError(f"{k} is not a unit modulo {n}")
        if k == 1:
            return self
        return Cyclotomic(n, {(k * e) % n: c for e, c in self._coeffs.items()})

    def conjugate(self) -> "Cyclotomic":
        return self.galois(-1)

    # -- predicates ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def is_rational(self) -> bool:
        return self.order == 1

    def as_rational(self) -> Fraction:
        if self.order != 1:
            raise ValueError(f"{self} is not rational")
        return self._coeffs.get(0, Fraction(0))

    @property
    def is_integer(self) -> bool:
        return self.order == 1 and self._coeffs.get(0, Fraction(0)).denominator == 1

    def as_integer(self) -> int:
        q = self.as_rational()
        if q.denominator != 1:
            raise ValueError(f"{self} is not a rational integer")
        return q.numerator

    @property
    def is_real(self) -> bool:
        return self.conjugate() == self

    @property
    def is_algebraic_integer(self) -> bool:
        # valid test: the power basis is a Z-basis of the ring of integers
        return all(c.denominator == 1 for c in self._coeffs.values())

    def root_of_unity_log(self) -> Optional[tuple[int, int]]:
        """(m, j) with self == zeta_m^j and gcd(j, m) == 1, if a root of unity.

        Roots of unity of Q_f are exactly the +-zeta_f^e, so self == sign *
        zeta_f^e == zeta_{2f}^{2e + sign_bit * f} at the conductor f.
        """
        parts = self._root_of_unity_parts()
        if parts is None:
            return None
        sign, e = parts
        f = self.order
        num = (2 * e + (f if sign == -1 else 0)) % (2 * f)
        g = gcd(2 * f, num) if num else 2 * f
        return (2 * f // g, num // g)

    def root_of_unity_order(self) -> Optional[int]:
        """Minimal m with self**m == 1, or None if not a root of unity."""
        log = self.root_of_unity_log()
        return None if log is None else log[0]

    @property
    def is_root_of_unity(self) -> bool:
        return self.root_of_unity_order() is not None

    def _root_of_unity_parts(self) -> Optional[tuple[int, int]]:
        """(sign, e) with self == sign * zeta_order^e, if a root of unity."""
        f = self.order
        if f == 1:
            q = self._coeffs.get(0, Fraction(0))
            if q == 1:
                return (1, 0)
            if q == -1:
                return (-1, 0)
            return None
        if any(c.denominator != 1 for c in self._coeffs.values()):
            return None
        if self * self.conjugate() != ONE:
            return None
        for e in range(f):
            mono = Cyclotomic(f, {e: 1})
            if self == mono:
                return (1, e)
            if self == -mono:
                return (-1, e)
        return None

    # -- numerics ------------------------------------------------------------

    def complex_eval(self, digits: int = EVAL_DIGIT_CAP) -> complex:
        """Float evaluation at the principal embedding zeta_n = e^(2*pi*i/n).

        Diagnostics only; never used to decide exact equality.
        """
        if not 1 <= digits <= EVAL_DIGIT_CAP:
            raise ValueError(f"digits must be in 1..{EVAL_DIGIT_CAP}")
        with mpmath.workdps(digits + 15):
            total = mpmath.mpc(0)
            for e, c in self._coeffs.items():
                total += mpmath.mpf(c.numerator) / c.denominator * mpmath.expjpi(
                    mpmath.mpf(2 * e) / self.order
                )
            return complex(float(total.real), float(total.imag))

    # -- JSON ---------------------------------------------------------------

    def to_json(self) -> dict:
        """{"order": n, "coeffs": {"e": "p/q"}} with decimal-string integers."""
        return {
            "order": self.order,
            "coeffs": {str(e): str(c) for e, c in self.items()},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Cyclotomic":
        order = int(data["order"])
        coeffs = {int(e): Fraction(s) for e, s in data["coeffs"].items()}
        return cls(order, coeffs)


# -- polynomial helpers for inverse() ---------------------------------------


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    q = [Fraction(0)] * max(len(a) - db, 1)
    for i in range(len(a) - 1, db - 1, -1):
        if a[i]:
            f = a[i] / lead
            q[i - db] = f
            for j in range(db + 1):
                a[i - db + j] -= f * b[j]
    while len(a) > 1 and not a[-1]:
        a.pop()
    return q, a


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    while len(out) > 1 and not out[-1]:
        out.pop()
    return out


# ---------------------------------------------------------------------------
# module-level API


ZERO = Cyclotomic(1, {})
ONE = Cyclotomic(1, {0: 1})


def sum_cyclotomics(values: Iterable[Cyclotomic]) -> Cyclotomic:
    """Sum with a single canonicalization pass (hot-loop accumulator)."""
    terms = [v for v in values if v._coeffs]
    if not terms:
        return ZERO
    if len(terms) == 1:
        return terms[0]
    n = 1
    for v in terms:
        n = n * v.order // gcd(n, v.order)
    merged: dict[int, Fraction] = {}
    for v in terms:
        step = n // v.order
        for e, c in v._coeffs.items():
            key = e * step
            merged[key] = merged.get(key, Fraction(0)) + c
    return Cyclotomic(n, merged)


def zeta(n: int, e: int = 1) -> Cyclotomic:
    """The root of unity zeta_n^e."""
    return Cyclotomic(n, {e: 1})


def make(order: int, raw: Mapping[int, RationalLike]) -> Cyclotomic:
    return Cyclotomic.make(order, raw)


def galois_apply(x: Cyclotomic, k: int) -> Cyclotomic:
    return x.galois(k)


def reduce_conductor(x: Cyclotomic) -> Cyclotomic:
    """Canonical form at the conductor (the identity here: values stay reduced)."""
    return x


def is_rational(x: Cyclotomic) -> bool:
    return x.is_rational


def is_real(x: Cyclotomic) -> bool:
    return x.is_real


def is_algebraic_integer(x: Cyclotomic) -> bool:
    return x.is_algebraic_integer


def is_root_of_unity(x: Cyclotomic) -> tuple[bool, Optional[int]]:
    m = x.root_of_unity_order()
    return (m is not None), m


def complex_eval(x: Cyclotomic, digits: int = EVAL_DIGIT_CAP) -> complex:
    return x.complex_eval(digits)


def sqrt_int(m: int) -> Cyclotomic:
    """Exact positive square root of a nonnegative integer, via Gauss sums."""
    if m < 0:
        raise ValueError("sqrt_int needs a nonnegative integer")
    if m == 0:
        return ZERO
    square_part, squarefree = 1, 1
    for p, e in factorize(m).items():
        square_part *= p ** (e // 2)
        if e % 2:
            squarefree *= p
    root = Cyclotomic.from_rational(square_part)
    for p in factorize(squarefree):
        if p == 2:
            factor = zeta(8) + zeta(8, -1)
        else:
            g = ZERO
            for a in range(1, p):
                g = g + Cyclotomic(p, {a: _legendre(a, p)})
            # Gauss: g = sqrt(p) for p = 1 mod 4, i*sqrt(p) for p = 3 mod 4
            factor = g if p % 4 == 1 else g * zeta(4, -1)
        root = root * factor
    return root


def _legendre(a: int, p: int) -> int:
    r = pow(a, (p - 1) // 2, p)
    return r if r <= 1 else -1
