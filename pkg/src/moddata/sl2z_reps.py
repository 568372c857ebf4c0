"""SL(2,Z) liftings of modular data: normalized pairs, levels, parity,
t-spectrum obstructions, and the static spectra database."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import lcm
from typing import Optional

from . import _matrix as mat
from .cyclotomic import Cyclotomic, ONE, ZERO, zeta
from .modular_data import ModularDatum, Verdict, derived_scalars


class NotModularRepresentation(ValueError):
    """The scaled pair violates s^4 = 1 or (st)^3 = s^2."""


class NotTabulatedError(LookupError):
    """Spectra query outside the degree <= 4 prime-power table."""


@dataclass(frozen=True)
class ModularRep:
    """A normalized pair (s, t): a genuine SL(2,Z) representation."""

    rank: int
    s: mat.Matrix
    t: tuple[Cyclotomic, ...]
    level: int
    parity: str  # even | odd | neither

    def t_spectrum(self) -> tuple[Cyclotomic, ...]:
        """Eigenvalues of t in label order (with multiplicity)."""
        return self.t


def verify_relations(s: mat.Matrix, t: tuple[Cyclotomic, ...]) -> Verdict:
    """Exact check of s^4 = Id and (st)^3 = s^2."""
    r = len(s)
    s2 = mat.matmul(s, s)
    if not mat.mat_eq(mat.matmul(s2, s2), mat.eye(r)):
        return Verdict(False, "s^4 != Id")
    st = mat.scale_cols(s, t)
    if not mat.mat_eq(mat.mat_pow(st, 3), s2):
        return Verdict(False, "(st)^3 != s^2")
    return Verdict(True)


def _parity_of(s: mat.Matrix) -> str:
    s2 = mat.matmul(s, s)
    r = len(s)
    if mat.mat_eq(s2, mat.eye(r)):
        return "even"
    if mat.mat_eq(s2, mat.scale(mat.eye(r), -1)):
        return "odd"
    return "neither"


def _build_rep(s: mat.Matrix, t: tuple[Cyclotomic, ...]) -> ModularRep:
    check = verify_relations(s, t)
    if not check:
        raise NotModularRepresentation(str(check.witness))
    level = 1
    for v in t:
        order = v.root_of_unity_order()
        if order is None:
            raise NotModularRepresentation(f"t entry {v} is not a root of unity")
        level = lcm(level, order)
    return ModularRep(len(s), s, t, level, _parity_of(s))


def global_dim_root(datum: ModularDatum) -> Cyclotomic:
    """The positive square root D of D^2, as an exact cyclotomic.

    With zeta a 6th root of the anomaly, (p+ / zeta^3)^2 = p+ p- = D^2, so
    D = +-p+/zeta^3; the sign is fixed by the principal embedding.
    """
    ds = derived_scalars(datum)
    zeta6 = _anomaly_sixth_root(datum)
    cand = ds.gauss_plus * (zeta6**3).inverse()
    if cand * cand != ds.global_dim_sq:
        raise NotModularRepresentation("(p+/zeta^3)^2 != D^2: data inconsistent")
    return cand if cand.complex_eval().real > 0 else -cand


def _anomaly_sixth_root(datum: ModularDatum) -> Cyclotomic:
    ds = derived_scalars(datum)
    if ds.anomaly is None:
        raise NotModularRepresentation("p- = 0: anomaly undefined")
    log = ds.anomaly.root_of_unity_log()
    if log is None:
        raise NotModularRepresentation("anomaly is not a root of unity")
    m, e = log
    return zeta(6 * m, e)


@lru_cache(maxsize=None)
def normalize(
    datum: ModularDatum,
    x_exp: Optional[int] = None,
    zeta6: Optional[Cyclotomic] = None,
) -> ModularRep:
    """The modular representation s = (zeta^3/(x^3 p+)) S, t = (x/zeta) T.

    x = zeta_12^x_exp; zeta6 is a 6th root of the anomaly.  With both left
    None the canonical lift s = S/D is produced (x is the 6th root of unity
    with zeta^3/(x^3 p+) = 1/D).
    """
    ds = derived_scalars(datum)
    if zeta6 is None:
        zeta6 = _anomaly_sixth_root(datum)
    elif ds.anomaly is None or zeta6**6 != ds.anomaly:
        raise NotModularRepresentation("zeta6^6 is not the anomaly")
    zeta_cubed = zeta6**3
    if x_exp is None:
        cand = ds.gauss_plus * zeta_cubed.inverse()
        gamma = 1 if cand.complex_eval().real > 0 else -1
        x = Cyclotomic.from_rational(gamma)
    else:
        x = zeta(12, x_exp)
    s_scalar = zeta_cubed * (x**3 * ds.gauss_plus).inverse()
    t_scalar = x * zeta6.inverse()
    s = mat.scale(datum.S, s_scalar)
    t = tuple(t_scalar * th for th in datum.thetas)
    return _build_rep(s, t)


@lru_cache(maxsize=None)
def _all_lifts_cached(datum: ModularDatum) -> tuple[ModularRep, ...]:
    zeta6 = _anomaly_sixth_root(datum)
    return tuple(normalize(datum, x_exp=a, zeta6=zeta6) for a in range(12))


def all_lifts(datum: ModularDatum) -> list[ModularRep]:
    """The 12 modular representations rho_x, x running over 12th roots."""
    return list(_all_lifts_cached(datum))


# ---------------------------------------------------------------------------
# spectra predicates


def spectra_connectivity(rep: ModularRep) -> Verdict:
    """Graph on distinct t-eigenvalues, edges where s_ij != 0: connected?

    A disconnected graph exhibits a direct-sum split with disjoint t-spectra.
    """
    values = []
    index: dict[Cyclotomic, int] = {}
    for v in rep.t:
        if v not in index:
            index[v] = len(values)
            values.append(v)
    n = len(values)
    adj: list[set[int]] = [set() for _ in range(n)]
    for i in range(rep.rank):
        for j in range(rep.rank):
            if rep.s[i][j]:
                a, b = index[rep.t[i]], index[rep.t[j]]
                adj[a].add(b)
                adj[b].add(a)
    seen = {0}
    stack = [0]
    while stack:
        cur = stack.pop()
        for nxt in adj[cur]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    if len(seen) == n:
        return Verdict(True)
    component = tuple(sorted(seen))
    return Verdict(False, component, "t-spectrum graph is disconnected")


@dataclass(frozen=True)
class ObstructionScan:
    """Which (r-2)-sub-multisets of the t-spectrum could carry a
    subrepresentation: any without a 120th root of unity is obstructed."""

    subdegree: int
    eigenvalue_orders: tuple[int, ...]
    subsets: tuple[tuple[tuple[Cyclotomic, ...], bool], ...]

    @property
    def all_obstructed(self) -> bool:
        return all(not ok for _, ok in self.subsets)

    @property
    def split_allowed(self) -> bool:
        return any(ok for _, ok in self.subsets)


def obstruction_120(rep: ModularRep, subdegree: Optional[int] = None) -> ObstructionScan:
    """Scan candidate degree-(r-2) sub-spectra for a 120th root of unity."""
    if rep.rank < 3:
        raise ValueError("obstruction scan needs rank >= 3")
    if subdegree is None:
        subdegree = rep.rank - 2
    orders = []
    for v in rep.t:
        o = v.root_of_unity_order()
        if o is None:
            raise NotModularRepresentation(f"t entry {v} is not a root of unity")
        orders.append(o)
    seen = set()
    subsets = []
    for idxs in combinations(range(rep.rank), subdegree):
        multiset: dict[Cyclotomic, int] = {}
        for i in idxs:
            multiset[rep.t[i]] = multiset.get(rep.t[i], 0) + 1
        key = frozenset(multiset.items())
        if key in seen:
            continue
        seen.add(key)
        values = tuple(rep.t[i] for i in idxs)
        has_120 = any(120 % orders[i] == 0 for i in idxs)
        subsets.append((values, has_120))
    return ObstructionScan(subdegree, tuple(orders), tuple(subsets))


# ---------------------------------------------------------------------------
# signed permutation matching (equivalence of nondegenerate reps)


@dataclass(frozen=True)
class SignedPermutation:
    perm: tuple[int, ...]  # t2[perm[i]] == t1[i]
    signs: tuple[int, ...]

    def matrix(self, r: int) -> mat.Matrix:
        rows = [[ZERO] * r for _ in range(r)]
        for j in range(r):
            rows[self.perm[j]][j] = Cyclotomic.from_rational(self.signs[j])
        return tuple(tuple(row) for row in rows)


def signed_perm_match(rep1: ModularRep, rep2: ModularRep) -> Optional[SignedPermutation]:
    """U with U^-1 s1 U = s2 matching the t-spectra, or None.

    Both representations must be nondegenerate (distinct t-eigenvalues).
    """
    r = rep1.rank
    if r != rep2.rank:
        return None
    for rep in (rep1, rep2):
        if len(set(rep.t)) != r:
            raise ValueError("signed_perm_match needs nondegenerate t")
    where2 = {v: i for i, v in enumerate(rep2.t)}
    if set(rep1.t) != set(where2):
        return None
    perm = tuple(where2[v] for v in rep1.t)
    s1, s2 = rep1.s, rep2.s
    # determine eps with s2[perm(i)][perm(j)] = eps_i eps_j s1[i][j]
    eps: list[Optional[int]] = [None] * r
    for comp_root in range(r):
        if eps[comp_root] is not None:
            continue
        eps[comp_root] = 1
        stack = [comp_root]
        while stack:
            i = stack.pop()
            for j in range(r):
                if not s1[i][j]:
                    continue
                ratio = s2[perm[i]][perm[j]] * s1[i][j].inverse()
                if ratio == ONE:
                    sign = 1
                elif ratio == -ONE:
                    sign = -1
                else:
                    return None
                expect = eps[i] * sign
                if eps[j] is None:
                    eps[j] = expect
                    stack.append(j)
                elif eps[j] != expect:
                    return None
    signs = tuple(e if e is not None else 1 for e in eps)
    for i in range(r):
        for j in range(r):
            if s2[perm[i]][perm[j]] != signs[i] * signs[j] * s1[i][j]:
                return None
    return SignedPermutation(perm, signs)


# ---------------------------------------------------------------------------
# the degree <= 4 prime-power spectra table


@dataclass(frozen=True)
class SpectrumRecord:
    degree: int
    parity: str
    level: int
    spectra: tuple[frozenset[Cyclotomic], ...]


def _spec(*pairs: tuple[int, int]) -> frozenset[Cyclotomic]:
    return frozenset(zeta(n, e) for n, e in pairs)


_TABLE_ROWS: tuple[SpectrumRecord, ...] = (
    SpectrumRecord(2, "even", 2, (_spec((1, 0), (2, 1)),)),
    SpectrumRecord(
        2, "odd", 3,
        (_spec((3, 0), (3, 1)), _spec((3, 1), (3, 2)), _spec((3, 2), (3, 0))),
    ),
    SpectrumRecord(2, "odd", 4, (_spec((4, 1), (4, 3)),)),
    SpectrumRecord(2, "odd", 5, (_spec((5, 1), (5, 4)), _spec((5, 2), (5, 3)))),
    SpectrumRecord(2, "even", 8, (_spec((8, 5), (8, 7)), _spec((8, 1), (8, 3)))),
    SpectrumRecord(2, "odd", 8, (_spec((8, 3), (8, 5)), _spec((8, 7), (8, 1)))),
    SpectrumRecord(3, "even", 3, (_spec((3, 1), (3, 2), (1, 0)),)),
    SpectrumRecord(
        3, "odd", 4,
        (_spec((4, 1), (2, 1), (1, 0)), _spec((4, 3), (1, 0), (2, 1))),
    ),
    SpectrumRecord(
        3, "even", 4,
        (_spec((2, 1), (4, 3), (4, 1)), _spec((1, 0), (4, 1), (4, 3))),
    ),
    SpectrumRecord(
        3, "even", 5,
        (_spec((1, 0), (5, 1), (5, 4)), _spec((1, 0), (5, 2), (5, 3))),
    ),
    SpectrumRecord(
        3, "even", 7,
        (_spec((7, 2), (7, 1), (7, 4)), _spec((7, 5), (7, 6), (7, 3))),
    ),
    SpectrumRecord(
        3, "odd", 8,
        (
            _spec((2, 1), (8, 5), (8, 1)),
            _spec((1, 0), (8, 1), (8, 5)),
            _spec((2, 1), (8, 7), (8, 3)),
            _spec((1, 0), (8, 3), (8, 7)),
        ),
    ),
    SpectrumRecord(
        3, "even", 8,
        (
            _spec((4, 3), (8, 7), (8, 3)),
            _spec((4, 1), (8, 3), (8, 7)),
            _spec((4, 1), (8, 5), (8, 1)),
            _spec((4, 3), (8, 1), (8, 5)),
        ),
    ),
    SpectrumRecord(
        3, "odd", 16,
        (
            _spec((8, 5), (16, 1), (16, 9)),
            _spec((8, 1), (16, 9), (16, 1)),
            _spec((8, 1), (16, 5), (16, 13)),
            _spec((8, 5), (16, 13), (16, 5)),
            _spec((8, 7), (16, 3), (16, 11)),
            _spec((8, 3), (16, 11), (16, 3)),
            _spec((8, 3), (16, 15), (16, 7)),
            _spec((8, 7), (16, 15), (16, 7)),
        ),
    ),
    SpectrumRecord(
        3, "even", 16,
        (
            _spec((8, 7), (16, 5), (16, 13)),
            _spec((8, 3), (16, 13), (16, 5)),
            _spec((8, 3), (16, 9), (16, 1)),
            _spec((8, 7), (16, 1), (16, 9)),
            _spec((8, 5), (16, 15), (16, 7)),
            _spec((8, 1), (16, 7), (16, 15)),
            _spec((8, 5), (16, 3), (16, 11)),
            _spec((8, 1), (16, 11), (16, 3)),
        ),
    ),
    SpectrumRecord(4, "odd", 5, (_spec((5, 1), (5, 2), (5, 3), (5, 4)),)),
    SpectrumRecord(4, "even", 5, (_spec((5, 1), (5, 2), (5, 3), (5, 4)),)),
    SpectrumRecord(
        4, "odd", 7,
        (
            _spec((1, 0), (7, 1), (7, 4), (7, 2)),
            _spec((1, 0), (7, 6), (7, 3), (7, 5)),
        ),
    ),
    SpectrumRecord(4, "odd", 8, (_spec((8, 1), (8, 3), (8, 5), (8, 7)),)),
    SpectrumRecord(4, "even", 8, (_spec((8, 1), (8, 3), (8, 5), (8, 7)),)),
    SpectrumRecord(
        4, "odd", 9,
        (
            _spec((9, 1), (9, 4), (9, 7), (3, 1)),
            _spec((9, 1), (9, 4), (9, 7), (3, 2)),
            _spec((9, 1), (9, 4), (9, 7), (1, 0)),
            _spec((9, 2), (9, 5), (9, 8), (3, 2)),
            _spec((9, 2), (9, 5), (9, 8), (1, 0)),
            _spec((9, 2), (9, 5), (9, 8), (3, 1)),
        ),
    ),
    SpectrumRecord(
        4, "even", 9,
        (
            _spec((9, 1), (9, 4), (9, 7), (3, 1)),
            _spec((9, 1), (9, 4), (9, 7), (3, 2)),
            _spec((9, 1), (9, 4), (9, 7), (1, 0)),
            _spec((9, 2), (9, 5), (9, 8), (3, 2)),
            _spec((9, 2), (9, 5), (9, 8), (1, 0)),
            _spec((9, 2), (9, 5), (9, 8), (3, 1)),
        ),
    ),
)

_TABLE_LEVELS = frozenset(row.level for row in _TABLE_ROWS)


def spectra_table() -> tuple[SpectrumRecord, ...]:
    return _TABLE_ROWS


def spectra_lookup(degree: int, level: int, parity: str) -> list[SpectrumRecord]:
    """Table rows for (degree, level, parity); empty list means no such
    irreducible exists at a tabulated level."""
    if degree not in (2, 3, 4) or parity not in ("even", "odd"):
        raise NotTabulatedError(f"no table entry class ({degree}, {level}, {parity})")
    if level not in _TABLE_LEVELS:
        raise NotTabulatedError(f"level {level} is not tabulated")
    return [
        row
        for row in _TABLE_ROWS
        if row.degree == degree and row.level == level and row.parity == parity
    ]


# ---------------------------------------------------------------------------
# the inadmissible degree-p level-p representation


@dataclass(frozen=True)
class PsiCertificate:
    rep: ModularRep
    sqrt_conductor: int
    inadmissible: bool


def inadmissible_psi(p: int, cap: int = 50) -> PsiCertificate:
    """The unique degree-p irreducible of SL(2, Z/p), plus the certificate
    that it is not realizable: conductor(sqrt(p+1)) does not divide p."""
    from .cyclotomic import is_prime, sqrt_int

    if p <= 3 or p > cap or not is_prime(p):
        raise ValueError(f"p must be a prime with 3 < p <= {cap}")
    root = sqrt_int(p + 1)
    p_inv = Cyclotomic.from_rational(1) / p
    rows = []
    for j in range(p):
        row = []
        for k in range(p):
            if j == 0 and k == 0:
                row.append(-p_inv)
            elif j == 0 or k == 0:
                row.append(root * p_inv)
            else:
                acc = ZERO
                for a in range(1, p):
                    acc = acc + zeta(p, a * j + pow(a, -1, p) * k)
                row.append(acc * p_inv)
        rows.append(tuple(row))
    s = tuple(rows)
    t = tuple(zeta(p, k) for k in range(p))
    rep = _build_rep(s, t)
    cond = root.conductor
    return PsiCertificate(rep, cond, p % cond != 0)
