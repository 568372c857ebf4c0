"""Modular data (S, T), Verlinde fusion and the seven-condition
admissibility checker."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from pathlib import Path
from typing import Optional, Sequence, Union

import numpy as np

from . import _matrix as mat
from .cyclotomic import (
    Cyclotomic,
    ONE,
    ZERO,
    factorize,
    sum_cyclotomics,
    units_mod,
    zeta,
)

PathLike = Union[str, Path]


class SchemaViolation(ValueError):
    """Malformed datum file or structurally invalid (S, T) pair."""

    def __init__(self, message: str, location: str = ""):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location


class FusionComputationError(ValueError):
    pass


class DegenerateSError(FusionComputationError):
    """S fails projective unitarity (or has a vanishing first row)."""


class NotFusionIntegral(FusionComputationError):
    """A Verlinde coefficient is not a nonnegative rational integer."""

    def __init__(self, i: int, j: int, k: int, value: Cyclotomic):
        super().__init__(f"N[{i},{j}]^{k} = {value} is not a nonnegative integer")
        self.witness = (i, j, k, value)


class FSExponentNotFound(ValueError):
    """No n with nu_n(k) = d_k for all k; the data is not admissible."""


@dataclass(frozen=True)
class Verdict:
    """Outcome of an exact check, with the first witness on failure."""

    ok: bool
    witness: object = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


# ---------------------------------------------------------------------------
# the central object


@dataclass(frozen=True)
class ModularDatum:
    """Rank-r S matrix over a cyclotomic field plus twists theta_j = zeta_N^a_j."""

    rank: int
    torder: int
    t_exponents: tuple[int, ...]
    S: mat.Matrix

    def __post_init__(self):
        r, N = self.rank, self.torder
        if r < 1:
            raise SchemaViolation(f"rank must be >= 1, got {r}", "rank")
        if N < 1:
            raise SchemaViolation(f"torder must be >= 1, got {N}", "torder")
        if len(self.t_exponents) != r:
            raise SchemaViolation(
                f"expected {r} exponents, got {len(self.t_exponents)}", "t_exponents"
            )
        object.__setattr__(
            self, "t_exponents", tuple(a % N for a in self.t_exponents)
        )
        if self.t_exponents[0] != 0:
            raise SchemaViolation("theta_0 must be 1", "t_exponents[0]")
        if len(self.S) != r or any(len(row) != r for row in self.S):
            raise SchemaViolation(f"S must be {r}x{r}", "S")
        for i in range(r):
            for j in range(i + 1, r):
                if self.S[i][j] != self.S[j][i]:
                    raise SchemaViolation("S is not symmetric", f"S[{i}][{j}]")
        if self.S[0][0] != ONE:
            raise SchemaViolation("S[0][0] must be 1", "S[0][0]")

    # -- scalars -------------------------------------------------------------

    def theta(self, j: int) -> Cyclotomic:
        return zeta(self.torder, self.t_exponents[j])

    @property
    def thetas(self) -> tuple[Cyclotomic, ...]:
        return tuple(self.theta(j) for j in range(self.rank))

    @property
    def dims(self) -> tuple[Cyclotomic, ...]:
        return tuple(self.S[0])

    @property
    def ord_t(self) -> int:
        """Actual order of T (lcm of the twist orders)."""
        N, out = self.torder, 1
        for a in self.t_exponents:
            o = N // gcd(N, a) if a else 1
            out = out * o // gcd(out, o)
        return out

    @property
    def s_field_conductor(self) -> int:
        """Conductor of F_S, the field generated by all S entries."""
        c = 1
        for row in self.S:
            for v in row:
                c = c * v.order // gcd(c, v.order)
        return c

    # -- serialization ---------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "torder": self.torder,
            "t_exponents": list(self.t_exponents),
            "S": [[v.to_json() for v in row] for row in self.S],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ModularDatum":
        try:
            rank = int(data["rank"])
            torder = int(data["torder"])
            exps = tuple(int(a) for a in data["t_exponents"])
            S = tuple(
                tuple(Cyclotomic.from_json(v) for v in row) for row in data["S"]
            )
        except SchemaViolation:
            raise
        except Exception as exc:
            raise SchemaViolation(str(exc), "datum") from exc
        return cls(rank, torder, exps, S)


def save(datum: ModularDatum, path: PathLike) -> None:
    Path(path).write_text(json.dumps(datum.to_json(), indent=1) + "\n", "utf-8")


def load(path: PathLike) -> ModularDatum:
    try:
        data = json.loads(Path(path).read_text("utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaViolation(f"malformed JSON: {exc}", str(path)) from exc
    return ModularDatum.from_json(data)


# ---------------------------------------------------------------------------
# derived scalars


@dataclass(frozen=True)
class DerivedScalars:
    dims: tuple[Cyclotomic, ...]
    global_dim_sq: Cyclotomic
    gauss_plus: Cyclotomic
    gauss_minus: Cyclotomic
    anomaly: Optional[Cyclotomic]
    dual: Optional[tuple[int, ...]]


@lru_cache(maxsize=None)
def derived_scalars(datum: ModularDatum) -> DerivedScalars:
    """Dimensions, D^2, Gauss sums, anomaly and the charge conjugation."""
    dims = datum.dims
    thetas = datum.thetas
    d_sq = [d * d for d in dims]
    global_dim_sq = sum_cyclotomics(d_sq)
    p_plus = sum_cyclotomics(dq * th for dq, th in zip(d_sq, thetas))
    p_minus = sum_cyclotomics(
        dq * th.conjugate() for dq, th in zip(d_sq, thetas)
    )
    anomaly = p_plus * p_minus.inverse() if p_minus else None
    return DerivedScalars(
        dims, global_dim_sq, p_plus, p_minus, anomaly, dual_from_s(datum)
    )


def dual_from_s(datum: ModularDatum) -> Optional[tuple[int, ...]]:
    """Charge conjugation from S_{i j*} = conj(S_ij): column matching."""
    cols = [tuple(datum.S[i][j] for i in range(datum.rank)) for j in range(datum.rank)]
    index = {}
    for j, col in enumerate(cols):
        index.setdefault(col, []).append(j)
    dual = []
    for j, col in enumerate(cols):
        matches = index.get(tuple(v.conjugate() for v in col), [])
        if len(matches) != 1:
            return None
        dual.append(matches[0])
    perm = tuple(dual)
    if perm[0] != 0 or any(perm[perm[j]] != j for j in range(datum.rank)):
        return None
    return perm


# ---------------------------------------------------------------------------
# Verlinde fusion


@dataclass(frozen=True, eq=False)
class FusionRules:
    """Nonnegative-integer fusion tensor N_{ij}^k with dual involution."""

    rank: int
    tensor: np.ndarray  # shape (r, r, r), tensor[i, j, k] = N_{ij}^k
    dual: tuple[int, ...]

    def __post_init__(self):
        self.tensor.flags.writeable = False

    def n(self, i: int, j: int, k: int) -> int:
        return int(self.tensor[i, j, k])

    def matrix(self, i: int) -> np.ndarray:
        """Fusion matrix N_i with (N_i)_{kj} = N_{ij}^k."""
        return self.tensor[i].T.copy()

    def __eq__(self, other) -> bool:
        if not isinstance(other, FusionRules):
            return NotImplemented
        return self.rank == other.rank and np.array_equal(self.tensor, other.tensor)

    def __hash__(self) -> int:
        return hash((self.rank, self.tensor.tobytes()))

    def verify_invariants(self) -> list[str]:
        """All violated fusion-ring identities (empty when consistent)."""
        r, N, dual = self.rank, self.tensor, self.dual
        bad = []
        for i in range(r):
            for j in range(r):
                for k in range(r):
                    if N[i, j, k] != N[j, i, k]:
                        bad.append(f"N[{i},{j}]^{k} != N[{j},{i}]^{k}")
                    if N[i, j, k] != N[i, dual[k], dual[j]]:
                        bad.append(f"N[{i},{j}]^{k} != N[i,k*]^(j*)")
                    if N[i, j, k] != N[dual[i], dual[j], dual[k]]:
                        bad.append(f"N[{i},{j}]^{k} != N[i*,j*]^(k*)")
                if N[i, j, 0] != (1 if dual[i] == j else 0):
                    bad.append(f"N[{i},{j}]^0 != delta(i, j*)")
                if N[0, i, j] != (1 if i == j else 0):
                    bad.append(f"N[0,{i}]^{j} != delta({i},{j})")
        assoc = np.einsum("ijm,mkl->ijkl", N, N) - np.einsum("jkm,iml->ijkl", N, N)
        if assoc.any():
            i, j, k, l = np.argwhere(assoc)[0]
            bad.append(f"associativity fails at ({i},{j},{k},{l})")
        mats = [self.matrix(i) for i in range(r)]
        for i in range(r):
            for j in range(i + 1, r):
                if not np.array_equal(mats[i] @ mats[j], mats[j] @ mats[i]):
                    bad.append(f"N_{i} and N_{j} do not commute")
        return bad


@lru_cache(maxsize=None)
def verlinde_fusion(datum: ModularDatum) -> FusionRules:
    """Exact fusion rules N_{ij}^k = (1/D^2) sum_a S_ia S_ja conj(S_ka) / S_0a."""
    r = datum.rank
    ds = derived_scalars(datum)
    if any(not d for d in ds.dims):
        raise DegenerateSError("vanishing entry in the first row of S")
    if not _projectively_unitary(datum, ds.global_dim_sq):
        raise DegenerateSError("S * conj(S)^t != D^2 * Id")
    d2_inv = ds.global_dim_sq.inverse()
    weights = [d.inverse() for d in ds.dims]
    cols = [tuple(datum.S[i][a] for i in range(r)) for a in range(r)]
    conj_cols = [tuple(v.conjugate() for v in col) for col in cols]
    tensor = np.zeros((r, r, r), dtype=np.int64)
    for i in range(r):
        for j in range(i, r):
            pair = [cols[a][i] * cols[a][j] * weights[a] for a in range(r)]
            for k in range(r):
                acc = sum_cyclotomics(
                    pair[a] * conj_cols[a][k] for a in range(r)
                )
                value = acc * d2_inv
                if not value.is_integer or value.as_integer() < 0:
                    raise NotFusionIntegral(i, j, k, value)
                tensor[i, j, k] = tensor[j, i, k] = value.as_integer()
    dual = []
    for i in range(r):
        hits = [k for k in range(r) if tensor[i, k, 0] == 1]
        if len(hits) != 1 or any(
            tensor[i, k, 0] not in (0, 1) for k in range(r)
        ):
            raise NotFusionIntegral(i, 0, 0, ZERO)
        dual.append(hits[0])
    dual = tuple(dual)
    if dual[0] != 0 or any(dual[dual[i]] != i for i in range(r)):
        raise NotFusionIntegral(0, 0, 0, ZERO)
    return FusionRules(r, tensor, dual)


def _projectively_unitary(datum: ModularDatum, d2: Cyclotomic) -> bool:
    prod = mat.matmul(datum.S, mat.conj(datum.S))  # conj(S)^t = conj(S), S symmetric
    target = mat.scale(mat.eye(datum.rank), d2)
    return mat.mat_eq(prod, target)


# ---------------------------------------------------------------------------
# exact identities


def check_balancing(datum: ModularDatum, fusion: FusionRules) -> Verdict:
    """theta_i theta_j S_ij = sum_k N_{i* j}^k d_k theta_k, exactly."""
    thetas = datum.thetas
    dims = datum.dims
    dual = fusion.dual
    terms = [dims[k] * thetas[k] for k in range(datum.rank)]
    for i in range(datum.rank):
        for j in range(datum.rank):
            lhs = thetas[i] * thetas[j] * datum.S[i][j]
            rhs = sum_cyclotomics(
                fusion.n(dual[i], j, k) * terms[k]
                for k in range(datum.rank)
                if fusion.n(dual[i], j, k)
            )
            if lhs != rhs:
                return Verdict(False, (i, j), "balancing equation fails")
    return Verdict(True)


def check_twist_equation(datum: ModularDatum) -> Verdict:
    """p+ S_jk = theta_j theta_k sum_i theta_i S_ij S_ik, exactly."""
    ds = derived_scalars(datum)
    thetas = datum.thetas
    for j in range(datum.rank):
        for k in range(j, datum.rank):
            lhs = ds.gauss_plus * datum.S[j][k]
            rhs = sum_cyclotomics(
                thetas[i] * datum.S[i][j] * datum.S[i][k]
                for i in range(datum.rank)
            )
            if lhs != thetas[j] * thetas[k] * rhs:
                return Verdict(False, (j, k), "twist equation fails")
    return Verdict(True)


def fs_indicator(
    datum: ModularDatum, fusion: FusionRules, n: int, k: int
) -> Cyclotomic:
    """Frobenius-Schur indicator nu_n(k), exact."""
    N = datum.torder
    dims = datum.dims
    exps = datum.t_exponents
    acc = sum_cyclotomics(
        fusion.n(i, j, k) * dims[i] * dims[j] * zeta(N, n * (exps[i] - exps[j]))
        for i in range(datum.rank)
        for j in range(datum.rank)
        if fusion.n(i, j, k)
    )
    return acc * derived_scalars(datum).global_dim_sq.inverse()


def fs_exponent(datum: ModularDatum, fusion: FusionRules) -> int:
    """Minimal n with nu_n(k) = d_k for all k.

    (theta_i / theta_j)^n is ord(T)-periodic in n, so scanning n = 1..ord(T)
    is exhaustive; the spec cap of 12 * ord(T) is therefore never reached.
    """
    dims = datum.dims
    for n in range(1, datum.ord_t + 1):
        if all(
            fs_indicator(datum, fusion, n, k) == dims[k] for k in range(datum.rank)
        ):
            return n
    raise FSExponentNotFound(
        f"no Frobenius-Schur exponent up to ord(T) = {datum.ord_t}"
    )


# ---------------------------------------------------------------------------
# admissibility


@dataclass(frozen=True)
class ConditionReport:
    index: int
    name: str
    passed: bool
    witness: str = ""


@dataclass(frozen=True)
class AdmissibilityReport:
    conditions: tuple[ConditionReport, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.conditions)

    def failures(self) -> list[ConditionReport]:
        return [c for c in self.conditions if not c.passed]

    def format_table(self) -> str:
        lines = []
        for c in self.conditions:
            tag = "PASS" if c.passed else "FAIL"
            extra = f"  [{c.witness}]" if c.witness and not c.passed else ""
            lines.append(f"({c.index}) {c.name:<24} {tag}{extra}")
        verdict = "admissible" if self.passed else "NOT admissible"
        lines.append(f"overall: {verdict}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "passed": self.passed,
            "conditions": [
                {
                    "index": c.index,
                    "name": c.name,
                    "passed": c.passed,
                    "witness": c.witness,
                }
                for c in self.conditions
            ],
        }


def rational_prime_support(q: Fraction) -> frozenset[int]:
    primes = set(factorize(abs(q.numerator)) if q.numerator else set())
    primes |= set(factorize(q.denominator))
    return frozenset(primes)


def norm_prime_support(x: Cyclotomic) -> frozenset[int]:
    """Primes dividing the rational field norm of x (over the conductor field)."""
    norm = ONE
    for k in units_mod(x.order):
        norm = norm * x.galois(k)
    return rational_prime_support(norm.as_rational())


def check_admissible(datum: ModularDatum) -> AdmissibilityReport:
    """Evaluate the seven admissibility conditions, all exactly."""
    reports: list[ConditionReport] = []
    ds = derived_scalars(datum)
    N = datum.ord_t
    r = datum.rank

    # (i) reality, symmetry, projective unitarity, finite twist order
    witness = ""
    ok = True
    for j, d in enumerate(ds.dims):
        if not d.is_real:
            ok, witness = False, f"d_{j} is not real"
            break
    if ok and not mat.is_symmetric(datum.S):
        ok, witness = False, "S not symmetric"
    if ok and not _projectively_unitary(datum, ds.global_dim_sq):
        ok, witness = False, "S*conj(S)^t != D^2*Id"
    reports.append(ConditionReport(1, "reality and unitarity", ok, witness))

    # (ii) (ST)^3 = p+ S^2, p+ p- = D^2, anomaly a root of unity
    ok, witness = True, ""
    if not ds.gauss_plus or not ds.gauss_minus:
        ok, witness = False, "vanishing Gauss sum"
    else:
        st = mat.scale_cols(datum.S, datum.thetas)
        lhs = mat.mat_pow(st, 3)
        rhs = mat.scale(mat.matmul(datum.S, datum.S), ds.gauss_plus)
        if not mat.mat_eq(lhs, rhs):
            ok, witness = False, "(ST)^3 != p+ S^2"
        elif ds.gauss_plus * ds.gauss_minus != ds.global_dim_sq:
            ok, witness = False, "p+ p- != D^2"
        elif not ds.anomaly.is_root_of_unity:
            ok, witness = False, "anomaly is not a root of unity"
    reports.append(ConditionReport(2, "Gauss sum relations", ok, witness))

    # (iii) Verlinde integrality
    fusion: Optional[FusionRules] = None
    ok, witness = True, ""
    try:
        fusion = verlinde_fusion(datum)
    except FusionComputationError as exc:
        ok, witness = False, str(exc)
    reports.append(ConditionReport(3, "Verlinde integrality", ok, witness))

    # (iv) balancing
    if fusion is None:
        reports.append(ConditionReport(4, "balancing equation", False, "no fusion"))
    else:
        v = check_balancing(datum, fusion)
        reports.append(
            ConditionReport(4, "balancing equation", v.ok, str(v.witness or ""))
        )

    # (v) Frobenius-Schur indicators
    if fusion is None:
        reports.append(ConditionReport(5, "FS indicators", False, "no fusion"))
    else:
        ok, witness = True, ""
        for k in range(r):
            nu2 = fs_indicator(datum, fusion, 2, k)
            if fusion.dual[k] == k:
                if nu2 != ONE and nu2 != -ONE:
                    ok, witness = False, f"nu_2({k}) = {nu2} not +-1 on self-dual"
                    break
            elif nu2:
                ok, witness = False, f"nu_2({k}) != 0 on non-self-dual"
                break
        if ok:
            for n in range(1, N + 1):
                for k in range(r):
                    nu = fs_indicator(datum, fusion, n, k)
                    if not nu.is_algebraic_integer or N % nu.order != 0:
                        ok = False
                        witness = f"nu_{n}({k}) not in Z[zeta_{N}]"
                        break
                if not ok:
                    break
        reports.append(ConditionReport(5, "FS indicators", ok, witness))

    # (vi) Galois structure of F_S inside F_T = Q_N
    ok, witness = True, ""
    cond_s = datum.s_field_conductor
    if N % cond_s != 0:
        ok, witness = False, f"F_S has conductor {cond_s}, not inside Q_{N}"
    else:
        from .galois import NotGaloisStable, compute_profile

        try:
            profile = compute_profile(datum)
        except NotGaloisStable as exc:
            ok, witness = False, str(exc)
        else:
            idperm = tuple(range(r))
            for k, perm in profile.perms.items():
                if perm == idperm and any(
                    v.galois(k) != v for row in datum.S for v in row
                ):
                    ok = False
                    witness = f"sigma_{k} acts trivially on characters but moves S"
                    break
            if ok:
                perms = list(profile.perms.values())
                for a in perms:
                    for b in perms:
                        if _compose(a, b) != _compose(b, a):
                            ok, witness = False, "Galois image not abelian"
                            break
            if ok:
                for k in units_mod(N):
                    if all(v.galois(k) == v for row in datum.S for v in row):
                        if (k * k) % N != 1 % N:
                            ok = False
                            witness = f"Gal(F_T/F_S) has sigma_{k} of order > 2"
                            break
    reports.append(ConditionReport(6, "Galois field structure", ok, witness))

    # (vii) Cauchy: prime support of Norm(D^2) equals prime support of N
    ok, witness = True, ""
    if not ds.global_dim_sq:
        ok, witness = False, "D^2 = 0"
    else:
        left = norm_prime_support(ds.global_dim_sq)
        right = frozenset(factorize(N))
        if left != right:
            ok = False
            witness = f"supp Norm(D^2) = {sorted(left)} != supp N = {sorted(right)}"
    reports.append(ConditionReport(7, "Cauchy condition", ok, witness))

    return AdmissibilityReport(tuple(reports))


def _compose(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """(a then b): i -> b[a[i]]."""
    return tuple(b[a[i]] for i in range(len(a)))
