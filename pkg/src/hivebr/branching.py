"""Branching sl(2n) -> sp(2n): Sundaram, Kwon and flagged-hive models, the
bijection between the first two, and a Weyl-character oracle."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache

from .errors import InstanceInvalid, NonTermination, NotDominant, NotInDomain
from .gthive import (
    GTPattern,
    Hive,
    HiveTriple,
    contretableau_from_gt,
    count_hives,
    gt_from_tableau,
    gt_ne_diff,
    gt_row_diff,
    hive_embed,
    hive_from_ne_pattern,
    sundaram_flag,
    tableau_from_gt,
)
from .laurent import LaurentPolynomial, symplectic_alternant
from .partitions import (
    Partition,
    contains,
    even_partitions,
    normalize_partition,
    partitions_upto,
    subpartitions,
    subtract,
)
from .tableaux import (
    SkewTableau,
    companion,
    enumerate_dominant,
    enumerate_lr,
    is_dominant,
    is_littlewood_richardson,
    rectify,
    satisfies_kwon,
    satisfies_sundaram,
    schutzenberger,
)

log = logging.getLogger(__name__)

MODELS = ("sundaram", "kwon", "flagged_hive", "character")


@dataclass(frozen=True)
class BranchingInstance:
    n: int
    nu: Partition
    mu: Partition

    def __post_init__(self):
        try:
            nu = normalize_partition(self.nu)
            mu = normalize_partition(self.mu)
        except ValueError as exc:
            raise InstanceInvalid(str(exc)) from exc
        if self.n < 1:
            raise InstanceInvalid(f"n must be positive, got {self.n}")
        if len(nu) > 2 * self.n - 1:
            raise InstanceInvalid(f"nu={list(nu)} has more than {2 * self.n - 1} parts")
        if len(mu) > self.n:
            raise InstanceInvalid(f"mu={list(mu)} has more than {self.n} parts")
        object.__setattr__(self, "nu", nu)
        object.__setattr__(self, "mu", mu)

    @property
    def m(self) -> int:
        return 2 * self.n


@dataclass(frozen=True)
class BijectionTrace:
    input: SkewTableau
    companion: SkewTableau
    hive: Hive
    ne_pattern: GTPattern
    gt_tableau: SkewTableau
    contretableau: SkewTableau
    output: SkewTableau

    def to_json(self) -> dict:
        return {
            "input": self.input.to_json(),
            "companion": self.companion.to_json(),
            "hive": self.hive.to_json(),
            "ne_pattern": self.ne_pattern.to_json(),
            "gt_tableau": self.gt_tableau.to_json(),
            "contretableau": self.contretableau.to_json(),
            "output": self.output.to_json(),
        }


def admissible_lambdas(inst: BranchingInstance) -> list[Partition]:
    """Even partitions of weight |nu| - |mu| with at most 2n parts, inside nu."""
    w = sum(inst.nu) - sum(inst.mu)
    if w < 0:
        return []
    return [lam for lam in even_partitions(w, inst.m) if contains(inst.nu, lam)]


def lrs_set(inst: BranchingInstance, lam: Partition) -> list[SkewTableau]:
    lam = normalize_partition(lam)
    if not contains(inst.nu, inst.mu) or sum(lam) != sum(inst.nu) - sum(inst.mu):
        return []
    return [T for T in enumerate_lr(inst.nu, inst.mu, lam) if satisfies_sundaram(T, inst.n)]


def lrk_set(inst: BranchingInstance, lam: Partition) -> list[SkewTableau]:
    """lam-dominant SSYT of shape mu, content nu - lam, whose evacuation
    over [1, 2n] has the Kwon property."""
    lam = normalize_partition(lam)
    if sum(lam) != sum(inst.nu) - sum(inst.mu) or not contains(inst.nu, lam):
        return []
    weight = subtract(inst.nu, lam)
    return [T for T in enumerate_dominant(inst.mu, weight, lam)
            if T.max_entry() <= inst.m and satisfies_kwon(schutzenberger(T, inst.m), inst.n)]


def symmetry_U(R: SkewTableau, lam: Partition, m: int) -> SkewTableau:
    """rect . C . P-hat . phi, from LR^nu_{lam,mu} to LR^nu_{mu,lam}."""
    if not is_dominant(R, lam):
        raise NotDominant(f"{R!r} is not {list(lam)}-dominant")
    h = hive_embed(R, lam, m)
    return rectify(contretableau_from_gt(gt_ne_diff(h)))


def symmetry_U_inverse(S: SkewTableau, nu: Partition, m: int) -> SkewTableau:
    """Inverse of ``symmetry_U``.

    The evacuation of the output over [1, m] is T(P-hat(h)), which together
    with the right edge of the hive (partial sums of ``nu``) determines ``h``;
    reading ``h`` along its rows gives back the input tableau.
    """
    P_hat = gt_from_tableau(schutzenberger(S, m), m)
    h = hive_from_ne_pattern(P_hat, nu)
    return tableau_from_gt(gt_row_diff(h))


def branching_map(inst: BranchingInstance, lam: Partition, T: SkewTableau) -> BijectionTrace:
    """rect . C . P-hat . phi . c applied to an element of LRS(nu/mu, lam).

    ``lam`` need not be even: none of the component maps use evenness.
    """
    lam = normalize_partition(lam)
    if T.outer != inst.nu or T.inner != inst.mu:
        raise NotInDomain(f"{T!r} does not have shape {list(inst.nu)}/{list(inst.mu)}")
    if not is_littlewood_richardson(T, lam):
        raise NotInDomain(f"{T!r} is not an LR tableau of content {list(lam)}")
    if not satisfies_sundaram(T, inst.n):
        raise NotInDomain(f"{T!r} fails the Sundaram condition for n={inst.n}")
    m = inst.m
    c = companion(T, check_LR=False)
    h = hive_embed(c, inst.mu, m)
    P_hat = gt_ne_diff(h)
    C = contretableau_from_gt(P_hat)
    return BijectionTrace(input=T, companion=c, hive=h, ne_pattern=P_hat,
                          gt_tableau=tableau_from_gt(P_hat), contretableau=C,
                          output=rectify(C))


# ---------------------------------------------------------------------------
# character oracle


def restricted_schur(nu: Partition, n: int) -> LaurentPolynomial:
    """s_nu(x_1, ..., x_n, 1/x_1, ..., 1/x_n) as an exact Laurent polynomial."""
    return LaurentPolynomial(n, _restricted_schur(tuple(nu), 2 * n, n))


@lru_cache(maxsize=None)
def _restricted_schur(nu: tuple[int, ...], N: int, n: int) -> dict:
    """Weighted sum over SSYT of shape nu in letters 1..N, built by peeling
    off the horizontal strip of largest letters (letter i -> x_i, letter n+i -> 1/x_i)."""
    if not nu:
        return {(0,) * n: 1}
    if len(nu) > N:
        return {}
    var = N - 1 if N <= n else N - n - 1
    sign = 1 if N <= n else -1
    out: dict = {}
    for kappa in _interlacing_below(nu, N - 1):
        strip = sum(nu) - sum(kappa)
        for e, c in _restricted_schur(kappa, N - 1, n).items():
            e2 = list(e)
            e2[var] += sign * strip
            e2 = tuple(e2)
            out[e2] = out.get(e2, 0) + c
    return out


def _interlacing_below(nu, max_len):
    """kappa with nu_{i+1} <= kappa_i <= nu_i and at most max_len parts."""
    k = len(nu)

    def rec(i):
        if i == k:
            yield ()
            return
        lo = nu[i + 1] if i + 1 < k else 0
        for x in range(nu[i], lo - 1, -1):
            if x > 0 and i >= max_len:
                continue
            for rest in rec(i + 1):
                yield (x,) + rest

    for kap in rec(0):
        yield normalize_partition(kap)


@lru_cache(maxsize=None)
def _character_decompose(n: int, nu: tuple[int, ...]) -> tuple:
    rho = tuple(range(n, 0, -1))
    poly = restricted_schur(nu, n) * symplectic_alternant(rho)
    bound = len(poly) + 1
    result = {}
    for _ in range(bound):
        if poly.is_zero():
            return tuple(sorted(result.items(), reverse=True))
        dominant = [e for e in poly.terms
                    if all(a > b for a, b in zip(e, e[1:])) and e[-1] > 0]
        if not dominant:
            raise NonTermination(f"no strictly dominant term left for nu={list(nu)}, n={n}")
        top = max(dominant)
        coeff = poly.terms[top]
        mu = normalize_partition(a - r for a, r in zip(top, rho))
        if coeff < 0:
            raise NonTermination(f"negative multiplicity {coeff} for mu={list(mu)}")
        result[mu] = coeff
        poly = poly - symplectic_alternant(top) * coeff
    raise NonTermination(f"peeling exceeded {bound} steps for nu={list(nu)}, n={n}")


def character_decompose(inst: BranchingInstance) -> dict[Partition, int]:
    """{mu: c^nu_mu} for the restriction of V(nu) to sp(2n)."""
    return dict(_character_decompose(inst.n, inst.nu))


def branching_coefficient(inst: BranchingInstance, model: str) -> int:
    if model == "character":
        return character_decompose(inst).get(inst.mu, 0)
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}; expected one of {MODELS}")
    if not contains(inst.nu, inst.mu):
        return 0
    total = 0
    for lam in admissible_lambdas(inst):
        if model == "sundaram":
            total += len(lrs_set(inst, lam))
        elif model == "kwon":
            total += len(lrk_set(inst, lam))
        else:
            total += count_hives(HiveTriple(inst.mu, lam, inst.nu, inst.m), sundaram_flag(inst.n))
    return total


def verify_instance(inst: BranchingInstance) -> dict:
    """Check the bijection and all four models on one instance; never raises on mismatch."""
    per_lambda = []
    bijection_ok = True
    counts = dict.fromkeys(MODELS[:3], 0)
    flag = sundaram_flag(inst.n)
    lams = admissible_lambdas(inst) if contains(inst.nu, inst.mu) else []
    for lam in lams:
        lrs = lrs_set(inst, lam)
        lrk = lrk_set(inst, lam)
        n_hives = count_hives(HiveTriple(inst.mu, lam, inst.nu, inst.m), flag)
        images = [branching_map(inst, lam, T).output for T in lrs]
        injective = len(set(images)) == len(images)
        image_ok = set(images) == set(lrk)
        flagged_tabs = enumerate_dominant(lam, subtract(inst.nu, inst.mu), inst.mu, flag)
        companions_ok = {companion(T) for T in lrs} == set(flagged_tabs)
        ok = injective and image_ok and companions_ok and len(lrs) == len(lrk) == n_hives
        bijection_ok &= ok
        counts["sundaram"] += len(lrs)
        counts["kwon"] += len(lrk)
        counts["flagged_hive"] += n_hives
        per_lambda.append({"lambda": list(lam), "lrs": len(lrs), "lrk": len(lrk),
                           "flagged_hive": n_hives, "injective": injective,
                           "image_ok": image_ok, "companion_flag_ok": companions_ok})
        if not ok:
            log.warning("mismatch at n=%d nu=%s mu=%s lambda=%s", inst.n, inst.nu, inst.mu, lam)
    counts["character"] = branching_coefficient(inst, "character")
    models_agree = len(set(counts.values())) == 1
    return {"n": inst.n, "nu": list(inst.nu), "mu": list(inst.mu), "models": counts,
            "bijection_ok": bijection_ok, "models_agree": models_agree,
            "ok": bijection_ok and models_agree, "per_lambda": per_lambda}


def sweep_instances(n: int, max_weight: int) -> list[BranchingInstance]:
    """Every (nu, mu) with |nu| <= max_weight, l(nu) <= 2n-1, mu inside nu, l(mu) <= n."""
    out = []
    for nu in partitions_upto(max_weight, 2 * n - 1):
        for mu in subpartitions(nu, n):
            out.append(BranchingInstance(n, nu, mu))
    return out

