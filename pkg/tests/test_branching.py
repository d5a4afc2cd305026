from fractions import Fraction
from math import prod

import pytest

from hivebr.branching import (
    BranchingInstance,
    admissible_lambdas,
    branching_coefficient,
    branching_map,
    character_decompose,
    lrk_set,
    lrs_set,
    restricted_schur,
    symmetry_U,
    symmetry_U_inverse,
    sweep_instances,
    verify_instance,
)
from hivebr.errors import InstanceInvalid, NotDominant, NotInDomain
from hivebr.partitions import conjugate, partitions, partitions_upto, subpartitions
from hivebr.tableaux import enumerate_dominant, make_skew_tableau, rectify, schutzenberger, straight

from test_laurent import det


def gl_dim(nu, N):
    """Hook-content formula."""
    conj = conjugate(nu)
    num = den = 1
    for i, row in enumerate(nu):
        for j in range(row):
            num *= N + j - i
            den *= row - j + conj[j] - i - 1
    return num // den


def sp_dim(mu, n):
    """Weyl dimension formula for sp(2n)."""
    mu = list(mu) + [0] * (n - len(mu))
    l = [mu[i] + n - i for i in range(n)]
    r = [n - i for i in range(n)]
    num = prod((l[i] - l[j]) * (l[i] + l[j]) for i in range(n) for j in range(i + 1, n)) * prod(l)
    den = prod((r[i] - r[j]) * (r[i] + r[j]) for i in range(n) for j in range(i + 1, n)) * prod(r)
    return num // den


def schur_value(nu, xs):
    N = len(xs)
    nu = list(nu) + [0] * (N - len(nu))
    return (det([[x ** (nu[i] + N - 1 - i) for x in xs] for i in range(N)])
            / det([[x ** (N - 1 - i) for x in xs] for i in range(N)]))


def sp_value(mu, xs):
    n = len(xs)
    mu = list(mu) + [0] * (n - len(mu))
    a = [mu[i] + n - i for i in range(n)]
    r = [n - i for i in range(n)]
    return (det([[x ** e - x ** (-e) for x in xs] for e in a])
            / det([[x ** e - x ** (-e) for x in xs] for e in r]))


def test_weyl_dimensions_sanity():
    assert gl_dim((1,), 4) == 4 and gl_dim((1, 1), 4) == 6 and gl_dim((2,), 4) == 10
    assert sp_dim((), 2) == 1 and sp_dim((1,), 2) == 4 and sp_dim((1, 1), 2) == 5


@pytest.mark.parametrize("n", [1, 2, 3])
def test_character_dimension_check(n):
    for nu in partitions_upto(7, 2 * n - 1):
        dec = character_decompose(BranchingInstance(n, nu, ()))
        assert all(len(mu) <= n and c > 0 for mu, c in dec.items())
        assert sum(c * sp_dim(mu, n) for mu, c in dec.items()) == gl_dim(nu, 2 * n)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_character_numeric_bialternant(n):
    xs = [Fraction(2), Fraction(3), Fraction(7, 2)][:n]
    point = xs + [1 / x for x in xs]
    for nu in partitions_upto(6, 2 * n - 1):
        assert restricted_schur(nu, n).evaluate(xs) == schur_value(nu, point)
        dec = character_decompose(BranchingInstance(n, nu, ()))
        assert sum(c * sp_value(mu, xs) for mu, c in dec.items()) == schur_value(nu, point)


def test_small_coefficients():
    assert branching_coefficient(BranchingInstance(1, (1,), (1,)), "character") == 1
    for model in ("sundaram", "kwon", "flagged_hive", "character"):
        assert branching_coefficient(BranchingInstance(2, (1, 1), (1, 1)), model) == 1
        assert branching_coefficient(BranchingInstance(2, (1, 1), ()), model) == 1
    assert character_decompose(BranchingInstance(2, (1, 1), ())) == {(1, 1): 1, (): 1}
    assert character_decompose(BranchingInstance(2, (2, 1), ())) == {(2, 1): 1, (1,): 1}
    with pytest.raises(ValueError):
        branching_coefficient(BranchingInstance(2, (1,), ()), "nope")


def test_instance_validation():
    with pytest.raises(InstanceInvalid):
        BranchingInstance(2, (1, 1, 1, 1), ())
    with pytest.raises(InstanceInvalid):
        BranchingInstance(1, (2,), (1, 1))
    with pytest.raises(InstanceInvalid):
        BranchingInstance(0, (), ())
    with pytest.raises(InstanceInvalid):
        BranchingInstance(2, (1, 2), ())
    assert BranchingInstance(3, [5, 4, 3, 3, 0], [2, 1, 1]).nu == (5, 4, 3, 3)


def test_admissible_lambdas():
    # odd weight: no even lambda, so every model gives 0
    inst = BranchingInstance(3, (5, 4, 3, 3), (2, 1, 1))
    assert admissible_lambdas(inst) == []
    for inst in sweep_instances(2, 6):
        w = sum(inst.nu) - sum(inst.mu)
        brute = [lam for lam in partitions(max(w, 0), 4)
                 if all(x % 2 == 0 for x in conjugate(lam))
                 and all(a >= b for a, b in zip(inst.nu + (0,) * 4, lam))]
        assert sorted(admissible_lambdas(inst)) == sorted(brute if w >= 0 else [])


def test_branching_map_golden(final_T, final_hive_rows):
    inst = BranchingInstance(3, (5, 4, 3, 3), (2, 1, 1))
    tr = branching_map(inst, (4, 4, 2, 1), final_T)
    assert [list(r) for r in tr.companion.rows] == [[1, 1, 1, 2], [2, 2, 3, 4], [3, 4], [4]]
    assert [list(r) for r in tr.hive.rows_bottom_up] == final_hive_rows
    assert [list(r) for r in tr.gt_tableau.rows] == [[3, 3], [4], [6]]
    assert list(tr.contretableau.inner) == [2, 2, 2, 1, 1]
    assert [list(r) for r in tr.contretableau.rows][3:] == [[1], [3], [4, 4]]
    assert tr.output == straight([[1, 4], [3], [4]])
    assert tr.output in lrk_set(inst, (4, 4, 2, 1))
    assert final_T in lrs_set(inst, (4, 4, 2, 1))
    js = tr.to_json()
    assert js["output"] == {"inner": [], "rows": [[1, 4], [3], [4]]}


def test_branching_map_domain(lrex):
    inst = BranchingInstance(3, (5, 3, 1), (3, 1))
    with pytest.raises(NotInDomain):
        branching_map(BranchingInstance(3, (5, 3, 2), (3, 1)), (3, 1, 1), lrex)
    with pytest.raises(NotInDomain):
        branching_map(inst, (3, 2), lrex)
    bad = make_skew_tableau([5, 3, 2, 1], [3, 1, 1], [[1, 1], [1, 2], [3], [1]])
    with pytest.raises(NotInDomain):
        branching_map(BranchingInstance(3, (5, 3, 2, 1), (3, 1, 1)), (4, 1, 1), bad)


def test_symmetry_U_bijective():
    m = 4
    with pytest.raises(NotDominant):
        symmetry_U(straight([[2]]), (), m)
    checked = 0
    for nu in partitions_upto(8, m):
        for lam in subpartitions(nu):
            wt = tuple(a - b for a, b in zip(nu, lam + (0,) * m))
            for shape in partitions(sum(wt), m):
                dom = enumerate_dominant(shape, wt, lam)
                images = [symmetry_U(R, lam, m) for R in dom]
                assert len(set(images)) == len(images)
                for R, S in zip(dom, images):
                    assert S.shape == lam
                    assert symmetry_U_inverse(S, nu, m) == R
                    checked += 1
    assert checked > 1000


@pytest.mark.parametrize("n", [2, 3])
def test_evacuation_consistency_on_sweep(n):
    """Two routes to T(P-hat(h)): evacuate the output, or read P-hat directly."""
    traces = 0
    for inst in sweep_instances(n, 8):
        for lam in admissible_lambdas(inst):
            for T in lrs_set(inst, lam):
                tr = branching_map(inst, lam, T)
                assert schutzenberger(tr.output, inst.m) == tr.gt_tableau
                assert rectify(tr.contretableau) == tr.output
                traces += 1
    assert traces >= 97


def test_verify_instance_report_shape():
    rep = verify_instance(BranchingInstance(3, (5, 4, 3, 3), (2, 1, 1)))
    assert rep["ok"] and rep["bijection_ok"] and rep["models_agree"]
    assert set(rep["models"]) == {"sundaram", "kwon", "flagged_hive", "character"}
    for row in rep["per_lambda"]:
        assert row["lrs"] == row["lrk"] == row["flagged_hive"]
    zero = verify_instance(BranchingInstance(2, (2,), (1, 1)))
    assert zero["ok"] and zero["models"]["character"] == 0


def test_sweep_instances_counts():
    insts = sweep_instances(2, 3)
    assert all(len(i.nu) <= 3 and len(i.mu) <= 2 and sum(i.nu) <= 3 for i in insts)
    assert len(insts) == len(set(insts))
    assert all(verify_instance(i)["ok"] for i in insts)
