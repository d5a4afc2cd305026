"""Golden vectors for every pipeline stage, plus the n=2 sweep.

Library functions are looked up through their modules at call time so a
patched implementation is actually exercised.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import branching, gthive, partitions, tableaux

LREX = dict(outer=(5, 3, 1), inner=(3, 1), rows=[[1, 1], [1, 2], [3]])
LRS_BAD = dict(outer=(5, 3, 2, 1), inner=(3, 1, 1), rows=[[1, 1], [1, 2], [3], [1]])
FINAL_T = dict(outer=(5, 4, 3, 3), inner=(2, 1, 1), rows=[[1, 1, 1], [1, 2, 2], [2, 3], [2, 3, 4]])
FINAL_COMPANION = [[1, 1, 1, 2], [2, 2, 3, 4], [3, 4], [4]]
FINAL_HIVE = [[4, 8, 12, 14, 15, 15, 15], [4, 8, 12, 14, 15, 15], [4, 8, 12, 14, 15],
              [4, 8, 11, 12], [3, 7, 9], [2, 5], [0]]
FINAL_PHAT = [[0], [0, 0], [2, 0, 0], [2, 1, 0, 0], [2, 1, 0, 0, 0], [2, 1, 1, 0, 0, 0]]
COMP_GT_H_COMPANION = [[1, 1, 1, 4], [2, 2, 2], [3, 3], [4, 4]]
COMP_GT_H_GT = [[3], [3, 3], [3, 3, 2], [4, 3, 2, 2], [4, 3, 2, 2, 0], [4, 3, 2, 2, 0, 0]]
COMP_GT_H_HIVE = [[4, 8, 11, 13, 15, 15, 15], [4, 8, 11, 13, 15, 15], [4, 8, 11, 13, 15],
                  [4, 7, 10, 12], [3, 6, 9], [2, 5], [0]]
TC_PATTERN = [[1], [3, 1], [4, 3, 0], [6, 3, 2, 0]]
TC_T = [[1, 2, 2, 3, 4, 4], [2, 3, 3], [4, 4]]
TC_C_INNER = [6, 4, 3]
TC_C_ROWS = [[], [1, 1], [2, 2, 3], [1, 1, 2, 3, 3, 4]]


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class SelfTestResult:
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.ok), None)


def _rows(T):
    return [list(r) for r in T.rows]


def _expect(result, name, got, want):
    ok = got == want
    result.checks.append(Check(name, ok, "" if ok else f"got {got!r}\n    want {want!r}"))
    return ok


def run_selftest(sweep: bool = True) -> SelfTestResult:
    res = SelfTestResult()
    tb, gh, br, pt = tableaux, gthive, branching, partitions

    _expect(res, "normalize_partition", pt.normalize_partition([2, 1, 1, 0, 0, 0]), (2, 1, 1))
    _expect(res, "partial_sums", pt.partial_sums((2, 1, 1), 6), (0, 2, 3, 4, 4, 4, 4))
    _expect(res, "content", pt.content(pt.parse_word("21123")), (2, 2, 1))
    _expect(res, "is_yamanouchi", pt.is_yamanouchi(pt.parse_word("111221123")), True)

    T = tb.make_skew_tableau(**LREX)
    _expect(res, "lrex uniqueness", tb.enumerate_lr((5, 3, 1), (3, 1), (3, 1, 1)), [T])
    _expect(res, "lrex companion", _rows(tb.companion(T)), [[1, 1, 2], [2], [3]])
    _expect(res, "companion word", tb.reverse_row_word(tb.companion(T)), (2, 1, 1, 2, 3))
    _expect(res, "superstandard word", tb.reverse_row_word(tb.superstandard((3, 1))), (1, 1, 1, 2))
    _expect(res, "companion dominance", tb.is_dominant(tb.companion(T), (3, 1)), True)
    _expect(res, "sundaram accepts lrex", tb.satisfies_sundaram(T, 3), True)
    _expect(res, "sundaram rejects 4-row", tb.satisfies_sundaram(tb.make_skew_tableau(**LRS_BAD), 3), False)

    P = gh.GTPattern(tuple(map(tuple, TC_PATTERN)))
    TP = gh.tableau_from_gt(P)
    CP = gh.contretableau_from_gt(P)
    _expect(res, "T(P)", _rows(TP), TC_T)
    _expect(res, "C(P) inner", list(CP.inner), TC_C_INNER)
    _expect(res, "C(P) rows", _rows(CP), TC_C_ROWS)
    _expect(res, "S(T(P)) = rect(C(P))", tb.schutzenberger(TP, 4), tb.rectify(CP))

    R = tb.straight(COMP_GT_H_COMPANION)
    _expect(res, "GT of companion", [list(r) for r in gh.gt_from_tableau(R, 6).rows], COMP_GT_H_GT)
    h = gh.hive_embed(R, (2, 1, 1), 6)
    _expect(res, "phi hive", [list(r) for r in h.rows_bottom_up], COMP_GT_H_HIVE)

    inst = br.BranchingInstance(3, (5, 4, 3, 3), (2, 1, 1))
    T = tb.make_skew_tableau(**FINAL_T)
    tr = br.branching_map(inst, (4, 4, 2, 1), T)
    _expect(res, "final companion", _rows(tr.companion), FINAL_COMPANION)
    _expect(res, "final hive", [list(r) for r in tr.hive.rows_bottom_up], FINAL_HIVE)
    _expect(res, "final hive flagged", gh.is_flagged(tr.hive, gh.sundaram_flag(3)), True)
    _expect(res, "final P-hat", [list(r) for r in tr.ne_pattern.rows], FINAL_PHAT)
    _expect(res, "final T(P-hat)", _rows(tr.gt_tableau), [[3, 3], [4], [6]])
    _expect(res, "final C(P-hat)", (list(tr.contretableau.inner), _rows(tr.contretableau)),
            ([2, 2, 2, 1, 1], [[], [], [], [1], [3], [4, 4]]))
    _expect(res, "final output", _rows(tr.output), [[1, 4], [3], [4]])
    _expect(res, "final output in LRK", tr.output in br.lrk_set(inst, (4, 4, 2, 1)), True)
    _expect(res, "sundaram_flag(2)", gh.sundaram_flag(2), (2, 3, 3, 4))
    _expect(res, "sundaram_flag(3)", gh.sundaram_flag(3), (3, 4, 4, 5, 5, 6))

    if sweep:
        for inst in br.sweep_instances(2, 8):
            rep = br.verify_instance(inst)
            if not rep["ok"]:
                res.checks.append(Check(f"sweep n=2 nu={list(inst.nu)} mu={list(inst.mu)}",
                                        False, f"models={rep['models']}"))
                break
        else:
            res.checks.append(Check("sweep n=2, |nu| <= 8", True))
    return res
