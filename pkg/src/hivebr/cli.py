"""Command-line front end.

Exit status: 0 success, 2 usage or validation error, 3 verification mismatch.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import branching, gthive, render as rendering, selftest as st, tableaux
from .errors import HivebrError
from .partitions import contains, normalize_partition

log = logging.getLogger("hivebr")

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 2, 3
MODEL_ALIASES = {"sundaram": "sundaram", "kwon": "kwon", "hive": "flagged_hive",
                 "character": "character"}


class UsageError(Exception):
    pass


def parse_partition(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return normalize_partition(int(x) for x in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}: {exc}") from exc


def _setup_logging():
    level = os.environ.get("HIVEBR_LOG", "error").lower()
    levels = {"error": logging.ERROR, "info": logging.INFO, "debug": logging.DEBUG}
    logging.basicConfig(level=levels.get(level, logging.ERROR), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(payload, sort_keys=False))
    elif text:
        print(text)


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required for {args.command}")


# ---------------------------------------------------------------------------


def cmd_lr_count(args) -> int:
    _require(args, "nu", "mu", "lam")
    nu, mu, lam = args.nu, args.mu, args.lam
    out = {"nu": list(nu), "mu": list(mu), "lambda": list(lam)}
    if args.method in ("tableaux", "both"):
        out["tableaux"] = len(tableaux.enumerate_lr(nu, mu, lam)) if contains(nu, mu) else 0
    if args.method in ("hives", "both"):
        m = args.m or max(len(nu), len(mu), len(lam), 1)
        out["hives"] = gthive.count_hives(gthive.HiveTriple(lam, mu, nu, m))
    text = " ".join(f"{k}={out[k]}" for k in ("tableaux", "hives") if k in out)
    _emit(args, out, text)
    if args.method == "both" and out["tableaux"] != out["hives"]:
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_branch(args) -> int:
    _require(args, "n", "nu", "mu")
    inst = branching.BranchingInstance(args.n, args.nu, args.mu)
    names = list(MODEL_ALIASES) if args.model == "all" else [args.model]
    models = {MODEL_ALIASES[k]: branching.branching_coefficient(inst, MODEL_ALIASES[k])
              for k in names}
    out = {"n": inst.n, "nu": list(inst.nu), "mu": list(inst.mu), "models": models}
    _emit(args, out, " ".join(f"{k}={v}" for k, v in models.items()))
    return EXIT_MISMATCH if len(set(models.values())) > 1 else EXIT_OK


def cmd_map(args) -> int:
    _require(args, "n", "nu", "mu", "lam", "input")
    inst = branching.BranchingInstance(args.n, args.nu, args.mu)
    T = tableaux.SkewTableau.from_json(_load_json(args.input))
    trace = branching.branching_map(inst, args.lam, T)
    if args.trace:
        payload = trace.to_json()
        stages = [("input", trace.input), ("companion", trace.companion),
                  ("hive", trace.hive), ("P-hat", trace.ne_pattern),
                  ("T(P-hat)", trace.gt_tableau), ("C(P-hat)", trace.contretableau),
                  ("output", trace.output)]
        text = "\n\n".join(f"{name}:\n{rendering.render(obj)}" for name, obj in stages)
    else:
        payload = {"output": trace.output.to_json()}
        text = rendering.render(trace.output)
    _emit(args, payload, text)
    return EXIT_OK


def _verify_one(inst):
    return branching.verify_instance(inst)


def cmd_verify(args) -> int:
    _require(args, "n")
    if args.nu is not None:
        insts = [branching.BranchingInstance(args.n, args.nu, args.mu or ())]
    else:
        insts = branching.sweep_instances(args.n, args.max_weight)
        if args.sample is not None and args.sample < len(insts):
            rng = random.Random(args.seed)
            picked = sorted(rng.sample(range(len(insts)), args.sample))
            insts = [insts[i] for i in picked]
    t0 = time.perf_counter()
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_verify_one, insts, chunksize=8))
    else:
        reports = [_verify_one(i) for i in insts]
    elapsed = time.perf_counter() - t0
    bad = [r for r in reports if not r["ok"]]
    out = {"n": args.n, "max_weight": args.max_weight, "instances": len(reports),
           "nonzero": sum(1 for r in reports if r["models"]["character"]),
           "ok": not bad, "mismatches": [{"nu": r["nu"], "mu": r["mu"]} for r in bad],
           "reports": reports}
    log.info("verified %d instances in %.2fs", len(reports), elapsed)
    text = (f"n={args.n} instances={len(reports)} nonzero={out['nonzero']} "
            f"mismatches={len(bad)} {'PASS' if not bad else 'FAIL'}")
    if len(insts) == 1 and not args.json:
        r = reports[0]
        text = (" ".join(f"{k}={v}" for k, v in r["models"].items())
                + f" bijection_ok={r['bijection_ok']}")
    _emit(args, out, text)
    return EXIT_OK if not bad else EXIT_MISMATCH


def cmd_render(args) -> int:
    _require(args, "input")
    obj = rendering.object_from_json(_load_json(args.input))
    text = rendering.render(obj, args.format)
    if text:
        print(text)
    return EXIT_OK


def cmd_selftest(args) -> int:
    res = st.run_selftest(sweep=not args.no_sweep)
    if args.json:
        print(json.dumps({"ok": res.ok, "checks": [c.__dict__ for c in res.checks]}))
    else:
        for c in res.checks:
            print(f"{'PASS' if c.ok else 'FAIL'}  {c.name}")
        bad = res.first_failure()
        if bad is not None:
            print(f"first failure: {bad.name}\n    {bad.detail}", file=sys.stderr)
    return EXIT_OK if res.ok else EXIT_MISMATCH


COMMANDS = {"lr-count": cmd_lr_count, "branch": cmd_branch, "map": cmd_map,
            "verify": cmd_verify, "render": cmd_render, "selftest": cmd_selftest}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured JSON output")
    shapes = argparse.ArgumentParser(add_help=False)
    shapes.add_argument("--nu", type=parse_partition)
    shapes.add_argument("--mu", type=parse_partition)
    shapes.add_argument("--lambda", dest="lam", type=parse_partition)
    shapes.add_argument("--n", type=int)
    shapes.add_argument("--m", type=int)

    p = argparse.ArgumentParser(prog="hivebr", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("lr-count", parents=[common, shapes], help="LR coefficient")
    s.add_argument("--method", choices=["tableaux", "hives", "both"], default="both")

    s = sub.add_parser("branch", parents=[common, shapes], help="branching coefficient")
    s.add_argument("--model", choices=[*MODEL_ALIASES, "all"], default="all")

    s = sub.add_parser("map", parents=[common, shapes], help="apply the bijection")
    s.add_argument("--input", help="JSON tableau file")
    s.add_argument("--trace", action="store_true")

    s = sub.add_parser("verify", parents=[common, shapes], help="exhaustive model agreement")
    s.add_argument("--max-weight", type=int, default=8)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--sample", type=int, help="verify a random subset of this size")
    s.add_argument("--seed", type=int, default=0)

    s = sub.add_parser("render", parents=[common], help="render a JSON object")
    s.add_argument("--input", help="JSON object file")
    s.add_argument("--format", choices=["ascii", "latex"], default="ascii")

    s = sub.add_parser("selftest", parents=[common], help="golden vectors and n=2 sweep")
    s.add_argument("--no-sweep", action="store_true")
    return p


def main(argv=None) -> int:
    _setup_logging()
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, HivebrError) as exc:
        print(f"hivebr {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
