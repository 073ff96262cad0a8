"""Command-line front end: construct algebras and run the verification
catalog, with deterministic JSON or text reports.

Exit codes: 0 all verifications pass, 1 a verification or construction
invariant failed, 2 usage error.  Identical (algebra, seed, trials) inputs
produce byte-identical JSON.  RANK1_THREADS caps the worker pool; reports
are assembled in the fixed lemma order no matter which worker finishes
first.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor

from . import einstein, lemmas
from .errors import Rank1LieError
from .liealg import build_algebra, root_decomposition
from .linalg import Q
from .serialize import SCHEMA_VERSION, to_json

LEMMA_IDS = [
    "transversality",
    "m1-identity",
    "abelian-bounds",
    "signature-J0",
    "derivation-dim",
    "root-table",
    "bracket-identities",
    "spin-facts",
    "hyperbolic-normal-form",
    "two-distributions",
    "embedding-signature",
    "null-isotropy",
    "orbit-dims",
]

# lemmas that only make sense for certain families; everything else runs
# for every algebra
_FAMILY_SCOPE = {
    "m1-identity": ("su", "sp"),
    "signature-J0": ("f4",),
    "derivation-dim": ("f4",),
    "bracket-identities": ("su", "sp", "f4"),
    "spin-facts": ("so", "f4"),
}

_HYPERBOLIC_INSTANCES = ((1, 1), (2, 3), (3, 5))
_DISTRIBUTION_INSTANCES = ((1, 2), (2, 2))


def parse_algebra(text: str) -> tuple[str, int]:
    """'so(1,k)': (family, k); 'f4': ('f4', 1).  ValueError on anything
    else, including k < 2 where the rank-one constructions degenerate."""
    text = text.strip()
    if text == "f4":
        return "f4", 1
    m = re.fullmatch(r"(so|su|sp)\(1,(\d+)\)", text)
    if not m:
        raise ValueError(
            f"cannot parse algebra {text!r}; expected so(1,k), su(1,k), "
            "sp(1,k) with k >= 2, or f4")
    k = int(m.group(2))
    if k < 2:
        raise ValueError(f"need k >= 2, got {text!r}")
    return m.group(1), k


def _skipped(lemma_id: str, name: str) -> dict:
    return {"lemma_id": lemma_id, "family": name, "parameters": {},
            "trials": 0, "passes": 0, "failures": [], "skipped": True,
            "reason": f"not applicable to {name}"}


def _merge(lemma_id: str, reports: list[dict]) -> dict:
    out = {"lemma_id": lemma_id, "family": "-",
           "parameters": {r["family"]: r["parameters"] for r in reports},
           "trials": sum(r["trials"] for r in reports),
           "passes": sum(r["passes"] for r in reports),
           "failures": []}
    for r in reports:
        for f in r["failures"]:
            tagged = dict(f)
            tagged["instance"] = r["family"]
            out["failures"].append(tagged)
    return out


def run_lemma(lemma_id: str, g, rd, seed: int, trials: int) -> dict:
    scope = _FAMILY_SCOPE.get(lemma_id)
    if scope and g.family not in scope:
        return _skipped(lemma_id, g.name)
    if lemma_id == "transversality":
        return lemmas.verify_transversality_formula(g, rd, trials=trials,
                                                    seed=seed)
    if lemma_id == "m1-identity":
        return lemmas.verify_m1_identity(g, rd, trials=trials, seed=seed)
    if lemma_id == "abelian-bounds":
        return lemmas.verify_abelian_bounds(g, rd, seed=seed)
    if lemma_id == "signature-J0":
        return lemmas.report_signature_j0()
    if lemma_id == "derivation-dim":
        return lemmas.report_derivation_dim()
    if lemma_id == "root-table":
        return lemmas.report_root_table(g, rd)
    if lemma_id == "bracket-identities":
        return lemmas.verify_bracket_identities(g, rd)
    if lemma_id == "spin-facts":
        return lemmas.verify_standard_rep_facts(g, rd)
    if lemma_id == "hyperbolic-normal-form":
        return _merge(lemma_id, [
            lemmas.verify_hyperbolic_normal_form(p, q, Q(1), seed=seed,
                                                 trials=trials)
            for p, q in _HYPERBOLIC_INSTANCES])
    if lemma_id == "two-distributions":
        return _merge(lemma_id, [lemmas.verify_two_distributions(p, q)
                                 for p, q in _DISTRIBUTION_INSTANCES])
    if lemma_id == "embedding-signature":
        return einstein.report_embedding_signature(g)
    if lemma_id == "null-isotropy":
        return einstein.report_null_isotropy(g, rd)
    if lemma_id == "orbit-dims":
        return einstein.orbit_dimension_table(g, rd)
    raise ValueError(f"unknown lemma {lemma_id!r}")


def _worker_count(n_tasks: int) -> int:
    env = os.environ.get("RANK1_THREADS", "")
    try:
        cap = int(env) if env else 4
    except ValueError:
        cap = 4
    return max(1, min(cap, n_tasks))


def cmd_verify(args) -> int:
    try:
        family, k = parse_algebra(args.algebra)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        g = build_algebra(family, k)
        rd = root_decomposition(g)
    except Rank1LieError as exc:
        print(f"error: construction failed: {exc}", file=sys.stderr)
        return 1
    ids = LEMMA_IDS if args.lemma == "all" else [args.lemma]
    with ThreadPoolExecutor(max_workers=_worker_count(len(ids))) as pool:
        futures = {lid: pool.submit(run_lemma, lid, g, rd, args.seed,
                                    args.trials) for lid in ids}
        reports = [futures[lid].result() for lid in ids]
    all_pass = all(not r["failures"] for r in reports)
    bundle = {"schema": SCHEMA_VERSION, "command": "verify",
              "algebra": g.name, "seed": args.seed, "trials": args.trials,
              "lemmas": reports, "all_pass": all_pass}
    if args.format == "json":
        sys.stdout.write(to_json(bundle))
    else:
        _print_text(bundle)
    return 0 if all_pass else 1


def _print_text(bundle: dict) -> None:
    print(f"algebra {bundle['algebra']}  seed {bundle['seed']}  "
          f"trials {bundle['trials']}")
    width = max(len(i) for i in LEMMA_IDS) + 2
    for r in bundle["lemmas"]:
        if r.get("skipped"):
            status = "skip"
        elif r["failures"]:
            status = "FAIL"
        else:
            status = "pass"
        print(f"{r['lemma_id']:<{width}}{status:<6}"
              f"{r['passes']}/{r['trials']}")
        for f in r["failures"]:
            print(f"    counterexample: {f}")
    print("result: " + ("all pass" if bundle["all_pass"] else "FAILURES"))


def cmd_construct(args) -> int:
    try:
        family, k = parse_algebra(args.algebra)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        g = build_algebra(family, k)
    except Rank1LieError as exc:
        print(f"error: construction failed: {exc}", file=sys.stderr)
        return 1
    ks = g.killing.sig
    pos = g.btheta.is_positive_definite()
    print(f"algebra: {g.name}")
    print(f"dim: {g.dim}")
    print(f"killing signature: ({ks[0]}, {ks[1]})")
    print(f"B_theta: {'positive definite' if pos else 'NOT positive definite'}")
    return 0 if pos and ks[2] == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rank1lie",
        description="Exact construction and verification of the rank-one "
                    "real simple Lie algebras and their flat conformal "
                    "models.")
    sub = parser.add_subparsers(dest="command", required=True)
    c = sub.add_parser("construct", help="build an algebra and print its "
                                         "basic invariants")
    c.add_argument("--algebra", required=True,
                   help="so(1,k), su(1,k), sp(1,k), or f4")
    c.set_defaults(func=cmd_construct)
    v = sub.add_parser("verify", help="run the verification catalog")
    v.add_argument("--algebra", required=True,
                   help="so(1,k), su(1,k), sp(1,k), or f4")
    v.add_argument("--lemma", default="all", choices=["all"] + LEMMA_IDS,
                   help="lemma id or 'all'")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--trials", type=int, default=100)
    v.add_argument("--format", default="json", choices=["json", "text"])
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
