"""Command line surface: classify, nerve, homology, poincare, artin,
resolution and genus subcommands over a JSON system file or a builtin
diagram name. Human-readable tables by default, machine output with
--json, nonzero exit with the message on stderr for invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys as _sys

from .artin import artin_complex, specialize, verify_polynomial_chain
from .classify import classify
from .coxeter import CoxeterSystem, parse_system
from .groups import DEFAULT_CAP
from .homology import d0_complex
from .nerve import build_nerve
from .poly import poincare_polynomial
from .report import MAX_REPORT_RANK, genus_report
from .resolution import (
    flag_count_bound,
    specialize_resolution,
    verify_sign_extension,
)


def _input_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", help="path to a system JSON file")
    p.add_argument("--builtin", help="builtin diagram name such as A3 or A~2")
    p.add_argument("--json", action="store_true", help="machine readable output")
    p.add_argument(
        "--cap",
        type=int,
        default=DEFAULT_CAP,
        help="largest parabolic order materialized (default %(default)s)",
    )


def _load_system(args) -> tuple[CoxeterSystem, str]:
    if (args.input is None) == (args.builtin is None):
        raise ValueError("give exactly one of: input file, --builtin NAME")
    if args.builtin is not None:
        sys_ = parse_system(args.builtin)
        name = args.builtin
    else:
        with open(args.input) as fh:
            sys_ = parse_system(json.load(fh))
        name = args.input
    if sys_.rank > MAX_REPORT_RANK:
        raise ValueError(
            f"rank {sys_.rank} exceeds the supported cap of {MAX_REPORT_RANK}"
        )
    return sys_, name


def _parse_subset(sys_: CoxeterSystem, text: str | None) -> tuple[int, ...]:
    if text is None:
        return sys_.full_subset()
    names = [t.strip() for t in text.split(",") if t.strip()]
    return tuple(sorted(sys_.index(n) for n in names))


def _emit(data: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(data, indent=2))
    else:
        print("\n".join(lines))


def _cmd_classify(args) -> int:
    sys_, _ = _load_system(args)
    subset = _parse_subset(sys_, args.subset)
    res = classify(sys_, subset)
    comps = [
        {"generators": [sys_.generators[i] for i in comp], "label": str(label)}
        for comp, label in res.components
    ]
    data = {
        "subset": [sys_.generators[i] for i in subset],
        "finite": res.finite,
        "components": comps,
        "order": res.order,
        "degrees": list(res.degrees) if res.degrees is not None else None,
    }
    lines = [f"subset: {', '.join(data['subset']) or '(empty)'}"]
    if res.finite:
        label = " x ".join(c["label"] for c in comps) or "trivial"
        lines.append(f"finite of type {label}, order {res.order}")
        lines.append(f"degrees: {data['degrees']}")
    else:
        lines.append("infinite")
    _emit(data, args.json, lines)
    return 0


def _cmd_nerve(args) -> int:
    sys_, _ = _load_system(args)
    K = build_nerve(sys_)
    simplices = [[list(K.names(J)) for J in level] for level in K.simplices]
    data = {
        "vd": K.vd,
        "counts": [len(level) for level in K.simplices],
        "simplices": simplices,
        "maximal": [list(K.names(J)) for J in K.maximal],
    }
    lines = [f"vd = {K.vd}", f"counts by cardinality: {data['counts']}"]
    for k, level in enumerate(simplices):
        lines.append(f"  [{k}] " + "  ".join("{" + ",".join(J) + "}" for J in level))
    lines.append(
        "maximal: " + "  ".join("{" + ",".join(J) + "}" for J in data["maximal"])
    )
    _emit(data, args.json, lines)
    return 0


def _cmd_homology(args) -> int:
    sys_, _ = _load_system(args)
    cx = d0_complex(build_nerve(sys_))
    groups = cx.homology_all()
    hvd = rhvd = None
    for k, h in enumerate(groups):
        if not h.is_trivial:
            hvd = k
        if h.free_rank > 0:
            rhvd = k
    data = {"homology": [str(h) for h in groups], "hvd": hvd, "rhvd": rhvd}
    lines = [f"H_{k} = {h}" for k, h in enumerate(groups)]
    lines.append(f"hvd = {hvd}, rhvd = {rhvd}")
    _emit(data, args.json, lines)
    return 0


def _cmd_poincare(args) -> int:
    sys_, _ = _load_system(args)
    subset = _parse_subset(sys_, args.subset)
    poly = poincare_polynomial(sys_, subset)
    data = {
        "subset": [sys_.generators[i] for i in subset],
        "coefficients": list(poly.coeffs),
    }
    _emit(data, args.json, [f"W(q) = {poly}", f"coefficients: {list(poly.coeffs)}"])
    return 0


def _cmd_artin(args) -> int:
    sys_, _ = _load_system(args)
    C = artin_complex(sys_)
    verify_polynomial_chain(C)
    S = specialize(C, args.q)
    groups = S.homology_all()
    data = {
        "dims": C.dims(),
        "boundaries": {
            str(k): [
                {"row": i, "col": j, "poly": list(p.coeffs)}
                for (i, j), p in sorted(C.entries[k].items())
            ]
            for k in range(1, C.top + 1)
        },
        "chainOk": True,
        "q": args.q,
        "specializedHomology": [str(h) for h in groups],
    }
    lines = [f"dims: {C.dims()}", "dd = 0: ok"]
    for k in range(1, C.top + 1):
        lines.append(f"boundary {k}:")
        for (i, j), p in sorted(C.entries[k].items()):
            lines.append(f"  ({i},{j}): {p}")
    lines.append(f"homology at q = {args.q}: {[str(h) for h in groups]}")
    _emit(data, args.json, lines)
    return 0


def _cmd_resolution(args) -> int:
    sys_, _ = _load_system(args)
    R = specialize_resolution(sys_, args.kmax, args.rep, args.cap)
    R.verify_chain()
    ext = verify_sign_extension(sys_, max(args.kmax - 1, 0), args.rep, args.cap)
    counts = R.complex.dims
    bounds = [flag_count_bound(sys_.rank, k) for k in range(args.kmax + 1)]
    data = {
        "rep": args.rep,
        "kmax": args.kmax,
        "dims": R.complex.dims,
        "flagBound": bounds,
        "chainOk": True,
        "signExtension": [
            {
                "degree": c.degree,
                "passed": c.passed,
                "deepColumns": c.deep_columns,
                "singleColumns": c.single_columns,
                "failures": len(c.failures),
            }
            for c in ext.checks
        ],
    }
    lines = [
        f"rep = {args.rep}, kmax = {args.kmax}",
        f"cell counts: {counts} (multiset bound {bounds})",
        "dd = 0: ok",
    ]
    for c in ext.checks:
        lines.append(
            f"extension degree {c.degree}: "
            f"{'pass' if c.passed else f'FAIL ({len(c.failures)} columns)'}"
            f"  [structural {c.deep_columns}, single {c.single_columns}]"
        )
    _emit(data, args.json, lines)
    return 0


def _cmd_genus(args) -> int:
    sys_, name = _load_system(args)
    rep = genus_report(sys_, name)
    if args.json:
        print(rep.to_json())
        return 0
    lines = [
        f"system: {rep.system_name} (rank {rep.rank})",
        f"vd = {rep.vd}, hvd = {rep.hvd}, rhvd = {rep.rhvd}",
        f"affine-like: {rep.affine_like}, all proper parabolics finite: "
        f"{rep.all_proper_finite}",
        f"genus in [{rep.genus_lower}, {rep.genus_upper}]"
        + (f", exactly {rep.genus_exact}" if rep.genus_exact is not None else ""),
        "homology of the nerve complex: " + ", ".join(rep.homology_table),
    ]
    for row in rep.poincare_table:
        lines.append(
            f"  W_{{{','.join(row['simplex'])}}}(q) coefficients: {row['poincare']}"
        )
    lines.extend("note: " + n for n in rep.notes)
    print("\n".join(lines))
    return 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="coxartin",
        description="Exact invariants of Coxeter and Artin systems",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="finite type classification of a subset")
    _input_arguments(p)
    p.add_argument("--subset", help="comma separated generator names")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("nerve", help="simplices and maximal faces of the nerve")
    _input_arguments(p)
    p.set_defaults(func=_cmd_nerve)

    p = sub.add_parser("homology", help="integral homology of the nerve complex")
    _input_arguments(p)
    p.set_defaults(func=_cmd_homology)

    p = sub.add_parser("poincare", help="length generating polynomial of a parabolic")
    _input_arguments(p)
    p.add_argument("--subset", help="comma separated generator names")
    p.set_defaults(func=_cmd_poincare)

    p = sub.add_parser("artin", help="polynomial chain complex and a specialization")
    _input_arguments(p)
    p.add_argument("--q", type=int, default=1, help="integer specialization point")
    p.set_defaults(func=_cmd_artin)

    p = sub.add_parser("resolution", help="truncated resolution under a rank one rep")
    _input_arguments(p)
    p.add_argument("--kmax", type=int, required=True, help="truncation degree")
    p.add_argument("--rep", choices=("sign", "trivial"), default="sign")
    p.set_defaults(func=_cmd_resolution)

    p = sub.add_parser("genus", help="genus bounds report")
    _input_arguments(p)
    p.set_defaults(func=_cmd_genus)

    return top


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
