"""Command-line surface: build/inspect codes, run the quantum pipelines,
reproduce the worked examples and the distance table, and search the
self-orthogonal exponent region for good quantum codes.

All subcommands print one JSON document with stable key order to stdout;
--pretty adds a human-readable rendering on stderr.  Exit codes: 0 ok,
2 parse/parameter, 3 precondition, 4 reproduction mismatch, 5 resource cap.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .codes import (BudgetError, CodeError, code_from_descriptor,
                    code_from_exponents, hermitian_dual)
from .cyclo import CycloError, build_cosets
from .distance import min_distance_auto
from .gf import FieldError, get_field
from .maps import GrayMatrix, gray_image_code
from .quantum import (NotSelfOrthogonalError, hermitian_construction,
                      symplectic_construction)
from .reproduce import TARGETS, reproduce

EXIT_OK = 0
EXIT_PARAM = 2
EXIT_PRECONDITION = 3
EXIT_MISMATCH = 4
EXIT_RESOURCE = 5


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _emit(obj, pretty_lines=None, pretty=False) -> None:
    print(json.dumps(obj, separators=(",", ":")))
    if pretty and pretty_lines:
        print("\n".join(pretty_lines), file=sys.stderr)


def _field_args(p: argparse.ArgumentParser, need_exponents=False) -> None:
    p.add_argument("--p", type=int, help="prime characteristic")
    p.add_argument("--m", type=int, help="half-degree: q = p^(2m)")
    p.add_argument("--alpha", help="unit with alpha*conj(alpha)=1, e.g. 'w^4'")
    p.add_argument("--n", type=int, help="coprime-to-p length part")
    p.add_argument("--e", type=int, default=0, help="power-of-p exponent: N = p^e n")
    p.add_argument("--modulus", default="builtin",
                   help="field modulus coefficients over F_p, ascending ('builtin')")
    if need_exponents:
        p.add_argument("--exponents",
                       help="'rep=a,rep=a,...' exponent of each coset generator")


def _build_cosets_from_args(args):
    if None in (args.p, args.m, args.alpha, args.n):
        raise CliError("--p, --m, --alpha and --n are required "
                       "(unless --descriptor is given)", EXIT_PARAM)
    modulus = args.modulus
    if modulus != "builtin":
        modulus = tuple(int(c) for c in modulus.split(","))
    try:
        F = get_field(args.p, args.m, modulus)
        alpha = F.parse_element(args.alpha)
        return build_cosets(F, alpha, args.n, args.e)
    except (FieldError, CycloError, ValueError) as exc:
        raise CliError(str(exc), EXIT_PARAM) from exc


def _parse_exponents(cs, text: str) -> dict[int, int]:
    exps = {}
    try:
        for part in text.split(","):
            rep, val = part.split("=")
            exps[int(rep.strip())] = int(val.strip())
    except ValueError as exc:
        raise CliError(f"cannot parse exponents {text!r}", EXIT_PARAM) from exc
    return exps


def _load_code(args):
    """Code from --descriptor (path or '-') or from inline field arguments."""
    if getattr(args, "descriptor", None):
        try:
            raw = (sys.stdin.read() if args.descriptor == "-"
                   else open(args.descriptor, encoding="utf-8").read())
            return code_from_descriptor(json.loads(raw))
        except (OSError, json.JSONDecodeError, KeyError, FieldError,
                CycloError, CodeError, ValueError) as exc:
            raise CliError(f"bad descriptor: {exc}", EXIT_PARAM) from exc
    if args.exponents is None:
        raise CliError("need --exponents or --descriptor", EXIT_PARAM)
    cs = _build_cosets_from_args(args)
    try:
        return code_from_exponents(cs, _parse_exponents(cs, args.exponents))
    except CodeError as exc:
        raise CliError(str(exc), EXIT_PARAM) from exc


# -- subcommands -------------------------------------------------------------

def cmd_factor(args) -> int:
    cs = _build_cosets_from_args(args)
    out = cs.to_json_dict()
    lines = [f"x^{cs.n} - {cs.field.format_element(cs.beta)} over GF({cs.field.q}):"]
    for c, poly in zip(out["cosets"], out["polys"]):
        lines.append(f"  C_{c['rep']} {c['kind']:4s} partner={c['partner']:3d} "
                     f"deg={c['degree']}  M = {poly}")
    _emit(out, lines, args.pretty)
    return EXIT_OK


def cmd_code(args) -> int:
    C = _load_code(args)
    _emit(C.to_json_dict(),
          [f"|C| = q^{C.size_log_q}, N = {C.N}"], args.pretty)
    return EXIT_OK


def cmd_dual(args) -> int:
    C = _load_code(args)
    D = hermitian_dual(C)
    _emit(D.to_json_dict(),
          [f"|C^perpH| = q^{D.size_log_q}"], args.pretty)
    return EXIT_OK


def cmd_gray(args) -> int:
    C = _load_code(args)
    F = C.field
    try:
        M = (GrayMatrix.parse(F, args.gray_matrix) if args.gray_matrix
             else GrayMatrix.default_compatible(F, C.cs.alpha))
        img = gray_image_code(M, C)
    except CodeError as exc:
        raise CliError(str(exc), EXIT_PRECONDITION) from exc
    out = {
        "field": {"p": F.p, "m": F.m},
        "gray_matrix": M.format(),
        "length": img.length,
        "dimension": img.dimension,
        "shift": F.format_element(img.shift),
        "generator_poly": F.format_poly(img.gen_poly),
    }
    if args.with_distance:
        res = _distance(img, args)
        out["d"] = res.d
        out["d_exact"] = res.exact
    _emit(out, [f"Phi_M(C) = [{img.length}, {img.dimension}] over GF({F.q})"],
          args.pretty)
    return EXIT_OK


def _distance(code, args):
    try:
        return min_distance_auto(code, budget=args.budget, d_cap=args.d_cap,
                                 jobs=args.jobs)
    except BudgetError as exc:
        raise CliError(str(exc), EXIT_RESOURCE) from exc


def cmd_quantum(args) -> int:
    C = _load_code(args)
    try:
        if args.construction == "symplectic":
            qp = symplectic_construction(C, budget=args.budget,
                                         d_cap=args.d_cap, jobs=args.jobs)
        else:
            F = C.field
            if F.p != 2:
                raise CliError("hermitian construction requires p = 2",
                               EXIT_PARAM)
            M = (GrayMatrix.parse(F, args.gray_matrix) if args.gray_matrix
                 else GrayMatrix.default_compatible(F, C.cs.alpha))
            D = gray_image_code(M, C)
            qp = hermitian_construction(D, budget=args.budget,
                                        d_cap=args.d_cap, jobs=args.jobs,
                                        source=C.to_json_dict())
    except NotSelfOrthogonalError as exc:
        raise CliError(f"not self-orthogonal: {exc}", EXIT_PRECONDITION) from exc
    except BudgetError as exc:
        raise CliError(str(exc), EXIT_RESOURCE) from exc
    except CodeError as exc:
        raise CliError(str(exc), EXIT_PRECONDITION) from exc
    _emit(qp.to_json_dict(), [qp.params_str()], args.pretty)
    return EXIT_OK


def _so_region(cs, fixed: dict[int, int]):
    """Exponent vectors of the corrected self-orthogonality region."""
    pe = cs.p ** cs.e
    cap = cs.cap
    sym = [c.rep for c in cs.cosets if c.kind == "sym"]
    pairs = sorted({tuple(sorted((c.rep, c.partner)))
                    for c in cs.cosets if c.kind == "asym"})

    def choices(rep, lo, hi):
        if rep in fixed:
            v = fixed[rep]
            return [v] if lo <= v <= hi else []
        return list(range(lo, hi + 1))

    sym_choices = [[(r, v) for v in choices(r, pe, cap)] for r in sym]
    pair_choices = []
    for a, b in pairs:
        opts = [
            ((a, va), (b, vb))
            for va in choices(a, 0, cap)
            for vb in choices(b, 0, cap)
            if va + vb >= 2 * pe
        ]
        pair_choices.append(opts)
    for combo in itertools.product(*sym_choices, *pair_choices):
        exps = {}
        for item in combo:
            if isinstance(item[0], tuple):
                for rep, v in item:
                    exps[rep] = v
            else:
                exps[item[0]] = item[1]
        yield exps


def _region_size(cs, fixed) -> int:
    count = 1
    pe, cap = cs.p ** cs.e, cs.cap
    sym = [c.rep for c in cs.cosets if c.kind == "sym"]
    pairs = sorted({tuple(sorted((c.rep, c.partner)))
                    for c in cs.cosets if c.kind == "asym"})
    for r in sym:
        if r in fixed:
            count *= 1 if pe <= fixed[r] <= cap else 0
        else:
            count *= cap - pe + 1
    for a, b in pairs:
        opts = 0
        for va in ([fixed[a]] if a in fixed else range(cap + 1)):
            for vb in ([fixed[b]] if b in fixed else range(cap + 1)):
                if 0 <= va <= cap and 0 <= vb <= cap and va + vb >= 2 * pe:
                    opts += 1
        count *= opts
    return count


def _search_one(payload):
    desc, construction, budget, d_cap = payload
    C = code_from_descriptor(desc)
    try:
        if construction == "symplectic":
            qp = symplectic_construction(C, budget=budget, d_cap=d_cap)
        else:
            M = GrayMatrix.default_compatible(C.field, C.cs.alpha)
            qp = hermitian_construction(gray_image_code(M, C), budget=budget,
                                        d_cap=d_cap, source=C.to_json_dict())
    except (NotSelfOrthogonalError, BudgetError):
        return None
    return qp.to_json_dict()


def cmd_search(args) -> int:
    cs = _build_cosets_from_args(args)
    fixed = _parse_exponents(cs, args.fix) if args.fix else {}
    unknown = set(fixed) - set(cs.reps)
    if unknown:
        raise CliError(f"--fix names unknown coset representative(s) "
                       f"{sorted(unknown)}", EXIT_PARAM)
    size = _region_size(cs, fixed)
    if size > args.max_region:
        print(f"region size {size} exceeds cap {args.max_region}",
              file=sys.stderr)
        return EXIT_RESOURCE
    if args.construction == "hermitian" and cs.p != 2:
        raise CliError("hermitian construction requires p = 2", EXIT_PARAM)
    payloads = []
    for exps in _so_region(cs, fixed):
        C = code_from_exponents(cs, exps)
        payloads.append((C.to_json_dict(), args.construction, args.budget,
                         args.d_cap))
    if args.jobs > 1 and payloads:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_search_one, payloads))
    else:
        results = [_search_one(p) for p in payloads]
    results = [r for r in results if r is not None]

    def key(r):
        exps = tuple(r["source"]["exponents"][k]
                     for k in sorted(r["source"]["exponents"], key=int))
        return (-r["d"], -r["k"], exps)

    results.sort(key=key)
    results = results[: args.top]
    out = {"region_size": size, "results": results}
    lines = [f"{r['construction']} [[{r['n']},{r['k']},{r['d']}]]_{r['q']}"
             + (" MDS" if r["mds"] else "") for r in results]
    _emit(out, lines, args.pretty)
    return EXIT_OK


def cmd_reproduce(args) -> int:
    try:
        rep = reproduce(args.target, jobs=args.jobs)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PARAM) from exc
    lines = []
    for e in rep["report"]:
        lines.append(f"{e['target']:13s} {e['status']}")
        for n in e["notes"]:
            lines.append(f"    - {n}")
    _emit(rep, lines, args.pretty)
    return EXIT_OK if rep["all_match"] else EXIT_MISMATCH


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ringcode",
        description="alpha(1+u)-constacyclic codes over F_q + uF_q and the "
                    "quantum codes they produce")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, exponents=False, descriptor=False, engines=False):
        if exponents:
            _field_args(p, need_exponents=True)
        else:
            _field_args(p)
        if descriptor:
            p.add_argument("--descriptor",
                           help="code descriptor JSON path ('-' for stdin); "
                                "overrides inline arguments")
        if engines:
            p.add_argument("--d-cap", type=int, default=8,
                           help="column-rank engine cap (default 8)")
            p.add_argument("--budget", type=int, default=None,
                           help="exhaustive engine codeword budget "
                                "(default 2^26; env RINGCODE_BUDGET)")
            p.add_argument("--jobs", type=int, default=1,
                           help="worker count (results independent of it)")
        p.add_argument("--pretty", action="store_true",
                       help="human-readable rendering on stderr")

    p = sub.add_parser("factor", help="coset structure and factors of x^n - beta")
    common(p)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("code", help="build a code descriptor from exponents")
    p.add_argument("--descriptor", help="descriptor JSON path ('-' for stdin)")
    common(p, exponents=True)
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("dual", help="Hermitian dual of a code")
    p.add_argument("--descriptor", help="descriptor JSON path ('-' for stdin)")
    common(p, exponents=True)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("gray", help="Gray image of a code (p = 2)")
    p.add_argument("--descriptor", help="descriptor JSON path ('-' for stdin)")
    common(p, exponents=True, engines=True)
    p.add_argument("--gray-matrix", help="'a,b;s,t' in gf element syntax")
    p.add_argument("--with-distance", action="store_true")
    p.set_defaults(func=cmd_gray)

    p = sub.add_parser("quantum", help="quantum parameters from a code")
    p.add_argument("--descriptor", help="descriptor JSON path ('-' for stdin)")
    common(p, exponents=True, engines=True)
    p.add_argument("--construction", choices=("hermitian", "symplectic"),
                   required=True)
    p.add_argument("--gray-matrix", help="'a,b;s,t' (hermitian construction)")
    p.set_defaults(func=cmd_quantum)

    p = sub.add_parser("search", help="search the self-orthogonal exponent region")
    common(p, engines=True)
    p.add_argument("--construction", choices=("hermitian", "symplectic"),
                   default="symplectic")
    p.add_argument("--fix", help="pin exponents 'rep=a,...' (region constraints)")
    p.add_argument("--top", type=int, default=20, help="result cap")
    p.add_argument("--max-region", type=int, default=1_000_000,
                   help="refuse regions larger than this (exit 5)")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("reproduce", help="recompute worked examples / the table")
    p.add_argument("target", nargs="+",
                   choices=list(TARGETS) + ["all"],
                   help="targets, or 'all'")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_reproduce)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
