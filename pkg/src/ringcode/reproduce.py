"""Recompute the worked examples and the distance table from first principles.

Each target reports status "match" / "discrepant" / "skipped" with computed
values, printed values, and notes.  Two targets are permanently flagged
discrepant-with-notes: the length-6 example over F_16 (its printed root list
is inconsistent and its quantum dimension does not recompute) and the
length-34 example over F_4 (its printed factor polynomials are not factors;
its ideal-level claims are reproduced under a canonical label map).
"""

from __future__ import annotations

from .codes import (code_from_exponents,
                    gram_self_orthogonality_check, hermitian_dual,
                    is_hermitian_self_orthogonal, torsion)
from .cyclo import build_cosets, dagger, poly_norm
from .distance import min_distance_column_rank, min_distance_exhaustive
from .gf import FieldSpec, get_field
from .maps import (GrayMatrix, gray_image_code, gray_image_rows,
                   trace_orthogonality_transfer)
from .quantum import (QuantumParams, hermitian_construction,
                      hermitian_dual_code_F, hermitian_gram_is_zero,
                      symplectic_construction)

__all__ = ["TARGETS", "FLAGGED", "reproduce"]

TARGETS = ("example4.7", "example4.10", "example4.13",
           "example5.10", "example5.11", "table1")

# targets whose printed values are known-inconsistent; they report
# discrepant-with-notes and do not fail the run
FLAGGED = ("example4.10", "example4.13")


def poly_display(F: FieldSpec, coeffs) -> str:
    """Human form 'x^2 + w^5*x + 1' (descending powers)."""
    coeffs = poly_norm(coeffs)
    if not coeffs:
        return "0"
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        cn = F.format_element(c)
        if i == 0:
            terms.append(cn)
        else:
            x = "x" if i == 1 else f"x^{i}"
            terms.append(x if cn == "1" else f"{cn}*{x}")
    return " + ".join(terms)


def _match_factors(cs, factor_strings: list[str]) -> list[int] | None:
    """Map printed factor polynomials to coset reps; None when any is missing."""
    F = cs.field
    by_poly = {cs.min_polys[r]: r for r in cs.reps}
    reps = []
    for s in factor_strings:
        poly = poly_norm(F.parse_poly(s))
        if poly not in by_poly:
            return None
        reps.append(by_poly[poly])
    return reps


def _dual_printed_pipeline(cs, dual_reps: list[int], d_cap: int, jobs: int,
                           engines: str = "column-rank"):
    """The table pipeline: printed generator of C^perpH -> Tor -> distance.

    k (the classical size exponent) equals the degree of the printed
    generator; the quantum parameters are [[n, n - k, d]].
    """
    D = code_from_exponents(cs, {r: 2 for r in dual_reps})
    T = torsion(D)
    if engines == "both":
        r1 = min_distance_exhaustive(T, jobs=jobs)
        r2 = min_distance_column_rank(T, d_cap=d_cap, jobs=jobs)
        if r1.d != r2.d or not r2.exact:
            raise AssertionError(
                f"engines disagree: exhaustive {r1.d} vs column-rank {r2.d}")
        res = r1
    elif engines == "exhaustive":
        res = min_distance_exhaustive(T, jobs=jobs)
    else:
        res = min_distance_column_rank(T, d_cap=d_cap, jobs=jobs)
    k = 2 * cs.N - D.size_log_q
    return D, T, res, k


def _entry(target, status, computed, paper, notes):
    return {"target": target, "status": status, "computed": computed,
            "paper": paper, "notes": notes}


# ---------------------------------------------------------------------------
# individual targets
# ---------------------------------------------------------------------------

def _example_5_10(jobs: int) -> dict:
    F = get_field(3, 1)
    cs = build_cosets(F, F.w(4), 5, 0)
    notes = []
    reps = _match_factors(cs, ["1,1", "1,w^5,1", "1,w^7,1"])
    if reps is None:
        return _entry("example5.10", "discrepant", {}, {},
                      ["printed factorization does not match"])
    f0, f1, f2 = reps
    C = code_from_exponents(cs, {f0: 2, f2: 2})
    so = (is_hermitian_self_orthogonal(C)
          and gram_self_orthogonality_check(C)
          and trace_orthogonality_transfer(C)[0])
    dual = hermitian_dual(C)
    dual_ok = dual.exponents == {f0: 0, f1: 0, f2: 2}
    tor = torsion(dual)
    tor_ok = tor.gen_poly == cs.min_polys[f2]
    res = min_distance_exhaustive(tor, jobs=jobs)
    qp = symplectic_construction(C, jobs=jobs)
    computed = {
        "factors": [poly_display(F, cs.min_polys[r]) for r in cs.reps],
        "self_orthogonal": so,
        "dual_generator": "(x^2 + w^7*x + 1)^2" if dual_ok else "UNEXPECTED",
        "tor_dual_code": [tor.length, tor.dimension],
        "d": res.d,
        "d_method": res.method,
        "params": qp.params_str(),
        "mds": qp.mds,
    }
    paper = {"d": 3, "params": "[[5,1,3]]_3", "mds": True,
             "dual_generator": "(f2)^2", "tor": "<f2>"}
    status = "match" if (so and dual_ok and tor_ok and res.d == 3
                         and qp.n == 5 and qp.k == 1 and qp.d == 3
                         and qp.mds) else "discrepant"
    return _entry("example5.10", status, computed, paper, notes)


def _example_5_11(jobs: int) -> dict:
    F = get_field(3, 1)
    cs = build_cosets(F, F.w(4), 10, 0)
    strings = ["w^2,1", "w^6,1", "2,w,1", "2,w^3,1", "2,w^5,1", "2,w^7,1"]
    reps = _match_factors(cs, strings)
    if reps is None:
        return _entry("example5.11", "discrepant", {}, {},
                      ["printed factorization does not match"])
    f = dict(zip(["f0", "f1", "f2", "f3", "f4", "f5"], reps))
    notes = []
    # the printed dagger pairings are inconsistent with dagger = monic
    # conjugate-reciprocal; record the computed pairing
    pair = {}
    for name, r in f.items():
        dpoly = dagger(F, cs.min_polys[r])
        partner = next(nm for nm, rr in f.items()
                       if cs.min_polys[rr] == dpoly)
        pair[name] = partner
    if pair != {"f0": "f0", "f1": "f1", "f2": "f5", "f3": "f4",
                "f4": "f3", "f5": "f2"}:
        notes.append("unexpected dagger pairing")
    notes.append(
        "computed dagger pairing is f0->f0, f1->f1, f2<->f5, f3<->f4; the "
        "printed claims f1^dagger = f0 and f5^dagger = f4 are the plain "
        "reciprocal (Euclidean) pairing, not the conjugate-reciprocal one")
    C_printed = code_from_exponents(cs, {f["f0"]: 2, f["f2"]: 2,
                                         f["f3"]: 2, f["f4"]: 2})
    notes.append(
        "the printed code <f0^2 f2^2 f3^2 f4^2> is NOT Hermitian "
        "self-orthogonal under the corrected pairing (exponent 0 on the "
        "dagger-fixed coset of f1): "
        f"exponent test = {is_hermitian_self_orthogonal(C_printed)}")
    true_dual = hermitian_dual(C_printed)
    notes.append(
        "its true Hermitian dual is <f1^2 f2^2>, reciprocal-equivalent to "
        "the printed <f0^2 f4^2> (identical weight distribution): "
        f"{'confirmed' if true_dual.exponents == {f['f1']: 2, f['f2']: 2, f['f0']: 0, f['f3']: 0, f['f4']: 0, f['f5']: 0} else 'UNEXPECTED'}")
    # as-printed pipeline on the printed dual generator
    D, T, res, k = _dual_printed_pipeline(cs, [f["f0"], f["f4"]], d_cap=7,
                                          jobs=jobs, engines="both")
    # the equivalent true-dual torsion code must carry the same distance
    T_true = torsion(true_dual)
    res_true = min_distance_column_rank(T_true, d_cap=7, jobs=jobs)
    notes.append(f"d(Tor(true dual)) = {res_true.d} agrees with the printed "
                 f"pipeline's d = {res.d}")
    qp = QuantumParams(n=cs.N, k=cs.N - k, d=res.d, d_exact=res.exact,
                       q_base=3, construction="symplectic",
                       source=D.to_json_dict())
    computed = {
        "factors": [poly_display(F, cs.min_polys[r]) for r in cs.reps],
        "tor_dual_code": [T.length, T.dimension],
        "d": res.d,
        "d_engines": "exhaustive+column-rank",
        "params": qp.params_str(),
        "mds": qp.mds,
    }
    paper = {"d": 4, "params": "[[10,4,4]]_3", "mds": True}
    status = "match" if (res.d == 4 and qp.n == 10 and qp.k == 4
                         and res_true.d == res.d and qp.mds) else "discrepant"
    return _entry("example5.11", status, computed, paper, notes)


def _example_4_7(jobs: int) -> dict:
    F = get_field(2, 1)
    cs = build_cosets(F, F.w(1), 5, 1)
    reps = _match_factors(cs, ["w,1", "w^2,1,1", "w^2,w^2,1"])
    if reps is None:
        return _entry("example4.7", "discrepant", {}, {},
                      ["printed factorization does not match"])
    f0, f1, f2 = reps
    notes = []
    # printed: f1^dagger = f1; computed: dagger swaps f1 <-> f2
    d1 = dagger(F, cs.min_polys[f1])
    if d1 == cs.min_polys[f2]:
        notes.append(
            "printed claim f1^dagger = f1 is incorrect; computed dagger "
            "swaps f1 <-> f2, so C^perpH = <f0^3 f2> (weight-equivalent to "
            "the printed <f0^3 f1>)")
    C = code_from_exponents(cs, {f0: 1, f1: 3, f2: 4})
    dualC = hermitian_dual(C)
    dual_ok = dualC.exponents == {f0: 3, f1: 0, f2: 1}
    M = GrayMatrix.default_compatible(F, cs.alpha)
    img = gray_image_code(M, dualC)
    transport_ok = img.gen_rows == gray_image_rows(M, dualC)
    res = min_distance_column_rank(img, d_cap=5, jobs=jobs)
    computed = {
        "dual_generator": "f0^3 * f2",
        "gray_image": [img.length, img.dimension],
        "transport_matches_image_span": transport_ok,
        "d": res.d,
        "params": f"[{img.length}, {img.dimension}, {res.d}]_4",
    }
    paper = {"gray_image": [20, 15], "d": 4, "params": "[20, 15, 4]_4"}
    status = "match" if (dual_ok and transport_ok and img.length == 20
                         and img.dimension == 15 and res.d == 4) else "discrepant"
    return _entry("example4.7", status, computed, paper, notes)


def _example_4_10(jobs: int) -> dict:
    F = get_field(2, 1)
    cs = build_cosets(F, F.w(1), 17, 1)
    notes = []
    degs = sorted(cs.poly_degree(r) for r in cs.reps)
    profile_ok = degs == [1, 4, 4, 4, 4]
    printed = {
        "M0": "w,1",
        "M1": "w,1,w,1,1",       # x^4+x^3+w x^2+x+w, mod-u part of the print
        "M2": "w,1,w^2,1,1",
        "M3": "w,w,1,w,1",
        "M6": "w,w^2,1,w^2,1",
    }
    present = {name: _match_factors(cs, [s]) is not None
               for name, s in printed.items()}
    notes.append(
        "the printed factors carry u-coefficients over R; their mod-u parts "
        f"are factors of x^17 - beta for {sorted(k for k, v in present.items() if v)} "
        f"only -- the four printed quartics are not factors "
        "(the computed field-coefficient factorization is used instead)")
    # canonical label map: M0 = the symmetric linear coset; pairs by rep order
    sym = [c for c in cs.cosets if c.kind == "sym"]
    pairs = sorted({tuple(sorted((c.rep, c.partner)))
                    for c in cs.cosets if c.kind == "asym"})
    if len(sym) != 1 or len(pairs) != 2:
        return _entry("example4.10", "discrepant",
                      {"coset_profile": degs}, {},
                      notes + ["unexpected coset structure"])
    lab = {"M0": sym[0].rep,
           "M1": pairs[0][0], "M2": pairs[0][1],
           "M3": pairs[1][0], "M6": pairs[1][1]}
    notes.append(
        "paper labels are mapped canonically: M0 = the dagger-fixed linear "
        "factor, (M1,M2) and (M3,M6) = the two dagger pairs in coset-"
        "representative order (the printed polynomials cannot pin the map)")
    C = code_from_exponents(cs, {lab["M0"]: 2, lab["M1"]: 4,
                                 lab["M3"]: 4, lab["M6"]: 2})
    so_exp = is_hermitian_self_orthogonal(C)
    so_gram = gram_self_orthogonality_check(C)
    dualC = hermitian_dual(C)
    # printed C^perpH = (M0^dag)^2 (M2^dag)^4 (M6^dag)^2 with M0^dag = M0,
    # M2^dag = M1, M6^dag = M3
    expected_dual = {lab["M0"]: 2, lab["M1"]: 4, lab["M3"]: 2,
                     lab["M2"]: 0, lab["M6"]: 0}
    dual_ok = dualC.exponents == expected_dual
    computed = {
        "factors": [poly_display(F, cs.min_polys[r]) for r in cs.reps],
        "degree_profile": degs,
        "self_orthogonal_exponent_test": so_exp,
        "self_orthogonal_gram_test": so_gram,
        "containment_claim": so_exp and so_gram,
        "dual_matches_printed_formula": dual_ok,
        "size_log_q": C.size_log_q,
    }
    paper = {"degree_profile": [1, 4, 4, 4, 4],
             "containment_claim": True,
             "dual": "(M0^dag)^2 (M2^dag)^4 (M6^dag)^2"}
    ok = profile_ok and so_exp and so_gram and dual_ok
    # flagged target: the factor-print divergence keeps it discrepant-with-notes
    if not ok:
        notes.append("structural reproduction FAILED")
    else:
        notes.append("code, containment, and dual structure reproduced in "
                     "field-coefficient form")
    return _entry("example4.10", "discrepant", computed, paper, notes)


def _example_4_13(jobs: int) -> dict:
    F = get_field(2, 2)
    cs = build_cosets(F, F.w(6), 3, 1)
    notes = []
    roots = sorted(F.log(F.neg(cs.min_polys[r][0])) for r in cs.reps)
    notes.append(
        f"computed roots of x^3 - w^3 are w^{{{roots[0]},{roots[1]},{roots[2]}}}; "
        "the printed root set {w^3, w^8, w^13} multiplies to w^9 != beta = w^3 "
        "and is inconsistent")
    sym = [c for c in cs.cosets if c.kind == "sym"]
    pairs = sorted({tuple(sorted((c.rep, c.partner)))
                    for c in cs.cosets if c.kind == "asym"})
    C = code_from_exponents(cs, {pairs[0][0]: 4, pairs[0][1]: 4,
                                 sym[0].rep: 2})
    so = is_hermitian_self_orthogonal(C) and gram_self_orthogonality_check(C)
    M = GrayMatrix.default_compatible(F, cs.alpha)
    D = gray_image_code(M, C)
    transport_ok = D.gen_rows == gray_image_rows(M, C)
    gram_ok, _ = hermitian_gram_is_zero(F, D.gen_rows)
    qp = hermitian_construction(D, jobs=jobs, source=C.to_json_dict())
    dual_img = gray_image_code(M, hermitian_dual(C))
    dual_direct = hermitian_dual_code_F(D)
    dual_transport_ok = dual_img.gen_rows == dual_direct.gen_rows
    computed = {
        "beta": F.format_element(cs.beta),
        "roots": [f"w^{r}" for r in roots],
        "ring_code_self_orthogonal": so,
        "gray_image": [D.length, D.dimension],
        "gray_image_gram_self_orthogonal": gram_ok,
        "transport_matches_image_span": transport_ok,
        "image_dual_matches_dual_image": dual_transport_ok,
        "d": qp.d,
        "params": qp.params_str(),
        "singleton_slack": (qp.n - 2 * qp.d + 2) - qp.k,
    }
    paper = {"roots": ["w^3", "w^8", "w^13"], "params": "[[12,10,2]]_4",
             "mds": True}
    notes.append(
        f"recomputed parameters {qp.params_str()} differ from the printed "
        "[[12,10,2]]_4: the Gray image is a [12, 2] code, so the Hermitian "
        "construction yields quantum dimension 12 - 2*2 = 8, not 10")
    ok = (so and gram_ok and transport_ok and dual_transport_ok
          and qp.n == 12 and qp.k == 8)
    if not ok:
        notes.append("internal reproduction checks FAILED")
    return _entry("example4.13", "discrepant", computed, paper, notes)


TABLE1_ROWS = [
    # (n, printed generator display, factor strings, printed d, printed params)
    (14, "(x+w^2)^2 (x^3+w^3*x^2+w^3*x+w^2)^2",
     ["w^2,1", "w^2,w^3,w^3,1"], 4, (14, 6, 4)),
    (20, "(x+w^3)^2 (x^2+w^2*x+w^2)^2",
     ["w^3,1", "w^2,w^2,1"], 3, (20, 14, 3)),
    (20, "(x+w^3)^2 (x+w^5)^2 (x^2+w^6*x+w^6)^2",
     ["w^3,1", "w^5,1", "w^6,w^6,1"], 4, (20, 12, 4)),
    (40, "(x^2+w^5)^2 (x^2+w^3*x+w^7)^2 (x^2+w^5*x+w^3)^2 (x^2+w^7*x+w)^2",
     ["w^5,0,1", "w^7,w^3,1", "w^3,w^5,1", "w,w^7,1"], 6, (40, 24, 6)),
    (61, "(x^5+w^5*x^3+w^7*x^2+1)^2",
     ["1,0,w^7,w^5,0,1"], 4, (61, 51, 4)),
    (70, "(x+w^6)^2 (x^2+w^5*x+2)^2 (x^3+w*x^2+w*x+w^6)^2",
     ["w^6,1", "2,w^5,1", "w^6,w,w,1"], 4, (70, 58, 4)),
    (82, "(x+w^6)^2 (x^4+w^7*x^3+w*x^2+w^3*x+1)^2",
     ["w^6,1", "1,w^3,w,w^7,1"], 4, (82, 72, 4)),
]


def _table1(jobs: int) -> dict:
    F = get_field(3, 1)
    rows_out = []
    notes = [
        "row 7's printed quartic 'x^4+w^7x^3+w x+w^3x+1' is read as "
        "x^4+w^7*x^3+w*x^2+w^3*x+1 (a genuine factor; the printed form "
        "drops the square on one term)",
    ]
    all_ok = True
    for idx, (n, display, facs, d_paper, params_paper) in enumerate(TABLE1_ROWS, 1):
        cs = build_cosets(F, F.w(4), n, 0)
        reps = _match_factors(cs, facs)
        if reps is None:
            rows_out.append({"row": idx, "n": n, "status": "discrepant",
                             "note": "printed factors not found"})
            all_ok = False
            continue
        D, T, res, k = _dual_printed_pipeline(cs, reps, d_cap=7, jobs=jobs)
        qp = QuantumParams(n=n, k=n - k, d=res.d, d_exact=res.exact,
                           q_base=3, construction="symplectic",
                           source=D.to_json_dict())
        derived_C_so = is_hermitian_self_orthogonal(hermitian_dual(D))
        ok = (res.exact and res.d == d_paper
              and (qp.n, qp.k, qp.d) == params_paper)
        all_ok = all_ok and ok
        row = {
            "row": idx,
            "n": n,
            "generator": display,
            "tor_code": [T.length, T.dimension],
            "d": res.d,
            "params": qp.params_str(),
            "paper_d": d_paper,
            "paper_params": f"[[{params_paper[0]},{params_paper[1]},{params_paper[2]}]]_3",
            "two_d_eq_n_minus_k": qp.two_d_eq_n_minus_k,
            "derived_code_exponent_self_orthogonal": derived_C_so,
            "status": "match" if ok else "discrepant",
        }
        rows_out.append(row)
    notes.append(
        "rows whose derived code fails the exponent self-orthogonality test "
        "(dagger-fixed cosets with exponent 0) inherit the reciprocal-vs-"
        "conjugate-reciprocal mixup also seen in the length-10 example; the "
        "printed generator-to-distance pipeline is reproduced as printed")
    first3 = [r for r in rows_out[:3]]
    sat_ok = all(r.get("two_d_eq_n_minus_k") for r in first3)
    status = "match" if all_ok and sat_ok else "discrepant"
    computed = {"rows": rows_out, "rows_1_to_3_satisfy_2d_eq_n_minus_k": sat_ok}
    paper = {"rows": [{"n": n, "d": d, "params": f"[[{p[0]},{p[1]},{p[2]}]]_3"}
                      for n, _, _, d, p in TABLE1_ROWS]}
    return _entry("table1", status, computed, paper, notes)


_RUNNERS = {
    "example4.7": _example_4_7,
    "example4.10": _example_4_10,
    "example4.13": _example_4_13,
    "example5.10": _example_5_10,
    "example5.11": _example_5_11,
    "table1": _table1,
}


def reproduce(targets, jobs: int = 1) -> dict:
    """Run reproduction targets; 'all' expands to every target in order."""
    if isinstance(targets, str):
        targets = [targets]
    expanded: list[str] = []
    for t in targets:
        if t == "all":
            expanded.extend(TARGETS)
        elif t in _RUNNERS:
            expanded.append(t)
        else:
            raise ValueError(f"unknown reproduction target {t!r}")
    report = [_RUNNERS[t](jobs) for t in expanded]
    ok = all(e["status"] == "match" for e in report
             if e["target"] not in FLAGGED)
    return {"report": report, "all_match": ok}
