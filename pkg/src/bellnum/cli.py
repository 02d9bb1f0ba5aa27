"""Command-line interface.

Subcommands: table, verify, asym, llt, bench, oeis-check, genjiko.
Exit codes: 0 success, 1 verification failure, 2 usage error, 3 input
or parse error.  Output is deterministic byte-for-byte between runs
(bench wall-clock times are the one documented exception); CSV is
emitted with a header row, full-decimal integers, UTF-8 and LF endings.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from . import exact, partitions
from .asymptotic import (
    beta_asym,
    bell_asym,
    beta_ratio_asym,
    log_int,
    phi,
    rho_of_tau,
    stirling_asym,
    tau_of_rho,
    tilde_bell_asym,
    tilde_bell_exact,
)
from .distributions import (
    FAMILIES,
    a033306_exact_moments,
    arima_exact_moments,
    decay_exponent,
    llt_report,
    matsunaga_closed_moments,
    moments_exact,
    variant_triangle,
    weighted_matsunaga_closed_mean,
)
from .oeis import BFileParseError, check_bfile, REGISTRY

__all__ = ["main", "build_parser", "bench_matsunaga_procedure", "bench_arima_procedure"]

TABLE_CAP = 500
BENCH_ARIMA_CAP = 400
BENCH_MATSUNAGA_CAP = 120

TABLE_SEQUENCES = (
    "stirling",
    "matsunaga",
    "weighted-matsunaga",
    "arima",
    "bell",
    "beta",
    "pn-at-n",
    "b-table",
)

VERIFY_SUITES = ("identities", "oracle", "variants", "all")

ASYM_TARGETS = ("beta", "bell", "tilde-bell", "stirling", "beta-ratio", "phi")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class BenchRecord:
    n: int
    procedure: str
    wall_time: float
    max_intermediate_bits: int
    result: int


def _rat(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def _csv(header: list[str], rows: list[list[object]]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(str(c) for c in row))
    return "\n".join(lines) + "\n"


def _json_doc(doc: object) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _text_table(header: list[str], rows: list[list[object]]) -> str:
    cells = [header] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    out = []
    for r in cells:
        out.append("  ".join(c.rjust(w) for c, w in zip(r, widths)))
    return "\n".join(out) + "\n"


def _render(fmt: str, header: list[str], rows: list[list[object]], name: str) -> str:
    if fmt == "csv":
        return _csv(header, rows)
    if fmt == "json":
        return _json_doc({"name": name, "columns": header,
                          "rows": [dict(zip(header, r)) for r in rows]})
    return _text_table(header, rows)


# ----------------------------------------------------------------- table


def cmd_table(args: argparse.Namespace) -> tuple[int, str]:
    seq = args.sequence
    N = args.N
    cap = args.max_n if args.max_n is not None else TABLE_CAP
    if seq not in TABLE_SEQUENCES:
        raise UsageError(f"unknown sequence {seq!r}; choose from {', '.join(TABLE_SEQUENCES)}")
    if N > cap:
        raise UsageError(f"N={N} beyond cap {cap} (raise with --max-n)")
    if seq in ("bell", "beta", "pn-at-n"):
        if seq == "bell":
            values = exact.bell_numbers(N)
            rows = [[n, v] for n, v in enumerate(values)]
        elif seq == "beta":
            values = exact.beta_numbers(N)
            rows = [[n, v] for n, v in enumerate(values)]
        else:
            if N < 1:
                raise UsageError("pn-at-n needs N >= 1")
            values, _ = exact.pn_at_n(N)
            rows = [[n, v] for n, v in enumerate(values)][1:]
        return 0, _render(args.format, ["n", "value"], rows, seq)
    builders = {
        "stirling": exact.stirling_signed_rows,
        "matsunaga": exact.matsunaga_rows,
        "weighted-matsunaga": exact.weighted_matsunaga_rows,
        "arima": exact.arima_rows,
        "b-table": exact.b_table_rows,
    }
    try:
        table = builders[seq](N)
    except ValueError as e:
        raise UsageError(str(e)) from None
    rows = [[n, k, v] for n, k, v in table.items()]
    return 0, _render(args.format, ["n", "k", "value"], rows, seq)


# ---------------------------------------------------------------- verify


def _check(results: list[tuple[str, str, str]], name: str, ok: bool, detail: str = "") -> None:
    results.append(("ok" if ok else "FAIL", name, detail))


def _suite_identities(N: int) -> list[tuple[str, str, str]]:
    res: list[tuple[str, str, str]] = []
    m = exact.matsunaga_rows(N)
    beta = exact.beta_numbers(N + 1)
    bells = exact.bell_numbers(N + 1)

    bad = [n for n in range(1, N + 1) if sum(m.row(n)) != 0]
    _check(res, f"matsunaga row sums zero (n<={N})", not bad,
           f"first counterexample n={bad[0]}" if bad else "")

    bad = [n for n in range(1, N + 1) if m.entry(n, n) != beta[n]]
    _check(res, "matsunaga diagonal equals beta", not bad,
           f"first counterexample n={bad[0]}" if bad else "")

    bad = [n for n in range(N + 1) if bells[n] != beta[n + 1] + beta[n]]
    _check(res, f"splitting B_n = beta_(n+1) + beta_n (n<={N})", not bad,
           f"first counterexample n={bad[0]}" if bad else "")

    bad = []
    for n in range(2, N + 1):
        total = sum(v * n**k for k, v in zip(range(1, n + 1), m.row(n)))
        if total != (bells[n] - 1) * factorial(n):
            bad.append(n)
    _check(res, f"sum_k M[n,k] n^k = (B_n - 1) n! (2<=n<={N})", not bad,
           f"first counterexample n={bad[0]}" if bad else "")

    cap = min(N, 25)
    bad_nk = None
    for n in range(1, cap + 1):
        for k in range(1, n + 1):
            if exact.matsunaga_via_sum(n, k) != m.entry(n, k):
                bad_nk = (n, k)
                break
        if bad_nk:
            break
    _check(res, f"sum form equals recurrence triangle (n<={cap})", bad_nk is None,
           f"first counterexample (n,k)={bad_nk}" if bad_nk else "")

    bad_nk = None
    exception_seen = False
    for n in range(1, N + 1):
        formula = exact.abs_matsunaga_row(n)
        for k in range(1, n + 1):
            truth = abs(m.entry(n, k))
            if (n, k) == (3, 1):
                exception_seen = formula[k - 1] == -truth
                if not exception_seen:
                    bad_nk = (n, k)
            elif formula[k - 1] != truth:
                bad_nk = (n, k)
            if bad_nk:
                break
        if bad_nk:
            break
    detail = "expected sign exception at (3,1) confirmed" if N >= 3 and exception_seen else ""
    _check(res, f"alternating |M| formula, exception exactly (3,1) (n<={N})",
           bad_nk is None, detail if bad_nk is None else f"violated at (n,k)={bad_nk}")

    bad_case = None
    for n in range(4, min(N, 20) + 1):
        for v in (Fraction(1), Fraction(n), Fraction(-1, 2), Fraction(7, 3)):
            if exact.pnv_eval(n, v) != exact.pnv_closed(n, v):
                bad_case = (n, v)
                break
        if bad_case:
            break
    _check(res, "closed P_n(v) equals direct P_n(v) on rational grid",
           bad_case is None, f"first counterexample (n,v)={bad_case}" if bad_case else "")

    top = max(N, 50)
    beta_ext = exact.beta_numbers(top + 1)
    bad = [n for n in range(3, top + 1)
           if Fraction(beta_ext[n + 1], n + 1) < Fraction(beta_ext[n], n)]
    _check(res, f"beta_(n+1)/(n+1) >= beta_n/n (3<=n<={top})", not bad,
           f"first counterexample n={bad[0]}" if bad else "")

    cap = min(N, 25)
    s = exact.stirling_unsigned_rows(cap + 1)
    bad_nk = None
    for n in range(1, cap + 1):
        for k in range(1, n + 1):
            if s.entry(n + 1, k) < n * s.entry(n, k):
                bad_nk = (n, k)
                break
        if bad_nk:
            break
    _check(res, f"|s[n+1,k]| >= n |s[n,k]| (n<={cap})", bad_nk is None,
           f"first counterexample (n,k)={bad_nk}" if bad_nk else "")

    cap = min(N, 30)
    bad = [n for n in range(cap + 1)
           if exact.beta_from_bells(n, bells) != beta[n]]
    _check(res, f"beta from alternating Bell sums (n<={cap})", not bad,
           f"first counterexample n={bad[0]}" if bad else "")

    cap = min(N, 25)
    bad = []
    for n in range(2, cap + 1):
        tr = exact.bell_matsunaga(n)
        if tr.result != bells[n] or exact.bell_via_shapes(n) != bells[n]:
            bad.append(n)
    _check(res, f"procedure equivalence (Horner = recurrence = shapes, n<={cap})",
           not bad, f"first counterexample n={bad[0]}" if bad else "")

    vals, norm = exact.pn_at_n(N)
    bad = []
    for n in range(1, N + 1):
        direct = exact.pnv_eval(n, n)
        if direct != vals[n] or vals[n] != norm[n] * factorial(n):
            bad.append(n)
    _check(res, f"P_n(n) closed/direct agree and n! divides (n<={N})", not bad,
           f"first counterexample n={bad[0]}" if bad else "")

    bad = []
    for n in range(4, N + 1):
        lhs = exact.pnv_eval(n, 1)
        rhs = sum((-1) ** j * (j + 1) * bells[n - 1 - j] for j in range(n)) + (-1) ** n * n
        if lhs != rhs * factorial(n):
            bad.append(n)
    _check(res, f"P_n(1)/n! alternating-Bell corollary (4<=n<={N})", not bad,
           f"first counterexample n={bad[0]}" if bad else "")
    return res


def _suite_oracle(N: int) -> list[tuple[str, str, str]]:
    res: list[tuple[str, str, str]] = []
    if N > partitions.STATS_CAP:
        raise UsageError(f"oracle suite capped at N={partitions.STATS_CAP}")
    bells = exact.bell_numbers(N)
    beta = exact.beta_numbers(N)
    for n in range(1, N + 1):
        st = partitions.collect_stats(n)
        _check(res, f"enumeration total at n={n} equals B_{n}={bells[n]}",
               st.total == bells[n], f"got {st.total}")
        _check(res, f"singleton-free total at n={n} equals beta_{n}={beta[n]}",
               st.no_singleton_total == beta[n], f"got {st.no_singleton_total}")
        shape_bad = None
        for shape, cnt in st.by_shape.items():
            if cnt != exact.bell_polynomial_coefficient(shape):
                shape_bad = shape
                break
        _check(res, f"shape counts at n={n} equal multinomial coefficients",
               shape_bad is None, f"bad shape {shape_bad}" if shape_bad else "")
        bad_k = [k for k in range(1, n + 1)
                 if st.block_of_element1_size_hist[k] != math.comb(n - 1, k - 1) * bells[n - k]]
        _check(res, f"block-of-element-1 histogram at n={n}", not bad_k,
               f"first bad k={bad_k[0]}" if bad_k else "")
        bad_k = [k for k in range(n + 1)
                 if st.singleton_count_hist[k] != math.comb(n, k) * beta[n - k]]
        _check(res, f"singleton-count histogram at n={n}", not bad_k,
               f"first bad k={bad_k[0]}" if bad_k else "")
    if N >= 5:
        _check(res, "52 five-element patterns", len(partitions.genjiko_patterns()) == 52)
    return res


def _suite_variants(N: int) -> list[tuple[str, str, str]]:
    res: list[tuple[str, str, str]] = []
    s = exact.stirling_unsigned_rows(N + 1)
    bad = None
    for n in range(2, N + 1):
        t = variant_triangle(n, "A220883")
        closed = [s.entry(n, k + 1) * (n + 1) ** k for k in range(n)]
        if list(t.weights) != closed:
            bad = n
            break
    _check(res, f"product triangle = |s| * (n+1)^k closed form (n<={N})", bad is None,
           f"first counterexample n={bad}" if bad else "")

    bad = None
    for n in range(2, N + 1):
        t = variant_triangle(n, "A260887")
        closed = [n**k * sum((-1) ** (k - j) * s.entry(n + 1, j + 1) for j in range(k + 1))
                  for k in range(n)]
        if list(t.weights) != closed:
            bad = n
            break
    _check(res, f"product triangle = alternating |s| closed form (n<={N})", bad is None,
           f"first counterexample n={bad}" if bad else "")

    bells = exact.bell_numbers(N + 1)
    arima = exact.arima_rows(N)
    bad_l = [n for n in range(1, N + 1) if sum(arima.row(n)) != bells[n + 1]]
    _check(res, f"arima row sums equal B_(n+1) (n<={N})", not bad_l,
           f"first counterexample n={bad_l[0]}" if bad_l else "")

    tb = tilde_bell_exact(N)
    bad_l = [n for n in range(1, N + 1)
             if sum(math.comb(n, k) * bells[k] * bells[n - k] for k in range(n + 1)) != tb[n]]
    _check(res, f"balanced convolution totals equal Poisson(2) moments (n<={N})",
           not bad_l, f"first counterexample n={bad_l[0]}" if bad_l else "")

    beta = exact.beta_numbers(N)
    bad_l = []
    for n in range(2, N + 1):
        t = variant_triangle(n, "A124323")
        if t.weights[0] != beta[n]:
            bad_l.append(n)
        if n >= 4:
            t2 = variant_triangle(n, "A086659")
            if list(t2.weights) != list(t.weights[:-1]) or t.weights[-1] != 1:
                bad_l.append(n)
    _check(res, f"singleton-marker triangles (k=0 column, unit-mass removal, n<={N})",
           not bad_l, f"first counterexample n={bad_l[0]}" if bad_l else "")

    cap = min(N, 40)
    bad_t = None
    for n in range(4, cap + 1):
        pmf = FAMILIES["matsunaga"].build(n)
        if matsunaga_closed_moments(n) != moments_exact(pmf):
            bad_t = ("matsunaga", n)
            break
        wpmf = FAMILIES["weighted-matsunaga"].build(n)
        if weighted_matsunaga_closed_mean(n) != moments_exact(wpmf)[0]:
            bad_t = ("weighted-matsunaga", n)
            break
        apmf = FAMILIES["arima"].build(n)
        if arima_exact_moments(n) != moments_exact(apmf):
            bad_t = ("arima", n)
            break
        bpmf = FAMILIES["a033306"].build(n)
        if a033306_exact_moments(n) != moments_exact(bpmf):
            bad_t = ("a033306", n)
            break
    _check(res, f"two-route moments (closed forms = direct, 4<=n<={cap})", bad_t is None,
           f"first counterexample {bad_t}" if bad_t else "")
    return res


def cmd_verify(args: argparse.Namespace) -> tuple[int, str]:
    suite = args.suite
    N = args.N
    if suite not in VERIFY_SUITES:
        raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(VERIFY_SUITES)}")
    results: list[tuple[str, str, str]] = []
    if suite in ("identities", "all"):
        results += _suite_identities(N)
    if suite in ("oracle", "all"):
        results += _suite_oracle(min(N, partitions.STATS_CAP) if suite == "all" else N)
    if suite in ("variants", "all"):
        results += _suite_variants(N)
    lines = []
    for status, name, detail in results:
        lines.append(f"{status}: {name}" + (f" [{detail}]" if detail else ""))
    n_fail = sum(1 for st, _, _ in results if st == "FAIL")
    lines.append(f"{len(results)} checks, {n_fail} failures")
    return (1 if n_fail else 0), "\n".join(lines) + "\n"


# ------------------------------------------------------------------ asym


def _parse_ladder(text: str) -> list[int]:
    try:
        ladder = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"bad ladder {text!r}, expected comma-separated integers") from None
    if not ladder:
        raise UsageError("empty ladder")
    return ladder


def cmd_asym(args: argparse.Namespace) -> tuple[int, str]:
    target = args.target
    if target not in ASYM_TARGETS:
        raise UsageError(f"unknown target {target!r}; choose from {', '.join(ASYM_TARGETS)}")
    if target == "phi":
        grid = [i / 100 for i in range(1, 501)]
        vals = [phi(r) for r in grid]
        arg = grid[vals.index(max(vals))]
        rows = [
            ["grid_argmax_rho", arg],
            ["grid_max_phi", max(vals)],
            ["phi(1)", phi(1.0)],
            ["closed_form_2log2_minus_1", 2 * math.log(2) - 1],
            ["tau_of_rho(1)", tau_of_rho(1.0)],
            ["log(2)", math.log(2.0)],
            ["rho_of_tau(log 2)", rho_of_tau(math.log(2.0))],
        ]
        return 0, _render(args.format, ["quantity", "value"], rows, "phi")
    if args.ladder is None:
        raise UsageError(f"target {target!r} needs a ladder of n values")
    ladder = _parse_ladder(args.ladder)
    rows: list[list[object]] = []
    if target in ("beta", "bell", "tilde-bell"):
        top = max(ladder)
        exact_values = {
            "beta": exact.beta_numbers(top),
            "bell": exact.bell_numbers(top),
            "tilde-bell": tilde_bell_exact(top),
        }[target]
        approx_fn = {"beta": beta_asym, "bell": bell_asym, "tilde-bell": tilde_bell_asym}[target]
        for n in ladder:
            a = approx_fn(n)
            le = log_int(exact_values[n])
            rows.append([n, f"{le:.6f}", f"{a.log_value:.6f}",
                         f"{abs(a.log_value - le) / abs(le):.3e}", a.error_order])
        return 0, _render(args.format,
                          ["n", "log_exact", "log_approx", "rel_log_error", "order"],
                          rows, f"asym-{target}")
    if target == "beta-ratio":
        top = max(ladder)
        betas = exact.beta_numbers(top)
        for n in ladder:
            for l in (1, 2):
                ex = Fraction(betas[n - l], betas[n])
                ap = beta_ratio_asym(n, l)
                rows.append([n, l, f"{float(ex):.6e}", f"{ap:.6e}",
                             f"{abs(ap / float(ex) - 1):.3e}", "O(n^-1 l^2 log n)"])
        return 0, _render(args.format,
                          ["n", "l", "exact_ratio", "approx_ratio", "rel_error", "order"],
                          rows, "asym-beta-ratio")
    # stirling: three regime-representative points per n
    top = max(ladder)
    s = exact.stirling_unsigned_rows(top)
    for n in ladder:
        if n < 4:
            raise UsageError("stirling comparison needs n >= 4")
        for k in (2, n // 2, n - 1):
            a = stirling_asym(n, k)
            le = log_int(s.entry(n, k))
            rel = abs(math.exp(a.log_value - le) - 1)
            rows.append([n, k, a.regime, f"{le:.6f}", f"{a.log_value:.6f}",
                         f"{rel:.3e}", a.error_order])
    return 0, _render(args.format,
                      ["n", "k", "regime", "log_exact", "log_approx", "rel_value_error", "order"],
                      rows, "asym-stirling")


# ------------------------------------------------------------------- llt


def cmd_llt(args: argparse.Namespace) -> tuple[int, str]:
    family = args.family
    if family not in FAMILIES:
        raise UsageError(f"unknown family {family!r}; choose from {', '.join(sorted(FAMILIES))}")
    fam = FAMILIES[family]
    ladder = _parse_ladder(args.ladder)
    if args.hist:
        rows: list[list[object]] = []
        for n in ladder:
            pmf = fam.build(n)
            for k in pmf.support():
                rows.append([n, k, repr(float(pmf.prob(k)))])
        return 0, _render(args.format, ["n", "k", "probability"], rows, f"llt-hist-{family}")
    rows = []
    sups: list[float] = []
    for n in ladder:
        rep = llt_report(fam.build(n), fam, n, centering=args.centering)
        sups.append(rep.sup_deviation)
        rows.append([
            rep.n,
            _rat(rep.mean_exact),
            _rat(rep.var_exact),
            f"{rep.mu_asym:.6f}",
            f"{rep.sigma2_asym:.6f}",
            f"{rep.sup_deviation:.6e}",
            rep.rate_tag,
        ])
    out = _render(args.format,
                  ["n", "mean_exact", "var_exact", "mu_asym", "sigma2_asym",
                   "sup_deviation", "rate_tag"],
                  rows, f"llt-{family}")
    if args.format == "text" and len(set(ladder)) >= 2:
        out += f"empirical decay exponent: {decay_exponent(ladder, sups):+.3f}\n"
    return 0, out


# ----------------------------------------------------------------- bench


def _bench_ladder(N: int) -> list[int]:
    ns = []
    n = 2
    while n < N:
        ns.append(n)
        n *= 2
    ns.append(N)
    return sorted(set(ns))


def bench_matsunaga_procedure(n: int) -> tuple[int, int]:
    tr = exact.bell_matsunaga(n)
    return tr.result, tr.max_bits


def bench_arima_procedure(n: int) -> tuple[int, int]:
    table = exact.b_table_rows(n)
    bits = 0
    total = 0
    for _, _, v in table.items():
        if v.bit_length() > bits:
            bits = v.bit_length()
    total = sum(table.row(n))
    return total, max(bits, total.bit_length())


def cmd_bench(args: argparse.Namespace) -> tuple[int, str]:
    N = args.N
    if N < 2:
        raise UsageError("bench needs N >= 2")
    arima_cap = args.max_n if args.max_n is not None else BENCH_ARIMA_CAP
    if N > arima_cap:
        raise UsageError(f"N={N} beyond bench cap {arima_cap} (raise with --max-n)")
    repeats = args.repeats
    rows: list[list[object]] = []
    for n in _bench_ladder(N):
        records: dict[str, BenchRecord] = {}
        for proc, fn, cap in (
            ("matsunaga", bench_matsunaga_procedure, BENCH_MATSUNAGA_CAP),
            ("arima", bench_arima_procedure, arima_cap),
        ):
            if n > cap:
                continue
            best = math.inf
            for _ in range(repeats):
                t0 = time.perf_counter()
                result, bits = fn(n)
                best = min(best, time.perf_counter() - t0)
            records[proc] = BenchRecord(n, proc, best, bits, result)
        if "matsunaga" in records and "arima" in records:
            if records["matsunaga"].result != records["arima"].result:
                return 1, f"procedures disagree at n={n}\n"
            ratio = records["matsunaga"].max_intermediate_bits / records["arima"].max_intermediate_bits
        else:
            ratio = float("nan")
        for rec in records.values():
            rows.append([rec.n, rec.procedure, f"{rec.wall_time:.6f}",
                         rec.max_intermediate_bits, f"{ratio:.3f}", rec.result])
    return 0, _render(args.format,
                      ["n", "procedure", "wall_time_s", "max_intermediate_bits",
                       "bits_ratio", "result"],
                      rows, "bench")


# ------------------------------------------------------------ oeis-check


def cmd_oeis_check(args: argparse.Namespace) -> tuple[int, str]:
    if args.sequence.lower() not in REGISTRY:
        raise UsageError(f"unknown sequence {args.sequence!r}")
    try:
        with open(args.bfile, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise BFileParseError(f"cannot read {args.bfile}: {e.strerror}", 0) from None
    cap = args.max_n if args.max_n is not None else 600
    result = check_bfile(args.sequence, text, max_terms=cap)
    if result.first_mismatch is not None:
        e = result.first_mismatch
        return 1, (f"MISMATCH for {result.sequence} at index {e.index}: "
                   f"file has {e.value}, computed {result.expected}\n")
    if result.compared == 0:
        return 1, f"no comparable entries for {result.sequence}\n"
    return 0, f"match: {result.compared} values of {result.sequence}\n"


# --------------------------------------------------------------- genjiko


def cmd_genjiko(args: argparse.Namespace) -> tuple[int, str]:
    pats = partitions.genjiko_patterns()
    lines = [f"{len(pats)} patterns"]
    for i, blocks in enumerate(pats, start=1):
        groups = " ".join("{" + ",".join(str(p) for p in b) + "}" for b in blocks)
        lines.append(f"{i:2d}: {groups}")
    return 0, "\n".join(lines) + "\n"


# ------------------------------------------------------------------ main


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--out", metavar="PATH", default=None)
    common.add_argument("--max-n", type=int, default=None, metavar="CAP",
                        help="raise or lower the command's size cap")

    p = argparse.ArgumentParser(prog="bellnum",
                                description="Exact and asymptotic Bell-number toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("table", parents=[common], help="emit a sequence or triangle")
    sp.add_argument("sequence")
    sp.add_argument("N", type=int)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("verify", parents=[common], help="run exact identity suites")
    sp.add_argument("suite")
    sp.add_argument("N", type=int)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("asym", parents=[common],
                        help="compare approximations against exact values")
    sp.add_argument("target")
    sp.add_argument("ladder", nargs="?", default=None,
                    help="comma-separated n values (not needed for phi)")
    sp.set_defaults(func=cmd_asym)

    sp = sub.add_parser("llt", parents=[common], help="local-limit-theorem reports")
    sp.add_argument("family")
    sp.add_argument("ladder", help="comma-separated n values")
    sp.add_argument("--centering", choices=("exact", "asym"), default="exact")
    sp.add_argument("--hist", action="store_true",
                    help="dump (k, probability) pairs instead of reports")
    sp.set_defaults(func=cmd_llt)

    sp = sub.add_parser("bench", parents=[common],
                        help="compare the two procedures (time and bit growth)")
    sp.add_argument("N", type=int)
    sp.add_argument("--repeats", type=int, default=1)
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("oeis-check", parents=[common],
                        help="cross-check a sequence against a local b-file")
    sp.add_argument("sequence")
    sp.add_argument("bfile")
    sp.set_defaults(func=cmd_oeis_check)

    sp = sub.add_parser("genjiko", parents=[common],
                        help="list the 52 five-incense patterns")
    sp.set_defaults(func=cmd_genjiko)
    return p


def main(argv: list[str] | None = None) -> int:
    # full-decimal emission of big integers is part of the CSV contract;
    # lift the interpreter's int-to-str digit guard where present
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(2_000_000)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2
    try:
        code, output = args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except BFileParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 3
    except ValueError as e:
        # out-of-range parameters surfaced by the library
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ArithmeticError as e:
        # e.g. saddle solver non-convergence: reported, never silent
        print(f"computation failed: {e}", file=sys.stderr)
        return 1
    out_path = getattr(args, "out", None)
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(output)
    else:
        sys.stdout.write(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
