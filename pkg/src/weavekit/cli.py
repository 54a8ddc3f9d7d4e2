"""Command-line interface: compute, verify, and export over ranges of n.

Commands mirror the library modules (hecke, jones, alexander, homfly,
khovanov, integral-khovanov, stats, twist, bounds, correlate, verify-all).
Selection is `-n INT` or `--range A..B`; output is text, json, csv, or svg.
The svg format renders a figure to `--out` and always writes a companion
CSV with the same stem, so plots ship next to their data.

Contracts kept here:
  * identical configuration produces byte-identical stdout/files; `--jobs`
    only parallelizes over n-values (ordered merge) and never changes bytes;
  * ranges are filtered to knots (gcd(3,n)=1) for knot-only commands, and
    the filtering is reported on stderr, never silent;
  * exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O
    error;
  * exact integers are printed in full in csv/json; the text formatter
    switches to 6-significant-digit scientific notation for huge totals,
    and WEAVEKIT_PRECISION_DIGITS adjusts text display precision only.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from pathlib import Path
from typing import Callable, Optional, Sequence

from .errors import MissingData, ParseError, RangeError, WeavekitError
from .hecke import (
    HeckeCoeffs,
    check_structure,
    coeffs,
    initial_coeffs,
    oracle_matrix_power,
    step,
)
from .invariants import (
    alexander_from_coeffs,
    homfly_from_coeffs,
    jones_from_coeffs,
    specialize_alexander,
    specialize_jones,
)
from .bracket import jones_bracket_oracle
from .khovanov import (
    betti_line_of,
    check_support,
    euler_check,
    integral_kh_from_jones,
    kh_table_from_coeffs,
)
from .laurent import format_laurent
from .stats import density, fit, sci6, table_row, table_row_from_line
from .twistvol import (
    closed_form_T,
    correlation_report,
    ingest_volumes,
    normalized_twist_curve,
    twist_numbers,
    validity_threshold,
    volume_bounds_relative,
    CONJECTURAL_K,
)

__all__ = ["main"]


class UsageError(Exception):
    """Invalid flag combination or argument outside any computable domain."""


@dataclass
class Report:
    """Uniform command result: tabular rows plus per-format renderings."""

    columns: tuple[str, ...]
    rows: list[tuple]
    text_lines: list[str]
    json_obj: object
    figure: Optional[Callable[[], object]] = None
    verification_failed: bool = False


# ---------------------------------------------------------------------------
# formatting helpers


def _digits() -> int:
    raw = os.environ.get("WEAVEKIT_PRECISION_DIGITS", "6")
    try:
        return max(1, int(raw))
    except ValueError:
        return 6


def _fmt(x: float) -> str:
    return f"{x:.{_digits()}g}"


def _fmt_fixed(x: float) -> str:
    return f"{x:.{_digits()}f}"


def _fmt_total(value: int) -> str:
    """Text display of an exact count: scientific once it stops being readable."""
    return sci6(value) if abs(value) >= 10**15 else str(value)


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep or not lo.isdigit() or not hi.isdigit():
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}")
    a, b = int(lo), int(hi)
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return a, b


def _select(args: argparse.Namespace, *, knots_only: bool, min_n: int) -> list[int]:
    if args.n is not None:
        ns = [args.n]
        filtered: list[int] = []
    else:
        a, b = args.n_range
        ns, filtered = [], []
        for n in range(a, b + 1):
            if n < min_n or (knots_only and math.gcd(3, n) != 1):
                filtered.append(n)
            else:
                ns.append(n)
    if filtered:
        reasons = "links" if knots_only else "out of domain"
        print(f"note: skipping n={','.join(map(str, filtered))} ({reasons})",
              file=sys.stderr)
    if not ns:
        raise UsageError("selection is empty after filtering")
    return ns


def _map_over(ns: Sequence[int], from_state: Callable[[HeckeCoeffs], object],
              from_n: Callable[[int], object], jobs: int) -> list:
    """Ordered per-n payloads: incremental recursion when serial, a
    share-nothing process pool otherwise (bytes are identical either way)."""
    ns = sorted(set(ns))
    if jobs > 1 and len(ns) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(from_n, ns))
    wanted = set(ns)
    out = []
    h = initial_coeffs()
    if h.n in wanted:
        out.append(from_state(h))
    while h.n < ns[-1]:
        h = step(h)
        if h.n in wanted:
            out.append(from_state(h))
    return out


# ---------------------------------------------------------------------------
# per-n payload builders (top level so worker processes can import them)


def _hecke_state(h: HeckeCoeffs):
    return h


def _hecke_n(n: int):
    return coeffs(n)


def _jones_state(h: HeckeCoeffs):
    return h.n, jones_from_coeffs(h)


def _jones_n(n: int):
    return _jones_state(coeffs(n))


def _alexander_state(h: HeckeCoeffs):
    return h.n, alexander_from_coeffs(h)


def _alexander_n(n: int):
    return _alexander_state(coeffs(n))


def _homfly_state(h: HeckeCoeffs):
    return h.n, homfly_from_coeffs(h)


def _homfly_n(n: int):
    return _homfly_state(coeffs(n))


def _kh_state(h: HeckeCoeffs):
    return h.n, kh_table_from_coeffs(h)


def _kh_n(n: int):
    return _kh_state(coeffs(n))


def _ikh_state(h: HeckeCoeffs):
    return h.n, integral_kh_from_jones(h.n, jones_from_coeffs(h))


def _ikh_n(n: int):
    return _ikh_state(coeffs(n))


def _stats_state(h: HeckeCoeffs):
    line = betti_line_of(kh_table_from_coeffs(h))
    return h.n, table_row_from_line(h.n, line), tuple(line)


def _stats_n(n: int):
    return _stats_state(coeffs(n))


def _twist_state(h: HeckeCoeffs, k_top: int):
    v = jones_from_coeffs(h)
    return h.n, twist_numbers(v, min(k_top, max(1, h.n - 1)))


def _twist_n(n: int, k_top: int):
    return _twist_state(coeffs(n), k_top)


# ---------------------------------------------------------------------------
# command handlers


def _cmd_hecke(args) -> Report:
    ns = _select(args, knots_only=False, min_n=1)
    payloads = _map_over(ns, _hecke_state, _hecke_n, args.jobs)
    rows, lines, blobs = [], [], []
    failed = False
    for h in payloads:
        named = h.as_dict()
        blob = {"n": h.n}
        for name, poly in named.items():
            rows.append((h.n, name, format_laurent(poly, "q")))
            lines.append(f"n={h.n} {name}: {format_laurent(poly, 'q')}")
            blob[name] = poly.to_json()
        if args.oracle:
            match = oracle_matrix_power(h.n) == h
            blob["oracle_match"] = match
            lines.append(f"n={h.n} oracle: {'match' if match else 'MISMATCH'}")
            failed = failed or not match
        blobs.append(blob)
    top = payloads[-1]

    def figure():
        from .plotting import polynomial_figure
        return polynomial_figure(top.as_dict(), "q",
                                 f"trace coefficients at n={top.n}")

    return Report(("n", "name", "polynomial"), rows, lines, blobs, figure,
                  verification_failed=failed)


def _poly_report(args, label: str, var: str, from_state, from_n,
                 knots_only: bool, oracle_check=None) -> Report:
    ns = _select(args, knots_only=knots_only, min_n=1)
    payloads = _map_over(ns, from_state, from_n, args.jobs)
    rows, lines, blobs = [], [], []
    failed = False
    for n, poly in payloads:
        text = format_laurent(poly, var)
        rows.append((n, text))
        lines.append(text if len(payloads) == 1 else f"n={n}: {text}")
        blob = {"n": n, "polynomial": poly.to_json()}
        if oracle_check is not None and getattr(args, "oracle", False):
            match = oracle_check(n, poly)
            blob["oracle_match"] = match
            lines.append(f"n={n} oracle: {'match' if match else 'MISMATCH'}")
            failed = failed or not match
        blobs.append(blob)
    top_n, top_poly = payloads[-1]

    def figure():
        from .plotting import polynomial_figure
        return polynomial_figure({label: top_poly}, var,
                                 f"{label} for n={top_n}")

    return Report(("n", "polynomial"), rows, lines, blobs, figure,
                  verification_failed=failed)


def _cmd_jones(args) -> Report:
    def oracle_check(n: int, poly) -> bool:
        return jones_bracket_oracle(n, jobs=args.jobs) == poly

    return _poly_report(args, "V", "t", _jones_state, _jones_n,
                        knots_only=False, oracle_check=oracle_check)


def _cmd_alexander(args) -> Report:
    return _poly_report(args, "Delta", "t", _alexander_state, _alexander_n,
                        knots_only=False)


def _cmd_homfly(args) -> Report:
    ns = _select(args, knots_only=True, min_n=1)
    payloads = _map_over(ns, _homfly_state, _homfly_n, args.jobs)
    rows, lines, blobs = [], [], []
    for n, poly in payloads:
        lines.append(f"n={n}:")
        for a_exp in poly.first_exponents():
            z_slice = poly.slice_first(a_exp)
            lines.append(f"  a^{a_exp}: {format_laurent(z_slice, 'z')}")
            for z_exp, c in sorted(z_slice.terms()):
                rows.append((n, a_exp, z_exp, c))
        blobs.append({"n": n, "terms": poly.to_json()})
    top_n, top_poly = payloads[-1]

    def figure():
        from .plotting import bilaurent_figure
        return bilaurent_figure(top_poly, f"HOMFLY-PT support for n={top_n}")

    return Report(("n", "a_exp", "z_exp", "coefficient"), rows, lines, blobs,
                  figure)


def _group_text(free: int, torsion: int) -> str:
    parts = []
    if free:
        parts.append(f"Z^{free}" if free > 1 else "Z")
    if torsion:
        parts.append(f"(Z/2)^{torsion}" if torsion > 1 else "Z/2")
    return " + ".join(parts) if parts else "0"


def _cmd_khovanov(args) -> Report:
    ns = _select(args, knots_only=True, min_n=1)
    payloads = _map_over(ns, _kh_state, _kh_n, args.jobs)
    rows, lines, blobs = [], [], []
    for n, table in payloads:
        lines.append(f"n={n}:")
        entries = sorted(table.dims.items())
        for (i, j), d in entries:
            rows.append((n, i, j, d))
            lines.append(f"  i={i} j={j} dim={d}")
        blobs.append({
            "n": n,
            "sigma": table.sigma,
            "dims": [{"i": i, "j": j, "dim": d} for (i, j), d in entries],
        })
    top_n, top_table = payloads[-1]

    def figure():
        from .plotting import kh_support_figure
        entries = [(i, j, d, 0) for (i, j), d in sorted(top_table.dims.items())]
        return kh_support_figure(entries, f"rational homology support, n={top_n}")

    return Report(("n", "i", "j", "dim"), rows, lines, blobs, figure)


def _cmd_integral_khovanov(args) -> Report:
    ns = _select(args, knots_only=True, min_n=1)
    payloads = _map_over(ns, _ikh_state, _ikh_n, args.jobs)
    rows, lines, blobs = [], [], []
    for n, table in payloads:
        lines.append(f"n={n}:")
        entries = sorted(table.entries.items())
        for (i, j), (free, torsion) in entries:
            rows.append((n, i, j, free, torsion))
            lines.append(f"  i={i} j={j}: {_group_text(free, torsion)}")
        blobs.append({
            "n": n,
            "groups": [{"i": i, "j": j, "free_rank": f, "two_torsion_exp": t}
                       for (i, j), (f, t) in entries],
        })
    top_n, top_table = payloads[-1]

    def figure():
        from .plotting import kh_support_figure
        entries = [(i, j, f, t) for (i, j), (f, t) in sorted(top_table.entries.items())]
        return kh_support_figure(entries, f"integral homology support, n={top_n}")

    return Report(("n", "i", "j", "free_rank", "two_torsion_exp"),
                  rows, lines, blobs, figure)


def _cmd_stats(args) -> Report:
    ns = _select(args, knots_only=True, min_n=2)
    payloads = _map_over(ns, _stats_state, _stats_n, args.jobs)
    rows, lines, blobs = [], [], []
    for n, row, _line in payloads:
        rows.append((n, row.total_dim, row.dim_h01, f"{row.sigma:.6g}",
                     f"{row.l2:.6f}", f"{row.l1:.6f}"))
        lines.append(
            f"n={n}  total={_fmt_total(row.total_dim)}"
            f"  dim_h01={_fmt_total(row.dim_h01)}"
            f"  sigma={_fmt(row.sigma)}  L2={_fmt_fixed(row.l2)}"
            f"  L1={_fmt_fixed(row.l1)}")
        blobs.append({
            "n": n,
            "total_dim": str(row.total_dim),
            "dim_h01": str(row.dim_h01),
            "sigma": row.sigma,
            "l2": row.l2,
            "l1": row.l1,
        })
    top_n, _top_row, top_line = payloads[-1]

    def figure():
        from .plotting import gaussian_figure
        f = fit(top_line)
        lo = min(i for i, _ in top_line) - 1
        hi = max(i for i, _ in top_line) + 1
        xs = [lo + (hi - lo) * t / 400 for t in range(401)]
        curve = [(x, density(f, x)) for x in xs]
        return gaussian_figure(top_n, top_line, f.mu, f.sigma, curve)

    return Report(("n", "total_dim", "dim_h01", "sigma", "l2", "l1"),
                  rows, lines, blobs, figure)


def _cmd_twist(args) -> Report:
    ns = _select(args, knots_only=False, min_n=2)
    k_top = 7 if args.conjectural else 3
    payloads = _map_over(ns, partial(_twist_state, k_top=k_top),
                         partial(_twist_n, k_top=k_top), args.jobs)
    rows, lines, blobs = [], [], []
    series: dict[int, list[tuple[int, int]]] = {}
    for n, report in payloads:
        pieces = []
        for k in sorted(report.values):
            t = report.values[k]
            conj = k in CONJECTURAL_K
            rows.append((n, k, t, report.closed_form_match.get(k, ""),
                         conj))
            pieces.append(f"T{k}={t}" + (" [conjectural]" if conj else ""))
            series.setdefault(k, []).append((n, t))
        lines.append(f"n={n}: " + "  ".join(pieces))
        blobs.append({
            "n": n,
            "twist_numbers": {str(k): report.values[k] for k in sorted(report.values)},
            "closed_form_match": {str(k): v for k, v in
                                  sorted(report.closed_form_match.items())},
            "conjectural_k": sorted(k for k in report.values if k in CONJECTURAL_K),
        })

    def figure():
        from .plotting import twist_figure
        return twist_figure(series)

    return Report(("n", "k", "T", "closed_form_match", "conjectural"),
                  rows, lines, blobs, figure)


def _cmd_bounds(args) -> Report:
    ns = _select(args, knots_only=False, min_n=7)
    volumes = {}
    if args.volumes:
        volumes = {rec.n: rec.volume for rec in ingest_volumes(args.volumes)}
    rows, lines, blobs = [], [], []
    data = []
    for n in ns:
        lower, upper = volume_bounds_relative(n)
        curves = {
            k: (normalized_twist_curve(k, n) if n >= validity_threshold(k) else None)
            for k in (2, 3, 4)
        }
        vol_rel = volumes[n] / (2 * n) if n in volumes else None
        data.append((n, lower, upper, curves[2], curves[3], curves[4], vol_rel))
        rows.append((n, f"{lower:.12g}", f"{upper:.12g}",
                     *("" if c is None else f"{c:.12g}" for c in
                       (curves[2], curves[3], curves[4])),
                     "" if vol_rel is None else f"{vol_rel:.12g}"))
        chunk = (f"n={n}  lower={_fmt(lower)}  upper={_fmt(upper)}  "
                 + "  ".join(f"curve_k{k}={_fmt(c)}" for k, c in curves.items()
                             if c is not None))
        if vol_rel is not None:
            chunk += f"  vol_rel={_fmt(vol_rel)}"
        lines.append(chunk)
        blobs.append({"n": n, "lower": lower, "upper": upper,
                      "curve_k2": curves[2], "curve_k3": curves[3],
                      "curve_k4": curves[4], "vol_rel": vol_rel})

    def figure():
        from .plotting import bounds_figure
        return bounds_figure(data)

    return Report(("n", "lower", "upper", "curve_k2", "curve_k3", "curve_k4",
                   "vol_rel"), rows, lines, blobs, figure)


def _cmd_correlate(args) -> Report:
    records = ingest_volumes(args.volumes)
    report = correlation_report(args.k, records)
    rows = [(n, t, f"{v:.12g}") for n, t, v in report.scatter]
    lines = [f"pearson_r = {_fmt(report.pearson_r)}"
             + ("  (degenerate variance)" if report.degenerate else "")]
    lines += [f"n={n}  T{args.k}={t}  volume={_fmt(v)}"
              for n, t, v in report.scatter]
    blob = {
        "k": args.k,
        "pearson_r": report.pearson_r,
        "degenerate": report.degenerate,
        "scatter": [{"n": n, f"T{args.k}": t, "volume": v}
                    for n, t, v in report.scatter],
    }

    def figure():
        from .plotting import correlation_figure
        return correlation_figure(report.scatter, args.k, report.pearson_r)

    return Report(("n", f"T{args.k}", "volume"), rows, lines, blob, figure)


# ---------------------------------------------------------------------------
# verify-all


def _verify_hecke_oracle(max_n: int) -> tuple[int, list[str]]:
    bad = []
    h = initial_coeffs()
    top = min(max_n, 10)
    for n in range(1, top + 1):
        if h.n != n:
            h = step(h)
        if oracle_matrix_power(n) != h:
            bad.append(f"oracle mismatch at n={n}")
    return top, bad


def _verify_structure(max_n: int) -> tuple[int, list[str]]:
    bad = []
    h = initial_coeffs()
    count = 0
    while h.n < max_n:
        h = step(h)
        report = check_structure(h)
        count += 1
        if not report.passed:
            bad.append(f"n={h.n}: {', '.join(report.failures())}")
    return count, bad


def _verify_jones(max_n: int, jobs: int) -> tuple[int, list[str]]:
    bad = []
    count = 0
    h = initial_coeffs()
    while h.n < max_n:
        h = step(h)
        n = h.n
        v = jones_from_coeffs(h)
        count += 1
        if v.span() != 2 * n:
            bad.append(f"n={n}: span {v.span()} != {2 * n}")
        if v != v.invert_variable():
            bad.append(f"n={n}: not amphichiral")
        if n <= 8 and jones_bracket_oracle(n, jobs=jobs) != v:
            bad.append(f"n={n}: bracket oracle mismatch")
    return count, bad


def _verify_alexander(max_n: int) -> tuple[int, list[str]]:
    bad = []
    count = 0
    h = initial_coeffs()
    while h.n < max_n:
        h = step(h)
        d = alexander_from_coeffs(h)
        count += 1
        if d != d.invert_variable():
            bad.append(f"n={h.n}: not symmetric")
        if math.gcd(3, h.n) == 1 and abs(d.coefficient(d.highest_exp)) != 1:
            bad.append(f"n={h.n}: not monic")
    return count, bad


def _verify_homfly(max_n: int) -> tuple[int, list[str]]:
    bad = []
    count = 0
    h = initial_coeffs()
    while h.n < min(max_n, 25):
        h = step(h)
        if math.gcd(3, h.n) != 1:
            continue
        hp = homfly_from_coeffs(h)
        count += 1
        if specialize_jones(hp) != jones_from_coeffs(h):
            bad.append(f"n={h.n}: Jones specialization mismatch")
        if specialize_alexander(hp) != alexander_from_coeffs(h):
            bad.append(f"n={h.n}: Alexander specialization mismatch")
    return count, bad


def _verify_khovanov(max_n: int) -> tuple[int, list[str]]:
    from fractions import Fraction

    bad = []
    count = 0
    h = initial_coeffs()
    while h.n < max_n:
        h = step(h)
        n = h.n
        if math.gcd(3, n) != 1:
            continue
        v = jones_from_coeffs(h)
        table = kh_table_from_coeffs(h)
        count += 1
        if not euler_check(table, v):
            bad.append(f"n={n}: Euler characteristic mismatch")
        if not check_support(table, 3, n):
            bad.append(f"n={n}: support off the diagonals")
        total = sum(table.dims.values())
        det = abs(v.eval_rational(Fraction(-1)))
        if total != det + 1:
            bad.append(f"n={n}: total rank {total} != det+1 = {det + 1}")
    return count, bad


def _verify_stats(max_n: int) -> tuple[int, list[str]]:
    bad = []
    count = 0
    for n in range(10, min(max_n, 30) + 1):
        if math.gcd(3, n) != 1:
            continue
        row = table_row(n)
        count += 1
        if not (0 < row.sigma < 20 and row.l1 < 1 and row.l2 < 1):
            bad.append(f"n={n}: implausible fit {row}")
    return count, bad


def _verify_twist(max_n: int) -> tuple[int, list[str]]:
    bad = []
    count = 0
    h = initial_coeffs()
    while h.n < max_n:
        h = step(h)
        n = h.n
        if n < 3:
            continue
        v = jones_from_coeffs(h)
        r = twist_numbers(v, min(3, n - 1))
        count += 1
        if r.values[1] != 2 * n:
            bad.append(f"n={n}: T1 != 2n")
        if n >= 5 and (r.values[2] != closed_form_T(2, n)
                       or r.values[3] != closed_form_T(3, n)):
            bad.append(f"n={n}: T2/T3 closed form mismatch")
    return count, bad


def _cmd_verify_all(args) -> Report:
    checks = [
        ("hecke-recursion-vs-oracle", partial(_verify_hecke_oracle, args.max_n)),
        ("structure-identities", partial(_verify_structure, args.max_n)),
        ("jones-span-symmetry-bracket", partial(_verify_jones, args.max_n, args.jobs)),
        ("alexander-symmetry-monic", partial(_verify_alexander, args.max_n)),
        ("homfly-specializations", partial(_verify_homfly, args.max_n)),
        ("khovanov-euler-support-det", partial(_verify_khovanov, args.max_n)),
        ("stats-fit-sanity", partial(_verify_stats, args.max_n)),
        ("twist-closed-forms", partial(_verify_twist, args.max_n)),
    ]
    rows, lines, blobs = [], [], []
    failed = False
    for name, run in checks:
        count, bad = run()
        ok = not bad
        failed = failed or bad
        rows.append((name, count, ok))
        status = "ok" if ok else "FAIL"
        lines.append(f"{status:4s} {name} ({count} cases)")
        lines.extend(f"     {msg}" for msg in bad)
        blobs.append({"check": name, "cases": count, "ok": ok, "failures": bad})
    lines.append("all checks passed" if not failed else "verification FAILED")
    return Report(("check", "cases", "ok"), rows, lines, blobs,
                  figure=None, verification_failed=bool(failed))


# ---------------------------------------------------------------------------
# output plumbing


def _render_csv(report: Report) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(report.columns)
    writer.writerows(report.rows)
    return buf.getvalue()


def _emit(report: Report, fmt: str, out: Optional[str]) -> None:
    if fmt == "svg":
        if out is None:
            raise UsageError("--format svg requires --out PATH")
        if report.figure is None:
            raise UsageError("this command has no figure output")
        from .plotting import save_svg

        save_svg(report.figure(), out)
        companion = str(Path(out).with_suffix(".csv"))
        Path(companion).write_text(_render_csv(report), encoding="utf-8")
        print(f"wrote {out} and {companion}")
        return
    if fmt == "text":
        payload = "\n".join(report.text_lines) + "\n"
    elif fmt == "json":
        payload = json.dumps(report.json_obj, indent=2, sort_keys=True) + "\n"
    else:
        payload = _render_csv(report)
    if out is None:
        sys.stdout.write(payload)
    else:
        Path(out).write_text(payload, encoding="utf-8")


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weavekit",
        description="Exact invariants, homology tables, and statistics "
                    "for the 3-strand weaving knots W(3,n).")
    sub = parser.add_subparsers(dest="command", required=True)

    selection = argparse.ArgumentParser(add_help=False)
    group = selection.add_mutually_exclusive_group(required=True)
    group.add_argument("-n", type=int, default=None, metavar="INT",
                       help="single braid power n")
    group.add_argument("--range", dest="n_range", type=_parse_range,
                       default=None, metavar="A..B",
                       help="inclusive range of n values")

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--format", choices=("text", "json", "csv", "svg"),
                        default="text")
    output.add_argument("--out", default=None, metavar="PATH",
                        help="write output here instead of stdout "
                             "(required for svg; a companion .csv is "
                             "written next to every svg)")
    output.add_argument("--jobs", type=int, default=1, metavar="INT",
                        help="worker processes for batch/state-sum work")

    def add(name, handler, parents, **kwargs):
        p = sub.add_parser(name, parents=parents, **kwargs)
        p.set_defaults(handler=handler)
        return p

    p = add("hecke", _cmd_hecke, [selection, output],
            help="trace coefficients C_{n,*} from the length-5 recursion")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check against the 6x6 matrix model")
    p = add("jones", _cmd_jones, [selection, output],
            help="Jones polynomial V(W(3,n))")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check against the Kauffman bracket state sum "
                        "(n <= 10)")
    add("alexander", _cmd_alexander, [selection, output],
        help="Alexander polynomial Delta(W(3,n))")
    add("homfly", _cmd_homfly, [selection, output],
        help="HOMFLY-PT polynomial H(a,z) (knots only)")
    add("khovanov", _cmd_khovanov, [selection, output],
        help="rational Khovanov homology table (knots only)")
    add("integral-khovanov", _cmd_integral_khovanov, [selection, output],
        help="integral Khovanov homology with 2-torsion (knots only)")
    add("stats", _cmd_stats, [selection, output],
        help="Gaussian-fit summary rows for the Betti distribution")
    p = add("twist", _cmd_twist, [selection, output],
            help="higher twist numbers T_k")
    p.add_argument("--conjectural", action="store_true",
                   help="include the conjectured rows k=4..7 (labeled)")
    p = add("bounds", _cmd_bounds, [selection, output],
            help="relative volume bounds and normalized twist curves (n >= 7)")
    p.add_argument("--volumes", default=None, metavar="PATH",
                   help="optional CSV n,volume to overlay vol/(2n)")
    p = add("correlate", _cmd_correlate, [output],
            help="Pearson correlation of T_k against ingested volumes")
    p.add_argument("--volumes", required=True, metavar="PATH",
                   help="CSV with header n,volume")
    p.add_argument("--k", type=int, default=2, metavar="INT",
                   help="which twist number to correlate (default 2)")
    p = add("verify-all", _cmd_verify_all, [output],
            help="run the full invariant verification suite")
    p.add_argument("--max-n", type=int, default=20, metavar="INT")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.handler(args)
        _emit(report, args.format, args.out)
        return 1 if report.verification_failed else 0
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RangeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ParseError, MissingData) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except WeavekitError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
