"""Command line front end.

Subcommands: count, decompose, hstar, residues, verify, histogram,
cycles, rectangle, tile.  JSON goes to stdout wrapped in a fixed report
envelope (documented in docs/cli-schema.json); `decompose` emits the bare
{"mu": ..., "tau": ...} object.  CSV uses CRLF line endings with fixed
column orders.  Exit codes: 0 success, 1 verification failure, 2 input
error.  All output is deterministic for identical inputs.

TRIPARTS_WORKERS controls how many processes the `verify` sweep uses
(default: the machine's logical core count).
"""

import argparse
import csv
import io
import json
import os
import sys

from . import __version__
from .congruence import (
    characterize,
    non_witnessed_residues,
    verify_characterization,
)
from .cranks import (
    arrangement_2m_minus_2,
    build_arrangement,
    c_ls,
    c_ls_histogram,
    case_labels,
    cycle_decomposition,
    ehrhart_crank_closed_form,
    histogram,
    is_uniform,
    normalize_case_label,
    plan_crank,
)
from .ehrhart import box_compose, box_decompose, h_star, h_star_from_gf, tile_partition_triangle
from .partitions import check_partition, count_bruteforce
from .quasipoly import evaluate

_METHODS = ("brute", "nearest", "monomial", "binomial", "circulator")


def _workers():
    raw = os.environ.get("TRIPARTS_WORKERS", "")
    if raw.strip():
        try:
            return max(1, int(raw))
        except ValueError:
            raise ValueError("TRIPARTS_WORKERS must be an integer, got %r" % raw)
    return os.cpu_count() or 1


def _print_report(command, inputs, outcome, payload):
    doc = {"command": command, "inputs": inputs, "outcome": outcome,
           "payload": payload}
    print(json.dumps(doc, sort_keys=True, indent=2))


def cmd_count(args):
    if args.n < 0:
        print("n must be non-negative", file=sys.stderr)
        return 2
    if args.method == "all":
        values = {name: evaluate(args.n, name).value for name in _METHODS}
        consistent = len(set(values.values())) == 1
        outcome = "success" if consistent else "failure"
        _print_report("count", {"n": args.n, "method": "all"}, outcome,
                      {"values": values, "consistent": consistent})
        return 0 if consistent else 1
    value = evaluate(args.n, args.method).value
    _print_report("count", {"n": args.n, "method": args.method}, "success",
                  {"value": value})
    return 0


def cmd_decompose(args):
    lam = check_partition((args.l1, args.l2, args.l3))
    mu, tau = box_decompose(lam)
    print(json.dumps({"mu": list(mu), "tau": list(tau)}, separators=(",", ":")))
    return 0


def cmd_hstar(args):
    census = h_star()
    alt = h_star_from_gf()
    symmetric = all(census[i] == census[18 - i] for i in range(3, 16))
    ok = census == alt
    _print_report("hstar", {}, "success" if ok else "failure",
                  {"h_star": census, "sum": sum(census),
                   "symmetric": symmetric, "gf_match": ok})
    return 0 if ok else 1


def cmd_residues(args):
    ch = characterize(args.m)
    payload = {
        "modulus": ch.modulus,
        "period": ch.period,
        "family": ch.family,
        "residues": sorted(ch.residues),
        "sqrt_minus3": list(ch.sqrt_minus3) if ch.sqrt_minus3 else None,
    }
    if ch.family == "plus_one":
        payload["non_witnessed"] = sorted(non_witnessed_residues(args.m))
    _print_report("residues", {"m": args.m}, "success", payload)
    return 0


def _divisible_chunk(task):
    m, lo, hi = task
    return [count_bruteforce(n) % m == 0 for n in range(lo, hi)]


def _actual_divisibility(m, n_max, workers):
    """Brute-force divisibility flags for n = 0..n_max, optionally sharded."""
    if workers <= 1 or n_max < 4000:
        return _divisible_chunk((m, 0, n_max + 1))
    import multiprocessing

    chunk = 512
    tasks = [(m, lo, min(lo + chunk, n_max + 1))
             for lo in range(0, n_max + 1, chunk)]
    with multiprocessing.Pool(workers) as pool:
        parts = pool.map(_divisible_chunk, tasks)
    flags = []
    for part in parts:
        flags.extend(part)
    return flags


def cmd_verify(args):
    ch = characterize(args.m)
    n_max = args.max_n if args.max_n is not None else 60 * args.m
    workers = _workers()
    flags = _actual_divisibility(args.m, n_max, workers)
    mismatch = None
    for n, actual in enumerate(flags):
        predicted = n % ch.period in ch.residues
        if predicted != actual:
            mismatch = n
            break
    notes = []
    uniformity_violations = []
    non_witnessed_hits = []
    if mismatch is None:
        witnessed_skip = frozenset()
        if ch.family == "plus_one":
            witnessed_skip = non_witnessed_residues(args.m)
            notes.append("non-witnessed residues mod %d: %s (largest-minus-"
                         "smallest is not a crank there)"
                         % (ch.period, sorted(witnessed_skip)))
        for n in range(3, n_max + 1):
            divisible = n % ch.period in ch.residues
            hist = c_ls_histogram(n, args.m)
            uniform = is_uniform(hist)
            if n % ch.period in witnessed_skip:
                if not uniform:
                    non_witnessed_hits.append(n)
                continue
            if uniform != divisible:
                uniformity_violations.append(n)
    ok = mismatch is None and not uniformity_violations
    payload = {
        "modulus": args.m,
        "family": ch.family,
        "max_n": n_max,
        "characterization_ok": mismatch is None,
        "first_mismatch": mismatch,
        "uniformity_violations": uniformity_violations,
        "notes": notes,
    }
    if ch.family == "plus_one":
        payload["non_witnessed_residues"] = sorted(non_witnessed_residues(args.m))
        payload["non_witnessed_nonuniform_heights"] = non_witnessed_hits
    _print_report("verify", {"m": args.m, "max_n": n_max},
                  "success" if ok else "failure", payload)
    return 0 if ok else 1


def _crank_function(args):
    if args.crank == "cls":
        return c_ls, "cls"
    if args.crank == "closed":
        return (lambda lam, m: ehrhart_crank_closed_form(lam, m)), "closed"
    if args.crank == "plan":
        label = normalize_case_label(args.r_prime, args.m)
        if label == "2m-2":
            plan = arrangement_2m_minus_2(args.m)
        else:
            plan = build_arrangement(label, args.m)
        return plan_crank(plan), "plan:%s" % label
    raise ValueError("unknown crank %r" % args.crank)


def cmd_histogram(args):
    crank, tag = _crank_function(args)
    if tag == "cls" and args.fast:
        hist = c_ls_histogram(args.n, args.m)
    else:
        hist = histogram(args.n, args.m, crank)
    uniform = is_uniform(hist)
    _print_report("histogram",
                  {"n": args.n, "m": args.m, "crank": tag},
                  "success",
                  {"counts": list(hist.counts), "uniform": uniform,
                   "total": sum(hist.counts)})
    if args.expect_uniform and not uniform:
        return 1
    return 0


def cmd_cycles(args):
    dec = cycle_decomposition(args.n, args.m)
    if args.format == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\r\n")
        writer.writerow(["cycle_index", "position", "lambda1", "lambda2",
                         "lambda3", "crank"])
        for ci, cyc in enumerate(dec.cycles):
            for pos, lam in enumerate(cyc):
                writer.writerow([ci, pos, lam[0], lam[1], lam[2],
                                 c_ls(lam, args.m)])
        sys.stdout.write(out.getvalue())
        return 0
    payload = {
        "lengths": [len(c) for c in dec.cycles],
        "cycles": [
            {"length": len(c),
             "partitions": [list(lam) for lam in c],
             "cranks": [c_ls(lam, args.m) for lam in c]}
            for c in dec.cycles
        ],
    }
    _print_report("cycles", {"n": args.n, "m": args.m}, "success", payload)
    return 0


def cmd_rectangle(args):
    label = normalize_case_label(args.r_prime, args.m)
    if label == "2m-2":
        plan = arrangement_2m_minus_2(args.m)
    else:
        plan = build_arrangement(label, args.m)
    dims = plan.dims(args.k_prime)
    vacuous = dims[0] == 0 or dims[1] == 0
    report = plan.verify_cover(args.k_prime)
    payload = {
        "r_prime": label,
        "m": args.m,
        "k_prime": args.k_prime,
        "n": plan.n_for(args.k_prime),
        "width": dims[0],
        "height": dims[1],
        "vacuous": vacuous,
        "cover_ok": report.ok,
        "cells": report.cells,
        "detail": report.detail,
        "placements": [
            {"mu": list(mu), "size_offset": off,
             "matrix": [list(row) for row in mp.matrix],
             "offset": list(mp.offset)}
            for mu, off, mp in plan.placements
        ],
    }
    _print_report("rectangle",
                  {"m": args.m, "k_prime": args.k_prime, "r_prime": label},
                  "success" if report.ok else "failure", payload)
    if args.cells_csv and report.ok and not vacuous:
        cells = plan.cells(args.k_prime)
        try:
            with open(args.cells_csv, "w", newline="") as fp:
                writer = csv.writer(fp, lineterminator="\r\n")
                writer.writerow(["x", "y", "lambda1", "lambda2", "lambda3"])
                for (x, y) in sorted(cells, key=lambda c: (c[1], c[0])):
                    mu, tau = cells[(x, y)]
                    lam = box_compose(mu, tau)
                    writer.writerow([x, y, lam[0], lam[1], lam[2]])
        except OSError as exc:
            print("cannot write %s: %s" % (args.cells_csv, exc), file=sys.stderr)
            return 2
    return 0 if report.ok else 1


_SVG_HEADER = ('<?xml version="1.0" encoding="UTF-8"?>\n'
               '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
               'width="%d" height="%d" viewBox="0 0 %d %d">\n'
               '<title>%s</title>\n')
_SVG_FOOTER = '</svg>\n'


def render_tiling_svg(n):
    """Deterministic SVG: partitions of n at (l2-l3, l3), one color per
    box remainder, with a legend of remainders and group sizes."""
    groups = tile_partition_triangle(n)
    order = sorted(groups)
    scale = 18
    radius = 6
    margin = 40
    xmax = max((lam[1] - lam[2] for lams in groups.values() for lam in lams),
               default=0)
    ymin = 1
    ymax = max((lam[2] for lams in groups.values() for lam in lams), default=1)
    legend_w = 270
    width = 2 * margin + xmax * scale + legend_w
    height = 2 * margin + (ymax - ymin) * scale
    height = max(height, 2 * margin + 22 * max(1, len(order)))
    lines = [_SVG_HEADER % (width, height, width, height,
                            "partitions of %d into three parts, colored by box remainder" % n)]
    for gi, mu in enumerate(order):
        hue = (gi * 360) // max(1, len(order))
        color = "hsl(%d, 70%%, 45%%)" % hue
        lines.append('<g fill="%s">\n' % color)
        for lam in groups[mu]:
            cx = margin + (lam[1] - lam[2]) * scale
            cy = margin + (ymax - lam[2]) * scale
            lines.append('<circle cx="%d" cy="%d" r="%d"><title>%d+%d+%d</title></circle>\n'
                         % (cx, cy, radius, lam[0], lam[1], lam[2]))
        lines.append('</g>\n')
        lx = 2 * margin + xmax * scale + 20
        ly = margin + gi * 22
        lines.append('<rect x="%d" y="%d" width="12" height="12" fill="%s"/>\n'
                     % (lx, ly - 10, color))
        lines.append('<text x="%d" y="%d" font-family="monospace" font-size="13">'
                     'mu=(%d,%d,%d): %d partitions</text>\n'
                     % (lx + 18, ly, mu[0], mu[1], mu[2], len(groups[mu])))
    lines.append(_SVG_FOOTER)
    return "".join(lines)


def cmd_tile(args):
    if args.n < 3:
        print("need n >= 3 for a non-empty tiling", file=sys.stderr)
        return 2
    svg = render_tiling_svg(args.n)
    try:
        with open(args.path, "w", encoding="utf-8") as fp:
            fp.write(svg)
    except OSError as exc:
        print("cannot write %s: %s" % (args.path, exc), file=sys.stderr)
        return 2
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="triparts",
        description="partitions into three parts: counting, box decomposition, "
                    "divisibility and cranks")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("count", help="evaluate p(n,3)")
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=_METHODS + ("all",), default="all")
    p.set_defaults(fn=cmd_count)

    p = sub.add_parser("decompose", help="box decomposition of a partition")
    p.add_argument("l1", type=int)
    p.add_argument("l2", type=int)
    p.add_argument("l3", type=int)
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("hstar", help="height census of the fundamental box")
    p.set_defaults(fn=cmd_hstar)

    p = sub.add_parser("residues", help="divisible residue classes for a modulus")
    p.add_argument("m", type=int)
    p.set_defaults(fn=cmd_residues)

    p = sub.add_parser("verify", help="check the characterization against brute force")
    p.add_argument("m", type=int)
    p.add_argument("--max-n", type=int, default=None)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("histogram", help="crank histogram over P(n,3)")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--crank", choices=("cls", "closed", "plan"), default="cls")
    p.add_argument("--r-prime", default="2m-2",
                   help="progression label for --crank plan (e.g. %s)"
                        % ", ".join(case_labels()))
    p.add_argument("--fast", action="store_true",
                   help="use the counting route instead of enumeration (cls only)")
    p.add_argument("--expect-uniform", action="store_true",
                   help="exit 1 if the histogram is not uniform")
    p.set_defaults(fn=cmd_histogram)

    p = sub.add_parser("cycles", help="cycle decomposition of the stepping permutation")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(fn=cmd_cycles)

    p = sub.add_parser("rectangle", help="rectangle arrangement report")
    p.add_argument("m", type=int)
    p.add_argument("k_prime", type=int)
    p.add_argument("r_prime", help="progression label, one of %s"
                                   % ", ".join(case_labels()))
    p.add_argument("--cells-csv", default=None,
                   help="also write the cell-to-partition table to this path")
    p.set_defaults(fn=cmd_rectangle)

    p = sub.add_parser("tile", help="SVG of P(n,3) colored by box remainder")
    p.add_argument("n", type=int)
    p.add_argument("path")
    p.set_defaults(fn=cmd_tile)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
