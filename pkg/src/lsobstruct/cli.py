"""
Command-line front end.

Exit codes: 0 OBSTRUCTED, 10 INCONCLUSIVE, 11 NOT_APPLICABLE; errors use
64 (usage / malformed input), 65 (input rejected by the mathematics, e.g. a
slope below 2g-1), 66 (missing input file), 73 (cannot write output).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from .alexpoly import (
    AlexanderPolynomial,
    jump_vector_from_exponents,
    krcatovich_check,
    validate_lspace_form,
)
from .dinv import d_table, fraction_pair, table_csv, table_dict
from .errors import KnotParseError, LSObstructError, SlopeTooSmall
from .families import kn_knot, kn_slope_classification
from .knotio import knot_to_dict, read_census, resolve_knot
from .obstruction import (
    Conclusion,
    classify,
    is_square_free,
    lower_bound_line,
    quick_bound,
    rational_nonfillable_interval,
    rough_estimate,
)
from .torsion import direct_profile, interval_data, profile_csv, torsion_profile

EXIT_USAGE = 64
EXIT_DATA = 65
EXIT_NOINPUT = 66
EXIT_CANTCREAT = 73

FORMATS = ("table", "json", "csv")
FORMAT_ENV = "LSOBSTRUCT_FORMAT"


class CLIError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _approx(q: Fraction) -> str:
    return f"{float(q):.4f}"


def resolve_format(flag):
    fmt = flag or os.environ.get(FORMAT_ENV) or "table"
    if fmt not in FORMATS:
        raise CLIError(f"unknown format {fmt!r} (choose from {', '.join(FORMATS)})", EXIT_USAGE)
    return fmt


def knot_summary(poly: AlexanderPolynomial) -> dict:
    """Genus, jump vector, admissibility and the torsion profile of a knot."""
    seq = validate_lspace_form(poly)
    summary = {"name": poly.name, "genus": seq.exponents[-1], "k": seq.k, "r": None,
               "krcatovich_violations": [], "warnings": []}
    if seq.k == 0:
        return summary
    r = jump_vector_from_exponents(seq)
    summary["r"] = list(r.r)
    bad = krcatovich_check(r)
    summary["krcatovich_violations"] = bad
    if bad:
        summary["warnings"].append("inadmissible r: fails the Krcatovich inequality")
    return summary


def _screens(poly: AlexanderPolynomial, n: int) -> dict:
    seq = validate_lspace_form(poly)
    g = seq.exponents[-1]
    out = {"quick_bound": quick_bound(g, n), "rough_estimate": None}
    if seq.k and seq.k % 2 == 0 and n == 2 * g - 1:
        out["rough_estimate"] = rough_estimate(interval_data(jump_vector_from_exponents(seq)))
    return out


def analyze_report(poly: AlexanderPolynomial, n: int) -> dict:
    summary = knot_summary(poly)
    if summary["k"] == 0:
        raise SlopeTooSmall("the unknot has no positive slope 2g-1; obstruction analysis does not apply")
    profile = direct_profile(poly)
    table = d_table(profile, n)
    verdict = classify(table)
    return {
        "knot": summary,
        "torsion": list(profile.values),
        "d_table": table_dict(table),
        "screens": _screens(poly, n),
        "verdict": verdict.as_dict(),
    }


def _analyze_table(report) -> str:
    k = report["knot"]
    v = report["verdict"]
    lines = [
        f"knot       {k['name'] or '(unnamed)'}",
        f"genus      {k['genus']}",
        f"r          {tuple(k['r'])}",
        f"torsion    {tuple(report['torsion'])}",
    ]
    lines += [f"warning    {w}" for w in k["warnings"]]
    tab = report["d_table"]
    lines.append(f"d-invariants of K({tab['n']})  ({tab['structure_count']} Spin^c structures, labels +-i)")
    lines.append("   i  d (exact)        d (approx)  branch")
    for row in tab["entries"]:
        q = Fraction(*row["d"])
        lines.append(f"{row['i']:4d}  {str(q):<15}  {_approx(q):>10}  {row['branch']}")
    thr = Fraction(*v["threshold"])
    lines.append(f"threshold  {thr} (approx {_approx(thr)})")
    lines.append(f"max d      {Fraction(*v['max_d'])} (approx {_approx(Fraction(*v['max_d']))})")
    lines.append(f"square-free {'yes' if v['square_free'] else 'no'}; weak labels {v['weak_labels'] or 'none'}")
    lines.append(f"verdict    {v['conclusion']}")
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    fmt = resolve_format(args.format)
    poly = resolve_knot(args.knot).knot
    report = analyze_report(poly, args.slope)
    if fmt == "json":
        out = _dump(report)
    elif fmt == "csv":
        out = table_csv(d_table(direct_profile(poly), args.slope))
    else:
        out = _analyze_table(report)
    _emit(out, args.output)
    return Conclusion(report["verdict"]["conclusion"]).exit_code


def scan_report(poly: AlexanderPolynomial, max_slope: int) -> dict:
    summary = knot_summary(poly)
    g = summary["genus"]
    if summary["k"] == 0:
        raise SlopeTooSmall("the unknot has no positive slope 2g-1")
    if max_slope < 2 * g - 1:
        raise SlopeTooSmall(f"--max {max_slope} < 2g-1 = {2 * g - 1}")
    profile = direct_profile(poly)
    rows = []
    for n in range(2 * g - 1, max_slope + 1):
        passed = quick_bound(g, n)
        if passed:
            v = classify(d_table(profile, n))
            rows.append({"slope": n, "quick_bound": True, "screened_out": False,
                         "conclusion": v.conclusion.value, "max_d": fraction_pair(v.max_d),
                         "weak_labels": list(v.weak_labels)})
        else:
            # label g is weak, no tabulation needed
            concl = Conclusion.INCONCLUSIVE if is_square_free(n) else Conclusion.NOT_APPLICABLE
            rows.append({"slope": n, "quick_bound": False, "screened_out": True,
                         "conclusion": concl.value, "max_d": None, "weak_labels": [g]})
    interval = rational_nonfillable_interval(profile, max_slope)
    return {
        "knot": summary,
        "slopes": rows,
        "nonfillable_interval": None if interval is None else interval.as_dict(),
    }


def cmd_scan(args) -> int:
    fmt = resolve_format(args.format)
    poly = resolve_knot(args.knot).knot
    report = scan_report(poly, args.max)
    if fmt == "json":
        out = _dump(report)
    elif fmt == "csv":
        lines = ["slope,quick_bound,screened_out,conclusion,max_d_num,max_d_den"]
        for row in report["slopes"]:
            num, den = row["max_d"] or ("", "")
            lines.append(f"{row['slope']},{int(row['quick_bound'])},{int(row['screened_out'])},"
                         f"{row['conclusion']},{num},{den}")
        out = "\n".join(lines) + "\n"
    else:
        lines = [f"knot {report['knot']['name'] or '(unnamed)'}  genus {report['knot']['genus']}",
                 "slope  screen   conclusion        max d (approx)"]
        for row in report["slopes"]:
            md = "-" if row["max_d"] is None else _approx(Fraction(*row["max_d"]))
            screen = "pass" if row["quick_bound"] else "skipped"
            lines.append(f"{row['slope']:5d}  {screen:<7}  {row['conclusion']:<16}  {md:>10}")
        iv = report["nonfillable_interval"]
        lines.append("non-fillable interval: " +
                     ("none" if iv is None else f"[{iv['low'][0]}, {iv['high'][0]}]"))
        out = "\n".join(lines) + "\n"
    _emit(out, args.output)
    return 0 if report["nonfillable_interval"] is not None else Conclusion.INCONCLUSIVE.exit_code


def batch_record(item, slope_delta: int) -> dict:
    """One census row -> one JSON-ready record.  Never raises."""
    line, name, poly, error = item
    record = {"line": line, "name": name}
    if error is not None:
        record.update(status="invalid", error=error)
        return record
    try:
        summary = knot_summary(poly)
        record.update(genus=summary["genus"], r=summary["r"],
                      admissible=not summary["krcatovich_violations"], warnings=summary["warnings"])
        if summary["k"] == 0:
            record.update(status="invalid", error="unknot: no slope 2g-1 to analyze")
            return record
        profile = direct_profile(poly)
        low = 2 * summary["genus"] - 1
        verdicts = [classify(d_table(profile, n)).as_dict() for n in range(low, low + slope_delta + 1)]
        interval = rational_nonfillable_interval(profile, low + slope_delta)
        record.update(status="ok", verdicts=verdicts,
                      nonfillable_interval=None if interval is None else interval.as_dict())
    except LSObstructError as exc:
        record.update(status="invalid", error=str(exc))
    return record


def _batch_worker(args):
    item, delta = args
    return batch_record(item, delta)


def run_batch(text: str, slope_delta: int = 0, jobs: int | None = None) -> list[dict]:
    items = []
    for line, name, parsed in read_census(text):
        if isinstance(parsed, Exception):
            items.append((line, name, None, str(parsed)))
        else:
            items.append((line, name, parsed, None))
    jobs = jobs or os.cpu_count() or 1
    if jobs == 1 or len(items) < 2:
        return [batch_record(item, slope_delta) for item in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_batch_worker, [(item, slope_delta) for item in items]))


def cmd_batch(args) -> int:
    try:
        text = Path(args.census).read_text(encoding="utf-8")
    except OSError as exc:
        raise CLIError(f"cannot read census {args.census}: {exc.strerror}", EXIT_NOINPUT) from None
    records = run_batch(text, args.delta, args.jobs)
    body = "".join(json.dumps(rec) + "\n" for rec in records)
    if args.output:
        try:
            Path(args.output).write_text(body, encoding="utf-8")
        except OSError as exc:
            raise CLIError(f"cannot write {args.output}: {exc.strerror}", EXIT_CANTCREAT) from None
    else:
        sys.stdout.write(body)
    counts = {"records": len(records)}
    for rec in records:
        counts[rec["status"]] = counts.get(rec["status"], 0) + 1
        for v in rec.get("verdicts", []):
            key = v["conclusion"].lower()
            counts[key] = counts.get(key, 0) + 1
    sys.stderr.write(json.dumps({"summary": counts}) + "\n")
    return 0


def cmd_family(args) -> int:
    if args.family != "kn":
        raise CLIError(f"unknown family {args.family!r}", EXIT_USAGE)
    if args.index < 1:
        raise CLIError("--index must be >= 1", EXIT_USAGE)
    if args.classify:
        out = _dump(kn_slope_classification(args.index).as_dict())
    else:
        member = kn_knot(args.index)
        obj = knot_to_dict(member.knot)
        obj.update(genus=member.genus, tb=member.tb, rot_abs=member.rot_abs,
                   braid_word=list(member.braid_word))
        out = _dump(obj)
    _emit(out, args.output)
    return 0


def plot_files(poly: AlexanderPolynomial, slope: int | None = None) -> dict[str, str]:
    """CSV texts for torsion.csv, bound.csv (even k only) and dinv.csv (with a slope)."""
    seq = validate_lspace_form(poly)
    profile = direct_profile(poly)
    files = {"torsion.csv": profile_csv(profile)}
    if seq.k and seq.k % 2 == 0:
        data = interval_data(jump_vector_from_exponents(seq))
        assert torsion_profile(data) == profile
        slope_, intercept, i_min = lower_bound_line(data)
        files["bound.csv"] = f"slope,intercept,i_min\n{slope_},{intercept},{i_min}\n"
    if slope is not None:
        files["dinv.csv"] = table_csv(d_table(profile, slope), branch=False)
    return files


def cmd_plotdata(args) -> int:
    poly = resolve_knot(args.knot).knot
    files = plot_files(poly, args.slope)
    outdir = Path(args.output or ".")
    try:
        outdir.mkdir(parents=True, exist_ok=True)
        for fname, body in files.items():
            (outdir / fname).write_text(body, encoding="utf-8")
    except OSError as exc:
        raise CLIError(f"cannot write to {outdir}: {exc.strerror}", EXIT_CANTCREAT) from None
    for fname in files:
        print(outdir / fname)
    return 0


def cmd_validate(args) -> int:
    fmt = resolve_format(args.format)
    spec = resolve_knot(args.knot)
    summary = knot_summary(spec.knot)
    summary["source"] = spec.provenance
    if fmt == "json":
        out = _dump(summary)
    else:
        out = "".join(f"{key},{json.dumps(val)}\n" if fmt == "csv" else f"{key:<22} {val}\n"
                      for key, val in summary.items())
    _emit(out, args.output)
    return 0


def _emit(text, path):
    if path:
        try:
            Path(path).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise CLIError(f"cannot write {path}: {exc.strerror}", EXIT_CANTCREAT) from None
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lsobstruct",
                                description="d-invariant obstructions to weak fillability of L-space surgeries")
    sub = p.add_subparsers(dest="command", required=True)
    knot_help = "inline JSON, fixture name (pretzel), family ref kn:N, or JSON file path"

    a = sub.add_parser("analyze", help="full analysis at one integral slope")
    a.add_argument("knot", help=knot_help)
    a.add_argument("--slope", type=int, required=True)
    a.add_argument("--format", choices=FORMATS)
    a.add_argument("--output")
    a.set_defaults(func=cmd_analyze)

    s = sub.add_parser("scan", help="classify slopes 2g-1 .. MAX and report the non-fillable interval")
    s.add_argument("knot", help=knot_help)
    s.add_argument("--max", type=int, required=True)
    s.add_argument("--format", choices=FORMATS)
    s.add_argument("--output")
    s.set_defaults(func=cmd_scan)

    b = sub.add_parser("batch", help="process a census CSV (name,alexander or name,r)")
    b.add_argument("census")
    b.add_argument("--delta", type=int, default=0, help="scan slopes 2g-1 .. 2g-1+DELTA (default 0)")
    b.add_argument("--jobs", type=int, default=None, help="worker processes (default: CPU count)")
    b.add_argument("--output", help="JSON-lines output file (default stdout)")
    b.set_defaults(func=cmd_batch)

    f = sub.add_parser("family", help="built-in knot families")
    f.add_argument("family", choices=["kn"])
    f.add_argument("--index", type=int, required=True)
    f.add_argument("--classify", action="store_true", help="emit the slope report instead of the knot")
    f.add_argument("--output")
    f.set_defaults(func=cmd_family)

    d = sub.add_parser("plot-data", help="write torsion.csv, bound.csv and dinv.csv")
    d.add_argument("knot", help=knot_help)
    d.add_argument("--slope", type=int)
    d.add_argument("--output", help="output directory (default .)")
    d.set_defaults(func=cmd_plotdata)

    v = sub.add_parser("validate", help="check a knot input and show its jump vector")
    v.add_argument("knot", help=knot_help)
    v.add_argument("--format", choices=FORMATS)
    v.add_argument("--output")
    v.set_defaults(func=cmd_validate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else 0
    try:
        return args.func(args)
    except CLIError as exc:
        print(f"lsobstruct: {exc}", file=sys.stderr)
        return exc.code
    except FileNotFoundError as exc:
        print(f"lsobstruct: no such file: {exc}", file=sys.stderr)
        return EXIT_NOINPUT
    except KnotParseError as exc:
        print(f"lsobstruct: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LSObstructError as exc:
        print(f"lsobstruct: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
