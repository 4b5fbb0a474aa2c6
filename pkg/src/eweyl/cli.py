"""Command-line front end.

Subcommands: list-groups, grid, spectrum, eval, forward, inverse,
interp, verify, tables, contour, dump-group.  All outputs are
deterministic: canonical grid order, fixed float formatting, rationals
as ``num/den`` strings.  Exit codes: 0 success, 1 verification failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction

import numpy as np

from .lie_data import (
    ConfigurationError,
    Q,
    SUPPORTED_SELECTORS,
    UsageError,
    coweight_gram,
    system_from_selector,
)
from .weyl import even_subgroup, generate_weyl
from .grids import build_point_grid, build_weight_grid, in_even_domain
from .efunc import xi
from .transform import (
    CoefficientSet,
    forward_discrete,
    gram_residual,
    inverse_discrete,
    make_samples,
    set_default_threads,
    TOL_ORTHOGONALITY,
)
from . import transform, verify
from .verify import KNOWN_ERRATA, TABLE_IDS, pattern_string, regenerate_table


def _fmt17(x: float) -> str:
    return format(float(x), ".17g")


def _fraction_str(v: Fraction) -> str:
    v = Q(v)
    return f"{v.numerator}/{v.denominator}"


def _parse_fraction(text: str) -> Fraction:
    try:
        return Q(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {text!r}") from None


def _system(args):
    if args.group not in SUPPORTED_SELECTORS:
        raise UsageError(
            f"unknown group selector {args.group!r}; use one of {', '.join(SUPPORTED_SELECTORS)}"
        )
    return system_from_selector(args.group)


def _ms(system, args):
    ms = tuple(args.M)
    want = 1 if args.kind == "e" else len(system.factors)
    if len(ms) != want:
        raise UsageError(
            f"kind {args.kind!r} for {system.selector} takes {want} modulus value(s), got {len(ms)}"
        )
    if any(m < 1 for m in ms):
        raise UsageError("moduli must be positive integers")
    return ms


def _out_stream(args):
    if getattr(args, "out", None):
        return open(args.out, "w", encoding="utf-8", newline="")
    return sys.stdout


def _label_names(system, prefix):
    return pattern_string(system, (1,) * (system.n + len(system.factors)), prefix)[1:-1].split(",")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_list_groups(args):
    for sel in SUPPORTED_SELECTORS:
        sysm = system_from_selector(sel)
        ge = even_subgroup(sysm, "e")
        gee = even_subgroup(sysm, "ee")
        print(f"{sel}  rank={sysm.n}  detC={sysm.det_cartan}  |We|={ge.order}  |Wee|={gee.order}")
    return 0


def _cmd_grid(args):
    sysm = _system(args)
    ms = _ms(sysm, args)
    grid = build_point_grid(sysm, args.kind, ms)
    out = _out_stream(args)
    names = _label_names(sysm, "s")
    coords = [f"x{i + 1}" for i in range(sysm.n)]
    print(",".join(names + coords + ["eps"]), file=out)
    for gp in grid:
        row = [str(v) for v in gp.label]
        row += [_fraction_str(c) for c in gp.point]
        row.append(str(gp.epsilon))
        print(",".join(row), file=out)
    if out is not sys.stdout:
        out.close()
    return 0


def _cmd_spectrum(args):
    sysm = _system(args)
    ms = _ms(sysm, args)
    spectrum = build_weight_grid(sysm, args.kind, ms)
    out = _out_stream(args)
    names = _label_names(sysm, "t")
    coords = [f"a{i + 1}" for i in range(sysm.n)]
    print(",".join(names + coords + ["h"]), file=out)
    for sp in spectrum:
        row = [str(v) for v in sp.label]
        row += [str(c) for c in sp.weight]
        row.append(str(sp.h))
        print(",".join(row), file=out)
    if out is not sys.stdout:
        out.close()
    return 0


def _point_from_args(sysm, args):
    if args.point is not None and args.label is not None:
        raise UsageError("give either --point or --label, not both")
    if args.point is not None:
        if len(args.point) != sysm.n:
            raise UsageError(f"--point needs {sysm.n} rational coordinates")
        return tuple(_parse_fraction(p) for p in args.point)
    if args.label is not None:
        if not args.M:
            raise UsageError("--label requires --M")
        ms = _ms(sysm, args)
        per_factor = ms if args.kind == "ee" else ms * len(sysm.factors)
        label = tuple(args.label)
        want = sysm.n + len(sysm.factors)
        if len(label) != want:
            raise UsageError(f"--label needs {want} integers for {sysm.selector}")
        coords = []
        pos = 0
        for f, m in zip(sysm.factors, per_factor):
            part = label[pos: pos + 1 + f.rank]
            marks = f.marks
            if part[0] + sum(mk * s for mk, s in zip(marks, part[1:])) != m:
                raise UsageError(f"label block {part} violates its constraint for M={m}")
            coords.extend(Q(s, m) for s in part[1:])
            pos += 1 + f.rank
        return tuple(coords)
    raise UsageError("one of --point or --label is required")


def _cmd_eval(args):
    sysm = _system(args)
    lam = tuple(args.lam)
    if len(lam) != sysm.n:
        raise UsageError(f"--lambda needs {sysm.n} integers for {sysm.selector}")
    x = _point_from_args(sysm, args)
    value = xi(sysm, args.kind, lam, x)
    print(f"{value.real:.15g} {value.imag:.15g}")
    return 0


_SAMPLE_HEADER_TAIL = ["re", "im"]


def _read_samples_csv(path, sysm, kind, ms):
    grid = build_point_grid(sysm, kind, ms)
    names = _label_names(sysm, "s") + _SAMPLE_HEADER_TAIL
    with open(path, encoding="utf-8") as fp:
        lines = [ln.strip() for ln in fp if ln.strip()]
    if not lines or lines[0].split(",") != names:
        raise UsageError(f"sample CSV header must be {','.join(names)!r}")
    rows = lines[1:]
    if len(rows) != len(grid):
        raise UsageError(f"sample CSV has {len(rows)} rows, grid has {len(grid)}")
    values = []
    for row, gp in zip(rows, grid):
        cells = row.split(",")
        if len(cells) != len(names):
            raise UsageError(f"malformed sample row: {row!r}")
        label = tuple(int(c) for c in cells[: -2])
        if label != gp.label:
            raise UsageError(
                f"sample row label {label} does not match canonical grid label {gp.label}"
            )
        values.append(complex(float(cells[-2]), float(cells[-1])))
    return make_samples(sysm, kind, ms, values)


def _write_samples_csv(out, sysm, samples):
    names = _label_names(sysm, "s") + _SAMPLE_HEADER_TAIL
    print(",".join(names), file=out)
    for gp, v in zip(samples.grid, samples.values):
        row = [str(x) for x in gp.label] + [_fmt17(v.real), _fmt17(v.imag)]
        print(",".join(row), file=out)


def _write_coeff_json(out, coeffs: CoefficientSet):
    entries = []
    for sp, v in zip(coeffs.spectrum, coeffs.values):
        t = ", ".join(str(x) for x in sp.label)
        entries.append(
            f'    {{"t": [{t}], "re": {_fmt17(v.real)}, "im": {_fmt17(v.imag)}}}'
        )
    ms = ", ".join(str(m) for m in coeffs.ms)
    body = ",\n".join(entries)
    print(
        '{\n'
        f'  "group": "{coeffs.system.selector}",\n'
        f'  "kind": "{coeffs.kind}",\n'
        f'  "M": [{ms}],\n'
        '  "entries": [\n' + body + "\n  ]\n}",
        file=out,
    )


def _read_coeff_json(path):
    with open(path, encoding="utf-8") as fp:
        try:
            data = json.load(fp)
        except json.JSONDecodeError as exc:
            raise UsageError(f"malformed coefficient JSON: {exc}") from None
    for field in ("group", "kind", "M", "entries"):
        if field not in data:
            raise UsageError(f"coefficient JSON is missing field {field!r}")
    if data["group"] not in SUPPORTED_SELECTORS:
        raise UsageError(f"unknown group selector {data['group']!r} in JSON")
    sysm = system_from_selector(data["group"])
    kind = data["kind"]
    if kind not in ("e", "ee"):
        raise UsageError(f"unknown kind {kind!r} in JSON")
    ms = tuple(int(m) for m in data["M"])
    spectrum = build_weight_grid(sysm, kind, ms)
    if len(data["entries"]) != len(spectrum):
        raise UsageError(
            f"JSON has {len(data['entries'])} entries, spectrum has {len(spectrum)}"
        )
    values = []
    for entry, sp in zip(data["entries"], spectrum):
        if tuple(entry["t"]) != sp.label:
            raise UsageError(
                f"entry label {entry['t']} does not match canonical spectrum label {sp.label}"
            )
        values.append(complex(entry["re"], entry["im"]))
    return CoefficientSet(sysm, kind, ms, spectrum, tuple(values))


def _cmd_forward(args):
    sysm = _system(args)
    ms = _ms(sysm, args)
    samples = _read_samples_csv(args.samples, sysm, args.kind, ms)
    coeffs = forward_discrete(samples)
    out = _out_stream(args)
    _write_coeff_json(out, coeffs)
    if out is not sys.stdout:
        out.close()
    return 0


def _cmd_inverse(args):
    coeffs = _read_coeff_json(args.coeffs)
    samples = inverse_discrete(coeffs)
    out = _out_stream(args)
    _write_samples_csv(out, coeffs.system, samples)
    if out is not sys.stdout:
        out.close()
    return 0


def _cmd_interp(args):
    coeffs = _read_coeff_json(args.coeffs)
    if len(args.point) != coeffs.system.n:
        raise UsageError(f"--point needs {coeffs.system.n} rational coordinates")
    x = tuple(_parse_fraction(p) for p in args.point)
    value = transform.interpolate(coeffs, x)
    print(f"{value.real:.15g} {value.imag:.15g}")
    return 0


def _cmd_verify(args):
    sysm = _system(args)
    ms = _ms(sysm, args)
    rng = random.Random(args.seed)
    residual = gram_residual(sysm, args.kind, ms)
    grid = build_point_grid(sysm, args.kind, ms)
    worst_rt = 0.0
    for _ in range(args.trials):
        vals = [complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in grid]
        samples = make_samples(sysm, args.kind, ms, vals)
        back = inverse_discrete(forward_discrete(samples))
        worst_rt = max(
            worst_rt, max(abs(a - b) for a, b in zip(back.values, samples.values))
        )
    ok = residual < TOL_ORTHOGONALITY and worst_rt < TOL_ORTHOGONALITY
    print(f"group {sysm.selector} kind {args.kind} M {list(ms)}")
    print(f"  gram residual      {residual:.3e}  (tolerance {TOL_ORTHOGONALITY:g})")
    print(f"  round-trip error   {worst_rt:.3e}  (tolerance {TOL_ORTHOGONALITY:g}, "
          f"{args.trials} random sample sets, seed {args.seed})")
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def _cmd_tables(args):
    table_ids = [args.table] if args.table else list(TABLE_IDS)
    ok = True
    reports = []
    for tid in table_ids:
        report = regenerate_table(tid, args.M)
        reports.append(report)
        known = expected_mismatches = 0
        unexpected = []
        for row in report.mismatches:
            key = (tid, row.coefficient, row.group, row.pattern)
            pinned = KNOWN_ERRATA.get(key)
            if pinned == (row.reference, row.computed):
                known += 1
            else:
                unexpected.append(row)
        skipped = len(report.skipped)
        matched = sum(1 for r in report.rows if r.status == "match")
        if unexpected or skipped:
            ok = False
        if not args.json:
            print(
                f"{tid}: {len(report.rows)} rows, {matched} match, "
                f"{known} known errata, {len(unexpected)} unexpected, {skipped} skipped"
            )
            for row in report.mismatches:
                tag = "errata" if (tid, row.coefficient, row.group, row.pattern) in KNOWN_ERRATA else "UNEXPECTED"
                print(
                    f"  [{tag}] {row.coefficient} {row.group} {row.pattern}: "
                    f"tabulated {row.reference}, computed {row.computed}"
                )
    if args.json:
        payload = [
            {
                "table_id": rep.table_id,
                "modulus": rep.modulus,
                "rows": [
                    {
                        "coefficient": r.coefficient,
                        "pattern": r.pattern,
                        "group": r.group,
                        "reference": r.reference,
                        "computed": r.computed,
                        "modulus": r.modulus,
                        "status": r.status,
                    }
                    for r in rep.rows
                ],
            }
            for rep in reports
        ]
        print(json.dumps(payload, indent=2))
    return 0 if ok else 1


def _parse_pin(text):
    if "=" not in text:
        raise UsageError("--pin takes the form INDEX=RATIONAL, e.g. 0=1/2")
    idx, _, val = text.partition("=")
    try:
        return int(idx), Q(val)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"malformed --pin value {text!r}") from None


def _cmd_contour(args):
    sysm = _system(args)
    lam = tuple(args.lam)
    if len(lam) != sysm.n:
        raise UsageError(f"--lambda needs {sysm.n} integers for {sysm.selector}")
    pin = None
    if sysm.n > 2:
        if not args.pin:
            raise UsageError("rank-3 groups need --pin INDEX=RATIONAL to fix one coordinate")
        pin = _parse_pin(args.pin)
        if not 0 <= pin[0] < sysm.n:
            raise UsageError(f"--pin index out of range 0..{sysm.n - 1}")
    elif args.pin:
        raise UsageError("--pin only applies to rank-3 groups")
    free = [i for i in range(sysm.n) if pin is None or i != pin[0]]
    n_samples = args.samples_per_axis
    ticks = [Q(2 * k + 1, 2 * n_samples) - 1 for k in range(2 * n_samples)]
    gram = coweight_gram(sysm)
    sub = np.array(
        [[float(gram[i][j]) for j in free] for i in free], dtype=float
    )
    embed = np.linalg.cholesky(sub).T
    out = _out_stream(args)
    print("x,y,re,im", file=out)
    import itertools

    for uv in itertools.product(ticks, repeat=len(free)):
        coords = [Q(0)] * sysm.n
        if pin is not None:
            coords[pin[0]] = pin[1]
        for i, v in zip(free, uv):
            coords[i] = v
        point = tuple(coords)
        if not in_even_domain(sysm, args.kind, point):
            continue
        cart = embed @ np.array([float(v) for v in uv])
        value = xi(sysm, args.kind, lam, point)
        print(
            f"{_fmt17(cart[0])},{_fmt17(cart[1])},{_fmt17(value.real)},{_fmt17(value.imag)}",
            file=out,
        )
    if out is not sys.stdout:
        out.close()
    return 0


def _cmd_dump_group(args):
    sysm = _system(args)
    group = generate_weyl(sysm) if args.kind == "w" else even_subgroup(sysm, args.kind)
    payload = {
        "group": sysm.selector,
        "kind": args.kind,
        "order": group.order,
        "elements": [
            {
                "weight_matrix": [list(r) for r in w.weight_matrix],
                "coweight_matrix": [list(r) for r in w.coweight_matrix],
                "det": w.det,
            }
            for w in group
        ],
    }
    print(json.dumps(payload, indent=2))
    return 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _add_group_args(p, kinds=("e", "ee")):
    p.add_argument("--group", required=True, help="group selector, e.g. a1xc2")
    p.add_argument("--kind", required=True, choices=kinds, help="even group kind")


def _add_m_arg(p, required=True):
    p.add_argument(
        "--M",
        type=int,
        nargs="+",
        required=required,
        help="modulus (one value for kind e, one per factor for kind ee)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eweyl",
        description="Orbit functions of even Weyl groups: grids, transforms, checks.",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=int(os.environ.get("EWEYL_THREADS", "1")),
        help="worker threads for independent per-row sums (default 1: sequential)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list-groups", help="list supported group selectors")

    p = sub.add_parser("grid", help="emit the discrete point grid as CSV")
    _add_group_args(p)
    _add_m_arg(p)
    p.add_argument("--out")

    p = sub.add_parser("spectrum", help="emit the weight grid as CSV")
    _add_group_args(p)
    _add_m_arg(p)
    p.add_argument("--out")

    p = sub.add_parser("eval", help="evaluate one orbit sum at one point")
    _add_group_args(p)
    p.add_argument("--lambda", dest="lam", type=int, nargs="+", required=True)
    p.add_argument("--point", nargs="+", help="rational coordinates, e.g. 1/3 1/2")
    p.add_argument("--label", type=int, nargs="+", help="grid label (closed branch)")
    _add_m_arg(p, required=False)

    p = sub.add_parser("forward", help="discrete transform of a sample CSV")
    _add_group_args(p)
    _add_m_arg(p)
    p.add_argument("--samples", required=True)
    p.add_argument("--out")

    p = sub.add_parser("inverse", help="evaluate coefficients back to samples")
    p.add_argument("--coeffs", required=True)
    p.add_argument("--out")

    p = sub.add_parser("interp", help="evaluate the interpolation series at a point")
    p.add_argument("--coeffs", required=True)
    p.add_argument("--point", nargs="+", required=True)

    p = sub.add_parser("verify", help="orthogonality and round-trip self-test")
    _add_group_args(p)
    _add_m_arg(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=3)

    p = sub.add_parser("tables", help="regenerate the reference coefficient tables")
    p.add_argument("--table", choices=TABLE_IDS)
    p.add_argument("--M", type=int, default=5)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("contour", help="export orbit-sum values over the domain")
    _add_group_args(p)
    p.add_argument("--lambda", dest="lam", type=int, nargs="+", required=True)
    p.add_argument("--samples-per-axis", type=int, default=32)
    p.add_argument("--pin", help="INDEX=RATIONAL, fixes one coordinate of a rank-3 group")
    p.add_argument("--out")

    p = sub.add_parser("dump-group", help="dump group elements as JSON")
    p.add_argument("--group", required=True)
    p.add_argument("--kind", default="e", choices=("w", "e", "ee"))

    return parser


_COMMANDS = {
    "list-groups": _cmd_list_groups,
    "grid": _cmd_grid,
    "spectrum": _cmd_spectrum,
    "eval": _cmd_eval,
    "forward": _cmd_forward,
    "inverse": _cmd_inverse,
    "interp": _cmd_interp,
    "verify": _cmd_verify,
    "tables": _cmd_tables,
    "contour": _cmd_contour,
    "dump-group": _cmd_dump_group,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    set_default_threads(args.threads)
    try:
        return _COMMANDS[args.command](args)
    except (UsageError, ConfigurationError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
