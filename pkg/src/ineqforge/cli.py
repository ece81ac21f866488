"""Command line interface.

Subcommands: list, verify, sharpness, constants, means, table, suite.
Exit codes: 0 on success, 1 when a verification or probe check fails
(with the witness printed), 2 on usage errors, unknown ids, or bad input.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from typing import Sequence

from . import constants, kernels, means
from .catalog import load_catalog
from .errors import IneqForgeError
from .verifier import (
    VerificationConfig,
    probe_sharpness,
    run_suite,
    verify_chain,
)

_CONFIG_INT_KEYS = ("samples", "refine_depth", "ratio_samples", "threads")
_CONFIG_FLOAT_KEYS = ("endpoint_eps", "ratio_max", "epsilon")
_CONFIG_KEYS = _CONFIG_INT_KEYS + _CONFIG_FLOAT_KEYS


class _UsageError(Exception):
    pass


def _read_config_file(path: str) -> dict:
    values: dict[str, object] = {}
    try:
        with open(path, "r", encoding="utf-8") as handle:
            lines = handle.readlines()
    except OSError as exc:
        raise _UsageError(f"cannot read config file {path!r}: {exc.strerror}") from exc
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise _UsageError(f"{path}:{lineno}: expected key=value, got {raw.strip()!r}")
        key, _, text = line.partition("=")
        key = key.strip()
        text = text.strip()
        if key not in _CONFIG_KEYS:
            raise _UsageError(
                f"{path}:{lineno}: unknown key {key!r}; known keys: {', '.join(_CONFIG_KEYS)}"
            )
        try:
            values[key] = int(text) if key in _CONFIG_INT_KEYS else float(text)
        except ValueError:
            raise _UsageError(f"{path}:{lineno}: cannot parse value {text!r} for {key!r}") from None
    return values


def _add_config_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", metavar="PATH", help="key=value file with verifier settings")
    parser.add_argument("--samples", type=int, help="grid points per interval")
    parser.add_argument("--refine-depth", type=int, dest="refine_depth")
    parser.add_argument("--endpoint-eps", type=float, dest="endpoint_eps")
    parser.add_argument("--ratio-max", type=float, dest="ratio_max")
    parser.add_argument("--ratio-samples", type=int, dest="ratio_samples")
    parser.add_argument("--epsilon", type=float, help="probe perturbation size")
    parser.add_argument("--threads", type=int)


def _build_config(args: argparse.Namespace) -> VerificationConfig:
    # Flags beat the config file, the config file beats defaults.
    values: dict[str, object] = {}
    if getattr(args, "config", None):
        values.update(_read_config_file(args.config))
    for key in _CONFIG_KEYS:
        flag = getattr(args, key, None)
        if flag is not None:
            values[key] = flag
    return VerificationConfig(**values)


def _write_json(path: str, payload: dict) -> None:
    text = json.dumps(payload, indent=2, sort_keys=False)
    if path == "-":
        print(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")


def _cmd_list(args: argparse.Namespace) -> int:
    cat = load_catalog()
    sections = []
    if args.chains or not (args.chains or args.probes or args.kernels):
        sections.append("chains")
    if args.probes or not (args.chains or args.probes or args.kernels):
        sections.append("probes")
    if args.kernels or not (args.chains or args.probes or args.kernels):
        sections.append("kernels")
    if "chains" in sections:
        print("chains:")
        for cid in cat.chain_ids():
            chain = cat.get_chain(cid)
            if chain.kind == "kernel":
                lo, hi = chain.domain
                where = f"t in ({lo:.6g}, {hi:.6g})"
            else:
                where = f"{chain.substitution} substitution, scale {chain.scale}"
            print(f"  {cid:12s} {chain.kind:6s} {len(chain.members)} members, {where}")
    if "probes" in sections:
        print("probes:")
        for pid in cat.probe_ids():
            probe = cat.get_probe(pid)
            print(
                f"  {pid:12s} chain {probe.chain:8s} base {probe.base} "
                f"direction {probe.direction} region {probe.region}"
            )
    if "kernels" in sections:
        print("kernels:")
        for kid, kernel in kernels.KERNELS.items():
            limits = []
            if kernel.limit_lo is not None:
                limits.append(f"lo={kernel.limit_lo:.6g}")
            if kernel.limit_hi is not None:
                tag = "asymptote" if kernel.hi_asymptotic else "hi"
                limits.append(f"{tag}={kernel.limit_hi:.6g}")
            extra = f", {kernel.monotone}" if kernel.monotone else ""
            print(
                f"  {kid:18s} ({kernel.lo:.6g}, {kernel.hi:.6g}) "
                f"{' '.join(limits)}{extra}"
            )
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    cfg = _build_config(args)
    report = verify_chain(args.chain, cfg)
    print(f"chain {report.chain} [{report.kind}]: {report.verdict} ({report.elapsed_s:.2f}s)")
    for link in report.links:
        print(f"  {link.lhs} < {link.rhs}")
        print(
            f"    {link.verdict}: min margin {link.min_margin:.6e} at {link.argmin:.9g}"
        )
        if link.witness is not None:
            print(f"    witness: {json.dumps(link.witness)}")
        if link.note is not None:
            print(f"    note: {link.note}")
    if report.twin_ok is not None:
        print(
            f"  twin margins: max deviation {report.twin_max_deviation:.3e} "
            f"({'ok' if report.twin_ok else 'DISAGREE'})"
        )
    if args.json:
        _write_json(args.json, report.to_dict())
    return 0 if report.verdict == "verified_numeric" else 1


def _cmd_sharpness(args: argparse.Namespace) -> int:
    cfg = _build_config(args)
    report = probe_sharpness(args.probe, cfg)
    print(
        f"probe {report.probe} (chain {report.chain}): parameter "
        f"{report.base_value!r} {report.direction} {report.epsilon:g} -> {report.parameter!r}"
    )
    print(
        f"  scanned {report.region} = [{report.interval[0]:.9g}, {report.interval[1]:.9g}]"
    )
    if report.witness is not None:
        print(f"  witness: {json.dumps(report.witness)}")
    print(f"  verdict: {report.verdict}")
    if args.json:
        _write_json(args.json, report.to_dict())
    return 0 if report.verdict == "falsified" else 1


def _cmd_constants(args: argparse.Namespace) -> int:
    p0 = constants.constant_p0()
    p1 = constants.constant_p1()
    beta = constants.constant_beta()
    gamma = constants.constant_gamma()
    # Residual of the defining equation at the computed value; identically
    # zero only for the registry entries, which are plain closed forms.
    beta_res = beta * math.log(2.0) - (math.log(math.pi) - math.log(2.0) + 1.0)
    gamma_res = gamma * 2.0 * kernels.ln_cos(math.pi / (2.0 * math.sqrt(3.0))) - (
        math.log(2.0) - math.log(math.pi) - 1.0)
    rows = [
        ("p0", p0, constants.p0_residual(p0)),
        ("p1", p1, constants.p1_residual(p1)),
        ("beta", beta, beta_res),
        ("gamma", gamma, gamma_res),
    ]
    rows += [(name, value, 0.0) for name, value in constants.constant_registry()]
    for name, value, residual in rows:
        print(f"{name} = {value!r}  (residual {residual:.3e})")
    if args.json:
        payload = [
            {"name": name, "value": value, "residual": residual}
            for name, value, residual in rows
        ]
        _write_json(args.json, payload)
    return 0


def _cmd_means(args: argparse.Namespace) -> int:
    pair = (args.a, args.b)
    bundle = means.mean_bundle(*pair)
    rows = []
    for kind in means.MEAN_KINDS:
        if kind == "power":
            value = means.evaluate_mean("power", pair, r=means.POWER_DISPLAY_R)
            rows.append((f"power(r=2/3)", value))
        else:
            rows.append((kind, bundle[kind]))
    for name, value in rows:
        print(f"{name:12s} = {value!r}")
    if args.json:
        _write_json(args.json, {name: value for name, value in rows})
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    kernel = kernels.get_kernel(args.kernel)
    span = kernel.hi - kernel.lo
    start = args.start if args.start is not None else kernel.lo + 1e-9 * span
    stop = args.stop if args.stop is not None else kernel.hi - 1e-9 * span
    if not start < stop:
        raise _UsageError(f"empty range [{start!r}, {stop!r}]")
    if args.count < 2:
        raise _UsageError("--count must be at least 2")
    step = (stop - start) / (args.count - 1)
    out = sys.stdout
    handle = None
    if args.csv and args.csv != "-":
        handle = open(args.csv, "w", encoding="utf-8", newline="")
        out = handle
    try:
        writer = csv.writer(out)
        writer.writerow(["t", "value"])
        for i in range(args.count):
            t = start + i * step
            writer.writerow([repr(t), repr(kernel.fn(t))])
    finally:
        if handle is not None:
            handle.close()
    return 0


def _cmd_suite(args: argparse.Namespace) -> int:
    cfg = _build_config(args)
    report = run_suite(cfg)
    width = max(len(row.name) for row in report.rows)
    for row in report.rows:
        mark = "PASS" if row.passed else "FAIL"
        print(f"{mark} {row.name:<{width}s} {row.detail}")
    failed = [row for row in report.rows if not row.passed]
    print(
        f"{len(report.rows) - len(failed)}/{len(report.rows)} checks passed "
        f"in {report.elapsed_s:.1f}s"
    )
    if args.json:
        _write_json(args.json, report.to_dict())
    return 0 if report.passed else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ineqforge",
        description="Verify inequality chains between bivariate means and their "
        "trigonometric/hyperbolic kernel forms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_list = sub.add_parser("list", help="list chains, probes, and kernels")
    p_list.add_argument("--chains", action="store_true")
    p_list.add_argument("--probes", action="store_true")
    p_list.add_argument("--kernels", action="store_true")
    p_list.set_defaults(func=_cmd_list)

    p_verify = sub.add_parser("verify", help="verify one chain on a dense grid")
    p_verify.add_argument("chain", help="chain id (see: ineqforge list --chains)")
    p_verify.add_argument("--json", metavar="PATH", help="write the report as JSON ('-' for stdout)")
    _add_config_flags(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    p_sharp = sub.add_parser("sharpness", help="perturb a probe constant and hunt for a violation")
    p_sharp.add_argument("probe", help="probe id (see: ineqforge list --probes)")
    p_sharp.add_argument("--json", metavar="PATH")
    _add_config_flags(p_sharp)
    p_sharp.set_defaults(func=_cmd_sharpness)

    p_const = sub.add_parser("constants", help="print the solved and closed-form constants")
    p_const.add_argument("--json", metavar="PATH")
    p_const.set_defaults(func=_cmd_constants)

    p_means = sub.add_parser("means", help="evaluate every mean for one pair")
    p_means.add_argument("--a", type=float, required=True)
    p_means.add_argument("--b", type=float, required=True)
    p_means.add_argument("--json", metavar="PATH")
    p_means.set_defaults(func=_cmd_means)

    p_table = sub.add_parser("table", help="dump a kernel as CSV for plotting elsewhere")
    p_table.add_argument("kernel", help="kernel id (see: ineqforge list --kernels)")
    p_table.add_argument("--start", type=float)
    p_table.add_argument("--stop", type=float)
    p_table.add_argument("--count", type=int, default=101)
    p_table.add_argument("--csv", metavar="PATH", help="output file ('-' or omit for stdout)")
    p_table.set_defaults(func=_cmd_table)

    p_suite = sub.add_parser("suite", help="run every packaged check")
    p_suite.add_argument("--json", metavar="PATH")
    _add_config_flags(p_suite)
    p_suite.set_defaults(func=_cmd_suite)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except IneqForgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
