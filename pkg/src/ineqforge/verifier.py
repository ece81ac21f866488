"""Numeric verification of the chain catalog.

Four kinds of evidence are produced here: dense-grid ordering checks for
chains, sharpness probes that must break a chain once its optimal constant
is nudged, endpoint-limit agreement for the registered kernels, and grid
monotonicity checks. A chain passes only when every adjacent margin is
nonnegative up to a relative tie threshold and at least one margin is
clearly positive; ties never count as evidence, so a chain of identical
members cannot pass.

All verdicts are numeric evidence, not proof. Reports carry a reproducible
witness (a concrete point with both side values) whenever something fails.
"""

from __future__ import annotations

import math
import os
import random
import sys
import time
from array import array
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from . import constants, kernels, series
from .catalog import (
    MEAN_VARS,
    Catalog,
    Chain,
    Probe,
    load_catalog,
    m6_probe_specs,
    make_m6_chain,
)
from .errors import DomainError
from .means import mean_bundle

# Margins within _TIE_REL * max(1, |lhs|, |rhs|) of zero are ties: neither a
# violation nor positive evidence. The scale floor keeps the threshold from
# collapsing when both sides are tiny.
_TIE_REL = 1e-13
_TWIN_REL = 1e-10
_SPOT_REL = 1e-9
_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
_LIMIT_OFFSETS = (1e-3, 1e-5, 1e-7)

DEFAULT_M6_GRID = (2.0, 1.2, 1.0, 0.5, -1.0)


def _default_threads() -> int:
    raw = os.environ.get("INEQFORGE_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


@dataclass(frozen=True)
class VerificationConfig:
    """Grid sizes and tolerances shared by every check."""

    samples: int = 20001
    refine_depth: int = 30
    endpoint_eps: float = 1e-9
    ratio_max: float = 100.0
    ratio_samples: int = 100
    epsilon: float = 1e-3
    threads: int = field(default_factory=_default_threads)

    def __post_init__(self) -> None:
        if self.samples < 3:
            raise DomainError("samples must be at least 3")
        if self.refine_depth < 0:
            raise DomainError("refine_depth must be nonnegative")
        if not 0.0 < self.endpoint_eps < 0.5:
            raise DomainError("endpoint_eps must lie in (0, 0.5)")
        if not self.ratio_max > 1.0:
            raise DomainError("ratio_max must exceed 1")
        if self.ratio_samples < 2:
            raise DomainError("ratio_samples must be at least 2")
        if self.epsilon <= 0.0:
            raise DomainError("epsilon must be positive")
        if self.threads < 1:
            raise DomainError("threads must be at least 1")


def _linspace(lo: float, hi: float, n: int) -> list[float]:
    step = (hi - lo) / (n - 1)
    xs = [lo + i * step for i in range(n)]
    xs[-1] = hi  # lo + (n-1)*step can round past hi
    return xs


def _inset(lo: float, hi: float, eps: float) -> tuple[float, float]:
    span = hi - lo
    return lo + eps * span, hi - eps * span


def _eval_many(fn: Callable[[float], float], xs: Sequence[float], threads: int) -> list[float]:
    if threads <= 1 or len(xs) < 4096:
        return [fn(x) for x in xs]
    chunk = (len(xs) + threads - 1) // threads
    blocks = [xs[i : i + chunk] for i in range(0, len(xs), chunk)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(lambda block: [fn(x) for x in block], blocks))
    values: list[float] = []
    for part in parts:
        values.extend(part)
    return values


# Member values keyed by (expression, domain, grid shape). The same member
# expression appears in many chains, so this trims most of the grid work.
_GRID_CACHE: dict[tuple, array] = {}


def clear_grid_cache() -> None:
    _GRID_CACHE.clear()


def _member_grid(expr: str, fn: Callable, key: tuple, grid: Sequence[float], threads: int) -> array:
    cache_key = (expr, key)
    values = _GRID_CACHE.get(cache_key)
    if values is None:
        values = array("d", _eval_many(fn, grid, threads))
        _GRID_CACHE[cache_key] = values
    return values


@dataclass
class LinkReport:
    """Verdict for one adjacent pair of chain members."""

    lhs: str
    rhs: str
    verdict: str
    min_margin: float
    argmin: float
    witness: dict | None = None
    note: str | None = None

    def to_dict(self) -> dict:
        out = {
            "lhs": self.lhs,
            "rhs": self.rhs,
            "verdict": self.verdict,
            "min_margin": self.min_margin,
            "argmin": self.argmin,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if self.note is not None:
            out["note"] = self.note
        return out


@dataclass
class ChainReport:
    chain: str
    kind: str
    verdict: str
    links: list[LinkReport]
    samples: int
    elapsed_s: float
    twin_max_deviation: float | None = None
    twin_ok: bool | None = None
    note: str | None = None

    def to_dict(self) -> dict:
        out = {
            "chain": self.chain,
            "kind": self.kind,
            "verdict": self.verdict,
            "config": {"samples": self.samples},
            "elapsed_s": self.elapsed_s,
            "links": [link.to_dict() for link in self.links],
        }
        if self.twin_ok is not None:
            out["twin"] = {
                "max_deviation": self.twin_max_deviation,
                "tolerance_rel": _TWIN_REL,
                "ok": self.twin_ok,
            }
        if self.note is not None:
            out["note"] = self.note
        return out


@dataclass
class ProbeReport:
    probe: str
    chain: str
    parameter: float
    base_value: float
    epsilon: float
    direction: str
    region: str
    interval: tuple[float, float]
    min_margin: float
    verdict: str
    witness: dict | None
    elapsed_s: float

    def to_dict(self) -> dict:
        out = {
            "probe": self.probe,
            "chain": self.chain,
            "parameter": self.parameter,
            "base_value": self.base_value,
            "epsilon": self.epsilon,
            "direction": self.direction,
            "region": self.region,
            "interval": list(self.interval),
            "min_margin": self.min_margin,
            "verdict": self.verdict,
            "elapsed_s": self.elapsed_s,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def _golden_refine(
    value_fn: Callable[[float], tuple[float, float]], a: float, b: float, depth: int
) -> tuple[float, float, float]:
    """Golden-section minimization of the margin rhs - lhs on [a, b]."""

    def margin_at(x: float) -> float:
        va, vb = value_fn(x)
        return vb - va

    # Clamp the probe points: the update arithmetic can round an ulp outside
    # [a, b], and a reported argmin must stay inside the scanned bracket.
    c = max(a, min(b, b - _INV_GOLDEN * (b - a)))
    d = max(a, min(b, a + _INV_GOLDEN * (b - a)))
    fc = margin_at(c)
    fd = margin_at(d)
    for _ in range(depth):
        if fc <= fd:
            b, d, fd = d, c, fc
            c = max(a, min(b, b - _INV_GOLDEN * (b - a)))
            fc = margin_at(c)
        else:
            a, c, fc = c, d, fd
            d = max(a, min(b, a + _INV_GOLDEN * (b - a)))
            fd = margin_at(d)
    x = c if fc <= fd else d
    va, vb = value_fn(x)
    return x, va, vb


def _assess_link(
    lhs_expr: str,
    rhs_expr: str,
    xs: Sequence[float],
    lhs_vals: Sequence[float],
    rhs_vals: Sequence[float],
    value_fn: Callable[[float], tuple[float, float]],
    depth: int,
    coord: str,
) -> LinkReport:
    min_margin = math.inf
    min_idx = 0
    viol_idx = -1
    viol_margin = 0.0
    has_positive = False
    all_zero = True
    for i in range(len(xs)):
        a = lhs_vals[i]
        b = rhs_vals[i]
        m = b - a
        if m != 0.0:
            all_zero = False
        if m < min_margin:
            min_margin = m
            min_idx = i
        theta = _TIE_REL * max(1.0, abs(a), abs(b))
        if m < -theta:
            if viol_idx < 0 or m < viol_margin:
                viol_margin = m
                viol_idx = i
        elif m > theta:
            has_positive = True

    # Narrow dips can fall between grid nodes; refine around the grid minimum.
    rx, ra, rb = xs[min_idx], lhs_vals[min_idx], rhs_vals[min_idx]
    if depth > 0 and len(xs) > 1:
        bracket_lo = xs[max(0, min_idx - 1)]
        bracket_hi = xs[min(len(xs) - 1, min_idx + 1)]
        if bracket_hi > bracket_lo:
            x2, a2, b2 = _golden_refine(value_fn, bracket_lo, bracket_hi, depth)
            if (b2 - a2) < min_margin:
                rx, ra, rb = x2, a2, b2
                min_margin = b2 - a2

    candidates = []
    if viol_idx >= 0:
        candidates.append((xs[viol_idx], lhs_vals[viol_idx], rhs_vals[viol_idx]))
    refined_theta = _TIE_REL * max(1.0, abs(ra), abs(rb))
    if (rb - ra) < -refined_theta:
        candidates.append((rx, ra, rb))
    if candidates:
        wx, wa, wb = min(candidates, key=lambda c: c[2] - c[1])
        witness = {coord: wx, "lhs": wa, "rhs": wb, "margin": wb - wa}
        return LinkReport(lhs_expr, rhs_expr, "falsified", min_margin, rx, witness)
    if all_zero:
        return LinkReport(
            lhs_expr,
            rhs_expr,
            "falsified",
            0.0,
            xs[0],
            note="degenerate: both sides are numerically identical across the grid",
        )
    if not has_positive:
        return LinkReport(
            lhs_expr,
            rhs_expr,
            "inconclusive",
            min_margin,
            rx,
            note="every margin sits inside the tie threshold",
        )
    return LinkReport(lhs_expr, rhs_expr, "verified_numeric", min_margin, rx)


def _chain_verdict(links: Iterable[LinkReport]) -> str:
    verdict = "verified_numeric"
    for link in links:
        if link.verdict == "falsified":
            return "falsified"
        if link.verdict == "inconclusive":
            verdict = "inconclusive"
    return verdict


def _verify_kernel_chain(chain: Chain, config: VerificationConfig) -> list[LinkReport]:
    lo, hi = chain.domain
    glo, ghi = _inset(lo, hi, config.endpoint_eps)
    grid = _linspace(glo, ghi, config.samples)
    key = (lo, hi, config.samples, config.endpoint_eps)
    values = [
        _member_grid(expr, fn, key, grid, config.threads)
        for expr, fn in zip(chain.members, chain.member_fns)
    ]
    links = []
    for i in range(len(chain.members) - 1):
        lf = chain.member_fns[i]
        rf = chain.member_fns[i + 1]
        links.append(
            _assess_link(
                chain.members[i],
                chain.members[i + 1],
                grid,
                values[i],
                values[i + 1],
                lambda x, lf=lf, rf=rf: (lf(x), rf(x)),
                config.refine_depth,
                "t",
            )
        )
    return links


def _verify_mean_chain(
    chain: Chain, config: VerificationConfig
) -> tuple[list[LinkReport], float, bool]:
    step = (config.ratio_max - 1.0) / config.ratio_samples
    ratios = [1.0 + j * step for j in range(1, config.ratio_samples + 1)]
    vectors = []
    for r in ratios:
        bundle = mean_bundle(r, 1.0)
        vectors.append(tuple(bundle[v] for v in MEAN_VARS))
    values = [[fn(*vec) for vec in vectors] for fn in chain.member_fns]

    sub = math.asin if chain.substitution == "arcsin" else math.atan
    ts = [sub((r - 1.0) / (r + 1.0)) for r in ratios]
    scales = [chain.scale_fn(*vec) for vec in vectors]
    twin_values = [
        [s * fn(t) for s, t in zip(scales, ts)] for fn in chain.twin_fns
    ]

    twin_max = 0.0
    twin_ok = True
    for li in range(len(chain.members) - 1):
        for j in range(len(ratios)):
            mean_margin = values[li + 1][j] - values[li][j]
            kern_margin = twin_values[li + 1][j] - twin_values[li][j]
            deviation = abs(mean_margin - kern_margin)
            twin_max = max(twin_max, deviation)
            if deviation > _TWIN_REL * max(1.0, abs(kern_margin)):
                twin_ok = False

    links = []
    for i in range(len(chain.members) - 1):
        lf = chain.member_fns[i]
        rf = chain.member_fns[i + 1]

        def value_fn(r: float, lf=lf, rf=rf) -> tuple[float, float]:
            bundle = mean_bundle(r, 1.0)
            vec = tuple(bundle[v] for v in MEAN_VARS)
            return lf(*vec), rf(*vec)

        link = _assess_link(
            chain.members[i],
            chain.members[i + 1],
            ratios,
            values[i],
            values[i + 1],
            value_fn,
            config.refine_depth,
            "ratio",
        )
        if link.witness is not None:
            link.witness["pair"] = [link.witness["ratio"], 1.0]
        links.append(link)
    return links, twin_max, twin_ok


def verify_chain(
    chain: Chain | str,
    config: VerificationConfig | None = None,
    catalog: Catalog | None = None,
) -> ChainReport:
    """Check every adjacent ordering in a chain on a dense grid.

    Accepts a Chain or a chain id resolved against the packaged catalog.
    Mean-form chains are additionally cross-checked against their kernel
    twins: the margins must agree to relative 1e-10 after scaling.
    """
    cfg = config or VerificationConfig()
    if isinstance(chain, str):
        chain = (catalog or load_catalog()).get_chain(chain)
    start = time.perf_counter()
    twin_max = None
    twin_ok = None
    note = None
    if chain.kind == "kernel":
        links = _verify_kernel_chain(chain, cfg)
    else:
        links, twin_max, twin_ok = _verify_mean_chain(chain, cfg)
    verdict = _chain_verdict(links)
    if twin_ok is False and verdict == "verified_numeric":
        verdict = "inconclusive"
        note = "mean and kernel margins disagree beyond tolerance"
    elapsed = time.perf_counter() - start
    return ChainReport(
        chain=chain.id,
        kind=chain.kind,
        verdict=verdict,
        links=links,
        samples=cfg.samples if chain.kind == "kernel" else cfg.ratio_samples,
        elapsed_s=elapsed,
        twin_max_deviation=twin_max,
        twin_ok=twin_ok,
        note=note,
    )


def _probe_interval(probe: Probe, config: VerificationConfig) -> tuple[float, float]:
    lo, hi = probe.domain
    span = hi - lo
    glo, ghi = _inset(lo, hi, config.endpoint_eps)
    if probe.region == "near_zero":
        return glo, min(ghi, lo + span / 8.0)
    return max(glo, hi - span / 10.0), ghi


def probe_sharpness(
    probe: Probe | str,
    config: VerificationConfig | None = None,
    catalog: Catalog | None = None,
) -> ProbeReport:
    """Nudge a probe's constant by epsilon and hunt for a violation.

    Only the probe's declared region is scanned: the perturbed inequality
    is expected to break where the original was sharp, and a global scan
    would report whichever violation happens to be deepest instead of the
    one the probe is about. Verdict "falsified" means the probe succeeded.
    """
    cfg = config or VerificationConfig()
    if isinstance(probe, str):
        probe = (catalog or load_catalog()).get_probe(probe)
    start = time.perf_counter()
    offset = cfg.epsilon if probe.direction == "+" else -cfg.epsilon
    parameter = probe.base_value + offset
    rlo, rhi = _probe_interval(probe, cfg)
    grid = _linspace(rlo, rhi, cfg.samples)
    lhs_vals = [probe.lhs_fn(parameter, t) for t in grid]
    rhs_vals = [probe.rhs_fn(parameter, t) for t in grid]
    link = _assess_link(
        probe.lhs,
        probe.rhs,
        grid,
        lhs_vals,
        rhs_vals,
        lambda t: (probe.lhs_fn(parameter, t), probe.rhs_fn(parameter, t)),
        cfg.refine_depth,
        "t",
    )
    broke = link.verdict == "falsified" and link.witness is not None
    elapsed = time.perf_counter() - start
    return ProbeReport(
        probe=probe.id,
        chain=probe.chain,
        parameter=parameter,
        base_value=probe.base_value,
        epsilon=cfg.epsilon,
        direction=probe.direction,
        region=probe.region,
        interval=(rlo, rhi),
        min_margin=link.min_margin,
        verdict="falsified" if broke else "not_falsified",
        witness=link.witness,
        elapsed_s=elapsed,
    )


def verify_endpoint_limits(kernel_id: str, tol: float | None = None) -> dict:
    """Check a kernel's stored endpoint limits by approaching them.

    Offsets 1e-3, 1e-5, 1e-7 walk toward each finite endpoint; the absolute
    errors must not increase. Kernels flagged asymptotic are instead sampled
    at their registered probe points, where only the error decrease is
    required (the approach can be slow). When tol is given the final
    offset-based error must also drop below it.
    """
    k = kernels.get_kernel(kernel_id)
    sides: dict[str, dict] = {}
    ok = True

    def shrinking(errors: Sequence[float], limit: float) -> bool:
        # Errors already at rounding noise bounce around; treat everything
        # below the noise floor as converged rather than demanding decrease.
        floor = 64.0 * sys.float_info.epsilon * max(1.0, abs(limit))
        return all(
            errors[i + 1] <= max(errors[i], floor) for i in range(len(errors) - 1)
        )

    if k.limit_lo is not None:
        errors = [abs(k.fn(k.lo + d) - k.limit_lo) for d in _LIMIT_OFFSETS]
        side_ok = shrinking(errors, k.limit_lo)
        if tol is not None:
            side_ok = side_ok and errors[-1] <= tol
        sides["lo"] = {
            "limit": k.limit_lo,
            "offsets": list(_LIMIT_OFFSETS),
            "errors": errors,
            "ok": side_ok,
        }
        ok = ok and side_ok
    if k.limit_hi is not None:
        if k.hi_asymptotic:
            points = list(k.probe_points)
            errors = [abs(k.fn(t) - k.limit_hi) for t in points]
            side_ok = shrinking(errors, k.limit_hi)
            sides["hi"] = {
                "limit": k.limit_hi,
                "points": points,
                "errors": errors,
                "ok": side_ok,
            }
        else:
            errors = [abs(k.fn(k.hi - d) - k.limit_hi) for d in _LIMIT_OFFSETS]
            side_ok = shrinking(errors, k.limit_hi)
            if tol is not None:
                side_ok = side_ok and errors[-1] <= tol
            sides["hi"] = {
                "limit": k.limit_hi,
                "offsets": list(_LIMIT_OFFSETS),
                "errors": errors,
                "ok": side_ok,
            }
        ok = ok and side_ok
    return {"kernel": kernel_id, "sides": sides, "verdict": "ok" if ok else "failed"}


def verify_monotone(
    kernel_id: str,
    direction: str | None = None,
    config: VerificationConfig | None = None,
) -> dict:
    """Grid check that a registered kernel moves in one direction.

    Consecutive differences must never point the wrong way beyond the tie
    threshold, the net change must agree, and seeded central differences at
    random interior points must not contradict the claim.
    """
    k = kernels.get_kernel(kernel_id)
    direction = direction or k.monotone
    if direction not in ("increasing", "decreasing"):
        raise DomainError(
            f"kernel {kernel_id!r} declares no monotone direction; pass one explicitly"
        )
    cfg = config or VerificationConfig()
    glo, ghi = _inset(k.lo, k.hi, cfg.endpoint_eps)
    grid = _linspace(glo, ghi, cfg.samples)
    values = _eval_many(k.fn, grid, cfg.threads)
    sign = 1.0 if direction == "increasing" else -1.0

    witness = None
    worst_step = math.inf
    worst_at = grid[0]
    has_positive = False
    for i in range(len(grid) - 1):
        step = sign * (values[i + 1] - values[i])
        if step < worst_step:
            worst_step = step
            worst_at = grid[i]
        theta = _TIE_REL * max(1.0, abs(values[i]), abs(values[i + 1]))
        if step < -theta and witness is None:
            witness = {
                "t": grid[i],
                "t_next": grid[i + 1],
                "value": values[i],
                "value_next": values[i + 1],
            }
        elif step > theta:
            has_positive = True

    net_change = sign * (values[-1] - values[0])
    rng = random.Random(20260816)
    h = (ghi - glo) * 1e-6
    spots_ok = True
    spot_witness = None
    for _ in range(100):
        x = glo + (ghi - glo) * rng.random()
        xa = max(x - h, glo)
        xb = min(x + h, ghi)
        fa = k.fn(xa)
        fb = k.fn(xb)
        d = sign * (fb - fa)
        if d < -_SPOT_REL * max(1.0, abs(fa), abs(fb)):
            spots_ok = False
            if spot_witness is None:
                spot_witness = {"t": x, "value_left": fa, "value_right": fb}

    if witness is not None or net_change < 0.0 or not spots_ok:
        verdict = "falsified"
    elif not has_positive:
        verdict = "inconclusive"
    else:
        verdict = "verified_numeric"
    report = {
        "kernel": kernel_id,
        "direction": direction,
        "verdict": verdict,
        "worst_step": worst_step,
        "worst_at": worst_at,
        "net_change": net_change,
        "spot_checks_ok": spots_ok,
    }
    if witness is not None:
        report["witness"] = witness
    if spot_witness is not None:
        report["spot_witness"] = spot_witness
    return report


def theorem_m6_iff_suite(
    p_grid: Sequence[float] = DEFAULT_M6_GRID,
    config: VerificationConfig | None = None,
) -> dict:
    """Exercise the exponent-regime chains with their coefficient probes.

    For each exponent the regime chain must verify and both coefficient
    probes must falsify; together these trace the only-if direction of the
    optimal-coefficient statement across the three parameter ranges.
    """
    cfg = config or VerificationConfig()
    cases = []
    passed = True
    for p in p_grid:
        chain = make_m6_chain(p)
        chain_report = verify_chain(chain, cfg)
        probe_reports = [probe_sharpness(pr, cfg) for pr in m6_probe_specs(p)]
        ok = chain_report.verdict == "verified_numeric" and all(
            pr.verdict == "falsified" for pr in probe_reports
        )
        passed = passed and ok
        cases.append(
            {
                "p": p,
                "ok": ok,
                "chain": chain_report.to_dict(),
                "probes": [pr.to_dict() for pr in probe_reports],
            }
        )
    return {"passed": passed, "cases": cases}


def register_builtin_chains(catalog: Catalog | None = None) -> list[str]:
    """Ids of every packaged chain, in catalog order."""
    return (catalog or load_catalog()).chain_ids()


@dataclass
class SuiteRow:
    name: str
    passed: bool
    detail: str

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class SuiteReport:
    rows: list[SuiteRow]
    passed: bool
    elapsed_s: float

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "elapsed_s": self.elapsed_s,
            "rows": [row.to_dict() for row in self.rows],
        }


_SERIES_DIRECT = (
    ("csc", lambda t: 1.0 / math.sin(t)),
    ("cot", lambda t: math.cos(t) / math.sin(t)),
    ("tan", math.tan),
    ("csc2", lambda t: 1.0 / (math.sin(t) * math.sin(t))),
)


def _chain_detail(report: ChainReport) -> str:
    worst = min(report.links, key=lambda link: link.min_margin)
    if report.verdict == "verified_numeric":
        return f"min margin {worst.min_margin:.3e} at {worst.argmin:.6g}"
    if worst.witness is not None:
        w = worst.witness
        coord = "ratio" if report.kind == "mean" else "t"
        return (
            f"{worst.lhs} >= {worst.rhs} at {coord}={w[coord]!r}: "
            f"lhs={w['lhs']!r} rhs={w['rhs']!r}"
        )
    return worst.note or report.verdict


def run_suite(
    config: VerificationConfig | None = None, catalog: Catalog | None = None
) -> SuiteReport:
    """Run every packaged check and collect one pass/fail row per item."""
    cfg = config or VerificationConfig()
    cat = catalog or load_catalog()
    start = time.perf_counter()
    rows: list[SuiteRow] = []

    for cid in cat.chain_ids():
        report = verify_chain(cat.get_chain(cid), cfg)
        rows.append(
            SuiteRow(f"chain:{cid}", report.verdict == "verified_numeric", _chain_detail(report))
        )

    for pid in cat.probe_ids():
        report = probe_sharpness(cat.get_probe(pid), cfg)
        if report.witness is not None:
            detail = (
                f"violation at t={report.witness['t']:.6g}, "
                f"margin {report.witness['margin']:.3e}"
            )
        else:
            detail = f"no violation found in {report.region}"
        rows.append(SuiteRow(f"probe:{pid}", report.verdict == "falsified", detail))

    for kid, kernel in kernels.KERNELS.items():
        if kernel.monotone is None:
            continue
        report = verify_monotone(kid, config=cfg)
        rows.append(
            SuiteRow(
                f"monotone:{kid}",
                report["verdict"] == "verified_numeric",
                f"{report['direction']}, worst step {report['worst_step']:.3e}",
            )
        )

    for kid, kernel in kernels.KERNELS.items():
        if kernel.limit_lo is None and kernel.limit_hi is None:
            continue
        report = verify_endpoint_limits(kid)
        parts = []
        for side, info in report["sides"].items():
            parts.append(f"{side} err {info['errors'][-1]:.3e}")
        rows.append(
            SuiteRow(f"limits:{kid}", report["verdict"] == "ok", ", ".join(parts))
        )

    for name, solved, residual_fn in (
        ("p1", constants.constant_p1(), constants.p1_residual),
        ("p0", constants.constant_p0(), constants.p0_residual),
    ):
        residual = abs(residual_fn(solved))
        rows.append(
            SuiteRow(
                f"constant:{name}",
                residual < 1e-13,
                f"value {solved!r}, residual {residual:.3e}",
            )
        )

    for sid, direct in _SERIES_DIRECT:
        worst = 0.0
        for t in (0.3, 0.7, 1.2):
            approx, _ = series.series_eval(sid, t)
            exact = direct(t)
            worst = max(worst, abs(approx - exact) / abs(exact))
        rows.append(SuiteRow(f"series:{sid}", worst <= 1e-12, f"max rel err {worst:.2e}"))

    regimes = theorem_m6_iff_suite(config=cfg)
    for case in regimes["cases"]:
        rows.append(
            SuiteRow(
                f"regime:p={case['p']!r}",
                case["ok"],
                "chain verified and both coefficient probes falsified"
                if case["ok"]
                else "chain or probe check failed",
            )
        )

    elapsed = time.perf_counter() - start
    return SuiteReport(rows, all(row.passed for row in rows), elapsed)
