"""
Subcommand implementations.

Each ``cmd_*`` function takes the parsed arguments and returns a
:class:`CommandOutput` holding both the JSON payload and its table view.
"""
import logging
import math
from argparse import Namespace
from pathlib import Path
from typing import Any, Dict, List, Optional

import numpy as np

from extropy import settings
from extropy.cli.contours import build_contour_grid, level_rows, max_extropy_row
from extropy.cli.forecast_file import parse_forecasts
from extropy.cli.formatting import CommandOutput, key_value_rows
from extropy.cli.trajectory import build_trajectory
from extropy.continuum.density_grid import DensityGrid, DensityGridException, load_density
from extropy.continuum.measures import (
    differential_entropy,
    differential_extropy,
    relative_entropy_density,
    relative_extropy_density,
)
from extropy.continuum.probe import convergence_probe
from extropy.divergence.extended import ExtendedNonNegative
from extropy.divergence.relative import (
    complementary_divergence,
    half_euclidean,
    kl_divergence,
)
from extropy.scoring.evaluation import score_sequence
from extropy.scoring.rules import expected_total_log, get_scoring_rule
from extropy.simplex.complement import complement
from extropy.simplex.measures import (
    entropy,
    extropy,
    extropy_quadratic_approx,
    gap,
    max_entropy_value,
    max_extropy_value,
    partition_sum,
    repeat_rate,
)
from extropy.simplex.probability_vector import ProbabilityVector
from extropy.structs import to_builtins
from extropy.utils import (
    ParameterException,
    string_to_float_list,
    string_to_int_list,
)

logger = logging.getLogger(__name__)

DIVERGENCE_MODES = ("kl", "ckl", "euclid", "all")


def read_pmf(value: Optional[str], path: Optional[str] = None) -> ProbabilityVector:
    """
    Build a pmf from a comma-separated argument or from a file.

    File content may separate masses with commas, whitespace or newlines.

    :raises ParameterException: If neither or both sources are given, or a
        value cannot be parsed.
    :raises SimplexException: If the masses are not a pmf.
    """
    if (value is None) == (path is None):
        raise ParameterException("Give a pmf either as an argument or with --pmf-file.")
    if path is not None:
        value = ",".join(Path(path).read_text(encoding="utf-8").split())
    return ProbabilityVector(string_to_float_list(value))


def _extended(d: ExtendedNonNegative) -> Dict[str, Any]:
    return {"value": d.value, "finite": d.finite}


def cmd_measure(args: Namespace) -> CommandOutput:
    pv = read_pmf(args.pmf, args.pmf_file)
    n = pv.n
    payload = {
        "pmf": pv.tolist(),
        "n": n,
        "entropy": entropy(pv),
        "extropy": extropy(pv),
        "entropy_plus_extropy": partition_sum(pv),
        "entropy_minus_extropy": gap(pv),
        "max_entropy": max_entropy_value(n),
        "max_extropy": max_extropy_value(n),
        "complement": None,
        "extropy_from_complement": None,
        "repeat_rate": repeat_rate(pv),
        "extropy_quadratic_approx": extropy_quadratic_approx(pv),
        "expected_total_log_score": expected_total_log(pv),
    }
    if n >= 2:
        q = complement(pv)
        payload["complement"] = q.tolist()
        # Extropy recovered from the entropy of the complement
        payload["extropy_from_complement"] = (n - 1) * (entropy(q) - math.log(n - 1))
    else:
        logger.info("Complement is undefined for a one-point pmf.")
    return CommandOutput(
        payload=payload, header=["quantity", "value"], rows=key_value_rows(payload)
    )


def _divergence_residuals(
    p: ProbabilityVector, s: ProbabilityVector, ckl: ExtendedNonNegative
) -> Dict[str, Optional[float]]:
    n = p.n
    residuals = {"complement_scaling": None, "complementary_representation": None}
    if n < 2 or not ckl.finite:
        return residuals
    qp, qs = complement(p), complement(s)
    residuals["complement_scaling"] = abs(ckl.value - (n - 1) * kl_divergence(qp, qs).value)
    if np.all(qs.masses > 0):
        log_t = np.log(qs.masses)
        representation = (
            extropy(s) - extropy(p) + math.fsum((p.masses - s.masses) * log_t)
        )
        residuals["complementary_representation"] = abs(ckl.value - representation)
    return residuals


def cmd_diverge(args: Namespace) -> CommandOutput:
    p = ProbabilityVector(string_to_float_list(args.p))
    s = ProbabilityVector(string_to_float_list(args.s))
    mode = args.mode
    if mode not in DIVERGENCE_MODES:
        raise ParameterException(
            f"Invalid divergence mode {mode}, try: " + ", ".join(DIVERGENCE_MODES)
        )
    payload: Dict[str, Any] = {"p": p.tolist(), "s": s.tolist(), "mode": mode}
    if mode in ("kl", "all"):
        payload["kl"] = _extended(kl_divergence(p, s))
    if mode in ("ckl", "all"):
        ckl = complementary_divergence(p, s)
        payload["ckl"] = _extended(ckl)
    if mode in ("euclid", "all"):
        payload["euclid"] = half_euclidean(p, s)
    if mode == "all":
        payload["residuals"] = _divergence_residuals(p, s, ckl)
        euclid = payload["euclid"]
        if not ckl.finite:
            relative_gap = None
        elif euclid > 0:
            relative_gap = abs(euclid - ckl.value) / euclid
        else:
            relative_gap = 0.0
        payload["euclid_relative_gap"] = relative_gap
        payload["euclid_approximates_ckl"] = (
            relative_gap is not None and relative_gap < settings.EUCLID_RELATIVE_GAP
        )
    return CommandOutput(
        payload=payload, header=["quantity", "value"], rows=key_value_rows(payload)
    )


def _rule_names(value: Optional[str]) -> List[str]:
    names = settings.DEFAULT_RULES if value is None else [v.strip() for v in value.split(",")]
    names = list(dict.fromkeys(name for name in names if name))
    if not names:
        raise ParameterException("At least one scoring rule is required.")
    for name in names:
        get_scoring_rule(name)
    return names


def cmd_score(args: Namespace) -> CommandOutput:
    rules = _rule_names(args.rules)
    reports = []
    comparison: Dict[str, Dict[str, float]] = {rule: {} for rule in rules}
    rows = []
    for path in args.files:
        forecasts = parse_forecasts(path, args.input_format)
        label = str(path)
        if not forecasts.records:
            reports.append(
                {"file": label, "record_count": 0, "per_record": [], "totals": {}, "finite": {}}
            )
            continue
        report = score_sequence(
            forecasts.records, rules, parallel=args.parallel, num_actors=args.num_actors
        )
        reports.append(
            {
                "file": label,
                "record_count": report.record_count,
                "per_record": to_builtins(report.per_record),
                "totals": report.totals,
                "finite": report.finite,
            }
        )
        for row in report.per_record:
            rows.append([label, row.id, row.rule, row.score, row.finite])
        for rule in rules:
            comparison[rule][label] = report.totals[rule]
            rows.append([label, "total", rule, report.totals[rule], report.finite[rule]])
    payload = {"rules": rules, "reports": reports, "comparison": comparison}
    return CommandOutput(
        payload=payload, header=["file", "id", "rule", "score", "finite"], rows=rows
    )


def cmd_contours(args: Namespace) -> CommandOutput:
    grid = build_contour_grid(args.resolution)
    level = settings.CONTOUR_LEVEL if args.level is None else args.level
    tolerance = (
        settings.CONTOUR_LEVEL_TOLERANCE if args.level_tolerance is None else args.level_tolerance
    )
    near_level = level_rows(grid, level, tolerance)
    if not near_level:
        logger.warning(f"No lattice point has entropy within {tolerance} of {level}.")
    payload = {
        "resolution": grid.resolution,
        "point_count": len(grid.rows),
        "level": {"entropy": level, "tolerance": tolerance, "rows": near_level},
        "max_extropy": max_extropy_row(grid),
        "rows": grid.rows,
    }
    rows = [[r.p1, r.p2, r.p3, r.entropy, r.extropy] for r in grid.rows]
    return CommandOutput(
        payload=payload, header=["p1", "p2", "p3", "entropy", "extropy"], rows=rows
    )


def cmd_contract(args: Namespace) -> CommandOutput:
    pv = read_pmf(args.pmf, args.pmf_file)
    trajectory = build_trajectory(pv, args.steps)
    payload = {
        "pmf": pv.tolist(),
        "n": pv.n,
        "steps": args.steps,
        "contraction_factor": 1.0 / (pv.n - 1),
        "trajectory": trajectory,
    }
    rows = [[t.step, t.pmf, t.sup_distance, t.ratio] for t in trajectory]
    return CommandOutput(
        payload=payload, header=["step", "pmf", "sup_distance", "ratio"], rows=rows
    )


def _result_residuals(f: DensityGrid, h: float, j: float) -> Dict[str, Optional[float]]:
    u = DensityGrid.uniform(f.lower, f.upper, f.size)
    d = relative_entropy_density(f, u)
    return {
        "entropy_residual": (
            abs(d.value - (differential_entropy(u) - h)) if d.finite else None
        ),
        "extropy_residual": abs(
            relative_extropy_density(f, u) - (differential_extropy(u) - j)
        ),
    }


def cmd_continuum(args: Namespace) -> CommandOutput:
    sizes = (
        settings.DEFAULT_PROBE_GRID if args.grid is None else string_to_int_list(args.grid)
    )
    density = load_density(args.density)
    reference = load_density(args.reference) if args.reference else None
    if reference is not None and (
        not math.isclose(reference.lower, density.lower, abs_tol=1e-12)
        or not math.isclose(reference.upper, density.upper, abs_tol=1e-12)
    ):
        raise DensityGridException(
            f"Reference interval [{reference.lower}, {reference.upper}] differs from "
            + f"density interval [{density.lower}, {density.upper}]"
        )
    densities = [density.resample(n) for n in sizes]
    if reference is None:
        references = [DensityGrid.uniform(density.lower, density.upper, n) for n in sizes]
    else:
        references = [reference.resample(n) for n in sizes]
    probes = convergence_probe(densities, references)

    header = [
        "n",
        "step",
        "entropy",
        "extropy",
        "relative_entropy",
        "relative_entropy_finite",
        "relative_extropy",
    ]
    table_rows, payload_rows = [], []
    for f, g, probe in zip(densities, references, probes):
        h = differential_entropy(f)
        j = differential_extropy(f)
        d = relative_entropy_density(f, g)
        dc = relative_extropy_density(f, g)
        probe_fields = to_builtins(probe)
        del probe_fields["n"], probe_fields["step"]
        residuals = _result_residuals(f, h, j)
        row = {
            "n": probe.n,
            "step": probe.step,
            "entropy": h,
            "extropy": j,
            "relative_entropy": _extended(d),
            "relative_extropy": dc,
            **probe_fields,
            **residuals,
        }
        payload_rows.append(row)
        table_rows.append(
            [probe.n, probe.step, h, j, d.value, d.finite, dc]
            + list(probe_fields.values())
            + list(residuals.values())
        )
    header += list(probe_fields) + list(residuals)
    payload = {
        "density": str(args.density),
        "reference": str(args.reference) if args.reference else "uniform",
        "interval": [density.lower, density.upper],
        "rows": payload_rows,
    }
    return CommandOutput(payload=payload, header=header, rows=table_rows)


COMMANDS = {
    "measure": cmd_measure,
    "diverge": cmd_diverge,
    "score": cmd_score,
    "contours": cmd_contours,
    "contract": cmd_contract,
    "continuum": cmd_continuum,
}
