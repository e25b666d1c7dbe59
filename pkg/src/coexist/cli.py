"""Command-line front end: run coexistence studies from JSON scenarios.

Each subcommand maps one study to machine-readable artifacts in --out:
data tables (CSV by default, JSON with --format json) plus a summary.json
that echoes the fully resolved configuration, the library version, and
the seed, so every run is auditable and byte-for-byte reproducible.

Exit codes: 0 success, 2 config parse failure, 3 validation failure,
4 missing scenario section, 5 computation failure.
"""

from __future__ import annotations

import argparse
import copy
import json
import math
import sys
from pathlib import Path
from types import SimpleNamespace
from typing import Any, Callable, Dict, List, Sequence

import numpy as np

from . import __version__
from .config import (
    MissingSection,
    ParseError,
    Scenario,
    ValidationError,
    load_scenario,
    resolve_grid,
)
from .numerics import db_to_linear, linear_to_db, fit_power_law, log_log_r_squared
from .propagation import (
    AntennaPattern,
    PowerLawPathLoss,
    TabulatedPathLoss,
    fdr_cochannel,
    gain_dbi,
)
from .protection_single import (
    InterferenceBudget,
    dbm,
    inr_vs_performance_drop,
    max_tolerable_interference,
    protection_distance,
    single_user_gamma,
)
from .protection_multi import (
    MainSideLobePolicy,
    OptimalPolicy,
    RadarBlindPolicy,
    SharingPolicy,
    _gain_grid,
    campbell_stats,
    default_lobe_width_rad,
    optimize_beta,
    outage_probability,
    policy_profile,
    protected_area_m2,
    sample_aggregate,
    solve_main_side,
    solve_optimal_profile,
    solve_radar_blind,
)
from .radar_detection import (
    Target,
    effective_snr,
    max_range,
    noise_power_w,
    single_pulse_snr,
    snr_required_albersheim,
)
from .wifi_link import (
    DEFAULT_80211N,
    WifiLink,
    average_throughput,
    duty_factor,
    radar_interference_w,
    throughput_trace,
    wifi_noise_w,
    wifi_sinr,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_MISSING_SECTION = 4
EXIT_COMPUTATION = 5

POLICY_CHOICES = ("optimal", "radar-blind", "main-side-lobe", "single-user")


def _scalar(value: Any) -> Any:
    """Coerce numpy scalars/bools to plain Python for stable serialisation."""
    if isinstance(value, (np.floating, np.integer, np.bool_)):
        return value.item()
    return value


def _sanitize(obj: Any) -> Any:
    """Make a payload strictly JSON-safe: no NaN/Inf literals, no numpy types."""
    obj = _scalar(obj)
    if isinstance(obj, float):
        if math.isnan(obj):
            return "nan"
        if math.isinf(obj):
            return "inf" if obj > 0 else "-inf"
        return obj
    if isinstance(obj, dict):
        return {str(k): _sanitize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_sanitize(v) for v in obj]
    return obj


def _format_cell(value: Any) -> str:
    value = _scalar(value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


class _OutputTracker:
    """Writes artifacts and removes everything it wrote if the run fails."""

    def __init__(self, out_dir: Path, fmt: str):
        self.out_dir = out_dir
        self.fmt = fmt
        self.written: List[Path] = []

    def table(self, name: str, columns: Sequence[str], rows: Sequence[Sequence[Any]]) -> Path:
        if self.fmt == "json":
            path = self.out_dir / f"{name}.json"
            payload = {
                "columns": list(columns),
                "rows": [[_sanitize(v) for v in row] for row in rows],
            }
            path.write_text(
                json.dumps(payload, indent=2, sort_keys=True) + "\n"
            )
        else:
            path = self.out_dir / f"{name}.csv"
            lines = [",".join(columns)]
            lines.extend(",".join(_format_cell(v) for v in row) for row in rows)
            path.write_text("\n".join(lines) + "\n")
        self.written.append(path)
        return path

    def summary(self, payload: Dict[str, Any]) -> Path:
        path = self.out_dir / "summary.json"
        path.write_text(
            json.dumps(_sanitize(payload), indent=2, sort_keys=True) + "\n"
        )
        self.written.append(path)
        return path

    def cleanup(self) -> None:
        for path in self.written:
            try:
                path.unlink()
            except FileNotFoundError:
                pass


# --------------------------------------------------------------------------
# shared pieces
# --------------------------------------------------------------------------


def _budget(scenario: Scenario) -> InterferenceBudget:
    detection = scenario.require("detection")
    baseline_roc, degraded_roc = scenario.roc_pair()
    if "baseline_snr_db" in detection:
        baseline_linear = db_to_linear(detection["baseline_snr_db"])
    else:
        baseline_linear = snr_required_albersheim(baseline_roc)
    required_linear = snr_required_albersheim(degraded_roc)
    return max_tolerable_interference(scenario.radar, baseline_linear, required_linear)


def _cochannel_fdr(scenario: Scenario) -> float:
    if scenario.su.delta_f_hz != 0.0:
        raise ValidationError(
            "su.delta_f_hz: CLI studies assume co-channel operation; "
            "use the library API with an explicit fdr for offset channels"
        )
    return fdr_cochannel(scenario.su.bandwidth_hz, scenario.radar.if_bandwidth_hz)


def _policy_config(scenario: Scenario, override: str | None) -> Dict[str, Any]:
    cfg = dict(scenario.policy)
    if override is not None:
        cfg["type"] = override
    if "type" not in cfg:
        raise MissingSection(
            "scenario is missing the 'policy' section required here"
        )
    return cfg


def _lobe_width_rad(scenario: Scenario, cfg: Dict[str, Any]) -> float:
    if "lobe_width_deg" in cfg:
        return math.radians(cfg["lobe_width_deg"])
    return default_lobe_width_rad(scenario.pattern)


def _solve_policy(
    scenario: Scenario, cfg: Dict[str, Any], i_max_w: float, fdr: float
) -> tuple[SharingPolicy, Dict[str, Any]]:
    """Solve the requested multi-SU policy; returns (policy, result scalars)."""
    kind = cfg["type"]
    field = scenario.require("field")
    args = (field, scenario.su, scenario.pattern, scenario.pathloss, fdr, i_max_w)
    if kind == "radar-blind":
        policy: SharingPolicy = solve_radar_blind(*args)
        results = {"d_min_m": policy.d_min_m}
    elif kind == "optimal":
        policy = solve_optimal_profile(*args)
        _, gains = _gain_grid(scenario.pattern, 4096)
        contour = policy.gamma * gains ** (1.0 / policy.alpha)
        results = {
            "gamma_m": policy.gamma,
            "d_min_m": float(np.min(contour)),
            "d_max_m": float(np.max(contour)),
        }
    elif kind == "main-side-lobe":
        lobe_width = _lobe_width_rad(scenario, cfg)
        if "beta" in cfg:
            policy = solve_main_side(*args, beta=cfg["beta"], lobe_width_rad=lobe_width)
            beta = cfg["beta"]
        else:
            grid = None
            if "beta_grid" in cfg:
                grid = resolve_grid(cfg["beta_grid"], "policy.beta_grid")
            beta, policy = optimize_beta(
                *args, lobe_width_rad=lobe_width, beta_grid=grid
            )
        results = {
            "beta": beta,
            "lobe_width_deg": math.degrees(lobe_width),
            "d_min_m": policy.d_min_m,
            "d_max_m": policy.d_max_m,
        }
    else:
        raise ValidationError(
            f"policy.type: {kind!r} is not a deployment-field policy"
        )
    area = protected_area_m2(policy, scenario.pattern, scenario.pathloss)
    results["area_m2"] = area
    results["area_km2"] = area / 1e6
    return policy, results


def _gating_policy(
    scenario: Scenario, cfg: Dict[str, Any], budget: InterferenceBudget, fdr: float
) -> tuple[SharingPolicy, Dict[str, Any]]:
    """Policy used to gate WiFi transmissions, including single-user sharing."""
    if cfg["type"] == "single-user":
        model = scenario.pathloss
        if not isinstance(model, PowerLawPathLoss):
            raise ValidationError(
                "pathloss.type: single-user gating needs a power-law model"
            )
        gamma = single_user_gamma(
            scenario.su, model, budget, scenario.radar.if_bandwidth_hz, fdr=fdr
        )
        policy = OptimalPolicy(gamma=gamma, alpha=model.alpha)
        return policy, {"gamma_m": gamma}
    return _solve_policy(scenario, cfg, budget.i_max_w, fdr)


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------


def _cmd_detect(scenario: Scenario, tracker: _OutputTracker, opts) -> Dict[str, Any]:
    target_cfg = scenario.require("target")
    baseline, degraded = scenario.roc_pair()
    radar = scenario.radar
    target = Target(range_m=target_cfg["range_m"], rcs_m2=target_cfg["rcs_m2"])
    noise = noise_power_w(radar)
    results = {
        "noise_power_w": noise,
        "noise_power_dbm": dbm(noise),
        "single_pulse_snr_db": linear_to_db(single_pulse_snr(radar, target)),
        "effective_snr_db": linear_to_db(effective_snr(radar, target)),
        "snr_required_baseline_db": linear_to_db(snr_required_albersheim(baseline)),
        "snr_required_degraded_db": linear_to_db(snr_required_albersheim(degraded)),
        "max_range_baseline_m": max_range(radar, baseline, target.rcs_m2),
        "max_range_degraded_m": max_range(radar, degraded, target.rcs_m2),
    }
    if "distance_m" in scenario.sweeps:
        grid = resolve_grid(scenario.sweeps["distance_m"], "distance_m")
        rows = []
        for d in grid:
            probe = Target(range_m=d, rcs_m2=target.rcs_m2)
            rows.append(
                (
                    d,
                    linear_to_db(single_pulse_snr(radar, probe)),
                    linear_to_db(effective_snr(radar, probe)),
                )
            )
        tracker.table(
            "detect_sweep",
            ("distance_m", "single_pulse_snr_db", "effective_snr_db"),
            rows,
        )
    return results


def _cmd_imax(scenario: Scenario, tracker: _OutputTracker, opts) -> Dict[str, Any]:
    budget = _budget(scenario)
    noise = noise_power_w(scenario.radar)
    results = {
        "baseline_snr_db": linear_to_db(budget.baseline_snr_linear),
        "snr_required_db": linear_to_db(budget.sinr_required_linear),
        "noise_power_w": noise,
        "noise_power_dbm": dbm(noise),
        "i_max_w": budget.i_max_w,
        "i_max_dbm": dbm(budget.i_max_w),
        "inr_db": budget.inr_db,
    }
    if "pd_drop" in scenario.sweeps:
        baseline_roc, _ = scenario.roc_pair()
        grid = resolve_grid(scenario.sweeps["pd_drop"], "pd_drop")
        sweep = inr_vs_performance_drop(
            scenario.radar,
            budget.baseline_snr_linear,
            baseline_roc.pd,
            baseline_roc.pfa,
            grid,
        )
        tracker.table("imax_sweep", ("pd_drop", "inr_db"), sweep)
    return results


def _cmd_protect_single(
    scenario: Scenario, tracker: _OutputTracker, opts
) -> Dict[str, Any]:
    budget = _budget(scenario)
    fdr = _cochannel_fdr(scenario)
    radar = scenario.radar

    def distance_at(theta_deg: float) -> float:
        return protection_distance(
            scenario.su,
            scenario.pattern,
            scenario.pathloss,
            budget,
            theta_deg,
            radar.if_bandwidth_hz,
            fdr=fdr,
        )

    results: Dict[str, Any] = {
        "i_max_w": budget.i_max_w,
        "i_max_dbm": dbm(budget.i_max_w),
        "inr_db": budget.inr_db,
        "fdr": fdr,
        "fdr_db": linear_to_db(fdr),
        "boresight_distance_m": distance_at(0.0),
    }
    if isinstance(scenario.pattern, AntennaPattern):
        results["sidelobe_distance_m"] = distance_at(90.0)
    if "theta_deg" in scenario.sweeps:
        grid = resolve_grid(scenario.sweeps["theta_deg"], "theta_deg")
    else:
        grid = [float(t) for t in np.linspace(-180.0, 180.0, 721)]
    rows = [
        (theta, gain_dbi(scenario.pattern, theta), distance_at(theta))
        for theta in grid
    ]
    tracker.table(
        "protect_single", ("theta_deg", "gain_dbi", "protection_distance_m"), rows
    )
    return results


def _cmd_protect_multi(
    scenario: Scenario, tracker: _OutputTracker, opts
) -> Dict[str, Any]:
    budget = _budget(scenario)
    fdr = _cochannel_fdr(scenario)
    cfg = _policy_config(scenario, opts.policy)
    if cfg["type"] == "single-user":
        raise ValidationError(
            "policy.type: 'single-user' has no deployment field; "
            "use protect-single or pick a field policy"
        )
    policy, results = _solve_policy(scenario, cfg, budget.i_max_w, fdr)
    field = scenario.require("field")
    stats = campbell_stats(
        field,
        scenario.su,
        scenario.pattern,
        scenario.pathloss,
        policy_profile(policy, scenario.pattern),
        fdr,
    )
    results.update(
        {
            "policy": cfg["type"],
            "i_max_w": budget.i_max_w,
            "i_max_dbm": dbm(budget.i_max_w),
            "fdr": fdr,
            "aggregate_mean_w": stats.mean_w,
            "aggregate_std_w": stats.std_w,
            "outage_probability": outage_probability(stats, budget.i_max_w),
        }
    )

    contour_theta = [float(t) for t in np.linspace(-180.0, 180.0, 721)]
    profile = policy_profile(policy, scenario.pattern)
    contour_d = profile(np.radians(contour_theta))
    tracker.table(
        "protect_multi_contour",
        ("theta_deg", "distance_m"),
        list(zip(contour_theta, [float(d) for d in contour_d])),
    )

    if "density_per_m2" in scenario.sweeps:
        from dataclasses import replace

        grid = resolve_grid(scenario.sweeps["density_per_m2"], "density_per_m2")
        rows = []
        for density in grid:
            sub_scenario = replace(
                scenario, field=replace(field, density_per_m2=density)
            )
            _, sub_results = _solve_policy(sub_scenario, cfg, budget.i_max_w, fdr)
            rows.append((density, sub_results["d_min_m"], sub_results["area_m2"]))
        tracker.table(
            "protect_multi_sweep", ("density_per_m2", "d_min_m", "area_m2"), rows
        )
    return results


def _cmd_throughput(
    scenario: Scenario, tracker: _OutputTracker, opts
) -> Dict[str, Any]:
    wifi_cfg = scenario.require("wifi")
    budget = _budget(scenario)
    fdr = _cochannel_fdr(scenario)
    cfg = _policy_config(scenario, opts.policy)
    policy, policy_results = _gating_policy(scenario, cfg, budget, fdr)
    link = WifiLink(
        link_loss_db=wifi_cfg["link_loss_db"],
        su=scenario.su,
        rx_noise_figure_db=wifi_cfg["rx_noise_figure_db"],
        rx_bandwidth_hz=wifi_cfg["rx_bandwidth_hz"],
    )
    mode = wifi_cfg.get("mode", "peak")
    n_steps = wifi_cfg.get("n_time_steps", 512)
    if "su_distance_m" not in wifi_cfg:
        raise ValidationError("wifi.su_distance_m: required for throughput runs")
    su_distance = wifi_cfg["su_distance_m"]

    common = (scenario.radar, scenario.pattern, scenario.pathloss, policy)
    trace = throughput_trace(
        link, *common, su_distance, DEFAULT_80211N, mode, n_steps
    )
    tracker.table(
        "throughput_trace",
        ("time_s", "azimuth_deg", "sinr_db", "rate_mbps"),
        trace,
    )

    boresight_peak = radar_interference_w(
        scenario.radar,
        scenario.su,
        scenario.pattern,
        scenario.pathloss,
        su_distance,
        0.0,
        "peak",
    )
    boresight_avg = radar_interference_w(
        scenario.radar,
        scenario.su,
        scenario.pattern,
        scenario.pathloss,
        su_distance,
        0.0,
        "averaged",
    )
    results: Dict[str, Any] = {
        "policy": cfg["type"],
        "mode": mode,
        "su_distance_m": su_distance,
        "noise_power_w": wifi_noise_w(link),
        "noise_power_dbm": dbm(wifi_noise_w(link)),
        "interference_free_snr_db": linear_to_db(wifi_sinr(link, 0.0)),
        "boresight_interference_peak_dbm": dbm(boresight_peak),
        "boresight_interference_averaged_dbm": dbm(boresight_avg),
        "duty_factor": duty_factor(policy, scenario.pattern, su_distance),
        "avg_rate_peak_mbps": average_throughput(
            link, *common, su_distance, DEFAULT_80211N, "peak", n_steps
        ),
        "avg_rate_averaged_mbps": average_throughput(
            link, *common, su_distance, DEFAULT_80211N, "averaged", n_steps
        ),
    }
    results.update(policy_results)

    if "distance_m" in scenario.sweeps:
        grid = resolve_grid(scenario.sweeps["distance_m"], "distance_m")
        rows = []
        for d in grid:
            rows.append(
                (
                    d,
                    duty_factor(policy, scenario.pattern, d),
                    average_throughput(
                        link, *common, d, DEFAULT_80211N, "peak", n_steps
                    ),
                    average_throughput(
                        link, *common, d, DEFAULT_80211N, "averaged", n_steps
                    ),
                )
            )
        tracker.table(
            "throughput_sweep",
            (
                "distance_m",
                "duty_factor",
                "avg_rate_peak_mbps",
                "avg_rate_averaged_mbps",
            ),
            rows,
        )
    return results


def _cmd_validate_mc(
    scenario: Scenario, tracker: _OutputTracker, opts
) -> Dict[str, Any]:
    mc = scenario.require("mc")
    field = scenario.require("field")
    model = scenario.pathloss
    if not isinstance(model, PowerLawPathLoss):
        raise ValidationError("pathloss.type: validate-mc needs a power-law model")
    fdr = _cochannel_fdr(scenario)
    seed = opts.seed if opts.seed is not None else mc["seed"]
    n_samples = opts.samples if opts.samples is not None else mc["samples"]
    outer_radius = mc["outer_radius_m"]
    backend = mc.get("backend")

    profile_cfg = mc["profile"]
    if profile_cfg["type"] == "constant":
        d0 = profile_cfg["distance_m"]

        def profile(theta_rad):
            return np.full(np.shape(np.asarray(theta_rad)), d0)

    else:
        policy = OptimalPolicy(gamma=profile_cfg["gamma"], alpha=model.alpha)
        profile = policy_profile(policy, scenario.pattern)

    stats = campbell_stats(
        field,
        scenario.su,
        scenario.pattern,
        model,
        profile,
        fdr,
        outer_radius_m=outer_radius,
    )
    samples = sample_aggregate(
        field,
        scenario.su,
        scenario.pattern,
        model,
        fdr,
        profile,
        outer_radius,
        n_samples,
        seed,
        backend=backend,
    )
    mean_emp = float(np.mean(samples))
    var_emp = float(np.var(samples, ddof=1))
    from .numerics import q_inverse

    quantiles = mc.get("i_max_quantiles", [0.05, 0.1, 0.2])
    z99 = 2.5758293035489004  # two-sided 99% normal quantile
    rows = []
    all_within = True
    for p in quantiles:
        i_max = stats.mean_w + q_inverse(p) * stats.std_w
        empirical = float(np.mean(samples > i_max))
        half_width = z99 * math.sqrt(p * (1.0 - p) / n_samples)
        within = abs(empirical - p) <= half_width
        all_within = all_within and within
        rows.append((p, i_max, p, empirical, half_width, within))
    tracker.table(
        "validate_mc",
        (
            "outage_target",
            "i_max_w",
            "analytic_prob",
            "empirical_prob",
            "ci99_halfwidth",
            "within_ci",
        ),
        rows,
    )
    return {
        "backend": backend if backend is not None else "auto",
        "n_samples": n_samples,
        "outer_radius_m": outer_radius,
        "mean_analytic_w": stats.mean_w,
        "mean_empirical_w": mean_emp,
        "mean_rel_error": mean_emp / stats.mean_w - 1.0,
        "variance_analytic_w2": stats.variance_w2,
        "variance_empirical_w2": var_emp,
        "variance_rel_error": var_emp / stats.variance_w2 - 1.0,
        "exceedance_all_within_ci99": all_within,
    }


def _cmd_fit_pathloss(
    scenario: Scenario, tracker: _OutputTracker, opts
) -> Dict[str, Any]:
    model = scenario.pathloss
    if not isinstance(model, TabulatedPathLoss):
        raise MissingSection(
            "scenario is missing tabulated pathloss samples required here"
        )
    distances = np.asarray(model.distances_m)
    attens = np.asarray(model.attenuations)
    k0, alpha = fit_power_law(zip(distances, attens))
    fitted = PowerLawPathLoss(k0=k0, alpha=alpha)
    r2 = log_log_r_squared(distances, attens)
    rows = [
        (
            float(d),
            linear_to_db(float(a)),
            linear_to_db(k0 * float(d) ** (-alpha)),
        )
        for d, a in zip(distances, attens)
    ]
    tracker.table(
        "fit_pathloss", ("distance_m", "attenuation_db", "fit_attenuation_db"), rows
    )
    return {
        "k0": fitted.k0,
        "alpha": fitted.alpha,
        "r_squared": r2,
        "n_samples": int(len(distances)),
    }


_COMMANDS: Dict[str, Callable[[Scenario, _OutputTracker, Any], Dict[str, Any]]] = {
    "detect": _cmd_detect,
    "imax": _cmd_imax,
    "protect-single": _cmd_protect_single,
    "protect-multi": _cmd_protect_multi,
    "throughput": _cmd_throughput,
    "validate-mc": _cmd_validate_mc,
    "fit-pathloss": _cmd_fit_pathloss,
}


def run_command(
    scenario: Scenario,
    command: str,
    out_dir: str | Path,
    fmt: str | None = None,
    seed: int | None = None,
    samples: int | None = None,
    policy: str | None = None,
) -> Dict[str, Any]:
    """Execute one command, writing its artifacts into ``out_dir``.

    Returns the summary payload.  On any failure every artifact written so
    far (including a partial summary) is removed before the error
    propagates, so an output directory never holds a half-finished run.
    """
    if command not in _COMMANDS:
        raise ValidationError(f"unknown command {command!r}")
    out_path = Path(out_dir)
    out_path.mkdir(parents=True, exist_ok=True)
    fmt = fmt if fmt is not None else scenario.output_format

    config_echo = copy.deepcopy(scenario.raw)
    if seed is not None:
        config_echo.setdefault("mc", {})["seed"] = seed
    if samples is not None:
        config_echo.setdefault("mc", {})["samples"] = samples
    if policy is not None:
        config_echo.setdefault("policy", {})["type"] = policy
    config_echo.setdefault("output", {})["format"] = fmt

    resolved_seed = seed if seed is not None else scenario.mc.get("seed", 0)
    opts = SimpleNamespace(seed=seed, samples=samples, policy=policy)

    tracker = _OutputTracker(out_path, fmt)
    try:
        results = _COMMANDS[command](scenario, tracker, opts)
        payload = {
            "command": command,
            "version": __version__,
            "seed": resolved_seed,
            "config": config_echo,
            "results": results,
        }
        tracker.summary(payload)
    except BaseException:
        tracker.cleanup()
        raise
    return payload


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coexist",
        description="Radar/WiFi spectrum-sharing coexistence studies",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "detect": "radar noise floor, SNR budgets, and detection ranges",
        "imax": "tolerable interference level and INR for a ROC degradation",
        "protect-single": "azimuth profile of the single-interferer keep-out distance",
        "protect-multi": "deployment-field protection contours and areas",
        "throughput": "WiFi throughput under radar strobes and policy gating",
        "validate-mc": "Monte Carlo validation of the aggregate-interference model",
        "fit-pathloss": "power-law fit of tabulated propagation data",
    }
    for name, help_text in helps.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", required=True, help="scenario JSON path")
        p.add_argument("--out", required=True, help="output directory")
        p.add_argument("--seed", type=int, help="override mc.seed")
        p.add_argument("--samples", type=int, help="override mc.samples")
        p.add_argument(
            "--format", choices=["csv", "json"], dest="fmt", help="table format"
        )
        if name in ("protect-multi", "throughput"):
            p.add_argument(
                "--policy", choices=list(POLICY_CHOICES), help="override policy.type"
            )
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        scenario = load_scenario(args.config)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    try:
        run_command(
            scenario,
            args.command,
            args.out,
            fmt=args.fmt,
            seed=args.seed,
            samples=args.samples,
            policy=getattr(args, "policy", None),
        )
    except MissingSection as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISSING_SECTION
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTATION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
