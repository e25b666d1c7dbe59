"""Scenario configuration: JSON ingestion, strict validation, unit conversion.

Config files use human conventions (dB, degrees, frequency); conversion to
the library's internal units (linear ratios, radians, wavelength) happens
here, once, at the boundary.  The schema is strict: unknown keys are
rejected so typos fail loudly instead of silently falling back to
defaults.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field as dataclass_field
from importlib import resources
from pathlib import Path
from typing import Any, Dict, Optional

import jsonschema

from .propagation import (
    AntennaPattern,
    ConstantGain,
    Pattern,
    PathLossModel,
    PowerLawPathLoss,
    TabulatedPathLoss,
)
from .protection_single import SecondaryUser
from .protection_multi import DeploymentField
from .radar_detection import SPEED_OF_LIGHT_M_S, RadarSystem, RocPoint


class ParseError(ValueError):
    """Config file missing or not parseable as JSON."""


class ValidationError(ValueError):
    """Config parsed but violates the schema or a domain invariant."""


class MissingSection(ValueError):
    """Scenario lacks a section the requested command needs."""


@dataclass(frozen=True)
class Scenario:
    """A validated scenario: raw config echo plus constructed domain objects."""

    raw: Dict[str, Any]
    radar: RadarSystem
    su: SecondaryUser
    pathloss: PathLossModel
    pattern: Pattern
    detection: Optional[Dict[str, Any]] = None
    target: Optional[Dict[str, float]] = None
    field: Optional[DeploymentField] = None
    policy: Dict[str, Any] = dataclass_field(default_factory=dict)
    wifi: Dict[str, Any] = dataclass_field(default_factory=dict)
    mc: Dict[str, Any] = dataclass_field(default_factory=dict)
    sweeps: Dict[str, Any] = dataclass_field(default_factory=dict)
    output_format: str = "csv"

    def require(self, section: str) -> Any:
        value = getattr(self, section, None)
        if not value:
            raise MissingSection(
                f"scenario is missing the '{section}' section required here"
            )
        return value

    def roc_pair(self) -> tuple[RocPoint, RocPoint]:
        det = self.require("detection")
        baseline = RocPoint(**det["baseline"])
        degraded = RocPoint(**det["degraded"])
        return baseline, degraded


def _load_schema() -> Dict[str, Any]:
    with resources.files("coexist.schema").joinpath("scenario.json").open() as fh:
        return json.load(fh)


def fixture_path(name: str) -> Path:
    """Filesystem path of a bundled scenario fixture (e.g. 'type_b_radar')."""
    if not name.endswith(".json"):
        name = name + ".json"
    path = resources.files("coexist.fixtures").joinpath(name)
    with resources.as_file(path) as concrete:
        return Path(concrete)


def _resolve_path(path: str | Path) -> Path:
    p = Path(path)
    if p.exists():
        return p
    # fall back to bundled fixtures so `--config type_b_radar` works anywhere
    try:
        candidate = fixture_path(str(path))
    except (FileNotFoundError, ModuleNotFoundError):
        raise ParseError(f"config file not found: {path}")
    if candidate.exists():
        return candidate
    raise ParseError(f"config file not found: {path}")


def _build_radar(cfg: Dict[str, Any]) -> RadarSystem:
    has_freq = "frequency_hz" in cfg
    has_wl = "wavelength_m" in cfg
    if has_freq == has_wl:
        raise ValidationError(
            "radar: exactly one of frequency_hz or wavelength_m is required"
        )
    wavelength = (
        cfg["wavelength_m"] if has_wl else SPEED_OF_LIGHT_M_S / cfg["frequency_hz"]
    )
    el_rad = math.radians(cfg["el_beamwidth_deg"])
    # rotating fan-beam default: the scan covers a 2*pi band of el-beamwidth height
    solid_angle = cfg.get("scan_solid_angle_sr", 2.0 * math.pi * el_rad)
    return RadarSystem(
        tx_power_w=cfg["tx_power_w"],
        wavelength_m=wavelength,
        peak_gain_dbi=cfg["peak_gain_dbi"],
        prf_hz=cfg["prf_hz"],
        pulse_width_s=cfg["pulse_width_s"],
        if_bandwidth_hz=cfg["if_bandwidth_hz"],
        noise_figure_db=cfg["noise_figure_db"],
        ambient_temp_k=cfg["ambient_temp_k"],
        scan_time_s=cfg["scan_time_s"],
        scan_solid_angle_sr=solid_angle,
        az_beamwidth_rad=math.radians(cfg["az_beamwidth_deg"]),
        el_beamwidth_rad=el_rad,
        system_loss_db=cfg["system_loss_db"],
        antenna_efficiency=cfg["antenna_efficiency"],
        antenna_height_m=cfg["antenna_height_m"],
    )


def _build_pathloss(cfg: Dict[str, Any]) -> PathLossModel:
    if cfg["type"] == "power_law":
        return PowerLawPathLoss(k0=cfg["k0"], alpha=cfg["alpha"])
    if "csv_path" in cfg:
        return TabulatedPathLoss.from_csv(cfg["csv_path"])
    from .numerics import db_to_linear

    distances = tuple(float(row[0]) for row in cfg["samples"])
    attens = tuple(db_to_linear(float(row[1])) for row in cfg["samples"])
    return TabulatedPathLoss(distances_m=distances, attenuations=attens)


def load_scenario(path: str | Path) -> Scenario:
    """Load, schema-validate, and build a scenario from a JSON config file.

    Raises ParseError for unreadable/undecodable files and ValidationError
    (naming the offending field) for schema or invariant violations.
    """
    concrete = _resolve_path(path)
    try:
        text = concrete.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read config file {concrete}: {exc}") from exc
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"config is not valid JSON ({concrete}): {exc}") from exc

    validator = jsonschema.Draft202012Validator(_load_schema())
    errors = sorted(validator.iter_errors(raw), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        where = ".".join(str(p) for p in err.absolute_path) or "<root>"
        raise ValidationError(f"{where}: {err.message}")

    def build(section: str, builder, *args):
        try:
            return builder(*args)
        except ValidationError:
            raise
        except ValueError as exc:
            raise ValidationError(f"{section}: {exc}") from exc

    radar = build("radar", _build_radar, raw["radar"])
    su_cfg = dict(raw["su"])
    su_cfg.setdefault("delta_f_hz", 0.0)
    su = build("su", lambda c: SecondaryUser(**c), su_cfg)
    pathloss = build("pathloss", _build_pathloss, raw["pathloss"])

    pattern_cfg = raw.get("antenna_pattern", {})
    if "constant_gain_dbi" in pattern_cfg:
        pattern: Pattern = ConstantGain(gain_dbi=pattern_cfg["constant_gain_dbi"])
    else:
        pattern = build(
            "radar.peak_gain_dbi",
            lambda g: AntennaPattern(gmax_dbi=g),
            radar.peak_gain_dbi,
        )

    deployment = None
    if "field" in raw:
        deployment = build("field", lambda c: DeploymentField(**c), raw["field"])

    detection = raw.get("detection")
    if detection is not None:
        for key in ("baseline", "degraded"):
            build(f"detection.{key}", lambda c: RocPoint(**c), detection[key])

    return Scenario(
        raw=raw,
        radar=radar,
        su=su,
        pathloss=pathloss,
        pattern=pattern,
        detection=detection,
        target=raw.get("target"),
        field=deployment,
        policy=dict(raw.get("policy", {})),
        wifi=dict(raw.get("wifi", {})),
        mc=dict(raw.get("mc", {})),
        sweeps=dict(raw.get("sweeps", {})),
        output_format=raw.get("output", {}).get("format", "csv"),
    )


def resolve_grid(spec: Dict[str, Any], name: str) -> list[float]:
    """Materialise a sweep grid spec into a sorted list of floats."""
    import numpy as np

    if "values" in spec:
        values = [float(v) for v in spec["values"]]
        if any(values[i] >= values[i + 1] for i in range(len(values) - 1)):
            raise ValidationError(f"sweeps.{name}.values must be strictly increasing")
        return values
    start, stop, count = spec["start"], spec["stop"], spec["count"]
    if not start < stop:
        raise ValidationError(f"sweeps.{name}: start must be below stop")
    if spec.get("spacing", "linear") == "log":
        if not start > 0:
            raise ValidationError(f"sweeps.{name}: log spacing requires start > 0")
        return [float(v) for v in np.geomspace(start, stop, count)]
    return [float(v) for v in np.linspace(start, stop, count)]
