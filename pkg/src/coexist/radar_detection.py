"""Noise-limited rotating-radar detection budget.

Link budget for a pulsed surveillance radar (single-pulse and scan-averaged
SNR with noncoherent integration folded in), threshold statistics of the
linear envelope detector, and the empirical detection-requirement relations
of Albersheim (see Richards, "Fundamentals of Radar Signal Processing",
ch. 6; Skolnik, "Introduction to Radar Systems").

Conventions: gains and losses are stored in dB on the dataclasses (the way
datasheets quote them) and converted to linear exactly once inside each
formula; SNR values cross the API as linear ratios unless a name carries a
``_db`` suffix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .numerics import db_to_linear

BOLTZMANN_J_PER_K = 1.380649e-23  # exact, 2019 SI
SPEED_OF_LIGHT_M_S = 299792458.0

FOUR_PI = 4.0 * math.pi


@dataclass(frozen=True)
class RadarSystem:
    """Parameter set of a rotating pulsed surveillance radar.

    The bundled fixture follows the terminal-area ATC radar family of
    ITU-R M.1464-1 (S-band, megawatt-class peak power, fan beam scanned
    in azimuth).
    """

    tx_power_w: float
    wavelength_m: float
    peak_gain_dbi: float
    prf_hz: float
    pulse_width_s: float
    if_bandwidth_hz: float
    noise_figure_db: float
    ambient_temp_k: float
    scan_time_s: float
    scan_solid_angle_sr: float
    az_beamwidth_rad: float
    el_beamwidth_rad: float
    system_loss_db: float
    antenna_efficiency: float
    antenna_height_m: float

    def __post_init__(self) -> None:
        positive = (
            ("tx_power_w", self.tx_power_w),
            ("wavelength_m", self.wavelength_m),
            ("prf_hz", self.prf_hz),
            ("pulse_width_s", self.pulse_width_s),
            ("if_bandwidth_hz", self.if_bandwidth_hz),
            ("ambient_temp_k", self.ambient_temp_k),
            ("scan_time_s", self.scan_time_s),
            ("antenna_height_m", self.antenna_height_m),
        )
        for name, value in positive:
            if not value > 0.0:
                raise ValueError(f"{name} must be positive, got {value}")
        if not 0.0 < self.az_beamwidth_rad < 2.0 * math.pi:
            raise ValueError("az_beamwidth_rad must lie in (0, 2*pi)")
        if not 0.0 < self.el_beamwidth_rad < 2.0 * math.pi:
            raise ValueError("el_beamwidth_rad must lie in (0, 2*pi)")
        if not 0.0 < self.scan_solid_angle_sr <= 4.0 * math.pi:
            raise ValueError("scan_solid_angle_sr must lie in (0, 4*pi]")
        if not 0.0 < self.antenna_efficiency <= 1.0:
            raise ValueError("antenna_efficiency must lie in (0, 1]")
        if not self.pulse_width_s * self.prf_hz < 1.0:
            raise ValueError("duty cycle pulse_width_s * prf_hz must stay below 1")


@dataclass(frozen=True)
class Target:
    """Point target: slant range and radar cross section."""

    range_m: float
    rcs_m2: float

    def __post_init__(self) -> None:
        if not self.range_m > 0.0:
            raise ValueError("range_m must be positive")
        if not self.rcs_m2 > 0.0:
            raise ValueError("rcs_m2 must be positive")


@dataclass(frozen=True)
class RocPoint:
    """Operating point on the receiver operating characteristic."""

    pd: float
    pfa: float

    def __post_init__(self) -> None:
        if not 0.0 < self.pfa < self.pd < 1.0:
            raise ValueError(
                f"ROC point requires 0 < pfa < pd < 1, got pd={self.pd}, pfa={self.pfa}"
            )


def noise_power_w(radar: RadarSystem) -> float:
    """Receiver noise floor F * k * T * B over the IF bandwidth, in watts."""
    return (
        db_to_linear(radar.noise_figure_db)
        * BOLTZMANN_J_PER_K
        * radar.ambient_temp_k
        * radar.if_bandwidth_hz
    )


def single_pulse_snr(radar: RadarSystem, target: Target) -> float:
    """Single-pulse SNR at the receiver input (linear).

    Standard monostatic radar equation,
    P_T G^2 lambda^2 sigma / ((4 pi)^3 d^4 N), with N the noise floor over
    the IF bandwidth.
    """
    gain = db_to_linear(radar.peak_gain_dbi)
    numerator = (
        radar.tx_power_w * gain * gain * radar.wavelength_m**2 * target.rcs_m2
    )
    denominator = FOUR_PI**3 * target.range_m**4 * noise_power_w(radar)
    return numerator / denominator


def effective_snr(radar: RadarSystem, target: Target) -> float:
    """Scan-averaged SNR with noncoherent integration folded in (linear).

    For a rotating radar the number of pulses on target per scan is the
    illumination time times the PRF; absorbing that count together with the
    beam-solid-angle bookkeeping into the link budget gives

        SNR_eff = (T_scan / Omega) * P_T G lambda^2 f_R sigma
                  / ((4 pi)^2 d^4 N L)

    with L the net system loss.  When L = 1/antenna_efficiency and the gain
    follows G = 4 pi rho_A / (theta_az theta_el), this reduces exactly to
    single_pulse_snr times the pulses-per-scan count.
    """
    gain = db_to_linear(radar.peak_gain_dbi)
    loss = db_to_linear(radar.system_loss_db)
    numerator = (
        (radar.scan_time_s / radar.scan_solid_angle_sr)
        * radar.tx_power_w
        * gain
        * radar.wavelength_m**2
        * radar.prf_hz
        * target.rcs_m2
    )
    denominator = (
        FOUR_PI**2 * target.range_m**4 * noise_power_w(radar) * loss
    )
    return numerator / denominator


def pulses_per_scan(radar: RadarSystem) -> float:
    """Pulses striking a point target during one scan (may be fractional)."""
    illumination_s = radar.scan_time_s * radar.az_beamwidth_rad / (2.0 * math.pi)
    return illumination_s * radar.prf_hz


def pfa_from_threshold(vt_over_beta: float) -> float:
    """False-alarm probability of the envelope detector.

    Rayleigh-distributed noise envelope crossing the threshold V_T gives
    P_FA = exp(-(V_T/beta)^2 / 2) with beta the noise RMS.
    """
    if vt_over_beta < 0.0:
        raise ValueError("vt_over_beta must be non-negative")
    return math.exp(-0.5 * vt_over_beta * vt_over_beta)


def threshold_from_pfa(pfa: float) -> float:
    """Normalised detector threshold V_T/beta achieving the requested P_FA."""
    if not 0.0 < pfa <= 1.0:
        raise ValueError("pfa must lie in (0, 1]")
    return math.sqrt(2.0 * math.log(1.0 / pfa))


def pd_high_snr(vt_over_beta: float, snr_p: float) -> float:
    """Detection probability in the high-SNR Gaussian regime.

    For a strong steady target the Rician envelope is well approximated as
    Gaussian, giving P_D = (1 - erf(V_T/(beta sqrt(2)) - sqrt(SNR)))/2.
    """
    if snr_p < 0.0:
        raise ValueError("snr_p must be non-negative")
    return 0.5 * (1.0 - math.erf(vt_over_beta / math.sqrt(2.0) - math.sqrt(snr_p)))


def albersheim_snr_linear(pd: float, pfa: float) -> float:
    """Albersheim's empirical single-pulse SNR requirement (linear ratio).

    A + 0.12*A*B + 1.7*B with A = ln(0.62/P_FA), B = ln(P_D/(1-P_D)).
    Accurate to a fraction of a dB for 0.1 <= P_D <= 0.9 and
    P_FA <= 1e-3 (Albersheim 1981; Tufts & Cann 1983).  P_FA above 0.62
    makes the leading term negative and the approximation meaningless,
    so that domain is rejected.
    """
    if not 0.0 < pd < 1.0:
        raise ValueError("pd must lie in (0, 1)")
    if not 0.0 < pfa < 1.0:
        raise ValueError("pfa must lie in (0, 1)")
    if pfa > 0.62:
        raise ValueError("Albersheim relation requires pfa <= 0.62")
    a = math.log(0.62 / pfa)
    b = math.log(pd / (1.0 - pd))
    return a + 0.12 * a * b + 1.7 * b


def snr_required_albersheim(roc: RocPoint) -> float:
    """SNR (linear) required to reach ``roc`` with a single pulse."""
    return albersheim_snr_linear(roc.pd, roc.pfa)


def snr_required_noncoherent(roc: RocPoint, m: int) -> float:
    """Per-pulse SNR in dB required when M pulses are combined noncoherently.

    Empirical extension of the Albersheim relation:
    -5 log10(M) + (6.2 + 4.54/sqrt(M + 0.44)) * log10(A + 0.12AB + 1.7B).
    """
    if m < 1 or int(m) != m:
        raise ValueError("m must be a positive integer pulse count")
    x = albersheim_snr_linear(roc.pd, roc.pfa)
    if x <= 0.0:
        raise ValueError("ROC point outside the approximation's domain")
    return -5.0 * math.log10(m) + (6.2 + 4.54 / math.sqrt(m + 0.44)) * math.log10(x)


def max_range(radar: RadarSystem, roc: RocPoint, rcs_m2: float) -> float:
    """Largest range at which the scan-averaged SNR still meets ``roc``.

    Closed-form inversion of effective_snr for range:
    d = (numerator / (SNR_req * denominator-at-unit-range))**(1/4).
    """
    if not rcs_m2 > 0.0:
        raise ValueError("rcs_m2 must be positive")
    snr_req = snr_required_albersheim(roc)
    gain = db_to_linear(radar.peak_gain_dbi)
    loss = db_to_linear(radar.system_loss_db)
    numerator = (
        (radar.scan_time_s / radar.scan_solid_angle_sr)
        * radar.tx_power_w
        * gain
        * radar.wavelength_m**2
        * radar.prf_hz
        * rcs_m2
    )
    denominator = FOUR_PI**2 * noise_power_w(radar) * loss * snr_req
    return (numerator / denominator) ** 0.25


def normalized_target(radar: RadarSystem, roc: RocPoint, rcs_m2: float) -> Target:
    """Target placed exactly at max_range, where SNR equals the requirement.

    Convenience for "normalised" studies that pin the interference-free
    radar at its required operating point before admitting interference.
    """
    return Target(range_m=max_range(radar, roc, rcs_m2), rcs_m2=rcs_m2)
