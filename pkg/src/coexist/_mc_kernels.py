"""Backend-switched Monte Carlo kernels for the aggregate-interference sampler.

Two implementations of the same chunked sampler:

* a numba ``@njit`` scalar loop (default when numba imports cleanly), and
* a vectorised pure-numpy path.

``COEXIST_BACKEND=numpy`` or ``COEXIST_BACKEND=numba`` overrides the
default; ``sample_sums(..., backend=...)`` overrides both.  Each backend
is deterministic for a fixed (seed, n_samples) pair: samples are produced
in chunks of ``CHUNK`` and every chunk reseeds its generator from a
SeedSequence-derived 32-bit state, so sample i never depends on how many
samples were requested.  The two backends consume their streams in
different orders (the numba loop interleaves draws per point, the numpy
path draws in vectorised blocks), so they do not reproduce each other
sample-for-sample; pick one per study.

Geometry convention: points are drawn uniformly on the disk of radius R
via v = r^2/R^2 ~ U(0, 1], and a point survives thinning iff
v >= (d(theta)/R)^2 with d the keep-out contour.  Each survivor adds
c_point * G(theta) * v^(-alpha/2) to its sample's sum, where c_point
folds the per-transmitter EIRP, path-loss scale, R^-alpha, and FDR.

Azimuth tables must have power-of-two length: the kernels draw the table
position directly (pos = u * n_tab) and wrap with a bit mask, and they
skip the angular draw entirely when both tables are constant, so
degenerate isotropic references run several times faster.  The azimuth
stream therefore depends on whether the tables are constant; determinism
holds per (seed, backend, table shape).
"""

from __future__ import annotations

import os

import numpy as np

CHUNK = 250

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAS_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(func):
            return func

        if args and callable(args[0]):
            return args[0]
        return wrap


def resolve_backend(override: str | None = None) -> str:
    """Pick 'numba' or 'numpy' from the override, env flag, or availability."""
    choice = override if override is not None else os.environ.get("COEXIST_BACKEND")
    if choice is not None:
        choice = choice.strip().lower()
        if choice not in ("numba", "numpy"):
            raise ValueError(f"unknown backend {choice!r} (use 'numba' or 'numpy')")
        if choice == "numba" and not HAS_NUMBA:
            raise RuntimeError("numba backend requested but numba is not importable")
        return choice
    return "numba" if HAS_NUMBA else "numpy"


@njit(cache=True)
def _chunk_numba(
    seed,
    n_sub,
    lam_disk,
    dnorm2_tab,
    gain_tab,
    dn2_const,
    dn2_0,
    gain_const,
    gain_0,
    c_point,
    k_pow,
    half_neg,
    out,
):
    np.random.seed(seed)
    n_tab = dnorm2_tab.shape[0]
    mask = n_tab - 1
    need_pos = not (dn2_const and gain_const)
    for i in range(n_sub):
        n_points = np.random.poisson(lam_disk)
        total = 0.0
        for _ in range(n_points):
            v = 1.0 - np.random.random()
            if need_pos:
                pos = np.random.random() * n_tab
                j = int(pos)
                frac = pos - j
                j1 = (j + 1) & mask
            else:
                j = 0
                frac = 0.0
                j1 = 0
            if dn2_const:
                dn2 = dn2_0
            else:
                dn2 = dnorm2_tab[j] + frac * (dnorm2_tab[j1] - dnorm2_tab[j])
            if v < dn2:
                continue
            if gain_const:
                g = gain_0
            else:
                g = gain_tab[j] + frac * (gain_tab[j1] - gain_tab[j])
            if k_pow > 0:
                u = 1.0 / v
                p = u
                for _k in range(k_pow - 1):
                    p *= u
            else:
                p = v**half_neg
            total += g * p
        out[i] = c_point * total
    return out


def _chunk_numpy(
    seed,
    n_sub,
    lam_disk,
    dnorm2_tab,
    gain_tab,
    dn2_const,
    dn2_0,
    gain_const,
    gain_0,
    c_point,
    k_pow,
    half_neg,
    out,
):
    rng = np.random.RandomState(seed)
    n_tab = dnorm2_tab.shape[0]
    mask = n_tab - 1
    counts = rng.poisson(lam_disk, size=n_sub)
    total = int(counts.sum())
    if total == 0:
        out[:] = 0.0
        return out
    v = 1.0 - rng.random_sample(total)
    if dn2_const and gain_const:
        keep = v >= dn2_0
        gains = gain_0
    else:
        pos = rng.random_sample(total) * n_tab
        j = pos.astype(np.int64)
        frac = pos - j
        j1 = (j + 1) & mask
        if dn2_const:
            keep = v >= dn2_0
        else:
            dn2 = dnorm2_tab[j] + frac * (dnorm2_tab[j1] - dnorm2_tab[j])
            keep = v >= dn2
        if gain_const:
            gains = gain_0
        else:
            gains = gain_tab[j] + frac * (gain_tab[j1] - gain_tab[j])
    if k_pow > 0:
        u = 1.0 / v
        p = u.copy()
        for _ in range(k_pow - 1):
            p *= u
    else:
        p = v**half_neg
    contrib = np.where(keep, gains * p, 0.0)
    # segment sums without materialising an owner index per point: reduceat
    # over the count boundaries (sentinel keeps trailing empty segments legal,
    # and empty segments -- where reduceat reports a stray element -- are
    # zeroed afterwards)
    starts = np.zeros(n_sub, dtype=np.int64)
    np.cumsum(counts[:-1], out=starts[1:])
    contrib = np.append(contrib, 0.0)
    sums = np.add.reduceat(contrib, starts)
    sums[counts == 0] = 0.0
    out[:] = c_point * sums
    return out


def sample_sums(
    lam_disk: float,
    dnorm2_tab: np.ndarray,
    gain_tab: np.ndarray,
    c_point: float,
    half_neg: float,
    n_samples: int,
    seed: int,
    backend: str | None = None,
) -> np.ndarray:
    """Draw ``n_samples`` aggregate-interference sums on the chosen backend."""
    chosen = resolve_backend(backend)
    kernel = _chunk_numba if chosen == "numba" else _chunk_numpy
    dnorm2_tab = np.ascontiguousarray(dnorm2_tab, dtype=np.float64)
    gain_tab = np.ascontiguousarray(gain_tab, dtype=np.float64)
    n_tab = dnorm2_tab.shape[0]
    if n_tab & (n_tab - 1) != 0:
        raise ValueError("table length must be a power of two")
    if gain_tab.shape[0] != n_tab:
        raise ValueError("tables must have equal length")
    dn2_const = bool(np.all(dnorm2_tab == dnorm2_tab[0]))
    gain_const = bool(np.all(gain_tab == gain_tab[0]))
    k_pow = int(round(-half_neg)) if -half_neg == round(-half_neg) else 0
    n_chunks = (n_samples + CHUNK - 1) // CHUNK
    chunk_seeds = np.random.SeedSequence(seed).generate_state(n_chunks, dtype=np.uint32)
    results = np.empty(n_samples, dtype=np.float64)
    for c in range(n_chunks):
        start = c * CHUNK
        stop = min(start + CHUNK, n_samples)
        n_sub = stop - start
        buf = np.empty(n_sub, dtype=np.float64)
        kernel(
            int(chunk_seeds[c]),
            n_sub,
            float(lam_disk),
            dnorm2_tab,
            gain_tab,
            dn2_const,
            float(dnorm2_tab[0]),
            gain_const,
            float(gain_tab[0]),
            float(c_point),
            k_pow,
            float(half_neg),
            buf,
        )
        results[start:stop] = buf
    return results
