"""Tracy-Widom (beta = 1) reference distribution.

Backed by an embedded table generated offline by tools/gen_tw1_table.py
(Fredholm-determinant quadrature, cross-checked against a Painleve II
integration). Quantiles use monotone cubic (PCHIP) interpolation over 999
knots on [0.001, 0.999].
"""

from __future__ import annotations

import numpy as np
from scipy.interpolate import PchipInterpolator

from . import _tw1_data as _data
from .errors import ParameterError

_QPROBS = np.linspace(
    _data.QUANTILE_PROB_START, _data.QUANTILE_PROB_STOP, _data.QUANTILE_COUNT
)
_quantile_interp = None
_cdf_interp = None


def tw1_quantile(q: float) -> float:
    """TW1 quantile at probability q, valid for q in [0.001, 0.999]."""
    global _quantile_interp
    if not (_QPROBS[0] <= q <= _QPROBS[-1]):
        raise ParameterError(f"q={q} outside [{_QPROBS[0]}, {_QPROBS[-1]}]")
    if _quantile_interp is None:
        _quantile_interp = PchipInterpolator(_QPROBS, _data.QUANTILES)
    return float(_quantile_interp(q))


def tw1_cdf(x) -> np.ndarray:
    """TW1 CDF, interpolated on the embedded support grid and clipped to [0, 1]."""
    global _cdf_interp
    if _cdf_interp is None:
        s = _data.CDF_START + _data.CDF_STEP * np.arange(_data.CDF_COUNT)
        _cdf_interp = PchipInterpolator(s, _data.CDF_VALUES, extrapolate=False)
    x = np.asarray(x, dtype=float)
    out = _cdf_interp(x)
    lo = _data.CDF_START
    hi = _data.CDF_START + _data.CDF_STEP * (_data.CDF_COUNT - 1)
    out = np.where(np.asarray(x) < lo, 0.0, out)
    out = np.where(np.asarray(x) > hi, 1.0, out)
    return np.clip(out, 0.0, 1.0)


def ks_distance_to_tw1(sample) -> float:
    """Kolmogorov-Smirnov distance between an empirical sample and TW1."""
    xs = np.sort(np.asarray(sample, dtype=float))
    n = xs.size
    if n == 0:
        raise ParameterError("empty sample")
    cdf = tw1_cdf(xs)
    upper = np.abs(np.arange(1, n + 1) / n - cdf)
    lower = np.abs(np.arange(0, n) / n - cdf)
    return float(np.maximum(upper, lower).max())
