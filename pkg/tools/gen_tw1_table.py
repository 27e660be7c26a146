#!/usr/bin/env python3
"""Generate the embedded Tracy-Widom (beta=1) tables.

Two independent numerical routes:
  * Fredholm determinant of the kernel K(x, y) = Ai((x+y)/2) / 2 on
    L^2(s, inf), discretized with Gauss-Legendre quadrature (the accurate
    route; used for the emitted tables).
  * Painleve II (Hastings-McLeod) integration, used as a cross-check.

Emits src/nbspec/_tw1_data.py with a 999-knot quantile table on
[0.001, 0.999] and a dense CDF support grid for distribution distances.

Usage: python3 tools/gen_tw1_table.py
"""

import sys
from pathlib import Path

import numpy as np
from scipy.integrate import solve_ivp
from scipy.optimize import brentq
from scipy.special import airy

GL_NODES = 140
DOMAIN_LENGTH = 18.0


def f1_fredholm(s: float, m: int = GL_NODES, length: float = DOMAIN_LENGTH) -> float:
    """GOE Tracy-Widom CDF via a Fredholm determinant."""
    x, w = np.polynomial.legendre.leggauss(m)
    x = s + (x + 1.0) * (length / 2.0)
    w = w * (length / 2.0)
    sw = np.sqrt(w)
    kernel = 0.5 * airy((x[:, None] + x[None, :]) / 2.0)[0]
    mat = np.eye(m) - sw[:, None] * kernel * sw[None, :]
    sign, logdet = np.linalg.slogdet(mat)
    return float(sign * np.exp(logdet))


def f1_painleve(s_grid: np.ndarray) -> np.ndarray:
    """Cross-check CDF from the Hastings-McLeod solution of Painleve II.

    q'' = x q + 2 q^3 with q ~ Ai at +inf;
    F2(s) = exp(-int (x - s) q^2), F1 = sqrt(F2) * exp(-(1/2) int q).
    """
    x0 = 10.0
    ai0, aip0, _, _ = airy(x0)

    def rhs(x, y):
        q, qp, _, _, _ = y
        return [qp, x * q + 2.0 * q**3, q, x * q * q, q * q]

    sol = solve_ivp(
        rhs,
        [x0, float(np.min(s_grid)) - 0.5],
        [ai0, aip0, 0.0, 0.0, 0.0],
        rtol=1e-12,
        atol=1e-14,
        dense_output=True,
    )
    out = []
    for s in s_grid:
        _, _, i1, i2, i3 = sol.sol(s)
        int_q, int_xq2, int_q2 = -i1, -i2, -i3
        f2 = np.exp(-(int_xq2 - s * int_q2))
        out.append(np.sqrt(f2) * np.exp(-0.5 * int_q))
    return np.array(out)


def main() -> int:
    probs = np.linspace(0.001, 0.999, 999)

    # Bracket each quantile with a coarse monotone scan, then refine.
    s_scan = np.arange(-7.5, 4.5001, 0.05)
    f_scan = np.array([f1_fredholm(s) for s in s_scan])
    quantiles = np.empty(probs.size)
    for i, p in enumerate(probs):
        j = int(np.searchsorted(f_scan, p))
        lo, hi = s_scan[max(j - 1, 0)], s_scan[min(j, s_scan.size - 1)]
        quantiles[i] = brentq(lambda s: f1_fredholm(s) - p, lo - 0.05, hi + 0.05, xtol=1e-12)

    cdf_start, cdf_step, cdf_count = -10.0, 0.02, 801
    cdf_s = cdf_start + cdf_step * np.arange(cdf_count)
    cdf_f = np.clip([f1_fredholm(s) for s in cdf_s], 0.0, 1.0)

    # Cross-checks: Painleve route and two published quantile values.
    check_s = np.linspace(-6.0, 3.5, 20)
    gap = np.abs(np.array([f1_fredholm(s) for s in check_s]) - f1_painleve(check_s))
    print(f"max |Fredholm - Painleve| on check grid: {gap.max():.3e}")
    assert gap.max() < 2e-5, "independent CDF routes disagree"
    q95 = quantiles[np.searchsorted(probs, 0.95)]
    q50 = quantiles[np.searchsorted(probs, 0.50)]
    print(f"quantile(0.95) = {q95:.6f}  (published 0.9793)")
    print(f"quantile(0.50) = {q50:.6f}  (published -1.2686)")
    assert abs(q95 - 0.9793) < 2e-4
    assert abs(q50 - (-1.2686)) < 2e-4
    assert np.all(np.diff(quantiles) > 0) and np.all(np.diff(cdf_f) >= 0)

    out_path = Path(__file__).resolve().parents[1] / "src" / "nbspec" / "_tw1_data.py"
    with open(out_path, "wt", encoding="utf-8", newline="\n") as fh:
        fh.write('"""Tracy-Widom beta=1 tables. Generated by tools/gen_tw1_table.py."""\n\n')
        fh.write("import numpy as np\n\n")
        fh.write("QUANTILE_PROB_START = 0.001\n")
        fh.write("QUANTILE_PROB_STOP = 0.999\n")
        fh.write("QUANTILE_COUNT = 999\n\n")

        def emit(name, arr):
            fh.write(f"{name} = np.array([\n")
            for row in range(0, arr.size, 5):
                chunk = ", ".join(f"{v:.12e}" for v in arr[row : row + 5])
                fh.write(f"    {chunk},\n")
            fh.write("])\n\n")

        emit("QUANTILES", quantiles)
        fh.write(f"CDF_START = {cdf_start!r}\n")
        fh.write(f"CDF_STEP = {cdf_step!r}\n")
        fh.write(f"CDF_COUNT = {cdf_count}\n\n")
        emit("CDF_VALUES", np.asarray(cdf_f))
    print(f"wrote {out_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
