"""Ordinary least squares via Householder QR, with the diagnostic set
(standard errors, t-ratios, R-squared, adjusted R-squared, F) that the
unit-root and error-correction estimators reuse.

Normal equations are avoided on purpose: lag matrices of trending macro
data are ill-conditioned, and the QR route keeps the factor well scaled.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_triangular

from .errors import RankDeficient, Underdetermined
from .series import LagMatrix


@dataclass(frozen=True)
class OlsFit:
    """Least-squares fit with diagnostics.

    ``t_stats[i]`` always equals ``coefficients[i] / standard_errors[i]``;
    consumers render exactly these numbers. ``r2`` is centered when an
    intercept is present, uncentered otherwise. ``degenerate`` marks an
    exact fit (zero residual variance), where the F statistic is +inf.
    """

    coefficients: np.ndarray
    standard_errors: np.ndarray
    t_stats: np.ndarray
    residuals: np.ndarray
    sigma2: float
    r2: float
    adj_r2: float
    f_stat: float
    n_obs: int
    n_params: int
    labels: tuple[str, ...]
    has_intercept: bool
    degenerate: bool


def _column_labels(X) -> tuple[np.ndarray, tuple[str, ...]]:
    if isinstance(X, LagMatrix):
        return X.values, X.labels
    arr = np.asarray(X, dtype=float)
    return arr, tuple(f"x{i}" for i in range(arr.shape[1]))


def ols_fit(X, y) -> OlsFit:
    """Fit ``y = X b + e`` by QR; X may be a LagMatrix or a 2-D array.

    Raises
    ------
    Underdetermined
        If there are at least as many parameters as observations.
    RankDeficient
        If a regressor column is (numerically) collinear with the others;
        the offending column label is attached to the exception.
    """
    mat, labels = _column_labels(X)
    y = np.asarray(y, dtype=float)
    n, k = mat.shape
    if y.shape != (n,):
        raise ValueError(f"y has shape {y.shape}, expected ({n},)")
    if n <= k:
        raise Underdetermined(f"{k} parameters but only {n} observations")

    Q, R = np.linalg.qr(mat)
    diag = np.abs(np.diag(R))
    tol = max(n, k) * np.finfo(float).eps * (diag.max() if diag.size else 0.0)
    small = np.flatnonzero(diag <= tol)
    if small.size:
        raise RankDeficient(labels[int(small[0])])

    coef = solve_triangular(R, Q.T @ y, lower=False)
    resid = y - mat @ coef
    rss = float(resid @ resid)
    dof = n - k
    sigma2 = rss / dof

    rinv = solve_triangular(R, np.eye(k), lower=False)
    xtx_inv_diag = np.einsum("ij,ij->i", rinv, rinv)
    se = np.sqrt(sigma2 * xtx_inv_diag)

    has_intercept = bool(
        any(np.ptp(mat[:, j]) == 0.0 and mat[0, j] != 0.0 for j in range(k))
    )
    if has_intercept:
        tss = float(((y - y.mean()) ** 2).sum())
    else:
        tss = float((y**2).sum())
    degenerate = rss <= np.finfo(float).eps * max(tss, 1.0)
    r2 = 1.0 if degenerate else (1.0 - rss / tss if tss > 0.0 else 0.0)
    r2, adj_r2, f_stat = summary_from_r2(r2, n, k)

    with np.errstate(divide="ignore", invalid="ignore"):
        t = np.where(se > 0.0, coef / np.where(se > 0.0, se, 1.0),
                     np.sign(coef) * np.inf)
    return OlsFit(
        coefficients=coef,
        standard_errors=se,
        t_stats=t,
        residuals=resid,
        sigma2=sigma2,
        r2=r2,
        adj_r2=adj_r2,
        f_stat=f_stat,
        n_obs=n,
        n_params=k,
        labels=labels,
        has_intercept=has_intercept,
        degenerate=degenerate,
    )


def summary_from_r2(r2: float, n_obs: int, n_params: int):
    """(r2, adj_r2, f_stat) from the fit's R-squared and its degrees of freedom.

    adj_r2 = 1 - (1 - r2)(n - 1)/(n - k); it can go negative for weak fits.
    f_stat tests all non-intercept coefficients jointly:
    (r2/(k - 1)) / ((1 - r2)/(n - k)), +inf for an exact fit.
    """
    if n_obs <= n_params:
        raise Underdetermined(f"{n_params} parameters, {n_obs} observations")
    adj_r2 = 1.0 - (1.0 - r2) * (n_obs - 1) / (n_obs - n_params)
    if n_params < 2:
        f_stat = math.nan
    elif r2 >= 1.0:
        f_stat = math.inf
    else:
        f_stat = (r2 / (n_params - 1)) / ((1.0 - r2) / (n_obs - n_params))
    return r2, adj_r2, f_stat


def summary_stats(fit: OlsFit):
    """Summary triple for a fitted model; requires an intercept."""
    if not fit.has_intercept:
        raise ValueError("summary statistics assume an intercept in the model")
    return summary_from_r2(fit.r2, fit.n_obs, fit.n_params)
