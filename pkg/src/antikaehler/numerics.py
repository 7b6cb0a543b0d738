"""Shared numerical kernels: even matrix functions, finite differences,
Taylor extraction by Cauchy integrals.

The trig operators of the geometry are always even functions of an adjoint
operator, so the primitives here evaluate f(M) for f(mu) = cosh(sqrt(mu))
and f(mu) = sinh(sqrt(mu))/sqrt(mu), which are entire in mu (no branch
ambiguity).  Eigendecomposition is used when the eigenvector matrix is well
conditioned, with a plain power-series fallback otherwise; the series also
covers the removable singularity of sinh(x)/x at 0.
"""

from __future__ import annotations

import numpy as np

from .errors import PrecisionError

# Eigenvector-matrix condition number above which the series path is used.
EIG_COND_LIMIT = 1.0e6
# Series truncation guard.
_SERIES_MAX_TERMS = 120


def cosh_sqrt(mu):
    """cosh(sqrt(mu)) for scalar/array mu, entire in mu."""
    r = np.sqrt(np.asarray(mu, dtype=complex))
    return np.cosh(r)


def sinch_sqrt(mu):
    """sinh(sqrt(mu))/sqrt(mu) for scalar/array mu, entire in mu."""
    mu = np.asarray(mu, dtype=complex)
    r = np.sqrt(mu)
    small = np.abs(r) < 1.0e-4
    out = np.empty_like(mu)
    rs = np.where(small, 1.0, r)
    out = np.sinh(rs) / rs
    # series through mu^2 keeps the error below 1e-28 for |r| < 1e-4
    ser = 1.0 + mu / 6.0 + mu * mu / 120.0
    return np.where(small, ser, out)


def _even_series(M, which):
    """Power series for cosh-sqrt (which=0) or sinch-sqrt (which=1) of M.

    Term k is M^k / (2k)! or M^k / (2k+1)!.  Converges for any M; the loop
    stops once terms stop contributing at double precision.
    """
    n = M.shape[0]
    acc = np.eye(n, dtype=complex)
    term = np.eye(n, dtype=complex)
    for k in range(1, _SERIES_MAX_TERMS):
        denom = (2 * k) * (2 * k - 1) if which == 0 else (2 * k + 1) * (2 * k)
        term = term @ M / denom
        acc = acc + term
        tn = np.linalg.norm(term)
        if tn < 1.0e-20 * max(1.0, np.linalg.norm(acc)):
            return acc
    if np.linalg.norm(term) > 1.0e-12 * max(1.0, np.linalg.norm(acc)):
        raise PrecisionError("even matrix series did not converge; argument too large")
    return acc


def even_matrix_functions(M):
    """Return (cosh_sqrt(M), sinch_sqrt(M)) for a square matrix M.

    Uses eigendecomposition when the eigenvector matrix is well conditioned
    (below EIG_COND_LIMIT), otherwise the entire power series.
    """
    M = np.asarray(M, dtype=complex)
    n = M.shape[0]
    if n == 0:
        return np.zeros((0, 0), complex), np.zeros((0, 0), complex)
    try:
        lam, V = np.linalg.eig(M)
        cond = np.linalg.cond(V)
    except np.linalg.LinAlgError:
        cond = np.inf
    if np.isfinite(cond) and cond < EIG_COND_LIMIT:
        Vi = np.linalg.inv(V)
        co = (V * cosh_sqrt(lam)) @ Vi
        si = (V * sinch_sqrt(lam)) @ Vi
        return co, si
    return _even_series(M, 0), _even_series(M, 1)


def central_diff(f, x0, h):
    """Central finite difference of a vector-valued f at scalar x0."""
    return (np.asarray(f(x0 + h)) - np.asarray(f(x0 - h))) / (2.0 * h)


def richardson_diff(f, x0, h=1.0e-5):
    """Central difference with one Richardson extrapolation level."""
    d1 = central_diff(f, x0, h)
    d2 = central_diff(f, x0, h / 2.0)
    return (4.0 * d2 - d1) / 3.0


def taylor_coefficients(f, order, radius=0.5, samples=None):
    """Taylor coefficients of an analytic f: C -> C^k at 0 by Cauchy/FFT.

    f is sampled on the circle |t| = radius; the inverse FFT yields the
    scaled coefficients.  The sample count defaults to the next power of two
    at least 4*(order+1), which pushes aliasing error below the tail size.
    """
    if samples is None:
        samples = 1
        while samples < 4 * (order + 1):
            samples *= 2
    th = 2.0 * np.pi * np.arange(samples) / samples
    pts = radius * np.exp(1j * th)
    vals = np.asarray([np.atleast_1d(np.asarray(f(t), dtype=complex)) for t in pts])
    coeff = np.fft.ifft(vals, axis=0)
    k = np.arange(samples)
    coeff = coeff / radius ** k[:, None]
    return coeff[: order + 1]


def multi_taylor_coefficients(f, dim, order, radius=0.6):
    """Multivariate Taylor coefficients of f: C^dim -> C at 0 by tensor FFT.

    Returns an ndarray of shape (order+1,)*dim with entry [a] holding the
    coefficient of x^a.  Cost grows like n^dim; intended for dim <= 3.
    """
    n = 1
    while n < 2 * (order + 1):
        n *= 2
    th = 2.0 * np.pi * np.arange(n) / n
    ring = radius * np.exp(1j * th)
    grids = np.meshgrid(*([ring] * dim), indexing="ij")
    pts = np.stack([g.ravel() for g in grids], axis=-1)
    vals = np.asarray([f(p) for p in pts], dtype=complex).reshape((n,) * dim)
    coeff = np.fft.ifftn(vals)
    sl = tuple(slice(0, order + 1) for _ in range(dim))
    coeff = coeff[sl]
    idx = np.indices((order + 1,) * dim).sum(axis=0)
    return coeff / radius ** idx


def eval_poly_multi(coeff, z):
    """Evaluate a dense multivariate polynomial coeff at the point z.

    coeff has shape (N+1,)*dim; evaluation is iterated Horner along axes.
    """
    c = np.asarray(coeff, dtype=complex)
    for zi in reversed(z):
        acc = c[..., -1]
        for j in range(c.shape[-1] - 2, -1, -1):
            acc = acc * zi + c[..., j]
        c = acc
    return complex(c)
