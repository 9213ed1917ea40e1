"""All complex roots of a real univariate polynomial."""
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import polynomial as P

from .elimination import UnivariatePolynomial
from .errors import NonConvergence, UnpairedComplexRoot

TOL_REAL = 1e-7
RESIDUAL_BOUND = 1e-9


@dataclass(frozen=True)
class RootSet:
    roots: np.ndarray
    residuals: np.ndarray
    is_real: np.ndarray
    near_multiple: list = field(default_factory=list)
    method: str = "aberth"

    def __len__(self):
        return self.roots.size

    def __iter__(self):
        return iter(self.roots)


def _as_polynomial(poly):
    if isinstance(poly, UnivariatePolynomial):
        return poly
    return UnivariatePolynomial(np.asarray(poly, dtype=float))


def _relative_residual(coeffs, z):
    """``|p(z)| / sum |h_w| |z|^w``; evaluated in ``1/z`` outside the unit disc."""
    z = np.asarray(z, dtype=complex)
    out = np.empty(z.shape)
    inner = np.abs(z) <= 1.0
    zi = z[inner]
    rev = np.asarray(coeffs)[::-1]
    w = 1.0 / z[~inner]
    with np.errstate(invalid="ignore"):
        out[inner] = np.abs(P.polyval(zi, coeffs)) / P.polyval(np.abs(zi), np.abs(coeffs))
        out[~inner] = np.abs(P.polyval(w, rev)) / P.polyval(np.abs(w), np.abs(rev))
    # 0 / 0 only happens at an exact root at the origin
    return np.nan_to_num(out, nan=0.0)


def initial_guesses(coeffs, offset=0.4):
    """Starting points from the upper convex hull of ``(w, log |h_w|)``.

    Each hull edge from ``k`` to ``l`` contributes ``l - k`` points on a
    circle whose radius is the geometric root-modulus estimate of that edge.
    """
    c = np.asarray(coeffs, dtype=float)
    n = c.size - 1
    with np.errstate(divide="ignore"):
        a = np.log(np.abs(c))
    hull = []
    for w in range(n + 1):
        if not np.isfinite(a[w]):
            continue
        while len(hull) >= 2:
            k0, k1 = hull[-2], hull[-1]
            # drop k1 if it lies on or below the chord from k0 to w
            if (a[k1] - a[k0]) * (w - k0) <= (a[w] - a[k0]) * (k1 - k0):
                hull.pop()
            else:
                break
        hull.append(w)
    z = [0j] * hull[0]
    for k, l in zip(hull[:-1], hull[1:]):
        radius = np.exp((a[k] - a[l]) / (l - k))
        count = l - k
        z.extend(radius * np.exp(1j * (2 * np.pi * np.arange(count) / count
                                       + 2 * np.pi * k / n + offset)))
    return np.array(z)


def aberth(coeffs, maxiter=500, tol=1e-13):
    """Aberth-Ehrlich iteration on ascending ``coeffs``.

    Starts from :func:`initial_guesses`.  Returns ``(roots, converged)``.
    """
    c = np.asarray(coeffs, dtype=float)
    zeros = np.flatnonzero(c)[0]
    if zeros:
        z, converged = aberth(c[zeros:], maxiter, tol)
        return np.concatenate([np.zeros(zeros, dtype=complex), z]), converged
    n = c.size - 1
    z = initial_guesses(c)
    dc = P.polyder(c)
    active = np.ones(n, dtype=bool)
    for _ in range(maxiter):
        p = P.polyval(z, c)
        dp = P.polyval(z, dc)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        repulsion = (1.0 / diff).sum(axis=1) - 1.0
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = p / dp
            delta = ratio / (1.0 - ratio * repulsion)
        delta = np.where(np.isfinite(delta) & active, delta, 0.0)
        z = z - delta
        # freeze roots whose step or residual is at rounding level
        active &= np.abs(delta) > tol * (1.0 + np.abs(z))
        active &= _relative_residual(c, z) > 1e-14
        if not active.any():
            return z, True
    return z, False


def _newton_polish(coeffs, z, steps=3):
    dc = P.polyder(coeffs)
    for _ in range(steps):
        p, dp = P.polyval(z, coeffs), P.polyval(z, dc)
        with np.errstate(divide="ignore", invalid="ignore"):
            trial = z - p / dp
        better = np.isfinite(trial) & (np.abs(P.polyval(trial, coeffs)) < np.abs(p))
        z = np.where(better, trial, z)
    return z


def all_roots(poly, tol_real=TOL_REAL, maxiter=500):
    """Every complex root of ``poly`` (ascending coefficients or a polynomial object).

    Roots come from Aberth iteration on the balanced (scaled) coefficients,
    then a Newton polish on the original ones.  Companion-matrix
    eigenvalues are used when Aberth stalls.
    """
    poly = _as_polynomial(poly)
    if poly.degree < 1:
        raise ValueError("polynomial must have degree >= 1")
    scaled, scale = poly.scaled_coeffs, poly.scale
    z, converged = aberth(scaled, maxiter)
    method = "aberth"
    if not converged or not np.all(np.isfinite(z)):
        z = P.polyroots(scaled).astype(complex)
        method = "companion"
    z = _newton_polish(poly.coeffs, z * scale)
    residuals = _relative_residual(poly.coeffs, z)
    if np.any(residuals > RESIDUAL_BOUND) and method == "aberth":
        alt = _newton_polish(poly.coeffs, P.polyroots(scaled).astype(complex) * scale)
        alt_res = _relative_residual(poly.coeffs, alt)
        if alt_res.max() < residuals.max():
            z, residuals, method = alt, alt_res, "companion"
    if np.any(residuals > RESIDUAL_BOUND):
        raise NonConvergence(f"root residual {residuals.max():.2e} exceeds {RESIDUAL_BOUND:g}")
    return make_rootset(z, residuals, tol_real, method)


def make_rootset(z, residuals=None, tol_real=TOL_REAL, method="aberth"):
    z = np.asarray(z, dtype=complex)
    order = np.lexsort((z.imag, z.real))
    z = z[order]
    residuals = np.zeros(z.size) if residuals is None else np.asarray(residuals)[order]
    is_real = np.abs(z.imag) <= tol_real * (1.0 + np.abs(z.real))
    z = np.where(is_real, z.real + 0j, z)
    scale = 1.0 + np.abs(z).max(initial=0.0)
    near = [(i, k) for i in range(z.size) for k in range(i + 1, z.size)
            if abs(z[i] - z[k]) < 1e-6 * scale]
    return RootSet(z, residuals, is_real, near, method)


def classify_real(roots, tol_real=TOL_REAL):
    """Split roots into sorted real values and conjugate pairs.

    A root is real when ``|Im r| <= tol_real * (1 + |Re r|)``.  Each pair is
    returned as ``(r, conj_partner)`` with ``Im r > 0``.
    """
    z = np.asarray(roots.roots if isinstance(roots, RootSet) else roots, dtype=complex)
    real_mask = np.abs(z.imag) <= tol_real * (1.0 + np.abs(z.real))
    reals = sorted(float(r) for r in z[real_mask].real)
    upper = [r for r in z[~real_mask] if r.imag > 0]
    lower = [r for r in z[~real_mask] if r.imag < 0]
    if len(upper) != len(lower):
        raise UnpairedComplexRoot("non-real roots do not split into conjugate pairs")
    pairs = []
    for r in sorted(upper, key=lambda c: (c.real, c.imag)):
        dist = [abs(np.conj(r) - w) for w in lower]
        k = int(np.argmin(dist))
        if dist[k] > 1e-6 * (1.0 + abs(r)):
            raise UnpairedComplexRoot(f"no conjugate partner for {r}")
        pairs.append((r, lower.pop(k)))
    return reals, pairs
