"""Dialytic elimination of the half-angle tangents.

Each rationalized equation ``sum_{p,q<=2} f_{jpq}(sigma) t1^p t2^q`` is
multiplied by ``t1^u t2^v`` (u = 0..3, v = 0, 1), giving 24 equations that are
linear in the 24 power products ``t1^p t2^q`` (p = 0..5, q = 0..3).  The
power products are ordered with t1 running fastest: column ``6 q + p``.
``det M(sigma)`` is a polynomial in sigma; its coefficients are recovered by
evaluating the determinant on circles in the complex plane and inverting the
discrete Fourier transform.
"""
import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import CollapseFailure, SingularGeometry

SIZE = 24
EXPECTED_DEGREE = 28
TOL_COLLAPSE = 1e-8
N_NODES = 40
N_RADII = 6
SINGULAR_TOL = 1e-13
NOISE_FACTOR = 10.0


def _index_maps():
    rows, cols, src = [], [], []
    for j in range(3):
        for v in range(2):
            for u in range(4):
                row = 8 * j + 4 * v + u
                for q in range(3):
                    for p in range(3):
                        rows.append(row)
                        cols.append(6 * (q + v) + p + u)
                        src.append((j, p, q))
    src = np.array(src)
    return np.array(rows), np.array(cols), src[:, 0], src[:, 1], src[:, 2]


_ROWS, _COLS, _J, _P, _Q = _index_maps()


def row_index(j, u, v):
    """0-based row of the auxiliary equation ``t1^u t2^v * (equation j)``, j 1-based."""
    return 8 * (j - 1) + 4 * v + u


def column_index(p, q):
    """0-based column holding the power product ``t1^p t2^q``."""
    return 6 * q + p


def monomial_vector(t1, t2):
    """The 24 power products in column order."""
    return np.outer(t2 ** np.arange(4), t1 ** np.arange(6)).ravel()


def _scatter(f):
    M = np.zeros(f.shape[:-3] + (SIZE, SIZE), dtype=f.dtype)
    M[..., _ROWS, _COLS] = f[..., _J, _P, _Q]
    return M


def build_M(rc, sigma):
    """Elimination matrix at ``sigma`` (scalar or array; complex allowed)."""
    return _scatter(rc.at(sigma))


def build_M_derivative(rc, sigma):
    return _scatter(rc.derivative_at(sigma))


@dataclass(frozen=True)
class UnivariatePolynomial:
    """Real polynomial ``sum coeffs[w] x^w``.

    ``scaled_coeffs`` are the same polynomial in ``x / scale``; root finding
    uses them because their magnitudes are balanced.  Coefficients are
    normalized to ``max |coeff| = 1`` with a positive leading coefficient.
    """

    coeffs: np.ndarray
    scale: float = 1.0
    scaled_coeffs: np.ndarray = None
    diagnostics: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        c = np.trim_zeros(np.asarray(self.coeffs, dtype=float), "b")
        if c.size == 0 or not np.all(np.isfinite(c)):
            raise ValueError("polynomial needs finite, not all-zero coefficients")
        object.__setattr__(self, "coeffs", c)
        if self.scaled_coeffs is None:
            object.__setattr__(self, "scaled_coeffs", c * float(self.scale) ** np.arange(c.size))

    @property
    def degree(self):
        return self.coeffs.size - 1

    def __call__(self, x):
        return np.polynomial.polynomial.polyval(x, self.coeffs)

    def magnitude(self, x):
        """``sum |h_w| |x|^w``, the natural scale of ``p(x)``."""
        return np.polynomial.polynomial.polyval(np.abs(x), np.abs(self.coeffs))

    def even_part(self):
        """Polynomial in ``s = x^2`` built from the even-power coefficients."""
        return UnivariatePolynomial(self.coeffs[::2], self.scale ** 2, self.scaled_coeffs[::2])


def normalized(coeffs):
    coeffs = np.asarray(coeffs, dtype=float)
    coeffs = coeffs / np.abs(coeffs).max()
    lead = np.flatnonzero(coeffs)[-1]
    return coeffs * np.sign(coeffs[lead])


def _circle_coefficients(rc, radius, n_nodes):
    """Fourier-inverted coefficients of det M on one circle, plus error scale."""
    half = n_nodes // 2
    nodes = radius * np.exp(2j * np.pi * np.arange(half + 1) / n_nodes)
    mats = build_M(rc, nodes)
    dets = np.linalg.det(mats)
    values = np.concatenate([dets, np.conj(dets[1:half][::-1])])
    coeffs = np.fft.fft(values) / n_nodes / radius ** np.arange(n_nodes)
    noise = np.finfo(float).eps * np.abs(values).max() * n_nodes / radius ** np.arange(n_nodes)
    return coeffs, noise


def interpolate_determinant(rc, n_nodes=N_NODES, n_radii=N_RADII):
    """Coefficients of ``det M(x)`` in the scaled variable ``x = sigma / scale``.

    Nodes sit on circles of radius ``2, 1, 1/2, ...`` in ``x``; each
    coefficient is taken from the circle whose rounding error bound for it is
    smallest.  Returns ``(coeffs, noise, scale, info)`` with complex coeffs
    of length ``n_nodes``.
    """
    scale = rc.node_radius / 2.0
    rcs = rc.rescaled(scale)
    best = noise = None
    for i in range(n_radii):
        c, e = _circle_coefficients(rcs, 2.0 * 0.5 ** i, n_nodes)
        if best is None:
            best, noise = c, e
        else:
            pick = e < noise
            best = np.where(pick, c, best)
            noise = np.where(pick, e, noise)
    # generic complex probes: an architecturally singular M is rank deficient everywhere
    probes = np.array([0.5, 1.0, 2.0]) * np.exp(2j * np.pi * np.array([0.1, 0.35, 0.6]))
    sv = np.linalg.svd(build_M(rcs, probes), compute_uv=False)
    ratio = np.max(sv[:, -1] / np.maximum(sv[:, 0], np.finfo(float).tiny))
    return best, noise, scale, {"rank_ratio": float(ratio)}


def det_polynomial(rc, tol_collapse=TOL_COLLAPSE, n_nodes=N_NODES, n_radii=N_RADII):
    """Univariate polynomial ``det M(sigma)``, truncated to degree 28."""
    coeffs, noise, scale, info = interpolate_determinant(rc, n_nodes, n_radii)
    if info["rank_ratio"] < SINGULAR_TOL:
        raise SingularGeometry("det M(sigma) vanishes at every interpolation node")
    top = np.abs(coeffs).max()
    if top == 0:
        raise SingularGeometry("det M(sigma) is identically zero")
    real = coeffs.real
    imag_ratio = np.abs(coeffs.imag).max() / top
    if imag_ratio > 1e-9:
        warnings.warn(f"interpolated determinant has imaginary residue {imag_ratio:.2e}")
    tail = np.abs(coeffs[EXPECTED_DEGREE + 1:]) / top
    collapse_ratio = tail[:4].max()
    if collapse_ratio > tol_collapse:
        raise CollapseFailure(
            f"coefficients of degree 29..32 reach {collapse_ratio:.2e} of the largest one")

    kept = real[:EXPECTED_DEGREE + 1].copy()
    degree = EXPECTED_DEGREE
    # only drop leading coefficients that are indistinguishable from rounding noise;
    # small but genuine ones carry the large roots
    while degree > 0 and abs(kept[degree]) <= NOISE_FACTOR * noise[degree]:
        degree -= 1
    kept = kept[:degree + 1]

    rng = np.random.default_rng(0)
    probe = 1.3 * np.exp(2j * np.pi * rng.random(3))
    direct = np.linalg.det(build_M(rc.rescaled(scale), probe))
    fitted = np.polynomial.polynomial.polyval(probe, coeffs.real)
    holdout = np.max(np.abs(direct - fitted)
                     / np.polynomial.polynomial.polyval(np.abs(probe), np.abs(coeffs)))

    scaled = normalized(kept)
    unscaled = normalized(kept / scale ** np.arange(kept.size))
    diagnostics = dict(info, collapse_ratio=float(collapse_ratio), imag_ratio=float(imag_ratio),
                       tail=tail, holdout_error=float(holdout),
                       relative_noise=noise[:degree + 1] / top)
    return UnivariatePolynomial(unscaled, scale, scaled, diagnostics)


def polish_roots(rc, roots, maxiter=50, tol=1e-10, max_shift=0.25):
    """Refine a complete root set of ``det M`` by simultaneous (Aberth) iteration.

    The derivative ratio comes from ``d log det M / d sigma = tr(M^-1 M')``,
    so the determinant polynomial is never formed explicitly.  A root stops
    moving once its Newton correction drops below ``tol`` (relative, in the
    scaled variable); the step that got it there already puts it at rounding
    level.  Far from the origin M is badly conditioned and the ratio is
    noisy; a root that does not converge, or moves further than
    ``max_shift`` relative to its start, keeps its input value.  Returns
    ``(roots, iterations)``.
    """
    scale = rc.node_radius / 2.0
    rcs = rc.rescaled(scale)
    x0 = np.asarray(roots, dtype=complex) / scale
    x = x0.copy()
    n = x.size
    active = np.ones(n, dtype=bool)
    it = 0
    for it in range(1, maxiter + 1):
        idx = np.flatnonzero(active)
        M = build_M(rcs, x[idx])
        dM = build_M_derivative(rcs, x[idx])
        g = np.empty(idx.size, dtype=complex)
        for k in range(idx.size):
            try:
                g[k] = np.trace(np.linalg.solve(M[k], dM[k]))
            except np.linalg.LinAlgError:
                g[k] = np.inf
        diff = x[idx, None] - x[None, :]
        diff[np.arange(idx.size), idx] = 1.0
        repulsion = (1.0 / diff).sum(axis=1) - 1.0
        denom = g - repulsion
        with np.errstate(divide="ignore", invalid="ignore"):
            delta = np.where(np.isfinite(g) & (denom != 0), 1.0 / denom, 0.0)
            newton = np.abs(1.0 / g)
        x[idx] -= delta
        # a small Aberth step alone can come from a crowding neighbour, so the
        # test is on the Newton correction
        active[idx] = newton > tol * (1.0 + np.abs(x[idx]))
        if not active.any():
            break
    bad = active | (np.abs(x - x0) > max_shift * (1.0 + np.abs(x0)))
    x[bad] = x0[bad]
    return _conjugate_repair(x, bad) * scale, it


def _conjugate_repair(x, bad, tol=1e-8):
    """Restore conjugate symmetry, trusting converged roots over reverted ones."""
    x = x.copy()
    off_axis = np.abs(x.imag) > tol * (1.0 + np.abs(x))
    x[~off_axis] = x[~off_axis].real
    upper = [i for i in np.flatnonzero(off_axis) if x[i].imag > 0]
    lower = [i for i in np.flatnonzero(off_axis) if x[i].imag < 0]
    for i in sorted(upper, key=lambda k: -abs(x[k].imag)):
        if not lower:
            break
        j = min(lower, key=lambda k: abs(x[k] - np.conj(x[i])))
        lower.remove(j)
        if bad[i] and not bad[j]:
            x[i] = np.conj(x[j])
        elif bad[j] and not bad[i]:
            x[j] = np.conj(x[i])
        else:
            x[i] = 0.5 * (x[i] + np.conj(x[j]))
            x[j] = np.conj(x[i])
    return x
