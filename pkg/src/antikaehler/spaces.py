"""Pseudo-Riemannian symmetric spaces G/K and their complexifications.

Points are group-element representatives; the canonical form used for
equality is the Cartan image a -> a sigma(a)^{-1}.  Tangent vectors are
coefficient vectors over the pair's p-basis, meaning the translated-frame
representation b_* xi at the point with representative b.  In this frame the
metric, complex structure and curvature are constant, the exponential map is
b exp(xi) K, and parallel transport along geodesics (the differential of the
transvection) is the identity on coefficients.
"""

from __future__ import annotations

import numpy as np
import scipy.linalg

from .errors import AlgebraValidationError, DomainExtensionError
from .lie import SymmetricPair

POINT_TOL = 1.0e-10
EXP_NORM_CAP = 80.0


class SpacePoint:
    """Point of the space, carried by a group representative."""

    __slots__ = ("space", "rep", "_cartan")

    def __init__(self, space, rep):
        self.space = space
        self.rep = np.asarray(rep, dtype=complex)
        self._cartan = None

    @property
    def cartan_image(self):
        if self._cartan is None:
            self._cartan = self.rep @ np.linalg.inv(self.space.pair.sigma_group(self.rep))
        return self._cartan

    def same_as(self, other, tol=POINT_TOL):
        return np.linalg.norm(self.cartan_image - other.cartan_image) <= tol

    def group_residual(self):
        """Exp-log round-trip residual of the representative (identity component)."""
        xi = scipy.linalg.logm(self.rep)
        return float(np.linalg.norm(scipy.linalg.expm(xi) - self.rep))


class TangentVector:
    """Tangent vector stored as p-coefficients in the translated frame."""

    __slots__ = ("base", "xi")

    def __init__(self, base, xi):
        self.base = base
        self.xi = np.asarray(xi, dtype=float)

    def __add__(self, other):
        self._check(other)
        return TangentVector(self.base, self.xi + other.xi)

    def __mul__(self, s):
        return TangentVector(self.base, s * self.xi)

    __rmul__ = __mul__

    def _check(self, other):
        if other.base is not self.base and not self.base.same_as(other.base):
            raise AlgebraValidationError("tangent vectors live at different points")


class GeodesicTransport:
    """Parallel transport along a geodesic: the transvection differential.

    In translated frames this map is the identity on coefficients; the
    object records source and target for interface clarity.
    """

    def __init__(self, space, start, end):
        self.space = space
        self.start = start
        self.end = end

    def apply(self, xi):
        return np.array(xi, copy=True)

    def matrix(self):
        return np.eye(self.space.pair.dim_p)


class ComplexGeodesic:
    """Holomorphic extension z -> exp_p((Re z) v + (Im z) Jv) of a geodesic.

    The span of v and Jv is abelian, so the image is a flat totally geodesic
    surface and the velocity frame along it is constant.
    """

    def __init__(self, space, base, v):
        if not space.is_complexified:
            raise AlgebraValidationError("complex geodesics require a complexified space")
        self.space = space
        self.base = base
        self.v = np.asarray(v, dtype=float)
        self.jv = space.pair.Jp @ self.v

    def direction(self, z):
        return z.real * self.v + z.imag * self.jv

    def rep(self, z):
        w = self.direction(z)
        return self.base.rep @ self.space._exp_matrix(w)

    def point(self, z):
        return SpacePoint(self.space, self.rep(z))

    def velocity_frame(self):
        """Frame representation of d/ds at any z (constant along the surface)."""
        return self.v.copy()


class SymmetricSpace:
    """The homogeneous space of a symmetric pair, real or complexified."""

    def __init__(self, pair: SymmetricPair, exp_norm_cap=EXP_NORM_CAP):
        self.pair = pair
        self.exp_norm_cap = exp_norm_cap

    # -- basics ----------------------------------------------------------------

    @property
    def name(self):
        return self.pair.name

    @property
    def dim(self):
        return self.pair.dim_p

    @property
    def is_complexified(self):
        return self.pair.algebra.is_complexified

    def base_point(self):
        n = self.pair.algebra.matrix_size
        return SpacePoint(self, np.eye(n))

    def point(self, rep):
        return SpacePoint(self, rep)

    def tangent(self, base, xi):
        return TangentVector(base, xi)

    def tangent_from_algebra(self, base, x_full, tol=POINT_TOL):
        """Tangent vector from full algebra coefficients; k-part must vanish."""
        k_norm = float(np.linalg.norm(self.pair.project_k(x_full)))
        if k_norm > tol:
            raise AlgebraValidationError(f"k-part of tangent coefficients is {k_norm:.3e}")
        return TangentVector(base, self.pair.project_p(x_full))

    # -- metric, complex structure, curvature -----------------------------------

    def metric_coeffs(self, x, y):
        """Metric pairing of frame coefficient vectors (real bilinear)."""
        return self.pair.metric_sign * float(np.real(np.asarray(x) @ self.pair.p_gram @ np.asarray(y)))

    def metric(self, X: TangentVector, Y: TangentVector):
        X._check(Y)
        return self.metric_coeffs(X.xi, Y.xi)

    def complex_structure_coeffs(self, x):
        if not self.is_complexified:
            raise AlgebraValidationError("complex structure requires a complexified space")
        return self.pair.Jp @ np.asarray(x)

    def complex_structure(self, X: TangentVector):
        return TangentVector(X.base, self.complex_structure_coeffs(X.xi))

    def curvature_coeffs(self, x, y, z):
        """R(x, y)z = -[[x, y], z] on frame coefficients."""
        pr = self.pair
        a = pr.algebra.bracket(pr.embed_p(x), pr.embed_p(y))
        b = pr.algebra.bracket(a, pr.embed_p(z))
        return -pr.project_p(b)

    def curvature(self, X, Y, Z):
        X._check(Y)
        X._check(Z)
        return TangentVector(X.base, self.curvature_coeffs(X.xi, Y.xi, Z.xi))

    def sectional_curvature(self, base, x, y):
        num = self.metric_coeffs(self.curvature_coeffs(x, y, y), x)
        den = self.metric_coeffs(x, x) * self.metric_coeffs(y, y) - self.metric_coeffs(x, y) ** 2
        if abs(den) < 1.0e-14:
            raise AlgebraValidationError("degenerate 2-plane")
        return num / den

    # -- exponential map and geodesics ------------------------------------------

    def _exp_matrix(self, xi):
        M = self.pair.algebra.matrix(self.pair.embed_p(xi))
        nrm = np.linalg.norm(M)
        if nrm > self.exp_norm_cap:
            raise DomainExtensionError(
                f"exponential argument norm {nrm:.3e} exceeds the cap {self.exp_norm_cap}"
            )
        return scipy.linalg.expm(M)

    def exp_point(self, p: SpacePoint, v) -> SpacePoint:
        """Geodesic endpoint exp_p(v); v given as TangentVector or coefficients."""
        xi = v.xi if isinstance(v, TangentVector) else np.asarray(v, dtype=float)
        return SpacePoint(self, p.rep @ self._exp_matrix(xi))

    def geodesic_point(self, p, xi, t):
        return self.exp_point(p, t * np.asarray(xi))

    def complex_geodesic(self, p, v) -> ComplexGeodesic:
        xi = v.xi if isinstance(v, TangentVector) else np.asarray(v, dtype=float)
        return ComplexGeodesic(self, p, xi)

    def transport(self, p, xi, t0, t1) -> GeodesicTransport:
        """Transvection transport along t -> exp_p(t xi) from t0 to t1."""
        start = self.geodesic_point(p, xi, t0)
        end = self.geodesic_point(p, xi, t1)
        return GeodesicTransport(self, start, end)

    # -- charts ------------------------------------------------------------------

    def log_chart(self, center: SpacePoint, q: SpacePoint, k_tol=1.0e-6):
        """Normal coordinates of q in the exp chart centered at ``center``.

        Solves exp_center(xi) = q through the relative Cartan image
        c sigma(c)^{-1} = exp(2 xi) for c = center^{-1} q, taking the
        principal logarithm (valid for q near the center's injectivity
        neighborhood).
        """
        c = np.linalg.inv(center.rep) @ q.rep
        M = c @ np.linalg.inv(self.pair.sigma_group(c))
        L = scipy.linalg.logm(M)
        x, res = self.pair.algebra.expand(0.5 * L)
        if res > 1.0e-7:
            raise DomainExtensionError(f"log image leaves the algebra (residual {res:.3e})")
        k_norm = float(np.linalg.norm(self.pair.project_k(x)))
        if k_norm > k_tol:
            raise DomainExtensionError(f"log image has k-component {k_norm:.3e}")
        return self.pair.project_p(x)

    # -- group action -------------------------------------------------------------

    def group_exp(self, x_full):
        return scipy.linalg.expm(self.pair.algebra.matrix(x_full))

    def act(self, g, p: SpacePoint) -> SpacePoint:
        return SpacePoint(self, g @ p.rep)

    def push_tangent(self, g, X: TangentVector) -> TangentVector:
        """Isometry differential: frame coefficients are unchanged, the base
        representative is left-multiplied."""
        return TangentVector(self.act(g, X.base), X.xi.copy())

    # -- sampling -------------------------------------------------------------------

    def random_tangent_coeffs(self, rng, scale=1.0):
        return scale * rng.standard_normal(self.dim)

    def random_point(self, rng, scale=0.5):
        x = scale * rng.standard_normal(self.pair.algebra.dim)
        return SpacePoint(self, self.group_exp(x))
