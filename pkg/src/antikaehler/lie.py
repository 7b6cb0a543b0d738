"""Matrix Lie algebras, their complexifications, and symmetric pairs.

An algebra is stored as an explicit matrix basis together with its real
structure constants.  A complexified algebra is the same object of twice the
dimension with basis (b_1..b_d, i*b_1..i*b_d), a recorded complex structure
J on coefficient space, and a complex-basis view (the first half with
complex coefficients) for the holomorphic side of the theory.

Coefficient vectors rather than matrices are the working representation:
brackets, adjoint operators and the Killing form are all structure-constant
contractions, which keeps them valid for complex coefficient vectors (the
formal complexification used by the focal machinery).
"""

from __future__ import annotations

import json

import numpy as np

from .errors import AlgebraValidationError

DEFAULT_TOL = 1.0e-10


class LieAlgebra:
    """Finite-dimensional matrix Lie algebra over the reals.

    Parameters
    ----------
    basis : array_like, shape (d, N, N)
        Real-linearly independent matrices closed under the commutator.
    is_complexified : bool
        Marks an algebra built by :func:`complexify_algebra`; enables the
        complex-basis view (J, conjugation, complex structure constants).
    tol : float
        Residual bound for closure and the Jacobi identity.
    """

    def __init__(self, basis, is_complexified=False, tol=DEFAULT_TOL):
        self.basis = np.asarray(basis, dtype=complex)
        if self.basis.ndim != 3 or self.basis.shape[1] != self.basis.shape[2]:
            raise AlgebraValidationError("basis must be a list of square matrices")
        self.dim = self.basis.shape[0]
        self.matrix_size = self.basis.shape[1]
        self.is_complexified = is_complexified
        self.tol = tol

        flat = np.concatenate(
            [self.basis.real.reshape(self.dim, -1), self.basis.imag.reshape(self.dim, -1)],
            axis=1,
        )
        if np.linalg.matrix_rank(flat, tol=1.0e-10) < self.dim:
            raise AlgebraValidationError("basis matrices are linearly dependent")
        self._flat = flat
        self._flat_pinv = np.linalg.pinv(flat)

        self.struct = self._structure_constants()
        jac = self.jacobi_residual()
        if jac > max(tol, 1.0e-10):
            raise AlgebraValidationError(f"Jacobi identity residual {jac:.3e}")

        # Killing Gram matrix: B_ij = trace(ad b_i ad b_j).
        self.killing_gram = np.einsum("ikl,jlk->ij", self.struct, self.struct)

        if is_complexified:
            if self.dim % 2:
                raise AlgebraValidationError("complexified algebra must have even dimension")
            c = self.dim // 2
            self.cdim = c
            self.J = np.zeros((self.dim, self.dim))
            self.J[c:, :c] = np.eye(c)
            self.J[:c, c:] = -np.eye(c)
            self.conjugation = np.diag(np.concatenate([np.ones(c), -np.ones(c)]))
            self.cstruct = self.struct[:c, :c, :c].copy()
            self.killing_gram_c = np.einsum("ikl,jlk->ij", self.cstruct, self.cstruct)

    # -- construction helpers -------------------------------------------------

    def expand(self, M):
        """Coefficients of the matrix M in the basis, with expansion residual."""
        M = np.asarray(M, dtype=complex)
        v = np.concatenate([M.real.ravel(), M.imag.ravel()])
        x = v @ self._flat_pinv
        res = np.linalg.norm(x @ self._flat - v)
        return x, res

    def _structure_constants(self):
        c = np.zeros((self.dim, self.dim, self.dim))
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                M = self.basis[i] @ self.basis[j] - self.basis[j] @ self.basis[i]
                x, res = self.expand(M)
                if res > 1.0e-8:
                    raise AlgebraValidationError(
                        f"bracket of basis elements {i},{j} leaves the span (residual {res:.3e})"
                    )
                c[i, j] = x
                c[j, i] = -x
        return c

    # -- algebra operations ---------------------------------------------------

    def matrix(self, x):
        """Matrix form of a coefficient vector (complex coefficients allowed)."""
        return np.einsum("i,ijk->jk", np.asarray(x), self.basis)

    def bracket(self, x, y):
        """Lie bracket on coefficient vectors."""
        return np.einsum("i,j,ijk->k", np.asarray(x), np.asarray(y), self.struct)

    def ad(self, x):
        """Matrix of y -> [x, y] acting on coefficient vectors."""
        return np.einsum("i,ijk->kj", np.asarray(x), self.struct)

    def killing(self, x, y):
        """Killing form B(x, y) = trace(ad x ad y) from the stored Gram matrix."""
        return np.asarray(x) @ self.killing_gram @ np.asarray(y)

    def killing_by_trace(self, x, y):
        """Killing form recomputed as an explicit trace (independent path)."""
        return np.trace(self.ad(x) @ self.ad(y))

    def jacobi_residual(self):
        """Max norm of [[bi,bj],bk] + [[bj,bk],bi] + [[bk,bi],bj] over triples."""
        c = self.struct
        t = np.einsum("ijm,mkl->ijkl", c, c)
        total = t + np.einsum("jkm,mil->ijkl", c, c) + np.einsum("kim,mjl->ijkl", c, c)
        return float(np.max(np.abs(total)))

    # -- complexified view ----------------------------------------------------

    def to_complex(self, x):
        """Complex-basis coefficients of a (real or complex) coefficient vector."""
        self._require_complexified()
        c = self.cdim
        x = np.asarray(x)
        return x[..., :c] + 1j * x[..., c:]

    def from_complex(self, xc):
        """Real-basis coefficients of a complex-basis vector."""
        self._require_complexified()
        xc = np.asarray(xc, dtype=complex)
        return np.concatenate([xc.real, xc.imag], axis=-1)

    def ad_complex(self, xc):
        """Adjoint matrix in the complex basis (complex-linear operators only)."""
        self._require_complexified()
        return np.einsum("i,ijk->kj", np.asarray(xc, dtype=complex), self.cstruct)

    def killing_complex(self, xc, yc):
        """Complex-bilinear Killing form of the complex-basis view."""
        self._require_complexified()
        return np.asarray(xc) @ self.killing_gram_c @ np.asarray(yc)

    def _require_complexified(self):
        if not self.is_complexified:
            raise AlgebraValidationError("operation requires a complexified algebra")


def complexify_algebra(alg: LieAlgebra) -> LieAlgebra:
    """Complexification viewed as a real algebra of twice the dimension.

    The new basis is (b_1..b_d, i*b_1..i*b_d); the complex structure and the
    conjugation fixing the original algebra are recorded on coefficients.
    """
    doubled = np.concatenate([alg.basis, 1j * alg.basis], axis=0)
    return LieAlgebra(doubled, is_complexified=True, tol=alg.tol)


class SymmetricPair:
    """Symmetric pair data: algebra, involution theta, metric sign.

    The basis is required to be adapted to theta (theta diagonal with +-1
    entries), so the fixed set and the (-1)-eigenspace are index sets
    ``k_idx`` and ``p_idx``.  ``group_involution`` describes the group-level
    involution whose differential is theta, as either
    ``("transpose_inverse", None)`` or ``("conjugate", S)``.
    """

    def __init__(self, algebra, theta, metric_sign, name, group_involution, tol=DEFAULT_TOL):
        self.algebra = algebra
        self.theta = np.asarray(theta, dtype=float)
        if metric_sign not in (+1, -1):
            raise AlgebraValidationError("metric_sign must be +1 or -1")
        self.metric_sign = metric_sign
        self.name = name
        self.group_involution = group_involution
        self.tol = tol

        d = algebra.dim
        if self.theta.shape != (d, d):
            raise AlgebraValidationError("theta has wrong shape")
        res = np.linalg.norm(self.theta @ self.theta - np.eye(d))
        if res > 1.0e-12:
            raise AlgebraValidationError(f"theta is not an involution (residual {res:.3e})")
        offdiag = self.theta - np.diag(np.diag(self.theta))
        if np.linalg.norm(offdiag) > 1.0e-12:
            raise AlgebraValidationError("basis is not adapted to theta (theta not diagonal)")
        diag = np.diag(self.theta)
        self.k_idx = np.where(diag > 0)[0]
        self.p_idx = np.where(diag < 0)[0]
        if self.p_idx.size == 0:
            raise AlgebraValidationError("the (-1)-eigenspace of theta is zero")

        self._check_bracket_relations()

        P = self.p_basis_coeffs()
        self.p_gram = P @ algebra.killing_gram @ P.T
        smin = np.linalg.svd(self.p_gram, compute_uv=False).min()
        if smin <= 1.0e-8:
            raise AlgebraValidationError(
                f"Killing form degenerate on the (-1)-eigenspace (smallest singular value {smin:.3e})"
            )

        if algebra.is_complexified:
            # p ordering is (real parts, imaginary parts): J acts blockwise.
            m = self.p_idx.size // 2
            self.Jp = np.zeros((2 * m, 2 * m))
            self.Jp[m:, :m] = np.eye(m)
            self.Jp[:m, m:] = -np.eye(m)
            # complex-basis index set of the (-1)-eigenspace
            self.cp_idx = self.p_idx[:m]
            self.ck_idx = self.k_idx[: self.k_idx.size // 2]

    # -- complex-basis helpers (complexified pairs only) ------------------------

    def p_to_complex(self, xp):
        """Complex p-coefficients (x_re + i x_im) of a real p-vector."""
        m = self.dim_p // 2
        xp = np.asarray(xp)
        return xp[..., :m] + 1j * xp[..., m:]

    def p_from_complex(self, xc):
        xc = np.asarray(xc, dtype=complex)
        return np.concatenate([xc.real, xc.imag], axis=-1)

    def embed_p_complex(self, xc):
        """Full complex-algebra coefficients of a complex p-vector."""
        xc = np.asarray(xc, dtype=complex)
        out = np.zeros(xc.shape[:-1] + (self.algebra.cdim,), dtype=complex)
        out[..., self.cp_idx] = xc
        return out

    def project_p_complex(self, x_full):
        return np.asarray(x_full)[..., self.cp_idx]

    # -- bases ----------------------------------------------------------------

    @property
    def dim_k(self):
        return self.k_idx.size

    @property
    def dim_p(self):
        return self.p_idx.size

    def k_basis_coeffs(self):
        E = np.eye(self.algebra.dim)
        return E[self.k_idx]

    def p_basis_coeffs(self):
        E = np.eye(self.algebra.dim)
        return E[self.p_idx]

    def embed_p(self, xp):
        """Algebra coefficients of a p-coefficient vector."""
        xp = np.asarray(xp)
        out = np.zeros(xp.shape[:-1] + (self.algebra.dim,), dtype=np.result_type(xp, float))
        out[..., self.p_idx] = xp
        return out

    def project_p(self, x):
        """p-part of an algebra coefficient vector (projection along k)."""
        return np.asarray(x)[..., self.p_idx]

    def project_k(self, x):
        return np.asarray(x)[..., self.k_idx]

    def _check_bracket_relations(self):
        c = self.algebra.struct
        k, p = self.k_idx, self.p_idx
        res = 0.0
        res = max(res, float(np.max(np.abs(c[np.ix_(k, k)][..., p]))) if k.size else 0.0)
        res = max(res, float(np.max(np.abs(c[np.ix_(k, p)][..., k]))) if k.size else 0.0)
        res = max(res, float(np.max(np.abs(c[np.ix_(p, p)][..., p]))))
        if res > self.tol:
            raise AlgebraValidationError(f"eigenspace bracket relations violated (residual {res:.3e})")

    # -- group-level involution ------------------------------------------------

    def sigma_group(self, g):
        """Group involution with differential theta applied to a matrix."""
        kind, S = self.group_involution
        if kind == "transpose_inverse":
            return np.linalg.inv(g.T)
        if kind == "conjugate":
            return S @ g @ np.linalg.inv(S)
        raise AlgebraValidationError(f"unknown group involution kind {kind!r}")

    def theta_matrix_level(self, X):
        """theta applied to a matrix-form algebra element."""
        kind, S = self.group_involution
        if kind == "transpose_inverse":
            return -X.T
        if kind == "conjugate":
            return S @ X @ np.linalg.inv(S)
        raise AlgebraValidationError(f"unknown group involution kind {kind!r}")


def complexify_pair(pair: SymmetricPair) -> SymmetricPair:
    """Complexified symmetric pair with basis adapted as (k, p, ik, ip)."""
    perm0 = np.concatenate([pair.k_idx, pair.p_idx])
    adapted = pair.algebra.basis[perm0]
    basis = np.concatenate([adapted, 1j * adapted], axis=0)
    algc = LieAlgebra(basis, is_complexified=True, tol=pair.algebra.tol)
    nk, m = pair.k_idx.size, pair.p_idx.size
    diag = np.concatenate([np.ones(nk), -np.ones(m), np.ones(nk), -np.ones(m)])
    out = SymmetricPair(
        algc,
        np.diag(diag),
        pair.metric_sign,
        pair.name + "c",
        pair.group_involution,
        tol=pair.tol,
    )
    out.real_pair = pair
    return out


def embed_real_tangent(pairc: SymmetricPair, xp_real):
    """p-coefficients in the complexified pair of a real pair's p-vector."""
    m = pairc.dim_p // 2
    xp_real = np.asarray(xp_real, dtype=float)
    if xp_real.shape[-1] != m:
        raise AlgebraValidationError("real tangent vector has wrong dimension")
    return np.concatenate([xp_real, np.zeros_like(xp_real)], axis=-1)


# -- standalone operations ----------------------------------------------------


def canonical_decomposition(algebra, theta, tol=DEFAULT_TOL):
    """Eigenspace split of an involution: (+1)-space k and (-1)-space p.

    Returns coefficient-vector bases of both eigenspaces, orthogonalized with
    respect to the Killing form up to sign (Gram matrices become diagonal
    with entries +-1).  Rejects a non-involutive theta and a zero p.
    """
    theta = np.asarray(theta, dtype=float)
    d = algebra.dim
    res = np.linalg.norm(theta @ theta - np.eye(d))
    if res > 1.0e-12:
        raise AlgebraValidationError(f"theta is not an involution (residual {res:.3e})")
    k_raw = _eigenspace(theta, +1.0)
    p_raw = _eigenspace(theta, -1.0)
    if p_raw.shape[0] == 0:
        raise AlgebraValidationError("the (-1)-eigenspace of theta is zero")
    return (
        _killing_orthogonalize(algebra, k_raw),
        _killing_orthogonalize(algebra, p_raw),
    )


def _eigenspace(theta, sign):
    d = theta.shape[0]
    M = theta - sign * np.eye(d)
    _, s, vt = np.linalg.svd(M)
    null_mask = s < 1.0e-10
    rank = int(np.sum(~null_mask))
    return vt[rank:]


def _killing_orthogonalize(algebra, vectors):
    if vectors.shape[0] == 0:
        return vectors
    G = vectors @ algebra.killing_gram @ vectors.T
    lam, V = np.linalg.eigh(G)
    out = []
    for i in range(len(lam)):
        v = V[:, i] @ vectors
        scale = np.sqrt(abs(lam[i]))
        if scale < 1.0e-12:
            out.append(v)
            continue
        v = v / scale
        j = int(np.argmax(np.abs(v)))
        if v[j] < 0:
            v = -v
        out.append(v)
    return np.asarray(out)


def subspace_flags(algebra, vectors, tol=DEFAULT_TOL):
    """Lie-triple-system and abelian flags for the span of coefficient vectors.

    ``is_lie_triple``: [[a,b],c] falls back into the span for all basis
    triples; ``is_abelian``: all pairwise brackets vanish.  Complex
    coefficient vectors are accepted (complex spans).
    """
    V = np.asarray(vectors)
    if V.ndim != 2 or V.shape[0] == 0:
        raise AlgebraValidationError("need a nonempty list of coefficient vectors")
    rank = np.linalg.matrix_rank(V, tol=1.0e-10)
    if rank < V.shape[0]:
        raise AlgebraValidationError("spanning list is linearly dependent")
    pinv = np.linalg.pinv(V)
    abelian_res = 0.0
    triple_res = 0.0
    n = V.shape[0]
    for i in range(n):
        for j in range(n):
            bij = algebra.bracket(V[i], V[j])
            abelian_res = max(abelian_res, float(np.linalg.norm(bij)))
            for k in range(n):
                w = algebra.bracket(bij, V[k])
                back = (w @ pinv) @ V
                triple_res = max(triple_res, float(np.linalg.norm(w - back)))
    return {
        "is_lie_triple": triple_res <= tol,
        "is_abelian": abelian_res <= tol,
        "residuals": {"lie_triple": triple_res, "abelian": abelian_res},
    }


# -- JSON catalog exchange ----------------------------------------------------


def pair_to_json(pair: SymmetricPair) -> str:
    """Serialize a pair: name, matrix basis (row-major re/im), theta, sign."""
    kind, S = pair.group_involution
    doc = {
        "name": pair.name,
        "matrix_size": pair.algebra.matrix_size,
        "basis_real": [b.real.ravel().tolist() for b in pair.algebra.basis],
        "basis_imag": [b.imag.ravel().tolist() for b in pair.algebra.basis],
        "theta": pair.theta.tolist(),
        "metric_sign": pair.metric_sign,
        "is_complexified": pair.algebra.is_complexified,
        "group_involution": {
            "kind": kind,
            "matrix": None if S is None else np.asarray(S).tolist(),
        },
    }
    return json.dumps(doc, sort_keys=True, indent=2)


def pair_from_json(text: str) -> SymmetricPair:
    doc = json.loads(text)
    n = doc["matrix_size"]
    basis = np.asarray(doc["basis_real"], dtype=float).reshape(-1, n, n) + 1j * np.asarray(
        doc["basis_imag"], dtype=float
    ).reshape(-1, n, n)
    alg = LieAlgebra(basis, is_complexified=doc["is_complexified"])
    gi = doc["group_involution"]
    S = None if gi["matrix"] is None else np.asarray(gi["matrix"], dtype=float)
    return SymmetricPair(
        alg,
        np.asarray(doc["theta"], dtype=float),
        doc["metric_sign"],
        doc["name"],
        (gi["kind"], S),
    )
