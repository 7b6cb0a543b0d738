"""Built-in symmetric-pair catalog.

Real pairs: sl2 (hyperbolic plane), so3 (round sphere, metric sign -1),
so21 (hyperbolic plane in the SO(2,1) picture), so31 (hyperbolic 3-space).
Appending "c" names the complexified pair (sl2c, so3c, ...).

Bases are adapted to theta with the fixed part first, so theta is a +-1
diagonal matrix in every catalog pair.
"""

from __future__ import annotations

import numpy as np

from .errors import ConfigError
from .lie import LieAlgebra, SymmetricPair, complexify_pair


def _e(n, i, j):
    M = np.zeros((n, n))
    M[i, j] = 1.0
    return M


def _sl2_pair():
    E = _e(2, 0, 1)
    F = _e(2, 1, 0)
    H = np.diag([1.0, -1.0])
    # adapted order: k = span{E - F}, p = span{H, E + F}
    basis = [E - F, H, E + F]
    alg = LieAlgebra(np.asarray(basis))
    theta = np.diag([1.0, -1.0, -1.0])
    return SymmetricPair(alg, theta, +1, "sl2", ("transpose_inverse", None))


def _so3_pair():
    L1 = _e(3, 2, 1) - _e(3, 1, 2)
    L2 = _e(3, 0, 2) - _e(3, 2, 0)
    L3 = _e(3, 1, 0) - _e(3, 0, 1)
    # theta = Ad(diag(-1,-1,1)) fixes L3 and flips L1, L2
    basis = [L3, L1, L2]
    alg = LieAlgebra(np.asarray(basis))
    theta = np.diag([1.0, -1.0, -1.0])
    S = np.diag([-1.0, -1.0, 1.0])
    return SymmetricPair(alg, theta, -1, "so3", ("conjugate", S))


def _so_pq_basis(p, q):
    """Adapted basis of so(p, q): rotations of the p-block and of the q-block
    first (fixed by theta = Ad(eta)), then the boosts."""
    n = p + q
    eta = np.diag([1.0] * p + [-1.0] * q)
    k_part = []
    for i in range(p):
        for j in range(i + 1, p):
            k_part.append(_e(n, i, j) - _e(n, j, i))
    for i in range(p, n):
        for j in range(i + 1, n):
            k_part.append(_e(n, i, j) - _e(n, j, i))
    p_part = []
    for i in range(p):
        for j in range(p, n):
            p_part.append(_e(n, i, j) + _e(n, j, i))
    return k_part + p_part, len(k_part), eta


def _so_pq_pair(p, q, name):
    basis, nk, eta = _so_pq_basis(p, q)
    alg = LieAlgebra(np.asarray(basis))
    theta = np.diag([1.0] * nk + [-1.0] * (len(basis) - nk))
    return SymmetricPair(alg, theta, +1, name, ("conjugate", eta))


_BUILDERS = {
    "sl2": _sl2_pair,
    "so3": _so3_pair,
    "so21": lambda: _so_pq_pair(2, 1, "so21"),
    "so31": lambda: _so_pq_pair(3, 1, "so31"),
}

REAL_NAMES = tuple(sorted(_BUILDERS))
COMPLEX_NAMES = tuple(n + "c" for n in REAL_NAMES)
ALL_NAMES = tuple(sorted(REAL_NAMES + COMPLEX_NAMES))

_CACHE: dict[str, SymmetricPair] = {}


def load_pair(name: str) -> SymmetricPair:
    """Catalog pair by name; 'c'-suffixed names are complexifications."""
    if name in _CACHE:
        return _CACHE[name]
    if name in _BUILDERS:
        pair = _BUILDERS[name]()
    elif name.endswith("c") and name[:-1] in _BUILDERS:
        pair = complexify_pair(load_pair(name[:-1]))
    else:
        raise ConfigError(f"unknown space {name!r}; catalog: {', '.join(ALL_NAMES)}")
    _CACHE[name] = pair
    return pair
