"""Shared cached builders so expensive objects are constructed once."""

from functools import lru_cache

from lgplucker import GF, build_plucker_matrix, lagrangian_subspaces, plucker_vector


@lru_cache(maxsize=None)
def bmatrix(n):
    return build_plucker_matrix(n)


@lru_cache(maxsize=None)
def enumerated_points(n, q):
    """Plucker vectors of every rational Lagrangian over GF(q)."""
    return tuple(plucker_vector(lag) for lag in lagrangian_subspaces(n, q))


@lru_cache(maxsize=None)
def enumerated_bases(n, q):
    return tuple(lagrangian_subspaces(n, q))
