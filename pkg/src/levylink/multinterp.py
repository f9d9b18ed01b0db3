"""Multivariate polynomial interpolation on a sample matrix of monomials.

A degree-n polynomial in m variables has rho = C(n+m, n) monomials.  Given
rho nodes, the sample matrix M holds node i's monomials in row i.  Two
evaluation routes are kept deliberately:

* coefficient solve: solve M a = f once, evaluate as a dot product with the
  monomial row of the query point (the production path);
* determinant ratio: cardinal function i at X is det(M with row i replaced
  by the monomial row of X) divided by det(M), and the interpolant is the
  cardinal-weighted sum of the node values.

The second route is kept as an independent construction; it agrees with the
first wherever the system is reasonably conditioned.

Monomials are ordered graded-lexicographically: grade ascending, and within
a grade the earlier variables dominate, so for n=1 the constant comes first
followed by the variables in order.  0**0 is taken as 1 so constant
monomials evaluate correctly at the origin.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

__all__ = [
    "SingularSampleMatrix",
    "DimensionMismatch",
    "enumerate_exponents",
    "monomial_row",
    "build_matrix",
    "determinant",
    "singular_tolerance",
    "Interpolant",
    "fit",
    "cardinal",
    "evaluate",
    "evaluate_cardinal",
]


class SingularSampleMatrix(ValueError):
    """The sample matrix is singular (or numerically unusable) at this node set."""


class DimensionMismatch(ValueError):
    """Node, exponent or value counts are inconsistent."""


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    # Descending-lex compositions of `total` into `parts` non-negative entries.
    if parts == 1:
        yield (total,)
        return
    for head in range(total, -1, -1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


def enumerate_exponents(n: int, m: int) -> list[tuple[int, ...]]:
    """All exponent vectors of m non-negative integers with sum <= n.

    Exactly C(n+m, n) vectors, in graded lexicographic order.
    """
    if n < 0:
        raise ValueError(f"degree n={n} must be non-negative")
    if m < 1:
        raise ValueError(f"variable count m={m} must be positive")
    out: list[tuple[int, ...]] = []
    for grade in range(n + 1):
        out.extend(_compositions(grade, m))
    return out


def monomial_row(x: Sequence[float], exponents: Sequence[tuple[int, ...]]) -> np.ndarray:
    """Row vector of all monomials of point ``x`` under the fixed ordering."""
    x = np.asarray(x, dtype=float)
    exps = np.asarray(exponents, dtype=int)
    if x.ndim != 1 or exps.ndim != 2 or x.size != exps.shape[1]:
        raise DimensionMismatch(
            f"point of dimension {x.size} incompatible with exponents of shape {exps.shape}"
        )
    return np.prod(x[None, :] ** exps, axis=1)


def build_matrix(nodes, exponents) -> np.ndarray:
    """Sample matrix with entry (i, j) = node_i ** exponent_j, multiplied out."""
    nodes = np.atleast_2d(np.asarray(nodes, dtype=float))
    exps = np.asarray(exponents, dtype=int)
    if nodes.shape[0] != exps.shape[0]:
        raise DimensionMismatch(
            f"{nodes.shape[0]} nodes but {exps.shape[0]} exponent vectors; counts must match"
        )
    if nodes.shape[1] != exps.shape[1]:
        raise DimensionMismatch(
            f"nodes have {nodes.shape[1]} coordinates but exponents have {exps.shape[1]} entries"
        )
    return np.prod(nodes[:, None, :] ** exps[None, :, :], axis=2)


def determinant(matrix) -> float:
    """Determinant by Gaussian elimination with partial pivoting."""
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"determinant needs a square matrix, got shape {a.shape}")
    n = a.shape[0]
    det = 1.0
    for k in range(n):
        p = k + int(np.argmax(np.abs(a[k:, k])))
        if a[p, k] == 0.0:
            return 0.0
        if p != k:
            a[[k, p]] = a[[p, k]]
            det = -det
        det *= a[k, k]
        if k + 1 < n:
            factors = a[k + 1 :, k] / a[k, k]
            a[k + 1 :, k:] -= np.outer(factors, a[k, k:])
    return det


def singular_tolerance(matrix) -> float:
    """Scale-aware zero threshold for determinants of ``matrix``.

    The determinant of a matrix whose rows are scaled to unit max-norm is
    O(1), so |det| is compared against 1e-12 times the product of the row
    max-norms.
    """
    a = np.abs(np.asarray(matrix, dtype=float))
    return 1e-12 * float(np.prod(a.max(axis=1)))


@dataclass(frozen=True)
class Interpolant:
    """Fitted interpolant: nodes, monomial basis, solved coefficients.

    ``matrix`` is the sample matrix the fit solved against and ``det_m`` its
    cached determinant, reused by the cardinal-function route.
    """

    nodes: np.ndarray
    exponents: list[tuple[int, ...]]
    values: np.ndarray
    coefficients: np.ndarray
    matrix: np.ndarray
    det_m: float
    degree: int


def fit(nodes, values, n: int, m: int) -> Interpolant:
    """Interpolate ``values`` at ``nodes`` by a degree-``n`` polynomial in ``m`` variables.

    Requires exactly rho = C(n+m, n) nodes.  Coefficients solve the square
    system M a = f, with one iterative-refinement pass; the residual is
    required to meet 1e-8 * (1 + max|f|).
    """
    rho = math.comb(n + m, n)
    nodes = np.atleast_2d(np.asarray(nodes, dtype=float))
    values = np.asarray(values, dtype=float).ravel()
    if nodes.shape != (rho, m):
        raise DimensionMismatch(
            f"degree {n} in {m} variables needs {rho} nodes of dimension {m}, "
            f"got shape {nodes.shape}"
        )
    if values.size != rho:
        raise DimensionMismatch(f"expected {rho} values, got {values.size}")

    exponents = enumerate_exponents(n, m)
    matrix = build_matrix(nodes, exponents)
    det_m = determinant(matrix)
    if abs(det_m) <= singular_tolerance(matrix):
        raise SingularSampleMatrix(
            f"sample matrix determinant {det_m:g} below tolerance "
            f"{singular_tolerance(matrix):g}; choose distinct, non-degenerate nodes"
        )
    try:
        coeff = np.linalg.solve(matrix, values)
        coeff += np.linalg.solve(matrix, values - matrix @ coeff)
    except np.linalg.LinAlgError as exc:
        raise SingularSampleMatrix(str(exc)) from exc
    residual = float(np.max(np.abs(matrix @ coeff - values)))
    bound = 1e-8 * (1.0 + float(np.max(np.abs(values))))
    if residual > bound:
        raise SingularSampleMatrix(
            f"solve residual {residual:g} exceeds {bound:g}; system too ill-conditioned"
        )
    return Interpolant(
        nodes=nodes,
        exponents=exponents,
        values=values,
        coefficients=coeff,
        matrix=matrix,
        det_m=det_m,
        degree=n,
    )


def cardinal(interp: Interpolant, i: int, x) -> float:
    """Cardinal function of node ``i`` at point ``x`` via the determinant ratio.

    Equals 1 at node i and 0 at every other node: replacing row i by another
    node's monomial row duplicates that row, so the numerator determinant
    vanishes.
    """
    tol = singular_tolerance(interp.matrix)
    if abs(interp.det_m) <= tol:
        raise SingularSampleMatrix(
            f"cached determinant {interp.det_m:g} below tolerance {tol:g}"
        )
    replaced = interp.matrix.copy()
    replaced[i] = monomial_row(x, interp.exponents)
    return determinant(replaced) / interp.det_m


def evaluate(interp: Interpolant, x) -> float:
    """Evaluate the interpolant at ``x`` from the solved coefficients."""
    return float(monomial_row(x, interp.exponents) @ interp.coefficients)


def evaluate_cardinal(interp: Interpolant, x) -> float:
    """Evaluate at ``x`` as the cardinal-weighted sum of node values."""
    weights = np.array([cardinal(interp, i, x) for i in range(len(interp.values))])
    return float(weights @ interp.values)
