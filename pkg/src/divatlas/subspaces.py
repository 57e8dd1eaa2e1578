"""Subspace varieties: maximal enclosing dimensions and dimension formulas.

Sub_e denotes the projective locus of degree-k tensors whose enclosing
dimension is at most e.  For skew tensors some of these loci coincide
(a skew 2-tensor has even rank, and a k-vector can never have enclosing
dimension exactly k+1), which is what normalize_e collapses.

For k = 2 the loci are the classical rank strata of (skew-)symmetric
matrices and their dimensions are computed determinantally; for k >= 3
they come from the Grassmannian-bundle parametrization.  An independent
tangent-space oracle, sub_dim_tangent, recomputes each dimension as the
exact rank of the Jacobian of that parametrization at a random rational
point, and the two are required to agree in the test suites.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

from .linalg import RationalMatrix, rank
from .tensors import (
    SKEW,
    SYM,
    SkewTensor,
    SymTensor,
    _poly_mul,
    check_kind,
    exponent_vectors,
    random_tensor,
    wedge,
)


def e_max(k: int, n: int) -> int:
    """Maximum enclosing dimension of a degree-k skew tensor on QQ^n.

    n-1 when k = n-1, or when k = 2 and n is odd; n otherwise (0 when
    the whole exterior power vanishes because n < k).
    """
    if k < 1:
        raise ValueError("degree k must be >= 1")
    if n < 0:
        raise ValueError("dimension n must be >= 0")
    if n < k:
        return 0
    if k == n - 1 or (k == 2 and n % 2 == 1):
        return n - 1
    return n


def e_max_sym(k: int, n: int, paper_compat: bool = False) -> int:
    """Maximum enclosing dimension of a degree-k symmetric tensor on QQ^n.

    The faithful default is n for every n >= 1: the generic symmetric
    tensor has a full-rank catalecticant in any dimension (for k = 2
    take x_1^2 + ... + x_n^2).  The compat mode instead drops to n-1
    for k = 2 and odd n, mirroring the parity rule for skew 2-tensors;
    it is exposed so that both conventions can be compared, not because
    odd catalecticant ranks fail to occur.
    """
    if k < 1:
        raise ValueError("degree k must be >= 1")
    if n < 0:
        raise ValueError("dimension n must be >= 0")
    if n == 0:
        return 0
    if paper_compat and k == 2 and n % 2 == 1:
        return n - 1
    return n


def normalize_e(e: int, k: int, kind: str) -> int:
    """Smallest e' with Sub_e' = Sub_e.

    Skew: for k = 2 round down to even (skew matrix ranks are even);
    for k >= 3 the only coincidence is e = k+1, which collapses to k
    (a k-vector enclosed in k+1 dimensions is already decomposable).
    Symmetric tensors attain every enclosing dimension down to 1 (k-th
    powers of vectors), so e is returned unchanged.
    """
    check_kind(kind)
    floor = 1 if kind == SYM else k
    if e < floor:
        raise ValueError(f"e = {e} below the minimum enclosing dimension {floor}")
    if kind == SYM:
        return e
    if k == 2:
        return 2 * (e // 2)
    if k >= 3 and e == k + 1:
        return k
    return e


def sub_dim(e: int, k: int, n: int, kind: str) -> int:
    """Dimension of Sub_e inside the projectivized k-th power of QQ^n.

    k = 2 uses the determinantal rank-stratification dimensions
    (C(n,2) - C(n-e',2) - 1 skew, C(n+1,2) - C(n-e+1,2) - 1 symmetric);
    k >= 3 uses the Grassmannian-bundle count e'(n-e') + C(e',k) - 1
    (skew) and e(n-e) + C(e+k-1,k) - 1 (symmetric), with e' the
    normalized enclosing bound.
    """
    check_kind(kind)
    if k < 1:
        raise ValueError("degree k must be >= 1")
    floor = 1 if kind == SYM else k
    if not floor <= e <= n:
        raise ValueError(f"need {floor} <= e <= n, got k={k}, e={e}, n={n}")
    e_norm = normalize_e(e, k, kind)
    if k == 2:
        if kind == SKEW:
            return math.comb(n, 2) - math.comb(n - e_norm, 2) - 1
        return math.comb(n + 1, 2) - math.comb(n - e + 1, 2) - 1
    if kind == SKEW:
        return e_norm * (n - e_norm) + math.comb(e_norm, k) - 1
    return e * (n - e) + math.comb(e + k - 1, k) - 1


def sec_dim_printed(s: int, n: int, kind: str) -> int:
    """Closed-form secant-variety dimensions kept for comparison only.

    These are the published expressions for the s-secant variety of the
    Grassmannian G(2, n) (skew) and of the quadratic Veronese (sym).
    They disagree with sub_dim in known cases (for example they give 5
    for rank <= 4 skew forms on QQ^5, which actually fill P^9), so they
    are not used by any computation; sub_dim is certified against the
    tangent oracle instead.
    """
    check_kind(kind)
    if s < 1:
        raise ValueError("secant index s must be >= 1")
    if kind == SKEW:
        return min(math.comb(n, 2) - 1, 2 * (n - 2) * s + s - 1) - 2 * s * (s - 1)
    return min(math.comb(n + 1, 2) - 1, math.comb(s + 1, 2) + s * (n - s) - 1)


# ---------------------------------------------------------------------------
# tangent-space oracle


def _skew_partial(t: SkewTensor, j: int) -> SkewTensor:
    """Interior derivative of a skew tensor along source variable j."""
    coeffs = {}
    for I, c in t.coeffs.items():
        if j in I:
            pos = I.index(j)
            rest = I[:pos] + I[pos + 1 :]
            coeffs[rest] = coeffs.get(rest, Fraction(0)) + (-1) ** pos * c
    return SkewTensor(t.n, t.k - 1, coeffs)


def _wedge_basis_vector(t: SkewTensor, i: int) -> SkewTensor:
    """t ^ e_i for a standard basis vector of the ambient space."""
    kk = t.k
    coeffs = {}
    for M, c in t.coeffs.items():
        if i in M:
            continue
        I = tuple(sorted(M + (i,)))
        pos = I.index(i)
        sign = (-1) ** (kk - pos)  # move e_i left past the larger indices
        coeffs[I] = coeffs.get(I, Fraction(0)) + sign * c
    return SkewTensor(t.n, kk + 1, coeffs)


def _skew_jacobian_columns(a_cols, omega: SkewTensor, n: int, k: int):
    """Columns of the differential of (A, w) -> (wedge^k A)(w)."""
    e = len(a_cols)
    cols = []
    wedge_cache = {}

    def col_wedge(J):
        if J not in wedge_cache:
            wedge_cache[J] = wedge([a_cols[j] for j in J])
        return wedge_cache[J]

    # directions along the tensor coordinates
    for J in itertools.combinations(range(e), k):
        cols.append(col_wedge(J).coordinates())
    # directions along the matrix entries (Leibniz terms)
    for j in range(e):
        part = _skew_partial(omega, j)
        if k == 1:
            # the map is linear here; the derivative along A[i][j] is w_j e_i
            scalar = part.coeffs.get((), Fraction(0))
            for i in range(n):
                cols.append(tuple(scalar if r == i else Fraction(0) for r in range(n)))
            continue
        psi = SkewTensor(n, k - 1, {})
        for M, c in part.coeffs.items():
            psi = psi + c * col_wedge(M)
        for i in range(n):
            cols.append(_wedge_basis_vector(psi, i).coordinates())
    return cols


def _sym_jacobian_columns(a_cols, omega: SymTensor, n: int, k: int):
    """Columns of the differential of (A, w) -> (S^k A)(w).

    The map substitutes source variable j by the linear form given by
    column j of A; its derivative along an entry A[i][j] is the partial
    derivative of w along j, substituted, times the i-th basis vector.
    """
    e = len(a_cols)
    one = {tuple([0] * n): Fraction(1)}
    forms = [
        {tuple(1 if r == i else 0 for r in range(n)): a_cols[j][i] for i in range(n) if a_cols[j][i]}
        for j in range(e)
    ]
    pow_cache = {}

    def form_power(j, p):
        if p == 0:
            return one
        key = (j, p)
        if key not in pow_cache:
            pow_cache[key] = _poly_mul(form_power(j, p - 1), forms[j])
        return pow_cache[key]

    def substituted(alpha):
        term = one
        for j, a in enumerate(alpha):
            if a:
                term = _poly_mul(term, form_power(j, a))
        return term

    target = exponent_vectors(n, k)
    target_pos = {a: i for i, a in enumerate(target)}
    cols = []
    for alpha in exponent_vectors(e, k):
        poly = substituted(alpha)
        col = [Fraction(0)] * len(target)
        for key, v in poly.items():
            col[target_pos[key]] = v
        cols.append(tuple(col))
    for j in range(e):
        # substituted partial derivative along source variable j
        dpoly = {}
        for alpha, c in omega.coeffs.items():
            if alpha[j] == 0:
                continue
            down = tuple(a - 1 if idx == j else a for idx, a in enumerate(alpha))
            for key, v in substituted(down).items():
                w = dpoly.get(key, 0) + alpha[j] * c * v
                if w:
                    dpoly[key] = w
                elif key in dpoly:
                    del dpoly[key]
        for i in range(n):
            col = [Fraction(0)] * len(target)
            for key, v in dpoly.items():
                lifted = tuple(a + 1 if idx == i else a for idx, a in enumerate(key))
                col[target_pos[lifted]] += v
            cols.append(tuple(col))
    return cols


def sub_dim_tangent(e: int, k: int, n: int, kind: str, seed=0, max_retries: int = 8) -> int:
    """Dimension of Sub_e measured at a random point, independent of sub_dim.

    Evaluates the Jacobian of the parametrization (A, w) -> (power of A
    applied to w), with A a full-rank n x e rational matrix and w a
    random degree-k tensor on QQ^e, and returns its exact rank minus 1
    (the projectivization).  Rank-deficient samples of A are redrawn a
    bounded number of times.
    """
    check_kind(kind)
    if k < 1:
        raise ValueError("degree k must be >= 1")
    floor = 1 if kind == SYM else k
    if not floor <= e <= n:
        raise ValueError(f"need {floor} <= e <= n, got k={k}, e={e}, n={n}")
    rng = random.Random(f"subdim-tangent:{kind}:{k}:{e}:{n}:{seed}")
    for _ in range(max_retries):
        a_cols = [tuple(Fraction(rng.randint(-9, 9)) for _ in range(n)) for _ in range(e)]
        if rank(RationalMatrix.from_columns(a_cols)) < e:
            continue
        omega = random_tensor(e, k, kind, rng)
        if omega.is_zero:
            continue
        if kind == SKEW:
            cols = _skew_jacobian_columns(a_cols, omega, n, k)
        else:
            cols = _sym_jacobian_columns(a_cols, omega, n, k)
        jac = RationalMatrix.from_columns(cols)
        return rank(jac) - 1
    raise RuntimeError(f"no nondegenerate sample after {max_retries} retries")
