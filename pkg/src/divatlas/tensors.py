"""Skew-symmetric and symmetric tensors over rational vector spaces.

A skew tensor of degree k on an n-dimensional space is stored as a
sparse map from strictly increasing index k-tuples to coefficients; a
symmetric tensor as a map from exponent vectors (length n, entries
summing to k) to the coefficient of the corresponding monomial.

The central computation is the enclosing space of a tensor: the
smallest subspace U such that the tensor lies in the k-th exterior
(resp. symmetric) power of U.  It is obtained as the column space of a
contraction matrix, a signed rearrangement of the coefficients in the
skew case and the first catalecticant in the symmetric case, so the
enclosing dimension is an exact matrix rank.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import (
    RationalMatrix,
    _int_rows,
    as_fraction,
    as_vector,
    exact_det,
    image_basis,
    int_det,
    inverse,
    lin_indep,
    rank,
)

SKEW = "skew"
SYM = "sym"
KINDS = (SKEW, SYM)


def check_kind(kind: str) -> str:
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    return kind


# ---------------------------------------------------------------------------
# combinadic indexing of the wedge basis


def subset_rank(subset, n: int) -> int:
    """Lexicographic position of a strictly increasing k-subset of range(n)."""
    sub = tuple(subset)
    k = len(sub)
    prev = -1
    for x in sub:
        if not isinstance(x, int) or x <= prev or x >= n:
            raise ValueError(f"{sub} is not a strictly increasing subset of range({n})")
        prev = x
    r = 0
    prev = -1
    for pos, c in enumerate(sub):
        for x in range(prev + 1, c):
            r += math.comb(n - 1 - x, k - 1 - pos)
        prev = c
    return r


def subset_unrank(r: int, k: int, n: int):
    """Inverse of subset_rank: the r-th k-subset of range(n) in lex order."""
    total = math.comb(n, k)
    if not 0 <= r < total:
        raise ValueError(f"rank {r} out of range for {k}-subsets of range({n})")
    out = []
    x = 0
    for pos in range(k):
        while True:
            cnt = math.comb(n - 1 - x, k - 1 - pos)
            if r < cnt:
                out.append(x)
                x += 1
                break
            r -= cnt
            x += 1
    return tuple(out)


def k_subsets(n: int, k: int):
    """All k-subsets of range(n) in lexicographic (combinadic) order."""
    return list(itertools.combinations(range(n), k))


def exponent_vectors(n: int, k: int):
    """All exponent vectors of length n with entries summing to k.

    Ordered consistently with itertools.combinations_with_replacement so
    that the ordering is deterministic across runs.
    """
    out = []
    for combo in itertools.combinations_with_replacement(range(n), k):
        alpha = [0] * n
        for i in combo:
            alpha[i] += 1
        out.append(tuple(alpha))
    return out


# ---------------------------------------------------------------------------
# tensor containers


def _normalize_skew_coeffs(n, k, coeffs):
    out = {}
    for idx, c in coeffs.items():
        idx = tuple(idx)
        if len(idx) != k:
            raise ValueError(f"index {idx} does not have degree {k}")
        prev = -1
        for x in idx:
            if not isinstance(x, int) or x <= prev or x >= n:
                raise ValueError(
                    f"index {idx} is not a strictly increasing subset of range({n})"
                )
            prev = x
        c = as_fraction(c)
        if c:
            out[idx] = out.get(idx, Fraction(0)) + c
            if not out[idx]:
                del out[idx]
    return out


def _normalize_sym_coeffs(n, k, coeffs):
    out = {}
    for alpha, c in coeffs.items():
        alpha = tuple(alpha)
        if len(alpha) != n:
            raise ValueError(f"exponent vector {alpha} does not have length {n}")
        if any(not isinstance(a, int) or a < 0 for a in alpha) or sum(alpha) != k:
            raise ValueError(f"exponent vector {alpha} does not have total degree {k}")
        c = as_fraction(c)
        if c:
            out[alpha] = out.get(alpha, Fraction(0)) + c
            if not out[alpha]:
                del out[alpha]
    return out


@dataclass(frozen=True)
class SkewTensor:
    """Element of the k-th exterior power of QQ^n, sparse in the wedge basis."""

    n: int
    k: int
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 0 or self.k < 0:
            raise ValueError("n and k must be nonnegative")
        object.__setattr__(self, "coeffs", _normalize_skew_coeffs(self.n, self.k, self.coeffs))

    @property
    def kind(self) -> str:
        return SKEW

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, idx) -> Fraction:
        return self.coeffs.get(tuple(idx), Fraction(0))

    def coordinates(self):
        """Dense coefficient vector in lexicographic basis order."""
        return tuple(self.coeffs.get(I, Fraction(0)) for I in k_subsets(self.n, self.k))

    def __add__(self, other):
        if not isinstance(other, SkewTensor) or (other.n, other.k) != (self.n, self.k):
            raise ValueError("can only add skew tensors of the same shape")
        merged = dict(self.coeffs)
        for idx, c in other.coeffs.items():
            merged[idx] = merged.get(idx, Fraction(0)) + c
        return SkewTensor(self.n, self.k, merged)

    def __neg__(self):
        return SkewTensor(self.n, self.k, {i: -c for i, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        s = as_fraction(scalar)
        return SkewTensor(self.n, self.k, {i: s * c for i, c in self.coeffs.items()})

    __rmul__ = __mul__


@dataclass(frozen=True)
class SymTensor:
    """Element of the k-th symmetric power of QQ^n.

    Coefficients follow the monomial convention: coeffs[alpha] is the
    coefficient of x^alpha when the tensor is written as a homogeneous
    polynomial of degree k in the basis coordinates.
    """

    n: int
    k: int
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 0 or self.k < 0:
            raise ValueError("n and k must be nonnegative")
        object.__setattr__(self, "coeffs", _normalize_sym_coeffs(self.n, self.k, self.coeffs))

    @property
    def kind(self) -> str:
        return SYM

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, alpha) -> Fraction:
        return self.coeffs.get(tuple(alpha), Fraction(0))

    def coordinates(self):
        return tuple(self.coeffs.get(a, Fraction(0)) for a in exponent_vectors(self.n, self.k))

    def __add__(self, other):
        if not isinstance(other, SymTensor) or (other.n, other.k) != (self.n, self.k):
            raise ValueError("can only add symmetric tensors of the same shape")
        merged = dict(self.coeffs)
        for a, c in other.coeffs.items():
            merged[a] = merged.get(a, Fraction(0)) + c
        return SymTensor(self.n, self.k, merged)

    def __neg__(self):
        return SymTensor(self.n, self.k, {a: -c for a, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        s = as_fraction(scalar)
        return SymTensor(self.n, self.k, {a: s * c for a, c in self.coeffs.items()})

    __rmul__ = __mul__


@dataclass(frozen=True)
class SubspaceBasis:
    """A basis (independent list of vectors) of a subspace of QQ^n."""

    ambient_dim: int
    vectors: tuple = ()

    def __post_init__(self):
        vs = tuple(as_vector(v) for v in self.vectors)
        for v in vs:
            if len(v) != self.ambient_dim:
                raise ValueError("basis vector has wrong length")
        if not lin_indep(vs):
            raise ValueError("basis vectors are linearly dependent")
        object.__setattr__(self, "vectors", vs)

    @property
    def dim(self) -> int:
        return len(self.vectors)


# ---------------------------------------------------------------------------
# constructors


def wedge(vectors) -> SkewTensor:
    """Wedge product u_1 ^ ... ^ u_k of vectors in QQ^n.

    The coefficient on a basis k-subset I is the k x k minor of the
    matrix [u_1 ... u_k] taken on rows I.  Linearly dependent inputs
    give the zero tensor.
    """
    vs = [as_vector(v) for v in vectors]
    if not vs:
        raise ValueError("wedge of an empty list is ambiguous; give at least one vector")
    n = len(vs[0])
    if any(len(v) != n for v in vs):
        raise ValueError("vectors of unequal length")
    k = len(vs)
    coeffs = {}
    for I in itertools.combinations(range(n), k):
        d = exact_det([[vs[j][i] for j in range(k)] for i in I])
        if d:
            coeffs[I] = d
    return SkewTensor(n, k, coeffs)


def sym_power(v, k: int) -> SymTensor:
    """k-th power v^k of a vector, expanded in the monomial convention."""
    vec = as_vector(v)
    n = len(vec)
    if k < 0:
        raise ValueError("negative power")
    coeffs = {}
    for alpha in exponent_vectors(n, k):
        c = Fraction(math.factorial(k))
        for a in alpha:
            c /= math.factorial(a)
        for x, a in zip(vec, alpha):
            if a:
                c *= x**a
        if c:
            coeffs[alpha] = c
    return SymTensor(n, k, coeffs)


def sym_product(f: SymTensor, g: SymTensor) -> SymTensor:
    """Product of two symmetric tensors (polynomial multiplication)."""
    if f.n != g.n:
        raise ValueError("symmetric tensors over spaces of different dimension")
    coeffs = _poly_mul(f.coeffs, g.coeffs)
    return SymTensor(f.n, f.k + g.k, coeffs)


def variable(n: int, i: int) -> SymTensor:
    """The i-th coordinate vector as a degree-1 symmetric tensor."""
    alpha = tuple(1 if j == i else 0 for j in range(n))
    return SymTensor(n, 1, {alpha: 1})


def _poly_mul(p: dict, q: dict) -> dict:
    out = {}
    for a, ca in p.items():
        for b, cb in q.items():
            key = tuple(x + y for x, y in zip(a, b))
            v = out.get(key, 0) + ca * cb
            if v:
                out[key] = v
            elif key in out:
                del out[key]
    return out


# ---------------------------------------------------------------------------
# contraction matrices and enclosing spaces


def contraction_matrix_skew(t: SkewTensor) -> RationalMatrix:
    """Matrix of the contraction pairing a skew tensor against (k-1)-covectors.

    n rows, C(n, k-1) columns.  The column indexed by a (k-1)-subset J
    has entry (-1)^pos * coeff(J + {i}) in row i (i not in J), where pos
    is the 0-based position of i in the sorted union.  The sign is a
    fixed global convention; the column space does not depend on it.
    """
    if t.k < 1:
        raise ValueError("contraction needs degree k >= 1")
    n, k = t.n, t.k
    cols = math.comb(n, k - 1)
    entries = {}
    for jc, J in enumerate(itertools.combinations(range(n), k - 1)):
        for idx, c in t.coeffs.items():
            # idx = J + {i} for exactly one i when J subset idx
            extra = [i for i in idx if i not in J]
            if len(extra) != 1 or any(j not in idx for j in J):
                continue
            i = extra[0]
            pos = idx.index(i)
            entries[(i, jc)] = entries.get((i, jc), Fraction(0)) + (-1) ** pos * c
    return RationalMatrix.from_entries(n, cols, entries)


def contraction_matrix_sym(t: SymTensor) -> RationalMatrix:
    """First catalecticant of a symmetric tensor.

    n rows, C(n+k-2, k-1) columns.  The column indexed by an exponent
    vector a of total degree k-1 has entry (a_i + 1) * coeff(a + e_i)
    in row i; the integer factor comes from the monomial convention and
    does not change the column space.
    """
    if t.k < 1:
        raise ValueError("contraction needs degree k >= 1")
    n, k = t.n, t.k
    col_index = exponent_vectors(n, k - 1)
    entries = {}
    for jc, alpha in enumerate(col_index):
        for i in range(n):
            beta = tuple(a + (1 if j == i else 0) for j, a in enumerate(alpha))
            c = t.coeffs.get(beta)
            if c:
                entries[(i, jc)] = (alpha[i] + 1) * c
    return RationalMatrix.from_entries(n, len(col_index), entries)


def contraction_matrix(t) -> RationalMatrix:
    if isinstance(t, SkewTensor):
        return contraction_matrix_skew(t)
    if isinstance(t, SymTensor):
        return contraction_matrix_sym(t)
    raise TypeError(f"not a tensor: {type(t).__name__}")


def enclosing_space(t) -> SubspaceBasis:
    """Basis of the smallest subspace U with t in the k-th power of U."""
    if t.k == 0:
        # degree-0 tensors are scalars; no vectors are needed to enclose them
        return SubspaceBasis(t.n, ())
    return SubspaceBasis(t.n, tuple(image_basis(contraction_matrix(t))))


def enc(t) -> int:
    """Enclosing dimension: rank of the contraction matrix."""
    if t.k == 0:
        return 0
    return rank(contraction_matrix(t))


# ---------------------------------------------------------------------------
# change of basis and membership in powers of a subspace


def _matrix_rows(mat) -> list:
    if isinstance(mat, RationalMatrix):
        return [list(mat.row(i)) for i in range(mat.rows)]
    return [[as_fraction(x) for x in row] for row in mat]


def apply_linear_map(mat, t):
    """Push a tensor forward along a linear map given by a matrix.

    mat has shape n_out x t.n and sends the i-th basis vector to the
    i-th column; the tensor is transported through the induced map on
    exterior (resp. symmetric) powers.
    """
    rows = _matrix_rows(mat)
    n_out = len(rows)
    n_in = len(rows[0]) if rows else 0
    if n_in != t.n:
        raise ValueError("matrix width does not match tensor dimension")
    if isinstance(t, SkewTensor):
        coeffs = {}
        for J in itertools.combinations(range(n_out), t.k):
            s = Fraction(0)
            for I, c in t.coeffs.items():
                s += c * exact_det([[rows[j][i] for i in I] for j in J])
            if s:
                coeffs[J] = s
        return SkewTensor(n_out, t.k, coeffs)
    if isinstance(t, SymTensor):
        # substitute variable i by the linear form given by column i
        forms = [
            {tuple(1 if r == j else 0 for r in range(n_out)): rows[j][i] for j in range(n_out) if rows[j][i]}
            for i in range(n_in)
        ]
        pow_cache = {}

        def form_power(i, p):
            if p == 0:
                return {tuple([0] * n_out): Fraction(1)}
            key = (i, p)
            if key not in pow_cache:
                pow_cache[key] = _poly_mul(form_power(i, p - 1), forms[i])
            return pow_cache[key]

        out = {}
        for alpha, c in t.coeffs.items():
            term = {tuple([0] * n_out): c}
            for i, a in enumerate(alpha):
                if a:
                    term = _poly_mul(term, form_power(i, a))
            for key, v in term.items():
                w = out.get(key, 0) + v
                if w:
                    out[key] = w
                elif key in out:
                    del out[key]
        return SymTensor(n_out, t.k, out)
    raise TypeError(f"not a tensor: {type(t).__name__}")


def complete_basis(W: SubspaceBasis) -> RationalMatrix:
    """Square matrix whose first dim(W) columns are W and whose remaining
    columns are standard basis vectors completing W to a basis."""
    n = W.ambient_dim
    cols = list(W.vectors)
    for i in range(n):
        if len(cols) == n:
            break
        e_i = tuple(Fraction(int(j == i)) for j in range(n))
        if rank(RationalMatrix.from_columns(cols + [e_i])) > len(cols):
            cols.append(e_i)
    if len(cols) != n:
        raise ValueError("could not complete basis")  # unreachable for valid W
    return RationalMatrix.from_columns(cols)


def is_in_power_of(t, W: SubspaceBasis) -> bool:
    """True iff t lies in the k-th exterior (resp. symmetric) power of span(W).

    Computed honestly: W is completed to a basis of the ambient space,
    the tensor is rewritten in that basis, and every coefficient that
    involves a complement vector must vanish.  Row rescalings of the
    coordinate-change matrix only rescale the rewritten coefficients,
    so the test runs on integers.
    """
    if W.ambient_dim != t.n:
        raise ValueError("subspace ambient dimension does not match tensor")
    if t.is_zero:
        return True
    m = W.dim
    n = t.n
    if m == n:
        return True
    if m == 0:
        return False
    P = complete_basis(W)
    A = inverse(P)  # maps old coordinates to coordinates in the completed basis
    a_rows = _int_rows(A)  # row rescaling only rescales output coefficients

    if isinstance(t, SkewTensor):
        if m < t.k:
            return False
        den = 1
        for c in t.coeffs.values():
            d = c.denominator
            den = den * d // math.gcd(den, d)
        terms = [(I, int(c * den)) for I, c in t.coeffs.items()]
        for J in itertools.combinations(range(n), t.k):
            if J[-1] < m:
                continue
            s = 0
            for I, c in terms:
                s += c * int_det([[a_rows[j][i] for i in I] for j in J])
            if s:
                return False
        return True

    # symmetric case: substitute and inspect exponents on complement variables
    image = apply_linear_map(a_rows, t)
    for alpha in image.coeffs:
        if any(alpha[i] for i in range(m, n)):
            return False
    return True


# ---------------------------------------------------------------------------
# seeded random tensors for property suites


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_vector(n: int, rng: random.Random, lo: int = -9, hi: int = 9):
    return tuple(Fraction(rng.randint(lo, hi)) for _ in range(n))


def random_tensor(n: int, k: int, kind: str, seed):
    """Deterministic random tensor with integer coefficients in [-9, 9]."""
    check_kind(kind)
    rng = _rng(seed)
    if kind == SKEW:
        coeffs = {I: rng.randint(-9, 9) for I in k_subsets(n, k)}
        return SkewTensor(n, k, coeffs)
    coeffs = {a: rng.randint(-9, 9) for a in exponent_vectors(n, k)}
    return SymTensor(n, k, coeffs)


def random_decomposable(n: int, k: int, kind: str, seed):
    """Deterministic random decomposable tensor: a wedge of k independent
    vectors (skew) or the k-th power of a nonzero vector (sym)."""
    check_kind(kind)
    rng = _rng(seed)
    for _ in range(64):
        if kind == SKEW:
            t = wedge([random_vector(n, rng) for _ in range(k)])
        else:
            t = sym_power(random_vector(n, rng), k)
        if not t.is_zero:
            return t
    raise RuntimeError("failed to sample a nonzero decomposable tensor")


def random_subspace(n: int, dim: int, seed) -> SubspaceBasis:
    """Deterministic random dim-dimensional subspace of QQ^n."""
    if not 0 <= dim <= n:
        raise ValueError("subspace dimension out of range")
    rng = _rng(seed)
    for _ in range(64):
        vs = [random_vector(n, rng) for _ in range(dim)]
        if lin_indep(vs):
            return SubspaceBasis(n, tuple(vs))
    raise RuntimeError("failed to sample an independent spanning set")


# ---------------------------------------------------------------------------
# JSON interchange


def tensor_to_json(t) -> dict:
    """Serialize a tensor to the interchange dict used by the CLI."""
    if isinstance(t, SkewTensor):
        items = sorted(t.coeffs.items())
    elif isinstance(t, SymTensor):
        items = sorted(t.coeffs.items(), reverse=True)
    else:
        raise TypeError(f"not a tensor: {type(t).__name__}")
    return {
        "n": t.n,
        "k": t.k,
        "kind": t.kind,
        "terms": [{"index": list(idx), "coeff": str(c)} for idx, c in items],
    }


def tensor_from_json(obj: dict):
    """Parse the tensor interchange format, validating all invariants."""
    if not isinstance(obj, dict):
        raise ValueError("tensor JSON must be an object")
    missing = {"n", "k", "kind", "terms"} - set(obj)
    if missing:
        raise ValueError(f"tensor JSON is missing keys: {sorted(missing)}")
    n, k, kind, terms = obj["n"], obj["k"], obj["kind"], obj["terms"]
    if not isinstance(n, int) or not isinstance(k, int) or n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative integers")
    check_kind(kind)
    if not isinstance(terms, list):
        raise ValueError("terms must be a list")
    coeffs = {}
    for term in terms:
        if not isinstance(term, dict) or "index" not in term or "coeff" not in term:
            raise ValueError(f"malformed term: {term!r}")
        idx = term["index"]
        if not isinstance(idx, list) or any(not isinstance(x, int) for x in idx):
            raise ValueError(f"malformed index: {idx!r}")
        c = term["coeff"]
        if not isinstance(c, (str, int)):
            raise ValueError(f"coefficient must be an int or a 'p/q' string: {c!r}")
        try:
            val = as_fraction(c)
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            raise ValueError(f"bad coefficient {c!r}: {exc}") from exc
        key = tuple(idx)
        coeffs[key] = coeffs.get(key, Fraction(0)) + val
    if kind == SKEW:
        return SkewTensor(n, k, coeffs)
    return SymTensor(n, k, coeffs)
