"""Exact rational linear algebra over based vector spaces.

Everything downstream is built on four value types: :class:`Space` (a based
vector space identified by its ordered basis labels), :class:`LinearMap`
(a matrix between two spaces), and coefficient tensors :class:`Tensor2` /
:class:`Tensor3` for elements of two- and three-fold tensor products.

Scalars are `fractions.Fraction`, which already guarantees the required
normal form (lowest terms, positive denominator) and exact closed
arithmetic.  Vectors and matrices are plain nested tuples of fractions;
all values are immutable and safe to share.

Conventions fixed here and relied on by every other module:

* dual basis pairing  <e_i*, e_j> = delta_ij;
* the dual of ``f: V -> W`` is the plain transpose acting ``W* -> V*``;
* ``Tensor2`` coefficients mean  r = sum coeffs[i][j] e_i (x) f_j.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Scalar = Fraction
ZERO = Fraction(0)
ONE = Fraction(1)

Vector = tuple  # tuple[Fraction, ...]
Matrix = tuple  # tuple[tuple[Fraction, ...], ...]


def scalar(value) -> Fraction:
    """Coerce an int, string ("p/q"), or Fraction to an exact scalar."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"not an exact scalar: {value!r}")


# ---------------------------------------------------------------------------
# spaces


@dataclass(frozen=True)
class Space:
    """A based vector space, identified by its ordered tuple of basis labels."""

    labels: tuple

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"basis labels not pairwise distinct: {self.labels}")

    @staticmethod
    def of_dim(n: int, prefix: str = "e") -> Space:
        return Space(tuple(f"{prefix}{i + 1}" for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def dual(self) -> Space:
        return Space(tuple(lab + "*" for lab in self.labels))

    def index_of(self, label: str) -> int:
        return self.labels.index(label)

    def __repr__(self):
        return f"Space({list(self.labels)!r})"


def direct_sum_space(left: Space, right: Space) -> Space:
    """Basis of a direct sum: left labels first, then right labels.

    Colliding right labels are primed until distinct.
    """
    taken = set(left.labels)
    out = []
    for lab in right.labels:
        while lab in taken or lab in out:
            lab = lab + "'"
        out.append(lab)
    return Space(left.labels + tuple(out))


# ---------------------------------------------------------------------------
# vectors


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def basis_vector(n: int, i: int) -> Vector:
    return tuple(ONE if j == i else ZERO for j in range(n))


def vec_add(u: Vector, v: Vector) -> Vector:
    # zero operands dominate in practice; skip the Fraction arithmetic for them
    return tuple((a + b if b else a) if a else b for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(
        (a - b if b else a) if a else (-b if b else a) for a, b in zip(u, v)
    )


def vec_scale(c: Fraction, u: Vector) -> Vector:
    if not c:
        return zero_vector(len(u))
    return tuple(c * a for a in u)


def vec_is_zero(u) -> bool:
    return all(not a for a in u)


# ---------------------------------------------------------------------------
# matrices


def zero_matrix(rows: int, cols: int) -> Matrix:
    return ((ZERO,) * cols,) * rows


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def mat_from_rows(rows) -> Matrix:
    return tuple(tuple(r) for r in rows)


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(vec_add(ra, rb) for ra, rb in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(vec_sub(ra, rb) for ra, rb in zip(a, b))


def mat_neg(a: Matrix) -> Matrix:
    return tuple(tuple(-x for x in r) for r in a)


def mat_scale(c: Fraction, a: Matrix) -> Matrix:
    return tuple(tuple(c * x for x in r) for r in a)


def mat_transpose(a: Matrix) -> Matrix:
    if not a:
        return ()
    return tuple(zip(*a))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """a (r x m) times b (m x c), skipping zero entries of a."""
    if a and b:
        assert len(a[0]) == len(b), "matrix shape mismatch"
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [ZERO] * cols
        for k, x in enumerate(row):
            if not x:
                continue
            brow = b[k]
            for j, y in enumerate(brow):
                if y:
                    acc[j] += x * y
        out.append(tuple(acc))
    return tuple(out)


def mat_apply(a: Matrix, v: Vector) -> Vector:
    """Matrix times coordinate vector, skipping zero coordinates."""
    rows = len(a)
    acc = [ZERO] * rows
    for j, c in enumerate(v):
        if not c:
            continue
        for i in range(rows):
            x = a[i][j]
            if x:
                acc[i] += c * x
    return tuple(acc)


def mat_is_zero(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


def mat_combination(coeffs: Vector, mats) -> Matrix:
    """sum_k coeffs[k] * mats[k]; mats nonempty and square of equal shape."""
    rows = len(mats[0])
    cols = len(mats[0][0]) if rows else 0
    acc = [[ZERO] * cols for _ in range(rows)]
    for c, m in zip(coeffs, mats):
        if not c:
            continue
        for i in range(rows):
            mrow = m[i]
            arow = acc[i]
            for j in range(cols):
                x = mrow[j]
                if x:
                    arow[j] += c * x
    return tuple(tuple(r) for r in acc)


def combination_column(coeffs: Vector, mats, col: int, dim: int) -> Vector:
    """Column ``col`` of sum_k coeffs[k] * mats[k], without building the sum."""
    acc = [ZERO] * dim
    for c, m in zip(coeffs, mats):
        if not c:
            continue
        for i in range(dim):
            x = m[i][col]
            if x:
                acc[i] += c * x
    return tuple(acc)


def determinant(a: Matrix) -> Fraction:
    """Exact determinant by fraction-free-ish Gaussian elimination."""
    n = len(a)
    if n == 0:
        return ONE
    assert all(len(r) == n for r in a), "determinant of a non-square matrix"
    m = [list(r) for r in a]
    det = ONE
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return ZERO
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        p = m[col][col]
        det *= p
        for r in range(col + 1, n):
            f = m[r][col]
            if not f:
                continue
            f /= p
            for c in range(col, n):
                m[r][c] -= f * m[col][c]
    return det


def mat_inverse(a: Matrix) -> Matrix:
    """Exact inverse; raises ValueError on a singular matrix."""
    n = len(a)
    m = [list(r) + list(identity_matrix(n)[i]) for i, r in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        m[col], m[pivot] = m[pivot], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r == col:
                continue
            f = m[r][col]
            if not f:
                continue
            m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(tuple(row[n:]) for row in m)


def solve_exact(a: Matrix, b: Vector):
    """Solve a x = b exactly (a may be rectangular / overdetermined).

    Returns a particular solution with free variables set to zero, or
    ``None`` when the system is inconsistent.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    m = [list(r) + [bv] for r, bv in zip(a, b)]
    pivots = []
    row = 0
    for col in range(cols):
        pr = next((r for r in range(row, rows) if m[r][col]), None)
        if pr is None:
            continue
        m[row], m[pr] = m[pr], m[row]
        p = m[row][col]
        m[row] = [x / p for x in m[row]]
        for r in range(rows):
            if r == row:
                continue
            f = m[r][col]
            if not f:
                continue
            m[r] = [x - f * y for x, y in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
        if row == rows:
            break
    for r in range(row, rows):
        if m[r][cols]:
            return None
    x = [ZERO] * cols
    for r, col in enumerate(pivots):
        x[col] = m[r][cols]
    # free variables are zero; verify in case of a rank-deficient system
    check = mat_apply(a, tuple(x)) if rows else ()
    if not vec_is_zero(vec_sub(check, b)):
        return None
    return tuple(x)


# ---------------------------------------------------------------------------
# linear maps


@dataclass(frozen=True)
class LinearMap:
    """A linear map as a (codomain.dim x domain.dim) matrix of scalars."""

    domain: Space
    codomain: Space
    entries: Matrix

    def __post_init__(self):
        ent = tuple(tuple(scalar(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", ent)
        if len(ent) != self.codomain.dim or any(len(r) != self.domain.dim for r in ent):
            raise ValueError("linear map entries do not match (codomain.dim, domain.dim)")

    @staticmethod
    def identity(space: Space) -> LinearMap:
        return LinearMap(space, space, identity_matrix(space.dim))

    @staticmethod
    def zero(domain: Space, codomain: Space | None = None) -> LinearMap:
        codomain = codomain or domain
        return LinearMap(domain, codomain, zero_matrix(codomain.dim, domain.dim))

    def __call__(self, v: Vector) -> Vector:
        return mat_apply(self.entries, v)

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def compose(self, other: LinearMap) -> LinearMap:
        """self after other."""
        if other.codomain != self.domain:
            raise ValueError("composition domain mismatch")
        return LinearMap(other.domain, self.codomain, mat_mul(self.entries, other.entries))

    def add(self, other: LinearMap) -> LinearMap:
        return LinearMap(self.domain, self.codomain, mat_add(self.entries, other.entries))

    def neg(self) -> LinearMap:
        return LinearMap(self.domain, self.codomain, mat_neg(self.entries))

    def is_zero(self) -> bool:
        return mat_is_zero(self.entries)


def dual_map(f: LinearMap) -> LinearMap:
    """The dual of f: V -> W, acting W* -> V* by the transpose matrix."""
    return LinearMap(f.codomain.dual, f.domain.dual, mat_transpose(f.entries))


# ---------------------------------------------------------------------------
# tensors


@dataclass(frozen=True)
class Tensor2:
    """r = sum coeffs[i][j] e_i (x) f_j in left (x) right."""

    left: Space
    right: Space
    coeffs: Matrix

    def __post_init__(self):
        co = tuple(tuple(scalar(x) for x in row) for row in self.coeffs)
        object.__setattr__(self, "coeffs", co)
        if len(co) != self.left.dim or any(len(r) != self.right.dim for r in co):
            raise ValueError("tensor coefficients do not match factor dimensions")

    @staticmethod
    def zero(left: Space, right: Space) -> Tensor2:
        return Tensor2(left, right, zero_matrix(left.dim, right.dim))

    def add(self, other: Tensor2) -> Tensor2:
        if (self.left, self.right) != (other.left, other.right):
            raise ValueError("tensor factor mismatch")
        return Tensor2(self.left, self.right, mat_add(self.coeffs, other.coeffs))

    def neg(self) -> Tensor2:
        return Tensor2(self.left, self.right, mat_neg(self.coeffs))

    def is_zero(self) -> bool:
        return mat_is_zero(self.coeffs)


@dataclass(frozen=True)
class Tensor3:
    """t = sum coeffs[i][j][k] e_i (x) f_j (x) g_k."""

    spaces: tuple  # (Space, Space, Space)
    coeffs: tuple  # rank-3 nested tuple

    def __post_init__(self):
        s1, s2, s3 = self.spaces
        co = tuple(
            tuple(tuple(scalar(x) for x in row) for row in plane) for plane in self.coeffs
        )
        object.__setattr__(self, "coeffs", co)
        ok = len(co) == s1.dim and all(
            len(plane) == s2.dim and all(len(row) == s3.dim for row in plane)
            for plane in co
        )
        if not ok:
            raise ValueError("tensor coefficients do not match factor dimensions")

    def is_zero(self) -> bool:
        return all(not x for plane in self.coeffs for row in plane for x in row)


def swap_factors(t: Tensor2) -> Tensor2:
    """The exchanging operator x (x) y -> y (x) x; an involution."""
    return Tensor2(t.right, t.left, mat_transpose(t.coeffs))


def rotate_factors(t: Tensor3) -> Tensor3:
    """Cyclic rotation x (x) y (x) z -> y (x) z (x) x; has order 3.

    Requires all three factor spaces to coincide.
    """
    s1, s2, s3 = t.spaces
    if not (s1 == s2 == s3):
        raise ValueError("cyclic rotation needs equal factor spaces")
    n = s1.dim
    co = t.coeffs
    new = tuple(
        tuple(tuple(co[s][p][q] for s in range(n)) for q in range(n)) for p in range(n)
    )
    return Tensor3(t.spaces, new)


def tensor_as_map(t: Tensor2) -> LinearMap:
    """Identify r = sum a_i (x) b_i in A (x) A with the map A* -> A,
    a* -> sum <a*, a_i> b_i.  In coordinates the matrix entry (j, i) is
    coeffs[i][j]."""
    if t.left != t.right:
        raise ValueError("tensor factor mismatch")
    return LinearMap(t.left.dual, t.left, mat_transpose(t.coeffs))


def tensors_equal(a, b) -> bool:
    """Coefficientwise equality for nested tuples of scalars."""
    return a == b


__all__ = [
    "Scalar",
    "ZERO",
    "ONE",
    "scalar",
    "Space",
    "direct_sum_space",
    "zero_vector",
    "basis_vector",
    "vec_add",
    "vec_sub",
    "vec_scale",
    "vec_is_zero",
    "zero_matrix",
    "identity_matrix",
    "mat_from_rows",
    "mat_add",
    "mat_sub",
    "mat_neg",
    "mat_scale",
    "mat_transpose",
    "mat_mul",
    "mat_apply",
    "mat_is_zero",
    "mat_combination",
    "combination_column",
    "determinant",
    "mat_inverse",
    "solve_exact",
    "LinearMap",
    "dual_map",
    "Tensor2",
    "Tensor3",
    "swap_factors",
    "rotate_factors",
    "tensor_as_map",
    "tensors_equal",
]
