"""Exact dense linear algebra and canonical subspace arithmetic.

Vectors are tuples of field elements, matrices are tuples of row tuples.
A :class:`Subspace` stores the unique reduced row echelon basis of its row
space, so subspace equality is plain tuple equality and every subspace has
one canonical representation.
"""

import itertools

from .errors import (
    AmbientMismatchError,
    BudgetExceededError,
    EnumerationUnsupportedError,
)
from .exactfield import PrimeField

DEFAULT_BUDGET = 10**6


# ---------------------------------------------------------------------------
# vector / matrix helpers
# ---------------------------------------------------------------------------

def zero_vector(field, n):
    return (field.zero,) * n


def unit_vector(field, n, i):
    return tuple(field.one if j == i else field.zero for j in range(n))


def vec_add(field, u, v):
    return tuple(field.add(a, b) for a, b in zip(u, v))


def vec_sub(field, u, v):
    return tuple(field.sub(a, b) for a, b in zip(u, v))


def vec_scale(field, c, v):
    return tuple(field.mul(c, a) for a in v)


def vec_is_zero(field, v):
    return all(a == field.zero for a in v)


def lin_comb(field, coeffs, vectors, n):
    """Sum of ``coeffs[i] * vectors[i]`` in coordinate n-space."""
    out = list(zero_vector(field, n))
    for c, v in zip(coeffs, vectors):
        if c == field.zero:
            continue
        for j, a in enumerate(v):
            out[j] = field.add(out[j], field.mul(c, a))
    return tuple(out)


def mat_vec(field, rows, v):
    """Matrix times column vector; rows is m x n, v has length n."""
    out = []
    for row in rows:
        s = field.zero
        for a, b in zip(row, v):
            if a != field.zero and b != field.zero:
                s = field.add(s, field.mul(a, b))
        out.append(s)
    return tuple(out)


def transpose(rows, ncols):
    if not rows:
        return tuple(() for _ in range(ncols))
    return tuple(tuple(row[j] for row in rows) for j in range(ncols))


# ---------------------------------------------------------------------------
# row reduction, kernels, solving
# ---------------------------------------------------------------------------

def rref(field, rows):
    """Reduced row echelon form.

    Returns ``(rows, pivots)`` with zero rows dropped and pivot columns
    strictly increasing; the result is the canonical basis of the row space.
    """
    work = [list(r) for r in rows]
    nrows = len(work)
    ncols = len(work[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if work[i][c] != field.zero), None)
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        if work[r][c] != field.one:
            inv = field.inv(work[r][c])
            work[r] = [field.mul(inv, x) for x in work[r]]
        for i in range(nrows):
            if i != r and work[i][c] != field.zero:
                f = work[i][c]
                work[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return tuple(tuple(row) for row in work[:r]), tuple(pivots)


def reduce_against(field, rows, pivots, v):
    """Residual of v after elimination by an RREF basis."""
    v = list(v)
    for row, p in zip(rows, pivots):
        c = v[p]
        if c != field.zero:
            for j in range(p, len(v)):
                if row[j] != field.zero:
                    v[j] = field.sub(v[j], field.mul(c, row[j]))
    return tuple(v)


def right_kernel(field, rows, ncols):
    """Basis of ``{x : M x = 0}`` for the matrix with the given rows."""
    red, pivots = rref(field, rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        x = [field.zero] * ncols
        x[f] = field.one
        for r, p in enumerate(pivots):
            x[p] = field.neg(red[r][f])
        basis.append(tuple(x))
    return basis


def solve(field, rows, rhs, ncols=None):
    """One solution of ``M x = rhs`` or None if the system is inconsistent."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    aug = [tuple(row) + (b,) for row, b in zip(rows, rhs)]
    red, pivots = rref(field, aug)
    if ncols in pivots:
        return None
    x = [field.zero] * ncols
    for r, p in enumerate(pivots):
        x[p] = red[r][ncols]
    return tuple(x)


class EchelonBasis:
    """Mutable RREF accumulator for incremental span building."""

    def __init__(self, field, n):
        self.field = field
        self.n = n
        self.rows = []    # kept in RREF, pivots strictly increasing
        self.pivots = []

    @property
    def dim(self):
        return len(self.rows)

    def reduce(self, v):
        return reduce_against(self.field, self.rows, self.pivots, v)

    def add(self, v):
        """Insert v into the span; returns True if the dimension grew."""
        field = self.field
        res = self.reduce(v)
        p = next((j for j, a in enumerate(res) if a != field.zero), None)
        if p is None:
            return False
        if res[p] != field.one:
            res = vec_scale(field, field.inv(res[p]), res)
        pos = 0
        while pos < len(self.pivots) and self.pivots[pos] < p:
            pos += 1
        self.rows.insert(pos, res)
        self.pivots.insert(pos, p)
        for i in range(len(self.rows)):
            if i == pos:
                continue
            c = self.rows[i][p]
            if c != field.zero:
                self.rows[i] = vec_sub(field, self.rows[i], vec_scale(field, c, res))
        return True

    def __contains__(self, v):
        return vec_is_zero(self.field, self.reduce(v))

    def subspace(self):
        return Subspace._trusted(self.field, self.n, tuple(self.rows), tuple(self.pivots))


# ---------------------------------------------------------------------------
# Subspace
# ---------------------------------------------------------------------------

class Subspace:
    """A subspace of coordinate n-space in canonical RREF form."""

    __slots__ = ("field", "ambient", "rows", "pivots")

    def __init__(self, field, ambient, vectors):
        for v in vectors:
            if len(v) != ambient:
                raise AmbientMismatchError(
                    f"vector of length {len(v)} in ambient dimension {ambient}"
                )
        rows, pivots = rref(field, list(vectors))
        self.field = field
        self.ambient = ambient
        self.rows = rows
        self.pivots = pivots

    @classmethod
    def _trusted(cls, field, ambient, rows, pivots):
        # rows already in canonical RREF; skips re-reduction
        self = object.__new__(cls)
        self.field = field
        self.ambient = ambient
        self.rows = rows
        self.pivots = pivots
        return self

    @property
    def dim(self):
        return len(self.rows)

    def is_zero(self):
        return not self.rows

    def is_full(self):
        return len(self.rows) == self.ambient

    def _check_compatible(self, other):
        self.field.check_same(other.field)
        if self.ambient != other.ambient:
            raise AmbientMismatchError(
                f"incompatible subspaces: {self.field}^{self.ambient} "
                f"vs {other.field}^{other.ambient}"
            )

    def reduce(self, v):
        return reduce_against(self.field, self.rows, self.pivots, v)

    def __contains__(self, v):
        if len(v) != self.ambient:
            raise AmbientMismatchError(
                f"vector of length {len(v)} in ambient dimension {self.ambient}"
            )
        return vec_is_zero(self.field, self.reduce(v))

    def __le__(self, other):
        self._check_compatible(other)
        if self.dim > other.dim:
            return False
        return all(v in other for v in self.rows)

    def __lt__(self, other):
        return self.dim < other.dim and self <= other

    def __add__(self, other):
        self._check_compatible(other)
        return Subspace(self.field, self.ambient, self.rows + other.rows)

    def __and__(self, other):
        """Intersection via the kernel of the stacked bases."""
        self._check_compatible(other)
        stacked = self.rows + other.rows
        if not stacked:
            return self
        coeffs = right_kernel(self.field, transpose(stacked, self.ambient), len(stacked))
        u = self.dim
        vectors = [
            lin_comb(self.field, c[:u], self.rows, self.ambient) for c in coeffs
        ]
        return Subspace(self.field, self.ambient, vectors)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient == other.ambient
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.ambient, self.rows))

    def sort_key(self):
        return (self.dim, self.rows)

    def __repr__(self):
        return f"Subspace({self.field}^{self.ambient}, dim {self.dim})"

    def basis_strings(self):
        f = self.field
        return [[f.format(a) for a in row] for row in self.rows]

    @classmethod
    def from_basis_strings(cls, field, ambient, rows):
        vectors = [tuple(field.parse(a) for a in row) for row in rows]
        return cls(field, ambient, vectors)


def span(field, ambient, vectors):
    """Canonical subspace spanned by the given vectors."""
    return Subspace(field, ambient, vectors)


def zero_subspace(field, ambient):
    return Subspace._trusted(field, ambient, (), ())


def full_subspace(field, ambient):
    rows = tuple(unit_vector(field, ambient, i) for i in range(ambient))
    return Subspace._trusted(field, ambient, rows, tuple(range(ambient)))


# ---------------------------------------------------------------------------
# quotient coordinates
# ---------------------------------------------------------------------------

class QuotientMap:
    """Projection onto a complement of U and a fixed linear section back.

    Quotient coordinates are indexed by the non-pivot columns of U's basis,
    so the lift of the a-th coordinate vector is the standard basis vector
    at that column.  ``project(lift(c)) == c`` for every coordinate tuple c.
    """

    __slots__ = ("subspace", "complement_cols", "dim")

    def __init__(self, subspace):
        self.subspace = subspace
        pivot_set = set(subspace.pivots)
        self.complement_cols = tuple(
            c for c in range(subspace.ambient) if c not in pivot_set
        )
        self.dim = len(self.complement_cols)

    def project(self, v):
        res = self.subspace.reduce(v)
        return tuple(res[c] for c in self.complement_cols)

    def lift(self, coords):
        field = self.subspace.field
        out = [field.zero] * self.subspace.ambient
        for a, c in zip(coords, self.complement_cols):
            out[c] = a
        return tuple(out)

    def projection_rows(self):
        """The projection as an m x n matrix acting on column vectors."""
        n = self.subspace.ambient
        field = self.subspace.field
        cols = [self.project(unit_vector(field, n, i)) for i in range(n)]
        return transpose(cols, self.dim)

    def lift_rows(self):
        """Row a is the lift of the a-th quotient coordinate vector."""
        n = self.subspace.ambient
        field = self.subspace.field
        return tuple(unit_vector(field, n, c) for c in self.complement_cols)

    def project_subspace(self, U):
        return Subspace(
            self.subspace.field, self.dim, [self.project(v) for v in U.rows]
        )

    def preimage_subspace(self, W):
        vectors = [self.lift(w) for w in W.rows] + list(self.subspace.rows)
        return Subspace(self.subspace.field, self.subspace.ambient, vectors)


def quotient_coordinates(U):
    return QuotientMap(U)


# ---------------------------------------------------------------------------
# subspace enumeration
# ---------------------------------------------------------------------------

def gaussian_binomial(n, k, q):
    """Number of k-dimensional subspaces of an n-space over GF(q)."""
    if k < 0 or k > n:
        return 0
    num = 1
    den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


def count_subspaces(field, n, dims=None):
    q = field.characteristic()
    ks = range(n + 1) if dims is None else dims
    return sum(gaussian_binomial(n, k, q) for k in ks)


def _normalize_dims(n, dim_filter):
    if dim_filter is None:
        return list(range(n + 1))
    if isinstance(dim_filter, int):
        dims = [dim_filter]
    else:
        dims = sorted(set(dim_filter))
    return [k for k in dims if 0 <= k <= n]


def enumerate_subspaces(field, n, dim_filter=None, budget=DEFAULT_BUDGET):
    """Yield every subspace of GF(q)^n exactly once, in canonical order.

    Order is by dimension, then lexicographic on the RREF basis matrix.
    Bases are generated directly per pivot-column pattern, so there are no
    duplicates and the cost is linear in the output.
    """
    if not isinstance(field, PrimeField):
        raise EnumerationUnsupportedError(
            f"subspace enumeration unsupported over infinite field {field}"
        )
    dims = _normalize_dims(n, dim_filter)
    total = count_subspaces(field, n, dims)
    if budget is not None and total > budget:
        raise BudgetExceededError(total, budget)
    elements = list(field.elements())
    for k in dims:
        batch = []
        for pivots in itertools.combinations(range(n), k):
            pivot_set = set(pivots)
            free = [
                (r, c)
                for r in range(k)
                for c in range(pivots[r] + 1, n)
                if c not in pivot_set
            ]
            template = [[field.zero] * n for _ in range(k)]
            for r, p in enumerate(pivots):
                template[r][p] = field.one
            for values in itertools.product(elements, repeat=len(free)):
                rows = [row[:] for row in template]
                for (r, c), v in zip(free, values):
                    rows[r][c] = v
                batch.append(tuple(tuple(row) for row in rows))
        batch.sort()
        for rows in batch:
            yield Subspace._trusted(field, n, rows, tuple(pivots_of(rows, field)))


def pivots_of(rows, field):
    pivots = []
    for row in rows:
        pivots.append(next(j for j, a in enumerate(row) if a != field.zero))
    return pivots


def projective_points(field, n):
    """One representative per line: vectors whose first nonzero entry is 1."""
    elements = list(field.elements())
    for lead in range(n):
        prefix = (field.zero,) * lead + (field.one,)
        for tail in itertools.product(elements, repeat=n - lead - 1):
            yield prefix + tail
