"""Lie algebras by structure constants.

Brackets are stored only for basis pairs i < j; the accessor applies
antisymmetry, so inconsistent antisymmetric data cannot be represented.
The Jacobi identity is validated on every basis triple at construction.
"""

from dataclasses import dataclass

from .errors import (
    AmbientMismatchError,
    JacobiError,
    NotAnIdealError,
    NotASubalgebraError,
    NotContainedError,
)
from .exactfield import field_from_name
from .linspace import (
    Subspace,
    full_subspace,
    lin_comb,
    mat_vec,
    right_kernel,
    span,
    transpose,
    unit_vector,
    vec_add,
    vec_is_zero,
    vec_scale,
    zero_subspace,
    zero_vector,
    QuotientMap,
)

DERIVED = "derived"
LOWER_CENTRAL = "lower-central"


class LieAlgebra:
    """A finite-dimensional Lie algebra over an exact field.

    ``brackets`` maps 0-based basis pairs (i, j) with i < j to the
    coordinate vector of [e_i, e_j]; missing pairs bracket to zero.
    """

    def __init__(self, field, dim, brackets, labels=None, check=True):
        self.field = field
        self.dim = dim
        table = {}
        for (i, j), v in brackets.items():
            if not (0 <= i < j < dim):
                raise AmbientMismatchError(f"bad bracket index pair ({i},{j})")
            if len(v) != dim:
                raise AmbientMismatchError(
                    f"bracket [{i},{j}] has length {len(v)}, dim is {dim}"
                )
            v = tuple(v)
            if not vec_is_zero(field, v):
                table[(i, j)] = v
        self._table = table
        if labels is None:
            labels = tuple(f"e{i+1}" for i in range(dim))
        self.labels = tuple(labels)
        self._ad = None
        self._cache = {}
        if check:
            self._check_jacobi()

    # -- basic structure ----------------------------------------------------

    def bracket_basis(self, i, j):
        """[e_i, e_j] as a coordinate vector."""
        if i == j:
            return zero_vector(self.field, self.dim)
        if i < j:
            v = self._table.get((i, j))
            return v if v is not None else zero_vector(self.field, self.dim)
        v = self._table.get((j, i))
        if v is None:
            return zero_vector(self.field, self.dim)
        return tuple(self.field.neg(a) for a in v)

    def ad_matrix(self, i):
        """Matrix of ad(e_i): column j holds [e_i, e_j]."""
        if self._ad is None:
            self._ad = [None] * self.dim
        if self._ad[i] is None:
            cols = [self.bracket_basis(i, j) for j in range(self.dim)]
            self._ad[i] = transpose(cols, self.dim)
        return self._ad[i]

    def ad_of(self, x):
        """Matrix of ad(x) for an arbitrary vector x."""
        f = self.field
        rows = [list(zero_vector(f, self.dim)) for _ in range(self.dim)]
        for i, xi in enumerate(x):
            if xi == f.zero:
                continue
            m = self.ad_matrix(i)
            for r in range(self.dim):
                for c in range(self.dim):
                    if m[r][c] != f.zero:
                        rows[r][c] = f.add(rows[r][c], f.mul(xi, m[r][c]))
        return tuple(tuple(r) for r in rows)

    def bracket(self, x, y):
        """Bilinear extension of the structure-constant table."""
        f = self.field
        if len(x) != self.dim or len(y) != self.dim:
            raise AmbientMismatchError("bracket operands must have length dim")
        out = list(zero_vector(f, self.dim))
        for i, xi in enumerate(x):
            if xi == f.zero:
                continue
            v = mat_vec(f, self.ad_matrix(i), y)
            for k, a in enumerate(v):
                if a != f.zero:
                    out[k] = f.add(out[k], f.mul(xi, a))
        return tuple(out)

    def _check_jacobi(self):
        f = self.field
        units = [unit_vector(f, self.dim, i) for i in range(self.dim)]
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                vij = self.bracket_basis(i, j)
                for k in range(j + 1, self.dim):
                    s = self.bracket(vij, units[k])
                    s = vec_add(f, s, self.bracket(self.bracket_basis(j, k), units[i]))
                    s = vec_add(f, s, self.bracket(self.bracket_basis(k, i), units[j]))
                    if not vec_is_zero(f, s):
                        raise JacobiError((i + 1, j + 1, k + 1), [f.format(a) for a in s])

    # -- subspace machinery -------------------------------------------------

    def full_space(self):
        return full_subspace(self.field, self.dim)

    def zero_space(self):
        return zero_subspace(self.field, self.dim)

    def span(self, vectors):
        return span(self.field, self.dim, vectors)

    def product_space(self, A, B):
        """Span of all brackets [a, b] over basis pairs of A and B."""
        vectors = [self.bracket(a, b) for a in A.rows for b in B.rows]
        return span(self.field, self.dim, vectors)

    def is_subalgebra(self, S):
        return self.product_space(S, S) <= S

    def is_ideal(self, S):
        return self.product_space(self.full_space(), S) <= S

    def subalgebra_closure(self, S):
        """Smallest bracket-closed subspace containing S."""
        U = S
        while True:
            nxt = U + self.product_space(U, U)
            if nxt == U:
                return U
            U = nxt

    def series(self, kind):
        """Derived or lower-central series, stopping at stabilization."""
        if kind not in (DERIVED, LOWER_CENTRAL):
            raise ValueError(f"unknown series kind {kind!r}")
        L = self.full_space()
        terms = [L]
        while True:
            cur = terms[-1]
            if kind == DERIVED:
                nxt = self.product_space(cur, cur)
            else:
                nxt = self.product_space(L, cur)
            if nxt == cur:
                if not cur.is_zero():
                    terms.append(nxt)
                break
            terms.append(nxt)
            if nxt.is_zero():
                break
        return SeriesReport(kind, terms, terms[-1].is_zero())

    def is_solvable(self):
        return self._cached("solvable", lambda: self.series(DERIVED).reaches_zero)

    def is_nilpotent(self):
        return self._cached(
            "nilpotent", lambda: self.series(LOWER_CENTRAL).reaches_zero
        )

    def is_abelian(self):
        return not self._table

    def centralizer(self, A):
        """{x : [x, a] = 0 for all a in A}, as an exact solution space."""
        f = self.field
        rows = []
        for a in A.rows:
            cols = [self.bracket(unit_vector(f, self.dim, j), a) for j in range(self.dim)]
            rows.extend(transpose(cols, self.dim))
        vectors = right_kernel(f, rows, self.dim)
        return span(f, self.dim, vectors)

    def normalizer(self, B):
        """{x : [x, B] <= B}, as an exact solution space."""
        f = self.field
        qmap = QuotientMap(B)
        if qmap.dim == 0:
            return self.full_space()
        rows = []
        for b in B.rows:
            cols = [
                qmap.project(self.bracket(unit_vector(f, self.dim, j), b))
                for j in range(self.dim)
            ]
            rows.extend(transpose(cols, qmap.dim))
        vectors = right_kernel(f, rows, self.dim)
        return span(f, self.dim, vectors)

    def center(self):
        return self.centralizer(self.full_space())

    # -- quotients and restrictions -----------------------------------------

    def quotient(self, I):
        """Quotient algebra by an ideal, with projection and lift data."""
        return self._cached(("quotient", I.rows), lambda: self._quotient(I))

    def _quotient(self, I):
        if not self.is_subalgebra(I):
            raise NotAnIdealError("quotient by a subspace that is not a subalgebra")
        if not self.is_ideal(I):
            raise NotAnIdealError("quotient by a subspace that is not an ideal")
        qmap = QuotientMap(I)
        m = qmap.dim
        f = self.field
        lifts = qmap.lift_rows()
        brackets = {}
        for a in range(m):
            for b in range(a + 1, m):
                v = qmap.project(self.bracket(lifts[a], lifts[b]))
                brackets[(a, b)] = v
        quot = LieAlgebra(f, m, brackets, check=False)
        units = [unit_vector(f, self.dim, i) for i in range(self.dim)]
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                lhs = qmap.project(self.bracket_basis(i, j))
                rhs = quot.bracket(qmap.project(units[i]), qmap.project(units[j]))
                assert lhs == rhs, "quotient projection is not a homomorphism"
        return QuotientAlgebra(quot, qmap)

    def restrict(self, K):
        """View a bracket-closed subspace as a Lie algebra in its own right."""
        def build():
            if not self.is_subalgebra(K):
                raise NotASubalgebraError("restriction target is not bracket-closed")
            return SubalgebraView(self, K)

        return self._cached(("restrict", K.rows), build)

    # -- misc ---------------------------------------------------------------

    def _cached(self, key, thunk):
        if key not in self._cache:
            self._cache[key] = thunk()
        return self._cache[key]

    def label_index(self, name):
        try:
            return self.labels.index(name)
        except ValueError:
            raise NotContainedError(f"unknown basis label {name!r}") from None

    def table_key(self):
        """Structural identity: field, dimension and bracket table."""
        return (repr(self.field), self.dim, tuple(sorted(self._table.items())))

    def to_json(self):
        f = self.field
        brackets = [
            {"i": i + 1, "j": j + 1, "coeffs": [f.format(a) for a in v]}
            for (i, j), v in sorted(self._table.items())
        ]
        return {
            "field": repr(f),
            "dim": self.dim,
            "basis": list(self.labels),
            "brackets": brackets,
        }

    @classmethod
    def from_json(cls, doc):
        field = field_from_name(doc["field"])
        dim = doc["dim"]
        brackets = {}
        for ent in doc.get("brackets", []):
            i, j = ent["i"] - 1, ent["j"] - 1
            brackets[(i, j)] = tuple(field.parse(a) for a in ent["coeffs"])
        return cls(field, dim, brackets, labels=doc.get("basis"))

    def __repr__(self):
        return f"LieAlgebra(dim {self.dim} over {self.field})"


def validate_structure(field, dim, brackets, labels=None):
    """Build a LieAlgebra, raising JacobiError on the first violated triple."""
    return LieAlgebra(field, dim, brackets, labels=labels, check=True)


@dataclass
class SeriesReport:
    """Terms of a derived or lower-central series down to stabilization."""

    kind: str
    terms: list
    reaches_zero: bool

    def min_index_inside(self, K):
        """Smallest 1-based series index with the term contained in K."""
        for idx, term in enumerate(self.terms, start=1):
            if term <= K:
                return idx
        return None


class QuotientAlgebra:
    """A quotient Lie algebra together with its projection and lift maps."""

    def __init__(self, algebra, qmap):
        self.algebra = algebra
        self.map = qmap

    def project(self, v):
        return self.map.project(v)

    def lift(self, coords):
        return self.map.lift(coords)

    def project_subspace(self, U):
        return self.map.project_subspace(U)

    def preimage_subspace(self, W):
        return self.map.preimage_subspace(W)

    def projection_rows(self):
        return self.map.projection_rows()

    def lift_rows(self):
        return self.map.lift_rows()


class SubalgebraView:
    """A subalgebra of an ambient algebra, in its own coordinates.

    Coordinates are taken against the canonical RREF basis of the carrier
    subspace, so the view is deterministic for a given subspace.
    """

    def __init__(self, parent, space):
        self.parent = parent
        self.space = space
        f = parent.field
        k = space.dim
        brackets = {}
        for a in range(k):
            for b in range(a + 1, k):
                v = parent.bracket(space.rows[a], space.rows[b])
                brackets[(a, b)] = self.to_sub(v)
        self.algebra = LieAlgebra(f, k, brackets, check=False)

    def to_sub(self, v):
        """Coordinates of an ambient vector lying in the subalgebra."""
        coords = tuple(v[p] for p in self.space.pivots)
        back = lin_comb(self.parent.field, coords, self.space.rows, self.parent.dim)
        if tuple(back) != tuple(v):
            raise NotContainedError("vector is outside the subalgebra")
        return coords

    def from_sub(self, coords):
        return lin_comb(self.parent.field, coords, self.space.rows, self.parent.dim)

    def restrict_subspace(self, U):
        return Subspace(
            self.parent.field, self.space.dim, [self.to_sub(v) for v in U.rows]
        )

    def unrestrict_subspace(self, W):
        return Subspace(
            self.parent.field, self.parent.dim, [self.from_sub(w) for w in W.rows]
        )
