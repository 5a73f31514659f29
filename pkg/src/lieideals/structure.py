"""Structure-theoretic predicates: nilpotency, solvability, supersolvability,
simplicity, minimal ideals, maximal and Cartan subalgebras, the Frattini
subalgebra, and the classifier for algebras whose one-dimensional subalgebras
are all weak c-ideals.

Predicates that need exhaustive search are restricted to prime fields within
an explicit budget; everything else works over any supported field.  Results
that depend on an unavailable search come back as the tri-state value
UNSUPPORTED rather than a guess.
"""

import enum
import math
import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import BudgetExceededError, EnumerationUnsupportedError
from .exactfield import PrimeField, RationalField
from .ideals import core, find_weak_c_witness, ideals_of, subalgebras
from .linspace import (
    DEFAULT_BUDGET,
    EchelonBasis,
    Subspace,
    lin_comb,
    mat_vec,
    projective_points,
    right_kernel,
    solve,
    span,
    unit_vector,
    vec_is_zero,
    vec_scale,
    vec_sub,
)


class TriState(enum.Enum):
    """Three-valued predicate result.  UNSUPPORTED marks artifact limits
    (wrong field, blown budget), never mathematical falsehood."""

    YES = "true"
    NO = "false"
    UNSUPPORTED = "unsupported"

    def __bool__(self):
        raise TypeError("tri-state result; compare against TriState members")

    @classmethod
    def of(cls, b):
        return cls.YES if b else cls.NO


@dataclass(frozen=True)
class StructureFlags:
    nilpotent: TriState
    solvable: TriState
    supersolvable: TriState
    simple: TriState
    almost_abelian: TriState

    def to_json(self):
        return {
            "nilpotent": self.nilpotent.value,
            "solvable": self.solvable.value,
            "supersolvable": self.supersolvable.value,
            "simple": self.simple.value,
            "almost_abelian": self.almost_abelian.value,
        }


# ---------------------------------------------------------------------------
# spinning: smallest ideal containing a vector
# ---------------------------------------------------------------------------

def spin(L, v):
    """Smallest ideal of L containing v (adjoint-invariant closure)."""
    f = L.field
    n = L.dim
    ads = [L.ad_matrix(i) for i in range(n)]
    if isinstance(f, PrimeField):
        p = f.p
        act = lambda rows, w: tuple(sum(map(operator.mul, r, w)) % p for r in rows)
    else:
        act = lambda rows, w: mat_vec(f, rows, w)
    basis = EchelonBasis(f, n)
    work = [v]
    while work:
        w = work.pop()
        if not basis.add(w):
            continue
        if basis.dim == n:
            break
        for rows in ads:
            work.append(act(rows, w))
    return basis.subspace()


def _projective_count(q, n):
    return (q**n - 1) // (q - 1) if n > 0 else 0


def minimal_ideals(L, point_budget=DEFAULT_BUDGET):
    """Minimal nonzero ideals, as the minimal elements of all vector spins.

    Exhaustive over prime fields: every minimal ideal is the spin of each of
    its nonzero vectors, and every spin contains one.
    """
    f = L.field
    if not isinstance(f, PrimeField):
        raise EnumerationUnsupportedError(
            "minimal-ideal spinning needs a finite prime field"
        )
    total = _projective_count(f.p, L.dim)
    if total > point_budget:
        raise BudgetExceededError(total, point_budget)
    spins = set()
    for v in projective_points(f, L.dim):
        spins.add(spin(L, v))
    mins = [S for S in spins if not any(T < S for T in spins)]
    return sorted(mins, key=lambda S: S.sort_key())


def is_simple(L, point_budget=DEFAULT_BUDGET):
    """Simple iff dim > 1 and every nonzero vector spins to the whole algebra."""
    f = L.field
    if not isinstance(f, PrimeField):
        return TriState.UNSUPPORTED
    if L.dim <= 1:
        return TriState.NO
    if _projective_count(f.p, L.dim) > point_budget:
        return TriState.UNSUPPORTED
    full = L.full_space()
    for v in projective_points(f, L.dim):
        if spin(L, v) != full:
            return TriState.NO
    return TriState.YES


# ---------------------------------------------------------------------------
# supersolvability
# ---------------------------------------------------------------------------

def _line_is_ideal(L, v):
    # [e_i, v] must be a multiple of v for every basis vector
    f = L.field
    lead = next(j for j, a in enumerate(v) if a != f.zero)
    for i in range(L.dim):
        w = mat_vec(f, L.ad_matrix(i), v)
        c = f.div(w[lead], v[lead])
        if w != vec_scale(f, c, v):
            return False
    return True


def _find_line_ideal_finite(L):
    for v in projective_points(L.field, L.dim):
        if _line_is_ideal(L, v):
            return L.span([v])
    return None


def _char_poly(f, rows):
    """Characteristic polynomial coefficients c_0..c_n (monic), exact.

    Faddeev-LeVerrier; needs division by integers, so characteristic 0 only.
    """
    n = len(rows)
    coeffs = [f.zero] * (n + 1)
    coeffs[n] = f.one
    M = [[f.zero] * n for _ in range(n)]
    c = f.one
    for k in range(1, n + 1):
        # M <- A @ M + c * I
        AM = [
            [
                _dot(f, rows[i], [M[t][j] for t in range(n)])
                for j in range(n)
            ]
            for i in range(n)
        ]
        for i in range(n):
            AM[i][i] = f.add(AM[i][i], c)
        M = AM
        tr = f.zero
        for i in range(n):
            tr = f.add(tr, _dot(f, rows[i], [M[t][i] for t in range(n)]))
        c = f.mul(f.from_int(-1), f.div(tr, f.from_int(k)))
        coeffs[n - k] = c
    # drop the extra c*I mixed into M on the last step: coeffs are already set
    return coeffs


def _dot(f, u, v):
    acc = f.zero
    for a, b in zip(u, v):
        acc = f.add(acc, f.mul(a, b))
    return acc


def _divisors(m, cap=10**12):
    m = abs(m)
    if m == 0:
        return None
    if m > cap:
        return None
    out = []
    d = 1
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            out.append(m // d)
        d += 1
    return sorted(set(out))


def _rational_roots(coeffs):
    """All rational roots of a polynomial with Fraction coefficients, or None
    when the integer factorizations involved are out of desk range."""
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in coeffs]
    while ints and ints[-1] == 0:
        ints.pop()
    if not ints:
        return []  # zero polynomial: callers never pass it
    roots = set()
    # strip zero roots
    shift = 0
    while ints[shift] == 0:
        roots.add(Fraction(0))
        shift += 1
    ints = ints[shift:]
    if len(ints) == 1:
        return sorted(roots)
    ps = _divisors(ints[0])
    qs = _divisors(ints[-1])
    if ps is None or qs is None:
        return None
    for num in ps:
        for den in qs:
            for cand in (Fraction(num, den), Fraction(-num, den)):
                acc = Fraction(0)
                for c in reversed(ints):
                    acc = acc * cand + c
                if acc == 0:
                    roots.add(cand)
    return sorted(roots)


def _eigenspace(f, rows, lam, n):
    shifted = [
        tuple(f.sub(rows[i][j], lam if i == j else f.zero) for j in range(n))
        for i in range(n)
    ]
    ker = right_kernel(f, shifted, n)
    return span(f, n, ker)


def _find_line_ideal_rational(L):
    """Common rational eigenvector search; returns a line ideal, None when
    there is none, or UNSUPPORTED when root extraction gave up."""
    f = L.field
    n = L.dim
    spaces = [L.full_space()]
    for i in range(n):
        rows = L.ad_matrix(i)
        roots = _rational_roots(_char_poly(f, rows))
        if roots is None:
            return TriState.UNSUPPORTED
        refined = set()
        for W in spaces:
            for lam in roots:
                X = W & _eigenspace(f, rows, lam, n)
                if X.dim > 0:
                    refined.add(X)
        if not refined:
            return None
        spaces = sorted(refined, key=lambda S: S.sort_key())
    v = spaces[0].rows[0]
    line = L.span([v])
    assert L.product_space(L.full_space(), line) <= line
    return line


def is_supersolvable(L, budget=DEFAULT_BUDGET):
    """Existence of a flag of ideals of L with one-dimensional steps.

    Greedy recursion on any one-dimensional ideal is complete because
    supersolvability passes to quotients and lifts back along them.
    """
    if L.dim == 0:
        return TriState.YES
    if L.is_nilpotent():
        return TriState.YES
    if not L.is_solvable():
        return TriState.NO
    f = L.field
    if isinstance(f, PrimeField):
        if _projective_count(f.p, L.dim) > budget:
            return TriState.UNSUPPORTED
        line = _find_line_ideal_finite(L)
    else:
        line = _find_line_ideal_rational(L)
        if line is TriState.UNSUPPORTED:
            return TriState.UNSUPPORTED
    if line is None:
        return TriState.NO
    return is_supersolvable(L.quotient(line).algebra, budget)


# ---------------------------------------------------------------------------
# lattice-derived families
# ---------------------------------------------------------------------------

def _maximal_members(members):
    out = []
    for S in members:
        if not any(S.dim < T.dim and S < T for T in members):
            out.append(S)
    return out


def maximal_subalgebras(L, budget=DEFAULT_BUDGET):
    def build():
        proper = [S for S in subalgebras(L, budget) if S.dim < L.dim]
        return _maximal_members(proper)

    return L._cached("maximal_subalgebras", build)


def frattini(L, budget=DEFAULT_BUDGET):
    """(F(L), phi(L)): intersection of all maximal subalgebras, and its core."""
    def build():
        F = L.full_space()
        for M in maximal_subalgebras(L, budget):
            F = F & M
        return (F, core(L, F))

    return L._cached("frattini", build)


def sub_is_nilpotent(L, S):
    return L._cached(("subnilp", S.rows), lambda: L.restrict(S).algebra.is_nilpotent())


def nilpotent_subalgebras(L, budget=DEFAULT_BUDGET):
    def build():
        return [S for S in subalgebras(L, budget) if sub_is_nilpotent(L, S)]

    return L._cached("nilpotent_subalgebras", build)


def maximal_nilpotent_subalgebras(L, budget=DEFAULT_BUDGET):
    def build():
        return _maximal_members(nilpotent_subalgebras(L, budget))

    return L._cached("maximal_nilpotent_subalgebras", build)


def cartan_subalgebras(L, budget=DEFAULT_BUDGET):
    """Nilpotent self-normalizing subalgebras."""
    def build():
        return [
            S
            for S in nilpotent_subalgebras(L, budget)
            if L.normalizer(S) == S
        ]

    return L._cached("cartan_subalgebras", build)


class LatticeCache:
    """Read-only view of the enumerated subalgebra lattice of one algebra.

    Construction is lazy; every list is computed once and memoized on the
    algebra, in canonical enumeration order.
    """

    def __init__(self, L, budget=DEFAULT_BUDGET):
        self.algebra = L
        self.budget = budget

    @property
    def subalgebras(self):
        return subalgebras(self.algebra, self.budget)

    @property
    def ideals(self):
        return ideals_of(self.algebra, self.budget)

    @property
    def maximal_subalgebras(self):
        return maximal_subalgebras(self.algebra, self.budget)

    @property
    def nilpotent_subalgebras(self):
        return nilpotent_subalgebras(self.algebra, self.budget)

    @property
    def maximal_nilpotent_subalgebras(self):
        return maximal_nilpotent_subalgebras(self.algebra, self.budget)

    @property
    def cartan_subalgebras(self):
        return cartan_subalgebras(self.algebra, self.budget)


def lattice(L, budget=DEFAULT_BUDGET):
    return LatticeCache(L, budget)


# ---------------------------------------------------------------------------
# almost abelian algebras and the one-dimensional weak-c classifier
# ---------------------------------------------------------------------------

def _ad_identity_solution(L, W):
    """Some x with [x, w] = w for every w in W, or None.

    Stacks the linear system over the coordinates of x; any solution works.
    """
    f = L.field
    n = L.dim
    rows = []
    rhs = []
    for w in W.rows:
        # coefficient of x_i in [x, w] is [e_i, w]
        cols = [mat_vec(f, L.ad_matrix(i), w) for i in range(n)]
        for k in range(n):
            rows.append(tuple(cols[i][k] for i in range(n)))
            rhs.append(w[k])
    return solve(f, rows, rhs, n)


def almost_abelian_part(L):
    """The x with L = L^2 + Fx and [x, y] = y on L^2, or None."""
    der = L.product_space(L.full_space(), L.full_space())
    if L.dim != der.dim + 1:
        return None
    if not L.restrict(der).algebra.is_abelian():
        return None
    if der.dim == 0:
        return unit_vector(L.field, L.dim, 0)
    return _ad_identity_solution(L, der)


def is_almost_abelian(L):
    return almost_abelian_part(L) is not None


@dataclass
class OneDimClassification:
    """Outcome of the classifier for algebras all of whose one-dimensional
    subalgebras are weak c-ideals."""

    case: str  # "case-i" | "case-ii" | "neither"
    A: Optional[Subspace]
    B: Optional[Subspace]
    all_one_dim_weak_c: Optional[bool]
    agrees: Optional[bool]
    non_witness: Optional[Subspace] = None  # a line that is not a weak c-ideal

    def to_json(self):
        return {
            "case": self.case,
            "A": None if self.A is None else self.A.basis_strings(),
            "B": None if self.B is None else self.B.basis_strings(),
            "all_one_dim_weak_c": self.all_one_dim_weak_c,
            "agrees": self.agrees,
            "non_witness": None
            if self.non_witness is None
            else self.non_witness.basis_strings(),
        }


def _case_ii_split(L):
    """L = A (+) B with A an abelian ideal and B an almost abelian ideal,
    as (A, B), or None.

    Any such A centralizes B, so A lies in the center; B must be
    L^2 + Fx for a solution x of [x, .] = id on L^2.
    """
    f = L.field
    full = L.full_space()
    der = L.product_space(full, full)
    if der.dim == 0:
        return None  # B would be one-dimensional with B^2 = L^2 = 0: case i
    if not L.restrict(der).algebra.is_abelian():
        return None
    x0 = _ad_identity_solution(L, der)
    if x0 is None:
        return None
    Z = L.center()
    H = Z + der
    if H.dim < L.dim - 1:
        return None
    if H.dim == L.dim:
        x = x0
    else:
        # need a solution outside the hyperplane H; solutions form
        # x0 + centralizer(L^2)
        if x0 not in H:
            x = x0
        else:
            Wc = L.centralizer(der)
            x = None
            for w in Wc.rows:
                if w not in H:
                    x = tuple(f.add(a, b) for a, b in zip(x0, w))
                    break
            if x is None:
                return None
    B = der + L.span([x])
    ZB = Z & B
    eb = EchelonBasis(f, L.dim)
    for r in ZB.rows:
        eb.add(r)
    a_rows = [z for z in Z.rows if eb.add(z)]
    A = L.span(a_rows)
    assert (A & B).dim == 0 and (A + B) == full
    assert L.product_space(full, A) <= A and L.product_space(full, B) <= B
    assert is_almost_abelian(L.restrict(B).algebra)
    return (A, B)


def classify_one_dim_weak_c(L, cross_check=True, budget=DEFAULT_BUDGET):
    """Structural trichotomy behind "every one-dimensional subalgebra is a
    weak c-ideal": third lower-central term zero, or a split into an abelian
    ideal plus an almost abelian ideal, or neither.

    Over prime fields (within budget) the exhaustive one-dimensional search
    cross-checks the equivalence; over the rationals only the structural
    classification runs.
    """
    full = L.full_space()
    der = L.product_space(full, full)
    lc3 = L.product_space(full, der)
    if lc3.dim == 0:
        verdict = OneDimClassification("case-i", None, None, None, None)
    else:
        split = _case_ii_split(L)
        if split is not None:
            verdict = OneDimClassification("case-ii", split[0], split[1], None, None)
        else:
            verdict = OneDimClassification("neither", None, None, None, None)
    if cross_check and isinstance(L.field, PrimeField):
        try:
            all_weak = True
            for v in projective_points(L.field, L.dim):
                if find_weak_c_witness(L, L.span([v]), budget) is None:
                    all_weak = False
                    verdict.non_witness = L.span([v])
                    break
            verdict.all_one_dim_weak_c = all_weak
            verdict.agrees = (verdict.case != "neither") == all_weak
        except (BudgetExceededError, EnumerationUnsupportedError):
            pass
    return verdict


# ---------------------------------------------------------------------------
# flags and report
# ---------------------------------------------------------------------------

def flags(L, budget=DEFAULT_BUDGET):
    return StructureFlags(
        nilpotent=TriState.of(L.is_nilpotent()),
        solvable=TriState.of(L.is_solvable()),
        supersolvable=is_supersolvable(L, budget),
        simple=is_simple(L, budget),
        almost_abelian=TriState.of(is_almost_abelian(L)),
    )


def structure_report(L, budget=DEFAULT_BUDGET):
    """JSON-ready structure summary: flags, lattice counts by dimension,
    distinguished subalgebra families."""
    doc = {"flags": flags(L, budget).to_json()}
    try:
        cache = lattice(L, budget)
        counts = {}
        for S in cache.subalgebras:
            counts[str(S.dim)] = counts.get(str(S.dim), 0) + 1
        doc["lattice"] = {
            "subalgebras_by_dim": dict(sorted(counts.items(), key=lambda kv: int(kv[0]))),
            "maximal": [S.basis_strings() for S in cache.maximal_subalgebras],
            "maximal_nilpotent": [
                S.basis_strings() for S in cache.maximal_nilpotent_subalgebras
            ],
            "cartan": [S.basis_strings() for S in cache.cartan_subalgebras],
        }
    except (BudgetExceededError, EnumerationUnsupportedError) as e:
        doc["lattice"] = {"unsupported": str(e)}
    return doc
