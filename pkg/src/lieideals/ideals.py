"""Cores, ideal closures, subideal chains, c-ideals and weak c-ideals.

A subalgebra B is a weak c-ideal of L when some subideal C satisfies
L = B + C with B ∩ C inside the core of B (the largest ideal of L contained
in B).  Searches return certificate objects that can be re-validated from
scratch, so soundness never rests on the search machinery.
"""

from dataclasses import dataclass
from typing import Optional

from .errors import NotASubalgebraError, NotContainedError
from .linspace import (
    DEFAULT_BUDGET,
    QuotientMap,
    Subspace,
    enumerate_subspaces,
    right_kernel,
    lin_comb,
    span,
    transpose,
    unit_vector,
)


# ---------------------------------------------------------------------------
# lattice primitives (shared, memoized on the algebra)
# ---------------------------------------------------------------------------

def subalgebras(L, budget=DEFAULT_BUDGET):
    """All bracket-closed subspaces of L, in canonical enumeration order."""
    def build():
        return [
            S
            for S in enumerate_subspaces(L.field, L.dim, budget=budget)
            if L.is_subalgebra(S)
        ]

    return L._cached("subalgebras", build)


def ideals_of(L, budget=DEFAULT_BUDGET):
    """All ideals of L, in canonical enumeration order."""
    def build():
        return [S for S in subalgebras(L, budget) if L.is_ideal(S)]

    return L._cached("ideals", build)


# ---------------------------------------------------------------------------
# core and ideal closure
# ---------------------------------------------------------------------------

def core(L, B):
    """Largest ideal of L contained in the subalgebra B.

    Descending fixed point: repeatedly shrink B to the set of its vectors x
    with [L, x] still inside the current stage.
    """
    key = ("core", B.rows)
    if key in L._cache:
        return L._cache[key]
    if not L.is_subalgebra(B):
        raise NotASubalgebraError("core is defined for subalgebras only")
    f = L.field
    units = [unit_vector(f, L.dim, i) for i in range(L.dim)]
    cur = B
    while True:
        if cur.is_zero():
            break
        qmap = QuotientMap(cur)
        if qmap.dim == 0:
            break  # cur is all of L, hence an ideal
        rows = []
        for u in units:
            cols = [qmap.project(L.bracket(u, b)) for b in cur.rows]
            rows.extend(transpose(cols, qmap.dim))
        coeffs = right_kernel(f, rows, cur.dim)
        nxt = span(f, L.dim, [lin_comb(f, c, cur.rows, L.dim) for c in coeffs])
        if nxt == cur:
            break
        cur = nxt
    L._cache[key] = cur
    return cur


def ideal_closure(L, B, K):
    """Smallest ideal of the subalgebra K containing B (requires B <= K)."""
    if not B <= K:
        raise NotContainedError("ideal closure needs B contained in K")
    U = B
    while True:
        prods = [L.bracket(k, u) for k in K.rows for u in U.rows]
        nxt = U + L.span(prods)
        if nxt == U:
            return U
        U = nxt


# ---------------------------------------------------------------------------
# subideal chains
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SubidealChain:
    """Strictly increasing chain of subalgebras, each an ideal in the next,
    ending at the whole algebra."""

    terms: tuple

    @property
    def bottom(self):
        return self.terms[0]

    def problems(self, L):
        """All violated chain conditions, as human-readable strings."""
        out = []
        if not self.terms:
            return ["chain is empty"]
        if self.terms[-1] != L.full_space():
            out.append("last term is not the whole algebra")
        for idx, term in enumerate(self.terms):
            if not L.is_subalgebra(term):
                out.append(f"term {idx} is not a subalgebra")
        for idx in range(len(self.terms) - 1):
            lo, hi = self.terms[idx], self.terms[idx + 1]
            if not (lo <= hi and lo.dim < hi.dim):
                out.append(f"term {idx} does not strictly increase into term {idx + 1}")
            elif not L.product_space(hi, lo) <= lo:
                out.append(f"term {idx} is not an ideal of term {idx + 1}")
        return out

    def is_valid(self, L):
        return not self.problems(L)

    def to_json(self):
        return [t.basis_strings() for t in self.terms]

    @classmethod
    def from_json(cls, field, ambient, doc):
        return cls(
            tuple(Subspace.from_basis_strings(field, ambient, rows) for rows in doc)
        )


def subideal_chain(L, B, max_steps=None):
    """Witness chain proving B is a subideal of L, or None.

    Runs the descending standard series K_0 = L, K_{i+1} = closure of B as an
    ideal of K_i.  If it stabilizes at B the reversed series is the chain;
    the returned chain is re-validated term by term before being handed out.
    """
    key = ("chain", B.rows)
    if max_steps is None and key in L._cache:
        return L._cache[key]
    if not L.is_subalgebra(B):
        raise NotASubalgebraError("subideal test is defined for subalgebras only")
    K = L.full_space()
    descending = [K]
    while True:
        nxt = ideal_closure(L, B, K)
        if nxt == K:
            break
        descending.append(nxt)
        K = nxt
        if max_steps is not None and len(descending) > max_steps:
            break
    result = None
    if K == B:
        chain = SubidealChain(tuple(reversed(descending)))
        bad = chain.problems(L)
        assert not bad, f"standard series produced an invalid chain: {bad}"
        result = chain
    if max_steps is None:
        # a truncated run can report None spuriously; never cache it
        L._cache[key] = result
    return result


def is_subideal(L, B):
    return subideal_chain(L, B) is not None


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WeakCIdealCertificate:
    """Witness that B is a weak c-ideal: a subideal C with L = B + C and
    B ∩ C inside an ideal of L contained in B."""

    B: Subspace
    C: Subspace
    chain: SubidealChain
    core_B: Subspace

    def problems(self, L):
        out = []
        if not L.is_subalgebra(self.B):
            out.append("B is not a subalgebra")
        if not L.is_subalgebra(self.C):
            out.append("C is not a subalgebra")
        out.extend(f"chain: {p}" for p in self.chain.problems(L))
        if self.chain.bottom != self.C:
            out.append("chain does not start at C")
        if self.B + self.C != L.full_space():
            out.append("B + C is not the whole algebra")
        if not self.core_B <= self.B:
            out.append("claimed core is not contained in B")
        if not L.is_ideal(self.core_B):
            out.append("claimed core is not an ideal of L")
        if not (self.B & self.C) <= self.core_B:
            out.append("B ∩ C is not inside the claimed core")
        return out

    def is_valid(self, L):
        return not self.problems(L)

    def to_json(self):
        return {
            "kind": "weak-c-ideal",
            "subalgebra": self.B.basis_strings(),
            "witness": self.C.basis_strings(),
            "chain": self.chain.to_json(),
            "core": self.core_B.basis_strings(),
        }

    @classmethod
    def from_json(cls, field, ambient, doc):
        get = lambda k: Subspace.from_basis_strings(field, ambient, doc[k])
        return cls(
            B=get("subalgebra"),
            C=get("witness"),
            chain=SubidealChain.from_json(field, ambient, doc["chain"]),
            core_B=get("core"),
        )


@dataclass(frozen=True)
class CIdealCertificate:
    """Witness that B is a c-ideal: an ideal C with L = B + C and B ∩ C
    inside an ideal of L contained in B."""

    B: Subspace
    C: Subspace
    core_B: Subspace

    def problems(self, L):
        out = []
        if not L.is_subalgebra(self.B):
            out.append("B is not a subalgebra")
        if not L.is_subalgebra(self.C) or not L.is_ideal(self.C):
            out.append("C is not an ideal of L")
        if self.B + self.C != L.full_space():
            out.append("B + C is not the whole algebra")
        if not self.core_B <= self.B:
            out.append("claimed core is not contained in B")
        if not L.is_ideal(self.core_B):
            out.append("claimed core is not an ideal of L")
        if not (self.B & self.C) <= self.core_B:
            out.append("B ∩ C is not inside the claimed core")
        return out

    def is_valid(self, L):
        return not self.problems(L)

    def to_weak(self, L):
        """Every ideal is a subideal, so a c-ideal witness upgrades."""
        chain = subideal_chain(L, self.C)
        assert chain is not None
        return WeakCIdealCertificate(self.B, self.C, chain, self.core_B)

    def to_json(self):
        return {
            "kind": "c-ideal",
            "subalgebra": self.B.basis_strings(),
            "witness": self.C.basis_strings(),
            "core": self.core_B.basis_strings(),
        }

    @classmethod
    def from_json(cls, field, ambient, doc):
        get = lambda k: Subspace.from_basis_strings(field, ambient, doc[k])
        return cls(B=get("subalgebra"), C=get("witness"), core_B=get("core"))


@dataclass
class Verdict:
    """Outcome of a certificate check: a certificate, or the first failed
    condition by name."""

    certificate: Optional[object]
    failed: Optional[str]

    def __bool__(self):
        return self.certificate is not None


def verify_weak_c(L, B, C):
    """Check the weak c-ideal conditions for a given candidate witness C."""
    if not L.is_subalgebra(B) or not L.is_subalgebra(C):
        raise NotASubalgebraError("verify_weak_c needs two subalgebras")
    chain = subideal_chain(L, C)
    if chain is None:
        return Verdict(None, "witness-is-not-a-subideal")
    if B + C != L.full_space():
        return Verdict(None, "sum-is-not-the-whole-algebra")
    core_B = core(L, B)
    if not (B & C) <= core_B:
        return Verdict(None, "intersection-not-inside-core")
    return Verdict(WeakCIdealCertificate(B, C, chain, core_B), None)


def verify_c(L, B, C):
    """Check the c-ideal conditions for a given candidate ideal C."""
    if not L.is_subalgebra(B) or not L.is_subalgebra(C):
        raise NotASubalgebraError("verify_c needs two subalgebras")
    if not L.is_ideal(C):
        return Verdict(None, "witness-is-not-an-ideal")
    if B + C != L.full_space():
        return Verdict(None, "sum-is-not-the-whole-algebra")
    core_B = core(L, B)
    if not (B & C) <= core_B:
        return Verdict(None, "intersection-not-inside-core")
    return Verdict(CIdealCertificate(B, C, core_B), None)


# ---------------------------------------------------------------------------
# exhaustive witness searches (finite prime fields)
# ---------------------------------------------------------------------------

def find_weak_c_witness(L, B, budget=DEFAULT_BUDGET):
    """First valid weak c-ideal witness for B in canonical lattice order,
    or None when no subalgebra works (exhaustive)."""
    key = ("weakc", B.rows)
    if key in L._cache:
        return L._cache[key]
    if not L.is_subalgebra(B):
        raise NotASubalgebraError("weak c-ideal search needs a subalgebra")
    full = L.full_space()
    core_B = core(L, B)
    result = None
    for C in subalgebras(L, budget):
        if B.dim + C.dim < L.dim:
            continue
        if B + C != full:
            continue
        if not (B & C) <= core_B:
            continue
        chain = subideal_chain(L, C)
        if chain is None:
            continue
        result = WeakCIdealCertificate(B, C, chain, core_B)
        break
    L._cache[key] = result
    return result


def find_c_witness(L, B, budget=DEFAULT_BUDGET):
    """First valid c-ideal witness for B in canonical lattice order."""
    key = ("cideal", B.rows)
    if key in L._cache:
        return L._cache[key]
    if not L.is_subalgebra(B):
        raise NotASubalgebraError("c-ideal search needs a subalgebra")
    full = L.full_space()
    core_B = core(L, B)
    result = None
    for C in ideals_of(L, budget):
        if B.dim + C.dim < L.dim:
            continue
        if B + C != full:
            continue
        if not (B & C) <= core_B:
            continue
        result = CIdealCertificate(B, C, core_B)
        break
    L._cache[key] = result
    return result


def is_weak_c_ideal(L, B, budget=DEFAULT_BUDGET):
    return find_weak_c_witness(L, B, budget) is not None


def is_c_ideal(L, B, budget=DEFAULT_BUDGET):
    return find_c_witness(L, B, budget) is not None


def subideal_complement_mod_core(L, B, budget=DEFAULT_BUDGET):
    """Subalgebra K whose image in L mod core(B) is a subideal complement
    of B's image, or None.  K contains the core by construction."""
    if not L.is_subalgebra(B):
        raise NotASubalgebraError("complement search needs a subalgebra")
    core_B = core(L, B)
    quot = L.quotient(core_B)
    Lq = quot.algebra
    Bq = quot.project_subspace(B)
    full_q = Lq.full_space()
    zero_q = Lq.zero_space()
    for Kq in subalgebras(Lq, budget):
        if Bq.dim + Kq.dim != Lq.dim:
            continue  # complements meet trivially, so dimensions add up
        if Bq + Kq != full_q:
            continue
        if (Bq & Kq) != zero_q:
            continue
        if subideal_chain(Lq, Kq) is None:
            continue
        return quot.preimage_subspace(Kq)
    return None


# ---------------------------------------------------------------------------
# series containment bounds
# ---------------------------------------------------------------------------

def min_power_in(L, K, kind):
    """Smallest 1-based series index whose term lies inside K, or None if
    even the stable term escapes K."""
    return L.series(kind).min_index_inside(K)
