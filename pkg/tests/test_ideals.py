"""Cores, closures, subideal chains and the two certificate kinds.

The enumeration-backed oracles here never call the functions under test:
the core oracle sums enumerated ideals directly, and the subideal oracle
does a plain recursive search over one-step extensions.
"""

import json

import pytest

from lieideals.corpus import (
    almost_abelian,
    heisenberg,
    sl2,
    two_dim_nonabelian,
)
from lieideals.errors import (
    EnumerationUnsupportedError,
    NotASubalgebraError,
    NotContainedError,
)
from lieideals.exactfield import GF, QQ
from lieideals.ideals import (
    CIdealCertificate,
    SubidealChain,
    WeakCIdealCertificate,
    core,
    find_c_witness,
    find_weak_c_witness,
    ideal_closure,
    ideals_of,
    is_c_ideal,
    is_subideal,
    is_weak_c_ideal,
    min_power_in,
    subalgebras,
    subideal_chain,
    subideal_complement_mod_core,
    verify_c,
    verify_weak_c,
)
from lieideals.liecore import DERIVED, LOWER_CENTRAL


def heis(f):
    return heisenberg(f).algebra


def brute_core(L, B):
    """Largest ideal inside B, as the sum of all enumerated ideals below B."""
    total = L.zero_space()
    for I in ideals_of(L):
        if I <= B:
            total = total + I
    return total


def brute_subideal(L, S, memo=None):
    """Recursive subideal decision over one-step extensions only."""
    if memo is None:
        memo = {}
    if S.rows in memo:
        return memo[S.rows]
    if S.is_full():
        return True
    ok = any(
        S < T and L.product_space(T, S) <= S and brute_subideal(L, T, memo)
        for T in subalgebras(L)
    )
    memo[S.rows] = ok
    return ok


# -- lattice primitives -----------------------------------------------------


def test_subalgebra_and_ideal_counts_heisenberg_gf2():
    L = heis(GF(2))
    subs = subalgebras(L)
    # zero, seven lines, the three planes containing the center, and L
    assert len(subs) == 12
    assert [S.dim for S in subs] == [0] + [1] * 7 + [2] * 3 + [3]
    ids = ideals_of(L)
    # zero, the center, the three planes above it, and L
    assert len(ids) == 6
    assert subalgebras(L) is subs  # memoized on the algebra


def test_enumeration_refuses_infinite_fields():
    L = heis(QQ)
    with pytest.raises(EnumerationUnsupportedError):
        subalgebras(L)


# -- core -------------------------------------------------------------------


def test_core_known_values():
    N = two_dim_nonabelian(GF(3)).algebra
    x_line = N.span([(1, 0)])
    y_line = N.span([(0, 1)])
    assert core(N, x_line).is_zero()
    assert core(N, y_line) == y_line
    L = heis(QQ)
    assert core(L, L.span([(1, 0, 0)])).is_zero()
    assert core(L, L.span([(1, 0, 0), (0, 0, 1)])) == L.span(
        [(1, 0, 0), (0, 0, 1)]
    )
    assert core(L, L.full_space()).is_full()
    assert core(L, L.zero_space()).is_zero()


def test_core_requires_a_subalgebra():
    L = heis(QQ)
    with pytest.raises(NotASubalgebraError):
        core(L, L.span([(1, 0, 0), (0, 1, 0)]))


@pytest.mark.parametrize(
    "built",
    [
        heisenberg(GF(2)),
        two_dim_nonabelian(GF(3)),
        almost_abelian(GF(2), 3),
        sl2(GF(3)),
    ],
    ids=["heis2", "nonab3", "almost2", "sl2-3"],
)
def test_core_matches_enumerated_ideal_sum(built):
    L = built.algebra
    for B in subalgebras(L):
        got = core(L, B)
        assert got == brute_core(L, B)
        assert L.is_ideal(got) and got <= B


# -- ideal closure and subideal chains --------------------------------------


def test_ideal_closure_heisenberg():
    L = heis(GF(5))
    e1 = L.span([(1, 0, 0)])
    assert ideal_closure(L, e1, L.full_space()) == L.span(
        [(1, 0, 0), (0, 0, 1)]
    )
    plane = L.span([(1, 0, 0), (0, 0, 1)])
    assert ideal_closure(L, e1, plane) == e1  # the plane centralizes e1
    with pytest.raises(NotContainedError):
        ideal_closure(L, L.span([(0, 1, 0)]), e1)


def test_subideal_chain_literal_heisenberg():
    L = heis(GF(2))
    e1 = L.span([(1, 0, 0)])
    chain = subideal_chain(L, e1)
    assert chain is not None
    assert chain.terms == (e1, L.span([(1, 0, 0), (0, 0, 1)]), L.full_space())
    assert chain.bottom == e1
    assert chain.is_valid(L)
    assert subideal_chain(L, e1) is chain  # cached


def test_subideal_chain_none_for_self_normalizing_line():
    N = two_dim_nonabelian(QQ).algebra
    assert subideal_chain(N, N.span([(1, 0)])) is None
    assert not is_subideal(N, N.span([(1, 0)]))
    assert is_subideal(N, N.span([(0, 1)]))


def test_subideal_chain_trivial_ends():
    L = heis(GF(3))
    whole = subideal_chain(L, L.full_space())
    assert whole.terms == (L.full_space(),)
    zero = subideal_chain(L, L.zero_space())
    assert zero.terms == (L.zero_space(), L.full_space())
    with pytest.raises(NotASubalgebraError):
        subideal_chain(L, L.span([(1, 0, 0), (0, 1, 0)]))


def test_truncated_chain_search_is_not_cached():
    L = heis(GF(2))
    e1 = L.span([(1, 0, 0)])
    assert subideal_chain(L, e1, max_steps=1) is None
    assert subideal_chain(L, e1) is not None


@pytest.mark.parametrize(
    "built",
    [
        heisenberg(GF(2)),
        two_dim_nonabelian(GF(3)),
        almost_abelian(GF(2), 3),
        sl2(GF(2)),
        sl2(GF(3)),
    ],
    ids=["heis2", "nonab3", "almost2", "sl2-2", "sl2-3"],
)
def test_subideal_chain_matches_recursive_search(built):
    L = built.algebra
    memo = {}
    for S in subalgebras(L):
        chain = subideal_chain(L, S)
        assert (chain is not None) == brute_subideal(L, S, memo)
        if chain is not None:
            assert chain.problems(L) == []
            assert chain.bottom == S


def test_chain_problem_strings():
    L = heis(QQ)
    e1 = L.span([(1, 0, 0)])
    mid = L.span([(1, 0, 0), (0, 0, 1)])
    assert SubidealChain(()).problems(L) == ["chain is empty"]
    assert SubidealChain((e1, mid)).problems(L) == [
        "last term is not the whole algebra"
    ]
    bad_mid = SubidealChain((e1, L.span([(1, 0, 0), (0, 1, 0)]), L.full_space()))
    probs = bad_mid.problems(L)
    assert "term 1 is not a subalgebra" in probs
    assert "term 0 is not an ideal of term 1" in probs
    repeat = SubidealChain((e1, e1, L.full_space()))
    assert "term 0 does not strictly increase into term 1" in repeat.problems(L)
    not_ideal = SubidealChain((L.span([(0, 1, 0)]), L.full_space()))
    assert not_ideal.problems(L) == ["term 0 is not an ideal of term 1"]


def test_chain_json_round_trip():
    L = heis(GF(2))
    chain = subideal_chain(L, L.span([(1, 0, 0)]))
    doc = json.loads(json.dumps(chain.to_json()))
    back = SubidealChain.from_json(GF(2), 3, doc)
    assert back == chain
    assert back.is_valid(L)


# -- verification against supplied witnesses --------------------------------


def test_verify_weak_c_failure_names():
    L = heis(QQ)
    e1 = L.span([(1, 0, 0)])
    N = two_dim_nonabelian(QQ).algebra
    x_line = N.span([(1, 0)])
    assert verify_weak_c(N, x_line, x_line).failed == "witness-is-not-a-subideal"
    assert (
        verify_weak_c(L, e1, L.span([(1, 0, 0), (0, 0, 1)])).failed
        == "sum-is-not-the-whole-algebra"
    )
    v = verify_weak_c(L, e1, L.full_space())
    assert v.failed == "intersection-not-inside-core"
    assert not v
    with pytest.raises(NotASubalgebraError):
        verify_weak_c(L, e1, L.span([(1, 0, 0), (0, 1, 0)]))


def test_verify_c_accepts_and_rejects():
    L = heis(QQ)
    e2 = L.span([(0, 1, 0)])
    good = verify_c(L, e2, L.span([(1, 0, 0), (0, 0, 1)]))
    assert good
    assert good.failed is None
    cert = good.certificate
    assert isinstance(cert, CIdealCertificate)
    assert cert.problems(L) == []
    assert cert.core_B.is_zero()
    bad = verify_c(L, L.span([(0, 1, 0), (0, 0, 1)]), L.span([(1, 0, 0)]))
    assert bad.failed == "witness-is-not-an-ideal"


def test_c_certificate_upgrades_to_weak():
    L = heis(QQ)
    e2 = L.span([(0, 1, 0)])
    cert = verify_c(L, e2, L.span([(1, 0, 0), (0, 0, 1)])).certificate
    weak = cert.to_weak(L)
    assert isinstance(weak, WeakCIdealCertificate)
    assert weak.problems(L) == []
    assert weak.chain.bottom == weak.C


def test_certificate_problem_strings_after_tampering():
    L = almost_abelian(GF(2), 3).algebra
    x_line = L.span([(1, 0, 0)])
    cert = find_weak_c_witness(L, x_line)
    assert cert is not None and cert.problems(L) == []
    wrong_core = WeakCIdealCertificate(
        cert.B, cert.C, cert.chain, L.full_space()
    )
    assert "claimed core is not contained in B" in wrong_core.problems(L)
    y1 = L.span([(0, 1, 0)])
    not_ideal_core = WeakCIdealCertificate(cert.B, cert.C, cert.chain, cert.B)
    probs = not_ideal_core.problems(L)
    assert "claimed core is not an ideal of L" in probs
    short = WeakCIdealCertificate(cert.B, y1, cert.chain, cert.core_B)
    probs = short.problems(L)
    assert "chain does not start at C" in probs
    assert "B + C is not the whole algebra" in probs


def test_weak_certificate_json_round_trip():
    L = almost_abelian(GF(3), 3).algebra
    cert = find_weak_c_witness(L, L.span([(1, 0, 0)]))
    doc = json.loads(json.dumps(cert.to_json()))
    assert doc["kind"] == "weak-c-ideal"
    assert set(doc) == {"kind", "subalgebra", "witness", "chain", "core"}
    back = WeakCIdealCertificate.from_json(GF(3), 3, doc)
    assert back == cert
    assert back.problems(L) == []


def test_c_certificate_json_round_trip():
    L = heis(GF(2))
    cert = find_c_witness(L, L.span([(0, 1, 0)]))
    doc = json.loads(json.dumps(cert.to_json()))
    assert doc["kind"] == "c-ideal"
    back = CIdealCertificate.from_json(GF(2), 3, doc)
    assert back == cert and back.is_valid(L)


# -- exhaustive searches ----------------------------------------------------


def test_search_is_canonical_and_deterministic():
    outs = []
    for _ in range(2):
        L = heis(GF(3))
        docs = [
            find_weak_c_witness(L, S).to_json()
            if find_weak_c_witness(L, S)
            else None
            for S in subalgebras(L)
        ]
        outs.append(json.dumps(docs))
    assert outs[0] == outs[1]


def test_full_subalgebra_gets_the_zero_witness():
    L = heis(GF(2))
    cert = find_weak_c_witness(L, L.full_space())
    assert cert.C.is_zero()
    assert cert.chain.terms == (L.zero_space(), L.full_space())


def test_simple_algebra_admits_only_trivial_weak_c_ideals():
    L = sl2(GF(3)).algebra
    for S in subalgebras(L):
        expected = S.is_zero() or S.is_full()
        assert is_weak_c_ideal(L, S) == expected


def test_every_ideal_is_a_c_ideal_and_weak_c_ideal():
    L = heis(GF(2))
    for I in ideals_of(L):
        assert is_c_ideal(L, I)
        assert is_weak_c_ideal(L, I)


def test_search_caches_results():
    L = heis(GF(2))
    B = L.span([(1, 0, 0)])
    assert find_weak_c_witness(L, B) is find_weak_c_witness(L, B)
    assert find_c_witness(L, B) is find_c_witness(L, B)


def test_search_requires_a_subalgebra():
    L = heis(GF(2))
    plane = L.span([(1, 0, 0), (0, 1, 0)])
    with pytest.raises(NotASubalgebraError):
        find_weak_c_witness(L, plane)
    with pytest.raises(NotASubalgebraError):
        find_c_witness(L, plane)
    with pytest.raises(NotASubalgebraError):
        subideal_complement_mod_core(L, plane)


@pytest.mark.parametrize(
    "built",
    [heisenberg(GF(2)), almost_abelian(GF(3), 3), sl2(GF(3))],
    ids=["heis2", "almost3", "sl2-3"],
)
def test_complement_mod_core_matches_witness_search(built):
    L = built.algebra
    for B in subalgebras(L):
        K = subideal_complement_mod_core(L, B)
        cert = find_weak_c_witness(L, B)
        assert (K is None) == (cert is None)
        if K is not None:
            core_B = core(L, B)
            assert core_B <= K
            assert B + K == L.full_space()
            assert (B & K) <= core_B
            assert verify_weak_c(L, B, K)


# -- series containment -----------------------------------------------------


def test_min_power_in_examples():
    L = heis(GF(3))
    assert min_power_in(L, L.center(), DERIVED) == 2
    assert min_power_in(L, L.zero_space(), LOWER_CENTRAL) == 3
    N = two_dim_nonabelian(QQ).algebra
    assert min_power_in(N, N.span([(0, 1)]), LOWER_CENTRAL) == 2
    assert min_power_in(N, N.zero_space(), LOWER_CENTRAL) is None
    S = sl2(GF(2)).algebra
    assert min_power_in(S, S.full_space(), DERIVED) == 1
    assert min_power_in(S, S.zero_space(), DERIVED) is None
