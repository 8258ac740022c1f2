import pytest
from hypothesis import given, strategies as st

from pqwitness.expansions import chop, chop_ep, ep_p_adic_expansion, p_adic_expansion
from pqwitness.numtheory import p_part, primes_upto


def test_p_adic_examples():
    e = p_adic_expansion(11, 7)
    assert (e.s, e.terms) == (4, ((1, 1),))
    e = p_adic_expansion(23, 3)
    assert (e.s, e.terms) == (2, ((1, 1), (2, 2)))
    e = p_adic_expansion(13, 13)
    assert (e.s, e.terms) == (0, ((1, 1),))


@given(st.integers(1, 10**6), st.sampled_from(primes_upto(50)))
def test_p_adic_reassembles(n, p):
    e = p_adic_expansion(n, p)
    assert e.s + sum(e.term_values()) == n
    assert all(0 < c < p for c, _ in e.terms)
    exps = [a for _, a in e.terms]
    assert exps == sorted(set(exps)) and all(a >= 1 for a in exps)


def test_chop_examples():
    c = chop(11, 7, 2)
    assert (c.residue, c.t0, c.b, c.T) == (1, 1, 4, 7)
    c = chop(10, 3, 7)
    assert (c.residue, c.t0, c.b, c.T) == (3, 1, 1, 9)
    c = chop(23, 3, 7)
    assert (c.residue, c.t0, c.b, c.T) == (2, 1, 2, 21)


def test_chop_rejects_large_primes():
    with pytest.raises(ValueError):
        chop(5, 7, 2)
    with pytest.raises(ValueError):
        chop(5, 3, 7)


def _pairs(limit):
    ps = primes_upto(limit)
    return [(p, q) for p in ps for q in ps if p != q]


def test_chop_p_part_identities():
    for n in range(3, 201):
        for p, q in _pairs(n):
            c = chop(n, p, q)
            assert c.b + c.T == n and c.T > c.residue
            for k in range(1, c.b + 1):
                assert p_part(c.T + k, p) == p_part(k, p)
            for k in range(1, c.residue + 1):
                assert p_part(c.T - k, p) == p_part(k, p)


def test_chop_b_below_twice_r():
    for n in range(3, 201):
        for p, q in _pairs(n):
            s, r = n % p, n % q
            if r >= s and r:
                assert chop(n, p, q).b < 2 * r


def test_primed_chop_shape():
    seen = 0
    for n in range(3, 201):
        for p, q in _pairs(n):
            s, r = n % p, n % q
            c = chop(n, p, q)
            if not (c.b >= q and r >= s):
                continue
            if n < 2 * (q + r):
                assert c.primed is None
                continue
            pr = c.primed
            assert pr is not None
            assert pr.t0 in (c.t0, c.t0 + 1)
            assert pr.b != pr.residue
            assert pr.b + pr.T == n and pr.T > pr.residue
            if pr.b == c.b:
                assert pr.b < pr.residue and pr.T % q
            else:
                assert pr.residue < pr.b < q + 3 * r
            seen += 1
    assert seen > 100


def test_ep_expansion_examples():
    e = ep_p_adic_expansion(10, 7, 3)
    assert (e.s, e.terms) == (1, ((3, 0),))
    e = ep_p_adic_expansion(3, 2, 1)
    assert (e.s, e.terms) == (0, ((1, 0), (1, 1)))
    e = ep_p_adic_expansion(4, 7, 1)
    assert (e.s, e.terms) == (0, ((4, 0),))
    with pytest.raises(ValueError):
        ep_p_adic_expansion(2, 7, 3)


def test_ep_expansion_keeps_zero_leading_digit():
    e = ep_p_adic_expansion(14, 7, 2)  # w = 7, leading digit zero
    assert e.terms[0] == (0, 0)
    assert e.s + sum(e.term_values()) == 14


def test_chop_ep_examples():
    c = chop_ep(3, 2, 1, 2)
    assert (c.residue, c.t0, c.b, c.T) == (1, 1, 1, 2)
    c = chop_ep(10, 7, 3, 2)
    assert (c.residue, c.t0, c.b, c.T) == (0, 0, 1, 9)
    c = chop_ep(5, 31, 5, 3)
    assert (c.residue, c.t0, c.b, c.T) == (2, 0, 0, 5)


def _ep_grid():
    for p in primes_upto(37):
        for e_p in range(1, p):
            if (p - 1) % e_p:
                continue
            for e_q in range(1, 13):
                yield p, e_p, e_q


def test_chop_ep_identities():
    for p, e_p, e_q in _ep_grid():
        for n in range(max(e_p, e_q), 201):
            c = chop_ep(n, p, e_p, e_q)
            assert c.b + c.T == n and c.T % e_p == 0 and c.T > c.residue
            for k in range(e_p, c.b + 1, e_p):
                assert p_part(c.T + k, p) == p_part(k, p)
            for k in range(e_p, c.residue + 1, e_p):
                assert p_part(c.T - k, p) == p_part(k, p)
            s, r = n % e_p, n % e_q
            if r >= s and r:
                assert c.b < 2 * r
                if c.b != r:
                    assert c.T % e_q


def test_lie_chop_differs_from_symmetric_chop():
    # with e_p = 1 the two decompositions can still disagree
    n, p, q = 11, 7, 2
    assert chop(n, p, q).b != chop_ep(n, p, 1, q).b
