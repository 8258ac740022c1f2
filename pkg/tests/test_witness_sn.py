from itertools import combinations

import pytest

from pqwitness.numtheory import primes_upto
from pqwitness.partitions import (
    AlmostHookSpec,
    almost_hook_degree,
    degree,
    is_p_principal_alt,
    parse_exponential,
    sign,
)
from pqwitness.witness_sn import (
    Constituent,
    Smallness,
    build_symmetric,
    classify_small_intersection,
    linear_only_triples,
    witness_alternating,
    witness_symmetric,
)


def pairs(n):
    return list(combinations(primes_upto(n), 2))


def test_symmetric_examples():
    w = witness_symmetric(9, 3, 2)
    assert (w.partition, w.case_tag) == (sign(9), "Sign")
    w = witness_symmetric(10, 3, 7)
    assert (str(w.partition), w.case_tag) == ("1^5,2,3", "IIa")
    assert degree(w.partition) == 160
    w = witness_symmetric(23, 3, 7)
    assert (str(w.partition), w.case_tag) == ("1^21,2", "I")
    w = witness_symmetric(11, 2, 3)
    assert (str(w.partition), w.case_tag) == ("1^5,3^2", "IIbb")


def test_symmetric_swaps_primes_to_make_r_at_least_s():
    w = witness_symmetric(10, 7, 3)
    assert w.primes_swapped and (w.p, w.q) == (3, 7)
    assert str(w.partition) == "1^5,2,3"


@pytest.mark.parametrize("args", [(2, 2, 3), (5, 3, 3), (5, 7, 2), (6, 4, 5)])
def test_symmetric_rejects_bad_input(args):
    with pytest.raises(ValueError):
        witness_symmetric(*args)


def test_sign_tag_exactly_when_both_residues_small():
    for n in range(3, 61):
        for p, q in pairs(n):
            w = witness_symmetric(n, p, q)
            assert (w.case_tag == "Sign") == (max(n % p, n % q) <= 1)


def test_all_case_tags_are_reached():
    tags = {witness_symmetric(n, p, q).case_tag for n in range(3, 61) for p, q in pairs(n)}
    assert tags == {"Sign", "I", "IIa", "IIb", "IIbb", "IIIa", "IIIb"}


def test_non_sign_witnesses_are_almost_hooks():
    for n in range(3, 61):
        for p, q in pairs(n):
            w = build_symmetric(n, p, q)
            if w.case_tag == "Sign":
                continue
            parts = w.partition.parts
            # (1^{n-k-l-1}, k+1, l): the two largest rows give l and k + 1
            spec = AlmostHookSpec(n, parts[1] - 1, parts[0])
            assert spec.partition() == w.partition, (n, p, q, parts)
            assert almost_hook_degree(spec) == degree(w.partition)


def test_alternating_examples():
    w = witness_alternating(9, 3, 2)
    assert str(w.partition) == "1^4,5" and w.constituent is Constituent.PLUS
    assert w.degree == 35
    w = witness_alternating(15, 3, 5)
    assert w.partition == parse_exponential("1,14")
    assert (w.constituent, w.degree, w.case_tag) == (Constituent.FULL, 14, "Case1")
    w = witness_alternating(10, 3, 7)
    assert (str(w.partition), w.constituent, w.degree) == ("1^5,2,3", Constituent.FULL, 160)


def test_alternating_witnesses_for_all_small_n():
    tags = set()
    for n in range(4, 61):
        for p, q in pairs(n):
            w = witness_alternating(n, p, q)
            tags.add(w.case_tag)
            assert is_p_principal_alt(w.partition, p) and is_p_principal_alt(w.partition, q)
            split = w.constituent is not Constituent.FULL
            assert split == w.partition.is_self_conjugate()
    assert {"FromSym", "Case1", "Case2_1", "Case2_2", "Case2_4", "Case3_1"} <= tags


def test_case_three_branches():
    # n = 7 with {2,3}: n = 3 mod 4, other prime 3, k = 1, m~ = 2
    assert witness_alternating(7, 2, 3).case_tag in ("Case3_3a", "Case3_1")
    assert witness_alternating(11, 2, 5).case_tag == "Case3_2"
    assert witness_alternating(13, 2, 3).case_tag == "Case3_1"
    # n = 3 * 10 + 1 = 31, 3 | m~ - 1 = 9, n - 3 = 28 has 2-part 4
    assert witness_alternating(31, 2, 3).case_tag == "Case3_3b"
    found = {witness_alternating(n, 2, 3).case_tag for n in range(4, 200)
             if n % 2 == 1 and n % 3 == 1}
    assert {"Case3_1", "Case3_3a", "Case3_3b", "Case3_3c"} <= found


def test_case_two_three():
    # n = 2^a = q^k + 1 with q odd
    for n, q in ((4, 3), (8, 7), (32, 31)):
        w = witness_alternating(n, 2, q)
        assert w.case_tag == "Case2_3" and w.constituent is Constituent.PLUS
        assert w.partition == parse_exponential(f"1^{n // 2 - 2},2,{n // 2}")


def test_classification_examples():
    assert classify_small_intersection(9, 3, 2) is Smallness.LINEAR_ONLY
    assert classify_small_intersection(8, 7, 2) is Smallness.LINEAR_ONLY
    assert classify_small_intersection(10, 7, 3) is Smallness.LARGER
    with pytest.raises(ValueError):
        classify_small_intersection(9, 2, 3)


def test_linear_only_triples():
    assert linear_only_triples(40) == [(4, 3, 2), (5, 5, 2), (8, 7, 2), (9, 3, 2),
                                       (17, 17, 2), (32, 31, 2)]
    assert linear_only_triples(9) == [(4, 3, 2), (5, 5, 2), (8, 7, 2), (9, 3, 2)]
    assert linear_only_triples(4) == [(4, 3, 2)]
