"""Tests for the totient order and universal factor order machinery."""

from __future__ import annotations

from fractions import Fraction as F
from math import lcm

from zmstar import ufo
from zmstar.arith import euler_phi, is_prime
from zmstar.ufo import NeighborCase


def test_total_phi_sequence_prefix():
    seq = ufo.total_phi_sequence(14)
    assert [e.q.value for e in seq] == [2, 3, 4, 5, 8, 7, 9, 16, 11, 13, 17, 32, 19, 27]
    assert [e.index for e in seq] == list(range(1, 15))
    assert [e.totient for e in seq] == [1, 2, 2, 4, 4, 6, 6, 8, 10, 12, 16, 16, 18, 18]
    assert ufo.total_phi_sequence(1)[0].q.value == 2


def test_total_phi_sequence_structure():
    seq = ufo.total_phi_sequence(400)
    tots = [e.totient for e in seq]
    # weakly increasing, runs of equal totient have length <= 2, first of a
    # tied pair is prime
    assert tots == sorted(tots)
    run = 1
    for a, b in zip(seq, seq[1:]):
        if a.totient == b.totient:
            run += 1
            assert run <= 2
            assert a.q.alpha == 1 and is_prime(a.q.p)
            assert a.q.value < b.q.value
        else:
            run = 1
    # entries really are consecutive prime powers in this order: totients
    # match euler_phi and no prime power is skipped
    for e in seq:
        assert e.totient == euler_phi(e.q.value)


def test_ufo_sets_first_ten():
    sets = ufo.ufo_sets(10)
    expected = [(2,), (4, 6), (12,), (24, 60), (120,), (360, 840),
                (2520,), (5040,), (55440,), (720720,)]
    assert [s.elements for s in sets] == expected
    assert [s.is_doubleton for s in sets] == [False, True, False, True, False,
                                              True, False, False, False, False]


def test_ufo_sets_eleven_twelve():
    sets = ufo.ufo_sets(12)
    assert sets[10].elements == (1441440, 12252240)   # lcm with 32, with 17
    assert sets[11].elements == (24504480,)           # full prefix through 32


def test_ufo_divisibility_chain():
    sets = ufo.ufo_sets(60)
    for a, b in zip(sets, sets[1:]):
        for x in a.elements:
            assert x % 2 == 0  # all elements even
            for y in b.elements:
                assert y % x == 0
    # doubletons never adjacent
    for a, b in zip(sets, sets[1:]):
        assert not (a.is_doubleton and b.is_doubleton)


def test_ufo_doubleton_elements_incomparable():
    for s in ufo.ufo_sets(60):
        if s.is_doubleton:
            x, y = s.elements
            assert x < y
            assert y % x != 0


def test_constants_known_values():
    c = ufo.ufo_constants(10)
    assert c.mu == F(1, 48)
    assert c.sigma2 == F(13, 96)
    c = ufo.ufo_constants(8)
    assert c.mu == F(1, 40)
    assert c.sigma2 == F(1, 5)
    c = ufo.ufo_constants(6)
    assert c.mu == 0
    assert c.sigma2 == F(5, 18)
    c = ufo.ufo_constants(7)
    assert c.sigma2 == F(1, 4)
    assert c.nu2 == F(5, 36)
    # remaining low-index table
    assert ufo.ufo_constants(1).mu == F(1, 2)
    assert ufo.ufo_constants(1).sigma2 == F(1, 2)
    assert ufo.ufo_constants(2).mu == 0
    assert ufo.ufo_constants(3).mu == F(1, 4)
    assert ufo.ufo_constants(4).sigma2 == F(3, 8)
    assert ufo.ufo_constants(5).mu == F(1, 12)
    assert ufo.ufo_constants(5).sigma2 == F(1, 3)
    assert ufo.ufo_constants(11).sigma2 == F(15, 128)


def test_constants_identities():
    seq = ufo.total_phi_sequence(61)
    sets = ufo.ufo_sets(61)
    total = F(0)
    for i in range(1, 61):
        c = ufo.ufo_constants(i)
        d1 = F(1, seq[i - 1].totient)
        d2 = F(1, seq[i].totient)
        assert c.mu == d1 - d2
        assert c.nu2 == c.sigma2 - c.sigma2_21
        assert c.nu2 == d1 * (1 - d1)
        assert c.sigma2_22 == (d1 - d2) ** 2
        # mu vanishes exactly on doubletons
        assert (c.mu == 0) == sets[i - 1].is_doubleton
        total += c.mu
        assert total == 1 - d2  # telescoping partial sums


def test_constants_quad_ratios_for_double_neighbors():
    # for i=5 (d=120): the three covariance ratios and their exact relation
    c = ufo.ufo_constants(5)
    a = c.sigma2_12 / c.sigma2
    b = c.sigma2_21 / c.sigma2
    cc = c.sigma2_22 / c.sigma2
    assert (a, b, cc) == (F(7, 12), F(7, 16), F(1, 48))
    assert 0 < cc < b < a < 1
    assert 1 - a - b + cc == 0


def test_classify_low_indices():
    got = [ufo.classify(i) for i in range(1, 12)]
    assert got == [
        NeighborCase.SPECIAL_D2,        # f1={2}
        NeighborCase.DOUBLETON_SELF,    # f2={4,6}
        NeighborCase.SPECIAL_D12,       # f3={12}
        NeighborCase.DOUBLETON_SELF,    # f4={24,60}
        NeighborCase.DOUBLETON_BOTH,    # f5={120}
        NeighborCase.DOUBLETON_SELF,    # f6={360,840}
        NeighborCase.DOUBLETON_LEFT,    # f7={2520}
        NeighborCase.ALL_SINGLETON,     # f8={5040}
        NeighborCase.ALL_SINGLETON,     # f9={55440}
        NeighborCase.DOUBLETON_RIGHT,   # f10={720720}
        NeighborCase.DOUBLETON_SELF,    # f11
    ]


def test_classify_consistency():
    sets = ufo.ufo_sets(61)
    for i in range(2, 60):
        case = ufo.classify(i)
        assert case != NeighborCase.SPECIAL_D2
        if i != 3:
            assert case != NeighborCase.SPECIAL_D12
        if i == 3:
            assert case == NeighborCase.SPECIAL_D12
            continue
        if sets[i - 1].is_doubleton:
            assert case == NeighborCase.DOUBLETON_SELF
        else:
            left, right = sets[i - 2].is_doubleton, sets[i].is_doubleton
            assert case == {
                (False, False): NeighborCase.ALL_SINGLETON,
                (True, False): NeighborCase.DOUBLETON_LEFT,
                (False, True): NeighborCase.DOUBLETON_RIGHT,
                (True, True): NeighborCase.DOUBLETON_BOTH,
            }[(left, right)]
    # no two adjacent DoubletonSelf
    cases = [ufo.classify(i) for i in range(1, 60)]
    for a, b in zip(cases, cases[1:]):
        assert not (a == NeighborCase.DOUBLETON_SELF and b == NeighborCase.DOUBLETON_SELF)


def test_find_ufo_index():
    assert ufo.find_ufo_index(720720) == 10
    assert ufo.find_ufo_index(840) == 6
    assert ufo.find_ufo_index(2) == 1
    assert ufo.find_ufo_index(8) is None
    assert ufo.find_ufo_index(1) is None
    assert ufo.find_ufo_index(100) is None
    # membership is unique: scanning all elements of the first 60 sets
    seen = {}
    for s in ufo.ufo_sets(60):
        for x in s.elements:
            assert x not in seen
            seen[x] = s.index
            assert ufo.find_ufo_index(x) == s.index


def test_structural_audit():
    rep = ufo.structural_audit(2)
    assert rep.ok
    rep = ufo.structural_audit(16)
    assert rep.ok and rep.n_prime_powers == 12  # 2,3,4,5,8,7,9,16,11,13,17,32
    rep = ufo.structural_audit(10**4)
    assert rep.ok
    assert rep.n_prime_powers == 1281
    assert rep.n_sets == rep.n_prime_powers


def test_ufo_sets_match_bruteforce_lcm():
    # independent reconstruction straight from the defining recipe
    seq = [e.q.value for e in ufo.total_phi_sequence(40)]
    phis = [euler_phi(v) for v in seq]
    for i in range(1, 30):
        entry = ufo.ufo_sets(i)[-1]
        if phis[i - 1] == phis[i]:
            want = tuple(sorted((lcm(*seq[: i - 1], seq[i - 1]) if i > 1 else seq[i - 1],
                                 lcm(*seq[: i - 1], seq[i]) if i > 1 else seq[i])))
            assert entry.elements == want
        else:
            assert entry.elements == (lcm(*seq[:i]),)
