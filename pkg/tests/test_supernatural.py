import random

import pytest

from arithsite.supernatural import (
    INF,
    Supernatural,
    adele_class_equiv,
    divides,
    format_supernatural,
    from_chain,
    in_open,
    lcm,
    mul,
    parse_supernatural,
)


def S(text):
    return parse_supernatural(text)


def test_from_chain_supremum():
    assert from_chain([2, 4, 12]) == S("2^2*3")


def test_from_chain_singleton():
    assert from_chain([1]) == Supernatural()


def test_from_chain_finite_never_infinite():
    assert from_chain([2, 4, 8, 16]) == S("2^4")
    assert from_chain([2, 4, 8, 16], limit=True) == S("2^inf")


def test_from_chain_limit_follows_ratio():
    assert from_chain([2, 4, 12], limit=True) == S("2^2*3^inf")


def test_from_chain_rejects_broken_chain():
    with pytest.raises(ValueError, match="4 does not divide 6"):
        from_chain([2, 4, 6])


def test_divides_with_infinite_exponent():
    assert divides(12, S("2^inf*3"))
    assert not divides(8, S("2^2*3"))


def test_lcm_and_mul_absorb():
    assert lcm(S("2^inf"), S("3^2")) == S("2^inf*3^2")
    assert mul(S("2^inf"), S("2")) == S("2^inf")
    assert mul(S("2^2"), S("2^3*5")) == S("2^5*5")


def test_in_open():
    assert in_open(S("2^inf"), [6, 4])
    assert not in_open(S("3^inf"), [2])
    assert in_open(Supernatural(), [1])


def test_adele_class_examples():
    assert adele_class_equiv(S("2^inf*3"), S("2^inf"))
    assert not adele_class_equiv(S("2^inf"), S("3^inf"))
    assert adele_class_equiv(Supernatural.from_int(10), Supernatural.from_int(81))


def test_finite_class_contains_one():
    rng = random.Random(2)
    for _ in range(50):
        assert adele_class_equiv(Supernatural.from_int(rng.randint(1, 10**6)), Supernatural())


def _random_supernatural(rng):
    primes = [2, 3, 5, 7, 11]
    default = rng.choice([0, 0, 0, INF])
    factors = {}
    for p in rng.sample(primes, rng.randint(0, 3)):
        factors[p] = rng.choice([1, 2, 3, INF])
    return Supernatural.from_factors({p: e for p, e in factors.items() if e != default}, default)


def test_adele_class_is_equivalence_relation():
    rng = random.Random(17)
    pool = [_random_supernatural(rng) for _ in range(40)]
    for s in pool:
        assert adele_class_equiv(s, s)
    for s in pool:
        for t in pool:
            assert adele_class_equiv(s, t) == adele_class_equiv(t, s)
            for u in pool:
                if adele_class_equiv(s, t) and adele_class_equiv(t, u):
                    assert adele_class_equiv(s, u)


def test_semigroup_laws():
    rng = random.Random(23)
    pool = [_random_supernatural(rng) for _ in range(12)]
    for s in pool:
        assert lcm(s, s) == s
        for t in pool:
            assert mul(s, t) == mul(t, s)
            assert lcm(s, t) == lcm(t, s)
            for u in pool:
                assert mul(mul(s, t), u) == mul(s, mul(t, u))
                assert lcm(lcm(s, t), u) == lcm(s, lcm(t, u))


def test_divides_partial_order():
    rng = random.Random(29)
    pool = [_random_supernatural(rng) for _ in range(15)]
    for s in pool:
        assert divides(s, s)
        for t in pool:
            if divides(s, t) and divides(t, s):
                assert s == t
            for u in pool:
                if divides(s, t) and divides(t, u):
                    assert divides(s, u)


def test_from_chain_monotone():
    rng = random.Random(31)
    for _ in range(40):
        chain = [rng.randint(1, 6)]
        for _ in range(4):
            chain.append(chain[-1] * rng.randint(1, 6))
        assert divides(from_chain(chain[:3]), from_chain(chain))


def test_text_roundtrip():
    for text in ("2^inf*3^2*[default=0]", "[default=0]", "2*3^2*[default=0]", "5^2*[default=inf]"):
        assert format_supernatural(parse_supernatural(text)) == text
    assert parse_supernatural("12") == S("2^2*3")
