import random
from fractions import Fraction

import pytest

from arithsite import conway as cw
from arithsite.bigpicture import PIC_ONE, hyperdistance, parse_class
from arithsite.conway import Letter
from arithsite.ratpoly import Mat2Q, shear


def W(text):
    return cw.parse_word(text)


def test_letter_matrices():
    assert cw.letter_matrix(Letter(2, 1)) == Mat2Q(Fraction(1, 2), Fraction(1, 2), 0, 1)
    assert cw.letter_matrix(Letter(2, 2)) == Mat2Q(2, 0, 0, 1)
    assert cw.letter_matrix(Letter(3, 0)) == Mat2Q(Fraction(1, 3), 0, 0, 1)


def test_letter_validation():
    with pytest.raises(ValueError):
        cw.letter(4, 0)
    with pytest.raises(ValueError):
        cw.letter(3, 4)


def test_meta_commute_free_free():
    # iq + j = 5 = 2*2 + 1
    assert cw.meta_commute(Letter(2, 1), Letter(3, 2)) == (Letter(3, 2), Letter(2, 1))
    prod = cw.letter_matrix(Letter(2, 1)) * cw.letter_matrix(Letter(3, 2))
    assert prod == Mat2Q(Fraction(1, 6), Fraction(5, 6), 0, 1)


def test_meta_commute_power_free():
    assert cw.meta_commute(Letter(2, 2), Letter(3, 1)) == (Letter(3, 2), Letter(2, 2))


def test_meta_commute_power_power():
    assert cw.meta_commute(Letter(2, 2), Letter(3, 3)) == (Letter(3, 3), Letter(2, 2))


def test_meta_commute_same_prime_rejected():
    with pytest.raises(ValueError, match="within a prime"):
        cw.meta_commute(Letter(2, 0), Letter(2, 1))


def test_meta_commute_exact_matrix_identity():
    # a.b = T^s.x.y holds with exact rational matrices for every letter pair
    for p in (2, 3, 5):
        for q in (2, 3, 5):
            if p == q:
                continue
            for i in range(p + 1):
                for j in range(q + 1):
                    a, b = Letter(p, i), Letter(q, j)
                    x, y, s = cw._meta_commute_shear(a, b)
                    lhs = cw.letter_matrix(a) * cw.letter_matrix(b)
                    rhs = shear(s) * cw.letter_matrix(x) * cw.letter_matrix(y)
                    assert lhs == rhs
                    if not a.is_power and not b.is_power:
                        assert s == 0


def test_normalize_sorts_across_primes():
    assert cw.normalize(W("P[3,1]*P[2,0]")) == W("P[2,0]*P[3,2]")
    assert cw.word_to_class(W("P[3,1]*P[2,0]")) == parse_class("1/6:1/3")


def test_normalize_cancels_power_free():
    assert cw.normalize(W("P[2,2]*P[2,1]")) == ()


def test_normalize_idempotent_on_normal_words():
    w = W("P[2,0]*P[2,1]*P[3,2]*P[2,2]*P[3,3]")
    assert cw.is_normal(w)
    assert cw.normalize(w) == w


def test_word_to_class_examples():
    assert cw.word_to_class(W("P[2,0]*P[3,2]")) == parse_class("1/6:1/3")
    assert cw.word_to_class(()) == PIC_ONE
    assert cw.word_to_class(W("P[2,1]*P[2,2]")) == parse_class("1:1/2")


def test_class_to_word_examples():
    assert cw.class_to_word(parse_class("1:1/2")) == W("P[2,1]*P[2,2]")
    assert cw.class_to_word(PIC_ONE) == ()
    assert cw.class_to_word(parse_class("1/6:1/3")) == W("P[2,0]*P[3,2]")


def test_delta_and_divide():
    assert cw.delta(W("P[2,0]*P[3,2]")) == 6
    assert cw.divide_left(W("P[2,1]*P[2,0]"), W("P[2,0]")) == W("P[2,1]")
    assert cw.mul(W("P[2,1]"), W("P[3,1]")) == W("P[2,1]*P[3,1]")


def test_divide_left_missing():
    assert cw.divide_left(W("P[2,1]"), W("P[3,1]")) is None
    assert cw.divide_left(W("P[2,1]*P[3,1]"), W("P[3,2]")) is None


def test_divide_left_rejects_power_words():
    with pytest.raises(ValueError, match="outside monoid C"):
        cw.divide_left(W("P[2,2]"), W("P[2,0]"))


def _random_word(rng, length, primes=(2, 3, 5), free_only=False):
    out = []
    for _ in range(length):
        p = rng.choice(primes)
        out.append(Letter(p, rng.randrange(p if free_only else p + 1)))
    return tuple(out)


def test_confluence_and_class_invariance():
    rng = random.Random(101)
    for trial in range(400):
        w = _random_word(rng, rng.randrange(0, 10))
        cls = cw.word_to_class(w)
        nf = cw.normalize(w)
        assert cw.is_normal(nf)
        assert cw.word_to_class(nf) == cls
        for s in range(3):
            assert cw.normalize(w, rng=random.Random(trial * 31 + s)) == nf


def test_roundtrip_on_free_words():
    rng = random.Random(103)
    for _ in range(300):
        w = _random_word(rng, rng.randrange(0, 9), free_only=True)
        assert cw.class_to_word(cw.word_to_class(w)) == cw.normalize(w)


def test_distinct_normal_free_words_have_distinct_classes():
    rng = random.Random(107)
    seen = {}
    for _ in range(400):
        nf = cw.normalize(_random_word(rng, rng.randrange(0, 8), free_only=True))
        cls = cw.word_to_class(nf)
        if cls in seen:
            assert seen[cls] == nf
        seen[cls] = nf


def test_left_cancellative():
    rng = random.Random(109)
    for _ in range(150):
        z = cw.normalize(_random_word(rng, rng.randrange(0, 5), free_only=True))
        x = cw.normalize(_random_word(rng, rng.randrange(0, 5), free_only=True))
        y = cw.normalize(_random_word(rng, rng.randrange(0, 5), free_only=True))
        if x != y:
            assert cw.mul(z, x) != cw.mul(z, y)
        assert cw.divide_left(cw.mul(z, x), x) == z


def test_delta_is_morphism_on_free_words():
    rng = random.Random(113)
    for _ in range(150):
        w1 = _random_word(rng, rng.randrange(0, 6), free_only=True)
        w2 = _random_word(rng, rng.randrange(0, 6), free_only=True)
        assert cw.delta(cw.mul(w1, w2)) == cw.delta(w1) * cw.delta(w2)
        assert cw.delta(w1) == hyperdistance(PIC_ONE, cw.word_to_class(w1))


def test_class_to_word_roundtrip_arbitrary_classes():
    rng = random.Random(127)
    for _ in range(120):
        x = parse_class(
            f"{rng.randint(1, 12)}/{rng.randint(1, 12)}:{rng.randint(0, 11)}/{rng.randint(1, 12)}"
        )
        w = cw.class_to_word(x)
        assert cw.is_normal(w)
        assert cw.word_to_class(w) == x
        assert cw.delta(w) == hyperdistance(PIC_ONE, x)


def test_class_to_word_multi_prime_power_block():
    assert cw.class_to_word(parse_class("6:0")) == W("P[2,2]*P[3,3]")
    assert cw.class_to_word(parse_class("2/3:1/3")) == W("P[3,1]*P[2,2]")


def test_free_then_power_does_not_reduce():
    # P[2,0]*P[2,2] is normal and has weight 4 although its class is the
    # identity: only a power letter left of a free letter cancels
    w = W("P[2,0]*P[2,2]")
    assert cw.normalize(w) == w
    assert cw.word_to_class(w) == PIC_ONE
    assert cw.delta(w) == 4


def test_word_text_roundtrip():
    for text in ("e", "P[2,1]", "P[2,0]*P[3,2]*P[5,5]"):
        assert cw.format_word(cw.parse_word(text)) == text
    assert cw.parse_word("[[2, 1], [2, 2]]") == W("P[2,1]*P[2,2]")
