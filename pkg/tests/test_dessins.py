import json
import random

import pytest

from arithsite import dessins as ds
from arithsite.dessins import FramedDessin, Passport


def test_validate_single_edge():
    ds.validate(ds.UNIT)


def test_validate_e31():
    ds.validate(ds.e_dessin(3, 1))


def test_validate_rejects_forest():
    with pytest.raises(ValueError, match="not a tree"):
        ds.validate(FramedDessin(2, (0, 1), (0, 1), 0, 0))


def test_validate_rejects_non_permutation():
    with pytest.raises(ValueError, match="not a permutation"):
        ds.validate(FramedDessin(2, (0, 0), (0, 1), 0, 0))


def test_passport_examples():
    assert ds.passport(ds.e_dessin(8, 3)) == Passport((5, 1, 1, 1), (4, 1, 1, 1, 1))
    assert ds.passport(ds.UNIT) == Passport((1,), (1,))
    assert ds.passport(ds.e_dessin(3, 1)) == Passport((2, 1), (2, 1))


def test_e_dessin_structure():
    d = ds.e_dessin(3, 1)
    assert d.alpha == (1, 0, 2) and d.beta == (2, 1, 0)
    prod = tuple(d.beta[d.alpha[e]] for e in range(3))
    assert prod == (1, 2, 0)  # single 3-cycle
    star = ds.e_dessin(4, 0)
    assert ds.passport(star) == Passport((4,), (1, 1, 1, 1))
    assert ds.e_dessin(1, 0) == ds.UNIT


def test_anatomy_of_e_dk():
    for d, k in ((3, 1), (5, 2), (8, 3)):
        a = ds.anatomy(ds.e_dessin(d, k))
        assert a.head == Passport((), (1,) * (d - k - 1))
        assert a.body == Passport((), ())
        assert a.tail == Passport((1,) * k, ())
        assert a.valency0 == d - k and a.valency1 == k + 1


def test_anatomy_single_edge():
    a = ds.anatomy(ds.UNIT)
    assert a.spine == (0,)
    assert a.head == a.body == a.tail == Passport((), ())
    assert a.valency0 == a.valency1 == 1


def test_compose_unit_laws():
    rng = random.Random(1)
    for _ in range(20):
        d = ds.random_tree_dessin(rng.randrange(1, 8), rng)
        assert ds.framed_iso(ds.compose(d, ds.UNIT), d)
        assert ds.framed_iso(ds.compose(ds.UNIT, d), d)


def test_compose_black_count():
    e31 = ds.e_dessin(3, 1)
    c = ds.compose(e31, e31)
    assert len(ds.perm_cycles(c.alpha)) == 3 * (2 - 1) + 2


def test_compose_edge_count_and_validity():
    rng = random.Random(2)
    for _ in range(30):
        t = ds.random_tree_dessin(rng.randrange(1, 7), rng)
        t2 = ds.random_tree_dessin(rng.randrange(1, 7), rng)
        c = ds.compose(t, t2)
        assert c.n == t.n * t2.n
        ds.validate(c)


def test_compose_valency_anchor():
    rng = random.Random(3)
    for _ in range(30):
        t = ds.random_tree_dessin(rng.randrange(1, 7), rng)
        t2 = ds.random_tree_dessin(rng.randrange(1, 7), rng)
        c = ds.compose(t, t2)
        at, at2, ac = ds.anatomy(t), ds.anatomy(t2), ds.anatomy(c)
        assert ac.valency0 == at.valency0 * at2.valency0
        assert ac.valency1 == at.valency1 * at2.valency1


def test_passport_compose_predict_e31_pair():
    e31 = ds.e_dessin(3, 1)
    predicted = ds.passport_compose_predict(ds.anatomy(e31), ds.passport(e31), 3)
    assert predicted.black == (4, 2, 1, 1, 1)
    assert predicted == ds.passport(ds.compose(e31, e31))


def test_passport_compose_predict_unit():
    rng = random.Random(4)
    for _ in range(10):
        t = ds.random_tree_dessin(rng.randrange(1, 8), rng)
        assert ds.passport_compose_predict(ds.anatomy(t), ds.passport(ds.UNIT), 1) == ds.passport(t)


def test_passport_compose_predict_cross_check():
    t, t2 = ds.e_dessin(8, 3), ds.e_dessin(3, 1)
    assert ds.passport_compose_predict(ds.anatomy(t), ds.passport(t2), t2.n) == ds.passport(
        ds.compose(t, t2)
    )


def test_compose_associative_up_to_framed_iso():
    rng = random.Random(5)
    for _ in range(10):
        a = ds.random_tree_dessin(rng.randrange(1, 4), rng)
        b = ds.random_tree_dessin(rng.randrange(1, 4), rng)
        c = ds.random_tree_dessin(rng.randrange(1, 4), rng)
        assert ds.framed_iso(ds.compose(ds.compose(a, b), c), ds.compose(a, ds.compose(b, c)))


def test_automorphisms_and_monodromy_single_edge():
    assert ds.automorphisms(ds.UNIT) == [(0,)]
    assert ds.monodromy_order(ds.UNIT) == 1


def _three_edge_path(frame_black, frame_white):
    # the 3-edge path w-b-w-b of the four framed realizations of x^2(3-2x)
    return FramedDessin(3, (1, 0, 2), (0, 2, 1), frame_black, frame_white)


def test_three_edge_path_automorphisms():
    auts = ds.automorphisms(_three_edge_path(0, 1))
    assert len(auts) <= 2
    # cyclic: some element generates the whole group
    n = len(auts)
    for g in auts:
        powers = {tuple(range(3))}
        cur = g
        while cur not in powers:
            powers.add(cur)
            cur = tuple(g[cur[e]] for e in range(3))
        if len(powers) == n:
            break
    else:
        raise AssertionError("no generator found")


def test_monodromy_e31():
    assert ds.monodromy_order(ds.e_dessin(3, 1)) == 6


def test_monodromy_cap():
    assert ds.monodromy_order(ds.e_dessin(6, 3), cap=5) is None


def test_monodromy_transitive():
    rng = random.Random(6)
    for _ in range(15):
        d = ds.random_tree_dessin(rng.randrange(1, 7), rng)
        orbit = {0}
        frontier = [0]
        while frontier:
            e = frontier.pop()
            for nxt in (d.alpha[e], d.beta[e]):
                if nxt not in orbit:
                    orbit.add(nxt)
                    frontier.append(nxt)
        assert orbit == set(range(d.n))


def test_automorphisms_cyclic_on_random_trees():
    rng = random.Random(7)
    for _ in range(25):
        d = ds.random_tree_dessin(rng.randrange(1, 9), rng)
        auts = ds.automorphisms(d)
        ident = tuple(range(d.n))
        found = False
        for g in auts:
            seen = set()
            cur = ident
            while cur not in seen:
                seen.add(cur)
                cur = tuple(g[cur[e]] for e in range(d.n))
            if seen == set(auts):
                found = True
                break
        assert found


def test_involution_is_involutive():
    rng = random.Random(8)
    for _ in range(20):
        d = ds.random_tree_dessin(rng.randrange(1, 8), rng)
        assert ds.framed_iso(ds.involution(ds.involution(d)), d)


def test_involution_swaps_e_dk():
    for d in range(1, 8):
        for k in range(d):
            assert ds.framed_iso(ds.involution(ds.e_dessin(d, k)), ds.e_dessin(d, d - 1 - k))


def test_three_edge_path_four_framings():
    # four framed dessins on the same path: pairwise non-isomorphic, all
    # combinatorially equivalent
    framings = [(0, 1), (0, 0), (2, 1), (2, 0)]
    dss = [_three_edge_path(fb, fw) for fb, fw in framings]
    for i in range(4):
        ds.validate(dss[i])
        for j in range(i + 1, 4):
            assert not ds.framed_iso(dss[i], dss[j])
            assert ds.combinatorial_equiv(dss[i], dss[j])


def test_colour_swapped_paths_combinatorially_equivalent():
    path = _three_edge_path(0, 1)
    swapped = FramedDessin(3, path.beta, path.alpha, 1, 0)
    assert ds.combinatorial_equiv(path, swapped)


def test_canonical_form_is_invariant():
    rng = random.Random(9)
    for _ in range(20):
        d = ds.random_tree_dessin(rng.randrange(1, 8), rng)
        c = ds.canonical_form(d)
        ds.validate(c)
        assert ds.framed_iso(c, d)
        assert ds.canonical_form(c) == c


def test_json_roundtrip():
    rng = random.Random(10)
    for _ in range(10):
        d = ds.random_tree_dessin(rng.randrange(1, 8), rng)
        assert ds.from_json(ds.to_json(d)) == d
        json.loads(ds.to_json(d))


def test_dot_output():
    dot = ds.to_dot(ds.e_dessin(3, 1))
    assert 'label="0"' in dot and 'label="1"' in dot
    assert dot.count("--") == 3
