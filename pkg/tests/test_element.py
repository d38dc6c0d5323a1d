import pytest

from brinthompson import (
    Pattern,
    compose,
    embed_V_into_nV,
    equals,
    expand_element,
    identity_element,
    invert,
    make_element,
    power,
    random_element,
    reduce,
)
from brinthompson.dynamics import agree, apply, sample_points
from brinthompson.element import (
    Element,
    compose_perm,
    invert_perm,
    is_identity,
    perm_cycles,
    perm_from_cycles,
    perm_order,
)
from brinthompson.errors import ArityMismatch, ElementError, OverlapError
from helpers import rand2
from oracles import NaiveV, naive_compose, naive_power, reduced_leaf_count

PTS2 = sample_points(11, 50, 2)


def naive(f):
    return NaiveV.from_words([b[0] for b in f.domain.blocks], [b[0] for b in f.range.blocks], f.sigma)


# -- permutations -----------------------------------------------------------------


def test_perm_helpers():
    p = perm_from_cycles([(1, 2, 3)], 4)
    assert p == (1, 2, 0, 3)
    assert perm_cycles(p) == [(1, 2, 3)]
    assert perm_order(p) == 3
    assert compose_perm(p, invert_perm(p)) == (0, 1, 2, 3)
    with pytest.raises(ElementError):
        perm_from_cycles([(1, 5)], 4)


# -- construction ------------------------------------------------------------------


def test_make_element_validates():
    with pytest.raises(OverlapError):
        make_element(Pattern.of("e", "0"), Pattern.of("0", "1"))
    with pytest.raises(ElementError):
        make_element(Pattern.of("0", "1"), Pattern.of("0", "10", "11"))
    with pytest.raises(ElementError):
        make_element(Pattern.of("0", "1"), Pattern.of("0", "1"), (0, 0))
    with pytest.raises(ArityMismatch):
        make_element(Pattern.of("0", "1"), Pattern.of("0,e", "1,e"))


def test_identity_and_is_identity(A):
    e = identity_element(2)
    assert is_identity(e)
    assert not is_identity(A)
    with pytest.raises(ElementError):
        identity_element(0)


# -- inverse and expansion -----------------------------------------------------------


def test_invert_examples(A, swap, coord_swap):
    inv = invert(A)
    assert inv.domain == A.range and inv.range == A.domain
    assert equals(invert(swap), swap)
    assert equals(invert(coord_swap), coord_swap)
    assert is_identity(reduce(compose(A, inv)))


def test_invert_twisted_matches_dynamics():
    for s in range(30):
        f = rand2(s, 3, twisted=True)
        g = invert(f)
        for x in PTS2[:10]:
            assert apply(g, apply(f, x)) == x


def test_expand_untwisted(A):
    e = expand_element(A, 2, 1)
    assert e.domain.blocks == (("0",), ("10",), ("110",), ("111",))
    assert e.range.blocks == (("00",), ("01",), ("10",), ("11",))
    assert equals(e, A)


def test_expand_twisted_follows_twist(coord_swap):
    # splitting x on the domain side must split y on the range side
    e = expand_element(coord_swap, 0, 1)
    assert e.domain.blocks == (("0", ""), ("1", ""))
    assert e.range.blocks == (("", "0"), ("", "1"))
    assert agree(e, coord_swap, PTS2)


def test_expand_bad_arguments(A):
    with pytest.raises(ElementError):
        expand_element(A, 3, 1)
    with pytest.raises(ElementError):
        expand_element(A, 0, 2)


def test_expansion_preserves_action():
    for s in range(40):
        f = rand2(s, 3, twisted=s % 2 == 1)
        e = expand_element(f, s % len(f), 1 + s % 2)
        assert agree(e, f, PTS2)
        assert equals(e, f)


# -- composition ----------------------------------------------------------------------


def test_compose_A_squared(A):
    f = compose(A, A)
    assert f.domain.block_set() == {("0",), ("10",), ("110",), ("111",)}
    assert f.range.block_set() == {("000",), ("001",), ("01",), ("1",)}
    oracle = naive_compose(naive(A), naive(A))
    assert naive(f).pieces == oracle.pieces


def test_compose_untwisted_v_matches_interval_oracle():
    for s in range(60):
        f = random_element(s, 1, 4)
        g = random_element(s + 500, 1, 4)
        fg = compose(f, g)
        assert naive(fg).pieces == naive_compose(naive(f), naive(g)).pieces
        assert len(reduce(fg)) == reduced_leaf_count(naive(fg))


def test_compose_matches_dynamics():
    for s in range(200):
        f, g = rand2(s, 3, s % 2 == 0), rand2(s + 3000, 3, s % 2 == 0)
        fg = compose(f, g)
        for x in PTS2[:8]:
            assert apply(fg, x) == apply(g, apply(f, x))


def test_compose_associative():
    for s in range(30):
        f, g, h = rand2(s, 3, True), rand2(s + 1, 3, True), rand2(s + 2, 3, True)
        assert equals(compose(compose(f, g), h), compose(f, compose(g, h)))


def test_compose_with_identity(A2):
    e = identity_element(2)
    assert compose(e, A2) is A2
    assert compose(A2, e) is A2
    with pytest.raises(ArityMismatch):
        compose(A2, identity_element(3))


def test_twist_composition_direction(coord_swap):
    # (x, y) -> (y, x) then split-swap on x: check the triple and the action
    shift = make_element(Pattern.of("0,e", "1,e"), Pattern.of("1,e", "0,e"))
    for f, g in ((coord_swap, shift), (shift, coord_swap)):
        fg = compose(f, g)
        assert agree(fg, Element.from_triples(fg.triples()), PTS2)
        for x in PTS2:
            assert apply(fg, x) == apply(g, apply(f, x))


# -- reduction and equality --------------------------------------------------------------


def test_reduce_A_powers(A):
    for k in range(1, 13):
        assert len(power(A, k)) == k + 2
    assert len(reduce(compose(A, invert(A)))) == 1


def test_reduce_is_idempotent_and_equal():
    for s in range(100):
        f = compose(rand2(s, 3, True), rand2(s + 99, 3, True))
        r = reduce(f)
        assert equals(r, f)
        assert reduce(r) == r
        assert len(r) <= len(f)


def test_reduce_merges_siblings_in_2d():
    p = Pattern.of("0,0", "0,1", "1,0", "1,1")
    f = make_element(p, p)
    assert is_identity(reduce(f)) and len(reduce(f)) == 1


def test_equals_matches_dynamics():
    hits = 0
    for s in range(500):
        f = rand2(s, 2)
        g = rand2(s % 37, 2) if s % 3 else compose(rand2(s, 2), identity_element(2))
        e = equals(f, g)
        a = agree(f, g, PTS2)
        assert not e or a
        if a and not e:
            hits += 1  # sample agreement without equality would be a missed split
        assert equals(f, f)
    assert hits == 0


def test_equals_symmetry_twisted():
    for s in range(50):
        f = rand2(s, 3, True)
        g = expand_element(expand_element(f, 0, 2), 1, 1)
        assert equals(f, g) and equals(g, f)


# -- powers and embedding --------------------------------------------------------------------


def test_power_matches_naive(A):
    for k in (1, 2, 5):
        assert naive(power(A, k, False)).pieces == naive_power(naive(A), k).pieces
    assert is_identity(power(A, 0))
    with pytest.raises(ElementError):
        power(A, -1)


def test_power_reduced_and_unreduced_agree():
    for s in range(20):
        f = rand2(s, 2, True)
        assert equals(power(f, 4, True), power(f, 4, False))


def test_embedding_is_homomorphism():
    for s in range(100):
        u, v = random_element(s, 1, 3), random_element(s + 1234, 1, 3)
        for axis in (1, 2):
            lhs = embed_V_into_nV(compose(u, v), axis, 2)
            rhs = compose(embed_V_into_nV(u, axis, 2), embed_V_into_nV(v, axis, 2))
            assert equals(lhs, rhs)


def test_embedding_errors(A):
    with pytest.raises(ArityMismatch):
        embed_V_into_nV(embed_V_into_nV(A, 1, 2), 1, 3)
    with pytest.raises(ElementError):
        embed_V_into_nV(A, 3, 2)


def test_group_axioms_sampled():
    e = identity_element(2)
    for s in range(40):
        f = rand2(s, 3, True)
        assert is_identity(reduce(compose(f, invert(f))))
        assert is_identity(reduce(compose(invert(f), f)))
        assert equals(compose(f, e), f) and equals(compose(e, f), f)
