import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strang.orders import (
    CornerDescriptor,
    Density,
    Fin,
    NonScatteredOperand,
    OmegaProd,
    OmegaStarProd,
    One,
    Shuffle,
    Sum,
    Zero,
    corner_combine,
    density_of_scattered_term,
    dot_sum_all,
    dot_sum_density,
    msb_density_combine,
    normalize_term,
    omega_mult_density,
    term_dot_sum,
    term_text,
)

E = Density.empty()
INF = Density.infinite()
V = Density.val


def test_density_ordering():
    assert E < V(0, 0) < V(0, 5) < V(1, 0) < V(1, 9) < V(2, 0) < INF


def test_density_render_parse_roundtrip():
    for d in [E, V(0, 0), V(0, 7), V(1, 0), V(1, 1), V(2, 0), V(3, 4), INF]:
        assert Density.parse(d.render()) == d
    assert V(1, 1).render() == "w+1"
    assert V(2, 0).render() == "w*2"
    assert V(0, 4).render() == "4"
    assert E.render() == "-1"
    assert INF.render() == "INF"


def test_dot_sum_examples():
    assert dot_sum_density(V(1, 1), V(1, 2)) == V(1, 3)
    assert dot_sum_density(E, V(2, 0)) == V(2, 0)
    assert dot_sum_density(V(2, 5), V(1, 9)) == V(2, 5)
    with pytest.raises(NonScatteredOperand):
        dot_sum_density(INF, V(0, 0))


def test_omega_mult_examples():
    assert omega_mult_density(V(0, 3)) == V(1, 0)
    assert omega_mult_density(E) == E
    assert omega_mult_density(V(1, 7)) == V(2, 0)
    with pytest.raises(NonScatteredOperand):
        omega_mult_density(INF)


def test_corner_combine_examples():
    assert corner_combine(CornerDescriptor((), (V(0, 4),), ())) == V(0, 4)
    assert corner_combine(
        CornerDescriptor((), (V(1, 1),), (V(1, 0), V(0, 2)))
    ) == V(2, 0)
    # w^star + w is the integers: one condensation class at rank 1
    assert corner_combine(
        CornerDescriptor((V(0, 0),), (E,), (V(0, 0),))
    ) == V(1, 0)


def test_msb_density_combine_examples():
    middles = [V(1, 1), E, V(0, 3), V(0, 3)]
    corners = [V(2, 0), V(1, 0), V(1, 0), V(1, 0)]
    assert msb_density_combine(middles, corners) == V(2, 0)
    assert msb_density_combine([E] * 4, [E] * 4) == E
    # dot sums identify the shared pivot endpoint, so four singleton
    # blocks collapse to the pivot alone; disjoint 4-point chains come
    # out of four 2-point blocks instead
    assert msb_density_combine([V(0, 0)] * 4, [E] * 4) == V(0, 0)
    assert msb_density_combine([V(0, 1)] * 4, [E] * 4) == V(0, 4)


densities = st.one_of(
    st.just(E),
    st.builds(V, st.integers(0, 4), st.integers(0, 6)),
)


@given(densities, densities)
def test_dot_sum_monotone(d1, d2):
    assert dot_sum_density(d1, d2) >= max(d1, d2)


@given(st.lists(densities, min_size=0, max_size=6), st.randoms())
def test_dot_sum_permutation_invariance(ds, rng):
    shuffled = list(ds)
    rng.shuffle(shuffled)
    assert dot_sum_all(ds) == dot_sum_all(shuffled)


@given(densities)
def test_omega_mult_is_limit(d):
    out = omega_mult_density(d)
    if not d.is_empty:
        assert out.part == 0 and out.rank >= 1


@given(
    st.lists(densities, max_size=4),
    st.lists(densities, max_size=4),
    st.lists(densities, max_size=4),
)
def test_corner_combine_rank_bound(minus, mid, plus):
    ranks = [d.rank for d in minus + mid + plus if not d.is_empty]
    bound = max(ranks, default=0)
    assert corner_combine(CornerDescriptor(minus, mid, plus)) < V(bound + 2, 0)


# --- term evaluation -------------------------------------------------------

w = OmegaProd(One())
w_star = OmegaStarProd(One())


def test_density_of_terms_finite():
    assert density_of_scattered_term(Fin(5)) == V(0, 4)
    assert density_of_scattered_term(Zero()) == E
    assert density_of_scattered_term(One()) == V(0, 0)


def test_density_of_terms_basic_infinite():
    assert density_of_scattered_term(w) == V(1, 0)
    assert density_of_scattered_term(w_star) == V(1, 0)
    assert density_of_scattered_term(Sum(w, w_star)) == V(1, 1)
    # zeta = w^star + w condenses to a single class
    assert density_of_scattered_term(Sum(w_star, w)) == V(1, 0)
    assert density_of_scattered_term(Sum(w, w)) == V(1, 1)
    assert density_of_scattered_term(Sum(w, Fin(3), w)) == V(1, 1)
    # the three middle points merge with neither limit: three classes
    assert density_of_scattered_term(Sum(w, Fin(3), w_star)) == V(1, 2)


def test_density_of_terms_rank_two():
    # (w+w^star)*w: blocks of w+w^star stacked w times
    t = OmegaProd(Sum(w, w_star))
    assert density_of_scattered_term(t) == V(2, 0)
    t2 = OmegaStarProd(Sum(w, w_star))
    assert density_of_scattered_term(t2) == V(2, 0)
    # the trailing w^star survives as a separate rank-2 class
    t3 = Sum(OmegaProd(Sum(w, w_star)), w_star)
    assert density_of_scattered_term(t3) == V(2, 1)
    # ...but a w^star descending onto the stack merges through it
    t4 = Sum(OmegaProd(Sum(w, w_star)), OmegaStarProd(Sum(w, w_star)))
    assert density_of_scattered_term(t4) == V(2, 1)
    assert density_of_scattered_term(Sum(w, OmegaProd(Fin(2)))) == V(1, 1)
    assert density_of_scattered_term(OmegaProd(OmegaProd(One()))) == V(2, 0)


def test_density_of_shuffle_is_infinite():
    assert density_of_scattered_term(Shuffle((One(),))) == INF
    assert density_of_scattered_term(Sum(w, Shuffle((One(),)))) == INF


def test_shuffle_empty_forbidden():
    with pytest.raises(ValueError):
        Shuffle(())


def _expand(t, cap=10**4):
    """Brute-force point count of a term denoting a finite order."""
    t = normalize_term(t)
    if isinstance(t, Zero):
        return 0
    if isinstance(t, Fin):
        return t.n
    if isinstance(t, Sum):
        total = 0
        for p in t.parts:
            total += _expand(p, cap)
            assert total <= cap
        return total
    raise AssertionError("not finite")


@given(st.lists(st.integers(0, 50), max_size=8))
def test_finite_terms_against_counting_oracle(ns):
    t = Sum(*[Fin(n) for n in ns])
    d = density_of_scattered_term(t)
    assert d == Density.finite(_expand(t))


def test_normalization_rules():
    assert normalize_term(Sum(Fin(2), Zero(), Fin(3))) == Fin(5)
    assert normalize_term(OmegaProd(Zero())) == Zero()
    assert normalize_term(Sum(One(), w)) == normalize_term(w)
    assert normalize_term(Sum(w_star, Fin(4))) == normalize_term(w_star)
    assert normalize_term(Sum(Fin(1), w, w_star, Fin(1))) == normalize_term(
        Sum(w, w_star)
    )


def test_term_text():
    assert term_text(Sum(w, w_star)) == "w+w*"
    assert term_text(Fin(7)) == "7"
    assert term_text(Sum(Fin(2), w_star)) == "2+w*"
    assert term_text(OmegaProd(Sum(w, w_star))) == "(w+w*)w"


def test_term_dot_sum():
    assert term_dot_sum(Fin(3), Fin(4)) == Fin(6)
    assert term_dot_sum(Sum(w, w_star), Fin(1)) == normalize_term(Sum(w, w_star))
    assert density_of_scattered_term(term_dot_sum(Fin(2), w)) == V(1, 0)


@given(st.integers(1, 6), st.integers(1, 6), st.integers(0, 2))
def test_term_engine_agrees_with_dot_sum_formula(p1, p2, shape):
    # the closed dot-sum formula and the engine agree on bounded operands
    shapes = [
        lambda p: Sum(w, Fin(p)),
        lambda p: Sum(Fin(p), w, w_star),
        lambda p: Fin(p),
    ]
    t1, t2 = shapes[shape](p1), shapes[shape](p2)
    lhs = density_of_scattered_term(term_dot_sum(t1, t2))
    rhs = dot_sum_density(
        density_of_scattered_term(t1), density_of_scattered_term(t2)
    )
    assert lhs == rhs


def test_term_engine_agrees_with_corner_formula():
    # I^(l,1)-style corner: (H1 + H2)*w with bounded summands
    inner = Sum(Sum(w, w_star), Fin(2))
    t = OmegaProd(inner)
    d_inner = density_of_scattered_term(inner)
    assert density_of_scattered_term(t) == omega_mult_density(d_inner)
