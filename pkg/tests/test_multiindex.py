from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exactfem import multiindex as mi

small_index = st.lists(st.integers(0, 5), min_size=1, max_size=4).map(tuple)

# Ten-element orderings of the bounded-sum set in dimension 2, degree 3.
A32_SEQUENCES = {
    "lex": [(0, 0), (0, 1), (0, 2), (0, 3), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (3, 0)],
    "colex": [(0, 0), (1, 0), (2, 0), (3, 0), (0, 1), (1, 1), (2, 1), (0, 2), (1, 2), (0, 3)],
    "symlex": [(3, 0), (2, 1), (2, 0), (1, 2), (1, 1), (1, 0), (0, 3), (0, 2), (0, 1), (0, 0)],
    "revlex": [(0, 3), (1, 2), (0, 2), (2, 1), (1, 1), (0, 1), (3, 0), (2, 0), (1, 0), (0, 0)],
    "grlex": [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0), (0, 3), (1, 2), (2, 1), (3, 0)],
    "grcolex": [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3)],
    "grsymlex": [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3)],
    "grevlex": [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0), (0, 3), (1, 2), (2, 1), (3, 0)],
}

# Orderings of the exact-sum-3 set in dimension 3 for the graded orders.
C33_SEQUENCES = {
    "grlex": [(0, 0, 3), (0, 1, 2), (0, 2, 1), (0, 3, 0), (1, 0, 2), (1, 1, 1), (1, 2, 0), (2, 0, 1), (2, 1, 0), (3, 0, 0)],
    "grcolex": [(3, 0, 0), (2, 1, 0), (1, 2, 0), (0, 3, 0), (2, 0, 1), (1, 1, 1), (0, 2, 1), (1, 0, 2), (0, 1, 2), (0, 0, 3)],
    "grsymlex": [(3, 0, 0), (2, 1, 0), (2, 0, 1), (1, 2, 0), (1, 1, 1), (1, 0, 2), (0, 3, 0), (0, 2, 1), (0, 1, 2), (0, 0, 3)],
    "grevlex": [(0, 0, 3), (0, 1, 2), (1, 0, 2), (0, 2, 1), (1, 1, 1), (2, 0, 1), (0, 3, 0), (1, 2, 0), (2, 1, 0), (3, 0, 0)],
}


def test_binomial_values():
    for n in range(8):
        assert mi.binomial(n, 0) == 1
        assert mi.binomial(n, n) == 1
    assert mi.binomial(2, 3) == 0
    # Pascal recurrence unrolled by hand: C(4,2) = C(3,1) + C(3,2) = 3 + 3
    assert mi.binomial(4, 2) == 6


def test_length_and_factorial():
    assert mi.length((0, 0, 0)) == 0
    assert mi.length((1, 0, 2)) == 3
    assert mi.factorial((0, 0)) == 1
    assert mi.factorial((2, 1)) == 2
    assert mi.factorial((3, 2)) == 12


@given(small_index, st.data())
def test_length_is_additive(alpha, data):
    beta = tuple(data.draw(st.integers(0, 5)) for _ in alpha)
    summed = tuple(a + b for a, b in zip(alpha, beta))
    assert mi.length(summed) == mi.length(alpha) + mi.length(beta)


def test_kronecker():
    assert mi.kronecker((1, 2), (1, 2)) == 1
    assert mi.kronecker((1, 2), (2, 1)) == 0
    assert mi.kronecker((0, 0, 0), (0, 0, 0)) == 1
    with pytest.raises(ValueError):
        mi.kronecker((1, 2), (1, 2, 3))


def test_compare_documented_instances():
    assert mi.compare("grlex", (1, 0), (0, 2)) < 0
    assert mi.compare("grsymlex", (2, 0, 1), (1, 2, 0)) < 0
    assert mi.compare("lex", (0, 3), (1, 0)) < 0
    assert mi.compare("grevlex", (0, 1, 2), (1, 0, 2)) < 0
    with pytest.raises(ValueError):
        mi.compare("grlex", (1, 0), (1, 0, 0))
    with pytest.raises(ValueError):
        mi.compare("gradedlex", (1,), (2,))


@pytest.mark.parametrize("order,want", sorted(A32_SEQUENCES.items()))
def test_enumeration_dim2_degree3(order, want):
    assert mi.enumerate_indices(2, 3, "A", order=order) == want


@pytest.mark.parametrize("order,want", sorted(C33_SEQUENCES.items()))
def test_enumeration_exact_sum_dim3(order, want):
    assert mi.enumerate_indices(3, 3, "C", order=order) == want


def test_enumeration_edge_cases():
    assert mi.enumerate_indices(1, 4, "C") == [(4,)]
    assert mi.enumerate_indices(3, 0, "A") == [(0, 0, 0)]
    assert mi.enumerate_indices(2, 2, "Azero", zero_index=1) == [(0, 0), (0, 1), (0, 2)]
    with pytest.raises(ValueError):
        mi.enumerate_indices(2, 2, "Azero", zero_index=0)
    with pytest.raises(ValueError):
        mi.enumerate_indices(0, 2, "A")


def test_cardinals_against_brute_force():
    for d in range(1, 5):
        for k in range(7):
            box = list(product(range(k + 1), repeat=d))
            assert mi.cardinal(d, k, "A") == sum(1 for a in box if sum(a) <= k)
            assert mi.cardinal(d, k, "C") == sum(1 for a in box if sum(a) == k)
            for i in range(1, d + 1):
                assert mi.cardinal(d, k, "Azero", zero_index=i) == sum(
                    1 for a in box if sum(a) <= k and a[i - 1] == 0
                )
            assert len(mi.enumerate_indices(d, k, "A")) == mi.cardinal(d, k, "A")


def test_cardinal_fixed_values():
    assert mi.cardinal(2, 3, "A") == 10
    assert mi.cardinal(3, 3, "C") == 10
    for d in range(1, 7):
        assert mi.cardinal(d, 1, "C") == d
    assert mi.cardinal(0, 5, "A") == 1


def test_layering():
    for d in range(1, 5):
        for k in range(7):
            whole = mi.enumerate_indices(d, k, "A")
            layers = [a for l in range(k + 1) for a in mi.enumerate_indices(d, l, "C")]
            assert whole == layers


def test_order_axioms_exhaustive():
    pool = mi.enumerate_indices(3, 3, "A")
    small = mi.enumerate_indices(3, 2, "A")
    zero = (0, 0, 0)
    for order in mi.ORDERS:
        for a in pool:
            for b in pool:
                c = mi.compare(order, a, b)
                assert c == -mi.compare(order, b, a)
                assert (c == 0) == (a == b)
        for a in small:
            for b in small:
                if mi.compare(order, a, b) < 0:
                    for g in small:
                        sa = tuple(x + y for x, y in zip(a, g))
                        sb = tuple(x + y for x, y in zip(b, g))
                        assert mi.compare(order, sa, sb) < 0
    for order in mi.GRADED_ORDERS:
        for a in pool:
            if a != zero:
                assert mi.compare(order, zero, a) < 0


def test_order_mirrors_exhaustive():
    pool = mi.enumerate_indices(3, 3, "A")
    for a in pool:
        for b in pool:
            assert mi.compare("symlex", a, b) == mi.compare("lex", b, a)
            assert mi.compare("revlex", a, b) == mi.compare("colex", b, a)


def test_degree_condition_for_graded_orders():
    for order in mi.GRADED_ORDERS:
        for d in (1, 2, 3):
            assert mi.condition_degree_monotone(order, d, 4) is None
    for order in ("lex", "colex", "symlex", "revlex"):
        assert mi.condition_degree_monotone(order, 2, 3) is not None


def test_embedding_condition_matrix():
    verdicts = {o: mi.condition_dimension_embedding(o, 3, 3) for o in mi.GRADED_ORDERS}
    assert verdicts["grsymlex"]["satisfied"] and verdicts["grsymlex"]["route"] == "front"
    assert verdicts["grevlex"]["satisfied"] and verdicts["grevlex"]["route"] == "back"
    assert not verdicts["grlex"]["satisfied"]
    assert not verdicts["grcolex"]["satisfied"]


def test_embedding_documented_witnesses():
    # (1,0) before (0,2), yet both completions land in reversed order
    assert mi.compare("grlex", (1, 0), (0, 2)) < 0
    assert mi.extend_front(3, (0, 2)) == (1, 0, 2)
    assert mi.compare("grlex", (1, 0, 2), mi.extend_front(3, (1, 0))) < 0
    assert mi.extend_back(3, (0, 2)) == (0, 2, 1)
    assert mi.compare("grlex", (0, 2, 1), mi.extend_back(3, (1, 0))) < 0
    # (0,1) before (2,0) under grcolex, images reversed
    assert mi.compare("grcolex", (0, 1), (2, 0)) < 0
    assert mi.extend_front(3, (2, 0)) == (1, 2, 0)
    assert mi.compare("grcolex", (1, 2, 0), mi.extend_front(3, (0, 1))) < 0


def test_vertex_numbering_condition():
    for order in ("grsymlex", "grcolex"):
        for d, k in ((2, 3), (3, 3), (3, 4)):
            assert mi.condition_vertex_numbering(order, d, k) is None
    for order in ("grlex", "grevlex"):
        assert mi.condition_vertex_numbering(order, 2, 3) is not None
        # the corner labeled (3,0) is numbered after the one labeled (0,3)
        assert mi.compare(order, (0, 3), (3, 0)) < 0


def test_slices():
    assert mi.slice_vertical(3, 3, 1) == [(1, 2, 0), (1, 1, 1), (1, 0, 2)]
    assert mi.slice_vertical(2, 2, 2) == [(2, 0)]
    for d in (2, 3):
        for k in range(5):
            full = set(mi.enumerate_indices(d, k, "C"))
            vert = [a for i in range(k + 1) for a in mi.slice_vertical(d, k, i)]
            horiz = [a for i in range(k + 1) for a in mi.slice_horizontal(d, k, i)]
            assert set(vert) == full and len(vert) == len(full)
            assert set(horiz) == full and len(horiz) == len(full)


def test_completion_maps():
    assert mi.extend_front(3, (0, 2)) == (1, 0, 2)
    assert mi.extend_back(3, (1, 0)) == (1, 0, 2)
    assert mi.extend_front(4, (0, 0, 0)) == (4, 0, 0, 0)
    assert mi.extend_back(4, (0, 0, 0)) == (0, 0, 0, 4)
    with pytest.raises(ValueError):
        mi.extend_front(1, (2, 0))
    for d in range(2, 5):
        for k in range(6):
            source = mi.enumerate_indices(d - 1, k, "A")
            target = set(mi.enumerate_indices(d, k, "C"))
            for f in (mi.extend_front, mi.extend_back):
                image = [f(k, a) for a in source]
                assert len(set(image)) == len(image)
                assert set(image) == target
                assert all(mi.length(b) == k for b in image)


def test_insert_zero():
    assert mi.insert_zero(1, (2, 1)) == (0, 2, 1)
    assert mi.insert_zero(3, (2, 1)) == (2, 1, 0)
    with pytest.raises(ValueError):
        mi.insert_zero(4, (2, 1))
    for d in range(2, 5):
        for k in range(5):
            source = mi.enumerate_indices(d - 1, k, "A")
            for i in range(1, d + 1):
                image = [mi.insert_zero(i, a) for a in source]
                assert len(set(image)) == len(image)
                assert set(image) == set(
                    mi.enumerate_indices(d, k, "Azero", zero_index=i)
                )
                assert all(mi.length(a) == mi.length(b) for a, b in zip(source, image))


@given(small_index, st.data())
def test_insert_zero_preserves_length(alpha, data):
    i = data.draw(st.integers(1, len(alpha) + 1))
    assert mi.length(mi.insert_zero(i, alpha)) == mi.length(alpha)


def test_index_permutations():
    for d in range(5):
        assert mi.jump_tuple(d, 0) == tuple(range(1, d + 2))
        assert mi.jump_tuple(d, d + 1) == tuple(range(d + 1))
        for i in range(d + 1):
            assert mi.cyclic_index(d, i, d) == i
            assert mi.swap_index(d, i, i) == d
            values = mi.swap_tuple(d, i)
            assert all(values[values[j]] == j for j in range(d + 1))
        assert mi.cyclic_tuple(d, d) == tuple(range(d + 1))
    assert mi.jump_index(3, 2, 2) == 3
    assert mi.cyclic_tuple(3, 0) == (1, 2, 3, 0)
    with pytest.raises(ValueError):
        mi.jump_index(3, 5, 0)


def test_enumeration_json_shape():
    data = mi.enumeration_json(2, 1, "A")
    assert data == {
        "d": 2,
        "k": 1,
        "kind": "A",
        "order": "grsymlex",
        "cardinal": 3,
        "indices": [[0, 0], [1, 0], [0, 1]],
    }
    zdata = mi.enumeration_json(2, 1, "Azero", zero_index=2)
    assert zdata["zero_index"] == 2 and zdata["indices"] == [[0, 0], [1, 0]]
