import itertools

import pytest
from hypothesis import given, strategies as st

from enumorder import (
    DuplicateValue,
    FiniteSet,
    LengthMismatch,
    Listing,
    Monotonicity,
    OutOfRange,
    ParseError,
    SetMismatch,
    ValueCollision,
    almost_equal,
    compose_transport,
    drop_prefix,
    is_monotonic,
    order_pattern,
    parse_finite_set,
    parse_listing,
    prepend,
    sorted_listing,
    symmetric_difference,
)

from conftest import brute_ranks, listings


class TestParse:
    def test_basic(self):
        assert parse_listing("2\n4\n6\n") == Listing((2, 4, 6))

    def test_empty(self):
        assert parse_listing("") == Listing(())
        assert len(parse_listing("")) == 0

    def test_example_listing_keeps_order(self):
        h = parse_listing("7\n2\n5\n6\n14\n")
        assert h.values == (7, 2, 5, 6, 14)
        assert h.at(1) == 7 and h.at(2) == 2

    def test_comments_blank_lines_no_trailing_newline(self):
        assert parse_listing("# header\n3\n\n1\n# tail\n2").values == (3, 1, 2)

    def test_duplicate(self):
        with pytest.raises(DuplicateValue) as exc:
            parse_listing("3\n1\n3\n")
        assert (exc.value.value, exc.value.first_pos, exc.value.second_pos) == (3, 1, 3)

    @pytest.mark.parametrize("text,line", [("1\n0\n", 2), ("-4\n", 1), ("1\n2\nx\n", 3), ("1.5\n", 1)])
    def test_bad_token(self, text, line):
        with pytest.raises(ParseError) as exc:
            parse_listing(text)
        assert exc.value.line == line

    def test_finite_set_order_insensitive(self):
        assert parse_finite_set("5\n1\n3\n") == parse_finite_set("1\n3\n5\n") == {1, 3, 5}


class TestListingType:
    def test_rejects_zero_and_duplicates(self):
        with pytest.raises(ValueError):
            Listing((1, 0))
        with pytest.raises(DuplicateValue):
            Listing((1, 2, 1))

    def test_name_not_part_of_equality(self):
        assert Listing((1, 2), "a") == Listing((1, 2), "b")

    def test_at_out_of_range(self):
        with pytest.raises(OutOfRange):
            Listing((4,)).at(2)

    def test_finite_set_rejects_zero(self):
        with pytest.raises(ValueError):
            FiniteSet([0, 1])


class TestOrderPattern:
    @pytest.mark.parametrize("values,ranks", [
        ((2, 4, 6, 8), (1, 2, 3, 4)),
        ((7, 2, 5, 6, 14), (4, 1, 2, 3, 5)),
        ((6, 8, 1, 2, 5), (4, 5, 1, 2, 3)),
        ((), ()),
    ])
    def test_examples(self, values, ranks):
        assert order_pattern(Listing(values)).ranks == ranks
        assert list(ranks) == brute_ranks(values)

    def test_key(self):
        assert order_pattern(Listing((7, 2, 5, 6, 14))).key == "4,1,2,3,5"

    @given(listings(max_size=20))
    def test_matches_count_oracle(self, h):
        pat = order_pattern(h)
        assert list(pat.ranks) == brute_ranks(h.values)
        assert sorted(pat.ranks) == list(range(1, len(h) + 1))

    def test_injective_on_fixed_value_set(self):
        vals = (3, 9, 4, 12, 1)
        seen = {}
        for perm in itertools.permutations(vals):
            key = order_pattern(Listing(perm)).ranks
            assert key not in seen
            seen[key] = perm


class TestMonotonic:
    @pytest.mark.parametrize("values,kind", [
        ((1, 2, 3, 4, 5), Monotonicity.INCREASING),
        ((5, 4, 3, 2, 1), Monotonicity.DECREASING),
        ((3, 5, 4, 1, 2), Monotonicity.NEITHER),
        ((), Monotonicity.TRIVIAL),
        ((9,), Monotonicity.TRIVIAL),
    ])
    def test_examples(self, values, kind):
        assert is_monotonic(Listing(values)) is kind


class TestShifts:
    def test_drop_prefix(self):
        assert drop_prefix(Listing((9, 1, 2, 3)), 1).values == (1, 2, 3)
        assert drop_prefix(Listing((7, 2, 5, 6, 14)), 3).values == (6, 14)
        h = Listing((4, 2))
        assert drop_prefix(h, 0) == h
        assert drop_prefix(h, 2) == Listing(())
        with pytest.raises(OutOfRange):
            drop_prefix(h, 3)

    def test_prepend(self):
        assert prepend(Listing((100,)), Listing((2, 4, 6))).values == (100, 2, 4, 6)
        assert prepend(Listing(()), Listing((2, 4))) == Listing((2, 4))
        assert prepend(Listing((1, 9)), Listing((2, 4))).values == (1, 9, 2, 4)

    def test_prepend_collision(self):
        with pytest.raises(ValueCollision) as exc:
            prepend(Listing((5, 2)), Listing((2, 4)))
        assert exc.value.value == 2

    @given(st.lists(st.integers(1, 80), unique=True, max_size=20), st.data())
    def test_drop_undoes_prepend(self, vals, data):
        k = data.draw(st.integers(0, len(vals)))
        p, h = Listing(tuple(vals[:k])), Listing(tuple(vals[k:]))
        assert drop_prefix(prepend(p, h), len(p)) == h


class TestTransport:
    def test_examples(self):
        assert compose_transport(Listing((3, 1, 2)), Listing((1, 2, 3)), Listing((5, 6, 7))).values == (7, 5, 6)
        assert compose_transport(Listing((2, 4)), Listing((4, 2)), Listing((10, 3))).values == (3, 10)
        h, g = Listing((8, 3, 5)), Listing((20, 1, 7))
        assert compose_transport(h, h, g) == g

    def test_errors(self):
        with pytest.raises(SetMismatch):
            compose_transport(Listing((1, 2)), Listing((1, 3)), Listing((5, 6)))
        with pytest.raises(LengthMismatch):
            compose_transport(Listing((1, 2)), Listing((2, 1)), Listing((5,)))


class TestSets:
    def test_symmetric_difference(self):
        assert symmetric_difference(FiniteSet({1, 2, 3}), FiniteSet({2, 3, 4})) == {1, 4}
        a = FiniteSet({2, 4, 6})
        assert symmetric_difference(a, a) == set()
        assert symmetric_difference(a, FiniteSet()) == {2, 4, 6}

    @given(st.frozensets(st.integers(1, 30)), st.frozensets(st.integers(1, 30)))
    def test_symmetric_difference_commutes(self, a, b):
        a, b = FiniteSet(a), FiniteSet(b)
        assert symmetric_difference(a, b) == symmetric_difference(b, a)
        assert symmetric_difference(a, a) == set()

    def test_almost_equal(self):
        a, b = FiniteSet({1, 2, 3}), FiniteSet({2, 3, 4})
        assert almost_equal(a, b, 2)
        assert not almost_equal(a, b, 1)
        assert almost_equal(a, a, 0)

    def test_sorted_listing(self):
        assert sorted_listing(FiniteSet({5, 1, 3})).values == (1, 3, 5)
        assert sorted_listing(FiniteSet()) == Listing(())
        assert sorted_listing(FiniteSet({2, 4, 6, 8, 10})).values == (2, 4, 6, 8, 10)

    @given(st.frozensets(st.integers(1, 100), max_size=25))
    def test_sorted_listing_has_identity_pattern(self, a):
        h = sorted_listing(FiniteSet(a))
        assert order_pattern(h).ranks == tuple(range(1, len(a) + 1))
