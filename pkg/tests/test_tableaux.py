"""Tests for skew shapes, lattice words and Littlewood-Richardson counts."""

import pytest
from hypothesis import given, settings, strategies as st

from pgqcheck import (
    SkewShape,
    SkewTableau,
    check_partition,
    contains,
    content,
    enumerate_lr_tableaux,
    gamma,
    is_lattice_word,
    is_semistandard,
    lr_coefficient,
    lr_nonzero_contents,
    reading_word,
    satisfies_lattice_property,
)
from _oracles import (
    _rows_reading_word,
    _word_is_lattice,
    brute_force_fillings,
    lattice_content_counts,
    oracle_lr_coefficient,
    partitions_of,
    ssyt_fillings,
    subpartitions,
)


def small_partitions(max_size):
    """All partitions of 0..max_size, as tuples."""
    out = []
    for n in range(max_size + 1):
        stack = [((), n)]
        while stack:
            prefix, rest = stack.pop()
            if rest == 0:
                out.append(prefix)
                continue
            limit = prefix[-1] if prefix else rest
            for part in range(min(limit, rest), 0, -1):
                stack.append((prefix + (part,), rest - part))
    return out


def column_tableau(word):
    """Single-column tableau whose reading word is the given word."""
    shape = SkewShape((1,) * len(word), ())
    return SkewTableau(shape, tuple((x,) for x in word))


class TestCheckPartition:
    def test_strips_trailing_zeros(self):
        assert check_partition((3, 1, 0, 0)) == (3, 1)

    def test_empty(self):
        assert check_partition(()) == ()

    def test_rejects_increase(self):
        with pytest.raises(ValueError):
            check_partition((1, 2))

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            check_partition((2, -1))

    def test_rejects_interior_zero(self):
        with pytest.raises(ValueError):
            check_partition((2, 0, 1))


class TestContains:
    def test_examples(self):
        assert contains((3, 1), (1,))
        assert contains((3, 1), (3, 1))
        assert not contains((3, 1), (2, 2))
        assert not contains((1,), (1, 1))
        assert not contains((2,), (3,))
        assert contains((2,), ())


class TestSkewShape:
    def test_requires_containment(self):
        with pytest.raises(ValueError):
            SkewShape((2,), (3,))

    def test_requires_containment_rowwise(self):
        with pytest.raises(ValueError):
            SkewShape((3, 1), (1, 2))

    def test_size(self):
        assert SkewShape((3, 2), (1,)).size == 4
        assert SkewShape((), ()).size == 0

    def test_row_spans(self):
        assert SkewShape((3, 2), (1,)).row_spans() == ((1, 3), (0, 2))

    def test_cells(self):
        assert SkewShape((2, 1), (1,)).cells() == ((0, 1), (1, 0))

    def test_column_rows(self):
        shape = SkewShape((2, 2, 1), (1,))
        assert shape.column_rows(0) == (1, 2)
        assert shape.column_rows(1) == (0, 1)

    def test_num_columns(self):
        assert SkewShape((4, 2), (2,)).num_columns() == 4
        assert SkewShape((), ()).num_columns() == 0


class TestSkewTableau:
    def test_row_length_must_match_shape(self):
        shape = SkewShape((2, 1), ())
        with pytest.raises(ValueError):
            SkewTableau(shape, ((1,), (2,)))

    def test_letters_must_be_positive(self):
        shape = SkewShape((1,), ())
        with pytest.raises(ValueError):
            SkewTableau(shape, ((0,),))

    def test_entry_uses_diagram_columns(self):
        shape = SkewShape((2, 1), (1,))
        tab = SkewTableau(shape, ((5,), (7,)))
        assert tab.entry(0, 1) == 5
        assert tab.entry(1, 0) == 7
        with pytest.raises(IndexError):
            tab.entry(0, 0)


class TestSemistandard:
    def test_single_box(self):
        assert is_semistandard(SkewTableau(SkewShape((1,), ()), ((1,),)))

    def test_rows_weakly_increase(self):
        shape = SkewShape((2,), ())
        assert not is_semistandard(SkewTableau(shape, ((2, 1),)))
        assert is_semistandard(SkewTableau(shape, ((1, 1),)))

    def test_columns_strictly_increase(self):
        shape = SkewShape((2, 2), ())
        assert not is_semistandard(SkewTableau(shape, ((1, 1), (1, 2))))
        assert is_semistandard(SkewTableau(shape, ((1, 1), (2, 2))))

    def test_skew_offset_respects_columns(self):
        # rows (0, 1) overlap only in column 1 here
        shape = SkewShape((3, 2), (1,))
        tab = SkewTableau(shape, ((1, 1), (1, 1)))
        assert not is_semistandard(tab)
        tab = SkewTableau(shape, ((1, 1), (1, 2)))
        assert is_semistandard(tab)


class TestReadingWord:
    def test_square(self):
        shape = SkewShape((2, 2), ())
        tab = SkewTableau(shape, ((1, 2), (3, 4)))
        assert reading_word(tab) == (2, 1, 4, 3)

    def test_column(self):
        assert reading_word(column_tableau((1, 2))) == (1, 2)

    def test_empty(self):
        tab = SkewTableau(SkewShape((), ()), ())
        assert reading_word(tab) == ()


class TestLatticeWord:
    def test_simple_lattice_word(self):
        assert is_lattice_word((1, 1, 2, 2))

    def test_cannot_start_with_two(self):
        assert not is_lattice_word((2,))

    def test_twos_must_not_outnumber_ones(self):
        assert not is_lattice_word((1, 2, 2))

    def test_empty_word(self):
        assert is_lattice_word(())

    def test_tableau_wrapper(self):
        assert satisfies_lattice_property(column_tableau((1, 2, 3)))
        assert not satisfies_lattice_property(column_tableau((1, 3)))


class TestContent:
    def test_small(self):
        assert content(column_tableau((1, 1, 2))) == (2, 1)

    def test_empty(self):
        assert content(SkewTableau(SkewShape((), ()), ())) == ()

    def test_longer(self):
        assert content(column_tableau((1, 2, 1, 3, 2, 1))) == (3, 2, 1)

    def test_rejects_non_lattice(self):
        with pytest.raises(ValueError):
            content(column_tableau((1, 3)))


class TestGamma:
    def test_examples(self):
        tab = column_tableau((1, 1, 2))
        assert gamma(tab, 1) == 2
        assert gamma(tab, 2) == 1
        assert gamma(tab, 3) == 0

    def test_letters_at_least_twice(self):
        assert gamma(column_tableau((1, 1, 1, 2, 2, 3)), 2) == 2

    def test_empty(self):
        assert gamma(SkewTableau(SkewShape((), ()), ()), 1) == 0

    def test_rejects_nonpositive_threshold(self):
        with pytest.raises(ValueError):
            gamma(column_tableau((1,)), 0)


class TestEnumerate:
    def test_empty_shape_has_one_filling(self):
        tabs = enumerate_lr_tableaux(SkewShape((), ()), ())
        assert len(tabs) == 1
        assert tabs[0].filling == ()

    def test_hook_with_content_one_one(self):
        shape = SkewShape((2, 1), (1,))
        tabs = enumerate_lr_tableaux(shape, (1, 1))
        assert len(tabs) == 1
        assert tabs[0].filling == ((1,), (2,))

    def test_column_rejects_repeats(self):
        assert enumerate_lr_tableaux(SkewShape((1, 1), ()), (2,)) == []

    def test_size_mismatch_raises(self):
        with pytest.raises(ValueError):
            enumerate_lr_tableaux(SkewShape((2,), ()), (1,))

    def test_results_are_valid_and_sorted(self):
        shape = SkewShape((4, 3, 1), (2, 1))
        for mu in small_partitions(shape.size):
            if sum(mu) != shape.size:
                continue
            tabs = enumerate_lr_tableaux(shape, mu)
            for tab in tabs:
                assert tab.shape == shape
                assert is_semistandard(tab)
                assert satisfies_lattice_property(tab)
                assert content(tab) == mu
            assert [t.filling for t in tabs] == sorted(t.filling for t in tabs)

    def test_deterministic(self):
        shape = SkewShape((3, 2, 2), (1, 1))
        first = enumerate_lr_tableaux(shape, (3, 2))
        second = enumerate_lr_tableaux(shape, (3, 2))
        assert first == second

    def test_counts_match_brute_force(self):
        for outer, inner in [((3, 2, 1), (1,)), ((4, 2), (2,)), ((2, 2, 2), (1, 1))]:
            shape = SkewShape(outer, inner)
            for mu in small_partitions(shape.size):
                if sum(mu) != shape.size:
                    continue
                got = [t.filling for t in enumerate_lr_tableaux(shape, mu)]
                want = sorted(brute_force_fillings(outer, inner, mu))
                assert got == want, (outer, inner, mu)


class TestLRCoefficient:
    def test_trivial_content_empty(self):
        assert lr_coefficient((3, 1), (3, 1), ()) == 1

    def test_hook(self):
        assert lr_coefficient((2, 1), (1,), (1, 1)) == 1

    def test_row_times_row(self):
        assert lr_coefficient((4,), (2,), (2,)) == 1

    def test_pieri_corner(self):
        # s_(1) * s_(2) = s_(3) + s_(2,1), so the hook carries the strip too
        assert lr_coefficient((2, 1), (1,), (2,)) == 1
        assert lr_coefficient((3,), (1,), (2,)) == 1

    def test_zero_by_lattice(self):
        assert lr_coefficient((3,), (1,), (1, 1)) == 0

    def test_size_mismatch_is_zero(self):
        assert lr_coefficient((3, 1), (1,), (1,)) == 0

    def test_containment_failure_is_zero(self):
        assert lr_coefficient((2, 2), (3,), ()) == 0

    def test_first_multiplicity_two(self):
        # smallest coefficient above 1: c^(3,2,1)_{(2,1),(2,1)} = 2
        assert lr_coefficient((3, 2, 1), (2, 1), (2, 1)) == 2

    def test_matches_oracle_small(self):
        parts = small_partitions(6)
        lams = [lam for lam in parts if sum(lam) >= 1]
        for lam in lams:
            for mu in parts:
                if not contains(lam, mu):
                    continue
                for nu in small_partitions(sum(lam) - sum(mu)):
                    if sum(nu) != sum(lam) - sum(mu):
                        continue
                    got = lr_coefficient(lam, mu, nu)
                    want = oracle_lr_coefficient(lam, mu, nu)
                    assert got == want, (lam, mu, nu)


class TestLRNonzeroContents:
    def test_single_box(self):
        assert set(lr_nonzero_contents((1,), ())) == {(1,)}

    def test_hook_minus_box(self):
        assert set(lr_nonzero_contents((2, 1), (1,))) == {(2,), (1, 1)}

    def test_equal_shapes(self):
        assert set(lr_nonzero_contents((3,), (3,))) == {()}

    def test_consistent_with_coefficient(self):
        outer, inner = (4, 2, 1), (2, 1)
        size = sum(outer) - sum(inner)
        contents = set(lr_nonzero_contents(outer, inner))
        for mu in small_partitions(size):
            expected = sum(mu) == size and lr_coefficient(outer, mu, inner) > 0
            assert (mu in contents) == expected


class TestOracleAgreement:
    """The two independent filling enumerators must agree with each other
    before either is trusted against the package."""

    def test_row_scan_matches_product_scan(self):
        for n in range(6):
            for outer in partitions_of(n):
                for inner in subpartitions(outer):
                    boxes = n - sum(inner)
                    naive = set(brute_force_fillings(outer, inner))
                    rowwise = {
                        rows
                        for rows in ssyt_fillings(outer, inner, max(boxes, 1))
                        if _word_is_lattice(_rows_reading_word(rows))
                    }
                    assert naive == rowwise, (outer, inner)

    def test_content_counts_match_enumeration(self):
        for outer, inner in (((3, 2), (1,)), ((2, 2, 1), ()), ((4, 1), (1,))):
            counts = lattice_content_counts(outer, inner)
            total = sum(outer) - sum(inner)
            assert sum(counts.values()) > 0
            for cont in partitions_of(total):
                got = len(enumerate_lr_tableaux(SkewShape(outer, inner), cont))
                assert counts.get(cont, 0) == got


PARTITION_POOL = small_partitions(4)


@given(mu=st.sampled_from(PARTITION_POOL), nu=st.sampled_from(PARTITION_POOL))
@settings(max_examples=50, deadline=None)
def test_lr_symmetry(mu, nu):
    total = sum(mu) + sum(nu)
    for lam in small_partitions(total):
        if sum(lam) != total:
            continue
        assert lr_coefficient(lam, mu, nu) == lr_coefficient(lam, nu, mu)


@given(word=st.lists(st.integers(min_value=1, max_value=4), max_size=8))
@settings(max_examples=200, deadline=None)
def test_lattice_content_is_weakly_decreasing(word):
    word = tuple(word)
    tab = column_tableau(word)
    if is_lattice_word(word):
        got = content(tab)
        assert list(got) == sorted(got, reverse=True)
        assert sum(got) == len(word)
    else:
        with pytest.raises(ValueError):
            content(tab)
