import pytest

from elliptic_moments.exceptions import CapacityError, DomainError
from elliptic_moments.models.polynomial import Parity
from elliptic_moments.models.word import Letter, Pairing, Word
from elliptic_moments.services.combinatorics_service import CombinatoricsService


def test_catalan_first_values() -> None:
    assert [CombinatoricsService.catalan(n) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]


def test_catalan_rejects_negative() -> None:
    with pytest.raises(DomainError):
        CombinatoricsService.catalan(-1)


@pytest.mark.parametrize("n", range(1, 11))
def test_catalan_triangle_matches_recursion(n: int) -> None:
    for k in range(1, n + 2):
        assert CombinatoricsService.catalan_triangle(n, k) == CombinatoricsService.catalan_triangle_recursive(n, k)


def test_catalan_triangle_diagonal_is_catalan() -> None:
    for n in range(1, 12):
        assert CombinatoricsService.catalan_triangle(n, n) == CombinatoricsService.catalan(n - 1)
        assert CombinatoricsService.catalan_triangle(n, 1) == 1
    assert CombinatoricsService.catalan_triangle(3, 5) == 0


def test_ballot_b_boundary_values() -> None:
    for t in range(10):
        assert CombinatoricsService.ballot_b(0, t) == CombinatoricsService.catalan(t)
        assert CombinatoricsService.ballot_b(t, t) == 1
        assert CombinatoricsService.ballot_b(t + 1, t) == 0


@pytest.mark.parametrize("t", range(21))
def test_ballot_b_closed_form_matches_recursion(t: int) -> None:
    for k in range(t + 2):
        assert CombinatoricsService.ballot_b(k, t) == CombinatoricsService.ballot_b_recursive(k, t)


def test_ballot_b_is_a_catalan_triangle_entry() -> None:
    for t in range(21):
        for k in range(t + 1):
            assert CombinatoricsService.ballot_b(k, t) == CombinatoricsService.catalan_triangle(t + k + 1, t - k + 1)


@pytest.mark.parametrize(
    "n, row",
    [
        (1, [1]),
        (2, [1, 1]),
        (3, [1, 2, 2]),
        (4, [1, 3, 5, 5]),
        (5, [1, 4, 9, 14, 14]),
        (6, [1, 5, 14, 28, 42, 42]),
        (7, [1, 6, 20, 48, 90, 132, 132]),
        (8, [1, 7, 27, 75, 165, 297, 429, 429]),
    ],
)
def test_catalan_triangle_rows(n: int, row: list) -> None:
    assert [CombinatoricsService.catalan_triangle(n, k) for k in range(1, n + 1)] == row


def test_ballot_b_odd_values() -> None:
    assert CombinatoricsService.ballot_b_odd(0, 0) == 1
    assert CombinatoricsService.ballot_b_odd(0, 2) == 5
    assert CombinatoricsService.ballot_b_odd(1, 1) == 1
    assert CombinatoricsService.ballot_b_odd(2, 1) == 0
    for t in range(10):
        assert CombinatoricsService.ballot_b_odd(0, t) == CombinatoricsService.catalan(t + 1)


def test_admissible_sequence_identity() -> None:
    for a in range(1, 8):
        for b in range(1, 8):
            lhs, rhs = CombinatoricsService.admissible_sequence_identity(a, b)
            assert lhs == rhs, (a, b)


def test_fuss_catalan() -> None:
    assert CombinatoricsService.fuss_catalan(2, 3) == 12
    assert CombinatoricsService.fuss_catalan(3, 2) == 4
    for k in range(8):
        assert CombinatoricsService.fuss_catalan(1, k) == CombinatoricsService.catalan(k)
    with pytest.raises(DomainError):
        CombinatoricsService.fuss_catalan(0, 2)


@pytest.mark.parametrize("length", [0, 2, 4, 6, 8, 10])
def test_enumerate_nc_pairings_count_and_validity(length: int) -> None:
    pairings = list(CombinatoricsService.enumerate_nc_pairings(length))
    assert len(pairings) == CombinatoricsService.catalan(length // 2)
    assert len({pairing.pairs for pairing in pairings}) == len(pairings)
    for pairing in pairings[:50]:
        Pairing(length=pairing.length, pairs=pairing.pairs)


def test_enumerate_nc_pairings_odd_length_is_empty() -> None:
    assert list(CombinatoricsService.enumerate_nc_pairings(5)) == []


def test_enumerate_nc_branch_partitions_the_pairings() -> None:
    length = 10
    total = 0
    for partner in range(2, length + 1, 2):
        branch = list(CombinatoricsService.enumerate_nc_branch(length, partner))
        assert all((1, partner) in pairing.pairs for pairing in branch)
        expected = CombinatoricsService.catalan((partner - 2) // 2) * CombinatoricsService.catalan((length - partner) // 2)
        assert len(branch) == expected
        total += len(branch)
    assert total == CombinatoricsService.catalan(length // 2)
    assert list(CombinatoricsService.enumerate_nc_branch(length, 3)) == []


def test_pairing_rejects_crossing() -> None:
    with pytest.raises(ValueError):
        Pairing(length=4, pairs=((1, 3), (2, 4)))


def test_sigma_same_and_mixed() -> None:
    word = Word.parse("xxdd")
    nested = Pairing(length=4, pairs=((1, 4), (2, 3)))
    adjacent = Pairing(length=4, pairs=((1, 2), (3, 4)))
    assert CombinatoricsService.sigma_same(word, nested) == 0
    assert CombinatoricsService.sigma_mixed(word, nested) == 2
    assert CombinatoricsService.sigma_same(word, adjacent) == 2
    assert CombinatoricsService.sigma_mixed(word, adjacent) == 0
    with pytest.raises(DomainError):
        CombinatoricsService.sigma_same(Word.parse("xd"), nested)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("xxdxdxdd", {0: 0, 2: 9, 4: 5}),
        ("xdxxdxdd", {0: 1, 2: 9, 4: 4}),
        ("xxxxxxdd", {0: 5, 2: 9}),
        ("xd", {1: 1}),
    ],
)
def test_rank_census_golden(text: str, expected: dict) -> None:
    assert CombinatoricsService.rank_census(Word.parse(text)) == expected


def test_rank_census_sums_to_catalan() -> None:
    word = Word.parse("xxdxddxdxd")
    assert sum(CombinatoricsService.rank_census(word).values()) == CombinatoricsService.catalan(5)


@pytest.mark.parametrize("u, v", [(1, 1), (2, 1), (3, 1), (2, 2), (3, 2), (4, 3)])
def test_rank_cardinality_closed_matches_census_even(u: int, v: int) -> None:
    census = CombinatoricsService.rank_census(Word.block(2 * u, 2 * v))
    for k in range(min(u, v) + 1):
        assert census[2 * k] == CombinatoricsService.rank_cardinality_closed(u, v, k, Parity.EVEN)


@pytest.mark.parametrize("u, v", [(0, 0), (1, 0), (1, 1), (2, 1), (3, 2)])
def test_rank_cardinality_closed_matches_census_odd(u: int, v: int) -> None:
    census = CombinatoricsService.rank_census(Word.block(2 * u + 1, 2 * v + 1))
    for k in range(min(u, v) + 1):
        assert census[2 * k + 1] == CombinatoricsService.rank_cardinality_closed(u, v, k, Parity.ODD)


def test_sigma_census_respects_ceiling(settings_env) -> None:
    settings_env(max_l=8)
    with pytest.raises(CapacityError):
        CombinatoricsService.sigma_census(Word.parse("xd" * 5))


def test_sigma_census_parallel_matches_serial(settings_env) -> None:
    word = Word.parse("xxdxdxddxd")
    serial = CombinatoricsService.sigma_census(word)
    settings_env(workers=2)
    assert CombinatoricsService.sigma_census(word) == serial


def test_sigma_census_counts_all_pairings() -> None:
    word = Word.block(6, 6)
    census = CombinatoricsService.sigma_census(word)
    assert sum(census.values()) == CombinatoricsService.catalan(6)
    assert census[0] == 1
    assert CombinatoricsService.sigma_census(Word.parse("xdx")) == {}
    assert CombinatoricsService.sigma_census(Word()) == {0: 1}


def test_letter_flip_and_word_symmetries() -> None:
    word = Word.parse("xxdxd")
    assert str(word.flip()) == "ddxdx"
    assert str(word.conjugate()) == "xdxdd"
    assert str(word.rotate(2)) == "dxdxx"
    assert Letter.PLAIN.flipped() is Letter.DAGGER


def test_rank_cardinalities_sum_to_catalan() -> None:
    closed = CombinatoricsService.rank_cardinality_closed
    catalan = CombinatoricsService.catalan
    for u in range(8):
        for v in range(8):
            ks = range(min(u, v) + 1)
            assert sum(closed(u, v, k, Parity.EVEN) for k in ks) == catalan(u + v), (u, v)
            assert sum(closed(u, v, k, Parity.ODD) for k in ks) == catalan(u + v + 1), (u, v)
