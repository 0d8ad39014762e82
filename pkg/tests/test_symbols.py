import pytest

from pathcompose.symbols import (
    BLOCKS,
    GROUPS,
    generate_symbols,
    is_alternating,
    is_composable,
    render_expr,
    render_symbols,
)


def words(k, i, j):
    return generate_symbols(k).entries[(i, j)]


def line(k, i, j):
    return next(
        ln for ln in render_symbols(generate_symbols(k)).splitlines()
        if ln.startswith(f"Symbol({k},{i},{j}) =")
    )


def test_golden_symbol_4_1_3():
    assert words(4, 1, 3) == {("MX", "XN"), ("MX", "XXN", "XXM", "XN")}
    assert line(4, 1, 3) == "Symbol(4,1,3) = MX*XN + MX*XXN*XXM*XN"


def test_k1_entries():
    assert words(1, 1, 1) == {("MM",)}
    assert words(1, 3, 3) == {("NN",)}
    # one switch is enough to cross from one side to the other
    assert words(1, 1, 3) == {("MX", "XN")}


def test_k0_only_single_factor_words():
    s = generate_symbols(0)
    all_words = list(s.words())
    assert all(len(w) == 1 for w in all_words)
    assert sorted(w[0] for w in all_words) == sorted(BLOCKS)
    for tok, (_, r, c) in BLOCKS.items():
        assert (tok,) in s.entries[(r, c)]
    assert line(0, 1, 3) == "Symbol(0,1,3) = 0"


def test_k2_boundary_to_boundary_enumeration():
    # Factors alternate sides and every factor maps group 2 to group 2:
    # only XXM and XXN qualify, giving alternating strings of length <= 3.
    expected = []
    for length in (1, 2, 3):
        for first, other in (("XXM", "XXN"), ("XXN", "XXM")):
            expected.append("*".join(first if t % 2 == 0 else other for t in range(length)))
    assert line(2, 2, 2) == "Symbol(2,2,2) = " + " + ".join(expected)
    assert line(2, 2, 2) == (
        "Symbol(2,2,2) = XXM + XXN + XXM*XXN + XXN*XXM + XXM*XXN*XXM + XXN*XXM*XXN"
    )


def test_render_empty_expression():
    assert render_expr(frozenset()) == "0"


def test_render_is_deterministic_and_complete():
    text = render_symbols(generate_symbols(3))
    lines = text.splitlines()
    assert len(lines) == 9
    assert lines == [ln for ln in render_symbols(generate_symbols(3)).splitlines()]
    assert text.endswith("\n")


@pytest.mark.parametrize("k", range(9))
def test_words_are_composable_alternating_and_well_placed(k):
    s = generate_symbols(k)
    for (i, j), expr in s.entries.items():
        for w in expr:
            assert 1 <= len(w) <= k + 1
            assert is_composable(w) and is_alternating(w)
            assert BLOCKS[w[0]][1] == i and BLOCKS[w[-1]][2] == j


@pytest.mark.parametrize("k", range(8))
def test_words_grow_monotonically_in_k(k):
    a, b = generate_symbols(k), generate_symbols(k + 1)
    for key in a.entries:
        assert a.entries[key] <= b.entries[key]


def test_generation_is_memoised():
    assert generate_symbols(5) is generate_symbols(5)


def test_negative_k_rejected():
    with pytest.raises(ValueError):
        generate_symbols(-1)


def brute_force_words(k):
    """Every token string of length <= k+1 kept iff composable and alternating."""
    import itertools

    out = {(i, j): set() for i in GROUPS for j in GROUPS}
    for n in range(1, k + 2):
        for w in itertools.product(BLOCKS, repeat=n):
            if is_composable(w) and is_alternating(w):
                out[(BLOCKS[w[0]][1], BLOCKS[w[-1]][2])].add(w)
    return out


@pytest.mark.parametrize("k", range(5))
def test_generation_matches_brute_force(k):
    assert {key: set(v) for key, v in generate_symbols(k).entries.items()} == brute_force_words(k)
