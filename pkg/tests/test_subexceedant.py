import itertools
from math import factorial

import pytest
from hypothesis import given, strategies as st

from weylrank.errors import InvalidDigitError, ParseError
from weylrank.permutation import Permutation, identity
from weylrank.subexceedant import (
    SubexceedantFunction,
    format_f_word,
    parse_f_word,
    phi,
    phi_inverse,
    validate_subexceedant,
)

from reference import naive_phi

F_151 = (1, 2, 2, 4, 3, 3, 3, 5, 5, 4, 8, 2)
F_455 = (1, 2, 2, 1, 1, 5, 5, 2, 1, 5, 2, 6)
BETA_151 = (1, 11, 12, 10, 6, 7, 3, 9, 5, 4, 8, 2)
BETA_455 = (4, 3, 8, 12, 9, 7, 10, 11, 1, 5, 2, 6)


def all_subexceedant(n):
    return itertools.product(*(range(1, i + 1) for i in range(1, n + 1)))


@st.composite
def subexceedants(draw, max_n=40):
    n = draw(st.integers(1, max_n))
    return SubexceedantFunction(tuple(draw(st.integers(1, i)) for i in range(1, n + 1)))


class TestValidate:
    def test_twelve_point_word(self):
        f = validate_subexceedant(F_151)
        assert f.n == 12 and f(11) == 8

    def test_constant_one(self):
        assert validate_subexceedant([1] * 7).values == (1,) * 7

    def test_bound_violation_names_index(self):
        with pytest.raises(InvalidDigitError) as info:
            validate_subexceedant([1, 3])
        assert info.value.index == 2

    def test_zero_rejected(self):
        with pytest.raises(InvalidDigitError) as info:
            validate_subexceedant([1, 0])
        assert info.value.index == 2

    def test_f1_forced(self):
        with pytest.raises(InvalidDigitError):
            validate_subexceedant([2])


class TestPhi:
    def test_rank_455_word(self):
        assert phi(SubexceedantFunction(F_455)).window == BETA_455

    def test_rank_151_word(self):
        assert phi(SubexceedantFunction(F_151)).window == BETA_151

    def test_identity_function(self):
        assert phi(SubexceedantFunction(tuple(range(1, 9)))) == identity(8)

    def test_single_swap(self):
        assert phi(SubexceedantFunction((1, 1))).window == (2, 1)

    def test_constant_one_gives_cycle(self):
        assert phi(SubexceedantFunction((1,) * 5)).window == (2, 3, 4, 5, 1)

    @given(subexceedants())
    def test_matches_literal_transposition_product(self, f):
        assert list(phi(f).window) == naive_phi(list(f.values))


class TestPhiInverse:
    def test_rank_455_word(self):
        assert phi_inverse(Permutation(BETA_455)).values == F_455

    def test_rank_151_word(self):
        assert phi_inverse(Permutation(BETA_151)).values == F_151

    def test_identity(self):
        assert phi_inverse(identity(6)).values == (1, 2, 3, 4, 5, 6)

    def test_top_value_is_last_entry(self):
        beta = Permutation(BETA_455)
        assert phi_inverse(beta)(12) == beta.window[-1]


@pytest.mark.parametrize("n", range(1, 7))
def test_bijection_exhaustive(n):
    functions = [SubexceedantFunction(v) for v in all_subexceedant(n)]
    assert len(functions) == factorial(n)
    images = [phi(f) for f in functions]
    assert len(set(images)) == factorial(n)
    for f, beta in zip(functions, images):
        assert phi_inverse(beta) == f
    for perm in itertools.permutations(range(1, n + 1)):
        beta = Permutation(perm)
        assert phi(phi_inverse(beta)) == beta


@given(st.integers(1, 60).flatmap(lambda n: st.permutations(range(1, n + 1))))
def test_roundtrip_random_permutation(perm):
    beta = Permutation(tuple(perm))
    assert phi(phi_inverse(beta)) == beta


@given(subexceedants(), st.data())
def test_peeling_consistency(f, data):
    # make f(j) = j above a cut point; phi(f) must fix those points
    cut = data.draw(st.integers(0, f.n))
    values = f.values[:cut] + tuple(range(cut + 1, f.n + 1))
    beta = phi(SubexceedantFunction(values))
    assert beta.window[cut:] == tuple(range(cut + 1, f.n + 1))


class TestFWord:
    def test_format(self):
        assert format_f_word(SubexceedantFunction(F_455)) == "1;2;2;1;1;5;5;2;1;5;2;6"

    def test_parse_with_trailing_separator(self):
        assert parse_f_word("1;2;2;4;3;3;3;5;5;4;8;2;").values == F_151

    @pytest.mark.parametrize("text", ["", "1;;2", "1,2", "a"])
    def test_rejects(self, text):
        with pytest.raises(ParseError):
            parse_f_word(text)

    @given(subexceedants())
    def test_roundtrip(self, f):
        assert parse_f_word(format_f_word(f)) == f
