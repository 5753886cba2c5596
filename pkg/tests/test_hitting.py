import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_min_hitting_set
from cforcing._kernels import BACKEND
from cforcing.graph import bits, mask_of
from cforcing.hitting import is_hitting_set, min_hitting_set, reduce_constraints

families = st.lists(st.sets(st.integers(0, 11), min_size=1, max_size=5), max_size=12)


def test_reduce_drops_supersets_and_duplicates():
    assert reduce_constraints([0b111, 0b011, 0b011, 0b100]) == [0b100, 0b011]


def test_empty_family_and_empty_member():
    assert min_hitting_set([]) == 0
    with pytest.raises(ValueError):
        min_hitting_set([0b1, 0])


def test_bad_incumbent():
    with pytest.raises(ValueError):
        min_hitting_set([0b1, 0b10], incumbent=0b1)


def test_lex_smallest_among_optima():
    # {0,1} and {2,3}: every pick of one from each is optimal, {0,2} is lex-min
    assert bits(min_hitting_set([0b0011, 0b1100])) == [0, 2]


@given(families)
def test_matches_brute_force(sets):
    masks = [mask_of(s) for s in sets]
    universe = set().union(*sets) if sets else set()
    want = brute_min_hitting_set([set(s) for s in sets], universe)
    for backend in ("python", None):
        got = min_hitting_set(masks, backend=backend)
        assert is_hitting_set(masks, got)
        assert frozenset(bits(got)) == want


@given(families, st.data())
def test_incumbent_does_not_change_answer(sets, data):
    masks = [mask_of(s) for s in sets]
    universe = mask_of(set().union(*sets)) if sets else 0
    assert min_hitting_set(masks, incumbent=universe) == min_hitting_set(masks)


@pytest.mark.skipif(BACKEND != "cython", reason="compiled kernels not built")
def test_cython_backend_agrees():
    masks = [0b1010, 0b0110, 0b1100_0001, 0b11]
    assert min_hitting_set(masks, backend="cython") == min_hitting_set(masks, backend="python")
