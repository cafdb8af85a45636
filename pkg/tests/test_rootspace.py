import random
from fractions import Fraction

import pytest

from ckforms.errors import DimensionMismatch, NotInSpan, UnsupportedSystem, ZeroRoot
from ckforms.linalg import dot, rank_of, solve, vector, vneg
from ckforms.rootspace import (
    build_root_system,
    direct_sum,
    in_root_span,
    is_dominant,
    reflect,
    root_count_formula,
)
from ckforms.weyl import enumerate_weyl

from helpers import random_span_vector

ALL_SMALL = [
    ("A", 1), ("A", 2), ("A", 3), ("A", 4),
    ("B", 2), ("B", 3), ("B", 4),
    ("C", 2), ("C", 3), ("C", 4),
    ("D", 3), ("D", 4),
    ("BC", 1), ("BC", 2), ("BC", 3),
    ("G", 2), ("F", 4), ("E", 6),
]


def test_a2_basic():
    s = build_root_system("A", 2)
    assert len(s.roots) == 6
    assert s.ambient_dim == 3
    assert s.rank == 2


def test_bc1_roots():
    s = build_root_system("BC", 1)
    assert set(s.roots) == {vector([1]), vector([-1]), vector([2]), vector([-2])}


@pytest.mark.parametrize("letter,rank", [("D", 2), ("E", 5), ("B", 1), ("C", 0),
                                         ("G", 3), ("F", 5), ("A", 0), ("H", 3)])
def test_unsupported(letter, rank):
    with pytest.raises(UnsupportedSystem):
        build_root_system(letter, rank)


def test_root_counts_match_formulas():
    counts = {"A": lambda n: n * (n + 1), "B": lambda n: 2 * n * n,
              "C": lambda n: 2 * n * n, "D": lambda n: 2 * n * (n - 1),
              "BC": lambda n: 2 * n * (n + 1)}
    for letter, lo in (("A", 1), ("B", 2), ("C", 2), ("D", 3), ("BC", 1)):
        for n in range(lo, 9):
            s = build_root_system(letter, n)
            assert len(s.roots) == counts[letter](n) == root_count_formula(letter, n)
    for letter, rank, expected in (("G", 2, 12), ("F", 4, 48),
                                   ("E", 6, 72), ("E", 7, 126), ("E", 8, 240)):
        assert len(build_root_system(letter, rank).roots) == expected


@pytest.mark.parametrize("letter,rank", ALL_SMALL)
def test_structural_invariants(letter, rank):
    s = build_root_system(letter, rank)
    # simple roots: independent, spanning, and actual roots
    assert rank_of(s.simple_roots) == s.rank == len(s.simple_roots)
    assert rank_of(s.roots) == s.rank
    assert all(a in set(s.roots) for a in s.simple_roots)
    # roots = positives and their negatives
    positives = set(s.positive_roots)
    assert positives | {vneg(r) for r in positives} == set(s.roots)
    assert positives & {vneg(r) for r in positives} == set()
    # every positive root is a nonnegative integer combination of simples
    simple_cols = [tuple(a[i] for a in s.simple_roots) for i in range(s.ambient_dim)]
    for r in s.positive_roots:
        coeffs = solve(simple_cols, r)
        assert coeffs is not None
        assert all(c.denominator == 1 and c >= 0 for c in coeffs)


@pytest.mark.parametrize("letter,rank", ALL_SMALL + [("E", 7), ("E", 8)])
def test_closed_under_reflection(letter, rank):
    s = build_root_system(letter, rank)
    roots = set(s.roots)
    for a in s.roots:
        images = {reflect(r, a) for r in s.roots}
        assert images == roots


def test_bc_proportional_pairs_only():
    s = build_root_system("BC", 3)
    roots = set(s.roots)
    for i in range(3):
        e = vector([1 if j == i else 0 for j in range(3)])
        assert e in roots and vector([2 if j == i else 0 for j in range(3)]) in roots
    # proportional pairs are exactly {e_i, 2e_i} and negatives
    for r in s.roots:
        multiples = [u for u in roots if rank_of([r, u]) == 1]
        norms = sorted(dot(u, u) for u in multiples)
        if dot(r, r) in (Fraction(1), Fraction(4)):
            assert norms == [1, 1, 4, 4]
        else:
            assert norms == [2, 2]


def test_is_dominant_examples():
    a2 = build_root_system("A", 2)
    assert is_dominant(a2, vector([1, 0, -1]))
    assert not is_dominant(a2, vector([0, 1, -1]))
    assert is_dominant(build_root_system("B", 2), vector([2, 1]))


def test_is_dominant_errors():
    a2 = build_root_system("A", 2)
    with pytest.raises(DimensionMismatch):
        is_dominant(a2, vector([1, 0]))
    with pytest.raises(NotInSpan):
        is_dominant(a2, vector([1, 1, 1]))


def test_reflect_examples():
    assert reflect(vector([1, 0, -1]), vector([1, -1, 0])) == vector([0, 1, -1])
    assert reflect(vector([2, 1]), vector([0, 1])) == vector([2, -1])
    r = vector([1, -2, 1])
    assert reflect(r, r) == vneg(r)


def test_reflect_errors():
    with pytest.raises(ZeroRoot):
        reflect(vector([1, 0]), vector([0, 0]))
    with pytest.raises(DimensionMismatch):
        reflect(vector([1, 0]), vector([1, 0, 0]))


def test_reflect_involution():
    rng = random.Random(7)
    for letter, rank in ALL_SMALL:
        s = build_root_system(letter, rank)
        v = random_span_vector(s, rng)
        for a in s.simple_roots:
            assert reflect(reflect(v, a), a) == v


@pytest.mark.parametrize("letter,rank", [("A", 2), ("A", 3), ("B", 2), ("B", 3),
                                         ("C", 3), ("BC", 2), ("G", 2), ("D", 3)])
def test_unique_dominant_in_regular_orbit(letter, rank):
    # a regular vector has exactly one dominant element in its orbit
    s = build_root_system(letter, rank)
    rng = random.Random(rank * 101 + ord(letter[0]))
    for _ in range(5):
        v = random_span_vector(s, rng)
        if any(dot(v, r) == 0 for r in s.roots):
            continue
        dominants = [u for w in enumerate_weyl(s, 10_000)
                     if is_dominant(s, (u := w.apply(v)))]
        assert len(dominants) == 1


def test_direct_sum_layout():
    a1 = build_root_system("A", 1)
    s = direct_sum(a1, a1)
    assert s.ambient_dim == 4
    assert s.rank == 2
    assert len(s.roots) == 4
    assert s.label == "A1+A1"
    assert s.type_letter is None
    assert in_root_span(s, vector([1, -1, 0, 0]))
    assert not in_root_span(s, vector([1, 0, -1, 0]))


def test_type_a_span_requires_zero_sum():
    a3 = build_root_system("A", 3)
    assert in_root_span(a3, vector([1, 2, -3, 0]))
    assert not in_root_span(a3, vector([1, 0, 0, 0]))
