import itertools

import pytest
from hypothesis import given, strategies as st

from hypercatalan.errors import BaseMismatch, InvalidTypeVector, UnboundedEnumeration
from hypercatalan.type_vectors import (
    HYPER,
    NULL,
    TUTRANK,
    TypeVector,
    combine,
    enumerate_types,
    normalize,
    stats,
)

parts = st.lists(st.integers(0, 4), max_size=5)


def tv(*p, base=HYPER):
    return TypeVector(tuple(p), base)


class TestNormalize:
    def test_strips_trailing_zeros(self):
        assert normalize([1, 0, 0]) == tv(1)

    def test_null(self):
        assert normalize([]) == NULL
        assert NULL.is_null

    def test_interior_zero_kept(self):
        assert normalize([0, 2]).parts == (0, 2)

    def test_negative_rejected(self):
        with pytest.raises(InvalidTypeVector):
            normalize([1, -1])

    def test_equality_respects_base(self):
        assert tv(1) != tv(1, base=TUTRANK)

    def test_parse_roundtrip(self):
        assert TypeVector.parse("1,0,1") == tv(1, 0, 1)
        assert TypeVector.parse("") == NULL
        assert str(tv(1, 0, 1)) == "1,0,1"


class TestStats:
    def test_null(self):
        s = stats(NULL)
        assert (s.vertices, s.edges, s.faces) == (2, 1, 0)

    def test_one_one(self):
        s = stats(tv(1, 1))
        assert (s.vertices, s.edges, s.faces) == (5, 6, 2)

    def test_two_gon(self):
        s = stats(tv(1, base=TUTRANK))
        assert (s.vertices, s.edges, s.faces) == (2, 2, 1)

    @given(parts, st.sampled_from([HYPER, TUTRANK]))
    def test_euler_characteristic(self, p, base):
        assert stats(TypeVector(tuple(p), base)).euler_characteristic == 1


class TestEnumerate:
    def test_one_face(self):
        assert enumerate_types(1, 3) == [NULL, tv(1), tv(0, 1)]

    def test_two_faces_matches_brute_force(self):
        got = enumerate_types(2, 3)
        brute = {tv(a, b) for a, b in itertools.product(range(3), repeat=2) if a + b <= 2}
        assert set(got) == brute
        assert len(got) == len(brute)
        assert got[:3] == [NULL, tv(1), tv(0, 1)]
        assert got[3:] == [tv(2), tv(1, 1), tv(0, 2)]

    def test_tutrank_with_k1(self):
        assert enumerate_types(1, 2, TUTRANK, 2) == [
            TypeVector((), TUTRANK), tv(1, base=TUTRANK), tv(0, 1, base=TUTRANK)
        ]

    def test_tutrank_unbounded(self):
        with pytest.raises(UnboundedEnumeration):
            enumerate_types(None, 3, TUTRANK)

    @pytest.mark.parametrize("f,d", [(3, 4), (4, 5), (2, 6)])
    def test_closed_and_duplicate_free(self, f, d):
        got = enumerate_types(f, d)
        assert len(set(got)) == len(got)
        assert all(m.faces <= f and m.degree <= d for m in got)
        brute = {
            normalize(p) for p in itertools.product(range(f + 1), repeat=d - 1) if sum(p) <= f
        }
        assert set(got) == brute

    def test_order_is_faces_then_reverse_lex(self):
        got = enumerate_types(3, 4)
        keys = [(m.faces, tuple(-x for x in m.padded(3))) for m in got]
        assert keys == sorted(keys)

    def test_extra_bounds(self):
        got = enumerate_types(None, 6, max_vertices=3)
        assert all(stats(m).vertices - 2 <= 3 for m in got)
        assert tv(0, 0, 1) in got and tv(0, 0, 0, 1) not in got


class TestCombine:
    def test_examples(self):
        assert combine(tv(1), tv(0, 1)) == tv(1, 1)
        assert combine(NULL, tv(2)) == tv(2)
        c = combine(tv(1, 1), tv(1, 1))
        s = stats(c)
        assert c == tv(2, 2) and (s.faces, s.edges, s.vertices) == (4, 11, 8)

    def test_base_mismatch(self):
        with pytest.raises(BaseMismatch):
            combine(tv(1), tv(1, base=TUTRANK))

    @given(parts, parts, parts)
    def test_commutative_associative_identity(self, a, b, c):
        a, b, c = tv(*a), tv(*b), tv(*c)
        assert combine(a, b) == combine(b, a)
        assert combine(combine(a, b), c) == combine(a, combine(b, c))
        assert combine(a, NULL) == a

    @given(parts, parts)
    def test_stats_additive(self, a, b):
        a, b = tv(*a), tv(*b)
        sa, sb, sc = stats(a), stats(b), stats(combine(a, b))
        assert sc.faces == sa.faces + sb.faces
        assert sc.vertices - 2 == (sa.vertices - 2) + (sb.vertices - 2)
        assert sc.edges - 1 == (sa.edges - 1) + (sb.edges - 1)
