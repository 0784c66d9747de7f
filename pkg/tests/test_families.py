import pytest

from taskdag.analysis import is_minimal_xy
from taskdag.errors import DomainError
from taskdag.families import (
    addition_trap,
    build_family,
    densest_connected_minimal_graph,
    densest_graph,
    densest_minimal_graph,
    removal_trap,
)


class TestDensestMinimal:
    def test_1_1_5(self):
        g = densest_minimal_graph(1, 1, 5)
        assert g.edge_count == 6
        assert g.profile().counts == (1, 1)

    def test_3_2_6_edge_count(self):
        assert densest_minimal_graph(3, 2, 6).edge_count == 2 * 6 - 3 - 2 - 2

    def test_2_2_4_profile(self):
        assert densest_minimal_graph(2, 2, 4).profile().counts == (2, 2)

    def test_rejects_x_below_y(self):
        with pytest.raises(DomainError, match="x >= y"):
            densest_minimal_graph(1, 2, 5)

    def test_rejects_small_n(self):
        with pytest.raises(DomainError, match="n >= x \\+ 2"):
            densest_minimal_graph(2, 1, 3)

    def test_component_shape(self):
        # y - 1 singleton components plus one non-singleton component
        for x, y, n in [(1, 1, 5), (3, 2, 6), (3, 3, 7)]:
            comps = densest_minimal_graph(x, y, n).underlying_components()
            assert sum(1 for c in comps if len(c) == 1) == y - 1
            assert sum(1 for c in comps if len(c) > 1) == 1


class TestDensestConnectedMinimal:
    def test_1_1_5(self):
        g = densest_connected_minimal_graph(1, 1, 5)
        assert g.edge_count == 6
        assert len(g.underlying_components()) == 1

    def test_2_2_6_edge_count(self):
        assert densest_connected_minimal_graph(2, 2, 6).edge_count == 2 * 6 - 2 - 2 - 2

    def test_smallest(self):
        g = densest_connected_minimal_graph(1, 1, 3)
        assert g.edges() == [(1, 2), (2, 3)]
        assert g.longest_path_length() == 2

    def test_star_boundary_y1(self):
        g = densest_connected_minimal_graph(3, 1, 4)
        assert g.edge_count == 3
        assert g.profile().counts == (3, 1)

    def test_star_boundary_x1(self):
        g = densest_connected_minimal_graph(1, 3, 4)
        assert g.edge_count == 3
        assert g.profile().counts == (1, 3)

    def test_rejects_boundary_without_unit_side(self):
        with pytest.raises(DomainError, match="min\\(x, y\\) = 1"):
            densest_connected_minimal_graph(2, 2, 4)


class TestDensestGraph:
    def test_1_1_4_is_tournament(self):
        assert densest_graph(1, 1, 4).edge_count == 6

    def test_2_3_4(self):
        g = densest_graph(2, 3, 4)
        assert g.edge_count == 2
        assert g.profile().counts == (2, 3)

    def test_2_2_5(self):
        assert densest_graph(2, 2, 5).edge_count == 8

    def test_rejects_nonexistent(self):
        with pytest.raises(DomainError, match="no \\(3, 2\\) graph"):
            densest_graph(3, 2, 3)

    @pytest.mark.parametrize("x,y,n", [(1, 1, 4), (2, 3, 4), (2, 2, 5), (3, 3, 4), (3, 1, 6)])
    def test_profile(self, x, y, n):
        assert densest_graph(x, y, n).profile().counts == (x, y)


class TestRemovalTrap:
    def test_plain_path(self):
        assert removal_trap(1, 4).edges() == [(1, 2), (2, 3), (3, 4)]

    def test_with_isolated(self):
        g = removal_trap(2, 5)
        prof = g.profile()
        assert prof.initial == {1, 5} and prof.terminal == {4, 5}

    def test_3_4(self):
        g = removal_trap(3, 4)
        assert g.edges() == [(1, 2)]
        assert g.profile().counts == (3, 3)

    @pytest.mark.parametrize("y,n", [(1, 4), (2, 5), (3, 6), (4, 9)])
    def test_every_removal_adds_a_sink(self, y, n):
        g = removal_trap(y, n)
        for a, b in g.edges():
            h = g.copy()
            h.remove_edge(a, b)
            assert len(h.profile().terminal) == y + 1


class TestAdditionTrap:
    def test_2_1_4(self):
        assert addition_trap(2, 1, 4).profile().counts == (2, 2)

    def test_3_1_5(self):
        assert addition_trap(3, 1, 5).profile().counts == (3, 2)

    def test_rejects_x_equal_y(self):
        with pytest.raises(DomainError, match="x > y"):
            addition_trap(2, 2, 5)

    @pytest.mark.parametrize("x,y,n", [(2, 1, 4), (3, 1, 5), (3, 2, 6), (4, 2, 7)])
    def test_every_addition_kills_a_source(self, x, y, n):
        from taskdag.graph import ordered_pairs

        g = addition_trap(x, y, n)
        assert g.profile().counts == (x, y + 1)
        for a, b in ordered_pairs(n):
            if g.has_edge(a, b):
                continue
            h = g.copy()
            h.add_edge(a, b)
            assert len(h.profile().initial) < x


class TestClosedFormSweep:
    def test_edge_counts_match_formulas(self):
        from math import comb

        for x in range(1, 5):
            for y in range(1, 5):
                for n in range(1, 13):
                    if x >= y >= 1 and n >= x + 2:
                        assert densest_minimal_graph(x, y, n).edge_count == 2 * n - x - y - 2
                    if n >= x + y + 1:
                        g = densest_connected_minimal_graph(x, y, n)
                        assert g.edge_count == 2 * n - x - y - 2
                        assert len(g.underlying_components()) == 1
                    if n >= max(x, y) and (n > max(x, y) or x == y):
                        k = max(0, x + y - n)
                        expected = comb(n - k, 2) - comb(x - k, 2) - comb(y - k, 2)
                        assert densest_graph(x, y, n).edge_count == expected

    def test_profiles_match_parameters(self):
        for x in range(1, 5):
            for y in range(1, x + 1):
                for n in range(x + 2, 13):
                    assert densest_minimal_graph(x, y, n).profile().counts == (x, y)
        for x in range(1, 5):
            for y in range(1, 5):
                for n in range(x + y + 1, 13):
                    assert densest_connected_minimal_graph(x, y, n).profile().counts == (x, y)

    def test_minimality_criterion(self):
        for x in range(1, 5):
            for y in range(1, x + 1):
                for n in range(x + 2, 11):
                    assert is_minimal_xy(densest_minimal_graph(x, y, n))
        for x in range(1, 5):
            for y in range(1, 5):
                for n in range(x + y + 1, 11):
                    assert is_minimal_xy(densest_connected_minimal_graph(x, y, n))


class TestDispatch:
    def test_kind_tokens(self):
        assert build_family("S", 5, x=1, y=1).edge_count == 6
        assert build_family("t", 5, x=1, y=1).edge_count == 6
        assert build_family("Q", 4, x=1, y=1).edge_count == 6
        assert build_family("removal-trap", 4, y=1).edge_count == 3
        assert build_family("addition-trap", 4, x=2, y=1).profile().counts == (2, 2)

    def test_unknown_kind(self):
        with pytest.raises(DomainError, match="unknown family kind"):
            build_family("pentagon", 5, x=1, y=1)

    def test_missing_parameter(self):
        with pytest.raises(DomainError, match="requires parameter"):
            build_family("S", 5, x=1)

    def test_serialization_is_stable(self):
        a = build_family("S", 6, x=2, y=2).to_json()
        b = build_family("S", 6, x=2, y=2).to_json()
        assert a == b
