"""Simplicial complexes, matching complexes, and closed-form link models."""

import itertools

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from splitmerge.characters import Character
from splitmerge.complexes import (
    SimplicialComplex,
    ascending_link_model,
    cone,
    descending_link_model,
    general_matching_complex,
    gm_linear,
    join,
    linear_graph,
    m_linear,
    matching_complex,
    move_delta,
    shift_labels,
)


def v(i):
    return ("v", i)


def e(i):
    return ("e", i)


def fs(*labels):
    return frozenset(labels)


class TestSimplicialComplex:
    def test_facets_are_maximal(self):
        k = SimplicialComplex([fs(1, 2, 3), fs(1, 2), fs(4)])
        assert k.facets == frozenset({fs(1, 2, 3), fs(4)})

    def test_downward_closure(self):
        k = SimplicialComplex([fs(1, 2, 3)])
        assert fs(1, 2) in k and fs(3) in k
        assert fs(1, 4) not in k

    def test_empty(self):
        k = SimplicialComplex.empty()
        assert k.is_empty() and k.dim() == -1 and k.f_vector() == ()
        with pytest.raises(ValueError):
            SimplicialComplex([fs()])

    def test_f_vector_and_euler(self):
        k = SimplicialComplex([fs(1, 2, 3)])
        assert k.f_vector() == (3, 3, 1)
        assert k.euler_characteristic() == 1
        assert SimplicialComplex.boundary_sphere([1, 2, 3]).f_vector() == (3, 3)

    def test_components(self):
        k = SimplicialComplex([fs(1, 2), fs(3, 4), fs(5)])
        comps = {frozenset(c) for c in k.components()}
        assert comps == {fs(1, 2), fs(3, 4), fs(5)}
        assert not k.is_connected()
        assert SimplicialComplex([fs(1, 2), fs(2, 3)]).is_connected()

    def test_full_subcomplex(self):
        k = gm_linear(3)
        assert k.full_subcomplex(k.vertices) == k
        assert k.full_subcomplex(()).is_empty()
        tri = k.full_subcomplex({v(1), v(2), v(3)})
        assert tri == SimplicialComplex([fs(v(1), v(2), v(3))])

    def test_full_subcomplex_composes(self):
        k = gm_linear(4)
        keep1 = {v(1), v(2), v(3), e(3)}
        keep2 = {v(1), v(3), e(3)}
        assert k.full_subcomplex(keep1).full_subcomplex(keep2) == k.full_subcomplex(
            keep2
        )

    def test_star_link(self):
        k = m_linear(5)
        lk = k.link(e(1))
        assert lk == SimplicialComplex([fs(e(3)), fs(e(4))])
        st_ = k.star(e(1))
        assert st_.is_cone_with_apex(e(1))

    def test_remove_open_star(self):
        k = SimplicialComplex([fs(1, 2, 3)])
        got = k.remove_open_star(fs(1, 2))
        assert fs(1, 2) not in got and fs(1, 2, 3) not in got
        assert fs(1) in got and fs(2, 3) in got

    def test_join_spheres(self):
        s0a = SimplicialComplex([fs("a1"), fs("a2")])
        s0b = SimplicialComplex([fs("b1"), fs("b2")])
        j = join(s0a, s0b)
        assert j.f_vector() == (4, 4)
        cyc = nx.Graph(tuple(s) for s in j.k_simplices(1))
        assert len(nx.cycle_basis(cyc)) == 1

    def test_cone_is_cone(self):
        k = m_linear(5)
        c = cone(k, "apex")
        assert c.is_cone_with_apex("apex")
        assert not k.is_cone_with_apex(e(1))

    def test_relabel(self):
        k = SimplicialComplex([fs(1, 2)])
        assert k.relabel({1: "x", 2: "y"}) == SimplicialComplex([fs("x", "y")])

    def test_to_json_shape(self):
        j = gm_linear(2).to_json()
        assert set(j) == {"vertices", "facets"}
        assert len(j["vertices"]) == 3
        for f in j["facets"]:
            assert all(isinstance(i, int) for i in f)


class TestLinearGraph:
    def test_one_vertex(self):
        k = linear_graph(1)
        assert k.f_vector() == (1,)

    def test_three(self):
        k = linear_graph(3)
        assert set(k.vertices) == {v(1), v(2), v(3)}
        assert set(map(frozenset, k.k_simplices(1))) == {
            fs(v(1), v(2)),
            fs(v(2), v(3)),
        }

    def test_five(self):
        assert linear_graph(5).f_vector() == (5, 4)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            linear_graph(0)


def brute_force_gm(base: SimplicialComplex) -> SimplicialComplex:
    """Independent oracle: enumerate pairwise-disjoint sets of simplices."""
    items = sorted(base.simplices(), key=lambda s: (len(s), sorted(map(str, s))))
    facets = []
    for r in range(1, len(items) + 1):
        layer = []
        for combo in itertools.combinations(items, r):
            union = set()
            if all(not (union & s) and not union.update(s) for s in combo):
                layer.append(frozenset(combo))
        if not layer:
            break
        facets.extend(layer)
    return SimplicialComplex(facets) if facets else SimplicialComplex.empty()


class TestMatchingComplexes:
    def test_gm_l2(self):
        k = gm_linear(2)
        assert set(k.vertices) == {v(1), v(2), e(1)}
        assert set(map(frozenset, k.k_simplices(1))) == {fs(v(1), v(2))}

    def test_gm_l3(self):
        k = gm_linear(3)
        assert k.f_vector() == (5, 5, 1)
        assert set(map(frozenset, k.k_simplices(1))) == {
            fs(v(1), v(2)),
            fs(v(2), v(3)),
            fs(v(1), v(3)),
            fs(v(1), e(2)),
            fs(v(3), e(1)),
        }
        assert k.k_simplices(2) == [fs(v(1), v(2), v(3))]

    def test_gm_point(self):
        assert general_matching_complex(SimplicialComplex([fs("p")])).f_vector() == (
            1,
        )

    def test_m_l2(self):
        assert m_linear(2).f_vector() == (1,)

    def test_m_l4(self):
        k = m_linear(4)
        assert set(k.vertices) == {e(1), e(2), e(3)}
        assert set(map(frozenset, k.k_simplices(1))) == {fs(e(1), e(3))}
        assert len(k.components()) == 2

    def test_m_l5(self):
        k = m_linear(5)
        assert set(map(frozenset, k.k_simplices(1))) == {
            fs(e(1), e(3)),
            fs(e(1), e(4)),
            fs(e(2), e(4)),
        }
        assert k.is_connected()

    @pytest.mark.parametrize("n", range(2, 7))
    def test_gm_agrees_with_brute_force(self, n):
        got = gm_linear(n)
        want = brute_force_gm(linear_graph(n))

        # brute-force labels are frozensets of base labels; translate
        def trans(simplex):
            out = set()
            for part in simplex:
                if len(part) == 1:
                    out.add(next(iter(part)))
                else:
                    i = min(i for (_, i) in part)
                    out.add(("e", i))
            return frozenset(out)

        assert {trans(f) for f in want.simplices()} == got.simplices()

    @pytest.mark.parametrize("n", range(2, 9))
    def test_m_agrees_with_clique_oracle(self, n):
        # matchings of a path graph = independent sets of its line graph
        # = cliques of the complement of the line graph
        k = m_linear(n)
        g = nx.complement(nx.line_graph(nx.path_graph(n)))
        cliques = set()
        for c in nx.enumerate_all_cliques(g):
            cliques.add(frozenset(("e", min(a, b) + 1) for (a, b) in c))
        assert cliques == set(k.simplices())

    def test_matching_uses_one_skeleton(self):
        # triangle: every two edges share a vertex, so no matching of size 2
        k = matching_complex(SimplicialComplex([fs(1, 2, 3)]))
        assert k.f_vector() == (3,)

    def test_star_union_recursion(self):
        # st(last-but-one edge) union st(last edge) covers everything,
        # and the two stars meet in a shifted copy of the n-3 complex
        for n in range(5, 10):
            k = m_linear(n)
            s1 = k.star(e(n - 2))
            s2 = k.star(e(n - 1))
            assert set(s1.simplices()) | set(s2.simplices()) == set(k.simplices())
            inter = SimplicialComplex(
                [s for s in s1.simplices() if s in s2.simplices()]
            )
            assert inter == k.full_subcomplex(
                set(m_linear(n - 3).vertices)
            )


class TestShiftAndDeltas:
    def test_shift_labels(self):
        assert shift_labels(m_linear(4), 1) == SimplicialComplex(
            [fs(e(2), e(4)), fs(e(3))]
        )

    def test_move_delta_split(self):
        n = 5
        assert move_delta(n, v(1)) == (-1, 0)
        assert move_delta(n, v(3)) == (0, 0)
        assert move_delta(n, v(n)) == (0, -1)

    def test_move_delta_merge(self):
        n = 5
        assert move_delta(n, e(1)) == (1, 0)
        assert move_delta(n, e(2)) == (0, 0)
        assert move_delta(n, e(n - 1)) == (0, 1)


class TestAscendingModels:
    def test_small_band_example(self):
        # chi weights (1,0), ties broken upward, 3 feet, band [3,4]:
        # single splits fit under the cap, split pairs do not
        k = ascending_link_model(3, Character(1, 0), 1, (3, 4))
        assert set(k.vertices) == {v(2), v(3)}
        assert k.k_simplices(1) == []
        assert not k.is_empty()

    def test_negative_weight_gives_matching_complex(self):
        for n, b in [(7, 0), (7, 1), (10, 0)]:
            k = ascending_link_model(n, Character(-1, b), -1, (2, n))
            assert k == shift_labels(m_linear(n - 1), 1)

    def test_two_ended_connected_example(self):
        k = ascending_link_model(6, Character(1, 1), 1, (4, 7))
        assert set(k.vertices) == {e(1), e(5), v(2), v(3), v(4), v(5)}
        assert fs(e(1), e(5)) in k
        assert k.is_connected()

    def test_band_caps_split_pairs(self):
        # band top one above the feet count: single splits only
        k = ascending_link_model(4, Character(1, 1), 1, (2, 5))
        assert fs(v(2)) in k and fs(v(3)) in k
        assert fs(v(2), v(3)) not in k

    def test_band_violation(self):
        with pytest.raises(ValueError):
            ascending_link_model(5, Character(1, 0), 1, (2, 4))

    def test_descending_is_negated_ascending(self):
        a = descending_link_model(5, Character(1, 2), 1, (3, 6))
        b = ascending_link_model(5, Character(-1, -2), -1, (3, 6))
        assert a == b

    @given(
        st.integers(3, 8),
        st.sampled_from([-2, -1, 0, 1, 2]),
        st.sampled_from([-2, -1, 0, 1, 2]),
        st.sampled_from([1, -1]),
    )
    @settings(max_examples=60)
    def test_model_is_subcomplex_of_gm(self, n, a, b, sec):
        if a == 0 and b == 0:
            return
        k = ascending_link_model(n, Character(a, b), sec, (2, n + 2))
        gm = gm_linear(n)
        assert set(k.simplices()) <= set(gm.simplices())
