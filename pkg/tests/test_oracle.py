import pytest
from hypothesis import given

import cycledec as cd
from conftest import eulerian_graphs
from helpers import brute_tw_le_2, check_cycle, mk_bowtie, mk_k4, mk_k5


class TestCycleNumbers:
    def test_cycle_is_forced(self):
        res = cd.oracle_cycle_numbers(cd.gen_cycle(5))
        assert (res.c_min, res.nu_max) == (1, 1)

    def test_multiedges_force_pairings(self):
        for k in range(1, 9):
            res = cd.oracle_cycle_numbers(cd.gen_eulerian_multiedge(k))
            assert (res.c_min, res.nu_max) == (k, k)

    def test_necklace3(self):
        res = cd.oracle_cycle_numbers(cd.gen_closed_necklace(3))
        assert (res.c_min, res.nu_max) == (2, 3)

    def test_k5(self):
        res = cd.oracle_cycle_numbers(mk_k5())
        assert (res.c_min, res.nu_max) == (2, 3)

    def test_bowtie(self):
        res = cd.oracle_cycle_numbers(mk_bowtie())
        assert (res.c_min, res.nu_max) == (2, 2)

    def test_single_vertex(self):
        res = cd.oracle_cycle_numbers(cd.MultiGraph(1, []))
        assert (res.c_min, res.nu_max) == (0, 0)
        assert res.min_witness.cycles == ()

    def test_rejects_non_eulerian(self):
        with pytest.raises(cd.NotEulerianError):
            cd.oracle_cycle_numbers(cd.MultiGraph(3, [(0, 1), (1, 2)]))

    def test_edge_budget(self):
        with pytest.raises(cd.TooLargeError):
            cd.oracle_cycle_numbers(cd.gen_cycle(25))
        res = cd.oracle_cycle_numbers(cd.gen_cycle(26), edge_limit=26)
        assert (res.c_min, res.nu_max) == (1, 1)

    @given(eulerian_graphs(max_n=7, max_extra=2))
    def test_witnesses_validate(self, g):
        if g.m > 14:
            return
        res = cd.oracle_cycle_numbers(g)
        assert res.c_min <= res.nu_max
        assert len(res.min_witness.cycles) == res.c_min
        assert len(res.max_witness.cycles) == res.nu_max
        cd.validate_cycle_decomposition(g, res.min_witness)
        cd.validate_cycle_decomposition(g, res.max_witness)


class TestCyclePairScan:
    def test_necklace3_pair(self):
        pair = cd.has_triple_intersecting_cycle_pair(cd.gen_closed_necklace(3))
        assert pair is not None
        a, b = pair
        check_cycle(cd.gen_closed_necklace(3), a)
        check_cycle(cd.gen_closed_necklace(3), b)
        assert not set(a.edge_ids) & set(b.edge_ids)
        assert len(set(a.vertex_ids) & set(b.vertex_ids)) >= 3
        # the two triangles
        assert len(a) == 3 and len(b) == 3

    def test_bowtie_none(self):
        assert cd.has_triple_intersecting_cycle_pair(mk_bowtie()) is None

    def test_k5_pair(self):
        g = mk_k5()
        pair = cd.has_triple_intersecting_cycle_pair(g)
        assert pair is not None
        a, b = pair
        check_cycle(g, a)
        check_cycle(g, b)
        assert not set(a.edge_ids) & set(b.edge_ids)
        assert len(set(a.vertex_ids) & set(b.vertex_ids)) >= 3

    def test_enumeration_unique_and_complete(self):
        g = mk_k4()
        cycles = cd.enumerate_simple_cycles(g)
        keys = {frozenset(c.edge_ids) for c in cycles}
        assert len(keys) == len(cycles)
        # K4: 4 triangles + 3 four-cycles
        assert sorted(len(c) for c in cycles) == [3, 3, 3, 3, 4, 4, 4]

    def test_parallel_pair_counts_as_cycle(self):
        cycles = cd.enumerate_simple_cycles(cd.gen_eulerian_multiedge(2))
        assert sorted(len(c) for c in cycles) == [2, 2, 2, 2, 2, 2]


class TestTreewidth:
    def test_known_values(self):
        assert cd.is_treewidth_at_most_2(cd.gen_cycle(7))
        assert cd.is_treewidth_at_most_2(cd.gen_closed_necklace(5))
        assert cd.is_treewidth_at_most_2(cd.MultiGraph(1, []))
        assert not cd.is_treewidth_at_most_2(mk_k4())
        assert not cd.is_treewidth_at_most_2(mk_k5())

    def test_parallel_edges_ignored(self):
        doubled_k4 = cd.MultiGraph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)] * 2)
        assert not cd.is_treewidth_at_most_2(doubled_k4)
        assert cd.is_treewidth_at_most_2(cd.gen_eulerian_multiedge(4))

    @given(eulerian_graphs(max_n=8, max_extra=3))
    def test_matches_elimination_search(self, g):
        assert cd.is_treewidth_at_most_2(g) == brute_tw_le_2(g)


class TestMembership:
    def test_class_h(self):
        assert cd.is_class_H(cd.gen_closed_necklace(5))
        n2, n3 = cd.gen_closed_necklace(2), cd.gen_closed_necklace(3)
        joined, _ = cd.edge_identification(n2, 0, 0, n3, 0, 0)
        assert cd.is_class_H(joined)
        assert not cd.is_class_H(mk_k5())
        assert not cd.is_class_H(cd.gen_cycle(5))
        assert not cd.is_class_H(mk_bowtie())

    def test_class_h_closed_under_edge_identification(self):
        for i in range(10):
            rng = cd.Rng(7000 + i)
            g1 = cd.gen_class_H(2 + rng.below(12), 100 + i)
            g2 = cd.gen_class_H(2 + rng.below(12), 200 + i)
            e1 = rng.below(g1.m)
            e2 = rng.below(g2.m)
            u1 = g1.endpoints(e1)[rng.below(2)]
            u2 = g2.endpoints(e2)[rng.below(2)]
            joined, _ = cd.edge_identification(g1, e1, u1, g2, e2, u2)
            assert cd.is_class_H(joined)

    def test_class_h_prime(self):
        assert cd.is_class_H_prime(cd.gen_cycle(9))
        assert cd.is_class_H_prime(cd.subdivide_edge(cd.gen_closed_necklace(3), 0))
        assert cd.is_class_H_prime(mk_bowtie())
        assert cd.is_class_H_prime(cd.MultiGraph(1, []))
        assert not cd.is_class_H_prime(mk_k5())
        six_bundle = cd.gen_eulerian_multiedge(3)
        assert not cd.is_class_H_prime(six_bundle)  # degree 6

    def test_closed_necklace_recognizer(self):
        assert cd.is_closed_necklace(cd.gen_closed_necklace(2))
        assert cd.is_closed_necklace(cd.gen_closed_necklace(6))
        assert not cd.is_closed_necklace(cd.gen_eulerian_multiedge(3))
        assert not cd.is_closed_necklace(cd.gen_cycle(4))
        assert not cd.is_closed_necklace(cd.MultiGraph(1, []))
        # right counts, wrong structure: two disjoint doubled cycles are not connected
        two = cd.MultiGraph(4, [(0, 1), (0, 1), (0, 1), (0, 1), (2, 3), (2, 3), (2, 3), (2, 3)])
        assert not cd.is_closed_necklace(two)


class TestNecklaceDecomposition:
    def test_leaf(self):
        tree = cd.decompose_class_H(cd.gen_closed_necklace(4))
        assert tree.parts == ()
        assert tree.cut is None
        assert cd.verify_necklace_replay(tree)

    def test_one_split(self):
        n2 = cd.gen_eulerian_multiedge(2)
        g, _ = cd.edge_identification(n2, 0, 0, n2, 0, 0)
        tree = cd.decompose_class_H(g)
        assert tree.cut == (6, 7)
        leaves = tree.leaves()
        assert sorted(leaf.graph.n for leaf in leaves) == [2, 2]
        assert all(cd.is_closed_necklace(leaf.graph) for leaf in leaves)
        assert cd.verify_necklace_replay(tree)

    def test_two_splits(self):
        n2 = cd.gen_eulerian_multiedge(2)
        inner, _ = cd.edge_identification(n2, 0, 0, n2, 0, 0)
        g, _ = cd.edge_identification(inner, 0, 0, cd.gen_closed_necklace(3), 0, 0)
        tree = cd.decompose_class_H(g)
        leaves = tree.leaves()
        assert sorted(leaf.graph.n for leaf in leaves) == [2, 2, 3]
        assert cd.verify_necklace_replay(tree)

    def test_rejects_outsiders(self):
        with pytest.raises(cd.NotClassHError):
            cd.decompose_class_H(mk_k5())
        with pytest.raises(cd.NotClassHError):
            cd.decompose_class_H(cd.gen_cycle(4))

    def test_leaf_multiset_invariant_under_cut_choice(self):
        for seed in range(8):
            g = cd.gen_class_H(14, seed)
            base = sorted(l.graph.n for l in cd.decompose_class_H(g).leaves())
            for cut_seed in (1, 2, 3):
                alt = sorted(l.graph.n for l in cd.decompose_class_H(g, cut_seed=cut_seed).leaves())
                assert alt == base, (seed, cut_seed, base, alt)
