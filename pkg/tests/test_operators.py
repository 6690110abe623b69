import numpy as np
import pytest

from gea.genome import GeneDomain
from gea.operators import (crossover, crossover_batch, flip_mutation, mutate,
                           mutate_batch, order_crossover, single_point_crossover,
                           swap_mutation)
from gea.rng import make_rng

BIN4 = GeneDomain.binary(4)
PERM5 = GeneDomain.permutation(5)


class TestSinglePoint:
    def test_cut_at_two(self):
        c1, c2 = single_point_crossover(np.array([0, 0, 0, 0]), np.array([1, 1, 1, 1]), 2)
        assert c1.tolist() == [0, 0, 1, 1]
        assert c2.tolist() == [1, 1, 0, 0]

    def test_identical_parents_yield_identical_children(self):
        g = np.array([1, 0, 1, 1])
        for cut in (1, 2, 3):
            c1, c2 = single_point_crossover(g, g, cut)
            assert np.array_equal(c1, g) and np.array_equal(c2, g)


class TestOrderCrossover:
    def test_hand_traced_example(self):
        p1 = np.array([1, 2, 3, 4, 5])
        p2 = np.array([5, 4, 3, 2, 1])
        c1, c2 = order_crossover(p1, p2, 2, 3)
        # child keeps (.,.,3,4,.) and takes 5,2,1 in p2 order
        assert c1.tolist() == [5, 2, 3, 4, 1]
        assert c2.tolist() == [1, 4, 3, 2, 5]

    def test_identical_parents_identity(self):
        g = np.array([3, 1, 4, 2, 5])
        for lo, hi in ((0, 0), (1, 3), (0, 4), (4, 4)):
            c1, c2 = order_crossover(g, g, lo, hi)
            assert np.array_equal(c1, g) and np.array_equal(c2, g)

    def test_closure_over_random_cases(self):
        # permutation invariant must survive 10^4 randomized crossovers
        rng = make_rng(11)
        dom = GeneDomain.permutation(7, separators=2)
        sorted_alphabet = dom.alphabet
        for _ in range(100):
            p1 = dom.sample_batch(rng, 100)
            p2 = dom.sample_batch(rng, 100)
            c1, c2 = crossover_batch(dom, p1, p2, rng)
            for batch in (c1, c2):
                assert np.array_equal(np.sort(batch, axis=1),
                                      np.tile(sorted_alphabet, (100, 1)))

    def test_binary_closure(self):
        rng = make_rng(5)
        dom = GeneDomain.binary(9)
        p1 = dom.sample_batch(rng, 10_000)
        p2 = dom.sample_batch(rng, 10_000)
        c1, c2 = crossover_batch(dom, p1, p2, rng)
        assert np.isin(c1, (0, 1)).all() and np.isin(c2, (0, 1)).all()
        # single point: prefix comes from p1, suffix from p2
        changed = c1 != p1
        assert (changed == (c2 != p2)).all()


class TestCrossoverWrapper:
    def test_scalar_wrapper_valid_children(self):
        rng = make_rng(0)
        p1, p2 = PERM5.sample(rng), PERM5.sample(rng)
        c1, c2 = crossover(PERM5, p1, p2, rng)
        assert PERM5.contains(c1) and PERM5.contains(c2)

    def test_mismatched_shapes_rejected(self):
        with pytest.raises(ValueError, match="shape"):
            crossover_batch(BIN4, np.zeros((2, 4), int), np.zeros((3, 4), int), make_rng(0))

    def test_wrong_length_rejected(self):
        with pytest.raises(ValueError, match="length"):
            crossover_batch(BIN4, np.zeros((2, 5), int), np.zeros((2, 5), int), make_rng(0))

    def test_length_one_binary_children_copy_parents(self):
        dom = GeneDomain.binary(1)
        c1, c2 = crossover(dom, np.array([0]), np.array([1]), make_rng(0))
        assert c1.tolist() == [0] and c2.tolist() == [1]

    def test_determinism(self):
        rng1, rng2 = make_rng(9), make_rng(9)
        p1, p2 = PERM5.sample(make_rng(1)), PERM5.sample(make_rng(2))
        assert np.array_equal(crossover(PERM5, p1, p2, rng1)[0],
                              crossover(PERM5, p1, p2, rng2)[0])


class TestMutation:
    def test_flip_example(self):
        assert flip_mutation(np.array([1, 0, 1]), 1).tolist() == [1, 1, 1]

    def test_swap_example(self):
        assert swap_mutation(np.array([1, 2, 3]), 0, 2).tolist() == [3, 2, 1]

    def test_length_one_binary_flips_the_only_gene(self):
        dom = GeneDomain.binary(1)
        assert mutate(dom, np.array([0]), make_rng(0)).tolist() == [1]

    def test_binary_mutant_differs_in_exactly_one_locus(self):
        rng = make_rng(21)
        dom = GeneDomain.binary(8)
        genomes = dom.sample_batch(rng, 5000)
        mutants = mutate_batch(dom, genomes, rng)
        assert ((mutants != genomes).sum(axis=1) == 1).all()

    def test_swap_mutant_differs_in_exactly_two_loci(self):
        rng = make_rng(22)
        dom = GeneDomain.permutation(6, separators=1)
        genomes = dom.sample_batch(rng, 5000)
        mutants = mutate_batch(dom, genomes, rng)
        assert ((mutants != genomes).sum(axis=1) == 2).all()
        assert np.array_equal(np.sort(mutants, axis=1), np.sort(genomes, axis=1))

    def test_determinism(self):
        dom = GeneDomain.permutation(5)
        g = dom.sample(make_rng(3))
        assert np.array_equal(mutate(dom, g, make_rng(7)), mutate(dom, g, make_rng(7)))
