import itertools
import math

import pytest
from hypothesis import given

from glacm import DomainError, LElem, Weights
from glacm.extbundle import EVEN_SUBSETS, ExtLabel, iso_equivalent, iso_images
from glacm.orbits import (
    TRANSITIVE_TUPLES,
    burnside_count,
    closed_formula,
    fixed_count,
    is_transitive,
    sigma_action,
)

from strategies import weights_and_box


class TestSigmaAction:
    def test_examples(self, w3456):
        w = w3456
        assert sigma_action(w, (), w.x(3)) == w.x(3)
        assert sigma_action(w, (1, 2), w.zero) == LElem((1, 2, 0, 0), 0)

    def test_errors(self, w3456):
        with pytest.raises(DomainError):
            sigma_action(w3456, (1,), w3456.zero)
        with pytest.raises(DomainError):
            sigma_action(w3456, (1, 2), w3456.c)

    @given(weights_and_box())
    def test_group_axioms(self, data):
        w, x = data
        act = {I: sigma_action(w, I, x) for I in EVEN_SUBSETS}
        for I in EVEN_SUBSETS:
            assert sigma_action(w, I, act[I]) == x
            assert w.in_delta_box(act[I])
        for I, J in itertools.combinations(EVEN_SUBSETS, 2):
            ij = sigma_action(w, I, act[J])
            assert ij == sigma_action(w, J, act[I])
            sym = tuple(sorted(set(I) ^ set(J)))
            assert ij == act[sym]


class TestBurnside:
    @pytest.mark.parametrize("p,count", [((2, 2, 2, 2), 1), ((3, 3, 3, 3), 2), ((2, 3, 4, 5), 4)])
    def test_examples(self, p, count):
        rep = burnside_count(Weights(p))
        assert rep.burnside == rep.closed_formula == rep.orbit_count == count
        assert sum(len(o) for o in rep.orbits) == len(Weights(p).delta_box)

    def test_fixed_point_structure(self):
        for p in itertools.product((2, 3, 4, 5), repeat=4):
            for I in EVEN_SUBSETS:
                expect = 0
                if all(p[i - 1] % 2 == 0 for i in I):
                    expect = int(math.prod(p[i - 1] - 1 for i in range(1, 5) if i not in I))
                assert fixed_count(p, I) == expect

    def test_faithful_order(self):
        assert burnside_count(Weights((2, 2, 2, 2))).faithful_order == 1
        assert burnside_count(Weights((3, 3, 3, 3))).faithful_order == 8
        assert burnside_count(Weights((2, 3, 3, 3))).faithful_order == 8
        assert burnside_count(Weights((2, 2, 3, 3))).faithful_order == 4

    def test_json(self, w3333):
        obj = burnside_count(w3333).to_json()
        assert obj["burnside"] == obj["closed_formula"] == 2
        assert obj["fixed_counts"]["{}"] == 16

    def test_closed_formula_values(self):
        assert closed_formula((2, 2, 2, 4)) == 2
        assert closed_formula((4, 4, 4, 4)) == (81 + 6 * 9 + 1) // 8


class TestTransitive:
    def test_examples(self):
        assert is_transitive(Weights((2, 2, 2, 3)))
        assert is_transitive(Weights((2, 2, 3, 3)))
        assert not is_transitive(Weights((3, 3, 3, 3)))

    def test_two_three_three_three(self):
        # reflection in a weight-2 coordinate is trivial, so sigma_{1j} flips j alone
        rep = burnside_count(Weights((2, 3, 3, 3)))
        assert rep.orbit_count == rep.burnside == 1

    def test_classification_up_to_six(self):
        found = {
            tuple(sorted(p))
            for p in itertools.product(range(2, 7), repeat=4)
            if is_transitive(Weights(p))
        }
        assert found == set(TRANSITIVE_TUPLES)


@pytest.mark.parametrize("p", [(3, 3, 3, 3), (2, 3, 4, 5), (2, 4, 4, 3), (4, 4, 4, 4)])
def test_orbits_agree_with_iso(p):
    w = Weights(p)
    rep = burnside_count(w)
    where = {x: k for k, orb in enumerate(rep.orbits) for x in orb}
    for x, y in itertools.product(w.delta_box, repeat=2):
        twists = [b.twist for b in iso_images(w, ExtLabel.make(w, x)) if b.x == y]
        same = any(iso_equivalent(w, ExtLabel.make(w, x), ExtLabel.make(w, y, z)) for z in twists)
        assert (where[x] == where[y]) == same
