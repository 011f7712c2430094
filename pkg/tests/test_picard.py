import itertools

import pytest
from hypothesis import given, strategies as st

from glacm import ContextError, DomainError, LElem, Weights

from strategies import weights_and_elems


def test_weights_validation():
    with pytest.raises(DomainError):
        Weights((1, 3, 3, 3))
    assert Weights.parse("2,3,4,5").p == (2, 3, 4, 5)
    assert str(Weights.parse(" 3, 3,3,3")) == "3,3,3,3"


class TestNormalize:
    def test_relation(self, w3333):
        assert w3333.normalize([3, 0, 0, 0], 0) == LElem((0, 0, 0, 0), 1)

    def test_omega_like(self, w2345):
        assert w2345.normalize([-1, -1, -1, -1], 1) == LElem((1, 2, 3, 4), -3)

    def test_zero(self, w3333):
        assert w3333.normalize([0, 0, 0, 0], 0) == w3333.zero

    @given(weights_and_elems(), st.lists(st.integers(-5, 5), min_size=4, max_size=4))
    def test_round_trip(self, data, shifts):
        w, a = data
        raw = [v + k * p for v, k, p in zip(a.lam, shifts, w.p)]
        assert w.normalize(raw, a.ell - sum(shifts)) == a

    def test_agrees_with_residue_search(self, w2345):
        # oracle: brute-force the residues instead of using divmod
        for raw in itertools.product(range(-7, 8), repeat=2):
            lam = [raw[0], raw[1], 0, 0]
            best = None
            for a in range(w2345.p[0]):
                for b in range(w2345.p[1]):
                    if (lam[0] - a) % 2 == 0 and (lam[1] - b) % 3 == 0:
                        best = (a, b, (lam[0] - a) // 2 + (lam[1] - b) // 3)
            assert w2345.normalize(lam, 0) == LElem((best[0], best[1], 0, 0), best[2])


class TestGroupLaw:
    def test_inverse(self, w3456):
        assert w3456.add(w3456.x(1), w3456.neg(w3456.x(1))) == w3456.zero

    def test_relation(self, w3333):
        assert w3333.add(w3333.mul(2, w3333.x(1)), w3333.x(1)) == w3333.c

    def test_sub(self, w2345):
        assert w2345.sub(w2345.x(2), w2345.x(1)) == LElem((1, 1, 0, 0), -1)

    def test_context_error(self, w3333):
        with pytest.raises(ContextError):
            w3333.add(LElem((4, 0, 0, 0), 0), w3333.zero)

    @given(weights_and_elems(n=3))
    def test_axioms(self, data):
        w, a, b, c = data
        assert w.add(a, b) == w.add(b, a)
        assert w.add(w.add(a, b), c) == w.add(a, w.add(b, c))
        assert w.add(a, w.zero) == a
        assert w.sub(w.add(a, b), b) == a


class TestOrder:
    def test_examples(self, w3333):
        w = w3333
        assert w.leq(w.zero, w.c)
        assert not w.leq(w.zero, w.omega)
        assert not w.leq(w.x(1), w.x(2))

    @given(weights_and_elems(n=3, ell=(-2, 2)))
    def test_transitive_and_translation(self, data):
        w, a, b, z = data
        if w.leq(a, b):
            assert w.leq(w.add(a, z), w.add(b, z))
            if w.leq(b, z):
                assert w.leq(a, z)

    @given(weights_and_elems(ell=(-3, 4)))
    def test_dichotomy(self, data):
        w, a = data
        upper = w.add(w.mul(2, w.c), w.omega)
        assert w.leq(w.zero, a) or w.leq(a, upper)

    @given(weights_and_elems(ell=(-1, 1)))
    def test_delta_box_characterization(self, data):
        w, a = data
        in_box = w.leq(w.zero, a) and w.leq(a, w.delta)
        assert in_box == (a.ell == 0 and all(v <= p - 2 for v, p in zip(a.lam, w.p)))
        assert in_box == w.in_delta_box(a)


class TestDistinguished:
    def test_delta_trivial(self):
        assert Weights((2, 2, 2, 2)).delta == LElem((0, 0, 0, 0), 0)

    def test_omega(self, w3333):
        assert w3333.omega == LElem((2, 2, 2, 2), -3)

    def test_delta(self, w2345):
        assert w2345.delta == LElem((0, 1, 2, 3), 0)

    def test_identity(self, w3456):
        w = w3456
        assert w.add(w.mul(2, w.c), w.mul(2, w.omega)) == w.delta
        assert set(w.distinguished()) == {"c", "omega", "delta", "s"}


class TestSigma:
    def test_examples(self, w2345, w3333):
        assert w2345.sigma(w2345.zero) == 0
        assert w2345.sigma(w2345.delta) == 6
        assert w3333.sigma(w3333.add(w3333.x(1), w3333.x(2))) == 2

    def test_outside(self, w3333):
        with pytest.raises(DomainError):
            w3333.sigma(w3333.c)


class TestBox:
    def test_trivial(self):
        w = Weights((2, 2, 2, 2))
        assert w.box(w.zero, w.delta) == [w.zero]
        assert len(w.k0_basis) == 17

    def test_delta_box(self, w2345):
        assert len(w2345.box(w2345.zero, w2345.delta)) == 24
        assert list(w2345.delta_box) == w2345.box(w2345.zero, w2345.delta)

    def test_empty_when_unordered(self, w3333):
        assert w3333.box(w3333.c, w3333.zero) == []

    def test_matches_filter(self, w2345):
        w = w2345
        lo, hi = w.neg(w.c), w.add(w.c, w.x(3))
        window = w.iter_window(-3, 3)
        expect = sorted(a for a in window if w.leq(lo, a) and w.leq(a, hi))
        assert w.box(lo, hi) == expect


def test_json_round_trip(w3456):
    for a in w3456.iter_window(-1, 1)[::17]:
        assert LElem.from_json(a.to_json()) == a
    assert w3456.x(2).to_json() == {"lambda": [0, 1, 0, 0], "ell": 0}
