import pytest
from hypothesis import given

from glacm import DomainError, Weights
from glacm.graded import Truncation, dim_R, dim_R_oracle, dim_S, line_ext_dims, monomial_degree_counts

from strategies import weights_and_elems


class TestDimR:
    def test_examples(self, w3333, w2345):
        for w in (w3333, w2345):
            assert dim_R(w, w.zero) == 1
            assert dim_R(w, w.c) == 3
            assert dim_R(w, w.mul(2, w.c)) == 6
        assert dim_R(w3333, w3333.omega) == 0

    @pytest.mark.parametrize("p", [(2, 2, 2, 2), (2, 3, 4, 5), (3, 3, 3, 3), (4, 2, 5, 3)])
    def test_closed_form_matches_monomials(self, p):
        w = Weights(p)
        counts = monomial_degree_counts(w, 3)
        for a in w.iter_window(-2, 3):
            assert dim_R(w, a) == counts[a]

    def test_oracle_entry_point(self, w3456):
        assert dim_R_oracle(w3456, w3456.add(w3456.c, w3456.x(4))) == dim_R(w3456, w3456.add(w3456.c, w3456.x(4)))

    @given(weights_and_elems(n=2, ell=(0, 3)))
    def test_monotone(self, data):
        w, a, z = data
        assert dim_R(w, a) <= dim_R(w, w.add(a, z))


class TestDimS:
    def test_examples(self, w3333):
        q = Truncation.two()
        assert dim_S(w3333, w3333.zero, q) == 1
        assert dim_S(w3333, w3333.x(1), q) == 1
        assert dim_S(w3333, w3333.mul(2, w3333.x(1)), q) == 0

    def test_truncation_monotone(self, w3456):
        w = w3456
        small, big = Truncation((2, 3, 3, 4)), Truncation.full(w)
        for a in w.iter_window(-1, 3):
            assert dim_S(w, a, small) <= dim_S(w, a, big)

    def test_validation(self, w3333):
        with pytest.raises(DomainError):
            Truncation((2, 2, 2, 4)).validate(w3333)
        with pytest.raises(DomainError):
            Truncation((1, 2, 2, 2))
        assert Truncation.parse("2,3,2,3").q == (2, 3, 2, 3)


class TestLineExt:
    def test_examples(self, w3333):
        w = w3333
        assert line_ext_dims(w, w.zero, w.c) == (3, 0, 0)
        assert line_ext_dims(w, w.x(2), w.x(2)) == (1, 0, 0)
        assert line_ext_dims(w, w.c, w.zero) == (0, 0, 0)

    def test_top_ext(self, w3333):
        # Ext^2(O, O(omega)) is dual to Hom(O, O)
        w = w3333
        assert line_ext_dims(w, w.zero, w.omega) == (0, 0, 1)

    @given(weights_and_elems(n=2, ell=(-3, 3)))
    def test_serre_symmetry(self, data):
        w, x, y = data
        assert line_ext_dims(w, x, y)[2] == line_ext_dims(w, y, w.add(x, w.omega))[0]
