import os
import random
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))

from koszulkit.graded import Generator, TruncationBounds
from koszulkit.koszul import (
    KoszulUpTo,
    NotKoszul,
    TorWitness,
    bar_tor_dims,
    coalgebra_dims,
    dual_comm,
    dual_lie,
    gerstenhaber_dual_dims,
    has_quadratic_groebner_basis,
    koszul_check,
    koszul_complex_check,
    koszul_dual_coalgebra,
    pairing_matrix,
    tor_euler_characteristic,
)
from koszulkit.presentations import (
    QuadraticCommPresentation,
    comm_algebra_dims,
    enveloping_algebra_dims,
    enveloping_dims,
    lie_algebra_dims,
    lie_algebra_dims_by_closure,
)
from koszulkit.series import dims_to_series, series_inverse
from koszulkit.spaces import configuration_presentation, infinitesimal_braid_presentation


def _comm(degrees, relations=()):
    gens = [Generator(name=name, degree=d) for name, d in degrees]
    return QuadraticCommPresentation.from_named(gens, list(relations))


@pytest.fixture
def small():
    return TruncationBounds(max_weight=4, max_degree=4)


@pytest.fixture
def arnold():
    """H^*(F(R^2, 3))"""
    return configuration_presentation(2, 3)


@pytest.fixture
def non_koszul():
    """E(a, b, c, d)/(ab + cd)"""
    return _comm(
        [("a", 1), ("b", 1), ("c", 1), ("d", 1)],
        [[(1, ("a", "b")), (1, ("c", "d"))]],
    )


class TestPairing:
    def test_slots_match(self):
        """Test brackets and monomials share the slot list"""
        pairing = pairing_matrix(_comm([("x", 2), ("y", 1)]))
        for matrix in pairing.values():
            assert matrix.lie_slots == matrix.comm_slots

    def test_mixed_parity_sign(self):
        """Test the sign (-1)^{|x||a|} for x odd and a even"""
        pairing = pairing_matrix(_comm([("x", 3), ("y", 2)]))
        assert pairing[5].comm_slots == [(0, 1)]
        assert pairing[5].signs == [-1]
        assert pairing[4].signs == [1]

    def test_diagonal_entries(self):
        """Test the pairing matrix is diagonal"""
        matrix = pairing_matrix(_comm([("x", 1), ("y", 1)]))[2]
        assert matrix.entry(0, 0) == 1


class TestOrthogonalDual:
    def test_even_sphere(self, small):
        """Test x^2 = 0 dualizes to the free Lie algebra on one odd class"""
        lie = dual_lie(_comm([("x", 2)], [[(1, ("x", "x"))]]))
        assert lie.relations == ()
        assert lie_algebra_dims(lie, small).as_dict() == {(1, 1): 1, (2, 2): 1}

    def test_odd_sphere(self):
        """Test S^3 dualizes to an abelian line in degree 2"""
        lie = dual_lie(_comm([("x", 3)]))
        assert lie_algebra_dims(lie, TruncationBounds(max_weight=4, max_degree=10)).as_dict() == {
            (1, 2): 1
        }

    def test_torus(self, small):
        """Test free E(x, y) dualizes to the abelian Lie algebra"""
        lie = dual_lie(_comm([("x", 1), ("y", 1)]))
        assert lie_algebra_dims(lie, small).as_dict() == {(1, 0): 2}

    def test_arnold_dual(self, arnold, small):
        """Test the dual of the Arnold algebra: free Lie on two plus a center"""
        lie = dual_lie(arnold)
        dims = lie_algebra_dims(lie, small)
        assert dims.as_dict() == {(1, 0): 3, (2, 0): 1, (3, 0): 2, (4, 0): 3}
        assert enveloping_dims(dims, small).by_weight() == {0: 1, 1: 3, 2: 7, 3: 15, 4: 31}

    @pytest.mark.parametrize(
        "presentation",
        [
            configuration_presentation(2, 3),
            configuration_presentation(3, 3),
            _comm([("x", 2), ("y", 2)], [[(1, ("x", "x"))], [(1, ("y", "y"))]]),
            _comm([("x", 2), ("y", 3)], [[(1, ("x", "y"))]]),
        ],
    )
    def test_double_dual(self, presentation):
        """Test R-perp-perp = R"""
        back = dual_comm(dual_lie(presentation))
        assert back.generators == presentation.generators
        for d in presentation.weight_two_degrees():
            assert back.relation_space(d) == presentation.relation_space(d)


class TestBarComplex:
    def test_arnold_is_koszul(self, arnold):
        """Test F(R^2, 3) is Koszul up to weight 3"""
        verdict = koszul_check(arnold, TruncationBounds(max_weight=3, max_degree=3))
        assert isinstance(verdict, KoszulUpTo)
        assert verdict.is_koszul

    def test_diagonal_tor_is_dual(self, arnold):
        """Test Tor_{w,w} counts the Koszul dual"""
        table = bar_tor_dims(arnold, TruncationBounds(max_weight=3, max_degree=3))
        assert table.diagonal().by_weight() == {0: 1, 1: 3, 2: 7, 3: 15}

    def test_non_koszul_witness(self, non_koszul, small):
        """Test the first off-diagonal Tor of E(a,b,c,d)/(ab + cd)"""
        verdict = koszul_check(non_koszul, small)
        assert isinstance(verdict, NotKoszul)
        assert not verdict.is_koszul
        assert verdict.witness == TorWitness(s=3, weight=4, degree=4, dimension=5)

    def test_non_koszul_below_weight_four(self, non_koszul):
        """Test no witness exists below weight 4"""
        verdict = koszul_check(non_koszul, TruncationBounds(max_weight=3, max_degree=3))
        assert isinstance(verdict, KoszulUpTo)

    def test_euler_characteristic(self, non_koszul, small):
        """Test alternating Tor sums invert the algebra series"""
        table = bar_tor_dims(non_koszul, small)
        algebra = dims_to_series(comm_algebra_dims(non_koszul, small))
        assert tor_euler_characteristic(table) == series_inverse(algebra)

    def test_jobs_do_not_change_the_table(self, arnold):
        """Test the worker pool returns the same Tor table"""
        bounds = TruncationBounds(max_weight=3, max_degree=3)
        serial = bar_tor_dims(arnold, bounds, jobs=1)
        pooled = bar_tor_dims(arnold, bounds, jobs=2)
        assert pooled.entries == serial.entries

    def test_rows_order(self, arnold):
        """Test rows are ordered by weight, degree, then bar length"""
        rows = bar_tor_dims(arnold, TruncationBounds(max_weight=2, max_degree=2)).rows()
        assert rows == [(0, 0, 0, 1), (1, 1, 1, 3), (2, 2, 2, 7)]


class TestKoszulComplex:
    def test_dual_coalgebra(self, arnold):
        """Test the coalgebra built by intersections has the dual dims"""
        bounds = TruncationBounds(max_weight=3, max_degree=3)
        dims = coalgebra_dims(koszul_dual_coalgebra(arnold, bounds), bounds)
        assert dims.by_weight() == {0: 1, 1: 3, 2: 7, 3: 15}

    def test_arnold_acyclic(self, arnold):
        """Test the Koszul complex of a Koszul algebra is acyclic"""
        verdict = koszul_complex_check(arnold, TruncationBounds(max_weight=3, max_degree=3))
        assert verdict.acyclic
        assert verdict.witness is None

    def test_non_koszul_fails_at_weight_four(self, non_koszul, small):
        """Test the Koszul complex agrees with the bar complex"""
        verdict = koszul_complex_check(non_koszul, small)
        assert not verdict.acyclic
        assert verdict.witness.weight == 4
        assert verdict.witness.degree == 4

    def test_no_generators(self, small):
        """Test the trivial algebra is acyclic"""
        assert koszul_complex_check(QuadraticCommPresentation([]), small).acyclic


class TestGerstenhaberDual:
    def test_odd_sphere_double_loops(self):
        """Test Lambda(s^{-1} L) for S^3 and n = 2"""
        dims = gerstenhaber_dual_dims(
            _comm([("x", 3)]), 2, TruncationBounds(max_weight=3, max_degree=10)
        )
        assert dims.as_dict() == {(0, 0): 1, (1, 1): 1}

    def test_n_one_is_enveloping(self, small):
        """Test n = 1 gives U of the dual Lie algebra"""
        sphere = _comm([("x", 2)], [[(1, ("x", "x"))]])
        dims = gerstenhaber_dual_dims(sphere, 1, small)
        assert dims.as_dict() == {(k, k): 1 for k in range(5)}


def _random_presentation(seed):
    rng = random.Random(seed)
    gens = [
        Generator(name=f"g{i}", degree=rng.randint(1, 4)) for i in range(rng.randint(1, 4))
    ]
    shell = QuadraticCommPresentation(gens)
    relations = []
    for d in shell.weight_two_degrees():
        slots = shell.weight_two_basis(d)
        for _ in range(rng.randint(0, len(slots))):
            relations.append({slot: rng.randint(-2, 2) for slot in slots})
    return QuadraticCommPresentation(gens, relations)


class TestRandomPresentations:
    @pytest.mark.parametrize("seed", range(20))
    def test_orthogonal_complement(self, seed):
        """Test dim R + dim R-perp fills the weight-2 space and R-perp-perp = R"""
        presentation = _random_presentation(seed)
        lie = dual_lie(presentation)
        back = dual_comm(lie)
        for d in presentation.weight_two_degrees():
            total = len(presentation.weight_two_basis(d))
            assert len(presentation.relation_space(d)) + len(lie.relation_space(d - 2)) == total
            assert back.relation_space(d) == presentation.relation_space(d)

    @pytest.mark.parametrize("seed", range(5))
    def test_double_dual_keeps_dims(self, seed):
        """Test dual_comm(dual_lie(P)) has the same algebra dims"""
        presentation = _random_presentation(seed)
        bounds = TruncationBounds(max_weight=3, max_degree=12)
        back = dual_comm(dual_lie(presentation))
        assert comm_algebra_dims(back, bounds) == comm_algebra_dims(presentation, bounds)


class TestGroebnerCertificate:
    def test_arnold_relations(self, arnold):
        """Test the Arnold relations are a quadratic Groebner basis"""
        assert has_quadratic_groebner_basis(arnold)
        assert has_quadratic_groebner_basis(configuration_presentation(3, 4))

    def test_non_koszul_has_none(self, non_koszul):
        """Test E(a,b,c,d)/(ab + cd) needs a cubic leading monomial"""
        assert not has_quadratic_groebner_basis(non_koszul)

    def test_free_algebra(self):
        """Test no relations is trivially a Groebner basis"""
        assert has_quadratic_groebner_basis(_comm([("x", 2), ("y", 3)]))

    def test_certificate_skips_the_bar_complex(self, monkeypatch):
        """Test a certified algebra is Koszul at any bounds without building bar columns"""

        def fail(*args, **kwargs):
            raise AssertionError("bar complex should not run")

        monkeypatch.setattr("koszulkit.koszul._tor_entries", fail)
        bounds = TruncationBounds(max_weight=8, max_degree=40)
        assert isinstance(koszul_check(configuration_presentation(2, 4), bounds), KoszulUpTo)

    @pytest.mark.parametrize("seed", range(12))
    def test_certificate_agrees_with_bar_complex(self, seed):
        """Test a certified random algebra has no off-diagonal Tor to weight 4"""
        presentation = _random_presentation(seed)
        if not has_quadratic_groebner_basis(presentation):
            pytest.skip("no quadratic Groebner basis for this seed")
        table = bar_tor_dims(presentation, TruncationBounds(max_weight=4, max_degree=10))
        assert table.off_diagonal() == []


class TestLieDimsAgree:
    @pytest.mark.parametrize("seed", range(12))
    def test_random_duals(self, seed):
        """Test normal-word dims equal bracket-closure dims on random dual presentations"""
        lie = dual_lie(_random_presentation(seed))
        bounds = TruncationBounds(max_weight=4, max_degree=10)
        assert lie_algebra_dims(lie, bounds) == lie_algebra_dims_by_closure(lie, bounds)

    @pytest.mark.parametrize("n, k", [(2, 4), (3, 4)])
    def test_infinitesimal_braid(self, n, k):
        """Test both computations agree on the infinitesimal braid relations"""
        lie = infinitesimal_braid_presentation(n, k)
        bounds = TruncationBounds(max_weight=4, max_degree=4 * (n - 2) + 1)
        assert enveloping_algebra_dims(lie, bounds) is not None
        assert lie_algebra_dims(lie, bounds) == lie_algebra_dims_by_closure(lie, bounds)

    def test_fallback_uses_closure(self, monkeypatch, arnold):
        """Test the closure answers when no word order gives a Groebner basis"""
        monkeypatch.setattr("koszulkit.presentations.enveloping_algebra_dims", lambda p, b: None)
        bounds = TruncationBounds(max_weight=3, max_degree=3)
        assert lie_algebra_dims(dual_lie(arnold), bounds).by_weight() == {1: 3, 2: 1, 3: 2}
