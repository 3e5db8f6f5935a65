import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))

from koszulkit.exceptions import (
    InhomogeneousRelationError,
    InputError,
    OddSquareError,
    SeriesError,
    UnknownGeneratorError,
)
from koszulkit.graded import Generator, TruncationBounds
from koszulkit.presentations import (
    QuadraticCommPresentation,
    QuadraticLiePresentation,
    QuotientAlgebra,
    comm_algebra_dims,
    comm_monomial_basis,
    enveloping_algebra_dims,
    enveloping_dims,
    finite_algebra_series,
    free_comm_dims,
    free_lie_components,
    free_lie_dims,
    lie_algebra_dims,
    lie_dims_from_enveloping,
    lie_ideal_components,
    tensor_algebra_dims,
    tensor_basis,
    tensor_words,
)
from koszulkit.spaces import configuration_presentation, infinitesimal_braid_presentation


@pytest.fixture
def bounds():
    return TruncationBounds(max_weight=4, max_degree=8)


@pytest.fixture
def two_odd():
    return [Generator(name="x", degree=1), Generator(name="y", degree=1)]


@pytest.fixture
def two_even_lie():
    return [Generator(name="x", degree=0), Generator(name="y", degree=0)]


class TestValidation:
    def test_unknown_generator(self, two_odd):
        """Test a relation naming an undeclared generator"""
        with pytest.raises(UnknownGeneratorError) as e:
            QuadraticCommPresentation.from_named(two_odd, [[(1, ("x", "z"))]])
        assert "'z'" in str(e.value)

    def test_inhomogeneous_relation(self):
        """Test a relation mixing degrees 4 and 5"""
        gens = [Generator(name="x", degree=2), Generator(name="y", degree=3)]
        with pytest.raises(InhomogeneousRelationError):
            QuadraticCommPresentation.from_named(gens, [[(1, ("x", "x")), (1, ("x", "y"))]])

    def test_odd_square(self, two_odd):
        """Test the square of an odd generator is refused"""
        with pytest.raises(OddSquareError):
            QuadraticCommPresentation.from_named(two_odd, [[(1, ("x", "x"))]])

    def test_even_self_bracket(self, two_even_lie):
        """Test the self-bracket of an even Lie generator is refused"""
        with pytest.raises(InputError):
            QuadraticLiePresentation.from_named(two_even_lie, [[(1, ("x", "x"))]])

    def test_duplicate_names(self):
        """Test generator names must be unique"""
        with pytest.raises(InputError):
            QuadraticCommPresentation([Generator(name="x", degree=1)] * 2)

    def test_degree_zero_commutative_generator(self):
        """Test commutative generators start in degree one"""
        with pytest.raises(InputError):
            QuadraticCommPresentation([Generator(name="x", degree=0)])


class TestCanonicalForm:
    def test_swapped_odd_monomial(self, two_odd):
        """Test y*x is stored as -x*y"""
        p = QuadraticCommPresentation.from_named(two_odd, [[(1, ("y", "x"))]])
        assert p.relations == ({(0, 1): -1},)

    def test_swapped_even_bracket(self, two_even_lie):
        """Test [y, x] is stored as -[x, y]"""
        p = QuadraticLiePresentation.from_named(two_even_lie, [[(1, ("y", "x"))]])
        assert p.relations == ({(0, 1): -1},)

    def test_cancelling_terms_vanish(self, two_odd):
        """Test x*y + y*x is the zero relation and is discarded"""
        p = QuadraticCommPresentation.from_named(two_odd, [[(1, ("x", "y")), (1, ("y", "x"))]])
        assert p.relations == ()

    def test_weight_two_basis(self):
        """Test slots include squares only for even generators"""
        gens = [Generator(name="x", degree=2), Generator(name="y", degree=1)]
        p = QuadraticCommPresentation(gens)
        assert p.weight_two_basis(4) == [(0, 0)]
        assert p.weight_two_basis(3) == [(0, 1)]
        assert p.weight_two_basis(2) == []

    def test_relation_space_is_echelon(self, two_odd):
        """Test proportional relations collapse to one row"""
        p = QuadraticCommPresentation.from_named(two_odd, [[(2, ("x", "y"))], [(3, ("x", "y"))]])
        assert p.relation_space(2) == [{0: 1}]
        assert p.relation_dims() == {2: 1}


class TestCommutativeAlgebra:
    def test_monomial_basis(self, two_odd):
        """Test odd generators do not repeat"""
        assert comm_monomial_basis(two_odd, 2, 2) == [(0, 1)]

    def test_free_matches_closed_form(self, bounds):
        """Test the quotient with no relations equals the closed form"""
        gens = [Generator(name="x", degree=1), Generator(name="y", degree=2)]
        p = QuadraticCommPresentation(gens)
        assert comm_algebra_dims(p, bounds) == free_comm_dims(gens, bounds)

    def test_even_sphere(self, bounds):
        """Test x^2 = 0 in degree 4"""
        gens = [Generator(name="x", degree=4)]
        p = QuadraticCommPresentation.from_named(gens, [[(1, ("x", "x"))]])
        assert comm_algebra_dims(p, bounds).as_dict() == {(0, 0): 1, (1, 4): 1}

    def test_exterior_quotient(self, two_odd, bounds):
        """Test E(x, y)/(xy) is 1 + 2t"""
        p = QuadraticCommPresentation.from_named(two_odd, [[(1, ("x", "y"))]])
        assert comm_algebra_dims(p, bounds).by_weight() == {0: 1, 1: 2}

    def test_multiply_in_normal_form(self, two_odd, bounds):
        """Test y*x = -x*y in quotient coordinates"""
        algebra = QuotientAlgebra(QuadraticCommPresentation(two_odd), bounds)
        assert algebra.basis(2, 2) == ((0, 1),)
        assert algebra.multiply((1,), (0,)) == {0: -1}
        assert algebra.multiply((0,), (0,)) == {}


class TestLieAlgebra:
    def test_free_lie_two_even_generators(self, two_even_lie, bounds):
        """Test the necklace numbers 2, 1, 2, 3"""
        dims = free_lie_dims(two_even_lie, bounds)
        assert dims.by_weight() == {1: 2, 2: 1, 3: 2, 4: 3}

    def test_free_lie_one_odd_generator(self, bounds):
        """Test [a, a] survives and [a, [a, a]] vanishes"""
        dims = free_lie_dims([Generator(name="a", degree=1)], bounds)
        assert dims.as_dict() == {(1, 1): 1, (2, 2): 1}

    def test_free_lie_one_even_generator(self, bounds):
        """Test an even generator spans an abelian line"""
        dims = free_lie_dims([Generator(name="a", degree=2)], bounds)
        assert dims.as_dict() == {(1, 2): 1}

    def test_abelian_quotient(self, two_even_lie, bounds):
        """Test [x, y] = 0 leaves only the generators"""
        p = QuadraticLiePresentation.from_named(two_even_lie, [[(1, ("x", "y"))]])
        assert lie_algebra_dims(p, bounds).as_dict() == {(1, 0): 2}

    def test_self_bracket_slot(self):
        """Test the half-bracket slot is a single square word"""
        p = QuadraticLiePresentation([Generator(name="a", degree=1)])
        assert p.slot_tensor((0, 0)) == {(0, 0): 1}


class TestEnveloping:
    def test_tensor_algebra(self, two_even_lie, bounds):
        """Test T(W) on two degree-0 generators"""
        dims = tensor_algebra_dims(two_even_lie, bounds)
        assert dims.by_weight() == {0: 1, 1: 2, 2: 4, 3: 8, 4: 16}

    def test_abelian_enveloping(self, bounds):
        """Test U of an abelian plane is a polynomial ring"""
        lie_dims = lie_algebra_dims(
            QuadraticLiePresentation.from_named(
                [Generator(name="x", degree=0), Generator(name="y", degree=0)],
                [[(1, ("x", "y"))]],
            ),
            bounds,
        )
        assert enveloping_dims(lie_dims, bounds).by_weight() == {0: 1, 1: 2, 2: 3, 3: 4, 4: 5}

    @pytest.mark.parametrize("degrees", [[0, 0], [1], [1, 2]])
    def test_pbw_of_free_lie(self, degrees, bounds):
        """Test U(FreeLie(W)) = T(W)"""
        gens = [Generator(name=f"g{i}", degree=d) for i, d in enumerate(degrees)]
        assert enveloping_dims(free_lie_dims(gens, bounds), bounds) == tensor_algebra_dims(gens, bounds)

    @pytest.mark.slow
    @pytest.mark.parametrize("degrees", [[0, 1, 2], [1, 1, 3], [2, 3, 3], [0, 0, 1]])
    def test_pbw_three_generators_to_weight_six(self, degrees):
        """Test U(FreeLie(W)) = T(W) for three generators up to weight 6"""
        b = TruncationBounds(max_weight=6, max_degree=18)
        gens = [Generator(name=f"g{i}", degree=d) for i, d in enumerate(degrees)]
        assert enveloping_dims(free_lie_dims(gens, b), b) == tensor_algebra_dims(gens, b)


class TestIdealInsideFreeLie:
    def test_ideal_components_lie_in_free_components(self):
        """Test every ideal basis element is a free Lie element of its bidegree"""
        b = TruncationBounds(max_weight=4, max_degree=4)
        presentation = infinitesimal_braid_presentation(2, 4)
        free = free_lie_components(presentation.generators, b)
        ideal = lie_ideal_components(presentation, b)
        assert ideal
        for key, elements in ideal.items():
            assert len(tensor_basis(free[key] + elements)) == len(free[key])
            assert len(elements) <= len(free[key])


class TestNormalWords:
    def test_free_presentation_counts_all_words(self, two_even_lie, bounds):
        """Test no relations leaves every word normal"""
        p = QuadraticLiePresentation(two_even_lie)
        assert enveloping_algebra_dims(p, bounds) == tensor_algebra_dims(two_even_lie, bounds)

    def test_abelian_plane(self, two_even_lie, bounds):
        """Test [x, y] = 0 leaves the words x^a y^b"""
        p = QuadraticLiePresentation.from_named(two_even_lie, [[(1, ("x", "y"))]])
        dims = enveloping_algebra_dims(p, bounds)
        assert dims.by_weight() == {0: 1, 1: 2, 2: 3, 3: 4, 4: 5}

    def test_leading_words_follow_order(self):
        """Test terms come out smallest first under a reversed alphabet"""
        element = {(0, 1): 1, (1, 0): -1}
        assert [t.letters for t in tensor_words(element)] == [(0, 1), (1, 0)]
        assert [t.letters for t in tensor_words(element, ((1, 0), False))] == [(1, 0), (0, 1)]

    def test_inverse_pbw(self, bounds):
        """Test the Lie dims of a polynomial enveloping algebra on one even class"""
        enveloping = tensor_algebra_dims([Generator(name="x", degree=2)], bounds)
        assert lie_dims_from_enveloping(enveloping, bounds).as_dict() == {(1, 2): 1}


class TestFiniteAlgebraSeries:
    def test_polynomial_generator_is_refused(self):
        """Test Q[x] with |x| = 2 does not vanish past the weight bound"""
        p = QuadraticCommPresentation([Generator(name="x", degree=2)])
        with pytest.raises(SeriesError, match="weight 9"):
            finite_algebra_series(p, 8)

    def test_series_is_complete(self):
        """Test F(R^3, 3) is found finite at weight bound 2"""
        series = finite_algebra_series(configuration_presentation(3, 3), 2)
        assert series.coefficients == {(0, 0): 1, (1, 2): 3, (2, 4): 2}

    def test_top_weight_reaching_the_bound(self):
        """Test an algebra whose top weight equals the bound is accepted"""
        series = finite_algebra_series(configuration_presentation(2, 3), 2)
        assert series.coefficients == {(0, 0): 1, (1, 1): 3, (2, 2): 2}
