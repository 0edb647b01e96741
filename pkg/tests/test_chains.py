"""
Tests for composed reduction chains and the direct l1 -> Chebyshev reduction.
"""

import pytest
from fractions import Fraction
from unittest.mock import patch

from src.core.config import Settings
from src.core.evaluation import eval_cheb, eval_l1
from src.core.models import (
    AffineFunction,
    ChebyshevProblem,
    GameToChebVariant,
    L1Problem,
    LinearConstraint,
    LinearProgram,
    ReductionKind,
    Relation,
    Sense,
    Solution,
    VarSign,
)
from src.reductions import (
    CapExceededError,
    CertificateMismatchError,
    ChainPullbackError,
    NotAStrategyError,
    cheb_chain_pullback,
    cheb_to_lp,
    l1_to_cheb_direct,
    l1_to_cheb_linear,
    lp_to_cheb,
    pullback,
)


@pytest.fixture
def unit_box() -> LinearProgram:
    """max x1 s.t. x1 <= 1, x1 >= 0."""
    x1 = AffineFunction.variable(0, 1)
    return LinearProgram(
        sense=Sense.MAX,
        objective=x1,
        constraints=(LinearConstraint(x1, Relation.LE, AffineFunction(1, (0,))),),
        var_signs=(VarSign.NONNEG,),
    )


@pytest.fixture
def l1_three_by_two() -> L1Problem:
    """Three functions in two variables."""
    return L1Problem((
        AffineFunction(0, (1, 0)),
        AffineFunction(-1, (1, 1)),
        AffineFunction(Fraction(1, 2), (0, -1)),
    ))


class TestLinearChain:
    """Test l1 -> LP -> standard -> game -> Chebyshev."""

    def test_size_law(self, l1_three_by_two):
        """Test 6m+4n+4 functions in 3m+2n+1 variables for m=3, n=2."""
        problem, cert = l1_to_cheb_linear(l1_three_by_two)
        assert (problem.size, problem.arity) == (30, 14)
        assert cert.kind == ReductionKind.L1_TO_CHEB_LINEAR
        assert cert.is_chain
        assert [s.kind for s in cert.stages] == [
            ReductionKind.L1_TO_LP,
            ReductionKind.LP_TO_STANDARD,
            ReductionKind.STANDARD_TO_GAME,
            ReductionKind.GAME_TO_CHEB,
        ]

    def test_chain_dims(self, l1_three_by_two):
        """Test chain dims run from the l1 source to the Chebyshev target."""
        _, cert = l1_to_cheb_linear(l1_three_by_two)
        assert cert.source_dims == (2, 3)
        assert cert.target_dims == (14, 30)

    def test_variant_recorded(self, l1_three_by_two):
        """Test the last stage's variant is surfaced on the chain."""
        _, cert = l1_to_cheb_linear(l1_three_by_two, GameToChebVariant.LITERAL)
        assert cert.variant == GameToChebVariant.LITERAL


class TestLpToCheb:
    """Test LP -> Chebyshev and chained pullback."""

    def test_unit_box_shape(self, unit_box):
        """Test the unit box LP becomes the 8-function RPS system."""
        problem, cert = lp_to_cheb(unit_box)
        assert (problem.size, problem.arity) == (8, 3)
        assert len(cert.stages) == 3

    def test_pullback_of_uniform_point(self, unit_box):
        """Test the uniform optimum pulls back to x1 = 1, value 1."""
        problem, cert = lp_to_cheb(unit_box)
        third = Fraction(1, 3)
        assert eval_cheb(problem, (third,) * 3) == 1
        s = cheb_chain_pullback(cert, Solution.optimal((third,) * 3, 1))
        assert s == Solution.optimal((1,), 1)

    def test_pullback_dispatch(self, unit_box):
        """Test pullback() routes chain certificates through every stage."""
        _, cert = lp_to_cheb(unit_box)
        third = Fraction(1, 3)
        assert pullback(cert, Solution.optimal((third,) * 3, 1)).point == (1,)

    def test_literal_failure_names_stage(self, unit_box):
        """Test the literal argmin fails at the game -> Chebyshev stage."""
        _, cert = lp_to_cheb(unit_box, GameToChebVariant.LITERAL)
        quarter = Fraction(1, 4)
        with pytest.raises(ChainPullbackError) as exc_info:
            cheb_chain_pullback(cert, Solution.optimal((quarter,) * 3, Fraction(3, 4)))
        assert exc_info.value.stage == 2
        assert exc_info.value.kind == ReductionKind.GAME_TO_CHEB
        assert isinstance(exc_info.value.cause, NotAStrategyError)

    def test_single_stage_rejected(self):
        """Test a single-stage certificate is not a chain."""
        _, cert = cheb_to_lp(ChebyshevProblem((AffineFunction(0, (1,)),)))
        with pytest.raises(CertificateMismatchError):
            cheb_chain_pullback(cert, Solution.optimal((0, 0), 0))


class TestDirectReduction:
    """Test the 2^(m-1) sign-pattern reduction."""

    def test_two_functions(self):
        """Test {x, x-4} gives 2x - 4 and the constant 4."""
        p = L1Problem((AffineFunction(0, (1,)), AffineFunction(-4, (1,))))
        direct = l1_to_cheb_direct(p)
        assert direct.functions == (AffineFunction(-4, (2,)), AffineFunction(4, (0,)))

    def test_size(self, l1_three_by_two):
        """Test 2^(m-1) functions in the same variables."""
        direct = l1_to_cheb_direct(l1_three_by_two)
        assert (direct.size, direct.arity) == (4, 2)

    def test_objectives_agree(self, l1_three_by_two):
        """Test sum |f_i| equals the direct Chebyshev objective."""
        direct = l1_to_cheb_direct(l1_three_by_two)
        for x in [(0, 0), (1, -2), (Fraction(1, 3), Fraction(5, 2))]:
            assert eval_l1(l1_three_by_two, x) == eval_cheb(direct, x)

    def test_single_function(self):
        """Test m = 1 gives the function itself."""
        p = L1Problem((AffineFunction(2, (1,)),))
        assert l1_to_cheb_direct(p).functions == p.functions

    def test_cap_exceeded(self, l1_three_by_two):
        """Test an explicit cap below m."""
        with pytest.raises(CapExceededError, match="cap m <= 2"):
            l1_to_cheb_direct(l1_three_by_two, cap=2)

    @patch("src.reductions.chains.get_settings")
    def test_cap_from_settings(self, mock_settings, l1_three_by_two):
        """Test the default cap comes from settings."""
        mock_settings.return_value = Settings(direct_reduction_cap=1)
        with pytest.raises(CapExceededError):
            l1_to_cheb_direct(l1_three_by_two)
