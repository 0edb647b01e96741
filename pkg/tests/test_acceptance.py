"""
Full-scale randomized checks, run with ``pytest -m slow``.

Each case runs one verification suite at the trial count it is accepted at.
"""

import pytest

from src.oracles.suites import results_table, run_suites


@pytest.mark.slow
class TestAcceptance:
    """Run every suite at acceptance scale."""

    @pytest.mark.parametrize(
        "suite,trials",
        [
            ("sizes", 50),
            ("corrected", 200),
            ("literal", 100),
            ("simplex", 100),
            ("lp-chain", 50),
            ("l1", 50),
            ("serialization", 20),
        ],
    )
    def test_suite(self, suite, trials):
        """Test the suite passes with no failed checks."""
        (result,) = run_suites([suite], seed=0, trials=trials)
        assert result.checks > 0
        assert result.passed, "\n".join(result.failures[:10])

    def test_table_shape(self):
        """Test the summary table has one row per suite."""
        results = run_suites(["sizes", "literal"], seed=1, trials=3)
        table = results_table(results)
        assert list(table["suite"]) == ["sizes", "literal"]
        assert table["passed"].all()
