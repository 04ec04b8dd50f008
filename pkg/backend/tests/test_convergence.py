import pytest
from mpmath import mpf

from app.numerics.analysis.convergence import coc, efficiency_index, efficiency_table
from app.numerics.exceptions import InsufficientTrace
from app.numerics.methods.solver import solve
from app.numerics.precision import working_precision
from app.numerics.problems.suite import get_problem
from app.schemas.solver import IterationTrace, StepKind


def synthetic(order, count=4, a="0.5", b="0.1"):
    """x_n = a * b^(order^n), converging to 0 with exact order `order`."""
    return [mpf(a) * mpf(b) ** (order**n) for n in range(count)]


class TestCOC:

    @pytest.mark.parametrize("order", [2, 5, 7, 8])
    def test_synthetic_sequences(self, digits1000, order):
        estimate = coc(synthetic(order), root=0)
        assert estimate.rho == pytest.approx(order, abs=1e-9)
        assert not estimate.residual_based
        assert estimate.triples_used == 1

    def test_cubic_powers_of_ten(self, digits100):
        xs = [mpf(10) ** (-2 * 3**n) for n in range(4)]
        assert coc(xs, root=0).rho == pytest.approx(3, abs=1e-6)

    def test_accepts_a_trace(self, digits1000):
        trace = IterationTrace.from_iterates(synthetic(5))
        assert coc(trace, root=0).rho == pytest.approx(5, abs=1e-9)

    def test_averaging_over_trailing_triples(self, digits1000):
        estimate = coc(synthetic(2, count=6), root=0, last=3)
        assert estimate.triples_used == 3
        assert estimate.rho == pytest.approx(2, abs=1e-9)

    def test_three_iterates_are_not_enough(self, digits1000):
        with pytest.raises(InsufficientTrace):
            coc(synthetic(8, count=3), root=0)

    def test_unresolvable_tail_is_dropped(self, digits100):
        # from the fourth error on (1e-512) nothing is above the 100-digit floor
        with pytest.raises(InsufficientTrace):
            coc(synthetic(8, count=5, a="1"), root=0)

    def test_successive_differences_without_root(self, digits100):
        estimate = coc(synthetic(2, count=5), root=None)
        assert estimate.residual_based
        assert estimate.rho == pytest.approx(2, abs=0.05)

    def test_steffensen_on_f1_is_quadratic(self):
        with working_precision(400):
            f1 = get_problem("f1")
            _, trace = solve(f1, "1.7", StepKind.STEFFENSEN, tol="1e-300")
            estimate = coc(trace, f1.reference_root())
        assert 1.8 <= estimate.rho <= 2.2


class TestEfficiency:

    @pytest.mark.parametrize("order, evals, expected", [
        (2, 2, 1.414),
        (8, 4, 1.682),
        (8, 5, 1.516),
        (5, 4, 1.495),
        (7, 4, 1.627),
    ])
    def test_values(self, order, evals, expected):
        assert round(efficiency_index(order, evals), 3) == expected

    def test_monotone(self):
        assert efficiency_index(8, 4) > efficiency_index(7, 4) > efficiency_index(5, 4)
        assert efficiency_index(8, 4) > efficiency_index(8, 5)

    @pytest.mark.parametrize("order, evals", [(1, 4), (0.5, 2), (8, 0)])
    def test_rejects_invalid_arguments(self, order, evals):
        with pytest.raises(ValueError):
            efficiency_index(order, evals)

    def test_table(self):
        rows = {row.method: row for row in efficiency_table()}
        assert round(rows["om8"].index, 3) == 1.682
        assert round(rows["eighth order, five evaluations"].index, 3) == 1.516
        assert rows["om8"].index == max(row.index for row in rows.values())
