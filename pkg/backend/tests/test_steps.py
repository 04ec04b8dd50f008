import mpmath
import pytest
from mpmath import mpf

from app.numerics.exceptions import DegenerateNodes, ZeroDenominator, ZeroDerivative
from app.numerics.methods.steps import divided_difference, newton_step, om8_step, steffensen_step
from app.numerics.methods.weights import om8_config, variant_config
from app.numerics.precision import ulp_threshold, working_precision
from app.numerics.problems.suite import get_problem
from tests.conftest import linear


class TestDividedDifference:

    @pytest.mark.parametrize("f, a, b, expected", [
        (lambda x: x, "2", "5", "1"),
        (lambda x: x**2, "1", "3", "4"),
        (lambda x: 3 * x - 7, "-4", "10", "3"),
    ])
    def test_examples(self, digits50, f, a, b, expected):
        assert divided_difference(f, mpf(a), mpf(b)) == mpf(expected)

    def test_f1_against_double_precision(self):
        f1 = get_problem("f1")
        with working_precision(50):
            low = divided_difference(f1, mpf("1.7"), mpf("1.8"))
        with working_precision(100):
            high = divided_difference(f1, mpf("1.7"), mpf("1.8"))
            assert abs(high - low) < mpf("1e-45")

    def test_reuses_known_values(self, digits50):
        f1 = get_problem("f1")
        a, b = mpf("1.7"), mpf("1.8")
        divided_difference(f1, a, b, fa=f1.value(a))
        assert f1.counter == 1

    @pytest.mark.parametrize("gap", ["0", "1e-45"])
    def test_degenerate_nodes(self, digits50, gap):
        a = mpf("1.5")
        with pytest.raises(DegenerateNodes):
            divided_difference(lambda x: x**2, a, a + mpf(gap), which="f[a,b]")

    def test_symmetry_is_bitwise(self, digits50, rng):
        f = lambda x: mpmath.sin(x) + x**3
        for a, b in rng.uniform(-10, 10, size=(1000, 2)):
            a, b = mpf(a), mpf(b)
            if a == b:
                continue
            assert divided_difference(f, a, b) == divided_difference(f, b, a)

    def test_exact_on_linear_functions(self, digits50, rng):
        for a, b, u, v in rng.uniform(-10, 10, size=(1000, 4)):
            if abs(u - v) < 1e-6:
                continue
            f, _ = linear(a, b)
            slope = divided_difference(f, mpf(u), mpf(v))
            assert abs(slope - mpf(a)) <= ulp_threshold(mpf(a))


class TestNewtonStep:

    def test_quadratic(self, digits50):
        outcome = newton_step(lambda x: x**2 - 1, lambda x: 2 * x, mpf(2))
        assert outcome.next_x == mpf("1.25")
        assert outcome.evals_used == 2

    def test_linear_lands_on_the_root(self, digits50):
        outcome = newton_step(lambda x: x, lambda x: mpf(1), mpf(7))
        assert outcome.next_x == 0

    def test_zero_derivative(self, digits50):
        with pytest.raises(ZeroDerivative):
            newton_step(lambda x: x**2 + 1, lambda x: 2 * x, mpf(0))

    def test_decreases_f6_residual(self, digits50):
        f6 = get_problem("f6")
        x = mpf("1.9")
        outcome = newton_step(f6, f6.derivative(), x)
        assert abs(f6.value(outcome.next_x)) < abs(f6.value(x))


class TestSteffensenStep:

    def test_linear(self, digits50):
        outcome = steffensen_step(lambda x: x, mpf("0.5"))
        assert outcome.next_x == 0
        assert outcome.evals_used == 2
        assert outcome.degenerate is None

    def test_exact_root_is_flagged(self, digits50):
        outcome = steffensen_step(lambda x: x**2 - 4, mpf(2))
        assert outcome.next_x == 2
        assert outcome.evals_used == 1
        assert outcome.degenerate == "f[x,x+f(x)]"

    def test_tiny_residual_is_degenerate(self, digits50):
        outcome = steffensen_step(lambda x: x - mpf(1) - mpf("1e-45"), mpf(1))
        assert outcome.degenerate == "f[x,x+f(x)]"
        assert outcome.next_x == 1

    def test_zero_slope(self, digits50):
        with pytest.raises(ZeroDenominator):
            steffensen_step(lambda x: mpf(3), mpf(0))

    def test_f1_residual_decays(self, digits100):
        f1 = get_problem("f1")
        x = mpf("1.7")
        residuals = [abs(f1.value(x))]
        for _ in range(5):
            x = steffensen_step(f1, x).next_x
            residuals.append(abs(f1.value(x)))
        assert all(b < a for a, b in zip(residuals, residuals[1:]))
        assert residuals[-1] < mpf("1e-8")


class TestOM8Step:

    def test_linear_lands_on_the_root_in_the_first_substep(self, digits50):
        outcome = om8_step(lambda x: x, mpf("0.25"), om8_config())
        assert outcome.next_x == 0
        assert outcome.evals_used == 3
        assert outcome.degenerate is not None

    def test_four_evaluations_per_step(self, digits100):
        f1 = get_problem("f1")
        outcome = om8_step(f1, mpf("1.5"), om8_config())
        assert outcome.evals_used == 4
        assert outcome.degenerate is None
        assert f1.counter == 4

    def test_known_fx_is_not_reevaluated(self, digits100):
        f1 = get_problem("f1")
        x = mpf("1.5")
        outcome = om8_step(f1, x, om8_config(), fx=f1.value(x))
        assert f1.counter == 3
        assert outcome.evals_used == 4

    def test_one_step_gains_many_digits(self, digits100):
        f1 = get_problem("f1")
        root = f1.reference_root()
        x = mpf("1.7")
        outcome = om8_step(f1, x, om8_config())
        assert abs(outcome.next_x - root) < abs(x - root) ** 6

    def test_exact_root_is_flagged(self, digits50):
        outcome = om8_step(lambda x: x**2 - 4, mpf(2), om8_config())
        assert outcome.next_x == 2
        assert outcome.evals_used == 1
        assert outcome.degenerate == "f[z,x]"

    def test_collapsed_first_node(self, digits50):
        # f(x)^3 = 1e-45 is below the node resolution
        outcome = om8_step(lambda x: x - mpf(1) - mpf("1e-15"), mpf(1), om8_config())
        assert outcome.degenerate == "f[z,x]"
        assert outcome.next_x == 1
        assert outcome.evals_used == 1

    def test_constant_function(self, digits50):
        with pytest.raises(ZeroDenominator):
            om8_step(lambda x: mpf(1), mpf(0), om8_config())

    @pytest.mark.parametrize("cfg", [
        om8_config(),
        om8_config(weights="alternate"),
        om8_config(alpha="-0.5", m=4),
        variant_config(1),
        variant_config(2),
    ], ids=["om8", "alternate", "alpha-m4", "variant-m1", "variant-m2"])
    def test_linear_functions_solved_in_one_step(self, digits50, rng, cfg):
        for a, b, x0 in rng.uniform(-5, 5, size=(200, 3)):
            if abs(a) < 0.5:
                continue
            f, root = linear(a, b)
            x = mpf(x0)
            if abs(f(x)) < 1e-3:
                continue
            outcome = om8_step(f, x, cfg)
            assert abs(outcome.next_x - root) <= ulp_threshold(root)


class TestLinearExactness:

    def test_every_method_lands_within_an_ulp(self, digits50, rng):
        for a, b, x0 in rng.uniform(-5, 5, size=(1000, 3)):
            if abs(a) < 0.5:
                continue
            f, root = linear(a, b)
            x = mpf(x0)
            if abs(f(x)) < 1e-3:
                continue
            slope = mpf(a)
            for outcome in (
                newton_step(f, lambda _: slope, x),
                steffensen_step(f, x),
                om8_step(f, x, om8_config()),
            ):
                assert abs(outcome.next_x - root) <= ulp_threshold(root)
