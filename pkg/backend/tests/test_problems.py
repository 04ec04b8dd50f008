import mpmath
import pytest
from mpmath import mpf

from app.numerics.exceptions import DomainError, NoSignChange
from app.numerics.precision import working_precision
from app.numerics.problems.expression import compile_expression
from app.numerics.problems.refine import bisect, refine_root
from app.numerics.problems.suite import Problem, get_problem, load_entries, suite
from app.schemas.problem import Domain

SUITE_NAMES = ["f1", "f2", "f3", "f4", "f5", "f6", "f7"]


class TestSuite:

    def test_names_in_order(self):
        assert [p.name for p in suite()] == SUITE_NAMES
        assert [e.name for e in load_entries()] == SUITE_NAMES

    def test_unknown_name(self):
        with pytest.raises(KeyError):
            get_problem("f9")

    def test_every_problem_has_a_reference_root(self):
        assert all(p.has_reference_root for p in suite(literal_f7=False))

    @pytest.mark.parametrize("name, listed", [
        ("f1", "1.6796"),
        ("f3", "1.19"),
        ("f4", "1.2979"),
        ("f5", "-0.92577"),
        ("f6", "2.07683"),
    ])
    def test_reference_root_matches_listed_digits(self, digits50, name, listed):
        root = get_problem(name).reference_root()
        assert abs(root - mpf(listed)) < mpf("1e-2")

    def test_exact_roots(self, digits100):
        assert get_problem("f2").reference_root() == 0
        assert get_problem("f7").reference_root() == mpf(1) / 3

    def test_f7_vanishes_at_one_third(self):
        with working_precision(256):
            f7 = get_problem("f7")
            assert abs(f7.value(mpf(1) / 3)) < mpf("1e-250")

    def test_printed_f7_has_no_reference_root(self, digits50):
        f7 = get_problem("f7", literal_f7=True)
        assert "cos(pi/2)" in f7.expression
        assert f7.reference_root() is None
        assert not f7.has_reference_root

    @pytest.mark.parametrize("name", SUITE_NAMES)
    def test_reference_root_residual_at_256_digits(self, name):
        with working_precision(256):
            problem = get_problem(name)
            root = problem.reference_root()
            assert abs(problem.value(root)) < mpf("1e-190")


    @pytest.mark.parametrize("item", [e for e in load_entries() if not e.exact_root], ids=lambda e: e.name)
    def test_stored_roots_carry_200_digits(self, item):
        assert item.root is not None
        digits = item.root.lstrip("-").replace(".", "").lstrip("0")
        assert len(digits) >= 200
        lo, hi = sorted(mpf(v) for v in item.bracket)
        assert lo < mpf(item.root) < hi

    @pytest.mark.parametrize("name", ["f1", "f5"])
    def test_stored_roots_agree_with_bisection(self, name):
        with working_precision(220):
            problem = get_problem(name)
            bisected = refine_root(problem, problem.bracket, 200)
            assert abs(mpf(problem.stored_root) - bisected) < mpf("1e-195")

    def test_expression_bracket_may_be_a_list(self, digits50):
        problem = Problem.from_expression("x^2 - 2", bracket=["1", "2"])
        assert problem.bracket == ("1", "2")
        assert abs(problem.reference_root() - mpmath.sqrt(2)) < mpf("1e-45")

    def test_reference_root_respects_the_domain(self, digits50):
        # bisection of x - 1 on [0, 2] lands on the excluded point first
        problem = Problem(
            name="gap",
            func=compile_expression("x - 1"),
            expression="x - 1",
            domain=Domain(exclude=["1"]),
            bracket=["0", "2"],
        )
        with pytest.raises(DomainError):
            problem.reference_root()


class TestCounting:

    def test_calls_are_counted(self, digits50):
        f1 = get_problem("f1")
        for _ in range(5):
            f1(mpf("1.7"))
        assert f1.counter == 5
        f1.reset()
        assert f1.counter == 0

    def test_value_does_not_count(self, digits50):
        f1 = get_problem("f1")
        f1.value(mpf("1.7"))
        assert f1.counter == 0

    def test_fresh_has_an_independent_counter(self, digits50):
        f1 = get_problem("f1")
        f1(mpf("1.7"))
        other = f1.fresh()
        other(mpf("1.7"))
        other(mpf("1.8"))
        assert f1.counter == 1
        assert other.counter == 2

    def test_derivative(self, digits50):
        f = get_problem("f6")
        x = mpf("1.9")
        expected = -mpmath.exp(-x) + mpmath.cos(x)
        assert abs(f.derivative()(x) - expected) < mpf("1e-40")


class TestDomains:

    @pytest.mark.parametrize("name, x", [
        ("f4", "0"),
        ("f4", "-1"),
        ("f5", "1.5"),
        ("f5", "0"),
        ("f5", "-1.01"),
        ("f7", "1.2"),
    ])
    def test_outside_domain(self, digits50, name, x):
        with pytest.raises(DomainError):
            get_problem(name)(mpf(x))

    @pytest.mark.parametrize("name, x", [
        ("f5", "1"),
        ("f5", "-1"),
        ("f7", "1"),
        ("f4", "0.001"),
    ])
    def test_closed_endpoints_and_interior(self, digits50, name, x):
        assert mpmath.isfinite(get_problem(name)(mpf(x)))

    def test_expression_problem_raises_from_elementary_guard(self, digits50, make_problem):
        with pytest.raises(DomainError):
            make_problem("log(x)")(mpf(-2))


class TestRefine:

    def test_linear_root(self, make_problem):
        with working_precision(60):
            root = refine_root(make_problem("x - 2"), ("0", "5"), 50)
            assert abs(root - 2) < mpf("1e-50")

    def test_f3_bracket(self, digits50):
        f3 = get_problem("f3")
        root = refine_root(f3, ("1.1", "1.3"), 40)
        assert abs(root - mpf("1.19")) < mpf("0.01")
        assert abs(f3.value(root)) < mpf("1e-38")

    def test_f5_bracket(self, digits50):
        f5 = get_problem("f5")
        root = refine_root(f5, ("-0.95", "-0.9"), 40)
        assert abs(root - mpf("-0.92577")) < mpf("1e-4")

    def test_reversed_bracket(self, digits50, make_problem):
        root = refine_root(make_problem("x^2 - 2"), ("2", "0"), 40)
        assert abs(root - mpmath.sqrt(2)) < mpf("1e-40")

    def test_no_sign_change(self, digits50, make_problem):
        with pytest.raises(NoSignChange):
            refine_root(make_problem("x^2 + 1"), ("-1", "1"), 20)

    def test_refinement_does_not_count(self, digits50):
        f1 = get_problem("f1")
        refine_root(f1, ("1.6", "1.8"), 30)
        assert f1.counter == 0

    def test_bisect_returns_an_exact_zero(self, digits50):
        assert bisect(lambda x: x - 1, mpf(0), mpf(2), mpf("1e-30")) == 1
