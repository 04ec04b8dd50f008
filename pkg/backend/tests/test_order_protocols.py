"""
Convergence-order protocols at 4096 digits. Slow; run with `pytest -m slow`.
"""
import pytest
from mpmath import mpf

from app.numerics.analysis.convergence import coc
from app.numerics.analysis.error_constant import error_constant_probe
from app.numerics.methods.solver import solve
from app.numerics.methods.weights import om8_config, variant_config
from app.numerics.precision import working_precision
from app.numerics.problems.suite import get_problem
from app.schemas.solver import StepKind

pytestmark = pytest.mark.slow

DIGITS = 4096
TOL = "1e-1000"


def _run(name, x0, step, cfg=None):
    with working_precision(DIGITS):
        problem = get_problem(name)
        report, trace = solve(problem, x0, step, cfg, tol=TOL)
        return problem, report, trace, problem.reference_root()


class TestOrders:

    @pytest.mark.parametrize("name, x0", [("f1", "1.5"), ("f6", "1.8"), ("f4", "1.4")])
    def test_om8_is_eighth_order(self, name, x0):
        _, report, trace, root = _run(name, x0, StepKind.OM8)
        assert report.converged
        with working_precision(DIGITS):
            assert 7.5 <= coc(trace, root).rho <= 8.5

    def test_other_exponent(self):
        _, report, trace, root = _run("f1", "1.5", StepKind.OM8, om8_config(m=4))
        with working_precision(DIGITS):
            assert 7.5 <= coc(trace, root).rho <= 8.5

    def test_alternate_weights(self):
        _, report, trace, root = _run("f6", "1.8", StepKind.OM8, om8_config(weights="alternate"))
        with working_precision(DIGITS):
            assert 7.5 <= coc(trace, root).rho <= 8.5

    @pytest.mark.parametrize("step, cfg, low, high", [
        (StepKind.VARIANT_M1, variant_config(1), 4.5, 5.5),
        (StepKind.VARIANT_M2, variant_config(2), 6.5, 7.5),
    ])
    def test_construction_variants(self, step, cfg, low, high):
        _, report, trace, root = _run("f1", "1.5", step, cfg)
        assert report.converged
        with working_precision(DIGITS):
            assert low <= coc(trace, root).rho <= high

    def test_steffensen_is_quadratic(self):
        _, report, trace, root = _run("f6", "2.1", StepKind.STEFFENSEN)
        with working_precision(DIGITS):
            assert 1.8 <= coc(trace, root).rho <= 2.2


class TestErrorConstantProtocol:

    def test_ratio_settles(self):
        problem, report, trace, root = _run("f6", "1.8", StepKind.OM8)
        with working_precision(DIGITS):
            probe = error_constant_probe(problem, root, trace)
            assert len(probe.ratios) >= 2
            last, previous = abs(probe.ratios[-1]), abs(probe.ratios[-2])
            assert mpf("0.5") <= last / previous <= 2
