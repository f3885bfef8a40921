"""Entire-function catalog tests: closed forms, factorization data, roots."""

import math

import numpy as np
import pytest

from opineq.calculus import TwoSidedOperator, apply_calculus, induced_norm_lower_estimate
from opineq.errors import InvalidParameter, UnknownFunction
from opineq.functions import (
    alpha_of,
    catalog_roots,
    cosh_fn,
    cpr_constants,
    cpr_function,
    cpr_is_admissible,
    exp_minus,
    gamma_reciprocal_fn,
    parse_function,
    sinh_over_z,
    weierstrass_truncated,
    z_cosh_minus_sinh,
    EntireFunctionSpec,
)
from opineq.norms import NORM_SWEEP
from opineq.norms import norm as mnorm

CATALOG = (
    sinh_over_z(),
    cosh_fn(),
    z_cosh_minus_sinh(),
    gamma_reciprocal_fn(),
    exp_minus(0.0),
    exp_minus(math.pi / 2),
    cpr_function(0.0, 0.0),
    cpr_function(1.0, 0.0),
    cpr_function(2.0, 0.0),
    cpr_function(0.0, math.pi / 2),
    cpr_function(0.0, math.pi),
    cpr_function(-2.0, 0.0),
)


def closed_scalar(spec, z):
    return complex(np.asarray(spec.closed_form(np.array([complex(z)])))[0])


class TestRoots:
    def test_sinh_over_z_lattice(self):
        roots = catalog_roots("sinh_over_z", 3)
        assert np.allclose(roots, [math.pi, 2 * math.pi, 3 * math.pi], atol=1e-12)

    def test_cosh_lattice(self):
        roots = catalog_roots("cosh", 50)
        expect = (np.arange(1, 51) - 0.5) * math.pi
        assert np.max(np.abs(roots - expect)) <= 1e-12 * 50 * math.pi

    def test_tan_fixed_point(self):
        first = catalog_roots("z_cosh_minus_sinh", 1)[0]
        assert first == pytest.approx(4.493409, abs=1e-6)

    def test_cpr_cosh_lattice(self):
        roots = catalog_roots("cpr:r=0,theta=0", 2)
        assert np.allclose(roots, [math.pi / 2, 3 * math.pi / 2], atol=1e-12)

    def test_gamma_signed_integers(self):
        roots = catalog_roots("gamma_reciprocal", 4)
        assert np.allclose(roots, [-1.0, -2.0, -3.0, -4.0])

    def test_unknown_function(self):
        with pytest.raises(UnknownFunction):
            catalog_roots("airy", 3)

    def test_off_cross_has_no_roots(self):
        with pytest.raises(InvalidParameter):
            catalog_roots("cpr:r=1,theta=1.5707963267948966", 3)


@pytest.mark.parametrize("spec", [s for s in CATALOG if s.has_roots],
                         ids=lambda s: s.id)
class TestFactorizationData:
    def test_closed_form_vanishes_at_roots(self, spec):
        h = 1e-6
        for zk in spec.first_roots(20):
            root = -1j * zk
            val = abs(closed_scalar(spec, root))
            deriv = abs(
                closed_scalar(spec, root + h) - closed_scalar(spec, root - h)
            ) / (2 * h)
            assert val <= 1e-8 * max(1.0, deriv)
            if spec.symmetric:
                assert abs(closed_scalar(spec, 1j * zk)) <= 1e-8 * max(1.0, deriv)

    def test_leading_coefficient(self, spec):
        z = 1e-6
        val = closed_scalar(spec, z) / z**spec.zero_order
        assert abs(val - spec.leading) <= 1e-4 * abs(spec.leading)

    def test_exponent_matches_numeric(self, spec):
        assert abs(alpha_of(spec) - spec.exponent) <= 1e-6


class TestAlpha:
    def test_pure_exponential(self):
        spec = EntireFunctionSpec(
            id="exp", closed_form=np.exp, zero_order=0, leading=1.0,
            exponent=1.0, roots=None, symmetric=False,
        )
        assert abs(alpha_of(spec) - 1.0) <= 1e-8

    def test_even_function_zero(self):
        spec = cpr_function(0.0, 0.0)  # 2 cosh z
        assert abs(alpha_of(spec)) <= 1e-8

    def test_exp_minus_quarter_turn(self):
        # Re alpha = 1/2 for the rotated exponential family, every theta
        for theta in (math.pi / 2, math.pi, 0.4):
            spec = exp_minus(theta)
            assert alpha_of(spec).real == pytest.approx(0.5, abs=1e-7)


class TestCpr:
    def test_cosh_point(self):
        spec = cpr_function(0.0, 0.0)
        assert abs(spec.leading) == pytest.approx(2.0)
        assert spec.exponent == pytest.approx(0.0)
        assert spec.zero_order == 0

    def test_sinh_degenerate_point(self):
        spec = cpr_function(0.0, math.pi)
        assert spec.zero_order == 1
        assert spec.leading == pytest.approx(-2.0)
        assert spec.exponent == pytest.approx(0.0)

    def test_double_root_degenerate_point(self):
        # F = 2 cosh z - 2 = z^2 (1 + O(z^2)): order-2 zero, unit leading
        spec = cpr_function(-2.0, 0.0)
        assert spec.zero_order == 2
        assert spec.leading == pytest.approx(1.0)
        v = closed_scalar(spec, 1e-6) / 1e-12
        assert v.real == pytest.approx(1.0, abs=1e-4)

    def test_off_cross_alpha(self):
        spec = cpr_function(1.0, math.pi / 2)
        assert spec.exponent.real == pytest.approx(0.2, abs=1e-12)
        assert not spec.has_roots

    def test_admissibility_cross(self):
        assert cpr_is_admissible(1.5, 0.0)
        assert cpr_is_admissible(0.0, 2.1)
        assert not cpr_is_admissible(1.0, math.pi / 2)
        assert not cpr_is_admissible(2.5, 0.0)

    def test_range_gate(self):
        with pytest.raises(InvalidParameter):
            cpr_function(2.5, 0.0)
        with pytest.raises(InvalidParameter):
            cpr_function(-2.01, 1.0)

    def test_constant_conventions(self):
        c = cpr_constants(1.0, math.pi / 2)
        assert c["c_printed"] == pytest.approx(c["c_impl"] ** 2, rel=1e-12)
        assert c["b_impl"] == pytest.approx(0.2, abs=1e-12)
        # both conventions coincide where the modulus is one
        c0 = cpr_constants(0.0, 2 * math.pi / 3)
        assert c0["c_impl"] == pytest.approx(1.0, abs=1e-12)
        assert c0["b_impl"] == pytest.approx(c0["b_printed"], abs=1e-12)

    def test_r2_double_lattice(self):
        spec = cpr_function(2.0, 0.0)
        roots = spec.first_roots(4)
        assert np.allclose(roots, [math.pi, math.pi, 3 * math.pi, 3 * math.pi])


class TestWeierstrass:
    def test_sinh_over_z_at_origin(self):
        spec = sinh_over_z()
        for terms in (1, 10, 100):
            assert weierstrass_truncated(spec, 0.0, terms) == pytest.approx(1.0)

    def test_cosh_root_factor_exact_zero(self):
        spec = cosh_fn()
        assert weierstrass_truncated(spec, 1j * math.pi / 2, 1) == 0.0
        assert weierstrass_truncated(spec, 1j * math.pi / 2, 50) == 0.0

    def test_sinh_tail_bound(self):
        spec = sinh_over_z()
        closed = math.sinh(1.0)
        approx = weierstrass_truncated(spec, 1.0, 1000)
        assert abs(approx - closed) / closed <= 1e-3

    @pytest.mark.parametrize("spec", [sinh_over_z(), cosh_fn(), z_cosh_minus_sinh()],
                             ids=lambda s: s.id)
    def test_monotone_convergence_real_grid(self, spec):
        for z in np.linspace(-5.0, 5.0, 9):
            if abs(z) < 1e-9:
                continue
            closed = closed_scalar(spec, z)
            errs = [abs(weierstrass_truncated(spec, z, n) - closed)
                    for n in (10, 100, 1000)]
            assert errs[0] >= errs[1] >= errs[2]

    def test_tan_root_product_identity(self):
        spec = z_cosh_minus_sinh()
        closed = 1.0 * math.cosh(1.0) - math.sinh(1.0)
        approx = weierstrass_truncated(spec, 1.0, 1000)
        assert abs(approx - closed) / closed <= 1e-3

    def test_asymmetric_gamma_product(self):
        spec = gamma_reciprocal_fn()
        closed = closed_scalar(spec, 1.0)
        approx = weierstrass_truncated(spec, 1.0, 3000)
        assert abs(approx - closed) <= 2e-3 * abs(closed)

    def test_bad_terms(self):
        with pytest.raises(InvalidParameter):
            weierstrass_truncated(sinh_over_z(), 1.0, 0)


class TestParse:
    def test_ids_roundtrip(self):
        for ident in ("sinh_over_z", "cosh", "z_cosh_minus_sinh",
                      "gamma_reciprocal", "cpr:r=0,theta=0",
                      "exp_minus:theta=1.5707963267948966"):
            assert parse_function(ident) is not None
        with pytest.raises(UnknownFunction):
            parse_function("cpr:r=0")
        with pytest.raises(UnknownFunction):
            parse_function("cpr:r=0,theta=x")


def random_hermitian(rng, n):
    g = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return (g + g.conj().T) / 2


class TestProofEngine:
    @pytest.mark.parametrize("spec", [s for s in CATALOG if s.has_roots],
                             ids=lambda s: s.id)
    def test_factor_expansivity(self, spec):
        rng = np.random.default_rng(hash(spec.id) % 2**32)
        roots = spec.first_roots(10)
        if spec.symmetric:
            roots = np.concatenate([roots, -roots])
        x, y = random_hermitian(rng, 3), random_hermitian(rng, 3)
        op = TwoSidedOperator.from_matrices(x, y, 1)
        t = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
        for zk in roots:
            def factor(s, zk=zk):
                s = np.asarray(s, dtype=complex)
                return (1.0 - 1j * s / zk) * np.exp(1j * s / zk)
            out = apply_calculus(factor, op, t)
            for nspec in NORM_SWEEP:
                base = mnorm(t, nspec)
                val = mnorm(out, nspec)
                assert val >= base - 1e-10 * max(val, base, 1.0)

    def test_interlacing_certificate(self):
        w = np.array([0.8, 1.9, 3.1, 4.4])
        z = w * np.array([1.6, 1.3, 1.5, 1.2])

        def ratio(s):
            s = np.asarray(s, dtype=float)
            num, den = np.ones_like(s), np.ones_like(s)
            for a, b in zip(z, w):
                num = num * (1 + s * s / (a * a))
                den = den * (1 + s * s / (b * b))
            return num / den

        grid = np.linspace(-20, 20, 401)
        assert np.all(np.abs(ratio(grid)) <= 1.0 + 1e-12)
        rng = np.random.default_rng(41)
        x, y = random_hermitian(rng, 3), random_hermitian(rng, 3)
        op = TwoSidedOperator.from_matrices(x, y, 1)
        for nspec in NORM_SWEEP:
            est = induced_norm_lower_estimate(ratio, op, nspec, 40, 13)
            assert est <= 1.0 + 1e-9
