"""Three-point expansion tests: coefficients, moment routes, region, evaluation."""

import math

import pytest

from gausshyp import (
    HypParams,
    OutsideDomain,
    ParamDomainError,
    RecurrenceBreakdown,
    SingularityError,
    cpow_principal,
    euler_integral,
    eval_threepoint,
    in_region_threepoint,
    phi3,
    phi3_sequence,
    threepoint_coeffs,
)
from conftest import Z_EXC, rel_err, sample_in_region

PARAMS = HypParams(1.2, 2.1, 3.0)


def phi1_closed(b: float, c: float) -> float:
    return -b * (b - c) * (2.0 * b - c) / (2.0 * c * (c + 1.0) * (c + 2.0))


class TestCoefficients:
    def test_constant_function_at_z_zero(self):
        co = threepoint_coeffs(1.2, 0j, 6)
        assert co.A[0] == 1.0 + 0j
        assert all(v == 0j for v in co.A[1:])
        assert all(v == 0j for v in co.B)
        assert all(v == 0j for v in co.C)

    def test_initial_values_scalar_oracle(self):
        # B_0 = 4 (3/2)^(-1.2) - 2^(-1.2) - 3 at z = -1, C_0 its complement
        co = threepoint_coeffs(1.2, -1.0 + 0j, 0)
        p_half = math.exp(-1.2 * math.log(1.5))
        p_one = math.exp(-1.2 * math.log(2.0))
        assert abs(co.B[0] - (4.0 * p_half - p_one - 3.0)) <= 1e-14
        assert abs(co.C[0] - (2.0 + 2.0 * p_one - 4.0 * p_half)) <= 1e-14

    @pytest.mark.parametrize("z", [Z_EXC, -1.0 + 0j, -0.6 + 0.9j])
    def test_leading_polynomial_interpolates(self, z):
        co = threepoint_coeffs(1.2, z, 0)
        for t in (0.0, 0.5, 1.0):
            poly = co.A[0] + co.B[0] * t + co.C[0] * t * t
            f = cpow_principal(1.0 - z * t, -1.2)
            assert abs(poly - f) <= 1e-13, (z, t)

    def test_taylor_reconstruction(self):
        for z in (Z_EXC, -1.0 + 0j):
            co = threepoint_coeffs(1.2, z, 40)
            for t in (0.2, 0.3, 0.5, 0.9):
                s = sum(
                    (co.A[n] + co.B[n] * t + co.C[n] * t * t)
                    * (t * (t - 1.0) * (t - 0.5)) ** n
                    for n in range(41)
                )
                f = cpow_principal(1.0 - z * t, -1.2)
                assert abs(s - f) <= 1e-8, (z, t)

    def test_singular_points(self):
        for z in (1.0 + 0j, 2.0 + 0j):
            with pytest.raises(SingularityError):
                threepoint_coeffs(1.2, z, 3)


class TestPhi3:
    def test_order_zero_both_modes(self):
        assert phi3(0, 2.1, 3.0, mode="recurrence") == 1.0
        assert phi3(0, 2.1, 3.0, mode="direct") == 1.0

    def test_order_one_closed_form(self):
        want = phi1_closed(2.1, 3.0)
        assert abs(want - 0.0189) <= 1e-15  # -2.1 (-0.9)(1.2) / 120
        assert abs(phi3(1, 2.1, 3.0, mode="direct") - want) <= 1e-14
        assert abs(phi3(1, 2.1, 3.0, mode="recurrence") - want) <= 1e-14

    @pytest.mark.parametrize("b,c", [(2.1, 3.0), (2.5, 3.0), (2.01, 3.0), (3.1, 4.0)])
    def test_dual_route_agreement(self, b, c):
        # recurrence in double vs the terminating closed form in extended
        # precision (the direct sum cancels in double beyond n ~ 12)
        rec = phi3_sequence(25, b, c, mode="recurrence")
        direct = phi3_sequence(25, b, c, mode="direct", dps=50)
        for n in range(26):
            assert abs(rec[n] - direct[n]) <= 1e-9 * max(abs(direct[n]), 1e-300), (b, c, n)

    def test_direct_double_accurate_at_small_n(self):
        for n in range(9):
            d = phi3(n, 2.1, 3.0, mode="direct")
            r = phi3(n, 2.1, 3.0, mode="recurrence")
            assert abs(d - r) <= 1e-10 * max(abs(r), 1e-300)

    def test_contiguous_relation(self):
        # Phi_{n+1}(b,c) = b(b+1)(c-b)/(c(c+1)(c+2)) Phi_n(b+2,c+3)
        #                - b(c-b)/(2c(c+1)) Phi_n(b+1,c+2)
        b, c = 2.1, 3.0
        base = phi3_sequence(16, b, c, mode="recurrence")
        s23 = phi3_sequence(16, b + 2.0, c + 3.0, mode="recurrence")
        s12 = phi3_sequence(16, b + 1.0, c + 2.0, mode="recurrence")
        w1 = b * (b + 1.0) * (c - b) / (c * (c + 1.0) * (c + 2.0))
        w2 = b * (c - b) / (2.0 * c * (c + 1.0))
        for n in range(16):
            lhs = base[n + 1]
            rhs = w1 * s23[n] - w2 * s12[n]
            assert abs(lhs - rhs) <= 1e-9 * max(abs(lhs), 1e-300), n

    def test_recurrence_breakdown_raises_and_direct_works(self):
        # Z_1 vanishes at b = 1, c = 4/5
        with pytest.raises(RecurrenceBreakdown):
            phi3_sequence(5, 1.0, 0.8, mode="recurrence")
        vals = phi3_sequence(5, 1.0, 0.8, mode="direct")
        assert len(vals) == 6 and all(math.isfinite(v) for v in vals)

    def test_invalid_mode(self):
        with pytest.raises(ValueError):
            phi3(3, 2.1, 3.0, mode="bogus")


class TestRegion:
    def test_origin(self):
        v = in_region_threepoint(0j)
        assert v.inside
        assert abs(v.margin - 12.0 * math.sqrt(3.0)) <= 1e-12

    def test_exceptional_point(self):
        # |1-z| = 1, |2-z| = sqrt(3), so margin = 18 - 1 = 17
        v = in_region_threepoint(Z_EXC)
        assert v.inside
        assert abs(v.margin - 17.0) <= 1e-9

    def test_singular_points_excluded(self):
        assert not in_region_threepoint(1.0 + 0j).inside
        assert not in_region_threepoint(2.0 + 0j).inside

    def test_region_wider_than_twopoint_on_ray(self):
        # z = -6 is outside |z|^2 < 4|1-z| but inside the three-point region
        from gausshyp import in_region_twopoint

        z = -6.0 + 0j
        assert not in_region_twopoint(z).inside
        assert in_region_threepoint(z).inside

    def test_oval_radius_matches_interval_maximum(self):
        # the region constant encodes the max of |t(t-1)(t-1/2)| over (0,1):
        # value 1/(12 sqrt(3)), attained at t = (3 +- sqrt(3))/6
        vals = [(abs(t * (t - 1.0) * (t - 0.5)), t) for t in (k / 100000.0 for k in range(1, 100000))]
        peak, argmax = max(vals)
        assert abs(peak - 1.0 / (12.0 * math.sqrt(3.0))) <= 1e-9
        t_stars = ((3.0 - math.sqrt(3.0)) / 6.0, (3.0 + math.sqrt(3.0)) / 6.0)
        assert min(abs(argmax - t) for t in t_stars) <= 1e-4


class TestEvalThreepoint:
    def test_at_origin_exact(self):
        for n in (0, 5):
            assert eval_threepoint(PARAMS, 0j, n_terms=n).value == 1.0 + 0j

    def test_exceptional_point_accuracy(self):
        ref = euler_integral(PARAMS, Z_EXC).value
        assert rel_err(eval_threepoint(PARAMS, Z_EXC, n_terms=20).value, ref) <= 1e-12

    def test_near_integer_difference_case(self):
        p = HypParams(1.2, 2.01, 3.0)
        ref = euler_integral(p, -5.0 + 0j).value
        assert rel_err(eval_threepoint(p, -5.0 + 0j, n_terms=20).value, ref) <= 2e-5

    def test_exact_integer_difference_works(self):
        # b - a integer is fine here, unlike the continuation
        p = HypParams(1.2, 2.2, 3.0)
        ref = euler_integral(p, Z_EXC).value
        assert rel_err(eval_threepoint(p, Z_EXC, n_terms=20).value, ref) <= 1e-12

    def test_moment_bookkeeping_routes_agree(self):
        # external (-1)^n with recurrence moments vs the direct closed form
        # folded into positive weights: same sum, different sign bookkeeping
        for params, z in ((PARAMS, Z_EXC), (HypParams(1.2, 2.01, 3.0), -5.0 + 0j)):
            res = eval_threepoint(params, z, n_terms=20)
            b, c = params.b, params.c
            co = threepoint_coeffs(params.a, z, 20)
            alt = 0j
            for n in range(21):
                w0 = (-1.0) ** n * phi3(n, b, c, mode="direct", dps=40)
                w1 = (-1.0) ** n * phi3(n, b + 1.0, c + 1.0, mode="direct", dps=40)
                w2 = (-1.0) ** n * phi3(n, b + 2.0, c + 2.0, mode="direct", dps=40)
                alt += (
                    co.A[n] * w0
                    + (b / c) * co.B[n] * w1
                    + (b * (b + 1.0) / (c * (c + 1.0))) * co.C[n] * w2
                )
            assert abs(res.value - alt) <= 1e-12 * abs(res.value)

    def test_error_within_estimate(self):
        rows = [
            (HypParams(1.2, 2.1, 3.0), Z_EXC),
            (HypParams(1.2, 2.5, 3.0), Z_EXC),
            (HypParams(1.2, 2.1, 3.0), -5.0 + 0j),
            (HypParams(1.2, 2.01, 3.0), -5.0 + 0j),
        ]
        for params, z in rows:
            ref = euler_integral(params, z).value
            res = eval_threepoint(params, z, n_terms=20)
            assert rel_err(res.value, ref) <= 10.0 * res.est_error, (params, z)

    def test_matches_oracle_across_region(self):
        ratio = 6.0 * math.sqrt(3.0)
        samples = sample_in_region(
            lambda z: abs(z) ** 3 < 0.5 * ratio * abs((1.0 - z) * (2.0 - z))
            and not (abs(z.imag) < 1e-9 and z.real >= 1.0),
            8,
            seed=99,
            box=4.0,
        )
        for z in samples:
            ref = euler_integral(PARAMS, z).value
            res = eval_threepoint(PARAMS, z, n_terms=40)
            assert rel_err(res.value, ref) <= 1e-8, z

    def test_outside_region(self):
        with pytest.raises(OutsideDomain):
            eval_threepoint(PARAMS, 3.0 + 0j, n_terms=10)

    def test_singularities(self):
        for z in (1.0 + 0j, 2.0 + 0j):
            with pytest.raises(SingularityError):
                eval_threepoint(PARAMS, z, n_terms=10)

    def test_param_domain(self):
        with pytest.raises(ParamDomainError):
            eval_threepoint(HypParams(1.0, 2.5, 2.0), -1.0 + 0j, n_terms=10)
