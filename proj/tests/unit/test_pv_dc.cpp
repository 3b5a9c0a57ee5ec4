#include <doctest.h>

#include <cmath>
#include <random>

#include "rbcom/errors.hpp"
#include "rbcom/pv_dc.hpp"

using namespace rbcom;

namespace {

// Plain interval-halving oracle on the Kirchhoff residual, written without
// any shared machinery with the library solver.
double bisect_output_current(double I_ph, double R_L, const PVParams& pv)
{
    const double nvt = pv.n_s * pv.n * thermal_voltage(pv.T);
    const auto residual = [&](double i) {
        const double v_d = i * (R_L + pv.R_s);
        // exp may overflow to inf here; the comparison below still orders
        return I_ph - pv.I_0 * (std::exp(v_d / nvt) - 1.0) - v_d / pv.R_sh - i;
    };
    double lo = 0.0;
    double hi = I_ph;
    for (int k = 0; k < 200; ++k) {
        const double mid = 0.5 * (lo + hi);
        if (residual(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("thermal voltage at 298.15 K")
{
    CHECK(thermal_voltage(298.15) == doctest::Approx(0.02569257912108585).epsilon(1e-12));
}

TEST_CASE("photocurrent scales with optical power")
{
    CHECK(photocurrent(0.2, 0.746) == doctest::Approx(0.1492).epsilon(1e-15));
    CHECK(photocurrent(0.0, 0.746) == 0.0);
    CHECK_THROWS_AS(photocurrent(-0.1, 0.746), DomainError);
}

TEST_CASE("operating point at the nominal bias")
{
    PVParams pv;
    const OperatingPoint op = solve_operating_point(0.1492, 0.6, pv);
    CHECK(op.I_pv_o == doctest::Approx(0.14910302757208815).epsilon(1e-10));
    CHECK(op.V_d == doctest::Approx(0.28329575238696747).epsilon(1e-10));
    CHECK(op.V_pv_o == doctest::Approx(op.I_pv_o * 0.6).epsilon(1e-12));
    CHECK(op.I_d == doctest::Approx(4.031327743446571e-05).epsilon(1e-8));
    // DC power into the load
    CHECK(op.I_pv_o * op.I_pv_o * 0.6 ==
          doctest::Approx(0.013339027698697726).epsilon(1e-10));
}

TEST_CASE("diode current and conductance are consistent")
{
    PVParams pv;
    const double nvt = pv.n_s * pv.n * thermal_voltage(pv.T);
    const double v = 0.28329575238696747;
    CHECK(diode_current(v, pv) ==
          doctest::Approx(pv.I_0 * std::expm1(v / nvt)).epsilon(1e-14));
    // conductance equals d(I_d)/dV_d
    const double h = 1e-7;
    const double numeric = (diode_current(v + h, pv) - diode_current(v - h, pv)) / (2 * h);
    CHECK(diode_conductance(v, pv) == doctest::Approx(numeric).epsilon(1e-6));
    CHECK_THROWS_AS(diode_current(700.0 * nvt * 1.01, pv), OverflowError);
}

TEST_CASE("solver matches interval-halving oracle on randomized instances")
{
    PVParams pv;
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> iph_dist(0.0, 0.5);
    std::uniform_real_distribution<double> rl_dist(0.1, 100.0);
    for (int k = 0; k < 100; ++k) {
        const double i_ph = iph_dist(rng);
        const double r_l = rl_dist(rng);
        CAPTURE(i_ph);
        CAPTURE(r_l);
        const OperatingPoint op = solve_operating_point(i_ph, r_l, pv);
        const double oracle = bisect_output_current(i_ph, r_l, pv);
        CHECK(std::abs(op.I_pv_o - oracle) <= 1e-10);
    }
}

TEST_CASE("output current stays within physical bounds")
{
    PVParams pv;
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> iph_dist(0.0, 0.5);
    std::uniform_real_distribution<double> rl_dist(0.1, 100.0);
    for (int k = 0; k < 200; ++k) {
        const double i_ph = iph_dist(rng);
        const double r_l = rl_dist(rng);
        const OperatingPoint op = solve_operating_point(i_ph, r_l, pv);
        CAPTURE(i_ph);
        CAPTURE(r_l);
        CHECK(op.I_pv_o >= 0.0);
        CHECK(op.I_pv_o <= i_ph);
    }
}

TEST_CASE("output current is non-increasing in load resistance")
{
    PVParams pv;
    for (const double i_ph : {0.01, 0.1492, 0.37, 0.5}) {
        double prev = solve_operating_point(i_ph, 0.1, pv).I_pv_o;
        for (int k = 1; k <= 60; ++k) {
            const double r_l = 0.1 * std::pow(1000.0, k / 60.0);
            const double i = solve_operating_point(i_ph, r_l, pv).I_pv_o;
            CAPTURE(i_ph);
            CAPTURE(r_l);
            CHECK(i <= prev + 1e-15);
            prev = i;
        }
    }
}

TEST_CASE("open-circuit voltage oracle values")
{
    PVParams pv;
    CHECK(open_circuit_voltage(0.1492, pv) ==
          doctest::Approx(0.5614915628693902).epsilon(1e-10));
    CHECK(open_circuit_voltage(0.5, pv) ==
          doctest::Approx(0.6024598956271285).epsilon(1e-10));
    CHECK(open_circuit_voltage(1e-6, pv) ==
          doctest::Approx(0.004992548793176021).epsilon(1e-8));
    CHECK(open_circuit_voltage(0.0, pv) == 0.0);
}

TEST_CASE("current-voltage curve endpoints")
{
    PVParams pv;
    const double i_ph = 0.1492;
    const double v_oc = open_circuit_voltage(i_ph, pv);
    const auto curve = iv_curve(i_ph, pv, {0.0, 0.5 * v_oc, v_oc});
    REQUIRE(curve.size() == 3);
    // short circuit: diode barely on, shunt takes V_d = I R_s
    CHECK(curve[0].I_pv_o == doctest::Approx(i_ph).epsilon(1e-3));
    CHECK(curve[0].I_pv_o < i_ph);
    CHECK(curve[2].I_pv_o == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
    CHECK(curve[1].I_pv_o <= curve[0].I_pv_o);
    CHECK_THROWS_AS(output_current_at_voltage(i_ph, v_oc + 0.01, pv), DomainError);
}

TEST_CASE("transfer curve tracks the photocurrent")
{
    PVParams pv;
    const auto curve = output_vs_photocurrent({0.0, 0.05, 0.1, 0.15, 0.3, 0.5}, 0.6, pv);
    REQUIRE(curve.size() == 6);
    CHECK(curve[0].I_pv_o == 0.0);
    for (std::size_t k = 1; k < curve.size(); ++k) {
        CHECK(curve[k].I_pv_o < curve[k].I_ph);
        CHECK(curve[k].I_pv_o > curve[k - 1].I_pv_o);
    }
    // low bias keeps the diode off and the cell close to a current source;
    // past ~0.2 A the diode turns on and eats a growing share
    for (std::size_t k = 1; k <= 3; ++k)
        CHECK(curve[k].I_pv_o == doctest::Approx(curve[k].I_ph).epsilon(1e-3));
    CHECK(curve[5].I_pv_o < 0.345);
}

TEST_CASE("solver input validation")
{
    PVParams pv;
    CHECK_THROWS_AS(solve_operating_point(-0.1, 0.6, pv), DomainError);
    CHECK_THROWS_AS(solve_operating_point(0.1, 0.0, pv), DomainError);
    PVParams bad = pv;
    bad.I_0 = 0.0;
    CHECK_THROWS_AS(solve_operating_point(0.1, 0.6, bad), DomainError);
}
