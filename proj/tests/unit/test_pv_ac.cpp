#include <doctest.h>

#include <cmath>

#include "rbcom/errors.hpp"
#include "rbcom/pv_ac.hpp"
#include "rbcom/pv_dc.hpp"

using namespace rbcom;

TEST_CASE("dynamic resistance is the reciprocal diode slope")
{
    PVParams pv;
    const double v = 0.28329575238696747;
    CHECK(dynamic_resistance(v, pv) == doctest::Approx(839.7962980696474).epsilon(1e-12));
    CHECK(dynamic_resistance(v, pv) * diode_conductance(v, pv) ==
          doctest::Approx(1.0).epsilon(1e-12));
    // falls steeply with bias
    CHECK(dynamic_resistance(0.1, pv) > dynamic_resistance(0.3, pv));
}

TEST_CASE("transition capacitance at the anchor bias")
{
    PVParams pv;
    ACCellParams ac;
    CHECK(transition_capacitance(0.2833, pv, ac) ==
          doctest::Approx(1.13383959695254e-08).epsilon(1e-12));
    // grows toward the built-in potential, diverges at V_0
    CHECK(transition_capacitance(0.5, pv, ac) > transition_capacitance(0.2, pv, ac));
    CHECK_THROWS_AS(transition_capacitance(0.7, pv, ac), DomainError);
}

TEST_CASE("lifetime fit against the calibrated total capacitance")
{
    PVParams pv;
    ACCellParams ac;
    const double tau = fit_tau(26.6e-9, 0.2833, pv, ac);
    CHECK(tau == doctest::Approx(2.563006200339477e-05).epsilon(1e-12));
    CHECK(diffusion_capacitance(0.2833, pv, tau) ==
          doctest::Approx(1.5261604030474602e-08).epsilon(1e-12));
    // the two capacitances together recover the calibration value
    CHECK(transition_capacitance(0.2833, pv, ac) +
              diffusion_capacitance(0.2833, pv, tau) ==
          doctest::Approx(26.6e-9).epsilon(1e-12));
}

TEST_CASE("lifetime fit fails when depletion capacitance already exceeds the target")
{
    PVParams pv;
    ACCellParams ac;
    ac.N_B = 1e22;  // transition term alone is ~35.9 nF at the anchor
    CHECK_THROWS_AS(fit_tau(26.6e-9, 0.2833, pv, ac), DomainError);
}

TEST_CASE("resistance-capacitance product identity")
{
    PVParams pv;
    const double tau = 2.563006200339477e-05;
    for (const double v : {0.05, 0.15, 0.2833, 0.35, 0.45}) {
        CAPTURE(v);
        CHECK(dynamic_resistance(v, pv) * diffusion_capacitance(v, pv, tau) ==
              doctest::Approx(0.5 * tau).epsilon(1e-12));
    }
}

TEST_CASE("calibration mode pins the cell elements")
{
    PVParams pv;
    ACCellParams ac;  // calibration is the default
    const OperatingPoint op = solve_operating_point(0.1492, 0.6, pv);
    const SmallSignalCell cell = small_signal_at(op, pv, ac);
    CHECK(cell.r == 839.5);
    CHECK(cell.C == 26.6e-9);
}

TEST_CASE("physical mode evaluates the formulas at the solved bias")
{
    PVParams pv;
    ACCellParams ac;
    ac.mode = ACCellMode::physical;
    const OperatingPoint op = solve_operating_point(0.1492, 0.6, pv);
    const SmallSignalCell cell = small_signal_at(op, pv, ac);
    CHECK(cell.r == doctest::Approx(839.7962980696474).epsilon(1e-10));
    CHECK(cell.C == doctest::Approx(1.1338367075349938e-08 + 1.5259689797578256e-08)
                        .epsilon(1e-10));
    // within a fraction of a percent of the calibrated pair
    CHECK(cell.r == doctest::Approx(839.5).epsilon(0.005));
    CHECK(cell.C == doctest::Approx(26.6e-9).epsilon(0.005));
}

TEST_CASE("explicit lifetime bypasses the fit")
{
    PVParams pv;
    ACCellParams ac;
    ac.tau = 1e-5;
    CHECK(resolved_tau(pv, ac) == 1e-5);
    ac.tau.reset();
    CHECK(resolved_tau(pv, ac) == doctest::Approx(2.563006200339477e-05).epsilon(1e-12));
}

TEST_CASE("quasi-static validity marker")
{
    const double tau = 2.563e-5;
    CHECK(diffusion_model_valid(0.1 / tau, tau));
    CHECK_FALSE(diffusion_model_valid(0.11 / tau, tau));
}
