#include <doctest.h>

#include <cmath>

#include "rbcom/constants.hpp"
#include "rbcom/errors.hpp"
#include "rbcom/noise.hpp"

using namespace rbcom;

TEST_CASE("background power and photocurrent at defaults")
{
    BackgroundParams b;
    CHECK(background_power(b) == doctest::Approx(8.417872810944574e-06).epsilon(1e-12));
    CHECK(background_photocurrent(b, 0.746) ==
          doctest::Approx(6.279733116964653e-06).epsilon(1e-12));
}

TEST_CASE("shot-noise input density at the nominal operating point")
{
    BackgroundParams b;
    const double psd = shot_psd_input(0.2, background_power(b), 0.746);
    CHECK(psd == doctest::Approx(4.781096300689355e-20).epsilon(1e-12));
    // the background contributes well under one part in a thousand
    CHECK(shot_psd_input(0.2, 0.0, 0.746) == doctest::Approx(psd).epsilon(1e-4));
}

TEST_CASE("shot noise at the output follows the signal transfer")
{
    SmallSignalModel m;
    const double psd_in = 4.781096300689355e-20;
    for (const double f : {1e5, 1e6, 6e7, 1e9}) {
        const double omega = 2.0 * constants::pi * f;
        const double expected = std::norm(signal_response(omega, m)) * psd_in;
        CHECK(shot_psd_output(omega, m, psd_in) ==
              doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("all noise densities are non-negative across the band")
{
    SmallSignalModel m;
    const auto grid = log_frequency_grid(1e3, 1e10, 400);
    for (const double f : grid) {
        const double omega = 2.0 * constants::pi * f;
        CHECK(shot_psd_output(omega, m, 4.78e-20) >= 0.0);
        const ThermalBreakdown th = thermal_psd_output(omega, m, 298.15);
        CHECK(th.total >= 0.0);
        CHECK(th.R_C >= 0.0);
        CHECK(th.R_sh >= 0.0);
        CHECK(th.R_L >= 0.0);
        CHECK(th.r >= 0.0);
        CHECK(th.R_s >= 0.0);
        CHECK(th.total == doctest::Approx(th.R_C + th.R_sh + th.R_L + th.r + th.R_s)
                              .epsilon(1e-12));
    }
}

TEST_CASE("communication load and series resistance dominate the thermal floor")
{
    SmallSignalModel m;
    const double omega = 2.0 * constants::pi * 6e7;  // mid-band
    const ThermalBreakdown th = thermal_psd_output(omega, m, 298.15);
    CHECK((th.R_C + th.R_s) / th.total > 0.99);
}

TEST_CASE("legacy density rescales each source by its resistance squared")
{
    SmallSignalModel m;
    const double omega = 2.0 * constants::pi * 1e7;
    const ThermalBreakdown norton = thermal_psd_output(omega, m, 298.15);
    const ThermalBreakdown legacy =
        thermal_psd_output(omega, m, 298.15, ThermalConvention::legacy_4ktr);
    CHECK(legacy.R_C == doctest::Approx(norton.R_C * m.R_C * m.R_C).epsilon(1e-12));
    CHECK(legacy.R_sh == doctest::Approx(norton.R_sh * m.R_sh * m.R_sh).epsilon(1e-12));
    CHECK(legacy.r == doctest::Approx(norton.r * m.r * m.r).epsilon(1e-12));
}

TEST_CASE("background parameter validation")
{
    BackgroundParams b;
    validate(b);
    BackgroundParams bad = b;
    bad.Gamma = -0.1;
    CHECK_THROWS_AS(validate(bad), DomainError);
    bad = b;
    bad.A_rx = -1e-4;
    CHECK_THROWS_AS(validate(bad), DomainError);
    // zero fields are allowed: they switch the background term off
    bad = b;
    bad.Gamma = 0.0;
    CHECK(background_power(bad) == 0.0);
    CHECK_THROWS_AS(shot_psd_input(-0.1, 0.0, 0.746), DomainError);
}
