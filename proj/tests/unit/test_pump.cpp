#include <doctest.h>

#include <cmath>

#include "rbcom/constants.hpp"
#include "rbcom/errors.hpp"
#include "rbcom/pump.hpp"

using namespace rbcom;

TEST_CASE("photon energy per unit charge at 808 nm")
{
    CHECK(constants::photon_volts(808e-9) ==
          doctest::Approx(1.5344579014009937).epsilon(1e-12));
}

TEST_CASE("pump power is linear above threshold")
{
    PumpParams p;  // 808 nm, eta_e = 0.9, I_th = 0.5 A
    const PumpPower out = pump_power(1.5, p);
    CHECK_FALSE(out.below_threshold);
    // 1.534 V * 0.9 * 1.0 A
    CHECK(out.watts == doctest::Approx(1.3810121112608945).epsilon(1e-12));

    // doubling the overdrive doubles the power
    const PumpPower out2 = pump_power(2.5, p);
    CHECK(out2.watts == doctest::Approx(2.0 * out.watts).epsilon(1e-12));
}

TEST_CASE("pump clamps to zero at and below threshold")
{
    PumpParams p;
    CHECK(pump_power(0.5, p).watts == 0.0);
    CHECK(pump_power(0.5, p).below_threshold);
    CHECK(pump_power(0.2, p).watts == 0.0);
    CHECK(pump_power(0.0, p).watts == 0.0);
}

TEST_CASE("pump rejects invalid drive and parameters")
{
    PumpParams p;
    CHECK_THROWS_AS(pump_power(-0.1, p), DomainError);
    CHECK_THROWS_AS(pump_power(std::nan(""), p), DomainError);

    PumpParams bad = p;
    bad.lambda_pump = 0.0;
    CHECK_THROWS_AS(validate(bad), DomainError);
    bad = p;
    bad.eta_e = 1.5;
    CHECK_THROWS_AS(validate(bad), DomainError);
    bad = p;
    bad.I_th = -1.0;
    CHECK_THROWS_AS(validate(bad), DomainError);
}

TEST_CASE("multi-tone drive evaluates bias plus cosines")
{
    DriveSignal s;
    s.I_bias = 2.0;
    s.tones = {{0.5, 1e6, 0.0}, {0.25, 2e6, constants::pi / 2.0}};
    CHECK(drive_current(0.0, s) == doctest::Approx(2.5 + 0.25 * std::cos(constants::pi / 2.0)));
    // half a period of the first tone flips its sign
    const double t = 0.5 / 1e6;
    CHECK(drive_current(t, s) ==
          doctest::Approx(2.0 - 0.5 + 0.25 * std::cos(2.0 * constants::pi * 2e6 * t +
                                                      constants::pi / 2.0)));
}

TEST_CASE("drive variance sums tone powers")
{
    DriveSignal s;
    s.I_bias = 3.0;
    s.tones = {{0.1, 1e6, 0.0}, {0.2, 2e6, 1.0}, {0.3, 3e6, 2.0}};
    CHECK(signal_variance(s) ==
          doctest::Approx(0.5 * (0.01 + 0.04 + 0.09)).epsilon(1e-12));
}

TEST_CASE("worst-case threshold headroom check")
{
    PumpParams p;  // I_th = 0.5
    DriveSignal s;
    s.I_bias = 1.0;
    s.tones = {{0.25, 1e6, 0.0}, {0.25, 2e6, 0.0}};
    CHECK(drive_stays_above_threshold(s, p));  // 1.0 - 0.5 == 0.5 >= 0.5
    s.tones.push_back({0.01, 3e6, 0.0});
    CHECK_FALSE(drive_stays_above_threshold(s, p));
}
