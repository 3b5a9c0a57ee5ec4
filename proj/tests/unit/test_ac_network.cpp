#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>

#include "rbcom/ac_network.hpp"
#include "rbcom/constants.hpp"
#include "rbcom/errors.hpp"

using namespace rbcom;

namespace {

SmallSignalModel preset_L120()
{
    SmallSignalModel m;  // defaults are the 120 nH / 300 ohm set
    return m;
}

SmallSignalModel preset_L10()
{
    SmallSignalModel m;
    m.L = 10e-9;
    m.R_C = 140.0;
    return m;
}

}  // namespace

TEST_CASE("closed form matches the nodal solve on both element sets")
{
    const auto grid = log_frequency_grid(1e3, 1e10, 2000);
    for (const SmallSignalModel& m : {preset_L120(), preset_L10()}) {
        double worst = 0.0;
        for (const double f : grid) {
            const double omega = 2.0 * constants::pi * f;
            const auto closed = signal_response(omega, m);
            const auto nodal = mna_transfer(omega, m, NoiseSource::photocurrent);
            const double rel = std::abs(closed - nodal) / std::abs(nodal);
            worst = std::max(worst, rel);
        }
        CAPTURE(m.L);
        CHECK(worst <= 1e-9);
    }
}

TEST_CASE("photocurrent, diode and shunt sources share one transfer")
{
    const SmallSignalModel m = preset_L120();
    for (const double f : {1e4, 1e6, 6e7, 1e9}) {
        const double omega = 2.0 * constants::pi * f;
        const NetworkTransfers t = mna_transfers(omega, m);
        // same injection node, so identical columns
        CHECK(t.photocurrent == t.r);
        CHECK(t.photocurrent == t.R_sh);
    }
}

TEST_CASE("transfer vanishes at both frequency extremes")
{
    for (const SmallSignalModel& m : {preset_L120(), preset_L10()}) {
        CHECK(signal_response(0.0, m) == std::complex<double>(0.0, 0.0));
        const double mid = std::abs(signal_response(2.0 * constants::pi * 6e7, m));
        const double lo = std::abs(signal_response(2.0 * constants::pi * 1e-2, m));
        const double hi = std::abs(signal_response(2.0 * constants::pi * 1e13, m));
        CHECK(lo < 1e-6 * mid);
        CHECK(hi < 1e-3 * mid);
    }
}

TEST_CASE("one passband for the tabulated element values")
{
    const auto grid = log_frequency_grid(1e2, 1e12, 4000);
    for (const SmallSignalModel& m : {preset_L120(), preset_L10()}) {
        const auto mag2 = magnitude_squared(sweep_signal_response(grid, m));
        // find the global peak, then require monotone-ish decay of the
        // half-power indicator: exactly one contiguous region above half
        const double peak = *std::max_element(mag2.begin(), mag2.end());
        const double half = 0.5 * peak;
        int regions = 0;
        bool inside = false;
        for (const double v : mag2) {
            const bool above = v >= half;
            if (above && !inside)
                ++regions;
            inside = above;
        }
        CAPTURE(m.L);
        CHECK(regions == 1);
    }
}

TEST_CASE("direct-current limits of the nodal transfers")
{
    const SmallSignalModel m = preset_L120();
    const NetworkTransfers t = mna_transfers(0.0, m);
    CHECK(t.photocurrent == std::complex<double>(0.0, 0.0));
    CHECK(t.r == std::complex<double>(0.0, 0.0));
    CHECK(t.R_sh == std::complex<double>(0.0, 0.0));
    CHECK(t.R_s == std::complex<double>(0.0, 0.0));
    CHECK(t.R_L == std::complex<double>(0.0, 0.0));
    // the communication load's own source sees only itself at DC
    CHECK(t.R_C == std::complex<double>(m.R_C, 0.0));

    // the charging branch looks like its load resistance at DC
    CHECK(branch_impedance_zlc(0.0, m) == std::complex<double>(m.R_L, 0.0));
}

TEST_CASE("half-power bandwidth on a synthetic band-pass shape")
{
    // |H|^2 = 1 / ((1 + (f_lo/f)^2)(1 + (f/f_hi)^2)), f_lo = 10 kHz, f_hi = 100 MHz
    const double f_lo = 1e4;
    const double f_hi = 1e8;
    const auto grid = log_frequency_grid(1e2, 1e12, 8000);
    std::vector<double> mag2(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double f = grid[i];
        mag2[i] = 1.0 / ((1.0 + (f_lo / f) * (f_lo / f)) *
                         (1.0 + (f / f_hi) * (f / f_hi)));
    }
    const double bw = bandwidth_3db(grid, mag2);
    // analytic crossings at 9998.0006 Hz and 100019998.0006 Hz
    CHECK(bw == doctest::Approx(100009999.99999997).epsilon(1e-4));
}

TEST_CASE("bandwidth truncates at the grid edge when the passband starts there")
{
    // pure low-pass: the lower crossing is off-grid to the left
    const double f_c = 1e6;
    const auto grid = log_frequency_grid(1e3, 1e9, 4000);
    std::vector<double> mag2(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        mag2[i] = 1.0 / (1.0 + (grid[i] / f_c) * (grid[i] / f_c));
    const double bw = bandwidth_3db(grid, mag2);
    CHECK(bw == doctest::Approx(f_c - 1e3).epsilon(1e-4));
}

TEST_CASE("parallel sweep equals pointwise evaluation")
{
    const SmallSignalModel m = preset_L10();
    const auto grid = log_frequency_grid(1e4, 1e9, 501);
    const SpectrumGrid swept = sweep_signal_response(grid, m);
    REQUIRE(swept.values.size() == grid.size());
    for (std::size_t i = 0; i < grid.size(); i += 50)
        CHECK(swept.values[i] == signal_response(2.0 * constants::pi * grid[i], m));
}

TEST_CASE("grid construction pins both endpoints")
{
    const auto g = log_frequency_grid(1e5, 3e9, 2000);
    REQUIRE(g.size() == 2000);
    CHECK(g.front() == 1e5);
    CHECK(g.back() == 3e9);
    for (std::size_t i = 1; i < g.size(); ++i)
        CHECK(g[i] > g[i - 1]);
    CHECK_THROWS_AS(log_frequency_grid(0.0, 1e6, 100), DomainError);
    CHECK_THROWS_AS(log_frequency_grid(1e6, 1e5, 100), DomainError);
    CHECK_THROWS_AS(log_frequency_grid(1e5, 1e6, 1), DomainError);
}

TEST_CASE("element validation rejects non-positive values")
{
    SmallSignalModel m;
    validate(m);
    SmallSignalModel bad = m;
    bad.C = 0.0;
    CHECK_THROWS_AS(validate(bad), DomainError);
    bad = m;
    bad.R_C = -1.0;
    CHECK_THROWS_AS(validate(bad), DomainError);
    bad = m;
    bad.L_0 = std::nan("");
    CHECK_THROWS_AS(validate(bad), DomainError);
    CHECK_THROWS_AS(signal_response(-1.0, m), DomainError);
}
