#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "rbcom/cavity.hpp"
#include "rbcom/noise.hpp"
#include "rbcom/pump.hpp"
#include "rbcom/pv_ac.hpp"
#include "rbcom/pv_dc.hpp"

namespace rbcom {

// OFDM-style frequency plan: N adjacent subchannels of width w starting at
// band_start; subchannel i is centered at band_start + (i + 1/2) * w.
struct OFDMConfig {
    int N = 120;
    double w = 1e6;          // subchannel width [Hz]
    double sigma_s2 = 0.01;  // drive-current AC variance [A^2]
    double band_start = 0.0; // [Hz]
};

// Discrete network elements around the PV cell.
struct NetworkElements {
    double L = 120e-9;   // wire inductance [H]
    double L_0 = 40e-3;  // harvesting choke [H]
    double C_0 = 6e-12;  // coupling capacitance [F]
    double R_C = 300.0;  // communication load [ohm]
    double R_L = 0.6;    // harvesting load [ohm]
};

// Complete transmitter-to-receiver description of one link.
struct LinkSystem {
    PumpParams pump;
    CavityParams cavity;
    PVParams pv;
    ACCellParams ac_cell;
    NetworkElements network;
    BackgroundParams background;
    OFDMConfig ofdm;
    ThermalConvention thermal = ThermalConvention::norton;
    double distance = 1.0;  // [m]; enters only through distance-resolved gain
};

// DC bias and derived small-signal state at one received laser power.
struct LinkOperatingState {
    double P_laser = 0.0;   // received laser power [W]
    OperatingPoint op;      // solved DC bias
    SmallSignalCell cell;   // r and C at that bias
    SmallSignalModel model; // full AC network
    double gamma = 0.0;     // drive-current -> photocurrent gain
    double beta = 0.0;      // photocurrent offset [A]
    double P_chg = 0.0;     // DC power delivered to R_L [W]
    double shot_in = 0.0;   // shot-noise current PSD [A^2/Hz]
};

// Signal transfer and output noise PSDs sampled over a frequency grid.
struct LinkSpectra {
    std::vector<double> f_hz;
    std::vector<std::complex<double>> H;  // photocurrent -> output [V/A]
    std::vector<double> mag2;             // |H|^2
    std::vector<double> shot_v2hz;
    std::vector<double> thermal_v2hz;     // total over the five resistors
    std::vector<double> thermal_R_C;
    std::vector<double> thermal_R_sh;
    std::vector<double> thermal_R_L;
    std::vector<double> thermal_r;
    std::vector<double> thermal_R_s;
};

struct PowerSweepPoint {
    double P_laser = 0.0;
    double P_chg = 0.0;
    double capacity_bps = 0.0;
};

// Monte-Carlo cross-check of the analytic SNR chain.
struct MonteCarloParams {
    std::uint64_t seed = 1;
    std::size_t samples = std::size_t(1) << 20;
    double oversample = 4.0;  // sample rate = oversample * band edge
    int segments = 64;        // Welch segments (non-overlapping, Hann)
    bool zero_noise = false;  // disable all noise injection
};

struct MonteCarloResult {
    double fs = 0.0;  // sample rate [Hz]
    std::vector<double> snr;           // per subchannel; +inf when noise-free
    std::vector<double> signal_power;  // output-band signal power [V^2]
    std::vector<double> noise_power;   // output-band noise power [V^2]
};

void validate(const OFDMConfig& ofdm);

std::vector<double> subchannel_centers(const OFDMConfig& ofdm);

// Solve the DC bias at a received laser power and assemble the AC network
// around it (calibration or physical small-signal mode per ac_cell).
LinkOperatingState assemble_at_power(const LinkSystem& sys, double P_laser);

// Sample the signal transfer and all output noise PSDs over a grid.
LinkSpectra link_spectra(const LinkOperatingState& st, const LinkSystem& sys,
                         const std::vector<double>& f_grid);

// Per-subchannel SNR: tone power gamma^2 (sigma_s2/N) |H(f_i)|^2 against
// noise (shot + thermal) integrated over one subchannel width. Spectrum
// values are interpolated at the centers, linearly in log-frequency.
std::vector<double> subchannel_snr(const LinkSpectra& sp, const OFDMConfig& ofdm,
                                   double gamma);

// Shannon capacity summed over subchannels [bit/s].
double total_capacity(const std::vector<double>& snr, double w);

// Charging power and capacity across a received-power grid.
std::vector<PowerSweepPoint> power_capacity_sweep(const LinkSystem& sys,
                                                  const std::vector<double>& p_grid,
                                                  const std::vector<double>& f_grid);

// Time-domain simulation: synthesize the multi-tone drive, filter it and
// white shot/thermal noise through the network transfers, then estimate
// per-subchannel SNR with Welch periodograms. Deterministic per seed.
MonteCarloResult monte_carlo_snr(const LinkOperatingState& st, const LinkSystem& sys,
                                 const MonteCarloParams& mc);

}  // namespace rbcom
