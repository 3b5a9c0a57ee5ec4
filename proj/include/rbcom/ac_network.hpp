#pragma once

#include <complex>
#include <vector>

namespace rbcom {

// Small-signal receiver network: the photodiode cell (r, C, R_sh) drives a
// series R_s + L into two parallel branches, an energy-harvesting choke
// (L_0 + R_L) and an AC-coupled communication tap (C_0 + R_C). The output
// is the voltage across R_C.
struct SmallSignalModel {
    double r = 839.5;     // diode dynamic resistance [ohm]
    double C = 26.6e-9;   // junction capacitance [F]
    double R_sh = 5000.0; // shunt resistance [ohm]
    double R_s = 1.3;     // series resistance [ohm]
    double L = 120e-9;    // wire inductance [H]
    double L_0 = 40e-3;   // harvesting choke [H]
    double C_0 = 6e-12;   // coupling capacitance [F]
    double R_C = 300.0;   // communication load [ohm]
    double R_L = 0.6;     // harvesting load [ohm]
};

// Current-noise injection sites of the network.
enum class NoiseSource { photocurrent, r, R_sh, R_s, R_L, R_C };

inline constexpr NoiseSource kThermalSources[] = {
    NoiseSource::R_C, NoiseSource::R_sh, NoiseSource::R_L,
    NoiseSource::r, NoiseSource::R_s};

// Transfers of every injection site at one frequency [V/A].
struct NetworkTransfers {
    std::complex<double> photocurrent;
    std::complex<double> r;
    std::complex<double> R_sh;
    std::complex<double> R_s;
    std::complex<double> R_L;
    std::complex<double> R_C;
};

struct SpectrumGrid {
    std::vector<double> f_hz;                  // strictly increasing [Hz]
    std::vector<std::complex<double>> values;  // transfer samples
};

void validate(const SmallSignalModel& m);

// Impedance of the paralleled harvesting and communication branches [ohm].
std::complex<double> branch_impedance_zlc(double omega, const SmallSignalModel& m);

// Closed-form transimpedance from injected photocurrent to the voltage
// across R_C [V/A]. Returns 0 at omega == 0 (the coupling cap blocks DC).
std::complex<double> signal_response(double omega, const SmallSignalModel& m);

// Independent nodal-analysis solution of the same network: stamps the five
// internal nodes as complex admittance equations and solves them directly
// with partially pivoted elimination. Unit current is injected across the
// terminals of the tagged element (in parallel with the photodiode for
// photocurrent/r/R_sh); the result is the voltage across R_C [V/A].
std::complex<double> mna_transfer(double omega, const SmallSignalModel& m,
                                  NoiseSource source);

// All six transfers at once (one factorization, six back-substitutions).
NetworkTransfers mna_transfers(double omega, const SmallSignalModel& m);

// Logarithmically spaced frequency grid, endpoints included.
std::vector<double> log_frequency_grid(double f_min, double f_max, int points);

// Default analysis grid: 2000 points from 100 kHz to 3 GHz.
std::vector<double> default_frequency_grid();

// Closed-form signal response sampled over a frequency grid (parallel map).
SpectrumGrid sweep_signal_response(const std::vector<double>& f_hz,
                                   const SmallSignalModel& m);

// |H|^2 of a sampled transfer.
std::vector<double> magnitude_squared(const SpectrumGrid& g);

// Width of the contiguous half-power region around the global maximum of
// |H|^2; crossings are interpolated between grid points (linear in log f).
// A region touching a grid edge is truncated there. Throws AnalysisError
// when the grid holds no passband.
double bandwidth_3db(const std::vector<double>& f_hz,
                     const std::vector<double>& mag2);

}  // namespace rbcom
