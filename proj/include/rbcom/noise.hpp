#pragma once

#include "rbcom/ac_network.hpp"

namespace rbcom {

// Ambient background light reaching the detector.
struct BackgroundParams {
    double eta_rx = 0.5;    // receiver optical efficiency
    double H_bkg = 0.2;     // background spectral radiance [W m^-2 nm^-1 sr^-1]
    double B_if_nm = 20.0;  // optical filter bandwidth [nm]
    double A_rx = 1e-4;     // receiving aperture area [m^2]
    double Phi_rx = 0.8417872810944574;  // field-of-view solid angle [sr]
    double Gamma = 0.05;    // residual transmission of the rejection filter
};

// Johnson-noise bookkeeping convention. Resistor noise is injected as a
// Norton current source of one-sided PSD 4kT/R [A^2/Hz] and shaped by the
// V/A network transfers; the alternative keeps a legacy 4kT*R form for
// comparison with older result sets.
enum class ThermalConvention { norton, legacy_4ktr };

// Per-source thermal noise at the output node [V^2/Hz].
struct ThermalBreakdown {
    double total = 0.0;
    double R_C = 0.0;
    double R_sh = 0.0;
    double R_L = 0.0;
    double r = 0.0;
    double R_s = 0.0;
};

void validate(const BackgroundParams& b);

// Background optical power collected by the receiver [W].
double background_power(const BackgroundParams& b);

// DC photocurrent caused by the background light [A].
double background_photocurrent(const BackgroundParams& b, double rho);

// One-sided shot-noise current PSD at the photodiode [A^2/Hz].
double shot_psd_input(double P_laser, double P_bkg, double rho);

// Shot noise PSD at the output node: |H_ph|^2 times the input PSD [V^2/Hz].
double shot_psd_output(double omega, const SmallSignalModel& m, double psd_in);

// Thermal noise PSD at the output node, per resistor and total [V^2/Hz].
ThermalBreakdown thermal_psd_output(double omega, const SmallSignalModel& m,
                                    double T,
                                    ThermalConvention conv = ThermalConvention::norton);

}  // namespace rbcom
