#pragma once

#include <optional>

#include "rbcom/pv_dc.hpp"

namespace rbcom {

enum class ACCellMode {
    calibration,  // use the measured r and C regardless of bias
    physical,     // evaluate r, C_T and C_d at the solved bias point
};

// Small-signal junction parameters of the PV cell.
struct ACCellParams {
    ACCellMode mode = ACCellMode::calibration;
    double epsilon = 11.7;           // semiconductor relative permittivity
    double N_B = 1e21;               // base doping density [m^-3]
    double V_0 = 0.7;                // junction built-in potential [V]
    std::optional<double> tau;       // carrier lifetime [s]; fitted when absent
    double calibration_r = 839.5;    // measured dynamic resistance [ohm]
    double calibration_C = 26.6e-9;  // measured junction capacitance [F]
};

struct SmallSignalCell {
    double r = 0.0;  // dynamic resistance [ohm]
    double C = 0.0;  // total junction capacitance [F]
};

void validate(const ACCellParams& ac);

// Dynamic (incremental) resistance of the diode at bias V_d [ohm].
double dynamic_resistance(double V_d, const PVParams& pv);

// Depletion-layer (transition) capacitance at bias V_d [F].
double transition_capacitance(double V_d, const PVParams& pv, const ACCellParams& ac);

// Charge-storage (diffusion) capacitance at bias V_d for lifetime tau [F].
double diffusion_capacitance(double V_d, const PVParams& pv, double tau);

// Lifetime tau that makes C_T + C_d equal C_target at the anchor bias.
double fit_tau(double C_target, double V_d_anchor, const PVParams& pv,
               const ACCellParams& ac);

// Carrier lifetime used by physical mode: the explicit value when present,
// else fitted so the total capacitance matches the calibration value at the
// anchor bias.
double resolved_tau(const PVParams& pv, const ACCellParams& ac,
                    double V_d_anchor = 0.2833);

// Small-signal cell elements at the solved operating point.
SmallSignalCell small_signal_at(const OperatingPoint& op, const PVParams& pv,
                                const ACCellParams& ac);

// Quasi-static validity of the diffusion-capacitance model: requires
// omega * tau well below one; returns false when omega*tau > 0.1.
bool diffusion_model_valid(double omega_max, double tau);

}  // namespace rbcom
