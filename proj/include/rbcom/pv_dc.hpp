#pragma once

#include <vector>

namespace rbcom {

// Photovoltaic cell, single-diode DC model.
struct PVParams {
    double I_0 = 9.381e-9;  // diode reverse saturation current [A]
    double n = 1.318;       // diode ideality factor
    double n_s = 1.0;       // series-connected junction count
    double T = 298.15;      // junction temperature [K]
    double R_s = 1.3;       // series resistance [ohm]
    double R_sh = 5000.0;   // shunt resistance [ohm]
    double rho = 0.746;     // responsivity [A/W]
    double A_pv = 1e-4;     // cell area [m^2]
};

// Solved DC bias of the illuminated cell loaded by a resistor.
struct OperatingPoint {
    double I_ph = 0.0;    // photocurrent drive [A]
    double I_pv_o = 0.0;  // output (load) current [A]
    double V_pv_o = 0.0;  // output voltage [V]
    double V_d = 0.0;     // internal diode voltage [V]
    double I_d = 0.0;     // diode current [A]
    int iterations = 0;
};

struct IVPoint {
    double V_pv_o = 0.0;
    double I_pv_o = 0.0;
};

struct TransferPoint {
    double I_ph = 0.0;
    double I_pv_o = 0.0;
};

void validate(const PVParams& pv);

// Thermal voltage kT/q [V].
double thermal_voltage(double T);

// Photocurrent produced by incident optical power [A].
double photocurrent(double P_optical, double rho);

// Diode current at internal voltage V_d. Throws OverflowError when the
// exponent exceeds 700 (exp would leave double range).
double diode_current(double V_d, const PVParams& pv);

// d(I_d)/d(V_d), the diode small-signal conductance at V_d [S].
double diode_conductance(double V_d, const PVParams& pv);

// Solve the Kirchhoff system of the loaded cell for photocurrent I_ph and
// load R_L. Newton iteration with an analytic derivative, safeguarded by
// bisection on [0, I_ph]; residual tolerance 1e-12 * max(I_ph, 1 uA).
OperatingPoint solve_operating_point(double I_ph, double R_L, const PVParams& pv);

// Output current at a prescribed terminal voltage (voltage-source load).
double output_current_at_voltage(double I_ph, double V_pv_o, const PVParams& pv);

// Terminal voltage at which the output current reaches zero.
double open_circuit_voltage(double I_ph, const PVParams& pv);

// I-V curve of the illuminated cell over a terminal-voltage grid.
std::vector<IVPoint> iv_curve(double I_ph, const PVParams& pv,
                              const std::vector<double>& v_grid);

// Output current versus photocurrent at a fixed resistive load.
std::vector<TransferPoint> output_vs_photocurrent(const std::vector<double>& iph_grid,
                                                  double R_L, const PVParams& pv);

}  // namespace rbcom
