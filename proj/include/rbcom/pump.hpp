#pragma once

#include <vector>

namespace rbcom {

// Laser-diode pump parameters.
struct PumpParams {
    double lambda_pump = 808e-9;  // emission wavelength [m]
    double eta_e = 0.9;           // electro-optic conversion efficiency
    double I_th = 0.5;            // threshold current [A]
};

// One modulation subcarrier of the drive current.
struct Subcarrier {
    double B = 0.0;    // amplitude [A]
    double f = 0.0;    // frequency [Hz]
    double phi = 0.0;  // phase [rad]
};

// Bias plus multi-tone modulation applied to the pump diode.
struct DriveSignal {
    double I_bias = 0.0;  // DC bias current [A]
    std::vector<Subcarrier> tones;
};

struct PumpPower {
    double watts = 0.0;
    bool below_threshold = false;
};

void validate(const PumpParams& p);

// Optical power emitted by the pump diode at drive current I_in [A].
// Linear above threshold, clamped to zero (with flag) below it.
PumpPower pump_power(double I_in, const PumpParams& p);

// Instantaneous drive current at time t [s].
double drive_current(double t, const DriveSignal& s);

// AC power (variance) of the multi-tone drive current, sum of B^2/2.
double signal_variance(const DriveSignal& s);

// True when the drive never swings below threshold (worst-case phases),
// i.e. the pump stays in its linear region for any tone alignment.
bool drive_stays_above_threshold(const DriveSignal& s, const PumpParams& p);

}  // namespace rbcom
