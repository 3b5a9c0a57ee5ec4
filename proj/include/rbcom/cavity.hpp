#pragma once

#include <optional>

#include "rbcom/pump.hpp"

namespace rbcom {

// Resonant-cavity transfer from pump power to laser power at the receiver.
struct CavityParams {
    double eta_s = 0.054;   // fixed cavity/combining efficiency
    double R = 0.5;         // output coupler reflectivity, 0 < R < 1
    double p = 1.0;         // intracavity pass factor
    double a = 1.5e-3;      // aperture radius [m]
    double lambda_beam = 1064e-9;  // resonant beam wavelength [m]
    double C_offset = 0.0;  // constant power offset [W]
    // When set, replaces the distance-dependent gain f(d); the default run
    // path collapses eta_s * eta_d to a fixed product this way.
    std::optional<double> eta_d_override = 1.0;
};

// End-to-end linear gain of the drive-current -> photocurrent chain:
// i_ph = gamma * (I_in - I_th) + beta.
struct LinearGain {
    double gamma = 0.0;  // [A/A]
    double beta = 0.0;   // [A]
};

void validate(const CavityParams& cav);

// Distance-dependent cavity gain f(d); strictly decreasing in d, with
// finite positive limits at d -> 0+ and d -> infinity.
double distance_gain(double d, const CavityParams& cav);

// Laser power delivered to the receiver for a given pump power and distance.
double laser_power(double P_pump, double d, const CavityParams& cav);

// Effective distance gain: the override when set, else f(d).
double effective_eta_d(double d, const CavityParams& cav);

// Collapse the pump -> cavity -> photodetection chain into gamma and beta
// for responsivity rho [A/W] at distance d.
LinearGain end_to_end_gain(const PumpParams& pump, const CavityParams& cav,
                           double rho, double d);

}  // namespace rbcom
