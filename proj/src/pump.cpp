#include "rbcom/pump.hpp"

#include <cmath>

#include "rbcom/constants.hpp"
#include "rbcom/errors.hpp"

namespace rbcom {

void validate(const PumpParams& p)
{
    if (!(p.lambda_pump > 0.0))
        throw DomainError("pump: lambda_pump must be positive");
    if (!(p.eta_e > 0.0) || p.eta_e > 1.0)
        throw DomainError("pump: eta_e must be in (0, 1]");
    if (p.I_th < 0.0)
        throw DomainError("pump: I_th must be non-negative");
}

PumpPower pump_power(double I_in, const PumpParams& p)
{
    validate(p);
    if (I_in < 0.0 || !std::isfinite(I_in))
        throw DomainError("pump: drive current must be finite and non-negative");
    if (I_in <= p.I_th)
        return {0.0, true};
    const double volts = constants::photon_volts(p.lambda_pump);
    return {volts * p.eta_e * (I_in - p.I_th), false};
}

double drive_current(double t, const DriveSignal& s)
{
    double i = s.I_bias;
    for (const auto& tone : s.tones)
        i += tone.B * std::cos(2.0 * constants::pi * tone.f * t + tone.phi);
    return i;
}

double signal_variance(const DriveSignal& s)
{
    double var = 0.0;
    for (const auto& tone : s.tones)
        var += 0.5 * tone.B * tone.B;
    return var;
}

bool drive_stays_above_threshold(const DriveSignal& s, const PumpParams& p)
{
    double swing = 0.0;
    for (const auto& tone : s.tones)
        swing += std::abs(tone.B);
    return s.I_bias - swing >= p.I_th;
}

}  // namespace rbcom
