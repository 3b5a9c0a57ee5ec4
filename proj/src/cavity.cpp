#include "rbcom/cavity.hpp"

#include <cmath>

#include "rbcom/constants.hpp"
#include "rbcom/errors.hpp"

namespace rbcom {

void validate(const CavityParams& cav)
{
    if (!(cav.eta_s > 0.0) || cav.eta_s > 1.0)
        throw DomainError("cavity: eta_s must be in (0, 1]");
    if (!(cav.R > 0.0) || !(cav.R < 1.0))
        throw DomainError("cavity: R must be in (0, 1)");
    if (!(cav.p > 0.0))
        throw DomainError("cavity: p must be positive");
    if (!(cav.a > 0.0))
        throw DomainError("cavity: a must be positive");
    if (!(cav.lambda_beam > 0.0))
        throw DomainError("cavity: lambda_beam must be positive");
    if (cav.eta_d_override && !(*cav.eta_d_override > 0.0))
        throw DomainError("cavity: eta_d_override must be positive when set");
}

double distance_gain(double d, const CavityParams& cav)
{
    validate(cav);
    if (!(d > 0.0))
        throw DomainError("cavity: distance must be positive");
    const double diffraction =
        std::exp(-2.0 * constants::pi * cav.a * cav.a / (cav.lambda_beam * d));
    const double denom = (1.0 + cav.R) * diffraction - (1.0 + cav.R) * std::log(cav.R);
    return 2.0 * (1.0 - cav.R) * cav.p / denom;
}

double laser_power(double P_pump, double d, const CavityParams& cav)
{
    if (P_pump < 0.0)
        throw DomainError("cavity: pump power must be non-negative");
    return cav.eta_s * P_pump * effective_eta_d(d, cav) + cav.C_offset;
}

double effective_eta_d(double d, const CavityParams& cav)
{
    validate(cav);
    return cav.eta_d_override ? *cav.eta_d_override : distance_gain(d, cav);
}

LinearGain end_to_end_gain(const PumpParams& pump, const CavityParams& cav,
                           double rho, double d)
{
    validate(pump);
    if (!(rho > 0.0))
        throw DomainError("cavity: responsivity must be positive");
    const double eta_d = effective_eta_d(d, cav);
    LinearGain g;
    g.gamma = rho * cav.eta_s * eta_d * pump.eta_e *
              constants::photon_volts(pump.lambda_pump);
    g.beta = rho * cav.C_offset;
    return g;
}

}  // namespace rbcom
