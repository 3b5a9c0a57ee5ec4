#include "rbcom/noise.hpp"

#include <cmath>

#include "rbcom/constants.hpp"
#include "rbcom/errors.hpp"

namespace rbcom {

void validate(const BackgroundParams& b)
{
    const double fields[] = {b.eta_rx, b.H_bkg, b.B_if_nm, b.A_rx, b.Phi_rx, b.Gamma};
    for (const double v : fields)
        if (v < 0.0 || !std::isfinite(v))
            throw DomainError("noise: background parameters must be non-negative");
}

double background_power(const BackgroundParams& b)
{
    validate(b);
    return b.eta_rx * b.H_bkg * b.B_if_nm * b.A_rx * b.Phi_rx * b.Gamma;
}

double background_photocurrent(const BackgroundParams& b, double rho)
{
    if (!(rho > 0.0))
        throw DomainError("noise: rho must be positive");
    return rho * background_power(b);
}

double shot_psd_input(double P_laser, double P_bkg, double rho)
{
    if (P_laser < 0.0 || P_bkg < 0.0)
        throw DomainError("noise: optical powers must be non-negative");
    if (!(rho > 0.0))
        throw DomainError("noise: rho must be positive");
    return 2.0 * constants::q * rho * (P_laser + P_bkg);
}

double shot_psd_output(double omega, const SmallSignalModel& m, double psd_in)
{
    if (psd_in < 0.0)
        throw DomainError("noise: input PSD must be non-negative");
    return std::norm(signal_response(omega, m)) * psd_in;
}

ThermalBreakdown thermal_psd_output(double omega, const SmallSignalModel& m,
                                    double T, ThermalConvention conv)
{
    if (!(T >= 0.0))
        throw DomainError("noise: temperature must be non-negative");
    const NetworkTransfers t = mna_transfers(omega, m);
    const double four_kt = 4.0 * constants::k_B * T;
    const auto psd = [&](const std::complex<double>& h, double resistance) {
        const double src = conv == ThermalConvention::norton
                               ? four_kt / resistance
                               : four_kt * resistance;
        return std::norm(h) * src;
    };

    ThermalBreakdown out;
    out.R_C = psd(t.R_C, m.R_C);
    out.R_sh = psd(t.R_sh, m.R_sh);
    out.R_L = psd(t.R_L, m.R_L);
    out.r = psd(t.r, m.r);
    out.R_s = psd(t.R_s, m.R_s);
    out.total = out.R_C + out.R_sh + out.R_L + out.r + out.R_s;
    return out;
}

}  // namespace rbcom
