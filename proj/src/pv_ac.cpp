#include "rbcom/pv_ac.hpp"

#include <cmath>

#include "rbcom/constants.hpp"
#include "rbcom/errors.hpp"

namespace rbcom {

void validate(const ACCellParams& ac)
{
    if (!(ac.epsilon > 0.0))
        throw DomainError("pv-ac: epsilon must be positive");
    if (!(ac.N_B > 0.0))
        throw DomainError("pv-ac: N_B must be positive");
    if (!(ac.V_0 > 0.0))
        throw DomainError("pv-ac: V_0 must be positive");
    if (ac.tau && !(*ac.tau > 0.0))
        throw DomainError("pv-ac: tau must be positive when set");
    if (!(ac.calibration_r > 0.0) || !(ac.calibration_C > 0.0))
        throw DomainError("pv-ac: calibration r and C must be positive");
}

double dynamic_resistance(double V_d, const PVParams& pv)
{
    return 1.0 / diode_conductance(V_d, pv);
}

double transition_capacitance(double V_d, const PVParams& pv, const ACCellParams& ac)
{
    validate(ac);
    validate(pv);
    if (!(V_d < ac.V_0))
        throw DomainError("pv-ac: bias must stay below the built-in potential");
    const double inner = constants::q * ac.epsilon * constants::eps0 * ac.N_B /
                         (2.0 * std::sqrt(ac.V_0 - V_d));
    return pv.A_pv * std::sqrt(inner);
}

double diffusion_capacitance(double V_d, const PVParams& pv, double tau)
{
    validate(pv);
    if (!(tau > 0.0))
        throw DomainError("pv-ac: tau must be positive");
    const double nvt = pv.n_s * pv.n * thermal_voltage(pv.T);
    const double x = V_d / nvt;
    if (x > 700.0)
        throw OverflowError("pv-ac: diode exponent exceeds overflow guard");
    return tau / (2.0 * nvt) * pv.I_0 * std::exp(x);
}

double fit_tau(double C_target, double V_d_anchor, const PVParams& pv,
               const ACCellParams& ac)
{
    if (!(C_target > 0.0))
        throw DomainError("pv-ac: capacitance target must be positive");
    const double c_t = transition_capacitance(V_d_anchor, pv, ac);
    if (c_t >= C_target)
        throw DomainError(
            "pv-ac: transition capacitance alone exceeds the fit target; "
            "reduce N_B or raise the target");
    const double c_d = C_target - c_t;
    return 2.0 * dynamic_resistance(V_d_anchor, pv) * c_d;
}

double resolved_tau(const PVParams& pv, const ACCellParams& ac, double V_d_anchor)
{
    validate(ac);
    if (ac.tau)
        return *ac.tau;
    return fit_tau(ac.calibration_C, V_d_anchor, pv, ac);
}

SmallSignalCell small_signal_at(const OperatingPoint& op, const PVParams& pv,
                                const ACCellParams& ac)
{
    validate(ac);
    if (ac.mode == ACCellMode::calibration)
        return {ac.calibration_r, ac.calibration_C};
    const double tau = resolved_tau(pv, ac);
    SmallSignalCell cell;
    cell.r = dynamic_resistance(op.V_d, pv);
    cell.C = transition_capacitance(op.V_d, pv, ac) +
             diffusion_capacitance(op.V_d, pv, tau);
    return cell;
}

bool diffusion_model_valid(double omega_max, double tau)
{
    if (omega_max < 0.0 || tau < 0.0)
        throw DomainError("pv-ac: omega and tau must be non-negative");
    return omega_max * tau <= 0.1;
}

}  // namespace rbcom
