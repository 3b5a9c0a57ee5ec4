#include "rbcom/pv_dc.hpp"

#include <algorithm>
#include <cmath>

#include "rbcom/constants.hpp"
#include "rbcom/errors.hpp"

namespace rbcom {

namespace {

constexpr double kExpGuard = 700.0;
constexpr int kMaxIterations = 200;

// exp() that stays finite and strictly increasing past the guard, so the
// solver can evaluate residuals at extreme bracket endpoints. Public entry
// points reject such arguments before reaching here.
double solver_exp(double x)
{
    if (x > kExpGuard)
        return std::exp(kExpGuard) * (1.0 + (x - kExpGuard));
    return std::exp(x);
}

// Newton iteration on a strictly decreasing residual, safeguarded by
// bisection on a bracketing interval [lo, hi] with g(lo) >= 0 >= g(hi).
// Falls back to interval halving whenever the Newton step leaves the
// bracket or advances slower than halving would (the exponential makes
// plain Newton creep when started far right of the root).
template <typename G, typename DG>
double newton_bisect(G g, DG dg, double lo, double hi, double tol, int& iters)
{
    double x = 0.5 * (lo + hi);
    double step_prev = hi - lo;
    for (iters = 1; iters <= kMaxIterations; ++iters) {
        const double gx = g(x);
        if (std::abs(gx) <= tol)
            return x;
        if (gx > 0.0)
            lo = x;
        else
            hi = x;
        const double slope = dg(x);
        const double newton = gx / slope;
        double next = x - newton;
        double step = std::abs(newton);
        if (!std::isfinite(next) || next <= lo || next >= hi ||
            std::abs(2.0 * gx) > std::abs(step_prev * slope)) {
            next = 0.5 * (lo + hi);
            step = 0.5 * (hi - lo);
        }
        step_prev = step;
        if (next == x) {
            // interval exhausted at double resolution
            return x;
        }
        x = next;
    }
    throw SolverError("pv-dc: operating point iteration did not converge");
}

}  // namespace

void validate(const PVParams& pv)
{
    if (!(pv.I_0 > 0.0))
        throw DomainError("pv-dc: I_0 must be positive");
    if (!(pv.n > 0.0) || !(pv.n_s > 0.0))
        throw DomainError("pv-dc: n and n_s must be positive");
    if (!(pv.T > 0.0))
        throw DomainError("pv-dc: T must be positive");
    if (pv.R_s < 0.0)
        throw DomainError("pv-dc: R_s must be non-negative");
    if (!(pv.R_sh > 0.0))
        throw DomainError("pv-dc: R_sh must be positive");
    if (!(pv.rho > 0.0))
        throw DomainError("pv-dc: rho must be positive");
    if (!(pv.A_pv > 0.0))
        throw DomainError("pv-dc: A_pv must be positive");
}

double thermal_voltage(double T)
{
    if (!(T > 0.0))
        throw DomainError("pv-dc: T must be positive");
    return constants::k_B * T / constants::q;
}

double photocurrent(double P_optical, double rho)
{
    if (P_optical < 0.0)
        throw DomainError("pv-dc: optical power must be non-negative");
    if (!(rho > 0.0))
        throw DomainError("pv-dc: rho must be positive");
    return rho * P_optical;
}

double diode_current(double V_d, const PVParams& pv)
{
    validate(pv);
    const double x = V_d / (pv.n_s * pv.n * thermal_voltage(pv.T));
    if (x > kExpGuard)
        throw OverflowError("pv-dc: diode exponent exceeds overflow guard");
    return pv.I_0 * std::expm1(x);
}

double diode_conductance(double V_d, const PVParams& pv)
{
    validate(pv);
    const double nvt = pv.n_s * pv.n * thermal_voltage(pv.T);
    const double x = V_d / nvt;
    if (x > kExpGuard)
        throw OverflowError("pv-dc: diode exponent exceeds overflow guard");
    return pv.I_0 / nvt * std::exp(x);
}

OperatingPoint solve_operating_point(double I_ph, double R_L, const PVParams& pv)
{
    validate(pv);
    if (I_ph < 0.0)
        throw DomainError("pv-dc: photocurrent must be non-negative");
    if (!(R_L > 0.0))
        throw DomainError("pv-dc: load resistance must be positive");

    OperatingPoint op;
    op.I_ph = I_ph;
    if (I_ph == 0.0)
        return op;

    const double nvt = pv.n_s * pv.n * thermal_voltage(pv.T);
    const double r_tot = R_L + pv.R_s;
    const auto residual = [&](double i) {
        const double v_d = i * r_tot;
        return I_ph - pv.I_0 * (solver_exp(v_d / nvt) - 1.0) - v_d / pv.R_sh - i;
    };
    const auto slope = [&](double i) {
        const double v_d = i * r_tot;
        return -r_tot * (pv.I_0 / nvt * solver_exp(v_d / nvt) + 1.0 / pv.R_sh) - 1.0;
    };

    const double tol = 1e-12 * std::max(I_ph, 1e-6);
    const double i = newton_bisect(residual, slope, 0.0, I_ph, tol, op.iterations);

    op.I_pv_o = i;
    op.V_pv_o = i * R_L;
    op.V_d = i * r_tot;
    op.I_d = pv.I_0 * (solver_exp(op.V_d / nvt) - 1.0);
    return op;
}

double output_current_at_voltage(double I_ph, double V_pv_o, const PVParams& pv)
{
    validate(pv);
    if (I_ph < 0.0)
        throw DomainError("pv-dc: photocurrent must be non-negative");
    if (V_pv_o < 0.0)
        throw DomainError("pv-dc: terminal voltage must be non-negative");

    const double nvt = pv.n_s * pv.n * thermal_voltage(pv.T);
    const auto residual = [&](double i) {
        const double v_d = V_pv_o + i * pv.R_s;
        return I_ph - pv.I_0 * (solver_exp(v_d / nvt) - 1.0) - v_d / pv.R_sh - i;
    };
    const double tol = 1e-12 * std::max(I_ph, 1e-6);
    const double at_zero = residual(0.0);
    if (at_zero <= 0.0) {
        // no positive root; accept the open-circuit endpoint itself, which
        // lands within solver tolerance of zero residual
        if (at_zero < -1e3 * tol)
            throw DomainError("pv-dc: terminal voltage exceeds open-circuit voltage");
        return 0.0;
    }
    const auto slope = [&](double i) {
        const double v_d = V_pv_o + i * pv.R_s;
        return -pv.R_s * (pv.I_0 / nvt * solver_exp(v_d / nvt) + 1.0 / pv.R_sh) - 1.0;
    };

    int iters = 0;
    return newton_bisect(residual, slope, 0.0, std::max(I_ph, 1e-12), tol, iters);
}

double open_circuit_voltage(double I_ph, const PVParams& pv)
{
    validate(pv);
    if (I_ph < 0.0)
        throw DomainError("pv-dc: photocurrent must be non-negative");
    if (I_ph == 0.0)
        return 0.0;

    const double nvt = pv.n_s * pv.n * thermal_voltage(pv.T);
    // At open circuit all photocurrent flows into diode and shunt.
    const auto residual = [&](double v) {
        return I_ph - pv.I_0 * (solver_exp(v / nvt) - 1.0) - v / pv.R_sh;
    };
    const auto slope = [&](double v) {
        return -pv.I_0 / nvt * solver_exp(v / nvt) - 1.0 / pv.R_sh;
    };
    const double v_hi = nvt * std::log1p(I_ph / pv.I_0);
    const double tol = 1e-12 * std::max(I_ph, 1e-6);
    int iters = 0;
    return newton_bisect(residual, slope, 0.0, v_hi, tol, iters);
}

std::vector<IVPoint> iv_curve(double I_ph, const PVParams& pv,
                              const std::vector<double>& v_grid)
{
    std::vector<IVPoint> curve;
    curve.reserve(v_grid.size());
    for (const double v : v_grid)
        curve.push_back({v, output_current_at_voltage(I_ph, v, pv)});
    return curve;
}

std::vector<TransferPoint> output_vs_photocurrent(const std::vector<double>& iph_grid,
                                                  double R_L, const PVParams& pv)
{
    std::vector<TransferPoint> curve;
    curve.reserve(iph_grid.size());
    for (const double i_ph : iph_grid)
        curve.push_back({i_ph, solve_operating_point(i_ph, R_L, pv).I_pv_o});
    return curve;
}

}  // namespace rbcom
