#include "rbcom/ac_network.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "rbcom/errors.hpp"
#include "rbcom/parallel.hpp"

namespace rbcom {

namespace {

using cd = std::complex<double>;

constexpr int kNodes = 5;

// Dense complex linear solve with partial pivoting; a is kNodes x kNodes
// row-major, b holds nrhs stacked right-hand sides (column-major blocks).
void solve_dense(std::array<cd, kNodes * kNodes>& a,
                 std::array<cd, kNodes * 6>& b, int nrhs)
{
    for (int col = 0; col < kNodes; ++col) {
        int pivot = col;
        double best = std::abs(a[col * kNodes + col]);
        for (int row = col + 1; row < kNodes; ++row) {
            const double mag = std::abs(a[row * kNodes + col]);
            if (mag > best) {
                best = mag;
                pivot = row;
            }
        }
        if (best == 0.0)
            throw AnalysisError("ac-network: singular nodal matrix");
        if (pivot != col) {
            for (int j = col; j < kNodes; ++j)
                std::swap(a[col * kNodes + j], a[pivot * kNodes + j]);
            for (int k = 0; k < nrhs; ++k)
                std::swap(b[k * kNodes + col], b[k * kNodes + pivot]);
        }
        const cd inv = 1.0 / a[col * kNodes + col];
        for (int row = col + 1; row < kNodes; ++row) {
            const cd factor = a[row * kNodes + col] * inv;
            if (factor == cd{})
                continue;
            for (int j = col; j < kNodes; ++j)
                a[row * kNodes + j] -= factor * a[col * kNodes + j];
            for (int k = 0; k < nrhs; ++k)
                b[k * kNodes + row] -= factor * b[k * kNodes + col];
        }
    }
    for (int k = 0; k < nrhs; ++k) {
        for (int row = kNodes - 1; row >= 0; --row) {
            cd sum = b[k * kNodes + row];
            for (int j = row + 1; j < kNodes; ++j)
                sum -= a[row * kNodes + j] * b[k * kNodes + j];
            b[k * kNodes + row] = sum / a[row * kNodes + row];
        }
    }
}

// Stamp a two-terminal admittance between nodes i and j (-1 for ground).
void stamp(std::array<cd, kNodes * kNodes>& y, int i, int j, cd adm)
{
    if (i >= 0)
        y[i * kNodes + i] += adm;
    if (j >= 0)
        y[j * kNodes + j] += adm;
    if (i >= 0 && j >= 0) {
        y[i * kNodes + j] -= adm;
        y[j * kNodes + i] -= adm;
    }
}

}  // namespace

void validate(const SmallSignalModel& m)
{
    const double elems[] = {m.r, m.C, m.R_sh, m.R_s, m.L, m.L_0, m.C_0, m.R_C, m.R_L};
    for (const double v : elems)
        if (!(v > 0.0) || !std::isfinite(v))
            throw DomainError("ac-network: all elements must be positive and finite");
}

std::complex<double> branch_impedance_zlc(double omega, const SmallSignalModel& m)
{
    validate(m);
    if (omega < 0.0)
        throw DomainError("ac-network: omega must be non-negative");
    if (omega == 0.0)
        return {m.R_L, 0.0};  // choke shorts, coupling cap blocks
    const cd jw{0.0, omega};
    const cd z_eh = jw * m.L_0 + m.R_L;
    const cd z_comm = 1.0 / (jw * m.C_0) + m.R_C;
    return z_eh * z_comm / (z_eh + z_comm);
}

std::complex<double> signal_response(double omega, const SmallSignalModel& m)
{
    validate(m);
    if (omega < 0.0)
        throw DomainError("ac-network: omega must be non-negative");
    if (omega == 0.0)
        return {};
    const cd jw{0.0, omega};
    const cd z_lc = branch_impedance_zlc(omega, m);
    const cd z_series = m.R_s + jw * m.L + z_lc;
    const cd num = (z_lc / z_series) * (m.R_C / (1.0 / (jw * m.C_0) + m.R_C));
    const cd den = 1.0 / m.r + jw * m.C + 1.0 / m.R_sh + 1.0 / z_series;
    return num / den;
}

NetworkTransfers mna_transfers(double omega, const SmallSignalModel& m)
{
    validate(m);
    if (omega < 0.0)
        throw DomainError("ac-network: omega must be non-negative");
    if (omega == 0.0) {
        // DC limits: the coupling cap isolates the output node, so only the
        // R_C injection produces a voltage there.
        NetworkTransfers t{};
        t.R_C = m.R_C;
        return t;
    }

    // Nodes: 0 diode, 1 between R_s and L, 2 branch junction,
    //        3 between C_0 and R_C (output), 4 between L_0 and R_L.
    const cd jw{0.0, omega};
    std::array<cd, kNodes * kNodes> y{};
    stamp(y, 0, -1, 1.0 / m.r);
    stamp(y, 0, -1, jw * m.C);
    stamp(y, 0, -1, 1.0 / m.R_sh);
    stamp(y, 0, 1, 1.0 / m.R_s);
    stamp(y, 1, 2, 1.0 / (jw * m.L));
    stamp(y, 2, 3, jw * m.C_0);
    stamp(y, 3, -1, 1.0 / m.R_C);
    stamp(y, 2, 4, 1.0 / (jw * m.L_0));
    stamp(y, 4, -1, 1.0 / m.R_L);

    // Unit Norton injections: photocurrent, r and R_sh sit across the cell
    // (node 0 to ground); the rest across their own element terminals.
    std::array<cd, kNodes * 6> rhs{};
    rhs[0 * kNodes + 0] = 1.0;  // photocurrent
    rhs[1 * kNodes + 0] = 1.0;  // r
    rhs[2 * kNodes + 0] = 1.0;  // R_sh
    rhs[3 * kNodes + 0] = 1.0;  // R_s, node 0 -> node 1
    rhs[3 * kNodes + 1] = -1.0;
    rhs[4 * kNodes + 4] = 1.0;  // R_L
    rhs[5 * kNodes + 3] = 1.0;  // R_C

    solve_dense(y, rhs, 6);

    NetworkTransfers t;
    t.photocurrent = rhs[0 * kNodes + 3];
    t.r = rhs[1 * kNodes + 3];
    t.R_sh = rhs[2 * kNodes + 3];
    t.R_s = rhs[3 * kNodes + 3];
    t.R_L = rhs[4 * kNodes + 3];
    t.R_C = rhs[5 * kNodes + 3];
    return t;
}

std::complex<double> mna_transfer(double omega, const SmallSignalModel& m,
                                  NoiseSource source)
{
    const NetworkTransfers t = mna_transfers(omega, m);
    switch (source) {
    case NoiseSource::photocurrent: return t.photocurrent;
    case NoiseSource::r: return t.r;
    case NoiseSource::R_sh: return t.R_sh;
    case NoiseSource::R_s: return t.R_s;
    case NoiseSource::R_L: return t.R_L;
    case NoiseSource::R_C: return t.R_C;
    }
    throw DomainError("ac-network: unknown noise source");
}

std::vector<double> log_frequency_grid(double f_min, double f_max, int points)
{
    if (!(f_min > 0.0) || !(f_max > f_min))
        throw DomainError("ac-network: grid requires 0 < f_min < f_max");
    if (points < 2)
        throw DomainError("ac-network: grid requires at least two points");
    std::vector<double> f(points);
    const double ratio = std::log(f_max / f_min);
    for (int i = 0; i < points; ++i)
        f[i] = f_min * std::exp(ratio * static_cast<double>(i) / (points - 1));
    f.front() = f_min;
    f.back() = f_max;
    return f;
}

std::vector<double> default_frequency_grid()
{
    return log_frequency_grid(1e5, 3e9, 2000);
}

SpectrumGrid sweep_signal_response(const std::vector<double>& f_hz,
                                   const SmallSignalModel& m)
{
    validate(m);
    SpectrumGrid g;
    g.f_hz = f_hz;
    g.values.resize(f_hz.size());
    parallel_for(f_hz.size(), [&](std::size_t i) {
        g.values[i] = signal_response(2.0 * 3.141592653589793 * f_hz[i], m);
    });
    return g;
}

std::vector<double> magnitude_squared(const SpectrumGrid& g)
{
    std::vector<double> m(g.values.size());
    for (std::size_t i = 0; i < g.values.size(); ++i)
        m[i] = std::norm(g.values[i]);
    return m;
}

double bandwidth_3db(const std::vector<double>& f_hz,
                     const std::vector<double>& mag2)
{
    if (f_hz.size() != mag2.size())
        throw DomainError("ac-network: frequency and magnitude sizes differ");
    if (f_hz.size() < 2)
        throw AnalysisError("ac-network: grid too small for a bandwidth measure");

    const auto it_max = std::max_element(mag2.begin(), mag2.end());
    const double peak = *it_max;
    if (!(peak > 0.0))
        throw AnalysisError("ac-network: no passband found on the grid");
    const std::size_t imax = static_cast<std::size_t>(it_max - mag2.begin());
    const double half = 0.5 * peak;

    // crossing between index i (below half) and i+1 (at or above half),
    // interpolated linearly in log-frequency
    const auto cross = [&](std::size_t below, std::size_t above) {
        const double x1 = std::log(f_hz[below]);
        const double x2 = std::log(f_hz[above]);
        const double m1 = mag2[below];
        const double m2 = mag2[above];
        if (m2 == m1)
            return f_hz[above];
        return std::exp(x1 + (x2 - x1) * (half - m1) / (m2 - m1));
    };

    double f_lo = f_hz.front();
    for (std::size_t i = imax; i-- > 0;) {
        if (mag2[i] < half) {
            f_lo = cross(i, i + 1);
            break;
        }
    }
    double f_hi = f_hz.back();
    for (std::size_t i = imax + 1; i < mag2.size(); ++i) {
        if (mag2[i] < half) {
            f_hi = cross(i, i - 1);
            break;
        }
    }
    return f_hi - f_lo;
}

}  // namespace rbcom
