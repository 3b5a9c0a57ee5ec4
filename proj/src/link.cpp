#include "rbcom/link.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "fft.hpp"
#include "rbcom/constants.hpp"
#include "rbcom/errors.hpp"
#include "rbcom/parallel.hpp"

namespace rbcom {

namespace {

using constants::pi;

// Interpolate v(f) at x, linear in log-frequency. Requires x on the grid.
double interp_log_f(const std::vector<double>& f, const std::vector<double>& v,
                    double x)
{
    if (x < f.front() || x > f.back())
        throw DomainError("link: frequency grid does not cover the requested point");
    auto it = std::lower_bound(f.begin(), f.end(), x);
    if (it == f.begin())
        return v.front();
    const std::size_t hi = static_cast<std::size_t>(it - f.begin());
    if (hi >= f.size())
        return v.back();
    const std::size_t lo = hi - 1;
    if (f[hi] == x)
        return v[hi];
    const double t = std::log(x / f[lo]) / std::log(f[hi] / f[lo]);
    return v[lo] + t * (v[hi] - v[lo]);
}

SmallSignalModel make_model(const SmallSignalCell& cell, const PVParams& pv,
                            const NetworkElements& net)
{
    SmallSignalModel m;
    m.r = cell.r;
    m.C = cell.C;
    m.R_sh = pv.R_sh;
    m.R_s = pv.R_s;
    m.L = net.L;
    m.L_0 = net.L_0;
    m.C_0 = net.C_0;
    m.R_C = net.R_C;
    m.R_L = net.R_L;
    return m;
}

}  // namespace

void validate(const OFDMConfig& ofdm)
{
    if (ofdm.N < 1)
        throw DomainError("link: subchannel count must be at least 1");
    if (!(ofdm.w > 0.0))
        throw DomainError("link: subchannel width must be positive");
    if (ofdm.sigma_s2 < 0.0)
        throw DomainError("link: signal variance must be non-negative");
    if (ofdm.band_start < 0.0)
        throw DomainError("link: band start must be non-negative");
}

std::vector<double> subchannel_centers(const OFDMConfig& ofdm)
{
    validate(ofdm);
    std::vector<double> centers(ofdm.N);
    for (int i = 0; i < ofdm.N; ++i)
        centers[i] = ofdm.band_start + (i + 0.5) * ofdm.w;
    return centers;
}

LinkOperatingState assemble_at_power(const LinkSystem& sys, double P_laser)
{
    if (P_laser < 0.0)
        throw DomainError("link: laser power must be non-negative");

    LinkOperatingState st;
    st.P_laser = P_laser;
    const double i_ph = photocurrent(P_laser, sys.pv.rho);
    st.op = solve_operating_point(i_ph, sys.network.R_L, sys.pv);
    st.cell = small_signal_at(st.op, sys.pv, sys.ac_cell);
    st.model = make_model(st.cell, sys.pv, sys.network);
    const LinearGain g = end_to_end_gain(sys.pump, sys.cavity, sys.pv.rho,
                                         sys.distance);
    st.gamma = g.gamma;
    st.beta = g.beta;
    st.P_chg = st.op.I_pv_o * st.op.I_pv_o * sys.network.R_L;
    st.shot_in = shot_psd_input(P_laser, background_power(sys.background),
                                sys.pv.rho);
    return st;
}

LinkSpectra link_spectra(const LinkOperatingState& st, const LinkSystem& sys,
                         const std::vector<double>& f_grid)
{
    LinkSpectra sp;
    sp.f_hz = f_grid;
    const std::size_t n = f_grid.size();
    sp.H.resize(n);
    sp.mag2.resize(n);
    sp.shot_v2hz.resize(n);
    sp.thermal_v2hz.resize(n);
    sp.thermal_R_C.resize(n);
    sp.thermal_R_sh.resize(n);
    sp.thermal_R_L.resize(n);
    sp.thermal_r.resize(n);
    sp.thermal_R_s.resize(n);

    parallel_for(n, [&](std::size_t i) {
        const double omega = 2.0 * pi * f_grid[i];
        sp.H[i] = signal_response(omega, st.model);
        sp.mag2[i] = std::norm(sp.H[i]);
        sp.shot_v2hz[i] = sp.mag2[i] * st.shot_in;
        const ThermalBreakdown th =
            thermal_psd_output(omega, st.model, sys.pv.T, sys.thermal);
        sp.thermal_v2hz[i] = th.total;
        sp.thermal_R_C[i] = th.R_C;
        sp.thermal_R_sh[i] = th.R_sh;
        sp.thermal_R_L[i] = th.R_L;
        sp.thermal_r[i] = th.r;
        sp.thermal_R_s[i] = th.R_s;
    });
    return sp;
}

std::vector<double> subchannel_snr(const LinkSpectra& sp, const OFDMConfig& ofdm,
                                   double gamma)
{
    validate(ofdm);
    if (!(gamma > 0.0))
        throw DomainError("link: gamma must be positive");
    const auto centers = subchannel_centers(ofdm);
    const double tone_power = ofdm.sigma_s2 / ofdm.N;  // per-tone current variance

    std::vector<double> snr(centers.size());
    for (std::size_t i = 0; i < centers.size(); ++i) {
        const double mag2 = interp_log_f(sp.f_hz, sp.mag2, centers[i]);
        const double shot = interp_log_f(sp.f_hz, sp.shot_v2hz, centers[i]);
        const double thermal = interp_log_f(sp.f_hz, sp.thermal_v2hz, centers[i]);
        const double signal = gamma * gamma * tone_power * mag2;
        const double noise = ofdm.w * (shot + thermal);
        snr[i] = noise > 0.0 ? signal / noise
                             : std::numeric_limits<double>::infinity();
    }
    return snr;
}

double total_capacity(const std::vector<double>& snr, double w)
{
    if (!(w > 0.0))
        throw DomainError("link: subchannel width must be positive");
    double bits = 0.0;
    for (const double s : snr) {
        if (s < 0.0)
            throw DomainError("link: SNR must be non-negative");
        bits += w * std::log2(1.0 + s);
    }
    return bits;
}

std::vector<PowerSweepPoint> power_capacity_sweep(const LinkSystem& sys,
                                                  const std::vector<double>& p_grid,
                                                  const std::vector<double>& f_grid)
{
    std::vector<PowerSweepPoint> points;
    points.reserve(p_grid.size());
    for (const double p : p_grid) {
        const LinkOperatingState st = assemble_at_power(sys, p);
        const LinkSpectra sp = link_spectra(st, sys, f_grid);
        const auto snr = subchannel_snr(sp, sys.ofdm, st.gamma);
        points.push_back({p, st.P_chg, total_capacity(snr, sys.ofdm.w)});
    }
    return points;
}

MonteCarloResult monte_carlo_snr(const LinkOperatingState& st, const LinkSystem& sys,
                                 const MonteCarloParams& mc)
{
    validate(sys.ofdm);
    const OFDMConfig& ofdm = sys.ofdm;
    const double band_edge = ofdm.band_start + ofdm.N * ofdm.w;
    if (!(mc.oversample > 2.0))
        throw DomainError("link: oversample factor must exceed 2 (Nyquist)");
    if (mc.segments < 1 || mc.samples == 0 ||
        mc.samples % static_cast<std::size_t>(mc.segments) != 0)
        throw DomainError("link: sample count must divide evenly into segments");

    const double fs = mc.oversample * band_edge;
    const std::size_t m = mc.samples;
    const std::size_t seg_len = m / static_cast<std::size_t>(mc.segments);
    if (seg_len < 64)
        throw DomainError("link: Welch segments too short");

    std::mt19937_64 rng(mc.seed);
    std::uniform_real_distribution<double> phase_dist(0.0, 2.0 * pi);
    const auto centers = subchannel_centers(ofdm);
    std::vector<double> phases(centers.size());
    for (auto& p : phases)
        p = phase_dist(rng);
    const double amp = std::sqrt(2.0 * ofdm.sigma_s2 / ofdm.N);

    // Multi-tone drive current, synthesized by per-tone phase rotation.
    // Fixed-size chunks restart each tone from an exactly reduced phase, so
    // the result is independent of the worker count.
    std::vector<double> sig(m, 0.0);
    constexpr std::size_t kChunk = 8192;
    const std::size_t n_chunks = (m + kChunk - 1) / kChunk;
    parallel_for(n_chunks, [&](std::size_t c) {
        const std::size_t k0 = c * kChunk;
        const std::size_t k1 = std::min(m, k0 + kChunk);
        for (std::size_t t = 0; t < centers.size(); ++t) {
            const double cycles_per_sample = centers[t] / fs;
            double start_cycles = cycles_per_sample * static_cast<double>(k0);
            start_cycles -= std::floor(start_cycles);
            const double theta0 = 2.0 * pi * start_cycles + phases[t];
            std::complex<double> z{std::cos(theta0), std::sin(theta0)};
            const std::complex<double> step{std::cos(2.0 * pi * cycles_per_sample),
                                            std::sin(2.0 * pi * cycles_per_sample)};
            for (std::size_t k = k0; k < k1; ++k) {
                sig[k] += amp * z.real();
                z *= step;
            }
        }
    });

    // Network transfers at the FFT bin frequencies.
    const std::size_t bins = m / 2 + 1;
    const double df = fs / static_cast<double>(m);
    std::vector<std::complex<double>> h_ph(bins);
    parallel_for(bins, [&](std::size_t b) {
        h_ph[b] = signal_response(2.0 * pi * df * static_cast<double>(b), st.model);
    });

    auto spectrum = detail::rfft(sig);
    for (std::size_t b = 0; b < bins; ++b)
        spectrum[b] *= st.gamma * h_ph[b];
    const std::vector<double> y_sig = detail::irfft(spectrum, m);

    std::vector<double> y_noise;
    if (!mc.zero_noise) {
        std::vector<NetworkTransfers> h_all(bins);
        parallel_for(bins, [&](std::size_t b) {
            h_all[b] = mna_transfers(2.0 * pi * df * static_cast<double>(b), st.model);
        });

        const double four_kt = 4.0 * constants::k_B * sys.pv.T;
        const auto resistor_psd = [&](double resistance) {
            return sys.thermal == ThermalConvention::norton
                       ? four_kt / resistance
                       : four_kt * resistance;
        };
        struct Source {
            double psd;
            std::function<std::complex<double>(const NetworkTransfers&)> pick;
        };
        const std::vector<Source> sources = {
            {st.shot_in, [&](const NetworkTransfers& t) { return t.photocurrent; }},
            {resistor_psd(st.model.R_C), [](const NetworkTransfers& t) { return t.R_C; }},
            {resistor_psd(st.model.R_sh), [](const NetworkTransfers& t) { return t.R_sh; }},
            {resistor_psd(st.model.R_L), [](const NetworkTransfers& t) { return t.R_L; }},
            {resistor_psd(st.model.r), [](const NetworkTransfers& t) { return t.r; }},
            {resistor_psd(st.model.R_s), [](const NetworkTransfers& t) { return t.R_s; }},
        };

        std::normal_distribution<double> gauss(0.0, 1.0);
        std::vector<std::complex<double>> y_spec(bins, std::complex<double>{});
        std::vector<double> white(m);
        for (const auto& src : sources) {
            const double sigma = std::sqrt(src.psd * fs / 2.0);
            for (std::size_t k = 0; k < m; ++k)
                white[k] = sigma * gauss(rng);
            const auto w_spec = detail::rfft(white);
            for (std::size_t b = 0; b < bins; ++b)
                y_spec[b] += w_spec[b] * src.pick(h_all[b]);
        }
        y_noise = detail::irfft(y_spec, m);
    }

    const auto psd_sig = detail::welch_psd(y_sig, mc.segments, fs);
    std::vector<double> psd_noise;
    if (!mc.zero_noise)
        psd_noise = detail::welch_psd(y_noise, mc.segments, fs);

    const double df_welch = fs / static_cast<double>(seg_len);
    MonteCarloResult out;
    out.fs = fs;
    out.snr.resize(centers.size());
    out.signal_power.resize(centers.size());
    out.noise_power.resize(centers.size());
    for (std::size_t i = 0; i < centers.size(); ++i) {
        const double lo = centers[i] - 0.5 * ofdm.w;
        const double hi = centers[i] + 0.5 * ofdm.w;
        double p_sig = 0.0;
        double p_noise = 0.0;
        for (std::size_t b = 0; b < psd_sig.size(); ++b) {
            const double f = df_welch * static_cast<double>(b);
            if (f >= lo && f < hi) {
                p_sig += psd_sig[b] * df_welch;
                if (!mc.zero_noise)
                    p_noise += psd_noise[b] * df_welch;
            }
        }
        out.signal_power[i] = p_sig;
        out.noise_power[i] = p_noise;
        out.snr[i] = p_noise > 0.0 ? p_sig / p_noise
                                   : std::numeric_limits<double>::infinity();
    }
    return out;
}

}  // namespace rbcom
