#include "fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <mutex>

#include "rbcom/constants.hpp"
#include "rbcom/errors.hpp"

namespace rbcom::detail {

namespace {
// FFTW planning mutates global state; serialize it.
std::mutex g_plan_mutex;
}  // namespace

std::vector<std::complex<double>> rfft(const std::vector<double>& x)
{
    const std::size_t n = x.size();
    if (n == 0)
        throw DomainError("fft: empty input");
    const std::size_t bins = n / 2 + 1;

    double* in = fftw_alloc_real(n);
    fftw_complex* out = fftw_alloc_complex(bins);
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(g_plan_mutex);
        plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), in, out, FFTW_ESTIMATE);
    }
    std::memcpy(in, x.data(), n * sizeof(double));
    fftw_execute(plan);

    std::vector<std::complex<double>> spectrum(bins);
    std::memcpy(static_cast<void*>(spectrum.data()), out, bins * sizeof(fftw_complex));
    {
        std::lock_guard<std::mutex> lock(g_plan_mutex);
        fftw_destroy_plan(plan);
    }
    fftw_free(in);
    fftw_free(out);
    return spectrum;
}

std::vector<double> irfft(const std::vector<std::complex<double>>& spectrum,
                          std::size_t n)
{
    if (spectrum.size() != n / 2 + 1)
        throw DomainError("fft: spectrum length does not match output size");

    fftw_complex* in = fftw_alloc_complex(spectrum.size());
    double* out = fftw_alloc_real(n);
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(g_plan_mutex);
        plan = fftw_plan_dft_c2r_1d(static_cast<int>(n), in, out, FFTW_ESTIMATE);
    }
    std::memcpy(in, spectrum.data(), spectrum.size() * sizeof(fftw_complex));
    fftw_execute(plan);

    std::vector<double> x(n);
    const double scale = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = out[i] * scale;
    {
        std::lock_guard<std::mutex> lock(g_plan_mutex);
        fftw_destroy_plan(plan);
    }
    fftw_free(in);
    fftw_free(out);
    return x;
}

std::vector<double> welch_psd(const std::vector<double>& x, int segments, double fs)
{
    if (segments < 1)
        throw DomainError("fft: segment count must be positive");
    if (!(fs > 0.0))
        throw DomainError("fft: sample rate must be positive");
    const std::size_t n = x.size();
    if (n == 0 || n % static_cast<std::size_t>(segments) != 0)
        throw DomainError("fft: sample count must divide evenly into segments");
    const std::size_t seg_len = n / static_cast<std::size_t>(segments);
    if (seg_len < 2)
        throw DomainError("fft: segments too short");

    std::vector<double> window(seg_len);
    double win_energy = 0.0;
    for (std::size_t i = 0; i < seg_len; ++i) {
        window[i] = 0.5 * (1.0 - std::cos(2.0 * constants::pi *
                                          static_cast<double>(i) / seg_len));
        win_energy += window[i] * window[i];
    }

    const std::size_t bins = seg_len / 2 + 1;
    std::vector<double> psd(bins, 0.0);
    std::vector<double> buf(seg_len);
    for (int s = 0; s < segments; ++s) {
        const double* seg = x.data() + static_cast<std::size_t>(s) * seg_len;
        for (std::size_t i = 0; i < seg_len; ++i)
            buf[i] = seg[i] * window[i];
        const auto spec = rfft(buf);
        for (std::size_t k = 0; k < bins; ++k)
            psd[k] += std::norm(spec[k]);
    }

    const double norm = 1.0 / (fs * win_energy * segments);
    for (std::size_t k = 0; k < bins; ++k) {
        double scale = 2.0 * norm;  // one-sided: double interior bins
        if (k == 0 || (seg_len % 2 == 0 && k == bins - 1))
            scale = norm;
        psd[k] *= scale;
    }
    return psd;
}

}  // namespace rbcom::detail
