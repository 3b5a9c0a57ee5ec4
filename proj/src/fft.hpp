#pragma once

#include <complex>
#include <vector>

namespace rbcom::detail {

// Forward real-to-complex FFT; returns n/2 + 1 spectral bins.
std::vector<std::complex<double>> rfft(const std::vector<double>& x);

// Inverse complex-to-real FFT of a half spectrum, scaled by 1/n.
std::vector<double> irfft(const std::vector<std::complex<double>>& spectrum,
                          std::size_t n);

// One-sided Welch PSD estimate [x^2/Hz]: Hann window over `segments`
// non-overlapping segments. Returns segment_len/2 + 1 bins spaced
// fs / segment_len apart.
std::vector<double> welch_psd(const std::vector<double>& x, int segments, double fs);

}  // namespace rbcom::detail
