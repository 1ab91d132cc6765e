#pragma once

#include <complex>
#include <span>
#include <vector>

namespace radwig::detail {

enum class FftDirection { Forward, Backward };

/// In-place DFT, unnormalized (FFTW sign convention: forward uses e^{-2πi jk/N}).
/// Planning is serialized behind a process-wide mutex; execution is not.
void fft_inplace(std::span<std::complex<double>> data, FftDirection dir);

/// Angular wavenumbers of the DFT bins for spacing h (Nyquist bin last
/// positive for even N).
std::vector<double> fft_wavenumbers(std::size_t n, double spacing);

}  // namespace radwig::detail
