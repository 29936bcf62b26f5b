#pragma once

#include <complex>
#include <vector>

namespace merid {

/// In-place radix-2 FFT with unitary normalization (1/sqrt(N) both ways).
/// Size must be a power of two.
void fft(std::vector<std::complex<double>>& data, bool inverse);

bool is_power_of_two(std::size_t n);
std::size_t next_power_of_two(std::size_t n);

}  // namespace merid
