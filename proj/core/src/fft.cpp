#include "merid/fft.hpp"

#include <cmath>

#include "merid/constants.hpp"
#include "merid/errors.hpp"

namespace merid {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

void fft(std::vector<std::complex<double>>& a, bool inverse) {
    const std::size_t n = a.size();
    if (!is_power_of_two(n)) throw DomainError("fft: size must be a power of two");

    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    // direct twiddle table; a multiplicative recurrence would drift by
    // ~len * eps across the largest stages
    std::vector<std::complex<double>> twiddle(n / 2);
    const double sign = inverse ? 1.0 : -1.0;
    for (std::size_t k = 0; k < n / 2; ++k) {
        const double ang = sign * 2.0 * consts::pi * static_cast<double>(k)
                           / static_cast<double>(n);
        twiddle[k] = {std::cos(ang), std::sin(ang)};
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * twiddle[k * stride];
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }

    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (auto& x : a) x *= scale;
}

}  // namespace merid
