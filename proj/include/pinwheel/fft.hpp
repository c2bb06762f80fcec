#pragma once

#include <complex>
#include <vector>

#include "pinwheel/errors.hpp"

namespace pinwheel {

using cplx = std::complex<double>;

namespace detail {

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Iterative radix-2 Cooley-Tukey, in place. n must be a power of two.
inline void fft_pow2(std::vector<cplx>& a, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  const double pi = 3.14159265358979323846;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 2.0 : -2.0) * pi / static_cast<double>(len);
    const cplx wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      cplx w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        const cplx u = a[i + j];
        const cplx v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

// O(n^2) reference transform for non-power-of-two sizes.
inline void dft_naive(std::vector<cplx>& a, bool inverse) {
  const std::size_t n = a.size();
  const double pi = 3.14159265358979323846;
  std::vector<cplx> out(n, cplx(0.0, 0.0));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      const double ang = (inverse ? 2.0 : -2.0) * pi * static_cast<double>(k * j % n) /
                         static_cast<double>(n);
      out[k] += a[j] * cplx(std::cos(ang), std::sin(ang));
    }
  }
  a.swap(out);
}

}  // namespace detail

// Unnormalized forward DFT: A_k = sum_j a_j e^{-2pi i k j / n}.
inline void dft_inplace(std::vector<cplx>& a) {
  if (detail::is_pow2(a.size()))
    detail::fft_pow2(a, false);
  else
    detail::dft_naive(a, false);
}

// Inverse of dft_inplace, including the 1/n factor.
inline void idft_inplace(std::vector<cplx>& a) {
  if (detail::is_pow2(a.size()))
    detail::fft_pow2(a, true);
  else
    detail::dft_naive(a, true);
  const double inv = 1.0 / static_cast<double>(a.size());
  for (auto& v : a) v *= inv;
}

// 2D forward DFT of row-major data (nx rows of length ny), unnormalized.
inline std::vector<cplx> dft2(const std::vector<cplx>& data, std::size_t nx, std::size_t ny) {
  if (data.size() != nx * ny) throw ConfigError("dft2: size mismatch");
  std::vector<cplx> out(data);
  std::vector<cplx> row(ny);
  for (std::size_t i = 0; i < nx; ++i) {
    std::copy(out.begin() + static_cast<std::ptrdiff_t>(i * ny),
              out.begin() + static_cast<std::ptrdiff_t>((i + 1) * ny), row.begin());
    dft_inplace(row);
    std::copy(row.begin(), row.end(), out.begin() + static_cast<std::ptrdiff_t>(i * ny));
  }
  std::vector<cplx> col(nx);
  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t i = 0; i < nx; ++i) col[i] = out[i * ny + j];
    dft_inplace(col);
    for (std::size_t i = 0; i < nx; ++i) out[i * ny + j] = col[i];
  }
  return out;
}

}  // namespace pinwheel
