#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "pinwheel/errors.hpp"
#include "pinwheel/fft.hpp"

namespace pinwheel {

// A pi-periodic complex function sampled at phi_j = j*pi/M, j = 0..M-1.
// Expansion basis is the doubled-angle modes e^{2ik phi}; with the uniform
// grid the forward DFT over j computes exactly those coefficients.
struct CircleFunction {
  std::vector<cplx> v;

  CircleFunction() = default;
  explicit CircleFunction(std::size_t m) : v(m, cplx(0.0, 0.0)) {}
  explicit CircleFunction(std::vector<cplx> samples) : v(std::move(samples)) {}

  std::size_t size() const { return v.size(); }
  cplx& operator[](std::size_t j) { return v[j]; }
  const cplx& operator[](std::size_t j) const { return v[j]; }
};

inline std::vector<double> circle_nodes(std::size_t m) {
  std::vector<double> phi(m);
  for (std::size_t j = 0; j < m; ++j)
    phi[j] = std::numbers::pi * static_cast<double>(j) / static_cast<double>(m);
  return phi;
}

// L2 pairing (pi/M) sum conj(f_j) g_j: periodic trapezoid rule, conjugate
// linear in the first slot.
inline cplx inner(const CircleFunction& f, const CircleFunction& g) {
  if (f.size() != g.size()) throw ConfigError("inner: mismatched sample counts");
  if (f.size() == 0) throw ConfigError("inner: empty function");
  cplx acc(0.0, 0.0);
  for (std::size_t j = 0; j < f.size(); ++j) acc += std::conj(f.v[j]) * g.v[j];
  return acc * (std::numbers::pi / static_cast<double>(f.size()));
}

inline double norm(const CircleFunction& f) { return std::sqrt(std::abs(inner(f, f))); }

inline CircleFunction normalized(const CircleFunction& f) {
  const double n = norm(f);
  if (!(n > 0.0)) throw ConfigError("normalized: zero-norm function");
  CircleFunction out(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) out.v[j] = f.v[j] / n;
  return out;
}

// Doubled-angle mode coefficients c_k indexed by DFT bin m = 0..M-1;
// bin m represents k = m < M/2 ? m : m - M (Nyquist counted as -M/2).
inline std::vector<cplx> circle_modes(const CircleFunction& f) {
  std::vector<cplx> c(f.v);
  dft_inplace(c);
  const double inv = 1.0 / static_cast<double>(c.size());
  for (auto& x : c) x *= inv;
  return c;
}

inline CircleFunction circle_from_modes(std::vector<cplx> c) {
  for (auto& x : c) x *= static_cast<double>(c.size());
  idft_inplace(c);
  return CircleFunction(std::move(c));
}

inline int mode_number(std::size_t bin, std::size_t m) {
  return bin < m / 2 ? static_cast<int>(bin) : static_cast<int>(bin) - static_cast<int>(m);
}

// Energy fraction carried by the Nyquist mode k = -M/2 (bin M/2), the one
// bin whose rotation direction the sample grid cannot distinguish. Spectral
// differentiation is only trustworthy when this is negligible.
inline double top_mode_energy_fraction(const CircleFunction& f) {
  const auto c = circle_modes(f);
  double total = 0.0;
  for (const auto& x : c) total += std::norm(x);
  if (total == 0.0) return 0.0;
  return std::norm(c[c.size() / 2]) / total;
}

}  // namespace pinwheel
