#include "hmra2d/types.hpp"

#include <cmath>
#include <stdexcept>

namespace hmra {

Coefficients rotate_coefficients(const Coefficients& coeffs, double alpha) {
  Coefficients out = coeffs;
  // k = 0 picks up no phase; keep it bit-identical (and exactly real).
  for (int k = 1; k <= out.k_max(); ++k) {
    const Complex phase = std::polar(1.0, -k * alpha);
    out.blocks[k] *= phase;
  }
  return out;
}

double image_norm_squared(const Coefficients& coeffs) {
  double total = 0.0;
  for (int k = 0; k <= coeffs.k_max(); ++k) {
    const double w = (k == 0) ? 1.0 : 2.0;
    total += w * coeffs.blocks[k].squaredNorm();
  }
  return total;
}

double image_distance_squared(const Coefficients& a, const Coefficients& b) {
  if (!a.same_layout(b)) throw std::invalid_argument("coefficient layouts differ");
  double total = 0.0;
  for (int k = 0; k <= a.k_max(); ++k) {
    const double w = (k == 0) ? 1.0 : 2.0;
    total += w * (a.blocks[k] - b.blocks[k]).squaredNorm();
  }
  return total;
}

Coefficients operator+(const Coefficients& a, const Coefficients& b) {
  if (!a.same_layout(b)) throw std::invalid_argument("coefficient layouts differ");
  Coefficients out = a;
  for (std::size_t k = 0; k < out.blocks.size(); ++k) out.blocks[k] += b.blocks[k];
  return out;
}

Coefficients operator-(const Coefficients& a, const Coefficients& b) {
  if (!a.same_layout(b)) throw std::invalid_argument("coefficient layouts differ");
  Coefficients out = a;
  for (std::size_t k = 0; k < out.blocks.size(); ++k) out.blocks[k] -= b.blocks[k];
  return out;
}

Coefficients operator*(double s, const Coefficients& a) {
  Coefficients out = a;
  for (auto& block : out.blocks) block *= s;
  return out;
}

}  // namespace hmra
