#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <vector>

namespace hmra {

using Complex = std::complex<double>;

// Square L x L pixel grid. image(iy, ix) holds the intensity at centered
// coordinates x = ix - center_index(L), y = iy - center_index(L).
using Image = Eigen::ArrayXXd;

// Pixel index of the grid center. Equals (L-1)/2 for odd L; for even L the
// center sits at pixel L/2.
inline int center_index(int L) { return L / 2; }

// Radius of the assumed support disk, c = (L-1)/2.
inline double support_radius(int L) { return (L - 1) / 2.0; }

inline bool in_support_disk(int ix, int iy, int L) {
  const double c = support_radius(L);
  const double dx = ix - center_index(L);
  const double dy = iy - center_index(L);
  return dx * dx + dy * dy <= c * c;
}

// Expansion coefficients of a real image in a steerable basis: one complex
// block per angular frequency k = 0..k_max. Coefficients for k < 0 are not
// stored; they follow from realness by a_{-k,q} = conj(a_{k,q}), and the
// k = 0 block is real (zero imaginary part).
struct Coefficients {
  std::vector<Eigen::VectorXcd> blocks;
  std::uint64_t basis_id = 0;

  Coefficients() = default;
  Coefficients(const std::vector<int>& counts, std::uint64_t id) : basis_id(id) {
    blocks.reserve(counts.size());
    for (int n : counts) blocks.emplace_back(Eigen::VectorXcd::Zero(n));
  }

  int k_max() const { return static_cast<int>(blocks.size()) - 1; }

  int total_size() const {
    int n = 0;
    for (const auto& b : blocks) n += static_cast<int>(b.size());
    return n;
  }

  std::vector<int> counts() const {
    std::vector<int> c(blocks.size());
    for (std::size_t k = 0; k < blocks.size(); ++k) c[k] = static_cast<int>(blocks[k].size());
    return c;
  }

  bool same_layout(const Coefficients& other) const {
    if (blocks.size() != other.blocks.size()) return false;
    for (std::size_t k = 0; k < blocks.size(); ++k)
      if (blocks[k].size() != other.blocks[k].size()) return false;
    return true;
  }
};

// Phase modulation a_{k,q} -> a_{k,q} e^{-i k alpha}: the coefficients of the
// image rotated counter-clockwise by alpha. Exact, no interpolation.
Coefficients rotate_coefficients(const Coefficients& coeffs, double alpha);

// Squared L2 norm of the represented real image (Parseval in an orthonormal
// steerable basis): the k = 0 block counts once, k > 0 blocks twice since
// they stand in for the +-k pair.
double image_norm_squared(const Coefficients& coeffs);

// Same pairing rule applied to the difference of two coefficient sets.
double image_distance_squared(const Coefficients& a, const Coefficients& b);

Coefficients operator+(const Coefficients& a, const Coefficients& b);
Coefficients operator-(const Coefficients& a, const Coefficients& b);
Coefficients operator*(double s, const Coefficients& a);

}  // namespace hmra
