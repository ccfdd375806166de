#pragma once

#include "hmra2d/types.hpp"

#include <Eigen/Cholesky>

#include <cstdint>
#include <vector>

namespace hmra {

// Fourier-Bessel steerable basis on the support disk of an L x L grid:
// u_{k,q}(r, theta) = N_{k,q} J_k(R_{k,q} r / c) e^{i k theta} for r <= c,
// zero outside, with R_{k,q} the q-th positive root of J_k and
// N_{k,q} = 1 / (c sqrt(pi) |J_{k+1}(R_{k,q})|).
//
// Admitted indices satisfy R_{k,q} <= 2 pi c nu (nu = bandlimit in cycles
// per pixel) and k <= 2c. Expansion is a least-squares projection of the
// in-disk pixels onto the span of the basis functions under the real-image
// parameterization: the design matrix is assembled in real form
// [A_0 | 2 Re A_k | -2 Im A_k]_{k>=1}, which keeps the k = 0 coefficients
// exactly real and white pixel noise white in the coefficients.
struct FourierBesselBasis {
  int L = 0;
  double c = 0.0;          // disk radius (L-1)/2
  double bandlimit = 0.5;  // cycles per pixel
  int k_max = -1;
  std::vector<int> counts;               // p_k, k = 0..k_max
  std::vector<Eigen::VectorXd> roots;    // R_{k,q}
  std::vector<Eigen::VectorXd> norms;    // N_{k,q}
  std::vector<std::pair<int, int>> disk_pixels;  // (iy, ix), row-major order
  std::vector<int> flat_offset;          // start of block k in the flat complex layout
  int total = 0;                         // M = sum p_k

  // Real design matrix (#disk pixels x (2M - p_0)) and the Cholesky factor of
  // its normal matrix. Column layout per block: k = 0 real part only; k >= 1
  // first the p_k columns of 2 Re A_k, then the p_k columns of -2 Im A_k.
  Eigen::MatrixXd design_real;
  std::vector<int> real_offset;  // start of block k in the real layout
  Eigen::LDLT<Eigen::MatrixXd> normal_ldlt;

  std::uint64_t id = 0;

  int real_size() const { return 2 * total - (counts.empty() ? 0 : counts[0]); }
};

FourierBesselBasis build_basis(int L, double bandlimit = 0.5, bool allow_even = false);

// Least-squares coefficients of the in-disk pixels (corners are ignored).
Coefficients expand(const Image& image, const FourierBesselBasis& basis);

// Real image from coefficients; pixels outside the disk are zero.
Image synthesize(const Coefficients& coeffs, const FourierBesselBasis& basis);

// Batch expansion: returns the flat complex coefficient matrix (M x N).
Eigen::MatrixXcd expand_stack(const std::vector<Image>& images, const FourierBesselBasis& basis);

// Flat complex vector <-> per-frequency blocks.
Coefficients coefficients_from_flat(const Eigen::VectorXcd& flat, const FourierBesselBasis& basis);
Eigen::VectorXcd flat_from_coefficients(const Coefficients& coeffs, const FourierBesselBasis& basis);

// One complex basis function sampled over the disk pixels (for tests and
// diagnostics; the pipeline itself works with the real design matrix).
Eigen::VectorXcd design_column(const FourierBesselBasis& basis, int k, int q);

}  // namespace hmra
