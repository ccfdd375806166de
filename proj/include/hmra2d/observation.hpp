#pragma once

#include "hmra2d/types.hpp"

#include <cstdint>
#include <vector>

namespace hmra {

// K reproducible, smooth, disk-supported test images with pixel values in
// [0,1]. Each image superposes ~15 random Gaussian blobs inside the disk,
// apodized to zero at the disk edge and scaled so the maximum is exactly 1.
// Images are regenerated (deterministically) until pairwise coarse rotational
// distances exceed a separation floor, so no two classes are near-rotations
// of each other.
std::vector<Image> generate_phantoms(int K, int L, std::uint64_t seed, bool allow_even = false);

// Mixture model parameters: class probabilities, per-pixel noise standard
// deviation, and the radius of the random integer-pixel shifts (0 = none).
struct MixtureSpec {
  int K = 1;
  Eigen::VectorXd pi;
  double sigma = 0.0;
  double shift_radius = 0.0;

  void validate() const;
};

// A stack of synthetic observations. Labels and angles are kept only for
// evaluation; estimation code accepts the image stack alone.
struct ObservationSet {
  std::vector<Image> observations;
  std::vector<int> true_labels;   // 1..K
  Eigen::VectorXd true_angles;    // [0, 2*pi)
  std::vector<std::pair<int, int>> true_shifts;
  std::uint64_t seed = 0;
};

// Draws N samples of shift(rotate(I_label, angle)) + noise. Observation i is
// generated from its own substream of `seed`, so the set is reproducible and
// generation parallelizes by index.
ObservationSet sample_observations(const std::vector<Image>& images, const MixtureSpec& spec,
                                   int N, std::uint64_t seed);

// Pooled sample variance of the pixels strictly outside the support disk;
// those are pure noise under the support assumption.
double estimate_noise_variance(const ObservationSet& obs);

// sum_k ||I_k||_F^2 / (K L^2 sigma^2); +infinity when sigma == 0.
double snr_of(const std::vector<Image>& images, double sigma);

// Noise standard deviation that realizes a target SNR for the given images.
double sigma_for_snr(const std::vector<Image>& images, double snr);

}  // namespace hmra
