#include "hmra2d/observation.hpp"

#include "hmra2d/image_ops.hpp"
#include "hmra2d/parallel.hpp"
#include "hmra2d/rng.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace hmra {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Image blob_image(int L, std::mt19937_64& rng) {
  const double c = support_radius(L);
  const int cx = center_index(L);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  const int n_blobs = 15;
  Eigen::ArrayXd bx(n_blobs), by(n_blobs), bw(n_blobs), ba(n_blobs);
  for (int b = 0; b < n_blobs; ++b) {
    const double rad = 0.62 * c * std::sqrt(unit(rng));
    const double ang = kTwoPi * unit(rng);
    bx[b] = rad * std::cos(ang);
    by[b] = rad * std::sin(ang);
    bw[b] = (0.05 + 0.07 * unit(rng)) * L;
    ba[b] = 0.3 + 0.7 * unit(rng);
  }

  Image img = Image::Zero(L, L);
  for (int iy = 0; iy < L; ++iy) {
    const double y = iy - cx;
    for (int ix = 0; ix < L; ++ix) {
      const double x = ix - cx;
      const double r = std::hypot(x, y);
      if (r > c) continue;
      double v = 0.0;
      for (int b = 0; b < n_blobs; ++b) {
        const double d2 = (x - bx[b]) * (x - bx[b]) + (y - by[b]) * (y - by[b]);
        v += ba[b] * std::exp(-0.5 * d2 / (bw[b] * bw[b]));
      }
      // Cosine-squared apodization from 0.75c to the rim keeps the phantom
      // smooth across the support boundary.
      if (r > 0.75 * c) {
        const double t = (r - 0.75 * c) / (0.25 * c);
        const double w = std::cos(0.5 * std::numbers::pi * t);
        v *= w * w;
      }
      img(iy, ix) = v;
    }
  }
  const double peak = img.maxCoeff();
  if (peak > 0) img /= peak;
  return img;
}

// Coarse rotational separation: min over a 72-angle grid of the disk-norm
// distance, relative to the norms.
double coarse_separation(const Image& a, const Image& b) {
  double best = std::numeric_limits<double>::infinity();
  for (int t = 0; t < 72; ++t) {
    const double theta = kTwoPi * t / 72.0;
    const double d = disk_norm(Image(rotate_image(a, theta) - b));
    best = std::min(best, d);
  }
  return best / std::max(disk_norm(a), 1e-300);
}

}  // namespace

std::vector<Image> generate_phantoms(int K, int L, std::uint64_t seed, bool allow_even) {
  if (K < 1) throw std::invalid_argument("generate_phantoms: K must be >= 1");
  if (L < 9) throw std::invalid_argument("generate_phantoms: L must be >= 9");
  if (L % 2 == 0 && !allow_even)
    throw std::invalid_argument("generate_phantoms: even L rejected (pass allow_even)");

  std::vector<Image> images;
  images.reserve(K);
  std::uint64_t attempt = 0;
  while (static_cast<int>(images.size()) < K) {
    auto rng = make_engine(seed, 0x70AA0000ULL + attempt++);
    Image candidate = blob_image(L, rng);
    bool separated = true;
    for (const Image& prior : images) {
      if (coarse_separation(prior, candidate) <= 0.15) {
        separated = false;
        break;
      }
    }
    if (separated) images.push_back(std::move(candidate));
    if (attempt > 200ULL * static_cast<std::uint64_t>(K))
      throw std::runtime_error("generate_phantoms: could not produce separated classes");
  }
  return images;
}

void MixtureSpec::validate() const {
  if (K < 1) throw std::invalid_argument("MixtureSpec: K must be >= 1");
  if (pi.size() != K) throw std::invalid_argument("MixtureSpec: pi must have K entries");
  if ((pi.array() <= 0).any()) throw std::invalid_argument("MixtureSpec: pi entries must be > 0");
  if (std::abs(pi.sum() - 1.0) > 1e-9) throw std::invalid_argument("MixtureSpec: pi must sum to 1");
  if (sigma < 0) throw std::invalid_argument("MixtureSpec: sigma must be >= 0");
  if (shift_radius < 0) throw std::invalid_argument("MixtureSpec: shift_radius must be >= 0");
}

ObservationSet sample_observations(const std::vector<Image>& images, const MixtureSpec& spec,
                                   int N, std::uint64_t seed) {
  spec.validate();
  if (static_cast<int>(images.size()) != spec.K)
    throw std::invalid_argument("sample_observations: images.size() != spec.K");
  if (N < 1) throw std::invalid_argument("sample_observations: N must be >= 1");
  const int L = static_cast<int>(images.front().rows());
  for (const Image& img : images)
    if (img.rows() != L || img.cols() != L)
      throw std::invalid_argument("sample_observations: images must share one size");

  Eigen::VectorXd cum(spec.K);
  double acc = 0.0;
  for (int k = 0; k < spec.K; ++k) {
    acc += spec.pi[k];
    cum[k] = acc;
  }

  ObservationSet out;
  out.seed = seed;
  out.observations.resize(N);
  out.true_labels.resize(N);
  out.true_angles.resize(N);
  out.true_shifts.resize(N);

  parallel_chunks(N, 256, [&](int, std::int64_t b, std::int64_t e) {
    for (std::int64_t i = b; i < e; ++i) {
      auto rng = make_engine(seed, static_cast<std::uint64_t>(i));
      std::uniform_real_distribution<double> unit(0.0, 1.0);

      const double u = unit(rng);
      int label = 0;
      while (label < spec.K - 1 && u > cum[label]) ++label;

      const double angle = kTwoPi * unit(rng);

      int dx = 0, dy = 0;
      if (spec.shift_radius > 0) {
        const int s = static_cast<int>(std::floor(spec.shift_radius));
        const double r2 = spec.shift_radius * spec.shift_radius;
        std::uniform_int_distribution<int> pick(-s, s);
        do {
          dx = pick(rng);
          dy = pick(rng);
        } while (dx * dx + dy * dy > r2);
      }

      Image obs = rotate_image(images[static_cast<std::size_t>(label)], angle);
      if (dx != 0 || dy != 0) obs = shift_image(obs, dx, dy);
      if (spec.sigma > 0) {
        std::normal_distribution<double> gauss(0.0, spec.sigma);
        for (int iy = 0; iy < L; ++iy)
          for (int ix = 0; ix < L; ++ix) obs(iy, ix) += gauss(rng);
      }

      out.observations[static_cast<std::size_t>(i)] = std::move(obs);
      out.true_labels[static_cast<std::size_t>(i)] = label + 1;
      out.true_angles[i] = angle;
      out.true_shifts[static_cast<std::size_t>(i)] = {dx, dy};
    }
  });
  return out;
}

double estimate_noise_variance(const ObservationSet& obs) {
  if (obs.observations.empty())
    throw std::invalid_argument("estimate_noise_variance: empty observation set");
  const int L = static_cast<int>(obs.observations.front().rows());
  std::vector<std::pair<int, int>> corners;
  for (int iy = 0; iy < L; ++iy)
    for (int ix = 0; ix < L; ++ix)
      if (!in_support_disk(ix, iy, L)) corners.emplace_back(iy, ix);
  if (corners.empty())
    throw std::invalid_argument("estimate_noise_variance: no pixels outside the support disk");

  double sum = 0.0, sumsq = 0.0;
  const double n = static_cast<double>(corners.size()) * static_cast<double>(obs.observations.size());
  for (const Image& img : obs.observations) {
    for (auto [iy, ix] : corners) {
      const double v = img(iy, ix);
      sum += v;
      sumsq += v * v;
    }
  }
  const double mean = sum / n;
  return std::max(0.0, (sumsq - n * mean * mean) / (n - 1.0));
}

double snr_of(const std::vector<Image>& images, double sigma) {
  if (images.empty()) throw std::invalid_argument("snr_of: no images");
  if (sigma == 0.0) return std::numeric_limits<double>::infinity();
  const double L = static_cast<double>(images.front().rows());
  double energy = 0.0;
  for (const Image& img : images) energy += img.matrix().squaredNorm();
  return energy / (static_cast<double>(images.size()) * L * L * sigma * sigma);
}

double sigma_for_snr(const std::vector<Image>& images, double snr) {
  if (snr <= 0) throw std::invalid_argument("sigma_for_snr: snr must be > 0");
  const double L = static_cast<double>(images.front().rows());
  double energy = 0.0;
  for (const Image& img : images) energy += img.matrix().squaredNorm();
  return std::sqrt(energy / (static_cast<double>(images.size()) * L * L * snr));
}

}  // namespace hmra
