#include "hmra2d/image_ops.hpp"

#include <cmath>
#include <stdexcept>

namespace hmra {

namespace {

inline double snap(double v) {
  const double r = std::round(v);
  return std::abs(v - r) < 1e-9 ? r : v;
}

inline double sample_bilinear(const Image& img, double fy, double fx) {
  const int L = static_cast<int>(img.rows());
  const double x0f = std::floor(fx);
  const double y0f = std::floor(fy);
  const int x0 = static_cast<int>(x0f);
  const int y0 = static_cast<int>(y0f);
  const double wx = fx - x0f;
  const double wy = fy - y0f;
  auto at = [&](int iy, int ix) -> double {
    if (ix < 0 || iy < 0 || ix >= L || iy >= L) return 0.0;
    return img(iy, ix);
  };
  return (1 - wy) * ((1 - wx) * at(y0, x0) + wx * at(y0, x0 + 1)) +
         wy * ((1 - wx) * at(y0 + 1, x0) + wx * at(y0 + 1, x0 + 1));
}

}  // namespace

Image rotate_image(const Image& image, double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("rotate_image: theta must be finite");
  if (image.rows() != image.cols()) throw std::invalid_argument("rotate_image: image must be square");
  const int L = static_cast<int>(image.rows());
  const int cx = center_index(L);
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  Image out(L, L);
  for (int iy = 0; iy < L; ++iy) {
    const double y = iy - cx;
    for (int ix = 0; ix < L; ++ix) {
      const double x = ix - cx;
      // Pull-back: the target pixel takes the source value at angle theta
      // earlier, so rotating the sampling point by -theta.
      const double sx = snap(x * ct + y * st);
      const double sy = snap(-x * st + y * ct);
      out(iy, ix) = sample_bilinear(image, sy + cx, sx + cx);
    }
  }
  return out;
}

Image shift_image(const Image& image, int dx, int dy) {
  const int L = static_cast<int>(image.rows());
  Image out = Image::Zero(L, image.cols());
  for (int iy = 0; iy < L; ++iy) {
    const int sy = iy - dy;
    if (sy < 0 || sy >= L) continue;
    for (int ix = 0; ix < static_cast<int>(image.cols()); ++ix) {
      const int sx = ix - dx;
      if (sx < 0 || sx >= static_cast<int>(image.cols())) continue;
      out(iy, ix) = image(sy, sx);
    }
  }
  return out;
}

Image apply_disk_mask(const Image& image) {
  const int L = static_cast<int>(image.rows());
  Image out = image;
  for (int iy = 0; iy < L; ++iy)
    for (int ix = 0; ix < L; ++ix)
      if (!in_support_disk(ix, iy, L)) out(iy, ix) = 0.0;
  return out;
}

double disk_norm(const Image& image) { return std::sqrt(disk_dot(image, image)); }

double disk_dot(const Image& a, const Image& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("disk_dot: size mismatch");
  const int L = static_cast<int>(a.rows());
  double total = 0.0;
  for (int iy = 0; iy < L; ++iy)
    for (int ix = 0; ix < L; ++ix)
      if (in_support_disk(ix, iy, L)) total += a(iy, ix) * b(iy, ix);
  return total;
}

}  // namespace hmra
