#include "hmra2d/bessel.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace hmra {

double bessel_j(int k, double x) {
  if (k < 0) throw std::invalid_argument("bessel_j: order must be >= 0");
  if (x < 0) throw std::invalid_argument("bessel_j: argument must be >= 0");
  if (x == 0.0) return k == 0 ? 1.0 : 0.0;
  return std::cyl_bessel_j(static_cast<double>(k), x);
}

namespace {

double bisect_root(int k, double lo, double hi) {
  double flo = bessel_j(k, lo);
  // Consecutive roots are separated by more than pi, so a bracket endpoint
  // sitting exactly on a root of the previous order is fine: nudge inward.
  while (flo == 0.0) {
    lo += 1e-9 * (1.0 + lo);
    flo = bessel_j(k, lo);
  }
  double fhi = bessel_j(k, hi);
  if (flo * fhi > 0.0) throw std::runtime_error("bessel_j_roots: bracket does not straddle a root");
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= 1e-13 * (1.0 + mid)) break;
    const double fmid = bessel_j(k, mid);
    if (fmid == 0.0) return mid;
    if (flo * fmid < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      flo = fmid;
    }
  }
  return 0.5 * (lo + hi);
}

// Roots of J_0 by sign-change scan. The first root is ~2.40 and spacing is
// always > pi, so a unit step cannot skip a root.
std::vector<double> scan_roots_j0(double upper) {
  std::vector<double> roots;
  double x = 0.5;
  double fx = bessel_j(0, x);
  const double step = 1.0;
  while (x < upper) {
    double y = std::min(x + step, upper + step);
    double fy = bessel_j(0, y);
    if (fx == 0.0) roots.push_back(x);
    if (fx * fy < 0.0) roots.push_back(bisect_root(0, x, y));
    x = y;
    fx = fy;
    if (!roots.empty() && roots.back() > upper) break;
  }
  while (!roots.empty() && roots.back() > upper) roots.pop_back();
  return roots;
}

std::vector<double> next_order_roots(int k, const std::vector<double>& prev, double upper) {
  // Interlacing: R_{k-1,q} < R_{k,q} < R_{k-1,q+1}.
  std::vector<double> roots;
  for (std::size_t q = 0; q + 1 < prev.size(); ++q) {
    const double r = bisect_root(k, prev[q], prev[q + 1]);
    if (r > upper) break;
    roots.push_back(r);
  }
  return roots;
}

}  // namespace

std::vector<Eigen::VectorXd> bessel_j_roots_table(int k_max, double upper) {
  if (k_max < 0 || upper <= 0) throw std::invalid_argument("bessel_j_roots_table: bad arguments");
  // Extend each row past `upper` so the next order always has full brackets:
  // the root spacing near x stays below 8 whenever x is comfortably beyond
  // the turning point x ~ k, which the per-row shrink of 8 guarantees here.
  const double margin = 8.0 * (k_max + 2);
  std::vector<double> prev = scan_roots_j0(upper + margin);
  std::vector<std::vector<double>> rows(k_max + 1);
  rows[0] = prev;
  for (int k = 1; k <= k_max; ++k) {
    rows[k] = next_order_roots(k, rows[k - 1], upper + margin - 8.0 * k);
    if (rows[k].empty()) break;
  }
  std::vector<Eigen::VectorXd> out(k_max + 1);
  for (int k = 0; k <= k_max; ++k) {
    std::vector<double> kept;
    for (double r : rows[k])
      if (r <= upper) kept.push_back(r);
    out[k] = Eigen::Map<Eigen::VectorXd>(kept.data(), static_cast<Eigen::Index>(kept.size()));
  }
  return out;
}

Eigen::VectorXd bessel_j_roots(int k, double upper) {
  return bessel_j_roots_table(k, upper)[k];
}

}  // namespace hmra
