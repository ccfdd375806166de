#pragma once

#include <Eigen/Dense>

namespace hmra {

// Bessel function of the first kind J_k for integer order k >= 0.
double bessel_j(int k, double x);

// All positive roots of J_k in (0, upper], ascending. Brackets come from the
// interlacing property (roots of J_{k+1} separate those of J_k) with a grid
// scan for k = 0; each bracket is bisected to ~1e-13 relative accuracy.
Eigen::VectorXd bessel_j_roots(int k, double upper);

// Roots for all orders k = 0..k_max at once; row k reuses row k-1 as brackets.
std::vector<Eigen::VectorXd> bessel_j_roots_table(int k_max, double upper);

}  // namespace hmra
