#pragma once

#include "hmra2d/types.hpp"

namespace hmra {

// Counter-clockwise rotation about the grid center by bilinear interpolation.
// Samples falling outside the source grid are zero. Source coordinates within
// 1e-9 of a lattice point are snapped, so axis-aligned angles permute pixels
// exactly.
Image rotate_image(const Image& image, double theta);

// Integer-pixel translation by (dx, dy); vacated pixels are zero.
Image shift_image(const Image& image, int dx, int dy);

// Zeroes every pixel strictly outside the support disk.
Image apply_disk_mask(const Image& image);

// Frobenius norm restricted to the support disk.
double disk_norm(const Image& image);
double disk_dot(const Image& a, const Image& b);

}  // namespace hmra
