#pragma once

#include <array>

#include "s3modes/quaternion.hpp"

namespace s3modes {

/// Toroidal coordinates on S^3: chi in [0, pi/2], theta and phi in [0, 2 pi).
/// Embedding: (cos chi cos theta, sin chi cos phi, sin chi sin phi,
/// cos chi sin theta).
struct ToroidalPoint {
    double chi = 0.0;
    double theta = 0.0;
    double phi = 0.0;

    std::array<double, 4> embed() const;

    /// Inverse of embed for any nonzero x in R^4 (projected onto S^3);
    /// angles are returned in [0, 2 pi).
    static ToroidalPoint from_cartesian(const std::array<double, 4>& x);
    static ToroidalPoint from_quaternion(const Quaternion& q);
};

/// The unit quaternion cos chi * zeta + sin chi * xi * j1 with
/// zeta = cos theta + j3 sin theta and xi = cos phi + j3 sin phi.
Quaternion point_to_quaternion(const ToroidalPoint& p);

}  // namespace s3modes
