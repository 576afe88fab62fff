#pragma once

#include <array>
#include <random>

#include "s3modes/quaternion.hpp"
#include "s3modes/rotation.hpp"
#include "s3modes/toroidal.hpp"

namespace s3modes {

/// Uniform point of S^3 as a unit 4-vector.
std::array<double, 4> random_unit_vector(std::mt19937_64& rng);
/// Uniform point of S^3 in toroidal coordinates.
ToroidalPoint random_point(std::mt19937_64& rng);
/// Haar-random rotation (independent uniform left and right quaternions).
Rotation random_rotation(std::mt19937_64& rng);
/// N = u + i w with u, w orthonormal in R^4, so N . N = 0.
ComplexQuaternion random_null_vector(std::mt19937_64& rng);

}  // namespace s3modes
