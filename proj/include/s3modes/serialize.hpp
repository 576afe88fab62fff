#pragma once

#include <string>

#include "json.hpp"

#include "s3modes/bases.hpp"
#include "s3modes/quotients.hpp"
#include "s3modes/rotations.hpp"

namespace s3modes {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const Quaternion& q);
nlohmann::json to_json(const ComplexQuaternion& q);
nlohmann::json to_json(const std::complex<double>& z);
Quaternion quaternion_from_json(const nlohmann::json& j);
ComplexQuaternion complex_quaternion_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Rotation& g);
Rotation rotation_from_json(const nlohmann::json& j);

/// Row-major [re, im] pairs.
nlohmann::json matrix_to_json(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd matrix_from_json(const nlohmann::json& entries, int rows, int cols);
nlohmann::json vector_to_json(const Eigen::VectorXcd& v);

/// {k, from, to, b2_scaling, shape, entries}
nlohmann::json to_json(const CoeffMatrix& m);
CoeffMatrix coeff_matrix_from_json(const nlohmann::json& j);

/// CoeffMatrix layout plus the quaternion pair and oracle bookkeeping.
nlohmann::json to_json(const RotationCoeffs& g);

nlohmann::json to_json(const InvariantSubspace& s);
nlohmann::json to_json(const MultiplicityReport& r);

/// One "row,col,re,im" line per entry, shortest round-trip number format.
std::string matrix_to_csv(const Eigen::MatrixXcd& m);

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double x);

}  // namespace s3modes
