#pragma once

#include <Eigen/Core>

#include "s3modes/quaternion.hpp"

namespace s3modes {

/// An element of SO(4) as a pair of unit quaternions acting on points by
/// q -> q_left * q * q_right. The pairs (L, R) and (-L, -R) give the same
/// rotation.
class Rotation {
public:
    /// Throws DomainError unless both quaternions have | |q|^2 - 1 | < 1e-12.
    Rotation(const Quaternion& left, const Quaternion& right);

    /// Normalizes the two quaternions first (they must be nonzero).
    static Rotation normalized(const Quaternion& left, const Quaternion& right);
    static Rotation identity() { return {Quaternion::one(), Quaternion::one()}; }

    const Quaternion& left() const { return left_; }
    const Quaternion& right() const { return right_; }

    Quaternion apply(const Quaternion& p) const { return left_ * p * right_; }
    ComplexQuaternion apply(const ComplexQuaternion& p) const {
        return to_complex(left_) * p * to_complex(right_);
    }

    Rotation inverse() const { return {left_.bar(), right_.bar()}; }

    /// Representative with the first non-negligible coefficient of the left
    /// quaternion positive.
    Rotation canonical() const;

    /// True when both pairs describe the same SO(4) element, i.e. agree up
    /// to a common sign within tol.
    bool same_element(const Rotation& other, double tol = 1e-9) const;

private:
    Quaternion left_;
    Quaternion right_;
};

Quaternion rotation_apply(const Rotation& g, const Quaternion& p);

/// The 4x4 matrix of g acting on coefficient 4-vectors; column mu is g(j_mu).
Eigen::Matrix4d rotation_to_matrix(const Rotation& g);

/// Inverse of rotation_to_matrix for a matrix in SO(4) (orthogonality is
/// checked to 1e-9). Returns one of the two quaternion pairs.
Rotation rotation_from_matrix(const Eigen::Matrix4d& m);

/// The rotation x -> g(h(x)).
Rotation rotation_compose(const Rotation& g, const Rotation& h);

}  // namespace s3modes
