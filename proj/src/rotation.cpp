#include "s3modes/rotation.hpp"

#include <Eigen/Dense>

#include "s3modes/error.hpp"

namespace s3modes {

namespace {

constexpr double kUnitTolerance = 1e-12;

void require_unit(const Quaternion& q, const char* which) {
    if (std::abs(norm2(q) - 1.0) >= kUnitTolerance) {
        throw DomainError(std::string("Rotation: ") + which + " quaternion is not unit");
    }
}

Quaternion normalize(const Quaternion& q) {
    const double n = std::sqrt(norm2(q));
    if (n == 0.0) throw DomainError("Rotation: zero quaternion");
    return q * (1.0 / n);
}

}  // namespace

Rotation::Rotation(const Quaternion& left, const Quaternion& right) : left_(left), right_(right) {
    require_unit(left_, "left");
    require_unit(right_, "right");
}

Rotation Rotation::normalized(const Quaternion& left, const Quaternion& right) {
    return {normalize(left), normalize(right)};
}

Rotation Rotation::canonical() const {
    for (int mu = 0; mu < 4; ++mu) {
        if (std::abs(left_[mu]) > 1e-9) {
            return left_[mu] > 0.0 ? *this : Rotation(-left_, -right_);
        }
    }
    return *this;
}

bool Rotation::same_element(const Rotation& other, double tol) const {
    const bool same = max_abs_diff(left_, other.left_) < tol && max_abs_diff(right_, other.right_) < tol;
    const bool flipped =
        max_abs_diff(left_, -other.left_) < tol && max_abs_diff(right_, -other.right_) < tol;
    return same || flipped;
}

Quaternion rotation_apply(const Rotation& g, const Quaternion& p) { return g.apply(p); }

Eigen::Matrix4d rotation_to_matrix(const Rotation& g) {
    Eigen::Matrix4d m;
    for (int mu = 0; mu < 4; ++mu) m.col(mu) = to_vector(g.apply(Quaternion::unit(mu)));
    return m;
}

Rotation rotation_from_matrix(const Eigen::Matrix4d& m) {
    if ((m.transpose() * m - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() > 1e-9 ||
        std::abs(m.determinant() - 1.0) > 1e-9) {
        throw DomainError("rotation_from_matrix: matrix is not in SO(4)");
    }
    // g(x) = L x R = m0 (R̄ x R) with m0 = g(1) = L R, so x -> m̄0 g(x) is the
    // 3D rotation x -> p x p̄ with p = R̄.
    const Quaternion m0 = from_vector(m.col(0));
    Eigen::Matrix3d r;
    for (int col = 0; col < 3; ++col) {
        const Quaternion image = m0.bar() * from_vector(m.col(col + 1));
        for (int row = 0; row < 3; ++row) r(row, col) = image[row + 1];
    }
    // Shepperd's method.
    Quaternion p;
    const double trace = r.trace();
    if (trace >= r(0, 0) && trace >= r(1, 1) && trace >= r(2, 2)) {
        const double s = 2.0 * std::sqrt(1.0 + trace);
        p = {0.25 * s, (r(2, 1) - r(1, 2)) / s, (r(0, 2) - r(2, 0)) / s, (r(1, 0) - r(0, 1)) / s};
    } else if (r(0, 0) >= r(1, 1) && r(0, 0) >= r(2, 2)) {
        const double s = 2.0 * std::sqrt(1.0 + r(0, 0) - r(1, 1) - r(2, 2));
        p = {(r(2, 1) - r(1, 2)) / s, 0.25 * s, (r(0, 1) + r(1, 0)) / s, (r(0, 2) + r(2, 0)) / s};
    } else if (r(1, 1) >= r(2, 2)) {
        const double s = 2.0 * std::sqrt(1.0 + r(1, 1) - r(0, 0) - r(2, 2));
        p = {(r(0, 2) - r(2, 0)) / s, (r(0, 1) + r(1, 0)) / s, 0.25 * s, (r(1, 2) + r(2, 1)) / s};
    } else {
        const double s = 2.0 * std::sqrt(1.0 + r(2, 2) - r(0, 0) - r(1, 1));
        p = {(r(1, 0) - r(0, 1)) / s, (r(0, 2) + r(2, 0)) / s, (r(1, 2) + r(2, 1)) / s, 0.25 * s};
    }
    p = normalize(p);
    return Rotation::normalized(m0 * p, p.bar());
}

Rotation rotation_compose(const Rotation& g, const Rotation& h) {
    return Rotation::normalized(g.left() * h.left(), h.right() * g.right());
}

}  // namespace s3modes
