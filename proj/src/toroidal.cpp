#include "s3modes/toroidal.hpp"

#include <cmath>
#include <numbers>

#include "s3modes/error.hpp"

namespace s3modes {

namespace {
double wrap_angle(double a) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    a = std::fmod(a, two_pi);
    return a < 0.0 ? a + two_pi : a;
}
}  // namespace

std::array<double, 4> ToroidalPoint::embed() const {
    const double c = std::cos(chi);
    const double s = std::sin(chi);
    return {c * std::cos(theta), s * std::cos(phi), s * std::sin(phi), c * std::sin(theta)};
}

ToroidalPoint ToroidalPoint::from_cartesian(const std::array<double, 4>& x) {
    const double rc = std::hypot(x[0], x[3]);
    const double rs = std::hypot(x[1], x[2]);
    if (rc == 0.0 && rs == 0.0) throw DomainError("ToroidalPoint: zero vector");
    return {std::atan2(rs, rc), wrap_angle(std::atan2(x[3], x[0])), wrap_angle(std::atan2(x[2], x[1]))};
}

ToroidalPoint ToroidalPoint::from_quaternion(const Quaternion& q) {
    return from_cartesian({q[0], q[1], q[2], q[3]});
}

Quaternion point_to_quaternion(const ToroidalPoint& p) {
    const Quaternion zeta{std::cos(p.theta), 0.0, 0.0, std::sin(p.theta)};
    const Quaternion xi{std::cos(p.phi), 0.0, 0.0, std::sin(p.phi)};
    return std::cos(p.chi) * zeta + std::sin(p.chi) * (xi * Quaternion::unit(1));
}

}  // namespace s3modes
