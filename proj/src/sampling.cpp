#include "s3modes/sampling.hpp"

#include <cmath>

namespace s3modes {

std::array<double, 4> random_unit_vector(std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    std::array<double, 4> x{};
    double n2 = 0.0;
    while (n2 < 1e-8) {
        n2 = 0.0;
        for (auto& c : x) {
            c = normal(rng);
            n2 += c * c;
        }
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& c : x) c *= inv;
    return x;
}

ToroidalPoint random_point(std::mt19937_64& rng) {
    return ToroidalPoint::from_cartesian(random_unit_vector(rng));
}

Rotation random_rotation(std::mt19937_64& rng) {
    const auto a = random_unit_vector(rng);
    const auto b = random_unit_vector(rng);
    return Rotation::normalized({a[0], a[1], a[2], a[3]}, {b[0], b[1], b[2], b[3]});
}

ComplexQuaternion random_null_vector(std::mt19937_64& rng) {
    const auto u = random_unit_vector(rng);
    auto w = random_unit_vector(rng);
    double dot = 0.0;
    for (std::size_t i = 0; i < 4; ++i) dot += u[i] * w[i];
    double n2 = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        w[i] -= dot * u[i];
        n2 += w[i] * w[i];
    }
    const double inv = 1.0 / std::sqrt(n2);
    ComplexQuaternion n;
    for (int i = 0; i < 4; ++i) n[i] = {u[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(i)] * inv};
    return n;
}

}  // namespace s3modes
