#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "s3modes/combinatorics.hpp"
#include "s3modes/error.hpp"
#include "s3modes/quaternion.hpp"
#include "s3modes/roots.hpp"
#include "s3modes/rotation.hpp"
#include "s3modes/sampling.hpp"
#include "s3modes/toroidal.hpp"

using namespace s3modes;

namespace {

const Quaternion one = Quaternion::one();
const Quaternion e1 = Quaternion::unit(1);
const Quaternion e2 = Quaternion::unit(2);
const Quaternion e3 = Quaternion::unit(3);

Quaternion random_quaternion(std::mt19937_64& rng) {
    std::normal_distribution<double> n;
    return {n(rng), n(rng), n(rng), n(rng)};
}

}  // namespace

TEST(Quaternion, MultiplicationTable) {
    EXPECT_EQ(max_abs_diff(e1 * e2, e3), 0.0);
    EXPECT_EQ(max_abs_diff(e2 * e3, e1), 0.0);
    EXPECT_EQ(max_abs_diff(e3 * e1, e2), 0.0);
    EXPECT_EQ(max_abs_diff(e2 * e1, -e3), 0.0);
    for (const auto& j : {e1, e2, e3}) EXPECT_EQ(max_abs_diff(j * j, -one), 0.0);
}

TEST(Quaternion, ProductPropertiesOnRandomInputs) {
    std::mt19937_64 rng(11);
    for (int s = 0; s < 200; ++s) {
        const Quaternion a = random_quaternion(rng), b = random_quaternion(rng), c = random_quaternion(rng);
        EXPECT_LT(max_abs_diff((a * b) * c, a * (b * c)), 1e-12);
        EXPECT_LT(max_abs_diff((a * b).bar(), b.bar() * a.bar()), 1e-12);
        EXPECT_NEAR(norm2(a * b), norm2(a) * norm2(b), 1e-10 * norm2(a) * norm2(b));
        const Quaternion aab = a * a.bar();
        EXPECT_NEAR(aab[0], norm2(a), 1e-12 * norm2(a));
        EXPECT_NEAR(std::abs(aab[1]) + std::abs(aab[2]) + std::abs(aab[3]), 0.0, 1e-12 * norm2(a));
    }
}

TEST(Quaternion, ComplexUnitCommutesWithImaginaryUnits) {
    const ComplexQuaternion i_one{cdouble{0, 1}, 0.0, 0.0, 0.0};
    for (int mu = 1; mu < 4; ++mu) {
        const ComplexQuaternion j = to_complex(Quaternion::unit(mu));
        EXPECT_EQ(max_abs_diff(i_one * j, j * i_one), 0.0);
    }
}

TEST(Quaternion, ScalarProductRoutesAgree) {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> n;
    for (int s = 0; s < 100; ++s) {
        ComplexQuaternion a, b;
        for (int mu = 0; mu < 4; ++mu) {
            a[mu] = {n(rng), n(rng)};
            b[mu] = {n(rng), n(rng)};
        }
        EXPECT_LT(std::abs(scalar_product(a, b) - scalar_product_via_products(a, b)), 1e-12);
        EXPECT_LT(std::abs(scalar_product(a, b) - scalar_product(b, a)), 1e-15);
    }
}

TEST(Quaternion, AuxiliaryQuaternionsAreNull) {
    for (const auto& q : {aux_alpha(), aux_beta(), aux_delta(), null_vector(0.3, 1.7)})
        EXPECT_LT(std::abs(scalar_product(q, q)), 1e-15);
    EXPECT_LT(std::abs(scalar_product(aux_alpha(), aux_alpha().bar()) - 2.0), 1e-15);
}

TEST(Toroidal, EmbeddingIsUnitAndInvertible) {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int s = 0; s < 500; ++s) {
        const ToroidalPoint p{0.01 + u(rng) * (std::numbers::pi / 2 - 0.02), u(rng) * 2 * std::numbers::pi,
                              u(rng) * 2 * std::numbers::pi};
        const auto x = p.embed();
        EXPECT_NEAR(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3], 1.0, 1e-14);
        const ToroidalPoint back = ToroidalPoint::from_cartesian(x);
        EXPECT_NEAR(back.chi, p.chi, 1e-12);
        EXPECT_NEAR(std::remainder(back.theta - p.theta, 2 * std::numbers::pi), 0.0, 1e-12);
        EXPECT_NEAR(std::remainder(back.phi - p.phi, 2 * std::numbers::pi), 0.0, 1e-12);
        const Quaternion q = point_to_quaternion(p);
        for (int mu = 0; mu < 4; ++mu) EXPECT_NEAR(q[mu], x[static_cast<std::size_t>(mu)], 1e-15);
    }
}

TEST(Rotation, MatrixRoundTripAndComposition) {
    std::mt19937_64 rng(9);
    for (int s = 0; s < 100; ++s) {
        const Rotation g = random_rotation(rng), h = random_rotation(rng);
        const Eigen::Matrix4d M = rotation_to_matrix(g);
        EXPECT_LT((M.transpose() * M - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_NEAR(M.determinant(), 1.0, 1e-12);
        EXPECT_TRUE(rotation_from_matrix(M).same_element(g));
        const Eigen::Matrix4d GH = rotation_to_matrix(rotation_compose(g, h));
        EXPECT_LT((GH - M * rotation_to_matrix(h)).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_TRUE(rotation_compose(g, g.inverse()).same_element(Rotation::identity()));
    }
}

TEST(Rotation, SignAmbiguity) {
    const Rotation g = Rotation::normalized({1, 2, 3, 4}, {0, 1, 0, 1});
    const Rotation minus(-g.left(), -g.right());
    EXPECT_TRUE(g.same_element(minus));
    EXPECT_FALSE(g.same_element(Rotation(-g.left(), g.right())));
    EXPECT_THROW(Rotation({1, 1, 0, 0}, {1, 0, 0, 0}), DomainError);
}

TEST(Roots, FundamentalPropertyExact) {
    for (int k = 2; k <= 12; k += 2) {
        const RootsOfUnity r(k);
        for (int I = -3 * (k + 1); I <= 3 * (k + 1); ++I)
            EXPECT_LT(std::abs(r.power_sum(I) - double(r.power_sum_exact(I))), 1e-10);
        EXPECT_NEAR(std::abs(r.rho() - std::polar(1.0, 2 * std::numbers::pi / (k + 1))), 0.0, 1e-15);
    }
    EXPECT_THROW(RootsOfUnity(3), DomainError);
}

TEST(Combinatorics, ExactValues) {
    EXPECT_EQ(exact_binomial(10, 5), 252u);
    EXPECT_EQ(exact_binomial(60, 30), 118264581564861424ull);
    EXPECT_EQ(exact_binomial(5, -1), 0u);
    EXPECT_EQ(exact_binomial(5, 6), 0u);
    EXPECT_EQ(exact_factorial(20), 2432902008176640000ull);
    EXPECT_EQ(gcd(12, 18), 6);
    EXPECT_EQ(positive_mod(-7, 5), 3);
}
