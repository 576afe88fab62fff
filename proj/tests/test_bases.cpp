#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "s3modes/bases.hpp"
#include "s3modes/error.hpp"
#include "s3modes/quad.hpp"
#include "s3modes/sampling.hpp"

using namespace s3modes;
using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

TEST(ModeB2, IndexRoundTrip) {
    for (int k = 0; k <= 7; ++k) {
        const auto modes = b2_modes(k);
        ASSERT_EQ(modes.size(), static_cast<std::size_t>((k + 1) * (k + 1)));
        for (std::size_t i = 0; i < modes.size(); ++i) {
            EXPECT_EQ(b2_index(modes[i]), static_cast<int>(i));
            EXPECT_EQ(ModeB2::from_index(k, static_cast<int>(i)), modes[i]);
        }
    }
    const ModeB2 half = ModeB2::from_m(3, 0.5, -1.5);
    EXPECT_EQ(half.ell(), -1);
    EXPECT_EQ(half.m(), -2);
    EXPECT_THROW(ModeB2::from_m(2, 0.5, 0.5), DomainError);
    EXPECT_THROW(ModeB2::from_m(2, 2.0, 0.0), DomainError);
}

TEST(B2, FrozenNormalizationConstants) {
    EXPECT_NEAR(normalization_constant(ModeB2::from_m(0, 0, 0)), 1.0 / kPi, 1e-15);
    EXPECT_NEAR(normalization_constant(ModeB2::from_m(2, 1, 1)), std::sqrt(3.0) / kPi, 1e-15);
}

TEST(B2, ExtremeModeClosedForm) {
    // m1 = m2 = k/2: only cos^k chi e^{ik theta} survives.
    const ToroidalPoint p{0.6, 1.3, 2.2};
    for (int k = 0; k <= 8; ++k) {
        const ModeB2 mode = ModeB2::from_doubled(k, k, k);
        const cd expected = normalization_constant(mode) * std::pow(std::cos(p.chi), k) * std::polar(1.0, k * p.theta);
        EXPECT_LT(std::abs(eval_T(mode, p) - expected), 1e-13);
    }
}

TEST(B2, OrthogonalWithConstantNorm) {
    for (int k = 0; k <= 7; ++k) {
        const QuadratureRule rule = default_rule(k);
        const Eigen::MatrixXcd G = gram_matrix(sample_T(k, rule), rule);
        const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(G.rows(), G.cols());
        EXPECT_LT((G - 2.0 * I).cwiseAbs().maxCoeff(), 1e-10) << "k=" << k;
    }
}

TEST(B2, HarmonicHomogeneousExtension) {
    for (int k : {1, 2, 3, 4}) {
        for (const auto& mode : b2_modes(k)) {
            const double r = homogeneous_harmonicity_residual([&](const ToroidalPoint& p) { return eval_T(mode, p); }, k);
            EXPECT_LT(r, 1e-5);
        }
    }
}

TEST(B3, NullVectorsAndRoutes) {
    std::mt19937_64 rng(4);
    for (int k : {2, 4, 6}) {
        for (const auto& mode : b3_modes(k)) {
            const ComplexQuaternion n = null_vector_ij(k, mode.I, mode.J);
            EXPECT_LT(std::abs(scalar_product(n, n)), 1e-15);
        }
        const ToroidalPoint p = random_point(rng);
        for (const auto& mode : b3_modes(k))
            EXPECT_LT(std::abs(eval_Phi(mode, p, PhiRoute::Cartesian) - eval_Phi(mode, p, PhiRoute::Quaternionic)),
                      1e-12);
    }
    EXPECT_THROW(eval_Phi(ModeB3{3, 0, 0}, ToroidalPoint{0.1, 0.2, 0.3}), DomainError);
    EXPECT_THROW(eval_Phi(ModeB3{2, 3, 0}, ToroidalPoint{0.1, 0.2, 0.3}), DomainError);
}

TEST(Coefficients, FrozenValue) {
    EXPECT_NEAR(coeff_P(ModeB2::from_m(2, 0, 0)), kPi / (2 * std::sqrt(3.0)), 1e-15);
    EXPECT_THROW(coeff_P(ModeB2::from_m(3, 0.5, 0.5)), DomainError);
}

TEST(Coefficients, MatchCoherentStateProjection) {
    for (int k : {2, 4, 6}) {
        const QuadratureRule rule = default_rule(k);
        const double a = 0.7, b = 2.1;
        const Projection proj =
            project_onto_level([&](const ToroidalPoint& p) { return eval_Phi_coherent(k, a, b, p); }, k, rule);
        EXPECT_LT(proj.relative_residual(), 1e-10);
        for (const auto& mode : b2_modes(k)) {
            const double P = coeff_P(mode);
            const cd expected = P * std::polar(1.0, -a * mode.ell() + b * mode.m());
            EXPECT_LT(std::abs(proj.coeffs[b2_index(mode)] - expected) / P, 1e-8);
        }
    }
}

TEST(ChangeOfBasis, RoundTripAndPointwise) {
    std::mt19937_64 rng(8);
    for (int k : {2, 4, 6}) {
        const Eigen::MatrixXcd E = t_from_phi_matrix(k).entries;
        const Eigen::MatrixXcd F = phi_from_t_matrix(k).entries;
        const auto n = E.rows();
        EXPECT_LT((E * F - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().rowwise().sum().maxCoeff(), 1e-9);
        const Eigen::VectorXd P = coeff_P_all(k);
        for (int s = 0; s < 20; ++s) {
            const ToroidalPoint p = random_point(rng);
            const Eigen::VectorXcd scaled = P.cast<cd>().cwiseProduct(eval_T_all(k, p));
            EXPECT_LT((E * eval_Phi_all(k, p) - scaled).cwiseAbs().maxCoeff(), 1e-9);
        }
    }
}

TEST(ChangeOfBasis, ScalingConversion) {
    const CoeffMatrix scaled = t_from_phi_matrix(4);
    const CoeffMatrix plain = with_b2_scaling(scaled, B2Scaling::Plain);
    EXPECT_EQ(plain.scaling, B2Scaling::Plain);
    const Eigen::VectorXd P = coeff_P_all(4);
    for (long r = 0; r < P.size(); ++r)
        EXPECT_LT((plain.entries.row(r) * P[r] - scaled.entries.row(r)).cwiseAbs().maxCoeff(), 1e-14);
    const CoeffMatrix back = with_b2_scaling(plain, B2Scaling::Scaled);
    EXPECT_LT((back.entries - scaled.entries).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_THROW(t_from_phi_matrix(5), DomainError);
}
