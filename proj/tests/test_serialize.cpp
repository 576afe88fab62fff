#include <random>

#include <gtest/gtest.h>

#include "s3modes/error.hpp"
#include "s3modes/quotients.hpp"
#include "s3modes/rotations.hpp"
#include "s3modes/sampling.hpp"
#include "s3modes/serialize.hpp"

using namespace s3modes;

TEST(Serialize, RotationRoundTrip) {
    std::mt19937_64 rng(3);
    const Rotation g = random_rotation(rng);
    const nlohmann::json j = to_json(g);
    EXPECT_TRUE(rotation_from_json(nlohmann::json::parse(j.dump())).same_element(g, 1e-15));
    nlohmann::json bad{{"q_left", {1, 1, 0, 0}}, {"q_right", {1, 0, 0, 0}}};
    EXPECT_THROW(rotation_from_json(bad), DomainError);
}

TEST(Serialize, ComplexQuaternionAsPairs) {
    const nlohmann::json j = to_json(ComplexQuaternion{{1, 2}, {3, 4}, {5, 6}, {7, 8}});
    EXPECT_EQ(j.dump(), "[[1.0,2.0],[3.0,4.0],[5.0,6.0],[7.0,8.0]]");
    EXPECT_EQ(max_abs_diff(complex_quaternion_from_json(j), ComplexQuaternion{{1, 2}, {3, 4}, {5, 6}, {7, 8}}), 0.0);
}

TEST(Serialize, CoeffMatrixRoundTrip) {
    const CoeffMatrix m = t_from_phi_matrix(2);
    const nlohmann::json j = to_json(m);
    EXPECT_EQ(j["from"], "B3");
    EXPECT_EQ(j["to"], "B2");
    const CoeffMatrix back = coeff_matrix_from_json(nlohmann::json::parse(j.dump()));
    EXPECT_EQ(back.entries.rows(), 9);
    EXPECT_EQ((back.entries - m.entries).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Serialize, CsvHeaderAndRows) {
    Eigen::MatrixXcd m(1, 2);
    m << std::complex<double>(0.5, -1), std::complex<double>(2, 0);
    EXPECT_EQ(matrix_to_csv(m), "row,col,re,im\n0,0,0.5,-1\n0,1,2,0\n");
}

TEST(Serialize, ReportsCarryExpectedFields) {
    const nlohmann::json r = to_json(multiplicity(GroupSpec::prism(2), 4));
    EXPECT_EQ(r["multiplicity"], 10);
    const nlohmann::json s = to_json(invariant_subspace(GroupSpec::lens(5, 1), 2));
    EXPECT_EQ(s["dimension"], 3);
    EXPECT_EQ(s["basis"]["T"].size(), 3u);
    EXPECT_EQ(s["basis"]["B3"].size(), 3u);
    EXPECT_EQ(format_double(0.1), "0.1");
}
