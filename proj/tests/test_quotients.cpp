#include <cstdio>
#include <fstream>
#include <numbers>

#include <gtest/gtest.h>

#include "s3modes/combinatorics.hpp"
#include "s3modes/error.hpp"
#include "s3modes/quotients.hpp"
#include "s3modes/rotations.hpp"

using namespace s3modes;

namespace {

/// Brute-force count of (m1, m2) with m1 + m2 + q (m2 - m1) = 0 mod p.
int count_lens(int p, int q, int k) {
    int n = 0;
    for (int a = 0; a <= k; ++a)
        for (int b = 0; b <= k; ++b) {
            const int two_m1 = 2 * a - k, two_m2 = 2 * b - k;
            const int ell = (two_m1 + two_m2) / 2, m = (two_m2 - two_m1) / 2;
            if (positive_mod(ell + q * m, p) == 0) ++n;
        }
    return n;
}

}  // namespace

TEST(Groups, Orders) {
    EXPECT_EQ(close_group({lens_rotation(5, 1)}).order(), 5);
    EXPECT_EQ(close_group({lens_rotation(7, 3)}).order(), 7);
    for (int P : {2, 3, 4}) {
        const auto [a, b] = prism_generators(P);
        EXPECT_EQ(close_group({a, b}).order(), 4 * P);
    }
}

TEST(Lens, KnownValue) {
    const MultiplicityReport r = multiplicity(GroupSpec::lens(5, 1), 2);
    EXPECT_EQ(r.multiplicity, 3);
    EXPECT_EQ(r.closed_form.value(), 3);
    EXPECT_EQ(lens_modes(5, 1, 2).size(), 3u);
}

TEST(Lens, RankMatchesCountingCondition) {
    for (const auto& [p, q] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {5, 2}, {7, 3}}) {
        for (int k = 0; k <= 6; ++k) {
            const MultiplicityReport r = multiplicity(GroupSpec::lens(p, q), k);
            EXPECT_EQ(r.projector_rank, count_lens(p, q, k)) << p << ',' << q << " k=" << k;
            EXPECT_TRUE(r.closed_form_agrees);
        }
    }
}

TEST(Prism, KnownValueAndDiscrepancy) {
    const MultiplicityReport r = multiplicity(GroupSpec::prism(2), 4);
    EXPECT_EQ(r.multiplicity, 10);
    EXPECT_EQ(r.published.value(), 10);
    EXPECT_TRUE(r.published_agrees);
    // k/2 odd: the m2 = 0 combinations cancel, so the printed formula overcounts.
    const MultiplicityReport odd_half = multiplicity(GroupSpec::prism(2), 2);
    EXPECT_EQ(odd_half.projector_rank, 0);
    EXPECT_EQ(odd_half.closed_form.value(), 0);
    EXPECT_FALSE(odd_half.published_agrees);
    // -1 lies in the group, so odd levels carry no invariants.
    EXPECT_EQ(multiplicity(GroupSpec::prism(3), 5).projector_rank, 0);
}

TEST(Prism, ConstructionMatchesRank) {
    for (int P : {2, 3})
        for (int k = 0; k <= 8; k += 2) {
            const MultiplicityReport r = multiplicity(GroupSpec::prism(P), k);
            EXPECT_EQ(r.projector_rank, static_cast<int>(prism_modes(P, k).size())) << "P=" << P << " k=" << k;
        }
}

TEST(Subspace, OrthonormalAndConsistent) {
    const InvariantSubspace s = invariant_subspace(GroupSpec::prism(2), 4);
    ASSERT_EQ(s.dimension, 10);
    ASSERT_EQ(s.basis_t.size(), 10u);
    ASSERT_EQ(s.basis_b3.size(), 10u);
    for (std::size_t a = 0; a < s.basis_t.size(); ++a)
        for (std::size_t b = 0; b < s.basis_t.size(); ++b)
            EXPECT_NEAR(std::abs(s.basis_t[a].dot(s.basis_t[b])), a == b ? 1.0 : 0.0, 1e-10);
    const InvariantSubspace odd = invariant_subspace(GroupSpec::lens(3, 1), 3);
    EXPECT_TRUE(odd.basis_b3.empty());
    EXPECT_EQ(odd.dimension, count_lens(3, 1, 3));
}

TEST(Spec, ParsingAndValidation) {
    EXPECT_NO_THROW(parse_group_spec("lens:5,2").validate());
    EXPECT_NO_THROW(parse_group_spec("prism:3").validate());
    EXPECT_THROW(parse_group_spec("lens:4,2").validate(), DomainError);
    EXPECT_THROW(parse_group_spec("lens:5,5").validate(), DomainError);
    EXPECT_THROW(parse_group_spec("prism:1").validate(), DomainError);
    EXPECT_THROW(parse_group_spec("torus"), DomainError);

    const std::string path = "custom_group_test.json";
    {
        std::ofstream f(path);
        f.precision(17);
        const double c = std::cos(std::numbers::pi / 3), s = std::sin(std::numbers::pi / 3);
        f << "{\"generators\": [{\"q_left\": [" << c << ",0,0," << s << "], \"q_right\": [1,0,0,0]}]}";
    }
    const GroupSpec custom = parse_group_spec(path);
    std::remove(path.c_str());
    EXPECT_EQ(custom.generators().size(), 1u);
    EXPECT_EQ(close_group(custom.generators()).order(), 6);
    // (e^{j3 pi/3}, 1) is the lens rotation with psi1 = psi2 = pi/3, i.e. L(6, 1).
    EXPECT_EQ(multiplicity(custom, 4).projector_rank, multiplicity(GroupSpec::lens(6, 1), 4).projector_rank);
}

TEST(Lens, GeneratorOrderAndSmallCases) {
    const Rotation g = lens_rotation(2, 1);
    EXPECT_TRUE(rotation_compose(g, g).same_element(Rotation::identity()));
    for (int p : {3, 5, 7}) {
        const Rotation h = lens_rotation(p, 1);
        Rotation power = h;
        for (int i = 1; i < p; ++i) power = rotation_compose(power, h);
        EXPECT_TRUE(power.same_element(Rotation::identity()));
    }
    EXPECT_EQ(multiplicity(GroupSpec::lens(2, 1), 1).projector_rank, 0);
    EXPECT_EQ(lens_modes(2, 1, 1).size(), 0u);
    EXPECT_THROW(lens_rotation(6, 3), DomainError);
}
