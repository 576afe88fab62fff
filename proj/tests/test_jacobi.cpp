#include <cmath>

#include <gtest/gtest.h>

#include "s3modes/error.hpp"
#include "s3modes/jacobi.hpp"

using namespace s3modes;

namespace {

/// Generalized binomial z (z-1) ... (z-j+1) / j!, valid for negative z.
long double gbinom(int z, int j) {
    if (j < 0) return 0.0L;
    long double r = 1.0L;
    for (int t = 0; t < j; ++t) r *= static_cast<long double>(z - t) / (t + 1);
    return r;
}

/// Explicit sum P_n^(a,b)(x) = sum_s C(n+a, n-s) C(n+b, s) ((x-1)/2)^s ((x+1)/2)^(n-s),
/// in extended precision because the terms alternate.
double jacobi_series(int n, int a, int b, double x) {
    const long double lo = (static_cast<long double>(x) - 1) / 2, hi = (static_cast<long double>(x) + 1) / 2;
    long double sum = 0.0L;
    for (int s = 0; s <= n; ++s) sum += gbinom(n + a, n - s) * gbinom(n + b, s) * std::pow(lo, s) * std::pow(hi, n - s);
    return static_cast<double>(sum);
}

}  // namespace

TEST(Jacobi, FrozenValue) { EXPECT_NEAR(jacobi_poly(3, 2, 1, 0.3), -1903.0 / 2000.0, 1e-15); }

TEST(Jacobi, LowDegrees) {
    EXPECT_EQ(jacobi_poly(0, 3, 4, 0.2), 1.0);
    EXPECT_NEAR(jacobi_poly(1, 2, 5, 0.4), (2 + 1) + (2 + 5 + 2) * (0.4 - 1) / 2, 1e-15);
    EXPECT_NEAR(jacobi_poly(2, 0, 0, 0.5), 0.5 * (3 * 0.25 - 1), 1e-15);  // Legendre
}

TEST(Jacobi, MatchesExplicitSumForNonnegativeParameters) {
    for (int n = 0; n <= 12; ++n)
        for (int a = 0; a <= 8; ++a)
            for (int b = 0; b <= 8; ++b)
                for (double x : {-1.0, -0.83, -0.2, 0.0, 0.37, 0.91, 1.0}) {
                    const double ref = jacobi_series(n, a, b, x);
                    EXPECT_NEAR(jacobi_poly(n, a, b, x), ref, 1e-11 * std::max(1.0, std::abs(ref)))
                        << n << ' ' << a << ' ' << b << ' ' << x;
                }
}

TEST(Jacobi, MatchesExplicitSumForNegativeParameters) {
    for (int n = 0; n <= 10; ++n)
        for (int a = -n; a <= 4; ++a)
            for (int b = -n; b <= 4; ++b) {
                if (a >= 0 && b >= 0) continue;
                for (double x : {-0.9, -0.3, 0.25, 0.8}) {
                    const double ref = jacobi_series(n, a, b, x);
                    EXPECT_NEAR(jacobi_poly(n, a, b, x), ref, 1e-10 * std::max(1.0, std::abs(ref)))
                        << n << ' ' << a << ' ' << b << ' ' << x;
                }
            }
}

TEST(Jacobi, Symmetry) {
    for (int n = 0; n <= 9; ++n)
        for (double x : {-0.7, 0.1, 0.6})
            EXPECT_NEAR(jacobi_poly(n, 3, 1, -x), (n % 2 ? -1.0 : 1.0) * jacobi_poly(n, 1, 3, x), 1e-12);
}

TEST(Jacobi, RejectsInvalidDegree) {
    EXPECT_THROW(jacobi_poly(-1, 0, 0, 0.5), DomainError);
    EXPECT_THROW(jacobi_poly(2, -3, 0, 0.5), DomainError);
}
