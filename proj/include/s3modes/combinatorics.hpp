#pragma once

#include <cstdint>

namespace s3modes {

/// Exact n! for 0 <= n <= 20; throws DomainError outside that range.
std::uint64_t exact_factorial(int n);

/// Exact binomial coefficient C(n, r) for n >= 0. Returns 0 when r < 0 or
/// r > n. Throws DomainError on negative n or when the value does not fit
/// in 64 bits.
std::uint64_t exact_binomial(int n, int r);

int gcd(int a, int b);

/// Mathematical modulo, result in [0, m).
constexpr int positive_mod(long long a, int m) {
    long long r = a % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace s3modes
