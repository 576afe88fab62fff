#include "s3modes/combinatorics.hpp"

#include <limits>
#include <numeric>
#include <string>

#include "s3modes/error.hpp"

namespace s3modes {

std::uint64_t exact_factorial(int n) {
    if (n < 0 || n > 20) {
        throw DomainError("exact_factorial: n = " + std::to_string(n) + " outside [0, 20]");
    }
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t exact_binomial(int n, int r) {
    if (n < 0) throw DomainError("exact_binomial: negative n");
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    // C(n, i) = C(n, i-1) (n-i+1) / i stays integral at every step.
    unsigned __int128 c = 1;
    for (int i = 1; i <= r; ++i) {
        c = c * static_cast<unsigned>(n - i + 1) / static_cast<unsigned>(i);
        if (c > std::numeric_limits<std::uint64_t>::max()) {
            throw DomainError("exact_binomial: C(" + std::to_string(n) + ", " + std::to_string(r) +
                              ") overflows 64 bits");
        }
    }
    return static_cast<std::uint64_t>(c);
}

int gcd(int a, int b) { return std::gcd(a, b); }

}  // namespace s3modes
