#include "s3modes/roots.hpp"

#include <numbers>
#include <string>

#include "s3modes/combinatorics.hpp"
#include "s3modes/error.hpp"

namespace s3modes {

RootsOfUnity::RootsOfUnity(int k) : k_(k), alpha_(2.0 * std::numbers::pi / (k + 1)) {
    if (k < 0 || k % 2 != 0) {
        throw DomainError("RootsOfUnity: k must be even and nonnegative, got " + std::to_string(k));
    }
}

std::complex<double> RootsOfUnity::power(long long n) const {
    return std::polar(1.0, alpha_ * positive_mod(n, order()));
}

std::complex<double> RootsOfUnity::power_sum(long long residue) const {
    std::complex<double> sum = 0.0;
    for (int n = 0; n <= k_; ++n) sum += power(static_cast<long long>(n) * residue);
    return sum;
}

int RootsOfUnity::power_sum_exact(long long residue) const {
    return positive_mod(residue, order()) == 0 ? order() : 0;
}

}  // namespace s3modes
