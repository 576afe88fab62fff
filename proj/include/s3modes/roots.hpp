#pragma once

#include <complex>

namespace s3modes {

/// The primitive (k+1)-th root of unity rho = exp(2 pi i/(k+1)) for even k.
class RootsOfUnity {
public:
    explicit RootsOfUnity(int k);

    int k() const { return k_; }
    int order() const { return k_ + 1; }
    double alpha() const { return alpha_; }
    std::complex<double> rho() const { return power(1); }

    /// rho^n, reducing n modulo k+1 before taking the exponential.
    std::complex<double> power(long long n) const;

    /// sum_{n=0}^{k} rho^{nI}, accumulated term by term.
    std::complex<double> power_sum(long long residue) const;

    /// Closed form of power_sum: (k+1) if residue = 0 mod (k+1), else 0.
    int power_sum_exact(long long residue) const;

private:
    int k_;
    double alpha_;
};

}  // namespace s3modes
