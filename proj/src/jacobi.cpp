#include "s3modes/jacobi.hpp"

#include <cmath>
#include <string>

#include "s3modes/error.hpp"

namespace s3modes {

namespace {

double jacobi_recurrence(int n, int a, int b, double x) {
    double p0 = 1.0;
    if (n == 0) return p0;
    double p1 = (a + 1) + 0.5 * (a + b + 2) * (x - 1.0);
    for (int k = 2; k <= n; ++k) {
        const double s = 2.0 * k + a + b;
        const double c1 = 2.0 * k * (k + a + b) * (s - 2.0);
        const double c2 = (s - 1.0) * (s * (s - 2.0) * x + static_cast<double>(a * a - b * b));
        const double c3 = 2.0 * (k + a - 1) * (k + b - 1) * s;
        const double p2 = (c2 * p1 - c3 * p0) / c1;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

}  // namespace

double jacobi_poly(int d, int a, int b, double x) {
    if (d < 0 || a + d < 0 || b + d < 0) {
        throw DomainError("jacobi_poly: unsupported parameters d=" + std::to_string(d) +
                          ", a=" + std::to_string(a) + ", b=" + std::to_string(b));
    }
    if (a >= 0 && b >= 0) return jacobi_recurrence(d, a, b, x);
    if (a < 0) {
        const int m = -a;
        // (n+b)!/(n-m+b)! vanishes (1/Gamma pole) when n-m+b < 0.
        if (d - m + b < 0) return 0.0;
        double factor = 1.0;
        for (int t = d - m + b + 1; t <= d + b; ++t) factor *= t;
        for (int t = d - m + 1; t <= d; ++t) factor /= t;
        return factor * std::pow(0.5 * (x - 1.0), m) * jacobi_poly(d - m, m, b, x);
    }
    const double reflected = jacobi_poly(d, b, a, -x);
    return (d % 2 == 0) ? reflected : -reflected;
}

}  // namespace s3modes
