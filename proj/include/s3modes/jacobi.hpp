#pragma once

namespace s3modes {

/// Jacobi polynomial P^{(a,b)}_d(x) for integer parameters.
///
/// Nonnegative a and b use the three-term recurrence. Negative integer
/// parameters are accepted when a + d >= 0 and b + d >= 0; they are reduced
/// exactly to nonnegative ones through
///   P^{(-m,b)}_n(x) = (n-m)!(n+b)!/(n!(n-m+b)!) ((x-1)/2)^m P^{(m,b)}_{n-m}(x)
/// and the reflection P^{(a,b)}_n(x) = (-1)^n P^{(b,a)}_n(-x).
/// Throws DomainError outside that range.
double jacobi_poly(int d, int a, int b, double x);

}  // namespace s3modes
