#include "s3modes/quaternion.hpp"

namespace s3modes {

cdouble scalar_product_via_products(const ComplexQuaternion& a, const ComplexQuaternion& b) {
    const ComplexQuaternion s = a * b.bar() + b * a.bar();
    return 0.5 * s.c[0];
}

ComplexQuaternion null_vector(double a, double b) {
    const cdouble i(0.0, 1.0);
    return {std::cos(a), i * std::sin(b), i * std::cos(b), std::sin(a)};
}

ComplexQuaternion aux_alpha() { return {1.0, 0.0, 0.0, cdouble(0.0, 1.0)}; }
ComplexQuaternion aux_beta() { return {0.0, 1.0, cdouble(0.0, -1.0), 0.0}; }
ComplexQuaternion aux_delta() { return {0.0, -1.0, cdouble(0.0, -1.0), 0.0}; }

}  // namespace s3modes
