#pragma once

#include <complex>

namespace s3modes::detail {

template <typename T>
T ipow(T x, int n) {
    T result = T(1);
    while (n > 0) {
        if (n & 1) result *= x;
        x *= x;
        n >>= 1;
    }
    return result;
}

}  // namespace s3modes::detail
