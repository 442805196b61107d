// Exact integer arithmetic used throughout: coefficients, word counts, censuses.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fpf {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(long n) {
    BigInt r = 1;
    for (long k = 2; k <= n; ++k) r *= k;
    return r;
}

inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

}  // namespace fpf
