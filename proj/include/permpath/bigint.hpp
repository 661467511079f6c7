#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace permpath {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Binomial coefficient with the usual out-of-range convention: 0 whenever
// k < 0, n < 0 or k > n.
inline BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt c = 1;
    for (long long i = 1; i <= k; ++i) {
        c *= n - k + i;
        c /= i;  // exact at every step
    }
    return c;
}

inline BigInt pow2(long long e) {
    BigInt r = 1;
    return r << e;
}

}  // namespace permpath
