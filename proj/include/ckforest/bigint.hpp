#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ckforest {

// All structure constants of the forest algebra are integers; coefficient
// growth is factorial, so fixed-width arithmetic is never used.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace ckforest
