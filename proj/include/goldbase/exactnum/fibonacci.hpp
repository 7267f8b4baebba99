#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace goldbase::exactnum {

using BigInt = boost::multiprecision::cpp_int;

// Fibonacci with F(0) = 0, F(1) = 1, extended to negative indices by
// F(-n) = (-1)^{n+1} F(n).
BigInt fib(long long n);

// Lucas numbers: L(0) = 2, L(1) = 1, L(n) = L(n-1) + L(n-2).  Requires n >= 0.
BigInt lucas(long long n);

}  // namespace goldbase::exactnum
