#include "goldbase/exactnum/fibonacci.hpp"

#include <stdexcept>
#include <utility>

namespace goldbase::exactnum {

namespace {

// Fast doubling: F(2k) = F(k)(2F(k+1) - F(k)), F(2k+1) = F(k)^2 + F(k+1)^2.
// Returns (F(n), F(n+1)) for n >= 0.
std::pair<BigInt, BigInt> fib_pair(unsigned long long n) {
    if (n == 0) return {0, 1};
    auto [a, b] = fib_pair(n >> 1);
    BigInt c = a * (2 * b - a);
    BigInt d = a * a + b * b;
    if (n & 1) return {d, c + d};
    return {c, d};
}

}  // namespace

BigInt fib(long long n) {
    if (n >= 0) return fib_pair(static_cast<unsigned long long>(n)).first;
    BigInt f = fib_pair(static_cast<unsigned long long>(-n)).first;
    return (-n) % 2 == 0 ? BigInt(-f) : f;
}

BigInt lucas(long long n) {
    if (n < 0) throw std::domain_error("lucas: negative index");
    return fib(n - 1) + fib(n + 1);
}

}  // namespace goldbase::exactnum
