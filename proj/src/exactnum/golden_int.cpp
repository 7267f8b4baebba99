#include "goldbase/exactnum/golden_int.hpp"

#include <vector>

namespace goldbase::exactnum {

int golden_sign(const GoldenInt& x) {
    if (x.a == 0 && x.b == 0) return 0;
    BigInt s = 2 * x.a + x.b;
    const BigInt& t = x.b;
    int ss = s.sign();
    int ts = t.sign();
    if (ss >= 0 && ts >= 0) return 1;
    if (ss <= 0 && ts <= 0) return -1;
    // Opposite strict signs: s + t*sqrt(5) > 0 iff the positive term wins.
    BigInt s2 = s * s;
    BigInt t2 = 5 * t * t;
    if (ts > 0) return t2 > s2 ? 1 : -1;
    return s2 > t2 ? 1 : -1;
}

namespace {

constexpr long long kCacheRange = 256;

// Table of phi^i for i in [-kCacheRange, kCacheRange], built once.
const std::vector<GoldenInt>& phi_table() {
    static const std::vector<GoldenInt> table = [] {
        std::vector<GoldenInt> t(2 * kCacheRange + 1);
        // F(i) by the forward recurrence, then mirrored to negative i.
        std::vector<BigInt> f(kCacheRange + 2);
        f[0] = 0;
        f[1] = 1;
        for (long long i = 2; i <= kCacheRange + 1; ++i) f[i] = f[i - 1] + f[i - 2];
        auto fib_at = [&](long long i) -> BigInt {
            if (i >= 0) return f[i];
            return (-i) % 2 == 0 ? BigInt(-f[-i]) : f[-i];
        };
        for (long long i = -kCacheRange; i <= kCacheRange; ++i)
            t[i + kCacheRange] = GoldenInt(fib_at(i - 1), fib_at(i));
        return t;
    }();
    return table;
}

}  // namespace

GoldenInt phi_pow(long long i) {
    if (i >= -kCacheRange && i <= kCacheRange) return phi_table()[i + kCacheRange];
    return {fib(i - 1), fib(i)};
}

std::string to_string(const GoldenInt& x) {
    if (x.is_zero()) return "0";
    std::string out;
    if (x.a != 0) out = x.a.str();
    if (x.b != 0) {
        if (out.empty()) {
            out = x.b.str() + "*phi";
        } else {
            out += (x.b > 0 ? " + " : " - ") + abs(x.b).str() + "*phi";
        }
    }
    return out;
}

}  // namespace goldbase::exactnum
