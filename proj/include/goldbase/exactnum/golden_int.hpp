#pragma once

#include <string>

#include "goldbase/exactnum/fibonacci.hpp"

namespace goldbase::exactnum {

// Element a + b*phi of the ring Z[phi], phi = (1+sqrt(5))/2.
//
// Multiplication uses phi^2 = phi + 1, so the representation stays in
// coordinates (a, b).  Because phi is irrational the coordinates of a value
// are unique and equality is componentwise.
struct GoldenInt {
    BigInt a;
    BigInt b;

    GoldenInt() : a(0), b(0) {}
    GoldenInt(BigInt a_, BigInt b_) : a(std::move(a_)), b(std::move(b_)) {}

    bool operator==(const GoldenInt&) const = default;

    bool is_zero() const { return a == 0 && b == 0; }

    GoldenInt operator-() const { return {-a, -b}; }

    GoldenInt& operator+=(const GoldenInt& o) {
        a += o.a;
        b += o.b;
        return *this;
    }
    GoldenInt& operator-=(const GoldenInt& o) {
        a -= o.a;
        b -= o.b;
        return *this;
    }

    friend GoldenInt operator+(GoldenInt x, const GoldenInt& y) { return x += y; }
    friend GoldenInt operator-(GoldenInt x, const GoldenInt& y) { return x -= y; }

    // (a+b*phi)(c+d*phi) = (ac+bd) + (ad+bc+bd)*phi
    friend GoldenInt operator*(const GoldenInt& x, const GoldenInt& y) {
        BigInt bd = x.b * y.b;
        return {x.a * y.a + bd, x.a * y.b + x.b * y.a + bd};
    }
};

// Spec-level aliases for the ring operations.
inline GoldenInt golden_add(const GoldenInt& x, const GoldenInt& y) { return x + y; }
inline GoldenInt golden_mul(const GoldenInt& x, const GoldenInt& y) { return x * y; }
inline GoldenInt golden_neg(const GoldenInt& x) { return -x; }

// Exact sign of the real number a + b*phi, in {-1, 0, +1}.
//
// With s = 2a + b and t = b the value equals (s + t*sqrt(5))/2; when s and t
// have opposite strict signs the decision reduces to comparing s^2 with 5t^2
// (equality is impossible for (a,b) != (0,0) since sqrt(5) is irrational).
int golden_sign(const GoldenInt& x);

// phi^i = F(i-1) + F(i)*phi for any integer i (negative allowed).
GoldenInt phi_pow(long long i);

// "a + b*phi" with zero terms omitted; "0" for zero.
std::string to_string(const GoldenInt& x);

}  // namespace goldbase::exactnum
