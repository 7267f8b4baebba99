#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "goldbase/exactnum/golden_int.hpp"

namespace goldbase::exactnum {

using BigRat = boost::multiprecision::cpp_rational;

// Element p + q*sqrt(5) of the field Q(sqrt(5)), with rational p, q kept in
// canonical lowest terms by the underlying rational type.
class QuadRat {
public:
    QuadRat() = default;
    QuadRat(BigRat p, BigRat q) : p_(std::move(p)), q_(std::move(q)) {}
    QuadRat(long long p) : p_(p) {}  // NOLINT(google-explicit-constructor)

    static QuadRat sqrt5() { return {0, 1}; }

    const BigRat& rational_part() const { return p_; }
    const BigRat& sqrt5_coeff() const { return q_; }

    bool operator==(const QuadRat&) const = default;

    bool is_zero() const { return p_ == 0 && q_ == 0; }

    QuadRat operator-() const { return {-p_, -q_}; }

    QuadRat& operator+=(const QuadRat& o) {
        p_ += o.p_;
        q_ += o.q_;
        return *this;
    }
    QuadRat& operator-=(const QuadRat& o) {
        p_ -= o.p_;
        q_ -= o.q_;
        return *this;
    }
    friend QuadRat operator+(QuadRat x, const QuadRat& y) { return x += y; }
    friend QuadRat operator-(QuadRat x, const QuadRat& y) { return x -= y; }

    // (p+q*sqrt5)(r+s*sqrt5) = (pr+5qs) + (ps+qr)*sqrt5
    friend QuadRat operator*(const QuadRat& x, const QuadRat& y) {
        return {x.p_ * y.p_ + 5 * x.q_ * y.q_, x.p_ * y.q_ + x.q_ * y.p_};
    }

    // 1/x = conj(x) / (p^2 - 5 q^2); the norm vanishes only at zero.
    QuadRat inverse() const;

    friend QuadRat operator/(const QuadRat& x, const QuadRat& y) { return x * y.inverse(); }

    // Exact sign of the real number p + q*sqrt(5).
    int sign() const;

    double to_double() const;

    // Canonical text form: "p/q + r/s*sqrt(5)" with zero terms omitted,
    // e.g. "1/4 - 1/20*sqrt(5)", "1/10*sqrt(5)", "1/2", "0".
    std::string str() const;

private:
    BigRat p_;
    BigRat q_;
};

// Ring embedding Z[phi] -> Q(sqrt(5)): a + b*phi = (a + b/2) + (b/2)*sqrt(5).
QuadRat embed(const GoldenInt& x);

inline std::string to_string(const QuadRat& x) { return x.str(); }

}  // namespace goldbase::exactnum
