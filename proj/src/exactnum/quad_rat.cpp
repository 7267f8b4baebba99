#include "goldbase/exactnum/quad_rat.hpp"

#include <cmath>
#include <stdexcept>

namespace goldbase::exactnum {

QuadRat QuadRat::inverse() const {
    if (is_zero()) throw std::domain_error("QuadRat: division by zero");
    BigRat norm = p_ * p_ - 5 * q_ * q_;
    return {p_ / norm, -q_ / norm};
}

int QuadRat::sign() const {
    int ps = p_.sign();
    int qs = q_.sign();
    if (ps == 0) return qs;
    if (qs == 0) return ps;
    if (ps == qs) return ps;
    // Opposite strict signs; p^2 = 5q^2 would make sqrt(5) rational.
    BigRat p2 = p_ * p_;
    BigRat q2 = 5 * q_ * q_;
    if (qs > 0) return q2 > p2 ? 1 : -1;
    return p2 > q2 ? 1 : -1;
}

double QuadRat::to_double() const {
    return p_.convert_to<double>() + q_.convert_to<double>() * std::sqrt(5.0);
}

namespace {

std::string rat_str(const BigRat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

}  // namespace

std::string QuadRat::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (p_ != 0) out = rat_str(p_);
    if (q_ != 0) {
        std::string coeff = rat_str(abs(q_)) + "*sqrt(5)";
        if (out.empty()) {
            out = (q_ < 0 ? "-" : "") + coeff;
        } else {
            out += (q_ > 0 ? " + " : " - ") + coeff;
        }
    }
    return out;
}

QuadRat embed(const GoldenInt& x) {
    BigRat half(1, 2);
    return {BigRat(x.a) + half * BigRat(x.b), half * BigRat(x.b)};
}

}  // namespace goldbase::exactnum
