#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "goldbase/phicodec/phi_expansion.hpp"

namespace goldbase::phicodec {

enum class ParseErrorKind {
    empty_input,
    foreign_character,
    multiple_points,
    adjacent_ones,
    leading_zero,
    empty_part,
};

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ParseErrorKind kind() const { return kind_; }

private:
    ParseErrorKind kind_;
};

// Rendering "integerpart.fractionalpart" of an expansion.  The integer part
// covers positions down to 0 ("0" when all digits left of the point vanish),
// the fractional part positions -1, -2, ...; it is empty when no negative
// position carries a digit.
class DigitWord {
public:
    // Validates: digits 0/1 only, no adjacent 1s across the whole word, no
    // leading 0 in a multi-digit integer part, neither part empty unless the
    // fractional part is absent.
    DigitWord(std::string integer_part, std::string fractional_part);

    static DigitWord from_expansion(const PhiExpansion& e);
    PhiExpansion to_expansion() const;

    const std::string& integer_part() const { return int_; }
    const std::string& fractional_part() const { return frac_; }

    // "100.01"; just "100" when the fractional part is empty.
    std::string str() const;

    bool operator==(const DigitWord&) const = default;

private:
    std::string int_;
    std::string frac_;
};

std::string format(const PhiExpansion& e);

// Accepts "[01]+" or "[01]+.[01]+"; the midpoint dot may also be the middle
// dot character U+00B7.  Each malformed shape raises a distinct ParseError.
PhiExpansion parse(std::string_view text);

class SurgeryError : public std::runtime_error {
public:
    SurgeryError(std::string end, const std::string& what)
        : std::runtime_error(what), end_(std::move(end)) {}
    // "prefix" or "suffix": which end failed its precondition.
    const std::string& end() const { return end_; }

private:
    std::string end_;
};

// Free-group style boundary rewrite: the integer part must start with
// strip_prefix (replaced by new_prefix) and the fractional part must end with
// strip_suffix (replaced by new_suffix).  The radix point stays attached to
// position 0.  A violated precondition raises SurgeryError naming the end.
DigitWord surgery(const DigitWord& w, std::string_view strip_prefix,
                  std::string_view new_prefix, std::string_view strip_suffix,
                  std::string_view new_suffix);

}  // namespace goldbase::phicodec
