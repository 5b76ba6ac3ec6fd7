#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace tokadd::oracle {

// Reference arithmetic one decimal digit at a time. Nothing here touches the
// limb machinery, so it can serve as ground truth for the limb adders.

struct DigitwiseSum {
    std::string sum;
    /// One per digit position of the longer operand.
    std::size_t digit_ops = 0;
    std::size_t carries = 0;
};

/// Schoolbook addition over decimal strings. Throws tokadd::ParseError for
/// empty input or non-digit characters, like parse_decimal.
DigitwiseSum add_digitwise_counted(std::string_view a, std::string_view b);

/// Canonical decimal sum of two digit strings.
std::string add_digitwise(std::string_view a, std::string_view b);

/// Number of bits in the binary form of a positive decimal value, found by
/// halving the digit string until it reaches zero. Throws std::domain_error
/// for a zero value and tokadd::ParseError for malformed input.
std::size_t bit_length(std::string_view decimal);

}  // namespace tokadd::oracle
