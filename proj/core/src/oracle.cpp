#include "tokadd/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "tokadd/limbcore.hpp"

namespace tokadd::oracle {

namespace {

void validate(std::string_view s) {
    if (s.empty()) {
        throw ParseError(ParseErrorKind::EmptyInput, 0, '\0');
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') {
            throw ParseError(ParseErrorKind::InvalidDigit, i, s[i]);
        }
    }
}

}  // namespace

DigitwiseSum add_digitwise_counted(std::string_view a, std::string_view b) {
    validate(a);
    validate(b);

    DigitwiseSum out;
    std::string& digits = out.sum;
    digits.reserve(std::max(a.size(), b.size()) + 1);

    std::size_t i = a.size();
    std::size_t j = b.size();
    int carry = 0;
    while (i > 0 || j > 0) {
        int sum = carry;
        if (i > 0) {
            sum += a[--i] - '0';
        }
        if (j > 0) {
            sum += b[--j] - '0';
        }
        carry = sum / 10;
        out.carries += static_cast<std::size_t>(carry);
        digits.push_back(static_cast<char>('0' + sum % 10));
        ++out.digit_ops;
    }
    if (carry != 0) {
        digits.push_back('1');
    }

    while (digits.size() > 1 && digits.back() == '0') {
        digits.pop_back();
    }
    std::reverse(digits.begin(), digits.end());
    return out;
}

std::string add_digitwise(std::string_view a, std::string_view b) {
    return add_digitwise_counted(a, b).sum;
}

std::size_t bit_length(std::string_view decimal) {
    validate(decimal);
    std::string value(decimal.substr(std::min(decimal.find_first_not_of('0'), decimal.size())));
    if (value.empty()) {
        throw std::domain_error("bit_length of zero is undefined");
    }

    std::size_t bits = 0;
    while (!value.empty()) {
        // value /= 2, digit by digit from the most significant end.
        int rem = 0;
        for (char& c : value) {
            const int cur = rem * 10 + (c - '0');
            c = static_cast<char>('0' + cur / 2);
            rem = cur % 2;
        }
        const std::size_t first = value.find_first_not_of('0');
        value.erase(0, first == std::string::npos ? value.size() : first);
        ++bits;
    }
    return bits;
}

}  // namespace tokadd::oracle
