#include "tokadd/limbcore.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstring>

namespace tokadd {

namespace {

std::string describe(ParseErrorKind kind, std::size_t offset, char offending) {
    if (kind == ParseErrorKind::EmptyInput) {
        return "empty input";
    }
    std::string msg = "invalid digit ";
    const auto byte = static_cast<unsigned char>(offending);
    if (byte >= 0x20 && byte < 0x7f) {
        msg += '\'';
        msg += offending;
        msg += '\'';
    } else {
        static constexpr char hex[] = "0123456789abcdef";
        msg += "0x";
        msg += hex[byte >> 4];
        msg += hex[byte & 0xf];
    }
    msg += " at offset ";
    msg += std::to_string(offset);
    return msg;
}

constexpr std::array<char, 40000> make_digit_quads() {
    std::array<char, 40000> quads{};
    for (int i = 0; i < 10000; ++i) {
        quads[4 * i] = static_cast<char>('0' + i / 1000);
        quads[4 * i + 1] = static_cast<char>('0' + i / 100 % 10);
        quads[4 * i + 2] = static_cast<char>('0' + i / 10 % 10);
        quads[4 * i + 3] = static_cast<char>('0' + i % 10);
    }
    return quads;
}

constexpr auto kDigitQuads = make_digit_quads();

// Nine zero-padded digits of v < 10^9.
void render_nine(std::uint32_t v, char* out) noexcept {
    const std::uint32_t low8 = v % 100'000'000;
    out[0] = static_cast<char>('0' + v / 100'000'000);
    std::memcpy(out + 1, &kDigitQuads[4 * (low8 / 10'000)], 4);
    std::memcpy(out + 5, &kDigitQuads[4 * (low8 % 10'000)], 4);
}

Limb parse_chunk(std::string_view chunk) noexcept {
    Limb value = 0;
    for (const char c : chunk) {
        value = value * 10 + static_cast<Limb>(c - '0');
    }
    return value;
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, std::size_t offset, char offending)
    : std::invalid_argument(describe(kind, offset, offending)),
      kind_(kind),
      offset_(offset),
      offending_(offending) {}

BigNumber::BigNumber() : limbs_{0}, digit_len_(1) {}

BigNumber::BigNumber(std::vector<Limb> normalized) : limbs_(std::move(normalized)) {
    digit_len_ = kLimbDigits * (limbs_.size() - 1) + limb_digit_count(limbs_.back());
}

BigNumber BigNumber::from_limbs(std::vector<Limb> limbs) {
    if (std::any_of(limbs.begin(), limbs.end(), [](Limb l) { return l >= kLimbBase; })) {
        throw std::invalid_argument("limb value out of range [0, 10^18)");
    }
    return from_trusted_limbs(std::move(limbs));
}

BigNumber BigNumber::from_trusted_limbs(std::vector<Limb> limbs) {
    assert(std::none_of(limbs.begin(), limbs.end(), [](Limb l) { return l >= kLimbBase; }));
    while (limbs.size() > 1 && limbs.back() == 0) {
        limbs.pop_back();
    }
    if (limbs.empty()) {
        limbs.push_back(0);
    }
    return BigNumber(std::move(limbs));
}

BigNumber parse_decimal(std::string_view text) {
    if (text.empty()) {
        throw ParseError(ParseErrorKind::EmptyInput, 0, '\0');
    }

    // Chunks are cut from the right; the error must name the leftmost bad byte.
    const auto bad = std::find_if(text.begin(), text.end(), [](char c) { return c < '0' || c > '9'; });
    if (bad != text.end()) {
        throw ParseError(ParseErrorKind::InvalidDigit, static_cast<std::size_t>(bad - text.begin()), *bad);
    }

    const std::size_t skipped = text.find_first_not_of('0');
    if (skipped == std::string_view::npos) {
        return BigNumber{};
    }
    const std::string_view digits = text.substr(skipped);

    std::vector<Limb> limbs;
    limbs.reserve(token_count(digits.size()));
    std::size_t end = digits.size();
    while (end > 0) {
        const std::size_t begin = end > kLimbDigits ? end - kLimbDigits : 0;
        limbs.push_back(parse_chunk(digits.substr(begin, end - begin)));
        end = begin;
    }
    return BigNumber::from_trusted_limbs(std::move(limbs));
}

void render_limb_padded(Limb value, char* out) noexcept {
    render_nine(static_cast<std::uint32_t>(value / 1'000'000'000ULL), out);
    render_nine(static_cast<std::uint32_t>(value % 1'000'000'000ULL), out + 9);
}

std::size_t limb_digit_count(Limb value) noexcept {
    std::size_t n = 1;
    while (value >= 10) {
        value /= 10;
        ++n;
    }
    return n;
}

std::string render_decimal(const BigNumber& num) {
    const auto limbs = num.limbs();
    std::string out(num.digit_len(), '0');

    char buf[kLimbDigits];
    render_limb_padded(limbs.back(), buf);
    const std::size_t lead = limb_digit_count(limbs.back());
    std::memcpy(out.data(), buf + (kLimbDigits - lead), lead);

    char* cursor = out.data() + lead;
    for (std::size_t i = limbs.size() - 1; i-- > 0;) {
        render_limb_padded(limbs[i], cursor);
        cursor += kLimbDigits;
    }
    return out;
}

std::string_view strip_line_ending(std::string_view text) noexcept {
    if (!text.empty() && text.back() == '\n') {
        text.remove_suffix(1);
        if (!text.empty() && text.back() == '\r') {
            text.remove_suffix(1);
        }
    }
    return text;
}

std::string_view canonical_digits(std::string_view digits) noexcept {
    const std::size_t first = digits.find_first_not_of('0');
    if (first == std::string_view::npos) {
        return digits.empty() ? digits : std::string_view("0");
    }
    return digits.substr(first);
}

}  // namespace tokadd
