#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tokadd {

/// One base-10^18 token of a big number. Values are always below kLimbBase.
using Limb = std::uint64_t;

inline constexpr std::size_t kLimbDigits = 18;
inline constexpr Limb kLimbBase = 1'000'000'000'000'000'000ULL;
inline constexpr Limb kLimbMax = kLimbBase - 1;

// Two limbs plus a carry must never wrap a 64-bit word.
static_assert(2 * kLimbMax + 1 > kLimbMax && 2 * kLimbMax + 1 < (Limb{1} << 63));

enum class ParseErrorKind { EmptyInput, InvalidDigit };

class ParseError : public std::invalid_argument {
public:
    ParseError(ParseErrorKind kind, std::size_t offset, char offending);

    ParseErrorKind kind() const noexcept { return kind_; }
    /// Byte offset of the offending character (0 for EmptyInput).
    std::size_t offset() const noexcept { return offset_; }
    char offending() const noexcept { return offending_; }

private:
    ParseErrorKind kind_;
    std::size_t offset_;
    char offending_;
};

/// Non-negative integer stored as base-10^18 limbs, least significant first.
///
/// A BigNumber is always normalized: at least one limb, no zero limbs above
/// the most significant nonzero one, every limb below kLimbBase.
class BigNumber {
public:
    /// Zero.
    BigNumber();

    /// Normalizes `limbs` (strips high zero limbs). Throws std::invalid_argument
    /// if any limb is >= kLimbBase.
    static BigNumber from_limbs(std::vector<Limb> limbs);

    /// from_limbs without the range check, for adders whose output limbs are
    /// below kLimbBase by construction. Asserted in debug builds.
    static BigNumber from_trusted_limbs(std::vector<Limb> limbs);

    std::span<const Limb> limbs() const noexcept { return limbs_; }
    std::size_t limb_count() const noexcept { return limbs_.size(); }
    std::size_t digit_len() const noexcept { return digit_len_; }
    bool is_zero() const noexcept { return limbs_.size() == 1 && limbs_[0] == 0; }

    friend bool operator==(const BigNumber&, const BigNumber&) = default;

private:
    explicit BigNumber(std::vector<Limb> normalized);

    std::vector<Limb> limbs_;
    std::size_t digit_len_;
};

/// Parses a string of ASCII digits. Leading zeros are accepted and dropped.
/// Throws ParseError on empty input or any non-digit character.
BigNumber parse_decimal(std::string_view text);

/// Canonical decimal rendering: no leading zeros, interior limbs zero-padded.
std::string render_decimal(const BigNumber& num);

/// Writes exactly kLimbDigits zero-padded digits of `value` to `out`.
void render_limb_padded(Limb value, char* out) noexcept;

/// Number of decimal digits of a limb value (1 for zero).
std::size_t limb_digit_count(Limb value) noexcept;

/// Number of limbs a `digits`-long operand occupies: ceil(digits / 18).
constexpr std::size_t token_count(std::size_t digits) noexcept {
    return (digits + kLimbDigits - 1) / kLimbDigits;
}

/// Strips one trailing "\n" (or "\r\n") as read from an operand file.
std::string_view strip_line_ending(std::string_view text) noexcept;

/// Canonical form of a digit string: leading zeros removed, "0" for zero.
/// Does not validate.
std::string_view canonical_digits(std::string_view digits) noexcept;

}  // namespace tokadd
