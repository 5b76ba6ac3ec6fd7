#pragma once

// Hand-rolled generators for the property tests. Independent of
// tokadd::bench so the generators under test are not also the test inputs.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>

namespace tokadd::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::size_t between(std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
    }

    bool coin() { return between(0, 1) == 1; }

    /// `len` digits, no leading zero unless len == 1.
    std::string digits(std::size_t len) {
        std::string s(len, '0');
        for (auto& c : s) {
            c = static_cast<char>('0' + between(0, 9));
        }
        if (len > 1 && s[0] == '0') {
            s[0] = static_cast<char>('1' + between(0, 8));
        }
        return s;
    }

    /// Digits drawn mostly from {0, 9} so limb sums sit on the carry boundary.
    std::string carry_heavy(std::size_t len) {
        std::string s(len, '9');
        for (auto& c : s) {
            const auto roll = between(0, 9);
            c = roll < 7 ? '9' : (roll < 9 ? '0' : static_cast<char>('0' + between(0, 9)));
        }
        if (len > 1 && s[0] == '0') {
            s[0] = '9';
        }
        return s;
    }

    /// Digits in [0, lim].
    std::string bounded(std::size_t len, int lim) {
        std::string s(len, '0');
        for (auto& c : s) {
            c = static_cast<char>('0' + between(0, static_cast<std::size_t>(lim)));
        }
        if (len > 1 && s[0] == '0') {
            s[0] = '1';
        }
        return s;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline std::string strip_zeros(const std::string& s) {
    const auto first = s.find_first_not_of('0');
    return first == std::string::npos ? std::string("0") : s.substr(first);
}

}  // namespace tokadd::testing
