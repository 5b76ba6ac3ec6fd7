#include <string>
#include <vector>

#include "doctest.h"
#include "test_support.hpp"
#include "tokadd/limbcore.hpp"

using namespace tokadd;
using tokadd::testing::Gen;
using tokadd::testing::strip_zeros;

namespace {

std::vector<Limb> limbs_of(const BigNumber& n) {
    return {n.limbs().begin(), n.limbs().end()};
}

}  // namespace

TEST_CASE("parse_decimal: zero") {
    const BigNumber n = parse_decimal("0");
    CHECK(limbs_of(n) == std::vector<Limb>{0});
    CHECK(n.digit_len() == 1);
    CHECK(n.is_zero());
}

TEST_CASE("parse_decimal: one maximal token") {
    const BigNumber n = parse_decimal(std::string(18, '9'));
    CHECK(limbs_of(n) == std::vector<Limb>{kLimbMax});
    CHECK(n.digit_len() == 18);
}

TEST_CASE("parse_decimal: tokens cut from the right") {
    const BigNumber n = parse_decimal("12345678901234567890");
    CHECK(limbs_of(n) == std::vector<Limb>{345678901234567890ULL, 12});
    CHECK(n.digit_len() == 20);
}

TEST_CASE("parse_decimal: leading zeros are absorbed") {
    CHECK(parse_decimal("000123") == parse_decimal("123"));
    CHECK(parse_decimal("0000") == BigNumber{});
    CHECK(parse_decimal("0000").digit_len() == 1);
    const BigNumber n = parse_decimal(std::string(40, '0') + "1" + std::string(18, '0'));
    CHECK(limbs_of(n) == std::vector<Limb>{0, 1});
    CHECK(n.digit_len() == 19);
}

TEST_CASE("parse_decimal: errors") {
    SUBCASE("empty") {
        try {
            parse_decimal("");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.kind() == ParseErrorKind::EmptyInput);
        }
    }
    SUBCASE("invalid digit reports its offset") {
        try {
            parse_decimal("12x4");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.kind() == ParseErrorKind::InvalidDigit);
            CHECK(e.offset() == 2);
            CHECK(e.offending() == 'x');
            CHECK(std::string(e.what()).find("offset 2") != std::string::npos);
        }
    }
    SUBCASE("leftmost bad byte wins in long input") {
        std::string s(100, '7');
        s[3] = '.';
        s[90] = 'z';
        try {
            parse_decimal(s);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.offset() == 3);
        }
    }
    SUBCASE("signs, whitespace, prefixes") {
        for (const char* bad : {"-5", "+5", " 5", "5 ", "0x1f", "1_000", "1\n", "\xc2\xb9"}) {
            CAPTURE(bad);
            CHECK_THROWS_AS(parse_decimal(bad), ParseError);
        }
    }
}

TEST_CASE("render_decimal") {
    CHECK(render_decimal(BigNumber{}) == "0");
    CHECK(render_decimal(BigNumber::from_limbs({1, 1})) == "1000000000000000001");
    CHECK(render_decimal(BigNumber::from_limbs({345678901234567890ULL, 12})) == "12345678901234567890");
    CHECK(render_decimal(BigNumber::from_limbs({0, 0, 7})) == "7" + std::string(36, '0'));
    CHECK(render_decimal(BigNumber::from_limbs({kLimbMax})) == std::string(18, '9'));
}

TEST_CASE("BigNumber::from_limbs normalizes and validates") {
    CHECK(limbs_of(BigNumber::from_limbs({5, 0, 0})) == std::vector<Limb>{5});
    CHECK(BigNumber::from_limbs({}).is_zero());
    CHECK(BigNumber::from_limbs({0, 0}).digit_len() == 1);
    CHECK_THROWS_AS(BigNumber::from_limbs({kLimbBase}), std::invalid_argument);
}

TEST_CASE("token_count") {
    CHECK(token_count(1) == 1);
    CHECK(token_count(10) == 1);
    CHECK(token_count(18) == 1);
    CHECK(token_count(19) == 2);
    CHECK(token_count(32) == 2);
    CHECK(token_count(101) == 6);
    CHECK(token_count(1000) == 56);
}

TEST_CASE("limb_digit_count") {
    CHECK(limb_digit_count(0) == 1);
    CHECK(limb_digit_count(9) == 1);
    CHECK(limb_digit_count(10) == 2);
    CHECK(limb_digit_count(kLimbMax) == 18);
    CHECK(limb_digit_count(100000000000000000ULL) == 18);
}

TEST_CASE("strip_line_ending and canonical_digits") {
    CHECK(strip_line_ending("123\n") == "123");
    CHECK(strip_line_ending("123\r\n") == "123");
    CHECK(strip_line_ending("123") == "123");
    CHECK(strip_line_ending("123\n\n") == "123\n");
    CHECK(canonical_digits("00120") == "120");
    CHECK(canonical_digits("000") == "0");
}

TEST_CASE("property: round trip and canonical form") {
    Gen gen(0x11);
    for (int trial = 0; trial < 2000; ++trial) {
        std::string s = gen.digits(gen.between(1, 400));
        if (gen.coin()) {
            s.insert(0, gen.between(1, 40), '0');
        }
        CAPTURE(s);
        const BigNumber n = parse_decimal(s);
        const std::string canon = strip_zeros(s);
        REQUIRE(render_decimal(n) == canon);
        CHECK(n.limb_count() == token_count(canon.size()));
        CHECK(n.digit_len() == canon.size());
        CHECK(n.digit_len() == kLimbDigits * (n.limb_count() - 1) + limb_digit_count(n.limbs().back()));
        CHECK((n.limbs().back() != 0 || n.is_zero()));
        for (const Limb l : n.limbs()) {
            CHECK(l < kLimbBase);
        }
    }
}
