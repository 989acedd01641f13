#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "core/errors.hpp"
#include "core/shiftdyn.hpp"
#include "core/words.hpp"

using namespace qnp;
using namespace qnp::shiftdyn;

namespace {
BitString bs(const char* s) {
    return BitString::parse(s);
}
}  // namespace

TEST_CASE("twisted shift") {
    CHECK(twisted_shift(bs("10010")).str() == "11010");
    CHECK(twisted_shift(bs("100010")).str() == "111010");
    CHECK(twisted_shift(bs("1111")).str() == "1111");
    // always lands on a string starting with 1
    for (std::uint64_t v = 0; v < (1ull << 10); ++v)
        CHECK(twisted_shift(BitString(v, 10)).bit(0) == 1);
}

TEST_CASE("extended twisted shift") {
    CHECK(extended_twisted_shift(SignedBitString::parse("1001-")).str() == "1100+");
    CHECK(extended_twisted_shift(SignedBitString::parse("100011-")).str() == "111000+");
    CHECK(extended_twisted_shift(SignedBitString::parse("1111+")).str() == "1111+");
    // forgetting the sign recovers plain iteration
    for (std::uint64_t v = 0; v < (1ull << 8); ++v) {
        SignedBitString x{BitString(v, 8), Sign::Minus};
        CHECK(extended_twisted_shift(x).word == twisted_shift(x.word));
    }
}

TEST_CASE("plain orbit") {
    auto orbit = f_orbit(bs("100010"));
    REQUIRE(orbit.size() == 6);
    const char* expect[] = {"100010", "111010", "110101", "101011", "101000", "101110"};
    for (int i = 0; i < 6; ++i) CHECK(orbit[static_cast<size_t>(i)].str() == expect[i]);

    auto orbit4 = f_orbit(bs("1011"));
    const char* expect4[] = {"1011", "1000", "1110", "1101"};
    for (int i = 0; i < 4; ++i) CHECK(orbit4[static_cast<size_t>(i)].str() == expect4[i]);

    CHECK_THROWS_AS(f_orbit(bs("10")), UsageError);      // reflexive class
    CHECK_THROWS_AS(f_orbit(bs("0111")), UsageError);    // leading zero
    CHECK_THROWS_AS(f_orbit(bs("100011")), UsageError);  // reflexive class
}

TEST_CASE("extended orbit") {
    auto orbit = ftilde_orbit(bs("100011"));
    REQUIRE(orbit.size() == 6);
    const char* expect[] = {"100011-", "111000+", "110001+", "100011+", "111000-", "110001-"};
    for (int i = 0; i < 6; ++i) CHECK(orbit[static_cast<size_t>(i)].str() == expect[i]);

    auto orbit4 = ftilde_orbit(bs("1001"));
    const char* expect4[] = {"1001-", "1100+", "1001+", "1100-"};
    for (int i = 0; i < 4; ++i) CHECK(orbit4[static_cast<size_t>(i)].str() == expect4[i]);

    auto orbit2 = ftilde_orbit(bs("10"));
    CHECK(orbit2[0].str() == "10-");
    CHECK(orbit2[1].str() == "10+");

    CHECK_THROWS_AS(ftilde_orbit(bs("100010")), UsageError);  // not reflexive
}

TEST_CASE("orbit items distinct across every primitive class") {
    for (int n = 1; n <= 14; ++n)
        for (const auto& cls : words::enumerate_classes(words::ClassSet::Nbar, n)) {
            BitString t = cls.canonical();
            for (int k = 0; k < n && t.bit(0) != 1; ++k) t = t.rotated_left(1);
            if (t.bit(0) != 1) t = cls.canonical().inverted();
            if (words::classify(cls) == words::ClassKind::Nbar2) {
                auto orbit = f_orbit(t);
                CHECK(std::set<BitString>(orbit.begin(), orbit.end()).size() == orbit.size());
            } else {
                auto orbit = ftilde_orbit(t);
                std::set<std::string> seen;
                for (const auto& x : orbit) seen.insert(x.str());
                CHECK(seen.size() == orbit.size());
                // halfway point returns to the plus-signed seed
                CHECK(orbit[static_cast<size_t>(n / 2)] == SignedBitString{t, Sign::Plus});
                for (int i = 0; i < n / 2; ++i) {
                    CHECK(orbit[static_cast<size_t>(i)].word ==
                          orbit[static_cast<size_t>(i + n / 2)].word);
                    CHECK(orbit[static_cast<size_t>(i)].sign !=
                          orbit[static_cast<size_t>(i + n / 2)].sign);
                }
            }
        }
}

TEST_CASE("sign words") {
    CHECK(omega(bs("0111")).entries == std::vector<std::int8_t>{1, -1, 1, -1});
    CHECK(omega(bs("0000")).entries == std::vector<std::int8_t>{1, 1, 1, 1});
    CHECK(omega(bs("1000")).entries == std::vector<std::int8_t>{-1, -1, -1, -1});
    CHECK(omega(bs("0111")).str() == "+1,-1,+1,-1");
    CHECK(PmSequence::parse("+1,-1,+1,-1").entries == omega(bs("0111")).entries);
}

TEST_CASE("pm twisted shift walks the example cycle") {
    PmSequence e = omega(bs("0111"));
    e = pm_twisted_shift(e);
    CHECK(e.entries == std::vector<std::int8_t>{-1, 1, -1, -1});
    e = pm_twisted_shift(e);
    CHECK(e.entries == std::vector<std::int8_t>{-1, 1, 1, -1});
    e = pm_twisted_shift(e);
    CHECK(e.entries == std::vector<std::int8_t>{-1, -1, 1, -1});
    e = pm_twisted_shift(e);
    CHECK(e == omega(bs("0111")));

    PmSequence ones{{1, 1, 1, 1}};
    CHECK(pm_twisted_shift(ones) == ones);
}

TEST_CASE("omega semiconjugates the twisted shift to rotation") {
    for (int n = 1; n <= 12; ++n)
        for (std::uint64_t v = 0; v < (1ull << n); ++v) {
            BitString s(v, n);
            CHECK(pm_twisted_shift(omega(s)) == omega(s.rotated_left(1)));
        }
}

TEST_CASE("signature tracks weight parity") {
    for (int n = 1; n <= 12; ++n)
        for (std::uint64_t v = 0; v < (1ull << n); ++v) {
            BitString s(v, n);
            CHECK((omega(s).signature() == -1) == (s.weight() % 2 == 1));
        }
}
