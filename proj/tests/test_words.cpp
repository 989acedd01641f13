#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "core/counting.hpp"
#include "core/errors.hpp"
#include "core/words.hpp"

using namespace qnp;

namespace {
// reference canonicalization straight from the definition
BitString naive_necklace_canonical(const BitString& s) {
    BitString best = s;
    for (int k = 0; k < s.size(); ++k) best = std::min(best, s.rotated_left(k));
    return best;
}

std::set<std::string> strset(const std::vector<Necklace>& v) {
    std::set<std::string> out;
    for (const auto& x : v) out.insert(x.str());
    return out;
}

std::set<std::string> strset(const std::vector<InversionClass>& v) {
    std::set<std::string> out;
    for (const auto& x : v) out.insert(x.str());
    return out;
}
}  // namespace

TEST_CASE("rotation") {
    CHECK(BitString::parse("01100").rotated_left(1).str() == "11000");
    CHECK(BitString::parse("01100").rotated_left(5).str() == "01100");
    CHECK(BitString::parse("0111").rotated_left(1).str() == "1110");
    CHECK(BitString::parse("0111").rotated_left(2).str() == "1101");
    CHECK(BitString::parse("0111").rotated_left(3).str() == "1011");
}

TEST_CASE("inversion") {
    CHECK(BitString::parse("001110").inverted().str() == "110001");
    CHECK(BitString::parse("0000").inverted().str() == "1111");
    CHECK(BitString::parse("010000").inverted().str() == "101111");
    // involution
    for (std::uint64_t v = 0; v < 64; ++v) {
        BitString s(v, 6);
        CHECK(s.inverted().inverted() == s);
    }
}

TEST_CASE("primitivity") {
    CHECK(is_primitive(BitString::parse("0011")));
    CHECK_FALSE(is_primitive(BitString::parse("0101")));
    CHECK(is_primitive(BitString::parse("0")));
}

TEST_CASE("reflexivity") {
    CHECK(is_reflexive(BitString::parse("001110")));
    CHECK_FALSE(is_reflexive(BitString::parse("010000")));
    CHECK(is_reflexive(BitString::parse("01")));
}

TEST_CASE("block alternation") {
    CHECK(is_k_alternating(BitString::parse("001110"), 2));
    CHECK(is_k_alternating(BitString::parse("0011"), 2));
    CHECK(is_k_alternating(BitString::parse("010101"), 3));
    CHECK_FALSE(is_k_alternating(BitString::parse("010101"), 2));
    CHECK_THROWS_AS(is_k_alternating(BitString::parse("0011"), 3), UsageError);
}

TEST_CASE("class split") {
    CHECK(words::classify(InversionClass(BitString::parse("001110"))) == words::ClassKind::Nbar1);
    CHECK(words::classify(InversionClass(BitString::parse("010000"))) == words::ClassKind::Nbar2);
    CHECK(words::classify(InversionClass(BitString::parse("01"))) == words::ClassKind::Nbar1);
    CHECK_THROWS_AS(words::classify(InversionClass(BitString::parse("0101"))), UsageError);
}

TEST_CASE("canonical representative is a class member") {
    for (int n = 1; n <= 12; ++n)
        for (std::uint64_t v = 0; v < (1ull << n); ++v) {
            BitString s(v, n);
            CHECK(necklace_canonical(s) == naive_necklace_canonical(s));
            BitString c = class_canonical(s);
            bool member = false;
            for (const BitString& base : {s, s.inverted()})
                for (int k = 0; k < n; ++k)
                    if (base.rotated_left(k) == c) member = true;
            CHECK(member);
            CHECK(class_canonical(c) == c);
        }
}

TEST_CASE("enumerated sets match the worked example at n = 6") {
    auto tilde = strset(words::enumerate_necklaces(words::NecklaceSet::NTildePlus, 6));
    CHECK(tilde == std::set<std::string>{"000011", "000101", "001001", "001111", "010111"});

    // the five classes, written with canonical representatives
    auto nbar = strset(words::enumerate_classes(words::ClassSet::Nbar, 6));
    std::set<std::string> expect;
    for (const char* rep : {"000010", "000110", "001010", "011010", "001110"})
        expect.insert(InversionClass(BitString::parse(rep)).str());
    CHECK(nbar == expect);

    auto nbar1 = words::enumerate_classes(words::ClassSet::Nbar1, 6);
    REQUIRE(nbar1.size() == 1);
    CHECK(nbar1[0] == InversionClass(BitString::parse("001110")));
}

TEST_CASE("worked examples at small n") {
    auto nm4 = strset(words::enumerate_necklaces(words::NecklaceSet::NMinus, 4));
    CHECK(nm4 == std::set<std::string>{"0001", "0111"});
    auto nbar1 = words::enumerate_classes(words::ClassSet::Nbar, 1);
    REQUIRE(nbar1.size() == 1);
    CHECK(nbar1[0].str() == "[0]");
}

TEST_CASE("set sizes equal gamma") {
    for (int n = 1; n <= 14; ++n) {
        const auto g = counting::gamma(n);
        CHECK(words::enumerate_necklaces(words::NecklaceSet::NMinus, n).size() == g);
        CHECK(words::enumerate_necklaces(words::NecklaceSet::NTildePlus, n).size() == g);
        CHECK(words::enumerate_classes(words::ClassSet::Nbar, n).size() == g);
    }
}

TEST_CASE("reflexive part matches the halved odd set") {
    for (int n = 2; n <= 14; n += 2) {
        auto nbar1 = words::enumerate_classes(words::ClassSet::Nbar1, n);
        auto half = words::enumerate_necklaces(words::NecklaceSet::NMinus, n / 2);
        CHECK(nbar1.size() == half.size());
    }
    for (int n = 1; n <= 13; n += 2)
        CHECK(words::enumerate_classes(words::ClassSet::Nbar1, n).empty());
}

TEST_CASE("primitive reflexive strings alternate in two blocks") {
    for (int n = 2; n <= 20; n += 2)
        for (std::uint64_t v = 0; v < (1ull << n); ++v) {
            BitString s(v, n);
            if (is_primitive(s) && is_reflexive(s)) CHECK(is_k_alternating(s, 2));
        }
}

TEST_CASE("signed words order by word first") {
    SignedBitString a{BitString::parse("1001"), Sign::Minus};
    SignedBitString b{BitString::parse("1001"), Sign::Plus};
    SignedBitString c{BitString::parse("1100"), Sign::Minus};
    CHECK(a < b);
    CHECK(b < c);
    CHECK(a < c);
    CHECK(SignedBitString::parse("100011-").str() == "100011-");
    for (std::uint64_t v = 0; v < 16; ++v) {
        SignedBitString lo{BitString(v, 4), Sign::Minus};
        SignedBitString hi{BitString(v, 4), Sign::Plus};
        CHECK(lo < hi);
    }
}
