#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "core/bijections.hpp"
#include "core/counting.hpp"
#include "core/errors.hpp"
#include "core/shiftdyn.hpp"
#include "core/words.hpp"

using namespace qnp;
using namespace qnp::bij;

namespace {
BitString bs(const char* s) {
    return BitString::parse(s);
}

// brute-force CUP enumeration over all n! permutations
std::vector<Cup> cups_by_exhaustion(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i + 1;
    std::vector<Cup> out;
    do {
        try {
            out.emplace_back(Cup(img));
        } catch (const UsageError&) {
        }
    } while (std::next_permutation(img.begin(), img.end()));
    std::sort(out.begin(), out.end());
    return out;
}
}  // namespace

TEST_CASE("partial-sum transform") {
    CHECK(xi(bs("010111")).str() == "011010");
    CHECK(xi(bs("000000")).str() == "000000");
    CHECK(xi(bs("000011")).str() == "000010");
    CHECK(xi_inv(bs("011010")).str() == "010111");
    CHECK(xi_inv(bs("111111")).str() == "100000");
    CHECK(xi_inv(bs("000000")).str() == "000000");
    for (std::uint64_t v = 0; v < (1ull << 11); ++v) {
        BitString s(v, 11);
        CHECK(xi_inv(xi(s)) == s);
        CHECK(xi(xi_inv(s)) == s);
    }
}

TEST_CASE("cup parsing and validation") {
    Cup sigma = Cup::parse("(165324)");
    CHECK(sigma.apply(1) == 6);
    CHECK(sigma.apply(6) == 5);
    CHECK(sigma.turning_point() == 4);
    CHECK(sigma.str() == "(165324)");
    CHECK(Cup::parse("(1,10,9,8,7,6,5,4,3,2)").str() == "(1,10,9,8,7,6,5,4,3,2)");
    CHECK_THROWS_AS(Cup::parse("(1)(2)"), UsageError);
    CHECK_THROWS_AS(Cup::parse("(12)(3)"), UsageError);
    CHECK_THROWS_AS(Cup::parse("(123)"), UsageError);  // cyclic but not unimodal
    CHECK_THROWS_AS(Cup::parse("(21)"), UsageError);   // does not start at 1
    CHECK(Cup::parse("(132)").str() == "(132)");       // the single element of CUP(3)
}

TEST_CASE("itineraries and coded words") {
    Cup s1 = Cup::parse("(15432)");
    CHECK(itinerary(s1).itin_order() == "-+++*");
    CHECK(a_of_sigma(s1).str() == "10001");
    Cup s2 = Cup::parse("(164253)");
    CHECK(itinerary(s2).itin_order() == "-++-+*");
    CHECK(a_of_sigma(s2).str() == "100100");
    Cup one = Cup::parse("(1)");
    CHECK(itinerary(one).itin_order() == "*");
    CHECK(a_of_sigma(one).str() == "0");
    CHECK(Itinerary::parse("*-++").itin_order() == "-++*");
}

TEST_CASE("phi lands in the balanced necklace set") {
    CHECK(phi(Cup::parse("(1432)")) == Necklace(bs("0011")));
    CHECK(phi(Cup::parse("(164253)")) == Necklace(bs("001001")));
    CHECK(phi(Cup::parse("(165432)")) == Necklace(bs("110000")));
    for (int n = 1; n <= 12; ++n)
        for (const Cup& sigma : enumerate_cup(n))
            CHECK(words::in_n_tilde_plus(phi(sigma)));
}

TEST_CASE("psi-plus against the worked example") {
    CHECK(psi_plus(Necklace(bs("000011"))) == InversionClass(bs("000010")));
    CHECK(psi_plus(Necklace(bs("000101"))) == InversionClass(bs("000110")));
    CHECK(psi_plus(Necklace(bs("001001"))) == InversionClass(bs("001110")));
    CHECK_THROWS_AS(psi_plus(Necklace(bs("000111"))), UsageError);  // odd weight, full length
}

TEST_CASE("theta-plus inverts psi-plus") {
    CHECK(theta_plus(InversionClass(bs("000010"))) == Necklace(bs("000011")));
    CHECK(theta_plus(InversionClass(bs("001110"))) == Necklace(bs("001001")));
    CHECK(theta_plus(InversionClass(bs("0"))) == Necklace(bs("0")));
    CHECK_THROWS_AS(theta_plus(InversionClass(bs("0101"))), UsageError);
    for (int n = 1; n <= 14; ++n) {
        for (const auto& x : words::enumerate_necklaces(words::NecklaceSet::NTildePlus, n))
            CHECK(theta_plus(psi_plus(x)) == x);
        for (const auto& y : words::enumerate_classes(words::ClassSet::Nbar, n))
            CHECK(psi_plus(theta_plus(y)) == y);
    }
}

TEST_CASE("rank map against the worked examples") {
    CHECK(lambda_map(InversionClass(bs("011101"))).str() == "(165324)");
    CHECK(lambda_map(InversionClass(bs("011100"))).str() == "(164253)");
    CHECK(lambda_map(InversionClass(bs("0111"))).str() == "(1432)");
    CHECK_THROWS_AS(lambda_map(InversionClass(bs("0101"))), UsageError);
}

TEST_CASE("three-step cycle is the identity in every corner") {
    for (int n = 1; n <= 14; ++n) {
        for (const auto& x : words::enumerate_necklaces(words::NecklaceSet::NTildePlus, n))
            CHECK(phi(lambda_map(psi_plus(x))) == x);
        for (const Cup& sigma : enumerate_cup(n))
            CHECK(lambda_map(psi_plus(phi(sigma))) == sigma);
        for (const auto& y : words::enumerate_classes(words::ClassSet::Nbar, n))
            CHECK(psi_plus(phi(lambda_map(y))) == y);
    }
}

TEST_CASE("weiss-rogers maps") {
    CHECK(wr_phi(Necklace(bs("0001"))).str() == "(1432)");
    CHECK(wr_phi(Necklace(bs("0111"))).str() == "(1423)");
    CHECK(wr_phi(Necklace(bs("1"))).str() == "(1)");
    CHECK(wr_psi(Cup::parse("(1432)")) == Necklace(bs("1000")));
    CHECK(wr_psi_string(Cup::parse("(1432)")).str() == "1000");
    CHECK(wr_psi_string(Cup::parse("(1423)")).str() == "1011");
    CHECK(wr_psi(Cup::parse("(1)")) == Necklace(bs("1")));
    CHECK_THROWS_AS(wr_phi(Necklace(bs("0011"))), UsageError);  // even weight
    CHECK_THROWS_AS(wr_phi(Necklace(bs("0101"))), UsageError);  // not primitive

    for (int n = 1; n <= 14; ++n) {
        for (const auto& x : words::enumerate_necklaces(words::NecklaceSet::NMinus, n))
            CHECK(wr_psi(wr_phi(x)) == x);
        for (const Cup& sigma : enumerate_cup(n))
            CHECK(wr_phi(wr_psi(sigma)) == sigma);
    }
}

TEST_CASE("cup enumeration") {
    std::vector<std::string> got;
    for (const Cup& sigma : enumerate_cup(4)) got.push_back(sigma.str());
    CHECK(got == std::vector<std::string>{"(1432)", "(1423)"});
    got.clear();
    for (const Cup& sigma : enumerate_cup(5)) got.push_back(sigma.str());
    CHECK(got == std::vector<std::string>{"(15432)", "(15423)", "(15324)"});
    CHECK(enumerate_cup(1).size() == 1);
    for (int n = 1; n <= 12; ++n)
        CHECK(enumerate_cup(n).size() == counting::gamma(n));
    // cross-check the prefix-set generation against plain exhaustion
    for (int n = 1; n <= 8; ++n)
        CHECK(enumerate_cup(n) == cups_by_exhaustion(n));
}

TEST_CASE("satellite detection") {
    CHECK(is_satellite_cup(Cup::parse("(164253)")));
    CHECK(is_satellite_cup(Cup::parse("(1423)")));
    CHECK_FALSE(is_satellite_cup(Cup::parse("(165432)")));
    for (int n = 1; n <= 14; ++n)
        for (const Cup& sigma : enumerate_cup(n))
            CHECK(is_satellite_cup(sigma) == !is_primitive(a_of_sigma(sigma)));
}

TEST_CASE("lambda ignores the representative choice") {
    for (int n = 1; n <= 12; ++n)
        for (const auto& y : words::enumerate_classes(words::ClassSet::Nbar, n)) {
            const Cup expect = lambda_map(y);
            const BitString& c = y.canonical();
            for (const BitString& base : {c, c.inverted()})
                for (int k = 0; k < n; ++k) {
                    BitString t = base.rotated_left(k);
                    if (t.bit(0) != 1) continue;
                    // rebuild the rank permutation from this seed
                    std::vector<int> cycle;
                    if (words::classify(y) == words::ClassKind::Nbar2) {
                        auto orbit = shiftdyn::f_orbit(t);
                        auto sorted = orbit;
                        std::sort(sorted.begin(), sorted.end());
                        for (const auto& w : orbit)
                            cycle.push_back(
                                static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(),
                                                                  w) -
                                                 sorted.begin()) +
                                1);
                    } else {
                        auto orbit = shiftdyn::ftilde_orbit(t);
                        auto sorted = orbit;
                        std::sort(sorted.begin(), sorted.end());
                        for (const auto& w : orbit)
                            cycle.push_back(
                                static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(),
                                                                  w) -
                                                 sorted.begin()) +
                                1);
                    }
                    CHECK(Cup::from_cycle(cycle) == expect);
                }
        }
}

TEST_CASE("coded word sits one twisted shift above its orbit minimum") {
    for (int n = 2; n <= 14; ++n)
        for (const Cup& sigma : enumerate_cup(n)) {
            BitString t = xi(a_of_sigma(sigma));
            BitString u = t.bit(0) == 1 ? t : t.inverted();
            if (words::classify(InversionClass(u)) == words::ClassKind::Nbar2) {
                auto orbit = shiftdyn::f_orbit(u);
                BitString m = *std::min_element(orbit.begin(), orbit.end());
                CHECK(shiftdyn::twisted_shift(m) == u);
            } else {
                auto orbit = shiftdyn::ftilde_orbit(u);
                auto m = *std::min_element(orbit.begin(), orbit.end());
                CHECK(shiftdyn::extended_twisted_shift(m).word == u);
            }
        }
}

TEST_CASE("psi-plus respects the two-part split") {
    for (int n = 1; n <= 14; ++n)
        for (const auto& x : words::enumerate_necklaces(words::NecklaceSet::NTildePlus, n)) {
            auto kind = words::classify(psi_plus(x));
            CHECK((kind == words::ClassKind::Nbar1) == !x.primitive());
        }
}
