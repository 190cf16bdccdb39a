#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "levelcomb/words.hpp"

using namespace levelcomb;

TEST_CASE("psi enumerates by length then lexicographically") {
    CHECK(psi(0).str() == "");
    CHECK(psi(1).str() == "0");
    CHECK(psi(2).str() == "1");
    CHECK(psi(3).str() == "00");
    CHECK(psi(4).str() == "01");
    CHECK(psi(5).str() == "10");
    CHECK(psi(6).str() == "11");
    CHECK(psi(7).str() == "000");
}

TEST_CASE("psi_inv inverts psi") {
    CHECK(psi_inv(Word()) == 0);
    CHECK(psi_inv(Word::from_string("1")) == 2);
    CHECK(psi_inv(Word::from_string("00")) == 3);
    for (nat n = 0; n < 5000; ++n)
        CHECK(psi_inv(psi(n)) == n);
}

TEST_CASE("psi length bound and sn length on a large scan") {
    for (nat n = 0; n < 100000; ++n) {
        CHECK(psi(n).size() <= n);
        CHECK(sn(n).size() == n);
    }
}

TEST_CASE("sn pads psi with zeros") {
    CHECK(sn(0).str() == "");
    CHECK(sn(3).str() == "000");
    CHECK(sn(4).str() == "010");
}

TEST_CASE("density: sn(psi_inv(s)) extends s for every short word") {
    for (nat n = 0; n < (nat{1} << 15) - 1; ++n) {
        Word s = psi(n);
        if (s.size() > 14)
            break;
        CHECK(s.is_prefix_of(sn(psi_inv(s))));
    }
}

TEST_CASE("pairing examples") {
    CHECK(pair_code(0, 0) == 0);
    CHECK(pair_code(1, 0) == 1);
    CHECK(pair_code(0, 1) == 2);
    CHECK(pair_code(1, 1) == 4);
    CHECK(unpair(0) == std::pair<nat, nat>{0, 0});
    CHECK(unpair(3) == std::pair<nat, nat>{2, 0});
    CHECK(unpair(5) == std::pair<nat, nat>{0, 2});
}

TEST_CASE("pairing round trips") {
    for (nat n = 0; n <= 1000; ++n)
        for (nat p = 0; p <= 1000; ++p) {
            auto [a, b] = unpair(pair_code(n, p));
            CHECK(a == n);
            CHECK(b == p);
        }
    for (nat q = 0; q < 1000000; ++q) {
        auto [a, b] = unpair(q);
        CHECK(pair_code(a, b) == q);
    }
}

TEST_CASE("m_of equals the coordinate sum") {
    CHECK(m_of(0) == 0);
    CHECK(m_of(3) == 2);
    CHECK(m_of(5) == 2);
    for (nat l = 0; l < 1000000; ++l) {
        auto [a, b] = unpair(l);
        CHECK(m_of(l) == a + b);
    }
}

TEST_CASE("phi examples and round trips") {
    CHECK(phi(0, 0) == 0);
    CHECK(phi(1, 0) == 1);
    CHECK(phi(0, 1) == 3);
    CHECK(phi_inv(0) == std::pair<nat, nat>{0, 0});
    CHECK(phi_inv(3) == std::pair<nat, nat>{0, 1});
    CHECK(phi_inv(1) == std::pair<nat, nat>{1, 0});
    for (nat n = 0; n <= 1000; ++n)
        for (nat p = 0; p <= 1000; ++p) {
            auto [a, b] = phi_inv(phi(n, p));
            CHECK(a == n);
            CHECK(b == p);
        }
    for (nat q = 0; q < 1000000; ++q) {
        auto [a, b] = phi_inv(q);
        CHECK(phi(a, b) == q);
    }
}

TEST_CASE("pairing successor identity") {
    for (nat p = 0; p < 1000; ++p)
        for (nat m = 0; m < 1000; ++m)
            CHECK(pair_code(p + 1, m) + 1 == pair_code(p, m + 1));
}

TEST_CASE("pairing overflow is reported") {
    CHECK_THROWS_AS(pair_code(nat{1} << 34, nat{1} << 34), OverflowError);
}

TEST_CASE("word primitives") {
    Word w = Word::from_string("0110");
    CHECK(w.size() == 4);
    CHECK(w.bit(1) == 1);
    CHECK(w.prefix(2).str() == "01");
    CHECK(w.suffix_from(1).str() == "110");
    CHECK(Word::from_string("01").is_prefix_of(w));
    CHECK_FALSE(Word::from_string("11").is_prefix_of(w));
    Word a = w;
    a.append(Word::from_string("01"));
    CHECK(a.str() == "011001");
    CHECK(Word::zeros(3).all_zero());
    CHECK_FALSE(w.all_zero());
    CHECK(w.one_positions() == std::vector<nat>{1, 2});
    CHECK(Word::from_string("0") < Word::from_string("1"));
    CHECK(Word::from_string("1") < Word::from_string("00"));
}
