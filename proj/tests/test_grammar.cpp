#include <random>

#include "catch_amalgamated.hpp"
#include "sl2ext/grammar.hpp"

using namespace sl2ext;

TEST_CASE("parsing elements", "[grammar]") {
    const Field f(5);
    FieldScope scope(f);
    CHECK(parse_element("b0(w(0;s1))") == b0(Weyl::s(1)));
    CHECK(parse_element("  -2*bm(w(1; s0 s1)) + ap(w(3;))") ==
          bm(Weyl::from_word(1, {0, 1})) * Fp(-2) + ap(Weyl::omega(3)));
    CHECK(parse_element("1/2*phi(w(0;))") == phi(Weyl::identity()) * Fp(3));
    CHECK(parse_element("tau(w(0;s0,s1))") == from_hecke(tau(Weyl::from_word(0, {0, 1}))));
    CHECK(parse_element("tau(w(0;s0s1))") == from_hecke(tau(Weyl::from_word(0, {0, 1}))));
    CHECK(parse_element("e(1)") == from_hecke(e_lambda(Character::id(1))));
    CHECK(parse_element("0").is_zero());
    CHECK_THROWS_AS(parse_element("w(-1;s0 s0)"), ParseError);
}

TEST_CASE("parse errors carry a position", "[grammar]") {
    const Field f(5);
    FieldScope scope(f);
    auto pos = [](const char* text) -> std::size_t {
        try {
            parse_element(text);
        } catch (const ParseError& e) {
            return e.position();
        }
        return 9999;
    };
    CHECK(pos("bq(w(0;))") == 0);
    CHECK(pos("bm(w(0;s2))") == 8);
    CHECK(pos("bm(w(0;)) *") == 10);
    CHECK(pos("b0(w(0;))") == 3);
    CHECK(pos("1/0*bm(w(0;))") == 2);
    CHECK(pos("") == 0);
}

TEST_CASE("render and parse round trip", "[grammar]") {
    for (std::uint32_t p : {5U, 7U, 13U}) {
        const Field f(p);
        FieldScope scope(f);
        std::mt19937_64 rng(p);
        for (int k = 0; k < 300; ++k) {
            Graded x;
            const int terms = static_cast<int>(rng() % 4);
            for (int t = 0; t < terms; ++t) {
                const int d = static_cast<int>(rng() % 4);
                const Weyl w = Weyl::make(static_cast<std::int64_t>(rng() % (p - 1)),
                                          static_cast<std::uint32_t>(rng() % 5), static_cast<int>(rng() % 2));
                int s = (d == 1 || d == 2) ? static_cast<int>(rng() % 3) - 1 : 0;
                if (w.len == 0 && (d == 1 || d == 2) && s == 0) s = 1;
                x.add(Sym{static_cast<std::uint8_t>(d), w, static_cast<std::int8_t>(s)},
                      Fp(static_cast<std::int64_t>(rng() % p)));
            }
            const std::string text = render(x);
            CHECK(parse_element(text) == x);
            CHECK(render(parse_element(text)) == text);
        }
    }
}

TEST_CASE("rendering", "[grammar]") {
    const Field f(7);
    FieldScope scope(f);
    CHECK(render(Graded{}) == "0");
    CHECK(render(bm(Weyl::identity()) * Fp(-1)) == "-bm(w(0;))");
    CHECK(render(b0(Weyl::s(0)) * Fp(3) + phi(Weyl::omega(2)) * Fp(5)) == "3*b0(w(0;s0)) - 2*phi(w(2;))");
    CHECK(parse_weyl("w(8; s1 s0)") == Weyl::make(2, 2, 1));
}
