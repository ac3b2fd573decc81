#include <random>

#include "catch_amalgamated.hpp"
#include "sl2ext/hecke.hpp"

using namespace sl2ext;

namespace {
Weyl W(std::int64_t e, std::vector<int> word) { return Weyl::from_word(e, word); }
}  // namespace

TEST_CASE("idempotent e_1 at p = 5", "[hecke]") {
    const Field f(5);
    FieldScope scope(f);
    Hecke want;
    for (int e = 0; e < 4; ++e) want.add(Weyl::omega(e), Fp(-1));
    CHECK(e_lambda(Character::trivial()) == want);
}

TEST_CASE("idempotents are orthogonal and complete", "[hecke]") {
    for (std::uint32_t p : {5U, 7U, 11U}) {
        const Field f(p);
        FieldScope scope(f);
        Hecke total;
        for (std::uint32_t a = 0; a < p - 1; ++a) {
            const Hecke ea = e_lambda(Character::id(a));
            total += ea;
            CHECK(mul(ea, ea) == ea);
            for (std::uint32_t b = a + 1; b < p - 1; ++b) CHECK(mul(ea, e_lambda(Character::id(b))).is_zero());
            for (std::uint32_t t = 0; t < p - 1; ++t) {
                const Hecke tt = tau(Weyl::omega(t));
                CHECK(mul(ea, tt) == ea * char_eval(Character::id(a), t));
                CHECK(mul(tt, ea) == ea * char_eval(Character::id(a), t));
            }
        }
        CHECK(total == hecke_one());
    }
}

TEST_CASE("braid and quadratic relations", "[hecke]") {
    const Field f(5);
    FieldScope scope(f);
    const Hecke ts0 = tau(Weyl::s(0)), ts1 = tau(Weyl::s(1));
    CHECK(mul(ts0, ts1) == tau(W(0, {0, 1})));
    Hecke sq;
    for (int e = 0; e < 4; ++e) sq.add(W(e, {0}), Fp(1));
    CHECK(mul(ts0, ts0) == sq);
    const Hecke e1 = e_lambda(Character::trivial());
    CHECK((mul(ts0, ts0) + mul(e1, ts0)).is_zero());
    CHECK(mul(ts1, ts1 + e1).is_zero());
    CHECK(mul(tau(Weyl::omega(1)), ts0) == tau(W(1, {0})));
    CHECK(mul(ts0, tau(Weyl::omega(1))) == tau(W(3, {0})));
}

TEST_CASE("left and right recursions agree and are associative", "[hecke]") {
    for (std::uint32_t p : {5U, 7U, 13U}) {
        const Field f(p);
        FieldScope scope(f);
        std::mt19937_64 rng(p);
        auto rnd = [&] {
            Hecke h;
            const int terms = 1 + static_cast<int>(rng() % 2);
            for (int k = 0; k < terms; ++k)
                h.add(Weyl::make(static_cast<std::int64_t>(rng() % (p - 1)), static_cast<std::uint32_t>(rng() % 7),
                                 static_cast<int>(rng() % 2)),
                      Fp(static_cast<std::int64_t>(1 + rng() % (p - 1))));
            return h;
        };
        for (int k = 0; k < 150; ++k) {
            const Hecke a = rnd(), b = rnd(), c = rnd();
            CHECK(mul(a, b) == mul_right_recursive(a, b));
            CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        }
    }
}

TEST_CASE("linear combinations keep no zeros", "[hecke]") {
    const Field f(5);
    FieldScope scope(f);
    Hecke h = tau(Weyl::s(0));
    h.add(Weyl::s(0), Fp(-1));
    CHECK(h.is_zero());
    CHECK(h.size() == 0);
    CHECK(h == Hecke{});
    CHECK(hecke_scalar(Fp(3)).coeff(Weyl::identity()) == Fp(3));
}
