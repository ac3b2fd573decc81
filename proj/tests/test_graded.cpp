#include "catch_amalgamated.hpp"
#include "sl2ext/graded.hpp"

using namespace sl2ext;

namespace {
Weyl W(std::int64_t e, std::vector<int> word) { return Weyl::from_word(e, word); }
Hecke E(std::int64_t m) { return e_lambda(Character::id(m)); }
const Weyl kId = Weyl::identity();
}  // namespace

TEST_CASE("basis symbols are validated", "[graded]") {
    const Field f(5);
    FieldScope scope(f);
    CHECK_THROWS_AS(b0(kId), std::invalid_argument);
    CHECK_THROWS_AS(a0(Weyl::omega(2)), std::invalid_argument);
    CHECK_THROWS_AS(validate(Sym{0, kId, 1}), std::invalid_argument);
    CHECK_THROWS_AS(validate(Sym{4, kId, 0}), std::invalid_argument);
    CHECK_NOTHROW(bm(kId));
    CHECK_NOTHROW(b0(Weyl::s(1)));
}

TEST_CASE("left action tables", "[graded]") {
    const Field f(5);
    FieldScope scope(f);
    const Hecke ts0 = tau(Weyl::s(0)), e1 = E(0);
    // lengths add
    const Weyl w = W(1, {1, 0});
    CHECK(act_left(ts0, bm(w)) == -bp(mul(Weyl::s(0), w)));
    // s0 w shorter, l(w) = 1
    const Weyl s0 = Weyl::s(0);
    CHECK(act_left(ts0, b0(s0)) == -act_left(e1, b0(s0)) + act_left(E(1), bp(s0)));
    // torus
    CHECK(act_left(tau(Weyl::omega(1)), b0(w)) == b0(mul(Weyl::omega(1), w)));
    CHECK(act_left(tau(Weyl::omega(1)), bm(w)) == bm(mul(Weyl::omega(1), w)) * Fp(4).inv());
    CHECK(act_left(tau(Weyl::omega(1)), bp(w)) == bp(mul(Weyl::omega(1), w)) * Fp(4));
    // top degree
    CHECK(act_left(tau(Weyl::s(1)), phi(Weyl::s(0))).is_zero());
    CHECK(act_left(ts0, phi(s0)) == phi(mul(s0, s0)) - act_left(e1, phi(s0)));
}

TEST_CASE("right action formulas", "[graded]") {
    const Field f(7);
    FieldScope scope(f);
    const Hecke e1 = E(0);
    const Weyl v = W(2, {0, 1, 0});
    CHECK(act_right(b0(Weyl::s(0)), tau(v)) == -act_left(e1, b0(v)) - act_left(E(-1), bm(v)));
    const Weyl v1 = W(3, {1, 0});
    CHECK(act_right(b0(Weyl::s(1)), tau(v1)) == -act_left(e1, b0(v1)) + act_left(E(1), bp(v1)));
    const Weyl w = W(1, {1, 0});
    CHECK(act_right(bm(w), tau(Weyl::omega(4))) == bm(mul(w, Weyl::omega(4))));
    CHECK(act_right(phi(w), tau(Weyl::s(1))).is_zero());
    CHECK(act_right(bm(kId), tau(Weyl::s(0))) == bm(Weyl::s(0)));
    CHECK(act_right(bp(kId), tau(Weyl::s(0))).is_zero());
}

TEST_CASE("involutions on basis symbols", "[graded]") {
    const Field f(5);
    FieldScope scope(f);
    const Weyl even = W(1, {0, 1}), odd = W(1, {0, 1, 0});
    CHECK(involution(b0(even)) == b0(inv(even)));
    CHECK(involution(b0(odd)) == -b0(inv(odd)));
    CHECK(involution(from_hecke(tau(even))) == from_hecke(tau(inv(even))));
    CHECK(gamma_varpi(bm(odd)) == bp(conj_varpi(odd)));
    CHECK(gamma_varpi(phi(odd)) == phi(conj_varpi(odd)));
    for (std::uint32_t e = 0; e < 4; ++e)
        for (std::uint32_t len = 0; len <= 4; ++len)
            for (int first = 0; first <= 1; ++first) {
                const Weyl x = Weyl::make(e, len, first);
                for (int d = 0; d <= 3; ++d)
                    for (int s = -1; s <= 1; ++s) {
                        const Sym sym{static_cast<std::uint8_t>(d), x, static_cast<std::int8_t>(s)};
                        try {
                            validate(sym);
                        } catch (const std::invalid_argument&) {
                            continue;
                        }
                        CHECK(involution(involution(sym)) == g(sym));
                        CHECK(gamma_varpi(gamma_varpi(sym)) == g(sym));
                        CHECK(gamma_varpi(involution(sym)) == involution(gamma_varpi(sym)));
                    }
            }
}

TEST_CASE("degree-one factorization", "[graded]") {
    const Field f(5);
    FieldScope scope(f);
    const Deg1Factor a = factor_deg1(sym_beta(-1, W(0, {0, 1})));
    CHECK(a.c == Fp(1));
    CHECK(a.a == kId);
    CHECK(a.g == sym_beta(-1, kId));
    CHECK(a.b == W(0, {0, 1}));
    const Deg1Factor b = factor_deg1(sym_beta(-1, Weyl::s(1)));
    CHECK(b.c == Fp(-1));
    CHECK(b.a == Weyl::s(1));
    CHECK(b.g == sym_beta(1, kId));
    CHECK(b.b == kId);
    for (std::uint32_t e = 0; e < 4; ++e)
        for (std::uint32_t len = 0; len <= 6; ++len)
            for (int first = 0; first <= 1; ++first)
                for (int s = -1; s <= 1; ++s) {
                    const Weyl w = Weyl::make(e, len, first);
                    if (len == 0 && s == 0) continue;
                    const Sym sym = sym_beta(s, w);
                    const Deg1Factor d = factor_deg1(sym);
                    CHECK(is_generator(d.g));
                    CHECK(act_right(act_left(tau(d.a), g(d.g)), tau(d.b)) * d.c == g(sym));
                }
}

TEST_CASE("degree helpers", "[graded]") {
    const Field f(5);
    FieldScope scope(f);
    const Graded x = bm(kId) + phi(kId);
    CHECK(degree_part(x, 1) == bm(kId));
    CHECK_THROWS_AS(homogeneous_degree(x), std::invalid_argument);
    CHECK(homogeneous_degree(Graded{}) == -1);
    CHECK(to_hecke(from_hecke(E(1))) == E(1));
}
