#include "catch_amalgamated.hpp"
#include "sl2ext/product.hpp"

using namespace sl2ext;

namespace {
Weyl W(std::int64_t e, std::vector<int> word) { return Weyl::from_word(e, word); }
Hecke E(std::int64_t m) { return e_lambda(Character::id(m)); }
const Weyl kId = Weyl::identity();
}  // namespace

TEST_CASE("cup products within a summand", "[product]") {
    const Field f(5);
    FieldScope scope(f);
    const Weyl w = W(2, {1, 0});
    CHECK(cup(bp(w), bm(w)) == a0(w));
    CHECK(cup(bm(w), bp(w)) == -a0(w));
    CHECK(cup(b0(w), bp(w)) == am(w));
    CHECK(cup(bm(w), b0(w)) == ap(w));
    CHECK(cup(bm(w), bm(w)).is_zero());
    CHECK(cup(bm(kId), bp(kId)).is_zero());
    CHECK(cup(bm(w), am(w)) == phi(w));
    CHECK(cup(bm(w), ap(w)).is_zero());
    CHECK(cup(am(w), bm(w)) == phi(w));
    CHECK(cup(from_hecke(tau(w)), a0(w)) == a0(w));
    CHECK(cup(bm(w), bp(kId)).is_zero());
    CHECK_THROWS_AS(cup_summand(sym_beta(-1, w), sym_beta(1, kId)), std::invalid_argument);
    // phi_w = beta^- cup beta^0 cup beta^+
    CHECK(cup(cup(bm(w), b0(w)), bp(w)) == phi(w));
}

TEST_CASE("products from the examples", "[product]") {
    const Field f(5);
    FieldScope scope(f);
    const Weyl s0 = Weyl::s(0), s1 = Weyl::s(1);
    CHECK(mul(b0(s1), b0(s0)).is_zero());
    CHECK(mul(b0(s1), bp(kId)) == ap(s1));
    CHECK(mul(bm(kId), bp(kId)).is_zero());
    CHECK(mul(bp(kId), bm(kId)).is_zero());
    CHECK(mul(b0(s0), b0(s0)) == -act_left(E(0), a0(s0)) - act_left(E(-1), ap(s0)) + act_left(E(1), am(s0)));
    const Weyl v = W(0, {0, 1});
    const Weyl s1v = mul(s1, v);
    CHECK(mul_all({bp(kId), b0(s1), bp(v)}) == phi(s1v));
    CHECK(mul(mul(bp(kId), b0(s1)), bp(v)) == mul(bp(kId), mul(b0(s1), bp(v))));
}

TEST_CASE("products vanish above degree three", "[product]") {
    const Field f(7);
    FieldScope scope(f);
    CHECK(mul(phi(kId), bm(kId)).is_zero());
    CHECK(mul(a0(Weyl::s(0)), ap(Weyl::s(0))).is_zero());
    CHECK(mul_all({bm(kId), b0(Weyl::s(0)), bp(kId), bm(kId)}).is_zero());
}

TEST_CASE("tau acts as the identity of the cup product", "[product]") {
    const Field f(7);
    FieldScope scope(f);
    const Graded one = from_hecke(hecke_one());
    for (const Graded& x : {bm(W(1, {0})), a0(W(3, {1, 0})), phi(W(2, {})), from_hecke(E(2))}) {
        CHECK(mul(one, x) == x);
        CHECK(mul(x, one) == x);
    }
    CHECK(mul(from_hecke(tau(Weyl::s(0))), bm(kId)) == act_left(tau(Weyl::s(0)), bm(kId)));
}

TEST_CASE("duality pairing", "[product]") {
    const Field f(5);
    FieldScope scope(f);
    const Weyl w = W(1, {0, 1}), v = W(1, {0});
    CHECK(pairing(phi(w), from_hecke(tau(w))) == Fp(1));
    CHECK(pairing(phi(w), from_hecke(tau(v))) == Fp(0));
    CHECK(pairing(bm(w), am(w)) == Fp(1));
    CHECK(pairing(bm(w), ap(w)) == Fp(0));
    CHECK_THROWS_AS(pairing(bm(w), bm(w)), std::invalid_argument);
}

TEST_CASE("memoization is transparent", "[product]") {
    const Field f(7);
    FieldScope scope(f);
    const Graded x = b0(W(2, {0, 1, 0})), y = b0(Weyl::s(0));
    const Graded first = mul(x, y);
    f.clear_memo();
    CHECK(mul(x, y) == first);
    CHECK(mul(x, y) == first);
    // a different field keeps its own tables
    const Field other(11);
    FieldScope inner(other);
    const Graded z = mul(b0(W(2, {0, 1, 0})), b0(Weyl::s(0)));
    CHECK_FALSE(z.is_zero());
}
