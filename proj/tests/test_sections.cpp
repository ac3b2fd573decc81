#include "catch_amalgamated.hpp"
#include "sl2ext/sections.hpp"

using namespace sl2ext;

namespace {
Weyl W(std::int64_t e, std::vector<int> word) { return Weyl::from_word(e, word); }
Hecke E(std::int64_t m) { return e_lambda(Character::id(m)); }
const Weyl kId = Weyl::identity();

// Compares two tensors of a single term factor by factor.
bool same_single(const Tensor& a, const Tensor& b) {
    if (a.terms().size() != 1 || b.terms().size() != 1) return false;
    const auto& x = a.terms()[0];
    const auto& y = b.terms()[0];
    return x.c == y.c && x.factors == y.factors;
}
}  // namespace

TEST_CASE("evaluation of tensors", "[sections]") {
    const Field f(5);
    FieldScope scope(f);
    CHECK(eval(tensor({b0(Weyl::s(1)), bp(kId)})) == ap(Weyl::s(1)));
    CHECK(eval(tensor({bm(kId), bm(kId)})).is_zero());
    CHECK(eval(tensor({bp(kId), b0(Weyl::s(1)), bp(kId)})) == phi(Weyl::s(1)));
    CHECK_THROWS_AS(tensor({bm(kId), phi(kId)}), std::invalid_argument);
    Tensor t(2);
    CHECK_THROWS_AS(t.add_term(Fp(1), {bm(kId)}), std::invalid_argument);
}

TEST_CASE("acting on tensors commutes with evaluation", "[sections]") {
    const Field f(7);
    FieldScope scope(f);
    const Tensor t = R2(sym_alpha(0, W(2, {1, 0})));
    CHECK(eval(tensor_act(hecke_one(), t, Side::left)) == eval(t));
    CHECK(eval(tensor_act(E(2), t, Side::left)) == act_left(E(2), eval(t)));
    const Hecke tw = tau(Weyl::omega(1));
    CHECK(eval(tensor_act(tw, t, Side::right)) == act_right(eval(t), tw));
}

TEST_CASE("degree-two section", "[sections]") {
    const Field f(5);
    FieldScope scope(f);
    const Weyl s0 = Weyl::s(0), s1 = Weyl::s(1);
    const Weyl v = W(0, {0, 1});
    CHECK(same_single(R2(sym_alpha(1, mul(s1, v))), tensor({b0(s1), bp(v)})));
    const Weyl w = W(0, {1});
    CHECK(same_single(R2(sym_alpha(0, mul(s0, w))), tensor({bm(kId), bp(mul(s0, w))}, Fp(-1))));
    CHECK(eval(R2(sym_alpha(-1, s0))) == am(s0));
    for (std::uint32_t e = 0; e < 4; ++e) {
        CHECK(eval(R2(sym_alpha(-1, Weyl::omega(e)))) == am(Weyl::omega(e)));
        CHECK(eval(R2(sym_alpha(1, Weyl::omega(e)))) == ap(Weyl::omega(e)));
    }
    CHECK_THROWS_AS(R2(sym_phi(kId)), std::invalid_argument);
}

TEST_CASE("degree-three sections", "[sections]") {
    const Field f(5);
    FieldScope scope(f);
    const Weyl s0 = Weyl::s(0);
    CHECK(same_single(R3(sym_phi(s0)), tensor({bm(kId), b0(s0), bm(kId)}, Fp(-1))));
    const Weyl w = W(0, {1, 0});
    CHECK(eval(R3(sym_phi(w))) == phi(w));
    // the length-zero row is (tau_s0 + e_1) applied to the section at s0^-1 omega
    const Weyl om = Weyl::omega(3);
    const Tensor shifted =
        tensor_act(tau(s0) + E(0), R3(sym_phi(mul(inv(s0), om))), Side::left);
    CHECK(eval(R3(sym_phi(om))) == eval(shifted));
    CHECK(eval(R3(sym_phi(om))) == phi(om));
    CHECK(eval(R3_prime(sym_phi(kId))) == phi(kId));
    const Tensor a = R3_prime(sym_phi(w)), b = R3(sym_phi(w));
    CHECK(same_single(a, b));
    const auto literal = R3_phi1_summands_literal();
    REQUIRE(literal.size() == 4);
    const Tensor r = R3(sym_phi(kId));
    CHECK(eval(literal[0]) == eval(r));
    CHECK(eval(literal[1]) == eval(gamma_varpi(r)));
    CHECK(eval(literal[2]) == eval(involution(r)));
    CHECK(eval(literal[3]) == eval(gamma_varpi(involution(r))));
}

TEST_CASE("kernel generators evaluate to zero", "[sections]") {
    for (std::uint32_t p : {5U, 7U}) {
        const Field f(p);
        FieldScope scope(f);
        const auto gens = kernel_generators();
        CHECK(gens.size() == 15);
        for (const auto& nt : gens) {
            INFO(nt.name);
            CHECK(eval(nt.t).is_zero());
        }
        const auto k2 = k2_generators();
        CHECK(k2.size() == 14);
        for (const auto& nt : k2) {
            INFO(nt.name);
            CHECK(eval(nt.t).is_zero());
        }
    }
}

TEST_CASE("quadratic kernel element as printed", "[sections]") {
    const Field f(7);
    FieldScope scope(f);
    const Weyl s0 = Weyl::s(0);
    Tensor t = tensor({b0(s0), b0(s0)});
    t.add(tensor({act_left(E(-1), bm(kId)), b0(s0)}));
    t.add(tensor({act_left(E(1), b0(s0)), bm(kId)}));
    t.add(tensor({act_left(E(0), bm(kId)), bp(s0)}), Fp(-1));
    CHECK(eval(t).is_zero());
    // flipping one sign leaves a nonzero image
    Tensor bad = tensor({b0(s0), b0(s0)});
    bad.add(tensor({act_left(E(-1), bm(kId)), b0(s0)}), Fp(-1));
    bad.add(tensor({act_left(E(1), b0(s0)), bm(kId)}));
    bad.add(tensor({act_left(E(0), bm(kId)), bp(s0)}), Fp(-1));
    CHECK_FALSE(eval(bad).is_zero());
}
