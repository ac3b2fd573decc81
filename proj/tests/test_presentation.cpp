#include "catch_amalgamated.hpp"
#include "sl2ext/presentation.hpp"

using namespace sl2ext;

namespace {
const Weyl kId = Weyl::identity();
FreeElement L(Letter l) { return letter(l); }
}  // namespace

TEST_CASE("epsilon at p = 5", "[presentation]") {
    const Field f(5);
    FieldScope scope(f);
    const FreeElement T = L(Letter::Tw0);
    const FreeElement want = -(free_one() + T + free_mul(T, T) + free_pow(T, 3));
    CHECK(epsilon(Character::trivial()) == want);
    CHECK(epsilon(Character::id(1)).size() == 4);
    for (int m = 0; m < 4; ++m) CHECK(evaluate(epsilon(Character::id(m))) == from_hecke(e_lambda(Character::id(m))));
    // the literal reading counts the identity coset twice
    CHECK(evaluate(epsilon(Character::trivial(), EpsilonBound::literal)) ==
          from_hecke(e_lambda(Character::trivial())) - from_hecke(hecke_one()));
}

TEST_CASE("relator lists", "[presentation]") {
    const Field f(7);
    FieldScope scope(f);
    const RelatorLists r = relators();
    CHECK(r.e0.size() == 5);
    CHECK(r.e1.size() == 16);
    CHECK(r.deg3.size() == 15);
    CHECK(r.all().size() == 36);
    CHECK(r.e0[0].f == free_pow(L(Letter::Tw0), 6) - free_one());
    const FreeElement S1e = L(Letter::Ts1) + epsilon(Character::trivial());
    const FreeElement S0e = L(Letter::Ts0) + epsilon(Character::trivial());
    const FreeElement last =
        free_mul(free_mul(free_mul(S1e, L(Letter::Bp)), L(Letter::Bz1)), L(Letter::Bp)) +
        free_mul(free_mul(free_mul(S0e, L(Letter::Bm)), L(Letter::Bz0)), L(Letter::Bm));
    CHECK(r.deg3.back().f == last);
    for (const Relator& rel : r.all()) {
        INFO(rel.name);
        CHECK(evaluate(rel.f).is_zero());
    }
}

TEST_CASE("literal epsilon bound breaks relators", "[presentation]") {
    const Field f(5);
    FieldScope scope(f);
    int nonzero = 0;
    for (const Relator& rel : relators(EpsilonBound::literal).all())
        if (!evaluate(rel.f).is_zero()) ++nonzero;
    CHECK(nonzero > 0);
}

TEST_CASE("evaluation of words", "[presentation]") {
    const Field f(5);
    FieldScope scope(f);
    CHECK(evaluate(free_mul(L(Letter::Bz1), L(Letter::Bp))) == ap(Weyl::s(1)));
    const FreeElement S0 = L(Letter::Ts0);
    CHECK(evaluate(free_mul(S0, S0) + free_mul(epsilon(Character::trivial()), S0)).is_zero());
    CHECK(evaluate(free_one()) == from_hecke(hecke_one()));
}

TEST_CASE("words for basis elements", "[presentation]") {
    const Field f(5);
    FieldScope scope(f);
    const Weyl w = Weyl::from_word(1, {0});
    CHECK(word_for_basis(sym_tau(w)) == free_mul(L(Letter::Tw0), L(Letter::Ts0)));
    const Weyl s1 = Weyl::s(1);
    const FreeElement a = word_for_basis(sym_alpha(0, s1));
    CHECK(a == -free_mul(free_mul(L(Letter::Bp), L(Letter::Ts1)), L(Letter::Bp)));
    CHECK(evaluate(a) == a0(s1));
    for (std::uint32_t e = 0; e < 4; ++e)
        for (std::uint32_t len = 0; len <= 5; ++len)
            for (int first = 0; first <= 1; ++first)
                for (int d = 0; d <= 3; ++d)
                    for (int s = -1; s <= 1; ++s) {
                        const Sym sym{static_cast<std::uint8_t>(d), Weyl::make(e, len, first),
                                      static_cast<std::int8_t>(s)};
                        try {
                            validate(sym);
                        } catch (const std::invalid_argument&) {
                            continue;
                        }
                        CHECK(evaluate(word_for_basis(sym)) == g(sym));
                    }
    const Graded x = bm(kId) * Fp(3) + phi(w);
    CHECK(evaluate(word_for(x)) == x);
}

TEST_CASE("rendering of free elements", "[presentation]") {
    const Field f(5);
    FieldScope scope(f);
    CHECK(render(FreeElement{}) == "0");
    CHECK(render(free_one()) == "1");
    CHECK(render(free_mul(L(Letter::Bz1), L(Letter::Bp)) * Fp(-1)) == "-Bz1.Bp");
}
