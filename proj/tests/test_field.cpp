#include "catch_amalgamated.hpp"
#include "sl2ext/field.hpp"

using namespace sl2ext;

TEST_CASE("inverse, sum and primitive root at p = 5", "[field]") {
    const Field f(5);
    FieldScope scope(f);
    CHECK(f.root() == 2);
    CHECK(Fp(4).inv() == Fp(4));
    CHECK(Fp(2).inv() == Fp(3));
    CHECK(Fp(3) + Fp(4) == Fp(2));
    CHECK(Fp(-1) == Fp(4));
    CHECK(Fp(2).pow(-1) == Fp(3));
    CHECK(Fp(4).centered() == -1);
    CHECK_THROWS_AS(Fp(0).inv(), std::domain_error);
    CHECK_THROWS_AS(Fp(10).inv(), std::domain_error);
}

TEST_CASE("inverse agrees with Fermat's little theorem", "[field]") {
    for (std::uint32_t p : {5U, 7U, 11U, 13U, 101U, 65521U}) {
        const Field f(p);
        FieldScope scope(f);
        for (std::uint32_t a = 1; a < std::min(p, 500U); ++a) {
            const Fp x(a);
            CHECK(x * x.inv() == Fp(1));
            CHECK(x.inv() == x.pow(p - 2));
        }
    }
}

TEST_CASE("field construction is validated", "[field]") {
    CHECK_THROWS_AS(Field(2), std::invalid_argument);
    CHECK_THROWS_AS(Field(3), std::invalid_argument);
    CHECK_THROWS_AS(Field(9), std::invalid_argument);
    CHECK_THROWS_AS(Field(5, 4), std::invalid_argument);  // 4 has order 2
    CHECK_NOTHROW(Field(5, 3));
    CHECK(Field(7).root() == 3);
    CHECK(Field::is_primitive_root(3, 7));
    CHECK_FALSE(Field::is_primitive_root(2, 7));
    CHECK(Field::smallest_primitive_root(23) == 5);
}

TEST_CASE("character evaluation", "[field]") {
    const Field f(5);
    FieldScope scope(f);
    CHECK(char_eval(Character::id(1), 1) == Fp(2));
    CHECK(char_eval(Character::id(0), 7) == Fp(1));
    CHECK(char_eval(Character::id(2), 3) == Fp(4));
    CHECK(char_eval(Character::id(-1), 1) == Fp(3));
    CHECK(Character::id(3) * Character::id(2) == Character::id(1));
    CHECK(Character::id(1).inverse() == Character::id(3));
    CHECK(Character::id(0) == Character::trivial());
}

TEST_CASE("field scopes nest and restore", "[field]") {
    const Field a(5), b(7);
    FieldScope outer(a);
    CHECK(field().p() == 5);
    {
        FieldScope inner(b);
        CHECK(field().p() == 7);
        CHECK(Fp(-1).value() == 6);
    }
    CHECK(field().p() == 5);
    CHECK(Fp(-1).value() == 4);
}
