#pragma once

#include <string>
#include <vector>

#include "sl2ext/product.hpp"

namespace sl2ext {

// Letters of the seven-generator presentation.
enum class Letter : std::uint8_t { Tw0, Ts0, Ts1, Bm, Bp, Bz0, Bz1 };
using FreeWord = std::vector<Letter>;
using FreeElement = LinComb<FreeWord>;

const char* letter_name(Letter l);
FreeElement letter(Letter l);
FreeElement free_one();
FreeElement free_mul(const FreeElement& a, const FreeElement& b);
FreeElement free_pow(const FreeElement& a, unsigned n);

// Upper summation index in epsilon_lambda = - sum_i lambda(omega0^-i) Tw0^i.
// `group` sums over the p-1 torus elements (i <= p-2); `literal` runs to p-1.
enum class EpsilonBound { group, literal };
FreeElement epsilon(Character lambda, EpsilonBound bound = EpsilonBound::group);

struct Relator {
    std::string name;
    FreeElement f;
};
struct RelatorLists {
    std::vector<Relator> e0, e1, deg3;
    std::vector<Relator> all() const;
};
RelatorLists relators(EpsilonBound bound = EpsilonBound::group);

Graded letter_value(Letter l);
Graded evaluate(const FreeWord& w);
Graded evaluate(const FreeElement& f);

// A preimage of a basis symbol under evaluate().
FreeElement word_for_basis(const Sym& b);
FreeElement word_for(const Graded& x);

std::string render(const FreeElement& f);

}  // namespace sl2ext
