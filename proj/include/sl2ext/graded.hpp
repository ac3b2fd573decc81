#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "sl2ext/hecke.hpp"

namespace sl2ext {

// Basis symbol of E*: tau_w (degree 0), beta^s_w (degree 1),
// alpha^s_w (degree 2), phi_w (degree 3).  The sign s is -1, 0, +1 and is
// only meaningful in degrees 1 and 2; sign 0 needs l(w) >= 1.
struct Sym {
    std::uint8_t deg = 0;
    Weyl w;
    std::int8_t sign = 0;

    auto operator<=>(const Sym&) const = default;
};

Sym sym_tau(const Weyl& w);
Sym sym_beta(int sign, const Weyl& w);
Sym sym_alpha(int sign, const Weyl& w);
Sym sym_phi(const Weyl& w);
// Throws std::invalid_argument for degree/sign combinations outside the basis.
void validate(const Sym& s);

using Graded = LinComb<Sym>;

inline Graded g(const Sym& s, Fp c = Fp::raw(1)) { return Graded(s, c); }
inline Graded bm(const Weyl& w) { return g(sym_beta(-1, w)); }
inline Graded b0(const Weyl& w) { return g(sym_beta(0, w)); }
inline Graded bp(const Weyl& w) { return g(sym_beta(+1, w)); }
inline Graded am(const Weyl& w) { return g(sym_alpha(-1, w)); }
inline Graded a0(const Weyl& w) { return g(sym_alpha(0, w)); }
inline Graded ap(const Weyl& w) { return g(sym_alpha(+1, w)); }
inline Graded phi(const Weyl& w) { return g(sym_phi(w)); }

Graded from_hecke(const Hecke& h);
// The degree-0 part as a Hecke element.
Hecke to_hecke(const Graded& x);
Graded degree_part(const Graded& x, int d);
// Degree of a nonzero homogeneous element; -1 for zero; throws if mixed.
int homogeneous_degree(const Graded& x);

// Left and right E0-actions.
Graded act_left(const Hecke& h, const Graded& x);
Graded act_right(const Graded& x, const Hecke& h);
Graded act_left_basis(const Weyl& v, const Sym& s);
Graded act_right_basis(const Sym& s, const Weyl& v);
// Single-letter actions, letter i in {0, 1}.
Graded left_s(int i, const Sym& s);
Graded right_s(const Sym& s, int i);
// tau_{omega0^k} * s and s * tau_{omega0^k}
Graded left_omega(std::int64_t k, const Sym& s);
Graded right_omega(const Sym& s, std::int64_t k);
// e_lambda * s
Graded left_idempotent(Character lambda, const Sym& s);

// The anti-involution J and the involution Gamma_varpi.
Graded involution(const Graded& x);
Graded involution(const Sym& s);
Graded gamma_varpi(const Graded& x);
Graded gamma_varpi(const Sym& s);
Hecke involution(const Hecke& h);
Hecke gamma_varpi(const Hecke& h);

// b = c * tau_a * g * tau_b with g one of beta^-_1, beta^+_1, beta^0_{s0}, beta^0_{s1}.
struct Deg1Factor {
    Fp c;
    Weyl a;
    Sym g;
    Weyl b;
};
Deg1Factor factor_deg1(const Sym& b);
bool is_generator(const Sym& b);

std::string kind_name(const Sym& s);

}  // namespace sl2ext
