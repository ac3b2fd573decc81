#pragma once

#include "sl2ext/lincomb.hpp"
#include "sl2ext/weyl.hpp"

namespace sl2ext {

// Element of the pro-p Iwahori-Hecke algebra in the basis (tau_w).
using Hecke = LinComb<Weyl>;

inline Hecke tau(const Weyl& w) { return Hecke(w); }
inline Hecke hecke_one() { return tau(Weyl::identity()); }
Hecke hecke_scalar(Fp c);

// e_lambda = - sum_t lambda(t)^(-1) tau_t
Hecke e_lambda(Character lambda);

// Product by left letter recursion.
Hecke mul(const Hecke& a, const Hecke& b);
// Same product, computed by letter recursion on the right factor.
Hecke mul_right_recursive(const Hecke& a, const Hecke& b);

// tau_v * tau_w
Hecke mul_basis(const Weyl& v, const Weyl& w);
// tau_{s_i} * tau_w and tau_w * tau_{s_i}
Hecke left_letter(int i, const Weyl& w);
Hecke right_letter(const Weyl& w, int i);

}  // namespace sl2ext
