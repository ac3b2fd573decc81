#pragma once

#include "sl2ext/graded.hpp"

namespace sl2ext {

// Cup product inside the summand of a single support w.
Graded cup_summand(const Sym& a, const Sym& b);
// Bilinear cup product of elements; terms with different supports pair to zero.
Graded cup(const Graded& x, const Graded& y);

// The product of E*.
Graded mul(const Graded& x, const Graded& y);
Graded mul_basis(const Sym& x, const Sym& y);
Graded mul_all(std::initializer_list<Graded> factors);

// Duality pairing E^i x E^(3-i) -> k.
Fp pairing(const Graded& x, const Graded& y);

// The two base quadratic products beta^0_{s_i} * beta^0_{s_i}.
Graded base_quadratic(int i);

// Counts, on this thread, cup products of degrees (1,2) or (2,1) taken in a
// length-zero summand.  Lets a caller certify that a computation never used
// the torus-summand duality constants.
std::uint64_t torus_dual_cup_uses();

}  // namespace sl2ext
