#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "sl2ext/field.hpp"

namespace sl2ext {

// Element of the pro-p Iwahori-Weyl group in normal form
//     omega0^e * s_{l1} s_{l2} ... s_{lm}
// with an alternating word.  An alternating word is determined by its
// first letter and its length, which is all that is stored.
struct Weyl {
    std::uint32_t e = 0;    // exponent of omega0, in [0, p-1)
    std::uint32_t len = 0;  // word length
    std::uint8_t first = 0; // first letter (0 or 1); 0 for the empty word

    auto operator<=>(const Weyl&) const = default;

    static Weyl identity() { return {}; }
    static Weyl omega(std::int64_t e);
    static Weyl s(int i) { return {0, 1, static_cast<std::uint8_t>(i)}; }
    // omega0^e * (alternating word of given length starting with `first`)
    static Weyl make(std::int64_t e, std::uint32_t len, int first);
    // Normal form of omega0^e times an arbitrary word in s0, s1.
    static Weyl from_word(std::int64_t e, const std::vector<int>& letters);

    int letter(std::uint32_t i) const { return first ^ static_cast<int>(i & 1U); }
    int last() const { return letter(len - 1); }
    std::vector<int> word() const;

    bool is_torus() const { return len == 0; }
    Weyl torus_part() const { return {e, 0, 0}; }
    Weyl word_part() const { return {0, len, first}; }
};

Weyl mul(const Weyl& v, const Weyl& w);
Weyl inv(const Weyl& w);
inline std::uint32_t length(const Weyl& w) { return w.len; }
// l(vw) == l(v) + l(w)
bool lengths_add(const Weyl& v, const Weyl& w);
// conjugation by varpi: swaps s0 and s1, inverts the torus part
Weyl conj_varpi(const Weyl& w);
// u_w^2 = u0^(2e)
Fp u_square(const Weyl& w);
// c_{-1} = s0^2 = s1^2 = omega0^((p-1)/2)
Weyl c_minus_one();

// Text form "w(e;s0 s1 ...)".
std::string render(const Weyl& w);

}  // namespace sl2ext
