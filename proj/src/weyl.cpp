#include "sl2ext/weyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace sl2ext {

namespace {
std::uint32_t reduce_exp(std::int64_t e) {
    const std::int64_t n = field().torus_order();
    std::int64_t r = e % n;
    return static_cast<std::uint32_t>(r < 0 ? r + n : r);
}
}  // namespace

Weyl Weyl::omega(std::int64_t e) { return {reduce_exp(e), 0, 0}; }

Weyl Weyl::make(std::int64_t e, std::uint32_t len, int first) {
    if (first != 0 && first != 1) throw std::invalid_argument("letter must be 0 or 1");
    return {reduce_exp(e), len, static_cast<std::uint8_t>(len == 0 ? 0 : first)};
}

Weyl Weyl::from_word(std::int64_t e, const std::vector<int>& letters) {
    Weyl w = omega(e);
    for (int l : letters) {
        if (l != 0 && l != 1) throw std::invalid_argument("letter must be s0 or s1");
        w = mul(w, s(l));
    }
    return w;
}

std::vector<int> Weyl::word() const {
    std::vector<int> out(len);
    for (std::uint32_t i = 0; i < len; ++i) out[i] = letter(i);
    return out;
}

Weyl mul(const Weyl& v, const Weyl& w) {
    // s_i omega0^e = omega0^(-e) s_i, so pushing omega0^(w.e) left through
    // the word of v flips its sign once per letter.
    std::int64_t e = static_cast<std::int64_t>(v.e) + ((v.len & 1U) ? -static_cast<std::int64_t>(w.e)
                                                                   : static_cast<std::int64_t>(w.e));
    if (v.len == 0) return Weyl::make(e, w.len, w.first);
    if (w.len == 0) return Weyl::make(e, v.len, v.first);
    if (v.last() != w.first) return Weyl::make(e, v.len + w.len, v.first);
    // Equal letters meet: s s = c_{-1} is central, and the next pair meets
    // again because both words alternate.  So min(len) pairs cancel.
    const std::uint32_t k = std::min(v.len, w.len);
    e += static_cast<std::int64_t>(k) * field().half();
    if (v.len > k) return Weyl::make(e, v.len - k, v.first);
    if (w.len > k) return Weyl::make(e, w.len - k, w.letter(k));
    return Weyl::omega(e);
}

Weyl inv(const Weyl& w) {
    // (omega^e a)^(-1) = a^(-1) omega^(-e) and s^(-1) = c s
    const std::int64_t m = w.len;
    std::int64_t e = m * field().half();
    e += (m & 1) ? static_cast<std::int64_t>(w.e) : -static_cast<std::int64_t>(w.e);
    return Weyl::make(e, w.len, w.len ? w.last() : 0);
}

bool lengths_add(const Weyl& v, const Weyl& w) {
    return v.len == 0 || w.len == 0 || v.last() != w.first;
}

Weyl conj_varpi(const Weyl& w) {
    return Weyl::make(-static_cast<std::int64_t>(w.e), w.len, w.len ? (w.first ^ 1) : 0);
}

Fp u_square(const Weyl& w) { return Fp::raw(field().root_pow(2 * static_cast<std::int64_t>(w.e))); }

Weyl c_minus_one() { return Weyl::omega(field().half()); }

std::string render(const Weyl& w) {
    std::string out = "w(" + std::to_string(w.e) + ";";
    for (std::uint32_t i = 0; i < w.len; ++i) {
        if (i) out += ' ';
        out += w.letter(i) ? "s1" : "s0";
    }
    out += ')';
    return out;
}

}  // namespace sl2ext
