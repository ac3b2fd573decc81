#include "sl2ext/hecke.hpp"

namespace sl2ext {

Hecke hecke_scalar(Fp c) { return Hecke(Weyl::identity(), c); }

Hecke e_lambda(Character lambda) {
    Hecke out;
    const std::uint32_t n = field().torus_order();
    for (std::uint32_t t = 0; t < n; ++t) out.add(Weyl::omega(t), -char_eval(lambda, t).inv());
    return out;
}

Hecke left_letter(int i, const Weyl& w) {
    const Weyl s = Weyl::s(i);
    if (lengths_add(s, w)) return tau(mul(s, w));
    // w = s w' with lengths adding, and tau_s^2 = -e_1 tau_s = sum_t tau_{t s}
    Hecke out;
    for (std::uint32_t t = 0; t < field().torus_order(); ++t) out.add(mul(Weyl::omega(t), w), Fp::raw(1));
    return out;
}

Hecke right_letter(const Weyl& w, int i) {
    const Weyl s = Weyl::s(i);
    if (lengths_add(w, s)) return tau(mul(w, s));
    Hecke out;
    for (std::uint32_t t = 0; t < field().torus_order(); ++t) out.add(mul(w, Weyl::omega(t)), Fp::raw(1));
    return out;
}

Hecke mul_basis(const Weyl& v, const Weyl& w) {
    if (lengths_add(v, w)) return tau(mul(v, w));
    Hecke x = tau(w);
    for (std::uint32_t k = v.len; k-- > 0;) {
        const int l = v.letter(k);
        x = x.map_linear([l](const Weyl& u) { return left_letter(l, u); });
    }
    const Weyl om = v.torus_part();
    return x.map_linear([&om](const Weyl& u) { return tau(mul(om, u)); });
}

Hecke mul(const Hecke& a, const Hecke& b) {
    Hecke out;
    for (const auto& [v, cv] : a)
        for (const auto& [w, cw] : b) out.add(mul_basis(v, w), cv * cw);
    return out;
}

Hecke mul_right_recursive(const Hecke& a, const Hecke& b) {
    Hecke out;
    for (const auto& [w, cw] : b) {
        Hecke x = a.map_linear([&w](const Weyl& u) { return tau(mul(u, w.torus_part())); });
        for (std::uint32_t k = 0; k < w.len; ++k) {
            const int l = w.letter(k);
            x = x.map_linear([l](const Weyl& u) { return right_letter(u, l); });
        }
        out.add(x, cw);
    }
    return out;
}

}  // namespace sl2ext
