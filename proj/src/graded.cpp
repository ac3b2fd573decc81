#include "sl2ext/graded.hpp"

#include <stdexcept>

#include "memo.hpp"

namespace sl2ext {

namespace detail {
std::shared_ptr<Memo> make_memo() { return std::make_shared<Memo>(); }
}  // namespace detail

Sym sym_tau(const Weyl& w) { return {0, w, 0}; }
Sym sym_phi(const Weyl& w) { return {3, w, 0}; }

Sym sym_beta(int sign, const Weyl& w) {
    Sym s{1, w, static_cast<std::int8_t>(sign)};
    validate(s);
    return s;
}

Sym sym_alpha(int sign, const Weyl& w) {
    Sym s{2, w, static_cast<std::int8_t>(sign)};
    validate(s);
    return s;
}

void validate(const Sym& s) {
    if (s.deg > 3) throw std::invalid_argument("degree must be 0..3");
    if (s.sign < -1 || s.sign > 1) throw std::invalid_argument("sign must be -1, 0 or +1");
    if ((s.deg == 0 || s.deg == 3) && s.sign != 0)
        throw std::invalid_argument("tau and phi symbols carry no sign");
    if ((s.deg == 1 || s.deg == 2) && s.sign == 0 && s.w.len == 0)
        throw std::invalid_argument(kind_name(s) + " needs a support of length >= 1");
}

std::string kind_name(const Sym& s) {
    static const char* names[4][3] = {
        {"tau", "tau", "tau"}, {"bm", "b0", "bp"}, {"am", "a0", "ap"}, {"phi", "phi", "phi"}};
    return names[s.deg][s.sign + 1];
}

Graded from_hecke(const Hecke& h) {
    Graded out;
    for (const auto& [w, c] : h) out.add(sym_tau(w), c);
    return out;
}

Hecke to_hecke(const Graded& x) {
    Hecke out;
    for (const auto& [s, c] : x)
        if (s.deg == 0) out.add(s.w, c);
    return out;
}

Graded degree_part(const Graded& x, int d) {
    Graded out;
    for (const auto& [s, c] : x)
        if (s.deg == d) out.add(s, c);
    return out;
}

int homogeneous_degree(const Graded& x) {
    int d = -1;
    for (const auto& [s, c] : x) {
        if (d >= 0 && d != s.deg) throw std::invalid_argument("element is not homogeneous");
        d = s.deg;
    }
    return d;
}

// ---------------------------------------------------------------------------
// Left action tables.

Graded left_omega(std::int64_t k, const Sym& s) {
    const Field& f = field();
    Sym t = s;
    t.w = mul(Weyl::omega(k), s.w);
    Fp c = Fp::raw(1);
    if (s.deg == 1 && s.sign != 0) c = Fp::raw(f.root_pow(s.sign > 0 ? 2 * k : -2 * k));
    if (s.deg == 2 && s.sign != 0) c = Fp::raw(f.root_pow(s.sign > 0 ? -2 * k : 2 * k));
    return g(t, c);
}

Graded left_idempotent(Character lambda, const Sym& s) {
    Graded out;
    for (std::uint32_t t = 0; t < field().torus_order(); ++t)
        out.add(left_omega(t, s), -char_eval(lambda, t).inv());
    return out;
}

namespace {

Graded compute_left_s(int i, const Sym& s) {
    const Weyl& w = s.w;
    const Weyl si = Weyl::s(i);
    const bool adds = lengths_add(si, w);
    const Weyl sw = mul(si, w);
    const Fp one = Fp::raw(1);
    auto E = [&](int m, const Sym& x) { return left_idempotent(Character::id(m), x); };
    auto E1 = [&](const Sym& x) { return left_idempotent(Character::trivial(), x); };
    const Sym bmw{1, w, -1}, bpw{1, w, 1}, amw{2, w, -1}, apw{2, w, 1};

    Graded out;
    switch (s.deg) {
        case 0:
            return from_hecke(left_letter(i, w));
        case 3:
            if (adds) return out;
            out.add(sym_phi(sw), one);
            out.add(E1(s), -one);
            return out;
        case 1:
            if (adds) {
                if (i == 0) {
                    if (s.sign == -1) out.add(Sym{1, sw, 1}, -one);
                    if (s.sign == 0) out.add(Sym{1, sw, 0}, -one);
                } else {
                    if (s.sign == 0) out.add(Sym{1, sw, 0}, -one);
                    if (s.sign == 1) out.add(Sym{1, sw, -1}, -one);
                }
                return out;
            }
            {
                const bool short_w = w.len == 1;
                const Sym b0w{1, w, 0};
                out.add(E1(s), -one);
                if (i == 0) {
                    if (s.sign == -1) {
                        out.add(E(1, b0w), Fp(-2));
                        out.add(Sym{1, sw, 1}, -one);
                        if (short_w) out.add(E(2, bpw), one);
                    } else if (s.sign == 0) {
                        if (short_w) out.add(E(1, bpw), one);
                    }
                } else {
                    if (s.sign == 0) {
                        if (short_w) out.add(E(-1, bmw), -one);
                    } else if (s.sign == 1) {
                        out.add(E(-1, b0w), Fp(2));
                        out.add(Sym{1, sw, -1}, -one);
                        if (short_w) out.add(E(-2, bmw), one);
                    }
                }
            }
            return out;
        case 2:
            if (adds) {
                if (i == 0 && s.sign == 1) out.add(Sym{2, sw, -1}, -one);
                if (i == 1 && s.sign == -1) out.add(Sym{2, sw, 1}, -one);
                return out;
            }
            {
                const bool short_w = w.len == 1;
                const Sym a0w{2, w, 0};
                out.add(E1(s), -one);
                if (i == 0) {
                    if (s.sign == 0) {
                        out.add(E(1, amw), Fp(2));
                        if (!short_w) out.add(Sym{2, sw, 0}, -one);
                    } else if (s.sign == 1) {
                        out.add(Sym{2, sw, -1}, -one);
                        if (short_w) {
                            out.add(E(1, a0w), -one);
                            out.add(E(2, amw), one);
                        }
                    }
                } else {
                    if (s.sign == -1) {
                        out.add(Sym{2, sw, 1}, -one);
                        if (short_w) {
                            out.add(E(-1, a0w), one);
                            out.add(E(-2, apw), one);
                        }
                    } else if (s.sign == 0) {
                        out.add(E(-1, apw), Fp(-2));
                        if (!short_w) out.add(Sym{2, sw, 0}, -one);
                    }
                }
            }
            return out;
        default:
            throw std::invalid_argument("bad degree");
    }
}

}  // namespace

Graded left_s(int i, const Sym& s) {
    auto& table = field().memo().left_s[i];
    const auto key = detail::pack(s);
    if (auto it = table.find(key); it != table.end()) return it->second;
    Graded r = compute_left_s(i, s);
    table.emplace(key, r);
    return r;
}

// ---------------------------------------------------------------------------
// Involutions.

Graded involution(const Sym& s) {
    const Weyl wi = inv(s.w);
    const Fp u2 = u_square(s.w);
    const bool odd = s.w.len & 1U;
    const Fp one = Fp::raw(1);
    switch (s.deg) {
        case 0:
            return g(sym_tau(wi));
        case 3:
            return g(sym_phi(wi));
        default:
            break;
    }
    if (s.sign == 0) return g(Sym{s.deg, wi, 0}, odd ? -one : one);
    // The u^2 weight is u_w^2 for beta^- and alpha^+, u_w^-2 for the others.
    const bool direct = (s.deg == 1) == (s.sign == -1);
    const Fp c = direct ? u2 : u2.inv();
    if (!odd) return g(Sym{s.deg, wi, s.sign}, c);
    return g(Sym{s.deg, wi, static_cast<std::int8_t>(-s.sign)}, -c);
}

Graded involution(const Graded& x) {
    return x.map_linear([](const Sym& s) { return involution(s); });
}

Graded gamma_varpi(const Sym& s) {
    const Weyl wc = conj_varpi(s.w);
    if (s.deg == 0 || s.deg == 3) return g(Sym{s.deg, wc, 0});
    if (s.sign == 0) return g(Sym{s.deg, wc, 0}, -Fp::raw(1));
    return g(Sym{s.deg, wc, static_cast<std::int8_t>(-s.sign)});
}

Graded gamma_varpi(const Graded& x) {
    return x.map_linear([](const Sym& s) { return gamma_varpi(s); });
}

Hecke involution(const Hecke& h) {
    return h.map_linear([](const Weyl& w) { return tau(inv(w)); });
}

Hecke gamma_varpi(const Hecke& h) {
    return h.map_linear([](const Weyl& w) { return tau(conj_varpi(w)); });
}

// ---------------------------------------------------------------------------
// Right action, transported through J.

Graded right_omega(const Sym& s, std::int64_t k) {
    if (s.deg == 0) return g(sym_tau(mul(s.w, Weyl::omega(k))));
    return involution(involution(s).map_linear([k](const Sym& t) { return left_omega(-k, t); }));
}

Graded right_s(const Sym& s, int i) {
    auto& table = field().memo().right_s[i];
    const auto key = detail::pack(s);
    if (auto it = table.find(key); it != table.end()) return it->second;
    Graded r;
    if (s.deg == 0) {
        r = from_hecke(right_letter(s.w, i));
    } else {
        const Weyl si_inv = inv(Weyl::s(i));
        r = involution(involution(s).map_linear([&](const Sym& t) { return act_left_basis(si_inv, t); }));
    }
    table.emplace(key, r);
    return r;
}

Graded act_left_basis(const Weyl& v, const Sym& s) {
    if (s.deg == 0) return from_hecke(mul_basis(v, s.w));
    Graded x = g(s);
    for (std::uint32_t k = v.len; k-- > 0;) {
        const int l = v.letter(k);
        x = x.map_linear([l](const Sym& t) { return left_s(l, t); });
    }
    if (v.e == 0) return x;
    return x.map_linear([&v](const Sym& t) { return left_omega(v.e, t); });
}

Graded act_right_basis(const Sym& s, const Weyl& v) {
    if (s.deg == 0) return from_hecke(mul_basis(s.w, v));
    Graded x = v.e == 0 ? g(s) : right_omega(s, v.e);
    for (std::uint32_t k = 0; k < v.len; ++k) {
        const int l = v.letter(k);
        x = x.map_linear([l](const Sym& t) { return right_s(t, l); });
    }
    return x;
}

Graded act_left(const Hecke& h, const Graded& x) {
    Graded out;
    for (const auto& [v, cv] : h)
        for (const auto& [s, cs] : x) out.add(act_left_basis(v, s), cv * cs);
    return out;
}

Graded act_right(const Graded& x, const Hecke& h) {
    Graded out;
    for (const auto& [s, cs] : x)
        for (const auto& [v, cv] : h) out.add(act_right_basis(s, v), cv * cs);
    return out;
}

// ---------------------------------------------------------------------------
// Degree-one factorization through the four bimodule generators.

bool is_generator(const Sym& b) {
    if (b.deg != 1) return false;
    if (b.sign != 0) return b.w == Weyl::identity();
    return b.w.e == 0 && b.w.len == 1;
}

Deg1Factor factor_deg1(const Sym& b) {
    if (b.deg != 1) throw std::invalid_argument("factor_deg1 expects a degree-1 symbol");
    validate(b);
    const Weyl id = Weyl::identity();
    const Weyl& w = b.w;
    const Fp one = Fp::raw(1);
    if (b.sign == 0) {
        const Weyl rest = w.len > 1 ? Weyl::make(0, w.len - 1, w.first ^ 1) : id;
        return {one, w.torus_part(), Sym{1, Weyl::s(w.first), 0}, rest};
    }
    const Sym gm{1, id, -1}, gp{1, id, 1};
    // beta^-_1 tau_w = beta^-_w unless w starts with s1; mirrored for beta^+
    const int bad_first = b.sign < 0 ? 1 : 0;
    if (w.len == 0 || w.first != bad_first) return {one, id, b.sign < 0 ? gm : gp, w};
    const Fp u2 = u_square(w);
    const Fp weight = b.sign < 0 ? u2 : u2.inv();
    if (w.len % 2 == 0) return {weight, w, b.sign < 0 ? gm : gp, id};
    return {-weight, w, b.sign < 0 ? gp : gm, id};
}

}  // namespace sl2ext
