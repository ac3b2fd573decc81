#include "sl2ext/product.hpp"

#include <stdexcept>

#include "memo.hpp"

namespace sl2ext {

namespace {

thread_local std::uint64_t g_torus_dual_cups = 0;

// Exterior products of degree-one classes in a summand of positive length:
// beta^+ beta^- = alpha^0, beta^0 beta^+ = alpha^-, beta^- beta^0 = alpha^+.
Graded exterior(int s, int t, const Weyl& w) {
    if (s == t) return {};
    auto entry = [&](int a, int b) -> int {
        if (a == 1 && b == -1) return 0;
        if (a == 0 && b == 1) return -1;
        if (a == -1 && b == 0) return 1;
        return 2;  // not in the table
    };
    if (int r = entry(s, t); r != 2) return g(Sym{2, w, static_cast<std::int8_t>(r)});
    const int r = entry(t, s);
    return g(Sym{2, w, static_cast<std::int8_t>(r)}, -Fp::raw(1));
}

Graded cup_strict(const Graded& x, const Graded& y) {
    Graded out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) {
            if (a.w != b.w) throw std::logic_error("cup of classes with different supports");
            out.add(cup_summand(a, b), ca * cb);
        }
    return out;
}

// x * y when l(vw) = l(v) + l(w): (x tau_w) cup (tau_v y)
Graded good_product(const Sym& x, const Sym& y) {
    return cup_strict(act_right_basis(x, y.w), act_left_basis(x.w, y));
}

Graded sum_products(const Sym& x, const Graded& y) {
    Graded out;
    for (const auto& [s, c] : y) out.add(mul_basis(x, s), c);
    return out;
}

Graded left_torus(std::int64_t k, const Graded& x) {
    if (k == 0) return x;
    return x.map_linear([k](const Sym& s) { return left_omega(k, s); });
}

// Bad degree-(2,1) core: q * beta^0_{s_i} with supp(q) ending in s_i.
Graded core21(const Sym& q, const Sym& gen) {
    const Weyl u0 = q.w.word_part();
    const Sym q0{2, u0, q.sign};
    // alpha_u = kappa^-1 tau_omega alpha_{u0}
    const Fp kappa = left_omega(q.w.e, q0).coeff(q);
    const Weyl id = Weyl::identity();
    const int j = u0.first;
    const Weyl rest = u0.len > 1 ? Weyl::make(0, u0.len - 1, j ^ 1) : id;
    const Sym gm{1, id, -1}, gp{1, id, 1};
    Graded inner;
    if (q.sign == 0) {
        // alpha^0_{s1 v} = beta^+_1 beta^-_{s1 v},  alpha^0_{s0 w} = -beta^-_1 beta^+_{s0 w}
        if (j == 1)
            inner = sum_products(gp, mul_basis(Sym{1, u0, -1}, gen));
        else
            inner = -sum_products(gm, mul_basis(Sym{1, u0, 1}, gen));
    } else if (q.sign == -1) {
        if (j == 0)  // alpha^-_{s0 w} = -tau_{s0} alpha^+_w
            inner = -act_left(tau(Weyl::s(0)), mul_basis(Sym{2, rest, 1}, gen));
        else  // alpha^-_{s1 v} = -beta^+_1 beta^0_{s1 v}
            inner = -sum_products(gp, mul_basis(Sym{1, u0, 0}, gen));
    } else {
        if (j == 1)  // alpha^+_{s1 v} = -tau_{s1} alpha^-_v
            inner = -act_left(tau(Weyl::s(1)), mul_basis(Sym{2, rest, -1}, gen));
        else  // alpha^+_{s0 w} = beta^-_1 beta^0_{s0 w}
            inner = sum_products(gm, mul_basis(Sym{1, u0, 0}, gen));
    }
    return left_torus(q.w.e, inner) * kappa.inv();
}

// Bad degree-(1,1) core: z * beta^0_{s_i} with supp(z) ending in s_i.
Graded core11(const Sym& z, const Sym& gen) {
    const int i = gen.w.first;
    if (z.sign == 0) {
        const Weyl& u = z.w;
        if (u.len == 1) return left_torus(u.e, base_quadratic(i));
        // beta^0_u = beta^0_{u'} tau_{s_i}, so the product is beta^0_{u'} (tau_{s_i} beta^0_{s_i})
        const Sym zp{1, Weyl{u.e, u.len - 1, u.first}, 0};
        return sum_products(zp, left_s(i, gen));
    }
    // z = c tau_a g' tau_b with g' = beta^+-_1 whose support is trivial,
    // so g' * (tau_b * gen) only involves good products.
    const Deg1Factor f = factor_deg1(z);
    Graded inner;
    for (const auto& [t, ct] : act_left_basis(f.b, gen)) inner.add(good_product(f.g, t), ct);
    return act_left(tau(f.a), inner) * f.c;
}

Graded compute_product(const Sym& x, const Sym& y) {
    if (x.deg + y.deg >= 4) return {};
    if (x.deg == 0) return act_left_basis(x.w, y);
    if (y.deg == 0) return act_right_basis(x, y.w);
    if (lengths_add(x.w, y.w)) return good_product(x, y);
    if (x.deg == 1 && y.deg == 2) {
        // J(x y) = J(y) J(x), the sign (-1)^(1*2) being trivial
        return involution(mul(involution(y), involution(g(x))));
    }
    // y has degree 1 and x has degree 1 or 2.
    if (is_generator(y)) return x.deg == 1 ? core11(x, y) : core21(x, y);
    const Deg1Factor f = factor_deg1(y);
    Graded r;
    for (const auto& [z, cz] : act_right_basis(x, f.a)) r.add(mul_basis(z, f.g), cz);
    return act_right(r, tau(f.b)) * f.c;
}

}  // namespace

Graded cup_summand(const Sym& a, const Sym& b) {
    if (a.w != b.w) throw std::invalid_argument("cup_summand needs equal supports");
    if (a.deg + b.deg > 3) return {};
    if (a.deg == 0) return g(b);
    if (b.deg == 0) return g(a);
    if (a.deg == 1 && b.deg == 1) {
        if (a.w.len == 0) return {};
        return exterior(a.sign, b.sign, a.w);
    }
    // degrees (1,2) and (2,1): dual bases
    if (a.w.len == 0) ++g_torus_dual_cups;
    if (a.sign == b.sign) return g(sym_phi(a.w));
    return {};
}

Graded cup(const Graded& x, const Graded& y) {
    Graded out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y)
            if (a.w == b.w) out.add(cup_summand(a, b), ca * cb);
    return out;
}

std::uint64_t torus_dual_cup_uses() { return g_torus_dual_cups; }

Graded base_quadratic(int i) {
    const Weyl s0 = Weyl::s(0);
    if (i == 0) {
        Graded q;
        q.add(left_idempotent(Character::trivial(), Sym{2, s0, 0}), -Fp::raw(1));
        q.add(left_idempotent(Character::id(-1), Sym{2, s0, 1}), -Fp::raw(1));
        q.add(left_idempotent(Character::id(1), Sym{2, s0, -1}), Fp::raw(1));
        return q;
    }
    return gamma_varpi(base_quadratic(0));
}

Graded mul_basis(const Sym& x, const Sym& y) {
    auto& table = field().memo().product;
    const detail::PairKey key{detail::pack(x), detail::pack(y)};
    if (auto it = table.find(key); it != table.end()) return it->second;
    Graded r = compute_product(x, y);
    table.emplace(key, r);
    return r;
}

Graded mul(const Graded& x, const Graded& y) {
    Graded out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) out.add(mul_basis(a, b), ca * cb);
    return out;
}

Graded mul_all(std::initializer_list<Graded> factors) {
    if (factors.size() == 0) return g(sym_tau(Weyl::identity()));
    auto it = factors.begin();
    Graded acc = *it++;
    for (; it != factors.end(); ++it) acc = mul(acc, *it);
    return acc;
}

Fp pairing(const Graded& x, const Graded& y) {
    const int dx = homogeneous_degree(x), dy = homogeneous_degree(y);
    if (dx >= 0 && dy >= 0 && dx + dy != 3) throw std::invalid_argument("pairing needs complementary degrees");
    Fp total = Fp::raw(0);
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y)
            if (a.w == b.w) total += ca * cb * cup_summand(a, b).coeff(sym_phi(a.w));
    return total;
}

}  // namespace sl2ext
