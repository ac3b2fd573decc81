#include "sl2ext/sections.hpp"

#include <algorithm>
#include <stdexcept>

namespace sl2ext {

void Tensor::add_term(Fp c, std::vector<Graded> factors) {
    if (static_cast<int>(factors.size()) != arity_) throw std::invalid_argument("tensor arity mismatch");
    for (const auto& f : factors)
        if (!f.is_zero() && homogeneous_degree(f) != 1)
            throw std::invalid_argument("tensor factors must have degree 1");
    if (c.is_zero()) return;
    terms_.push_back({c, std::move(factors)});
}

void Tensor::add(const Tensor& o, Fp c) {
    if (o.arity_ != arity_) throw std::invalid_argument("tensor arity mismatch");
    for (const auto& t : o.terms_) add_term(t.c * c, t.factors);
}

Tensor Tensor::scaled(Fp c) const {
    Tensor out(arity_);
    out.add(*this, c);
    return out;
}

Tensor tensor(std::initializer_list<Graded> factors, Fp c) {
    Tensor t(static_cast<int>(factors.size()));
    t.add_term(c, std::vector<Graded>(factors));
    return t;
}

Graded eval(const Tensor& t) {
    Graded out;
    for (const auto& term : t.terms()) {
        Graded acc = term.factors.front();
        for (std::size_t k = 1; k < term.factors.size() && !acc.is_zero(); ++k) acc = mul(acc, term.factors[k]);
        out.add(acc, term.c);
    }
    return out;
}

Tensor tensor_act(const Hecke& h, const Tensor& t, Side side) {
    Tensor out(t.arity());
    for (const auto& term : t.terms()) {
        auto f = term.factors;
        if (side == Side::left)
            f.front() = act_left(h, f.front());
        else
            f.back() = act_right(f.back(), h);
        out.add_term(term.c, std::move(f));
    }
    return out;
}

Tensor involution(const Tensor& t) {
    const int n = t.arity();
    const Fp sign = (n * (n - 1) / 2) % 2 ? -Fp::raw(1) : Fp::raw(1);
    Tensor out(n);
    for (const auto& term : t.terms()) {
        std::vector<Graded> f;
        for (auto it = term.factors.rbegin(); it != term.factors.rend(); ++it) f.push_back(involution(*it));
        out.add_term(term.c * sign, std::move(f));
    }
    return out;
}

Tensor gamma_varpi(const Tensor& t) {
    Tensor out(t.arity());
    for (const auto& term : t.terms()) {
        std::vector<Graded> f;
        for (const auto& x : term.factors) f.push_back(gamma_varpi(x));
        out.add_term(term.c, std::move(f));
    }
    return out;
}

namespace {

const Weyl kId = Weyl::identity();

// v with u = s_j v and l(u) = l(v) + 1, where j is the first letter of u
Weyl strip_first(const Weyl& u) { return mul(inv(Weyl::s(u.first)), u); }

Hecke tau_s_plus_e1(int i) { return tau(Weyl::s(i)) + e_lambda(Character::trivial()); }

}  // namespace

Tensor R2(const Sym& a) {
    if (a.deg != 2) throw std::invalid_argument("R2 expects a degree-2 symbol");
    const Weyl& u = a.w;
    const Fp one = Fp::raw(1);
    if (u.len >= 1) {
        const Weyl v = strip_first(u);
        if (u.first == 1) {
            if (a.sign == -1) return tensor({bp(kId), b0(u)}, -one);
            if (a.sign == 0) return tensor({bp(kId), bm(u)});
            return tensor({b0(Weyl::s(1)), bp(v)});
        }
        if (a.sign == -1) return tensor({b0(Weyl::s(0)), bm(v)}, -one);
        if (a.sign == 0) return tensor({bm(kId), bp(u)}, -one);
        return tensor({bm(kId), b0(u)});
    }
    // Length zero: shift into the length-one summands and correct.
    const int i = a.sign < 0 ? 0 : 1;
    const Weyl v = mul(inv(Weyl::s(i)), u);
    const Sym partner{2, v, static_cast<std::int8_t>(-a.sign)};
    Graded shifted = g(a) + act_left(tau(Weyl::s(i)), g(partner));
    for (const auto& [s, c] : shifted)
        if (s.w.len == 0) throw std::logic_error("R2 shift left a length-zero term");
    Tensor out = R2(shifted);
    out.add(tensor_act(tau(Weyl::s(i)), R2(partner), Side::left), -one);
    return out;
}

Tensor R2(const Graded& x) {
    Tensor out(2);
    for (const auto& [s, c] : x) out.add(R2(s), c);
    return out;
}

Tensor R3(const Sym& p) {
    if (p.deg != 3) throw std::invalid_argument("R3 expects a degree-3 symbol");
    const Weyl& u = p.w;
    if (u.len >= 1) {
        const Weyl v = strip_first(u);
        if (u.first == 1) return tensor({bp(kId), b0(Weyl::s(1)), bp(v)});
        return tensor({bm(kId), b0(Weyl::s(0)), bm(v)}, -Fp::raw(1));
    }
    const Weyl v = mul(inv(Weyl::s(0)), u);
    return tensor_act(tau_s_plus_e1(0), R3(sym_phi(v)), Side::left);
}

Tensor R3(const Graded& x) {
    Tensor out(3);
    for (const auto& [s, c] : x) out.add(R3(s), c);
    return out;
}

Tensor R3_prime(const Sym& p) {
    if (p.deg != 3) throw std::invalid_argument("R3_prime expects a degree-3 symbol");
    if (p.w.len >= 1) return R3(p);
    const Tensor t = R3(sym_phi(kId));
    const Tensor jt = involution(t);
    Tensor avg(3);
    avg.add(t);
    avg.add(gamma_varpi(t));
    avg.add(jt);
    avg.add(gamma_varpi(jt));
    // phi_omega = phi_1 tau_omega
    return tensor_act(tau(p.w), avg.scaled(Fp(4).inv()), Side::right);
}

Tensor R3_prime(const Graded& x) {
    Tensor out(3);
    for (const auto& [s, c] : x) out.add(R3_prime(s), c);
    return out;
}

std::vector<Tensor> R3_phi1_summands_literal() {
    const Weyl s0 = Weyl::s(0), s1 = Weyl::s(1);
    const Fp one = Fp::raw(1);
    const Hecke e1 = e_lambda(Character::trivial());
    return {
        tensor({act_left(tau_s_plus_e1(0), bm(kId)), b0(inv(s0)), bm(kId)}, -one),
        tensor({act_left(tau_s_plus_e1(1), bp(kId)), b0(inv(s1)), bp(kId)}),
        tensor({bm(kId), b0(s0), act_right(bm(kId), tau(inv(s0)) + e1)}, -one),
        tensor({bp(kId), b0(s1), act_right(bp(kId), tau(inv(s1)) + e1)}),
    };
}

namespace {

std::vector<NamedTensor> monomials() {
    const Weyl s0 = Weyl::s(0), s1 = Weyl::s(1);
    return {
        {"bm1*bm1", tensor({bm(kId), bm(kId)})},  {"bp1*bm1", tensor({bp(kId), bm(kId)})},
        {"bz1*bm1", tensor({b0(s1), bm(kId)})},   {"bp1*bz0", tensor({bp(kId), b0(s0)})},
        {"bz1*bz0", tensor({b0(s1), b0(s0)})},    {"bm1*bp1", tensor({bm(kId), bp(kId)})},
        {"bp1*bp1", tensor({bp(kId), bp(kId)})},  {"bz0*bp1", tensor({b0(s0), bp(kId)})},
        {"bm1*bz1", tensor({bm(kId), b0(s1)})},   {"bz0*bz1", tensor({b0(s0), b0(s1)})},
    };
}

Tensor quadratic(int i) {
    const Weyl s = Weyl::s(i);
    const Fp one = Fp::raw(1);
    auto E = [](int m) { return e_lambda(Character::id(m)); };
    Tensor t = tensor({b0(s), b0(s)});
    if (i == 0) {
        t.add(tensor({act_left(E(-1), bm(kId)), b0(s)}));
        t.add(tensor({act_left(E(1), b0(s)), bm(kId)}));
        t.add(tensor({act_left(E(0), bm(kId)), bp(s)}), -one);
    } else {
        t.add(tensor({act_left(E(1), bp(kId)), b0(s)}), -one);
        t.add(tensor({act_left(E(-1), b0(s)), bp(kId)}), -one);
        t.add(tensor({act_left(E(0), bp(kId)), bm(s)}), -one);
    }
    return t;
}

Tensor mixed(int i) {
    // beta^+_{s0} (x) beta^0_{s0} + beta^0_{s0} (x) beta^-_{s0}, mirrored for s1
    const Weyl s = Weyl::s(i);
    Tensor t = tensor({i == 0 ? bp(s) : bm(s), b0(s)});
    t.add(tensor({b0(s), i == 0 ? bm(s) : bp(s)}));
    return t;
}

Tensor mixed_alternative(int i) {
    const Weyl s = Weyl::s(i);
    const Hecke ts = tau(s);
    const Graded gen = i == 0 ? bm(kId) : bp(kId);
    Tensor t = tensor({act_left(ts, gen), b0(s)}, -Fp::raw(1));
    t.add(tensor({b0(s), act_right(gen, ts)}));
    return t;
}

Tensor cubic() {
    const Weyl s0 = Weyl::s(0), s1 = Weyl::s(1);
    Tensor t = tensor({act_left(tau_s_plus_e1(1), bp(kId)), b0(inv(s1)), bp(kId)});
    t.add(tensor({act_left(tau_s_plus_e1(0), bm(kId)), b0(inv(s0)), bm(kId)}));
    return t;
}

}  // namespace

std::vector<NamedTensor> kernel_generators() {
    auto out = monomials();
    out.push_back({"quadratic-s0", quadratic(0)});
    out.push_back({"quadratic-s1", quadratic(1)});
    out.push_back({"mixed-s0", mixed(0)});
    out.push_back({"mixed-s1", mixed(1)});
    out.push_back({"cubic", cubic()});
    return out;
}

std::vector<NamedTensor> k2_generators() {
    auto out = monomials();
    out.push_back({"quadratic-s0", quadratic(0)});
    out.push_back({"quadratic-s1", quadratic(1)});
    out.push_back({"mixed-s0", mixed_alternative(0)});
    out.push_back({"mixed-s1", mixed_alternative(1)});
    return out;
}

}  // namespace sl2ext
