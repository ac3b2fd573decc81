#include "sl2ext/presentation.hpp"

#include <stdexcept>

#include "sl2ext/sections.hpp"

namespace sl2ext {

const char* letter_name(Letter l) {
    switch (l) {
        case Letter::Tw0: return "Tw0";
        case Letter::Ts0: return "Ts0";
        case Letter::Ts1: return "Ts1";
        case Letter::Bm: return "Bm";
        case Letter::Bp: return "Bp";
        case Letter::Bz0: return "Bz0";
        case Letter::Bz1: return "Bz1";
    }
    return "?";
}

FreeElement letter(Letter l) { return FreeElement(FreeWord{l}); }
FreeElement free_one() { return FreeElement(FreeWord{}); }

FreeElement free_mul(const FreeElement& a, const FreeElement& b) {
    FreeElement out;
    for (const auto& [u, cu] : a)
        for (const auto& [v, cv] : b) {
            FreeWord w = u;
            w.insert(w.end(), v.begin(), v.end());
            out.add(w, cu * cv);
        }
    return out;
}

FreeElement free_pow(const FreeElement& a, unsigned n) {
    FreeElement r = free_one();
    for (unsigned k = 0; k < n; ++k) r = free_mul(r, a);
    return r;
}

FreeElement epsilon(Character lambda, EpsilonBound bound) {
    const std::uint32_t top = bound == EpsilonBound::group ? field().p() - 2 : field().p() - 1;
    FreeElement out;
    FreeWord w;
    for (std::uint32_t i = 0; i <= top; ++i) {
        out.add(w, -char_eval(lambda, -static_cast<std::int64_t>(i)));
        w.push_back(Letter::Tw0);
    }
    return out;
}

std::vector<Relator> RelatorLists::all() const {
    std::vector<Relator> out = e0;
    out.insert(out.end(), e1.begin(), e1.end());
    out.insert(out.end(), deg3.begin(), deg3.end());
    return out;
}

RelatorLists relators(EpsilonBound bound) {
    const Field& f = field();
    const FreeElement T = letter(Letter::Tw0), S0 = letter(Letter::Ts0), S1 = letter(Letter::Ts1),
                      M = letter(Letter::Bm), P = letter(Letter::Bp), Z0 = letter(Letter::Bz0),
                      Z1 = letter(Letter::Bz1);
    const FreeElement eps1 = epsilon(Character::trivial(), bound);
    const FreeElement eid = epsilon(Character::id(1), bound);
    const FreeElement eidinv = epsilon(Character::id(-1), bound);
    auto m = [](std::initializer_list<FreeElement> xs) {
        FreeElement r = free_one();
        for (const auto& x : xs) r = free_mul(r, x);
        return r;
    };
    const Fp two = Fp(2);
    const FreeElement Tinv = free_pow(T, f.p() - 2);
    const FreeElement Thalf = free_pow(T, f.half());
    const FreeElement S0e = S0 + eps1, S1e = S1 + eps1;

    RelatorLists L;
    L.e0 = {
        {"e0-torus-order", free_pow(T, f.p() - 1) - free_one()},
        {"e0-torus-s0", m({T, S0}) - m({S0, Tinv})},
        {"e0-torus-s1", m({T, S1}) - m({S1, Tinv})},
        {"e0-quadratic-s0", m({S0, S0}) + m({eps1, S0})},
        {"e0-quadratic-s1", m({S1, S1}) + m({eps1, S1})},
    };
    L.e1 = {
        {"e1-01", m({S1, M})},
        {"e1-02", m({S0, P})},
        {"e1-03", m({P, S0})},
        {"e1-04", m({M, S1})},
        {"e1-05", m({S0e, M, S0e}) + two * m({eid, Z0}) + m({Thalf, P})},
        {"e1-06", m({S1e, P, S1e}) - two * m({eidinv, Z1}) + m({Thalf, M})},
        {"e1-07", m({S0, Z1}) + m({Z0, S1})},
        {"e1-08", m({S1, Z0}) + m({Z1, S0})},
        {"e1-09", m({S0e, Z0}) + m({eid, S0, M})},
        {"e1-10", m({S1e, Z1}) - m({eidinv, S1, P})},
        {"e1-11", m({Z0, S0e}) + m({eidinv, M, S0})},
        {"e1-12", m({Z1, S1e}) - m({eid, P, S1})},
        {"e1-13", m({T, M}) - Fp::raw(f.root_pow(-2)) * m({M, T})},
        {"e1-14", m({T, P}) - Fp::raw(f.root_pow(2)) * m({P, T})},
        {"e1-15", m({T, Z0}) - m({Z0, Tinv})},
        {"e1-16", m({T, Z1}) - m({Z1, Tinv})},
    };
    L.deg3 = {
        {"k-01", m({M, M})},
        {"k-02", m({P, M})},
        {"k-03", m({Z1, M})},
        {"k-04", m({M, P})},
        {"k-05", m({P, P})},
        {"k-06", m({Z0, P})},
        {"k-07", m({P, Z0})},
        {"k-08", m({Z1, Z0})},
        {"k-09", m({M, Z1})},
        {"k-10", m({Z0, Z1})},
        {"k-11", m({Z0, Z0}) + m({eidinv, M, Z0}) + m({eid, Z0, M}) + m({eps1, M, S0, M})},
        {"k-12", m({Z1, Z1}) - m({eid, P, Z1}) - m({eidinv, Z1, P}) + m({eps1, P, S1, P})},
        {"k-13", m({Z0, M, S0}) - m({S0, M, Z0})},
        {"k-14", m({Z1, P, S1}) - m({S1, P, Z1})},
        {"k-15", m({S1e, P, Z1, P}) + m({S0e, M, Z0, M})},
    };
    return L;
}

Graded letter_value(Letter l) {
    const Weyl id = Weyl::identity();
    switch (l) {
        case Letter::Tw0: return g(sym_tau(Weyl::omega(1)));
        case Letter::Ts0: return g(sym_tau(Weyl::s(0)));
        case Letter::Ts1: return g(sym_tau(Weyl::s(1)));
        case Letter::Bm: return bm(id);
        case Letter::Bp: return bp(id);
        case Letter::Bz0: return b0(Weyl::s(0));
        case Letter::Bz1: return b0(Weyl::s(1));
    }
    throw std::invalid_argument("bad letter");
}

Graded evaluate(const FreeWord& w) {
    Graded acc = g(sym_tau(Weyl::identity()));
    for (Letter l : w) {
        acc = mul(acc, letter_value(l));
        if (acc.is_zero()) break;
    }
    return acc;
}

Graded evaluate(const FreeElement& f) {
    Graded out;
    for (const auto& [w, c] : f) out.add(evaluate(w), c);
    return out;
}

namespace {

FreeElement word_for_tau(const Weyl& w) {
    FreeWord out(w.e, Letter::Tw0);
    for (std::uint32_t k = 0; k < w.len; ++k) out.push_back(w.letter(k) ? Letter::Ts1 : Letter::Ts0);
    return FreeElement(out);
}

Letter generator_letter(const Sym& gen) {
    if (gen.sign == -1) return Letter::Bm;
    if (gen.sign == 1) return Letter::Bp;
    return gen.w.first ? Letter::Bz1 : Letter::Bz0;
}

FreeElement word_for_tensor(const Tensor& t) {
    FreeElement out;
    for (const auto& term : t.terms()) {
        FreeElement prod = free_one();
        for (const auto& f : term.factors) prod = free_mul(prod, word_for(f));
        out.add(prod, term.c);
    }
    return out;
}

}  // namespace

FreeElement word_for_basis(const Sym& b) {
    validate(b);
    switch (b.deg) {
        case 0:
            return word_for_tau(b.w);
        case 1: {
            const Deg1Factor f = factor_deg1(b);
            FreeElement r = free_mul(word_for_tau(f.a), letter(generator_letter(f.g)));
            return free_mul(r, word_for_tau(f.b)) * f.c;
        }
        case 2:
            return word_for_tensor(R2(b));
        default:
            return word_for_tensor(R3(b));
    }
}

FreeElement word_for(const Graded& x) {
    FreeElement out;
    for (const auto& [s, c] : x) out.add(word_for_basis(s), c);
    return out;
}

std::string render(const FreeElement& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : f) {
        const std::int64_t v = c.centered();
        if (!first) out += v < 0 ? " - " : " + ";
        else if (v < 0) out += "-";
        first = false;
        const std::int64_t a = v < 0 ? -v : v;
        if (a != 1 || w.empty()) out += std::to_string(a) + (w.empty() ? "" : "*");
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (k) out += '.';
            out += letter_name(w[k]);
        }
    }
    return out;
}

}  // namespace sl2ext
