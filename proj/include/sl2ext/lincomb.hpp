#pragma once

#include <map>
#include <utility>

#include "sl2ext/field.hpp"

namespace sl2ext {

// Finite F_p-linear combination of keys.  Zero coefficients are never
// stored, so two combinations are equal exactly when their maps are.
template <class K>
class LinComb {
public:
    using Map = std::map<K, Fp>;

    LinComb() = default;
    explicit LinComb(const K& k, Fp c = Fp::raw(1)) { add(k, c); }

    void add(const K& k, Fp c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void add(const LinComb& o, Fp c) {
        if (c.is_zero()) return;
        for (const auto& [k, v] : o.terms_) add(k, v * c);
    }

    Fp coeff(const K& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Fp::raw(0) : it->second;
    }

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    LinComb& operator+=(const LinComb& o) {
        add(o, Fp::raw(1));
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [k, v] : o.terms_) add(k, -v);
        return *this;
    }
    LinComb& operator*=(Fp c) {
        if (c.is_zero()) {
            terms_.clear();
        } else {
            for (auto& kv : terms_) kv.second *= c;
        }
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator-(LinComb a) { return a *= -Fp::raw(1); }
    friend LinComb operator*(Fp c, LinComb a) { return a *= c; }
    friend LinComb operator*(LinComb a, Fp c) { return a *= c; }
    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

    // Apply a linear map given on keys: sum_k c_k f(k).
    template <class F>
    auto map_linear(F&& f) const -> decltype(f(std::declval<const K&>())) {
        decltype(f(std::declval<const K&>())) out;
        for (const auto& [k, v] : terms_) out.add(f(k), v);
        return out;
    }

private:
    Map terms_;
};

}  // namespace sl2ext
