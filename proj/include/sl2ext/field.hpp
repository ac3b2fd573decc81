#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>

namespace sl2ext {

namespace detail {
struct Memo;
}

// Prime field F_p together with the fixed generator u0 of F_p^x.
//
// A Field is activated for the current thread with a FieldScope; every
// Fp value and every algebraic object built afterwards lives over that
// field.  The field also owns the memo tables of the product engine, so
// switching fields never mixes cached values.
class Field {
public:
    explicit Field(std::uint32_t p, std::optional<std::uint32_t> root = std::nullopt);

    std::uint32_t p() const { return p_; }
    std::uint32_t root() const { return root_; }
    // order of the torus T0/T1, i.e. p - 1
    std::uint32_t torus_order() const { return p_ - 1; }
    std::uint32_t half() const { return (p_ - 1) / 2; }

    // u0^k for any integer k
    std::uint32_t root_pow(std::int64_t k) const;
    std::uint32_t inverse(std::uint32_t a) const;

    detail::Memo& memo() const { return *memo_; }
    void clear_memo() const;

    static bool is_prime(std::uint64_t n);
    static std::uint32_t smallest_primitive_root(std::uint32_t p);
    static bool is_primitive_root(std::uint32_t g, std::uint32_t p);

private:
    std::uint32_t p_;
    std::uint32_t root_;
    std::shared_ptr<std::uint32_t[]> powers_;
    std::shared_ptr<detail::Memo> memo_;
};

// The field active on this thread; throws std::logic_error if none.
const Field& field();

class FieldScope {
public:
    explicit FieldScope(const Field& f);
    ~FieldScope();
    FieldScope(const FieldScope&) = delete;
    FieldScope& operator=(const FieldScope&) = delete;

private:
    const Field* previous_;
};

// Element of the active prime field, stored as its residue in [0, p).
class Fp {
public:
    Fp() = default;
    Fp(std::int64_t v);  // NOLINT(google-explicit-constructor): integer literals are scalars

    static Fp raw(std::uint32_t v) {
        Fp r;
        r.v_ = v;
        return r;
    }

    std::uint32_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    // Signed representative in (-p/2, p/2], used for display.
    std::int64_t centered() const;

    Fp inv() const;
    Fp pow(std::int64_t k) const;

    Fp operator-() const;
    Fp& operator+=(Fp o);
    Fp& operator-=(Fp o);
    Fp& operator*=(Fp o);
    Fp& operator/=(Fp o) { return *this *= o.inv(); }

    friend Fp operator+(Fp a, Fp b) { return a += b; }
    friend Fp operator-(Fp a, Fp b) { return a -= b; }
    friend Fp operator*(Fp a, Fp b) { return a *= b; }
    friend Fp operator/(Fp a, Fp b) { return a /= b; }
    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.v_; }

private:
    std::uint32_t v_ = 0;
};

// The character id^m of the torus, id(omega_u) = u.
struct Character {
    std::int64_t m = 0;

    static Character trivial() { return {0}; }
    static Character id(std::int64_t m = 1) { return {m}; }

    Character normalized() const;
    Character operator*(Character o) const { return Character{m + o.m}.normalized(); }
    Character inverse() const { return Character{-m}.normalized(); }
    friend bool operator==(Character a, Character b) {
        return a.normalized().m == b.normalized().m;
    }
};

// lambda(omega0^e) = u0^(m e)
Fp char_eval(Character lambda, std::int64_t e);

}  // namespace sl2ext
