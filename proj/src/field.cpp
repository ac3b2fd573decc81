#include "sl2ext/field.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "memo.hpp"

namespace sl2ext {

namespace {
thread_local const Field* g_active = nullptr;

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}
}  // namespace

bool Field::is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool Field::is_primitive_root(std::uint32_t g, std::uint32_t p) {
    if (g % p == 0) return false;
    std::uint64_t x = 1;
    for (std::uint32_t k = 1; k < p - 1; ++k) {
        x = x * g % p;
        if (x == 1) return false;
    }
    return true;
}

std::uint32_t Field::smallest_primitive_root(std::uint32_t p) {
    for (std::uint32_t g = 2; g < p; ++g)
        if (is_primitive_root(g, p)) return g;
    throw std::invalid_argument("no primitive root found");
}

Field::Field(std::uint32_t p, std::optional<std::uint32_t> root) : p_(p) {
    if (p < 5 || !is_prime(p))
        throw std::invalid_argument("p must be a prime >= 5, got " + std::to_string(p));
    if (p > 65521) throw std::invalid_argument("p too large for the 32-bit residue representation");
    if (root) {
        root_ = *root % p;
        if (!is_primitive_root(root_, p))
            throw std::invalid_argument(std::to_string(*root) + " is not a primitive root mod " +
                                        std::to_string(p));
    } else {
        root_ = smallest_primitive_root(p);
    }
    powers_ = std::shared_ptr<std::uint32_t[]>(new std::uint32_t[p - 1]);
    std::uint64_t x = 1;
    for (std::uint32_t k = 0; k < p - 1; ++k) {
        powers_[k] = static_cast<std::uint32_t>(x);
        x = x * root_ % p;
    }
    memo_ = detail::make_memo();
}

std::uint32_t Field::root_pow(std::int64_t k) const {
    return powers_[floor_mod(k, p_ - 1)];
}

std::uint32_t Field::inverse(std::uint32_t a) const {
    if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
    // extended Euclid
    std::int64_t t = 0, nt = 1, r = p_, nr = a % p_;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    return static_cast<std::uint32_t>(floor_mod(t, p_));
}

void Field::clear_memo() const { memo_->clear(); }

const Field& field() {
    if (!g_active) throw std::logic_error("no active field: construct a FieldScope first");
    return *g_active;
}

FieldScope::FieldScope(const Field& f) : previous_(g_active) { g_active = &f; }
FieldScope::~FieldScope() { g_active = previous_; }

Fp::Fp(std::int64_t v) : v_(static_cast<std::uint32_t>(floor_mod(v, field().p()))) {}

std::int64_t Fp::centered() const {
    const std::int64_t p = field().p();
    return v_ > p / 2 ? static_cast<std::int64_t>(v_) - p : v_;
}

Fp Fp::inv() const { return raw(field().inverse(v_)); }

Fp Fp::pow(std::int64_t k) const {
    const std::uint32_t p = field().p();
    if (k < 0) return inv().pow(-k);
    std::uint64_t base = v_, acc = 1;
    while (k > 0) {
        if (k & 1) acc = acc * base % p;
        base = base * base % p;
        k >>= 1;
    }
    return raw(static_cast<std::uint32_t>(acc));
}

Fp Fp::operator-() const { return raw(v_ == 0 ? 0 : field().p() - v_); }

Fp& Fp::operator+=(Fp o) {
    const std::uint32_t p = field().p();
    v_ += o.v_;
    if (v_ >= p) v_ -= p;
    return *this;
}

Fp& Fp::operator-=(Fp o) {
    const std::uint32_t p = field().p();
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p - o.v_;
    return *this;
}

Fp& Fp::operator*=(Fp o) {
    v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % field().p());
    return *this;
}

Character Character::normalized() const {
    return Character{floor_mod(m, field().torus_order())};
}

Fp char_eval(Character lambda, std::int64_t e) {
    const std::int64_t n = field().torus_order();
    return Fp::raw(field().root_pow(floor_mod(lambda.m, n) * floor_mod(e, n)));
}

}  // namespace sl2ext
