#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>

#include "sl2ext/graded.hpp"

namespace sl2ext::detail {

inline std::uint64_t pack(const Sym& s) {
    return static_cast<std::uint64_t>(s.w.e) | (static_cast<std::uint64_t>(s.w.len & 0xFFFFFU) << 32) |
           (static_cast<std::uint64_t>(s.w.first) << 52) | (static_cast<std::uint64_t>(s.deg) << 53) |
           (static_cast<std::uint64_t>(s.sign + 1) << 55);
}

struct PairKey {
    std::uint64_t a, b;
    bool operator==(const PairKey&) const = default;
};

struct PairHash {
    std::size_t operator()(const PairKey& k) const noexcept {
        return std::hash<std::uint64_t>{}(k.a * 0x9E3779B97F4A7C15ULL ^ (k.b + 0x7F4A7C159E3779B9ULL));
    }
};

// Memo tables for pure functions of basis symbols.  Entries are inserted
// once and never changed, so lookups are observationally transparent.
struct Memo {
    std::unordered_map<std::uint64_t, Graded> left_s[2];
    std::unordered_map<std::uint64_t, Graded> right_s[2];
    std::unordered_map<PairKey, Graded, PairHash> product;

    void clear() {
        for (auto& m : left_s) m.clear();
        for (auto& m : right_s) m.clear();
        product.clear();
    }
};

std::shared_ptr<Memo> make_memo();

}  // namespace sl2ext::detail
