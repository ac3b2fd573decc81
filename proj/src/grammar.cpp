#include "sl2ext/grammar.hpp"

#include <cctype>
#include <cstdlib>
#include <vector>

namespace sl2ext {

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Graded element() {
        skip();
        if (peek() == '0' && is_lone_zero()) {
            ++i_;
            skip();
            expect_end();
            return {};
        }
        Graded out;
        Fp sign = Fp::raw(1);
        if (peek() == '-' || peek() == '+') {
            if (get() == '-') sign = -sign;
            skip();
        }
        out.add(term(), sign);
        for (;;) {
            skip();
            if (at_end()) break;
            const char c = peek();
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            ++i_;
            skip();
            out.add(term(), c == '-' ? -Fp::raw(1) : Fp::raw(1));
        }
        return out;
    }

    Weyl weyl_only() {
        skip();
        Weyl w = weyl();
        skip();
        expect_end();
        return w;
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;

    bool at_end() const { return i_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[i_]; }
    char get() {
        if (at_end()) fail("unexpected end of input");
        return s_[i_++];
    }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(i_, msg); }
    void expect(char c) {
        skip();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++i_;
    }
    void expect_end() const {
        if (!at_end()) fail("trailing input");
    }
    bool is_lone_zero() const {
        std::size_t j = i_ + 1;
        while (j < s_.size() && std::isspace(static_cast<unsigned char>(s_[j]))) ++j;
        return j == s_.size();
    }

    std::int64_t integer() {
        skip();
        const std::size_t start = i_;
        if (peek() == '-' || peek() == '+') ++i_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
        const std::string digits(s_.substr(start, i_ - start));
        if (digits.size() > 18) fail("integer too large");
        return std::strtoll(digits.c_str(), nullptr, 10);
    }

    std::string ident() {
        const std::size_t start = i_;
        while (std::isalnum(static_cast<unsigned char>(peek()))) ++i_;
        return std::string(s_.substr(start, i_ - start));
    }

    Weyl weyl() {
        const std::size_t start = i_;
        if (ident() != "w") {
            i_ = start;
            fail("expected 'w('");
        }
        expect('(');
        const std::int64_t e = integer();
        expect(';');
        std::vector<int> letters;
        for (;;) {
            skip();
            if (peek() == ',') {
                ++i_;
                continue;
            }
            if (peek() != 's') break;
            ++i_;
            const char c = peek();
            if (c != '0' && c != '1') fail("letters are s0 and s1");
            ++i_;
            letters.push_back(c - '0');
        }
        expect(')');
        return Weyl::from_word(e, letters);
    }

    Graded term() {
        Fp c = Fp::raw(1);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            c = Fp(integer());
            skip();
            if (peek() == '/') {
                ++i_;
                skip();
                const std::size_t dpos = i_;
                const Fp d = Fp(integer());
                if (d.is_zero()) throw ParseError(dpos, "division by zero");
                c /= d;
            }
            expect('*');
            skip();
        }
        return symbol() * c;
    }

    Graded symbol() {
        const std::size_t start = i_;
        const std::string k = ident();
        if (k.empty()) fail("expected a symbol");
        if (k == "e") {
            expect('(');
            const std::int64_t m = integer();
            expect(')');
            return from_hecke(e_lambda(Character::id(m)));
        }
        int deg = -1, sign = 0;
        if (k == "tau") deg = 0;
        else if (k == "phi") deg = 3;
        else if (k.size() == 2 && (k[0] == 'b' || k[0] == 'a')) {
            deg = k[0] == 'b' ? 1 : 2;
            if (k[1] == 'm') sign = -1;
            else if (k[1] == '0') sign = 0;
            else if (k[1] == 'p') sign = 1;
            else deg = -1;
        }
        if (deg < 0) {
            i_ = start;
            fail("unknown symbol '" + k + "'");
        }
        expect('(');
        skip();
        const std::size_t wpos = i_;
        const Weyl w = weyl();
        expect(')');
        Sym s{static_cast<std::uint8_t>(deg), w, static_cast<std::int8_t>(sign)};
        try {
            validate(s);
        } catch (const std::invalid_argument& ex) {
            throw ParseError(wpos, ex.what());
        }
        return g(s);
    }
};

}  // namespace

Graded parse_element(std::string_view text) { return Parser(text).element(); }
Weyl parse_weyl(std::string_view text) { return Parser(text).weyl_only(); }

std::string render(const Sym& s) { return kind_name(s) + "(" + render(s.w) + ")"; }

std::string render(const Graded& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [s, c] : x) {
        const std::int64_t v = c.centered();
        const std::int64_t a = v < 0 ? -v : v;
        if (first)
            out += v < 0 ? "-" : "";
        else
            out += v < 0 ? " - " : " + ";
        first = false;
        if (a != 1) out += std::to_string(a) + "*";
        out += render(s);
    }
    return out;
}

}  // namespace sl2ext
