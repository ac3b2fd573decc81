#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "sl2ext/graded.hpp"

namespace sl2ext {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t pos, const std::string& msg)
        : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + msg), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// element := term (('+'|'-') term)* | '0'
// term    := [scalar '*'] symbol,   scalar := int ['/' int]
// symbol  := kind '(' weyl ')' | 'e(' int ')'
// kind    := tau | bm | b0 | bp | am | a0 | ap | phi
// weyl    := 'w(' int ';' letters? ')',  letters from s0, s1
Graded parse_element(std::string_view text);
Weyl parse_weyl(std::string_view text);

std::string render(const Sym& s);
std::string render(const Graded& x);

}  // namespace sl2ext
