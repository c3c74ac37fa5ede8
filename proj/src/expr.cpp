/*
   Copyright 2026 The exunits Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "exunits/expr.hpp"

#include <cctype>
#include <string>

namespace exunits {

namespace {

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor ('*'? factor)*
// factor := atom ('^' integer)?
// atom   := integer | var | '(' expr ')'
class Parser {
  public:
    Parser(std::string_view text, char var) : text_(text), var_(var) {}

    IntPoly parse() {
        IntPoly p = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("cannot parse '" + std::string(text_) + "' at position " + std::to_string(pos_) + ": " + what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool at_atom_start() {
        skip_space();
        if (pos_ >= text_.size()) return false;
        const char c = text_[pos_];
        return c == '(' || c == var_ || std::isdigit(static_cast<unsigned char>(c));
    }

    Integer integer() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return Integer(std::string(text_.substr(start, pos_ - start)), 10);
    }

    IntPoly expr() {
        IntPoly acc;
        bool negate = false;
        if (peek('+')) {
            ++pos_;
        } else if (peek('-')) {
            ++pos_;
            negate = true;
        }
        acc = term();
        if (negate) acc = -acc;
        while (true) {
            if (peek('+')) {
                ++pos_;
                acc += term();
            } else if (peek('-')) {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    IntPoly term() {
        IntPoly acc = factor();
        while (true) {
            if (peek('*')) {
                ++pos_;
                acc = acc * factor();
            } else if (at_atom_start()) {
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    IntPoly factor() {
        IntPoly base = atom();
        if (peek('^')) {
            ++pos_;
            const Integer e = integer();
            if (e > 1000) fail("exponent too large");
            IntPoly r = IntPoly::constant(Integer(1));
            for (unsigned long i = 0; i < e.get_ui(); ++i) r = r * base;
            return r;
        }
        return base;
    }

    IntPoly atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            IntPoly inner = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (c == var_) {
            ++pos_;
            return IntPoly::monomial(Integer(1), 1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return IntPoly::constant(integer());
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    char var_;
    std::size_t pos_ = 0;
};

std::string trimmed(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

Integer parse_strict(std::string_view token) {
    const std::string t = trimmed(token);
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) throw ParseError("expected an integer, got '" + std::string(token) + "'");
    for (; i < t.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) {
            throw ParseError("expected an integer, got '" + std::string(token) + "'");
        }
    }
    return parse_integer(t);
}

}  // namespace

IntPoly parse_int_poly(std::string_view text, char var) { return Parser(text, var).parse(); }

std::vector<Integer> parse_integer_list(std::string_view text) {
    std::vector<Integer> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        out.push_back(parse_strict(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::pair<Integer, Integer> parse_range(std::string_view text) {
    // the separator is the first ':' after a possible leading sign
    const std::size_t colon = text.find(':', 1);
    if (colon == std::string_view::npos) {
        const Integer v = parse_strict(text);
        return {v, v};
    }
    const Integer lo = parse_strict(text.substr(0, colon));
    const Integer hi = parse_strict(text.substr(colon + 1));
    if (hi < lo) throw ParseError("empty range '" + std::string(text) + "'");
    return {lo, hi};
}

}  // namespace exunits
