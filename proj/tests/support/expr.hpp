#pragma once

// Reads fixture polynomials written like "1 - z1*t1 + (z2 - 3)*t1^2".
// Variables are z<i> and t<i> (1-based); a bare t means t1.

#include <cctype>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>

#include "liechar/polynomial.hpp"

namespace fixture {

using liechar::Integer;
using liechar::TPoly;
using liechar::ZPoly;

class ExprParser {
public:
    ExprParser(std::string text, std::size_t tvars, std::size_t zvars)
        : s_(std::move(text)), tv_(tvars), zv_(zvars) {}

    TPoly parse() {
        TPoly p = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::runtime_error("fixture parse error (" + what + ") at " + std::to_string(pos_) + " in '" + s_ + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    TPoly one() const { return TPoly::constant(tv_, liechar::z_constant(zv_, 1)); }

    int number() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return std::stoi(s_.substr(start, pos_ - start));
    }

    TPoly expr() {
        TPoly acc = term();
        for (;;) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else return acc;
        }
    }
    TPoly term() {
        TPoly acc = unary();
        while (eat('*')) acc = acc * unary();
        return acc;
    }
    TPoly unary() {
        if (eat('-')) return -unary();
        return power();
    }
    TPoly power() {
        TPoly base = primary();
        if (!eat('^')) return base;
        const int k = number();
        TPoly out = one();
        for (int i = 0; i < k; ++i) out = out * base;
        return out;
    }
    TPoly primary() {
        skip();
        if (eat('(')) {
            TPoly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (pos_ >= s_.size()) fail("unexpected end");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer v(std::to_string(number()));
            return TPoly::constant(tv_, liechar::z_constant(zv_, v));
        }
        if (c == 'z' || c == 't') {
            ++pos_;
            std::size_t index = 1;
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) index = number();
            if (c == 'z') {
                if (index < 1 || index > zv_) fail("z index out of range");
                return TPoly::constant(tv_, ZPoly::variable(zv_, index - 1, Integer(1)));
            }
            if (index < 1 || index > tv_) fail("t index out of range");
            return TPoly::variable(tv_, index - 1, liechar::z_constant(zv_, 1));
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string s_;
    std::size_t pos_ = 0;
    std::size_t tv_, zv_;
};

inline TPoly tpoly(const std::string& text, std::size_t tvars, std::size_t zvars) {
    return ExprParser(text, tvars, zvars).parse();
}

inline ZPoly zpoly(const std::string& text, std::size_t zvars) {
    TPoly p = tpoly(text, 1, zvars);
    if (p.degree(0) > 0) throw std::runtime_error("unexpected t in '" + text + "'");
    ZPoly c = p.coeff({0});
    return c.is_zero() ? ZPoly(zvars) : c;
}

/// Lines "m1 m2 ... : polynomial"; blank lines and # comments ignored.
inline std::map<std::vector<int>, ZPoly> read_character_table(const std::string& path, std::size_t rank) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::map<std::vector<int>, ZPoly> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto colon = line.find(':');
        std::vector<int> m;
        std::size_t pos = 0;
        const std::string head = line.substr(0, colon);
        while (m.size() < rank) {
            std::size_t used = 0;
            m.push_back(std::stoi(head.substr(pos), &used));
            pos += used;
        }
        out[m] = zpoly(line.substr(colon + 1), rank);
    }
    return out;
}

} // namespace fixture
