#pragma once

#include "angle.hpp"
#include "circleseq.hpp"
#include "classify.hpp"
#include "group.hpp"

#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace qconvex {

namespace detail {

// Minimal cursor over a text form; all formats are case-insensitive and
// whitespace-tolerant.
struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && std::tolower(static_cast<unsigned char>(s[pos])) ==
                                  std::tolower(static_cast<unsigned char>(c))) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw std::invalid_argument("parse error: expected '" + std::string(1, c) + "' in '" +
                                        s + "'");
    }
    std::int64_t integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            throw std::invalid_argument("parse error: expected an integer in '" + s + "'");
        try {
            return std::stoll(s.substr(start, pos - start));
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("parse error: integer out of range in '" + s + "'");
        }
    }
    bool accept_word(const std::string& w) {
        skip_ws();
        if (s.size() - pos < w.size()) return false;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (std::tolower(static_cast<unsigned char>(s[pos + i])) !=
                std::tolower(static_cast<unsigned char>(w[i])))
                return false;
        pos += w.size();
        return true;
    }
};

} // namespace detail

// ---------------------------------------------------------------------------
// Groups: "Z4 x Z4 x Z5"; the trivial group is "1".

inline FiniteAbelianGroup parse_group(const std::string& text) {
    detail::Cursor c{text};
    if (c.done()) return FiniteAbelianGroup();
    if (c.accept('1')) {
        if (!c.done()) throw std::invalid_argument("parse error: trailing input in group '" + text + "'");
        return FiniteAbelianGroup();
    }
    std::vector<std::int64_t> moduli;
    for (;;) {
        c.expect('z');
        moduli.push_back(c.integer());
        if (c.done()) break;
        if (!c.accept('x') && !c.accept('*'))
            throw std::invalid_argument("parse error: expected 'x' between factors in '" + text + "'");
    }
    return FiniteAbelianGroup(std::move(moduli));
}

inline std::string format_group(const FiniteAbelianGroup& G) {
    if (G.rank() == 0) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < G.rank(); ++i) {
        if (i) os << " x ";
        os << 'Z' << G.moduli[i];
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Tuples "(1,0,3)" and tuple sets "(0,0),(1,0),(0,1)"; the empty tuple is
// "()", the empty set is the empty string.

inline std::vector<std::int64_t> parse_tuple_at(detail::Cursor& c) {
    c.expect('(');
    std::vector<std::int64_t> out;
    if (c.accept(')')) return out;
    for (;;) {
        out.push_back(c.integer());
        if (c.accept(')')) break;
        c.expect(',');
    }
    return out;
}

inline std::vector<std::int64_t> parse_tuple(const std::string& text) {
    detail::Cursor c{text};
    auto t = parse_tuple_at(c);
    if (!c.done()) throw std::invalid_argument("parse error: trailing input in tuple '" + text + "'");
    return t;
}

inline std::vector<std::vector<std::int64_t>> parse_tuple_set(const std::string& text) {
    detail::Cursor c{text};
    std::vector<std::vector<std::int64_t>> out;
    if (c.done()) return out;
    for (;;) {
        out.push_back(parse_tuple_at(c));
        if (c.done()) break;
        c.expect(',');
    }
    return out;
}

inline std::string format_tuple(const std::vector<std::int64_t>& t) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) os << ',';
        os << t[i];
    }
    os << ')';
    return os.str();
}

// ---------------------------------------------------------------------------
// Rationals "3/5", "-1/8", "2".

inline Rational parse_rational(const std::string& text) {
    detail::Cursor c{text};
    std::int64_t num = c.integer();
    if (c.done()) return Rational(num);
    c.expect('/');
    std::int64_t den = c.integer();
    if (!c.done()) throw std::invalid_argument("parse error: trailing input in rational '" + text + "'");
    if (den == 0) throw std::invalid_argument("parse error: zero denominator in '" + text + "'");
    return Rational(num, den);
}

inline std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) out.push_back(parse_rational(item));
    return out;
}

inline std::string format_rational(const Rational& r) {
    std::ostringstream os;
    os << rat_num(r);
    if (rat_den(r) != 1) os << '/' << rat_den(r);
    return os.str();
}

// ---------------------------------------------------------------------------
// q-sequences: "8,8,8,8" or the macro "primes>8:n=4".

inline QSeq parse_qs(const std::string& text) {
    detail::Cursor c{text};
    if (c.accept_word("primes")) {
        c.expect('>');
        if (c.integer() != 8)
            throw std::invalid_argument("parse error: the primes macro is 'primes>8:n=<count>'");
        c.expect(':');
        if (!c.accept_word("n"))
            throw std::invalid_argument("parse error: the primes macro is 'primes>8:n=<count>'");
        c.expect('=');
        std::int64_t n = c.integer();
        if (!c.done() || n < 1)
            throw std::invalid_argument("parse error: the primes macro is 'primes>8:n=<count>'");
        return socle_example(static_cast<std::size_t>(n));
    }
    std::vector<std::int64_t> qs;
    for (;;) {
        qs.push_back(c.integer());
        if (c.done()) break;
        c.expect(',');
    }
    return QSeq(std::move(qs));
}

// ---------------------------------------------------------------------------
// Symbolic bounded groups: "Z2^inf x Z5^3"; a missing exponent means one
// copy; the trivial group is "1".

inline SymbolicGroup parse_symbolic(const std::string& text) {
    detail::Cursor c{text};
    if (c.done()) return SymbolicGroup::make({});
    if (c.accept('1')) {
        if (!c.done()) throw std::invalid_argument("parse error: trailing input in '" + text + "'");
        return SymbolicGroup::make({});
    }
    std::vector<SymbolicFactor> factors;
    for (;;) {
        c.expect('z');
        SymbolicFactor f;
        f.order = c.integer();
        f.mult = Mult::of(1);
        if (c.accept('^')) {
            if (c.accept_word("inf")) f.mult = Mult::inf();
            else {
                std::int64_t n = c.integer();
                if (n < 0) throw std::invalid_argument("parse error: negative multiplicity in '" + text + "'");
                f.mult = Mult::of(static_cast<std::uint64_t>(n));
            }
        }
        factors.push_back(f);
        if (c.done()) break;
        if (!c.accept('x') && !c.accept('*'))
            throw std::invalid_argument("parse error: expected 'x' between factors in '" + text + "'");
    }
    return SymbolicGroup::make(factors);
}

inline std::string format_symbolic(const SymbolicGroup& G) {
    if (G.factors.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < G.factors.size(); ++i) {
        if (i) os << " x ";
        os << 'Z' << G.factors[i].order;
        if (G.factors[i].mult.infinite) os << "^inf";
        else if (G.factors[i].mult.count != 1) os << '^' << G.factors[i].mult.count;
    }
    return os.str();
}

} // namespace qconvex
