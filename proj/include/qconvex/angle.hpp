#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qconvex {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

// Floor division; the usual C++ operator/ truncates toward zero instead.
inline Integer floor_div(const Integer& a, const Integer& b) {
    if (b == 0) throw std::invalid_argument("floor_div: division by zero");
    Integer q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Integer floor_of(const Rational& x) { return floor_div(rat_num(x), rat_den(x)); }
inline bool is_integer(const Rational& x) { return rat_den(x) == 1; }

// Three distinct integer roundings; they differ only at integer arguments:
//   strict-ceiling(x) = min{n : x < n}   (maps 2 to 3)
//   floor-bracket(x)  = max{n : n <= x}  (maps 2 to 2; the usual floor)
//   strict-floor(x)   = max{n : n < x}   (maps 2 to 1)
enum class Rounding { StrictCeiling, FloorBracket, StrictFloor };

inline Integer round_rational(const Rational& x, Rounding kind) {
    Integer fl = floor_of(x);
    switch (kind) {
        case Rounding::StrictCeiling: return fl + 1;
        case Rounding::FloorBracket: return fl;
        case Rounding::StrictFloor: return is_integer(x) ? fl - 1 : fl;
    }
    throw std::logic_error("round_rational: bad kind");
}

// A point of the circle group R/Z, held as the exact rational representative
// in (-1/2, 1/2] (so -1/2 normalizes to +1/2), in lowest terms.  Immutable.
class Angle {
public:
    Angle() : rep_(0) {}

    static Angle from_rational(const Rational& r) {
        // Shift by min{n : r - 1/2 <= n}, landing in (-1/2, 1/2].
        Rational t = r - Rational(1, 2);
        Integer k = is_integer(t) ? floor_of(t) : floor_of(t) + 1;
        return Angle(r - Rational(k));
    }

    static Angle from_fraction(const Integer& num, const Integer& den) {
        if (den == 0) throw std::invalid_argument("Angle: zero denominator");
        return from_rational(Rational(num, den));
    }

    const Rational& rep() const { return rep_; }
    Integer num() const { return boost::multiprecision::numerator(rep_); }
    Integer den() const { return boost::multiprecision::denominator(rep_); }
    bool is_zero() const { return rep_ == 0; }

    Rational abs_rep() const { return rep_ < 0 ? Rational(-rep_) : rep_; }

    Angle operator+(const Angle& o) const { return from_rational(rep_ + o.rep_); }
    Angle operator-(const Angle& o) const { return from_rational(rep_ - o.rep_); }
    Angle operator-() const { return from_rational(-rep_); }

    // m-fold sum of this angle; m may be any integer (negative reverses sign).
    Angle scale(const Integer& m) const { return from_rational(Rational(m) * rep_); }

    // Membership in T_m = [-1/(4m), 1/(4m)] mod 1, closed at both endpoints.
    bool in_Tm(const Integer& m) const {
        if (m < 1) throw std::invalid_argument("Angle::in_Tm: m must be >= 1");
        Integer n = num();
        if (n < 0) n = -n;
        return 4 * m * n <= den();
    }

    bool in_Tplus() const { return in_Tm(1); }

    std::string to_string() const {
        std::ostringstream os;
        os << num() << '/' << den();
        return os.str();
    }

    static Angle parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return from_fraction(Integer(s), 1);
            return from_fraction(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("Angle::parse: bad fraction '" + s + "'");
        }
    }

    bool operator==(const Angle& o) const { return rep_ == o.rep_; }
    bool operator!=(const Angle& o) const { return rep_ != o.rep_; }
    bool operator<(const Angle& o) const { return rep_ < o.rep_; }

private:
    explicit Angle(Rational rep) : rep_(std::move(rep)) {}

    Rational rep_;
};

} // namespace qconvex
