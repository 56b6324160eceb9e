#pragma once

#include "angle.hpp"
#include "group.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qconvex {

// Raised when an operation's mathematical hypotheses are violated by the
// inputs (distinct from malformed input); `index` points at the offender
// when there is a natural position, SIZE_MAX otherwise.
class hypothesis_error : public std::invalid_argument {
public:
    hypothesis_error(const std::string& what, std::size_t index = SIZE_MAX)
        : std::invalid_argument(what), index(index) {}
    std::size_t index;
};

// ---------------------------------------------------------------------------
// Divisibility chains d_0 | d_1 | ... | d_K, strictly increasing, d_{-1} = 1.

struct DivChain {
    std::vector<Integer> ds;

    explicit DivChain(std::vector<Integer> d) : ds(std::move(d)) {
        if (ds.empty()) throw std::invalid_argument("DivChain: empty chain");
        if (ds[0] < 1) throw std::invalid_argument("DivChain: entries must be positive");
        for (std::size_t i = 1; i < ds.size(); ++i) {
            if (ds[i] <= ds[i - 1])
                throw std::invalid_argument("DivChain: entries must be strictly increasing");
            if (ds[i] % ds[i - 1] != 0)
                throw std::invalid_argument("DivChain: each entry must divide the next");
        }
    }

    std::size_t length() const { return ds.size(); }

    // d(i) with the convention d(-1) = 1.
    Integer d(std::ptrdiff_t i) const {
        if (i < -1 || i >= static_cast<std::ptrdiff_t>(ds.size()))
            throw std::invalid_argument("DivChain: index out of range");
        return i < 0 ? Integer(1) : ds[static_cast<std::size_t>(i)];
    }

    // q_i = d_i / d_{i-1}; an integer >= 2 except possibly q_0 = d_0.
    Integer ratio(std::size_t i) const { return d(static_cast<std::ptrdiff_t>(i)) / d(static_cast<std::ptrdiff_t>(i) - 1); }
};

// ---------------------------------------------------------------------------
// q-sequences: q_0, ..., q_N with b_n = q_0 ... q_n and the null set
// X_N = {0} u {+-1/b_n : 0 <= n <= N}.

struct QSeq {
    std::vector<std::int64_t> qs;

    explicit QSeq(std::vector<std::int64_t> q) : qs(std::move(q)) {
        if (qs.empty()) throw std::invalid_argument("QSeq: at least one ratio required");
        for (auto v : qs)
            if (v < 1) throw std::invalid_argument("QSeq: ratios must be positive integers");
    }

    std::size_t depth() const { return qs.size() - 1; } // N

    // b(n) with b(-1) = 1.
    Integer b(std::ptrdiff_t n) const {
        if (n < -1 || n >= static_cast<std::ptrdiff_t>(qs.size()))
            throw std::invalid_argument("QSeq: index out of range");
        Integer prod = 1;
        for (std::ptrdiff_t i = 0; i <= n; ++i) prod *= qs[static_cast<std::size_t>(i)];
        return prod;
    }

    std::vector<Integer> bs() const {
        std::vector<Integer> out;
        out.reserve(qs.size());
        Integer prod = 1;
        for (auto v : qs) out.push_back(prod *= v);
        return out;
    }

    std::vector<Angle> X() const {
        std::vector<Angle> out{Angle()};
        for (const auto& bn : bs()) {
            out.push_back(Angle::from_fraction(1, bn));
            out.push_back(Angle::from_fraction(-1, bn));
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    DivChain chain() const { return DivChain(bs()); }

    QSeq prefix(std::size_t N) const {
        if (N >= qs.size()) throw std::invalid_argument("QSeq::prefix: depth out of range");
        return QSeq(std::vector<std::int64_t>(qs.begin(), qs.begin() + N + 1));
    }
};

// eta_k = b_{k-1} as an integer character of T (eta_0 = identity), valid for
// 0 <= k <= N+1.
inline Integer eta(const QSeq& Q, std::size_t k) {
    if (k > Q.qs.size()) throw std::invalid_argument("eta: k out of range");
    return Q.b(static_cast<std::ptrdiff_t>(k) - 1);
}

// Does the integer character chi send every member of X_N into T+?
inline bool in_polar_of_X(const QSeq& Q, const Integer& chi) {
    for (const auto& bn : Q.bs())
        if (!Angle::from_fraction(chi, bn).in_Tplus()) return false;
    return true;
}

// m * eta_k in X^> ?
inline bool check_etak_membership(const QSeq& Q, std::size_t k, const Integer& m) {
    if (m < 1) throw std::invalid_argument("check_etak_membership: m must be >= 1");
    return in_polar_of_X(Q, m * eta(Q, k));
}

// [q_{k1}/4] eta_{k1} +- rounded(q_{k2}/4) eta_{k2}; the second rounding is
// strict-floor in the membership claim, parametrized so tests can exhibit
// that floor-bracket there breaks it.
inline Integer k1k2_character(const QSeq& Q, std::size_t k1, std::size_t k2, bool plus,
                              Rounding k2_rounding = Rounding::StrictFloor) {
    if (!(k1 < k2 && k2 <= Q.depth()))
        throw std::invalid_argument("k1k2_character: need 0 <= k1 < k2 <= N");
    Integer a = round_rational(Rational(Q.qs[k1], 4), Rounding::FloorBracket) * eta(Q, k1);
    Integer b = round_rational(Rational(Q.qs[k2], 4), k2_rounding) * eta(Q, k2);
    return plus ? Integer(a + b) : Integer(a - b);
}

inline bool check_k1k2_membership(const QSeq& Q, std::size_t k1, std::size_t k2, bool plus) {
    return in_polar_of_X(Q, k1k2_character(Q, k1, k2, plus));
}

// ---------------------------------------------------------------------------
// Standard representation z ~ sum_k c_k / d_k along a chain, built on the
// canonical representative of z and real-valued remainders:
//   (i)   |c_k| <= d_k / (2 d_{k-1})
//   (ii)  |z - sum_{i<=k} c_i/d_i| <= 1/(2 d_k)
//   (iii) when (ii) holds with equality, |c_k/d_k| < |z - sum_{i<k} c_i/d_i|

struct StdRep {
    DivChain chain;
    Angle z;
    std::vector<Integer> cs;
    Rational residual; // rep(z) - sum c_i/d_i

    std::vector<std::size_t> support() const { // indices of the nonzero coefficients
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < cs.size(); ++i)
            if (cs[i] != 0) out.push_back(i);
        return out;
    }
};

// Greedy construction: at stage k take the integer nearest to r * d_k,
// resolving an exact half-way tie toward the smaller |c_k| (which is what
// condition (iii) demands).  Conditions (i) and (ii) follow inductively.
inline StdRep standard_rep(const Angle& z, const DivChain& chain) {
    Rational r = z.rep();
    std::vector<Integer> cs;
    cs.reserve(chain.length());
    for (std::size_t k = 0; k < chain.length(); ++k) {
        Rational t = r * Rational(chain.ds[k]);
        Integer lo = floor_of(t);
        Rational dlo = t - Rational(lo);        // distance to lo, in [0, 1)
        Rational dhi = Rational(lo + 1) - t;    // distance to lo+1, in (0, 1]
        Integer c;
        if (dlo < dhi) c = lo;
        else if (dhi < dlo) c = lo + 1;
        else c = boost::multiprecision::abs(lo) < boost::multiprecision::abs(lo + 1) ? lo : lo + 1;
        cs.push_back(c);
        r -= Rational(c, chain.ds[k]);
    }
    return StdRep{chain, z, std::move(cs), std::move(r)};
}

inline bool is_standard(const DivChain& chain, const Angle& z, const std::vector<Integer>& cs) {
    if (cs.size() != chain.length()) return false;
    Rational r = z.rep();
    for (std::size_t k = 0; k < chain.length(); ++k) {
        Integer ck = cs[k];
        Integer abs_ck = ck < 0 ? Integer(-ck) : ck;
        // (i): 2 |c_k| d_{k-1} <= d_k
        if (2 * abs_ck * chain.d(static_cast<std::ptrdiff_t>(k) - 1) > chain.ds[k]) return false;
        Rational before = r < 0 ? Rational(-r) : r;
        r -= Rational(ck, chain.ds[k]);
        Rational after = r < 0 ? Rational(-r) : r;
        Rational half(1, 2 * chain.ds[k]);
        if (after > half) return false;                              // (ii)
        if (after == half && !(Rational(abs_ck, chain.ds[k]) < before)) // (iii)
            return false;
    }
    return true;
}

inline bool is_standard(const StdRep& rep) {
    if (!is_standard(rep.chain, rep.z, rep.cs)) return false;
    Rational r = rep.z.rep();
    for (std::size_t k = 0; k < rep.cs.size(); ++k) r -= Rational(rep.cs[k], rep.chain.ds[k]);
    return r == rep.residual;
}

// ---------------------------------------------------------------------------
// Truncated hulls: X_N embeds into the cyclic subgroup Z_{b_N} <= T via
// 1/b_n -> b_N/b_n, and the hull computed there agrees with the hull in T
// restricted to that subgroup.

struct TruncatedHull {
    Integer bN;
    std::vector<std::int64_t> x_residues;    // ascending residues mod b_N
    std::vector<std::int64_t> hull_residues; // ascending residues mod b_N
    bool equal;                              // hull == X_N
    std::vector<std::int64_t> extra;         // hull \ X_N
};

inline TruncatedHull truncated_hull(const QSeq& Q, const ScanOptions& opts = {}) {
    Integer bN = Q.b(static_cast<std::ptrdiff_t>(Q.depth()));
    EvalBudget budget(opts.budget);
    budget.require(bN); // the element scan alone enumerates b_N tuples

    if (bN == 1) return TruncatedHull{bN, {0}, {0}, true, {}};

    auto modulus = bN.convert_to<std::int64_t>();
    FiniteAbelianGroup G({modulus});

    std::vector<GroupElement> E{zero_element(G)};
    for (const auto& bn : Q.bs()) {
        auto r = (bN / bn).convert_to<std::int64_t>();
        E.push_back(GroupElement({r}));
        E.push_back(GroupElement({modulus - r == modulus ? 0 : modulus - r}));
    }
    E = canonical_set(G, E);

    auto pol = polar_impl(G, E, budget, opts.threads);
    auto hull = prepolar_impl(G, pol, budget, opts.threads);

    TruncatedHull out;
    out.bN = bN;
    for (const auto& x : E) out.x_residues.push_back(x.coords[0]);
    for (const auto& x : hull) out.hull_residues.push_back(x.coords[0]);
    out.equal = out.x_residues == out.hull_residues;
    std::set_difference(out.hull_residues.begin(), out.hull_residues.end(),
                        out.x_residues.begin(), out.x_residues.end(),
                        std::back_inserter(out.extra));
    return out;
}

// ---------------------------------------------------------------------------
// Hull coefficient form: every hull member, written in standard form along
// b_0 | ... | b_N, should have all coefficients in {-1, 0, 1} provided the
// sequence never has q_k = 7 followed by q_{k+1} < 4.  The check runs either
// way and reports the hypothesis separately.

struct FormReport {
    TruncatedHull hull;
    bool hypothesis_ok;
    bool all_pm1;
    struct Violation {
        std::int64_t residue;
        std::vector<Integer> cs;
    };
    std::vector<Violation> violations;
};

inline bool seven_hypothesis(const QSeq& Q) {
    for (std::size_t k = 0; k + 1 < Q.qs.size(); ++k)
        if (Q.qs[k] == 7 && Q.qs[k + 1] < 4) return false;
    return true;
}

inline FormReport check_ternary_form(const QSeq& Q, const ScanOptions& opts = {}) {
    FormReport report;
    report.hull = truncated_hull(Q, opts);
    report.hypothesis_ok = seven_hypothesis(Q);
    report.all_pm1 = true;
    DivChain chain = Q.chain();
    for (auto r : report.hull.hull_residues) {
        auto rep = standard_rep(Angle::from_fraction(r, report.hull.bN), chain);
        bool ok = true;
        for (const auto& c : rep.cs)
            if (c < -1 || c > 1) ok = false;
        if (!ok) {
            report.all_pm1 = false;
            report.violations.push_back({r, rep.cs});
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Value bounds for eta_k against a +-1-coefficient representation:
//   (1/q_k)(1 - S(x)) <= |eta_k(x)| <= (1/q_k)(1 + S(x))
// with S(x) = 1/(qmin(x) - 1), qmin(x) = min ratio d_{i+1}/d_i over support
// indices i that have a successor in the chain; S = 0 when none does.

struct EtaBounds {
    Rational lower;
    Rational value;
    Rational upper;
    Rational S;
    bool within() const { return lower <= value && value <= upper; }
};

inline Rational S_of(const StdRep& x) {
    std::optional<Integer> qmin;
    for (auto i : x.support()) {
        if (i + 1 >= x.chain.length()) continue;
        Integer q = x.chain.ratio(i + 1);
        if (!qmin || q < *qmin) qmin = q;
    }
    if (!qmin) return Rational(0);
    return Rational(1, *qmin - 1);
}

inline EtaBounds support_ratio_bounds(const StdRep& x, std::size_t k) {
    if (!is_standard(x)) throw std::invalid_argument("support_ratio_bounds: not a standard representation");
    if (x.residual != 0)
        throw std::invalid_argument("support_ratio_bounds: representation must be exact (zero residual)");
    for (const auto& c : x.cs)
        if (c < -1 || c > 1)
            throw std::invalid_argument("support_ratio_bounds: coefficients must lie in {-1,0,1}");
    if (k >= x.cs.size() || x.cs[k] == 0)
        throw std::invalid_argument("support_ratio_bounds: k must lie in the support");

    EtaBounds out;
    out.S = S_of(x);
    Rational qk(x.chain.ratio(k));
    out.lower = (1 - out.S) / qk;
    out.upper = (1 + out.S) / qk;
    out.value = x.z.scale(x.chain.d(static_cast<std::ptrdiff_t>(k) - 1)).abs_rep();
    return out;
}

// ---------------------------------------------------------------------------
// The two-index estimate ( [q1/4]/q1 + strict_floor(q2/4)/q2 ) (1 - Smax),
// compared against 1/4.

inline Rational estimate_lhs(std::int64_t q1, std::int64_t q2, const Rational& Smax) {
    if (q1 < 1 || q2 < 1) throw std::invalid_argument("estimate_lhs: ratios must be positive");
    Rational f(round_rational(Rational(q1, 4), Rounding::FloorBracket), q1);
    Rational g(round_rational(Rational(q2, 4), Rounding::StrictFloor), q2);
    return (f + g) * (1 - Smax);
}

inline bool estimate_inequality(std::int64_t q1, std::int64_t q2, const Rational& Smax) {
    return estimate_lhs(q1, q2, Smax) <= Rational(1, 4);
}

// ---------------------------------------------------------------------------
// Real lifting: positive reals x_0 > x_1 > ... with every ratio
// x_{n-1}/x_n an integer >= 8 rescale by alpha = 1/(8 x_0) into the model
// sequence 1/b_n of the q-sequence (8, x_0/x_1, x_1/x_2, ...), landing
// inside [-1/8, 1/8].

struct LiftReport {
    std::vector<Rational> xs;
    Rational alpha;
    QSeq qs;
    std::vector<Rational> alpha_xs;
    bool within_eighth;
};

inline LiftReport lift_to_reals(const std::vector<Rational>& xs) {
    if (xs.empty()) throw std::invalid_argument("lift_to_reals: empty sequence");
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] <= 0)
            throw hypothesis_error("lift_to_reals: sequence must be positive", i);
        if (i > 0 && xs[i] >= xs[i - 1])
            throw hypothesis_error("lift_to_reals: sequence must be strictly decreasing", i);
    }
    std::vector<std::int64_t> q{8};
    for (std::size_t i = 1; i < xs.size(); ++i) {
        Rational ratio = xs[i - 1] / xs[i];
        if (!is_integer(ratio))
            throw hypothesis_error("lift_to_reals: ratio x_" + std::to_string(i - 1) + "/x_" +
                                       std::to_string(i) + " is not an integer",
                                   i);
        Integer r = rat_num(ratio);
        if (r < 8)
            throw hypothesis_error("lift_to_reals: ratio x_" + std::to_string(i - 1) + "/x_" +
                                       std::to_string(i) + " is smaller than 8",
                                   i);
        q.push_back(r.convert_to<std::int64_t>());
    }

    LiftReport report{xs, Rational(1) / (8 * xs[0]), QSeq(q), {}, true};
    for (const auto& x : xs) {
        Rational ax = report.alpha * x;
        if (ax > Rational(1, 8)) report.within_eighth = false;
        report.alpha_xs.push_back(std::move(ax));
    }
    return report;
}

// ---------------------------------------------------------------------------
// First n primes greater than 8; products b_n are square-free, so every
// member of X lies in the socle of T.

inline QSeq socle_example(std::size_t n) {
    if (n == 0) throw std::invalid_argument("socle_example: need n >= 1");
    std::vector<std::int64_t> primes;
    for (std::int64_t c = 11; primes.size() < n; c += 2) {
        bool prime = true;
        for (std::int64_t d = 3; d * d <= c; d += 2)
            if (c % d == 0) {
                prime = false;
                break;
            }
        if (prime) primes.push_back(c);
    }
    return QSeq(std::move(primes));
}

} // namespace qconvex
