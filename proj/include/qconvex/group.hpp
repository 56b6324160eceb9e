#pragma once

#include "angle.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <numeric>
#include <set>
#include <thread>
#include <utility>
#include <vector>

namespace qconvex {

// ---------------------------------------------------------------------------
// Types

// Z_{m_0} x ... x Z_{m_{k-1}}, every modulus >= 2.  The empty product is the
// trivial group, whose only element is the empty tuple.
struct FiniteAbelianGroup {
    std::vector<std::int64_t> moduli;

    FiniteAbelianGroup() = default;
    explicit FiniteAbelianGroup(std::vector<std::int64_t> ms) : moduli(std::move(ms)) {
        for (auto m : moduli)
            if (m < 2) throw std::invalid_argument("FiniteAbelianGroup: every modulus must be >= 2");
    }

    std::size_t rank() const { return moduli.size(); }

    Integer order() const {
        Integer n = 1;
        for (auto m : moduli) n *= m;
        return n;
    }

    bool operator==(const FiniteAbelianGroup& o) const { return moduli == o.moduli; }
};

// Elements and characters are both coordinate tuples (the dual of Z_m is
// again Z_m); distinct types keep the two roles from being mixed up.
struct GroupElement {
    std::vector<std::int64_t> coords;
    GroupElement() = default;
    explicit GroupElement(std::vector<std::int64_t> c) : coords(std::move(c)) {}
    bool operator==(const GroupElement& o) const { return coords == o.coords; }
    bool operator<(const GroupElement& o) const { return coords < o.coords; }
};

struct Character {
    std::vector<std::int64_t> coeffs;
    Character() = default;
    explicit Character(std::vector<std::int64_t> c) : coeffs(std::move(c)) {}
    bool operator==(const Character& o) const { return coeffs == o.coeffs; }
    bool operator<(const Character& o) const { return coeffs < o.coeffs; }
};

// ---------------------------------------------------------------------------
// Budgeting

class budget_exceeded : public std::runtime_error {
public:
    budget_exceeded(std::uint64_t limit, std::uint64_t required_at_least)
        : std::runtime_error(make_message(limit, required_at_least)),
          limit(limit),
          required_at_least(required_at_least) {}

    std::uint64_t limit;
    // Lower bound on the budget the operation would need; 0 when unknown
    // (the scan was aborted mid-flight).
    std::uint64_t required_at_least;

private:
    static std::string make_message(std::uint64_t limit, std::uint64_t required) {
        std::ostringstream os;
        os << "evaluation budget of " << limit << " exceeded";
        if (required > 0) os << "; at least " << required << " required";
        return os.str();
    }
};

struct ScanOptions {
    std::uint64_t budget = 10'000'000; // character evaluations
    int threads = 1;
};

// Shared meter for the evaluation count of one logical operation (a hull
// spends it across both of its scans).  Total consumption is independent of
// scheduling, so whether the limit trips is deterministic.
class EvalBudget {
public:
    explicit EvalBudget(std::uint64_t limit)
        : limit_(std::min<std::uint64_t>(limit, std::uint64_t(1) << 62)) {}

    std::uint64_t limit() const { return limit_; }

    void charge(std::uint64_t n) {
        if (used_.fetch_add(n, std::memory_order_relaxed) + n > limit_)
            throw budget_exceeded(limit_, 0);
    }

    void require(const Integer& needed) {
        if (needed > limit_) {
            Integer capped = (std::min)(needed, Integer(std::numeric_limits<std::uint64_t>::max()));
            throw budget_exceeded(limit_, capped.convert_to<std::uint64_t>());
        }
    }

    std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }

private:
    std::uint64_t limit_;
    std::atomic<std::uint64_t> used_{0};
};

// ---------------------------------------------------------------------------
// Validation and canonical coordinates

inline std::vector<std::int64_t> normalize_coords(const FiniteAbelianGroup& G,
                                                  const std::vector<std::int64_t>& c) {
    if (c.size() != G.rank())
        throw std::invalid_argument("coordinate tuple has wrong length for this group");
    std::vector<std::int64_t> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        auto m = G.moduli[i];
        out[i] = ((c[i] % m) + m) % m;
    }
    return out;
}

inline GroupElement normalize(const FiniteAbelianGroup& G, const GroupElement& x) {
    return GroupElement(normalize_coords(G, x.coords));
}
inline Character normalize(const FiniteAbelianGroup& G, const Character& chi) {
    return Character(normalize_coords(G, chi.coeffs));
}

inline GroupElement zero_element(const FiniteAbelianGroup& G) {
    return GroupElement(std::vector<std::int64_t>(G.rank(), 0));
}

inline GroupElement add(const FiniteAbelianGroup& G, const GroupElement& a, const GroupElement& b) {
    if (a.coords.size() != G.rank() || b.coords.size() != G.rank())
        throw std::invalid_argument("add: wrong tuple length");
    std::vector<std::int64_t> c(G.rank());
    for (std::size_t i = 0; i < G.rank(); ++i) c[i] = (a.coords[i] + b.coords[i]) % G.moduli[i];
    return GroupElement(std::move(c));
}

inline GroupElement negate(const FiniteAbelianGroup& G, const GroupElement& x) {
    std::vector<std::int64_t> c(G.rank());
    for (std::size_t i = 0; i < G.rank(); ++i)
        c[i] = x.coords[i] == 0 ? 0 : G.moduli[i] - x.coords[i];
    return GroupElement(std::move(c));
}

inline GroupElement scale_element(const FiniteAbelianGroup& G, const GroupElement& x,
                                  const Integer& k) {
    auto c = normalize_coords(G, x.coords);
    std::vector<std::int64_t> out(G.rank());
    for (std::size_t i = 0; i < G.rank(); ++i) {
        Integer v = k * c[i] % G.moduli[i];
        if (v < 0) v += G.moduli[i];
        out[i] = v.convert_to<std::int64_t>();
    }
    return GroupElement(std::move(out));
}

// chi(x) = sum_i chi_i * x_i / m_i  (mod 1), computed exactly.
inline Angle eval(const FiniteAbelianGroup& G, const Character& chi, const GroupElement& x) {
    if (chi.coeffs.size() != G.rank() || x.coords.size() != G.rank())
        throw std::invalid_argument("eval: wrong tuple length");
    Integer L = 1;
    for (auto m : G.moduli) L = boost::multiprecision::lcm(L, Integer(m));
    Integer s = 0;
    for (std::size_t i = 0; i < G.rank(); ++i)
        s += Integer(chi.coeffs[i]) * x.coords[i] * (L / G.moduli[i]);
    return Angle::from_fraction(s, L);
}

inline Integer element_order(const FiniteAbelianGroup& G, const GroupElement& x) {
    auto c = normalize_coords(G, x.coords);
    Integer ord = 1;
    for (std::size_t i = 0; i < G.rank(); ++i) {
        std::int64_t g = std::gcd(c[i], G.moduli[i]);
        ord = boost::multiprecision::lcm(ord, Integer(G.moduli[i] / g));
    }
    return ord;
}

// ---------------------------------------------------------------------------
// Exhaustive scans
//
// Polar and prepolar are the same computation with the roles of element and
// character swapped: enumerate all coordinate tuples in mixed-radix order
// (first coordinate most significant) and keep the tuples t with
// sum_i t_i * v_i / m_i in T+ for every target v, early-exiting per tuple on
// the first failing target.  Arithmetic runs on residues modulo L = lcm(m_i):
// s in [0, L) lies in T+ exactly when 4s <= L or 4(L-s) <= L, i.e.
// s <= floor(L/4) or s >= L - floor(L/4) -- the same predicate the exact
// Angle evaluation decides (reduction to lowest terms preserves it).

namespace detail {

struct ScanPlan {
    std::int64_t L = 1;
    std::int64_t threshold = 0; // floor(L/4)
    bool wide = false;          // products may exceed 63 bits -> use int128
    std::vector<std::vector<std::int64_t>> targets; // pre-scaled by L/m_i, reduced mod L
};

inline ScanPlan make_plan(const FiniteAbelianGroup& G,
                          const std::vector<std::vector<std::int64_t>>& raw_targets) {
    ScanPlan plan;
    for (auto m : G.moduli) plan.L = plan.L / std::gcd(plan.L, m) * m;
    plan.threshold = plan.L / 4;
    plan.wide = plan.L > (std::int64_t(1) << 31);
    plan.targets.reserve(raw_targets.size());
    for (const auto& t : raw_targets) {
        std::vector<std::int64_t> tv(G.rank());
        for (std::size_t i = 0; i < G.rank(); ++i) {
            auto w = plan.L / G.moduli[i];
            tv[i] = static_cast<std::int64_t>(
                (static_cast<__int128>(t[i]) * w) % plan.L);
        }
        plan.targets.push_back(std::move(tv));
    }
    return plan;
}

inline bool tuple_passes(const ScanPlan& plan, const std::vector<std::int64_t>& t,
                         std::uint64_t& evals) {
    for (const auto& tv : plan.targets) {
        ++evals;
        std::int64_t s = 0;
        if (plan.wide) {
            __int128 acc = 0;
            for (std::size_t i = 0; i < t.size(); ++i)
                acc += static_cast<__int128>(t[i]) * tv[i] % plan.L;
            s = static_cast<std::int64_t>(acc % plan.L);
        } else {
            for (std::size_t i = 0; i < t.size(); ++i) {
                s += t[i] * tv[i] % plan.L;
                if (s >= plan.L) s -= plan.L;
            }
        }
        if (!(s <= plan.threshold || s >= plan.L - plan.threshold)) return false;
    }
    return true;
}

inline std::vector<std::int64_t> tuple_at(const std::vector<std::int64_t>& moduli,
                                          std::uint64_t idx) {
    std::vector<std::int64_t> c(moduli.size(), 0);
    for (std::size_t i = moduli.size(); i-- > 0;) {
        c[i] = static_cast<std::int64_t>(idx % static_cast<std::uint64_t>(moduli[i]));
        idx /= static_cast<std::uint64_t>(moduli[i]);
    }
    return c;
}

inline void tuple_advance(const std::vector<std::int64_t>& moduli, std::vector<std::int64_t>& c) {
    for (std::size_t i = moduli.size(); i-- > 0;) {
        if (++c[i] < moduli[i]) return;
        c[i] = 0;
    }
}

inline void scan_range(const FiniteAbelianGroup& G, const ScanPlan& plan,
                       std::uint64_t lo, std::uint64_t hi, EvalBudget& budget,
                       std::vector<std::vector<std::int64_t>>& hits) {
    auto coords = tuple_at(G.moduli, lo);
    std::uint64_t pending = 0;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
        std::uint64_t evals = 0;
        bool pass = tuple_passes(plan, coords, evals);
        pending += std::max<std::uint64_t>(evals, 1);
        if (pending >= 4096) {
            budget.charge(pending);
            pending = 0;
        }
        if (pass) hits.push_back(coords);
        tuple_advance(G.moduli, coords);
    }
    if (pending > 0) budget.charge(pending);
}

inline std::vector<std::vector<std::int64_t>> scan_all(
    const FiniteAbelianGroup& G, const std::vector<std::vector<std::int64_t>>& raw_targets,
    EvalBudget& budget, int threads) {
    Integer order = G.order();
    budget.require(order); // every tuple costs at least one evaluation
    auto n = order.convert_to<std::uint64_t>();
    auto plan = make_plan(G, raw_targets);

    int T = std::max(threads, 1);
    if (static_cast<std::uint64_t>(T) > n) T = static_cast<int>(std::max<std::uint64_t>(n, 1));

    if (T == 1) {
        std::vector<std::vector<std::int64_t>> hits;
        scan_range(G, plan, 0, n, budget, hits);
        return hits;
    }

    std::vector<std::vector<std::vector<std::int64_t>>> chunk_hits(T);
    std::vector<std::exception_ptr> errors(T);
    std::vector<std::thread> workers;
    workers.reserve(T);
    for (int t = 0; t < T; ++t) {
        std::uint64_t lo = n / T * t + std::min<std::uint64_t>(t, n % T);
        std::uint64_t hi = lo + n / T + (static_cast<std::uint64_t>(t) < n % T ? 1 : 0);
        workers.emplace_back([&, t, lo, hi] {
            try {
                scan_range(G, plan, lo, hi, budget, chunk_hits[t]);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<std::vector<std::int64_t>> hits;
    for (auto& ch : chunk_hits)
        for (auto& h : ch) hits.push_back(std::move(h));
    return hits;
}

inline std::vector<std::vector<std::int64_t>> dedup_tuples(
    const FiniteAbelianGroup& G, const std::vector<std::vector<std::int64_t>>& raw) {
    std::vector<std::vector<std::int64_t>> out;
    out.reserve(raw.size());
    for (const auto& t : raw) out.push_back(normalize_coords(G, t));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Polars, prepolars, hulls

inline std::vector<Character> polar_impl(const FiniteAbelianGroup& G,
                                         const std::vector<GroupElement>& E,
                                         EvalBudget& budget, int threads) {
    std::vector<std::vector<std::int64_t>> raw;
    raw.reserve(E.size());
    for (const auto& x : E) raw.push_back(x.coords);
    auto hits = detail::scan_all(G, detail::dedup_tuples(G, raw), budget, threads);
    std::vector<Character> out;
    out.reserve(hits.size());
    for (auto& h : hits) out.emplace_back(std::move(h));
    return out;
}

inline std::vector<GroupElement> prepolar_impl(const FiniteAbelianGroup& G,
                                               const std::vector<Character>& A,
                                               EvalBudget& budget, int threads) {
    std::vector<std::vector<std::int64_t>> raw;
    raw.reserve(A.size());
    for (const auto& chi : A) raw.push_back(chi.coeffs);
    auto hits = detail::scan_all(G, detail::dedup_tuples(G, raw), budget, threads);
    std::vector<GroupElement> out;
    out.reserve(hits.size());
    for (auto& h : hits) out.emplace_back(std::move(h));
    return out;
}

// E^> : characters sending every member of E into T+.  Canonical mixed-radix
// order, which is ascending lexicographic order on coefficient tuples.
inline std::vector<Character> polar(const FiniteAbelianGroup& G, const std::vector<GroupElement>& E,
                                    const ScanOptions& opts = {}) {
    EvalBudget budget(opts.budget);
    return polar_impl(G, E, budget, opts.threads);
}

// A^< : elements sent into T+ by every character in A.
inline std::vector<GroupElement> prepolar(const FiniteAbelianGroup& G,
                                          const std::vector<Character>& A,
                                          const ScanOptions& opts = {}) {
    EvalBudget budget(opts.budget);
    return prepolar_impl(G, A, budget, opts.threads);
}

// Q_G(E) = E^><, the quasi-convex hull.  Both scans share one budget.
inline std::vector<GroupElement> qc_hull(const FiniteAbelianGroup& G,
                                         const std::vector<GroupElement>& E,
                                         const ScanOptions& opts = {}) {
    EvalBudget budget(opts.budget);
    auto pol = polar_impl(G, E, budget, opts.threads);
    return prepolar_impl(G, pol, budget, opts.threads);
}

inline std::vector<GroupElement> canonical_set(const FiniteAbelianGroup& G,
                                               const std::vector<GroupElement>& E) {
    std::vector<std::vector<std::int64_t>> raw;
    raw.reserve(E.size());
    for (const auto& x : E) raw.push_back(x.coords);
    auto ded = detail::dedup_tuples(G, raw);
    std::vector<GroupElement> out;
    out.reserve(ded.size());
    for (auto& t : ded) out.emplace_back(std::move(t));
    return out;
}

inline bool is_quasi_convex(const FiniteAbelianGroup& G, const std::vector<GroupElement>& E,
                            const ScanOptions& opts = {}) {
    return qc_hull(G, E, opts) == canonical_set(G, E);
}

// ---------------------------------------------------------------------------
// Subgroups and independence

inline std::vector<GroupElement> generated_subgroup(const FiniteAbelianGroup& G,
                                                    const std::vector<GroupElement>& gens) {
    std::vector<GroupElement> norm;
    norm.reserve(gens.size());
    for (const auto& g : gens) norm.push_back(normalize(G, g));

    std::set<std::vector<std::int64_t>> seen;
    std::vector<GroupElement> frontier{zero_element(G)};
    seen.insert(frontier.front().coords);
    while (!frontier.empty()) {
        std::vector<GroupElement> next;
        for (const auto& x : frontier)
            for (const auto& g : norm) {
                auto y = add(G, x, g);
                if (seen.insert(y.coords).second) next.push_back(std::move(y));
            }
        frontier = std::move(next);
    }
    std::vector<GroupElement> out;
    out.reserve(seen.size());
    for (const auto& c : seen) out.emplace_back(c);
    return out; // std::set iterates lexicographically = canonical order
}

// Independence in the direct-sum sense: |<f_1,...,f_r>| equals the product of
// the element orders.  The zero element is never part of an independent
// family, so it is rejected as an input error.
inline bool is_independent(const FiniteAbelianGroup& G, const std::vector<GroupElement>& fs) {
    Integer expected = 1;
    for (const auto& f : fs) {
        auto n = normalize(G, f);
        if (n == zero_element(G))
            throw std::invalid_argument("is_independent: the zero element is not allowed");
        expected *= element_order(G, n);
    }
    return Integer(generated_subgroup(G, fs).size()) == expected;
}

// ---------------------------------------------------------------------------
// Homomorphisms
//
// A homomorphism G -> H is given by a matrix M whose i-th row is the image of
// the i-th standard generator of G; it is well defined iff m_i * M[i] = 0 in
// H for every i.

using HomMatrix = std::vector<std::vector<std::int64_t>>;

inline bool hom_is_well_defined(const FiniteAbelianGroup& G, const FiniteAbelianGroup& H,
                                const HomMatrix& M) {
    if (M.size() != G.rank()) throw std::invalid_argument("hom matrix: wrong number of rows");
    for (std::size_t i = 0; i < M.size(); ++i) {
        if (M[i].size() != H.rank()) throw std::invalid_argument("hom matrix: wrong row length");
        for (std::size_t j = 0; j < H.rank(); ++j)
            if (Integer(G.moduli[i]) * M[i][j] % H.moduli[j] != 0) return false;
    }
    return true;
}

inline GroupElement apply_hom(const FiniteAbelianGroup& G, const FiniteAbelianGroup& H,
                              const HomMatrix& M, const GroupElement& x) {
    auto c = normalize_coords(G, x.coords);
    std::vector<std::int64_t> y(H.rank(), 0);
    for (std::size_t j = 0; j < H.rank(); ++j) {
        Integer s = 0;
        for (std::size_t i = 0; i < G.rank(); ++i) s += Integer(c[i]) * M[i][j];
        y[j] = (s % H.moduli[j] + H.moduli[j]).convert_to<std::int64_t>() % H.moduli[j];
    }
    return GroupElement(std::move(y));
}

inline bool is_subset(const std::vector<GroupElement>& a, const std::vector<GroupElement>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Checks f(Q_G(E)) subseteq Q_H(f(E)) by brute force.
inline bool hom_image_hull_check(const FiniteAbelianGroup& G, const FiniteAbelianGroup& H,
                                 const HomMatrix& M, const std::vector<GroupElement>& E,
                                 const ScanOptions& opts = {}) {
    if (!hom_is_well_defined(G, H, M))
        throw std::invalid_argument("hom_image_hull_check: matrix does not define a homomorphism");
    auto hullG = qc_hull(G, E, opts);
    std::vector<GroupElement> image;
    image.reserve(hullG.size());
    for (const auto& x : hullG) image.push_back(apply_hom(G, H, M, x));
    image = canonical_set(H, image);

    std::vector<GroupElement> fE;
    fE.reserve(E.size());
    for (const auto& x : E) fE.push_back(apply_hom(G, H, M, x));
    auto hullH = qc_hull(H, fE, opts);
    return is_subset(image, hullH);
}

} // namespace qconvex
