#pragma once

#include "circleseq.hpp"
#include "group.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qconvex {

// ---------------------------------------------------------------------------
// Symbolic bounded groups: formal products of Z_m^mult with mult a
// non-negative integer or INFINITE (any infinite cardinal behaves alike
// for the questions asked here).

struct Mult {
    bool infinite = false;
    std::uint64_t count = 0;

    static Mult inf() { return {true, 0}; }
    static Mult of(std::uint64_t n) { return {false, n}; }

    Mult operator+(const Mult& o) const {
        if (infinite || o.infinite) return inf();
        return of(count + o.count);
    }
    bool operator==(const Mult& o) const {
        return infinite == o.infinite && (infinite || count == o.count);
    }
};

struct SymbolicFactor {
    std::int64_t order = 2;
    Mult mult;
    bool operator==(const SymbolicFactor& o) const { return order == o.order && mult == o.mult; }
};

struct SymbolicGroup {
    // Sorted by order, one entry per order, no zero multiplicities and no
    // order-1 factors.
    std::vector<SymbolicFactor> factors;

    static SymbolicGroup make(const std::vector<SymbolicFactor>& raw) {
        for (const auto& f : raw)
            if (f.order < 1) throw std::invalid_argument("SymbolicGroup: orders must be positive");
        std::vector<SymbolicFactor> merged;
        for (const auto& f : raw) {
            if (f.order == 1) continue;
            auto it = std::find_if(merged.begin(), merged.end(),
                                   [&](const SymbolicFactor& g) { return g.order == f.order; });
            if (it == merged.end()) merged.push_back(f);
            else it->mult = it->mult + f.mult;
        }
        std::erase_if(merged, [](const SymbolicFactor& f) { return !f.mult.infinite && f.mult.count == 0; });
        std::sort(merged.begin(), merged.end(),
                  [](const SymbolicFactor& a, const SymbolicFactor& b) { return a.order < b.order; });
        return SymbolicGroup{std::move(merged)};
    }

    bool operator==(const SymbolicGroup& o) const { return factors == o.factors; }
};

inline bool is_finite(const SymbolicGroup& G) {
    for (const auto& f : G.factors)
        if (f.mult.infinite) return false;
    return true;
}

// pG for a positive integer p: Z_m^k maps onto Z_{m/gcd(p,m)}^k.
inline SymbolicGroup multiply(const SymbolicGroup& G, std::int64_t p) {
    if (p < 1) throw std::invalid_argument("multiply: p must be a positive integer");
    std::vector<SymbolicFactor> out;
    out.reserve(G.factors.size());
    for (const auto& f : G.factors)
        out.push_back({f.order / std::gcd(f.order, p), f.mult});
    return SymbolicGroup::make(out);
}

// ---------------------------------------------------------------------------
// Verdict: does the group admit a non-trivial quasi-convex null sequence?
// It does NOT exactly when 2G or 3G is finite, i.e. when the group is
// Z_2^kappa x F or Z_3^kappa x F with F finite.

enum class Verdict { No, Yes };

struct NormalForm {
    std::int64_t torsion_order = 0; // 2 or 3; 0 when the group is finite
    std::vector<SymbolicFactor> finite_part;
};

struct Witness {
    std::int64_t order = 0; // Z_order^omega embeds and carries such a sequence
    std::string reason;
};

struct ClassifyResult {
    Verdict verdict = Verdict::No;
    std::string criterion;
    std::optional<NormalForm> normal_form;
    std::optional<Witness> witness;
};

inline ClassifyResult admits_qc_null_sequence(const SymbolicGroup& G) {
    ClassifyResult res;
    bool two = is_finite(multiply(G, 2));
    bool three = is_finite(multiply(G, 3));

    if (two || three) {
        res.verdict = Verdict::No;
        res.criterion = two ? "doubling-image-finite" : "tripling-image-finite";
        NormalForm nf;
        bool has_infinite = !is_finite(G);
        nf.torsion_order = has_infinite ? (two ? 2 : 3) : 0;
        for (const auto& f : G.factors)
            if (!f.mult.infinite) nf.finite_part.push_back(f);
        res.normal_form = std::move(nf);
        return res;
    }

    res.verdict = Verdict::Yes;
    res.criterion = "doubling-and-tripling-images-infinite";
    std::optional<std::int64_t> candidate;
    for (const auto& f : G.factors)
        if (f.mult.infinite && f.order >= 4 && (!candidate || f.order < *candidate))
            candidate = f.order;
    bool has2 = false, has3 = false;
    for (const auto& f : G.factors)
        if (f.mult.infinite) {
            has2 |= f.order == 2;
            has3 |= f.order == 3;
        }
    Witness w;
    if (has2 && has3 && (!candidate || *candidate > 6)) {
        w.order = 6;
        w.reason = "Z_2^omega x Z_3^omega is isomorphic to Z_6^omega, whose order-6 slots carry one";
    } else {
        w.order = *candidate;
        w.reason = "Z_" + std::to_string(w.order) + "^omega embeds and its order >= 4 slots carry one";
    }
    res.witness = std::move(w);
    return res;
}

// ---------------------------------------------------------------------------
// F x E^omega normalization: E collects one cyclic factor per distinct order
// of infinite multiplicity, F is the finite-multiplicity content.

struct NormalizedFE {
    FiniteAbelianGroup F;
    FiniteAbelianGroup E;
    Integer expE;
    bool exp_at_least_4 = false;
};

inline NormalizedFE normalize_FEomega(const SymbolicGroup& G) {
    std::vector<std::int64_t> e_moduli;
    for (const auto& f : G.factors)
        if (f.mult.infinite) e_moduli.push_back(f.order);
    if (e_moduli.empty())
        throw hypothesis_error("normalize_FEomega: no factor of infinite multiplicity");

    std::vector<std::int64_t> f_moduli;
    for (const auto& f : G.factors)
        if (!f.mult.infinite) {
            if (f.mult.count > 4096)
                throw std::invalid_argument("normalize_FEomega: finite part too large to materialize");
            for (std::uint64_t i = 0; i < f.mult.count; ++i) f_moduli.push_back(f.order);
        }

    NormalizedFE out{FiniteAbelianGroup(f_moduli), FiniteAbelianGroup(e_moduli), 1, false};
    for (auto m : e_moduli) out.expE = boost::multiprecision::lcm(out.expE, Integer(m));
    out.exp_at_least_4 = out.expE >= 4;
    return out;
}

// ---------------------------------------------------------------------------
// The concrete sequence inside F x E^n: x_k places a maximal-order y in the
// k-th E slot and zeros elsewhere (the free tail coordinates chosen zero).

struct FESeq {
    FiniteAbelianGroup product; // F x E^n
    std::vector<GroupElement> xs;
};

inline FESeq build_FE_sequence(const FiniteAbelianGroup& F, const FiniteAbelianGroup& E,
                               const GroupElement& y, std::size_t depth) {
    if (depth < 1) throw std::invalid_argument("build_FE_sequence: depth must be >= 1");
    auto yn = normalize(E, y);
    Integer expE = 1;
    for (auto m : E.moduli) expE = boost::multiprecision::lcm(expE, Integer(m));
    Integer oy = element_order(E, yn);
    if (oy < 4)
        throw hypothesis_error("build_FE_sequence: y must have order at least 4");
    if (oy != expE)
        throw hypothesis_error("build_FE_sequence: y must have maximal order exp(E)");

    std::vector<std::int64_t> moduli = F.moduli;
    for (std::size_t k = 0; k < depth; ++k)
        moduli.insert(moduli.end(), E.moduli.begin(), E.moduli.end());

    FESeq out{FiniteAbelianGroup(std::move(moduli)), {}};
    for (std::size_t k = 0; k < depth; ++k) {
        std::vector<std::int64_t> coords(out.product.rank(), 0);
        std::copy(yn.coords.begin(), yn.coords.end(),
                  coords.begin() + static_cast<std::ptrdiff_t>(F.rank() + k * E.rank()));
        out.xs.emplace_back(std::move(coords));
    }
    return out;
}

} // namespace qconvex
