#pragma once

#include "angle.hpp"
#include "circleseq.hpp"
#include "classify.hpp"
#include "group.hpp"
#include "io.hpp"
#include "rng.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace qconvex::suites {

struct SuiteResult {
    std::string name;
    bool pass = true;
    std::uint64_t cases = 0;
    std::string witness; // minimal failing data, empty when pass
};

namespace gen {

inline Angle angle(Rng& rng, std::int64_t max_den = 10000) {
    std::int64_t den = 1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(max_den)));
    std::int64_t num = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(den)));
    return Angle::from_fraction(num, den);
}

inline FiniteAbelianGroup group(Rng& rng, int max_rank, std::int64_t max_mod, std::int64_t max_order) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        int r = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_rank)));
        std::vector<std::int64_t> moduli;
        Integer order = 1;
        for (int i = 0; i < r; ++i) {
            moduli.push_back(rng.range(2, max_mod));
            order *= moduli.back();
        }
        if (order <= max_order) return FiniteAbelianGroup(std::move(moduli));
    }
    return FiniteAbelianGroup({2});
}

inline GroupElement element(const FiniteAbelianGroup& G, Rng& rng) {
    std::vector<std::int64_t> c(G.rank());
    for (std::size_t i = 0; i < G.rank(); ++i)
        c[i] = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(G.moduli[i])));
    return GroupElement(std::move(c));
}

inline std::vector<GroupElement> subset(const FiniteAbelianGroup& G, Rng& rng,
                                        std::uint64_t max_size, bool with_zero) {
    std::vector<GroupElement> out;
    std::uint64_t size = 1 + rng.below(max_size);
    for (std::uint64_t i = 0; i < size; ++i) out.push_back(element(G, rng));
    if (with_zero) out.push_back(zero_element(G));
    return canonical_set(G, out);
}

// An independent family of up to `want` elements, each of order >= min_order;
// random candidates first, axis-aligned fallback to guarantee progress.
inline std::vector<GroupElement> independent_family(const FiniteAbelianGroup& G, Rng& rng,
                                                    std::size_t want, const Integer& min_order) {
    std::vector<GroupElement> fam;
    for (std::size_t slot = 0; slot < want; ++slot) {
        bool placed = false;
        for (int attempt = 0; attempt < 30 && !placed; ++attempt) {
            auto cand = element(G, rng);
            if (cand == zero_element(G) || element_order(G, cand) < min_order) continue;
            fam.push_back(cand);
            if (is_independent(G, fam)) placed = true;
            else fam.pop_back();
        }
        if (!placed) break;
    }
    if (fam.empty()) {
        for (std::size_t i = 0; i < G.rank(); ++i)
            if (G.moduli[i] >= min_order) {
                std::vector<std::int64_t> c(G.rank(), 0);
                c[i] = 1;
                fam.emplace_back(std::move(c));
                break;
            }
    }
    return fam;
}

inline std::string describe_set(const std::vector<GroupElement>& E) {
    std::ostringstream os;
    for (std::size_t i = 0; i < E.size(); ++i) {
        if (i) os << ',';
        os << format_tuple(E[i].coords);
    }
    return os.str();
}

inline std::string describe_qs(const QSeq& Q) {
    std::ostringstream os;
    for (std::size_t i = 0; i < Q.qs.size(); ++i) {
        if (i) os << ',';
        os << Q.qs[i];
    }
    return os.str();
}

} // namespace gen

// ---------------------------------------------------------------------------
// 1. Angle arithmetic: group axioms, canonical range, scaling as iterated
//    addition, the T_m membership characterisation, rounding order.

inline SuiteResult angle_axioms(std::uint64_t seed, std::uint64_t cases) {
    SuiteResult res{"angle-axioms"};
    Rng rng(seed * 1000003ull + 1);
    for (std::uint64_t i = 0; i < cases; ++i) {
        ++res.cases;
        Angle a = gen::angle(rng), b = gen::angle(rng), c = gen::angle(rng);
        auto fail = [&](const std::string& what) {
            res.pass = false;
            res.witness = what + " at a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string();
        };
        if ((a + b) + c != a + (b + c)) { fail("associativity"); break; }
        if (a + b != b + a) { fail("commutativity"); break; }
        if (a + Angle() != a) { fail("identity"); break; }
        if (a + (-a) != Angle()) { fail("inverse"); break; }
        if (!(a.rep() > Rational(-1, 2) && a.rep() <= Rational(1, 2))) { fail("canonical range"); break; }

        std::int64_t m = rng.range(-64, 64);
        Angle it;
        for (std::int64_t j = 0; j < (m < 0 ? -m : m); ++j) it = it + (m < 0 ? -a : a);
        if (a.scale(m) != it) { fail("scale vs iterated add, m=" + std::to_string(m)); break; }

        std::int64_t tm = rng.range(1, 16);
        bool lhs = a.in_Tm(tm);
        bool rhs = true;
        for (std::int64_t k = 1; k <= tm; ++k) rhs = rhs && a.scale(k).in_Tplus();
        if (lhs != rhs) { fail("in_Tm characterisation, m=" + std::to_string(tm)); break; }

        Rational x(rng.range(-1000000, 1000000), rng.range(1, 1000));
        Integer sf = round_rational(x, Rounding::StrictFloor);
        Integer fb = round_rational(x, Rounding::FloorBracket);
        Integer sc = round_rational(x, Rounding::StrictCeiling);
        bool ok = sf <= fb && Rational(fb) <= x && x < Rational(sc) && sc == fb + 1 &&
                  Rational(sf) < x && (fb - sf == (is_integer(x) ? 1 : 0));
        if (!ok) { fail("rounding order"); break; }
    }
    return res;
}

// ---------------------------------------------------------------------------
// 2. Hull axioms: extensive, idempotent, monotone, symmetric, contains 0;
//    polar of {0} is the whole dual.

inline SuiteResult hull_axioms(std::uint64_t seed, std::uint64_t cases, const ScanOptions& opts) {
    SuiteResult res{"hull-axioms"};
    Rng rng(seed * 1000003ull + 2);
    for (std::uint64_t i = 0; i < cases; ++i) {
        ++res.cases;
        auto G = gen::group(rng, 3, 16, 256);
        auto E = gen::subset(G, rng, 2 * G.rank() + 2, rng.coin());
        auto fail = [&](const std::string& what) {
            res.pass = false;
            res.witness = what + " for group=" + format_group(G) + " E=" + gen::describe_set(E);
        };
        auto hull = qc_hull(G, E, opts);
        if (!is_subset(E, hull)) { fail("hull not extensive"); break; }
        if (qc_hull(G, hull, opts) != hull) { fail("hull not idempotent"); break; }
        if (E.size() > 1) {
            auto smaller = E;
            smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(rng.below(smaller.size())));
            if (!is_subset(qc_hull(G, smaller, opts), hull)) { fail("hull not monotone"); break; }
        }
        std::vector<GroupElement> neg;
        for (const auto& x : hull) neg.push_back(negate(G, x));
        if (canonical_set(G, neg) != hull) { fail("hull not symmetric"); break; }
        if (!std::binary_search(hull.begin(), hull.end(), zero_element(G))) { fail("hull misses 0"); break; }
        if (Integer(polar(G, {zero_element(G)}, opts).size()) != G.order()) {
            fail("polar of {0} is not the whole dual");
            break;
        }
        if (G.order() <= 64) {
            auto everything = prepolar(G, {Character(std::vector<std::int64_t>(G.rank(), 0))}, opts);
            if (qc_hull(G, everything, opts) != everything) { fail("hull of the whole group"); break; }
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// 3. In exponent-2 and exponent-3 groups every character value lands in
//    {0, 1/2} resp. {0, +-1/3}, none of which meet T+ except 0, so the hull
//    collapses to the generated subgroup.

inline SuiteResult exponent23_collapse(std::uint64_t seed, std::uint64_t cases,
                                       const ScanOptions& opts) {
    SuiteResult res{"exponent23-collapse"};
    Rng rng(seed * 1000003ull + 3);
    for (std::uint64_t i = 0; i < cases; ++i) {
        ++res.cases;
        std::int64_t p = rng.coin() ? 2 : 3;
        int k = static_cast<int>(rng.range(1, p == 2 ? 8 : 5));
        FiniteAbelianGroup G(std::vector<std::int64_t>(static_cast<std::size_t>(k), p));
        auto E = gen::subset(G, rng, static_cast<std::uint64_t>(2 * k), true);
        auto hull = qc_hull(G, E, opts);
        auto span = generated_subgroup(G, E);
        if (hull != span) {
            res.pass = false;
            res.witness = "hull != generated subgroup for group=" + format_group(G) +
                          " E=" + gen::describe_set(E);
            break;
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// 4. Restriction to subgroups: for H = <g_1,...,g_r> presented intrinsically
//    as Z_{o(g_1)} x ... x Z_{o(g_r)} (the g_i independent) and S inside H,
//    the hull computed in H, pushed forward, equals the hull computed in G —
//    and a fortiori equals its intersection with H.

inline SuiteResult subgroup_restriction(std::uint64_t seed, std::uint64_t cases,
                                        const ScanOptions& opts) {
    SuiteResult res{"subgroup-restriction"};
    Rng rng(seed * 1000003ull + 4);
    for (std::uint64_t i = 0; i < cases; ++i) {
        ++res.cases;
        auto G = gen::group(rng, 3, 12, 512);
        auto gens = gen::independent_family(G, rng, 1 + rng.below(2), 2);
        if (gens.empty()) continue;

        std::vector<std::int64_t> h_moduli;
        for (const auto& g : gens) h_moduli.push_back(element_order(G, g).convert_to<std::int64_t>());
        FiniteAbelianGroup H(h_moduli);

        auto phi = [&](const GroupElement& l) {
            auto y = zero_element(G);
            for (std::size_t j = 0; j < gens.size(); ++j)
                y = add(G, y, scale_element(G, gens[j], l.coords[j]));
            return y;
        };

        auto Sh = gen::subset(H, rng, 5, rng.coin());
        std::vector<GroupElement> Sg;
        for (const auto& s : Sh) Sg.push_back(phi(s));
        Sg = canonical_set(G, Sg);

        auto hull_h = qc_hull(H, Sh, opts);
        std::vector<GroupElement> pushed;
        for (const auto& x : hull_h) pushed.push_back(phi(x));
        pushed = canonical_set(G, pushed);

        auto hull_g = qc_hull(G, Sg, opts);
        auto HG = generated_subgroup(G, gens);
        std::vector<GroupElement> restricted;
        std::set_intersection(hull_g.begin(), hull_g.end(), HG.begin(), HG.end(),
                              std::back_inserter(restricted));

        if (pushed != hull_g || pushed != restricted) {
            res.pass = false;
            res.witness = "subgroup hull mismatch for group=" + format_group(G) + " H=" +
                          format_group(H) + " S=" + gen::describe_set(Sg);
            break;
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// 5. {0, +-f_1, ..., +-f_r} is quasi-convex for independent f_i of order
//    >= 4; the Z_2 x Z_2 cross is the negative control (its hull is
//    everything).

inline SuiteResult independent_symmetric_qc(std::uint64_t seed, std::uint64_t cases,
                                            const ScanOptions& opts, std::int64_t max_order = 5000) {
    SuiteResult res{"independent-symmetric-qc"};
    Rng rng(seed * 1000003ull + 5);

    FiniteAbelianGroup v({2, 2});
    std::vector<GroupElement> cross{GroupElement({0, 0}), GroupElement({1, 0}), GroupElement({0, 1})};
    ++res.cases;
    if (is_quasi_convex(v, cross, opts) ||
        qc_hull(v, cross, opts) != prepolar(v, {Character({0, 0})}, opts)) {
        res.pass = false;
        res.witness = "negative control failed: Z2 x Z2 cross should hull to the whole group";
        return res;
    }

    for (std::uint64_t i = 0; i < cases; ++i) {
        ++res.cases;
        FiniteAbelianGroup G({2});
        for (int attempt = 0; attempt < 50; ++attempt) {
            G = gen::group(rng, 4, 32, max_order);
            Integer exp = 1;
            for (auto m : G.moduli) exp = boost::multiprecision::lcm(exp, Integer(m));
            if (exp >= 4) break;
        }
        auto fam = gen::independent_family(G, rng, 1 + rng.below(3), 4);
        if (fam.empty()) continue;
        std::vector<GroupElement> X{zero_element(G)};
        for (const auto& f : fam) {
            X.push_back(f);
            X.push_back(negate(G, f));
        }
        if (!is_quasi_convex(G, X, opts)) {
            res.pass = false;
            res.witness = "symmetric set not quasi-convex for group=" + format_group(G) +
                          " family=" + gen::describe_set(fam);
            break;
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// 6. The slotted sequence in F x E^n (maximal-order y in one E slot, zeros
//    elsewhere) is independent and symmetrically quasi-convex.

inline SuiteResult product_tail_construction(std::uint64_t seed, std::uint64_t cases,
                                             const ScanOptions& opts) {
    SuiteResult res{"product-tail-construction"};
    Rng rng(seed * 1000003ull + 6);

    auto check = [&](const FiniteAbelianGroup& F, const FiniteAbelianGroup& E,
                     const GroupElement& y, std::size_t depth) -> bool {
        auto seq = build_FE_sequence(F, E, y, depth);
        if (!is_independent(seq.product, seq.xs)) {
            res.pass = false;
            res.witness = "sequence not independent for F=" + format_group(F) +
                          " E=" + format_group(E) + " n=" + std::to_string(depth);
            return false;
        }
        std::vector<GroupElement> X{zero_element(seq.product)};
        for (const auto& x : seq.xs) {
            X.push_back(x);
            X.push_back(negate(seq.product, x));
        }
        if (!is_quasi_convex(seq.product, X, opts)) {
            res.pass = false;
            res.witness = "sequence set not quasi-convex for F=" + format_group(F) +
                          " E=" + format_group(E) + " n=" + std::to_string(depth);
            return false;
        }
        return true;
    };

    for (std::size_t n = 1; n <= 3; ++n) {
        ++res.cases;
        if (!check(FiniteAbelianGroup({5}), FiniteAbelianGroup({4}), GroupElement({1}), n)) return res;
    }

    for (std::uint64_t i = 0; i < cases / 8; ++i) {
        auto F = rng.coin() ? FiniteAbelianGroup() : gen::group(rng, 1, 8, 8);
        auto E = gen::group(rng, 2, 8, 16);
        Integer exp = 1;
        for (auto m : E.moduli) exp = boost::multiprecision::lcm(exp, Integer(m));
        if (exp < 4) continue;
        GroupElement y = zero_element(E);
        bool found = false;
        for (std::uint64_t idx = 0; idx < 64 && !found; ++idx) {
            auto cand = gen::element(E, rng);
            if (element_order(E, cand) == exp) {
                y = cand;
                found = true;
            }
        }
        if (!found) continue;
        std::size_t depth = 1 + rng.below(2);
        Integer size = F.order() * boost::multiprecision::pow(E.order(), static_cast<unsigned>(depth));
        if (size > 3000) continue;
        ++res.cases;
        if (!check(F, E, y, depth)) return res;
    }
    return res;
}

// ---------------------------------------------------------------------------
// 7. Leading coefficient of the standard representation: if mz stays in T+
//    for m up to the stated cutoff, then c_0 is -1, 0 or 1.  Cutoffs:
//    (a) strict-ceiling(d_0/6);  (b) floor-bracket(d_0/4) when d_0 != 7;
//    (c) for d_0 = 7, additionally m = 6.

inline SuiteResult leading_coefficient(std::uint64_t seed, std::uint64_t cases) {
    SuiteResult res{"leading-coefficient"};
    Rng rng(seed * 1000003ull + 7);
    for (std::uint64_t i = 0; i < cases; ++i) {
        ++res.cases;

        std::size_t len = 1 + rng.below(4);
        std::vector<Integer> ds;
        Integer d = (i % 3 == 2) ? 7 : rng.range(2, 12); // steer a third of cases at d_0 = 7
        for (std::size_t k = 0; k < len; ++k) {
            ds.push_back(d);
            d *= rng.range(2, 8);
        }
        DivChain chain(ds);
        Integer d0 = chain.ds[0];

        Integer cutoff;
        bool extra_six = false; // case (c): also require m = d_0 - 1
        int variant = static_cast<int>(rng.below(3));
        if (d0 == 7 || variant == 2) {
            cutoff = round_rational(Rational(d0, 4), Rounding::FloorBracket);
            extra_six = true;
        } else if (variant == 0) {
            cutoff = round_rational(Rational(d0, 6), Rounding::StrictCeiling);
        } else {
            cutoff = round_rational(Rational(d0, 4), Rounding::FloorBracket);
        }

        // Sample z inside T_cutoff, then verify the premise holds literally.
        Angle z;
        bool have = false;
        Integer l = cutoff < 1 ? Integer(1) : cutoff;
        for (int attempt = 0; attempt < 200 && !have; ++attempt) {
            std::int64_t den = rng.range(1, 10000);
            Integer bound = Integer(den) / (4 * l);
            std::int64_t b = bound.convert_to<std::int64_t>();
            std::int64_t num = rng.range(-b, b);
            Angle cand = Angle::from_fraction(num, den);
            bool premise = true;
            for (Integer m = 1; m <= cutoff; ++m) premise = premise && cand.scale(m).in_Tplus();
            if (extra_six) premise = premise && cand.scale(d0 - 1).in_Tplus();
            if (premise) {
                z = cand;
                have = true;
            }
        }
        if (!have) z = Angle::from_fraction(1, 8 * d0); // always satisfies every premise above

        auto rep = standard_rep(z, chain);
        if (rep.cs[0] < -1 || rep.cs[0] > 1) {
            res.pass = false;
            std::ostringstream os;
            os << "leading coefficient " << rep.cs[0] << " for z=" << z.to_string() << " d_0=" << d0;
            res.witness = os.str();
            break;
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// 8. m * eta_k lies in X^> for m up to floor-bracket(q_k/4) when q_k >= 4,
//    and also for m = q_k - 1 when the next ratio is at least 4 (or k is the
//    last index, where the later members it would have to control are absent).

inline SuiteResult scaled_character_membership(std::uint64_t seed, std::uint64_t cases) {
    SuiteResult res{"scaled-character-membership"};
    Rng rng(seed * 1000003ull + 8);
    for (std::uint64_t i = 0; i < cases; ++i) {
        ++res.cases;
        std::size_t len = 1 + rng.below(6);
        std::vector<std::int64_t> qs;
        for (std::size_t k = 0; k < len; ++k) qs.push_back(rng.range(4, 64));
        QSeq Q(qs);
        auto fail = [&](std::size_t k, const Integer& m) {
            res.pass = false;
            std::ostringstream os;
            os << "m*eta_k not in polar: qs=" << gen::describe_qs(Q) << " k=" << k << " m=" << m;
            res.witness = os.str();
        };
        for (std::size_t k = 0; k <= Q.depth() + 1 && res.pass; ++k) {
            if (k <= Q.depth()) {
                Integer top = round_rational(Rational(Q.qs[k], 4), Rounding::FloorBracket);
                for (Integer m = 1; m <= top; ++m)
                    if (!check_etak_membership(Q, k, m)) { fail(k, m); break; }
                if (res.pass && (k == Q.depth() || Q.qs[k + 1] >= 4))
                    if (!check_etak_membership(Q, k, Q.qs[k] - 1)) fail(k, Q.qs[k] - 1);
            } else {
                if (!check_etak_membership(Q, k, 1)) fail(k, 1); // eta_{N+1} kills all of X
            }
        }
        if (!res.pass) break;
    }
    return res;
}

// ---------------------------------------------------------------------------
// 9. [q_{k1}/4] eta_{k1} +- strict_floor(q_{k2}/4) eta_{k2} lies in X^> for
//    every k1 < k2, with no hypotheses on the ratios.

inline SuiteResult paired_character_membership(std::uint64_t seed, std::uint64_t cases) {
    SuiteResult res{"paired-character-membership"};
    Rng rng(seed * 1000003ull + 9);
    for (std::uint64_t i = 0; i < cases; ++i) {
        ++res.cases;
        std::size_t len = 2 + rng.below(5);
        std::vector<std::int64_t> qs;
        for (std::size_t k = 0; k < len; ++k) qs.push_back(rng.range(2, 64));
        QSeq Q(qs);
        for (std::size_t k1 = 0; k1 < Q.depth() && res.pass; ++k1)
            for (std::size_t k2 = k1 + 1; k2 <= Q.depth() && res.pass; ++k2)
                for (bool plus : {true, false})
                    if (!check_k1k2_membership(Q, k1, k2, plus)) {
                        res.pass = false;
                        std::ostringstream os;
                        os << "pair character not in polar: qs=" << gen::describe_qs(Q) << " k1=" << k1
                           << " k2=" << k2 << (plus ? " +" : " -");
                        res.witness = os.str();
                    }
        if (!res.pass) break;
    }
    return res;
}

// ---------------------------------------------------------------------------
// 10. Hull coefficient form: when no q_k = 7 is followed by q_{k+1} < 4,
//     every truncated-hull member has standard coefficients in {-1, 0, 1};
//     (7,3) is the pinned counterexample when the hypothesis fails.

inline SuiteResult hull_coefficient_form(std::uint64_t seed, std::uint64_t cases,
                                         const ScanOptions& opts) {
    SuiteResult res{"hull-coefficient-form"};
    Rng rng(seed * 1000003ull + 10);

    auto expect_pm1 = [&](const QSeq& Q) {
        ++res.cases;
        auto report = check_ternary_form(Q, opts);
        if (!report.hypothesis_ok || !report.all_pm1) {
            res.pass = false;
            res.witness = "coefficient form failed for qs=" + gen::describe_qs(Q);
            return false;
        }
        return true;
    };

    for (const auto& qs : std::vector<std::vector<std::int64_t>>{
             {8, 8, 8}, {7, 4, 8}, {4, 4, 4}, {2, 2}, {3, 4, 5}})
        if (!expect_pm1(QSeq(qs))) return res;

    // Pinned hypothesis-violating case: hull member 5/21 has c_0 = 2.
    ++res.cases;
    auto bad = check_ternary_form(QSeq({7, 3}), opts);
    bool saw_five = false;
    for (const auto& v : bad.violations) saw_five |= v.residue == 5;
    if (bad.hypothesis_ok || bad.all_pm1 || !saw_five) {
        res.pass = false;
        res.witness = "qs=7,3 should violate the form with residue 5";
        return res;
    }

    std::uint64_t randoms = cases < 25 ? cases : 25;
    for (std::uint64_t i = 0; i < randoms; ++i) {
        std::vector<std::int64_t> qs;
        std::size_t len = 1 + rng.below(3);
        Integer b = 1;
        for (std::size_t k = 0; k < len; ++k) {
            std::int64_t q = rng.range(2, 10);
            if (k > 0 && qs.back() == 7 && q < 4) q = rng.range(4, 10);
            qs.push_back(q);
            b *= q;
        }
        if (b > 2048) { --i; continue; }
        if (!expect_pm1(QSeq(qs))) return res;
    }
    return res;
}

// ---------------------------------------------------------------------------
// 11. Truncation of the all-ratios->=-8 regime: the hull of X_N is X_N.

inline SuiteResult eight_ratio_truncation(std::uint64_t seed, std::uint64_t cases,
                                          const ScanOptions& opts) {
    SuiteResult res{"eight-ratio-truncation"};
    Rng rng(seed * 1000003ull + 11);

    ++res.cases;
    auto th = truncated_hull(QSeq({8, 8, 8, 8}), opts);
    if (!th.equal || th.hull_residues.size() != 9) {
        res.pass = false;
        res.witness = "hull of X_3 for qs=8,8,8,8 is not X_3";
        return res;
    }

    std::uint64_t randoms = cases < 10 ? cases : 10;
    for (std::uint64_t i = 0; i < randoms; ++i) {
        ++res.cases;
        std::size_t len = 1 + rng.below(3);
        std::vector<std::int64_t> qs;
        for (std::size_t k = 0; k < len; ++k) qs.push_back(rng.range(8, 14));
        QSeq Q(qs);
        if (Q.b(static_cast<std::ptrdiff_t>(Q.depth())) > 3000) { --res.cases; --i; continue; }
        if (!truncated_hull(Q, opts).equal) {
            res.pass = false;
            res.witness = "hull of X_N not equal to X_N for qs=" + gen::describe_qs(Q);
            break;
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// 12. Classifier: verdict NO exactly when all infinite factors share order 2
//     or all share order 3; exhaustive over <= 3 distinct orders in [2,12]
//     and multiplicities {1, 2, infinite}, plus the pinned examples.

inline SuiteResult classifier_criterion(std::uint64_t /*seed*/, std::uint64_t /*cases*/) {
    SuiteResult res{"classifier-criterion"};

    std::vector<Mult> mults{Mult::of(1), Mult::of(2), Mult::inf()};
    std::vector<std::vector<SymbolicFactor>> pool{{}};
    for (std::int64_t order = 2; order <= 12; ++order) {
        std::vector<std::vector<SymbolicFactor>> next = pool;
        for (const auto& partial : pool) {
            if (partial.size() == 3) continue;
            for (const auto& m : mults) {
                auto withm = partial;
                withm.push_back({order, m});
                next.push_back(std::move(withm));
            }
        }
        pool = std::move(next);
    }

    for (const auto& factors : pool) {
        ++res.cases;
        auto G = SymbolicGroup::make(factors);
        auto out = admits_qc_null_sequence(G);

        bool all2 = true, all3 = true;
        for (const auto& f : G.factors)
            if (f.mult.infinite) {
                all2 = all2 && f.order == 2;
                all3 = all3 && f.order == 3;
            }
        bool expect_no = all2 || all3;
        if ((out.verdict == Verdict::No) != expect_no) {
            res.pass = false;
            res.witness = "verdict mismatch for " + format_symbolic(G);
            return res;
        }
        if (out.verdict == Verdict::No && !is_finite(G)) {
            std::vector<SymbolicFactor> rebuilt = out.normal_form->finite_part;
            rebuilt.push_back({out.normal_form->torsion_order, Mult::inf()});
            if (!(SymbolicGroup::make(rebuilt) == G)) {
                res.pass = false;
                res.witness = "normal form does not rebuild " + format_symbolic(G);
                return res;
            }
        }
        if (out.verdict == Verdict::Yes && !out.witness) {
            res.pass = false;
            res.witness = "YES verdict without witness for " + format_symbolic(G);
            return res;
        }
    }

    ++res.cases;
    auto mixed = admits_qc_null_sequence(parse_symbolic("Z2^inf x Z3^inf"));
    if (mixed.verdict != Verdict::Yes || !mixed.witness || mixed.witness->order != 6) {
        res.pass = false;
        res.witness = "Z2^inf x Z3^inf should be YES with a Z_6 witness";
        return res;
    }
    ++res.cases;
    auto split = admits_qc_null_sequence(parse_symbolic("Z2^inf x Z5^3"));
    if (split.verdict != Verdict::No || !split.normal_form ||
        split.normal_form->torsion_order != 2 || split.normal_form->finite_part.size() != 1 ||
        split.normal_form->finite_part[0].order != 5 ||
        !(split.normal_form->finite_part[0].mult == Mult::of(3))) {
        res.pass = false;
        res.witness = "Z2^inf x Z5^3 should be NO with normal form Z_2^inf x Z_5^3";
        return res;
    }
    return res;
}

// ---------------------------------------------------------------------------

inline std::vector<SuiteResult> run_all_suites(std::uint64_t seed, std::uint64_t cases,
                                               const ScanOptions& opts) {
    std::vector<SuiteResult> out;
    out.push_back(angle_axioms(seed, cases));
    out.push_back(hull_axioms(seed, cases, opts));
    out.push_back(exponent23_collapse(seed, cases, opts));
    out.push_back(subgroup_restriction(seed, cases / 2, opts));
    out.push_back(independent_symmetric_qc(seed, cases, opts));
    out.push_back(product_tail_construction(seed, cases, opts));
    out.push_back(leading_coefficient(seed, cases));
    out.push_back(scaled_character_membership(seed, cases / 2));
    out.push_back(paired_character_membership(seed, cases / 2));
    out.push_back(hull_coefficient_form(seed, cases, opts));
    out.push_back(eight_ratio_truncation(seed, cases, opts));
    out.push_back(classifier_criterion(seed, cases));
    return out;
}

} // namespace qconvex::suites
