// Command-line front end: polars, prepolars and quasi-convex hulls in finite
// abelian groups, standard representations on the circle, sequence checks,
// the symbolic classifier, and the property-suite runner.

#include <CLI11.hpp>
#include <json.hpp>

#include <qconvex/angle.hpp>
#include <qconvex/circleseq.hpp>
#include <qconvex/classify.hpp>
#include <qconvex/group.hpp>
#include <qconvex/io.hpp>
#include <qconvex/verify.hpp>

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace qconvex;

std::uint64_t default_budget() {
    if (const char* env = std::getenv("QCONVEX_BUDGET")) {
        try {
            std::size_t pos = 0;
            unsigned long long v = std::stoull(env, &pos);
            if (pos == std::string(env).size() && v > 0) return v;
        } catch (const std::exception&) {
            // fall through to the built-in default
        }
    }
    return 10'000'000ull;
}

std::vector<Integer> parse_chain_list(const std::string& text) {
    std::vector<Integer> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        std::size_t a = item.find_first_not_of(" \t");
        std::size_t b = item.find_last_not_of(" \t");
        if (a == std::string::npos) throw std::invalid_argument("empty entry in chain list");
        out.emplace_back(item.substr(a, b - a + 1));
    }
    if (out.empty()) throw std::invalid_argument("empty chain list");
    return out;
}

std::vector<GroupElement> parse_elements(const FiniteAbelianGroup& G, const std::string& text) {
    std::vector<GroupElement> out;
    for (auto& t : parse_tuple_set(text)) out.push_back(normalize(G, GroupElement(std::move(t))));
    return out;
}

std::vector<Character> parse_characters(const FiniteAbelianGroup& G, const std::string& text) {
    std::vector<Character> out;
    for (auto& t : parse_tuple_set(text)) out.push_back(normalize(G, Character(std::move(t))));
    return out;
}

json tuple_set_json(const std::vector<GroupElement>& set) {
    json arr = json::array();
    for (const auto& x : set) arr.push_back(format_tuple(x.coords));
    return arr;
}

json character_set_json(const std::vector<Character>& set) {
    json arr = json::array();
    for (const auto& chi : set) arr.push_back(format_tuple(chi.coeffs));
    return arr;
}

json integer_list_json(const std::vector<Integer>& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(x.str());
    return arr;
}

json rational_list_json(const std::vector<Rational>& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(format_rational(x));
    return arr;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string verdict_name(Verdict v) { return v == Verdict::Yes ? "YES" : "NO"; }

int run_hull_family(const std::string& mode, const std::string& group_text,
                    const std::string& set_text, const ScanOptions& opts, bool as_json) {
    FiniteAbelianGroup G = parse_group(group_text);

    if (mode == "polar") {
        auto E = canonical_set(G, parse_elements(G, set_text));
        auto P = polar(G, E, opts);
        if (as_json) {
            emit({{"schema", 1},
                  {"group", format_group(G)},
                  {"set", tuple_set_json(E)},
                  {"polar", character_set_json(P)},
                  {"polar_size", P.size()}});
        } else {
            std::cout << "group: " << format_group(G) << "\n";
            std::cout << "polar of " << E.size() << " element(s): " << P.size() << " character(s)\n";
            for (const auto& chi : P) std::cout << "  " << format_tuple(chi.coeffs) << "\n";
        }
        return 0;
    }

    if (mode == "prepolar") {
        auto A = parse_characters(G, set_text);
        auto B = prepolar(G, A, opts);
        if (as_json) {
            emit({{"schema", 1},
                  {"group", format_group(G)},
                  {"characters", character_set_json(A)},
                  {"prepolar", tuple_set_json(B)},
                  {"prepolar_size", B.size()}});
        } else {
            std::cout << "group: " << format_group(G) << "\n";
            std::cout << "prepolar of " << A.size() << " character(s): " << B.size()
                      << " element(s)\n";
            for (const auto& x : B) std::cout << "  " << format_tuple(x.coords) << "\n";
        }
        return 0;
    }

    auto E = canonical_set(G, parse_elements(G, set_text));
    auto hull = qc_hull(G, E, opts);
    std::vector<GroupElement> added;
    std::set_difference(hull.begin(), hull.end(), E.begin(), E.end(), std::back_inserter(added));
    bool qc = added.empty();

    if (as_json) {
        json j{{"schema", 1},
               {"group", format_group(G)},
               {"set", tuple_set_json(E)},
               {"hull", tuple_set_json(hull)},
               {"hull_size", hull.size()},
               {"quasi_convex", qc}};
        if (mode == "check-qc") j["added"] = tuple_set_json(added);
        emit(j);
    } else {
        std::cout << "group: " << format_group(G) << "\n";
        std::cout << "hull size: " << hull.size() << (qc ? " (set is quasi-convex)" : "") << "\n";
        for (const auto& x : hull) std::cout << "  " << format_tuple(x.coords) << "\n";
        if (mode == "check-qc" && !qc) {
            std::cout << "not quasi-convex; the hull adds:\n";
            for (const auto& x : added) std::cout << "  " << format_tuple(x.coords) << "\n";
        }
    }
    return 0;
}

int run_indep(const std::string& group_text, const std::string& set_text, bool as_json) {
    FiniteAbelianGroup G = parse_group(group_text);
    auto fs = parse_elements(G, set_text);
    bool indep = is_independent(G, fs);
    json orders = json::array();
    for (const auto& f : fs) orders.push_back(element_order(G, f).str());
    if (as_json) {
        emit({{"schema", 1},
              {"group", format_group(G)},
              {"set", tuple_set_json(fs)},
              {"orders", orders},
              {"independent", indep}});
    } else {
        std::cout << "group: " << format_group(G) << "\n";
        std::cout << (indep ? "independent" : "not independent") << "\n";
    }
    return 0;
}

int run_stdrep(const std::string& z_text, const std::string& chain_text, bool as_json) {
    Angle z = Angle::parse(z_text);
    DivChain chain(parse_chain_list(chain_text));
    auto rep = standard_rep(z, chain);

    json support = json::array();
    for (auto i : rep.support()) support.push_back(i);

    if (as_json) {
        json j{{"schema", 1},
               {"z", z.to_string()},
               {"chain", integer_list_json(chain.ds)},
               {"coefficients", integer_list_json(rep.cs)},
               {"residual", format_rational(rep.residual)},
               {"support", support},
               {"standard", is_standard(rep)},
               {"S", format_rational(S_of(rep))}};
        emit(j);
    } else {
        std::cout << "z = " << z.to_string() << "\n";
        for (std::size_t k = 0; k < rep.cs.size(); ++k)
            std::cout << "  c_" << k << " = " << rep.cs[k] << "   (d_" << k << " = " << chain.ds[k]
                      << ")\n";
        std::cout << "residual: " << format_rational(rep.residual) << "\n";
        std::cout << "S: " << format_rational(S_of(rep)) << "\n";
    }
    return 0;
}

int run_check_seq(const std::string& qs_text, int depth, const ScanOptions& opts, bool as_json) {
    QSeq Q = parse_qs(qs_text);
    if (depth >= 0) {
        if (static_cast<std::size_t>(depth) > Q.depth())
            throw std::invalid_argument("check-seq: --depth exceeds the sequence length");
        Q = Q.prefix(static_cast<std::size_t>(depth));
    }

    auto form = check_ternary_form(Q, opts);
    const auto& th = form.hull;

    json witnesses = json::array();
    DivChain chain = Q.chain();
    for (auto r : th.extra) {
        Angle a = Angle::from_fraction(r, th.bN);
        auto rep = standard_rep(a, chain);
        witnesses.push_back({{"residue", r},
                             {"angle", a.to_string()},
                             {"coefficients", integer_list_json(rep.cs)}});
    }

    json xs = json::array();
    for (auto r : th.x_residues) xs.push_back(Angle::from_fraction(r, th.bN).to_string());

    if (as_json) {
        json j{{"schema", 1},
               {"qs", Q.qs},
               {"bs", integer_list_json(Q.bs())},
               {"X", xs},
               {"x_size", th.x_residues.size()},
               {"hull", th.hull_residues},
               {"hull_size", th.hull_residues.size()},
               {"equal", th.equal},
               {"witnesses", witnesses},
               {"form_pm1", form.all_pm1},
               {"hypothesis_ok", form.hypothesis_ok}};
        emit(j);
    } else {
        std::cout << "modulus: " << th.bN << "\n";
        std::cout << "X size: " << th.x_residues.size() << ", hull size: " << th.hull_residues.size()
                  << (th.equal ? " (X is quasi-convex)" : "") << "\n";
        if (!th.equal) {
            std::cout << "extra hull members:\n";
            for (const auto& w : witnesses)
                std::cout << "  " << w["angle"].get<std::string>()
                          << "  coefficients: " << w["coefficients"].dump() << "\n";
        }
        std::cout << "all hull coefficients in {-1,0,1}: " << (form.all_pm1 ? "yes" : "no") << "\n";
        std::cout << "ratio hypothesis (no 7 followed by <4): "
                  << (form.hypothesis_ok ? "holds" : "fails") << "\n";
    }
    return 0;
}

int run_classify(const std::string& text, const std::vector<std::string>& contexts, bool as_json) {
    SymbolicGroup G = parse_symbolic(text);
    auto out = admits_qc_null_sequence(G);

    json j{{"schema", 1},
           {"group", format_symbolic(G)},
           {"verdict", verdict_name(out.verdict)},
           {"criterion", out.criterion}};
    if (!contexts.empty()) j["context"] = contexts;
    if (out.normal_form) {
        json nf{{"torsion_order", out.normal_form->torsion_order}};
        std::vector<SymbolicFactor> fp = out.normal_form->finite_part;
        nf["finite_part"] = format_symbolic(SymbolicGroup::make(fp));
        j["normal_form"] = nf;
    }
    if (out.witness) {
        json seq = json::array();
        for (int i = 0; i < 4; ++i) seq.push_back(out.witness->order);
        j["witness"] = {{"order", out.witness->order},
                        {"sequence_preview", seq},
                        {"reason", out.witness->reason}};
    }

    if (as_json) {
        emit(j);
    } else {
        std::cout << "group: " << format_symbolic(G) << "\n";
        for (const auto& c : contexts)
            std::cout << "context: " << c << " (the finiteness criterion applies unchanged)\n";
        std::cout << "admits a non-trivial quasi-convex null sequence: "
                  << verdict_name(out.verdict) << "\n";
        std::cout << "criterion: " << out.criterion << "\n";
        if (out.normal_form) {
            std::cout << "normal form: ";
            if (out.normal_form->torsion_order != 0)
                std::cout << "Z" << out.normal_form->torsion_order << "^inf x ";
            std::cout << j["normal_form"]["finite_part"].get<std::string>() << "\n";
        }
        if (out.witness)
            std::cout << "witness: order " << out.witness->order << " — " << out.witness->reason
                      << "\n";
    }
    return 0;
}

int run_lift(const std::string& xs_text, bool as_json) {
    auto xs = parse_rational_list(xs_text);
    auto rep = lift_to_reals(xs);
    if (as_json) {
        emit({{"schema", 1},
              {"xs", rational_list_json(rep.xs)},
              {"alpha", format_rational(rep.alpha)},
              {"qs", rep.qs.qs},
              {"alpha_xs", rational_list_json(rep.alpha_xs)},
              {"within_eighth", rep.within_eighth}});
    } else {
        std::cout << "alpha = " << format_rational(rep.alpha) << "\n";
        std::cout << "ratios:";
        for (auto q : rep.qs.qs) std::cout << " " << q;
        std::cout << "\nscaled sequence within (-1/8, 1/8]: " << (rep.within_eighth ? "yes" : "no")
                  << "\n";
    }
    return 0;
}

int run_verify(std::uint64_t seed, std::uint64_t cases, const ScanOptions& opts, bool as_json) {
    auto results = suites::run_all_suites(seed, cases, opts);
    bool all = true;
    for (const auto& r : results) all = all && r.pass;

    if (as_json) {
        json arr = json::array();
        for (const auto& r : results)
            arr.push_back({{"name", r.name},
                           {"pass", r.pass},
                           {"cases", r.cases},
                           {"witness", r.witness}});
        emit({{"schema", 1},
              {"seed", seed},
              {"cases", cases},
              {"suites", arr},
              {"all_pass", all}});
    } else {
        for (const auto& r : results) {
            std::cout << (r.pass ? "pass" : "FAIL") << "  ";
            std::cout.width(32);
            std::cout.setf(std::ios::left);
            std::cout << r.name;
            std::cout.unsetf(std::ios::left);
            std::cout << " (" << r.cases << " cases)";
            if (!r.pass) std::cout << "  " << r.witness;
            std::cout << "\n";
        }
        std::cout << (all ? "all suites passed" : "SOME SUITES FAILED") << "\n";
    }
    return all ? 0 : 1;
}

int run_sweep(std::int64_t qmin, std::int64_t qmax, int depth, const ScanOptions& opts,
              bool as_json) {
    if (qmin < 2 || qmax < qmin) throw std::invalid_argument("sweep: need 2 <= qmin <= qmax");
    if (depth < 0) throw std::invalid_argument("sweep: depth must be >= 0");

    struct Row {
        std::int64_t q;
        int depth;
        Integer bN;
        std::size_t x_size, hull_size;
        bool equal;
    };
    std::vector<Row> rows;

    for (std::int64_t q = qmin; q <= qmax; ++q) {
        int n = depth;
        for (;;) {
            QSeq Q(std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1, q));
            try {
                auto th = truncated_hull(Q, opts);
                rows.push_back({q, n, th.bN, th.x_residues.size(), th.hull_residues.size(),
                                th.equal});
                break;
            } catch (const budget_exceeded&) {
                if (n == 0) throw; // even the shallowest truncation is out of budget
                --n;
            }
        }
    }

    if (as_json) {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"q", r.q},
                           {"depth", r.depth},
                           {"b_N", r.bN.str()},
                           {"x_size", r.x_size},
                           {"hull_size", r.hull_size},
                           {"equal", r.equal}});
        emit({{"schema", 1}, {"mode", "exploratory"}, {"rows", arr}});
    } else {
        std::cout << "# exploratory sweep over constant-ratio sequences\n";
        std::cout << "q,depth,b_N,x_size,hull_size,equal\n";
        for (const auto& r : rows)
            std::cout << r.q << ',' << r.depth << ',' << r.bN << ',' << r.x_size << ','
                      << r.hull_size << ',' << (r.equal ? "true" : "false") << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact quasi-convexity computations in finite abelian groups and the circle"};
    app.require_subcommand(1);

    std::string group_text, set_text, z_text, chain_text, qs_text, symbolic_text, xs_text;
    std::uint64_t budget = default_budget();
    std::uint64_t seed = 0, cases = 200;
    int threads = 1;
    int depth = -1;
    int sweep_depth = 5;
    std::int64_t qmin = 2, qmax = 7;
    bool as_json = false;
    bool ctx_minimal = false, ctx_totally_minimal = false, ctx_omega_bounded = false;

    app.add_flag("--json", as_json, "emit JSON instead of text");
    app.add_option("--budget", budget, "max character evaluations per scan")
        ->check(CLI::PositiveNumber);
    app.add_option("--threads", threads, "worker threads for the enumeration core")
        ->check(CLI::PositiveNumber);

    auto add_group_set = [&](CLI::App* cmd, const char* set_help) {
        cmd->add_option("--group", group_text, "product of cyclic groups, e.g. \"Z4 x Z6\"")
            ->required();
        cmd->add_option("--set", set_text, set_help)->required();
    };

    auto* hull_cmd = app.add_subcommand("hull", "quasi-convex hull of a finite set");
    add_group_set(hull_cmd, "tuples, e.g. \"(0,0),(1,0)\"");
    auto* polar_cmd = app.add_subcommand("polar", "polar of a set of elements");
    add_group_set(polar_cmd, "tuples, e.g. \"(0,0),(1,0)\"");
    auto* prepolar_cmd = app.add_subcommand("prepolar", "prepolar of a set of characters");
    add_group_set(prepolar_cmd, "character tuples, e.g. \"(1,0),(0,1)\"");
    auto* checkqc_cmd = app.add_subcommand("check-qc", "decide whether a set is quasi-convex");
    add_group_set(checkqc_cmd, "tuples, e.g. \"(0,0),(1,0)\"");
    auto* indep_cmd = app.add_subcommand("indep", "decide independence of a family");
    add_group_set(indep_cmd, "non-zero tuples, e.g. \"(1,0),(0,1)\"");

    auto* stdrep_cmd = app.add_subcommand("stdrep", "standard representation along a chain");
    stdrep_cmd->add_option("--z", z_text, "angle as a rational, e.g. \"9/64\"")->required();
    stdrep_cmd->add_option("--chain", chain_text, "divisibility chain, e.g. \"8,64\"")->required();

    auto* checkseq_cmd =
        app.add_subcommand("check-seq", "hull of the symmetric sequence set X in Z_{b_N}");
    checkseq_cmd
        ->add_option("qs", qs_text, "ratio list, e.g. \"8,8,8,8\" or \"primes>8:n=4\"")
        ->required();
    checkseq_cmd->add_option("--depth", depth, "truncate to indices 0..depth");

    auto* classify_cmd =
        app.add_subcommand("classify", "does a bounded product of cyclics admit a "
                                       "non-trivial quasi-convex null sequence?");
    classify_cmd->add_option("group", symbolic_text, "e.g. \"Z2^inf x Z5^3\"")->required();
    classify_cmd->add_flag("--minimal", ctx_minimal, "note: group assumed minimal");
    classify_cmd->add_flag("--totally-minimal", ctx_totally_minimal,
                           "note: group assumed totally minimal");
    classify_cmd->add_flag("--omega-bounded", ctx_omega_bounded,
                           "note: group assumed omega-bounded");

    auto* lift_cmd = app.add_subcommand("lift", "lift a null sequence of rationals to the "
                                                "scaled integer-ratio form");
    lift_cmd->add_option("--xs", xs_text, "strictly decreasing positive rationals, e.g. "
                                          "\"1,1/8,1/64\"")
        ->required();

    auto* verify_cmd = app.add_subcommand("verify", "run the randomized property suites");
    verify_cmd->add_option("--seed", seed, "base seed for the suite generators");
    verify_cmd->add_option("--cases", cases, "cases per suite")->check(CLI::PositiveNumber);

    auto* sweep_cmd = app.add_subcommand(
        "sweep", "exploratory hull survey over constant-ratio sequences (CSV)");
    sweep_cmd->add_option("--qmin", qmin, "smallest ratio");
    sweep_cmd->add_option("--qmax", qmax, "largest ratio");
    sweep_cmd->add_option("--depth", sweep_depth, "largest index N of the truncation");

    for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough();

    try {
        app.parse(argc, argv);

        ScanOptions opts;
        opts.budget = budget;
        opts.threads = threads;

        if (*hull_cmd) return run_hull_family("hull", group_text, set_text, opts, as_json);
        if (*polar_cmd) return run_hull_family("polar", group_text, set_text, opts, as_json);
        if (*prepolar_cmd) return run_hull_family("prepolar", group_text, set_text, opts, as_json);
        if (*checkqc_cmd) return run_hull_family("check-qc", group_text, set_text, opts, as_json);
        if (*indep_cmd) return run_indep(group_text, set_text, as_json);
        if (*stdrep_cmd) return run_stdrep(z_text, chain_text, as_json);
        if (*checkseq_cmd) return run_check_seq(qs_text, depth, opts, as_json);
        if (*classify_cmd) {
            std::vector<std::string> contexts;
            if (ctx_minimal) contexts.push_back("minimal");
            if (ctx_totally_minimal) contexts.push_back("totally minimal");
            if (ctx_omega_bounded) contexts.push_back("omega-bounded");
            return run_classify(symbolic_text, contexts, as_json);
        }
        if (*lift_cmd) return run_lift(xs_text, as_json);
        if (*verify_cmd) return run_verify(seed, cases, opts, as_json);
        if (*sweep_cmd) return run_sweep(qmin, qmax, sweep_depth, opts, as_json);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const budget_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
