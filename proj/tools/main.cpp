#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hurwitz/decide.hpp"
#include "hurwitz/enumerate.hpp"
#include "hurwitz/euler.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/quadform.hpp"
#include "hurwitz/selfcheck.hpp"
#include "hurwitz/witness.hpp"

namespace {

using namespace hurwitz;

constexpr int kExitOk = 0;
constexpr int kExitExceptional = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::Realizable: return kExitOk;
        case Verdict::Exceptional: return kExitExceptional;
        case Verdict::Undecided: return kExitUndecided;
    }
    return kExitUndecided;
}

nlohmann::json decision_json(const CandidateCover& c, const Decision& dec) {
    nlohmann::json j;
    j["candidate"] = format_candidate(c);
    j["verdict"] = to_string(dec.verdict);
    j["reason"] = dec.reason;
    nlohmann::json ev = nlohmann::json::object();
    if (dec.xy) {
        ev["x"] = dec.xy->first;
        ev["y"] = dec.xy->second;
    }
    if (dec.hyp_row) ev["row"] = *dec.hyp_row;
    if (dec.family) {
        ev["case"] = dec.family->case_id;
        ev["family"] = dec.family->family_index;
        ev["k"] = dec.family->k;
    }
    j["evidence"] = ev;
    return j;
}

Constraint parse_constraint(const std::string& flags) {
    Constraint con;
    std::string rest = flags;
    while (!rest.empty()) {
        size_t comma = rest.find(',');
        std::string flag = rest.substr(0, comma);
        if (flag == "different-parity") con.different_parity = true;
        else if (flag == "not-both-even") con.not_both_even = true;
        else if (flag == "mod3") con.incongruent_mod_3 = true;
        else if (flag != "none" && !flag.empty())
            throw CLI::ValidationError("unknown constraint flag: " + flag);
        if (comma == std::string::npos) break;
        rest = rest.substr(comma + 1);
    }
    return con;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Realizability of candidate branched covers of the sphere"};
    app.footer("Exit codes: 0 success/realizable, 1 exceptional (or failed check),\n"
               "2 undecided or budget exceeded, 64 usage error, 65 parse error.\n"
               "Candidate grammar: [\"g=\" INT \"->\"] [\"g=\" INT] INT \":\" \"(\" INT"
               " {\",\" INT} \")\" { \"(\" INT {\",\" INT} \")\" }");
    app.require_subcommand(1);

    std::string cand_text, orb_text;
    bool with_oracle = false, json_out = false;
    long long budget_nodes = 50'000'000;
    double budget_seconds = 600.0;
    std::uint64_t seed = 0;
    int jobs = 1;

    auto* validate = app.add_subcommand("validate", "check a candidate cover");
    validate->add_option("candidate", cand_text)->required();

    auto* induce = app.add_subcommand("induce", "print the induced orbifold cover");
    induce->add_option("candidate", cand_text)->required();

    auto* classify = app.add_subcommand("classify", "geometry of an orbifold");
    classify->add_option("orbifold", orb_text)->required();

    auto* decide_cmd = app.add_subcommand("decide", "decide realizability");
    decide_cmd->add_option("candidate", cand_text)->required();
    decide_cmd->add_flag("--with-oracle", with_oracle, "cross-check with the permutation oracle");
    decide_cmd->add_option("--budget", budget_nodes, "oracle node budget");
    decide_cmd->add_option("--seed", seed, "oracle random seed");
    decide_cmd->add_flag("--json", json_out, "machine-readable output");

    auto* witness_cmd = app.add_subcommand("witness", "Euclidean affine witness");
    witness_cmd->add_option("candidate", cand_text)->required();

    std::string oracle_mode = "search";
    auto* oracle_cmd = app.add_subcommand("oracle", "permutation-factorization oracle");
    oracle_cmd->add_option("candidate", cand_text)->required();
    oracle_cmd->add_option("--mode", oracle_mode, "search|exhaustive|count")
        ->check(CLI::IsMember({"search", "exhaustive", "count"}));
    oracle_cmd->add_option("--budget", budget_nodes, "node budget");
    oracle_cmd->add_option("--seed", seed, "random seed");

    int enum_degree = 0, census_dmax = 41;
    bool e_triangular = false, e_positive = false, e_euclidean = false, e_census = false,
         e_n3 = false, e_all_genera = false;
    auto* enum_cmd = app.add_subcommand("enum", "candidate enumeration");
    enum_cmd->add_option("--degree", enum_degree, "degree (or degree bound)");
    enum_cmd->add_flag("--triangular", e_triangular);
    enum_cmd->add_flag("--positive-chi", e_positive);
    enum_cmd->add_flag("--euclidean", e_euclidean);
    enum_cmd->add_flag("--census", e_census);
    enum_cmd->add_flag("--n3", e_n3);
    enum_cmd->add_flag("--all-genera", e_all_genera, "n3: include higher cover genera");
    enum_cmd->add_option("--dmax", census_dmax,
                         "census degree bound (41 covers everything; widen to audit)");
    enum_cmd->add_option("--jobs", jobs, "worker threads for the census sweep");

    std::string form_text = "x2+y2", op_text = "represent", constraint_text = "none";
    long long qf_target = 0, qf_limit = 10000, qf_residue = 1, qf_modulus = 4;
    auto* quad_cmd = app.add_subcommand("quadform", "quadratic-form utilities");
    quad_cmd->add_option("--form", form_text, "x2+y2|x2+xy+y2|x2+3xy+3y2");
    quad_cmd->add_option("--op", op_text, "represent|density|primes|congruence")
        ->check(CLI::IsMember({"represent", "density", "primes", "congruence"}));
    quad_cmd->add_option("--target", qf_target);
    quad_cmd->add_option("--limit", qf_limit);
    quad_cmd->add_option("--residue", qf_residue);
    quad_cmd->add_option("--modulus", qf_modulus);
    quad_cmd->add_option("--constraint", constraint_text,
                         "comma list: different-parity,not-both-even,mod3");
    quad_cmd->add_option("--jobs", jobs);

    int table_id = 1;
    auto* tables_cmd = app.add_subcommand("tables", "reproduce the defect tables");
    tables_cmd->add_option("--table", table_id)->check(CLI::IsMember({1, 2}));

    bool quick = false;
    auto* selfcheck_cmd = app.add_subcommand("selfcheck", "run the invariant suites");
    selfcheck_cmd->add_flag("--quick", quick, "reduced bounds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*validate) {
            // grammar-only parse so semantic failures still produce a report
            CandidateCover c = parse_candidate_unchecked(cand_text);
            ValidationReport r = validate_candidate(c);
            std::cout << format_candidate(c) << "\n" << r.to_string();
            return r.ok ? kExitOk : kExitExceptional;
        }
        if (*induce) {
            CandidateCover c = parse_candidate(cand_text);
            OrbifoldCover oc = induced_orbifold_cover(c);
            std::cout << format_orbifold_cover(oc) << "\n";
            ValidationReport r = validate_orbifold_cover(oc);
            std::cout << r.to_string();
            return r.ok ? kExitOk : kExitExceptional;
        }
        if (*classify) {
            Orbifold x = parse_orbifold(orb_text);
            std::cout << format_orbifold(x) << "  chi_orb="
                      << orbifold_euler_characteristic(x).to_string() << "  "
                      << to_string(geometry_class(x)) << "\n";
            return kExitOk;
        }
        if (*decide_cmd) {
            CandidateCover c = parse_candidate(cand_text);
            Decision dec = decide(c);
            nlohmann::json j = decision_json(c, dec);
            if (with_oracle) {
                SearchBudget budget;
                budget.max_nodes = budget_nodes;
                budget.seed = seed;
                budget.mode = SearchMode::Backtracking;
                OracleResult r = exhaustive_decide(c, budget);
                j["oracle"] = to_string(r.status);
                if (dec.verdict != Verdict::Undecided &&
                    r.status != OracleStatus::BudgetExceeded) {
                    bool agree = (dec.verdict == Verdict::Realizable) ==
                                 (r.status == OracleStatus::Realizable);
                    j["oracle_agrees"] = agree;
                }
            }
            if (json_out) {
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << dec.to_string() << "\n";
                if (j.contains("oracle"))
                    std::cout << "oracle: " << j["oracle"].get<std::string>()
                              << (j.contains("oracle_agrees")
                                      ? (j["oracle_agrees"].get<bool>() ? " (agrees)"
                                                                        : " (DISAGREES)")
                                      : "")
                              << "\n";
            }
            return verdict_exit(dec.verdict);
        }
        if (*witness_cmd) {
            CandidateCover c = parse_candidate(cand_text);
            OrbifoldCover oc = induced_orbifold_cover(c);
            if (c.base_genus != 0 || geometry_class(oc.target) != GeometryClass::Euclidean) {
                std::cout << "none (affine witnesses exist only for Euclidean candidates; "
                          << "this one is " << to_string(geometry_class(oc.target)) << ")\n";
                return kExitUndecided;
            }
            std::optional<AffineWitness> w = construct_witness(c);
            if (!w) {
                Decision dec = decide_euclidean(c);
                std::cout << "none (" << dec.reason << ")\n";
                return kExitExceptional;
            }
            std::cout << format_witness(c, *w);
            ValidationReport r = verify_witness(c, *w);
            std::cout << (r.ok ? "verified\n" : "VERIFICATION FAILED\n" + r.to_string());
            return r.ok ? kExitOk : kExitExceptional;
        }
        if (*oracle_cmd) {
            CandidateCover c = parse_candidate(cand_text);
            SearchBudget budget;
            budget.max_nodes = budget_nodes;
            budget.seed = seed;
            if (oracle_mode == "count") {
                std::cout << "tuples " << count_tuples(c.partitions, c.degree).get_str() << "\n";
                mpz_class t = count_transitive(c.partitions, c.degree);
                std::cout << "transitive " << t.get_str() << "\n";
                return t > 0 ? kExitOk : kExitExceptional;
            }
            budget.mode =
                oracle_mode == "search" ? SearchMode::Randomized : SearchMode::Backtracking;
            OracleResult r = oracle_mode == "search" ? find_witness(c, budget)
                                                     : exhaustive_decide(c, budget);
            std::cout << to_string(r.status) << " nodes=" << r.nodes << "\n";
            if (r.witness) std::cout << format_witness(*r.witness);
            if (r.known_result) std::cout << "(known result: base is not a sphere)\n";
            if (r.status == OracleStatus::Realizable) return kExitOk;
            return r.status == OracleStatus::Exceptional ? kExitExceptional : kExitUndecided;
        }
        if (*enum_cmd) {
            std::vector<CandidateCover> out;
            if (e_census) {
                out = hyperbolic_triangular_census(census_dmax, jobs);
            } else if (enum_degree < 2) {
                std::cerr << "enum requires --degree >= 2\n";
                return kExitUsage;
            } else if (e_triangular) {
                out = triangular_candidates(enum_degree);
            } else if (e_positive) {
                out = positive_chi_candidates(enum_degree);
            } else if (e_euclidean) {
                out = euclidean_candidates(enum_degree);
            } else if (e_n3) {
                out = all_candidates_n3(enum_degree, e_all_genera);
            } else {
                std::cerr << "pick one of --triangular --positive-chi --euclidean --census --n3\n";
                return kExitUsage;
            }
            for (const auto& c : out) std::cout << format_candidate(c) << "\n";
            return kExitOk;
        }
        if (*quad_cmd) {
            auto form = form_from_string(form_text);
            if (!form) {
                std::cerr << "unknown form " << form_text << "\n";
                return kExitUsage;
            }
            Constraint con = parse_constraint(constraint_text);
            if (op_text == "represent") {
                auto xy = represent(*form, qf_target, con);
                if (xy)
                    std::cout << qf_target << " = " << to_string(*form) << " at x=" << xy->first
                              << " y=" << xy->second << "\n";
                else
                    std::cout << "none\n";
                return xy ? kExitOk : kExitExceptional;
            }
            if (op_text == "density") {
                std::cout << density(*form, qf_limit, jobs).to_string() << "\n";
                return kExitOk;
            }
            if (op_text == "primes") {
                auto bad = prime_support(*form, qf_residue, qf_modulus, qf_limit, jobs);
                std::cout << "counterexamples: " << bad.size() << "\n";
                for (long long p : bad) std::cout << p << "\n";
                return bad.empty() ? kExitOk : kExitExceptional;
            }
            auto bad = congruence_equivalence(*form, con, qf_residue, qf_modulus, qf_limit);
            std::cout << "counterexamples: " << bad.size() << "\n";
            for (long long v : bad) std::cout << v << "\n";
            return bad.empty() ? kExitOk : kExitExceptional;
        }
        if (*tables_cmd) {
            std::cout << (table_id == 1 ? render_table1() : render_table2());
            return kExitOk;
        }
        if (*selfcheck_cmd) {
            return run_selfcheck(quick, std::cout) ? kExitOk : kExitExceptional;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const CandidateError& e) {
        std::cerr << "invalid candidate: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
