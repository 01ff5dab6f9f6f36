// Command-line front end. Exit codes: 0 success, 1 Violation / NotFound /
// NotAdmissible outcome, 2 configuration error.
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "demazure/admissibility.hpp"
#include "demazure/characters.hpp"
#include "demazure/crystal.hpp"
#include "demazure/json_io.hpp"
#include "demazure/relations.hpp"
#include "demazure/reproduce.hpp"
#include "demazure/rootdata.hpp"
#include "demazure/weights.hpp"

using namespace demazure;

namespace {

constexpr int kOk = 0;
constexpr int kOutcome = 1;
constexpr int kConfig = 2;

struct TypeOpts {
    std::string type = "A";
    int rank = 1;

    RootSystem build() const { return RootSystem(make_cartan_datum(parse_family(type), rank)); }
};

void add_type(CLI::App* sub, TypeOpts& t) {
    sub->add_option("--type", t.type, "Cartan family A-G")->required();
    sub->add_option("--rank", t.rank, "rank")->required();
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<int> parse_nodes(const std::string& s) { return parse_int_list(s); }

std::vector<std::string> violating_roots(const RootSystem& rs, const AdmissibilityReport& rep) {
    std::vector<std::string> out;
    if (!rep.preadmissible.ok)
        for (const auto& w : rep.preadmissible.witnesses) out.push_back(root_name(rs.root(w.root)));
    for (const auto* c : rep.violations()) out.push_back(root_name(rs.root(c->profile.root)));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Affine Demazure module toolkit"};
    app.require_subcommand(1);

    // rootdata
    TypeOpts rd_t;
    auto* rd = app.add_subcommand("rootdata", "positive roots, d_alpha and coroot pairings");
    add_type(rd, rd_t);

    // dominance
    TypeOpts dm_t;
    std::string dm_mu;
    int dm_level = 1, dm_degree = 0;
    auto* dm = app.add_subcommand("dominance", "walk mu + k L0 to the dominant chamber");
    add_type(dm, dm_t);
    dm->add_option("--mu", dm_mu, "weight, e.g. 1,-2")->required();
    dm->add_option("--level", dm_level, "level k >= 1")->required();
    dm->add_option("--degree", dm_degree, "delta coefficient");

    // relations
    TypeOpts rl_t;
    std::string rl_preset = "demazure", rl_mu;
    int rl_k = 1, rl_bound = 64;
    auto* rl = app.add_subcommand("relations", "relation sets for a p-function family");
    add_type(rl, rl_t);
    rl->add_option("--preset", rl_preset, "demazure | weyl | genweyl")
        ->check(CLI::IsMember({"demazure", "weyl", "genweyl"}));
    rl->add_option("--mu", rl_mu, "weight")->required();
    rl->add_option("--k", rl_k, "level (demazure preset)");
    rl->add_option("--degree-bound", rl_bound, "cap on exponent search for M");

    // admissible
    TypeOpts ad_t;
    std::string ad_mu, ad_split;
    int ad_k = 0, ad_r = 1;
    auto* ad = app.add_subcommand("admissible", "r-admissibility report for a split");
    add_type(ad, ad_t);
    ad->add_option("--mu", ad_mu, "weight")->required();
    ad->add_option("--split", ad_split, "parts, e.g. \"1,1|1,0\"")->required();
    ad->add_option("--k", ad_k, "number of parts (checked against the split)");
    ad->add_option("--r", ad_r, "level of the factors");

    // split-search
    TypeOpts ss_t;
    std::string ss_mu;
    int ss_k = 1, ss_r = 1;
    bool ss_find = false, ss_balanced = false;
    auto* ss = app.add_subcommand("split-search", "enumerate dominant splits pulled back to mu");
    add_type(ss, ss_t);
    ss->add_option("--mu", ss_mu, "weight")->required();
    ss->add_option("--k", ss_k, "number of parts")->required();
    ss->add_option("--r", ss_r, "level used for the admissibility column");
    ss->add_flag("--find-1-admissible", ss_find, "stop at the first 1-admissible candidate");
    ss->add_flag("--balanced", ss_balanced, "print the balanced candidate only");

    // char
    TypeOpts ch_t;
    std::string ch_mu, ch_branch;
    int ch_level = 1;
    bool ch_json = false;
    auto* ch = app.add_subcommand("char", "graded character of D^k_mu");
    add_type(ch, ch_t);
    ch->add_option("--mu", ch_mu, "weight")->required();
    ch->add_option("--level", ch_level, "level k >= 1")->required();
    ch->add_option("--branch", ch_branch, "finite nodes for g0 branching, e.g. 2");
    ch->add_flag("--json", ch_json, "emit JSON");

    // embed-check
    TypeOpts ec_t;
    std::string ec_mu, ec_split;
    int ec_k = 0, ec_r = 1;
    auto* ec = app.add_subcommand("embed-check", "certify D^{rk}_mu inside the tensor product");
    add_type(ec, ec_t);
    ec->add_option("--mu", ec_mu, "weight")->required();
    ec->add_option("--split", ec_split, "parts, e.g. \"1,1|1,0\"")->required();
    ec->add_option("--r", ec_r, "level of the factors");
    ec->add_option("--k", ec_k, "number of parts (checked against the split)");

    // crystal
    TypeOpts cr_t;
    std::string cr_lambda, cr_word, cr_component, cr_filter, cr_decompose, cr_dot;
    std::vector<std::string> cr_tensor;
    bool cr_json = false;
    auto* cr = app.add_subcommand("crystal", "path crystals, Demazure subcrystals, tensor products");
    add_type(cr, cr_t);
    cr->add_option("--lambda", cr_lambda, "dominant weight of the first factor")->required();
    cr->add_option("--word", cr_word, "Demazure word for the first factor, e.g. 2,1");
    cr->add_option("--tensor", cr_tensor, "further factors as lambda[:word], e.g. 1,0:2,1");
    cr->add_option("--component-weight", cr_component, "keep the component of this weight");
    cr->add_option("--filter", cr_filter, "keep only these edge labels");
    cr->add_option("--decompose", cr_decompose, "list components after filtering to these labels");
    cr->add_option("--dot", cr_dot, "write DOT to this file");
    cr->add_flag("--json", cr_json, "emit JSON instead of DOT on stdout");

    // reproduce
    bool rp_paper = false;
    std::uint64_t rp_seed = 0;
    auto* rp = app.add_subcommand("reproduce", "run the acceptance grid");
    rp->add_flag("--paper-examples", rp_paper, "run every acceptance criterion")->required();
    rp->add_option("--seed", rp_seed, "seed for the randomized suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfig;
    }

    try {
        if (*rd) {
            emit(to_json(rd_t.build()));
            return kOk;
        }
        if (*dm) {
            const auto rs = dm_t.build();
            const auto res =
                dominance_algorithm(rs, AffineWeight{parse_weight(dm_mu, rs.rank()), dm_level, dm_degree});
            emit(to_json(res));
            return kOk;
        }
        if (*rl) {
            const auto rs = rl_t.build();
            const auto mu = parse_weight(rl_mu, rs.rank());
            if (rl_k < 1) throw std::invalid_argument("--k must be positive");
            PFunctions pf;
            if (rl_preset == "demazure")
                pf = demazure_p(rs, mu, rl_k);
            else if (rl_preset == "weyl")
                pf = weyl_p(rs, mu);
            else
                pf = generalized_weyl_p(rs, mu);
            Json out{{"preset", rl_preset},
                     {"mu", mu.coords},
                     {"p", to_json(rs, pf)},
                     {"M", to_json(rs, relations_M(rs, pf, rl_bound))},
                     {"Mprime", to_json(rs, relations_Mprime(rs, pf, rl_bound))},
                     {"Mpp", to_json(rs, relations_Mpp(rs, pf))}};
            if (rl_preset == "demazure") {
                out["k"] = rl_k;
                out["mathieu"] = to_json(rs, mathieu_relations(rs, mu, rl_k));
                out["simplified"] = to_json(rs, simplified_demazure_relations(rs, mu, rl_k));
            }
            emit(out);
            return kOk;
        }
        if (*ad) {
            const auto rs = ad_t.build();
            const auto mu = parse_weight(ad_mu, rs.rank());
            const auto split = parse_split(ad_split, rs.rank());
            if (ad_k && static_cast<int>(split.k()) != ad_k) throw std::invalid_argument("--k does not match the split");
            check_split(rs, mu, split);
            const auto rep = is_r_admissible(rs, mu, split, ad_r);
            emit(to_json(rs, rep));
            return rep.admissible_for_r ? kOk : kOutcome;
        }
        if (*ss) {
            const auto rs = ss_t.build();
            const auto mu = parse_weight(ss_mu, rs.rank());
            if (ss_balanced) {
                const auto split = balanced_split(rs, mu, ss_k);
                const auto rep = is_r_admissible(rs, mu, split, ss_r);
                emit(Json{{"split", to_json(split)}, {"admissible", rep.admissible_for_r}, {"r", ss_r}});
                return kOk;
            }
            if (ss_find) {
                const auto found = find_1_admissible(rs, mu, ss_k);
                if (!found) {
                    emit(Json{{"status", "NotFound"}});
                    return kOutcome;
                }
                emit(Json{{"status", "Found"}, {"split", to_json(*found)}});
                return kOk;
            }
            const auto conj = to_dominant(rs, mu);
            for_each_dominant_split(conj.lambda, ss_k, [&](const SplitTuple& dom) {
                const auto split = pull_back(rs, conj.sigma, dom);
                const auto rep = is_r_admissible(rs, mu, split, ss_r);
                std::cout << Json{{"split", to_json(split)}, {"admissible", rep.admissible_for_r}, {"r", ss_r}}.dump()
                          << "\n";
                return true;
            });
            return kOk;
        }
        if (*ch) {
            const auto rs = ch_t.build();
            const auto mu = parse_weight(ch_mu, rs.rank());
            const auto c = demazure_character(rs, mu, ch_level);
            std::vector<BranchComponent> pieces;
            if (!ch_branch.empty()) pieces = g0_branch(rs, c, parse_nodes(ch_branch));
            if (ch_json) {
                Json out = to_json(c);
                if (!ch_branch.empty()) out["branch"] = to_json(pieces);
                emit(out);
            } else {
                std::cout << "D^" << ch_level << "_" << mu << "  dimension " << c.dimension() << "\n";
                for (const auto& [k, m] : c.sorted_terms())
                    std::cout << "  grade " << k.grade << "  wt " << k.weight(rs.rank()) << "  mult " << m << "\n";
                for (const auto& p : pieces)
                    std::cout << "  piece grade " << p.grade << "  highest " << p.highest << "  dim " << p.dimension
                              << "  x" << p.multiplicity << "\n";
            }
            return kOk;
        }
        if (*ec) {
            const auto rs = ec_t.build();
            const auto mu = parse_weight(ec_mu, rs.rank());
            const auto split = parse_split(ec_split, rs.rank());
            if (ec_k && static_cast<int>(split.k()) != ec_k) throw std::invalid_argument("--k does not match the split");
            check_split(rs, mu, split);
            const auto rep = is_r_admissible(rs, mu, split, ec_r);
            if (!rep.admissible_for_r) {
                emit(Json{{"status", "NotAdmissible"},
                          {"violation", Json{{"roots", violating_roots(rs, rep)}, {"r", ec_r}}},
                          {"admissibility", to_json(rs, rep)}});
                return kOutcome;
            }
            const auto cert = embedding_certificate(rs, mu, ec_r, split);
            emit(to_json(rs, cert));
            return cert.certified() ? kOk : kOutcome;
        }
        if (*cr) {
            const auto rs = cr_t.build();
            std::vector<std::pair<FiniteWeight, std::optional<std::vector<int>>>> factors;
            factors.emplace_back(parse_weight(cr_lambda, rs.rank()),
                                 cr_word.empty() ? std::nullopt : std::optional(parse_nodes(cr_word)));
            for (const auto& spec : cr_tensor) {
                const auto colon = spec.find(':');
                const auto lam = parse_weight(spec.substr(0, colon), rs.rank());
                std::optional<std::vector<int>> w;
                if (colon != std::string::npos) w = parse_nodes(spec.substr(colon + 1));
                factors.emplace_back(lam, w);
            }
            std::optional<CrystalGraph> g;
            for (const auto& [lam, w] : factors) {
                auto b = build_crystal(rs, lam);
                if (w) b = demazure_subcrystal(b, *w);
                g = g ? tensor(*g, b) : b;
            }
            if (!cr_component.empty()) g = component_of(*g, parse_weight(cr_component, rs.rank()));
            if (!cr_filter.empty()) {
                auto nodes = parse_nodes(cr_filter);
                g = filter_arrows(*g, std::set<int>(nodes.begin(), nodes.end()));
            }
            if (!cr_dot.empty()) {
                std::ofstream out(cr_dot);
                if (!out) throw std::invalid_argument("cannot write " + cr_dot);
                out << to_dot(*g);
            }
            if (!cr_decompose.empty()) {
                auto nodes = parse_nodes(cr_decompose);
                const auto pieces = crystal_decomposition(*g, std::set<int>(nodes.begin(), nodes.end()));
                if (cr_json) {
                    Json out = to_json(*g);
                    out["decomposition"] = to_json(pieces);
                    emit(out);
                } else {
                    std::cout << to_dot(*g);
                    for (const auto& p : pieces)
                        std::cout << "// piece highest " << p.highest << " size " << p.size << " x" << p.count << "\n";
                }
                return kOk;
            }
            if (cr_json)
                emit(to_json(*g));
            else if (cr_dot.empty())
                std::cout << to_dot(*g);
            return kOk;
        }
        if (*rp) {
            (void)rp_paper;
            const auto results = reproduce::run_all({rp_seed});
            std::cout << reproduce::format_table(results);
            for (const auto& r : results)
                if (!r.passed()) return kOutcome;
            return kOk;
        }
    } catch (const CrystalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kOutcome;
    } catch (const CharacterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kOutcome;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfig;
    }
    return kConfig;
}
