// The acceptance grid: ten criteria, each a list of named checks. Shared by
// the acceptance binary and `demazure reproduce --paper-examples`.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "demazure/admissibility.hpp"
#include "demazure/characters.hpp"
#include "demazure/crystal.hpp"
#include "demazure/relations.hpp"
#include "demazure/rootdata.hpp"
#include "demazure/weights.hpp"

namespace demazure::reproduce {

struct Check {
    std::string name;
    bool passed{false};
    std::string detail;
};

struct CriterionResult {
    int id{0};
    std::string title;
    std::vector<Check> checks;

    bool passed() const {
        return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
    }
    void add(std::string name, bool ok, std::string detail = {}) {
        checks.push_back({std::move(name), ok, std::move(detail)});
    }
};

struct Options {
    std::uint64_t seed{0};
};

namespace detail {

inline std::string str(const FiniteWeight& w) {
    std::ostringstream os;
    os << w;
    return os.str();
}

inline RootSystem make(Family f, int n) { return RootSystem(make_cartan_datum(f, n)); }

/// Calls visit on every weight with coordinates in [lo, hi].
inline void for_each_box(int rank, int lo, int hi, const std::function<void(const FiniteWeight&)>& visit) {
    FiniteWeight w = FiniteWeight(Coords(rank, lo));
    while (true) {
        visit(w);
        int i = 0;
        while (i < rank && w[i] == hi) w[i++] = lo;
        if (i == rank) return;
        ++w[i];
    }
}

inline std::multiset<std::int64_t> branch_dims(const std::vector<BranchComponent>& pieces) {
    std::multiset<std::int64_t> out;
    for (const auto& p : pieces)
        for (std::int64_t c = 0; c < p.multiplicity; ++c) out.insert(p.dimension);
    return out;
}

/// Number of partitions of s into at most r parts (parts >= 1).
inline long long partitions_at_most(int s, int r) {
    std::vector<std::vector<long long>> t(s + 1, std::vector<long long>(r + 1, 0));
    for (int j = 0; j <= r; ++j) t[0][j] = 1;
    for (int n = 1; n <= s; ++n)
        for (int j = 1; j <= r; ++j) t[n][j] = t[n][j - 1] + (n >= j ? t[n - j][j] : 0);
    return t[s][r];
}

/// (s, m) with x = (s-1) l + m, 0 < m <= l, by search.
inline std::pair<int, int> residue_by_search(int x, int l) {
    for (int s = -1; s <= x + 2; ++s) {
        const int m = x - (s - 1) * l;
        if (m > 0 && m <= l) return {s, m};
    }
    return {0, 0};
}

/// m_ij of the affine Coxeter graph from a_ij a_ji; 0 when infinite.
inline int braid_order(const RootSystem& rs, int i, int j) {
    auto a = [&](int p, int q) {
        // <alpha_q, alpha_p^vee> in affine numbering
        if (p != 0 && q != 0) return rs.datum().cartan[p - 1][q - 1];
        if (p == 0 && q == 0) return 2;
        if (p == 0) {
            const auto& cv = rs.coroot(rs.theta_index());
            int s = 0;
            for (int l = 0; l < rs.rank(); ++l) s += cv[l] * rs.datum().cartan[l][q - 1];
            return -s;
        }
        return -rs.theta_weight()[p - 1];
    };
    switch (a(i, j) * a(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;
    }
}

inline GradedCharacter random_character(const RootSystem& rs, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(1, 6), coord(-3, 3), lvl(0, 3), grade(0, 3), coef(1, 3), sgn(0, 1);
    GradedCharacter f(rs.rank());
    const int level = lvl(rng);
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Coords c(rs.rank());
        for (auto& x : c) x = coord(rng);
        const int v = coef(rng) * (sgn(rng) ? 1 : -1);
        f.add(make_key(FiniteWeight(c), level, grade(rng)), v);
    }
    return f;
}

/// Explicit positivity and normalization check, independent of the internal assertions.
inline bool normalized_ok(const GradedCharacter& c, const FiniteWeight& mu, int k) {
    bool gen = false;
    for (const auto& [key, m] : c.terms()) {
        if (m <= 0 || key.grade < 0 || key.level != k) return false;
        if (key.weight(c.rank()) == mu) {
            if (key.grade != 0 || m != 1 || gen) return false;
            gen = true;
        }
    }
    return gen;
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline CriterionResult criterion_1() {
    CriterionResult res{1, "A2 worked example, mu = w1 - 2w2, k = 2", {}};
    const auto rs = detail::make(Family::A, 2);
    const FiniteWeight mu{1, -2};

    const auto ch = demazure_character(rs, mu, 2);
    res.add("dim D^2_{w1-2w2} = 5", ch.dimension() == 5, "dimension " + std::to_string(ch.dimension()));

    const auto b1 = build_crystal(rs, FiniteWeight{1, 0});
    const auto b2 = build_crystal(rs, FiniteWeight{0, 1});
    const auto d1 = demazure_subcrystal(b1, {2, 1});
    const auto d2 = demazure_subcrystal(b2, {2});
    res.add("|B_{s2s1}(L1)| = 3 and |B_{s2}(L2)| = 2", d1.size() == 3 && d2.size() == 2,
            std::to_string(d1.size()) + ", " + std::to_string(d2.size()));
    // The B(L2) path is concatenated first; see README for the convention.
    const auto prod = tensor(d2, d1);
    const auto comp = component_of(prod, mu);
    res.add("component of weight mu has 5 vertices", comp.size() == 5, std::to_string(comp.size()) + " vertices");

    std::ostringstream edges;
    for (const auto& e : comp.edges())
        edges << comp.vertices()[e.source].weight() << "-" << e.label << "->" << comp.vertices()[e.target].weight()
              << " ";
    // top -1-> B, top -2-> C, B -2-> E, C -1-> E, E -2-> F
    const bool diamond = same_shape(comp, 5, {{0, 1, 1}, {0, 2, 2}, {1, 3, 2}, {2, 3, 1}, {3, 4, 2}});
    res.add("component edges form the diamond plus tail", diamond, edges.str());

    std::multiset<int> sizes;
    for (const auto& p : crystal_decomposition(comp, {2}))
        for (int c = 0; c < p.count; ++c) sizes.insert(p.size);
    res.add("crystal nodes={2} pieces {2,3}", sizes == std::multiset<int>{2, 3});
    const auto dims = detail::branch_dims(g0_branch(rs, ch, {2}));
    res.add("character nodes={2} sl2 pieces {2,3}", dims == std::multiset<std::int64_t>{2, 3});
    return res;
}

inline CriterionResult criterion_2() {
    CriterionResult res{2, "C2 admissibility, mu = 2w1 + w2, k = 2", {}};
    const auto rs = detail::make(Family::C, 2);
    const FiniteWeight mu{2, 1};
    const SplitTuple bad{{FiniteWeight{1, 1}, FiniteWeight{1, 0}}};
    const SplitTuple good{{FiniteWeight{2, 0}, FiniteWeight{0, 1}}};

    const auto r1 = is_r_admissible(rs, mu, bad, 1);
    std::vector<std::string> viol;
    for (const auto* c : r1.violations()) viol.push_back(root_name(rs.root(c->profile.root)));
    res.add("(w1+w2, w1) is not 1-admissible", !r1.admissible_for_r);
    res.add("violation reported at a1+a2", viol == std::vector<std::string>{"a1+a2"},
            viol.empty() ? "none" : viol.front());
    res.add("(w1+w2, w1) is 2-admissible", is_r_admissible(rs, mu, bad, 2).admissible_for_r);
    res.add("(2w1, w2) is 1-admissible", is_r_admissible(rs, mu, good, 1).admissible_for_r);
    res.add("(2w1, w2) is 2-admissible", is_r_admissible(rs, mu, good, 2).admissible_for_r);
    res.add("minimal r of (w1+w2, w1) is 2", minimal_r(rs, mu, bad, 10) == std::optional<int>(2));
    const auto found = find_1_admissible(rs, mu, 2);
    res.add("search finds (2w1, w2)", found && found->parts == good.parts);
    return res;
}

inline CriterionResult criterion_3() {
    CriterionResult res{3, "Embedding certificates on the admissible grid", {}};
    std::size_t certified = 0, violations = 0, skipped = 0;
    std::string first;
    for (auto [f, n] : {std::pair{Family::A, 1}, {Family::A, 2}, {Family::C, 2}}) {
        const auto rs = detail::make(f, n);
        CharacterCache cache(rs);
        detail::for_each_box(n, -2, 2, [&](const FiniteWeight& mu) {
            const auto conj = to_dominant(rs, mu);
            for (int k = 1; k <= 3; ++k)
                for (const auto& dom : enumerate_dominant_splits(conj.lambda, k)) {
                    const auto split = pull_back(rs, conj.sigma, dom);
                    for (int r = 1; r <= 2; ++r) {
                        if (!is_r_admissible(rs, mu, split, r).admissible_for_r) {
                            ++skipped;
                            continue;
                        }
                        const auto cert = embedding_certificate(cache, mu, r, split);
                        if (cert.certified()) {
                            ++certified;
                        } else {
                            ++violations;
                            if (first.empty())
                                first = rs.name() + " mu=" + detail::str(mu) + " k=" + std::to_string(k) +
                                        " r=" + std::to_string(r);
                        }
                    }
                }
        });
    }
    res.add("no Violation on r-admissible splits", violations == 0 && certified > 0,
            std::to_string(certified) + " certified, " + std::to_string(violations) + " violations, " +
                std::to_string(skipped) + " non-admissible skipped" + (first.empty() ? "" : "; first: " + first));

    {
        const auto rs = detail::make(Family::A, 2);
        const auto cert = embedding_certificate(rs, FiniteWeight{1, -2}, 1,
                                                SplitTuple{{FiniteWeight{0, -1}, FiniteWeight{1, -1}}});
        res.add("A2: D^2_{w1-2w2} -> D^1_{-w2} (x) D^1_{w1-w2} certified", cert.certified() && cert.admissible,
                std::to_string(cert.lhs_dimension) + " <= " + std::to_string(cert.rhs_dimension));
    }
    {
        const auto rs = detail::make(Family::C, 2);
        const auto cert =
            embedding_certificate(rs, FiniteWeight{2, 1}, 2, SplitTuple{{FiniteWeight{1, 1}, FiniteWeight{1, 0}}});
        res.add("C2: r=2 embedding for (w1+w2, w1) certified", cert.certified() && cert.admissible);
    }
    return res;
}

inline CriterionResult criterion_4() {
    CriterionResult res{4, "Type A balanced splits", {}};
    std::size_t cases = 0, spread_fail = 0, adm_fail = 0;
    std::string first;
    for (int n = 1; n <= 3; ++n) {
        const auto rs = detail::make(Family::A, n);
        detail::for_each_box(n, 0, 4, [&](const FiniteWeight& lambda) {
            for (int k = 1; k <= 3; ++k) {
                ++cases;
                const auto split = balanced_split(rs, lambda, k);
                bool spread = true;
                for (std::size_t a = 0; a < rs.num_positive_roots(); ++a)
                    for (const auto& p : split.parts)
                        for (const auto& q : split.parts)
                            if (std::abs(rs.pairing(p.coords, a) - rs.pairing(q.coords, a)) > 1) spread = false;
                const bool adm = is_r_admissible(rs, lambda, split, 1).admissible_for_r;
                if (!spread) ++spread_fail;
                if (!adm) ++adm_fail;
                if ((!spread || !adm) && first.empty())
                    first = rs.name() + " lambda=" + detail::str(lambda) + " k=" + std::to_string(k);
            }
        });
    }
    const std::string tail = first.empty() ? "" : "; first: " + first;
    res.add("|l_i(h_a) - l_j(h_a)| <= 1", spread_fail == 0,
            std::to_string(cases) + " cases, " + std::to_string(spread_fail) + " failures" + tail);
    res.add("balanced split is 1-admissible", adm_fail == 0,
            std::to_string(cases) + " cases, " + std::to_string(adm_fail) + " failures" + tail);
    return res;
}

inline CriterionResult criterion_5() {
    CriterionResult res{5, "Non-exceptional t-bound scan", {}};
    for (auto [f, n] : {std::pair{Family::B, 2}, {Family::C, 2}, {Family::B, 3}, {Family::C, 3}}) {
        const auto rs = detail::make(f, n);
        const auto rep = nonexceptional_t_scan(rs, 3, 3);
        res.add(rs.name() + ": t <= 2 and t = 2 = m+1 witnesses", rep.passed(),
                std::to_string(rep.cases) + " cases, " + std::to_string(rep.not_one_admissible) +
                    " not 1-admissible, " + std::to_string(rep.t_bound_failures.size()) + " t-bound failures, " +
                    std::to_string(rep.witness_failures.size()) + " witness failures");
    }
    return res;
}

inline CriterionResult criterion_6(const Options& opt) {
    CriterionResult res{6, "Character engine properties", {}};
    std::mt19937_64 rng(opt.seed);

    std::size_t idem_fail = 0, braid_fail = 0, braid_checks = 0, chars = 0;
    const std::vector<std::pair<Family, int>> types{{Family::A, 2}, {Family::B, 2}, {Family::C, 2}, {Family::G, 2}};
    for (int c = 0; c < 200; ++c) {
        const auto [fam, n] = types[c % types.size()];
        const auto rs = detail::make(fam, n);
        const auto f = detail::random_character(rs, rng);
        ++chars;
        for (int i = 0; i <= n; ++i) {
            const auto once = demazure_operator(rs, i, f);
            if (!demazure_operator(rs, i, once).same_terms(once)) ++idem_fail;
        }
        for (int i = 0; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                const int m = detail::braid_order(rs, i, j);
                if (m == 0) continue;
                std::vector<int> w1, w2;
                for (int t = 0; t < m; ++t) {
                    w1.push_back(t % 2 ? j : i);
                    w2.push_back(t % 2 ? i : j);
                }
                ++braid_checks;
                if (!apply_demazure_word(rs, w1, f).same_terms(apply_demazure_word(rs, w2, f))) ++braid_fail;
            }
    }
    res.add("D_i D_i = D_i on 200 random characters", idem_fail == 0,
            std::to_string(chars) + " characters, " + std::to_string(idem_fail) + " failures");
    res.add("braid relations on 200 random characters", braid_fail == 0 && braid_checks > 0,
            std::to_string(braid_checks) + " checks, " + std::to_string(braid_fail) + " failures");

    std::size_t word_fail = 0, norm_fail = 0, computed = 0;
    for (auto [fam, n] : {std::pair{Family::A, 1}, {Family::A, 2}, {Family::C, 2}}) {
        const auto rs = detail::make(fam, n);
        std::uniform_int_distribution<int> coord(-3, 3), lvl(1, 3);
        for (int c = 0; c < 20; ++c) {
            Coords mc(n);
            for (auto& x : mc) x = coord(rng);
            const FiniteWeight mu(mc);
            const int k = lvl(rng);
            const auto base = demazure_character(rs, mu, k);
            TieBreak random_pick = [&rng](const std::vector<int>& neg) {
                std::uniform_int_distribution<std::size_t> pick(0, neg.size() - 1);
                return neg[pick(rng)];
            };
            const auto other = demazure_character(rs, mu, k, random_pick);
            computed += 2;
            if (!base.same_terms(other)) ++word_fail;
            if (!detail::normalized_ok(base, mu, k) || !detail::normalized_ok(other, mu, k)) ++norm_fail;
        }
    }
    res.add("word independence under random tie-breaks (20 per A1/A2/C2)", word_fail == 0,
            std::to_string(word_fail) + " mismatches");
    res.add("positivity and generator normalization", norm_fail == 0,
            std::to_string(computed) + " characters, " + std::to_string(norm_fail) + " failures");
    return res;
}

inline CriterionResult criterion_7() {
    CriterionResult res{7, "Crystal and character agreement", {}};
    for (auto [f, n] : {std::pair{Family::A, 1}, {Family::A, 2}, {Family::C, 2}, {Family::B, 2}}) {
        const auto rs = detail::make(f, n);
        std::size_t cases = 0, fail = 0;
        std::string first;
        detail::for_each_box(n, 0, 3, [&](const FiniteWeight& lambda) {
            ++cases;
            const auto b = build_crystal(rs, lambda);
            const auto dim = weyl_character(rs, lambda).dimension();
            if (static_cast<std::int64_t>(b.size()) != dim) {
                ++fail;
                if (first.empty()) first = detail::str(lambda);
            }
        });
        res.add(rs.name() + ": |B(lambda)| = dim V(lambda)", fail == 0,
                std::to_string(cases) + " weights, " + std::to_string(fail) + " mismatches" +
                    (first.empty() ? "" : "; first " + first));
    }
    return res;
}

inline CriterionResult criterion_8() {
    CriterionResult res{8, "Relations suite", {}};
    std::size_t mism = 0;
    for (int r = 1; r <= 12; ++r)
        for (int s = 0; s <= 12; ++s)
            if (static_cast<long long>(s_sets(r, s).size()) != detail::partitions_at_most(s, r)) ++mism;
    res.add("|S(r,s)| = partitions of s into <= r parts, r,s <= 12", mism == 0, std::to_string(mism) + " mismatches");

    bool special = true;
    for (int k = 1; k <= 6; ++k)
        for (int r = 1; r <= 6; ++r) {
            const auto e = expand_x_element(XVariant::FromK, r, k * r, k);
            special = special && e.size() == 1 && e[0].factors.size() == 1 && e[0].factors[0].t_degree == k &&
                      e[0].factors[0].exponent == r;
        }
    for (int s = 0; s <= 12; ++s) {
        const auto e = expand_x_element(XVariant::Plain, 1, s);
        special = special && e.size() == 1 && e[0].factors.size() == 1 && e[0].factors[0].t_degree == s &&
                  e[0].factors[0].exponent == 1;
    }
    res.add("_k x(r, kr) = (x t^k)^(r) and x(1, s) = x t^s", special);

    std::size_t entries = 0, violations = 0, eq_mismatch = 0, neither = 0;
    auto scan = [&](const RootSystem& rs, int lo, int hi) {
        detail::for_each_box(rs.rank(), lo, hi, [&](const FiniteWeight& mu) {
            for (int k = 1; k <= 4; ++k) {
                const auto pf = demazure_p(rs, mu, k);
                const auto rep = convexity_report(rs, pf, k);
                entries += rep.entries.size();
                violations += rep.violations;
                eq_mismatch += rep.equality_mismatches;
                for (std::size_t a = 0; a < rs.num_positive_roots(); ++a) {
                    if (std::abs(rs.pairing(mu.coords, a)) > 12) continue;
                    for (Sign s : {Sign::Plus, Sign::Minus})
                        if (mmmr_classify(pf, a, s) == IsoVerdict::Neither) ++neither;
                }
            }
        });
    };
    scan(detail::make(Family::A, 1), -12, 12);
    scan(detail::make(Family::C, 2), -6, 6);
    scan(detail::make(Family::G, 2), -4, 4);
    res.add("convexity: no violations", violations == 0,
            std::to_string(entries) + " entries, " + std::to_string(violations) + " violations");
    res.add("convexity: equality exactly in the two stated cases", eq_mismatch == 0,
            std::to_string(eq_mismatch) + " mismatches");
    res.add("classifier never returns Neither on Demazure p", neither == 0, std::to_string(neither) + " Neither");
    return res;
}

inline CriterionResult criterion_9() {
    CriterionResult res{9, "Residue recombination", {}};
    std::size_t cases = 0, rule_fail = 0, impl_fail = 0;
    for (int l = 1; l <= 6; ++l)
        for (int x = 0; x <= 30; ++x)
            for (int j = 0; j <= x; ++j) {
                ++cases;
                const auto [s, m] = detail::residue_by_search(x, l);
                const auto [s1, m1] = detail::residue_by_search(x - j, l);
                const auto [q, m2] = detail::residue_by_search(j, l);
                const std::pair<int, int> rule =
                    m1 + m2 <= l ? std::pair{s1 + q - 1, m1 + m2} : std::pair{s1 + q, m1 + m2 - l};
                if (rule != std::pair{s, m}) ++rule_fail;
                const auto got = recombine_residues(split_residue(x - j, l), split_residue(j, l), l);
                if (got != split_residue(x, l) || got.s != s || got.m != m) ++impl_fail;
            }
    res.add("case rule holds for x <= 30, j <= x, l <= 6", rule_fail == 0,
            std::to_string(cases) + " cases, " + std::to_string(rule_fail) + " mismatches");
    res.add("library recombination agrees", impl_fail == 0, std::to_string(impl_fail) + " mismatches");
    return res;
}

inline CriterionResult criterion_10(const Options& opt) {
    CriterionResult res{10, "Dominance round-trip", {}};
    std::mt19937_64 rng(opt.seed + 10);
    const std::vector<std::pair<Family, int>> types{{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::B, 2},
                                                    {Family::C, 2}, {Family::B, 3}, {Family::C, 3}, {Family::G, 2}};
    std::vector<RootSystem> systems;
    for (auto [f, n] : types) systems.push_back(detail::make(f, n));
    std::uniform_int_distribution<std::size_t> pick(0, systems.size() - 1);
    std::uniform_int_distribution<int> coord(-4, 4), lvl(1, 3), deg(-5, 5);
    std::size_t fail = 0, not_dom = 0;
    for (int c = 0; c < 500; ++c) {
        const auto& rs = systems[pick(rng)];
        Coords mc(rs.rank());
        for (auto& x : mc) x = coord(rng);
        const AffineWeight in{FiniteWeight(mc), lvl(rng), deg(rng)};
        const auto dom = dominance_algorithm(rs, in);
        if (!is_affine_dominant(rs, dom.lambda)) ++not_dom;
        if (!(apply_word(rs, dom.word, dom.lambda) == in)) ++fail;
    }
    res.add("500 random weights reproduce exactly", fail == 0, std::to_string(fail) + " mismatches");
    res.add("returned weight is dominant", not_dom == 0, std::to_string(not_dom) + " failures");
    return res;
}

inline std::vector<CriterionResult> run_all(const Options& opt = {}) {
    std::vector<CriterionResult> out;
    auto guarded = [&](int id, const std::function<CriterionResult()>& fn) {
        try {
            out.push_back(fn());
        } catch (const std::exception& e) {
            CriterionResult r{id, "criterion " + std::to_string(id), {}};
            r.add("completed without exception", false, e.what());
            out.push_back(r);
        }
    };
    guarded(1, criterion_1);
    guarded(2, criterion_2);
    guarded(3, criterion_3);
    guarded(4, criterion_4);
    guarded(5, criterion_5);
    guarded(6, [&] { return criterion_6(opt); });
    guarded(7, criterion_7);
    guarded(8, criterion_8);
    guarded(9, criterion_9);
    guarded(10, [&] { return criterion_10(opt); });
    return out;
}

/// Plain-text table: one line per check, then one PASS/FAIL line per criterion.
inline std::string format_table(const std::vector<CriterionResult>& results) {
    std::ostringstream os;
    for (const auto& r : results) {
        os << "[" << r.id << "] " << r.title << "\n";
        for (const auto& c : r.checks) {
            os << "    " << c.name << " : " << (c.passed ? "PASS" : "FAIL");
            if (!c.detail.empty()) os << "  (" << c.detail << ")";
            os << "\n";
        }
    }
    os << "\n";
    for (const auto& r : results)
        os << "criterion " << r.id << " : " << (r.passed() ? "PASS" : "FAIL") << "  " << r.title << "\n";
    return os.str();
}

}  // namespace demazure::reproduce
