// Symbolic presentations of cyclic modules for the Iwahori current algebra.
//
// A p-family assigns to each positive root alpha and sign a finitely
// supported function p_alpha^{+/-}. From it we derive xi-tuples, the relation
// sets of the modules M, M' and M'' (as finite descriptors), the index sets
// S(r, s) with their divided-power elements, and the simplified Demazure
// presentation. Nothing here acts on a vector space.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "demazure/rootdata.hpp"
#include "demazure/weights.hpp"

namespace demazure {

enum class Sign { Plus, Minus };

inline const char* sign_name(Sign s) { return s == Sign::Plus ? "+" : "-"; }
inline int sign_index(Sign s) { return s == Sign::Plus ? 0 : 1; }

/// ∓mu(h_alpha): the value that governs x_alpha^{+/-} relations.
inline int signed_value(Sign s, int pairing) { return s == Sign::Plus ? -pairing : pairing; }

/// One function p: Z_+ -> Z_+ stored as p(0), ..., p(cutoff) with p(cutoff) = 0.
struct PFunction {
    std::vector<int> values;  // values.back() == 0

    int cutoff() const { return static_cast<int>(values.size()) - 1; }
    int operator()(int s) const { return s < static_cast<int>(values.size()) ? values[s] : 0; }

    /// Builds from any prefix of values, trimming to the minimal cutoff.
    static PFunction from_values(std::vector<int> v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
        v.push_back(0);
        return PFunction{std::move(v)};
    }
};

/// p_alpha^{+/-} for every positive root. p^- is stored with its
/// extension p^-(0) = max{0, mu(h_alpha)}.
struct PFunctions {
    FiniteWeight mu;
    std::vector<std::array<PFunction, 2>> by_root;

    const PFunction& at(std::size_t root, Sign s) const { return by_root.at(root)[sign_index(s)]; }
    int cutoff(std::size_t root, Sign s) const { return at(root, s).cutoff(); }
};

inline PFunctions demazure_p(const RootSystem& rs, const FiniteWeight& mu, int k) {
    if (k < 1) throw std::invalid_argument("demazure_p requires k >= 1");
    PFunctions out{mu, {}};
    for (std::size_t a = 0; a < rs.num_positive_roots(); ++a) {
        const int h = rs.pairing(mu.coords, a);
        const int step = rs.d(a) * k;
        std::array<PFunction, 2> pf;
        for (Sign s : {Sign::Plus, Sign::Minus}) {
            const int v = signed_value(s, h);
            std::vector<int> vals;
            for (int i = 0; v - step * i > 0; ++i) vals.push_back(v - step * i);
            pf[sign_index(s)] = PFunction::from_values(std::move(vals));
        }
        out.by_root.push_back(std::move(pf));
    }
    return out;
}

inline PFunctions weyl_p(const RootSystem& rs, const FiniteWeight& mu) {
    PFunctions out{mu, {}};
    for (std::size_t a = 0; a < rs.num_positive_roots(); ++a) {
        const int h = rs.pairing(mu.coords, a);
        if (h > 0) throw std::invalid_argument("weyl_p requires an anti-dominant weight");
        std::vector<int> vals;
        for (int i = 0; -h - i > 0; ++i) vals.push_back(-h - i);
        out.by_root.push_back({PFunction::from_values(std::move(vals)), PFunction::from_values({})});
    }
    return out;
}

/// Boundary values as prescribed for generalized Weyl modules; the remaining
/// values descend linearly (by one per step) to zero.
inline PFunctions generalized_weyl_p(const RootSystem& rs, const FiniteWeight& mu) {
    PFunctions out{mu, {}};
    for (std::size_t a = 0; a < rs.num_positive_roots(); ++a) {
        const int h = rs.pairing(mu.coords, a);
        const int plus0 = h >= 0 ? 0 : -h;
        const int minus1 = h >= 0 ? h : 0;
        std::vector<int> pv, mv;
        for (int i = 0; plus0 - i > 0; ++i) pv.push_back(plus0 - i);
        mv.push_back(std::max(0, h));
        for (int i = 1; minus1 - (i - 1) > 0; ++i) mv.push_back(minus1 - (i - 1));
        out.by_root.push_back({PFunction::from_values(std::move(pv)), PFunction::from_values(std::move(mv))});
    }
    return out;
}

/// xi_i = p(i-1) - p(i) for i = 1..s.
struct XiTuple {
    std::vector<int> xi;

    bool is_partition() const {
        for (std::size_t i = 1; i < xi.size(); ++i)
            if (xi[i] > xi[i - 1]) return false;
        return true;
    }
    /// xi_i with 1-based index; zero beyond the cutoff.
    int operator()(int i) const { return i >= 1 && i <= static_cast<int>(xi.size()) ? xi[i - 1] : 0; }
};

inline XiTuple xi_tuple(const std::vector<int>& p) {
    int s = static_cast<int>(p.size());
    while (s > 0 && p[s - 1] == 0) --s;
    XiTuple out;
    for (int i = 1; i <= s; ++i) out.xi.push_back(p[i - 1] - (i < static_cast<int>(p.size()) ? p[i] : 0));
    return out;
}
inline XiTuple xi_tuple(const PFunction& p) { return xi_tuple(p.values); }
inline XiTuple xi_tuple(const PFunctions& pf, std::size_t root, Sign s) { return xi_tuple(pf.at(root, s)); }

inline bool is_partition(const XiTuple& xi) { return xi.is_partition(); }

// ---------------------------------------------------------------------------
// Convexity of the Demazure p-functions

struct ConvexityEntry {
    std::size_t root{0};
    Sign sign{Sign::Plus};
    int i{0};
    int lhs{0};  // 2 p(i)
    int rhs{0};  // p(i+1) + p(i-1)
    bool equality{false};
    bool predicted_equality{false};
};

struct ConvexityReport {
    std::vector<ConvexityEntry> entries;
    std::size_t violations{0};           // lhs > rhs
    std::size_t equality_mismatches{0};  // equality != predicted_equality
};

/// Checks 2p(i) <= p(i+1) + p(i-1) for 1 <= i <= s and compares equality with
/// the two predicted cases: 1 <= i <= s-2, or i = s-1 with ∓mu(h_alpha) = d s k.
inline void convexity_check_one(ConvexityReport& rep, std::size_t root, Sign sign, const PFunction& p, int value,
                                int d, int k) {
    const int s = p.cutoff();
    for (int i = 1; i <= s; ++i) {
        ConvexityEntry e{root, sign, i, 2 * p(i), p(i + 1) + p(i - 1)};
        e.equality = e.lhs == e.rhs;
        e.predicted_equality = (i <= s - 2) || (i == s - 1 && value == d * s * k);
        if (e.lhs > e.rhs) ++rep.violations;
        if (e.equality != e.predicted_equality) ++rep.equality_mismatches;
        rep.entries.push_back(e);
    }
}

inline ConvexityReport convexity_report(const RootSystem& rs, const PFunctions& pf, int k) {
    ConvexityReport rep;
    for (std::size_t a = 0; a < rs.num_positive_roots(); ++a) {
        const int h = rs.pairing(pf.mu.coords, a);
        for (Sign s : {Sign::Plus, Sign::Minus})
            convexity_check_one(rep, a, s, pf.at(a, s), signed_value(s, h), rs.d(a), k);
    }
    if (rep.violations) throw std::logic_error("convexity violated by a Demazure p-family");
    return rep;
}

// ---------------------------------------------------------------------------
// Relation descriptors

enum class RelationKind {
    Cartan,         // (h ⊗ t^s) v = delta_{s,0} mu(h) v
    MonomialPower,  // (x ⊗ t^d)^e v = 0
    TupleFamily,    // (x ⊗ t^s)^{a_s} ... (x ⊗ t^i)^{a_i} v = 0
    Annihilator,    // (x ⊗ t^d) v = 0 for every d >= min_degree
};

inline const char* kind_name(RelationKind k) {
    switch (k) {
    case RelationKind::Cartan: return "cartan";
    case RelationKind::MonomialPower: return "monomial";
    case RelationKind::TupleFamily: return "tuple";
    case RelationKind::Annihilator: return "annihilator";
    }
    return "?";
}

struct Factor {
    int t_degree{0};
    int exponent{1};
    bool operator==(const Factor&) const = default;
};

struct Relation {
    RelationKind kind{RelationKind::MonomialPower};
    std::size_t root{0};
    Sign sign{Sign::Plus};
    std::vector<Factor> factors;  // strictly decreasing t-degrees
    int min_degree{0};            // Annihilator only
    int start_index{0};           // TupleFamily: the i of Definition (3)
    std::string provenance;
    bool redundant{false};

    bool operator==(const Relation&) const = default;
};

inline Relation cartan_relation(std::string prov) {
    Relation r;
    r.kind = RelationKind::Cartan;
    r.factors.clear();
    r.provenance = std::move(prov);
    return r;
}

inline Relation power_relation(std::size_t root, Sign s, int t_degree, int exponent, std::string prov) {
    Relation r;
    r.kind = RelationKind::MonomialPower;
    r.root = root;
    r.sign = s;
    r.factors = {{t_degree, exponent}};
    r.provenance = std::move(prov);
    return r;
}

inline Relation annihilator(std::size_t root, Sign s, int min_degree, std::string prov) {
    Relation r;
    r.kind = RelationKind::Annihilator;
    r.root = root;
    r.sign = s;
    r.min_degree = min_degree;
    r.provenance = std::move(prov);
    return r;
}

class RelationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Minimal tuples (a_i, ..., a_s) with sum_j (j-i+1) a_j >= target. A tuple
/// is minimal when lowering any positive entry breaks the inequality. The
/// result is the antichain generating the upward-closed solution set.
inline std::vector<std::vector<int>> minimal_tuples(int i, int s, int target, int degree_bound) {
    std::vector<std::vector<int>> out;
    if (target <= 0) {
        out.emplace_back(s - i + 1, 0);
        return out;
    }
    if (target > degree_bound) {
        throw RelationError("degree bound " + std::to_string(degree_bound) + " below required exponent " +
                            std::to_string(target));
    }
    const int n = s - i + 1;
    std::vector<int> a(n, 0);
    // weights w_j = j + 1 on the local index j
    auto rec = [&](auto&& self, int j, int sum) -> void {
        if (j == n) {
            if (sum < target) return;
            for (int q = 0; q < n; ++q)
                if (a[q] > 0 && sum - (q + 1) >= target) return;
            out.push_back(a);
            return;
        }
        const int w = j + 1;
        const int cap = (target + w - 1) / w;
        for (int v = 0; v <= cap; ++v) {
            if (sum + v * w - w >= target && v > 0) break;  // already minimal-violating
            a[j] = v;
            self(self, j + 1, sum + v * w);
        }
        a[j] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

inline Relation tuple_relation(std::size_t root, Sign s, int i, const std::vector<int>& a, std::string prov) {
    Relation r;
    r.kind = RelationKind::TupleFamily;
    r.root = root;
    r.sign = s;
    r.start_index = i;
    for (int q = static_cast<int>(a.size()) - 1; q >= 0; --q)
        if (a[q] > 0) r.factors.push_back({i + q, a[q]});
    r.provenance = std::move(prov);
    return r;
}

namespace detail {

/// Applicable (root, sign) pairs: sign + for alpha in R^-(mu), sign - for alpha in R^+(mu).
inline std::vector<std::pair<std::size_t, Sign>> applicable(const RootSystem& rs, const FiniteWeight& mu) {
    std::vector<std::pair<std::size_t, Sign>> out;
    for (std::size_t a = 0; a < rs.num_positive_roots(); ++a) {
        const int h = rs.pairing(mu.coords, a);
        if (h <= 0) out.emplace_back(a, Sign::Plus);
        if (h >= 0) out.emplace_back(a, Sign::Minus);
    }
    return out;
}

/// Definition parts (1) and (2), shared by M, M' and M''.
inline std::vector<Relation> base_relations(const RootSystem& rs, const PFunctions& pf, const std::string& prov) {
    std::vector<Relation> out{cartan_relation(prov)};
    for (auto [a, s] : applicable(rs, pf.mu)) {
        if (s == Sign::Plus) {
            // alpha in R^-(mu): x^- ⊗ t C[t] kills v; (x^+ ⊗ 1)^{p^+(0)+1}
            out.push_back(annihilator(a, Sign::Minus, 1, prov));
            out.push_back(power_relation(a, Sign::Plus, 0, pf.at(a, Sign::Plus)(0) + 1, prov));
        } else {
            // alpha in R^+(mu): x^+ ⊗ C[t] kills v; (x^- ⊗ t)^{p^-(1)+1}
            out.push_back(annihilator(a, Sign::Plus, 0, prov));
            out.push_back(power_relation(a, Sign::Minus, 1, pf.at(a, Sign::Minus)(1) + 1, prov));
        }
    }
    return out;
}

}  // namespace detail

/// M: all minimal tuples of part (3) for 1 <= i <= s.
inline std::vector<Relation> relations_M(const RootSystem& rs, const PFunctions& pf, int degree_bound) {
    auto out = detail::base_relations(rs, pf, "M");
    for (auto [a, s] : detail::applicable(rs, pf.mu)) {
        const auto& p = pf.at(a, s);
        const int sc = p.cutoff();
        for (int i = 1; i <= sc; ++i)
            for (const auto& t : minimal_tuples(i, sc, p(i) + 1, degree_bound))
                out.push_back(tuple_relation(a, s, i, t, "M"));
    }
    return out;
}

/// M': part (3) imposed at i only when xi_{i+1} < xi_i, and only on tuples
/// with a_i + ... + a_s <= xi_i (filtered independently for each i).
inline std::vector<Relation> relations_Mprime(const RootSystem& rs, const PFunctions& pf, int degree_bound) {
    auto out = detail::base_relations(rs, pf, "Mprime");
    for (auto [a, s] : detail::applicable(rs, pf.mu)) {
        const auto& p = pf.at(a, s);
        const auto xi = xi_tuple(p);
        const int sc = p.cutoff();
        for (int i = 1; i <= sc; ++i) {
            if (!(xi(i + 1) < xi(i))) continue;
            for (const auto& t : minimal_tuples(i, sc, p(i) + 1, degree_bound)) {
                int total = 0;
                for (int v : t) total += v;
                if (total <= xi(i)) out.push_back(tuple_relation(a, s, i, t, "Mprime"));
            }
        }
    }
    return out;
}

/// M'': the single powers (x ⊗ t^i)^{p(i)+1} for 1 <= i <= s.
inline std::vector<Relation> relations_Mpp(const RootSystem& rs, const PFunctions& pf) {
    auto out = detail::base_relations(rs, pf, "Mpp");
    for (auto [a, s] : detail::applicable(rs, pf.mu)) {
        const auto& p = pf.at(a, s);
        for (int i = 1; i <= p.cutoff(); ++i) out.push_back(power_relation(a, s, i, p(i) + 1, "Mpp"));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Isomorphism classifier for M'' -> M' -> M

enum class IsoVerdict { FirstIso, SecondIso, Both, Neither };

inline const char* verdict_name(IsoVerdict v) {
    switch (v) {
    case IsoVerdict::FirstIso: return "FirstIso";
    case IsoVerdict::SecondIso: return "SecondIso";
    case IsoVerdict::Both: return "Both";
    case IsoVerdict::Neither: return "Neither";
    }
    return "?";
}

/// First map iso iff xi_1 = ... = xi_{s-1}; second iff xi_1 != xi_2.
inline IsoVerdict mmmr_classify(const XiTuple& xi) {
    const int s = static_cast<int>(xi.xi.size());
    bool first = true;
    for (int i = 2; i <= s - 1; ++i)
        if (xi(i) != xi(1)) first = false;
    const bool second = xi(1) != xi(2);
    if (first && second) return IsoVerdict::Both;
    if (first) return IsoVerdict::FirstIso;
    if (second) return IsoVerdict::SecondIso;
    return IsoVerdict::Neither;
}
inline IsoVerdict mmmr_classify(const PFunctions& pf, std::size_t root, Sign s) {
    return mmmr_classify(xi_tuple(pf, root, s));
}

// ---------------------------------------------------------------------------
// S(r, s) and divided-power elements

/// b_p for p = 0..max_p (trailing zeros trimmed).
struct IndexVector {
    std::vector<int> b;

    int total() const {
        int t = 0;
        for (int v : b) t += v;
        return t;
    }
    int weighted() const {
        int t = 0;
        for (std::size_t p = 0; p < b.size(); ++p) t += static_cast<int>(p) * b[p];
        return t;
    }
    bool operator==(const IndexVector&) const = default;
};

/// All b with sum b_p = r, sum p b_p = s, and support inside [lower, upper).
/// upper < 0 means unbounded.
inline std::vector<IndexVector> s_sets(int r, int s, int lower = 0, int upper = -1) {
    if (r < 0 || s < 0) throw std::invalid_argument("s_sets requires r, s >= 0");
    const int hi = upper < 0 ? s : std::min(upper - 1, s);
    std::vector<IndexVector> out;
    if (hi < lower) {
        if (r == 0 && s == 0) out.push_back({});
        return out;
    }
    std::vector<int> b(hi + 1, 0);
    // choose b_p for p from hi down to lower, parts listed largest first
    auto rec = [&](auto&& self, int p, int rem_r, int rem_s) -> void {
        if (p < lower || p == 0) {
            if (p == 0 && lower == 0) {
                if (rem_s != 0) return;
                b[0] = rem_r;
                IndexVector iv{b};
                while (!iv.b.empty() && iv.b.back() == 0) iv.b.pop_back();
                out.push_back(iv);
                b[0] = 0;
                return;
            }
            if (rem_r == 0 && rem_s == 0) {
                IndexVector iv{b};
                while (!iv.b.empty() && iv.b.back() == 0) iv.b.pop_back();
                out.push_back(iv);
            }
            return;
        }
        const int cap = std::min(rem_r, rem_s / p);
        for (int v = cap; v >= 0; --v) {
            b[p] = v;
            self(self, p - 1, rem_r - v, rem_s - v * p);
        }
        b[p] = 0;
    };
    rec(rec, hi, r, s);
    return out;
}

enum class XVariant { Plain, TruncatedK, FromK, TShifted };

/// One summand: product of (x ⊗ t^deg)^{(exp)} in increasing t-degree.
struct DividedMonomial {
    IndexVector index;
    std::vector<Factor> factors;
};

/// Expansion of x(r,s)_k, _k x(r,s), ^t x(r,s) or the plain x(r,s).
inline std::vector<DividedMonomial> expand_x_element(XVariant v, int r, int s, int k = 0) {
    if (r < 1 || s < 0) throw std::invalid_argument("expand_x_element requires r >= 1, s >= 0");
    std::vector<IndexVector> idx;
    switch (v) {
    case XVariant::Plain:
    case XVariant::TShifted: idx = s_sets(r, s); break;
    case XVariant::TruncatedK: idx = s_sets(r, s, 0, k); break;
    case XVariant::FromK: idx = s_sets(r, s, k, -1); break;
    }
    const int shift = v == XVariant::TShifted ? 1 : 0;
    std::vector<DividedMonomial> out;
    for (auto& b : idx) {
        DividedMonomial m{b, {}};
        for (std::size_t p = 0; p < b.b.size(); ++p)
            if (b.b[p] > 0) m.factors.push_back({static_cast<int>(p) + shift, b.b[p]});
        out.push_back(std::move(m));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Demazure presentations

/// Unique (s, m) with value = (s - 1) * step + m and 0 < m <= step.
inline int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

struct SplitResidue {
    int s{0};
    int m{0};
    bool operator==(const SplitResidue&) const = default;
};

inline SplitResidue split_residue(int value, int step) {
    if (step < 1) throw std::invalid_argument("split_residue requires a positive step");
    const int q = floor_div(value - 1, step);
    return {q + 1, value - q * step};
}

/// Recombination of the residue data of x = (x - j) + j at the same step.
inline SplitResidue recombine_residues(SplitResidue low, SplitResidue part, int step) {
    const int mm = low.m + part.m;
    if (mm <= step) return {low.s + part.s - 1, mm};
    return {low.s + part.s, mm - step};
}

/// The Mathieu relations: (x^{+/-} ⊗ t^j)^{p(j)+1} v = 0 for j below the
/// cutoff, plus the annihilators from the cutoff onward.
inline std::vector<Relation> mathieu_relations(const RootSystem& rs, const FiniteWeight& mu, int k) {
    const auto pf = demazure_p(rs, mu, k);
    std::vector<Relation> out{cartan_relation("mathieu")};
    for (std::size_t a = 0; a < rs.num_positive_roots(); ++a) {
        for (Sign s : {Sign::Plus, Sign::Minus}) {
            const auto& p = pf.at(a, s);
            const int first = s == Sign::Plus ? 0 : 1;
            const int sc = std::max(p.cutoff(), first);
            for (int j = first; j < sc; ++j) out.push_back(power_relation(a, s, j, p(j) + 1, "mathieu"));
            out.push_back(annihilator(a, s, sc, "mathieu"));
        }
    }
    return out;
}

/// Simplified Demazure presentation. For alpha in R^∓(mu) with
/// ∓mu(h_alpha) = (s-1) d k + m, 0 < m <= d k:
///   (x^± ⊗ t^{s-1})^{m+1} v = 0 if m < d k, and (x^± ⊗ t^s) v = 0,
/// plus the sign-dependent pairs. Relations at t-degree 0 for x^- lie outside
/// the Iwahori algebra and are omitted. With k = 1 the relations made
/// redundant by the d_alpha criterion are kept but flagged.
inline std::vector<Relation> simplified_demazure_relations(const RootSystem& rs, const FiniteWeight& mu, int k) {
    if (k < 1) throw std::invalid_argument("simplified_demazure_relations requires k >= 1");
    std::vector<Relation> out{cartan_relation("simplified")};
    for (auto [a, s] : detail::applicable(rs, mu)) {
        const int h = rs.pairing(mu.coords, a);
        const int d = rs.d(a);
        const int value = signed_value(s, h);
        const auto sm = split_residue(value, d * k);
        const bool x_minus = s == Sign::Minus;

        if (sm.m < d * k && !(x_minus && sm.s - 1 < 1) && sm.s - 1 >= 0) {
            auto r = power_relation(a, s, sm.s - 1, sm.m + 1, "simplified");
            if (k == 1 && !(d == 3 && sm.m + 2 == 3)) {
                r.redundant = true;
                r.provenance = "redundant-k1";
            }
            out.push_back(r);
        }
        if (!(x_minus && sm.s < 1)) {
            auto r = power_relation(a, s, sm.s, 1, "simplified");
            if (k == 1 && d == 1) {
                r.redundant = true;
                r.provenance = "redundant-k1";
            }
            out.push_back(r);
        }
        if (s == Sign::Minus) {
            // alpha in R^+(mu)
            out.push_back(annihilator(a, Sign::Plus, 0, "simplified"));
            out.push_back(power_relation(a, Sign::Minus, 1, std::max(0, h - d * k) + 1, "simplified"));
        } else {
            // alpha in R^-(mu)
            out.push_back(annihilator(a, Sign::Minus, 1, "simplified"));
            out.push_back(power_relation(a, Sign::Plus, 0, -h + 1, "simplified"));
        }
    }
    return out;
}

}  // namespace demazure
