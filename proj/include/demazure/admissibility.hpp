// Splittings mu = mu_1 + ... + mu_k and the r-admissibility conditions that
// guarantee D^{rk}_mu embeds into D^r_{mu_1} ⊗ ... ⊗ D^r_{mu_k}.
#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "demazure/relations.hpp"
#include "demazure/rootdata.hpp"
#include "demazure/weights.hpp"

namespace demazure {

/// An ordered k-tuple of weights; belongs to P(mu, k) when it sums to mu.
struct SplitTuple {
    std::vector<FiniteWeight> parts;

    std::size_t k() const { return parts.size(); }
    FiniteWeight sum(int rank) const {
        auto s = FiniteWeight::zero(rank);
        for (const auto& p : parts) s += p;
        return s;
    }
    bool operator==(const SplitTuple&) const = default;
};

class SplitError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

inline void check_split(const RootSystem& rs, const FiniteWeight& mu, const SplitTuple& split) {
    rs.check_weight(mu.coords);
    if (split.parts.empty()) throw SplitError("split has no parts");
    for (const auto& p : split.parts) rs.check_weight(p.coords);
    if (split.sum(rs.rank()) != mu) throw SplitError("split parts do not sum to mu");
}

struct PreadmissibilityWitness {
    std::size_t root{0};
    std::size_t part{0};
};

struct Preadmissibility {
    bool ok{true};
    std::vector<PreadmissibilityWitness> witnesses;
};

/// alpha in R^{+/-}(mu) must imply alpha in R^{+/-}(mu_i) for every part.
inline Preadmissibility is_preadmissible(const RootSystem& rs, const FiniteWeight& mu, const SplitTuple& split) {
    check_split(rs, mu, split);
    Preadmissibility out;
    for (std::size_t a = 0; a < rs.num_positive_roots(); ++a) {
        const int h = rs.pairing(mu.coords, a);
        for (std::size_t i = 0; i < split.k(); ++i) {
            const int hi = rs.pairing(split.parts[i].coords, a);
            const bool bad = (h >= 0 && hi < 0) || (h <= 0 && hi > 0);
            if (bad) {
                out.ok = false;
                out.witnesses.push_back({a, i});
            }
        }
    }
    return out;
}

/// Residue of x modulo step in the range 0 < m <= step.
inline int residue_mod(int x, int step) { return split_residue(x, step).m; }

/// Profile of the multiset {∓mu_i(h_alpha)} = {x - j with multiplicity p_j}.
struct RootProfile {
    std::size_t root{0};
    Sign sign{Sign::Plus};
    int d{1};
    int x{0};
    int t{0};
    std::vector<int> p;  // p_0 .. p_t, p_0 > 0

    int weighted_spread() const {
        int s = 0;
        for (std::size_t j = 0; j < p.size(); ++j) s += static_cast<int>(j) * p[j];
        return s;
    }
    int total() const {
        int s = 0;
        for (std::size_t j = 0; j < p.size(); ++j) s += static_cast<int>(x - static_cast<int>(j)) * p[j];
        return s;
    }
    int m(int r) const { return residue_mod(x, d * r); }
};

/// Profile of alpha with the sign fixed by alpha in R^∓(mu). Interior
/// multiplicities p_j may be zero.
inline RootProfile root_profile(const RootSystem& rs, const SplitTuple& split, std::size_t root, Sign sign) {
    RootProfile pr;
    pr.root = root;
    pr.sign = sign;
    pr.d = rs.d(root);
    std::vector<int> vals;
    for (const auto& part : split.parts) vals.push_back(signed_value(sign, rs.pairing(part.coords, root)));
    pr.x = *std::max_element(vals.begin(), vals.end());
    const int lo = *std::min_element(vals.begin(), vals.end());
    pr.t = pr.x - lo;
    pr.p.assign(pr.t + 1, 0);
    for (int v : vals) ++pr.p[pr.x - v];
    return pr;
}

/// Sign(s) under which alpha contributes: + for alpha in R^-(mu), - for R^+(mu).
inline std::vector<Sign> applicable_signs(int mu_pairing) {
    std::vector<Sign> out;
    if (mu_pairing <= 0) out.push_back(Sign::Plus);
    if (mu_pairing >= 0) out.push_back(Sign::Minus);
    return out;
}

struct RootCheck {
    RootProfile profile;
    int mu_pairing{0};
    int m{0};
    bool condition_A{true};  // m k > sum j p_j
    bool condition_B{true};  // mu(h) > k d r  =>  x >= t + d r   (alpha in R^+(mu) only)
    bool condition_B_triggered{false};
};

struct AdmissibilityReport {
    int r{1};
    std::size_t k{0};
    Preadmissibility preadmissible;
    std::vector<RootCheck> roots;
    bool admissible_for_r{false};

    std::vector<const RootCheck*> violations() const {
        std::vector<const RootCheck*> out;
        for (const auto& c : roots)
            if (!c.condition_A || !c.condition_B) out.push_back(&c);
        return out;
    }
};

inline AdmissibilityReport is_r_admissible(const RootSystem& rs, const FiniteWeight& mu, const SplitTuple& split,
                                           int r) {
    if (r < 1) throw std::invalid_argument("r must be positive");
    AdmissibilityReport rep;
    rep.r = r;
    rep.k = split.k();
    rep.preadmissible = is_preadmissible(rs, mu, split);
    if (!rep.preadmissible.ok) return rep;
    const int k = static_cast<int>(split.k());
    bool all = true;
    for (std::size_t a = 0; a < rs.num_positive_roots(); ++a) {
        const int h = rs.pairing(mu.coords, a);
        for (Sign s : applicable_signs(h)) {
            RootCheck c;
            c.profile = root_profile(rs, split, a, s);
            c.mu_pairing = h;
            c.m = c.profile.m(r);
            c.condition_A = c.m * k > c.profile.weighted_spread();
            if (s == Sign::Minus) {
                const int d = c.profile.d;
                c.condition_B_triggered = h > k * d * r;
                if (c.condition_B_triggered) c.condition_B = c.profile.x >= c.profile.t + d * r;
            }
            all = all && c.condition_A && c.condition_B;
            rep.roots.push_back(std::move(c));
        }
    }
    rep.admissible_for_r = all;
    return rep;
}

/// Largest x over the applicable profiles; every r >= this bound is admissible.
///
/// For r >= max x: when x > 0 we have x <= d r so m = x, and since every value
/// x - j is nonnegative, sum j p_j <= x (k - p_0) < x k. When x = 0 the spread
/// vanishes and m = d r > 0. The premise mu(h) > k d r of the second condition
/// fails because mu(h) = sum of values <= k x <= k d r.
inline int admissibility_bound(const RootSystem& rs, const FiniteWeight& mu, const SplitTuple& split) {
    int bound = 1;
    for (std::size_t a = 0; a < rs.num_positive_roots(); ++a)
        for (Sign s : applicable_signs(rs.pairing(mu.coords, a)))
            bound = std::max(bound, root_profile(rs, split, a, s).x);
    return bound;
}

/// Smallest admissible r in [1, min(r_max, bound)], scanning every r since
/// admissibility need not be monotone in r.
inline std::optional<int> minimal_r(const RootSystem& rs, const FiniteWeight& mu, const SplitTuple& split,
                                    int r_max) {
    if (!is_preadmissible(rs, mu, split).ok) return std::nullopt;
    const int hi = std::min(r_max, admissibility_bound(rs, mu, split));
    for (int r = 1; r <= hi; ++r)
        if (is_r_admissible(rs, mu, split, r).admissible_for_r) return r;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Candidate splittings through the dominant chamber

inline std::size_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    return r;
}

inline std::size_t count_dominant_splits(const FiniteWeight& lambda, int k) {
    std::size_t n = 1;
    for (int c : lambda.coords) n *= binomial(c + k - 1, k - 1);
    return n;
}

/// Visits every k-tuple of dominant weights summing to lambda. Parts are
/// chosen front to back, each in decreasing lexicographic order. Stops early
/// when the visitor returns false.
inline void for_each_dominant_split(const FiniteWeight& lambda, int k,
                                    const std::function<bool(const SplitTuple&)>& visit) {
    if (!lambda.is_dominant()) throw SplitError("enumerate_dominant_splits requires a dominant weight");
    if (k < 1) throw SplitError("k must be positive");
    const int n = lambda.rank();
    SplitTuple cur;
    cur.parts.assign(k, FiniteWeight::zero(n));
    bool stop = false;
    // part index j, coordinate index c, remaining budget rem
    auto rec = [&](auto&& self, int j, int c, FiniteWeight& rem) -> void {
        if (stop) return;
        if (j == k - 1) {
            cur.parts[j] = rem;
            if (!visit(cur)) stop = true;
            return;
        }
        if (c == n) {
            self(self, j + 1, 0, rem);
            return;
        }
        const int avail = rem[c];
        for (int v = avail; v >= 0 && !stop; --v) {
            cur.parts[j][c] = v;
            rem[c] -= v;
            self(self, j, c + 1, rem);
            rem[c] += v;
        }
        cur.parts[j][c] = 0;
    };
    FiniteWeight rem = lambda;
    rec(rec, 0, 0, rem);
}

inline std::vector<SplitTuple> enumerate_dominant_splits(const FiniteWeight& lambda, int k) {
    std::vector<SplitTuple> out;
    out.reserve(count_dominant_splits(lambda, k));
    for_each_dominant_split(lambda, k, [&](const SplitTuple& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

/// Applies sigma^{-1} to every part (sigma given as a finite Weyl word).
inline SplitTuple pull_back(const RootSystem& rs, const std::vector<int>& sigma, const SplitTuple& tuple) {
    SplitTuple out;
    for (const auto& p : tuple.parts) out.parts.push_back(apply_inverse(rs, sigma, p));
    return out;
}

/// lambda = k q + residual with residual coords in [0, k); every part gets q
/// and residual units are dealt round-robin, node by node, continuing from
/// where the previous node stopped. The result is pulled back to mu.
inline SplitTuple balanced_split(const RootSystem& rs, const FiniteWeight& mu, int k) {
    if (k < 1) throw SplitError("k must be positive");
    const auto conj = to_dominant(rs, mu);
    const auto& lambda = conj.lambda;
    const int n = rs.rank();
    SplitTuple dom;
    dom.parts.assign(k, FiniteWeight::zero(n));
    int next = 0;
    for (int c = 0; c < n; ++c) {
        const int q = lambda[c] / k;
        const int res = lambda[c] % k;
        for (auto& p : dom.parts) p[c] = q;
        for (int u = 0; u < res; ++u) {
            dom.parts[next][c] += 1;
            next = (next + 1) % k;
        }
    }
    return pull_back(rs, conj.sigma, dom);
}

/// First 1-admissible split in enumeration order of the dominant splits of
/// sigma(mu), pulled back to mu.
inline std::optional<SplitTuple> find_1_admissible(const RootSystem& rs, const FiniteWeight& mu, int k) {
    const auto conj = to_dominant(rs, mu);
    std::optional<SplitTuple> found;
    for_each_dominant_split(conj.lambda, k, [&](const SplitTuple& dom) {
        auto cand = pull_back(rs, conj.sigma, dom);
        if (is_r_admissible(rs, mu, cand, 1).admissible_for_r) {
            found = std::move(cand);
            return false;
        }
        return true;
    });
    return found;
}

// ---------------------------------------------------------------------------
// Scan of the balanced candidates in non-exceptional types

struct TScanCase {
    FiniteWeight mu;
    int k{0};
    SplitTuple split;
    bool one_admissible{false};
    int max_t{0};
    bool has_t2_m1_root{false};
};

struct TScanReport {
    std::string type;
    std::size_t cases{0};
    std::size_t not_one_admissible{0};
    std::vector<TScanCase> t_bound_failures;     // some t_alpha > 2
    std::vector<TScanCase> witness_failures;     // not 1-admissible and no root with t = 2 = m + 1
    bool passed() const { return t_bound_failures.empty() && witness_failures.empty(); }
};

/// All mu with |coords| <= bound and 1 <= k <= k_max: balanced splits have
/// t_alpha <= 2, and each failure of 1-admissibility shows a root with
/// t_alpha = 2 = m(1) + 1.
inline TScanReport nonexceptional_t_scan(const RootSystem& rs, int bound, int k_max) {
    if (rs.family() == Family::E || rs.family() == Family::F || rs.family() == Family::G)
        throw std::invalid_argument("t scan applies to non-exceptional types only");
    TScanReport rep;
    rep.type = rs.name();
    const int n = rs.rank();
    FiniteWeight mu = FiniteWeight::zero(n);
    auto visit = [&](const FiniteWeight& m) {
        for (int k = 1; k <= k_max; ++k) {
            TScanCase c{m, k, balanced_split(rs, m, k)};
            const auto report = is_r_admissible(rs, m, c.split, 1);
            c.one_admissible = report.admissible_for_r;
            for (const auto& rc : report.roots) {
                c.max_t = std::max(c.max_t, rc.profile.t);
                if (rc.profile.t == 2 && rc.m + 1 == 2) c.has_t2_m1_root = true;
            }
            ++rep.cases;
            if (!c.one_admissible) ++rep.not_one_admissible;
            if (c.max_t > 2) rep.t_bound_failures.push_back(c);
            if (!c.one_admissible && !c.has_t2_m1_root) rep.witness_failures.push_back(c);
        }
    };
    auto rec = [&](auto&& self, int c) -> void {
        if (c == n) {
            visit(mu);
            return;
        }
        for (int v = -bound; v <= bound; ++v) {
            mu[c] = v;
            self(self, c + 1);
        }
    };
    rec(rec, 0);
    return rep;
}

}  // namespace demazure
