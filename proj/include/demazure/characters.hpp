// Graded characters of affine Demazure modules.
//
// A character is a finite sum of exponentials e^{(weight, level, grade)} with
// integer multiplicities. Demazure operators act in the string form
//   D_i e^λ = e^λ + e^{λ-α_i} + ... + e^{λ-mα_i}      (m = <λ, α_i^∨> >= 0)
//           = 0                                        (m = -1)
//           = -(e^{λ+α_i} + ... + e^{λ+(-m-1)α_i})     (m <= -2)
// with α_0 = δ - θ, so a step along α_0 adds θ to the finite part and lowers
// the δ coefficient by one. The generator of D^k_μ sits at the lowest δ
// coefficient of its module; grades are measured from there.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "demazure/admissibility.hpp"
#include "demazure/rootdata.hpp"
#include "demazure/weights.hpp"

namespace demazure {

inline constexpr int kMaxRank = 8;

struct CharKey {
    std::array<std::int16_t, kMaxRank> w{};
    std::int16_t level{0};
    std::int32_t grade{0};

    bool operator==(const CharKey&) const = default;
    auto operator<=>(const CharKey&) const = default;

    FiniteWeight weight(int rank) const {
        Coords c(rank);
        for (int i = 0; i < rank; ++i) c[i] = w[i];
        return FiniteWeight(std::move(c));
    }
};

struct CharKeyHash {
    std::size_t operator()(const CharKey& k) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        auto mix = [&](std::uint64_t v) {
            h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        };
        for (auto c : k.w) mix(static_cast<std::uint16_t>(c));
        mix(static_cast<std::uint16_t>(k.level));
        mix(static_cast<std::uint32_t>(k.grade));
        return static_cast<std::size_t>(h);
    }
};

inline CharKey make_key(const FiniteWeight& wt, int level, int grade) {
    if (wt.rank() > kMaxRank) throw RootDataError("rank exceeds character key capacity");
    CharKey k;
    for (int i = 0; i < wt.rank(); ++i) k.w[i] = static_cast<std::int16_t>(wt[i]);
    k.level = static_cast<std::int16_t>(level);
    k.grade = grade;
    return k;
}

enum class Normalization { Raw, GeneratorNormalized };

class CharacterError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Sparse exponential sum. Raw characters carry the δ coefficient as grade
/// and may hold signed intermediate values.
class GradedCharacter {
  public:
    using Map = std::unordered_map<CharKey, std::int64_t, CharKeyHash>;

    GradedCharacter() = default;
    explicit GradedCharacter(int rank, Normalization n = Normalization::Raw) : rank_(rank), norm_(n) {}

    static GradedCharacter monomial(const FiniteWeight& wt, int level, int grade,
                                    Normalization n = Normalization::Raw) {
        GradedCharacter c(wt.rank(), n);
        c.add(make_key(wt, level, grade), 1);
        return c;
    }
    /// e^0 at level 0, grade 0: the unit for tensor products.
    static GradedCharacter trivial(int rank) {
        return monomial(FiniteWeight::zero(rank), 0, 0, Normalization::GeneratorNormalized);
    }

    int rank() const { return rank_; }
    Normalization normalization() const { return norm_; }
    void set_normalization(Normalization n) { norm_ = n; }

    const Map& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add(const CharKey& key, std::int64_t c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::int64_t coefficient(const CharKey& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? 0 : it->second;
    }
    std::int64_t coefficient(const FiniteWeight& wt, int level, int grade) const {
        return coefficient(make_key(wt, level, grade));
    }

    std::int64_t dimension() const {
        std::int64_t s = 0;
        for (const auto& [k, c] : terms_) s += c;
        return s;
    }

    bool is_nonnegative() const {
        return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second > 0; });
    }

    /// Terms sorted by (grade, weight), the stable order used for output.
    std::vector<std::pair<CharKey, std::int64_t>> sorted_terms() const {
        std::vector<std::pair<CharKey, std::int64_t>> v(terms_.begin(), terms_.end());
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
            if (a.first.grade != b.first.grade) return a.first.grade < b.first.grade;
            if (a.first.w != b.first.w) return a.first.w < b.first.w;
            return a.first.level < b.first.level;
        });
        return v;
    }

    GradedCharacter& operator+=(const GradedCharacter& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    GradedCharacter& operator-=(const GradedCharacter& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    GradedCharacter scaled(std::int64_t s) const {
        GradedCharacter out(rank_, norm_);
        if (s == 0) return out;
        for (const auto& [k, c] : terms_) out.terms_.emplace(k, c * s);
        return out;
    }

    /// Equality of the exponential sums (normalization tags ignored).
    bool same_terms(const GradedCharacter& o) const { return rank_ == o.rank_ && terms_ == o.terms_; }

  private:
    int rank_{0};
    Normalization norm_{Normalization::Raw};
    Map terms_;
};

inline std::size_t term_budget() {
    if (const char* env = std::getenv("DEMAZURE_TERM_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v > 0) return static_cast<std::size_t>(v);
    }
    return 5000000;
}

/// Affine pairing <λ, α_i^∨> of a character key.
inline int key_pairing(const RootSystem& rs, int i, const CharKey& k) {
    if (i == 0) {
        const auto& cv = rs.coroot(rs.theta_index());
        int s = 0;
        for (int j = 0; j < rs.rank(); ++j) s += cv[j] * k.w[j];
        return k.level - s;
    }
    return k.w[i - 1];
}

/// D_i for an affine node i (0 = affine node).
inline GradedCharacter demazure_operator(const RootSystem& rs, int i, const GradedCharacter& f) {
    if (i < 0 || i > rs.rank()) throw std::invalid_argument("demazure_operator: node out of range");
    const int n = rs.rank();
    // step by -alpha_i: finite shift and grade shift
    std::array<int, kMaxRank> shift{};
    int grade_shift = 0;
    if (i == 0) {
        const auto& th = rs.theta_weight();
        for (int j = 0; j < n; ++j) shift[j] = th[j];
        grade_shift = -1;
    } else {
        for (int j = 0; j < n; ++j) shift[j] = -rs.datum().cartan[j][i - 1];
    }
    GradedCharacter out(f.rank(), f.normalization());
    auto step = [&](CharKey k, int times) {
        for (int j = 0; j < n; ++j) k.w[j] = static_cast<std::int16_t>(k.w[j] + times * shift[j]);
        k.grade += times * grade_shift;
        return k;
    };
    for (const auto& [key, c] : f.terms()) {
        const int m = key_pairing(rs, i, key);
        if (m >= 0) {
            for (int j = 0; j <= m; ++j) out.add(step(key, j), c);
        } else if (m <= -2) {
            for (int j = 1; j <= -m - 1; ++j) out.add(step(key, -j), -c);
        }
    }
    if (out.size() > term_budget()) throw CharacterError("character exceeds the term budget");
    return out;
}

/// D_{w_1} ∘ ... ∘ D_{w_l} applied to f (rightmost letter acts first).
inline GradedCharacter apply_demazure_word(const RootSystem& rs, const std::vector<int>& word, GradedCharacter f) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) f = demazure_operator(rs, *it, f);
    return f;
}

/// Shifts grades so the unique term of weight mu has grade 0 and checks the
/// normalization invariants.
inline GradedCharacter normalize_at(const GradedCharacter& raw, const FiniteWeight& mu) {
    const CharKey probe = make_key(mu, 0, 0);
    std::optional<CharKey> found;
    for (const auto& [k, c] : raw.terms()) {
        if (k.w != probe.w) continue;
        if (found) throw CharacterError("extremal weight occurs in more than one grade");
        if (c != 1) throw CharacterError("extremal weight multiplicity is not 1");
        found = k;
    }
    if (!found) throw CharacterError("extremal weight absent from character");
    GradedCharacter out(raw.rank(), Normalization::GeneratorNormalized);
    for (const auto& [k, c] : raw.terms()) {
        if (c <= 0) throw CharacterError("negative multiplicity in a Demazure character");
        CharKey nk = k;
        nk.grade -= found->grade;
        if (nk.grade < 0) throw CharacterError("negative grade after normalization");
        out.add(nk, c);
    }
    return out;
}

/// Graded character of D^k_mu, normalized at the generator.
inline GradedCharacter demazure_character(const RootSystem& rs, const FiniteWeight& mu, int k,
                                          const TieBreak& choose = {}) {
    if (k < 1) throw std::invalid_argument("demazure_character requires k >= 1");
    const auto dom = dominance_algorithm(rs, AffineWeight{mu, k, 0}, choose);
    auto raw = GradedCharacter::monomial(dom.lambda.finite, k, dom.lambda.degree);
    raw = apply_demazure_word(rs, dom.word.letters, std::move(raw));
    for (const auto& [key, c] : raw.terms())
        if (key.level != k) throw CharacterError("level changed under Demazure operators");
    return normalize_at(raw, mu);
}

/// Convolution: weights, levels and grades add.
inline GradedCharacter tensor(const std::vector<GradedCharacter>& chars) {
    if (chars.empty()) throw std::invalid_argument("tensor of an empty list");
    const auto tag = chars.front().normalization();
    for (const auto& c : chars)
        if (c.normalization() != tag) throw CharacterError("tensor of characters with mixed normalization");
    const int n = chars.front().rank();
    GradedCharacter acc = GradedCharacter::monomial(FiniteWeight::zero(n), 0, 0, tag);
    for (const auto& c : chars) {
        GradedCharacter next(n, tag);
        for (const auto& [ka, ca] : acc.terms())
            for (const auto& [kb, cb] : c.terms()) {
                CharKey k;
                for (int j = 0; j < n; ++j) k.w[j] = static_cast<std::int16_t>(ka.w[j] + kb.w[j]);
                k.level = static_cast<std::int16_t>(ka.level + kb.level);
                k.grade = ka.grade + kb.grade;
                next.add(k, ca * cb);
            }
        acc = std::move(next);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Finite-type helpers and g_0 branching

/// Reduced word of the longest element of the parabolic subgroup W_J.
/// Nodes and letters are finite nodes in affine numbering (1..rank).
inline std::vector<int> longest_word(const RootSystem& rs, const std::vector<int>& nodes) {
    FiniteWeight rho = FiniteWeight::zero(rs.rank());
    for (int j : nodes) {
        if (j < 1 || j > rs.rank()) throw std::invalid_argument("longest_word: node out of range");
        rho[j - 1] = 1;
    }
    std::vector<int> word;
    while (true) {
        int pick = -1;
        for (int j : nodes)
            if (rho[j - 1] > 0) {
                pick = j;
                break;
            }
        if (pick < 0) break;
        rho = reflect(rs, pick - 1, rho);
        word.push_back(pick);
    }
    return word;
}

inline std::vector<int> all_finite_nodes(const RootSystem& rs) {
    std::vector<int> all(rs.rank());
    for (int j = 0; j < rs.rank(); ++j) all[j] = j + 1;
    return all;
}

/// Character of the irreducible g_J-module of J-dominant highest weight lambda,
/// placed at the given level and grade.
inline GradedCharacter parabolic_character(const RootSystem& rs, const std::vector<int>& nodes,
                                           const FiniteWeight& lambda, int level, int grade) {
    auto f = GradedCharacter::monomial(lambda, level, grade);
    return apply_demazure_word(rs, longest_word(rs, nodes), std::move(f));
}

/// Weyl character of the finite-dimensional irreducible g-module V(lambda).
inline GradedCharacter weyl_character(const RootSystem& rs, const FiniteWeight& lambda) {
    if (!lambda.is_dominant()) throw std::invalid_argument("weyl_character requires a dominant weight");
    auto c = parabolic_character(rs, all_finite_nodes(rs), lambda, 0, 0);
    c.set_normalization(Normalization::GeneratorNormalized);
    return c;
}

struct BranchComponent {
    FiniteWeight highest;
    int level{0};
    int grade{0};
    std::int64_t multiplicity{0};
    std::int64_t dimension{0};  // of one copy
};

/// Decomposes a character into irreducible characters of the semisimple
/// subalgebra spanned by the given finite nodes (1..rank), grade by grade.
inline std::vector<BranchComponent> g0_branch(const RootSystem& rs, const GradedCharacter& ch,
                                              const std::vector<int>& nodes) {
    if (nodes.empty()) throw std::invalid_argument("g0_branch requires at least one node");
    for (int j : nodes)
        if (j < 1 || j > rs.rank()) throw std::invalid_argument("g0_branch: node out of range");
    GradedCharacter rest = ch;
    std::vector<BranchComponent> out;
    // Height along the chosen simple roots; strictly larger for lambda + alpha_j.
    auto height = [&](const CharKey& k) {
        const auto rc = rs.weight_to_scaled_root(k.weight(rs.rank()).coords);
        long long h = 0;
        for (int j : nodes) h += rc[j - 1];
        return h;
    };
    while (!rest.empty()) {
        const CharKey* best = nullptr;
        long long best_h = 0;
        for (const auto& [k, c] : rest.terms()) {
            long long h = height(k);
            if (!best || h > best_h || (h == best_h && k < *best)) {
                best = &k;
                best_h = h;
            }
        }
        const CharKey top = *best;
        const std::int64_t mult = rest.coefficient(top);
        const FiniteWeight lambda = top.weight(rs.rank());
        for (int j : nodes)
            if (lambda[j - 1] < 0 || mult < 0) throw CharacterError("negative residual in g0 branching");
        auto irr = parabolic_character(rs, nodes, lambda, top.level, top.grade);
        out.push_back({lambda, top.level, top.grade, mult, irr.dimension()});
        rest -= irr.scaled(mult);
        for (const auto& [k, c] : rest.terms())
            if (c < 0) throw CharacterError("negative residual in g0 branching");
    }
    std::sort(out.begin(), out.end(), [](const BranchComponent& a, const BranchComponent& b) {
        if (a.grade != b.grade) return a.grade < b.grade;
        return a.highest < b.highest;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Embedding certificates

class CharacterCache {
  public:
    explicit CharacterCache(const RootSystem& rs) : rs_(rs) {}

    const GradedCharacter& demazure(const FiniteWeight& mu, int k) {
        auto key = std::make_pair(mu.coords, k);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(key, demazure_character(rs_, mu, k)).first->second;
    }

    /// Tensor product of D^r_{mu_i}; cached on the sorted multiset of parts.
    const GradedCharacter& tensor_of(const SplitTuple& split, int r) {
        std::vector<Coords> parts;
        for (const auto& p : split.parts) parts.push_back(p.coords);
        std::sort(parts.begin(), parts.end());
        auto key = std::make_pair(parts, r);
        auto it = tensors_.find(key);
        if (it != tensors_.end()) return it->second;
        std::vector<GradedCharacter> factors;
        for (const auto& c : parts) factors.push_back(demazure(FiniteWeight(c), r));
        return tensors_.emplace(key, tensor(factors)).first->second;
    }

    const RootSystem& root_system() const { return rs_; }

  private:
    const RootSystem& rs_;
    std::map<std::pair<Coords, int>, GradedCharacter> cache_;
    std::map<std::pair<std::vector<Coords>, int>, GradedCharacter> tensors_;
};

enum class CertificateStatus { Certified, Violation };

struct EmbeddingCertificate {
    CertificateStatus status{CertificateStatus::Certified};
    bool admissible{false};
    AdmissibilityReport admissibility;
    // first failing coefficient, when status == Violation
    std::optional<FiniteWeight> weight;
    int grade{0};
    std::int64_t lhs{0};
    std::int64_t rhs{0};
    std::int64_t lhs_dimension{0};
    std::int64_t rhs_dimension{0};
    std::string reason;

    bool certified() const { return status == CertificateStatus::Certified; }
};

/// Coefficient-wise comparison char D^{rk}_mu <= char (D^r_{mu_1} ⊗ ... ⊗ D^r_{mu_k}).
inline EmbeddingCertificate embedding_certificate(CharacterCache& cache, const FiniteWeight& mu, int r,
                                                  const SplitTuple& split) {
    const auto& rs = cache.root_system();
    EmbeddingCertificate cert;
    cert.admissibility = is_r_admissible(rs, mu, split, r);
    cert.admissible = cert.admissibility.admissible_for_r;
    const int k = static_cast<int>(split.k());
    const auto& lhs = cache.demazure(mu, r * k);
    const auto& rhs = cache.tensor_of(split, r);
    cert.lhs_dimension = lhs.dimension();
    cert.rhs_dimension = rhs.dimension();

    const auto gen_l = lhs.coefficient(mu, r * k, 0);
    const auto gen_r = rhs.coefficient(mu, r * k, 0);
    if (gen_l != 1 || gen_r != 1) {
        cert.status = CertificateStatus::Violation;
        cert.weight = mu;
        cert.grade = 0;
        cert.lhs = gen_l;
        cert.rhs = gen_r;
        cert.reason = "generator coefficient is not 1";
        return cert;
    }
    for (const auto& [key, c] : lhs.sorted_terms()) {
        const auto other = rhs.coefficient(key);
        if (c > other) {
            cert.status = CertificateStatus::Violation;
            cert.weight = key.weight(rs.rank());
            cert.grade = key.grade;
            cert.lhs = c;
            cert.rhs = other;
            cert.reason = "multiplicity exceeds the tensor product";
            return cert;
        }
    }
    return cert;
}

inline EmbeddingCertificate embedding_certificate(const RootSystem& rs, const FiniteWeight& mu, int r,
                                                  const SplitTuple& split) {
    CharacterCache cache(rs);
    return embedding_certificate(cache, mu, r, split);
}

}  // namespace demazure
