// Integral weights, sign sets R^{+/-}(mu), and the affine Weyl action at a
// fixed level with exact tracking of the delta coefficient.
#pragma once

#include <functional>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "demazure/rootdata.hpp"

namespace demazure {

/// Element of P in fundamental-weight coordinates.
struct FiniteWeight {
    Coords coords;

    FiniteWeight() = default;
    explicit FiniteWeight(Coords c) : coords(std::move(c)) {}
    FiniteWeight(std::initializer_list<int> c) : coords(c) {}

    static FiniteWeight zero(int rank) { return FiniteWeight(Coords(rank, 0)); }

    int rank() const { return static_cast<int>(coords.size()); }
    int operator[](std::size_t i) const { return coords[i]; }
    int& operator[](std::size_t i) { return coords[i]; }

    bool is_dominant() const {
        for (int c : coords)
            if (c < 0) return false;
        return true;
    }

    FiniteWeight& operator+=(const FiniteWeight& o) {
        if (o.rank() != rank()) throw RootDataError("weight rank mismatch");
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
        return *this;
    }
    FiniteWeight& operator-=(const FiniteWeight& o) {
        if (o.rank() != rank()) throw RootDataError("weight rank mismatch");
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
        return *this;
    }
    friend FiniteWeight operator+(FiniteWeight a, const FiniteWeight& b) { return a += b; }
    friend FiniteWeight operator-(FiniteWeight a, const FiniteWeight& b) { return a -= b; }
    friend FiniteWeight operator*(int s, FiniteWeight a) {
        for (auto& c : a.coords) c *= s;
        return a;
    }

    auto operator<=>(const FiniteWeight&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const FiniteWeight& w) {
    os << '(';
    for (std::size_t i = 0; i < w.coords.size(); ++i) os << (i ? "," : "") << w.coords[i];
    return os << ')';
}

inline int pairing(const RootSystem& rs, const FiniteWeight& mu, std::size_t root_idx) {
    return rs.pairing(mu.coords, root_idx);
}
inline int pairing(const RootSystem& rs, const FiniteWeight& mu, const Root& alpha) {
    return rs.pairing(mu.coords, alpha);
}

inline FiniteWeight reflect(const RootSystem& rs, int i, const FiniteWeight& mu) {
    return FiniteWeight(rs.reflect_weight(i, mu.coords));
}

/// mu + k Lambda_0 + degree * delta.
struct AffineWeight {
    FiniteWeight finite;
    int level{0};
    int degree{0};

    auto operator<=>(const AffineWeight&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const AffineWeight& w) {
    return os << w.finite << " + " << w.level << "L0 + " << w.degree << "d";
}

/// Word in the affine simple reflections; node 0 is the affine node.
struct WeylWord {
    std::vector<int> letters;

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    bool operator==(const WeylWord&) const = default;
};

struct SignSets {
    std::vector<std::size_t> plus;   // mu(h_alpha) >= 0
    std::vector<std::size_t> minus;  // mu(h_alpha) <= 0
};

/// (R^+(mu), R^-(mu)) as positive-root indices; orthogonal roots appear in both.
inline SignSets sign_sets(const RootSystem& rs, const FiniteWeight& mu) {
    SignSets out;
    for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
        int v = rs.pairing(mu.coords, k);
        if (v >= 0) out.plus.push_back(k);
        if (v <= 0) out.minus.push_back(k);
    }
    return out;
}

/// <w, alpha_i^vee> for the affine simple coroots; alpha_0^vee = c - h_theta.
inline int affine_pairing(const RootSystem& rs, int i, const AffineWeight& w) {
    if (i == 0) return w.level - rs.pairing(w.finite.coords, rs.theta_index());
    return w.finite.coords.at(i - 1);
}

inline AffineWeight affine_reflect(const RootSystem& rs, int i, AffineWeight w) {
    if (i < 0 || i > rs.rank()) throw RootDataError("affine node index out of range");
    if (i == 0) {
        const int m = affine_pairing(rs, 0, w);
        const auto& th = rs.theta_weight();
        for (int j = 0; j < rs.rank(); ++j) w.finite.coords[j] += m * th[j];
        w.degree -= m;
        return w;
    }
    w.finite = reflect(rs, i - 1, w.finite);
    return w;
}

inline bool is_affine_dominant(const RootSystem& rs, const AffineWeight& w) {
    for (int i = 0; i <= rs.rank(); ++i)
        if (affine_pairing(rs, i, w) < 0) return false;
    return true;
}

/// Applies s_{w_1} s_{w_2} ... s_{w_l} to x (rightmost letter acts first).
inline AffineWeight apply_word(const RootSystem& rs, const WeylWord& word, AffineWeight x) {
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) x = affine_reflect(rs, *it, x);
    return x;
}

struct DominanceResult {
    AffineWeight lambda;
    WeylWord word;  // input = s_{word[0]} ... s_{word[l-1]} lambda
};

/// Picks the next reflection among the nodes with negative pairing.
using TieBreak = std::function<int(const std::vector<int>& negative_nodes)>;

/// Greedy walk to the dominant chamber. The default rule reflects at the
/// smallest node with negative pairing. Each step lowers the length of the
/// remaining Weyl group element, so the recorded word is reduced.
inline DominanceResult dominance_algorithm(const RootSystem& rs, const AffineWeight& input,
                                           const TieBreak& choose = {}) {
    rs.check_weight(input.finite.coords);
    if (input.level < 1) throw std::invalid_argument("dominance_algorithm requires level >= 1");
    DominanceResult res{input, {}};
    std::vector<int> neg;
    while (true) {
        neg.clear();
        for (int i = 0; i <= rs.rank(); ++i)
            if (affine_pairing(rs, i, res.lambda) < 0) neg.push_back(i);
        if (neg.empty()) break;
        int i = choose ? choose(neg) : neg.front();
        res.lambda = affine_reflect(rs, i, res.lambda);
        res.word.letters.push_back(i);
    }
    return res;
}

/// Finite Weyl group: greedy conjugation of mu into the dominant chamber.
/// Returns lambda and sigma (as a word, sigma = s_{w_0} ... s_{w_l}) with sigma(mu) = lambda.
struct Conjugation {
    FiniteWeight lambda;
    std::vector<int> sigma;
};

inline Conjugation to_dominant(const RootSystem& rs, FiniteWeight mu) {
    rs.check_weight(mu.coords);
    std::vector<int> steps;
    while (true) {
        int i = -1;
        for (int j = 0; j < rs.rank(); ++j)
            if (mu[j] < 0) {
                i = j;
                break;
            }
        if (i < 0) break;
        mu = reflect(rs, i, mu);
        steps.push_back(i);
    }
    return {mu, std::vector<int>(steps.rbegin(), steps.rend())};
}

/// sigma^{-1}(lambda) for sigma = s_{w_0} ... s_{w_l}.
inline FiniteWeight apply_inverse(const RootSystem& rs, const std::vector<int>& sigma, FiniteWeight lambda) {
    for (int i : sigma) lambda = reflect(rs, i, lambda);
    return lambda;
}

/// sigma(mu) for sigma = s_{w_0} ... s_{w_l}.
inline FiniteWeight apply_finite_word(const RootSystem& rs, const std::vector<int>& sigma, FiniteWeight mu) {
    for (auto it = sigma.rbegin(); it != sigma.rend(); ++it) mu = reflect(rs, *it, mu);
    return mu;
}

}  // namespace demazure
