// Exact root-system data for the finite simple types A-G.
//
// Conventions: simple roots alpha_1..alpha_n (Bourbaki numbering, stored
// 0-based), roots in simple-root coordinates, weights in fundamental-weight
// coordinates. cartan(i, j) = <alpha_j, alpha_i^vee>, so the i-th fundamental
// coordinate of a root beta = sum_j c_j alpha_j is sum_j cartan(i, j) c_j.
// The invariant form is normalised so that the highest root has length 2,
// which gives d_alpha = 2 / (alpha, alpha) in {1, 2, 3}.
#pragma once

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace demazure {

using Coords = std::vector<int>;

class RootDataError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

inline Family parse_family(const std::string& s) {
    if (s.size() != 1) throw RootDataError("unknown Lie type '" + s + "'");
    switch (std::toupper(static_cast<unsigned char>(s[0]))) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: throw RootDataError("unknown Lie type '" + s + "'");
    }
}

inline char family_letter(Family f) { return static_cast<char>(f); }

/// Cartan matrix plus squared root lengths of the simple roots.
struct CartanDatum {
    Family family{Family::A};
    int rank{0};
    std::vector<std::vector<int>> cartan;  // cartan[i][j] = <alpha_j, alpha_i^vee>
    std::vector<int> symmetrizers;         // (alpha_i, alpha_i) / min_j (alpha_j, alpha_j)

    int operator()(int i, int j) const { return cartan[i][j]; }

    /// (alpha_i, alpha_j) in units where the shortest simple root has length 2.
    int gram(int i, int j) const { return symmetrizers[i] * cartan[i][j]; }
};

inline CartanDatum make_cartan_datum(Family family, int rank) {
    auto bad = [&] {
        std::ostringstream os;
        os << "invalid simple type " << family_letter(family) << rank;
        return RootDataError(os.str());
    };
    if (rank < 1) throw bad();
    switch (family) {
    case Family::A: break;
    case Family::B:
    case Family::C:
        if (rank < 2) throw bad();
        break;
    case Family::D:
        if (rank < 4) throw bad();
        break;
    case Family::E:
        if (rank < 6 || rank > 8) throw bad();
        break;
    case Family::F:
        if (rank != 4) throw bad();
        break;
    case Family::G:
        if (rank != 2) throw bad();
        break;
    }

    CartanDatum cd;
    cd.family = family;
    cd.rank = rank;
    cd.cartan.assign(rank, std::vector<int>(rank, 0));
    cd.symmetrizers.assign(rank, 1);
    auto& a = cd.cartan;
    for (int i = 0; i < rank; ++i) a[i][i] = 2;
    auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };

    const int n = rank;
    switch (family) {
    case Family::A:
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        break;
    case Family::B:
        // alpha_n short
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        a[n - 1][n - 2] = -2;
        for (int i = 0; i + 1 < n; ++i) cd.symmetrizers[i] = 2;
        break;
    case Family::C:
        // alpha_n long
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        a[n - 2][n - 1] = -2;
        cd.symmetrizers[n - 1] = 2;
        break;
    case Family::D:
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
        link(n - 3, n - 1);
        break;
    case Family::E:
        // Bourbaki: 1-3-4-5-6-..., 2 attached to 4
        link(0, 2);
        link(1, 3);
        for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
        break;
    case Family::F:
        // 1 - 2 => 3 - 4, alpha_1, alpha_2 long
        link(0, 1);
        link(2, 3);
        a[1][2] = -1;
        a[2][1] = -2;
        cd.symmetrizers = {2, 2, 1, 1};
        break;
    case Family::G:
        // alpha_1 short, alpha_2 long
        a[0][1] = -3;
        a[1][0] = -1;
        cd.symmetrizers = {1, 3};
        break;
    }
    return cd;
}

/// A root in simple-root coordinates.
struct Root {
    Coords coords;

    bool positive() const {
        return std::any_of(coords.begin(), coords.end(), [](int c) { return c > 0; });
    }
    int height() const { return std::accumulate(coords.begin(), coords.end(), 0); }
    Root operator-() const {
        Root r{coords};
        for (auto& c : r.coords) c = -c;
        return r;
    }
    auto operator<=>(const Root&) const = default;
};

/// Human-readable name such as "a1+a2" or "2a1+a2".
inline std::string root_name(const Root& r) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < r.coords.size(); ++j) {
        int c = r.coords[j];
        if (c == 0) continue;
        if (c < 0) os << '-';
        else if (!first) os << '+';
        if (std::abs(c) != 1) os << std::abs(c);
        os << 'a' << (j + 1);
        first = false;
    }
    if (first) os << '0';
    return os.str();
}

inline int classical_positive_root_count(Family f, int n) {
    switch (f) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
    }
    return -1;
}

class RootSystem {
  public:
    RootSystem(Family family, int rank) : datum_(make_cartan_datum(family, rank)) { build(); }
    explicit RootSystem(CartanDatum datum) : datum_(std::move(datum)) { build(); }

    const CartanDatum& datum() const { return datum_; }
    Family family() const { return datum_.family; }
    int rank() const { return datum_.rank; }
    std::string name() const { return std::string(1, family_letter(datum_.family)) + std::to_string(datum_.rank); }

    /// Positive roots sorted by height, then lexicographically.
    const std::vector<Root>& positive_roots() const { return roots_; }
    std::size_t num_positive_roots() const { return roots_.size(); }
    const Root& root(std::size_t idx) const { return roots_.at(idx); }
    const Root& theta() const { return roots_.back(); }
    std::size_t theta_index() const { return roots_.size() - 1; }

    std::optional<std::size_t> index_of(const Root& r) const {
        auto it = index_.find(r.coords);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    std::size_t simple_root_index(int i) const { return simple_idx_.at(i); }

    /// d_alpha = 2 / (alpha, alpha) with (theta, theta) = 2.
    int d(std::size_t idx) const { return d_.at(idx); }
    int d(const Root& r) const { return d_.at(require(r)); }

    /// (alpha, alpha) in the internal integer units (shortest simple root = 2).
    int norm2(const Coords& c) const {
        int s = 0;
        for (int i = 0; i < rank(); ++i)
            for (int j = 0; j < rank(); ++j) s += c[i] * datum_.gram(i, j) * c[j];
        return s;
    }

    /// Coefficients of alpha^vee in the basis of simple coroots.
    const Coords& coroot(std::size_t idx) const { return coroots_.at(idx); }

    /// mu(h_alpha) for mu in fundamental coordinates.
    int pairing(const Coords& mu, std::size_t idx) const {
        check_weight(mu);
        const auto& cv = coroots_[idx];
        int s = 0;
        for (int j = 0; j < rank(); ++j) s += cv[j] * mu[j];
        return s;
    }
    int pairing(const Coords& mu, const Root& alpha) const { return pairing(mu, require(alpha)); }

    /// <beta, alpha_i^vee> for a root-lattice element in simple-root coordinates.
    int root_pairing_simple(const Coords& beta, int i) const {
        int s = 0;
        for (int j = 0; j < rank(); ++j) s += datum_.cartan[i][j] * beta[j];
        return s;
    }

    /// Root-lattice element (simple-root coordinates) expressed in fundamental coordinates.
    Coords root_to_weight(const Coords& beta) const {
        Coords w(rank(), 0);
        for (int i = 0; i < rank(); ++i) w[i] = root_pairing_simple(beta, i);
        return w;
    }
    Coords simple_root_weight(int i) const {
        Coords w(rank());
        for (int j = 0; j < rank(); ++j) w[j] = datum_.cartan[j][i];
        return w;
    }
    const Coords& theta_weight() const { return theta_weight_; }

    /// s_i on a weight in fundamental coordinates.
    Coords reflect_weight(int i, Coords mu) const {
        check_weight(mu);
        const int c = mu[i];
        if (c == 0) return mu;
        for (int j = 0; j < rank(); ++j) mu[j] -= c * datum_.cartan[j][i];
        return mu;
    }
    /// s_i on a root-lattice element in simple-root coordinates.
    Coords reflect_root(int i, Coords beta) const {
        beta[i] -= root_pairing_simple(beta, i);
        return beta;
    }

    void check_weight(const Coords& mu) const {
        if (static_cast<int>(mu.size()) != rank()) {
            std::ostringstream os;
            os << "weight has " << mu.size() << " coordinates, rank is " << rank();
            throw RootDataError(os.str());
        }
    }

    /// det(C) times the root-lattice coordinates of mu (always integral).
    Coords weight_to_scaled_root(const Coords& mu) const {
        Coords out(rank(), 0);
        for (int i = 0; i < rank(); ++i)
            for (int j = 0; j < rank(); ++j) out[i] += inv_cartan_scaled_[i][j] * mu[j];
        return out;
    }
    int cartan_determinant() const { return det_; }

  private:
    std::size_t require(const Root& r) const {
        auto idx = index_of(r);
        if (!idx) throw RootDataError("not a positive root: " + root_name(r));
        return *idx;
    }

    void build() {
        const int n = rank();
        // Closure by root strings: beta + alpha_i is a root iff q > 0 where
        // p - q = <beta, alpha_i^vee> and p is the length of the downward string.
        std::vector<Coords> all;
        std::map<Coords, bool> seen;
        std::vector<Coords> layer;
        for (int i = 0; i < n; ++i) {
            Coords e(n, 0);
            e[i] = 1;
            layer.push_back(e);
            seen[e] = true;
        }
        while (!layer.empty()) {
            std::vector<Coords> next;
            for (const auto& beta : layer) {
                all.push_back(beta);
                for (int i = 0; i < n; ++i) {
                    int p = 0;
                    Coords down = beta;
                    while (true) {
                        down[i] -= 1;
                        if (!seen.count(down)) break;
                        ++p;
                    }
                    int q = p - root_pairing_simple(beta, i);
                    if (q > 0) {
                        Coords up = beta;
                        up[i] += 1;
                        if (!seen.count(up)) {
                            seen[up] = true;
                            next.push_back(up);
                        }
                    }
                }
            }
            std::sort(next.begin(), next.end());
            layer = std::move(next);
        }
        std::stable_sort(all.begin(), all.end(), [](const Coords& x, const Coords& y) {
            int hx = std::accumulate(x.begin(), x.end(), 0);
            int hy = std::accumulate(y.begin(), y.end(), 0);
            if (hx != hy) return hx < hy;
            return x < y;
        });
        if (static_cast<int>(all.size()) != classical_positive_root_count(family(), n))
            throw RootDataError("positive root closure produced an unexpected count for " + name());
        // unique root of maximal height
        int top = std::accumulate(all.back().begin(), all.back().end(), 0);
        if (all.size() >= 2 && std::accumulate(all[all.size() - 2].begin(), all[all.size() - 2].end(), 0) == top)
            throw RootDataError("highest root is not unique");

        for (std::size_t k = 0; k < all.size(); ++k) {
            roots_.push_back(Root{all[k]});
            index_[all[k]] = k;
        }
        for (int i = 0; i < n; ++i) {
            Coords e(n, 0);
            e[i] = 1;
            simple_idx_.push_back(index_.at(e));
        }
        const int theta_norm = norm2(roots_.back().coords);
        for (const auto& r : roots_) {
            int nn = norm2(r.coords);
            if (theta_norm % nn != 0) throw RootDataError("non-integral d_alpha");
            d_.push_back(theta_norm / nn);
            Coords cv(n);
            for (int j = 0; j < n; ++j) {
                int num = r.coords[j] * norm2(simple(j));
                if (num % nn != 0) throw RootDataError("non-integral coroot");
                cv[j] = num / nn;
            }
            coroots_.push_back(std::move(cv));
        }
        theta_weight_ = root_to_weight(roots_.back().coords);
        build_inverse();
    }

    Coords simple(int j) const {
        Coords e(rank(), 0);
        e[j] = 1;
        return e;
    }

    // Integer adjugate of the Cartan matrix via fraction-free elimination.
    void build_inverse() {
        const int n = rank();
        // weight mu (fundamental coords) = C * beta (root coords), i.e. mu_i = sum_j cartan[i][j] beta_j
        std::vector<std::vector<long long>> m(n, std::vector<long long>(2 * n, 0));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) m[i][j] = datum_.cartan[i][j];
            m[i][n + i] = 1;
        }
        // Gauss-Jordan over rationals represented by row scaling.
        for (int col = 0; col < n; ++col) {
            int piv = col;
            while (m[piv][col] == 0) ++piv;
            std::swap(m[piv], m[col]);
            for (int r = 0; r < n; ++r) {
                if (r == col || m[r][col] == 0) continue;
                long long a = m[col][col], b = m[r][col];
                for (int c = 0; c < 2 * n; ++c) m[r][c] = m[r][c] * a - m[col][c] * b;
                long long g = 0;
                for (int c = 0; c < 2 * n; ++c) g = std::gcd(g, m[r][c]);
                if (g > 1)
                    for (int c = 0; c < 2 * n; ++c) m[r][c] /= g;
            }
        }
        // determinant: product of pivots is not reliable after scaling; compute directly.
        det_ = static_cast<int>(determinant());
        inv_cartan_scaled_.assign(n, Coords(n, 0));
        for (int i = 0; i < n; ++i) {
            long long piv = m[i][i];
            for (int j = 0; j < n; ++j) {
                long long num = m[i][n + j] * det_;
                if (num % piv != 0) throw RootDataError("inverse Cartan scaling failed");
                inv_cartan_scaled_[i][j] = static_cast<int>(num / piv);
            }
        }
    }

    long long determinant() const {
        const int n = rank();
        std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] = datum_.cartan[i][j];
        // Bareiss
        long long prev = 1;
        int sign = 1;
        for (int k = 0; k < n - 1; ++k) {
            if (m[k][k] == 0) {
                int s = k + 1;
                while (s < n && m[s][k] == 0) ++s;
                if (s == n) return 0;
                std::swap(m[s], m[k]);
                sign = -sign;
            }
            for (int i = k + 1; i < n; ++i)
                for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            prev = m[k][k];
        }
        return sign * m[n - 1][n - 1];
    }

    CartanDatum datum_;
    std::vector<Root> roots_;
    std::map<Coords, std::size_t> index_;
    std::vector<std::size_t> simple_idx_;
    std::vector<int> d_;
    std::vector<Coords> coroots_;
    Coords theta_weight_;
    std::vector<Coords> inv_cartan_scaled_;
    int det_{1};
};

}  // namespace demazure
