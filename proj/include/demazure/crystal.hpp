// Littelmann path crystals for finite-type dominant weights.
//
// A path is stored as its sequence of displacements. Each displacement is a
// primitive integral direction times a positive rational scale, so collinear
// neighbours merge to a unique canonical form. Root operators only see the
// image curve, so the time parametrization is not kept.
//
// Node labels in this module are 1-based finite nodes, as in the diagrams.
#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "demazure/rootdata.hpp"
#include "demazure/weights.hpp"

namespace demazure {

using Rational = boost::rational<long long>;

class CrystalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Segment {
    Coords dir;  // primitive
    Rational scale;

    bool operator==(const Segment& o) const { return dir == o.dir && scale == o.scale; }
    bool operator<(const Segment& o) const {
        if (dir != o.dir) return dir < o.dir;
        return scale < o.scale;
    }
};

class Path {
  public:
    Path() = default;
    explicit Path(int rank) : rank_(rank) {}

    /// Straight line from 0 to lambda.
    static Path straight(const FiniteWeight& lambda) {
        Path p(lambda.rank());
        p.push(lambda.coords, Rational(1));
        return p;
    }

    int rank() const { return rank_; }
    const std::vector<Segment>& segments() const { return segs_; }

    /// Appends scale * v, splitting off the gcd so the direction is primitive.
    void push(const Coords& v, Rational scale) {
        if (scale <= 0) return;
        int g = 0;
        for (int c : v) g = std::gcd(g, std::abs(c));
        if (g == 0) return;
        Coords dir(v.size());
        for (std::size_t j = 0; j < v.size(); ++j) dir[j] = v[j] / g;
        scale *= g;
        if (!segs_.empty() && segs_.back().dir == dir) {
            segs_.back().scale += scale;
        } else {
            segs_.push_back({std::move(dir), scale});
        }
    }

    /// Endpoint; integral for every path generated from a straight line.
    FiniteWeight weight() const {
        std::vector<Rational> acc(rank_, Rational(0));
        for (const auto& s : segs_)
            for (int j = 0; j < rank_; ++j) acc[j] += s.scale * s.dir[j];
        Coords out(rank_);
        for (int j = 0; j < rank_; ++j) {
            if (acc[j].denominator() != 1) throw CrystalError("path endpoint is not integral");
            out[j] = static_cast<int>(acc[j].numerator());
        }
        return FiniteWeight(std::move(out));
    }

    /// Values of h(t) = <p(t), alpha_i^vee> at the breakpoints (node i 0-based).
    std::vector<Rational> heights(int i) const {
        std::vector<Rational> h{Rational(0)};
        for (const auto& s : segs_) h.push_back(h.back() + s.scale * s.dir[i]);
        return h;
    }

    bool operator==(const Path& o) const { return rank_ == o.rank_ && segs_ == o.segs_; }
    bool operator<(const Path& o) const {
        if (rank_ != o.rank_) return rank_ < o.rank_;
        return std::lexicographical_compare(segs_.begin(), segs_.end(), o.segs_.begin(), o.segs_.end());
    }

    friend Path concat(const Path& a, const Path& b) {
        if (a.rank_ != b.rank_) throw CrystalError("concatenating paths of different rank");
        Path out = a;
        for (const auto& s : b.segs_) out.push(s.dir, s.scale);
        return out;
    }

  private:
    int rank_{0};
    std::vector<Segment> segs_;

    friend std::optional<Path> root_operator_f(const RootSystem&, int, const Path&);
    friend std::optional<Path> root_operator_e(const RootSystem&, int, const Path&);
};

inline std::ostream& operator<<(std::ostream& os, const Path& p) {
    os << '[';
    bool first = true;
    for (const auto& s : p.segments()) {
        if (!first) os << ' ';
        first = false;
        os << s.scale << '*' << FiniteWeight(s.dir);
    }
    return os << ']';
}

namespace detail {

/// Segments of p with a forced breakpoint inside segment k at the given fraction.
inline std::vector<Segment> cut(const std::vector<Segment>& segs, std::size_t k, Rational fraction) {
    std::vector<Segment> out;
    for (std::size_t j = 0; j < segs.size(); ++j) {
        if (j == k && fraction > 0 && fraction < 1) {
            out.push_back({segs[j].dir, segs[j].scale * fraction});
            out.push_back({segs[j].dir, segs[j].scale * (Rational(1) - fraction)});
        } else {
            out.push_back(segs[j]);
        }
    }
    return out;
}

inline Path assemble(int rank, const RootSystem& rs, int i, const std::vector<Segment>& segs, std::size_t b0,
                     std::size_t b1) {
    Path out(rank);
    for (std::size_t j = 0; j < segs.size(); ++j) {
        if (j >= b0 && j < b1)
            out.push(rs.reflect_weight(i, segs[j].dir), segs[j].scale);
        else
            out.push(segs[j].dir, segs[j].scale);
    }
    return out;
}

}  // namespace detail

/// Lowering operator f_i (node i is 0-based here). Null when phi_i(p) = 0.
inline std::optional<Path> root_operator_f(const RootSystem& rs, int i, const Path& p) {
    const auto h = p.heights(i);
    const Rational M = *std::min_element(h.begin(), h.end());
    if (h.back() - M < 1) return std::nullopt;
    std::size_t t0 = 0;
    for (std::size_t b = 0; b < h.size(); ++b)
        if (h[b] == M) t0 = b;
    // first time after t0 with h = M + 1; h > M on (t0, 1]
    const Rational target = M + 1;
    for (std::size_t k = t0; k < p.segs_.size(); ++k) {
        if (h[k + 1] < target) continue;
        const Rational rise = h[k + 1] - h[k];
        const Rational frac = (target - h[k]) / rise;
        auto segs = detail::cut(p.segs_, k, frac);
        return detail::assemble(p.rank_, rs, i, segs, t0, k + 1);
    }
    throw CrystalError("root_operator_f: level M+1 not reached");
}

/// Raising operator e_i (node i is 0-based here). Null when epsilon_i(p) = 0.
inline std::optional<Path> root_operator_e(const RootSystem& rs, int i, const Path& p) {
    const auto h = p.heights(i);
    const Rational M = *std::min_element(h.begin(), h.end());
    if (M > -1) return std::nullopt;
    std::size_t t1 = 0;
    while (h[t1] != M) ++t1;
    // last time before t1 with h = M + 1; h > M on [0, t1)
    const Rational target = M + 1;
    for (std::size_t k = t1; k-- > 0;) {
        if (h[k] < target) continue;
        const Rational drop = h[k] - h[k + 1];
        const Rational frac = (h[k] - target) / drop;  // position of the cut inside segment k
        auto segs = detail::cut(p.segs_, k, frac);
        const bool split = frac > 0 && frac < 1;
        const std::size_t start = split ? k + 1 : k;
        const std::size_t end = split ? t1 + 1 : t1;
        return detail::assemble(p.rank_, rs, i, segs, start, end);
    }
    throw CrystalError("root_operator_e: level M+1 not reached");
}

/// String lengths phi_i and epsilon_i (node i 0-based).
inline int phi(const Path& p, int i) {
    const auto h = p.heights(i);
    const Rational M = *std::min_element(h.begin(), h.end());
    const Rational v = h.back() - M;
    if (v.denominator() != 1) throw CrystalError("non-integral string length");
    return static_cast<int>(v.numerator());
}
inline int epsilon(const Path& p, int i) {
    const auto h = p.heights(i);
    const Rational M = *std::min_element(h.begin(), h.end());
    if (M.denominator() != 1) throw CrystalError("non-integral string length");
    return static_cast<int>(-M.numerator());
}

// ---------------------------------------------------------------------------

struct CrystalEdge {
    int source;
    int target;
    int label;  // 1-based finite node

    auto operator<=>(const CrystalEdge&) const = default;
};

inline std::size_t vertex_budget() {
    if (const char* env = std::getenv("DEMAZURE_VERTEX_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v > 0) return static_cast<std::size_t>(v);
    }
    return 1000000;
}

class CrystalGraph {
  public:
    CrystalGraph() = default;
    explicit CrystalGraph(const RootSystem& rs) : rs_(&rs) {}

    const RootSystem& root_system() const { return *rs_; }
    const std::vector<Path>& vertices() const { return verts_; }
    const std::vector<CrystalEdge>& edges() const { return edges_; }
    std::optional<int> highest() const { return highest_; }
    std::size_t size() const { return verts_.size(); }

    std::optional<int> find(const Path& p) const {
        auto it = index_.find(p);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    int add_vertex(const Path& p) {
        auto [it, inserted] = index_.emplace(p, static_cast<int>(verts_.size()));
        if (!inserted) throw CrystalError("duplicate crystal vertex");
        verts_.push_back(p);
        return it->second;
    }
    void set_highest(std::optional<int> v) { highest_ = v; }
    void add_edge(int s, int t, int label) { edges_.push_back({s, t, label}); }

    /// Recomputes all edges among the current vertices from the root operators.
    void close_edges() {
        edges_.clear();
        for (int v = 0; v < static_cast<int>(verts_.size()); ++v)
            for (int i = 0; i < rs_->rank(); ++i)
                if (auto f = root_operator_f(*rs_, i, verts_[v]))
                    if (auto t = find(*f)) edges_.push_back({v, *t, i + 1});
        std::sort(edges_.begin(), edges_.end());
    }

    /// Full subgraph on the given vertex indices (order kept).
    CrystalGraph induced(const std::vector<int>& keep) const {
        CrystalGraph g(*rs_);
        std::map<int, int> remap;
        for (int v : keep) remap[v] = g.add_vertex(verts_[v]);
        for (const auto& e : edges_) {
            auto a = remap.find(e.source), b = remap.find(e.target);
            if (a != remap.end() && b != remap.end()) g.edges_.push_back({a->second, b->second, e.label});
        }
        std::sort(g.edges_.begin(), g.edges_.end());
        if (highest_) {
            auto h = remap.find(*highest_);
            if (h != remap.end()) g.highest_ = h->second;
        }
        return g;
    }

    std::vector<FiniteWeight> weights() const {
        std::vector<FiniteWeight> w;
        for (const auto& p : verts_) w.push_back(p.weight());
        return w;
    }

    /// Multiset of labels, as a map label -> count.
    std::map<int, int> label_counts() const {
        std::map<int, int> m;
        for (const auto& e : edges_) ++m[e.label];
        return m;
    }

  private:
    const RootSystem* rs_{nullptr};
    std::vector<Path> verts_;
    std::map<Path, int> index_;
    std::vector<CrystalEdge> edges_;
    std::optional<int> highest_;
};

/// Closure of the straight path pi_lambda under all f_i (BFS order).
inline CrystalGraph build_crystal(const RootSystem& rs, const FiniteWeight& lambda, std::size_t budget = 0) {
    rs.check_weight(lambda.coords);
    if (!lambda.is_dominant()) throw std::invalid_argument("build_crystal requires a dominant weight");
    if (budget == 0) budget = vertex_budget();
    CrystalGraph g(rs);
    std::queue<int> todo;
    todo.push(g.add_vertex(Path::straight(lambda)));
    g.set_highest(0);
    while (!todo.empty()) {
        const int v = todo.front();
        todo.pop();
        for (int i = 0; i < rs.rank(); ++i) {
            auto f = root_operator_f(rs, i, g.vertices()[v]);
            if (!f) continue;
            auto t = g.find(*f);
            if (!t) {
                if (g.size() >= budget) throw CrystalError("crystal exceeds the vertex budget");
                t = g.add_vertex(*f);
                todo.push(*t);
            }
            g.add_edge(v, *t, i + 1);
        }
    }
    g.close_edges();
    return g;
}

/// Tensor product by concatenation p1 * p2 of every pair; edges are the root
/// operators on the concatenations, kept when the target lies in the product.
inline CrystalGraph tensor(const CrystalGraph& b1, const CrystalGraph& b2) {
    const auto& rs = b1.root_system();
    if (&rs != &b2.root_system() && rs.name() != b2.root_system().name())
        throw CrystalError("tensor of crystals over different root systems");
    CrystalGraph g(rs);
    for (const auto& p : b1.vertices())
        for (const auto& q : b2.vertices()) g.add_vertex(concat(p, q));
    if (b1.highest() && b2.highest())
        g.set_highest(g.find(concat(b1.vertices()[*b1.highest()], b2.vertices()[*b2.highest()])));
    g.close_edges();
    return g;
}

/// Vertex reached from the highest vertex by f^max along the word, rightmost
/// letter first (letters are 1-based nodes).
inline int extremal_vertex(const CrystalGraph& b, const std::vector<int>& word) {
    const auto& rs = b.root_system();
    if (!b.highest()) throw CrystalError("crystal has no highest vertex");
    Path p = b.vertices()[*b.highest()];
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const int i = *it;
        if (i < 1 || i > rs.rank()) throw std::invalid_argument("word letter is not a finite node");
        while (auto f = root_operator_f(rs, i - 1, p)) p = *f;
    }
    auto v = b.find(p);
    if (!v) throw CrystalError("extremal vertex not found");
    return *v;
}

/// Vertices reachable from start by raising operators.
inline std::vector<int> raising_closure(const CrystalGraph& b, int start) {
    const auto& rs = b.root_system();
    std::set<int> seen{start};
    std::queue<int> todo;
    todo.push(start);
    while (!todo.empty()) {
        const int v = todo.front();
        todo.pop();
        for (int i = 0; i < rs.rank(); ++i) {
            auto e = root_operator_e(rs, i, b.vertices()[v]);
            if (!e) continue;
            auto t = b.find(*e);
            if (!t) throw CrystalError("raising operator leaves the crystal");
            if (seen.insert(*t).second) todo.push(*t);
        }
    }
    return {seen.begin(), seen.end()};
}

/// Demazure crystal B_w: all f_{w_1}^{a_1} ... f_{w_l}^{a_l} applied to the
/// highest vertex. It contains the extremal vertex and is closed under
/// raising operators, but need not be generated from the extremal vertex by
/// them (B(w1+w2) in A2 with word [2,1] is a counterexample).
inline CrystalGraph demazure_subcrystal(const CrystalGraph& b, const std::vector<int>& word) {
    const auto& rs = b.root_system();
    const int ext = extremal_vertex(b, word);
    std::set<int> cur{*b.highest()};
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        std::set<int> next;
        for (int v : cur) {
            Path p = b.vertices()[v];
            next.insert(v);
            while (auto f = root_operator_f(rs, *it - 1, p)) {
                auto t = b.find(*f);
                if (!t) throw CrystalError("lowering operator leaves the crystal");
                next.insert(*t);
                p = *f;
            }
        }
        cur = std::move(next);
    }
    if (!cur.count(ext)) throw CrystalError("extremal vertex missing from the Demazure crystal");
    return b.induced(std::vector<int>(cur.begin(), cur.end()));
}

inline int unique_vertex_of_weight(const CrystalGraph& b, const FiniteWeight& wt) {
    std::optional<int> found;
    for (int v = 0; v < static_cast<int>(b.size()); ++v)
        if (b.vertices()[v].weight() == wt) {
            if (found) throw CrystalError("weight occurs more than once in the crystal");
            found = v;
        }
    if (!found) throw CrystalError("weight absent from the crystal");
    return *found;
}

namespace detail {

inline std::vector<std::vector<int>> components(const CrystalGraph& b) {
    const int n = static_cast<int>(b.size());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : b.edges()) parent[root(e.source)] = root(e.target);
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < n; ++v) groups[root(v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& [r, vs] : groups) out.push_back(std::move(vs));
    return out;
}

}  // namespace detail

/// Undirected connected component containing the unique vertex of the given weight.
inline CrystalGraph component_of(const CrystalGraph& b, const FiniteWeight& wt) {
    const int v = unique_vertex_of_weight(b, wt);
    for (auto& comp : detail::components(b))
        if (std::binary_search(comp.begin(), comp.end(), v)) {
            auto g = b.induced(comp);
            if (!g.highest()) {
                // mark the unique source if there is one
                std::vector<int> indeg(g.size(), 0);
                for (const auto& e : g.edges()) ++indeg[e.target];
                std::optional<int> src;
                int sources = 0;
                for (int u = 0; u < static_cast<int>(g.size()); ++u)
                    if (indeg[u] == 0) {
                        src = u;
                        ++sources;
                    }
                if (sources == 1) g.set_highest(src);
            }
            return g;
        }
    throw CrystalError("component not found");
}

/// Deletes edges whose label is not in nodes (1-based); vertices are kept.
inline CrystalGraph filter_arrows(const CrystalGraph& b, const std::set<int>& nodes) {
    CrystalGraph g(b.root_system());
    for (const auto& p : b.vertices()) g.add_vertex(p);
    g.set_highest(b.highest());
    for (const auto& e : b.edges())
        if (nodes.count(e.label)) g.add_edge(e.source, e.target, e.label);
    return g;
}

struct CrystalPiece {
    Coords restricted;       // highest weight paired with the kept nodes
    FiniteWeight highest;    // full weight of the source vertex (first occurrence)
    int size{0};             // vertices per component
    int count{0};
};

/// g_0 decomposition: components after filtering, keyed by the restricted
/// weight of their unique source.
inline std::vector<CrystalPiece> crystal_decomposition(const CrystalGraph& b, const std::set<int>& nodes) {
    const auto g = filter_arrows(b, nodes);
    std::vector<int> indeg(g.size(), 0);
    for (const auto& e : g.edges()) ++indeg[e.target];
    std::map<std::pair<Coords, int>, CrystalPiece> acc;
    for (const auto& comp : detail::components(g)) {
        std::optional<int> src;
        for (int v : comp)
            if (indeg[v] == 0) {
                if (src) throw CrystalError("component with multiple sources");
                src = v;
            }
        if (!src) throw CrystalError("component without a source");
        const auto wt = g.vertices()[*src].weight();
        Coords r;
        for (int j : nodes) r.push_back(wt[j - 1]);
        const int sz = static_cast<int>(comp.size());
        auto [it, inserted] = acc.try_emplace({r, sz}, CrystalPiece{r, wt, sz, 0});
        ++it->second.count;
    }
    std::vector<CrystalPiece> out;
    for (auto& [k, p] : acc) out.push_back(std::move(p));
    return out;
}

/// Whether the labeled edge structure of b matches the given edge list on
/// vertices 0..n-1 up to relabeling the vertices. Brute force, small graphs only.
inline bool same_shape(const CrystalGraph& b, int n, std::vector<CrystalEdge> target) {
    if (static_cast<int>(b.size()) != n || b.edges().size() != target.size()) return false;
    if (n > 9) throw std::invalid_argument("same_shape is meant for small graphs");
    std::sort(target.begin(), target.end());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<CrystalEdge> mapped;
        for (const auto& e : b.edges()) mapped.push_back({perm[e.source], perm[e.target], e.label});
        std::sort(mapped.begin(), mapped.end());
        if (mapped == target) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// ---------------------------------------------------------------------------
// Export

inline std::string to_dot(const CrystalGraph& b, const std::string& name = "crystal") {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    for (int v = 0; v < static_cast<int>(b.size()); ++v) {
        os << "  v" << v << " [label=\"" << b.vertices()[v].weight() << "\"";
        if (b.highest() && *b.highest() == v) os << ", shape=box";
        os << "];\n";
    }
    for (const auto& e : b.edges())
        os << "  v" << e.source << " -> v" << e.target << " [label=\"" << e.label << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace demazure
