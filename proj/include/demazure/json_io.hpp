// JSON views of the toolkit's values. nlohmann::json keeps object keys
// sorted, and term lists are emitted in (grade, weight) order, so output is
// byte-stable for a fixed input.
#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "demazure/admissibility.hpp"
#include "demazure/characters.hpp"
#include "demazure/crystal.hpp"
#include "demazure/relations.hpp"
#include "demazure/rootdata.hpp"
#include "demazure/weights.hpp"

namespace demazure {

using Json = nlohmann::json;

inline Json to_json(const FiniteWeight& w) { return Json(w.coords); }

inline Json to_json(const AffineWeight& w) {
    return Json{{"finite", w.finite.coords}, {"level", w.level}, {"degree", w.degree}};
}

inline Json root_json(const RootSystem& rs, std::size_t idx) {
    const auto& r = rs.root(idx);
    return Json{{"name", root_name(r)}, {"coords", r.coords}, {"d", rs.d(idx)}, {"coroot", rs.coroot(idx)},
                {"height", r.height()}};
}

inline Json to_json(const RootSystem& rs) {
    Json roots = Json::array();
    for (std::size_t a = 0; a < rs.num_positive_roots(); ++a) roots.push_back(root_json(rs, a));
    // pairing[i][a] = <varpi_i, alpha_a^vee>
    Json table = Json::array();
    for (int i = 0; i < rs.rank(); ++i) {
        Json row = Json::array();
        Coords w(rs.rank(), 0);
        w[i] = 1;
        for (std::size_t a = 0; a < rs.num_positive_roots(); ++a) row.push_back(rs.pairing(w, a));
        table.push_back(row);
    }
    return Json{{"type", rs.name()},
                {"rank", rs.rank()},
                {"cartan", rs.datum().cartan},
                {"symmetrizers", rs.datum().symmetrizers},
                {"positive_roots", roots},
                {"theta", root_name(rs.theta())},
                {"pairing_table", table}};
}

inline Json to_json(const DominanceResult& d) {
    return Json{{"lambda", to_json(d.lambda)}, {"word", d.word.letters}, {"length", d.word.size()}};
}

// ---------------------------------------------------------------------------

inline Json to_json(const RootSystem& rs, const Relation& r) {
    Json j{{"kind", kind_name(r.kind)}, {"provenance", r.provenance}, {"redundant", r.redundant}};
    if (r.kind != RelationKind::Cartan) {
        j["root"] = root_name(rs.root(r.root));
        j["sign"] = sign_name(r.sign);
    }
    if (r.kind == RelationKind::Annihilator) j["min_degree"] = r.min_degree;
    if (r.kind == RelationKind::TupleFamily) j["start_index"] = r.start_index;
    if (!r.factors.empty()) {
        Json fs = Json::array();
        for (const auto& f : r.factors) fs.push_back(Json{{"t_degree", f.t_degree}, {"exponent", f.exponent}});
        j["factors"] = fs;
    }
    return j;
}

inline Json to_json(const RootSystem& rs, const std::vector<Relation>& rels) {
    Json arr = Json::array();
    for (const auto& r : rels) arr.push_back(to_json(rs, r));
    return arr;
}

inline Json to_json(const RootSystem& rs, const PFunctions& pf) {
    Json arr = Json::array();
    for (std::size_t a = 0; a < rs.num_positive_roots(); ++a) {
        Json entry{{"root", root_name(rs.root(a))}};
        for (Sign s : {Sign::Plus, Sign::Minus}) {
            const auto& p = pf.at(a, s);
            entry[sign_name(s)] = Json{{"values", p.values}, {"cutoff", p.cutoff()}, {"xi", xi_tuple(p).xi}};
        }
        arr.push_back(entry);
    }
    return arr;
}

// ---------------------------------------------------------------------------

inline Json to_json(const SplitTuple& s) {
    Json arr = Json::array();
    for (const auto& p : s.parts) arr.push_back(p.coords);
    return arr;
}

inline Json to_json(const RootSystem& rs, const RootProfile& p) {
    return Json{{"root", root_name(rs.root(p.root))}, {"sign", sign_name(p.sign)}, {"d", p.d}, {"x", p.x},
                {"t", p.t},   {"p", p.p}};
}

inline Json to_json(const RootSystem& rs, const AdmissibilityReport& rep) {
    Json pre{{"ok", rep.preadmissible.ok}};
    Json wit = Json::array();
    for (const auto& w : rep.preadmissible.witnesses)
        wit.push_back(Json{{"root", root_name(rs.root(w.root))}, {"part", w.part}});
    pre["witnesses"] = wit;
    Json roots = Json::array();
    Json violations = Json::array();
    for (const auto& c : rep.roots) {
        Json j = to_json(rs, c.profile);
        j["mu_pairing"] = c.mu_pairing;
        j["m"] = c.m;
        j["condition_A"] = c.condition_A;
        j["condition_B"] = c.condition_B;
        j["condition_B_triggered"] = c.condition_B_triggered;
        roots.push_back(j);
        if (!c.condition_A || !c.condition_B) violations.push_back(root_name(rs.root(c.profile.root)));
    }
    return Json{{"r", rep.r},         {"k", rep.k},           {"preadmissible", pre},
                {"roots", roots},     {"violations", violations}, {"admissible", rep.admissible_for_r}};
}

// ---------------------------------------------------------------------------

inline Json to_json(const GradedCharacter& c) {
    Json terms = Json::array();
    for (const auto& [k, m] : c.sorted_terms()) {
        terms.push_back(Json{{"wt", k.weight(c.rank()).coords}, {"grade", k.grade}, {"level", k.level}, {"mult", m}});
    }
    return Json{{"terms", terms},
                {"dimension", c.dimension()},
                {"normalization", c.normalization() == Normalization::Raw ? "raw" : "generator"}};
}

inline Json to_json(const std::vector<BranchComponent>& pieces) {
    Json arr = Json::array();
    for (const auto& p : pieces)
        arr.push_back(Json{{"highest", p.highest.coords},
                           {"grade", p.grade},
                           {"multiplicity", p.multiplicity},
                           {"dimension", p.dimension}});
    return arr;
}

inline Json to_json(const RootSystem& rs, const EmbeddingCertificate& c) {
    Json j{{"status", c.certified() ? "Certified" : "Violation"},
           {"admissible", c.admissible},
           {"lhs_dimension", c.lhs_dimension},
           {"rhs_dimension", c.rhs_dimension}};
    if (!c.certified()) {
        j["violation"] = Json{{"wt", c.weight->coords}, {"grade", c.grade}, {"lhs", c.lhs}, {"rhs", c.rhs},
                              {"reason", c.reason}};
    }
    j["admissibility"] = to_json(rs, c.admissibility);
    return j;
}

// ---------------------------------------------------------------------------

inline Json to_json(const CrystalGraph& g) {
    Json verts = Json::array();
    for (int v = 0; v < static_cast<int>(g.size()); ++v) {
        std::ostringstream path;
        path << g.vertices()[v];
        verts.push_back(Json{{"id", v}, {"wt", g.vertices()[v].weight().coords}, {"path", path.str()}});
    }
    Json edges = Json::array();
    for (const auto& e : g.edges())
        edges.push_back(Json{{"source", e.source}, {"target", e.target}, {"label", e.label}});
    Json j{{"vertices", verts}, {"edges", edges}, {"size", g.size()}};
    j["highest"] = g.highest() ? Json(*g.highest()) : Json(nullptr);
    return j;
}

inline Json to_json(const std::vector<CrystalPiece>& pieces) {
    Json arr = Json::array();
    for (const auto& p : pieces)
        arr.push_back(Json{{"restricted", p.restricted}, {"highest", p.highest.coords}, {"size", p.size},
                           {"count", p.count}});
    return arr;
}

// ---------------------------------------------------------------------------
// Parsing helpers shared by the command line

class ParseError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// "1,-2" -> {1,-2}; whitespace tolerated, empty string -> {}.
inline std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    auto flush = [&] {
        std::size_t a = cur.find_first_not_of(" \t");
        if (a == std::string::npos) {
            if (!cur.empty()) throw ParseError("empty entry in integer list");
            return;
        }
        std::size_t b = cur.find_last_not_of(" \t");
        const std::string tok = cur.substr(a, b - a + 1);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw ParseError("not an integer: '" + tok + "'");
        }
        if (used != tok.size()) throw ParseError("not an integer: '" + tok + "'");
        out.push_back(v);
        cur.clear();
    };
    if (s.find_first_not_of(" \t") == std::string::npos) return out;
    for (char c : s) {
        if (c == ',') {
            if (cur.find_first_not_of(" \t") == std::string::npos) throw ParseError("empty entry in integer list");
            flush();
        } else {
            cur.push_back(c);
        }
    }
    if (cur.find_first_not_of(" \t") == std::string::npos) throw ParseError("empty entry in integer list");
    flush();
    return out;
}

inline FiniteWeight parse_weight(const std::string& s, int rank) {
    auto v = parse_int_list(s);
    if (static_cast<int>(v.size()) != rank)
        throw ParseError("weight '" + s + "' has " + std::to_string(v.size()) + " coordinates, rank is " +
                         std::to_string(rank));
    return FiniteWeight(std::move(v));
}

/// "a,b|c,d|..." -> parts.
inline SplitTuple parse_split(const std::string& spec, int rank) {
    SplitTuple out;
    std::size_t start = 0;
    while (true) {
        std::size_t bar = spec.find('|', start);
        out.parts.push_back(parse_weight(spec.substr(start, bar == std::string::npos ? std::string::npos : bar - start),
                                         rank));
        if (bar == std::string::npos) break;
        start = bar + 1;
    }
    return out;
}

}  // namespace demazure
