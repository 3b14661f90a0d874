#pragma once

// Exact linear constraint systems with per-row provenance tags, plus the
// cdd-compatible .ine serialization and a JSON dump.

#include <sympoly/rational.hpp>

#include <json.hpp>

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace sympoly {

enum class Rel { le, eq, ge };

inline const char* rel_str(Rel r) { return r == Rel::le ? "<=" : r == Rel::eq ? "=" : ">="; }

inline Rel rel_parse(const std::string& s) {
    if (s == "<=") return Rel::le;
    if (s == "=") return Rel::eq;
    if (s == ">=") return Rel::ge;
    throw std::invalid_argument("bad relation: " + s);
}

struct LinRow {
    std::map<int, Rat> coeffs;  // var index -> coefficient, no zero entries
    Rel rel = Rel::le;
    Rat rhs = 0;
    std::string tag;

    Rat lhs_at(const RatVec& x) const {
        Rat s = 0;
        for (const auto& [v, c] : coeffs) s += c * x[static_cast<std::size_t>(v)];
        return s;
    }

    bool satisfied_by(const RatVec& x) const {
        Rat s = lhs_at(x);
        switch (rel) {
            case Rel::le: return s <= rhs;
            case Rel::eq: return s == rhs;
            case Rel::ge: return s >= rhs;
        }
        return false;
    }

    RatVec dense(int num_vars) const {
        RatVec d(static_cast<std::size_t>(num_vars), Rat(0));
        for (const auto& [v, c] : coeffs) d[static_cast<std::size_t>(v)] = c;
        return d;
    }
};

enum class SystemKind { core, fullspace, fullspace_intersection };

struct ConstraintSystem {
    int num_vars = 0;
    std::vector<LinRow> rows;
    std::string name;
    SystemKind kind = SystemKind::core;

    void add(LinRow r) {
        if (r.coeffs.empty()) throw std::logic_error("empty-coefficient row: " + r.tag);
        for (const auto& [v, c] : r.coeffs)
            if (v < 0 || v >= num_vars) throw std::logic_error("bad var index in row " + r.tag);
        rows.push_back(std::move(r));
    }

    // Two-sided bound lo <= expr <= hi as two rows tagged ":lo"/":hi".
    void add_two_sided(const std::map<int, Rat>& coeffs, const Rat& lo, const Rat& hi,
                       const std::string& tag) {
        add({coeffs, Rel::ge, lo, tag + ":lo"});
        add({coeffs, Rel::le, hi, tag + ":hi"});
    }

    bool satisfied_by(const RatVec& x) const {
        for (const auto& r : rows)
            if (!r.satisfied_by(x)) return false;
        return true;
    }

    std::size_t count_eq() const {
        std::size_t k = 0;
        for (const auto& r : rows) k += (r.rel == Rel::eq);
        return k;
    }
    std::size_t count_ineq() const { return rows.size() - count_eq(); }

    std::optional<std::size_t> find_tag(const std::string& tag) const {
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i].tag == tag) return i;
        return std::nullopt;
    }
};

// (coeffs, rhs) of a row oriented as "<=" (equalities unchanged); used for
// canonical comparison and deduplication.
inline std::pair<std::map<int, Rat>, Rat> le_oriented(const LinRow& r) {
    if (r.rel != Rel::ge) return {r.coeffs, r.rhs};
    std::map<int, Rat> c;
    for (const auto& [v, x] : r.coeffs) c[v] = -x;
    return {c, -r.rhs};
}

// Scale-canonical "<=" form: divide by the absolute value of the first
// nonzero coefficient (positive scaling preserves the halfspace).
inline std::pair<std::map<int, Rat>, Rat> canonical_halfspace(const LinRow& r) {
    auto [c, b] = le_oriented(r);
    if (c.empty()) return {c, b};
    Rat lead = c.begin()->second;
    Rat scale = lead > 0 ? lead : Rat(-lead);
    for (auto& [v, x] : c) x /= scale;
    return {c, b / scale};
}

// --- .ine export / import ------------------------------------------------
//
// cdd H-representation: each data row (b, -A) encodes a.x <= b; equality
// rows are listed on the "linearity" line. ">=" rows are serialized in
// "<=" orientation; original relations and tags are recorded in comment
// lines after "end" so that re-import reproduces the system exactly.

inline std::string export_ine(const ConstraintSystem& sys) {
    std::ostringstream os;
    os << "H-representation\n";
    std::vector<std::size_t> lin;
    for (std::size_t i = 0; i < sys.rows.size(); ++i)
        if (sys.rows[i].rel == Rel::eq) lin.push_back(i + 1);
    if (!lin.empty()) {
        os << "linearity " << lin.size();
        for (auto i : lin) os << " " << i;
        os << "\n";
    }
    os << "begin\n";
    os << " " << sys.rows.size() << " " << (sys.num_vars + 1) << " rational\n";
    for (const auto& r : sys.rows) {
        auto [c, b] = le_oriented(r);
        os << " " << rat_str(b);
        auto it = c.begin();
        for (int v = 0; v < sys.num_vars; ++v) {
            Rat coeff = 0;
            if (it != c.end() && it->first == v) coeff = it++->second;
            os << " " << rat_str(-coeff);
        }
        os << "\n";
    }
    os << "end\n";
    for (std::size_t i = 0; i < sys.rows.size(); ++i)
        os << "* row " << (i + 1) << " " << rel_str(sys.rows[i].rel) << " " << sys.rows[i].tag
           << "\n";
    if (!sys.name.empty()) os << "* name " << sys.name << "\n";
    return os.str();
}

inline ConstraintSystem import_ine(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    ConstraintSystem sys;
    std::vector<std::size_t> lin;
    // header
    bool began = false;
    std::size_t m = 0;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        if (word == "H-representation" || word.empty() || word[0] == '*') continue;
        if (word == "linearity") {
            std::size_t k;
            ls >> k;
            for (std::size_t i = 0; i < k; ++i) {
                std::size_t idx;
                ls >> idx;
                lin.push_back(idx);
            }
            continue;
        }
        if (word == "begin") {
            began = true;
            break;
        }
        throw std::invalid_argument("unexpected .ine line: " + line);
    }
    if (!began) throw std::invalid_argument("missing begin");
    std::string numtype;
    std::size_t d1;
    in >> m >> d1 >> numtype;
    sys.num_vars = static_cast<int>(d1) - 1;
    std::vector<bool> is_eq(m + 1, false);
    for (auto i : lin) is_eq[i] = true;
    for (std::size_t i = 1; i <= m; ++i) {
        LinRow r;
        std::string tok;
        in >> tok;
        r.rhs = rat_parse(tok);
        for (int v = 0; v < sys.num_vars; ++v) {
            in >> tok;
            Rat c = -rat_parse(tok);
            if (c != 0) r.coeffs[v] = c;
        }
        r.rel = is_eq[i] ? Rel::eq : Rel::le;
        sys.rows.push_back(std::move(r));
    }
    in >> line;  // "end"
    // trailer comments restore original relations and tags
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string star, what;
        ls >> star >> what;
        if (star != "*") continue;
        if (what == "row") {
            std::size_t idx;
            std::string rel;
            ls >> idx >> rel;
            std::string tag;
            std::getline(ls, tag);
            if (!tag.empty() && tag[0] == ' ') tag.erase(0, 1);
            auto& r = sys.rows.at(idx - 1);
            r.tag = tag;
            Rel orig = rel_parse(rel);
            if (orig == Rel::ge && r.rel == Rel::le) {
                std::map<int, Rat> c;
                for (const auto& [v, x] : r.coeffs) c[v] = -x;
                r.coeffs = std::move(c);
                r.rhs = -r.rhs;
                r.rel = Rel::ge;
            }
        } else if (what == "name") {
            std::string rest;
            std::getline(ls, rest);
            if (!rest.empty() && rest[0] == ' ') rest.erase(0, 1);
            sys.name = rest;
        }
    }
    return sys;
}

inline bool operator==(const LinRow& a, const LinRow& b) {
    return a.coeffs == b.coeffs && a.rel == b.rel && a.rhs == b.rhs && a.tag == b.tag;
}

inline bool operator==(const ConstraintSystem& a, const ConstraintSystem& b) {
    return a.num_vars == b.num_vars && a.rows == b.rows && a.name == b.name;
}

// --- JSON dump ------------------------------------------------------------

inline nlohmann::json to_json(const ConstraintSystem& sys) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : sys.rows) {
        nlohmann::json coeffs = nlohmann::json::object();
        for (const auto& [v, c] : r.coeffs) coeffs[std::to_string(v)] = rat_str(c);
        rows.push_back({{"coeffs", std::move(coeffs)},
                        {"rel", rel_str(r.rel)},
                        {"rhs", rat_str(r.rhs)},
                        {"tag", r.tag}});
    }
    return nlohmann::json{{"vars", sys.num_vars}, {"rows", std::move(rows)}};
}

inline ConstraintSystem system_from_json(const nlohmann::json& j) {
    ConstraintSystem sys;
    sys.num_vars = j.at("vars").get<int>();
    for (const auto& rj : j.at("rows")) {
        LinRow r;
        for (auto it = rj.at("coeffs").begin(); it != rj.at("coeffs").end(); ++it) {
            Rat c = rat_parse(it.value().get<std::string>());
            if (c != 0) r.coeffs[std::stoi(it.key())] = c;
        }
        r.rel = rel_parse(rj.at("rel").get<std::string>());
        r.rhs = rat_parse(rj.at("rhs").get<std::string>());
        r.tag = rj.at("tag").get<std::string>();
        sys.rows.push_back(std::move(r));
    }
    return sys;
}

}  // namespace sympoly
