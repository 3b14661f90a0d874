#pragma once

// Reproduction of the quantitative claims: dimension formulas (computed two
// independent ways), facet sets and counts, hull-equality checks via the
// optimization oracle, and exact minimum-cost optimization.

#include <sympoly/core.hpp>
#include <sympoly/enumerate.hpp>
#include <sympoly/hrep.hpp>
#include <sympoly/linalg.hpp>
#include <sympoly/prng.hpp>
#include <sympoly/qtsasm_cuts.hpp>
#include <sympoly/simplex.hpp>

#include <json.hpp>

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace sympoly {

class OutOfValidity : public std::invalid_argument {
  public:
    OutOfValidity(const std::string& what) : std::invalid_argument(what) {}
};

// Closed-form dimension of each polytope, restricted to the n for which the
// formula is established.
inline long long predicted_dimension(Cls cls, int n) {
    const bool odd = (n % 2 == 1);
    auto need = [&](bool ok, const char* what) {
        if (!ok)
            throw OutOfValidity(std::string("predicted_dimension(") + cls_name(cls) +
                                "): " + what + " required, n=" + std::to_string(n));
    };
    long long m = n;
    switch (cls) {
        case Cls::ASM:
            need(n >= 1, "n >= 1");
            return (m - 1) * (m - 1);
        case Cls::VSASM:
            need(odd && n >= 3, "odd n >= 3");
            return (m - 3) * (m - 3) / 2;
        case Cls::VHSASM:
            need(odd && n >= 5, "odd n >= 5");
            return (m - 5) * (m - 5) / 4;
        case Cls::HTSASM:
            need(n >= 1, "n >= 1");
            return ((m - 1) * (m - 1) + 1) / 2;
        case Cls::DSASM:
            need(n >= 1, "n >= 1");
            return m * (m - 1) / 2;
        case Cls::DASASM:
            need(n >= 1, "n >= 1");
            return m * m / 4;
        case Cls::TSASM:
            need(odd && n >= 3, "odd n >= 3");
            return (m - 5) * (m - 3) / 8;
        case Cls::QTSASM:
            throw OutOfValidity("QTSASM dimension is conjectural; see qtsasm_conjecture_dimension");
    }
    return -1;
}

// The conjectured quarter-turn dimension; reported, never asserted.
inline long long qtsasm_conjecture_dimension(int n) {
    if (n < 5 || n % 4 == 2)
        throw OutOfValidity("conjecture stated for n >= 5, n != 2 (mod 4)");
    long long m = n;
    return (m - 1) * (m - 1) / 4 - 2;
}

// Dimension computed two independent ways which must agree: the affine hull
// of the enumerated cores, and |C| minus the rank of the equality system
// extended with all implicit equalities discovered by LP.
inline int compute_dimension(Cls cls, int n, std::optional<int> cap = std::nullopt) {
    auto members = enumerate_class(cls, n, cap);
    if (members.empty()) throw EmptyClass(cls, n);
    CorePattern p = core_positions(cls, n);
    std::vector<RatVec> cores;
    cores.reserve(members.size());
    for (const auto& m : members) cores.push_back(project(m, p).values);
    int d_hull = affine_hull_dim(cores);

    ConstraintSystem sys = (cls == Cls::QTSASM) ? build_qtsasm_hull(n) : build_core(cls, n);
    auto impl = implicit_rows(sys);
    std::vector<RatVec> eq_rows;
    for (std::size_t i = 0; i < sys.rows.size(); ++i)
        if (sys.rows[i].rel == Rel::eq || impl[i]) eq_rows.push_back(sys.rows[i].dense(sys.num_vars));
    int d_rank = sys.num_vars - (eq_rows.empty() ? 0 : rank(eq_rows));
    if (d_hull != d_rank)
        throw std::logic_error("dimension routes disagree for " + std::string(cls_name(cls)) +
                               " n=" + std::to_string(n) + ": affine hull " +
                               std::to_string(d_hull) + ", implicit-equality rank " +
                               std::to_string(d_rank));
    return d_hull;
}

// --- facet predictions -----------------------------------------------------

enum class Side { lo, hi };

struct FacetEntry {
    std::string eq;  // builder tag stem, e.g. "vsasm:row-prefix"
    Side side = Side::lo;
    int i = 0, j = -1;  // j == -1 for single-index families

    std::string row_tag() const {
        std::string t = eq + "(" + std::to_string(i);
        if (j >= 0) t += "," + std::to_string(j);
        t += ")";
        t += (side == Side::lo) ? ":lo" : ":hi";
        return t;
    }
};

struct FacetPrediction {
    Cls cls;
    int n = 0;
    std::vector<FacetEntry> entries;
};

inline long long predicted_facet_count(Cls cls, int n) {
    long long m = n;
    switch (cls) {
        case Cls::ASM: return 4 * ((m - 2) * (m - 2) + 1);
        case Cls::VSASM: return 2 * m * m - 19 * m + 49;
        case Cls::VHSASM: return m * m - 15 * m + 60;
        case Cls::HTSASM: return 2 * ((m - 2) * (m - 2) + (n % 2 == 0 ? 1 : 0));
        case Cls::DSASM: return 2 * (m - 2) * (m - 2) + 3;
        case Cls::DASASM: return (m - 2) * (m - 2) + 2;
        case Cls::TSASM: return (m * m - 15 * m + 62) / 2;
        case Cls::QTSASM: break;
    }
    throw OutOfValidity("no facet formula for QTSASM");
}

namespace detail {

inline int chi_odd(int i) { return i % 2 != 0 ? 1 : 0; }  // chi_{2 nmid i}

}  // namespace detail

// Explicit facet index sets of the minimal core descriptions, valid from
// each statement's n-threshold on.
inline FacetPrediction predicted_facets(Cls cls, int n) {
    using detail::chi_even;
    using detail::chi_odd;
    FacetPrediction f{cls, n, {}};
    const int k = n / 2;
    const bool odd = (n % 2 == 1);
    auto lo = [&](const std::string& eq, int i, int j = -1) {
        f.entries.push_back({eq, Side::lo, i, j});
    };
    auto hi = [&](const std::string& eq, int i, int j = -1) {
        f.entries.push_back({eq, Side::hi, i, j});
    };
    auto need = [&](bool ok, const char* what) {
        if (!ok)
            throw OutOfValidity(std::string("predicted_facets(") + cls_name(cls) + "): " + what +
                                " required, n=" + std::to_string(n));
    };

    switch (cls) {
        case Cls::ASM: {
            need(n >= 3, "n >= 3");
            for (int i = 2; i <= n - 1; ++i)
                for (int j = 1; j <= n - 2; ++j) lo("asm:row-prefix", i, j);
            lo("asm:row-prefix", 1, 1);
            for (int i = 2; i <= n - 1; ++i)
                for (int j = 2; j <= n - 1; ++j) hi("asm:row-prefix", i, j);
            hi("asm:row-prefix", n, n - 1);
            for (int i = 1; i <= n - 2; ++i)
                for (int j = 2; j <= n - 1; ++j) lo("asm:col-prefix", i, j);
            lo("asm:col-prefix", 1, n);
            for (int i = 2; i <= n - 1; ++i)
                for (int j = 2; j <= n - 1; ++j) hi("asm:col-prefix", i, j);
            hi("asm:col-prefix", n - 1, 1);
            break;
        }
        case Cls::VSASM: {
            need(odd && n >= 7, "odd n >= 7");
            for (int i = 3; i <= n - 2; ++i)
                for (int j = 1; j <= k - 1 - chi_even(i); ++j) lo("vsasm:row-prefix", i, j);
            for (int i = 4; i <= n - 3; ++i)
                for (int j = 2; j <= k - 1 - chi_odd(i); ++j) hi("vsasm:row-prefix", i, j);
            lo("vsasm:col-prefix", 2, 1);
            for (int i = 2; i <= n - 4; ++i)
                for (int j = 2; j <= k - chi_even(i); ++j) lo("vsasm:col-prefix", i, j);
            hi("vsasm:col-prefix", n - 2, 1);
            for (int i = 4; i <= n - 2; ++i)
                for (int j = 2; j <= k - chi_odd(i); ++j) hi("vsasm:col-prefix", i, j);
            break;
        }
        case Cls::VHSASM: {
            need(odd && n >= 9, "odd n >= 9");
            lo("vhsasm:row-prefix", 2, 2);
            for (int i = 3; i <= k - 1; ++i)
                for (int j = 2; j <= k - 1 - chi_even(i); ++j) lo("vhsasm:row-prefix", i, j);
            for (int j = 3; j <= k - 1; ++j)
                if (j % 2 != 0) lo("vhsasm:row-prefix", k, j);
            for (int i = 4; i <= k - 1; ++i)
                for (int j = 4; j <= k - 1 - chi_odd(i); ++j) hi("vhsasm:row-prefix", i, j);
            for (int j = 4; j <= k - 1; ++j)
                if (j % 2 == 0) hi("vhsasm:row-prefix", k, j);
            for (int j = 3; j <= k - 1; ++j)
                for (int i = 2; i <= k - 1 - chi_even(j); ++i) lo("vhsasm:col-prefix", i, j);
            for (int i = 3; i <= k - 2; ++i)
                if (i % 2 != 0) lo("vhsasm:col-prefix", i, k);
            for (int j = 4; j <= k - 1; ++j)
                for (int i = 4; i <= k - 1 - chi_odd(j); ++i) hi("vhsasm:col-prefix", i, j);
            for (int i = 4; i <= k - 2; ++i)
                if (i % 2 == 0) hi("vhsasm:col-prefix", i, k);
            break;
        }
        case Cls::HTSASM: {
            need(n >= 4, "n >= 4");
            lo("htsasm:row-prefix", 1, 1);
            for (int i = 2; i <= k; ++i)
                for (int j = 1; j <= n - 2; ++j) lo("htsasm:row-prefix", i, j);
            hi("htsasm:row-prefix", 1, n - 1);
            for (int i = 2; i <= k; ++i)
                for (int j = 2; j <= n - 1; ++j) hi("htsasm:row-prefix", i, j);
            for (int i = 1; i <= n - 2; ++i)
                for (int j = 2; j <= k; ++j) lo("htsasm:col-prefix", i, j);
            for (int i = 2; i <= n - 1; ++i)
                for (int j = 2; j <= k; ++j) hi("htsasm:col-prefix", i, j);
            if (odd) {
                for (int j = 1; j <= k; ++j) lo("htsasm:mid-row-pref", j);
                for (int j = 2; j <= k; ++j) hi("htsasm:mid-row-pref", j);
                for (int i = 1; i <= k - 1; ++i) lo("htsasm:mid-col-pref", i);
                for (int i = 2; i <= k - 1; ++i) hi("htsasm:mid-col-pref", i);
            }
            break;
        }
        case Cls::DSASM: {
            need(n >= 3, "n >= 3");
            for (int i = 2; i <= n - 1; ++i)
                for (int j = 2; j <= n - 2; ++j) lo("dsasm:L-prefix", i, j);
            for (int i = 1; i <= n; ++i) lo("dsasm:L-prefix", i, 1);
            for (int i = 2; i <= n - 1; ++i)
                for (int j = 2; j <= n - 2; ++j) hi("dsasm:L-prefix", i, j);
            for (int i = 2; i <= n; ++i) hi("dsasm:L-prefix", i, n - 1);
            break;
        }
        case Cls::DASASM: {
            need(n >= 2, "n >= 2");
            lo("dasasm:row-prefix", 1, 1);
            for (int i = 2; i <= k; ++i)
                for (int j = 1; j <= n - 2; ++j) lo("dasasm:row-prefix", i, j);
            hi("dasasm:row-prefix", 1, n - 1);
            for (int i = 2; i <= k; ++i)
                for (int j = 2; j <= n - 1; ++j) hi("dasasm:row-prefix", i, j);
            if (odd) {
                for (int i = 1; i <= k; ++i) lo("dasasm:mid-col-pref", i);
                for (int i = 2; i <= k; ++i) hi("dasasm:mid-col-pref", i);
            }
            break;
        }
        case Cls::TSASM: {
            need(odd && n >= 9, "odd n >= 9");
            lo("tsasm:L-prefix", 2, 2);
            for (int i = 3; i <= k - 1; ++i)
                for (int j = 2; j <= k - 1 - chi_even(i); ++j) lo("tsasm:L-prefix", i, j);
            for (int j = 3; j <= k - 1 - chi_odd(k); ++j)
                if (j % 2 != 0) lo("tsasm:L-prefix", k, j);
            for (int i = 4; i <= k - 1; ++i)
                for (int j = 4; j <= k - 1 - chi_odd(i); ++j) hi("tsasm:L-prefix", i, j);
            for (int j = 4; j <= k - 1 - chi_even(k); ++j)
                if (j % 2 == 0) hi("tsasm:L-prefix", k, j);
            break;
        }
        case Cls::QTSASM:
            throw OutOfValidity("QTSASM facets are not determined");
    }
    if (static_cast<long long>(f.entries.size()) != predicted_facet_count(cls, n))
        throw std::logic_error("facet index sets disagree with the closed-form count for " +
                               std::string(cls_name(cls)) + " n=" + std::to_string(n));
    return f;
}

// --- verification reports ----------------------------------------------------

struct VerificationReport {
    std::string claim;
    std::string predicted, computed;
    bool match = false;
    std::vector<std::string> witnesses;

    nlohmann::json to_json() const {
        return nlohmann::json{{"claim", claim},
                              {"predicted", predicted},
                              {"computed", computed},
                              {"status", match ? "match" : "mismatch"},
                              {"witnesses", witnesses}};
    }
};

namespace detail {

// Reduction of (coeffs | rhs) vectors modulo a span of equality rows; used
// to recognize inequalities that define the same hyperplane on the affine
// hull (e.g. two prefix rows equal modulo the line-sum equations).
class AffineRowReducer {
  public:
    explicit AffineRowReducer(std::size_t width) : width_(width) {}

    void add(RatVec v) {
        reduce_inplace(v);
        std::size_t p = lead(v);
        if (p == width_) return;
        Rat inv = v[p];
        for (auto& x : v) x /= inv;
        basis_.push_back(std::move(v));
        pivots_.push_back(p);
    }

    RatVec reduce(RatVec v) const {
        reduce_inplace(v);
        return v;
    }

  private:
    std::size_t width_;
    std::vector<RatVec> basis_;
    std::vector<std::size_t> pivots_;

    std::size_t lead(const RatVec& v) const {
        for (std::size_t i = 0; i < width_; ++i)
            if (v[i] != 0) return i;
        return width_;
    }

    void reduce_inplace(RatVec& v) const {
        for (std::size_t b = 0; b < basis_.size(); ++b) {
            const Rat& f = v[pivots_[b]];
            if (f == 0) continue;
            Rat mult = f;
            for (std::size_t j = 0; j < v.size(); ++j)
                if (basis_[b][j] != 0) v[j] -= mult * basis_[b][j];
        }
    }
};

inline std::string vec_key(const RatVec& v) {
    std::string s;
    for (const auto& x : v) {
        s += rat_str(x);
        s += ',';
    }
    return s;
}

}  // namespace detail

// Facet verification on the core system: (a) each predicted facet is neither
// an implicit equality nor redundant, (b) every other inequality is
// redundant given the predicted rows plus all (discovered) equalities, and
// (c) the count matches the closed form.  Inequalities are grouped by their
// residue modulo the equality space, so that several textual rows describing
// one hyperplane count once.
inline VerificationReport verify_facets(Cls cls, int n) {
    VerificationReport rep;
    rep.claim = std::string("facets(") + cls_name(cls) + ", n=" + std::to_string(n) + ")";
    FacetPrediction pred = predicted_facets(cls, n);
    rep.predicted = std::to_string(pred.entries.size());

    ConstraintSystem sys = build_core(cls, n);
    auto impl = implicit_rows(sys);

    detail::AffineRowReducer reducer(static_cast<std::size_t>(sys.num_vars));
    for (std::size_t i = 0; i < sys.rows.size(); ++i) {
        if (sys.rows[i].rel == Rel::eq || impl[i]) {
            auto [c, b] = le_oriented(sys.rows[i]);
            RatVec v(static_cast<std::size_t>(sys.num_vars) + 1, Rat(0));
            for (const auto& [var, x] : c) v[static_cast<std::size_t>(var)] = x;
            v[static_cast<std::size_t>(sys.num_vars)] = b;
            reducer.add(std::move(v));
        }
    }

    // group the non-implicit inequalities modulo the equality space
    std::map<std::string, std::vector<std::size_t>> groups;
    std::vector<std::string> row_group(sys.rows.size());
    for (std::size_t i = 0; i < sys.rows.size(); ++i) {
        if (sys.rows[i].rel == Rel::eq || impl[i]) continue;
        auto [c, b] = le_oriented(sys.rows[i]);
        RatVec v(static_cast<std::size_t>(sys.num_vars) + 1, Rat(0));
        for (const auto& [var, x] : c) v[static_cast<std::size_t>(var)] = x;
        v[static_cast<std::size_t>(sys.num_vars)] = b;
        v = reducer.reduce(std::move(v));
        Rat lead = 0;
        for (int j = 0; j < sys.num_vars; ++j)
            if (v[static_cast<std::size_t>(j)] != 0) {
                lead = v[static_cast<std::size_t>(j)];
                break;
            }
        if (lead == 0) {
            row_group[i] = "trivial";  // constant on the affine hull
            continue;
        }
        Rat scale = lead > 0 ? lead : Rat(-lead);
        for (auto& x : v) x /= scale;
        std::string key = detail::vec_key(v);
        groups[key].push_back(i);
        row_group[i] = key;
    }

    // predicted entries -> groups
    std::map<std::string, std::size_t> predicted_rep;  // group key -> row index
    for (const auto& e : pred.entries) {
        auto idx = sys.find_tag(e.row_tag());
        if (!idx) {
            rep.witnesses.push_back("predicted facet row not found: " + e.row_tag());
            continue;
        }
        if (impl[*idx]) {
            rep.witnesses.push_back("predicted facet is an implicit equality: " + e.row_tag());
            continue;
        }
        const std::string& key = row_group[*idx];
        if (key == "trivial") {
            rep.witnesses.push_back("predicted facet is trivial on the hull: " + e.row_tag());
            continue;
        }
        auto [it, inserted] = predicted_rep.try_emplace(key, *idx);
        if (!inserted)
            rep.witnesses.push_back("predicted facets coincide modulo equalities: " + e.row_tag() +
                                    " vs " + sys.rows[it->second].tag);
    }

    // (a) predicted facets are non-redundant: optimizing a facet row against
    // the rest of the system (its own duplicates removed) must exceed it
    for (const auto& [key, rep_idx] : predicted_rep) {
        const LinRow& r = sys.rows[rep_idx];
        ConstraintSystem rest;
        rest.num_vars = sys.num_vars;
        for (std::size_t i = 0; i < sys.rows.size(); ++i)
            if (row_group[i] != key) rest.rows.push_back(sys.rows[i]);
        Simplex solver(rest);
        LPResult res = solver.solve(r.dense(sys.num_vars), /*maximize=*/r.rel == Rel::le);
        bool beyond = res.status == LPStatus::unbounded ||
                      (res.status == LPStatus::optimal &&
                       (r.rel == Rel::le ? res.value > r.rhs : res.value < r.rhs));
        if (!beyond) rep.witnesses.push_back("predicted facet is redundant: " + r.tag);
    }

    // (b) every non-predicted inequality group follows from the predicted
    // rows plus all equalities (including the implicit ones)
    ConstraintSystem reduced;
    reduced.num_vars = sys.num_vars;
    for (std::size_t i = 0; i < sys.rows.size(); ++i) {
        if (sys.rows[i].rel == Rel::eq) {
            reduced.rows.push_back(sys.rows[i]);
        } else if (impl[i]) {
            LinRow r = sys.rows[i];
            r.rel = Rel::eq;  // implicit equality, tightened
            reduced.rows.push_back(std::move(r));
        } else if (predicted_rep.count(row_group[i])) {
            reduced.rows.push_back(sys.rows[i]);
        }
    }
    Simplex reduced_solver(reduced);
    for (const auto& [key, rows] : groups) {
        if (predicted_rep.count(key)) continue;
        for (std::size_t i : rows) {
            const LinRow& r = sys.rows[i];
            LPResult res = reduced_solver.solve(r.dense(sys.num_vars),
                                                /*maximize=*/r.rel == Rel::le);
            bool implied = res.status == LPStatus::optimal &&
                           (r.rel == Rel::le ? res.value <= r.rhs : res.value >= r.rhs);
            if (!implied)
                rep.witnesses.push_back("excluded inequality not implied by facets: " + r.tag);
        }
    }

    long long count = static_cast<long long>(predicted_rep.size());
    rep.computed = std::to_string(count);
    rep.match = rep.witnesses.empty() && count == predicted_facet_count(cls, n) &&
                count == static_cast<long long>(pred.entries.size());
    return rep;
}

// Report-only facet count below (or at) the theorem thresholds: the number
// of hyperplane groups that are neither implicit nor redundant.
inline long long count_facets(Cls cls, int n, std::vector<std::string>* group_tags = nullptr) {
    ConstraintSystem sys = build_core(cls, n);
    auto impl = implicit_rows(sys);
    detail::AffineRowReducer reducer(static_cast<std::size_t>(sys.num_vars));
    for (std::size_t i = 0; i < sys.rows.size(); ++i) {
        if (sys.rows[i].rel == Rel::eq || impl[i]) {
            auto [c, b] = le_oriented(sys.rows[i]);
            RatVec v(static_cast<std::size_t>(sys.num_vars) + 1, Rat(0));
            for (const auto& [var, x] : c) v[static_cast<std::size_t>(var)] = x;
            v[static_cast<std::size_t>(sys.num_vars)] = b;
            reducer.add(std::move(v));
        }
    }
    std::map<std::string, std::vector<std::size_t>> groups;
    std::vector<std::string> row_group(sys.rows.size());
    for (std::size_t i = 0; i < sys.rows.size(); ++i) {
        if (sys.rows[i].rel == Rel::eq || impl[i]) continue;
        auto [c, b] = le_oriented(sys.rows[i]);
        RatVec v(static_cast<std::size_t>(sys.num_vars) + 1, Rat(0));
        for (const auto& [var, x] : c) v[static_cast<std::size_t>(var)] = x;
        v[static_cast<std::size_t>(sys.num_vars)] = b;
        v = reducer.reduce(std::move(v));
        Rat lead = 0;
        for (int j = 0; j < sys.num_vars; ++j)
            if (v[static_cast<std::size_t>(j)] != 0) {
                lead = v[static_cast<std::size_t>(j)];
                break;
            }
        if (lead == 0) continue;
        Rat scale = lead > 0 ? lead : Rat(-lead);
        for (auto& x : v) x /= scale;
        std::string key = detail::vec_key(v);
        groups[key].push_back(i);
        row_group[i] = key;
    }
    long long facets = 0;
    for (const auto& [key, rows] : groups) {
        const LinRow& r = sys.rows[rows.front()];
        ConstraintSystem rest;
        rest.num_vars = sys.num_vars;
        for (std::size_t i = 0; i < sys.rows.size(); ++i)
            if (row_group[i] != key) rest.rows.push_back(sys.rows[i]);
        Simplex solver(rest);
        LPResult res = solver.solve(r.dense(sys.num_vars), /*maximize=*/r.rel == Rel::le);
        bool beyond = res.status == LPStatus::unbounded ||
                      (res.status == LPStatus::optimal &&
                       (r.rel == Rel::le ? res.value > r.rhs : res.value < r.rhs));
        if (beyond) {
            ++facets;
            if (group_tags) group_tags->push_back(r.tag);
        }
    }
    return facets;
}

// --- hull equality via the optimization oracle ------------------------------

inline std::vector<long long> random_cost(int cells, SplitMix64& rng, long long lo = -9,
                                          long long hi = 9) {
    std::vector<long long> c(static_cast<std::size_t>(cells));
    for (auto& x : c) x = rng.next_in(lo, hi);
    return c;
}

// LP optimum over the full-space description equals the brute-force optimum
// over the enumerated members, for `trials` seeded integer objectives.
inline VerificationReport verify_hull_equality(Cls cls, int n, int trials,
                                               std::uint64_t seed = 0,
                                               std::optional<int> cap = std::nullopt) {
    VerificationReport rep;
    rep.claim = std::string("hull-equality(") + cls_name(cls) + ", n=" + std::to_string(n) +
                ", trials=" + std::to_string(trials) + ")";
    auto members = enumerate_class(cls, n, cap);
    ConstraintSystem sys = build_fullspace(cls, n);
    Simplex solver(sys);
    if (members.empty()) {
        bool feas = solver.feasible();
        rep.predicted = "empty polytope";
        rep.computed = feas ? "feasible full-space system" : "infeasible full-space system";
        rep.match = !feas;
        if (feas) rep.witnesses.push_back("class empty but full-space system feasible");
        return rep;
    }
    if (!solver.feasible()) {
        rep.predicted = "equal optima";
        rep.computed = "infeasible full-space system on non-empty class";
        rep.match = false;
        rep.witnesses.push_back("infeasible full-space system");
        return rep;
    }
    SplitMix64 rng(seed);
    int mismatches = 0;
    for (int t = 0; t < trials; ++t) {
        auto cost = random_cost(n * n, rng);
        RatVec obj(cost.begin(), cost.end());
        LPResult res = solver.solve(obj, /*maximize=*/false);
        long long brute = 0;
        bool first = true;
        for (const auto& m : members) {
            long long v = 0;
            for (std::size_t c = 0; c < cost.size(); ++c) v += cost[c] * m.e[c];
            if (first || v < brute) brute = v, first = false;
        }
        if (res.status != LPStatus::optimal || res.value != brute) {
            ++mismatches;
            if (rep.witnesses.size() < 5) {
                std::ostringstream w;
                w << "trial " << t << ": lp "
                  << (res.status == LPStatus::optimal ? rat_str(res.value) : lp_status_str(res.status))
                  << " vs brute " << brute;
                rep.witnesses.push_back(w.str());
            }
        }
    }
    rep.predicted = "equal optima in " + std::to_string(trials) + " trials";
    rep.computed = std::to_string(trials - mismatches) + " equal, " + std::to_string(mismatches) +
                   " different";
    rep.match = mismatches == 0;
    return rep;
}

// Same oracle check in core coordinates; `with_cuts` selects the cut-
// augmented quarter-turn system (the QTSASM base system without cuts is the
// deliberate negative control).
inline VerificationReport verify_core_hull_equality(Cls cls, int n, int trials,
                                                    std::uint64_t seed = 0, bool with_cuts = true,
                                                    std::optional<int> cap = std::nullopt) {
    VerificationReport rep;
    rep.claim = std::string("core-hull-equality(") + cls_name(cls) + ", n=" + std::to_string(n) +
                (cls == Cls::QTSASM && !with_cuts ? ", base-only" : "") + ")";
    auto members = enumerate_class(cls, n, cap);
    if (members.empty()) throw EmptyClass(cls, n);
    CorePattern p = core_positions(cls, n);
    std::vector<std::vector<long long>> cores;
    for (const auto& m : members) {
        std::vector<long long> c;
        for (auto [i, j] : p.positions) c.push_back(m.at(i, j));
        cores.push_back(std::move(c));
    }
    ConstraintSystem sys = (cls == Cls::QTSASM && with_cuts) ? build_qtsasm_hull(n)
                                                             : build_core(cls, n);
    Simplex solver(sys);
    SplitMix64 rng(seed);
    int mismatches = 0;
    for (int t = 0; t < trials; ++t) {
        auto cost = random_cost(p.size(), rng);
        RatVec obj(cost.begin(), cost.end());
        LPResult res = solver.solve(obj, /*maximize=*/false);
        long long brute = 0;
        bool first = true;
        for (const auto& y : cores) {
            long long v = 0;
            for (std::size_t c = 0; c < y.size(); ++c) v += cost[c] * y[c];
            if (first || v < brute) brute = v, first = false;
        }
        if (res.status != LPStatus::optimal || res.value != brute) {
            ++mismatches;
            if (rep.witnesses.size() < 5) {
                std::ostringstream w;
                w << "trial " << t << ": lp "
                  << (res.status == LPStatus::optimal ? rat_str(res.value) : lp_status_str(res.status))
                  << " vs brute " << brute;
                rep.witnesses.push_back(w.str());
            }
        }
    }
    rep.predicted = "equal optima in " + std::to_string(trials) + " trials";
    rep.computed = std::to_string(trials - mismatches) + " equal, " + std::to_string(mismatches) +
                   " different";
    rep.match = mismatches == 0;
    return rep;
}

// --- exact minimum-cost members ----------------------------------------------

// Pulls the full-matrix cost back through the assembly map: cost of cell
// phi(y)_{i,j} contributes to the core objective and to a fixed constant.
inline std::pair<RatVec, Rat> pullback_objective(const CorePattern& p,
                                                 const std::vector<long long>& cost) {
    RatVec obj(static_cast<std::size_t>(p.size()), Rat(0));
    Rat constant = 0;
    for (std::size_t cell = 0; cell < p.cells.size(); ++cell) {
        const AffineExpr& e = p.cells[cell];
        Rat c = cost[cell];
        if (c == 0) continue;
        constant += c * e.constant;
        for (const auto& [t, coeff] : e.terms) obj[static_cast<std::size_t>(t)] += c * coeff;
    }
    return {obj, constant};
}

class FractionalVertex : public std::runtime_error {
  public:
    FractionalVertex(const std::string& what) : std::runtime_error(what) {}
};

// Minimum-cost members by exact LP over the core system (plus the cut
// family for the quarter-turn class); one instance serves many cost
// matrices from a warm basis.  The LP vertex must assemble to a class
// member; a fractional vertex is a contract violation.
class MinCostSolver {
  public:
    MinCostSolver(Cls cls, int n)
        : cls_(cls),
          n_(n),
          pattern_(core_positions(cls, n)),
          sys_(cls == Cls::QTSASM ? build_qtsasm_hull(n) : build_core(cls, n)),
          solver_(sys_) {
        // these classes are empty at even orders although their core systems
        // still have integer points (which assemble to non-members)
        if ((cls == Cls::VSASM || cls == Cls::VHSASM || cls == Cls::TSASM) && n % 2 == 0)
            throw EmptyClass(cls, n);
    }

    std::pair<SignMatrix, long long> solve(const std::vector<long long>& cost) {
        if (cost.size() != static_cast<std::size_t>(n_) * n_)
            throw std::invalid_argument("cost matrix size mismatch");
        auto [obj, constant] = pullback_objective(pattern_, cost);
        LPResult res = solver_.solve(obj, /*maximize=*/false);
        if (res.status == LPStatus::infeasible) throw EmptyClass(cls_, n_);
        if (res.status == LPStatus::unbounded)
            throw std::logic_error("unbounded min-cost LP on a polytope");
        if (!res.integral()) refine_to_vertex(obj, res);
        if (!res.integral())
            throw FractionalVertex(std::string("fractional optimal vertex for ") +
                                   cls_name(cls_) + " n=" + std::to_string(n_));
        std::vector<int> y;
        y.reserve(res.point.size());
        for (const auto& v : res.point) y.push_back(static_cast<int>(num(v)));
        auto m = assemble_sign(pattern_, y);
        if (!m || !is_member(*m, cls_))
            throw std::logic_error("optimal core does not assemble to a class member");
        Rat total = res.value + constant;
        if (!is_integer(total)) throw std::logic_error("non-integer optimal cost");
        return {*m, static_cast<long long>(num(total))};
    }

  private:
    Cls cls_;
    int n_;
    CorePattern pattern_;
    ConstraintSystem sys_;
    Simplex solver_;

    // walk to a true vertex of the optimal face: lexicographic minimum
    void refine_to_vertex(const RatVec& obj, LPResult& res) const {
        ConstraintSystem face = sys_;
        LinRow pin;
        for (int v = 0; v < sys_.num_vars; ++v)
            if (obj[static_cast<std::size_t>(v)] != 0)
                pin.coeffs[v] = obj[static_cast<std::size_t>(v)];
        if (!pin.coeffs.empty()) {
            pin.rel = Rel::eq;
            pin.rhs = res.value;
            pin.tag = "opt-face";
            face.rows.push_back(pin);
        }
        for (int v = 0; v < sys_.num_vars && !res.integral(); ++v) {
            Simplex fs(face);
            RatVec unit(static_cast<std::size_t>(sys_.num_vars), Rat(0));
            unit[static_cast<std::size_t>(v)] = 1;
            LPResult r2 = fs.solve(unit, /*maximize=*/false);
            if (r2.status != LPStatus::optimal) break;
            LinRow fix;
            fix.coeffs[v] = 1;
            fix.rel = Rel::eq;
            fix.rhs = r2.value;
            fix.tag = "lex-fix";
            face.rows.push_back(fix);
            res.point = r2.point;
        }
    }
};

inline std::pair<SignMatrix, long long> min_cost_xasm(Cls cls, int n,
                                                      const std::vector<long long>& cost) {
    MinCostSolver s(cls, n);
    return s.solve(cost);
}

}  // namespace sympoly
