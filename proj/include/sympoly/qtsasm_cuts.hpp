#pragma once

// The quarter-turn Chvatal-Gomory cut family: parity-valid sign matrices S
// over the prefix index set D, the cut each S generates, exhaustive
// separation, and the cut-augmented core system.

#include <sympoly/constraint_system.hpp>
#include <sympoly/core.hpp>
#include <sympoly/enumerate.hpp>
#include <sympoly/hrep.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

namespace sympoly {

// D = [k] x [n], extended by row k+1 restricted to [k] when n is odd;
// n_i is the last prefix column of row i.
struct QtsasmDomain {
    int n = 0, k = 0, ell = 0;
    std::vector<std::pair<int, int>> positions;  // 1-based (i,j), row-major

    explicit QtsasmDomain(int n_) : n(n_), k(n_ / 2), ell((n_ + 1) / 2) {
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= n; ++j) positions.emplace_back(i, j);
        if (n % 2 == 1)
            for (int j = 1; j <= k; ++j) positions.emplace_back(k + 1, j);
    }

    int size() const { return static_cast<int>(positions.size()); }
    int row_end(int i) const { return i <= k ? n : k; }  // n_i

    int flat(int i, int j) const {  // 1-based
        if (i <= k) return (i - 1) * n + (j - 1);
        return k * n + (j - 1);
    }
};

struct CutSign {
    // values over D, aligned with QtsasmDomain::positions
    std::vector<int> s;

    int at(const QtsasmDomain& d, int i, int j) const { return s[static_cast<std::size_t>(d.flat(i, j))]; }
};

// Coefficient that y_{i,j} would receive in the un-halved cut; the parity
// condition requires it to be even at every core position.
inline long long cut_coefficient(const QtsasmDomain& d, const CutSign& s, int i, int j) {
    long long a = 0;
    for (int jp = j; jp <= d.row_end(i); ++jp) a += s.at(d, i, jp);
    for (int ip = d.n + 1 - i; ip <= d.n; ++ip) a += s.at(d, j, ip);
    return a;
}

inline bool is_valid_sign(const QtsasmDomain& d, const CutSign& s) {
    if (static_cast<int>(s.s.size()) != d.size())
        throw std::invalid_argument("sign matrix not defined on all of D");
    for (int i = 1; i <= d.ell; ++i)
        for (int j = 1; j <= d.k; ++j)
            if (cut_coefficient(d, s, i, j) % 2 != 0) return false;
    return true;
}

// The cut generated by a valid S, expanded through the prefix expressions:
// sum over (i,j) in D of s_{i,j} * z_{i,j}, halved, with floored right-hand
// side.  Every y-coefficient is checked to be even before halving.
inline LinRow cut_from_sign(const QtsasmDomain& d, const CorePattern& p, const CutSign& s) {
    std::map<int, long long> acc;  // core var -> un-halved coefficient
    for (auto [i, j] : d.positions) {
        int sv = s.at(d, i, j);
        if (sv == 0) continue;
        for (int jp = 1; jp <= std::min(j, d.k); ++jp) acc[p.index1(i, jp)] += sv;
        for (int jp = d.k + 1; jp <= j; ++jp) acc[p.index1(d.n + 1 - jp, i)] += sv;
    }
    long long pos = 0, neg_last = 0;
    for (auto [i, j] : d.positions) {
        int sv = s.at(d, i, j);
        if (sv == 1) ++pos;
        if (sv == -1 && j == d.n) ++neg_last;
    }
    LinRow r;
    for (const auto& [v, a] : acc) {
        if (a % 2 != 0) throw std::logic_error("cut from an invalid sign matrix (odd coefficient)");
        if (a != 0) r.coeffs[v] = Rat(a / 2);
    }
    r.rel = Rel::le;
    r.rhs = Rat(floor_div(Int(pos - neg_last), Int(2)));
    return r;
}

// All parity-valid sign matrices, in lexicographic order of the flattened s
// (entry order -1 < 0 < 1).
inline std::vector<CutSign> enumerate_valid_signs(int n, std::optional<int> cap = std::nullopt) {
    int limit = cap.value_or(5);
    if (n > limit)
        throw CapExceeded("enumerate_valid_signs: n=" + std::to_string(n) + " exceeds cap " +
                          std::to_string(limit));
    QtsasmDomain d(n);
    std::vector<CutSign> out;
    CutSign s;
    s.s.assign(static_cast<std::size_t>(d.size()), -1);
    if (d.size() == 0) {
        out.push_back(s);
        return out;
    }
    for (;;) {
        if (is_valid_sign(d, s)) out.push_back(s);
        int t = d.size() - 1;
        while (t >= 0 && s.s[static_cast<std::size_t>(t)] == 1) {
            s.s[static_cast<std::size_t>(t)] = -1;
            --t;
        }
        if (t < 0) break;
        ++s.s[static_cast<std::size_t>(t)];
    }
    return out;
}

namespace detail {

// Scale-canonical integer form of an inequality row: divide by the gcd of
// all coefficients and the right-hand side.
inline void canonicalize_cut(LinRow& r) {
    Int g = 0;
    for (const auto& [v, c] : r.coeffs) g = boost::multiprecision::gcd(g, num(c));
    g = boost::multiprecision::gcd(g, num(r.rhs));
    if (g > 1) {
        for (auto& [v, c] : r.coeffs) c /= Rat(g);
        r.rhs /= Rat(g);
    }
}

inline std::string halfspace_key(const LinRow& r, int num_vars) {
    auto [c, b] = le_oriented(r);
    std::string key;
    for (int v = 0; v < num_vars; ++v) {
        auto it = c.find(v);
        key += (it == c.end()) ? "0" : rat_str(it->second);
        key += ',';
    }
    key += '|';
    key += rat_str(b);
    return key;
}

}  // namespace detail

struct QtsasmCutFamily {
    QtsasmDomain domain;
    CorePattern pattern;
    ConstraintSystem base;
    std::vector<LinRow> cuts;              // canonical, deduplicated
    std::vector<std::size_t> sign_index;   // cut -> index in the sign enumeration
    long long valid_sign_count = 0;

    explicit QtsasmCutFamily(int n, std::optional<int> cap = std::nullopt)
        : domain(n), pattern(core_positions(Cls::QTSASM, n)), base(build_core(Cls::QTSASM, n)) {
        auto signs = enumerate_valid_signs(n, cap);
        valid_sign_count = static_cast<long long>(signs.size());

        // upper bounds already implied by base rows with an identical
        // normalized left-hand side
        std::map<std::string, Rat> base_bound;  // coeff key -> tightest rhs
        auto coeff_key = [&](const std::map<int, Rat>& c) {
            std::string key;
            for (int v = 0; v < base.num_vars; ++v) {
                auto it = c.find(v);
                key += (it == c.end()) ? "0" : rat_str(it->second);
                key += ',';
            }
            return key;
        };
        auto note_bound = [&](const std::map<int, Rat>& c, const Rat& b) {
            Int g = 0;
            for (const auto& [v, x] : c) g = boost::multiprecision::gcd(g, num(x));
            if (g == 0) return;
            std::map<int, Rat> cc;
            for (const auto& [v, x] : c) cc[v] = x / Rat(g);
            auto key = coeff_key(cc);
            Rat bound = b / Rat(g);
            auto it = base_bound.find(key);
            if (it == base_bound.end() || bound < it->second) base_bound[key] = bound;
        };
        for (const auto& row : base.rows) {
            auto [c, b] = le_oriented(row);
            note_bound(c, b);
            if (row.rel == Rel::eq) {
                std::map<int, Rat> neg;
                for (const auto& [v, x] : row.coeffs) neg[v] = -x;
                note_bound(neg, -row.rhs);
            }
        }

        // per direction, keep only the tightest right-hand side; a parallel
        // "<=" row with a larger bound is implied by the tighter one
        struct Best {
            LinRow row;
            Rat bound;  // rhs normalized by the direction gcd
            std::size_t sign;
        };
        std::map<std::string, Best> by_direction;
        for (std::size_t si = 0; si < signs.size(); ++si) {
            LinRow r = cut_from_sign(domain, pattern, signs[si]);
            if (r.coeffs.empty()) {
                if (r.rhs < 0)
                    throw std::logic_error("contradictory trivial cut on a non-empty domain");
                continue;  // 0 <= rhs, trivial
            }
            detail::canonicalize_cut(r);
            Int g = 0;
            for (const auto& [v, x] : r.coeffs) g = boost::multiprecision::gcd(g, num(x));
            std::map<int, Rat> cc;
            for (const auto& [v, x] : r.coeffs) cc[v] = x / Rat(g);
            Rat bound = r.rhs / Rat(g);
            auto key = coeff_key(cc);
            // implied by a base bound with the same left-hand side?
            auto bit = base_bound.find(key);
            if (bit != base_bound.end() && bit->second <= bound) continue;
            auto it = by_direction.find(key);
            if (it == by_direction.end() || bound < it->second.bound)
                by_direction[key] = {std::move(r), bound, si};
        }
        for (auto& [key, best] : by_direction) {
            best.row.tag = "qtsasm:cut:" + std::to_string(best.sign);
            sign_index.push_back(best.sign);
            cuts.push_back(std::move(best.row));
        }
    }

    // Most violated cut at y, if any: largest (lhs - rhs) > 0, ties broken
    // toward the lowest leading variable, then smallest support, then the
    // lexicographically smallest coefficient vector.
    std::optional<LinRow> separate(const RatVec& y) const {
        const LinRow* best = nullptr;
        Rat best_viol = 0;
        auto better = [&](const LinRow& a, const LinRow& b) {  // true if a beats b
            int la = a.coeffs.begin()->first, lb = b.coeffs.begin()->first;
            if (la != lb) return la < lb;
            if (a.coeffs.size() != b.coeffs.size()) return a.coeffs.size() < b.coeffs.size();
            auto da = a.dense(base.num_vars), db = b.dense(base.num_vars);
            if (da != db) return da < db;
            return a.rhs < b.rhs;
        };
        for (const auto& r : cuts) {
            Rat viol = r.lhs_at(y) - r.rhs;
            if (viol <= 0) continue;
            if (!best || viol > best_viol || (viol == best_viol && better(r, *best))) {
                best = &r;
                best_viol = viol;
            }
        }
        if (!best) return std::nullopt;
        return *best;
    }
};

// Base core system plus every non-trivial, deduplicated cut row.
inline ConstraintSystem build_qtsasm_hull(int n, std::optional<int> cap = std::nullopt) {
    QtsasmCutFamily fam(n, cap);
    ConstraintSystem s = fam.base;
    s.name = "QTSASM-hull(n=" + std::to_string(n) + ")";
    for (const auto& r : fam.cuts) s.rows.push_back(r);
    return s;
}

// Exhaustive separation over the whole family (the family may be
// exponential; desk scale permits the 3^|D| sweep).
inline std::optional<LinRow> separate(const RatVec& y, int n,
                                      std::optional<int> cap = std::nullopt) {
    QtsasmCutFamily fam(n, cap);
    if (!fam.base.satisfied_by(y))
        throw std::invalid_argument("separate: point violates the base system");
    return fam.separate(y);
}

}  // namespace sympoly
