#pragma once

// Builders for the exact constraint systems: the per-class core systems,
// the full-space descriptions (ASM system, symmetry subspaces, fixed rows),
// and the incidence matrices behind their integrality arguments.

#include <sympoly/constraint_system.hpp>
#include <sympoly/core.hpp>
#include <sympoly/sign_matrix.hpp>

#include <map>
#include <set>
#include <string>
#include <vector>

namespace sympoly {

namespace detail {

inline std::string ij(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}
inline std::string idx1(int i) { return "(" + std::to_string(i) + ")"; }

// Accumulating coefficient map; repeated positions add up (the quarter-turn
// prefixes revisit core cells).
struct Expr {
    std::map<int, Rat> c;
    void add(int var, long coeff = 1) {
        auto it = c.find(var);
        if (it == c.end()) {
            if (coeff != 0) c[var] = coeff;
        } else {
            it->second += coeff;
            if (it->second == 0) c.erase(it);
        }
    }
};

// Adds "lo <= expr <= hi" or an equality, skipping rows that degenerate to
// an empty coefficient set (n = 1 corner cases); a degenerate infeasible row
// would be a builder bug.
inline void add_bounds(ConstraintSystem& s, const Expr& e, long lo, long hi,
                       const std::string& tag) {
    if (e.c.empty()) {
        if (lo > 0 || hi < 0) throw std::logic_error("degenerate infeasible row " + tag);
        return;
    }
    s.add_two_sided(e.c, Rat(lo), Rat(hi), tag);
}

inline void add_eq(ConstraintSystem& s, const Expr& e, long rhs, const std::string& tag) {
    if (e.c.empty()) {
        if (rhs != 0) throw std::logic_error("degenerate infeasible row " + tag);
        return;
    }
    s.add({e.c, Rel::eq, Rat(rhs), tag});
}

inline int chi_even(int i) { return i % 2 == 0 ? 1 : 0; }  // chi_{2|i}

}  // namespace detail

// Prefix-sum description of the ASM polytope: row/column prefixes bounded
// by [0,1], row and column sums equal to 1.
inline ConstraintSystem build_asm(int n) {
    using namespace detail;
    if (n < 1) throw std::invalid_argument("build_asm: n >= 1 required");
    ConstraintSystem s;
    s.num_vars = n * n;
    s.name = "asm(n=" + std::to_string(n) + ")";
    s.kind = SystemKind::fullspace;
    auto X = [&](int i, int j) { return (i - 1) * n + (j - 1); };  // 1-based input

    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n - 1; ++j) {
            Expr e;
            for (int jp = 1; jp <= j; ++jp) e.add(X(i, jp));
            add_bounds(s, e, 0, 1, "asm:row-prefix" + ij(i, j));
        }
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n; ++j) {
            Expr e;
            for (int ip = 1; ip <= i; ++ip) e.add(X(ip, j));
            add_bounds(s, e, 0, 1, "asm:col-prefix" + ij(i, j));
        }
    for (int i = 1; i <= n; ++i) {
        Expr e;
        for (int j = 1; j <= n; ++j) e.add(X(i, j));
        add_eq(s, e, 1, "asm:row-sum" + idx1(i));
    }
    for (int j = 1; j <= n; ++j) {
        Expr e;
        for (int i = 1; i <= n; ++i) e.add(X(i, j));
        add_eq(s, e, 1, "asm:col-sum" + idx1(j));
    }
    return s;
}

// Core systems, one per class, in the variables of core_positions(cls, n).
// Every row cites its source equation in the tag.
inline ConstraintSystem build_core(Cls cls, int n) {
    using namespace detail;
    if (n < 1) throw std::invalid_argument("build_core: n >= 1 required");
    if (cls == Cls::ASM) {
        ConstraintSystem s = build_asm(n);
        s.kind = SystemKind::core;
        return s;
    }
    CorePattern p = core_positions(cls, n);
    const int k = p.k, ell = p.ell;
    const bool odd = (n % 2 == 1);
    ConstraintSystem s;
    s.num_vars = p.size();
    s.name = std::string(cls_name(cls)) + "-core(n=" + std::to_string(n) + ")";
    s.kind = SystemKind::core;
    auto Y = [&](int i, int j) {
        int t = p.index1(i, j);
        if (t < 0) throw std::logic_error("non-core position in builder");
        return t;
    };

    switch (cls) {
        case Cls::ASM:
            break;  // handled above
        case Cls::VSASM: {
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= k - 1; ++j) {
                    Expr e;
                    for (int jp = 1; jp <= j; ++jp) e.add(Y(i, jp));
                    add_bounds(s, e, 0, 1, "vsasm:row-prefix" + ij(i, j));
                }
            for (int i = 1; i <= n - 1; ++i)
                for (int j = 1; j <= k; ++j) {
                    Expr e;
                    for (int ip = 1; ip <= i; ++ip) e.add(Y(ip, j));
                    add_bounds(s, e, 0, 1, "vsasm:col-prefix" + ij(i, j));
                }
            for (int i = 1; i <= n; ++i) {
                Expr e;
                for (int j = 1; j <= k; ++j) e.add(Y(i, j));
                add_eq(s, e, chi_even(i), "vsasm:row-sum" + idx1(i));
            }
            for (int j = 1; j <= k; ++j) {
                Expr e;
                for (int i = 1; i <= n; ++i) e.add(Y(i, j));
                add_eq(s, e, 1, "vsasm:col-sum" + idx1(j));
            }
            break;
        }
        case Cls::VHSASM: {
            for (int i = 1; i <= k; ++i)
                for (int j = 1; j <= k - 1; ++j) {
                    Expr e;
                    for (int jp = 1; jp <= j; ++jp) e.add(Y(i, jp));
                    add_bounds(s, e, 0, 1, "vhsasm:row-prefix" + ij(i, j));
                }
            for (int i = 1; i <= k - 1; ++i)
                for (int j = 1; j <= k; ++j) {
                    Expr e;
                    for (int ip = 1; ip <= i; ++ip) e.add(Y(ip, j));
                    add_bounds(s, e, 0, 1, "vhsasm:col-prefix" + ij(i, j));
                }
            for (int i = 1; i <= k; ++i) {
                Expr e;
                for (int j = 1; j <= k; ++j) e.add(Y(i, j));
                add_eq(s, e, chi_even(i), "vhsasm:row-sum" + idx1(i));
            }
            for (int j = 1; j <= k; ++j) {
                Expr e;
                for (int i = 1; i <= k; ++i) e.add(Y(i, j));
                add_eq(s, e, chi_even(j), "vhsasm:col-sum" + idx1(j));
            }
            break;
        }
        case Cls::HTSASM: {
            auto row_prefix = [&](int i, int j) {  // prefix of assembled row i up to column j
                Expr e;
                for (int jp = 1; jp <= std::min(ell, j); ++jp) e.add(Y(i, jp));
                for (int jp = ell + 1; jp <= j; ++jp) e.add(Y(n + 1 - i, n + 1 - jp));
                return e;
            };
            for (int i = 1; i <= k; ++i)
                for (int j = 1; j <= n - 1; ++j)
                    add_bounds(s, row_prefix(i, j), 0, 1, "htsasm:row-prefix" + ij(i, j));
            for (int i = 1; i <= n - 1; ++i)
                for (int j = 1; j <= k; ++j) {
                    Expr e;
                    for (int ip = 1; ip <= i; ++ip) e.add(Y(ip, j));
                    add_bounds(s, e, 0, 1, "htsasm:col-prefix" + ij(i, j));
                }
            for (int i = 1; i <= k; ++i) add_eq(s, row_prefix(i, n), 1, "htsasm:row-sum" + idx1(i));
            for (int j = 1; j <= k; ++j) {
                Expr e;
                for (int i = 1; i <= n; ++i) e.add(Y(i, j));
                add_eq(s, e, 1, "htsasm:col-sum" + idx1(j));
            }
            if (odd) {
                for (int j = 1; j <= k; ++j) {
                    Expr e;
                    for (int jp = 1; jp <= j; ++jp) e.add(Y(ell, jp));
                    add_bounds(s, e, 0, 1, "htsasm:mid-row-pref" + idx1(j));
                }
                for (int i = 1; i <= k; ++i) {
                    Expr e;
                    for (int ip = 1; ip <= i; ++ip) e.add(Y(ip, ell));
                    add_bounds(s, e, 0, 1, "htsasm:mid-col-pref" + idx1(i));
                }
            }
            break;
        }
        case Cls::QTSASM: {
            // D = [k]x[n], plus row k+1 restricted to [k] when n is odd.
            auto prefix = [&](int i, int j) {
                Expr e;
                for (int jp = 1; jp <= std::min(j, k); ++jp) e.add(Y(i, jp));
                for (int jp = k + 1; jp <= j; ++jp) e.add(Y(n + 1 - jp, i));
                return e;
            };
            for (int i = 1; i <= k; ++i)
                for (int j = 1; j <= n - 1; ++j)
                    add_bounds(s, prefix(i, j), 0, 1, "qtsasm:prefix" + ij(i, j));
            if (odd)
                for (int j = 1; j <= k; ++j)
                    add_bounds(s, prefix(ell, j), 0, 1, "qtsasm:prefix" + ij(ell, j));
            for (int i = 1; i <= k; ++i) add_eq(s, prefix(i, n), 1, "qtsasm:full" + idx1(i));
            break;
        }
        case Cls::DSASM: {
            auto L_prefix = [&](int i, int j) {
                Expr e;
                for (int ip = 1; ip <= std::min(i, j); ++ip) e.add(Y(ip, i));
                for (int jp = i + 1; jp <= j; ++jp) e.add(Y(i, jp));
                return e;
            };
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n - 1; ++j)
                    add_bounds(s, L_prefix(i, j), 0, 1, "dsasm:L-prefix" + ij(i, j));
            for (int i = 1; i <= n; ++i) add_eq(s, L_prefix(i, n), 1, "dsasm:L-sum" + idx1(i));
            break;
        }
        case Cls::DASASM: {
            auto row_prefix = [&](int i, int j) {
                Expr e;
                for (int ip = 1; ip <= std::min(i - 1, j); ++ip) e.add(Y(ip, i));
                for (int jp = i; jp <= std::min(n + 1 - i, j); ++jp) e.add(Y(i, jp));
                for (int ip = n - i + 2; ip <= j; ++ip) e.add(Y(n + 1 - ip, n + 1 - i));
                return e;
            };
            for (int i = 1; i <= k; ++i)
                for (int j = 1; j <= n - 1; ++j)
                    add_bounds(s, row_prefix(i, j), 0, 1, "dasasm:row-prefix" + ij(i, j));
            for (int i = 1; i <= k; ++i) add_eq(s, row_prefix(i, n), 1, "dasasm:row-sum" + idx1(i));
            if (odd)
                for (int i = 1; i <= k; ++i) {
                    Expr e;
                    for (int ip = 1; ip <= i; ++ip) e.add(Y(ip, k + 1));
                    add_bounds(s, e, 0, 1, "dasasm:mid-col-pref" + idx1(i));
                }
            break;
        }
        case Cls::TSASM: {
            auto L_prefix = [&](int i, int j) {
                Expr e;
                for (int ip = 1; ip <= std::min(i, j); ++ip) e.add(Y(ip, i));
                for (int jp = i + 1; jp <= j; ++jp) e.add(Y(i, jp));
                return e;
            };
            for (int i = 1; i <= k; ++i)
                for (int j = 1; j <= k - 1; ++j)
                    add_bounds(s, L_prefix(i, j), 0, 1, "tsasm:L-prefix" + ij(i, j));
            for (int i = 1; i <= k; ++i)
                add_eq(s, L_prefix(i, k), chi_even(i), "tsasm:L-sum" + idx1(i));
            break;
        }
    }
    return s;
}

namespace detail {

// Pairwise-equality rows of a symmetry subspace, canonicalized (smaller
// variable index first) and deduplicated.
inline void add_symmetry_rows(ConstraintSystem& s, int n, D4 g, const std::string& family) {
    std::set<std::pair<int, int>> seen;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto [si, sj] = d4_source(g, n, i, j);
            int a = i * n + j, b = si * n + sj;
            if (a == b) continue;
            auto pr = std::minmax(a, b);
            if (!seen.insert({pr.first, pr.second}).second) continue;
            LinRow r;
            r.coeffs[pr.first] = 1;
            r.coeffs[pr.second] = -1;
            r.rel = Rel::eq;
            r.rhs = 0;
            r.tag = family + ij(pr.first / n + 1, pr.first % n + 1);
            s.add(std::move(r));
        }
}

inline void add_fixed_row(ConstraintSystem& s, std::set<std::pair<int, long>>& seen, int var,
                          long value, const std::string& tag) {
    if (!seen.insert({var, value}).second) return;
    LinRow r;
    r.coeffs[var] = 1;
    r.rel = Rel::eq;
    r.rhs = value;
    r.tag = tag;
    s.add(std::move(r));
}

}  // namespace detail

// Full-space descriptions over the n*n matrix entries: the ASM system plus
// the class's symmetry subspace, plus fixed middle-line entries where the
// class description prescribes them.  Quarter-turn cut rows are not
// included here; see qtsasm_cuts.hpp.
inline ConstraintSystem build_fullspace(Cls cls, int n) {
    using namespace detail;
    ConstraintSystem s = build_asm(n);
    s.name = std::string(cls_name(cls)) + "-fullspace(n=" + std::to_string(n) + ")";
    s.kind = SystemKind::fullspace_intersection;
    const int k = n / 2;
    auto X = [&](int i, int j) { return (i - 1) * n + (j - 1); };
    std::set<std::pair<int, long>> fixed;

    switch (cls) {
        case Cls::ASM:
            s.kind = SystemKind::fullspace;
            break;
        case Cls::VSASM:
            s.kind = SystemKind::fullspace;
            add_symmetry_rows(s, n, D4::reflV, "P_VS");
            for (int i = 1; i <= n; ++i)
                add_fixed_row(s, fixed, X(i, k + 1), sign_pow(i + 1), "vsasm:mid-col" + idx1(i));
            break;
        case Cls::VHSASM:
            s.kind = SystemKind::fullspace;
            add_symmetry_rows(s, n, D4::reflV, "P_VS");
            add_symmetry_rows(s, n, D4::reflH, "P_HS");
            for (int i = 1; i <= n; ++i)
                add_fixed_row(s, fixed, X(i, k + 1), sign_pow(i + 1), "vhsasm:mid-col" + idx1(i));
            for (int j = 1; j <= n; ++j)
                add_fixed_row(s, fixed, X(k + 1, j), sign_pow(j + 1), "vhsasm:mid-row" + idx1(j));
            break;
        case Cls::HTSASM:
            add_symmetry_rows(s, n, D4::rot180, "P_HTS");
            break;
        case Cls::QTSASM:
            add_symmetry_rows(s, n, D4::rot90, "P_QTS");
            break;
        case Cls::DSASM:
            add_symmetry_rows(s, n, D4::reflD, "P_DS");
            break;
        case Cls::DASASM:
            add_symmetry_rows(s, n, D4::reflD, "P_DAS:d");
            add_symmetry_rows(s, n, D4::reflA, "P_DAS:a");
            break;
        case Cls::TSASM:
            s.kind = SystemKind::fullspace;
            add_symmetry_rows(s, n, D4::reflV, "P_VS");
            add_symmetry_rows(s, n, D4::reflD, "P_DS");
            for (int i = 1; i <= n; ++i)
                add_fixed_row(s, fixed, X(i, k + 1), sign_pow(i + 1), "tsasm:mid-col" + idx1(i));
            for (int j = 1; j <= n; ++j)
                add_fixed_row(s, fixed, X(k + 1, j), sign_pow(j + 1), "tsasm:mid-row" + idx1(j));
            break;
    }
    return s;
}

// --- incidence matrices for the total-unimodularity property tests --------

// 0/1 incidence matrix of the row- and column-prefix set families of the
// prefix-bounded core systems (a union of two laminar families).
inline std::vector<std::vector<int>> laminar_incidence(Cls cls, int n) {
    if (cls != Cls::VSASM && cls != Cls::VHSASM && cls != Cls::HTSASM)
        throw std::invalid_argument("laminar_incidence: VSASM/VHSASM/HTSASM only");
    ConstraintSystem s = build_core(cls, n);
    std::vector<std::vector<int>> rows;
    std::set<std::vector<int>> seen;
    for (const auto& r : s.rows) {
        std::vector<int> inc(static_cast<std::size_t>(s.num_vars), 0);
        for (const auto& [v, c] : r.coeffs) {
            if (c != 1) throw std::logic_error("laminar incidence expects unit coefficients");
            inc[static_cast<std::size_t>(v)] = 1;
        }
        if (seen.insert(inc).second) rows.push_back(std::move(inc));
    }
    return rows;
}

// Coefficient matrices of the z-substituted systems whose columns carry at
// most one +1 and one -1 (transposes of digraph incidence matrices).
inline std::vector<std::vector<int>> digraph_incidence(Cls cls, int n) {
    const int k = n / 2;
    const bool odd = (n % 2 == 1);
    std::map<std::pair<int, int>, int> zcol;  // free z variable -> column
    std::vector<std::vector<int>> rows;

    if (cls == Cls::DSASM || cls == Cls::TSASM) {
        const int m = (cls == Cls::DSASM) ? n : k;
        // free z_{i,j} for i in [m], j in [i,m]; z_{0,.} and z_{.,m+1} fixed 0
        for (int i = 1; i <= m; ++i)
            for (int j = i; j <= m; ++j) zcol[{i, j}] = static_cast<int>(zcol.size());
        auto add_diff = [&](std::pair<int, int> plus, std::pair<int, int> minus) {
            std::vector<int> r(zcol.size(), 0);
            bool any = false;
            if (auto it = zcol.find(plus); it != zcol.end()) r[it->second] += 1, any = true;
            if (auto it = zcol.find(minus); it != zcol.end()) r[it->second] -= 1, any = true;
            if (any) rows.push_back(std::move(r));
        };
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= i - 1; ++j) add_diff({j, i}, {j, i + 1});
        for (int i = 1; i <= m; ++i)
            for (int j = i; j <= m - 1; ++j) add_diff({i, j + 1}, {i - 1, j + 1});
        for (int i = 1; i <= m; ++i) add_diff({i, i}, {i - 1, i + 1});
    } else if (cls == Cls::DASASM) {
        // consistency rows z_{i,j} - z_{i,j-1} - z_{r,s} + z_{r,s-1} = 0 for
        // off-diagonal core positions; z_{i,0} = 0 is fixed
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= n; ++j) zcol[{i, j}] = static_cast<int>(zcol.size());
        if (odd)
            for (int j = 1; j <= k; ++j) zcol[{k + 1, j}] = static_cast<int>(zcol.size());
        CorePattern p = core_positions(cls, n);
        for (auto [i0, j0] : p.positions) {
            int i = i0 + 1, j = j0 + 1;
            if (i == j || j == n + 1 - i) continue;
            std::pair<int, int> rs;
            if (j <= k) rs = {j, i};
            else if (odd && j == k + 1) rs = {k + 1, i};
            else rs = {n + 1 - j, n + 1 - i};
            std::vector<int> r(zcol.size(), 0);
            auto bump = [&](std::pair<int, int> z, int delta) {
                if (auto it = zcol.find(z); it != zcol.end()) r[it->second] += delta;
            };
            bump({i, j}, 1);
            bump({i, j - 1}, -1);
            bump(rs, -1);
            bump({rs.first, rs.second - 1}, 1);
            rows.push_back(std::move(r));
        }
    } else {
        throw std::invalid_argument("digraph_incidence: DSASM/TSASM/DASASM only");
    }
    return rows;
}

}  // namespace sympoly
