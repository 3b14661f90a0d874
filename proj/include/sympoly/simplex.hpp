#pragma once

// Exact rational linear programming: big-M-free two-phase primal simplex
// with Bland's anti-cycling rule.  Free variables are handled by the
// nonnegative split x = p - m; a Simplex instance keeps its basis between
// solves, so sweeping many objectives over one system re-optimizes from
// the previous vertex instead of re-running phase one.

#include <sympoly/constraint_system.hpp>
#include <sympoly/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace sympoly {

enum class LPStatus { optimal, infeasible, unbounded };

inline const char* lp_status_str(LPStatus s) {
    switch (s) {
        case LPStatus::optimal: return "optimal";
        case LPStatus::infeasible: return "infeasible";
        case LPStatus::unbounded: return "unbounded";
    }
    return "?";
}

struct LPResult {
    LPStatus status = LPStatus::infeasible;
    Rat value = 0;
    RatVec point;  // one basic optimal solution when status == optimal

    bool integral() const {
        for (const auto& v : point)
            if (!is_integer(v)) return false;
        return true;
    }
};

class PivotLimitExceeded : public std::runtime_error {
  public:
    PivotLimitExceeded() : std::runtime_error("simplex pivot ceiling exceeded") {}
};

class Simplex {
  public:
    static constexpr std::uint64_t kPivotCeiling = 10'000'000;

    explicit Simplex(const ConstraintSystem& sys) : nvars_(sys.num_vars) {
        const int nsplit = 2 * nvars_;
        int nle = 0;
        for (const auto& r : sys.rows)
            if (r.rel != Rel::eq) ++nle;
        nslack_ = nle;
        art_begin_ = nsplit + nslack_;
        ncols_ = art_begin_ + static_cast<int>(sys.rows.size());  // worst case arts
        int art = art_begin_;
        int slack = nsplit;
        for (const auto& r : sys.rows) {
            auto [c, b] = le_oriented(r);
            RatVec row(static_cast<std::size_t>(ncols_) + 1, Rat(0));
            for (const auto& [v, cv] : c) {
                row[static_cast<std::size_t>(2 * v)] = cv;
                row[static_cast<std::size_t>(2 * v + 1)] = -cv;
            }
            row[static_cast<std::size_t>(ncols_)] = b;
            int svar = -1;
            if (r.rel != Rel::eq) {
                svar = slack++;
                row[static_cast<std::size_t>(svar)] = 1;
            }
            if (row[static_cast<std::size_t>(ncols_)] < 0)
                for (auto& x : row) x = -x;
            int bvar;
            if (svar >= 0 && row[static_cast<std::size_t>(svar)] == 1) {
                bvar = svar;
            } else {
                bvar = art++;
                row[static_cast<std::size_t>(bvar)] = 1;
            }
            rows_.push_back(std::move(row));
            basis_.push_back(bvar);
        }
        art_end_ = art;
    }

    bool feasible() {
        ensure_phase1();
        return feasible_;
    }

    std::uint64_t pivots() const { return pivots_; }

    // Minimizes objective . x; maximize via the negated objective.
    LPResult solve(const RatVec& objective, bool maximize = false) {
        if (static_cast<int>(objective.size()) != nvars_)
            throw std::invalid_argument("objective length != num_vars");
        ensure_phase1();
        if (!feasible_) return {LPStatus::infeasible, 0, {}};

        // reduced cost row from scratch for the current basis
        cost_.assign(static_cast<std::size_t>(ncols_) + 1, Rat(0));
        for (int v = 0; v < nvars_; ++v) {
            Rat c = maximize ? -objective[static_cast<std::size_t>(v)]
                             : objective[static_cast<std::size_t>(v)];
            cost_[static_cast<std::size_t>(2 * v)] = c;
            cost_[static_cast<std::size_t>(2 * v + 1)] = -c;
        }
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            Rat cb = cost_[static_cast<std::size_t>(basis_[i])];  // copy: axpy mutates cost_
            if (cb != 0) axpy_cost(cb, rows_[i]);
        }
        if (!optimize(/*allow_artificials=*/false)) return {LPStatus::unbounded, 0, {}};

        Rat z = -cost_[static_cast<std::size_t>(ncols_)];
        LPResult res;
        res.status = LPStatus::optimal;
        res.value = maximize ? Rat(-z) : z;
        res.point.assign(static_cast<std::size_t>(nvars_), Rat(0));
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            int b = basis_[i];
            if (b < 2 * nvars_) {
                const Rat& val = rows_[i][static_cast<std::size_t>(ncols_)];
                if (b % 2 == 0)
                    res.point[static_cast<std::size_t>(b / 2)] += val;
                else
                    res.point[static_cast<std::size_t>(b / 2)] -= val;
            }
        }
        return res;
    }

  private:
    int nvars_, nslack_ = 0, ncols_ = 0, art_begin_ = 0, art_end_ = 0;
    std::vector<RatVec> rows_;
    std::vector<int> basis_;
    RatVec cost_;
    bool phase1_done_ = false, feasible_ = false;
    std::uint64_t pivots_ = 0;

    void axpy_cost(Rat mult, const RatVec& src) {  // by value: src may alias cost_ entries
        for (std::size_t j = 0; j < src.size(); ++j)
            if (src[j] != 0) cost_[j] -= mult * src[j];
    }

    void pivot(std::size_t r, int c) {
        if (++pivots_ > kPivotCeiling) throw PivotLimitExceeded();
        RatVec& prow = rows_[r];
        const Rat piv = prow[static_cast<std::size_t>(c)];
        std::vector<int> nz;
        nz.reserve(prow.size() / 4);
        for (std::size_t j = 0; j < prow.size(); ++j) {
            if (prow[j] == 0) continue;
            prow[j] /= piv;
            nz.push_back(static_cast<int>(j));
        }
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == r) continue;
            Rat& f = rows_[i][static_cast<std::size_t>(c)];
            if (f == 0) continue;
            Rat mult = f;
            for (int j : nz) rows_[i][static_cast<std::size_t>(j)] -= mult * prow[static_cast<std::size_t>(j)];
        }
        Rat cf = cost_[static_cast<std::size_t>(c)];
        if (cf != 0)
            for (int j : nz) cost_[static_cast<std::size_t>(j)] -= cf * prow[static_cast<std::size_t>(j)];
        basis_[r] = c;
    }

    // Bland: entering = lowest column index with negative reduced cost;
    // leaving = lexicographic min ratio, ties by lowest basis index.
    // Returns false on unboundedness.
    bool optimize(bool allow_artificials) {
        const int limit = allow_artificials ? art_end_ : art_begin_;
        for (;;) {
            int enter = -1;
            for (int j = 0; j < limit; ++j)
                if (cost_[static_cast<std::size_t>(j)] < 0) {
                    enter = j;
                    break;
                }
            if (enter < 0) return true;
            std::size_t leave = rows_.size();
            Rat best_ratio = 0;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                const Rat& a = rows_[i][static_cast<std::size_t>(enter)];
                if (a <= 0) continue;
                Rat ratio = rows_[i][static_cast<std::size_t>(ncols_)] / a;
                if (leave == rows_.size() || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == rows_.size()) return false;
            pivot(leave, enter);
        }
    }

    void ensure_phase1() {
        if (phase1_done_) return;
        phase1_done_ = true;
        bool any_art = false;
        for (int b : basis_)
            if (b >= art_begin_) any_art = true;
        if (any_art) {
            // phase-1 objective: sum of artificial variables
            cost_.assign(static_cast<std::size_t>(ncols_) + 1, Rat(0));
            for (int j = art_begin_; j < art_end_; ++j) cost_[static_cast<std::size_t>(j)] = 1;
            for (std::size_t i = 0; i < rows_.size(); ++i)
                if (basis_[i] >= art_begin_) axpy_cost(Rat(1), rows_[i]);
            bool bounded = optimize(/*allow_artificials=*/true);
            (void)bounded;  // phase 1 is always bounded below by 0
            if (-cost_[static_cast<std::size_t>(ncols_)] != 0) {
                feasible_ = false;
                return;
            }
            // drive artificials out of the basis; drop rows that are
            // linearly dependent on earlier ones
            for (std::size_t i = rows_.size(); i-- > 0;) {
                if (basis_[i] < art_begin_) continue;
                int c = -1;
                for (int j = 0; j < art_begin_; ++j)
                    if (rows_[i][static_cast<std::size_t>(j)] != 0) {
                        c = j;
                        break;
                    }
                if (c >= 0) {
                    pivot(i, c);
                } else {
                    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
                    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
                }
            }
        }
        feasible_ = true;
    }
};

inline LPResult lp_solve(const ConstraintSystem& sys, const RatVec& objective, bool maximize = false) {
    Simplex s(sys);
    return s.solve(objective, maximize);
}

class InfeasibleSystem : public std::runtime_error {
  public:
    InfeasibleSystem() : std::runtime_error("constraint system is infeasible") {}
};

// A row a.x <= b is an implicit equality iff min a.x over the system equals
// b (symmetrically for >=); equality rows are trivially implicit.
inline bool is_implicit_equality(Simplex& solver, const ConstraintSystem& sys,
                                 std::size_t row_index) {
    const LinRow& r = sys.rows.at(row_index);
    if (r.rel == Rel::eq) return true;
    LPResult res = solver.solve(r.dense(sys.num_vars), /*maximize=*/r.rel == Rel::ge);
    if (res.status == LPStatus::infeasible) throw InfeasibleSystem();
    if (res.status == LPStatus::unbounded) return false;
    return res.value == r.rhs;
}

inline bool is_implicit_equality(const ConstraintSystem& sys, std::size_t row_index) {
    Simplex solver(sys);
    return is_implicit_equality(solver, sys, row_index);
}

// One solver instance shared across all rows of the same system.  Feasible
// points collected from earlier optima witness strict slack: a row slack at
// the running average of feasible points cannot be an implicit equality, so
// only rows tight at the average need an LP.
inline std::vector<bool> implicit_rows(const ConstraintSystem& sys) {
    Simplex solver(sys);
    std::vector<bool> out(sys.rows.size(), false);
    RatVec sum(static_cast<std::size_t>(sys.num_vars), Rat(0));
    long count = 0;
    for (std::size_t i = 0; i < sys.rows.size(); ++i) {
        const LinRow& r = sys.rows[i];
        if (r.rel == Rel::eq) {
            out[i] = true;
            continue;
        }
        if (count > 0) {
            Rat lhs_sum = r.lhs_at(sum);  // lhs at the average, scaled by count
            if (r.rel == Rel::le ? lhs_sum < r.rhs * count : lhs_sum > r.rhs * count) continue;
        }
        LPResult res = solver.solve(r.dense(sys.num_vars), /*maximize=*/r.rel == Rel::ge);
        if (res.status == LPStatus::infeasible) throw InfeasibleSystem();
        if (res.status == LPStatus::unbounded) continue;
        out[i] = res.value == r.rhs;
        for (std::size_t v = 0; v < sum.size(); ++v) sum[v] += res.point[v];
        ++count;
    }
    return out;
}

// A row is redundant iff optimizing its left-hand side against all other
// rows cannot exceed its bound; an unbounded optimum is non-redundant.
inline bool is_redundant(const ConstraintSystem& sys, std::size_t row_index) {
    const LinRow& r = sys.rows.at(row_index);
    ConstraintSystem rest;
    rest.num_vars = sys.num_vars;
    rest.name = sys.name + "/minus-row";
    for (std::size_t i = 0; i < sys.rows.size(); ++i)
        if (i != row_index) rest.rows.push_back(sys.rows[i]);
    Simplex solver(rest);
    RatVec obj = r.dense(sys.num_vars);
    auto check = [&](Rel rel) {
        LPResult res = solver.solve(obj, /*maximize=*/rel == Rel::le);
        if (res.status == LPStatus::unbounded) return false;
        if (res.status == LPStatus::infeasible) throw InfeasibleSystem();
        return rel == Rel::le ? res.value <= r.rhs : res.value >= r.rhs;
    };
    if (r.rel == Rel::eq) return check(Rel::le) && check(Rel::ge);
    return check(r.rel);
}

}  // namespace sympoly
