#pragma once

// Brute-force oracle: direct ASM enumeration by prefix-state backtracking,
// and per-class enumeration through the integer points of the core systems.

#include <sympoly/core.hpp>
#include <sympoly/hrep.hpp>
#include <sympoly/sign_matrix.hpp>

#include <algorithm>
#include <future>
#include <optional>
#include <stdexcept>
#include <vector>

namespace sympoly {

class CapExceeded : public std::runtime_error {
  public:
    CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline int default_cap(Cls c) {
    switch (c) {
        case Cls::ASM: return 6;
        case Cls::VSASM: return 9;
        case Cls::VHSASM: return 11;
        case Cls::HTSASM: return 6;
        case Cls::QTSASM: return 6;
        case Cls::DSASM: return 6;
        case Cls::DASASM: return 7;
        case Cls::TSASM: return 9;
    }
    return 6;
}

struct EnumerationReport {
    Cls cls;
    int n = 0;
    long long count = 0;
    std::vector<SignMatrix> members;
};

// All n x n ASMs by cell-major backtracking: every partial row/column
// prefix stays in {0,1}, full lines sum to 1.  Values are tried in
// ascending order, so the output is already in lexicographic order of the
// flattened entry vector.
inline std::vector<SignMatrix> enumerate_asms(int n, std::optional<int> cap = std::nullopt) {
    int limit = cap.value_or(default_cap(Cls::ASM));
    if (n > limit)
        throw CapExceeded("enumerate_asms: n=" + std::to_string(n) + " exceeds cap " +
                          std::to_string(limit));
    std::vector<SignMatrix> out;
    SignMatrix m(n);
    std::vector<int> colsum(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int i, int j, int rowsum) -> void {
        if (j == n) {
            if (rowsum != 1) return;
            if (i == n - 1) {
                out.push_back(m);
                return;
            }
            self(self, i + 1, 0, 0);
            return;
        }
        for (int v = -1; v <= 1; ++v) {
            int r = rowsum + v, c = colsum[static_cast<std::size_t>(j)] + v;
            if (r < 0 || r > 1 || c < 0 || c > 1) continue;
            if (j == n - 1 && r != 1) continue;
            if (i == n - 1 && c != 1) continue;
            m.at(i, j) = v;
            colsum[static_cast<std::size_t>(j)] = c;
            self(self, i, j + 1, r);
            colsum[static_cast<std::size_t>(j)] -= v;
        }
        m.at(i, j) = 0;
    };
    if (n >= 1) rec(rec, 0, 0, 0);
    return out;
}

namespace detail {

// Exhaustive integer backtracking over a constraint system whose variables
// range over {-1,0,1}.  Rows must have integer coefficients; partial sums
// are pruned against the remaining absolute coefficient mass.
class IntegerBacktracker {
  public:
    explicit IntegerBacktracker(const ConstraintSystem& sys) : nvars_(sys.num_vars) {
        var_rows_.resize(static_cast<std::size_t>(nvars_));
        constexpr long long inf = 1LL << 60;
        for (const auto& r : sys.rows) {
            Bound b;
            if (!is_integer(r.rhs)) throw std::logic_error("non-integer rhs in backtracker");
            long long rhs = static_cast<long long>(num(r.rhs));
            b.lo = (r.rel == Rel::le) ? -inf : rhs;
            b.hi = (r.rel == Rel::ge) ? inf : rhs;
            int idx = static_cast<int>(bounds_.size());
            for (const auto& [v, c] : r.coeffs) {
                if (!is_integer(c)) throw std::logic_error("non-integer coefficient");
                long long cc = static_cast<long long>(num(c));
                var_rows_[static_cast<std::size_t>(v)].push_back({idx, cc});
                b.rem += cc < 0 ? -cc : cc;
            }
            bounds_.push_back(b);
        }
    }

    // values tried in order (0, 1, -1); zeros dominate feasible cores
    std::vector<std::vector<int>> all_solutions(std::optional<int> first_value = std::nullopt) {
        cur_.assign(bounds_.size(), 0);
        rem_.clear();
        for (const auto& b : bounds_) rem_.push_back(b.rem);
        val_.assign(static_cast<std::size_t>(nvars_), 0);
        out_.clear();
        if (!ok_root()) return {};
        dfs(0, first_value);
        return std::move(out_);
    }

  private:
    struct Bound {
        long long lo = 0, hi = 0, rem = 0;
    };
    struct Touch {
        int row;
        long long coeff;
    };

    int nvars_;
    std::vector<Bound> bounds_;
    std::vector<std::vector<Touch>> var_rows_;
    std::vector<long long> cur_, rem_;
    std::vector<int> val_;
    std::vector<std::vector<int>> out_;

    bool ok_root() const {
        for (std::size_t r = 0; r < bounds_.size(); ++r)
            if (cur_[r] - rem_[r] > bounds_[r].hi || cur_[r] + rem_[r] < bounds_[r].lo)
                return false;
        return true;
    }

    void dfs(int t, std::optional<int> first_value) {
        if (t == nvars_) {
            out_.push_back(val_);
            return;
        }
        static constexpr int order[3] = {0, 1, -1};
        for (int v : order) {
            if (t == 0 && first_value && v != *first_value) continue;
            bool ok = true;
            const auto& touches = var_rows_[static_cast<std::size_t>(t)];
            for (const auto& [r, c] : touches) {
                cur_[static_cast<std::size_t>(r)] += c * v;
                rem_[static_cast<std::size_t>(r)] -= c < 0 ? -c : c;
            }
            for (const auto& [r, c] : touches) {
                auto rr = static_cast<std::size_t>(r);
                if (cur_[rr] - rem_[rr] > bounds_[rr].hi || cur_[rr] + rem_[rr] < bounds_[rr].lo) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                val_[static_cast<std::size_t>(t)] = v;
                dfs(t + 1, first_value);
            }
            for (const auto& [r, c] : touches) {
                cur_[static_cast<std::size_t>(r)] -= c * v;
                rem_[static_cast<std::size_t>(r)] += c < 0 ? -c : c;
            }
        }
        val_[static_cast<std::size_t>(t)] = 0;
    }
};

}  // namespace detail

// All integer points of a core system, each entry in {-1,0,1}.
inline std::vector<std::vector<int>> core_integer_solutions(const ConstraintSystem& sys,
                                                            int jobs = 1) {
    detail::IntegerBacktracker bt(sys);
    if (jobs <= 1 || sys.num_vars == 0) return bt.all_solutions();
    // split the search at the first branching level; merge preserves the
    // deterministic (0, 1, -1) order
    std::vector<std::future<std::vector<std::vector<int>>>> futs;
    for (int v : {0, 1, -1})
        futs.push_back(std::async(std::launch::async, [&sys, v] {
            detail::IntegerBacktracker worker(sys);
            return worker.all_solutions(v);
        }));
    std::vector<std::vector<int>> all;
    for (auto& f : futs) {
        auto part = f.get();
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

// Members of a symmetry class: integer points of the core system, assembled
// through phi and verified by is_member, sorted lexicographically by the
// flattened entry vector.
inline std::vector<SignMatrix> enumerate_class(Cls cls, int n,
                                               std::optional<int> cap = std::nullopt,
                                               int jobs = 1) {
    int limit = cap.value_or(default_cap(cls));
    if (n > limit)
        throw CapExceeded(std::string("enumerate_class(") + cls_name(cls) +
                          "): n=" + std::to_string(n) + " exceeds cap " + std::to_string(limit));
    ConstraintSystem sys = build_core(cls, n);
    CorePattern p = core_positions(cls, n);
    std::vector<SignMatrix> out;
    for (const auto& y : core_integer_solutions(sys, jobs)) {
        auto m = assemble_sign(p, y);
        if (m && is_member(*m, cls)) out.push_back(std::move(*m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline long long count_class(Cls cls, int n, std::optional<int> cap = std::nullopt, int jobs = 1) {
    return static_cast<long long>(enumerate_class(cls, n, cap, jobs).size());
}

class EmptyClass : public std::runtime_error {
  public:
    EmptyClass(Cls c, int n)
        : std::runtime_error(std::string(cls_name(c)) + "(" + std::to_string(n) + ") is empty") {}
};

// Exact minimum of sum c_ij x_ij over all enumerated members.
inline std::pair<long long, SignMatrix> min_cost_brute(Cls cls, int n,
                                                       const std::vector<long long>& cost,
                                                       std::optional<int> cap = std::nullopt) {
    if (cost.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("cost matrix size mismatch");
    auto members = enumerate_class(cls, n, cap);
    if (members.empty()) throw EmptyClass(cls, n);
    long long best = 0;
    const SignMatrix* argmin = nullptr;
    for (const auto& m : members) {
        long long v = 0;
        for (std::size_t t = 0; t < cost.size(); ++t) v += cost[t] * m.e[t];
        if (!argmin || v < best) {
            best = v;
            argmin = &m;
        }
    }
    return {best, *argmin};
}

}  // namespace sympoly
