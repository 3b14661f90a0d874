#pragma once

// Core positions, the projection pi_C, and the affine assembly map phi for
// each symmetry class.  Every cell of the assembled matrix is an explicit
// affine expression in the core variables; the same representation drives
// assembly, invariance checks, and objective pullback.

#include <sympoly/rational.hpp>
#include <sympoly/sign_matrix.hpp>

#include <json.hpp>

#include <optional>
#include <vector>

namespace sympoly {

struct AffineExpr {
    Rat constant = 0;
    std::vector<std::pair<int, Rat>> terms;  // (core index, coefficient)

    Rat eval(const RatVec& y) const {
        Rat s = constant;
        for (const auto& [t, c] : terms) s += c * y[static_cast<std::size_t>(t)];
        return s;
    }
};

struct CorePattern {
    Cls cls = Cls::ASM;
    int n = 0;
    int k = 0, ell = 0;                        // floor(n/2), ceil(n/2)
    std::vector<std::pair<int, int>> positions;  // 0-based, row-major order
    std::vector<AffineExpr> cells;               // n*n affine expressions
    std::vector<int> pos_index;                  // n*n -> core index or -1

    int size() const { return static_cast<int>(positions.size()); }

    // 1-based lookup (paper indexing); -1 if not a core position
    int index1(int i, int j) const { return pos_index[static_cast<std::size_t>(i - 1) * n + (j - 1)]; }
};

struct CoreVector {
    Cls cls = Cls::ASM;
    int n = 0;
    RatVec values;
};

namespace detail {

inline AffineExpr term1(const CorePattern& p, int i, int j) {  // 1-based core ref
    int t = p.index1(i, j);
    if (t < 0) throw std::logic_error("assembly refers to a non-core position");
    AffineExpr e;
    e.terms.emplace_back(t, Rat(1));
    return e;
}

inline AffineExpr constant(long v) {
    AffineExpr e;
    e.constant = v;
    return e;
}

inline int sign_pow(int exp) { return (exp % 2 == 0) ? 1 : -1; }  // (-1)^exp

}  // namespace detail

inline CorePattern core_positions(Cls cls, int n) {
    if (n < 1) throw std::invalid_argument("core_positions: n must be >= 1");
    CorePattern p;
    p.cls = cls;
    p.n = n;
    p.k = n / 2;
    p.ell = (n + 1) / 2;
    const int k = p.k, ell = p.ell;
    p.pos_index.assign(static_cast<std::size_t>(n) * n, -1);

    auto add = [&](int i, int j) {  // 1-based
        p.pos_index[static_cast<std::size_t>(i - 1) * n + (j - 1)] =
            static_cast<int>(p.positions.size());
        p.positions.emplace_back(i - 1, j - 1);
    };

    const bool odd = (n % 2 == 1);
    switch (cls) {
        case Cls::ASM:
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) add(i, j);
            break;
        case Cls::VSASM:
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= k; ++j) add(i, j);
            break;
        case Cls::VHSASM:
        case Cls::QTSASM:
            for (int i = 1; i <= (cls == Cls::QTSASM ? ell : k); ++i)
                for (int j = 1; j <= k; ++j) add(i, j);
            break;
        case Cls::HTSASM:
            for (int i = 1; i <= n; ++i) {
                for (int j = 1; j <= k; ++j) add(i, j);
                if (odd && i <= k) add(i, ell);
            }
            break;
        case Cls::DSASM:
            for (int i = 1; i <= n; ++i)
                for (int j = i; j <= n; ++j) add(i, j);
            break;
        case Cls::DASASM:
            for (int i = 1; i <= k; ++i)
                for (int j = i; j <= n + 1 - i; ++j) add(i, j);
            break;
        case Cls::TSASM:
            for (int i = 1; i <= k; ++i)
                for (int j = i; j <= k; ++j) add(i, j);
            break;
    }

    using detail::constant;
    using detail::sign_pow;
    p.cells.resize(static_cast<std::size_t>(n) * n);
    auto Y = [&](int i, int j) { return detail::term1(p, i, j); };
    auto cell = [&](int i, int j) -> AffineExpr& {
        return p.cells[static_cast<std::size_t>(i - 1) * n + (j - 1)];
    };

    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            AffineExpr e;
            switch (cls) {
                case Cls::ASM:
                    e = Y(i, j);
                    break;
                case Cls::VSASM:
                    if (j <= k) e = Y(i, j);
                    else if (odd && j == k + 1) e = constant(sign_pow(i + 1));
                    else e = Y(i, n + 1 - j);
                    break;
                case Cls::VHSASM: {
                    if (odd && j == k + 1) { e = constant(sign_pow(i + 1)); break; }
                    if (odd && i == k + 1) { e = constant(sign_pow(j + 1)); break; }
                    int ii = (i <= k) ? i : n + 1 - i;
                    int jj = (j <= k) ? j : n + 1 - j;
                    e = Y(ii, jj);
                    break;
                }
                case Cls::HTSASM:
                    if (p.index1(i, j) >= 0) e = Y(i, j);
                    else if (odd && i == ell && j == ell) {
                        e = constant(1);
                        for (int jp = 1; jp <= k; ++jp) {
                            AffineExpr t = Y(ell, jp);
                            e.terms.emplace_back(t.terms[0].first, Rat(-2));
                        }
                    } else e = Y(n + 1 - i, n + 1 - j);
                    break;
                case Cls::QTSASM:
                    if (i <= ell && j <= k) e = Y(i, j);
                    else if (odd && i == ell && j == ell) e = constant(sign_pow(k));
                    else if (i >= ell + 1 && j <= ell) e = Y(j, n + 1 - i);
                    else if (i >= k + 1 && j >= ell + 1) e = Y(n + 1 - i, n + 1 - j);
                    else e = Y(n + 1 - j, i);  // i <= k, j >= k+1
                    break;
                case Cls::DSASM:
                    e = (i <= j) ? Y(i, j) : Y(j, i);
                    break;
                case Cls::DASASM:
                    if (p.index1(i, j) >= 0) e = Y(i, j);
                    else if (odd && i == k + 1 && j == k + 1) {
                        e = constant(1);
                        for (int ip = 1; ip <= k; ++ip) {
                            AffineExpr t = Y(ip, k + 1);
                            e.terms.emplace_back(t.terms[0].first, Rat(-2));
                        }
                    } else if (j <= std::min(i - 1, n + 1 - i)) e = Y(j, i);
                    else if (j >= std::max(i, n + 2 - i)) e = Y(n + 1 - j, n + 1 - i);
                    else e = Y(n + 1 - i, n + 1 - j);  // j in [n+2-i, i-1]
                    break;
                case Cls::TSASM: {
                    if (odd && j == k + 1) { e = constant(sign_pow(i + 1)); break; }
                    if (odd && i == k + 1) { e = constant(sign_pow(j + 1)); break; }
                    int ii = (i <= k) ? i : n + 1 - i;
                    int jj = (j <= k) ? j : n + 1 - j;
                    e = Y(std::min(ii, jj), std::max(ii, jj));
                    break;
                }
            }
            cell(i, j) = std::move(e);
        }
    }
    return p;
}

inline CoreVector project(const RatMat& m, const CorePattern& p) {
    if (static_cast<int>(m.rows) != p.n || static_cast<int>(m.cols) != p.n)
        throw std::invalid_argument("project: size mismatch");
    CoreVector y{p.cls, p.n, {}};
    y.values.reserve(p.positions.size());
    for (auto [i, j] : p.positions) y.values.push_back(m.at(i, j));
    return y;
}

inline CoreVector project(const SignMatrix& m, const CorePattern& p) {
    if (m.n != p.n) throw std::invalid_argument("project: size mismatch");
    CoreVector y{p.cls, p.n, {}};
    y.values.reserve(p.positions.size());
    for (auto [i, j] : p.positions) y.values.push_back(Rat(m.at(i, j)));
    return y;
}

inline RatMat assemble(const CorePattern& p, const RatVec& y) {
    if (static_cast<int>(y.size()) != p.size())
        throw std::invalid_argument("assemble: core length mismatch");
    RatMat m(p.n, p.n);
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j)
            m.at(i, j) = p.cells[static_cast<std::size_t>(i) * p.n + j].eval(y);
    return m;
}

inline RatMat assemble(const CorePattern& p, const CoreVector& y) { return assemble(p, y.values); }

// Assembles an integer core into a sign matrix; nullopt if any assembled
// entry leaves {-1,0,1}.
inline std::optional<SignMatrix> assemble_sign(const CorePattern& p, const std::vector<int>& y) {
    RatVec ry(y.begin(), y.end());
    RatMat m = assemble(p, ry);
    SignMatrix s(p.n);
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j) {
            const Rat& v = m.at(i, j);
            if (!is_integer(v) || v < -1 || v > 1) return std::nullopt;
            s.at(i, j) = static_cast<int>(num(v));
        }
    return s;
}

inline RatMat to_rat(const SignMatrix& m) {
    RatMat r(m.n, m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) r.at(i, j) = m.at(i, j);
    return r;
}

struct RoundtripResult {
    bool ok = true;
    std::optional<SignMatrix> failed;
};

// phi(pi_C(X)) = X for every class member.
inline RoundtripResult roundtrip_class(Cls cls, int n, const std::vector<SignMatrix>& members) {
    CorePattern p = core_positions(cls, n);
    for (const auto& m : members) {
        CoreVector y = project(m, p);
        if (assemble(p, y) != to_rat(m)) return {false, m};
    }
    return {true, std::nullopt};
}

// --- CoreVector JSON -------------------------------------------------------

inline nlohmann::json to_json(const CoreVector& y) {
    nlohmann::json vals = nlohmann::json::array();
    for (const auto& v : y.values) vals.push_back(rat_str(v));
    return nlohmann::json{{"class", cls_name(y.cls)}, {"n", y.n}, {"values", std::move(vals)}};
}

inline CoreVector core_vector_from_json(const nlohmann::json& j) {
    CoreVector y;
    y.cls = cls_parse(j.at("class").get<std::string>());
    y.n = j.at("n").get<int>();
    for (const auto& v : j.at("values")) y.values.push_back(rat_parse(v.get<std::string>()));
    return y;
}

}  // namespace sympoly
