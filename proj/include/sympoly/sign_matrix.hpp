#pragma once

// Sign matrices, the dihedral group of the square, ASM validation, and
// symmetry-class membership.
//
// Indices are 1-based in comments and messages (matching the usual
// conventions for these objects) and 0-based internally; the fixed mapping
// is internal = external - 1.

#include <sympoly/rational.hpp>

#include <json.hpp>

#include <array>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sympoly {

struct SignMatrix {
    int n = 0;
    std::vector<int> e;  // row-major, entries in {-1,0,1}

    SignMatrix() = default;
    explicit SignMatrix(int n_) : n(n_), e(static_cast<std::size_t>(n_) * n_, 0) {}
    SignMatrix(int n_, std::vector<int> entries) : n(n_), e(std::move(entries)) {}

    int at(int i, int j) const { return e[static_cast<std::size_t>(i) * n + j]; }
    int& at(int i, int j) { return e[static_cast<std::size_t>(i) * n + j]; }

    bool well_formed() const {
        if (n < 1 || e.size() != static_cast<std::size_t>(n) * n) return false;
        for (int v : e)
            if (v < -1 || v > 1) return false;
        return true;
    }

    static SignMatrix identity(int n) {
        SignMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    // ones on the antidiagonal
    static SignMatrix anti_identity(int n) {
        SignMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, n - 1 - i) = 1;
        return m;
    }

    auto operator<=>(const SignMatrix&) const = default;
};

enum class D4 { identity, reflV, reflH, reflD, reflA, rot90, rot180, rot270 };

constexpr std::array<D4, 8> kD4Elements = {D4::identity, D4::reflV, D4::reflH, D4::reflD,
                                           D4::reflA,    D4::rot90, D4::rot180, D4::rot270};

inline const char* d4_name(D4 g) {
    switch (g) {
        case D4::identity: return "identity";
        case D4::reflV: return "reflV";
        case D4::reflH: return "reflH";
        case D4::reflD: return "reflD";
        case D4::reflA: return "reflA";
        case D4::rot90: return "rot90";
        case D4::rot180: return "rot180";
        case D4::rot270: return "rot270";
    }
    return "?";
}

// Source position sampled by g at (i,j), 0-based: out(i,j) = in(src(g,i,j)).
inline std::pair<int, int> d4_source(D4 g, int n, int i, int j) {
    switch (g) {
        case D4::identity: return {i, j};
        case D4::reflV: return {i, n - 1 - j};
        case D4::reflH: return {n - 1 - i, j};
        case D4::reflD: return {j, i};
        case D4::reflA: return {n - 1 - j, n - 1 - i};
        case D4::rot90: return {j, n - 1 - i};  // x_{i,j} <- x_{j,n+1-i}
        case D4::rot180: return {n - 1 - i, n - 1 - j};
        case D4::rot270: return {n - 1 - j, i};
    }
    return {i, j};
}

inline SignMatrix apply_symmetry(const SignMatrix& m, D4 g) {
    SignMatrix out(m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) {
            auto [si, sj] = d4_source(g, m.n, i, j);
            out.at(i, j) = m.at(si, sj);
        }
    return out;
}

// compose(g, h): the element whose action equals "apply g, then apply h".
// Applying g then h samples sources through sigma_g(sigma_h(p)).
inline D4 d4_compose(D4 g, D4 h) {
    static const auto table = [] {
        constexpr int n = 4;
        auto sig = [](D4 x) {
            std::array<std::pair<int, int>, n * n> s{};
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) s[i * n + j] = d4_source(x, n, i, j);
            return s;
        };
        std::array<std::array<D4, 8>, 8> t{};
        for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b) {
                auto sa = sig(kD4Elements[a]), sb = sig(kD4Elements[b]);
                std::array<std::pair<int, int>, n * n> comp{};
                for (int p = 0; p < n * n; ++p) {
                    auto [i, j] = sb[p];
                    comp[p] = sa[i * n + j];
                }
                for (int c = 0; c < 8; ++c)
                    if (sig(kD4Elements[c]) == comp) t[a][b] = kD4Elements[c];
            }
        return t;
    }();
    return table[static_cast<int>(g)][static_cast<int>(h)];
}

enum class Cls { ASM, VSASM, VHSASM, HTSASM, QTSASM, DSASM, DASASM, TSASM };

constexpr std::array<Cls, 8> kAllClasses = {Cls::ASM,    Cls::VSASM, Cls::VHSASM, Cls::HTSASM,
                                            Cls::QTSASM, Cls::DSASM, Cls::DASASM, Cls::TSASM};

inline const char* cls_name(Cls c) {
    switch (c) {
        case Cls::ASM: return "ASM";
        case Cls::VSASM: return "VSASM";
        case Cls::VHSASM: return "VHSASM";
        case Cls::HTSASM: return "HTSASM";
        case Cls::QTSASM: return "QTSASM";
        case Cls::DSASM: return "DSASM";
        case Cls::DASASM: return "DASASM";
        case Cls::TSASM: return "TSASM";
    }
    return "?";
}

inline Cls cls_parse(std::string s) {
    for (auto& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    for (Cls c : kAllClasses)
        if (s == cls_name(c)) return c;
    throw std::invalid_argument("unknown symmetry class: " + s);
}

inline std::vector<D4> generators(Cls c) {
    switch (c) {
        case Cls::ASM: return {};
        case Cls::VSASM: return {D4::reflV};
        case Cls::VHSASM: return {D4::reflV, D4::reflH};
        case Cls::HTSASM: return {D4::rot180};
        case Cls::QTSASM: return {D4::rot90};
        case Cls::DSASM: return {D4::reflD};
        case Cls::DASASM: return {D4::reflD, D4::reflA};
        case Cls::TSASM: return {D4::reflV, D4::reflD};
    }
    return {};
}

// The full subgroup generated by generators(c); used by tests and by
// class-containment reasoning.
inline std::set<D4> subgroup(Cls c) {
    std::set<D4> g{D4::identity};
    for (D4 x : generators(c)) g.insert(x);
    bool grew = true;
    while (grew) {
        grew = false;
        for (D4 a : std::set<D4>(g))
            for (D4 b : std::set<D4>(g))
                if (g.insert(d4_compose(a, b)).second) grew = true;
    }
    return g;
}

// Prefix-sum characterization: every row- and column-prefix sum lies in
// {0,1} and every full row/column sums to 1.  Equivalent to the
// alternating-sign definition for {0,+-1} matrices.
inline bool is_asm(const SignMatrix& m) {
    if (!m.well_formed()) return false;
    const int n = m.n;
    for (int i = 0; i < n; ++i) {
        int s = 0;
        for (int j = 0; j < n; ++j) {
            s += m.at(i, j);
            if (j < n - 1 && (s < 0 || s > 1)) return false;
        }
        if (s != 1) return false;
    }
    for (int j = 0; j < n; ++j) {
        int s = 0;
        for (int i = 0; i < n; ++i) {
            s += m.at(i, j);
            if (i < n - 1 && (s < 0 || s > 1)) return false;
        }
        if (s != 1) return false;
    }
    return true;
}

// Membership checks only the class generators; the generated subgroup is
// exactly the class's symmetry group.
inline bool is_member(const SignMatrix& m, Cls c) {
    if (!is_asm(m)) return false;
    for (D4 g : generators(c))
        if (apply_symmetry(m, g) != m) return false;
    return true;
}

// --- text / JSON interchange -------------------------------------------
//
// Text: first line "n", then n lines of n space-separated entries.
// JSON: {"n": int, "entries": [[int]]}.

inline std::string to_text(const SignMatrix& m) {
    std::ostringstream os;
    os << m.n << "\n";
    for (int i = 0; i < m.n; ++i) {
        for (int j = 0; j < m.n; ++j) os << (j ? " " : "") << m.at(i, j);
        os << "\n";
    }
    return os.str();
}

inline nlohmann::json to_json(const SignMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.n; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.n; ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"n", m.n}, {"entries", std::move(rows)}};
}

inline SignMatrix sign_matrix_from_json(const nlohmann::json& j) {
    SignMatrix m(j.at("n").get<int>());
    const auto& rows = j.at("entries");
    if (static_cast<int>(rows.size()) != m.n) throw std::invalid_argument("bad entries shape");
    for (int i = 0; i < m.n; ++i) {
        if (static_cast<int>(rows[i].size()) != m.n) throw std::invalid_argument("bad entries shape");
        for (int jj = 0; jj < m.n; ++jj) m.at(i, jj) = rows[i][jj].get<int>();
    }
    if (!m.well_formed()) throw std::invalid_argument("entries outside {-1,0,1}");
    return m;
}

// Accepts either interchange form (JSON if the first non-space byte is '{').
inline SignMatrix read_sign_matrix(std::istream& in) {
    std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::size_t p = all.find_first_not_of(" \t\r\n");
    if (p == std::string::npos) throw std::invalid_argument("empty matrix input");
    if (all[p] == '{') return sign_matrix_from_json(nlohmann::json::parse(all));
    std::istringstream is(all);
    int n;
    if (!(is >> n) || n < 1) throw std::invalid_argument("bad matrix header");
    SignMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int v;
            if (!(is >> v)) throw std::invalid_argument("truncated matrix");
            m.at(i, j) = v;
        }
    if (!m.well_formed()) throw std::invalid_argument("entries outside {-1,0,1}");
    return m;
}

}  // namespace sympoly
