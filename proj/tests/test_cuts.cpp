#include <sympoly/enumerate.hpp>
#include <sympoly/qtsasm_cuts.hpp>
#include <sympoly/simplex.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace sympoly;

namespace {

// the sign matrix from the worked n=4 derivation: +1 on the full row 1,
// -1 on the full row 2, -1 on prefix (2,1), +1 on prefix (2,3)
CutSign worked_example_sign(const QtsasmDomain& d) {
    CutSign s;
    s.s.assign(static_cast<std::size_t>(d.size()), 0);
    s.s[static_cast<std::size_t>(d.flat(1, 4))] = 1;
    s.s[static_cast<std::size_t>(d.flat(2, 4))] = -1;
    s.s[static_cast<std::size_t>(d.flat(2, 1))] = -1;
    s.s[static_cast<std::size_t>(d.flat(2, 3))] = 1;
    return s;
}

// independent route: per-variable coefficient formula instead of expanding
// the prefix expressions
LinRow cut_via_coefficient_formula(const QtsasmDomain& d, const CorePattern& p, const CutSign& s) {
    LinRow r;
    for (int i = 1; i <= d.ell; ++i)
        for (int j = 1; j <= d.k; ++j) {
            long long a = cut_coefficient(d, s, i, j);
            REQUIRE(a % 2 == 0);
            if (a != 0) r.coeffs[p.index1(i, j)] = Rat(a / 2);
        }
    long long pos = 0, neg_last = 0;
    for (auto [i, j] : d.positions) {
        int sv = s.at(d, i, j);
        if (sv == 1) ++pos;
        if (sv == -1 && j == d.n) ++neg_last;
    }
    r.rel = Rel::le;
    r.rhs = Rat(floor_div(Int(pos - neg_last), Int(2)));
    return r;
}

}  // namespace

TEST_CASE("sign validity", "[cuts]") {
    QtsasmDomain d(4);
    CutSign zero;
    zero.s.assign(static_cast<std::size_t>(d.size()), 0);
    CHECK(is_valid_sign(d, zero));

    CHECK(is_valid_sign(d, worked_example_sign(d)));

    CutSign single = zero;
    single.s[static_cast<std::size_t>(d.flat(1, 1))] = 1;
    CHECK_FALSE(is_valid_sign(d, single));
}

TEST_CASE("the worked n=4 sign produces the cut y11 <= 0", "[cuts]") {
    QtsasmDomain d(4);
    auto p = core_positions(Cls::QTSASM, 4);
    auto s = worked_example_sign(d);
    LinRow cut = cut_from_sign(d, p, s);
    REQUIRE(cut.coeffs.size() == 1);
    CHECK(cut.coeffs.begin()->first == p.index1(1, 1));
    CHECK(cut.coeffs.begin()->second == 1);
    CHECK(cut.rhs == 0);
}

TEST_CASE("z-expansion route equals the coefficient-formula route", "[cuts]") {
    for (int n : {2, 3, 4, 5}) {
        QtsasmDomain d(n);
        auto p = core_positions(Cls::QTSASM, n);
        auto signs = enumerate_valid_signs(n);
        std::size_t step = std::max<std::size_t>(1, signs.size() / 200);
        for (std::size_t t = 0; t < signs.size(); t += step) {
            LinRow a = cut_from_sign(d, p, signs[t]);
            LinRow b = cut_via_coefficient_formula(d, p, signs[t]);
            CHECK(a.coeffs == b.coeffs);
            CHECK(a.rhs == b.rhs);
        }
    }
}

TEST_CASE("valid sign enumeration", "[cuts]") {
    // n=1: D is empty, only the all-zero (empty) sign matrix
    auto s1 = enumerate_valid_signs(1);
    CHECK(s1.size() == 1);
    CHECK(s1[0].s.empty());

    QtsasmDomain d4(4);
    auto s4 = enumerate_valid_signs(4);
    for (const auto& s : s4) CHECK(is_valid_sign(d4, s));
    // golden counts of parity-valid signs (exhaustive 3^|D| filter, verified
    // against an independent implementation of the parity condition)
    CHECK(s4.size() == 249);
    CHECK(enumerate_valid_signs(2).size() == 3);
    CHECK(enumerate_valid_signs(3).size() == 21);
    CHECK_THROWS_AS(enumerate_valid_signs(6), CapExceeded);
}

TEST_CASE("every cut is valid on every enumerated quarter-turn core", "[cuts]") {
    for (int n : {3, 4, 5}) {
        QtsasmCutFamily fam(n);
        auto members = enumerate_class(Cls::QTSASM, n);
        REQUIRE(!members.empty());
        for (const auto& m : members) {
            auto y = project(m, fam.pattern).values;
            for (const auto& cut : fam.cuts) {
                CAPTURE(n, cut.tag);
                REQUIRE(cut.satisfied_by(y));
            }
        }
    }
}

TEST_CASE("separation at the fractional vertex and at true cores", "[cuts]") {
    // core of (I4+I4')/2 is (1/2, 0, 0, 1/2); the most violated cut in
    // canonical form is y11 <= 0
    RatVec frac{Rat(1, 2), 0, 0, Rat(1, 2)};
    auto cut = separate(frac, 4);
    REQUIRE(cut.has_value());
    auto p = core_positions(Cls::QTSASM, 4);
    REQUIRE(cut->coeffs.size() == 1);
    CHECK(cut->coeffs.begin()->first == p.index1(1, 1));
    CHECK(cut->coeffs.begin()->second == 1);
    CHECK(cut->rhs == 0);
    CHECK(cut->lhs_at(frac) - cut->rhs >= Rat(1, 2));

    // true cores are never separated, nor is a midpoint of two cores
    QtsasmCutFamily fam(4);
    auto members = enumerate_class(Cls::QTSASM, 4);
    REQUIRE(members.size() == 2);
    RatVec a = project(members[0], fam.pattern).values;
    RatVec b = project(members[1], fam.pattern).values;
    CHECK_FALSE(fam.separate(a).has_value());
    CHECK_FALSE(fam.separate(b).has_value());
    RatVec mid(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) mid[i] = (a[i] + b[i]) / 2;
    CHECK_FALSE(fam.separate(mid).has_value());
}

TEST_CASE("base system alone admits a fractional optimum that the hull forbids", "[cuts]") {
    // maximizing y11 - y12 - y21 + y22 over the base relaxation reaches the
    // fractional vertex (1/2,0,0,1/2) with value 1; over the true cores the
    // optimum is -1
    auto base = build_core(Cls::QTSASM, 4);
    RatVec obj{1, -1, -1, 1};
    auto res = lp_solve(base, obj, /*maximize=*/true);
    REQUIRE(res.status == LPStatus::optimal);

    auto hull = build_qtsasm_hull(4);
    auto hres = lp_solve(hull, obj, /*maximize=*/true);
    REQUIRE(hres.status == LPStatus::optimal);

    long long brute = 0;
    bool first = true;
    auto p = core_positions(Cls::QTSASM, 4);
    for (const auto& m : enumerate_class(Cls::QTSASM, 4)) {
        auto y = project(m, p).values;
        Rat v = 0;
        for (std::size_t i = 0; i < y.size(); ++i) v += obj[i] * y[i];
        long long vi = static_cast<long long>(num(v));
        if (first || vi > brute) brute = vi, first = false;
    }
    CHECK(hres.value == brute);
    CHECK(res.value == 1);
    CHECK(res.value > hres.value);  // strict inclusion at n=4

    // the hull excludes the fractional point while the base admits it
    RatVec frac{Rat(1, 2), 0, 0, Rat(1, 2)};
    CHECK(base.satisfied_by(frac));
    CHECK_FALSE(hull.satisfied_by(frac));
}

TEST_CASE("hull at n=1 is the base system", "[cuts]") {
    auto hull = build_qtsasm_hull(1);
    CHECK(hull.num_vars == 0);
    CHECK(hull.rows.empty());
}

TEST_CASE("hull systems become infeasible exactly for the empty orders", "[cuts]") {
    Simplex s2(build_qtsasm_hull(2));
    CHECK_FALSE(s2.feasible());
    Simplex s4(build_qtsasm_hull(4));
    CHECK(s4.feasible());
}

TEST_CASE("the z-recursion system has a bidirected coefficient matrix", "[cuts]") {
    // over variables (y, z): z_{i,1} = y_{i,1}; z_{i,j} = z_{i,j-1} + y_{i,j}
    // for j <= k; z_{i,j} = z_{i,j-1} + y_{n+1-j,i} for j in [k+1,n]; plus
    // one free bookkeeping row per chain end.  Every column must carry
    // exactly two entries of absolute value one.
    for (int n : {2, 3, 4, 5}) {
        int k = n / 2, ell = (n + 1) / 2;
        auto p = core_positions(Cls::QTSASM, n);
        QtsasmDomain d(n);
        std::map<std::pair<char, int>, int> col;  // ('y', core idx) / ('z', flat idx)
        auto ycol = [&](int i, int j) { return std::pair<char, int>{'y', p.index1(i, j)}; };
        auto zcol = [&](int i, int j) { return std::pair<char, int>{'z', d.flat(i, j)}; };
        std::vector<std::map<std::pair<char, int>, int>> rows;
        for (int i = 1; i <= ell; ++i) {
            if (k < 1) break;
            rows.push_back({{zcol(i, 1), 1}, {ycol(i, 1), -1}});
            for (int j = 2; j <= k; ++j)
                rows.push_back({{zcol(i, j), 1}, {zcol(i, j - 1), -1}, {ycol(i, j), -1}});
        }
        for (int i = 1; i <= k; ++i)
            for (int j = k + 1; j <= n; ++j)
                rows.push_back({{zcol(i, j), 1}, {zcol(i, j - 1), -1}, {ycol(n + 1 - j, i), -1}});
        for (int i = 1; i <= k; ++i) rows.push_back({{zcol(i, n), 1}});  // chain-end rows
        if (n % 2 == 1 && k >= 1) rows.push_back({{zcol(ell, k), 1}});
        std::map<std::pair<char, int>, int> weight;
        for (const auto& r : rows)
            for (const auto& [c, v] : r) {
                CHECK((v == 1 || v == -1));
                weight[c] += std::abs(v);
            }
        CHECK(weight.size() == static_cast<std::size_t>(p.size() + d.size()));
        for (const auto& [c, w] : weight) {
            CAPTURE(n, c.first, c.second);
            CHECK(w == 2);
        }
    }
}
