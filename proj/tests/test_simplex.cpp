#include <sympoly/hrep.hpp>
#include <sympoly/prng.hpp>
#include <sympoly/simplex.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace sympoly;

namespace {

ConstraintSystem tiny(int vars) {
    ConstraintSystem s;
    s.num_vars = vars;
    return s;
}

LinRow row(std::map<int, Rat> c, Rel rel, Rat rhs, std::string tag = "t") {
    return LinRow{std::move(c), rel, std::move(rhs), std::move(tag)};
}

}  // namespace

TEST_CASE("simplex basics on hand systems", "[simplex]") {
    // max x0 + x1 s.t. x0 <= 2, x1 <= 3, x0 + x1 >= 1
    auto s = tiny(2);
    s.add(row({{0, 1}}, Rel::le, 2));
    s.add(row({{1, 1}}, Rel::le, 3));
    s.add(row({{0, 1}, {1, 1}}, Rel::ge, 1));
    auto res = lp_solve(s, {1, 1}, /*maximize=*/true);
    REQUIRE(res.status == LPStatus::optimal);
    CHECK(res.value == 5);
    CHECK(res.point == RatVec{2, 3});

    // unbounded below: min x0 with only x0 <= 2
    auto u = tiny(1);
    u.add(row({{0, 1}}, Rel::le, 2));
    CHECK(lp_solve(u, {1}).status == LPStatus::unbounded);

    // infeasible: x0 <= 0, x0 >= 1
    auto inf = tiny(1);
    inf.add(row({{0, 1}}, Rel::le, 0));
    inf.add(row({{0, 1}}, Rel::ge, 1));
    CHECK(lp_solve(inf, {1}).status == LPStatus::infeasible);

    // negative variables are reachable (free variables)
    auto f = tiny(1);
    f.add(row({{0, 1}}, Rel::ge, -5));
    auto fr = lp_solve(f, {1});
    REQUIRE(fr.status == LPStatus::optimal);
    CHECK(fr.value == -5);

    // equality-only point
    auto e = tiny(2);
    e.add(row({{0, 1}, {1, 1}}, Rel::eq, 3));
    e.add(row({{0, 1}, {1, -1}}, Rel::eq, 1));
    auto er = lp_solve(e, {1, 0});
    REQUIRE(er.status == LPStatus::optimal);
    CHECK(er.point == RatVec{2, 1});
}

TEST_CASE("lp over the ASM system", "[simplex]") {
    auto sys = build_asm(3);
    auto zero = lp_solve(sys, RatVec(9, Rat(0)));
    REQUIRE(zero.status == LPStatus::optimal);
    CHECK(zero.value == 0);
    CHECK(sys.satisfied_by(zero.point));

    // min trace over P_ASM(3) is -1, attained at the diamond
    RatVec trace(9, Rat(0));
    trace[0] = trace[4] = trace[8] = 1;
    auto tr = lp_solve(sys, trace);
    REQUIRE(tr.status == LPStatus::optimal);
    CHECK(tr.value == -1);
    CHECK(tr.integral());
    CHECK(sys.satisfied_by(tr.point));
}

TEST_CASE("optimal points satisfy every row exactly", "[simplex]") {
    SplitMix64 rng(31);
    for (Cls cls : {Cls::HTSASM, Cls::QTSASM, Cls::DASASM}) {
        auto sys = build_core(cls, 5);
        Simplex solver(sys);
        for (int t = 0; t < 20; ++t) {
            RatVec obj(static_cast<std::size_t>(sys.num_vars));
            for (auto& x : obj) x = Rat(rng.next_in(-9, 9));
            auto res = solver.solve(obj, t % 2 == 0);
            REQUIRE(res.status == LPStatus::optimal);
            CHECK(sys.satisfied_by(res.point));
        }
    }
}

TEST_CASE("pinned quarter-turn base system exhibits the fractional corner", "[simplex]") {
    // min y11 over the n=4 base system with the other core entries pinned to
    // the core of (I4+I4')/2
    auto sys = build_core(Cls::QTSASM, 4);
    REQUIRE(sys.num_vars == 4);
    sys.add(LinRow{{{1, Rat(1)}}, Rel::eq, Rat(0), "pin:y12"});
    sys.add(LinRow{{{2, Rat(1)}}, Rel::eq, Rat(0), "pin:y21"});
    sys.add(LinRow{{{3, Rat(1)}}, Rel::eq, Rat(1, 2), "pin:y22"});
    auto res = lp_solve(sys, {1, 0, 0, 0});
    REQUIRE(res.status == LPStatus::optimal);
    CHECK(res.value == Rat(1, 2));
}

TEST_CASE("implicit equality detection", "[simplex]") {
    // VSASM core col-prefix(1,1) lower bound forces y_{1,1} = 0
    for (int n : {3, 5, 7}) {
        auto sys = build_core(Cls::VSASM, n);
        auto idx = sys.find_tag("vsasm:col-prefix(1,1):lo");
        REQUIRE(idx);
        CHECK(is_implicit_equality(sys, *idx));
    }
    // ASM row-prefix(1,1) upper bound is not implicit
    auto sys = build_asm(3);
    auto hi = sys.find_tag("asm:row-prefix(1,1):hi");
    REQUIRE(hi);
    CHECK_FALSE(is_implicit_equality(sys, *hi));
    // any equality row is implicit
    auto eq = sys.find_tag("asm:row-sum(1)");
    REQUIRE(eq);
    CHECK(is_implicit_equality(sys, *eq));
}

TEST_CASE("redundancy detection", "[simplex]") {
    // a duplicated row is redundant
    auto sys = build_asm(3);
    sys.rows.push_back(sys.rows[0]);
    CHECK(is_redundant(sys, sys.rows.size() - 1));

    // ASM row-prefix(2,1) lower bound is one of the 8 facets at n=3
    auto clean = build_asm(3);
    auto idx = clean.find_tag("asm:row-prefix(2,1):lo");
    REQUIRE(idx);
    CHECK_FALSE(is_redundant(clean, *idx));

    // VSASM n=7 row-prefix(1,1) lower bound is excluded by the facet theorem
    auto v7 = build_core(Cls::VSASM, 7);
    auto r11 = v7.find_tag("vsasm:row-prefix(1,1):lo");
    REQUIRE(r11);
    CHECK(is_redundant(v7, *r11));
}

TEST_CASE("vertex integrality on prefix-bounded core systems", "[simplex]") {
    SplitMix64 rng(5);
    for (Cls cls : {Cls::VSASM, Cls::DSASM, Cls::DASASM}) {
        int n = 5;
        auto sys = build_core(cls, n);
        Simplex solver(sys);
        for (int t = 0; t < 25; ++t) {
            RatVec obj(static_cast<std::size_t>(sys.num_vars));
            for (auto& x : obj) x = Rat(rng.next_in(-9, 9));
            auto res = solver.solve(obj);
            REQUIRE(res.status == LPStatus::optimal);
            CHECK(res.integral());
        }
    }
}

TEST_CASE("warm re-solves agree with cold solves", "[simplex]") {
    SplitMix64 rng(17);
    auto sys = build_fullspace(Cls::HTSASM, 4);
    Simplex warm(sys);
    for (int t = 0; t < 15; ++t) {
        RatVec obj(static_cast<std::size_t>(sys.num_vars));
        for (auto& x : obj) x = Rat(rng.next_in(-9, 9));
        auto a = warm.solve(obj);
        auto b = lp_solve(sys, obj);
        REQUIRE(a.status == LPStatus::optimal);
        REQUIRE(b.status == LPStatus::optimal);
        CHECK(a.value == b.value);
    }
}
