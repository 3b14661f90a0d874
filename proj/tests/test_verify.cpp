#include <sympoly/verify.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace sympoly;

TEST_CASE("predicted dimensions evaluate the closed forms", "[verify]") {
    CHECK(predicted_dimension(Cls::ASM, 3) == 4);
    CHECK(predicted_dimension(Cls::VSASM, 7) == 8);
    CHECK(predicted_dimension(Cls::VHSASM, 9) == 4);
    CHECK(predicted_dimension(Cls::HTSASM, 4) == 5);
    CHECK(predicted_dimension(Cls::DSASM, 5) == 10);
    CHECK(predicted_dimension(Cls::DASASM, 5) == 6);
    CHECK(predicted_dimension(Cls::TSASM, 9) == 3);
    CHECK_THROWS_AS(predicted_dimension(Cls::VSASM, 4), OutOfValidity);
    CHECK_THROWS_AS(predicted_dimension(Cls::VSASM, 1), OutOfValidity);
    CHECK_THROWS_AS(predicted_dimension(Cls::QTSASM, 4), OutOfValidity);
    CHECK(qtsasm_conjecture_dimension(5) == 2);
    CHECK_THROWS_AS(qtsasm_conjecture_dimension(6), OutOfValidity);
}

TEST_CASE("computed dimension agrees with the formulas on small cases", "[verify]") {
    CHECK(compute_dimension(Cls::ASM, 3) == 4);
    CHECK(compute_dimension(Cls::HTSASM, 4) == 5);
    CHECK(compute_dimension(Cls::VSASM, 5) == 2);
    CHECK(compute_dimension(Cls::DSASM, 3) == 3);
    CHECK_THROWS_AS(compute_dimension(Cls::VSASM, 4), EmptyClass);
}

TEST_CASE("facet predictions carry the closed-form cardinalities", "[verify]") {
    CHECK(predicted_facets(Cls::ASM, 3).entries.size() == 8);
    CHECK(predicted_facets(Cls::ASM, 4).entries.size() == 20);
    CHECK(predicted_facets(Cls::VSASM, 7).entries.size() == 14);
    CHECK(predicted_facets(Cls::VHSASM, 9).entries.size() == 6);
    CHECK(predicted_facets(Cls::HTSASM, 4).entries.size() == 10);
    CHECK(predicted_facets(Cls::HTSASM, 5).entries.size() == 18);
    CHECK(predicted_facets(Cls::DSASM, 3).entries.size() == 5);
    CHECK(predicted_facets(Cls::DASASM, 2).entries.size() == 2);
    CHECK(predicted_facets(Cls::DASASM, 5).entries.size() == 11);
    CHECK(predicted_facets(Cls::TSASM, 9).entries.size() == 4);
    CHECK_THROWS_AS(predicted_facets(Cls::VSASM, 5), OutOfValidity);
    CHECK_THROWS_AS(predicted_facets(Cls::QTSASM, 4), OutOfValidity);
}

TEST_CASE("facet verification on the smallest theorem-valid cases", "[verify]") {
    for (auto [cls, n] : std::vector<std::pair<Cls, int>>{
             {Cls::DSASM, 3}, {Cls::DASASM, 2}, {Cls::DASASM, 3}, {Cls::HTSASM, 4}}) {
        auto rep = verify_facets(cls, n);
        CAPTURE(rep.claim, rep.witnesses);
        CHECK(rep.match);
    }
}

TEST_CASE("facet verification one and two sizes above each threshold", "[verify]") {
    for (auto [cls, n] : std::vector<std::pair<Cls, int>>{{Cls::ASM, 5},
                                                          {Cls::VSASM, 9},
                                                          {Cls::VHSASM, 11},
                                                          {Cls::HTSASM, 6},
                                                          {Cls::DSASM, 5},
                                                          {Cls::DASASM, 6},
                                                          {Cls::TSASM, 11}}) {
        auto rep = verify_facets(cls, n);
        CAPTURE(rep.claim, rep.witnesses);
        CHECK(rep.match);
    }
}

TEST_CASE("dimension checks above the acceptance sizes", "[verify]") {
    for (auto [cls, n] : std::vector<std::pair<Cls, int>>{{Cls::ASM, 5},
                                                          {Cls::VSASM, 9},
                                                          {Cls::VHSASM, 11},
                                                          {Cls::HTSASM, 6},
                                                          {Cls::DSASM, 6},
                                                          {Cls::DASASM, 7}}) {
        CAPTURE(cls_name(cls), n);
        CHECK(compute_dimension(cls, n) == predicted_dimension(cls, n));
    }
    // the quarter-turn polytope of order 4 is the segment between its two
    // members; the conjecture only speaks from n = 5 on
    CHECK(compute_dimension(Cls::QTSASM, 4) == 1);
    CHECK(compute_dimension(Cls::QTSASM, 5) == qtsasm_conjecture_dimension(5));
}

TEST_CASE("hull equality reports on small cases", "[verify]") {
    auto rep = verify_hull_equality(Cls::HTSASM, 4, 25, 0);
    CAPTURE(rep.witnesses);
    CHECK(rep.match);

    auto rep2 = verify_hull_equality(Cls::DSASM, 4, 25, 0);
    CHECK(rep2.match);

    // empty class with infeasible fullspace counts as a match
    auto rep3 = verify_hull_equality(Cls::VSASM, 4, 5, 0);
    CHECK(rep3.match);

    // negative control: the quarter-turn base system is not the hull
    auto rep4 = verify_core_hull_equality(Cls::QTSASM, 4, 100, 0, /*with_cuts=*/false);
    CHECK_FALSE(rep4.match);
    auto rep5 = verify_core_hull_equality(Cls::QTSASM, 4, 100, 0, /*with_cuts=*/true);
    CHECK(rep5.match);
}

TEST_CASE("min-cost members through the core LP", "[verify]") {
    // unique VSASM at n=3
    std::vector<long long> c9{3, -2, 0, 1, 4, -1, 0, 2, 5};
    auto [m, v] = min_cost_xasm(Cls::VSASM, 3, c9);
    CHECK(m == SignMatrix(3, {0, 1, 0, 1, -1, 1, 0, 1, 0}));
    CHECK(v == min_cost_brute(Cls::VSASM, 3, c9).first);

    std::vector<long long> eye{1, 0, 0, 0, 1, 0, 0, 0, 1};
    CHECK(min_cost_xasm(Cls::ASM, 3, eye).second == -1);

    SplitMix64 rng(123);
    for (Cls cls : {Cls::HTSASM, Cls::DASASM, Cls::QTSASM}) {
        int n = 4;
        for (int t = 0; t < 10; ++t) {
            auto cost = random_cost(n * n, rng);
            auto lp = min_cost_xasm(cls, n, cost);
            auto brute = min_cost_brute(cls, n, cost);
            CAPTURE(cls_name(cls), t);
            CHECK(lp.second == brute.first);
            CHECK(is_member(lp.first, cls));
        }
    }

    CHECK_THROWS_AS(min_cost_xasm(Cls::VSASM, 4, std::vector<long long>(16, 0)), EmptyClass);
}

TEST_CASE("report JSON shape", "[verify]") {
    auto rep = verify_hull_equality(Cls::DSASM, 3, 5, 0);
    auto j = rep.to_json();
    CHECK(j.at("status") == "match");
    CHECK(j.at("claim").get<std::string>().find("DSASM") != std::string::npos);
}
