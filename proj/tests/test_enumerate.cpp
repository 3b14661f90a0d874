#include <sympoly/enumerate.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

using namespace sympoly;

TEST_CASE("ASM counts from the backtracking oracle", "[enumerate]") {
    CHECK(enumerate_asms(1).size() == 1);
    CHECK(enumerate_asms(2).size() == 2);
    CHECK(enumerate_asms(3).size() == 7);
    CHECK(enumerate_asms(4).size() == 42);
    CHECK(enumerate_asms(5).size() == 429);
}

TEST_CASE("enumerate_asms agrees with the exhaustive filter at n=3", "[enumerate]") {
    std::set<SignMatrix> brute;
    SignMatrix m(3);
    for (int code = 0; code < 19683; ++code) {
        int c = code;
        for (int t = 0; t < 9; ++t) {
            m.e[static_cast<std::size_t>(t)] = c % 3 - 1;
            c /= 3;
        }
        if (is_asm(m)) brute.insert(m);
    }
    auto fast = enumerate_asms(3);
    CHECK(std::set<SignMatrix>(fast.begin(), fast.end()) == brute);
    CHECK(std::is_sorted(fast.begin(), fast.end()));
}

TEST_CASE("every enumerated member passes is_member and lists are sorted and distinct",
          "[enumerate]") {
    for (Cls cls : kAllClasses)
        for (int n = 1; n <= 5; ++n) {
            auto members = enumerate_class(cls, n);
            CHECK(std::is_sorted(members.begin(), members.end()));
            CHECK(std::adjacent_find(members.begin(), members.end()) == members.end());
            for (const auto& mm : members) CHECK(is_member(mm, cls));
        }
}

TEST_CASE("cross-oracle agreement with the filtered full enumeration", "[enumerate]") {
    for (Cls cls : kAllClasses)
        for (int n = 1; n <= 5; ++n) {
            auto via_core = enumerate_class(cls, n);
            std::vector<SignMatrix> via_filter;
            for (const auto& m : enumerate_asms(n))
                if (is_member(m, cls)) via_filter.push_back(m);
            CAPTURE(cls_name(cls), n);
            CHECK(via_core == via_filter);
        }
}

TEST_CASE("named class enumerations", "[enumerate]") {
    auto v3 = enumerate_class(Cls::VSASM, 3);
    REQUIRE(v3.size() == 1);
    CHECK(v3[0] == SignMatrix(3, {0, 1, 0, 1, -1, 1, 0, 1, 0}));

    CHECK(enumerate_class(Cls::VSASM, 4).empty());
    CHECK(enumerate_class(Cls::QTSASM, 6).empty());
    CHECK(enumerate_class(Cls::HTSASM, 3).size() == 3);
}

TEST_CASE("middle-line and center structure on enumerated members", "[enumerate]") {
    for (Cls cls : {Cls::VSASM, Cls::VHSASM, Cls::TSASM})
        for (int n : {1, 3, 5})
            for (const auto& m : enumerate_class(cls, n)) {
                int k = n / 2;
                for (int i = 0; i < n; ++i) CHECK(m.at(i, k) == (i % 2 == 0 ? 1 : -1));
            }
    for (int n : {1, 3, 5})
        for (const auto& m : enumerate_class(Cls::QTSASM, n)) {
            int k = n / 2;
            CHECK(m.at(k, k) == (k % 2 == 0 ? 1 : -1));
        }
}

TEST_CASE("count monotonicity under class containment", "[enumerate]") {
    for (int n : {1, 3, 5}) {
        auto c = [&](Cls cls) { return count_class(cls, n); };
        CHECK(c(Cls::TSASM) <= c(Cls::VHSASM));
        CHECK(c(Cls::VHSASM) <= c(Cls::VSASM));
        CHECK(c(Cls::VSASM) <= c(Cls::ASM));
    }
}

TEST_CASE("caps raise, overrides work", "[enumerate]") {
    CHECK_THROWS_AS(enumerate_asms(7), CapExceeded);
    CHECK_THROWS_AS(enumerate_class(Cls::DSASM, 7), CapExceeded);
    CHECK(enumerate_class(Cls::VSASM, 2, /*cap=*/2).empty());
}

TEST_CASE("parallel enumeration is deterministic", "[enumerate]") {
    auto a = enumerate_class(Cls::DSASM, 4, std::nullopt, /*jobs=*/1);
    auto b = enumerate_class(Cls::DSASM, 4, std::nullopt, /*jobs=*/3);
    CHECK(a == b);
}

TEST_CASE("min_cost_brute", "[enumerate]") {
    std::vector<long long> zero(9, 0);
    CHECK(min_cost_brute(Cls::ASM, 3, zero).first == 0);
    std::vector<long long> eye{1, 0, 0, 0, 1, 0, 0, 0, 1};
    CHECK(min_cost_brute(Cls::ASM, 3, eye).first == -1);
    std::vector<long long> any{3, -2, 0, 1, 4, -1, 0, 2, 5};
    auto [v, arg] = min_cost_brute(Cls::VSASM, 3, any);
    CHECK(v == -2 + 1 - 4 - 1 + 2);  // unique member fixes the value
    CHECK_THROWS_AS(min_cost_brute(Cls::VSASM, 4, std::vector<long long>(16, 0)), EmptyClass);
}
