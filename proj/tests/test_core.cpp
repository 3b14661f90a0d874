#include <sympoly/core.hpp>
#include <sympoly/enumerate.hpp>
#include <sympoly/prng.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace sympoly;

namespace {

RatVec random_core(const CorePattern& p, SplitMix64& rng) {
    RatVec y(static_cast<std::size_t>(p.size()));
    for (auto& v : y) v = Rat(rng.next_in(-20, 20), rng.next_in(1, 7));
    return y;
}

RatMat apply_symmetry(const RatMat& m, D4 g) {
    int n = static_cast<int>(m.rows);
    RatMat out(m.rows, m.cols);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto [si, sj] = d4_source(g, n, i, j);
            out.at(i, j) = m.at(si, sj);
        }
    return out;
}

}  // namespace

TEST_CASE("core position sets match the per-class definitions", "[core]") {
    // VSASM n=3: first column
    auto p = core_positions(Cls::VSASM, 3);
    REQUIRE(p.positions == std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {2, 0}});

    // DSASM n=3: upper triangle, row-major
    p = core_positions(Cls::DSASM, 3);
    REQUIRE(p.size() == 6);
    REQUIRE(p.positions ==
            std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}});

    // DASASM n=5: |C| = k(n+1-k) = 8, row 1 has 5, row 2 has 3
    p = core_positions(Cls::DASASM, 5);
    REQUIRE(p.size() == 8);
    int row1 = 0, row2 = 0;
    for (auto [i, j] : p.positions) (i == 0 ? row1 : row2)++;
    CHECK(row1 == 5);
    CHECK(row2 == 3);

    // HTSASM n=5: [n]x[k] plus [k]x{k+1}
    p = core_positions(Cls::HTSASM, 5);
    CHECK(p.size() == 5 * 2 + 2);

    // QTSASM n=4: ell x k = 2x2
    CHECK(core_positions(Cls::QTSASM, 4).size() == 4);

    // closed-form sizes
    for (int n = 1; n <= 8; ++n) {
        int k = n / 2;
        CHECK(core_positions(Cls::DASASM, n).size() == k * (n + 1 - k));
        CHECK(core_positions(Cls::TSASM, n).size() == k * (k + 1) / 2);
        CHECK(core_positions(Cls::DSASM, n).size() == n * (n + 1) / 2);
    }
}

TEST_CASE("projection picks core entries", "[core]") {
    auto p = core_positions(Cls::DSASM, 3);
    auto y = project(SignMatrix::identity(3), p);
    REQUIRE(y.values == RatVec{1, 0, 0, 1, 0, 1});

    // the section's fractional matrix (I3 + I3')/2 under the VSASM pattern
    RatMat m(3, 3);
    m.at(0, 0) = Rat(1, 2);
    m.at(0, 2) = Rat(1, 2);
    m.at(1, 1) = 1;
    m.at(2, 0) = Rat(1, 2);
    m.at(2, 2) = Rat(1, 2);
    auto pv = core_positions(Cls::VSASM, 3);
    CHECK(project(m, pv).values == RatVec{Rat(1, 2), 0, Rat(1, 2)});
}

TEST_CASE("assembly reproduces the fixed middle lines and centers", "[core]") {
    // VSASM n=3 with core (0,1,0) is the diamond
    auto p = core_positions(Cls::VSASM, 3);
    auto m = assemble_sign(p, {0, 1, 0});
    REQUIRE(m.has_value());
    CHECK(*m == SignMatrix(3, {0, 1, 0, 1, -1, 1, 0, 1, 0}));

    // QTSASM n=3: core (0,1) assembles with center (-1)^1 = -1
    auto q = core_positions(Cls::QTSASM, 3);
    auto d = assemble_sign(q, {0, 1});
    REQUIRE(d.has_value());
    CHECK(d->at(1, 1) == -1);
    CHECK(*d == SignMatrix(3, {0, 1, 0, 1, -1, 1, 0, 1, 0}));
}

TEST_CASE("pi_C after phi is the identity on random rational cores", "[core]") {
    SplitMix64 rng(7);
    for (Cls cls : kAllClasses) {
        long checked = 0;
        for (int n = 1; n <= 7; ++n) {
            auto p = core_positions(cls, n);
            for (int t = 0; t < 150; ++t) {
                RatVec y = random_core(p, rng);
                if (project(assemble(p, y), p).values != y) {
                    CAPTURE(cls_name(cls), n, t);
                    REQUIRE(false);
                }
                ++checked;
            }
        }
        CHECK(checked >= 1000);
    }
}

TEST_CASE("phi output is invariant under every class generator", "[core]") {
    SplitMix64 rng(11);
    for (Cls cls : kAllClasses)
        for (int n = 1; n <= 7; ++n) {
            auto p = core_positions(cls, n);
            for (int t = 0; t < 10; ++t) {
                RatMat m = assemble(p, random_core(p, rng));
                for (D4 g : generators(cls)) CHECK(apply_symmetry(m, g) == m);
            }
        }
}

TEST_CASE("phi is affine", "[core]") {
    SplitMix64 rng(13);
    for (Cls cls : kAllClasses) {
        int n = 5;
        auto p = core_positions(cls, n);
        for (int t = 0; t < 10; ++t) {
            RatVec a = random_core(p, rng), b = random_core(p, rng);
            Rat lam(rng.next_in(-5, 5), rng.next_in(1, 5));
            RatVec mix(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) mix[i] = lam * a[i] + (1 - lam) * b[i];
            RatMat ma = assemble(p, a), mb = assemble(p, b), mm = assemble(p, mix);
            for (std::size_t c = 0; c < mm.a.size(); ++c)
                CHECK(mm.a[c] == lam * ma.a[c] + (1 - lam) * mb.a[c]);
        }
    }
}

TEST_CASE("overlapping case cells agree where several formulas apply", "[core]") {
    // VHSASM and TSASM at (k+1,k+1) get the middle-column and middle-row
    // value; both give (-1)^(k+2)
    for (int n : {3, 5, 7}) {
        int k = n / 2;
        for (Cls cls : {Cls::VHSASM, Cls::TSASM}) {
            auto p = core_positions(cls, n);
            RatVec y(static_cast<std::size_t>(p.size()), Rat(0));
            RatMat m = assemble(p, y);
            CHECK(m.at(k, k) == Rat((k % 2 == 0) ? 1 : -1));
        }
    }
}

TEST_CASE("assembly round trip on every enumerated member", "[core]") {
    for (Cls cls : kAllClasses)
        for (int n = 1; n <= 5; ++n) {
            auto members = enumerate_class(cls, n);
            auto rt = roundtrip_class(cls, n, members);
            if (!rt.ok) {
                CAPTURE(cls_name(cls), n, rt.failed->e);
                REQUIRE(rt.ok);
            }
        }
}

TEST_CASE("core vector JSON round trip", "[core]") {
    CoreVector y{Cls::VSASM, 5, {Rat(1, 2), 0, Rat(-1), 1, Rat(3, 7)}};
    auto j = to_json(y);
    CHECK(j.at("class") == "VSASM");
    auto back = core_vector_from_json(j);
    CHECK(back.cls == y.cls);
    CHECK(back.n == y.n);
    CHECK(back.values == y.values);
}
