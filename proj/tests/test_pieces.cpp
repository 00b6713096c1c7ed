#include <doctest.h>

#include <algorithm>

#include "nilorb/errors.hpp"
#include "nilorb/pieces.hpp"

using namespace nilorb;

TEST_CASE("upsilon from unipotent classes") {
    CHECK(upsilon_from_unipotent({LieType::C, Partition{4}}) == UpsilonSeq{0, 1, 0, 1});
    CHECK(upsilon_from_unipotent({LieType::C, Partition{1, 1}}) == UpsilonSeq{2});
    CHECK(upsilon_from_unipotent({LieType::C, Partition{2, 2}}) == UpsilonSeq{0, 2});
    CHECK(upsilon_from_unipotent({LieType::B, Partition{3, 3, 1}}) == UpsilonSeq{3, 0, 2});
}

TEST_CASE("recursion step, type C") {
    const RecursionStep a = recursion_step_C(make_c({2, 2}, {{2, 2}}));
    CHECK(a.N == 3);
    CHECK(a.fN == 1);
    CHECK(a.derived == make_c({1, 1}, {{1, 1}}));
    const RecursionStep b = recursion_step_C(make_c({1, 1}, {{1, 1}}));
    CHECK(b.N == 1);
    CHECK(b.fN == 1);
    CHECK(b.derived.lambda.empty());
    const RecursionStep c = recursion_step_C(make_c({2, 2}, {{2, 1}}));
    CHECK(c.N == 1);
    CHECK(c.fN == 2);
    CHECK_THROWS_AS(recursion_step_C(zero_symbol(LieType::C, 2)), Error);
}

TEST_CASE("recursion step, type B") {
    for (int m = 1; m <= 4; ++m) {
        const RecursionStep s = recursion_step_B(make_b(m, {}, {}));
        CHECK(s.N == 2 * m);
        CHECK(s.fN == 1);
        if (m > 1) CHECK(s.derived == make_b(m - 1, {}, {}));
    }
    const RecursionStep t = recursion_step_B(make_b(1, {2, 2}, {{2, 2}}));
    CHECK(t.N == 2);
    CHECK(t.fN == 2);
    try {
        recursion_step_B(zero_symbol(LieType::B, 1));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BaseCase);
    }
}

TEST_CASE("upsilon by recursion") {
    CHECK(upsilon(make_c({2, 2}, {{2, 2}})) == UpsilonSeq{0, 1, 0, 1});
    for (int n = 1; n <= 5; ++n) CHECK(upsilon(zero_symbol(LieType::C, n)) == UpsilonSeq{2 * n});
    CHECK(upsilon(make_b(1, {2, 2}, {{2, 2}})) == UpsilonSeq{3, 0, 2});
    CHECK(upsilon(make_b(1, {}, {})) == UpsilonSeq{1, 0, 1});
}

TEST_CASE("upsilon recursion matches the unipotent formula up to rank 8") {
    for (LieType t : {LieType::B, LieType::C})
        for (int n = 0; n <= 8; ++n) {
            const int dimv = t == LieType::B ? 2 * n + 1 : 2 * n;
            for (const auto& s : enumerate(t, n)) {
                const UpsilonSeq f = upsilon(s);
                CHECK(f == upsilon_from_unipotent(psi_star(s)));
                CHECK(upsilon_dim(f) == dimv);
                if (!f.empty() && dimv > 0) CHECK(f.back() > 0);
                if (!is_zero_symbol(s)) {
                    const RecursionStep st = t == LieType::C ? recursion_step_C(s) : recursion_step_B(s);
                    CHECK(st.N + 1 == psi_star(s).parts.largest());
                }
            }
        }
}

TEST_CASE("MS pieces") {
    const auto c2 = ms_pieces(LieType::C, 2);
    CHECK(c2.size() == 4);
    for (const auto& b : c2) CHECK(b.size() == 1);
    const auto b3 = ms_pieces(LieType::B, 3);
    CHECK(b3.size() == 7);
    const auto orbits = enumerate(LieType::B, 3);
    const auto big = std::find_if(b3.begin(), b3.end(), [](const auto& b) { return b.size() > 1; });
    REQUIRE(big != b3.end());
    REQUIRE(big->size() == 2);
    std::vector<OrbitSymbol> members{orbits[(*big)[0]], orbits[(*big)[1]]};
    std::sort(members.begin(), members.end());
    std::vector<OrbitSymbol> want{make_b(1, {2, 2}, {{2, 2}}), make_b(0, {3, 3}, {{3, 3}})};
    std::sort(want.begin(), want.end());
    CHECK(members == want);
    CHECK(std::count_if(b3.begin(), b3.end(), [](const auto& b) { return b.size() == 1; }) == 6);
    const auto b1 = ms_pieces(LieType::B, 1);
    CHECK(b1.size() == 2);
}

TEST_CASE("piece reports") {
    const PieceReport c3 = piece_report(LieType::C, 3);
    CHECK(c3.agree);
    CHECK(c3.by_psi.size() == 8);
    const PieceReport b3 = piece_report(LieType::B, 3);
    CHECK(b3.agree);
    CHECK(b3.by_psi.size() == 7);
    const PieceReport c0 = piece_report(LieType::C, 0);
    CHECK(c0.agree);
    CHECK(c0.by_psi.size() == 1);
}

TEST_CASE("three notions of piece coincide") {
    for (LieType t : {LieType::B, LieType::C})
        for (int n = 0; n <= 8; ++n) {
            const PieceReport r = piece_report(t, n, 6);
            CHECK(r.agree);
            CHECK(r.witnesses.empty());
            CHECK(r.by_psi == r.by_upsilon);
            if (n <= 6) {
                CHECK(r.ms_computed);
                CHECK(r.by_ms == r.by_psi);
            }
        }
}

TEST_CASE("MS pieces are hull fibers within the image") {
    for (LieType t : {LieType::B, LieType::C})
        for (int n = 0; n <= 6; ++n) {
            const auto orbits = enumerate(t, n);
            for (const auto& block : ms_pieces(t, n)) {
                const Bipartition top = phi(gamma_star(orbits[block.front()]), t);
                std::vector<std::size_t> fiber;
                for (std::size_t i = 0; i < orbits.size(); ++i)
                    if (phi(gamma_star(orbits[i]), t) == top) fiber.push_back(i);
                auto sorted = block;
                std::sort(sorted.begin(), sorted.end());
                CHECK(sorted == fiber);
            }
        }
}

TEST_CASE("canonical form of a partition of indices") {
    CHECK(canonical({{3, 1}, {0, 2}}) == PiecePartition{{0, 2}, {1, 3}});
}
