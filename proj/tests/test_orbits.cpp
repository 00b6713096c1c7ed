#include <doctest.h>

#include <algorithm>

#include "nilorb/errors.hpp"
#include "nilorb/orbits.hpp"
#include "nilorb/springer.hpp"

using namespace nilorb;

namespace {

OrbitSymbol ones_c(int n) { return make_c(Partition(std::vector<int>(static_cast<std::size_t>(2 * n), 1)), {{1, 0}}); }

std::size_t index_of(const std::vector<OrbitSymbol>& v, const OrbitSymbol& s) {
    return static_cast<std::size_t>(std::find(v.begin(), v.end(), s) - v.begin());
}

}  // namespace

TEST_CASE("validate") {
    CHECK(validate(make_c({2, 2}, {{2, 2}}), LieType::C));
    CHECK_FALSE(validate(make_c({2, 1, 1}, {{2, 1}, {1, 1}}), LieType::C));
    CHECK_FALSE(validate(make_c({2, 1, 1}, {{2, 2}, {1, 0}}), LieType::C));
    CHECK_FALSE(validate(make_b(0, {3, 3}, {{3, 2}}), LieType::B));
    CHECK(validate(make_b(1, {2, 2}, {{2, 2}}), LieType::B));
    CHECK_FALSE(validate(make_c({2, 2}, {{2, 2}}), LieType::B));
}

TEST_CASE("enumerate small ranks") {
    const auto c1 = enumerate(LieType::C, 1);
    REQUIRE(c1.size() == 2);
    CHECK(std::count(c1.begin(), c1.end(), make_c({1, 1}, {{1, 0}})) == 1);
    CHECK(std::count(c1.begin(), c1.end(), make_c({1, 1}, {{1, 1}})) == 1);
    CHECK(enumerate(LieType::C, 0).size() == 1);
    CHECK(enumerate(LieType::B, 3).size() == 8);
}

TEST_CASE("orbit counts per rank") {
    // Frozen from the exhaustive F_2 classification for n <= 3 and the enumerator beyond.
    const std::size_t c[] = {1, 2, 4, 8, 15};
    const std::size_t b[] = {1, 2, 4, 8, 15};
    const std::size_t d[] = {1, 1, 4, 5, 12};
    for (int n = 0; n <= 4; ++n) {
        CHECK(enumerate(LieType::C, n).size() == c[n]);
        CHECK(enumerate(LieType::B, n).size() == b[n]);
        CHECK(enumerate(LieType::D, n).size() == d[n]);
    }
}

TEST_CASE("type D degenerate symbols come in labelled pairs") {
    const auto d2 = enumerate(LieType::D, 2);
    CHECK(std::count(d2.begin(), d2.end(), make_d({2, 2}, {{2, 1}}, DLabel::I)) == 1);
    CHECK(std::count(d2.begin(), d2.end(), make_d({2, 2}, {{2, 1}}, DLabel::II)) == 1);
    for (const auto& s : d2) CHECK(validate(s, LieType::D));
}

TEST_CASE("enumeration is duplicate free and valid") {
    for (LieType t : {LieType::B, LieType::C, LieType::D})
        for (int n = 0; n <= 6; ++n) {
            auto v = enumerate(t, n);
            for (const auto& s : v) CHECK(validate(s, t));
            std::sort(v.begin(), v.end());
            CHECK(std::adjacent_find(v.begin(), v.end()) == v.end());
        }
}

TEST_CASE("centralizer dimension") {
    CHECK(centralizer_dim(make_c({2, 2}, {{2, 2}})) == 2);
    for (int n = 1; n <= 5; ++n) {
        CHECK(centralizer_dim(ones_c(n)) == n * (2 * n + 1));
        CHECK(centralizer_dim(make_b(n, {}, {})) == n);
    }
    CHECK_THROWS_AS(centralizer_dim(make_d({2, 2}, {{2, 2}})), Error);
}

TEST_CASE("springer fiber dimension") {
    CHECK(springer_fiber_dim(make_c({2, 2}, {{2, 2}})) == 0);
    for (int n = 1; n <= 5; ++n) CHECK(springer_fiber_dim(ones_c(n)) == n * n);
    CHECK(springer_fiber_dim(make_b(3, {}, {})) == 0);
}

TEST_CASE("centralizer_dim - n is even and nonnegative up to rank 8") {
    for (LieType t : {LieType::B, LieType::C})
        for (int n = 0; n <= 8; ++n)
            for (const auto& s : enumerate(t, n)) {
                const int d = centralizer_dim(s) - n;
                CHECK(d >= 0);
                CHECK(d % 2 == 0);
            }
}

TEST_CASE("chi extension") {
    CHECK(chi_extend(make_c({2, 2}, {{2, 2}}), 1) == 1);
    CHECK(chi_extend(make_c({2, 2}, {{2, 2}}), 0) == 0);
    CHECK(chi_extend(make_b(1, {2, 2}, {{2, 1}}), 3) == 2);
    // Agrees with the stored values on parts.
    for (const auto& s : enumerate(LieType::C, 5))
        for (const auto& [part, v] : s.chi) CHECK(chi_extend(s, part) == v);
}

TEST_CASE("closure order basics") {
    CHECK(closure_leq(make_c({1, 1}, {{1, 0}}), make_c({1, 1}, {{1, 1}})));
    CHECK_FALSE(closure_leq(make_c({1, 1}, {{1, 1}}), make_c({1, 1}, {{1, 0}})));
    const auto a = make_d({2, 2}, {{2, 1}}, DLabel::I), b = make_d({2, 2}, {{2, 1}}, DLabel::II);
    CHECK(closure_leq(a, a));
    CHECK_FALSE(closure_leq(a, b));
    CHECK_FALSE(closure_leq(b, a));
    CHECK_THROWS_AS(closure_leq(ones_c(1), ones_c(2)), Error);
}

TEST_CASE("hasse diagrams") {
    const auto c1 = enumerate(LieType::C, 1);
    const auto h1 = hasse(LieType::C, 1);
    REQUIRE(h1.size() == 1);
    CHECK(c1[h1[0].first] == ones_c(1));
    CHECK(hasse(LieType::C, 0).empty());
    // B2 is a chain of four orbits.
    const auto h = hasse(LieType::B, 2);
    CHECK(enumerate(LieType::B, 2).size() == 4);
    CHECK(h.size() == 3);
    std::vector<int> indeg(4), outdeg(4);
    for (const auto& [lo, hi] : h) {
        ++outdeg[lo];
        ++indeg[hi];
    }
    CHECK(std::count(indeg.begin(), indeg.end(), 0) == 1);
    CHECK(std::count(outdeg.begin(), outdeg.end(), 0) == 1);
}

TEST_CASE("closure order is a partial order with the zero orbit as unique minimum") {
    for (LieType t : {LieType::B, LieType::C, LieType::D})
        for (int n = 0; n <= 5; ++n) {
            const auto v = enumerate(t, n);
            const std::size_t z = index_of(v, zero_symbol(t, n));
            REQUIRE(z < v.size());
            for (std::size_t i = 0; i < v.size(); ++i) {
                CHECK(closure_leq(v[z], v[i]));
                for (std::size_t j = 0; j < v.size(); ++j) {
                    if (!closure_leq(v[i], v[j])) continue;
                    if (i != j) CHECK_FALSE(closure_leq(v[j], v[i]));
                    for (std::size_t k = 0; k < v.size(); ++k)
                        if (closure_leq(v[j], v[k])) CHECK(closure_leq(v[i], v[k]));
                }
            }
        }
}

TEST_CASE("zero symbols") {
    CHECK(zero_symbol(LieType::C, 3) == ones_c(3));
    CHECK(zero_symbol(LieType::B, 2) == make_b(0, {1, 1, 1, 1}, {{1, 1}}));
    CHECK(is_zero_symbol(zero_symbol(LieType::D, 2)));
    CHECK_FALSE(is_zero_symbol(make_b(1, {}, {})));
}

TEST_CASE("induction") {
    const OrbitSymbol lifted = induce_orbit(zero_symbol(LieType::C, 0), 2);
    CHECK(lifted == make_c({2, 2}, {{2, 1}}));
    for (const auto& s : enumerate(LieType::C, 2)) CHECK(gamma_star(induce_orbit(s, 1)) == j_induct(gamma_star(s), 1));
    const OrbitSymbol b = induce_orbit(zero_symbol(LieType::B, 1), 1);
    CHECK(gamma_star(b) == j_induct(gamma_star(zero_symbol(LieType::B, 1)), 1));
    CHECK(b.n == 2);
}

TEST_CASE("induction is an order embedding") {
    for (LieType t : {LieType::B, LieType::C})
        for (int n = 0; n <= 4; ++n)
            for (int k = 1; k <= 3; ++k) {
                const auto v = enumerate(t, n);
                for (const auto& a : v)
                    for (const auto& b : v) CHECK(closure_leq(a, b) == closure_leq(induce_orbit(a, k), induce_orbit(b, k)));
            }
}

TEST_CASE("symbol strings are stable") {
    CHECK(make_c({2, 2}, {{2, 2}}).str() == "C2:(2,2){2:2}");
    CHECK(make_b(1, {}, {}).str() == "B1:1;(0){}");
    CHECK(make_d({2, 2}, {{2, 1}}, DLabel::II).str() == "D2:(2,2){2:1}II");
}
