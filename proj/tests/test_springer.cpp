#include <doctest.h>

#include <set>

#include "nilorb/errors.hpp"
#include "nilorb/springer.hpp"

using namespace nilorb;

namespace {
Bipartition bp(std::initializer_list<int> mu, std::initializer_list<int> nu) { return {Partition(mu), Partition(nu)}; }
Partition ones(int k) { return Partition(std::vector<int>(static_cast<std::size_t>(k), 1)); }
}  // namespace

TEST_CASE("gamma star") {
    CHECK(gamma_star(make_c({2, 2}, {{2, 1}})) == bp({1}, {1}));
    for (int n = 1; n <= 5; ++n) {
        CHECK(gamma_star(zero_symbol(LieType::C, n)) == Bipartition{Partition{}, ones(n)});
        CHECK(gamma_star(zero_symbol(LieType::B, n)) == Bipartition{Partition{}, ones(n)});
        CHECK(gamma_star(make_b(n, {}, {})) == Bipartition{Partition{n}, Partition{}});
    }
}

TEST_CASE("gamma star inverse") {
    CHECK(gamma_star_inv(bp({1}, {1}), LieType::C, 2) == make_c({2, 2}, {{2, 1}}));
    CHECK(gamma_star_inv(bp({}, {}), LieType::C, 0) == zero_symbol(LieType::C, 0));
    const OrbitSymbol s = gamma_star_inv(bp({1}, {2}), LieType::B, 3);
    CHECK(gamma_star(s) == bp({1}, {2}));
    CHECK(gamma_star(gamma_star_inv(bp({1}, {2}), LieType::C, 3)) == bp({1}, {2}));
    CHECK_THROWS_AS(gamma_star_inv(bp({1}, {3}), LieType::C, 4), Error);
    CHECK_THROWS_AS(gamma_star_inv(bp({1}, {1}), LieType::C, 3), Error);
}

TEST_CASE("gamma star is a bijection onto its image family") {
    for (LieType t : {LieType::B, LieType::C})
        for (int n = 0; n <= 8; ++n) {
            std::set<Bipartition> img;
            for (const auto& s : enumerate(t, n)) {
                const Bipartition b = gamma_star(s);
                CHECK(b.total() == n);
                CHECK(family_member(b, image_family(t)));
                CHECK(gamma_star_inv(b, t, n) == s);
                img.insert(b);
            }
            std::size_t fam = 0;
            for (const auto& b : bipartitions_of(n)) fam += family_member(b, image_family(t));
            CHECK(img.size() == enumerate(t, n).size());
            CHECK(img.size() == fam);
        }
}

TEST_CASE("hull map") {
    CHECK(phi(bp({1}, {4}), LieType::B) == bp({2}, {3}));
    CHECK(phi(bp({3, 3}, {}), LieType::C) == bp({3, 2}, {1}));
    for (int n = 0; n <= 6; ++n)
        for (const auto& t : bipartitions_of(n))
            if (family_member(t, Family::XC1)) CHECK(phi(t, LieType::C) == t);
    CHECK_THROWS_AS(phi(bp({1}, {3}), LieType::C), Error);
}

TEST_CASE("hull map is idempotent, increasing and least") {
    for (LieType t : {LieType::B, LieType::C})
        for (int n = 0; n <= 8; ++n) {
            std::vector<Bipartition> x1;
            for (const auto& b : bipartitions_of(n))
                if (family_member(b, hull_family(t))) x1.push_back(b);
            for (const auto& b : bipartitions_of(n)) {
                if (!family_member(b, image_family(t))) continue;
                const Bipartition p = phi(b, t);
                CHECK(family_member(p, hull_family(t)));
                CHECK(phi(p, t) == p);
                CHECK(bipartition_leq(b, p));
                if (n <= 6)
                    for (const auto& h : x1)
                        if (bipartition_leq(b, h)) CHECK(bipartition_leq(p, h));
            }
        }
}

TEST_CASE("psi star") {
    CHECK(psi_star(make_c({2, 2}, {{2, 2}})).parts == Partition{4});
    CHECK(psi_star(make_b(1, {2, 2}, {{2, 2}})).parts == Partition{3, 3, 1});
    CHECK(psi_star(make_b(0, {3, 3}, {{3, 3}})).parts == Partition{3, 3, 1});
    CHECK(psi_star(make_b(2, {}, {})).parts == Partition{5});
}

TEST_CASE("unipotent classes from hull bipartitions") {
    CHECK(unip_from_symbol(bp({2}, {}), LieType::C).parts == Partition{4});
    for (int n = 0; n <= 5; ++n)
        CHECK(unip_from_symbol(Bipartition{Partition{}, ones(n)}, LieType::C).parts == ones(2 * n));
    CHECK_THROWS_AS(unip_from_symbol(bp({3, 3}, {}), LieType::C), Error);
}

TEST_CASE("unipotent enumeration") {
    const auto c2 = enumerate_unipotent(LieType::C, 2);
    const std::set<Partition> want{{4}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    std::set<Partition> got;
    for (const auto& u : c2) got.insert(u.parts);
    CHECK(got == want);
    CHECK(c2.size() == 4);
    const auto b1 = enumerate_unipotent(LieType::B, 1);
    REQUIRE(b1.size() == 2);
    CHECK(enumerate_unipotent(LieType::C, 0).size() == 1);
    CHECK(enumerate_unipotent(LieType::C, 0).front().parts.empty());
}

TEST_CASE("unip_from_symbol is a bijection from the hull family") {
    for (LieType t : {LieType::B, LieType::C})
        for (int n = 0; n <= 8; ++n) {
            std::set<UnipotentClass> img;
            std::size_t count = 0;
            for (const auto& b : bipartitions_of(n)) {
                if (!family_member(b, hull_family(t))) continue;
                ++count;
                const UnipotentClass u = unip_from_symbol(b, t);
                CHECK(valid_unipotent(u));
                CHECK(u.rank() == n);
                img.insert(u);
            }
            const auto all = enumerate_unipotent(t, n);
            CHECK(img.size() == count);
            CHECK(img == std::set<UnipotentClass>(all.begin(), all.end()));
        }
}

TEST_CASE("psi star factors through the hull map") {
    for (LieType t : {LieType::B, LieType::C})
        for (int n = 0; n <= 8; ++n)
            for (const auto& s : enumerate(t, n)) CHECK(unip_from_symbol(phi(gamma_star(s), t), t) == psi_star(s));
}
